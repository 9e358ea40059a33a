#include "majassign/topcycle.hpp"

#include <algorithm>
#include <stdexcept>

#include "majassign/pareto.hpp"
#include "majassign/simd/kernels.hpp"

namespace majassign {

namespace {

// Grows `reach` to its closure under row(a) for every member a.
// `done` marks members whose rows were already merged.
template <class Expand>
void close(Bitset& reach, Bitset& done, Expand&& expand) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t w = 0; w < reach.word_count(); ++w) {
      std::uint64_t pending = reach.data()[w] & ~done.data()[w];
      while (pending) {
        const auto a = static_cast<AssignmentIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(pending)));
        pending &= pending - 1;
        done.set(a);
        if (expand(a)) again = true;
      }
    }
  }
}

struct Reacher {
  const MajorityMatrix& m;
  const simd::KernelTable& k = simd::kernels();
  std::vector<std::uint64_t> ones;

  explicit Reacher(const MajorityMatrix& matrix) : m(matrix), ones(matrix.words(), ~std::uint64_t{0}) {}

  void forward(Bitset& reach, Bitset& done) {
    close(reach, done, [&](AssignmentIndex a) {
      return k.or_andnot_into(reach.data(), m.weak_row(a), done.data(), m.words());
    });
  }
  // Predecessors of a under weak domination are exactly the non-successors under strict.
  void backward(Bitset& reach, Bitset& done) {
    close(reach, done, [&](AssignmentIndex a) {
      const bool changed = k.or_andnot_into(reach.data(), ones.data(), m.strict_row(a), m.words());
      trim(reach);
      return changed;
    });
  }
  void trim(Bitset& b) const {
    if (m.size() % 64) b.data()[m.words() - 1] &= (std::uint64_t{1} << (m.size() % 64)) - 1;
  }
};

AssignmentIndex first_missing(const Bitset& b) {
  for (std::size_t w = 0; w < b.word_count(); ++w) {
    const std::uint64_t miss = ~b.data()[w];
    if (miss) {
      const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(miss));
      if (i < b.size()) return static_cast<AssignmentIndex>(i);
      break;
    }
  }
  return static_cast<AssignmentIndex>(b.size());
}

// Walks to a vertex of the top (forward = true) or bottom component of the
// weak relation. The relation is complete, so a vertex outside reach(v)
// strictly beats v and reaches a strict superset of reach(v).
AssignmentIndex extreme_vertex(const MajorityMatrix& m, bool forward) {
  Reacher r(m);
  Bitset reach(m.size());
  Bitset done(m.size());
  AssignmentIndex v = 0;
  reach.set(v);
  while (true) {
    if (forward) {
      r.forward(reach, done);
    } else {
      r.backward(reach, done);
    }
    const AssignmentIndex u = first_missing(reach);
    if (u == m.size()) return v;
    v = u;
    reach.set(v);
  }
}

}  // namespace

Bitset forward_reach(const MajorityMatrix& m, AssignmentIndex from) {
  Reacher r(m);
  Bitset reach(m.size());
  Bitset done(m.size());
  reach.set(from);
  r.forward(reach, done);
  return reach;
}

Bitset backward_reach(const MajorityMatrix& m, AssignmentIndex to) {
  Reacher r(m);
  Bitset reach(m.size());
  Bitset done(m.size());
  reach.set(to);
  r.backward(reach, done);
  return reach;
}

Bitset tc_brute(const MajorityMatrix& m) { return backward_reach(m, extreme_vertex(m, true)); }

Bitset bc_brute(const MajorityMatrix& m) { return forward_reach(m, extreme_vertex(m, false)); }

std::string TcDescription::case_name() const {
  static const char* names[] = {"I", "II", "III", "IV", "V", "explicit"};
  return names[shape.index()];
}

namespace {

struct SharedChoice {
  bool distinct = false;     // all choices at this end are distinct
  bool one_pair = false;     // exactly one pair collides, everything else distinct
  AgentId x = -1, y = -1;    // the colliding pair when one_pair
};

// Looks at position `pos` (0 = top, n-1 = bottom) of every agent's order.
SharedChoice shared_choice(const Profile& p, int pos) {
  const int n = p.size();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  SharedChoice s;
  int collisions = 0;
  for (AgentId a = 0; a < n; ++a) {
    const HouseId h = p.order(a).at(pos);
    if (owner[h] < 0) {
      owner[h] = a;
    } else {
      ++collisions;
      s.x = owner[h];
      s.y = a;
    }
  }
  s.distinct = collisions == 0;
  s.one_pair = collisions == 1;
  return s;
}

// Pair condition at the top end (top = true) or the bottom end of the orders.
// Yields the two agents when two agents share the first choice at that
// end, every other agent has a different one, the pair shares the next choice,
// and nobody holds that next choice at the end.
bool pair_condition(const Profile& p, bool top, AgentId& x, AgentId& y) {
  const int n = p.size();
  if (n < 2) return false;
  const int end = top ? 0 : n - 1;
  const int next = top ? 1 : n - 2;
  const SharedChoice s = shared_choice(p, end);
  if (!s.one_pair) return false;
  const HouseId q = p.order(s.x).at(next);
  if (p.order(s.y).at(next) != q) return false;
  for (AgentId a = 0; a < n; ++a) {
    if (p.order(a).at(end) == q) return false;
  }
  x = s.x;
  y = s.y;
  return true;
}

Assignment pick_ends(const Profile& p, bool top) {
  std::vector<HouseId> out(static_cast<std::size_t>(p.size()));
  for (AgentId a = 0; a < p.size(); ++a) out[a] = top ? p.order(a).top() : p.order(a).bottom();
  return Assignment(std::move(out));
}

// All agents get their top house, except `loser`, who gets its second choice.
Assignment tops_but(const Profile& p, AgentId loser) {
  std::vector<HouseId> out(static_cast<std::size_t>(p.size()));
  for (AgentId a = 0; a < p.size(); ++a) out[a] = a == loser ? p.order(a).at(1) : p.order(a).top();
  return Assignment(std::move(out));
}

// Serial antidictatorship: everyone else first, then `early`, then `last`.
Assignment antidictatorship_with_last(const Profile& p, AgentId early, AgentId last) {
  std::vector<AgentId> order;
  for (AgentId a = 0; a < p.size(); ++a) {
    if (a != early && a != last) order.push_back(a);
  }
  order.push_back(early);
  order.push_back(last);
  return serial_antidictatorship(p, PriorityOrder(std::move(order)));
}

}  // namespace

TcDescription tc_characterize(const Profile& profile) {
  const int n = profile.size();
  TcDescription d;
  d.n = n;
  if (n <= 4) {
    const MajorityMatrix m(profile, n);
    auto members = tc_brute(m).indices();
    d.size = members.size();
    d.shape = tc::Explicit{std::move(members)};
    return d;
  }
  const boost::multiprecision::cpp_int all = factorial(n);
  AgentId x = -1;
  AgentId y = -1;
  if (shared_choice(profile, 0).distinct) {
    d.shape = tc::CaseI{pick_ends(profile, true)};
    d.size = 1;
  } else if (pair_condition(profile, true, x, y)) {
    d.shape = tc::CaseII{tops_but(profile, x), tops_but(profile, y)};
    d.size = 2;
  } else if (pair_condition(profile, false, x, y)) {
    d.shape = tc::CaseIII{antidictatorship_with_last(profile, y, x), antidictatorship_with_last(profile, x, y)};
    d.size = all - 2;
  } else if (shared_choice(profile, n - 1).distinct) {
    d.shape = tc::CaseIV{pick_ends(profile, false)};
    d.size = all - 1;
  } else {
    d.shape = tc::CaseV{};
    d.size = all;
  }
  return d;
}

TcDescription bc_characterize(const Profile& profile) { return tc_characterize(invert_profile(profile)); }

bool tc_contains(const TcDescription& desc, const Assignment& mu) {
  if (mu.size() != desc.n) throw std::invalid_argument("assignment size does not match description");
  struct Visitor {
    const Assignment& mu;
    bool operator()(const tc::CaseI& c) const { return mu == c.winner; }
    bool operator()(const tc::CaseII& c) const { return mu == c.first || mu == c.second; }
    bool operator()(const tc::CaseIII& c) const { return mu != c.first && mu != c.second; }
    bool operator()(const tc::CaseIV& c) const { return mu != c.excluded; }
    bool operator()(const tc::CaseV&) const { return true; }
    bool operator()(const tc::Explicit& c) const {
      const AssignmentIndex i = Universe::of(mu.size()).index_of(mu);
      return std::binary_search(c.members.begin(), c.members.end(), i);
    }
  };
  return std::visit(Visitor{mu}, desc.shape);
}

Bitset tc_members(const TcDescription& desc, int brute_limit) {
  require_dense(desc.n, brute_limit);
  const Universe& u = Universe::of(desc.n);
  Bitset out(u.size());
  struct Visitor {
    const Universe& u;
    Bitset& out;
    void operator()(const tc::CaseI& c) const { out.set(u.index_of(c.winner)); }
    void operator()(const tc::CaseII& c) const {
      out.set(u.index_of(c.first));
      out.set(u.index_of(c.second));
    }
    void operator()(const tc::CaseIII& c) const {
      out.set_all();
      out.reset(u.index_of(c.first));
      out.reset(u.index_of(c.second));
    }
    void operator()(const tc::CaseIV& c) const {
      out.set_all();
      out.reset(u.index_of(c.excluded));
    }
    void operator()(const tc::CaseV&) const { out.set_all(); }
    void operator()(const tc::Explicit& c) const {
      for (auto i : c.members) out.set(i);
    }
  };
  std::visit(Visitor{u, out}, desc.shape);
  return out;
}

}  // namespace majassign
