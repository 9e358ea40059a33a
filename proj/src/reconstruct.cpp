#include "majassign/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "majassign/errors.hpp"

namespace majassign {

MajorityOracle::MajorityOracle(int n, Answer answer) : n_(n), answer_(std::move(answer)) {
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
}

MajorityOracle MajorityOracle::of(const Profile& profile) {
  return MajorityOracle(profile.size(), [profile](const Assignment& a, const Assignment& b) {
    return compare(profile, a, b).verdict;
  });
}

Verdict MajorityOracle::operator()(const Assignment& mu, const Assignment& lambda) {
  if (mu.size() != n_ || lambda.size() != n_) throw std::invalid_argument("oracle query of wrong size");
  if (mu == lambda) return Verdict::Tie;
  const Verdict v = answer_(mu, lambda);
  log_.push_back({mu, lambda, v});
  return v;
}

std::uint64_t reconstruct_query_bound(int n) {
  const auto m = static_cast<std::uint64_t>(n);
  return m * m * m * m;
}

Assignment fill_assignment(int n, std::span<const std::pair<AgentId, HouseId>> fixed) {
  std::vector<HouseId> to(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& [x, h] : fixed) {
    if (x < 0 || x >= n || h < 0 || h >= n || to[x] != -1 || used[h]) {
      throw std::invalid_argument("fill_assignment: conflicting fixed pairs");
    }
    to[x] = h;
    used[h] = true;
  }
  HouseId next = 0;
  for (AgentId x = 0; x < n; ++x) {
    if (to[x] != -1) continue;
    while (used[next]) ++next;
    to[x] = next;
    used[next] = true;
  }
  return Assignment(std::move(to));
}

Verdict pair_query(MajorityOracle& oracle, AgentId x, AgentId y, HouseId p, HouseId q, const Assignment& filler) {
  if (x == y || p == q) throw std::invalid_argument("pair_query needs distinct agents and houses");
  if (filler[x] != p || filler[y] != q) throw std::invalid_argument("pair_query: filler must give p to x and q to y");
  return oracle(filler, filler.with_swap(x, y));
}

Verdict pair_query(MajorityOracle& oracle, AgentId x, AgentId y, HouseId p, HouseId q) {
  const std::pair<AgentId, HouseId> fixed[] = {{x, p}, {y, q}};
  return pair_query(oracle, x, y, p, q, fill_assignment(oracle.n(), fixed));
}

PairColumn infer_pair_column(MajorityOracle& oracle, HouseId p, HouseId q) {
  const int n = oracle.n();
  PairColumn col;
  col.prefers_first.assign(static_cast<std::size_t>(n), 0);
  for (AgentId x = 0; x + 1 < n; ++x) {
    const Verdict v = pair_query(oracle, x, x + 1, p, q);
    if (v == Verdict::Tie) continue;
    // Agents 0..x tied pairwise, so they all share x's direction.
    const bool x_prefers_p = v == Verdict::FirstWins;
    for (AgentId a = 0; a <= x; ++a) col.prefers_first[a] = x_prefers_p;
    col.prefers_first[x + 1] = !x_prefers_p;
    for (AgentId z = x + 2; z < n; ++z) {
      const Verdict w = pair_query(oracle, x, z, p, q);
      if (w == Verdict::Tie) {
        col.prefers_first[z] = x_prefers_p;
      } else if ((w == Verdict::FirstWins) == x_prefers_p) {
        col.prefers_first[z] = !x_prefers_p;
      } else {
        throw Unresolvable("oracle answers contradict each other on one pair of houses");
      }
    }
    col.all_agree = false;
    return col;
  }
  return col;
}

PairwiseKnowledge::PairwiseKnowledge(int n)
    : n_(n), table_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

void PairwiseKnowledge::set(HouseId p, HouseId q, std::span<const std::uint8_t> prefers_p) {
  for (AgentId x = 0; x < n_; ++x) {
    const std::int8_t v = prefers_p[x] ? 1 : -1;
    table_[(static_cast<std::size_t>(p) * n_ + q) * n_ + x] = v;
    table_[(static_cast<std::size_t>(q) * n_ + p) * n_ + x] = static_cast<std::int8_t>(-v);
  }
}

void resolve_within_component(MajorityOracle& oracle, PairwiseKnowledge& k, HouseId p, HouseId q, HouseId r) {
  if (k.known(p, r)) return;
  if (!k.known(p, q) || !k.known(q, r)) throw std::invalid_argument("resolve_within_component: missing columns");
  const int n = k.n();
  // The (p, r) column revealed nothing, so all agents agree on it; one agent suffices.
  std::optional<bool> p_over_r;
  for (AgentId x = 0; x < n && !p_over_r; ++x) {
    const bool pq = k.prefers(x, p, q);
    if (pq == k.prefers(x, q, r)) p_over_r = pq;
  }
  if (!p_over_r) {
    // Everyone ranks q first or last among the three. Two of agents 0, 1, 2
    // share that type and cancel out; the third one decides the comparison.
    if (n < 3) throw Unresolvable("three houses in one component with fewer than three agents");
    AgentId ids[3] = {0, 1, 2};
    auto q_first = [&](AgentId a) { return k.prefers(a, q, p); };
    if (q_first(ids[0]) != q_first(ids[1])) {
      std::swap(ids[1], ids[2]);
      if (q_first(ids[0]) != q_first(ids[1])) std::swap(ids[0], ids[2]);
    }
    const AgentId x = ids[0], y = ids[1], z = ids[2];
    const std::pair<AgentId, HouseId> mu_fixed[] = {{x, q}, {y, p}, {z, r}};
    const Assignment mu = fill_assignment(n, mu_fixed);
    std::vector<HouseId> to(mu.houses().begin(), mu.houses().end());
    to[x] = r;
    to[y] = q;
    to[z] = p;
    const Verdict v = oracle(mu, Assignment(std::move(to)));
    if (v == Verdict::Tie) throw Unresolvable("three-agent query tied where a strict answer is forced");
    p_over_r = v == Verdict::SecondWins;
  }
  std::vector<std::uint8_t> col(static_cast<std::size_t>(n), *p_over_r ? 1 : 0);
  k.set(p, r, col);
}

Orientation cycle_type(MajorityOracle& oracle, HouseId p, HouseId q, HouseId r, AgentId x, AgentId y, AgentId z) {
  const std::pair<AgentId, HouseId> mu_fixed[] = {{x, p}, {y, q}, {z, r}};
  const Assignment mu = fill_assignment(oracle.n(), mu_fixed);
  std::vector<HouseId> to(mu.houses().begin(), mu.houses().end());
  to[x] = q;
  to[y] = r;
  to[z] = p;
  // With p > q > r (or a cyclic shift) two of the three agents prefer mu.
  const Verdict v = oracle(mu, Assignment(std::move(to)));
  if (v == Verdict::Tie) throw Unresolvable("cycle-type query tied");
  return v == Verdict::FirstWins ? Orientation::Forward : Orientation::Backward;
}

Decomposition finest_decomposition(const Profile& profile) {
  const int n = profile.size();
  Decomposition d;
  std::vector<int> reach(static_cast<std::size_t>(n), 0);
  std::vector<HouseId> block;
  for (int i = 0; i < n; ++i) {
    const HouseId h = profile.order(0).at(i);
    block.push_back(h);
    bool cut = true;
    for (AgentId x = 0; x < n; ++x) {
      reach[x] = std::max(reach[x], profile.order(x).rank_of(h));
      cut = cut && reach[x] == i + 1;
    }
    if (cut) {
      std::sort(block.begin(), block.end());
      d.push_back(std::move(block));
      block.clear();
    }
  }
  return d;
}

Profile rotate_profile(const Profile& profile, const Decomposition& d, int shift) {
  const int n = profile.size();
  const int k = static_cast<int>(d.size());
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (int b = 0; b < k; ++b) {
    for (HouseId h : d[b]) block_of[h] = b;
  }
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (AgentId x = 0; x < n; ++x) {
    std::vector<HouseId> ranking;
    ranking.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < k; ++j) {
      const int b = (j + shift) % k;
      for (HouseId h : profile.order(x).ranking()) {
        if (block_of[h] == b) ranking.push_back(h);
      }
    }
    orders.emplace_back(std::move(ranking));
  }
  return Profile(std::move(orders), std::vector<std::string>(profile.labels().begin(), profile.labels().end()));
}

namespace {

bool same_orders(const Profile& a, const Profile& b) {
  if (a.size() != b.size()) return false;
  for (AgentId x = 0; x < a.size(); ++x) {
    if (a.order(x) != b.order(x)) return false;
  }
  return true;
}

bool replays(const Profile& p, const std::vector<MajorityOracle::Query>& log) {
  return std::all_of(log.begin(), log.end(), [&](const MajorityOracle::Query& q) {
    return compare(p, q.first, q.second).verdict == q.verdict;
  });
}

RotationClass finish(Profile base, const std::vector<MajorityOracle::Query>& log) {
  RotationClass c{std::move(base), {}, {}};
  if (!replays(c.base, log)) throw Unresolvable("no profile reproduces the oracle answers");
  c.decomposition = finest_decomposition(c.base);
  for (int r = 0; r < static_cast<int>(c.decomposition.size()); ++r) {
    if (replays(rotate_profile(c.base, c.decomposition, r), log)) c.shifts.push_back(r);
  }
  return c;
}

// Tiny universes: try every profile against every comparison.
RotationClass reconstruct_exhaustive(MajorityOracle& oracle) {
  const int n = oracle.n();
  const Universe& u = Universe::of(n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      oracle(u.at(static_cast<AssignmentIndex>(i)), u.at(static_cast<AssignmentIndex>(j)));
    }
  }
  std::vector<Profile> fits;
  const std::size_t per_agent = u.size();
  std::size_t total = 1;
  for (int x = 0; x < n; ++x) total *= per_agent;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PreferenceOrder> orders;
    std::size_t c = code;
    for (int x = 0; x < n; ++x) {
      const auto h = u.houses(static_cast<AssignmentIndex>(c % per_agent));
      orders.emplace_back(std::vector<HouseId>(h.begin(), h.end()));
      c /= per_agent;
    }
    Profile p(std::move(orders));
    if (replays(p, oracle.log())) fits.push_back(std::move(p));
  }
  if (fits.empty()) throw Unresolvable("no profile reproduces the oracle answers");
  RotationClass c = finish(fits.front(), oracle.log());
  if (c.size() != fits.size()) throw Unresolvable("matching profiles are not rotations of one another");
  return c;
}

}  // namespace

std::vector<Profile> RotationClass::members() const {
  std::vector<Profile> out;
  out.reserve(shifts.size());
  for (int r : shifts) out.push_back(rotate_profile(base, decomposition, r));
  return out;
}

bool RotationClass::contains(const Profile& p) const {
  for (int r : shifts) {
    if (same_orders(rotate_profile(base, decomposition, r), p)) return true;
  }
  return false;
}

Components component_decomposition(MajorityOracle& oracle) {
  const int n = oracle.n();
  Components c{{}, PairwiseKnowledge(n)};
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (HouseId p = 0; p < n; ++p) {
    for (HouseId q = p + 1; q < n; ++q) {
      const PairColumn col = infer_pair_column(oracle, p, q);
      if (col.all_agree) continue;
      c.knowledge.set(p, q, col.prefers_first);
      parent[find(q)] = find(p);
    }
  }
  std::vector<int> block_index(static_cast<std::size_t>(n), -1);
  for (HouseId h = 0; h < n; ++h) {
    const int root = find(h);
    if (block_index[root] < 0) {
      block_index[root] = static_cast<int>(c.blocks.size());
      c.blocks.emplace_back();
    }
    c.blocks[block_index[root]].push_back(h);
  }
  // Propagate along paths until every pair inside a block is known.
  for (const auto& block : c.blocks) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (HouseId p : block) {
        for (HouseId q : block) {
          if (q == p || !c.knowledge.known(p, q)) continue;
          for (HouseId r : block) {
            if (r == p || r == q || c.knowledge.known(p, r) || !c.knowledge.known(q, r)) continue;
            resolve_within_component(oracle, c.knowledge, p, q, r);
            changed = true;
          }
        }
      }
    }
  }
  return c;
}

RotationClass reconstruct(MajorityOracle& oracle) {
  const int n = oracle.n();
  if (n <= 2) return reconstruct_exhaustive(oracle);

  Components comp = component_decomposition(oracle);
  const auto& k = comp.knowledge;
  const int blocks = static_cast<int>(comp.blocks.size());

  // Block order: the rotation that starts with the block of house 0. Block X
  // precedes block Y iff (block 0, X, Y) is cyclically forward.
  std::vector<int> order{0};
  for (int b = 1; b < blocks; ++b) {
    auto pos = order.end();
    if (blocks >= 3) {
      for (auto it = order.begin() + 1; it != order.end(); ++it) {
        const Orientation o = cycle_type(oracle, comp.blocks[0][0], comp.blocks[b][0], comp.blocks[*it][0]);
        if (o == Orientation::Forward) {
          pos = it;
          break;
        }
      }
    }
    order.insert(pos, b);
  }

  std::vector<PreferenceOrder> orders;
  for (AgentId x = 0; x < n; ++x) {
    std::vector<HouseId> ranking;
    for (int b : order) {
      std::vector<HouseId> block = comp.blocks[b];
      std::vector<int> wins(static_cast<std::size_t>(n), 0);
      for (HouseId p : block) {
        for (HouseId q : block) wins[p] += p != q && k.prefers(x, p, q);
      }
      std::stable_sort(block.begin(), block.end(), [&](HouseId p, HouseId q) { return wins[p] > wins[q]; });
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          if (!k.prefers(x, block[i], block[j])) throw Unresolvable("inferred preferences are not transitive");
        }
      }
      ranking.insert(ranking.end(), block.begin(), block.end());
    }
    orders.emplace_back(std::move(ranking));
  }
  return finish(Profile(std::move(orders)), oracle.log());
}

bool rotation_equivalent(const Profile& a, const Profile& b) {
  if (a.size() != b.size()) return false;
  const Decomposition d = finest_decomposition(a);
  for (int r = 0; r < static_cast<int>(d.size()); ++r) {
    if (same_orders(rotate_profile(a, d, r), b)) return true;
  }
  return false;
}

MajorityOutcome infer_margin(const RotationClass& c, const Assignment& mu, const Assignment& lambda) {
  return compare(c.base, mu, lambda);
}

}  // namespace majassign
