#include "majassign/experiments.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "majassign/errors.hpp"
#include "majassign/majority.hpp"
#include "majassign/parallel.hpp"
#include "majassign/pareto.hpp"
#include "majassign/rules.hpp"
#include "majassign/topcycle.hpp"

namespace majassign {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  u128 r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > ~std::uint64_t{0}) throw LimitExceeded("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

// Nondecreasing tuples of length `len` over [low, orders).
std::uint64_t tuples_from(std::uint64_t orders, std::uint64_t low, std::uint64_t len) {
  if (len == 0) return 1;
  return binomial(orders - low + len - 1, len);
}

constexpr int kMaxCanonicalN = 6;

}  // namespace

std::uint64_t canonical_count(int n) {
  if (n < 1 || n > kMaxCanonicalN) throw LimitExceeded("canonical enumeration supports n in 1.." + std::to_string(kMaxCanonicalN));
  return tuples_from(factorial_u64(n), 0, static_cast<std::uint64_t>(n - 1));
}

CanonicalCursor::CanonicalCursor(int n, std::uint64_t position)
    : n_(n), orders_(0), total_(canonical_count(n)), tuple_(static_cast<std::size_t>(n - 1), 0) {
  orders_ = factorial_u64(n);
  seek(position);
}

void CanonicalCursor::seek(std::uint64_t position) {
  position_ = position;
  if (position >= total_) return;
  const std::size_t m = tuple_.size();
  std::uint64_t rest = position;
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t len = m - i - 1;
    std::uint64_t v = prev;
    while (true) {
      const std::uint64_t c = tuples_from(orders_, v, len);
      if (rest < c) break;
      rest -= c;
      ++v;
    }
    tuple_[i] = static_cast<std::uint32_t>(v);
    prev = v;
  }
}

void CanonicalCursor::next() {
  ++position_;
  if (done()) return;
  std::size_t j = tuple_.size() - 1;
  while (tuple_[j] == orders_ - 1) --j;
  ++tuple_[j];
  for (std::size_t i = j + 1; i < tuple_.size(); ++i) tuple_[i] = tuple_[j];
}

Profile CanonicalCursor::profile() const {
  if (done()) throw std::out_of_range("canonical cursor is exhausted");
  const Universe& u = Universe::of(n_);
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<std::size_t>(n_));
  orders.emplace_back(std::vector<HouseId>(u.houses(0).begin(), u.houses(0).end()));
  for (auto t : tuple_) orders.emplace_back(std::vector<HouseId>(u.houses(t).begin(), u.houses(t).end()));
  return Profile(std::move(orders));
}

std::uint64_t CanonicalCursor::position_of(const Profile& canonical) {
  const int n = canonical.size();
  const std::uint64_t total = canonical_count(n);
  const Universe& u = Universe::of(n);
  const std::uint64_t orders = u.size();
  auto index = [&](AgentId x) {
    const auto r = canonical.order(x).ranking();
    return static_cast<std::uint64_t>(u.index_of(Assignment(std::vector<HouseId>(r.begin(), r.end()))));
  };
  if (index(0) != 0) throw std::invalid_argument("profile is not canonical: agent 1 must rank houses in index order");
  std::uint64_t pos = 0;
  std::uint64_t prev = 0;
  const auto m = static_cast<std::uint64_t>(n - 1);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t t = index(static_cast<AgentId>(i + 1));
    if (t < prev) throw std::invalid_argument("profile is not canonical: agents 2..n must be sorted");
    for (std::uint64_t v = prev; v < t; ++v) pos += tuples_from(orders, v, m - i - 1);
    prev = t;
  }
  if (pos >= total) throw std::logic_error("canonical position out of range");
  return pos;
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

std::mt19937_64 sample_generator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Profile sample_impartial(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::mt19937_64 gen = sample_generator(seed, index);
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<HouseId> r(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) r[h] = h;
    for (int i = n - 1; i > 0; --i) {
      std::swap(r[i], r[uniform_below(gen, static_cast<std::uint64_t>(i) + 1)]);
    }
    orders.emplace_back(std::move(r));
  }
  return Profile(std::move(orders));
}

std::vector<Profile> sample_impartial(int n, std::uint64_t seed, std::uint64_t first, std::uint64_t count) {
  std::vector<Profile> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample_impartial(n, seed, first + i));
  return out;
}

std::uint64_t sample_canonical_position(int n, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 gen = sample_generator(seed, index);
  return uniform_below(gen, canonical_count(n));
}

Census::Census(int n_) : n(n_) {
  if (n_ <= 0) return;
  const std::size_t slots = static_cast<std::size_t>(factorial_u64(n_)) + 1;
  po_sizes.assign(slots, 0);
  for (auto& h : uc_sizes) h.assign(slots, 0);
}

void Census::merge(const Census& o) {
  if (o.n != n) throw std::invalid_argument("census merge of different n");
  profiles += o.profiles;
  for (std::size_t i = 0; i < po_sizes.size(); ++i) po_sizes[i] += o.po_sizes[i];
  for (std::size_t v = 0; v < 3; ++v) {
    for (std::size_t i = 0; i < uc_sizes[v].size(); ++i) uc_sizes[v][i] += o.uc_sizes[v][i];
    for (std::size_t b = 0; b < 101; ++b) uc_po_bucket[v][b] += o.uc_po_bucket[v][b];
  }
  fact_checked += o.fact_checked;
  fact_violations.insert(fact_violations.end(), o.fact_violations.begin(), o.fact_violations.end());
  for (const auto& [size, count] : o.tc_sizes) tc_sizes[size] += count;
  for (const auto& [size, ids] : o.tc_examples) {
    auto& mine = tc_examples[size];
    mine.insert(mine.end(), ids.begin(), ids.end());
  }
  rank_maximal_covered += o.rank_maximal_covered;
}

namespace {

class Evaluator {
 public:
  Evaluator(int n, const CensusOptions& options) : options_(options), census_(n) {}

  void operator()(const Profile& p, std::uint64_t id) {
    matrix_.rebuild(p, kMaxBruteLimit, 1);
    ++census_.profiles;
    if (options_.uncovered) uncovered(p);
    if (options_.fact) fact(p, id);
    if (options_.tc_sizes) {
      const std::uint64_t size = tc_brute(matrix_).count();
      ++census_.tc_sizes[size];
      auto& ex = census_.tc_examples[size];
      if (ex.size() < options_.examples_per_size) ex.push_back(id);
    }
  }

  Census& census() { return census_; }

 private:
  void uncovered(const Profile& p) {
    const std::size_t po = pareto_optimal_set(p, kMaxBruteLimit).size();
    ++census_.po_sizes[po];
    for (auto v : kCoveringVariants) {
      std::size_t uc = 0;
      for (std::size_t i = 0; i < matrix_.size(); ++i) uc += is_uncovered(matrix_, v, static_cast<AssignmentIndex>(i));
      const auto vi = static_cast<std::size_t>(v);
      ++census_.uc_sizes[vi][uc];
      ++census_.uc_po_bucket[vi][(100 * uc + po - 1) / po];
    }
    for (auto i : rank_maximal_set(p, kMaxBruteLimit)) {
      if (!is_uncovered(matrix_, CoveringVariant::McKelvey, i)) {
        ++census_.rank_maximal_covered;
        break;
      }
    }
  }

  void fact(const Profile& p, std::uint64_t id) {
    const std::size_t size = matrix_.size();
    const Bitset tc = tc_brute(matrix_);
    const Bitset bc = bc_brute(matrix_);
    const auto po_idx = pareto_optimal_set(p, kMaxBruteLimit);
    const auto pp_idx = pareto_pessimal_set(p, kMaxBruteLimit);
    const Bitset po = Bitset::from_indices(size, po_idx);
    const Bitset pp = Bitset::from_indices(size, pp_idx);
    const std::size_t tcs = tc.count();
    const std::size_t bcs = bc.count();
    ++census_.fact_checked;
    auto violate = [&](int item) { census_.fact_violations.push_back({id, item}); };
    if ((tcs > 2) != pp.complement().subset_of(tc)) violate(1);
    if ((bcs > 2) != po.complement().subset_of(bc)) violate(2);
    if ((tcs > 2 && bcs > 2) != tc.all()) violate(3);
    if (tcs <= 2 && bcs <= 2) {
      Bitset rest = tc;
      rest |= bc;
      rest = rest.complement();
      if (!rest.none()) {
        const AssignmentIndex m = rest.indices().front();
        Bitset scc = forward_reach(matrix_, m);
        scc &= backward_reach(matrix_, m);
        if (!rest.subset_of(scc)) violate(4);
      }
    }
  }

  CensusOptions options_;
  Census census_;
  MajorityMatrix matrix_;
};

template <class Body>
Census run(int n, std::uint64_t first, std::uint64_t last, const CensusOptions& options, Body&& body) {
  const int jobs = options.jobs <= 0 ? default_jobs() : options.jobs;
  const std::uint64_t span = last > first ? last - first : 0;
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(span, 1)));
  std::vector<Census> parts;
  for (int w = 0; w < workers; ++w) parts.emplace_back(n);
  parallel_ranges(first, last, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    Evaluator eval(n, options);
    body(eval, lo, hi);
    parts[w] = std::move(eval.census());
  });
  Census total(n);
  for (const auto& part : parts) total.merge(part);
  for (auto& [size, ids] : total.tc_examples) {
    if (ids.size() > options.examples_per_size) ids.resize(options.examples_per_size);
  }
  return total;
}

}  // namespace

Census census_canonical(int n, std::uint64_t first, std::uint64_t last, const CensusOptions& options) {
  last = std::min(last, canonical_count(n));
  return run(n, first, last, options, [n](Evaluator& eval, std::uint64_t lo, std::uint64_t hi) {
    CanonicalCursor cursor(n, lo);
    for (std::uint64_t i = lo; i < hi; ++i, cursor.next()) eval(cursor.profile(), i);
  });
}

Census census_canonical_sample(int n, std::uint64_t seed, std::uint64_t count, const CensusOptions& options) {
  canonical_count(n);
  return run(n, 0, count, options, [n, seed](Evaluator& eval, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t pos = sample_canonical_position(n, seed, i);
      eval(CanonicalCursor(n, pos).profile(), pos);
    }
  });
}

Census census_impartial(int n, std::uint64_t seed, std::uint64_t count, const CensusOptions& options) {
  return run(n, 0, count, options, [n, seed](Evaluator& eval, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) eval(sample_impartial(n, seed, i), i);
  });
}

std::string format_percentage(std::uint64_t count, std::uint64_t total) {
  if (total == 0) return "0.0000000";
  const u128 scaled = (u128{count} * 2000000000u + total) / (u128{total} * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / 10000000u);
  const auto frac = static_cast<std::uint64_t>(scaled % 10000000u);
  std::ostringstream s;
  s << whole << '.' << std::setw(7) << std::setfill('0') << frac;
  return s.str();
}

std::vector<HistogramRow> histogram_rows(const std::vector<std::uint64_t>& sizes, std::uint64_t total) {
  std::vector<HistogramRow> rows;
  for (std::size_t c = 1; c < sizes.size(); ++c) rows.push_back({c, sizes[c], format_percentage(sizes[c], total)});
  return rows;
}

std::vector<CdfRow> cdf_rows(const std::array<std::uint64_t, 101>& buckets, std::uint64_t total) {
  std::vector<CdfRow> rows;
  std::uint64_t acc = 0;
  for (int b = 0; b <= 100; ++b) {
    acc += buckets[static_cast<std::size_t>(b)];
    rows.push_back({b, format_percentage(acc, total)});
  }
  return rows;
}

void write_histogram_csv(std::ostream& out, const std::vector<HistogramRow>& rows) {
  out << "cardinality,count,percentage\n";
  for (const auto& r : rows) out << r.cardinality << ',' << r.count << ',' << r.percentage << '\n';
}

void write_cdf_csv(std::ostream& out, const std::vector<CdfRow>& rows) {
  out << "ratio_percent,cumulative_percentage\n";
  for (const auto& r : rows) out << r.ratio_percent << ',' << r.cumulative_percentage << '\n';
}

std::uint64_t modal_cardinality(const std::vector<std::uint64_t>& sizes) {
  std::uint64_t best = 0;
  std::uint64_t best_count = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > best_count) {
      best = c;
      best_count = sizes[c];
    }
  }
  return best;
}

}  // namespace majassign
