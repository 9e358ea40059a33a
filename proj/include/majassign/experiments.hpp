#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "majassign/covering.hpp"
#include "majassign/profile.hpp"

namespace majassign {

/// Number of canonical profiles: multisets of n-1 orders out of n!, C(n! + n - 2, n - 1).
std::uint64_t canonical_count(int n);

/// Walks canonical profiles in a fixed order: agent 1 ranks houses in index
/// order, agents 2..n hold a nondecreasing tuple of universe indices.
class CanonicalCursor {
 public:
  /// Positions the cursor at `position` (0-based); n must be in 1..kMaxBruteLimit.
  CanonicalCursor(int n, std::uint64_t position = 0);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t position() const noexcept { return position_; }
  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
  [[nodiscard]] bool done() const noexcept { return position_ >= total_; }
  /// Universe indices of the orders of agents 2..n.
  [[nodiscard]] const std::vector<std::uint32_t>& tuple() const noexcept { return tuple_; }

  [[nodiscard]] Profile profile() const;
  void next();
  void seek(std::uint64_t position);

  /// Position of a canonical profile (which must be canonical).
  static std::uint64_t position_of(const Profile& canonical);

 private:
  int n_;
  std::uint64_t orders_;
  std::uint64_t total_;
  std::uint64_t position_ = 0;
  std::vector<std::uint32_t> tuple_;
};

/// Uniform integer in [0, bound) by rejection from a 64-bit generator; bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

/// Generator for sample `index` of stream `seed`: std::mt19937_64 seeded with
/// std::seed_seq{seed lo, seed hi, index lo, index hi} (32-bit halves). Every
/// sample owns its stream, so results do not depend on the number of workers.
std::mt19937_64 sample_generator(std::uint64_t seed, std::uint64_t index);

/// Impartial culture: each agent's order uniform and independent (Fisher-Yates).
Profile sample_impartial(int n, std::uint64_t seed, std::uint64_t index);
std::vector<Profile> sample_impartial(int n, std::uint64_t seed, std::uint64_t first, std::uint64_t count);

/// Canonical profile drawn uniformly from the canonical list.
std::uint64_t sample_canonical_position(int n, std::uint64_t seed, std::uint64_t index);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CensusOptions {
  bool uncovered = true;   // |UC| per variant, |PO|, UC/PO ratio buckets
  bool fact = false;       // four-item top/bottom cycle check
  bool tc_sizes = false;   // |TC| tally with example positions/indices
  std::size_t examples_per_size = 1000;
  int jobs = 1;
};

struct FactViolation {
  std::uint64_t id;  // canonical position or sample index
  int item;          // 1..4
};

/// Tallies over a stream of profiles. Histograms are indexed by cardinality.
struct Census {
  int n = 0;
  std::uint64_t profiles = 0;
  std::vector<std::uint64_t> po_sizes;
  std::array<std::vector<std::uint64_t>, 3> uc_sizes;       // by CoveringVariant order
  std::array<std::array<std::uint64_t, 101>, 3> uc_po_bucket{};  // ceil(100 |UC| / |PO|)
  std::uint64_t fact_checked = 0;
  std::vector<FactViolation> fact_violations;
  std::map<std::uint64_t, std::uint64_t> tc_sizes;
  std::map<std::uint64_t, std::vector<std::uint64_t>> tc_examples;
  /// Profiles where some rank-maximal assignment is McKelvey-covered (uncovered mode).
  std::uint64_t rank_maximal_covered = 0;

  explicit Census(int n = 0);
  void merge(const Census& other);

  [[nodiscard]] const std::vector<std::uint64_t>& uc(CoveringVariant v) const {
    return uc_sizes[static_cast<std::size_t>(v)];
  }
};

/// Canonical profiles at positions [first, last).
Census census_canonical(int n, std::uint64_t first, std::uint64_t last, const CensusOptions& options);
/// `count` canonical profiles drawn uniformly with replacement.
Census census_canonical_sample(int n, std::uint64_t seed, std::uint64_t count, const CensusOptions& options);
/// `count` impartial-culture profiles.
Census census_impartial(int n, std::uint64_t seed, std::uint64_t count, const CensusOptions& options);

/// count / total as a percentage rounded half-up to 7 decimals, e.g. "3.6544721".
std::string format_percentage(std::uint64_t count, std::uint64_t total);

struct HistogramRow {
  std::uint64_t cardinality;
  std::uint64_t count;
  std::string percentage;
};

struct CdfRow {
  int ratio_percent;
  std::string cumulative_percentage;
};

/// One row per cardinality 1..n!.
std::vector<HistogramRow> histogram_rows(const std::vector<std::uint64_t>& sizes, std::uint64_t total);
/// One row per bucket 0..100: share of profiles whose |UC|/|PO| is at most that percentage.
std::vector<CdfRow> cdf_rows(const std::array<std::uint64_t, 101>& buckets, std::uint64_t total);

void write_histogram_csv(std::ostream& out, const std::vector<HistogramRow>& rows);
void write_cdf_csv(std::ostream& out, const std::vector<CdfRow>& rows);

/// Modal cardinality of a histogram (smallest on ties); 0 for an empty one.
std::uint64_t modal_cardinality(const std::vector<std::uint64_t>& sizes);

}  // namespace majassign
