#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace majassign {

using AgentId = int;
using HouseId = int;

/// Position of an assignment inside a materialized universe (n <= kMaxBruteLimit).
using AssignmentIndex = std::uint32_t;

/// Dense n!-sized structures are built only up to this n unless overridden.
inline constexpr int kDefaultBruteLimit = 7;
/// Hard ceiling for the brute limit (8! = 40320 vertices, ~200 MB per bit relation).
inline constexpr int kMaxBruteLimit = 8;
/// Largest n whose universe size fits into 64 bits.
inline constexpr int kMaxIndexableN = 20;

/// Throws LimitExceeded unless n <= brute_limit <= kMaxBruteLimit.
void require_dense(int n, int brute_limit);

/// Bijection from agents to houses: agent x receives houses()[x].
class Assignment {
 public:
  Assignment() = default;
  /// Throws std::invalid_argument unless `to_house` is a permutation of 0..n-1.
  explicit Assignment(std::vector<HouseId> to_house);

  static Assignment identity(int n);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(to_house_.size()); }
  HouseId operator[](AgentId x) const { return to_house_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] std::span<const HouseId> houses() const noexcept { return to_house_; }

  /// Agent holding house h.
  [[nodiscard]] AgentId holder(HouseId h) const;
  /// Copy with the houses of agents x and y exchanged.
  [[nodiscard]] Assignment with_swap(AgentId x, AgentId y) const;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<HouseId> to_house_;
};

/// Order in which agents act in serial (anti)dictatorships.
class PriorityOrder {
 public:
  explicit PriorityOrder(std::vector<AgentId> agents);
  static PriorityOrder identity(int n);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(agents_.size()); }
  AgentId operator[](int position) const { return agents_[static_cast<std::size_t>(position)]; }
  [[nodiscard]] std::span<const AgentId> agents() const noexcept { return agents_; }

 private:
  std::vector<AgentId> agents_;
};

boost::multiprecision::cpp_int factorial(int n);
/// n! for n <= kMaxIndexableN.
std::uint64_t factorial_u64(int n);

/// Lehmer-code ranking of assignments: index 0 is the identity and the
/// index is strictly increasing in the lexicographic order of houses().
class AssignmentIndexer {
 public:
  explicit AssignmentIndexer(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
  [[nodiscard]] std::uint64_t index(const Assignment& a) const;
  [[nodiscard]] std::uint64_t index(std::span<const HouseId> houses) const;
  [[nodiscard]] Assignment unindex(std::uint64_t index) const;

 private:
  int n_;
  std::uint64_t size_;
  std::vector<std::uint64_t> radix_;
};

/// Every assignment for a small n, materialized in index order. Shared and immutable.
class Universe {
 public:
  /// Cached instance; n must be in 1..kMaxBruteLimit.
  static const Universe& of(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  HouseId house(AssignmentIndex i, AgentId x) const {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x)];
  }
  [[nodiscard]] std::span<const HouseId> houses(AssignmentIndex i) const {
    return {table_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  [[nodiscard]] Assignment at(AssignmentIndex i) const;
  [[nodiscard]] AssignmentIndex index_of(const Assignment& a) const;
  [[nodiscard]] const AssignmentIndexer& indexer() const noexcept { return indexer_; }

 private:
  explicit Universe(int n);

  int n_;
  std::size_t size_;
  AssignmentIndexer indexer_;
  std::vector<HouseId> table_;
};

}  // namespace majassign
