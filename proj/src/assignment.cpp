#include "majassign/assignment.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "majassign/errors.hpp"

namespace majassign {

namespace {

bool is_permutation_of_range(std::span<const int> values) {
  std::vector<char> seen(values.size(), 0);
  for (int v : values) {
    if (v < 0 || static_cast<std::size_t>(v) >= values.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace

void require_dense(int n, int brute_limit) {
  if (brute_limit > kMaxBruteLimit) {
    throw LimitExceeded("brute limit " + std::to_string(brute_limit) + " exceeds the hard cap " +
                        std::to_string(kMaxBruteLimit));
  }
  if (n > brute_limit) {
    throw LimitExceeded("universe of n=" + std::to_string(n) + " exceeds brute limit " +
                        std::to_string(brute_limit));
  }
  if (n < 1) {
    throw std::invalid_argument("n must be positive");
  }
}

Assignment::Assignment(std::vector<HouseId> to_house) : to_house_(std::move(to_house)) {
  if (to_house_.empty() || !is_permutation_of_range(to_house_)) {
    throw std::invalid_argument("assignment is not a bijection");
  }
}

Assignment Assignment::identity(int n) {
  std::vector<HouseId> houses(static_cast<std::size_t>(n));
  std::iota(houses.begin(), houses.end(), 0);
  return Assignment(std::move(houses));
}

AgentId Assignment::holder(HouseId h) const {
  auto it = std::find(to_house_.begin(), to_house_.end(), h);
  if (it == to_house_.end()) {
    throw std::out_of_range("house not assigned");
  }
  return static_cast<AgentId>(it - to_house_.begin());
}

Assignment Assignment::with_swap(AgentId x, AgentId y) const {
  Assignment copy = *this;
  std::swap(copy.to_house_.at(static_cast<std::size_t>(x)), copy.to_house_.at(static_cast<std::size_t>(y)));
  return copy;
}

PriorityOrder::PriorityOrder(std::vector<AgentId> agents) : agents_(std::move(agents)) {
  if (agents_.empty() || !is_permutation_of_range(agents_)) {
    throw std::invalid_argument("priority order is not a permutation of the agents");
  }
}

PriorityOrder PriorityOrder::identity(int n) {
  std::vector<AgentId> agents(static_cast<std::size_t>(n));
  std::iota(agents.begin(), agents.end(), 0);
  return PriorityOrder(std::move(agents));
}

boost::multiprecision::cpp_int factorial(int n) {
  boost::multiprecision::cpp_int f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > kMaxIndexableN) {
    throw std::out_of_range("factorial_u64 needs 0 <= n <= 20");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

AssignmentIndexer::AssignmentIndexer(int n) : n_(n), size_(factorial_u64(n)), radix_(static_cast<std::size_t>(n)) {
  if (n < 1) {
    throw std::invalid_argument("indexer needs n >= 1");
  }
  for (int i = 0; i < n; ++i) {
    radix_[static_cast<std::size_t>(i)] = factorial_u64(n - 1 - i);
  }
}

std::uint64_t AssignmentIndexer::index(const Assignment& a) const { return index(a.houses()); }

std::uint64_t AssignmentIndexer::index(std::span<const HouseId> houses) const {
  if (static_cast<int>(houses.size()) != n_) {
    throw std::invalid_argument("assignment size does not match indexer");
  }
  std::uint64_t idx = 0;
  std::uint32_t used = 0;  // n <= 20 fits
  for (int i = 0; i < n_; ++i) {
    const auto h = static_cast<std::uint32_t>(houses[static_cast<std::size_t>(i)]);
    const std::uint32_t smaller_unused = static_cast<std::uint32_t>(std::popcount(~used & ((1u << h) - 1u)));
    idx += smaller_unused * radix_[static_cast<std::size_t>(i)];
    used |= 1u << h;
  }
  return idx;
}

Assignment AssignmentIndexer::unindex(std::uint64_t index) const {
  if (index >= size_) {
    throw std::out_of_range("assignment index out of range");
  }
  std::vector<HouseId> remaining(static_cast<std::size_t>(n_));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<HouseId> houses;
  houses.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t digit = index / radix_[static_cast<std::size_t>(i)];
    index %= radix_[static_cast<std::size_t>(i)];
    houses.push_back(remaining[digit]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Assignment(std::move(houses));
}

Universe::Universe(int n) : n_(n), size_(factorial_u64(n)), indexer_(n) {
  table_.reserve(size_ * static_cast<std::size_t>(n));
  std::vector<HouseId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    table_.insert(table_.end(), perm.begin(), perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
}

const Universe& Universe::of(int n) {
  if (n < 1 || n > kMaxBruteLimit) {
    throw LimitExceeded("no materialized universe for n=" + std::to_string(n));
  }
  static std::array<std::unique_ptr<Universe>, kMaxBruteLimit + 1> cache;
  static std::array<std::once_flag, kMaxBruteLimit + 1> flags;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] { cache[slot].reset(new Universe(n)); });
  return *cache[slot];
}

Assignment Universe::at(AssignmentIndex i) const {
  auto h = houses(i);
  return Assignment(std::vector<HouseId>(h.begin(), h.end()));
}

AssignmentIndex Universe::index_of(const Assignment& a) const {
  return static_cast<AssignmentIndex>(indexer_.index(a));
}

}  // namespace majassign
