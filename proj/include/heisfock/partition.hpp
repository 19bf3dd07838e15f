#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heisfock {

/// Integer partition stored canonically: strictly positive, weakly decreasing
/// parts, no trailing zeros. Zero padding exists only virtually via `part()`.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless `parts` is already canonical.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Strips trailing zeros, then throws NotAPartition if the sequence still
  /// fails to be a weakly decreasing sequence of positive integers.
  static Partition from_padded(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }

  /// i-th part (0-based), reading zero beyond the length.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Multiplicity of the part value k.
  int multiplicity(int k) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered map keyed by partitions in the canonical output order
/// (lexicographic on part sequences, descending).
template <class T>
using PartitionMap = std::map<Partition, T, std::greater<>>;

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Sum of j - i over the cells (i, j) of the Young diagram.
long long content_sum(const Partition& eta);

/// sum over i >= 2 of (i - 1) * eta_i.
long long d_stat(const Partition& eta);

Partition transpose(const Partition& eta);

/// Part-wise mu + b * tau with virtual zero padding.
Partition partwise_add(const Partition& mu, int b, const Partition& tau);

/// True iff no column height of eta repeats b or more times.
bool is_coprime(const Partition& eta, int b);

/// The unique (mu, tau) with eta = mu + b * tau and mu coprime to b.
std::pair<Partition, Partition> coprime_decompose(const Partition& eta, int b);

/// Partitions contained in eta (as Young diagrams), including the empty one.
bool contains(const Partition& outer, const Partition& inner);

}  // namespace heisfock
