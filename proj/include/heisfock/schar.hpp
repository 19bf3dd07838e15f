#pragma once

#include <vector>

#include "heisfock/partition.hpp"
#include "heisfock/rational.hpp"

namespace heisfock {

/// Conjugacy class of S_n, named by cycle type.
struct ClassLabel {
  Partition cycle_type;
  int n() const noexcept { return cycle_type.size(); }
};

/// Virtual representation of S_n: integer multiplicities of the irreducibles
/// S_lambda, lambda a partition of n.
class VirtualRep {
 public:
  explicit VirtualRep(int n = 0);

  static VirtualRep irreducible(const Partition& lambda);
  static VirtualRep trivial(int n);
  static VirtualRep sign(int n);

  int degree() const noexcept { return n_; }
  const PartitionMap<long long>& terms() const noexcept { return terms_; }
  long long multiplicity(const Partition& lambda) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Throws SizeMismatch if |lambda| != degree().
  void add(const Partition& lambda, long long mult);

  /// Dimension sum_lambda mult * dim(S_lambda).
  Integer dimension() const;

  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  VirtualRep& operator*=(long long scalar);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(long long s, VirtualRep a) { return a *= s; }
  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

 private:
  int n_;
  PartitionMap<long long> terms_;
};

/// Character table of S_n. Rows are irreducibles, columns conjugacy classes,
/// both in descending lexicographic order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreps;
  std::vector<Partition> classes;
  std::vector<std::vector<long long>> values;

  std::size_t index_of_class(const Partition& mu) const;
  std::size_t index_of_irrep(const Partition& lambda) const;
};

/// chi_lambda(mu) by the Murnaghan-Nakayama rule. Throws SizeMismatch.
long long character_value(const Partition& lambda, const ClassLabel& mu);

Integer factorial(int n);

/// z_mu = prod_k k^{m_k} m_k!.
Integer z_value(const Partition& mu);

/// n! / z_mu.
Integer class_size(const ClassLabel& mu);

/// Memoized per n; safe to call concurrently.
const CharacterTable& character_table(int n);

/// Installs a precomputed table (e.g. loaded from disk). The table is checked
/// against a freshly computed one for its first column only; a mismatch throws.
void seed_character_table(CharacterTable table);

/// Character of a virtual representation, indexed like character_table(n).classes.
std::vector<long long> character_of(const VirtualRep& rep);

/// Decomposes a class function (values indexed like character_table(n).classes).
/// Throws InvalidInput if the result is not an integral virtual representation.
VirtualRep decompose_class_function(int n, const std::vector<Integer>& values);

/// Ind_{S_a x S_b}^{S_{a+b}} (alpha boxtimes beta).
VirtualRep induction_product(const VirtualRep& alpha, const VirtualRep& beta);

/// Internal tensor product S_sigma (x) U. Throws SizeMismatch.
VirtualRep kronecker_product(const Partition& sigma, const VirtualRep& rep);

/// Lambda^i of the permutation representation C^d. Throws RangeError.
VirtualRep exterior_power_perm(int d, int i);

}  // namespace heisfock
