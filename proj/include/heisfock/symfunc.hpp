#pragma once

#include "heisfock/partition.hpp"
#include "heisfock/rational.hpp"
#include "heisfock/schar.hpp"

namespace heisfock {

enum class Basis { Schur, PowerSum };

const char* to_string(Basis basis) noexcept;

/// Finite linear combination of Schur functions s_lambda or power sums p_lambda
/// with exact rational coefficients. Zero coefficients are never stored.
class SymFunc {
 public:
  explicit SymFunc(Basis basis = Basis::Schur) : basis_(basis) {}

  static SymFunc one(Basis basis = Basis::Schur);
  static SymFunc schur(const Partition& lambda, const Rational& coeff = 1);
  static SymFunc power_sum(const Partition& rho, const Rational& coeff = 1);

  Basis basis() const noexcept { return basis_; }
  const PartitionMap<Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  bool has_integer_coefficients() const;

  void add_term(const Partition& lambda, const Rational& coeff);

  /// Throws BasisMismatch when the bases differ.
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& scalar);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Basis basis_;
  PartitionMap<Rational> terms_;
};

/// Product of two Schur-basis functions via Littlewood-Richardson coefficients.
/// Throws BasisMismatch unless both are in the Schur basis.
SymFunc schur_multiply(const SymFunc& f, const SymFunc& g);

/// p_m = sum_{j=0}^{m-1} (-1)^j s_{(m-j,1^j)}, derived from the Murnaghan-Nakayama rule.
SymFunc power_sum_to_schur(int m);

/// s_tau = sum_mu chi_tau(mu) / z_mu p_mu.
SymFunc schur_to_power_sums(const Partition& tau);

SymFunc to_power_sum_basis(const SymFunc& f);
SymFunc to_schur_basis(const SymFunc& f);

/// Schur-basis f times p_k, by adding border strips.
SymFunc multiply_by_power_sum(const SymFunc& f, int k);

/// Schur expansion of s_mu * p_rho (integer coefficients). Memoized.
const PartitionMap<long long>& schur_times_power_sums(const Partition& mu, const Partition& rho);

/// f[p_b]: substitute p_m -> p_{mb}. Result in the Schur basis.
SymFunc plethysm_pb(const SymFunc& f, int b);

/// Frobenius characteristic S_lambda -> s_lambda.
SymFunc characteristic(const VirtualRep& rep);

/// The involution omega: s_lambda -> s_{lambda^t} (p_k -> (-1)^{k-1} p_k).
SymFunc omega(const SymFunc& f);

/// p_rho with every part multiplied by b.
Partition scale_parts(const Partition& rho, int b);

}  // namespace heisfock
