#pragma once

#include <functional>
#include <map>

#include "heisfock/laurent.hpp"
#include "heisfock/partition.hpp"
#include "heisfock/schar.hpp"
#include "heisfock/symfunc.hpp"

namespace heisfock {

/// Element of the completed Fock space in the Verma basis: partition labels
/// (of any size) with Laurent coefficients in v. The partition size is the
/// grading; there is no separate n field.
class FockVector {
 public:
  FockVector() = default;

  static FockVector vacuum();
  static FockVector basis(const Partition& lambda, const LaurentScalar& coeff = LaurentScalar(1L));
  /// Embeds a Schur-basis symmetric function with constant coefficients.
  static FockVector from_symfunc(const SymFunc& f);

  const PartitionMap<LaurentScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentScalar coefficient(const Partition& lambda) const;

  void add_term(const Partition& lambda, const LaurentScalar& coeff);
  void add_scaled(const Partition& lambda, const LaurentScalar& coeff, const Rational& scale);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector scaled(const LaurentScalar& scalar) const;
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// Every coefficient multiplied by v^shift.
  FockVector shifted(const Rational& shift) const;

 private:
  PartitionMap<LaurentScalar> terms_;
};

/// Multiplication by sum_rho C_rho(v) p_rho on the Fock space. The positive
/// Heisenberg half is commutative, so every operator built here has this form.
class HeisenbergOperator {
 public:
  HeisenbergOperator() = default;

  static HeisenbergOperator identity();
  static HeisenbergOperator power_sum(const Partition& rho, const LaurentScalar& coeff = LaurentScalar(1L));

  /// Keys are power-sum indices (already scaled by b).
  const std::map<Partition, LaurentScalar>& series() const noexcept { return series_; }
  bool is_zero() const noexcept { return series_.empty(); }

  void add_term(const Partition& rho, const LaurentScalar& coeff);

  /// Applies the operator term by term. With jobs > 1 the input terms are split
  /// across threads; the merge order is fixed, so the result is identical.
  FockVector apply(const FockVector& x, unsigned jobs = 1) const;
  FockVector operator()(const FockVector& x) const { return apply(x); }

  HeisenbergOperator& operator+=(const HeisenbergOperator& other);
  HeisenbergOperator& operator-=(const HeisenbergOperator& other);
  HeisenbergOperator scaled(const LaurentScalar& scalar) const;
  friend HeisenbergOperator operator+(HeisenbergOperator a, const HeisenbergOperator& b) { return a += b; }
  friend HeisenbergOperator operator-(HeisenbergOperator a, const HeisenbergOperator& b) { return a -= b; }
  /// Composition (= product of the multiplying functions).
  friend HeisenbergOperator operator*(const HeisenbergOperator& a, const HeisenbergOperator& b);
  friend bool operator==(const HeisenbergOperator&, const HeisenbergOperator&) = default;

  /// The multiplying symmetric function, when every coefficient is constant.
  /// Throws InvalidInput if some coefficient involves v.
  SymFunc as_symfunc() const;

 private:
  std::map<Partition, LaurentScalar> series_;
};

bool is_prime(long long p) noexcept;

/// b_i: multiplication by p_{ib}.
HeisenbergOperator b_op_operator(int i, int b);
FockVector b_op(int i, int b, const FockVector& x, unsigned jobs = 1);

/// b_tau: multiplication by s_tau[p_b].
HeisenbergOperator b_tau_operator(const Partition& tau, int b);
FockVector b_tau(const Partition& tau, int b, const FockVector& x, unsigned jobs = 1);

/// b_U = sum_sigma mult_U(sigma) b_sigma.
HeisenbergOperator b_rep(const VirtualRep& rep, int b);

/// sum_{i=0}^{d} (-1)^i v^{bpi} b_{tau (x) Lambda^i C^d}.
HeisenbergOperator heis_modp_operator(const Partition& tau, int b, long long p);
FockVector heis_modp(const Partition& tau, int b, long long p, const FockVector& x, unsigned jobs = 1);

/// Negative-parameter analog, computed as omega o heis_modp(tau^t) o omega.
/// This operator is a conjecture-level analog with no closed formula behind it,
/// so callers must opt in with `conjectural = true` (else ConjecturalDisabled).
FockVector heis_neg(const Partition& tau, int b, long long p, const FockVector& x, bool conjectural,
                    unsigned jobs = 1);

/// The involution s_lambda -> s_{lambda^t}, applied coefficientwise.
FockVector omega(const FockVector& x);

/// Formal substitution v^period -> 1 in every coefficient.
FockVector reduce_exponents(const FockVector& x, const Rational& period);

/// True iff every exponent in x has denominator dividing `denominator`.
bool exponents_divisible_by(const FockVector& x, long denominator);

}  // namespace heisfock
