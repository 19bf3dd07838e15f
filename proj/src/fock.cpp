#include "heisfock/fock.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "heisfock/errors.hpp"

namespace heisfock {

FockVector FockVector::vacuum() { return basis(Partition{}); }

FockVector FockVector::basis(const Partition& lambda, const LaurentScalar& coeff) {
  FockVector x;
  x.add_term(lambda, coeff);
  return x;
}

FockVector FockVector::from_symfunc(const SymFunc& f) {
  FockVector x;
  const SymFunc schur = to_schur_basis(f);
  for (const auto& [lambda, c] : schur.terms()) x.add_term(lambda, LaurentScalar(c));
  return x;
}

LaurentScalar FockVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void FockVector::add_term(const Partition& lambda, const LaurentScalar& coeff) {
  add_scaled(lambda, coeff, 1);
}

void FockVector::add_scaled(const Partition& lambda, const LaurentScalar& coeff, const Rational& scale) {
  if (coeff.is_zero() || scale == 0) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    LaurentScalar value;
    value.add_scaled(coeff, scale);
    terms_.emplace(lambda, std::move(value));
    return;
  }
  it->second.add_scaled(coeff, scale);
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (this == &other) {
    const FockVector copy = other;
    return *this += copy;
  }
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (this == &other) {
    const FockVector copy = other;
    return *this -= copy;
  }
  for (const auto& [lambda, c] : other.terms_) add_scaled(lambda, c, -1);
  return *this;
}

FockVector FockVector::scaled(const LaurentScalar& scalar) const {
  FockVector out;
  for (const auto& [lambda, c] : terms_) out.add_term(lambda, c * scalar);
  return out;
}

FockVector FockVector::shifted(const Rational& shift) const {
  FockVector out;
  for (const auto& [lambda, c] : terms_) out.terms_.emplace(lambda, c.shifted(shift));
  return out;
}

HeisenbergOperator HeisenbergOperator::identity() { return power_sum(Partition{}); }

HeisenbergOperator HeisenbergOperator::power_sum(const Partition& rho, const LaurentScalar& coeff) {
  HeisenbergOperator op;
  op.add_term(rho, coeff);
  return op;
}

void HeisenbergOperator::add_term(const Partition& rho, const LaurentScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = series_.try_emplace(rho, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) series_.erase(it);
  }
}

namespace {

using Term = std::pair<const Partition*, const LaurentScalar*>;

FockVector apply_to_terms(const std::map<Partition, LaurentScalar>& series, std::span<const Term> terms) {
  FockVector out;
  for (const auto& [mu, c] : terms) {
    for (const auto& [rho, coeff] : series) {
      const LaurentScalar combined = *c * coeff;
      for (const auto& [lambda, k] : schur_times_power_sums(*mu, rho)) {
        out.add_scaled(lambda, combined, Rational(static_cast<long>(k)));
      }
    }
  }
  return out;
}

}  // namespace

FockVector HeisenbergOperator::apply(const FockVector& x, unsigned jobs) const {
  std::vector<Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& [mu, c] : x.terms()) terms.emplace_back(&mu, &c);
  if (jobs <= 1 || terms.size() < 2) return apply_to_terms(series_, terms);

  const std::size_t workers = std::min<std::size_t>(jobs, terms.size());
  std::vector<FockVector> partial(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (terms.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(terms.size(), lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, w, lo, hi] {
      partial[w] = apply_to_terms(series_, std::span<const Term>(terms).subspan(lo, hi - lo));
    });
  }
  for (auto& t : threads) t.join();
  FockVector out;
  for (const FockVector& part : partial) out += part;
  return out;
}

HeisenbergOperator& HeisenbergOperator::operator+=(const HeisenbergOperator& other) {
  if (this == &other) {
    const HeisenbergOperator copy = other;
    return *this += copy;
  }
  for (const auto& [rho, c] : other.series_) add_term(rho, c);
  return *this;
}

HeisenbergOperator& HeisenbergOperator::operator-=(const HeisenbergOperator& other) {
  if (this == &other) {
    const HeisenbergOperator copy = other;
    return *this -= copy;
  }
  for (const auto& [rho, c] : other.series_) add_term(rho, -c);
  return *this;
}

HeisenbergOperator HeisenbergOperator::scaled(const LaurentScalar& scalar) const {
  HeisenbergOperator out;
  for (const auto& [rho, c] : series_) out.add_term(rho, c * scalar);
  return out;
}

HeisenbergOperator operator*(const HeisenbergOperator& a, const HeisenbergOperator& b) {
  HeisenbergOperator out;
  for (const auto& [r1, c1] : a.series_) {
    for (const auto& [r2, c2] : b.series_) {
      std::vector<int> parts = r1.vec();
      parts.insert(parts.end(), r2.vec().begin(), r2.vec().end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.add_term(Partition(std::move(parts)), c1 * c2);
    }
  }
  return out;
}

SymFunc HeisenbergOperator::as_symfunc() const {
  SymFunc f(Basis::PowerSum);
  for (const auto& [rho, c] : series_) {
    if (c.terms().size() != 1 || c.terms().begin()->first != 0) {
      throw Error(ErrorKind::InvalidInput, "operator coefficients depend on v");
    }
    f.add_term(rho, c.terms().begin()->second);
  }
  return to_schur_basis(f);
}

bool is_prime(long long p) noexcept {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be positive");
}

// sum_rho chi_rep(rho) / z_rho p_{b rho}.
HeisenbergOperator plethystic_operator(const VirtualRep& rep, int b) {
  HeisenbergOperator op;
  if (rep.is_zero()) return op;
  const std::vector<long long> chi = character_of(rep);
  const CharacterTable& table = character_table(rep.degree());
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    if (chi[c] == 0) continue;
    Rational coeff(Integer(static_cast<long>(chi[c])), z_value(table.classes[c]));
    coeff.canonicalize();
    op.add_term(scale_parts(table.classes[c], b), LaurentScalar(coeff));
  }
  return op;
}

}  // namespace

HeisenbergOperator b_op_operator(int i, int b) {
  require_positive(i, "b_op index i");
  require_positive(b, "b");
  return HeisenbergOperator::power_sum(Partition{i * b});
}

FockVector b_op(int i, int b, const FockVector& x, unsigned jobs) { return b_op_operator(i, b).apply(x, jobs); }

HeisenbergOperator b_tau_operator(const Partition& tau, int b) {
  require_positive(b, "b");
  return plethystic_operator(VirtualRep::irreducible(tau), b);
}

FockVector b_tau(const Partition& tau, int b, const FockVector& x, unsigned jobs) {
  return b_tau_operator(tau, b).apply(x, jobs);
}

HeisenbergOperator b_rep(const VirtualRep& rep, int b) {
  require_positive(b, "b");
  return plethystic_operator(rep, b);
}

HeisenbergOperator heis_modp_operator(const Partition& tau, int b, long long p) {
  require_positive(b, "b");
  if (tau.empty()) throw Error(ErrorKind::InvalidInput, "heis_modp needs a nonempty tau");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not a prime");
  const int d = tau.size();
  HeisenbergOperator op;
  for (int i = 0; i <= d; ++i) {
    const VirtualRep twisted = kronecker_product(tau, exterior_power_perm(d, i));
    const Rational exponent(static_cast<long>(b) * static_cast<long>(p) * static_cast<long>(i));
    const LaurentScalar weight = LaurentScalar::monomial(exponent, i % 2 == 0 ? 1 : -1);
    op += b_rep(twisted, b).scaled(weight);
  }
  return op;
}

FockVector heis_modp(const Partition& tau, int b, long long p, const FockVector& x, unsigned jobs) {
  return heis_modp_operator(tau, b, p).apply(x, jobs);
}

FockVector heis_neg(const Partition& tau, int b, long long p, const FockVector& x, bool conjectural, unsigned jobs) {
  if (!conjectural) {
    throw Error(ErrorKind::ConjecturalDisabled,
                "the negative-parameter operator is a conjectural analog; enable it explicitly");
  }
  return omega(heis_modp(transpose(tau), b, p, omega(x), jobs));
}

FockVector omega(const FockVector& x) {
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) out.add_term(transpose(lambda), c);
  return out;
}

FockVector reduce_exponents(const FockVector& x, const Rational& period) {
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) out.add_term(lambda, c.reduce_exponents(period));
  return out;
}

bool exponents_divisible_by(const FockVector& x, long denominator) {
  for (const auto& [lambda, c] : x.terms()) {
    if (!c.exponents_divisible_by(denominator)) return false;
  }
  return true;
}

}  // namespace heisfock
