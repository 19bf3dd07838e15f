#include "heisfock/symfunc.hpp"

#include <mutex>
#include <unordered_map>

#include "heisfock/errors.hpp"
#include "heisfock/lr.hpp"
#include "heisfock/strips.hpp"

namespace heisfock {

const char* to_string(Basis basis) noexcept {
  return basis == Basis::Schur ? "schur" : "powersum";
}

SymFunc SymFunc::one(Basis basis) {
  SymFunc f(basis);
  f.add_term(Partition{}, 1);
  return f;
}

SymFunc SymFunc::schur(const Partition& lambda, const Rational& coeff) {
  SymFunc f(Basis::Schur);
  f.add_term(lambda, coeff);
  return f;
}

SymFunc SymFunc::power_sum(const Partition& rho, const Rational& coeff) {
  SymFunc f(Basis::PowerSum);
  f.add_term(rho, coeff);
  return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SymFunc::has_integer_coefficients() const {
  for (const auto& [lambda, c] : terms_) {
    if (!is_integral(c)) return false;
  }
  return true;
}

void SymFunc::add_term(const Partition& lambda, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (this == &other) {
    const SymFunc copy = other;
    return *this += copy;
  }
  if (other.basis_ != basis_) throw Error(ErrorKind::BasisMismatch, "adding functions in different bases");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  if (this == &other) {
    const SymFunc copy = other;
    return *this -= copy;
  }
  if (other.basis_ != basis_) throw Error(ErrorKind::BasisMismatch, "subtracting functions in different bases");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

SymFunc schur_multiply(const SymFunc& f, const SymFunc& g) {
  if (f.basis() != Basis::Schur || g.basis() != Basis::Schur) {
    throw Error(ErrorKind::BasisMismatch, "schur_multiply needs both factors in the Schur basis");
  }
  SymFunc out(Basis::Schur);
  for (const auto& [mu, a] : f.terms()) {
    for (const auto& [nu, b] : g.terms()) {
      const Rational ab = a * b;
      for (const auto& [lambda, c] : schur_product(mu, nu)) out.add_term(lambda, ab * static_cast<long>(c));
    }
  }
  return out;
}

SymFunc power_sum_to_schur(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "power_sum_to_schur: m must be positive");
  return multiply_by_power_sum(SymFunc::one(), m);
}

SymFunc schur_to_power_sums(const Partition& tau) {
  SymFunc out(Basis::PowerSum);
  for (const Partition& mu : partitions_of(tau.size())) {
    const long long chi = character_value(tau, ClassLabel{mu});
    if (chi == 0) continue;
    Rational coeff(Integer(static_cast<long>(chi)), z_value(mu));
    coeff.canonicalize();
    out.add_term(mu, coeff);
  }
  return out;
}

SymFunc to_power_sum_basis(const SymFunc& f) {
  if (f.basis() == Basis::PowerSum) return f;
  SymFunc out(Basis::PowerSum);
  for (const auto& [tau, c] : f.terms()) {
    const SymFunc expansion = schur_to_power_sums(tau);
    for (const auto& [mu, d] : expansion.terms()) out.add_term(mu, c * d);
  }
  return out;
}

SymFunc to_schur_basis(const SymFunc& f) {
  if (f.basis() == Basis::Schur) return f;
  SymFunc out(Basis::Schur);
  for (const auto& [rho, c] : f.terms()) {
    for (const auto& [lambda, k] : schur_times_power_sums(Partition{}, rho)) out.add_term(lambda, c * static_cast<long>(k));
  }
  return out;
}

SymFunc multiply_by_power_sum(const SymFunc& f, int k) {
  if (f.basis() != Basis::Schur) throw Error(ErrorKind::BasisMismatch, "multiply_by_power_sum expects the Schur basis");
  SymFunc out(Basis::Schur);
  for (const auto& [mu, c] : f.terms()) {
    for (const StripMove& move : add_border_strips(mu, k)) out.add_term(move.result, move.sign * c);
  }
  return out;
}

namespace {

struct PowerSumCache {
  std::mutex mutex;
  std::map<std::pair<Partition, Partition>, PartitionMap<long long>> products;
};

PowerSumCache& power_sum_cache() {
  static PowerSumCache instance;
  return instance;
}

}  // namespace

const PartitionMap<long long>& schur_times_power_sums(const Partition& mu, const Partition& rho) {
  PowerSumCache& cache = power_sum_cache();
  auto key = std::pair{mu, rho};
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.products.find(key); it != cache.products.end()) return it->second;
  }
  PartitionMap<long long> result;
  if (rho.empty()) {
    result.emplace(mu, 1);
  } else {
    // Peel off the smallest part and reuse the cached prefix product.
    const Partition prefix(std::vector<int>(rho.vec().begin(), rho.vec().end() - 1));
    const int k = rho.vec().back();
    const PartitionMap<long long> base = schur_times_power_sums(mu, prefix);
    for (const auto& [lambda, c] : base) {
      for (const StripMove& move : add_border_strips(lambda, k)) {
        auto [it, inserted] = result.try_emplace(move.result, move.sign * c);
        if (!inserted) {
          it->second += move.sign * c;
          if (it->second == 0) result.erase(it);
        }
      }
    }
  }
  std::lock_guard lock(cache.mutex);
  return cache.products.emplace(std::move(key), std::move(result)).first->second;
}

Partition scale_parts(const Partition& rho, int b) {
  if (b < 1) throw Error(ErrorKind::InvalidInput, "scale factor must be positive");
  std::vector<int> parts = rho.vec();
  for (int& x : parts) x *= b;
  return Partition(std::move(parts));
}

SymFunc plethysm_pb(const SymFunc& f, int b) {
  if (b < 1) throw Error(ErrorKind::InvalidInput, "plethysm_pb: b must be positive");
  SymFunc substituted(Basis::PowerSum);
  const SymFunc expansion = to_power_sum_basis(f);
  for (const auto& [rho, c] : expansion.terms()) substituted.add_term(scale_parts(rho, b), c);
  return to_schur_basis(substituted);
}

SymFunc characteristic(const VirtualRep& rep) {
  SymFunc out(Basis::Schur);
  for (const auto& [lambda, mult] : rep.terms()) out.add_term(lambda, Rational(Integer(static_cast<long>(mult))));
  return out;
}

SymFunc omega(const SymFunc& f) {
  SymFunc out(f.basis());
  for (const auto& [lambda, c] : f.terms()) {
    if (f.basis() == Basis::Schur) {
      out.add_term(transpose(lambda), c);
    } else {
      // omega(p_rho) = (-1)^{|rho| - l(rho)} p_rho
      const bool odd = (lambda.size() - static_cast<int>(lambda.length())) % 2 != 0;
      out.add_term(lambda, odd ? Rational(-c) : c);
    }
  }
  return out;
}

}  // namespace heisfock
