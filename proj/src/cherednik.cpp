#include "heisfock/cherednik.hpp"

#include <algorithm>
#include <numeric>

#include "heisfock/errors.hpp"
#include "heisfock/lr.hpp"
#include "heisfock/schar.hpp"

namespace heisfock {

ParamLambda::ParamLambda(long a, long b) : a_(a), b_(b) {
  if (b < 1) throw Error(ErrorKind::InvalidInput, "lambda = a/b needs b >= 1");
  if (std::gcd(std::labs(a), b) != 1) {
    throw Error(ErrorKind::InvalidInput, "lambda = a/b needs gcd(|a|, b) = 1, got a=" + std::to_string(a) +
                                             " b=" + std::to_string(b));
  }
}

bool sigma_forbidden(const ParamLambda& lambda, int n) {
  // a/b is reduced, so -a/b = -a'/b' with a' < b' <= n forces b <= b'.
  return lambda.a() < 0 && -lambda.a() < lambda.b() && lambda.b() <= n;
}

Rational lowest_eu_eigenvalue(const Partition& eta, const ParamLambda& lambda) {
  return Rational(static_cast<long>(d_stat(eta))) - lambda.value() * static_cast<long>(content_sum(eta));
}

Rational euler_relation_scalar(int n, const ParamLambda& lambda) {
  return lambda.value() * n - make_rational(static_cast<long>(n) * (n - 1), 2);
}

namespace {

Rational block_step(const ParamLambda& lambda) {
  return make_rational(lambda.a() * (lambda.b() - 1), 2);
}

void require_label(const SimpleLabel& label, const ParamLambda& lambda) {
  if (!is_integral(label.m * lambda.b())) {
    throw Error(ErrorKind::InvalidInput, "label degree " + format_rational(label.m) + " is not in (1/" +
                                             std::to_string(lambda.b()) + ")Z");
  }
}

long long mod_pow(long long base, long long exp, long long p) {
  long long result = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<long long>((__int128)result * base % p);
    base = static_cast<long long>((__int128)base * base % p);
    exp >>= 1;
  }
  return result;
}

long long residue_mod_p(const Rational& value, long long p) {
  const Integer pz(static_cast<long>(p));
  Integer den = value.get_den() % pz;
  if (den == 0) {
    throw Error(ErrorKind::InvalidInput, "denominator of " + format_rational(value) + " vanishes mod " + std::to_string(p));
  }
  Integer num = value.get_num() % pz;
  if (num < 0) num += pz;
  const long long inv = mod_pow(den.get_si(), p - 2, p);
  return static_cast<long long>((__int128)num.get_si() * inv % p);
}

LabelMultiset collect(std::map<SimpleLabel, long long, std::greater<>>& acc) {
  LabelMultiset out;
  for (auto& [label, mult] : acc) {
    if (mult != 0) out.push_back({label, mult});
  }
  return out;
}

}  // namespace

bool eu_equivalent(const Partition& eta1, const Partition& eta2, const ParamLambda& lambda) {
  const long diff = eta2.size() - eta1.size();
  if (diff % lambda.b() != 0) return false;
  const long d = diff / lambda.b();
  const Rational gap =
      lowest_eu_eigenvalue(eta2, lambda) - lowest_eu_eigenvalue(eta1, lambda) - block_step(lambda) * d;
  return is_integral(gap);
}

FractionalSplit block_shift(const Rational& sigma, const ParamLambda& lambda) {
  return split_fractional(sigma + block_step(lambda));
}

SimpleLabel preferred_lift(const Partition& eta, const ParamLambda& lambda) {
  return {eta, lowest_eu_eigenvalue(eta, lambda)};
}

Rational grading_offset(const SimpleLabel& label, const ParamLambda& lambda) {
  return label.m - lowest_eu_eigenvalue(label.eta, lambda);
}

BlockId block_of(const SimpleLabel& label, const ParamLambda& lambda, long long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not a prime");
  require_label(label, lambda);
  const long long alpha = residue_mod_p(lowest_eu_eigenvalue(label.eta, lambda) - label.m, p);
  return {alpha, split_fractional(label.m).residue};
}

bool stratification_preceq(const Rational& ld1, const Rational& ld2, const ParamLambda& lambda, int big_n) {
  return ld1 >= ld2 - Rational(lambda.a() * big_n * (big_n - 1));
}

bool gap_condition_holds(const SimpleLabel& l1, const SimpleLabel& l2, const ParamLambda& lambda, int big_n) {
  const Rational bound(2 * lambda.a() * big_n * (big_n - 1));
  if (abs(Rational(l1.m - l2.m)) > bound) return true;
  return lowest_eu_eigenvalue(l1.eta, lambda) - l1.m == lowest_eu_eigenvalue(l2.eta, lambda) - l2.m;
}

LabelMultiset simple_image_pos(const SimpleLabel& label, const Partition& tau, const ParamLambda& lambda) {
  if (lambda.a() <= 0) throw Error(ErrorKind::InvalidParam, "simple_image_pos needs lambda > 0");
  require_label(label, lambda);
  const int b = static_cast<int>(lambda.b());
  const Rational offset = grading_offset(label, lambda);
  const auto [mu, tau_prime] = coprime_decompose(label.eta, b);
  std::map<SimpleLabel, long long, std::greater<>> acc;
  for (const auto& [sigma, c] : schur_product(tau_prime, tau)) {
    const Partition eta_out = partwise_add(mu, b, sigma);
    if (sigma_forbidden(lambda, eta_out.size())) {
      throw Error(ErrorKind::InvalidParam, "lambda lies in the singular set");
    }
    acc[SimpleLabel{eta_out, lowest_eu_eigenvalue(eta_out, lambda) + offset}] += c;
  }
  return collect(acc);
}

LabelMultiset simple_image_neg(const SimpleLabel& label, const Partition& tau, const ParamLambda& lambda_minus) {
  if (lambda_minus.value() >= -1) {
    throw Error(ErrorKind::InvalidParam, "simple_image_neg needs lambda < -1, got " + format_rational(lambda_minus.value()));
  }
  require_label(label, lambda_minus);
  const int b = static_cast<int>(lambda_minus.b());
  const Rational offset = grading_offset(label, lambda_minus);
  const Partition eta = transpose(label.eta);
  const auto [mu, tau_prime] = coprime_decompose(eta, b);
  std::map<SimpleLabel, long long, std::greater<>> acc;
  for (const auto& [sigma, c] : schur_product(tau_prime, transpose(tau))) {
    const Partition eta_out = transpose(partwise_add(mu, b, sigma));
    acc[SimpleLabel{eta_out, lowest_eu_eigenvalue(eta_out, lambda_minus) + offset}] += c;
  }
  return collect(acc);
}

int support_dim(const Partition& eta, int b) {
  if (b < 2) throw Error(ErrorKind::InvalidInput, "support_dim needs b >= 2");
  const auto [mu, tau] = coprime_decompose(eta, b);
  return mu.size() + tau.size();
}

std::vector<SupportStratum> possible_supports(int n, int b) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "possible_supports needs n >= 0");
  if (b < 2) throw Error(ErrorKind::InvalidInput, "possible_supports needs b >= 2");
  std::vector<SupportStratum> out;
  for (int l = 0; b * l <= n; ++l) {
    const int k = n - b * l;
    out.push_back({k, l, k + l});
  }
  return out;
}

std::vector<long long> singular_residues(long long p, int n) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not a prime");
  if (p <= n) throw Error(ErrorKind::InvalidParam, "p must exceed n so that every b <= n is invertible");
  std::vector<long long> residues;
  for (int b = 2; b <= n; ++b) {
    const long long inv = mod_pow(b, p - 2, p);
    for (int a = 1; a < b; ++a) residues.push_back(((p - a) % p) * inv % p);
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return residues;
}

StabilityInterval p_stability_interval(long long z, long long p, int n) {
  const std::vector<long long> walls = singular_residues(p, n);
  if (walls.empty()) return {};
  const long long zr = ((z % p) + p) % p;
  if (std::binary_search(walls.begin(), walls.end(), zr)) {
    throw Error(ErrorKind::OnWall, std::to_string(z) + " reduces into the singular set mod " + std::to_string(p));
  }
  long long up = p;
  long long down = p;
  for (long long r : walls) {
    up = std::min(up, ((r - zr) % p + p) % p);
    down = std::min(down, ((zr - r) % p + p) % p);
  }
  return {z - down + 1, z + up - 1};
}

HilbertSeries verma_hilbert(const Partition& eta, const Rational& m, int max_deg) {
  if (max_deg < 0) throw Error(ErrorKind::InvalidInput, "verma_hilbert needs max_deg >= 0");
  const int n = eta.size();
  const std::size_t len = static_cast<std::size_t>(max_deg) + 1;
  HilbertSeries out{m, std::vector<Integer>(len, 0)};
  const CharacterTable& table = character_table(n);
  const std::size_t row = table.index_of_irrep(eta);
  const Integer order = factorial(n);
  std::vector<Integer> total(len, 0);
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const long long chi = table.values[row][c];
    if (chi == 0) continue;
    // Trace of the class on C[x]_d: [t^d] prod over cycles 1/(1 - t^k).
    std::vector<Integer> series(len, 0);
    series[0] = 1;
    for (int k : table.classes[c].parts()) {
      for (std::size_t d = static_cast<std::size_t>(k); d < len; ++d) series[d] += series[d - static_cast<std::size_t>(k)];
    }
    const Integer weight = class_size(ClassLabel{table.classes[c]}) * static_cast<long>(chi);
    for (std::size_t d = 0; d < len; ++d) total[d] += weight * series[d];
  }
  for (std::size_t d = 0; d < len; ++d) out.coeffs[d] = total[d] / order;
  return out;
}

std::pair<Partition, Rational> leading_term(const FockVector& x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidInput, "the zero vector has no leading term");
  std::optional<std::pair<Partition, Rational>> best;
  for (const auto& [lambda, c] : x.terms()) {
    const Rational e = c.min_exponent();
    // terms() iterates in descending order, so the first hit at a given
    // exponent is the largest partition.
    if (!best || e < best->second) best = std::pair{lambda, e};
  }
  return *best;
}

FockVector character_pipeline(const Partition& eta, const ParamLambda& lambda, long long p,
                              const std::map<Partition, FockVector>& coprime_table, unsigned jobs) {
  if (lambda.a() <= 0) throw Error(ErrorKind::InvalidParam, "character_pipeline needs lambda > 0");
  const int b = static_cast<int>(lambda.b());
  const auto [mu, tau] = coprime_decompose(eta, b);
  auto it = coprime_table.find(mu);
  if (it == coprime_table.end()) {
    throw Error(ErrorKind::MissingTable, "no class supplied for the coprime part " + mu.to_string());
  }
  if (tau.empty()) return it->second;
  FockVector image = heis_modp(tau, b, p, it->second, jobs);
  if (image.is_zero()) return image;
  return image.shifted(-leading_term(image).second);
}

}  // namespace heisfock
