#include "heisfock/lr.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "heisfock/strips.hpp"

namespace heisfock {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
    const PartitionHash h;
    return h(key.first) * 1000003u ^ h(key.second);
  }
};

struct LrCache {
  std::mutex mutex;
  std::unordered_map<Partition, PartitionMap<long long>, PartitionHash> h_expansions;
  std::unordered_map<std::pair<Partition, Partition>, PartitionMap<long long>, PairHash> products;
};

LrCache& cache() {
  static LrCache instance;
  return instance;
}

void accumulate(PartitionMap<long long>& into, const Partition& key, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = into.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) into.erase(it);
  }
}

Partition with_part(const Partition& alpha, int part) {
  std::vector<int> parts = alpha.vec();
  parts.insert(std::upper_bound(parts.begin(), parts.end(), part, std::greater<>()), part);
  return Partition(std::move(parts));
}

// Caller holds the cache mutex.
const PartitionMap<long long>& h_expansion_locked(LrCache& c, const Partition& nu) {
  if (auto it = c.h_expansions.find(nu); it != c.h_expansions.end()) return it->second;

  PartitionMap<long long> result;
  if (nu.empty()) {
    result.emplace(Partition{}, 1);
  } else {
    // h_{nu_1} s_{rest} = s_nu + (terms strictly larger in lexicographic order).
    const int head = nu.part(0);
    const Partition rest(std::vector<int>(nu.vec().begin() + 1, nu.vec().end()));
    const PartitionMap<long long> rest_expansion = h_expansion_locked(c, rest);
    for (const auto& [alpha, coeff] : rest_expansion) accumulate(result, with_part(alpha, head), coeff);
    for (const Partition& kappa : add_horizontal_strips(rest, head)) {
      if (kappa == nu) continue;
      const PartitionMap<long long> sub = h_expansion_locked(c, kappa);
      for (const auto& [alpha, coeff] : sub) accumulate(result, alpha, -coeff);
    }
  }
  return c.h_expansions.emplace(nu, std::move(result)).first->second;
}

PartitionMap<long long> apply_h(const Partition& mu, const Partition& alpha) {
  PartitionMap<long long> current{{mu, 1}};
  for (int k : alpha.parts()) {
    PartitionMap<long long> next;
    for (const auto& [lambda, coeff] : current) {
      for (const Partition& grown : add_horizontal_strips(lambda, k)) accumulate(next, grown, coeff);
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

const PartitionMap<long long>& schur_in_h_basis(const Partition& nu) {
  LrCache& c = cache();
  std::lock_guard lock(c.mutex);
  return h_expansion_locked(c, nu);
}

const PartitionMap<long long>& schur_product(const Partition& mu, const Partition& nu) {
  LrCache& c = cache();
  // Multiplication is commutative; expand the factor with fewer h-terms.
  const bool swap = mu.size() > nu.size() || (mu.size() == nu.size() && mu < nu);
  const std::pair<Partition, Partition> key = swap ? std::pair{nu, mu} : std::pair{mu, nu};
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.products.find(key); it != c.products.end()) return it->second;
  }
  PartitionMap<long long> expansion;
  {
    std::lock_guard lock(c.mutex);
    expansion = h_expansion_locked(c, key.first);
  }
  PartitionMap<long long> result;
  for (const auto& [alpha, coeff] : expansion) {
    for (const auto& [lambda, c2] : apply_h(key.second, alpha)) accumulate(result, lambda, coeff * c2);
  }
  std::lock_guard lock(c.mutex);
  return c.products.emplace(key, std::move(result)).first->second;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  const auto& product = schur_product(mu, nu);
  auto it = product.find(lambda);
  return it == product.end() ? 0 : it->second;
}

}  // namespace heisfock
