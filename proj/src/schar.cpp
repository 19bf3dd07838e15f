#include "heisfock/schar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "heisfock/errors.hpp"
#include "heisfock/lr.hpp"
#include "heisfock/strips.hpp"

namespace heisfock {

VirtualRep::VirtualRep(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "VirtualRep: negative degree");
}

VirtualRep VirtualRep::irreducible(const Partition& lambda) {
  VirtualRep rep(lambda.size());
  rep.add(lambda, 1);
  return rep;
}

VirtualRep VirtualRep::trivial(int n) {
  VirtualRep rep(n);
  if (n > 0) rep.add(Partition{n}, 1);
  else rep.add(Partition{}, 1);
  return rep;
}

VirtualRep VirtualRep::sign(int n) {
  return irreducible(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

long long VirtualRep::multiplicity(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualRep::add(const Partition& lambda, long long mult) {
  if (lambda.size() != n_) {
    throw Error(ErrorKind::SizeMismatch,
                "partition " + lambda.to_string() + " does not label an irreducible of S_" + std::to_string(n_));
  }
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer VirtualRep::dimension() const {
  Integer total = 0;
  for (const auto& [lambda, mult] : terms_) {
    total += Integer(static_cast<long>(mult)) * static_cast<long>(character_value(lambda, ClassLabel{Partition(std::vector<int>(static_cast<std::size_t>(n_), 1))}));
  }
  return total;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  if (this == &other) {
    const VirtualRep copy = other;
    return *this += copy;
  }
  if (other.n_ != n_) throw Error(ErrorKind::SizeMismatch, "adding representations of different groups");
  for (const auto& [lambda, mult] : other.terms_) add(lambda, mult);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  if (this == &other) {
    const VirtualRep copy = other;
    return *this -= copy;
  }
  if (other.n_ != n_) throw Error(ErrorKind::SizeMismatch, "subtracting representations of different groups");
  for (const auto& [lambda, mult] : other.terms_) add(lambda, -mult);
  return *this;
}

VirtualRep& VirtualRep::operator*=(long long scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, mult] : terms_) mult *= scalar;
  return *this;
}

std::size_t CharacterTable::index_of_class(const Partition& mu) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), mu, std::greater<>());
  if (it == classes.end() || *it != mu) throw Error(ErrorKind::SizeMismatch, "not a class of S_" + std::to_string(n));
  return static_cast<std::size_t>(it - classes.begin());
}

std::size_t CharacterTable::index_of_irrep(const Partition& lambda) const {
  auto it = std::lower_bound(irreps.begin(), irreps.end(), lambda, std::greater<>());
  if (it == irreps.end() || *it != lambda) throw Error(ErrorKind::SizeMismatch, "not an irreducible of S_" + std::to_string(n));
  return static_cast<std::size_t>(it - irreps.begin());
}

namespace {

// Removes strips for the parts of mu from the largest one down; `from` indexes
// the first part of mu still to be removed.
long long mn_recursive(const Partition& lambda, const Partition& mu, std::size_t from,
                       std::map<std::pair<Partition, std::size_t>, long long>& memo) {
  if (from == mu.length()) return lambda.empty() ? 1 : 0;
  auto key = std::pair{lambda, from};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long total = 0;
  for (const StripMove& move : remove_border_strips(lambda, mu.part(from))) {
    total += move.sign * mn_recursive(move.result, mu, from + 1, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct TableCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<CharacterTable>> tables;
};

TableCache& table_cache() {
  static TableCache instance;
  return instance;
}

CharacterTable compute_table(int n) {
  CharacterTable table;
  table.n = n;
  table.irreps = partitions_of(n);
  table.classes = table.irreps;
  table.values.assign(table.irreps.size(), std::vector<long long>(table.classes.size()));
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    std::map<std::pair<Partition, std::size_t>, long long> memo;
    for (std::size_t r = 0; r < table.irreps.size(); ++r) {
      table.values[r][c] = mn_recursive(table.irreps[r], table.classes[c], 0, memo);
    }
  }
  return table;
}

}  // namespace

long long character_value(const Partition& lambda, const ClassLabel& mu) {
  if (lambda.size() != mu.n()) {
    throw Error(ErrorKind::SizeMismatch, "character_value: |lambda| = " + std::to_string(lambda.size()) +
                                             " but the class lies in S_" + std::to_string(mu.n()));
  }
  std::map<std::pair<Partition, std::size_t>, long long> memo;
  return mn_recursive(lambda, mu.cycle_type, 0, memo);
}

Integer factorial(int n) {
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Integer z_value(const Partition& mu) {
  Integer z = 1;
  std::size_t i = 0;
  while (i < mu.length()) {
    const int k = mu.part(i);
    int mult = 0;
    while (i < mu.length() && mu.part(i) == k) {
      ++mult;
      ++i;
    }
    Integer kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(mult));
    z *= kpow * factorial(mult);
  }
  return z;
}

Integer class_size(const ClassLabel& mu) { return factorial(mu.n()) / z_value(mu.cycle_type); }

const CharacterTable& character_table(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "character_table: negative n");
  TableCache& cache = table_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.tables.find(n); it != cache.tables.end()) return *it->second;
  }
  auto table = std::make_unique<CharacterTable>(compute_table(n));
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.tables.try_emplace(n, std::move(table));
  return *it->second;
}

void seed_character_table(CharacterTable table) {
  const int n = table.n;
  if (n < 0) throw Error(ErrorKind::InvalidInput, "seed_character_table: negative n");
  const std::vector<Partition> expected = partitions_of(n);
  if (table.irreps != expected || table.classes != expected || table.values.size() != expected.size()) {
    throw Error(ErrorKind::InvalidInput, "cached character table has the wrong shape");
  }
  const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
  const std::size_t id_col = table.index_of_class(identity);
  for (std::size_t r = 0; r < expected.size(); ++r) {
    if (table.values[r].size() != expected.size() ||
        table.values[r][id_col] != character_value(expected[r], ClassLabel{identity})) {
      throw Error(ErrorKind::InvalidInput, "cached character table disagrees with the recomputed degrees");
    }
  }
  // Both orthogonality relations, so a corrupted entry cannot slip through.
  const std::size_t k = expected.size();
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r; s < k; ++s) {
      Integer rows = 0;
      Integer cols = 0;
      for (std::size_t c = 0; c < k; ++c) {
        rows += class_size(ClassLabel{expected[c]}) * static_cast<long>(table.values[r][c]) * static_cast<long>(table.values[s][c]);
        cols += Integer(static_cast<long>(table.values[c][r])) * static_cast<long>(table.values[c][s]);
      }
      if (rows != (r == s ? factorial(n) : Integer(0)) || cols != (r == s ? z_value(expected[r]) : Integer(0))) {
        throw Error(ErrorKind::InvalidInput, "cached character table violates orthogonality");
      }
    }
  }
  TableCache& cache = table_cache();
  std::lock_guard lock(cache.mutex);
  cache.tables.try_emplace(n, std::make_unique<CharacterTable>(std::move(table)));
}

std::vector<long long> character_of(const VirtualRep& rep) {
  const CharacterTable& table = character_table(rep.degree());
  std::vector<long long> values(table.classes.size(), 0);
  for (const auto& [lambda, mult] : rep.terms()) {
    const auto& row = table.values[table.index_of_irrep(lambda)];
    for (std::size_t c = 0; c < values.size(); ++c) values[c] += mult * row[c];
  }
  return values;
}

VirtualRep decompose_class_function(int n, const std::vector<Integer>& values) {
  const CharacterTable& table = character_table(n);
  if (values.size() != table.classes.size()) {
    throw Error(ErrorKind::SizeMismatch, "class function has the wrong number of values");
  }
  const Integer order = factorial(n);
  std::vector<Integer> weights(table.classes.size());
  for (std::size_t c = 0; c < weights.size(); ++c) weights[c] = class_size(ClassLabel{table.classes[c]}) * values[c];
  VirtualRep rep(n);
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    Integer inner = 0;
    for (std::size_t c = 0; c < weights.size(); ++c) inner += weights[c] * static_cast<long>(table.values[r][c]);
    if (inner % order != 0) {
      throw Error(ErrorKind::InvalidInput, "class function is not a virtual character");
    }
    const Integer mult = inner / order;
    if (!mult.fits_slong_p()) throw Error(ErrorKind::RangeError, "multiplicity overflow");
    rep.add(table.irreps[r], mult.get_si());
  }
  return rep;
}

VirtualRep induction_product(const VirtualRep& alpha, const VirtualRep& beta) {
  VirtualRep out(alpha.degree() + beta.degree());
  for (const auto& [lambda, m1] : alpha.terms()) {
    for (const auto& [nu, m2] : beta.terms()) {
      for (const auto& [sigma, c] : schur_product(lambda, nu)) out.add(sigma, m1 * m2 * c);
    }
  }
  return out;
}

VirtualRep kronecker_product(const Partition& sigma, const VirtualRep& rep) {
  if (sigma.size() != rep.degree()) {
    throw Error(ErrorKind::SizeMismatch, "kronecker_product: |sigma| = " + std::to_string(sigma.size()) +
                                             " but the representation lives on S_" + std::to_string(rep.degree()));
  }
  const int d = rep.degree();
  const CharacterTable& table = character_table(d);
  const auto& row = table.values[table.index_of_irrep(sigma)];
  const std::vector<long long> chi = character_of(rep);
  std::vector<Integer> product(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) product[c] = Integer(static_cast<long>(row[c])) * static_cast<long>(chi[c]);
  return decompose_class_function(d, product);
}

VirtualRep exterior_power_perm(int d, int i) {
  if (d < 1) throw Error(ErrorKind::RangeError, "exterior_power_perm: d must be positive");
  if (i < 0 || i > d) {
    throw Error(ErrorKind::RangeError, "exterior_power_perm: i = " + std::to_string(i) + " outside [0," + std::to_string(d) + "]");
  }
  const CharacterTable& table = character_table(d);
  std::vector<Integer> values(table.classes.size());
  for (std::size_t c = 0; c < values.size(); ++c) {
    // det(1 + t g) = prod over cycles of length k of (1 - (-t)^k); take [t^i].
    std::vector<Integer> poly(static_cast<std::size_t>(d) + 1, 0);
    poly[0] = 1;
    for (int k : table.classes[c].parts()) {
      const long sign = (k % 2 == 1) ? 1 : -1;  // -(-1)^k
      for (int deg = d; deg >= k; --deg) poly[static_cast<std::size_t>(deg)] += sign * poly[static_cast<std::size_t>(deg - k)];
    }
    values[c] = poly[static_cast<std::size_t>(i)];
  }
  return decompose_class_function(d, values);
}

}  // namespace heisfock
