#include "heisfock/oracle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "heisfock/errors.hpp"

namespace heisfock::oracle {

namespace {

// eta - b * tau as a padded sequence, or nothing if it is not a partition.
std::optional<Partition> subtract_scaled(const Partition& eta, int b, const Partition& tau) {
  if (tau.length() > eta.length()) return std::nullopt;
  std::vector<int> parts(eta.length());
  for (std::size_t i = 0; i < eta.length(); ++i) {
    parts[i] = eta.part(i) - b * tau.part(i);
    if (parts[i] < 0) return std::nullopt;
    if (i > 0 && parts[i] > parts[i - 1]) return std::nullopt;
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Integer fact(int n) {
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Integer centralizer(const Partition& mu) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int k : mu.parts()) ++mult[k];
  for (const auto& [k, m] : mult) {
    for (int j = 0; j < m; ++j) z *= k;
    z *= fact(m);
  }
  return z;
}

// Number of ways to distribute the cycles of mu among rows with sizes `rows`.
long long permutation_character(const Partition& rows, const Partition& mu) {
  std::vector<int> remaining = rows.vec();
  auto rec = [&](auto&& self, std::size_t idx) -> long long {
    if (idx == mu.length()) return 1;
    long long total = 0;
    for (int& r : remaining) {
      if (r >= mu.part(idx)) {
        r -= mu.part(idx);
        total += self(self, idx + 1);
        r += mu.part(idx);
      }
    }
    return total;
  };
  return rec(rec, 0);
}

// Permutation of {0..n-1} with cycle type mu: consecutive blocks.
std::vector<int> class_representative(const Partition& mu) {
  std::vector<int> perm;
  int start = 0;
  for (int len : mu.parts()) {
    for (int j = 0; j < len; ++j) perm.push_back(start + (j + 1) % len);
    start += len;
  }
  return perm;
}

VirtualRep decompose_with(const CharacterTable& table, const std::vector<long long>& values) {
  const Integer order = fact(table.n);
  VirtualRep rep(table.n);
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    Integer inner = 0;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      inner += (fact(table.n) / centralizer(table.classes[c])) * static_cast<long>(table.values[r][c]) *
               static_cast<long>(values[c]);
    }
    if (inner % order != 0) throw Error(ErrorKind::InvalidInput, "oracle: not a virtual character");
    rep.add(table.irreps[r], Integer(inner / order).get_si());
  }
  return rep;
}

const CharacterTable& cached_gs_table(int n) {
  static std::map<int, CharacterTable> tables;
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, young_gram_schmidt_table(n)).first;
  return it->second;
}

}  // namespace

std::vector<std::pair<Partition, Partition>> exhaustive_coprime_decompositions(const Partition& eta, int b) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int t = 0; t * b <= eta.size(); ++t) {
    for (const Partition& tau : partitions_of(t)) {
      auto mu = subtract_scaled(eta, b, tau);
      if (mu && coprime_by_search(*mu, b)) out.emplace_back(*mu, tau);
    }
  }
  return out;
}

bool coprime_by_search(const Partition& eta, int b) {
  for (int t = 1; t * b <= eta.size(); ++t) {
    for (const Partition& tau : partitions_of(t)) {
      if (subtract_scaled(eta, b, tau)) return false;
    }
  }
  return true;
}

CharacterTable young_gram_schmidt_table(int n) {
  CharacterTable table;
  table.n = n;
  table.irreps = partitions_of(n);
  table.classes = table.irreps;
  const std::size_t k = table.classes.size();
  std::vector<Integer> sizes(k);
  for (std::size_t c = 0; c < k; ++c) sizes[c] = fact(n) / centralizer(table.classes[c]);
  const Integer order = fact(n);
  auto inner = [&](const std::vector<long long>& f, const std::vector<long long>& g) {
    Integer total = 0;
    for (std::size_t c = 0; c < k; ++c) total += sizes[c] * static_cast<long>(f[c]) * static_cast<long>(g[c]);
    if (total % order != 0) throw Error(ErrorKind::InvalidInput, "oracle: non-integral inner product");
    return Integer(total / order).get_si();
  };
  // Lexicographic descending order refines dominance, so every irreducible
  // occurring in pi_lambda other than chi_lambda was produced earlier.
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<long long> chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = permutation_character(table.irreps[r], table.classes[c]);
    std::vector<long long> pi = chi;
    for (std::size_t prev = 0; prev < r; ++prev) {
      const long long mult = inner(pi, table.values[prev]);
      for (std::size_t c = 0; c < k; ++c) chi[c] -= mult * table.values[prev][c];
    }
    table.values.push_back(std::move(chi));
  }
  return table;
}

long long lr_tableaux_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) return 0;
  }
  // Cells in reverse reading order: rows top to bottom, each right to left.
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = lambda.part(i) - 1; j >= mu.part(i); --j) cells.emplace_back(static_cast<int>(i), j);
  }
  std::vector<std::vector<int>> fill(lambda.length(), std::vector<int>(static_cast<std::size_t>(lambda.part(0)), 0));
  std::vector<int> used(nu.length() + 1, 0);
  auto rec = [&](auto&& self, std::size_t idx) -> long long {
    if (idx == cells.size()) return 1;
    const auto [row, col] = cells[idx];
    long long total = 0;
    for (int v = 1; v <= static_cast<int>(nu.length()); ++v) {
      if (used[static_cast<std::size_t>(v)] >= nu.part(static_cast<std::size_t>(v - 1))) continue;
      // Lattice condition on the reverse reading word.
      if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)]) continue;
      // Row weakly increasing (cell to the right is already filled).
      if (col + 1 < lambda.part(static_cast<std::size_t>(row)) && fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)] < v) continue;
      // Column strictly increasing (cell above, if in the skew shape).
      if (row > 0 && col >= mu.part(static_cast<std::size_t>(row - 1)) &&
          fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] >= v) continue;
      fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      ++used[static_cast<std::size_t>(v)];
      total += self(self, idx + 1);
      --used[static_cast<std::size_t>(v)];
      fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    }
    return total;
  };
  return rec(rec, 0);
}

long long kostka_number(const Partition& lambda, const Partition& kappa) {
  if (lambda.size() != kappa.size()) return 0;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) cells.emplace_back(static_cast<int>(i), j);
  }
  std::vector<std::vector<int>> fill(lambda.length(), std::vector<int>(static_cast<std::size_t>(lambda.part(0) + 1), 0));
  std::vector<int> used(kappa.length() + 1, 0);
  auto rec = [&](auto&& self, std::size_t idx) -> long long {
    if (idx == cells.size()) return 1;
    const auto [row, col] = cells[idx];
    long long total = 0;
    for (int v = 1; v <= static_cast<int>(kappa.length()); ++v) {
      if (used[static_cast<std::size_t>(v)] >= kappa.part(static_cast<std::size_t>(v - 1))) continue;
      if (col > 0 && fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] > v) continue;
      if (row > 0 && fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] >= v) continue;
      fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      ++used[static_cast<std::size_t>(v)];
      total += self(self, idx + 1);
      --used[static_cast<std::size_t>(v)];
    }
    fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    return total;
  };
  return rec(rec, 0);
}

std::vector<long long> exterior_power_character_by_matrices(int d, int i) {
  if (d < 1 || i < 0 || i > d) throw Error(ErrorKind::RangeError, "oracle: exterior power out of range");
  const std::vector<Partition> classes = partitions_of(d);
  std::vector<long long> values;
  for (const Partition& mu : classes) {
    const std::vector<int> perm = class_representative(mu);
    long long trace = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (std::popcount(mask) != i) continue;
      // g e_{s1} ^ ... ^ e_{si} = e_{g s1} ^ ... ^ e_{g si}: contributes to the
      // trace iff g(S) = S, with the sign of g restricted to S.
      std::vector<int> subset;
      for (int x = 0; x < d; ++x) {
        if (mask & (1u << x)) subset.push_back(x);
      }
      std::vector<int> image;
      for (int x : subset) image.push_back(perm[static_cast<std::size_t>(x)]);
      std::vector<int> sorted_image = image;
      std::sort(sorted_image.begin(), sorted_image.end());
      if (sorted_image != subset) continue;
      int inversions = 0;
      for (std::size_t a = 0; a < image.size(); ++a) {
        for (std::size_t b = a + 1; b < image.size(); ++b) inversions += image[a] > image[b] ? 1 : 0;
      }
      trace += (inversions % 2 == 0) ? 1 : -1;
    }
    values.push_back(trace);
  }
  return values;
}

VirtualRep exterior_power_by_matrices(int d, int i) {
  return decompose_with(cached_gs_table(d), exterior_power_character_by_matrices(d, i));
}

Integer polynomial_ring_multiplicity(const Partition& eta, int deg) {
  const int n = eta.size();
  const CharacterTable& table = cached_gs_table(n);
  const std::size_t row = static_cast<std::size_t>(
      std::find(table.irreps.begin(), table.irreps.end(), eta) - table.irreps.begin());
  // Enumerate all exponent vectors of total degree `deg`.
  std::vector<std::vector<int>> monomials;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      current[static_cast<std::size_t>(var)] = left;
      monomials.push_back(current);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      current[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (deg == 0) monomials.emplace_back();
  } else {
    rec(rec, 0, deg);
  }
  Integer total = 0;
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const std::vector<int> perm = class_representative(table.classes[c]);
    long long fixed = 0;
    for (const auto& mono : monomials) {
      bool same = true;
      for (int x = 0; x < n && same; ++x) same = mono[static_cast<std::size_t>(x)] == mono[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])];
      fixed += same ? 1 : 0;
    }
    total += (fact(n) / centralizer(table.classes[c])) * static_cast<long>(table.values[row][c]) * static_cast<long>(fixed);
  }
  return total / fact(n);
}

Polynomial schur_polynomial(const Partition& lambda, int num_vars) {
  Polynomial out;
  if (lambda.length() > static_cast<std::size_t>(num_vars)) return out;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) cells.emplace_back(static_cast<int>(i), j);
  }
  std::vector<std::vector<int>> fill(lambda.length(), std::vector<int>(static_cast<std::size_t>(lambda.part(0) + 1), 0));
  std::vector<int> exponent(static_cast<std::size_t>(num_vars), 0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out[exponent] += 1;
      return;
    }
    const auto [row, col] = cells[idx];
    const int lo_row = col > 0 ? fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] : 1;
    const int lo_col = row > 0 ? fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1 : 1;
    for (int v = std::max(lo_row, lo_col); v <= num_vars; ++v) {
      fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      ++exponent[static_cast<std::size_t>(v - 1)];
      self(self, idx + 1);
      --exponent[static_cast<std::size_t>(v - 1)];
    }
    fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
  };
  rec(rec, 0);
  return out;
}

Polynomial power_sum_polynomial(int k, int num_vars) {
  Polynomial out;
  for (int v = 0; v < num_vars; ++v) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(v)] = k;
    out[e] += 1;
  }
  return out;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  for (const auto& [e1, c1] : f) {
    for (const auto& [e2, c2] : g) {
      std::vector<int> e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out[e] += c1 * c2;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial substitute_powers(const Polynomial& f, int b) {
  Polynomial out;
  for (const auto& [e, c] : f) {
    std::vector<int> scaled = e;
    for (int& x : scaled) x *= b;
    out[scaled] += c;
  }
  return out;
}

Polynomial expand(const SymFunc& f, int num_vars) {
  Polynomial out;
  for (const auto& [lambda, c] : f.terms()) {
    Polynomial term;
    if (f.basis() == Basis::Schur) {
      term = schur_polynomial(lambda, num_vars);
    } else {
      term[std::vector<int>(static_cast<std::size_t>(num_vars), 0)] = 1;
      for (int k : lambda.parts()) term = multiply(term, power_sum_polynomial(k, num_vars));
    }
    for (const auto& [e, v] : term) out[e] += c * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SymFunc schur_decompose(const Polynomial& f, int num_vars) {
  // Coefficients of the dominant monomials x^kappa, grouped by degree.
  std::map<int, std::map<Partition, Rational, std::greater<>>> by_degree;
  for (const auto& [e, c] : f) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
    by_degree[std::accumulate(e.begin(), e.end(), 0)][Partition::from_padded(e)] = c;
  }
  SymFunc out(Basis::Schur);
  for (auto& [deg, mono] : by_degree) {
    std::map<Partition, Rational, std::greater<>> found;
    for (const Partition& kappa : partitions_of(deg)) {
      if (kappa.length() > static_cast<std::size_t>(num_vars)) continue;
      Rational residual = mono.count(kappa) ? mono.at(kappa) : Rational(0);
      for (const auto& [lambda, c] : found) residual -= c * static_cast<long>(kostka_number(lambda, kappa));
      if (residual != 0) found[kappa] = residual;
    }
    for (const auto& [lambda, c] : found) out.add_term(lambda, c);
  }
  return out;
}

}  // namespace heisfock::oracle
