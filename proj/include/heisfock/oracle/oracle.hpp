#pragma once

// Brute-force reference computations. Nothing in here calls the production
// kernels it is meant to check (strip moves, Pieri/LR, Murnaghan-Nakayama,
// the closed-form coprime decomposition); only the plain data types are shared.

#include <map>
#include <utility>
#include <vector>

#include "heisfock/partition.hpp"
#include "heisfock/rational.hpp"
#include "heisfock/schar.hpp"
#include "heisfock/symfunc.hpp"

namespace heisfock::oracle {

/// Every (mu, tau) with eta = mu + b tau, mu a partition admitting no further
/// nonempty decomposition, found by scanning all tau with |tau| <= |eta| / b.
std::vector<std::pair<Partition, Partition>> exhaustive_coprime_decompositions(const Partition& eta, int b);

/// True iff there is no nonempty tau with eta - b tau a partition.
bool coprime_by_search(const Partition& eta, int b);

/// Character table of S_n from Young permutation characters and Gram-Schmidt
/// in dominance-compatible order. Same row/column order as character_table().
CharacterTable young_gram_schmidt_table(int n);

/// Number of Littlewood-Richardson tableaux of shape lambda / mu and content nu.
long long lr_tableaux_count(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of semistandard tableaux of shape lambda and content kappa.
long long kostka_number(const Partition& lambda, const Partition& kappa);

/// Character of Lambda^i C^d from explicit permutation matrices, decomposed with
/// the Gram-Schmidt table.
VirtualRep exterior_power_by_matrices(int d, int i);

/// Exterior-power character on each class (columns as in the tables above).
std::vector<long long> exterior_power_character_by_matrices(int d, int i);

/// dim Hom_{S_n}(eta, C[x_1..x_n]_deg) by enumerating monomials.
Integer polynomial_ring_multiplicity(const Partition& eta, int deg);

/// Dense-ish polynomial in N variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

Polynomial schur_polynomial(const Partition& lambda, int num_vars);
Polynomial power_sum_polynomial(int k, int num_vars);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
/// f(x_1^b, ..., x_N^b).
Polynomial substitute_powers(const Polynomial& f, int b);
/// Expands a Schur- or power-sum-basis function as a polynomial in N variables.
Polynomial expand(const SymFunc& f, int num_vars);

/// Schur expansion of a symmetric polynomial, read off its dominant monomials
/// with Kostka triangularity. Exact when N is at least the degree.
SymFunc schur_decompose(const Polynomial& f, int num_vars);

}  // namespace heisfock::oracle
