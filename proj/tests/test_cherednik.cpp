#include "doctest.h"

#include <map>

#include "heisfock/cherednik.hpp"
#include "heisfock/errors.hpp"
#include "heisfock/fock.hpp"
#include "heisfock/lr.hpp"
#include "heisfock/oracle/oracle.hpp"

using namespace heisfock;

namespace {

std::vector<Partition> up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    for (const Partition& p : partitions_of(k)) out.push_back(p);
  }
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

std::vector<Partition> labels(const LabelMultiset& images) {
  std::vector<Partition> out;
  for (const auto& img : images) out.push_back(img.label.eta);
  return out;
}

}  // namespace

TEST_CASE("ParamLambda validation") {
  CHECK(ParamLambda(3, 2).value() == make_rational(3, 2));
  CHECK(kind_of([] { ParamLambda(2, 4); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { ParamLambda(1, 0); }) == ErrorKind::InvalidInput);
  CHECK_NOTHROW(ParamLambda(-5, 3));
}

TEST_CASE("sigma_forbidden examples") {
  CHECK_FALSE(sigma_forbidden(ParamLambda(1, 2), 3));
  CHECK(sigma_forbidden(ParamLambda(-1, 2), 3));
  CHECK_FALSE(sigma_forbidden(ParamLambda(-1, 2), 1));
  CHECK(sigma_forbidden(ParamLambda(-2, 3), 3));
  CHECK_FALSE(sigma_forbidden(ParamLambda(-2, 3), 2));
  CHECK_FALSE(sigma_forbidden(ParamLambda(-3, 2), 5));
}

TEST_CASE("lowest_eu_eigenvalue examples") {
  const ParamLambda half(1, 2);
  CHECK(lowest_eu_eigenvalue(Partition{2}, half) == make_rational(-1, 2));
  CHECK(lowest_eu_eigenvalue(Partition{1, 1}, half) == make_rational(3, 2));
  for (int n = 1; n <= 6; ++n) {
    const ParamLambda lambda(2, 3);
    CHECK(lowest_eu_eigenvalue(Partition({n}), lambda) == -lambda.value() * (n * (n - 1) / 2));
  }
}

TEST_CASE("euler_relation_scalar examples") {
  CHECK(euler_relation_scalar(1, ParamLambda(5, 3)) == make_rational(5, 3));
  CHECK(euler_relation_scalar(3, ParamLambda(1, 3)) == -2);
  CHECK(euler_relation_scalar(2, ParamLambda(1, 2)) == 0);
}

TEST_CASE("eu_equivalent examples") {
  CHECK(eu_equivalent(Partition{2, 1}, Partition{2, 1}, ParamLambda(1, 2)));
  CHECK(eu_equivalent(Partition{1}, Partition{3}, ParamLambda(1, 2)));
  CHECK_FALSE(eu_equivalent(Partition{1}, Partition{2}, ParamLambda(1, 2)));
}

TEST_CASE("eu_equivalent is an equivalence relation") {
  for (const ParamLambda& lambda : {ParamLambda(1, 2), ParamLambda(2, 3)}) {
    const std::vector<Partition> all = up_to(10);
    // Reflexivity and symmetry over all pairs; transitivity by checking that
    // the relation is a union of cliques.
    std::vector<int> cls(all.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(eu_equivalent(all[i], all[i], lambda));
      if (cls[i] < 0) cls[i] = next++;
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        const bool ij = eu_equivalent(all[i], all[j], lambda);
        REQUIRE(ij == eu_equivalent(all[j], all[i], lambda));
        if (ij) {
          if (cls[j] < 0) cls[j] = cls[i];
          REQUIRE(cls[j] == cls[i]);
        } else {
          REQUIRE((cls[j] < 0 || cls[j] != cls[i]));
        }
      }
    }
  }
}

TEST_CASE("block_shift examples") {
  const FractionalSplit s = block_shift(0, ParamLambda(3, 2));
  CHECK(s.residue == make_rational(1, 2));
  CHECK(s.carry == 1);
  const FractionalSplit t = block_shift(make_rational(2, 5), ParamLambda(7, 1));
  CHECK(t.residue == make_rational(2, 5));
  CHECK(t.carry == 0);
  const FractionalSplit u = block_shift(0, ParamLambda(1, 3));
  CHECK(u.residue == 0);
  CHECK(u.carry == 1);
}

TEST_CASE("simple_image_pos examples") {
  const ParamLambda l2(1, 2);
  const LabelMultiset a = simple_image_pos(preferred_lift(Partition{1}, l2), Partition{1}, l2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].label == preferred_lift(Partition{3}, l2));
  CHECK(a[0].multiplicity == 1);

  const ParamLambda l3(1, 3);
  const LabelMultiset b = simple_image_pos(preferred_lift(Partition{3}, l3), Partition{1}, l3);
  CHECK(labels(b) == std::vector<Partition>{{6}, {3, 3}});
  for (const auto& img : b) {
    CHECK(img.multiplicity == 1);
    CHECK(img.label == preferred_lift(img.label.eta, l3));
  }

  const SimpleLabel shifted{Partition{2, 1}, lowest_eu_eigenvalue(Partition{2, 1}, l2) + 3};
  const LabelMultiset c = simple_image_pos(shifted, Partition{}, l2);
  REQUIRE(c.size() == 1);
  CHECK(c[0].label == shifted);

  // The grading offset travels with the label.
  const LabelMultiset d = simple_image_pos(shifted, Partition{1}, l2);
  for (const auto& img : d) CHECK(grading_offset(img.label, l2) == 3);

  CHECK(kind_of([&] { simple_image_pos(preferred_lift(Partition{1}, ParamLambda(-1, 2)), Partition{1}, ParamLambda(-1, 2)); }) ==
        ErrorKind::InvalidParam);
}

TEST_CASE("simple_image_pos composition matches LR-weighted application") {
  for (const ParamLambda& lambda : {ParamLambda(1, 2), ParamLambda(1, 3)}) {
    for (const Partition& eta : up_to(6)) {
      const SimpleLabel start = preferred_lift(eta, lambda);
      for (const Partition& t1 : up_to(2)) {
        for (const Partition& t2 : up_to(2)) {
          std::map<SimpleLabel, long long> lhs;
          for (const auto& x : simple_image_pos(start, t1, lambda)) {
            for (const auto& y : simple_image_pos(x.label, t2, lambda)) lhs[y.label] += x.multiplicity * y.multiplicity;
          }
          std::map<SimpleLabel, long long> rhs;
          for (const auto& [tau, c] : schur_product(t1, t2)) {
            for (const auto& y : simple_image_pos(start, tau, lambda)) rhs[y.label] += c * y.multiplicity;
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("simple_image_pos outputs stay in one block") {
  for (const ParamLambda& lambda : {ParamLambda(1, 2), ParamLambda(3, 2), ParamLambda(2, 3)}) {
    const int b = static_cast<int>(lambda.b());
    for (const Partition& eta : up_to(6)) {
      for (const Partition& tau : up_to(3)) {
        const LabelMultiset out = simple_image_pos(preferred_lift(eta, lambda), tau, lambda);
        for (const auto& x : out) {
          CHECK(x.label.eta.size() == eta.size() + b * tau.size());
          CHECK(eu_equivalent(eta, x.label.eta, lambda));
          for (const auto& y : out) CHECK(eu_equivalent(x.label.eta, y.label.eta, lambda));
        }
      }
    }
  }
}

TEST_CASE("simple_image_neg examples") {
  const ParamLambda lm(-3, 2);
  const LabelMultiset a = simple_image_neg(preferred_lift(Partition{1}, lm), Partition{1}, lm);
  REQUIRE(a.size() == 1);
  CHECK(a[0].label.eta == Partition{1, 1, 1});
  const SimpleLabel x = preferred_lift(Partition{2, 1}, lm);
  const LabelMultiset b = simple_image_neg(x, Partition{}, lm);
  REQUIRE(b.size() == 1);
  CHECK(b[0].label == x);
  // (2,2) is not coprime to 2, so the general rule applies.
  const LabelMultiset c = simple_image_neg(preferred_lift(Partition{2, 2}, lm), Partition{1}, lm);
  CHECK(labels(c) == std::vector<Partition>{{3, 3}, {2, 2, 1, 1}});
  for (const auto& img : c) CHECK(img.multiplicity == 1);
  CHECK(kind_of([] { simple_image_neg(preferred_lift(Partition{1}, ParamLambda(-1, 2)), Partition{1}, ParamLambda(-1, 2)); }) ==
        ErrorKind::InvalidParam);
  CHECK_NOTHROW(simple_image_neg(preferred_lift(Partition{1}, ParamLambda(-2, 1)), Partition{1}, ParamLambda(-2, 1)));
}

TEST_CASE("support_dim examples") {
  CHECK(support_dim(Partition{3, 3, 1}, 3) == 7);
  CHECK(support_dim(Partition{4, 1}, 3) == 3);
  for (int b = 2; b <= 5; ++b) CHECK(support_dim(Partition({b}), b) == 1);
  for (int b : {2, 3}) {
    for (const Partition& mu : up_to(8)) {
      if (!is_coprime(mu, b)) continue;
      for (const Partition& tau : up_to(3)) CHECK(support_dim(partwise_add(mu, b, tau), b) == mu.size() + tau.size());
    }
  }
}

TEST_CASE("possible_supports examples") {
  CHECK(possible_supports(5, 2) == std::vector<SupportStratum>{{5, 0, 5}, {3, 1, 4}, {1, 2, 3}});
  CHECK(possible_supports(2, 3) == std::vector<SupportStratum>{{2, 0, 2}});
  for (int b = 2; b <= 5; ++b) CHECK(possible_supports(b, b) == std::vector<SupportStratum>{{b, 0, b}, {0, 1, 1}});
  CHECK_THROWS_AS(possible_supports(4, 1), Error);
}

TEST_CASE("p_stability_interval examples") {
  CHECK(p_stability_interval(5, 7, 1) == StabilityInterval{});
  CHECK(singular_residues(7, 2) == std::vector<long long>{3});
  CHECK(p_stability_interval(0, 7, 2) == StabilityInterval{-3, 2});
  CHECK(kind_of([] { p_stability_interval(3, 7, 2); }) == ErrorKind::OnWall);
  CHECK(kind_of([] { p_stability_interval(-4, 7, 2); }) == ErrorKind::OnWall);
  // Walls at 3 and 10; 4 sits next to the wall at 3.
  CHECK(p_stability_interval(4, 7, 2) == StabilityInterval{4, 9});
  CHECK(kind_of([] { p_stability_interval(0, 8, 2); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { p_stability_interval(0, 3, 3); }) == ErrorKind::InvalidParam);
}

TEST_CASE("p_stability_interval avoids every wall") {
  for (long long p : {5LL, 7LL, 11LL}) {
    for (int n = 2; n < p && n <= 5; ++n) {
      const auto residues = singular_residues(p, n);
      auto is_wall = [&](long long z) {
        const long long r = ((z % p) + p) % p;
        return std::find(residues.begin(), residues.end(), r) != residues.end();
      };
      for (long long z = -20; z <= 20; ++z) {
        if (is_wall(z)) continue;
        const StabilityInterval iv = p_stability_interval(z, p, n);
        REQUIRE(iv.lo.has_value());
        REQUIRE(iv.hi.has_value());
        CHECK(*iv.lo <= z);
        CHECK(z <= *iv.hi);
        for (long long w = *iv.lo; w <= *iv.hi; ++w) CHECK_FALSE(is_wall(w));
        CHECK(is_wall(*iv.lo - 1));
        CHECK(is_wall(*iv.hi + 1));
      }
    }
  }
}

TEST_CASE("verma_hilbert examples") {
  const HilbertSeries one = verma_hilbert(Partition{1}, 0, 5);
  CHECK(one.coeffs == std::vector<Integer>(6, 1));
  const HilbertSeries two = verma_hilbert(Partition{2}, 0, 6);
  CHECK(two.coeffs == std::vector<Integer>{1, 1, 2, 2, 3, 3, 4});
  CHECK(verma_hilbert(Partition{2, 1}, make_rational(1, 2), 2).shift == make_rational(1, 2));
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& eta : partitions_of(n)) {
      const HilbertSeries s = verma_hilbert(eta, 0, 6);
      for (int d = 0; d <= 6; ++d) CHECK(s.coeffs[static_cast<std::size_t>(d)] == oracle::polynomial_ring_multiplicity(eta, d));
    }
  }
  for (const Partition& eta : up_to(8)) {
    if (eta.empty()) continue;
    const long long d = d_stat(eta);
    const HilbertSeries s = verma_hilbert(eta, 0, static_cast<int>(d));
    for (long long k = 0; k < d; ++k) CHECK(s.coeffs[static_cast<std::size_t>(k)] == 0);
    CHECK(s.coeffs[static_cast<std::size_t>(d)] == 1);
  }
}

TEST_CASE("block bookkeeping") {
  const ParamLambda lambda(1, 2);
  const SimpleLabel x = preferred_lift(Partition{2, 1}, lambda);
  CHECK(grading_offset(x, lambda) == 0);
  const BlockId blk = block_of(x, lambda, 5);
  CHECK(blk.alpha == 0);
  CHECK(blk.sigma == 0);
  CHECK(block_of(preferred_lift(Partition{2}, lambda), lambda, 5).sigma == make_rational(1, 2));
  CHECK(block_of(SimpleLabel{Partition{2, 1}, x.m + 1}, lambda, 5).alpha == 4);
  CHECK(stratification_preceq(0, 1, lambda, 2));
  CHECK_FALSE(stratification_preceq(-3, 0, ParamLambda(1, 1), 2));
  CHECK(gap_condition_holds(x, x, lambda, 2));
  CHECK_FALSE(gap_condition_holds(x, SimpleLabel{Partition{2, 1}, x.m + 1}, lambda, 2));
}

TEST_CASE("character_pipeline") {
  const ParamLambda lambda(1, 2);
  std::map<Partition, FockVector> table;
  table[Partition{}] = FockVector::vacuum();
  table[Partition{1}] = FockVector::basis(Partition{1});
  // Coprime input: table entry unchanged.
  CHECK(character_pipeline(Partition{1}, lambda, 5, table) == table[Partition{1}]);
  // eta = (b): (1 - v^{bp}) p_b on the vacuum.
  const FockVector got = character_pipeline(Partition{2}, lambda, 5, table);
  CHECK(got == heis_modp(Partition{1}, 2, 5, FockVector::vacuum()));
  CHECK(leading_term(got) == std::pair{Partition{2}, Rational(0)});
  CHECK(kind_of([&] { character_pipeline(Partition{2, 1}, lambda, 5, table); }) == ErrorKind::MissingTable);
  for (int b : {2, 3}) {
    const ParamLambda lb(1, b);
    std::map<Partition, FockVector> tab;
    for (const Partition& mu : up_to(8)) {
      if (is_coprime(mu, b)) tab[mu] = FockVector::basis(mu);
    }
    for (const Partition& eta : up_to(8)) {
      const FockVector out = character_pipeline(eta, lb, 7, tab);
      const auto [lead, exponent] = leading_term(out);
      CHECK(exponent == 0);
      const Rational c = out.coefficient(lead).coefficient(0);
      CHECK((c == 1 || c == -1));
      CHECK(character_pipeline(eta, lb, 7, tab, 4) == out);
    }
  }
}
