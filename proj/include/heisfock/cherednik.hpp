#pragma once

#include <map>
#include <optional>
#include <vector>

#include "heisfock/fock.hpp"
#include "heisfock/partition.hpp"
#include "heisfock/rational.hpp"

namespace heisfock {

/// The parameter lambda = a/b with gcd(|a|, b) = 1 and b >= 1.
class ParamLambda {
 public:
  /// Throws InvalidInput unless b >= 1 and gcd(|a|, b) = 1.
  ParamLambda(long a, long b);

  long a() const noexcept { return a_; }
  long b() const noexcept { return b_; }
  Rational value() const { return make_rational(a_, b_); }

  friend bool operator==(const ParamLambda&, const ParamLambda&) = default;

 private:
  long a_;
  long b_;
};

/// Graded simple L(eta, m); m lies in (1/b)Z.
struct SimpleLabel {
  Partition eta;
  Rational m;

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
  friend auto operator<=>(const SimpleLabel& x, const SimpleLabel& y) {
    if (auto c = x.eta <=> y.eta; c != 0) return c;
    return x.m < y.m ? std::strong_ordering::less : (x.m == y.m ? std::strong_ordering::equal : std::strong_ordering::greater);
  }
};

struct LabelImage {
  SimpleLabel label;
  long long multiplicity;

  friend bool operator==(const LabelImage&, const LabelImage&) = default;
};

/// Multiset of labels, sorted by partition in the canonical (descending) order.
using LabelMultiset = std::vector<LabelImage>;

/// Block (alpha, sigma): alpha in F_p, sigma in (1/b)Z / Z represented in [0,1).
struct BlockId {
  long long alpha;
  Rational sigma;

  friend bool operator==(const BlockId&, const BlockId&) = default;
};

/// lambda in {-a'/b' : 0 < a' < b' <= n}.
bool sigma_forbidden(const ParamLambda& lambda, int n);

/// c_eta = d_eta - lambda * cont(eta).
Rational lowest_eu_eigenvalue(const Partition& eta, const ParamLambda& lambda);

/// n lambda - n(n-1)/2.
Rational euler_relation_scalar(int n, const ParamLambda& lambda);

/// |eta'| - |eta| = d b and c_{eta'} - c_eta - d a(b-1)/2 is an integer.
bool eu_equivalent(const Partition& eta1, const Partition& eta2, const ParamLambda& lambda);

/// sigma + a(b-1)/2 split into a residue in [0,1) and the integer carried out.
FractionalSplit block_shift(const Rational& sigma, const ParamLambda& lambda);

/// The label of the preferred graded lift: m = c_eta.
SimpleLabel preferred_lift(const Partition& eta, const ParamLambda& lambda);

/// m - c_eta: how far a label sits from its preferred lift.
Rational grading_offset(const SimpleLabel& label, const ParamLambda& lambda);

/// Block containing L(eta, m) in characteristic p. Throws InvalidInput if p is
/// not a prime or divides the denominator of c_eta - m.
BlockId block_of(const SimpleLabel& label, const ParamLambda& lambda, long long p);

/// L <= L' in the standardly stratified preorder: ld(L) >= ld(L') - a N (N-1).
bool stratification_preceq(const Rational& ld1, const Rational& ld2, const ParamLambda& lambda, int big_n);

/// The gap condition between two simples of one block: if |m - m'| <= 2 a N (N-1)
/// then c_eta - m = c_eta' - m'. Returns whether the condition holds for this pair.
bool gap_condition_holds(const SimpleLabel& l1, const SimpleLabel& l2, const ParamLambda& lambda, int big_n);

/// Image of a graded simple under the positive-parameter Heisenberg functor for
/// tau. Throws InvalidParam unless lambda > 0.
LabelMultiset simple_image_pos(const SimpleLabel& label, const Partition& tau, const ParamLambda& lambda);

/// Negative-parameter label map, the transpose conjugate of simple_image_pos
/// with tau replaced by tau^t. Throws InvalidParam unless lambda_minus < -1.
LabelMultiset simple_image_neg(const SimpleLabel& label, const Partition& tau, const ParamLambda& lambda_minus);

/// |mu| + |tau| for (mu, tau) = coprime_decompose(eta, b). Needs b >= 2.
int support_dim(const Partition& eta, int b);

struct SupportStratum {
  int k;
  int l;
  int dim;
  friend bool operator==(const SupportStratum&, const SupportStratum&) = default;
};

/// All (k, l) with k + b l = n, in decreasing k.
std::vector<SupportStratum> possible_supports(int n, int b);

/// Integer interval [lo, hi]; an empty optional means unbounded on that side.
struct StabilityInterval {
  std::optional<long long> lo;
  std::optional<long long> hi;
  friend bool operator==(const StabilityInterval&, const StabilityInterval&) = default;
};

/// Residues a/b mod p for 0 < -a < b <= n. Needs p prime and p > n.
std::vector<long long> singular_residues(long long p, int n);

/// Maximal integer interval around z free of integers reducing into the
/// singular residues. Throws OnWall if z itself is a wall.
StabilityInterval p_stability_interval(long long z, long long p, int n);

/// q^shift * sum_d coeffs[d] q^d.
struct HilbertSeries {
  Rational shift;
  std::vector<Integer> coeffs;
};

/// Graded dimension of Hom_{S_n}(eta, C[x_1..x_n]_d) for d <= max_deg, shifted by m.
HilbertSeries verma_hilbert(const Partition& eta, const Rational& m, int max_deg);

/// Class of L^gr(eta) in the Verma basis, built from the class of its coprime
/// part by the graded Heisenberg operator. The output is shifted so that its
/// leading term (lowest v-order, then largest partition) has v-exponent 0.
FockVector character_pipeline(const Partition& eta, const ParamLambda& lambda, long long p,
                              const std::map<Partition, FockVector>& coprime_table, unsigned jobs = 1);

/// Leading term used by character_pipeline: lowest v-exponent, then the
/// lexicographically largest partition carrying it.
std::pair<Partition, Rational> leading_term(const FockVector& x);

}  // namespace heisfock
