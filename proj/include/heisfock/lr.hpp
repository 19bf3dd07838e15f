#pragma once

#include "heisfock/partition.hpp"

namespace heisfock {

/// s_nu expanded in complete homogeneous functions: keys alpha stand for
/// h_alpha = h_{alpha_1} h_{alpha_2} ...  Memoized.
const PartitionMap<long long>& schur_in_h_basis(const Partition& nu);

/// s_mu * s_nu in the Schur basis, computed by applying the Pieri rule for each
/// h-factor of s_nu. The coefficients are Littlewood-Richardson numbers.
const PartitionMap<long long>& schur_product(const Partition& mu, const Partition& nu);

/// c^lambda_{mu nu}.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace heisfock
