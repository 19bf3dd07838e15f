#pragma once

#include <utility>
#include <vector>

#include "heisfock/partition.hpp"

namespace heisfock {

/// A border strip added to (or removed from) a partition, with the
/// Murnaghan-Nakayama sign (-1)^(height).
struct StripMove {
  Partition result;
  int sign;
};

/// All lambda such that lambda / mu is a border strip of k cells.
std::vector<StripMove> add_border_strips(const Partition& mu, int k);

/// All nu such that lambda / nu is a border strip of k cells.
std::vector<StripMove> remove_border_strips(const Partition& lambda, int k);

/// All lambda such that lambda / mu is a horizontal strip of k cells (Pieri rule).
std::vector<Partition> add_horizontal_strips(const Partition& mu, int k);

}  // namespace heisfock
