#include "heisfock/strips.hpp"

#include <algorithm>

#include "heisfock/errors.hpp"

namespace heisfock {

namespace {

// Beta-set of mu padded to `rows` rows: beta_i = mu_i + rows - 1 - i (strictly decreasing).
std::vector<int> beta_set(const Partition& mu, std::size_t rows) {
  std::vector<int> beta(rows);
  for (std::size_t i = 0; i < rows; ++i) beta[i] = mu.part(i) + static_cast<int>(rows - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const std::size_t rows = beta.size();
  std::vector<int> parts(rows);
  for (std::size_t i = 0; i < rows; ++i) parts[i] = beta[i] - static_cast<int>(rows - 1 - i);
  return Partition::from_padded(std::move(parts));
}

// Moves one bead by `shift` (positive adds a strip, negative removes one). The
// number of beads jumped over is the leg length of the strip.
std::vector<StripMove> move_beads(const Partition& mu, int shift, std::size_t rows) {
  const std::vector<int> beta = beta_set(mu, rows);
  std::vector<StripMove> out;
  for (std::size_t idx = 0; idx < rows; ++idx) {
    const int from = beta[idx];
    const int to = from + shift;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    const int lo = std::min(from, to);
    const int hi = std::max(from, to);
    int between = 0;
    for (int x : beta) between += (x > lo && x < hi) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[idx] = to;
    out.push_back({from_beta(std::move(moved)), (between % 2 == 0) ? 1 : -1});
  }
  std::sort(out.begin(), out.end(),
            [](const StripMove& a, const StripMove& b) { return a.result > b.result; });
  return out;
}

}  // namespace

std::vector<StripMove> add_border_strips(const Partition& mu, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "border strip size must be positive");
  return move_beads(mu, k, mu.length() + static_cast<std::size_t>(k));
}

std::vector<StripMove> remove_border_strips(const Partition& lambda, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "border strip size must be positive");
  return move_beads(lambda, -k, lambda.length());
}

std::vector<Partition> add_horizontal_strips(const Partition& mu, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "horizontal strip size must be nonnegative");
  std::vector<Partition> out;
  const std::size_t rows = mu.length() + 1;
  std::vector<int> lambda(rows);
  auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
    if (row == rows) {
      if (remaining == 0) out.push_back(Partition::from_padded(lambda));
      return;
    }
    // Row `row` may grow up to the old length of the row above it.
    const int cap = row == 0 ? remaining : std::min(remaining, mu.part(row - 1) - mu.part(row));
    for (int add = cap; add >= 0; --add) {
      lambda[row] = mu.part(row) + add;
      self(self, row + 1, remaining - add);
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace heisfock
