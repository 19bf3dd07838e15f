#include "heisfock/partition.hpp"

#include <algorithm>
#include <numeric>

#include "heisfock/errors.hpp"

namespace heisfock {

namespace {

bool weakly_decreasing_positive(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing_positive(parts_)) {
    std::string text = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) text += ",";
      text += std::to_string(parts_[i]);
    }
    throw Error(ErrorKind::InvalidInput, "not a canonical partition: " + text + "]");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_padded(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!weakly_decreasing_positive(parts)) {
    throw Error(ErrorKind::NotAPartition, "sequence is not weakly decreasing and positive");
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  // Descending lexicographic: try the largest first part first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      self(self, remaining - k, k);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long content_sum(const Partition& eta) {
  long long total = 0;
  for (std::size_t i = 0; i < eta.length(); ++i) {
    const long long row = static_cast<long long>(i) + 1;
    const long long len = eta.part(i);
    // sum_{j=1}^{len} (j - row)
    total += len * (len + 1) / 2 - row * len;
  }
  return total;
}

long long d_stat(const Partition& eta) {
  long long total = 0;
  for (std::size_t i = 1; i < eta.length(); ++i) total += static_cast<long long>(i) * eta.part(i);
  return total;
}

Partition transpose(const Partition& eta) {
  if (eta.empty()) return {};
  std::vector<int> t(static_cast<std::size_t>(eta.part(0)), 0);
  for (int row : eta.parts()) {
    for (int j = 0; j < row; ++j) ++t[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(t));
}

Partition partwise_add(const Partition& mu, int b, const Partition& tau) {
  if (b < 1) throw Error(ErrorKind::InvalidInput, "partwise_add: b must be positive");
  const std::size_t len = std::max(mu.length(), tau.length());
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = mu.part(i) + b * tau.part(i);
  return Partition::from_padded(std::move(out));
}

bool is_coprime(const Partition& eta, int b) {
  if (b < 1) throw Error(ErrorKind::InvalidInput, "is_coprime: b must be positive");
  for (std::size_t h = 0; h < eta.length(); ++h) {
    if (eta.part(h) - eta.part(h + 1) >= b) return false;
  }
  return true;
}

std::pair<Partition, Partition> coprime_decompose(const Partition& eta, int b) {
  if (b < 1) throw Error(ErrorKind::InvalidInput, "coprime_decompose: b must be positive");
  const std::size_t len = eta.length();
  std::vector<int> tau(len, 0);
  int running = 0;
  for (std::size_t i = len; i-- > 0;) {
    running += (eta.part(i) - eta.part(i + 1)) / b;
    tau[i] = running;
  }
  std::vector<int> mu(len);
  for (std::size_t i = 0; i < len; ++i) mu[i] = eta.part(i) - b * tau[i];
  return {Partition::from_padded(std::move(mu)), Partition::from_padded(std::move(tau))};
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

}  // namespace heisfock
