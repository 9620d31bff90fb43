// Copyright 2026 The RLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rldp/types.hpp"

#include <cmath>
#include <numeric>

namespace rldp {

JointDistribution::JointDistribution(Alphabet alphabet,
                                     std::vector<double> mass)
    : alphabet_(alphabet), mass_(std::move(mass)) {
  if (static_cast<int>(mass_.size()) != alphabet_.size()) {
    throw DimensionMismatchError(
        "distribution has " + std::to_string(mass_.size()) +
        " entries, alphabet needs " + std::to_string(alphabet_.size()));
  }
  long double total = 0.0L;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (!(mass_[i] >= 0.0)) {
      throw InvariantViolationError("negative probability at cell " +
                                    std::to_string(i));
    }
    total += mass_[i];
  }
  const double sum = static_cast<double>(total);
  if (std::abs(sum - 1.0) > kIngestTolerance) {
    throw InvariantViolationError("probabilities sum to " +
                                  std::to_string(sum) + ", expected 1");
  }
  if (sum != 1.0) {
    for (double& v : mass_) v /= sum;
  }
}

std::vector<double> JointDistribution::marginal_s() const {
  std::vector<double> out(alphabet_.a1, 0.0);
  for (int s = 0; s < alphabet_.a1; ++s) {
    for (int u = 0; u < alphabet_.a2; ++u) out[s] += at(s, u);
  }
  return out;
}

std::vector<double> JointDistribution::marginal_u() const {
  std::vector<double> out(alphabet_.a2, 0.0);
  for (int s = 0; s < alphabet_.a1; ++s) {
    for (int u = 0; u < alphabet_.a2; ++u) out[u] += at(s, u);
  }
  return out;
}

Channel::Channel(int input_size, int output_size, std::vector<double> matrix,
                 std::vector<std::string> output_labels)
    : input_size_(input_size),
      output_size_(output_size),
      matrix_(std::move(matrix)),
      labels_(std::move(output_labels)) {
  if (input_size_ < 1 || output_size_ < 1) {
    throw DomainError("channel sizes must be positive");
  }
  if (matrix_.size() !=
      static_cast<std::size_t>(input_size_) * static_cast<std::size_t>(output_size_)) {
    throw DimensionMismatchError("channel matrix has wrong number of entries");
  }
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (!(matrix_[i] >= 0.0)) {
      throw InvariantViolationError(
          "negative channel entry at (y=" +
          std::to_string(i / input_size_) + ", x=" +
          std::to_string(i % input_size_) + ")");
    }
  }
  for (int x = 0; x < input_size_; ++x) {
    long double colsum = 0.0L;
    for (int y = 0; y < output_size_; ++y) colsum += (*this)(y, x);
    const double sum = static_cast<double>(colsum);
    if (std::abs(sum - 1.0) > kIngestTolerance) {
      throw InvariantViolationError("column " + std::to_string(x) +
                                    " sums to " + std::to_string(sum) +
                                    ", expected 1");
    }
    if (sum != 1.0) {
      for (int y = 0; y < output_size_; ++y) matrix_[y * input_size_ + x] /= sum;
    }
  }
  if (labels_.empty()) {
    labels_.reserve(output_size_);
    for (int y = 0; y < output_size_; ++y) labels_.push_back("y" + std::to_string(y));
  } else if (static_cast<int>(labels_.size()) != output_size_) {
    throw DimensionMismatchError("label count does not match output size");
  }
}

Channel Channel::identity(int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return Channel(n, n, std::move(m));
}

Channel Channel::constant(int input_size, std::vector<double> output_dist) {
  const int b = static_cast<int>(output_dist.size());
  std::vector<double> m(static_cast<std::size_t>(b) * input_size);
  for (int y = 0; y < b; ++y) {
    for (int x = 0; x < input_size; ++x) m[y * input_size + x] = output_dist[y];
  }
  return Channel(input_size, b, std::move(m));
}

std::vector<double> Channel::column(int x) const {
  std::vector<double> col(output_size_);
  for (int y = 0; y < output_size_; ++y) col[y] = (*this)(y, x);
  return col;
}

std::vector<double> conditional_given_s(const JointDistribution& p, int s) {
  const Alphabet& al = p.alphabet();
  long double ps = 0.0L;
  for (int u = 0; u < al.a2; ++u) ps += p.at(s, u);
  if (ps <= 0.0L) {
    throw ZeroMarginalError("P_s = 0 for s = " + std::to_string(s));
  }
  std::vector<double> out(al.a2);
  for (int u = 0; u < al.a2; ++u) out[u] = static_cast<double>(p.at(s, u) / ps);
  return out;
}

std::vector<double> push_forward(std::span<const double> p, const Channel& q) {
  if (static_cast<int>(p.size()) != q.input_size()) {
    throw DimensionMismatchError("push_forward: channel input size " +
                                 std::to_string(q.input_size()) +
                                 " != distribution size " +
                                 std::to_string(p.size()));
  }
  std::vector<double> out(q.output_size());
  for (int y = 0; y < q.output_size(); ++y) {
    long double acc = 0.0L;
    for (int x = 0; x < q.input_size(); ++x) acc += q(y, x) * p[x];
    out[y] = static_cast<double>(acc);
  }
  return out;
}

std::vector<double> push_forward(const JointDistribution& p, const Channel& q) {
  return push_forward(std::span<const double>(p.mass()), q);
}

std::vector<double> channel_given_s(const JointDistribution& p,
                                    const Channel& q, int s) {
  if (q.input_size() != p.size()) {
    throw DimensionMismatchError("channel_given_s: size mismatch");
  }
  const std::vector<double> cond = conditional_given_s(p, s);
  const Alphabet& al = p.alphabet();
  std::vector<double> out(q.output_size());
  for (int y = 0; y < q.output_size(); ++y) {
    long double acc = 0.0L;
    for (int u = 0; u < al.a2; ++u) acc += q(y, al.index(s, u)) * cond[u];
    out[y] = static_cast<double>(acc);
  }
  return out;
}

Channel compose(const Channel& r, const Channel& q) {
  if (r.input_size() != q.output_size()) {
    throw DimensionMismatchError("compose: inner sizes do not match");
  }
  std::vector<double> m(static_cast<std::size_t>(r.output_size()) * q.input_size());
  for (int z = 0; z < r.output_size(); ++z) {
    for (int x = 0; x < q.input_size(); ++x) {
      long double acc = 0.0L;
      for (int y = 0; y < q.output_size(); ++y) acc += r(z, y) * q(y, x);
      m[z * q.input_size() + x] = static_cast<double>(acc);
    }
  }
  return Channel(q.input_size(), r.output_size(), std::move(m));
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("l1_distance: size mismatch");
  }
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return static_cast<double>(acc);
}

}  // namespace rldp
