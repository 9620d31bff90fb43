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

#ifndef RLDP_TYPES_HPP
#define RLDP_TYPES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rldp {

// Error hierarchy. Everything user-facing derives from Error so the CLI can
// map failures to exit codes uniformly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroMarginalError : public Error {
 public:
  using Error::Error;
};
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class EmptyDataError : public Error {
 public:
  using Error::Error;
};
class InfeasibleError : public Error {
 public:
  using Error::Error;
};
class DimensionCapError : public Error {
 public:
  using Error::Error;
};

// Joint alphabet X = S x U with |S| = a1, |U| = a2. Cells are flattened
// row-major with s outer and u inner; this is the single canonical index
// order used everywhere in the library.
struct Alphabet {
  int a1 = 0;
  int a2 = 0;

  Alphabet() = default;
  Alphabet(int s_size, int u_size) : a1(s_size), a2(u_size) {
    if (a1 < 2 || a2 < 1) {
      throw DomainError("Alphabet requires a1 >= 2 and a2 >= 1, got a1=" +
                        std::to_string(a1) + " a2=" + std::to_string(a2));
    }
  }

  int size() const { return a1 * a2; }
  int index(int s, int u) const { return s * a2 + u; }
  std::pair<int, int> split(int x) const { return {x / a2, x % a2}; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Probability mass function over X. Immutable after construction; entries are
// validated nonnegative and renormalized when the total is within 1e-9 of 1
// (larger deviations are rejected outright).
class JointDistribution {
 public:
  static constexpr double kIngestTolerance = 1e-9;

  JointDistribution(Alphabet alphabet, std::vector<double> mass);

  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(mass_.size()); }
  double operator[](int x) const { return mass_[x]; }
  double at(int s, int u) const { return mass_[alphabet_.index(s, u)]; }
  const std::vector<double>& mass() const { return mass_; }

  // P_s and P_u marginals.
  std::vector<double> marginal_s() const;
  std::vector<double> marginal_u() const;

 private:
  Alphabet alphabet_;
  std::vector<double> mass_;
};

// Left stochastic release protocol: matrix of conditional probabilities
// Q_{y|x} with every column (fixed x) summing to 1. Stored row-major by y.
class Channel {
 public:
  static constexpr double kIngestTolerance = 1e-9;

  Channel(int input_size, int output_size, std::vector<double> matrix,
          std::vector<std::string> output_labels = {});

  static Channel identity(int n);
  // Every column equal to the given output distribution (rank-one channel).
  static Channel constant(int input_size, std::vector<double> output_dist);

  int input_size() const { return input_size_; }
  int output_size() const { return output_size_; }
  double operator()(int y, int x) const { return matrix_[y * input_size_ + x]; }
  const std::vector<double>& matrix() const { return matrix_; }
  const std::vector<std::string>& output_labels() const { return labels_; }

  std::vector<double> column(int x) const;

 private:
  int input_size_ = 0;
  int output_size_ = 0;
  std::vector<double> matrix_;
  std::vector<std::string> labels_;
};

// P_{U|s}: the conditional distribution of U given S = s. Throws
// ZeroMarginalError when P_s = 0.
std::vector<double> conditional_given_s(const JointDistribution& p, int s);

// Output distribution (sum_x Q_{y|x} p_x)_y.
std::vector<double> push_forward(std::span<const double> p, const Channel& q);
std::vector<double> push_forward(const JointDistribution& p, const Channel& q);

// P(Y = y | S = s) = sum_u Q_{y|(s,u)} P_{u|s}.
std::vector<double> channel_given_s(const JointDistribution& p,
                                    const Channel& q, int s);

// Composition (r .. q): feed q's output into r. Used for data-processing
// checks and post-processing constructions.
Channel compose(const Channel& r, const Channel& q);

double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace rldp

#endif  // RLDP_TYPES_HPP
