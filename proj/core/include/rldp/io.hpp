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

#ifndef RLDP_IO_HPP
#define RLDP_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "rldp/types.hpp"

namespace rldp {

// Distribution files carry the pmf plus optional provenance written by the
// fit command (category labels and the sample count behind the estimate).
struct DistributionFile {
  JointDistribution dist;
  std::vector<std::string> s_labels;  // empty when not fitted from data
  std::vector<std::string> u_labels;
  std::optional<long> n;
};

std::string serialize_distribution(const JointDistribution& p,
                                   const std::vector<std::string>& s_labels = {},
                                   const std::vector<std::string>& u_labels = {},
                                   std::optional<long> n = std::nullopt);
DistributionFile deserialize_distribution(const std::string& text);

std::string serialize_channel(const Channel& q);
Channel deserialize_channel(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

DistributionFile load_distribution(const std::string& path);
Channel load_channel(const std::string& path);

}  // namespace rldp

#endif  // RLDP_IO_HPP
