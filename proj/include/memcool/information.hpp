// Copyright 2026 The memcool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "memcool/errors.hpp"

namespace memcool {

/// Shannon entropy in nats, with 0 ln 0 = 0.
inline double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

/// I(S:L) = H(S) + H(L) - H(SL) for a diagonal SL state laid out with S as the
/// most significant index.
inline double mutual_information(std::span<const double> sl, std::size_t d_s,
                                 std::size_t d_l) {
  if (sl.size() != d_s * d_l) throw InvalidInput("SL vector size does not match d_S * d_L");
  std::vector<double> ps(d_s, 0.0);
  std::vector<double> pl(d_l, 0.0);
  for (std::size_t mu = 0; mu < d_s; ++mu) {
    for (std::size_t nu = 0; nu < d_l; ++nu) {
      ps[mu] += sl[mu * d_l + nu];
      pl[nu] += sl[mu * d_l + nu];
    }
  }
  return shannon_entropy(ps) + shannon_entropy(pl) - shannon_entropy(sl);
}

}  // namespace memcool
