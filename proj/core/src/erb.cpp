// Copyright 2026 The mpgtf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpgtf/erb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mpgtf {

namespace {

constexpr double kMinBandwidthHz = 24.7;
constexpr double kScaleFactor = 9.265;
// 24.7 * 9.265, the corner frequency of the log warp.
constexpr double kCornerHz = kMinBandwidthHz * kScaleFactor;

void require_non_negative(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::domain_error(std::string(what) + " must be finite and >= 0, got " +
                            std::to_string(value));
  }
}

}  // namespace

double erb_bandwidth_hz(double fc_hz) {
  require_non_negative(fc_hz, "center frequency");
  return kMinBandwidthHz + fc_hz / kScaleFactor;
}

double hz_to_erbscale(double f_hz) {
  require_non_negative(f_hz, "frequency");
  return kScaleFactor * std::log1p(f_hz / kCornerHz);
}

double erbscale_to_hz(double erbscale) {
  require_non_negative(erbscale, "ERB-scale value");
  return kCornerHz * std::expm1(erbscale / kScaleFactor);
}

double next_center_frequency(double f0_hz) {
  return erbscale_to_hz(hz_to_erbscale(f0_hz) + 1.0);
}

std::vector<double> center_frequencies(double f_low_hz, double f_high_hz) {
  if (!std::isfinite(f_low_hz) || !std::isfinite(f_high_hz) || f_low_hz <= 0.0) {
    throw std::domain_error("center_frequencies: f_low must be finite and > 0");
  }
  if (f_low_hz > f_high_hz) {
    throw std::domain_error("center_frequencies: f_low exceeds f_high");
  }
  std::vector<double> freqs{f_low_hz};
  for (;;) {
    const double next = next_center_frequency(freqs.back());
    if (next > f_high_hz) break;
    freqs.push_back(next);
  }
  return freqs;
}

}  // namespace mpgtf
