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

#include "mpgtf/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpgtf {

double si_snr_db(std::span<const double> estimate, std::span<const double> reference) {
  if (estimate.size() != reference.size()) {
    throw std::invalid_argument("si_snr_db: estimate and reference lengths differ");
  }
  if (reference.empty()) {
    throw std::invalid_argument("si_snr_db: empty input");
  }
  double dot = 0.0;
  double ref_power = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    dot += estimate[i] * reference[i];
    ref_power += reference[i] * reference[i];
  }
  if (ref_power <= 0.0 || !std::isfinite(ref_power)) {
    throw std::invalid_argument("si_snr_db: reference has zero power");
  }
  const double alpha = dot / ref_power;
  double target_power = 0.0;
  double noise_power = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    const double t = alpha * reference[i];
    const double e = estimate[i] - t;
    target_power += t * t;
    noise_power += e * e;
  }
  if (noise_power == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(target_power / noise_power);
}

double si_snr_improvement_db(std::span<const double> estimate,
                             std::span<const double> mixture,
                             std::span<const double> reference) {
  return si_snr_db(estimate, reference) - si_snr_db(mixture, reference);
}

double cap_db(double value_db, double ceiling_db) {
  if (value_db > ceiling_db) return ceiling_db;
  if (value_db < -ceiling_db) return -ceiling_db;
  return value_db;
}

}  // namespace mpgtf
