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

#ifndef MPGTF_METRICS_HPP_
#define MPGTF_METRICS_HPP_

#include <span>

namespace mpgtf {

// Scale-invariant SNR in dB:
//   s_target = (<estimate, reference> / ||reference||^2) * reference
//   e_noise  = estimate - s_target
//   SI-SNR   = 10 log10(||s_target||^2 / ||e_noise||^2)
// No mean removal is applied. Returns +infinity when e_noise is exactly
// zero (estimate is a scalar multiple of the reference). Throws
// std::invalid_argument on length mismatch, empty input, or a zero-power
// reference.
double si_snr_db(std::span<const double> estimate, std::span<const double> reference);

// si_snr_db(estimate, reference) - si_snr_db(mixture, reference).
double si_snr_improvement_db(std::span<const double> estimate,
                             std::span<const double> mixture,
                             std::span<const double> reference);

// Clamps a dB value to [-ceiling, +ceiling] so +/-infinity sentinels can be
// aggregated or reported; finite values inside the range pass through.
double cap_db(double value_db, double ceiling_db = 100.0);

}  // namespace mpgtf

#endif  // MPGTF_METRICS_HPP_
