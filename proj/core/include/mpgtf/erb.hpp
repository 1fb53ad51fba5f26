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

#ifndef MPGTF_ERB_HPP_
#define MPGTF_ERB_HPP_

#include <vector>

namespace mpgtf {

// Equivalent rectangular bandwidth of the auditory filter centered at fc:
//   ERB(fc) = 24.7 + fc / 9.265   [Hz]
// Throws std::domain_error for negative or non-finite fc.
double erb_bandwidth_hz(double fc_hz);

// Position of a frequency on the ERB-rate scale,
//   9.265 * ln(1 + f / (24.7 * 9.265)).
// Uses the natural logarithm so that d/df of the scale is exactly
// 1 / ERB(f); the scale is the integral of 1/ERB across frequency.
double hz_to_erbscale(double f_hz);

// Closed-form inverse of hz_to_erbscale: 24.7 * 9.265 * (exp(e/9.265) - 1).
double erbscale_to_hz(double erbscale);

// Frequency lying one step above f0 on the ERB scale.
double next_center_frequency(double f0_hz);

// Center frequencies spaced 1 apart on the ERB scale, starting at f_low and
// stepping upward. Candidates strictly above f_high are excluded; an exact
// hit on f_high is kept. Requires 0 < f_low <= f_high.
std::vector<double> center_frequencies(double f_low_hz, double f_high_hz);

}  // namespace mpgtf

#endif  // MPGTF_ERB_HPP_
