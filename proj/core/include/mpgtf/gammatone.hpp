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

#ifndef MPGTF_GAMMATONE_HPP_
#define MPGTF_GAMMATONE_HPP_

#include <Eigen/Core>

namespace mpgtf {

// Parameters of a single gammatone filter. `amplitude` is the scale factor
// applied by peak normalization (1.0 for a raw impulse response); `inverted`
// marks the pi-shifted partner of a base filter.
struct FilterSpec {
  double fc_hz = 0.0;
  double phase_rad = 0.0;
  int order = 2;
  double bandwidth_hz = 0.0;
  bool inverted = false;
  double amplitude = 1.0;
};

// Sampled, truncated gammatone impulse response
//
//   g(t) = a * t^(p-1) * exp(-2 pi b t) * cos(2 pi fc t + phi)
//
// evaluated at t_l = (l + 1) / fs for l = 0 .. length-1. The grid starts at
// 1/fs, keeping t > 0; at t = 0 the envelope factor t^(p-1) would force a
// zero first coefficient for p >= 2.
Eigen::VectorXd gammatone_impulse_response(const FilterSpec& spec, int sample_rate_hz,
                                           int length_samples);

// Magnitude of the zero-padded length-nfft DFT of `coeffs` at the
// nfft/2 + 1 bins covering [0, fs/2].
Eigen::VectorXd magnitude_spectrum(const Eigen::VectorXd& coeffs, int nfft);

// Scales `coeffs` in place so its magnitude spectrum on the dense zero-padded
// grid peaks at 1, never above. Returns the factor applied. Throws
// std::invalid_argument for an all-zero (degenerate) filter.
double normalize_frequency_peak(Eigen::VectorXd& coeffs, int nfft = 1024);

}  // namespace mpgtf

#endif  // MPGTF_GAMMATONE_HPP_
