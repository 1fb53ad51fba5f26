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

#include "mpgtf/gammatone.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpgtf {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Eigen::VectorXd gammatone_impulse_response(const FilterSpec& spec, int sample_rate_hz,
                                           int length_samples) {
  if (sample_rate_hz <= 0) throw std::invalid_argument("gammatone: sample rate must be positive");
  if (length_samples < 1) throw std::invalid_argument("gammatone: length must be >= 1");
  if (spec.order < 1) throw std::invalid_argument("gammatone: filter order must be >= 1");
  if (!std::isfinite(spec.fc_hz) || spec.fc_hz < 0.0)
    throw std::invalid_argument("gammatone: center frequency must be finite and >= 0");
  if (!std::isfinite(spec.bandwidth_hz) || spec.bandwidth_hz < 0.0)
    throw std::invalid_argument("gammatone: bandwidth must be finite and >= 0");

  Eigen::VectorXd coeffs(length_samples);
  for (int l = 0; l < length_samples; ++l) {
    const double t = static_cast<double>(l + 1) / sample_rate_hz;
    coeffs[l] = spec.amplitude * std::pow(t, spec.order - 1) *
                std::exp(-kTwoPi * spec.bandwidth_hz * t) *
                std::cos(kTwoPi * spec.fc_hz * t + spec.phase_rad);
  }
  return coeffs;
}

Eigen::VectorXd magnitude_spectrum(const Eigen::VectorXd& coeffs, int nfft) {
  if (nfft < 2) throw std::invalid_argument("magnitude_spectrum: nfft must be >= 2");
  const int bins = nfft / 2 + 1;
  Eigen::VectorXd mags(bins);
  for (int k = 0; k < bins; ++k) {
    const double omega = kTwoPi * k / nfft;
    double re = 0.0;
    double im = 0.0;
    for (int l = 0; l < coeffs.size(); ++l) {
      re += coeffs[l] * std::cos(omega * l);
      im -= coeffs[l] * std::sin(omega * l);
    }
    mags[k] = std::sqrt(re * re + im * im);
  }
  return mags;
}

double normalize_frequency_peak(Eigen::VectorXd& coeffs, int nfft) {
  if (coeffs.size() == 0) throw std::invalid_argument("normalize: empty filter");
  double peak = magnitude_spectrum(coeffs, nfft).maxCoeff();
  if (peak == 0.0) throw std::invalid_argument("normalize: all-zero filter is degenerate");

  // One pass puts the recomputed peak within a few ulp of 1; the extra
  // iterations pull it back under 1 if rounding lands it just above.
  double applied = 1.0;
  for (int iter = 0; iter < 4; ++iter) {
    const double scale = 1.0 / peak;
    coeffs *= scale;
    applied *= scale;
    peak = magnitude_spectrum(coeffs, nfft).maxCoeff();
    if (peak <= 1.0) break;
  }
  return applied;
}

}  // namespace mpgtf
