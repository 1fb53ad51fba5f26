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
#include <complex>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mpgtf/erb.hpp"
#include "oracles.hpp"

namespace mpgtf {
namespace {

FilterSpec spec_1000() {
  FilterSpec spec;
  spec.fc_hz = 1000.0;
  spec.phase_rad = 0.0;
  spec.order = 2;
  spec.bandwidth_hz = erb_bandwidth_hz(1000.0) / 1.57;
  return spec;
}

TEST(Gammatone, ImpulseResponseMatchesHighPrecisionReference) {
  EXPECT_NEAR(spec_1000().bandwidth_hz, mpgtf_tests::kBandwidthAt1000, 1e-12);
  const Eigen::VectorXd h = gammatone_impulse_response(spec_1000(), 8000, 16);
  ASSERT_EQ(h.size(), 16);
  for (int l = 0; l < 16; ++l) {
    EXPECT_NEAR(h[l], mpgtf_tests::kGammatone1000Raw[static_cast<size_t>(l)], 1e-12)
        << "l=" << l;
  }
}

TEST(Gammatone, PhaseShiftByPiNegates) {
  FilterSpec base = spec_1000();
  FilterSpec shifted = base;
  shifted.phase_rad = base.phase_rad + std::numbers::pi;
  const Eigen::VectorXd h = gammatone_impulse_response(base, 8000, 16);
  const Eigen::VectorXd g = gammatone_impulse_response(shifted, 8000, 16);
  for (int l = 0; l < 16; ++l) {
    EXPECT_NEAR(g[l], -h[l], 1e-15) << "l=" << l;
  }
}

TEST(Gammatone, AmplitudeScalesLinearly) {
  FilterSpec scaled = spec_1000();
  scaled.amplitude = 3.5;
  const Eigen::VectorXd h = gammatone_impulse_response(spec_1000(), 8000, 16);
  const Eigen::VectorXd g = gammatone_impulse_response(scaled, 8000, 16);
  for (int l = 0; l < 16; ++l) {
    EXPECT_NEAR(g[l], 3.5 * h[l], 1e-14 * std::abs(g[l]) + 1e-300) << "l=" << l;
  }
}

TEST(Gammatone, DeterministicAcrossCalls) {
  const Eigen::VectorXd a = gammatone_impulse_response(spec_1000(), 8000, 16);
  const Eigen::VectorXd b = gammatone_impulse_response(spec_1000(), 8000, 16);
  EXPECT_TRUE((a.array() == b.array()).all());
}

// |h(t)| is bounded by the envelope t e^{-2 pi b t}, which decreases
// monotonically past its maximum at t = 1/(2 pi b).
TEST(Gammatone, EnvelopeBoundsAndDecay) {
  FilterSpec spec;
  spec.fc_hz = 4000.0;
  spec.order = 2;
  spec.bandwidth_hz = erb_bandwidth_hz(4000.0) / 1.57;
  const int fs = 8000;
  const int length = 16;
  const Eigen::VectorXd h = gammatone_impulse_response(spec, fs, length);

  const double two_pi_b = 2.0 * std::numbers::pi * spec.bandwidth_hz;
  double prev_env = 0.0;
  bool past_peak = false;
  for (int l = 0; l < length; ++l) {
    const double t = static_cast<double>(l + 1) / fs;
    const double env = t * std::exp(-two_pi_b * t);
    EXPECT_LE(std::abs(h[l]), env * (1.0 + 1e-12)) << "l=" << l;
    if (past_peak) {
      EXPECT_LT(env, prev_env) << "l=" << l;
    }
    if (t > 1.0 / two_pi_b) past_peak = true;
    prev_env = env;
  }
  ASSERT_TRUE(past_peak);
}

TEST(Gammatone, RejectsInvalidArguments) {
  EXPECT_THROW(gammatone_impulse_response(spec_1000(), 0, 16), std::invalid_argument);
  EXPECT_THROW(gammatone_impulse_response(spec_1000(), 8000, 0), std::invalid_argument);
  FilterSpec bad = spec_1000();
  bad.order = 0;
  EXPECT_THROW(gammatone_impulse_response(bad, 8000, 16), std::invalid_argument);
  bad = spec_1000();
  bad.fc_hz = -1.0;
  EXPECT_THROW(gammatone_impulse_response(bad, 8000, 16), std::invalid_argument);
  bad = spec_1000();
  bad.bandwidth_hz = std::nan("");
  EXPECT_THROW(gammatone_impulse_response(bad, 8000, 16), std::invalid_argument);
}

TEST(MagnitudeSpectrum, MatchesComplexAccumulation) {
  mpgtf_tests::TestRng rng(41);
  const Eigen::VectorXd coeffs = rng.vector(16);
  const int nfft = 256;
  const Eigen::VectorXd mags = magnitude_spectrum(coeffs, nfft);
  ASSERT_EQ(mags.size(), nfft / 2 + 1);
  for (int k = 0; k <= nfft / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (int l = 0; l < coeffs.size(); ++l) {
      const double angle = -2.0 * std::numbers::pi * k * l / nfft;
      acc += coeffs[l] * std::polar(1.0, angle);
    }
    EXPECT_NEAR(mags[k], std::abs(acc), 1e-12) << "k=" << k;
  }
}

TEST(MagnitudeSpectrum, UnitImpulseIsFlat) {
  Eigen::VectorXd impulse = Eigen::VectorXd::Zero(16);
  impulse[0] = 1.0;
  const Eigen::VectorXd mags = magnitude_spectrum(impulse, 1024);
  for (int k = 0; k < mags.size(); ++k) {
    EXPECT_NEAR(mags[k], 1.0, 1e-12);
  }
  Eigen::VectorXd shifted = Eigen::VectorXd::Zero(16);
  shifted[7] = 1.0;
  const Eigen::VectorXd shifted_mags = magnitude_spectrum(shifted, 1024);
  for (int k = 0; k < shifted_mags.size(); ++k) {
    EXPECT_NEAR(shifted_mags[k], 1.0, 1e-12);
  }
}

TEST(MagnitudeSpectrum, RejectsTinyNfft) {
  EXPECT_THROW(magnitude_spectrum(Eigen::VectorXd::Ones(4), 1), std::invalid_argument);
}

TEST(NormalizeFrequencyPeak, PeakLandsInUnitInterval) {
  for (double fc : {100.0, 550.96636160506262602, 1000.0, 3707.6609056224489416}) {
    for (double phase : {0.0, std::numbers::pi / 3.0, std::numbers::pi / 2.0}) {
      FilterSpec spec;
      spec.fc_hz = fc;
      spec.phase_rad = phase;
      spec.order = 2;
      spec.bandwidth_hz = erb_bandwidth_hz(fc) / 1.57;
      Eigen::VectorXd h = gammatone_impulse_response(spec, 8000, 16);
      const double applied = normalize_frequency_peak(h);
      EXPECT_GT(applied, 0.0);
      const double peak = magnitude_spectrum(h, 1024).maxCoeff();
      EXPECT_LE(peak, 1.0) << "fc=" << fc << " phase=" << phase;
      EXPECT_GE(peak, 1.0 - 1e-9) << "fc=" << fc << " phase=" << phase;
    }
  }
}

TEST(NormalizeFrequencyPeak, ReturnsAppliedFactor) {
  FilterSpec spec = spec_1000();
  const Eigen::VectorXd raw = gammatone_impulse_response(spec, 8000, 16);
  Eigen::VectorXd h = raw;
  const double applied = normalize_frequency_peak(h);
  for (int l = 0; l < h.size(); ++l) {
    EXPECT_NEAR(h[l], raw[l] * applied, 1e-12 * std::abs(h[l]) + 1e-300);
  }
}

TEST(NormalizeFrequencyPeak, RejectsDegenerateFilters) {
  Eigen::VectorXd zeros = Eigen::VectorXd::Zero(16);
  EXPECT_THROW(normalize_frequency_peak(zeros), std::invalid_argument);
  Eigen::VectorXd empty(0);
  EXPECT_THROW(normalize_frequency_peak(empty), std::invalid_argument);
}

}  // namespace
}  // namespace mpgtf
