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

#ifndef MPGTF_FILTERBANK_HPP_
#define MPGTF_FILTERBANK_HPP_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "mpgtf/gammatone.hpp"

namespace mpgtf {

inline constexpr int kDefaultFilterCount = 128;
inline constexpr int kDefaultSampleRateHz = 8000;
inline constexpr double kDefaultDurationS = 0.002;
inline constexpr double kDefaultFLowHz = 100.0;
inline constexpr double kDefaultFHighHz = 4000.0;

enum class BankKind { analysis, synthesis };

// An ordered set of FIR filters, one per matrix row, with per-filter
// construction metadata. Immutable by convention once built.
struct Filterbank {
  Eigen::MatrixXd coefficients;   // N x L, row n holds filter n
  std::vector<FilterSpec> specs;  // size N
  int sample_rate_hz = 0;
  double f_low_hz = 0.0;
  double f_high_hz = 0.0;
  BankKind kind = BankKind::analysis;

  int n_filters() const { return static_cast<int>(coefficients.rows()); }
  int filter_length() const { return static_cast<int>(coefficients.cols()); }
};

// Per-center-frequency phase shifts for an N-filter multi-phase bank.
// Of the N filters only N/2 carry free phases (the other half are the
// inverted partners), so frequency j receives
//   k_j = floor((N/2) / n_center_freqs)  (+1 for the lowest-frequency
//         remainder slots)
// phases, placed equidistantly on [0, pi) starting at 0: phi_m = m*pi/k_j.
// Throws std::invalid_argument for odd N or N < 2 * n_center_freqs.
std::vector<std::vector<double>> allocate_phases(int n_filters, int n_center_freqs);

// Builds the multi-phase gammatone filterbank: order-2 gammatones with
// bandwidth ERB(fc)/1.57 at ERB-spaced center frequencies in
// [f_low, f_high], truncated to duration_s and peak-normalized in the
// frequency domain. Filters are ordered by ascending fc, then ascending
// phase, each base filter immediately followed by its phase-inverted
// partner (the exact element-wise negation).
Filterbank build_mpgtf(int n_filters = kDefaultFilterCount,
                       int sample_rate_hz = kDefaultSampleRateHz,
                       double duration_s = kDefaultDurationS,
                       double f_low_hz = kDefaultFLowHz,
                       double f_high_hz = kDefaultFHighHz);

// JSON serialization. Coefficients are written as decimal doubles with 17
// significant digits, so save/load round-trips are bit-exact and repeated
// saves of the same bank are byte-identical.
void save_bank_json(const Filterbank& bank, std::ostream& out);
void save_bank_json(const Filterbank& bank, const std::filesystem::path& path);
Filterbank load_bank_json(std::istream& in);
Filterbank load_bank_json(const std::filesystem::path& path);

// CSV export for plotting: one row per filter
// (index, fc_hz, phase_rad, inverted, c0..c{L-1}).
void save_bank_csv(const Filterbank& bank, std::ostream& out);
void save_bank_csv(const Filterbank& bank, const std::filesystem::path& path);

}  // namespace mpgtf

#endif  // MPGTF_FILTERBANK_HPP_
