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

#ifndef MPGTF_TRANSFORM_HPP_
#define MPGTF_TRANSFORM_HPP_

#include <utility>

#include <Eigen/Core>

#include "mpgtf/audio_io.hpp"
#include "mpgtf/filterbank.hpp"

namespace mpgtf {

inline constexpr int kDefaultFrameShiftSamples = 8;

// Framed filterbank representation: one row per filter, one column per
// frame. Frame i covers samples [i*frame_shift, i*frame_shift + frame_length).
struct EncodedSignal {
  Eigen::MatrixXd values;
  int frame_shift = kDefaultFrameShiftSamples;
  int frame_length = 0;
  int sample_rate_hz = 0;

  int n_filters() const { return static_cast<int>(values.rows()); }
  int n_frames() const { return static_cast<int>(values.cols()); }
};

// Framed analysis: values(n, i) = sum_l x[i*D + l] * h_n[L-1-l], the inner
// product of each frame with the time-reversed filter. Frames that would
// run past the end of the signal are dropped, so the frame count is
// floor((T - L) / D) + 1. Throws std::invalid_argument if the signal is
// shorter than one frame, the sample rates differ, or frame_shift < 1.
EncodedSignal encode(const AudioSignal& x, const Filterbank& bank,
                     int frame_shift = kDefaultFrameShiftSamples);

// Half-wave rectification: max(0, value) element-wise.
EncodedSignal rectify(const EncodedSignal& x);

// Element-wise mask multiplication. The mask must match the encoded
// dimensions and be non-negative throughout.
EncodedSignal apply_mask(const EncodedSignal& x, const Eigen::MatrixXd& mask);

// Framed synthesis followed by overlap-add: frame i contributes
// sum_n values(n, i) * d_n[l] at output sample i*D + l. The result is
// truncated or zero-padded to output_length samples.
AudioSignal decode(const EncodedSignal& x, const Filterbank& decoder,
                   int output_length);

// Builds the synthesis bank whose rows are the columns of the Moore-Penrose
// pseudo-inverse of the time-reversed analysis matrix, so that
// decode(encode(x)) reproduces each frame exactly before overlap-add.
// Throws std::invalid_argument if the bank has fewer filters than taps or
// the matrix is numerically rank-deficient (smallest singular value below
// 1e-10 of the largest).
Filterbank pseudo_inverse_decoder(const Filterbank& encoder);

// Oracle ratio masks from the rectified source encodings:
//   m_c = Xc / (X1 + X2 + eps).
// Inputs must be non-negative (already rectified) and same-shaped.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> ideal_ratio_masks(
    const EncodedSignal& x1_rect, const EncodedSignal& x2_rect, double eps = 1e-12);

}  // namespace mpgtf

#endif  // MPGTF_TRANSFORM_HPP_
