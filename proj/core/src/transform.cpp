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

#include "mpgtf/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace mpgtf {

EncodedSignal encode(const AudioSignal& x, const Filterbank& bank, int frame_shift) {
  const int length = bank.filter_length();
  const int total = x.length();
  if (frame_shift < 1) {
    throw std::invalid_argument("encode: frame_shift must be >= 1");
  }
  if (total < length) {
    throw std::invalid_argument("encode: signal length " + std::to_string(total) +
                                " is shorter than the filter length " +
                                std::to_string(length));
  }
  if (x.sample_rate_hz != bank.sample_rate_hz) {
    throw std::invalid_argument("encode: signal and bank sample rates differ");
  }
  const int n_frames = (total - length) / frame_shift + 1;

  Eigen::MatrixXd frames(length, n_frames);
  for (int i = 0; i < n_frames; ++i) {
    frames.col(i) = x.samples.segment(i * frame_shift, length);
  }

  EncodedSignal out;
  out.values.noalias() = bank.coefficients.rowwise().reverse() * frames;
  out.frame_shift = frame_shift;
  out.frame_length = length;
  out.sample_rate_hz = x.sample_rate_hz;
  return out;
}

EncodedSignal rectify(const EncodedSignal& x) {
  EncodedSignal out = x;
  out.values = out.values.cwiseMax(0.0);
  return out;
}

EncodedSignal apply_mask(const EncodedSignal& x, const Eigen::MatrixXd& mask) {
  if (mask.rows() != x.values.rows() || mask.cols() != x.values.cols()) {
    throw std::invalid_argument("apply_mask: mask dimensions do not match");
  }
  if (!(mask.array() >= 0.0).all()) {
    throw std::invalid_argument("apply_mask: mask entries must be non-negative");
  }
  EncodedSignal out = x;
  out.values = out.values.cwiseProduct(mask);
  return out;
}

AudioSignal decode(const EncodedSignal& x, const Filterbank& decoder,
                   int output_length) {
  if (decoder.n_filters() != x.n_filters()) {
    throw std::invalid_argument("decode: filter count mismatch");
  }
  if (decoder.filter_length() != x.frame_length) {
    throw std::invalid_argument("decode: frame length mismatch");
  }
  if (output_length < 0) {
    throw std::invalid_argument("decode: output_length must be >= 0");
  }

  const int length = x.frame_length;
  const int shift = x.frame_shift;
  const int n_frames = x.n_frames();

  // synthesis(l, i) = sum_n values(n, i) * d_n[l]
  Eigen::MatrixXd synthesis;
  synthesis.noalias() = decoder.coefficients.transpose() * x.values;

  const int covered = n_frames > 0 ? (n_frames - 1) * shift + length : 0;
  Eigen::VectorXd accum = Eigen::VectorXd::Zero(covered);
  for (int i = 0; i < n_frames; ++i) {
    accum.segment(i * shift, length) += synthesis.col(i);
  }

  AudioSignal out;
  out.sample_rate_hz = x.sample_rate_hz;
  out.samples = Eigen::VectorXd::Zero(output_length);
  const int copied = std::min(output_length, covered);
  out.samples.head(copied) = accum.head(copied);
  return out;
}

Filterbank pseudo_inverse_decoder(const Filterbank& encoder) {
  const int n = encoder.n_filters();
  const int length = encoder.filter_length();
  if (n < length) {
    throw std::invalid_argument(
        "pseudo_inverse_decoder: bank has fewer filters than taps, the "
        "time-reversed matrix cannot have full column rank");
  }

  const Eigen::MatrixXd reversed = encoder.coefficients.rowwise().reverse();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(reversed,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double largest = sigma(0);
  const double smallest = sigma(sigma.size() - 1);
  if (!(largest > 0.0) || smallest < 1e-10 * largest) {
    throw std::invalid_argument(
        "pseudo_inverse_decoder: coefficient matrix is rank-deficient "
        "(smallest singular value below 1e-10 of the largest)");
  }

  // pinv = V * diag(1/sigma) * U^T, shape L x N; decoder row n is column n.
  Eigen::MatrixXd pinv =
      svd.matrixV() * sigma.cwiseInverse().asDiagonal() * svd.matrixU().transpose();

  Filterbank dec;
  dec.coefficients = pinv.transpose();
  dec.specs = encoder.specs;
  dec.sample_rate_hz = encoder.sample_rate_hz;
  dec.f_low_hz = encoder.f_low_hz;
  dec.f_high_hz = encoder.f_high_hz;
  dec.kind = BankKind::synthesis;
  return dec;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> ideal_ratio_masks(
    const EncodedSignal& x1_rect, const EncodedSignal& x2_rect, double eps) {
  if (x1_rect.values.rows() != x2_rect.values.rows() ||
      x1_rect.values.cols() != x2_rect.values.cols()) {
    throw std::invalid_argument("ideal_ratio_masks: encodings differ in shape");
  }
  if (!(x1_rect.values.array() >= 0.0).all() ||
      !(x2_rect.values.array() >= 0.0).all()) {
    throw std::invalid_argument("ideal_ratio_masks: inputs must be rectified");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("ideal_ratio_masks: eps must be positive");
  }
  const Eigen::ArrayXXd denom =
      x1_rect.values.array() + x2_rect.values.array() + eps;
  return {(x1_rect.values.array() / denom).matrix(),
          (x2_rect.values.array() / denom).matrix()};
}

}  // namespace mpgtf
