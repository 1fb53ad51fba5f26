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

#ifndef MPGTF_AUDIO_IO_HPP_
#define MPGTF_AUDIO_IO_HPP_

#include <cstdint>
#include <filesystem>

#include <Eigen/Core>

namespace mpgtf {

// Mono audio in the nominal range [-1, 1].
struct AudioSignal {
  Eigen::VectorXd samples;
  int sample_rate_hz = 0;

  int length() const { return static_cast<int>(samples.size()); }
};

// Reads a PCM 16-bit mono WAV file. Samples are scaled by 1/32768.
// Throws FileError for missing files, malformed headers, or unsupported
// formats (stereo, non-PCM, other bit depths).
AudioSignal read_wav(const std::filesystem::path& path);

// Writes a PCM 16-bit mono WAV file. Samples must lie in [-1, 1] unless
// normalize is set, in which case the signal is scaled down to peak 1
// first. Throws std::invalid_argument for out-of-range samples without
// the flag, FileError on I/O failure.
void write_wav(const std::filesystem::path& path, const AudioSignal& sig,
               bool normalize = false);

struct MixAtSnr {
  AudioSignal mixture;
  AudioSignal s1;  // as summed (truncated to common length)
  AudioSignal s2;  // as summed (scaled to the requested SNR)
};

// Scales s2 so that 10*log10(P(s1)/P(scaled s2)) = snr_db and returns the
// sum together with the constituents actually summed. Inputs are truncated
// to the shorter length first. Throws std::invalid_argument on sample-rate
// mismatch or zero-power input.
MixAtSnr mix_at_snr(const AudioSignal& s1, const AudioSignal& s2, double snr_db);

enum class TestSignalKind { sine, sweep, noise };

// Deterministic test material: a fixed-frequency sine, a linear sweep from
// 100 Hz to 4 kHz, or seeded uniform noise in (-0.95, 0.95). Identical
// (kind, seed, length, sample_rate) arguments yield identical signals.
AudioSignal synth_test_signal(TestSignalKind kind, std::uint64_t seed,
                              int length, int sample_rate_hz,
                              double sine_hz = 440.0);

}  // namespace mpgtf

#endif  // MPGTF_AUDIO_IO_HPP_
