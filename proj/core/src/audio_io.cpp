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

#include "mpgtf/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpgtf/error.hpp"

namespace mpgtf {
namespace {

constexpr double kPcm16Scale = 32768.0;
constexpr std::uint16_t kWavFormatPcm = 1;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(static_cast<std::uint32_t>(p[0]) |
                                    (static_cast<std::uint32_t>(p[1]) << 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

AudioSignal read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("read_wav: cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw FileError("read_wav: not a RIFF/WAVE file: " + path.string());
  }

  bool have_fmt = false;
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint16_t bits = 0;
  std::uint32_t sample_rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_size = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t size = read_u32(chunk + 4);
    const size_t body = pos + 8;
    if (body + size > bytes.size()) {
      throw FileError("read_wav: truncated chunk in " + path.string());
    }
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) throw FileError("read_wav: malformed fmt chunk in " + path.string());
      format = read_u16(bytes.data() + body);
      channels = read_u16(bytes.data() + body + 2);
      sample_rate = read_u32(bytes.data() + body + 4);
      bits = read_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = size;
    }
    pos = body + size + (size % 2);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr) {
    throw FileError("read_wav: missing fmt or data chunk in " + path.string());
  }
  if (format != kWavFormatPcm) {
    throw FileError("read_wav: unsupported format (PCM required): " + path.string());
  }
  if (channels != 1) {
    throw FileError("read_wav: unsupported channel count " + std::to_string(channels) +
                    " (mono required): " + path.string());
  }
  if (bits != 16) {
    throw FileError("read_wav: unsupported bit depth " + std::to_string(bits) +
                    " (16-bit required): " + path.string());
  }
  if (sample_rate == 0) {
    throw FileError("read_wav: zero sample rate in " + path.string());
  }

  AudioSignal sig;
  sig.sample_rate_hz = static_cast<int>(sample_rate);
  const int n = static_cast<int>(data_size / 2);
  sig.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    const std::uint16_t raw = read_u16(data + 2 * static_cast<size_t>(i));
    const std::int16_t q = static_cast<std::int16_t>(raw);
    sig.samples[i] = static_cast<double>(q) / kPcm16Scale;
  }
  return sig;
}

void write_wav(const std::filesystem::path& path, const AudioSignal& sig,
               bool normalize) {
  if (sig.sample_rate_hz <= 0) {
    throw std::invalid_argument("write_wav: sample_rate_hz must be positive");
  }
  Eigen::VectorXd samples = sig.samples;
  const double peak = samples.size() > 0 ? samples.cwiseAbs().maxCoeff() : 0.0;
  if (!std::isfinite(peak)) {
    throw std::invalid_argument("write_wav: non-finite sample");
  }
  if (peak > 1.0) {
    if (!normalize) {
      throw std::invalid_argument(
          "write_wav: samples exceed [-1, 1]; pass normalize to scale down");
    }
    samples /= peak;
  }

  const std::uint32_t data_size = static_cast<std::uint32_t>(samples.size()) * 2;
  std::string out;
  out.reserve(44 + data_size);
  out.append("RIFF");
  put_u32(out, 36 + data_size);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(out, 16);
  put_u16(out, kWavFormatPcm);
  put_u16(out, 1);
  put_u32(out, static_cast<std::uint32_t>(sig.sample_rate_hz));
  put_u32(out, static_cast<std::uint32_t>(sig.sample_rate_hz) * 2);  // byte rate
  put_u16(out, 2);                                                   // block align
  put_u16(out, 16);
  out.append("data");
  put_u32(out, data_size);
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    const long q = std::lround(samples[i] * kPcm16Scale);
    const auto clipped = static_cast<std::int16_t>(std::clamp(q, -32768L, 32767L));
    put_u16(out, static_cast<std::uint16_t>(clipped));
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw FileError("write_wav: cannot open " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw FileError("write_wav: write failed for " + path.string());
}

MixAtSnr mix_at_snr(const AudioSignal& s1, const AudioSignal& s2, double snr_db) {
  if (s1.sample_rate_hz != s2.sample_rate_hz) {
    throw std::invalid_argument("mix_at_snr: sample rates differ");
  }
  if (!std::isfinite(snr_db)) {
    throw std::invalid_argument("mix_at_snr: snr_db must be finite");
  }
  const Eigen::Index n = std::min(s1.samples.size(), s2.samples.size());
  if (n < 1) throw std::invalid_argument("mix_at_snr: empty input");

  MixAtSnr result;
  result.s1.sample_rate_hz = s1.sample_rate_hz;
  result.s2.sample_rate_hz = s1.sample_rate_hz;
  result.mixture.sample_rate_hz = s1.sample_rate_hz;
  result.s1.samples = s1.samples.head(n);
  result.s2.samples = s2.samples.head(n);

  const double p1 = result.s1.samples.squaredNorm();
  const double p2 = result.s2.samples.squaredNorm();
  if (p1 <= 0.0 || p2 <= 0.0) {
    throw std::invalid_argument("mix_at_snr: zero-power input");
  }
  const double gain = std::sqrt(p1 / (p2 * std::pow(10.0, snr_db / 10.0)));
  result.s2.samples *= gain;
  result.mixture.samples = result.s1.samples + result.s2.samples;
  return result;
}

AudioSignal synth_test_signal(TestSignalKind kind, std::uint64_t seed, int length,
                              int sample_rate_hz, double sine_hz) {
  if (length < 1) throw std::invalid_argument("synth_test_signal: length must be >= 1");
  if (sample_rate_hz <= 0) {
    throw std::invalid_argument("synth_test_signal: sample_rate_hz must be positive");
  }
  AudioSignal sig;
  sig.sample_rate_hz = sample_rate_hz;
  sig.samples.resize(length);
  const double fs = sample_rate_hz;
  switch (kind) {
    case TestSignalKind::sine:
      for (int i = 0; i < length; ++i) {
        sig.samples[i] = 0.9 * std::sin(2.0 * std::numbers::pi * sine_hz * i / fs);
      }
      break;
    case TestSignalKind::sweep: {
      const double f0 = 100.0;
      const double f1 = 4000.0;
      double phase = 0.0;
      for (int i = 0; i < length; ++i) {
        const double frac = length > 1 ? static_cast<double>(i) / (length - 1) : 0.0;
        const double freq = f0 + (f1 - f0) * frac;
        sig.samples[i] = 0.9 * std::sin(phase);
        phase += 2.0 * std::numbers::pi * freq / fs;
      }
      break;
    }
    case TestSignalKind::noise: {
      // Raw engine draws keep the stream identical across standard libraries;
      // std::uniform_real_distribution does not guarantee that.
      std::mt19937_64 engine(seed);
      for (int i = 0; i < length; ++i) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        sig.samples[i] = 0.95 * (2.0 * u - 1.0);
      }
      break;
    }
  }
  return sig;
}

}  // namespace mpgtf
