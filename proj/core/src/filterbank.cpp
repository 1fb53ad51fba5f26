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

#include "mpgtf/filterbank.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mpgtf/erb.hpp"
#include "mpgtf/error.hpp"

namespace mpgtf {
namespace {

constexpr int kMpgtfOrder = 2;
constexpr double kErbToGammatoneBandwidth = 1.57;
constexpr int kBankSchemaVersion = 1;

// Shortest decimal form with 17 significant digits; round-trips any double.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_json_text(const Filterbank& bank, std::ostream& out) {
  out << "{\n";
  out << "  \"schema_version\": " << kBankSchemaVersion << ",\n";
  out << "  \"sample_rate\": " << bank.sample_rate_hz << ",\n";
  out << "  \"filter_length\": " << bank.filter_length() << ",\n";
  out << "  \"n_filters\": " << bank.n_filters() << ",\n";
  out << "  \"f_low_hz\": " << format_double(bank.f_low_hz) << ",\n";
  out << "  \"f_high_hz\": " << format_double(bank.f_high_hz) << ",\n";
  out << "  \"filters\": [\n";
  const int n = bank.n_filters();
  const int len = bank.filter_length();
  for (int i = 0; i < n; ++i) {
    const FilterSpec& spec = bank.specs[static_cast<size_t>(i)];
    out << "    {\n";
    out << "      \"fc_hz\": " << format_double(spec.fc_hz) << ",\n";
    out << "      \"phase_rad\": " << format_double(spec.phase_rad) << ",\n";
    out << "      \"inverted\": " << (spec.inverted ? "true" : "false") << ",\n";
    out << "      \"amplitude_a\": " << format_double(spec.amplitude) << ",\n";
    out << "      \"coeffs\": [";
    for (int l = 0; l < len; ++l) {
      if (l > 0) out << ", ";
      out << format_double(bank.coefficients(i, l));
    }
    out << "]\n";
    out << "    }" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
}

}  // namespace

std::vector<std::vector<double>> allocate_phases(int n_filters, int n_center_freqs) {
  if (n_center_freqs < 1) {
    throw std::invalid_argument("allocate_phases: need at least one center frequency");
  }
  if (n_filters % 2 != 0) {
    throw std::invalid_argument(
        "allocate_phases: N must be even, every filter needs a phase-inverted "
        "partner (got N=" + std::to_string(n_filters) + ")");
  }
  if (n_filters < 2 * n_center_freqs) {
    throw std::invalid_argument(
        "allocate_phases: N must be at least 2 * n_center_freqs = " +
        std::to_string(2 * n_center_freqs) + " so every center frequency gets a "
        "base filter and its partner (got N=" + std::to_string(n_filters) + ")");
  }
  const int half = n_filters / 2;
  const int base = half / n_center_freqs;
  const int remainder = half % n_center_freqs;
  std::vector<std::vector<double>> phases(static_cast<size_t>(n_center_freqs));
  for (int j = 0; j < n_center_freqs; ++j) {
    const int k = base + (j < remainder ? 1 : 0);
    auto& slot = phases[static_cast<size_t>(j)];
    slot.resize(static_cast<size_t>(k));
    for (int m = 0; m < k; ++m) {
      slot[static_cast<size_t>(m)] = static_cast<double>(m) * std::numbers::pi / k;
    }
  }
  return phases;
}

Filterbank build_mpgtf(int n_filters, int sample_rate_hz, double duration_s,
                       double f_low_hz, double f_high_hz) {
  if (sample_rate_hz <= 0) {
    throw std::invalid_argument("build_mpgtf: sample_rate_hz must be positive");
  }
  if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
    throw std::invalid_argument("build_mpgtf: duration_s must be positive and finite");
  }
  const int length = static_cast<int>(std::lround(duration_s * sample_rate_hz));
  if (length < 1) {
    throw std::invalid_argument(
        "build_mpgtf: duration_s * sample_rate_hz rounds to zero samples");
  }
  const std::vector<double> centers = center_frequencies(f_low_hz, f_high_hz);
  const auto phases = allocate_phases(n_filters, static_cast<int>(centers.size()));

  Filterbank bank;
  bank.coefficients.resize(n_filters, length);
  bank.specs.reserve(static_cast<size_t>(n_filters));
  bank.sample_rate_hz = sample_rate_hz;
  bank.f_low_hz = f_low_hz;
  bank.f_high_hz = f_high_hz;
  bank.kind = BankKind::analysis;

  int row = 0;
  for (size_t j = 0; j < centers.size(); ++j) {
    for (double phase : phases[j]) {
      FilterSpec spec;
      spec.fc_hz = centers[j];
      spec.phase_rad = phase;
      spec.order = kMpgtfOrder;
      spec.bandwidth_hz = erb_bandwidth_hz(centers[j]) / kErbToGammatoneBandwidth;
      spec.inverted = false;
      spec.amplitude = 1.0;

      Eigen::VectorXd h = gammatone_impulse_response(spec, sample_rate_hz, length);
      spec.amplitude = normalize_frequency_peak(h);
      bank.coefficients.row(row) = h.transpose();
      bank.specs.push_back(spec);
      ++row;

      FilterSpec partner = spec;
      partner.phase_rad = phase + std::numbers::pi;
      partner.inverted = true;
      bank.coefficients.row(row) = -h.transpose();
      bank.specs.push_back(partner);
      ++row;
    }
  }
  return bank;
}

void save_bank_json(const Filterbank& bank, std::ostream& out) {
  write_json_text(bank, out);
  if (!out) throw FileError("save_bank_json: stream write failed");
}

void save_bank_json(const Filterbank& bank, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("save_bank_json: cannot open " + path.string());
  save_bank_json(bank, out);
}

Filterbank load_bank_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FileError(std::string("load_bank_json: invalid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kBankSchemaVersion) {
      throw FileError("load_bank_json: unsupported schema_version " +
                      std::to_string(version));
    }
    Filterbank bank;
    bank.sample_rate_hz = doc.at("sample_rate").get<int>();
    const int length = doc.at("filter_length").get<int>();
    const int n = doc.at("n_filters").get<int>();
    bank.f_low_hz = doc.at("f_low_hz").get<double>();
    bank.f_high_hz = doc.at("f_high_hz").get<double>();
    const auto& filters = doc.at("filters");
    if (!filters.is_array() || static_cast<int>(filters.size()) != n) {
      throw FileError("load_bank_json: filters array does not match n_filters");
    }
    if (n < 1 || length < 1) {
      throw FileError("load_bank_json: n_filters and filter_length must be positive");
    }
    bank.coefficients.resize(n, length);
    bank.specs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& f = filters[static_cast<size_t>(i)];
      FilterSpec spec;
      spec.fc_hz = f.at("fc_hz").get<double>();
      spec.phase_rad = f.at("phase_rad").get<double>();
      spec.order = kMpgtfOrder;
      spec.bandwidth_hz = erb_bandwidth_hz(spec.fc_hz) / kErbToGammatoneBandwidth;
      spec.inverted = f.at("inverted").get<bool>();
      spec.amplitude = f.at("amplitude_a").get<double>();
      const auto& coeffs = f.at("coeffs");
      if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != length) {
        throw FileError("load_bank_json: coeffs length mismatch at filter " +
                        std::to_string(i));
      }
      for (int l = 0; l < length; ++l) {
        bank.coefficients(i, l) = coeffs[static_cast<size_t>(l)].get<double>();
      }
      bank.specs.push_back(spec);
    }
    return bank;
  } catch (const nlohmann::json::exception& e) {
    throw FileError(std::string("load_bank_json: missing or mistyped field: ") +
                    e.what());
  }
}

Filterbank load_bank_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("load_bank_json: cannot open " + path.string());
  return load_bank_json(in);
}

void save_bank_csv(const Filterbank& bank, std::ostream& out) {
  out << "index,fc_hz,phase_rad,inverted";
  for (int l = 0; l < bank.filter_length(); ++l) out << ",c" << l;
  out << "\n";
  for (int i = 0; i < bank.n_filters(); ++i) {
    const FilterSpec& spec = bank.specs[static_cast<size_t>(i)];
    out << i << ',' << format_double(spec.fc_hz) << ','
        << format_double(spec.phase_rad) << ',' << (spec.inverted ? 1 : 0);
    for (int l = 0; l < bank.filter_length(); ++l) {
      out << ',' << format_double(bank.coefficients(i, l));
    }
    out << "\n";
  }
  if (!out) throw FileError("save_bank_csv: stream write failed");
}

void save_bank_csv(const Filterbank& bank, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("save_bank_csv: cannot open " + path.string());
  save_bank_csv(bank, out);
}

}  // namespace mpgtf
