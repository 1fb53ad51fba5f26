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

// End-to-end tests of the command-line binary: run the real executable in a
// subprocess and inspect exit codes, the stderr summary, the JSON run report
// on stdout, and the files it writes.

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "mpgtf/audio_io.hpp"
#include "mpgtf/filterbank.hpp"
#include "oracles.hpp"

namespace mpgtf {
namespace {

using mpgtf_tests::CommandResult;
using mpgtf_tests::run_cli;
using mpgtf_tests::TempDir;
using nlohmann::json;

json parse_report(const CommandResult& result) {
  json report = json::parse(result.out);
  EXPECT_EQ(report.at("schema_version").get<int>(), 1);
  EXPECT_TRUE(report.contains("command"));
  EXPECT_TRUE(report.at("parameters").is_object());
  EXPECT_TRUE(report.at("results").is_object());
  EXPECT_GE(report.at("timing_ms").get<double>(), 0.0);
  return report;
}

std::filesystem::path write_signal(const TempDir& dir, const std::string& name,
                                   const AudioSignal& sig) {
  const auto path = dir.path() / name;
  write_wav(path, sig);
  return path;
}

TEST(CliGen, WritesLoadableBankAndReport) {
  TempDir dir("gen");
  const auto bank_path = dir.path() / "bank.json";
  const CommandResult result =
      run_cli({"gen", "--n", "48", "--out", bank_path.string()});
  ASSERT_EQ(result.exit_code, 0) << result.err;

  const json report = parse_report(result);
  EXPECT_EQ(report.at("command"), "gen");
  EXPECT_EQ(report.at("results").at("n_filters"), 48);
  EXPECT_EQ(report.at("results").at("filter_length"), 16);
  EXPECT_EQ(report.at("results").at("n_center_frequencies"), 24);

  const Filterbank bank = load_bank_json(bank_path);
  EXPECT_EQ(bank.n_filters(), 48);
  EXPECT_NE(result.err.find("center frequencies=24"), std::string::npos);
}

TEST(CliGen, OddFilterCountFailsWithExitTwo) {
  TempDir dir("gen");
  const CommandResult result =
      run_cli({"gen", "--n", "47", "--out", (dir.path() / "x.json").string()});
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("N must be even"), std::string::npos);
}

TEST(CliGen, TooSmallFilterCountFailsWithExitTwo) {
  TempDir dir("gen");
  const CommandResult result =
      run_cli({"gen", "--n", "46", "--out", (dir.path() / "x.json").string()});
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("at least"), std::string::npos);
}

TEST(CliGen, RepeatedRunsAreByteIdentical) {
  TempDir dir("gen");
  const auto a = dir.path() / "a.json";
  const auto b = dir.path() / "b.json";
  ASSERT_EQ(run_cli({"gen", "--n", "128", "--out", a.string()}).exit_code, 0);
  ASSERT_EQ(run_cli({"gen", "--n", "128", "--out", b.string()}).exit_code, 0);
  const std::string bytes_a = mpgtf_tests::read_file(a);
  const std::string bytes_b = mpgtf_tests::read_file(b);
  ASSERT_FALSE(bytes_a.empty());
  EXPECT_EQ(bytes_a, bytes_b);
}

TEST(CliGen, CsvFormatWritesOneRowPerFilter) {
  TempDir dir("gen");
  const auto path = dir.path() / "bank.csv";
  const CommandResult result = run_cli(
      {"gen", "--n", "48", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  std::istringstream lines(mpgtf_tests::read_file(path));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++count;
  }
  EXPECT_EQ(count, 49);  // header + one row per filter
}

TEST(CliGen, MissingOutIsUserError) {
  const CommandResult result = run_cli({"gen", "--n", "48"});
  EXPECT_EQ(result.exit_code, 2);
}

TEST(CliSpectra, EmitsNormalizedSpectraPerFilter) {
  TempDir dir("spectra");
  const auto bank_path = dir.path() / "bank.json";
  ASSERT_EQ(run_cli({"gen", "--n", "48", "--out", bank_path.string()}).exit_code, 0);

  const auto csv_path = dir.path() / "spectra.csv";
  const CommandResult result = run_cli({"spectra", "--bank", bank_path.string(),
                                        "--out", csv_path.string(), "--nfft", "1024"});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  EXPECT_EQ(report.at("results").at("rows_written"), 48 * 513);

  std::istringstream lines(mpgtf_tests::read_file(csv_path));
  std::string line;
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line, "filter_index,frequency_hz,magnitude");

  std::map<int, double> peak_magnitude;
  std::map<int, double> peak_frequency;
  long rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream fields(line);
    std::string token;
    std::getline(fields, token, ',');
    const int index = std::stoi(token);
    std::getline(fields, token, ',');
    const double freq = std::stod(token);
    std::getline(fields, token, ',');
    const double mag = std::stod(token);
    if (mag > peak_magnitude[index]) {
      peak_magnitude[index] = mag;
      peak_frequency[index] = freq;
    }
  }
  EXPECT_EQ(rows, 48 * 513);
  ASSERT_EQ(peak_magnitude.size(), 48u);
  for (const auto& [index, mag] : peak_magnitude) {
    EXPECT_LE(mag, 1.0) << "filter " << index;
    EXPECT_GE(mag, 1.0 - 1e-9) << "filter " << index;
  }
  // The 2 ms window holds under one cycle below ~500 Hz, where truncation
  // pushes the peak off fc (the lowest filters even peak at DC). Above that
  // the measured peak tracks the design frequency closely.
  const Filterbank bank = load_bank_json(bank_path);
  for (int i = 0; i < bank.n_filters(); ++i) {
    const double fc = bank.specs[static_cast<size_t>(i)].fc_hz;
    if (fc < 500.0) continue;
    EXPECT_NEAR(peak_frequency[i], fc, 0.15 * fc) << "filter " << i;
  }
}

TEST(CliSpectra, UnreadableBankIsUserError) {
  TempDir dir("spectra");
  const CommandResult result =
      run_cli({"spectra", "--bank", (dir.path() / "missing.json").string(), "--out",
               (dir.path() / "out.csv").string()});
  EXPECT_EQ(result.exit_code, 2);
}

TEST(CliRoundtrip, NoiseReconstructsAboveFiftyDb) {
  TempDir dir("roundtrip");
  const auto wav = write_signal(
      dir, "noise.wav", synth_test_signal(TestSignalKind::noise, 42, 4000, 8000));
  const CommandResult result = run_cli({"roundtrip", "--in", wav.string(), "--n", "128"});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  EXPECT_GE(report.at("results").at("interior_si_snr_db").get<double>(), 50.0);
  EXPECT_NE(result.err.find("interior SI-SNR"), std::string::npos);
}

TEST(CliRoundtrip, ZeroSignalIsUserError) {
  TempDir dir("roundtrip");
  AudioSignal zeros;
  zeros.sample_rate_hz = 8000;
  zeros.samples = Eigen::VectorXd::Zero(4000);
  const auto wav = write_signal(dir, "zeros.wav", zeros);
  const CommandResult result = run_cli({"roundtrip", "--in", wav.string()});
  EXPECT_EQ(result.exit_code, 2);
}

TEST(CliOracleSeparate, IdenticalSourcesGiveZeroImprovement) {
  TempDir dir("separate");
  const AudioSignal sine = synth_test_signal(TestSignalKind::sine, 0, 4000, 8000, 300.0);
  const auto s1 = write_signal(dir, "s1.wav", sine);
  const auto s2 = write_signal(dir, "s2.wav", sine);
  const CommandResult result = run_cli({"oracle-separate", "--s1", s1.string(), "--s2",
                                        s2.string(), "--snr-db", "0", "--n", "128"});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  const auto& results = report.at("results");
  EXPECT_NEAR(results.at("source1_si_snr_improvement_db").get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(results.at("source2_si_snr_improvement_db").get<double>(), 0.0, 1e-9);
}

TEST(CliOracleSeparate, DisjointBandsImproveBothSources) {
  TempDir dir("separate");
  const auto s1 = write_signal(
      dir, "s1.wav", synth_test_signal(TestSignalKind::sine, 0, 8000, 8000, 300.0));
  const auto s2 = write_signal(
      dir, "s2.wav", synth_test_signal(TestSignalKind::sine, 0, 8000, 8000, 2000.0));
  const CommandResult result = run_cli({"oracle-separate", "--s1", s1.string(), "--s2",
                                        s2.string(), "--snr-db", "0", "--n", "128"});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  const auto& results = report.at("results");
  EXPECT_GT(results.at("source1_si_snr_improvement_db").get<double>(), 0.0);
  EXPECT_GT(results.at("source2_si_snr_improvement_db").get<double>(), 0.0);
}

TEST(CliSisnr, HandCaseEvaluatesToZeroDb) {
  TempDir dir("sisnr");
  AudioSignal ref;
  ref.sample_rate_hz = 8000;
  ref.samples.resize(2);
  ref.samples << 32767.0 / 32768.0, 0.0;
  AudioSignal est;
  est.sample_rate_hz = 8000;
  est.samples.resize(2);
  est.samples << 32767.0 / 32768.0, 32767.0 / 32768.0;
  const auto ref_path = write_signal(dir, "ref.wav", ref);
  const auto est_path = write_signal(dir, "est.wav", est);

  const CommandResult result =
      run_cli({"sisnr", "--est", est_path.string(), "--ref", ref_path.string()});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  EXPECT_EQ(report.at("results").at("si_snr_db").get<double>(), 0.0);
  EXPECT_NE(result.err.find("SI-SNR: 0.00 dB"), std::string::npos);
}

TEST(CliSisnr, PerfectEstimateReportsInfSentinel) {
  TempDir dir("sisnr");
  const AudioSignal sig = synth_test_signal(TestSignalKind::sine, 0, 500, 8000, 300.0);
  const auto path = write_signal(dir, "sig.wav", sig);
  const CommandResult result =
      run_cli({"sisnr", "--est", path.string(), "--ref", path.string()});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  EXPECT_EQ(report.at("results").at("si_snr_db"), "inf");
  EXPECT_NE(result.err.find("SI-SNR: inf dB"), std::string::npos);
}

TEST(CliSisnr, EstimateEqualToMixtureGivesZeroImprovement) {
  TempDir dir("sisnr");
  const AudioSignal a = synth_test_signal(TestSignalKind::sine, 0, 500, 8000, 300.0);
  const AudioSignal b = synth_test_signal(TestSignalKind::sine, 0, 500, 8000, 2000.0);
  MixAtSnr mix = mix_at_snr(a, b, 0.0);
  mix.mixture.samples *= 0.5;  // keep the written file inside [-1, 1]
  const auto ref = write_signal(dir, "ref.wav", mix.s1);
  const auto mixture = write_signal(dir, "mix.wav", mix.mixture);
  const CommandResult result = run_cli({"sisnr", "--est", mixture.string(), "--ref",
                                        ref.string(), "--mix", mixture.string()});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  EXPECT_EQ(report.at("results").at("si_snr_improvement_db").get<double>(), 0.0);
}

TEST(CliSisnr, OrthogonalEstimateReportsSentinelsNotGarbage) {
  // Whole-cycle sines at different frequencies are exactly orthogonal, so
  // the projection is zero: SI-SNR is -inf, and the improvement against a
  // mixture equal to the estimate is inf - inf.
  TempDir dir("sisnr");
  const auto est = write_signal(dir, "est.wav",
                                synth_test_signal(TestSignalKind::sine, 0, 8000, 8000, 300.0));
  const auto ref = write_signal(dir, "ref.wav",
                                synth_test_signal(TestSignalKind::sine, 0, 8000, 8000, 2000.0));
  const CommandResult result = run_cli(
      {"sisnr", "--est", est.string(), "--ref", ref.string(), "--mix", est.string()});
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = parse_report(result);
  EXPECT_EQ(report.at("results").at("si_snr_db"), "-inf");
  EXPECT_EQ(report.at("results").at("si_snr_improvement_db"), "nan");
  EXPECT_NE(result.err.find("SI-SNR: -inf dB"), std::string::npos);
  EXPECT_NE(result.err.find("SI-SNRi: nan dB"), std::string::npos);
}

TEST(CliSisnr, LengthMismatchIsUserError) {
  TempDir dir("sisnr");
  const auto a = write_signal(dir, "a.wav",
                              synth_test_signal(TestSignalKind::sine, 0, 500, 8000));
  const auto b = write_signal(dir, "b.wav",
                              synth_test_signal(TestSignalKind::sine, 0, 400, 8000));
  const CommandResult result =
      run_cli({"sisnr", "--est", a.string(), "--ref", b.string()});
  EXPECT_EQ(result.exit_code, 2);
}

TEST(Cli, UnknownFlagsAndSubcommandsAreUserErrors) {
  EXPECT_EQ(run_cli({"gen", "--n", "48", "--frobnicate"}).exit_code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run_cli({}).exit_code, 2);
}

TEST(Cli, HelpExitsCleanly) {
  const CommandResult result = run_cli({"--help"});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("gen"), std::string::npos);
}

TEST(Cli, MissingInputFileIsUserError) {
  const CommandResult result = run_cli({"roundtrip", "--in", "/nonexistent/in.wav"});
  EXPECT_EQ(result.exit_code, 2);
}

}  // namespace
}  // namespace mpgtf
