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

#include <benchmark/benchmark.h>

#include "mpgtf/erb.hpp"
#include "mpgtf/filterbank.hpp"
#include "mpgtf/gammatone.hpp"
#include "mpgtf/transform.hpp"

namespace {

void BM_CenterFrequencies(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpgtf::center_frequencies(100.0, 4000.0));
  }
}
BENCHMARK(BM_CenterFrequencies);

void BM_BuildMpgtf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpgtf::build_mpgtf(n));
  }
}
BENCHMARK(BM_BuildMpgtf)->Arg(48)->Arg(128)->Arg(512);

void BM_NormalizeFrequencyPeak(benchmark::State& state) {
  mpgtf::FilterSpec spec;
  spec.fc_hz = 1000.0;
  spec.bandwidth_hz = mpgtf::erb_bandwidth_hz(1000.0) / 1.57;
  Eigen::VectorXd h = mpgtf::gammatone_impulse_response(spec, 8000, 16);
  for (auto _ : state) {
    Eigen::VectorXd scaled = h;
    benchmark::DoNotOptimize(mpgtf::normalize_frequency_peak(scaled));
  }
}
BENCHMARK(BM_NormalizeFrequencyPeak);

void BM_PseudoInverseDecoder(benchmark::State& state) {
  const mpgtf::Filterbank bank = mpgtf::build_mpgtf(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpgtf::pseudo_inverse_decoder(bank));
  }
}
BENCHMARK(BM_PseudoInverseDecoder)->Arg(48)->Arg(128)->Arg(512);

}  // namespace
