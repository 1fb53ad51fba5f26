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

#include "mpgtf/audio_io.hpp"
#include "mpgtf/filterbank.hpp"
#include "mpgtf/metrics.hpp"
#include "mpgtf/transform.hpp"

namespace {

mpgtf::AudioSignal noise_signal(int length) {
  return mpgtf::synth_test_signal(mpgtf::TestSignalKind::noise, 7, length, 8000);
}

void BM_Encode(benchmark::State& state) {
  const mpgtf::Filterbank bank = mpgtf::build_mpgtf(128);
  const mpgtf::AudioSignal x = noise_signal(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpgtf::encode(x, bank));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Encode)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Decode(benchmark::State& state) {
  const mpgtf::Filterbank bank = mpgtf::build_mpgtf(128);
  const mpgtf::Filterbank decoder = mpgtf::pseudo_inverse_decoder(bank);
  const mpgtf::AudioSignal x = noise_signal(static_cast<int>(state.range(0)));
  const mpgtf::EncodedSignal enc = mpgtf::encode(x, bank);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpgtf::decode(enc, decoder, x.length()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decode)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_RectifiedRoundTrip(benchmark::State& state) {
  const mpgtf::Filterbank bank = mpgtf::build_mpgtf(128);
  const mpgtf::Filterbank decoder = mpgtf::pseudo_inverse_decoder(bank);
  const mpgtf::AudioSignal x = noise_signal(8000);
  for (auto _ : state) {
    const mpgtf::EncodedSignal rect = mpgtf::rectify(mpgtf::encode(x, bank));
    benchmark::DoNotOptimize(mpgtf::decode(rect, decoder, x.length()));
  }
}
BENCHMARK(BM_RectifiedRoundTrip);

void BM_SiSnr(benchmark::State& state) {
  const mpgtf::AudioSignal ref = noise_signal(static_cast<int>(state.range(0)));
  mpgtf::AudioSignal est = ref;
  est.samples.array() += 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpgtf::si_snr_db(
        {est.samples.data(), static_cast<size_t>(est.length())},
        {ref.samples.data(), static_cast<size_t>(ref.length())}));
  }
}
BENCHMARK(BM_SiSnr)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
