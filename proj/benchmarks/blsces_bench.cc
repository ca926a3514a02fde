#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "blsces/bls.h"
#include "blsces/ces.h"
#include "blsces/group.h"
#include "blsces/zk/zkces.h"

namespace blsces {
namespace {

const bls::KeyPair& keys() {
  static const bls::KeyPair kp = [] {
    SeededRandom rng(1);
    return bls::keygen(rng);
  }();
  return kp;
}

Credential credential(size_t n) {
  Credential c;
  for (size_t i = 0; i < n; ++i) {
    c.claims.push_back(Claim::make("did:ex:bench", "p" + std::to_string(i), std::to_string(20 + i)));
  }
  return c;
}

void BM_Pairing(benchmark::State& state) {
  const auto& gp = GroupParams::bn254();
  for (auto _ : state) benchmark::DoNotOptimize(pairing(gp.g1, gp.g2));
}
BENCHMARK(BM_Pairing)->Unit(benchmark::kMillisecond);

void BM_HashToG1(benchmark::State& state) {
  std::vector<uint8_t> msg(64, 7);
  uint8_t k = 0;
  for (auto _ : state) {
    msg[0] = k++;
    benchmark::DoNotOptimize(bls::hash_to_g1(msg));
  }
}
BENCHMARK(BM_HashToG1)->Unit(benchmark::kMicrosecond);

void BM_Sign(benchmark::State& state) {
  std::vector<uint8_t> msg = {'a', 'b', 'c'};
  for (auto _ : state) benchmark::DoNotOptimize(bls::sign(keys().sk, msg));
}
BENCHMARK(BM_Sign)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  std::vector<uint8_t> msg = {'a', 'b', 'c'};
  auto sig = bls::sign(keys().sk, msg);
  for (auto _ : state) benchmark::DoNotOptimize(bls::verify(keys().pk, msg, sig));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

// Extraction of every claim from an n-claim credential.
void BM_CesVerify(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  auto sc = ces_sign(keys().sk, credential(n), Ceas(n, {IndexSet::full(n)}));
  auto pres = ces_extract(sc, IndexSet::full(n));
  for (auto _ : state) benchmark::DoNotOptimize(ces_verify(keys().pk, pres));
}
BENCHMARK(BM_CesVerify)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ZkProve(benchmark::State& state) {
  auto sc = ces_sign(keys().sk, credential(3), Ceas(3, {IndexSet(3, 0b010)}));
  SeededRandom rng(2);
  auto params = zk::make_backend(zk::kTransparentBackend)->setup(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zk::prove_extraction(params, sc, IndexSet(3, 0b010), zk::Predicate::range(1, 18, 65)));
  }
}
BENCHMARK(BM_ZkProve)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_ZkVerify(benchmark::State& state) {
  auto sc = ces_sign(keys().sk, credential(3), Ceas(3, {IndexSet(3, 0b010)}));
  SeededRandom rng(2);
  auto params = zk::make_backend(zk::kTransparentBackend)->setup(rng);
  auto bundle =
      zk::prove_extraction(params, sc, IndexSet(3, 0b010), zk::Predicate::range(1, 18, 65));
  for (auto _ : state) benchmark::DoNotOptimize(zk::zk_verify(params, keys().pk, bundle));
}
BENCHMARK(BM_ZkVerify)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
}  // namespace blsces
BENCHMARK_MAIN();
