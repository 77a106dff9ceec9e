#include <benchmark/benchmark.h>

#include "scltwist/certificates.hpp"
#include "scltwist/commutator.hpp"
#include "scltwist/numerology.hpp"
#include "scltwist/pi1_action.hpp"
#include "scltwist/proof_script.hpp"

using namespace scltwist;

static void BM_CullerExpand(benchmark::State& state) {
  const Word u = Word::generator("u");
  const Word v = Word::generator("v");
  for (auto _ : state) {
    benchmark::DoNotOptimize(culler_expand(u, v, state.range(0)));
  }
}
BENCHMARK(BM_CullerExpand)->Arg(8)->Arg(33)->Arg(129);

static void BM_BavardExpand(benchmark::State& state) {
  std::vector<std::pair<Word, Word>> pairs;
  for (int i = 1; i <= 3; ++i) {
    pairs.emplace_back(Word::generator("u" + std::to_string(i)), Word::generator("v" + std::to_string(i)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(bavard_expand(pairs, state.range(0)));
  }
}
BENCHMARK(BM_BavardExpand)->Arg(6)->Arg(24);

static void BM_CheckTheoremScript(benchmark::State& state) {
  const ProofScript script = theorem3_script();
  const CurveConfiguration config = CurveConfiguration::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_script(script, config));
  }
}
BENCHMARK(BM_CheckTheoremScript);

static void BM_CertifyTheoremCertificate(benchmark::State& state) {
  const TwistCertificate cert = theorem3_certificate();
  const CurveConfiguration config = CurveConfiguration::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(cert, config));
  }
}
BENCHMARK(BM_CertifyTheoremCertificate);

static void BM_ValidateModel(benchmark::State& state) {
  const TwistModel model = TwistModel::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_model(model));
  }
}
BENCHMARK(BM_ValidateModel);

static void BM_IntersectionMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_matrix(state.range(0)));
  }
}
BENCHMARK(BM_IntersectionMatrix)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
