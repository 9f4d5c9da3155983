#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galintel/corpus.hpp"
#include "galintel/intelligibility.hpp"

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::filesystem::path kHeaviestEntry =
    std::filesystem::path(GALINTEL_CORPUS_DIR) / "eq20_spalart_allmaras";

void bm_parse_turbulence_model(benchmark::State& state) {
    const std::string source = slurp(kHeaviestEntry / "statement.gal");
    for (auto _ : state) {
        benchmark::DoNotOptimize(galintel::parse_statement(source));
    }
}
BENCHMARK(bm_parse_turbulence_model);

void bm_score_turbulence_model(benchmark::State& state) {
    const auto stmt = galintel::parse_statement(slurp(kHeaviestEntry / "statement.gal"));
    const auto annotations = galintel::load_annotations(kHeaviestEntry / "annotations.json");
    for (auto _ : state) {
        benchmark::DoNotOptimize(galintel::score_statement(stmt, annotations));
    }
}
BENCHMARK(bm_score_turbulence_model);

void bm_corpus_report(benchmark::State& state) {
    const auto load = galintel::load_corpus(GALINTEL_CORPUS_DIR);
    for (auto _ : state) {
        benchmark::DoNotOptimize(galintel::report_csv(galintel::score_corpus(load.entries)));
    }
}
BENCHMARK(bm_corpus_report);

}  // namespace

BENCHMARK_MAIN();
