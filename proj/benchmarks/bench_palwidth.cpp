#include "palwidth/palwidth.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace palwidth;

namespace {

SpecPtr z_z2() { return make_spec({Factor::infinite_cyclic("A"), Factor::cyclic("B", 2)}); }

Word random_word(std::mt19937_64& rng, const SpecPtr& spec, std::size_t length)
{
    std::vector<Syllable> out;
    std::uniform_int_distribution<int> exp(1, 3), sign(0, 1);
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 2 == 0)
            out.push_back({factor_id(0), sign(rng) ? exp(rng) : -exp(rng)});
        else
            out.push_back({factor_id(1), 1});
    }
    return Word::reduced(spec, std::move(out));
}

} // namespace

static void BM_Multiply(benchmark::State& state)
{
    auto spec = z_z2();
    std::mt19937_64 rng(1);
    Word u = random_word(rng, spec, static_cast<std::size_t>(state.range(0)));
    Word v = invert(u.subword(u.length() / 2, u.length() - u.length() / 2)) * random_word(rng, spec, u.length());
    for (auto _ : state)
        benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_Multiply)->Range(8, 4096);

static void BM_ParseWord(benchmark::State& state)
{
    auto spec = z_z2();
    std::mt19937_64 rng(2);
    std::string text = format_word(random_word(rng, spec, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_word(text, spec));
}
BENCHMARK(BM_ParseWord)->Range(8, 4096);

static void BM_Delta1Witness(benchmark::State& state)
{
    auto fam = WitnessFamily::canonical_case_one();
    Word g = witness(fam, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta1(g, fam.a()));
    state.SetLabel(std::to_string(g.length()) + " syllables");
}
BENCHMARK(BM_Delta1Witness)->Arg(10)->Arg(50)->Arg(200);

static void BM_Delta2Witness(benchmark::State& state)
{
    auto fam = WitnessFamily::canonical_case_two();
    Word g = witness(fam, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta2(g, fam.a(), fam.c()));
    state.SetLabel(std::to_string(g.length()) + " syllables");
}
BENCHMARK(BM_Delta2Witness)->Arg(10)->Arg(50)->Arg(200);

static void BM_OracleZ3Z2(benchmark::State& state)
{
    auto spec = make_spec({Factor::cyclic("A", 3), Factor::cyclic("B", 2)});
    auto words = enumerate_reduced_words(spec, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        PalindromeOracle oracle(spec, SearchBudget{9, 4, 4});
        for (const Word& g : words)
            benchmark::DoNotOptimize(oracle.solve(g));
    }
    state.SetLabel(std::to_string(words.size()) + " words");
}
BENCHMARK(BM_OracleZ3Z2)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyZ2Z2(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_z2z2_width(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_VerifyZ2Z2)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
