#include <knapcrack/attack.hpp>
#include <knapcrack/hwang.hpp>
#include <knapcrack/merkle_hellman.hpp>
#include <knapcrack/rng.hpp>

#include <benchmark/benchmark.h>

#include <cstddef>

using namespace knapcrack;

namespace {

void BM_recover_key(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    auto [priv, pub] = mh_keygen(n, 8, rng);
    attack::Config cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(attack::recover_key(pub.a, cfg));
    }
}

void BM_attack_hwang_full_cycle(benchmark::State& state) {
    // Keygen + encrypt + attack at the full published dimensions, the
    // end-to-end cost an eavesdropper pays per intercepted message.
    auto params = hwang::Params::published_scale();
    const Bytes msg{'a', 't', 't', 'a', 'c', 'k', ' ', 'a', 't', ' ',
                    'd', 'a', 'w', 'n'};
    std::uint64_t seed = 2;
    for (auto _ : state) {
        Rng rng(seed);
        auto [priv, pub] = hwang::keygen(params, rng);
        auto env = hwang::encrypt(pub, msg);
        benchmark::DoNotOptimize(attack::attack_hwang(pub, env, attack::Config{}));
    }
}

}  // namespace

BENCHMARK(BM_recover_key)->Arg(8)->Arg(24)->Arg(64)->Arg(256)->Arg(1360)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_attack_hwang_full_cycle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
