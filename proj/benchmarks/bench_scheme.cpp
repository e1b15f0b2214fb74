#include <knapcrack/hwang.hpp>
#include <knapcrack/merkle_hellman.hpp>
#include <knapcrack/rng.hpp>

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>

using namespace knapcrack;

namespace {

Bytes random_message(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Bytes msg(len);
    for (auto& b : msg) b = static_cast<std::uint8_t>(gen());
    return msg;
}

void BM_mh_keygen(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(mh_keygen(n, 8, rng));
    }
}

void BM_hwang_keygen_full_scale(benchmark::State& state) {
    auto params = hwang::Params::published_scale();
    std::uint64_t seed = 1;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(hwang::keygen(params, rng));
    }
}

void BM_hwang_encrypt_full_scale(benchmark::State& state) {
    auto params = hwang::Params::published_scale();
    Rng rng(2);
    auto [priv, pub] = hwang::keygen(params, rng);
    const Bytes msg = random_message(static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hwang::encrypt(pub, msg));
    }
}

void BM_hwang_decrypt_full_scale(benchmark::State& state) {
    auto params = hwang::Params::published_scale();
    Rng rng(2);
    auto [priv, pub] = hwang::keygen(params, rng);
    const Bytes msg = random_message(static_cast<std::size_t>(state.range(0)), 9);
    const auto env = hwang::encrypt(pub, msg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hwang::decrypt(priv, env));
    }
}

}  // namespace

BENCHMARK(BM_mh_keygen)->Arg(8)->Arg(64)->Arg(1360)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_hwang_keygen_full_scale)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hwang_encrypt_full_scale)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hwang_decrypt_full_scale)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);
