#include <knapcrack/attack.hpp>
#include <knapcrack/lattice.hpp>
#include <knapcrack/merkle_hellman.hpp>
#include <knapcrack/rng.hpp>

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

using namespace knapcrack;

namespace {

lattice::IntegerBasis random_basis(std::size_t dim, unsigned bits, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    lattice::IntegerBasis basis;
    for (;;) {
        basis.rows.clear();
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<BigInt> row;
            for (std::size_t j = 0; j < dim; ++j) {
                BigInt v = 0;
                for (unsigned chunk = 0; chunk < bits; chunk += 32) {
                    v <<= 32;
                    v += static_cast<unsigned long>(gen() & 0xFFFFFFFFu);
                }
                v >>= (32 - bits % 32) % 32;
                if (gen() & 1u) v = -v;
                row.push_back(std::move(v));
            }
            basis.rows.push_back(std::move(row));
        }
        if (lattice::determinant(basis) != 0) return basis;
    }
}

void BM_lll_random(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto bits = static_cast<unsigned>(state.range(1));
    const auto basis = random_basis(dim, bits, 7);
    const BigRat delta(99, 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lattice::lll_reduce(basis, delta));
    }
}

void BM_lll_sda_basis(benchmark::State& state) {
    // The attack lattice for an n-element key at the default slice width;
    // entry magnitudes grow with n, which is what drives the cost.
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    auto [priv, pub] = mh_keygen(n, 8, rng);
    attack::Config cfg;
    const auto basis = attack::build_sda_lattice(pub.a, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lattice::lll_reduce(basis, cfg.delta));
    }
}

}  // namespace

BENCHMARK(BM_lll_random)
    ->ArgsProduct({{2, 4, 6, 8}, {16, 32}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_lll_sda_basis)->Arg(8)->Arg(24)->Arg(64)->Arg(256)->Arg(1360)
    ->Unit(benchmark::kMicrosecond);
