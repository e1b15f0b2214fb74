#include <knapcrack/factoradic.hpp>
#include <knapcrack/rng.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace knapcrack;
using factoradic::FactorialDigits;

namespace {

FactorialDigits digits_of(long m, std::size_t g) {
    return factoradic::to_factorial_digits(BigInt(m), g);
}

std::vector<BigInt> vec(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("factorial digits") {
    TEST_CASE("worked decomposition of 6 in eight positions") {
        auto d = digits_of(6, 8);
        CHECK(d.digits == std::vector<unsigned>{0, 0, 0, 0, 1, 0, 0, 0});
        CHECK(factoradic::from_factorial_digits(d) == 6);
    }

    TEST_CASE("zero maps to all-zero digits") {
        auto d = digits_of(0, 6);
        CHECK(d.digits == std::vector<unsigned>(6, 0));
        CHECK(factoradic::from_factorial_digits(d) == 0);
    }

    TEST_CASE("5 = 2*2! + 1*1!") {
        auto d = digits_of(5, 3);
        CHECK(d.digits == std::vector<unsigned>{2, 1, 0});
        CHECK(factoradic::from_factorial_digits(d) == 5);
    }

    TEST_CASE("bounds are enforced") {
        CHECK_THROWS_AS(factoradic::to_factorial_digits(BigInt(-1), 3), std::out_of_range);
        CHECK_THROWS_AS(factoradic::to_factorial_digits(BigInt(6), 3), std::out_of_range);
        CHECK_THROWS_AS(factoradic::to_factorial_digits(BigInt(0), 0), std::invalid_argument);
        CHECK_NOTHROW(factoradic::to_factorial_digits(BigInt(5), 3));
    }

    TEST_CASE("from_factorial_digits validates digit ranges") {
        FactorialDigits bad;
        bad.digits = {3, 0, 0};  // d_1 may be at most g-1 = 2
        CHECK_THROWS_AS(factoradic::from_factorial_digits(bad), std::invalid_argument);
        FactorialDigits tail;
        tail.digits = {0, 0, 1};  // last digit must be 0
        CHECK_THROWS_AS(factoradic::from_factorial_digits(tail), std::invalid_argument);
        FactorialDigits empty;
        CHECK_THROWS_AS(factoradic::from_factorial_digits(empty), std::invalid_argument);
    }

    TEST_CASE("bijection on [0, g!) for g up to 8") {
        for (std::size_t g = 1; g <= 8; ++g) {
            BigInt limit = factorial(static_cast<unsigned long>(g));
            std::set<std::vector<std::size_t>> perms;
            for (BigInt m = 0; m < limit; ++m) {
                auto d = factoradic::to_factorial_digits(m, g);
                REQUIRE(factoradic::from_factorial_digits(d) == m);
                perms.insert(factoradic::decode_permutation(d));
            }
            // Distinct values hit all g! permutations exactly once.
            CHECK(perms.size() == limit.get_ui());
        }
    }

    TEST_CASE("digit order mirrors value order for g up to 6") {
        for (std::size_t g = 2; g <= 6; ++g) {
            BigInt limit = factorial(static_cast<unsigned long>(g));
            std::vector<unsigned> previous;
            for (BigInt m = 0; m < limit; ++m) {
                auto d = factoradic::to_factorial_digits(m, g);
                if (m > 0) CHECK(previous < d.digits);
                previous = d.digits;
            }
        }
    }
}

TEST_SUITE("permutation decoding") {
    TEST_CASE("all-zero digits decode to the identity") {
        auto perm = factoradic::decode_permutation(digits_of(0, 5));
        CHECK(perm == std::vector<std::size_t>{0, 1, 2, 3, 4});
    }

    TEST_CASE("published five-element transposition for value 6") {
        // Labels stored position-first; value 6 swaps the third and fourth
        // entries of the five-element sequence.
        auto perm = factoradic::decode_permutation(digits_of(6, 5));
        CHECK(perm == std::vector<std::size_t>{0, 2, 1, 3, 4});
    }

    TEST_CASE("published three-element table for values 0 through 5") {
        // With stored labels (x, y, z), the six permutations in value order.
        const std::vector<std::vector<std::size_t>> expected{
            {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (long m = 0; m < 6; ++m) {
            CHECK(factoradic::decode_permutation(digits_of(m, 3)) == expected[m]);
        }
    }

    TEST_CASE("decoded output is a bijection for large g and big values") {
        Rng rng(17);
        for (int round = 0; round < 4; ++round) {
            std::size_t g = 170;
            BigInt m = rng.uniform_below(factorial(static_cast<unsigned long>(g)));
            auto perm = factoradic::decode_permutation(factoradic::to_factorial_digits(m, g));
            REQUIRE(perm.size() == g);
            std::vector<bool> seen(g, false);
            for (std::size_t p : perm) {
                REQUIRE(p < g);
                CHECK_FALSE(seen[p]);
                seen[p] = true;
            }
        }
    }
}

TEST_SUITE("selection") {
    TEST_CASE("value 6 over five entries keeps the permuted first three") {
        auto sel = factoradic::apply_selection(vec({10, 20, 30, 40, 50}), digits_of(6, 5), 3);
        CHECK(sel.values == vec({10, 30, 20}));
        CHECK(sel.positions == std::vector<std::size_t>{0, 2, 1});
        CHECK(sel.source_size == 5);
    }

    TEST_CASE("value 0 with take=g is the identity") {
        auto sel = factoradic::apply_selection(vec({7, 8, 9}), digits_of(0, 3), 3);
        CHECK(sel.values == vec({7, 8, 9}));
        CHECK(sel.positions == std::vector<std::size_t>{0, 1, 2});
    }

    TEST_CASE("value 5 over three entries, take two") {
        auto sel = factoradic::apply_selection(vec({10, 20, 30}), digits_of(5, 3), 2);
        CHECK(sel.values == vec({30, 20}));
        CHECK(sel.positions == std::vector<std::size_t>{2, 1});
    }

    TEST_CASE("validation") {
        CHECK_THROWS_AS(factoradic::apply_selection(vec({1, 2}), digits_of(0, 3), 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(factoradic::apply_selection(vec({1, 2, 3}), digits_of(0, 3), 4),
                        std::invalid_argument);
        CHECK_THROWS_AS(factoradic::apply_selection(vec({1, 2, 3}), digits_of(0, 3), 0),
                        std::invalid_argument);
    }

    TEST_CASE("selected values carry their true source positions") {
        Rng rng(23);
        std::vector<BigInt> base;
        for (int i = 0; i < 9; ++i) base.push_back(BigInt(100 + 11 * i));
        for (int round = 0; round < 30; ++round) {
            BigInt m = rng.uniform_below(factorial(9));
            auto sel =
                factoradic::apply_selection(base, factoradic::to_factorial_digits(m, 9), 4);
            REQUIRE(sel.values.size() == 4);
            std::set<std::size_t> distinct(sel.positions.begin(), sel.positions.end());
            CHECK(distinct.size() == 4);
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(sel.values[j] == base[sel.positions[j]]);
            }
        }
    }
}
