#include "knapcrack/experiment.hpp"

#include "knapcrack/io.hpp"
#include "knapcrack/rng.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace knapcrack::experiment {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t scramble(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

BitVector bits_of(const BigInt& value, std::size_t width) {
    BitVector bits(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        bits[i] = static_cast<std::uint8_t>(
            mpz_tstbit(value.get_mpz_t(), static_cast<mp_bitcnt_t>(width - 1 - i)));
    }
    return bits;
}

struct TrialOutcome {
    bool success = false;
    bool verified_mismatch = false;
};

TrialOutcome run_mh_trial(std::size_t n, unsigned gap_bits, const attack::Config& cfg,
                          std::uint64_t seed) {
    Rng rng(seed);
    auto [priv, pub] = mh_keygen(n, gap_bits, rng);
    const BitVector message = bits_of(rng.uniform_bits(n), n);
    const BigInt c = mh_encrypt(pub, message);
    const std::vector<BigInt> cts{c};
    const auto result = attack::attack_mh(pub.a, cts, cfg);
    TrialOutcome out;
    if (result.plaintexts[0]) {
        out.success = *result.plaintexts[0] == message;
        out.verified_mismatch = !out.success;
    }
    return out;
}

TrialOutcome run_hwang_trial(const hwang::Params& params, const attack::Config& cfg,
                             std::uint64_t seed) {
    Rng rng(seed);
    auto [priv, pub] = hwang::keygen(params, rng);
    const BigInt msg_value = rng.uniform_bits(128);
    Bytes message(16, 0);
    for (std::size_t i = 0; i < 16; ++i) {
        BigInt byte = (msg_value >> (8 * (15 - i))) & 0xFF;
        message[i] = static_cast<std::uint8_t>(byte.get_ui());
    }
    const auto env = hwang::encrypt(pub, message);
    const auto result = attack::attack_hwang(pub, env, cfg);
    TrialOutcome out;
    if (result.message) {
        out.success = *result.message == message;
        out.verified_mismatch = !out.success;
    }
    return out;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::size_t row_index, std::size_t trial_index) {
    std::uint64_t s = scramble(master + kGolden * (static_cast<std::uint64_t>(row_index) + 1));
    return scramble(s + kGolden * (static_cast<std::uint64_t>(trial_index) + 1));
}

Report run(const Grid& grid) {
    if (grid.trials == 0) throw std::invalid_argument("experiment: trials must be >= 1");
    if (grid.gap_bits_values.empty() || grid.t_values.empty() || grid.delta_values.empty()) {
        throw std::invalid_argument("experiment: every axis needs at least one value");
    }
    const bool is_mh = grid.scheme == "mh";
    if (is_mh && grid.n_values.empty()) {
        throw std::invalid_argument("experiment: mh grid needs n values");
    }
    if (!is_mh && grid.scheme != "hwang") {
        throw std::invalid_argument("experiment: unknown scheme " + grid.scheme);
    }
    if (!is_mh && grid.hwang_shapes.empty()) {
        throw std::invalid_argument("experiment: hwang grid needs shape triples");
    }

    Report report;
    const std::size_t shapes = is_mh ? grid.n_values.size() : grid.hwang_shapes.size();
    std::size_t row_index = 0;
    for (std::size_t si = 0; si < shapes; ++si) {
        for (unsigned gap : grid.gap_bits_values) {
            for (std::size_t t : grid.t_values) {
                for (const BigRat& delta : grid.delta_values) {
                    attack::Config cfg;
                    cfg.t = t;
                    cfg.delta = delta;
                    Row row;
                    row.scheme = grid.scheme;
                    row.gap_bits = gap;
                    row.t = t;
                    row.delta = delta;
                    row.trials = grid.trials;
                    if (is_mh) {
                        row.n = grid.n_values[si];
                    } else {
                        row.shape = grid.hwang_shapes[si];
                        row.shape.gap_bits = gap;
                    }
                    double total_ms = 0.0;
                    for (std::size_t trial = 0; trial < grid.trials; ++trial) {
                        const std::uint64_t seed =
                            trial_seed(grid.master_seed, row_index, trial);
                        const auto start = std::chrono::steady_clock::now();
                        TrialOutcome outcome =
                            is_mh ? run_mh_trial(row.n, gap, cfg, seed)
                                  : run_hwang_trial(row.shape, cfg, seed);
                        const auto stop = std::chrono::steady_clock::now();
                        total_ms +=
                            std::chrono::duration<double, std::milli>(stop - start).count();
                        if (outcome.success) ++row.successes;
                        if (outcome.verified_mismatch) ++report.verified_mismatches;
                    }
                    row.mean_ms = total_ms / static_cast<double>(grid.trials);
                    report.rows.push_back(std::move(row));
                    ++row_index;
                }
            }
        }
    }
    return report;
}

namespace {

void append_row_key(std::ostringstream& out, const Row& row) {
    if (row.scheme == "mh") {
        out << "n=" << row.n;
    } else {
        out << "s=" << row.shape.subsets << " g=" << row.shape.subset_size
            << " c=" << row.shape.select;
    }
    out << " gap_bits=" << row.gap_bits << " t=" << row.t
        << " delta=" << io::format_rational(row.delta);
}

std::string header(const Grid& grid) {
    std::ostringstream out;
    out << io::kExperimentMagic << '\n';
    out << "scheme " << grid.scheme << '\n';
    out << "seed " << grid.master_seed << '\n';
    out << "trials " << grid.trials << '\n';
    return out.str();
}

}  // namespace

std::string serialize_report_rows(const Grid& grid, const Report& report) {
    std::ostringstream out;
    out << header(grid);
    for (const Row& row : report.rows) {
        out << "row ";
        append_row_key(out, row);
        out << " trials=" << row.trials << " successes=" << row.successes << '\n';
    }
    out << "end\n";
    return out.str();
}

std::string serialize_report(const Grid& grid, const Report& report) {
    std::ostringstream out;
    out << header(grid);
    for (const Row& row : report.rows) {
        out << "row ";
        append_row_key(out, row);
        out << " trials=" << row.trials << " successes=" << row.successes << '\n';
    }
    for (const Row& row : report.rows) {
        out << "timing ";
        append_row_key(out, row);
        char buf[64];
        std::snprintf(buf, sizeof buf, " mean_ms=%.3f", row.mean_ms);
        out << buf << '\n';
    }
    out << "end\n";
    return out.str();
}

}  // namespace knapcrack::experiment
