#pragma once

#include "knapcrack/attack.hpp"
#include "knapcrack/bigint.hpp"
#include "knapcrack/hwang.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knapcrack::experiment {

/*
 * Grid sweep over attack configurations.  For scheme "mh" the shape axis
 * is n_values; for scheme "hwang" it is the hwang_shapes list (already
 * validated triples).  Every axis combination runs `trials` independent
 * keygen/encrypt/attack rounds.
 */
struct Grid {
    std::string scheme = "mh";
    std::vector<std::size_t> n_values;
    std::vector<hwang::Params> hwang_shapes;  // gap_bits field ignored here
    std::vector<unsigned> gap_bits_values;
    std::vector<std::size_t> t_values;
    std::vector<BigRat> delta_values;
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
};

struct Row {
    std::string scheme;
    std::size_t n = 0;  // mh only
    hwang::Params shape;  // hwang only
    unsigned gap_bits = 0;
    std::size_t t = 0;
    BigRat delta;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double mean_ms = 0.0;
};

struct Report {
    std::vector<Row> rows;
    /*
     * Count of attack outputs that passed re-encryption verification yet
     * differed from the true plaintext.  The verification identity makes
     * this structurally zero; it is tracked to prove that claim per run.
     */
    std::size_t verified_mismatches = 0;
};

/*
 * Per-trial seeds derive from the master seed via two rounds of the
 * splitmix64 finalizer: scramble(scramble(master + GOLDEN*(row_index+1))
 * + GOLDEN*(trial_index+1)) with GOLDEN = 0x9E3779B97F4A7C15.  Trial
 * messages come from the same per-trial stream as the keys, so a report
 * is a pure function of (grid, master_seed).
 */
std::uint64_t trial_seed(std::uint64_t master, std::size_t row_index, std::size_t trial_index);

Report run(const Grid& grid);

/*
 * Text report.  `row` lines are a pure function of grid and seed; `timing`
 * lines repeat the configuration with wall-clock means and are the only
 * non-reproducible part.
 */
std::string serialize_report(const Grid& grid, const Report& report);

/* The reproducible subset: header plus row lines only. */
std::string serialize_report_rows(const Grid& grid, const Report& report);

}  // namespace knapcrack::experiment
