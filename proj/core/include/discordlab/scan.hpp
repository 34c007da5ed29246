#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "discordlab/measures.hpp"
#include "discordlab/sampling.hpp"

namespace discordlab {

/// One row of a Monte-Carlo scan. neg_sq and gap are computed directly from
/// the other fields (neg_sq = negativity^2, gap = discord - neg_sq).
struct ScanRecord {
    std::size_t index;
    double discord;
    double negativity;
    double neg_sq;
    double gap;
    std::size_t neg_count;
};

struct ScanSummary {
    std::size_t total = 0;
    std::size_t violations = 0;
    double min_gap = 0.0;
    std::size_t min_gap_index = 0;
    std::size_t saturation_count = 0; // samples with neg_count == dim_b - 1
};

struct ScanResult {
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

ScanRecord evaluate_record(const BipartiteState& s, std::size_t index);

/// Evaluate `count` ensemble samples on a worker pool. Records end up in
/// index order and are a pure function of (cfg, count); the number of
/// workers never changes the result (0 picks the hardware concurrency).
/// Throws DimensionError unless cfg.dim_a = 2 (the exact discord needs it).
ScanResult run_scan(const SamplerConfig& cfg, std::size_t count, unsigned threads = 0);

/// Histogram of negative partial-transpose eigenvalue counts.
struct PptHistogram {
    std::vector<std::size_t> occurrences; // occurrences[c] = samples with count c
    std::size_t total = 0;
    bool bound_violated = false; // dim_a == 2 and some count > dim_b - 1
};

/// Count PT-negative eigenvalues over `count` samples; `pure` switches from
/// the Ginibre ensemble to Haar-random pure states.
PptHistogram run_ppt_count(const SamplerConfig& cfg, std::size_t count, bool pure,
                           unsigned threads = 0);

/// One grid point of a Werner sweep. Closed-form columns hold NaN when no
/// closed form applies to the requested (m, view) combination.
struct WernerRow {
    double z;
    double discord_numeric;
    double discord_closed;
    double neg_numeric;
    double neg_closed;
    double gap; // discord_numeric - neg_numeric^2
};

struct WernerSweep {
    std::size_t m = 0;
    std::size_t view_a = 0;
    std::size_t view_b = 0;
    std::vector<WernerRow> rows;
    std::optional<double> boundary; // closed-form gap zero crossing, when bracketable
};

/// Sweep the m⊗m Werner family viewed as view_a⊗view_b over z in
/// [z_min, z_max] with `steps` intervals (steps+1 grid points). The view must
/// factor the same total dimension and have view_a = 2 so the exact discord
/// applies. Closed-form negativity is available for m = 4 viewed as 2⊗8; the
/// closed-form discord for every m. The violation boundary is bracketed by a
/// sign change of the closed-form gap and bisected to 1e-12.
WernerSweep werner_sweep(std::size_t m, std::size_t view_a, std::size_t view_b, double z_min,
                         double z_max, std::size_t steps);

} // namespace discordlab
