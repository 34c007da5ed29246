#include "discordlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "discordlab/errors.hpp"
#include "discordlab/rng.hpp"
#include "discordlab/state_families.hpp"

namespace discordlab {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

ScanSummary summarize(const std::vector<ScanRecord>& records, std::size_t dim_b) {
    ScanSummary s;
    s.total = records.size();
    s.min_gap = std::numeric_limits<double>::infinity();
    for (const ScanRecord& r : records) {
        if (r.gap < -1e-10) ++s.violations;
        if (r.gap < s.min_gap) {
            s.min_gap = r.gap;
            s.min_gap_index = r.index;
        }
        if (r.neg_count == dim_b - 1) ++s.saturation_count;
    }
    if (records.empty()) s.min_gap = 0.0;
    return s;
}

} // namespace

ScanRecord evaluate_record(const BipartiteState& s, std::size_t index) {
    const double d = discord_2n(s).value;
    const NegativityResult n = negativity(s);
    const double neg_sq = n.value * n.value;
    return ScanRecord{index, d, n.value, neg_sq, d - neg_sq, n.negative_count};
}

ScanResult run_scan(const SamplerConfig& cfg, std::size_t count, unsigned threads) {
    if (cfg.dim_a != 2) throw DimensionError("run_scan: exact discord requires dim_a = 2");

    ScanResult result;
    result.records.resize(count);
    parallel_for(count, threads, [&](std::size_t i) {
        result.records[i] = evaluate_record(sample_state(cfg, i), i);
    });
    result.summary = summarize(result.records, cfg.dim_b);
    return result;
}

PptHistogram run_ppt_count(const SamplerConfig& cfg, std::size_t count, bool pure,
                           unsigned threads) {
    std::vector<std::size_t> counts(count);
    parallel_for(count, threads, [&](std::size_t i) {
        const BipartiteState s =
            pure ? random_pure_state(cfg.dim_a, cfg.dim_b, substream_seed(cfg.seed, i))
                 : sample_state(cfg, i);
        counts[i] = negative_count(s);
    });

    PptHistogram h;
    h.total = count;
    const std::size_t max_count = count ? *std::max_element(counts.begin(), counts.end()) : 0;
    h.occurrences.assign(max_count + 1, 0);
    for (std::size_t c : counts) ++h.occurrences[c];
    h.bound_violated = cfg.dim_a == 2 && max_count > cfg.dim_b - 1;
    return h;
}

WernerSweep werner_sweep(std::size_t m, std::size_t view_a, std::size_t view_b, double z_min,
                         double z_max, std::size_t steps) {
    if (m * m != view_a * view_b)
        throw DimensionError("werner_sweep: view does not factor the m*m total dimension");
    if (view_a != 2) throw DimensionError("werner_sweep: exact discord requires a 2⊗n view");
    if (steps == 0 || !(z_min < z_max) || z_min < -1.0 || z_max > 1.0)
        throw RangeError("werner_sweep: invalid z grid");

    const bool closed_neg = (m == 4 && view_a == 2 && view_b == 8);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    WernerSweep sweep;
    sweep.m = m;
    sweep.view_a = view_a;
    sweep.view_b = view_b;
    sweep.rows.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double z = z_min + (z_max - z_min) * static_cast<double>(i) / static_cast<double>(steps);
        const BipartiteState view = reinterpret(werner_state({m, z}), view_a, view_b);
        const double d_num = discord_2n(view).value;
        const double n_num = negativity(view).value;
        sweep.rows.push_back(WernerRow{z, d_num, werner_discord_closed(m, z), n_num,
                                       closed_neg ? werner_negativity_2x8_closed(z) : nan,
                                       d_num - n_num * n_num});
    }

    if (closed_neg) {
        // Bracket a sign change of the closed-form gap on the grid, then
        // bisect to 1e-12.
        const auto closed_gap = [m](double z) {
            const double n = werner_negativity_2x8_closed(z);
            return werner_discord_closed(m, z) - n * n;
        };
        for (std::size_t i = 0; i + 1 < sweep.rows.size(); ++i) {
            double lo = sweep.rows[i].z;
            double hi = sweep.rows[i + 1].z;
            double glo = closed_gap(lo);
            if (glo == 0.0) {
                sweep.boundary = lo;
                break;
            }
            if (glo * closed_gap(hi) < 0.0) {
                while (hi - lo > 1e-12) {
                    const double mid = 0.5 * (lo + hi);
                    const double gm = closed_gap(mid);
                    if (glo * gm <= 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        glo = gm;
                    }
                }
                sweep.boundary = 0.5 * (lo + hi);
                break;
            }
        }
    }
    return sweep;
}

} // namespace discordlab
