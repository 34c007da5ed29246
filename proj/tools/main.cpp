#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "discordlab/bloch.hpp"
#include "discordlab/errors.hpp"
#include "discordlab/measures.hpp"
#include "discordlab/report.hpp"
#include "discordlab/scan.hpp"
#include "discordlab/state_io.hpp"

namespace fs = std::filesystem;
using namespace discordlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTheoremViolation = 3;
constexpr int kExitIo = 4;

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    return out;
}

// out.csv -> out.violator.json, placed beside the CSV.
fs::path violator_path(fs::path csv) {
    csv.replace_extension();
    csv += ".violator.json";
    return csv;
}

struct ScanOptions {
    std::size_t dim_a = 2;
    std::size_t dim_b = 2;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::size_t ginibre_k = 0;
    std::string out;
    std::string svg;
};

int run_scan_cmd(const ScanOptions& opt) {
    const SamplerConfig cfg{opt.dim_a, opt.dim_b, opt.ginibre_k, opt.seed};
    std::ofstream csv = open_output(opt.out);

    const ScanResult result = run_scan(cfg, opt.count);
    write_scan_csv(csv, result.records);
    if (!csv) throw IoError("error while writing: " + opt.out);

    if (!opt.svg.empty()) {
        std::ofstream svg = open_output(opt.svg);
        write_scan_svg(svg, result.records);
    }

    const ScanSummary& s = result.summary;
    std::cout << "total " << s.total << '\n'
              << "violations " << s.violations << '\n'
              << "min_gap " << format_double(s.min_gap) << '\n'
              << "min_gap_index " << s.min_gap_index << '\n'
              << "saturation_count " << s.saturation_count << '\n';

    if (s.violations > 0) {
        // Regenerate the most-violating sample and keep it as a fixture.
        const fs::path fixture = violator_path(opt.out);
        save_state_file(fixture, sample_state(cfg, s.min_gap_index));
        std::cout << "violator " << fixture.string() << '\n';
    }
    return kExitOk;
}

struct WernerOptions {
    std::size_t m = 4;
    std::size_t view_a = 2;
    std::size_t view_b = 8;
    double z_min = -1.0;
    double z_max = 1.0;
    std::size_t steps = 400;
    std::string out;
    std::string svg;
};

int run_werner_cmd(const WernerOptions& opt) {
    std::ofstream csv = open_output(opt.out);
    const WernerSweep sweep =
        werner_sweep(opt.m, opt.view_a, opt.view_b, opt.z_min, opt.z_max, opt.steps);
    write_werner_csv(csv, sweep);
    if (!csv) throw IoError("error while writing: " + opt.out);

    if (!opt.svg.empty()) {
        std::ofstream svg = open_output(opt.svg);
        write_werner_svg(svg, sweep);
    }

    if (sweep.boundary)
        std::cout << "violation_boundary " << format_double(*sweep.boundary) << " (exact -8/13 = "
                  << format_double(-8.0 / 13.0) << ")\n";
    else
        std::cout << "violation_boundary none\n";
    return kExitOk;
}

struct PptOptions {
    std::size_t dim_a = 2;
    std::size_t dim_b = 2;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::size_t ginibre_k = 0;
    bool pure = false;
    std::string out;
};

int run_ppt_cmd(const PptOptions& opt) {
    const SamplerConfig cfg{opt.dim_a, opt.dim_b, opt.ginibre_k, opt.seed};
    const PptHistogram h = run_ppt_count(cfg, opt.count, opt.pure);

    for (std::size_t c = 0; c < h.occurrences.size(); ++c)
        std::cout << "neg_count " << c << ": " << h.occurrences[c] << '\n';
    std::cout << "total " << h.total << '\n';
    if (opt.dim_a == 2)
        std::cout << "bound " << (opt.dim_b - 1) << ": "
                  << (h.bound_violated ? "VIOLATED" : "satisfied") << '\n';

    if (!opt.out.empty()) {
        std::ofstream csv = open_output(opt.out);
        write_ppt_csv(csv, h);
    }
    return h.bound_violated ? kExitTheoremViolation : kExitOk;
}

int run_example_cmd(const std::string& in_path) {
    const BipartiteState s = load_state_file(in_path);
    if (s.dim_a() != 2)
        throw DimensionError("example: exact discord requires dim_a = 2");

    const DiscordResult d = discord_2n(s);
    const NegativityResult n = negativity(s);
    const BlochForm b = bloch_decompose(s);
    const double gap_value = d.value - n.value * n.value;

    std::cout << "dims " << s.dim_a() << 'x' << s.dim_b() << '\n'
              << "discord " << format_double(d.value) << '\n'
              << "negativity " << format_double(n.value) << '\n'
              << "gap " << format_double(gap_value) << '\n'
              << "neg_count " << n.negative_count << '\n'
              << "violates " << (gap_value < -1e-10 ? "yes" : "no") << '\n'
              << "bloch_x_norm " << format_double(std::sqrt(b.x_norm_sq())) << '\n'
              << "bloch_y_norm " << format_double(std::sqrt(b.y_norm_sq())) << '\n'
              << "bloch_t_norm " << format_double(std::sqrt(b.t_norm_sq())) << '\n';
    std::cout << "g_eigenvalues";
    for (double lambda : d.g_eigenvalues) std::cout << ' ' << format_double(lambda);
    std::cout << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric discord / negativity laboratory for bipartite states"};
    app.require_subcommand(1);

    ScanOptions scan_opt;
    CLI::App* scan = app.add_subcommand(
        "scan", "Monte-Carlo scan of D - N^2 over the Ginibre ensemble (CSV + summary)");
    scan->add_option("--dim-a", scan_opt.dim_a, "subsystem A dimension (must be 2)");
    scan->add_option("--dim-b", scan_opt.dim_b, "subsystem B dimension")->required();
    scan->add_option("--count", scan_opt.count, "number of samples")->required();
    scan->add_option("--seed", scan_opt.seed, "64-bit ensemble seed (default 1)");
    scan->add_option("--ginibre-k", scan_opt.ginibre_k,
                     "Ginibre factor columns (0 = dim_a*dim_b, the Hilbert-Schmidt measure)");
    scan->add_option("--out", scan_opt.out, "CSV output path")->required();
    scan->add_option("--svg", scan_opt.svg, "optional SVG scatter path");

    WernerOptions werner_opt;
    CLI::App* werner = app.add_subcommand(
        "werner", "Sweep the m⊗m Werner family in a 2⊗n view over z (CSV + boundary)");
    werner->add_option("--m", werner_opt.m, "local Werner dimension (default 4)");
    werner->add_option("--view-a", werner_opt.view_a, "view dimension A (default 2)");
    werner->add_option("--view-b", werner_opt.view_b, "view dimension B (default 8)");
    werner->add_option("--z-min", werner_opt.z_min, "lower z bound (default -1)");
    werner->add_option("--z-max", werner_opt.z_max, "upper z bound (default 1)");
    werner->add_option("--steps", werner_opt.steps, "grid intervals (default 400)");
    werner->add_option("--out", werner_opt.out, "CSV output path")->required();
    werner->add_option("--svg", werner_opt.svg, "optional SVG plot path");

    PptOptions ppt_opt;
    CLI::App* ppt = app.add_subcommand(
        "ppt-count", "Histogram of negative partial-transpose eigenvalue counts");
    ppt->add_option("--dim-a", ppt_opt.dim_a, "subsystem A dimension")->required();
    ppt->add_option("--dim-b", ppt_opt.dim_b, "subsystem B dimension")->required();
    ppt->add_option("--count", ppt_opt.count, "number of samples")->required();
    ppt->add_option("--seed", ppt_opt.seed, "64-bit ensemble seed (default 1)");
    ppt->add_option("--ginibre-k", ppt_opt.ginibre_k,
                    "Ginibre factor columns (0 = dim_a*dim_b)");
    ppt->add_flag("--pure", ppt_opt.pure, "sample Haar-random pure states instead");
    ppt->add_option("--out", ppt_opt.out, "optional CSV output path");

    std::string example_path;
    CLI::App* example =
        app.add_subcommand("example", "Report all measures for a single state JSON file");
    example->add_option("file", example_path, "state JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*scan) return run_scan_cmd(scan_opt);
        if (*werner) return run_werner_cmd(werner_opt);
        if (*ppt) return run_ppt_cmd(ppt_opt);
        if (*example) return run_example_cmd(example_path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
