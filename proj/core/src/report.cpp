#include "discordlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace discordlab {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
    out << "index,discord,negativity,neg_sq,gap,neg_count\n";
    for (const ScanRecord& r : records)
        out << r.index << ',' << format_double(r.discord) << ',' << format_double(r.negativity)
            << ',' << format_double(r.neg_sq) << ',' << format_double(r.gap) << ',' << r.neg_count
            << '\n';
}

void write_werner_csv(std::ostream& out, const WernerSweep& sweep) {
    out << "z,discord_numeric,discord_closed,neg_numeric,neg_closed,gap\n";
    for (const WernerRow& r : sweep.rows)
        out << format_double(r.z) << ',' << format_double(r.discord_numeric) << ','
            << format_double(r.discord_closed) << ',' << format_double(r.neg_numeric) << ','
            << format_double(r.neg_closed) << ',' << format_double(r.gap) << '\n';
}

void write_ppt_csv(std::ostream& out, const PptHistogram& histogram) {
    out << "neg_count,occurrences\n";
    for (std::size_t c = 0; c < histogram.occurrences.size(); ++c)
        out << c << ',' << histogram.occurrences[c] << '\n';
}

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 60.0;

double scale_to(double v, double lo, double hi, double out_lo, double out_hi) {
    if (hi <= lo) return 0.5 * (out_lo + out_hi);
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
}

std::string coord(double v) {
    // Two decimals are plenty for pixel coordinates and keep files small.
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

void svg_header(std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_axes(std::ostream& out, const std::string& xlabel, const std::string& ylabel, double xlo,
              double xhi, double ylo, double yhi) {
    out << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << kSize - kMargin
        << "\" y2=\"" << kSize - kMargin << "\"/>\n"
        << "<line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kMargin << "\"/>\n"
        << "</g>\n"
        << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 16 << "\" text-anchor=\"middle\">"
        << xlabel << "</text>\n"
        << "<text x=\"16\" y=\"" << kSize / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kSize / 2 << ")\">" << ylabel
        << "</text>\n"
        << "<text x=\"" << kMargin << "\" y=\"" << kSize - kMargin + 16 << "\">" << format_double(xlo)
        << "</text>\n"
        << "<text x=\"" << kSize - kMargin << "\" y=\"" << kSize - kMargin + 16
        << "\" text-anchor=\"end\">" << format_double(xhi) << "</text>\n"
        << "<text x=\"" << kMargin - 4 << "\" y=\"" << kSize - kMargin
        << "\" text-anchor=\"end\">" << format_double(ylo) << "</text>\n"
        << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin << "\" text-anchor=\"end\">"
        << format_double(yhi) << "</text>\n"
        << "</g>\n";
}

} // namespace

void write_scan_svg(std::ostream& out, const std::vector<ScanRecord>& records) {
    double xhi = 0.0, yhi = 0.0;
    for (const ScanRecord& r : records) {
        xhi = std::max(xhi, r.neg_sq);
        yhi = std::max(yhi, r.discord);
    }
    xhi = std::max(xhi, 1e-12);
    yhi = std::max(yhi, 1e-12);

    svg_header(out);
    svg_axes(out, "squared negativity", "geometric discord", 0.0, xhi, 0.0, yhi);

    // Reference line D = N^2.
    const double dmax = std::min(xhi, yhi);
    out << "<line x1=\"" << coord(scale_to(0, 0, xhi, kMargin, kSize - kMargin)) << "\" y1=\""
        << coord(scale_to(0, 0, yhi, kSize - kMargin, kMargin)) << "\" x2=\""
        << coord(scale_to(dmax, 0, xhi, kMargin, kSize - kMargin)) << "\" y2=\""
        << coord(scale_to(dmax, 0, yhi, kSize - kMargin, kMargin))
        << "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";

    for (const ScanRecord& r : records) {
        const bool violating = r.gap < -1e-10;
        out << "<circle cx=\"" << coord(scale_to(r.neg_sq, 0, xhi, kMargin, kSize - kMargin))
            << "\" cy=\"" << coord(scale_to(r.discord, 0, yhi, kSize - kMargin, kMargin))
            << "\" r=\"2\" fill=\"" << (violating ? "crimson" : "steelblue")
            << "\" fill-opacity=\"0.6\"/>\n";
    }
    out << "</svg>\n";
}

void write_werner_svg(std::ostream& out, const WernerSweep& sweep) {
    double yhi = 0.0;
    for (const WernerRow& r : sweep.rows)
        yhi = std::max({yhi, r.discord_numeric, r.neg_numeric * r.neg_numeric});
    yhi = std::max(yhi, 1e-12);
    const double xlo = sweep.rows.front().z;
    const double xhi = sweep.rows.back().z;

    svg_header(out);
    svg_axes(out, "z", "discord / squared negativity", xlo, xhi, 0.0, yhi);

    const auto polyline = [&](const char* color, auto&& value) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const WernerRow& r : sweep.rows)
            out << coord(scale_to(r.z, xlo, xhi, kMargin, kSize - kMargin)) << ','
                << coord(scale_to(value(r), 0, yhi, kSize - kMargin, kMargin)) << ' ';
        out << "\"/>\n";
    };
    polyline("steelblue", [](const WernerRow& r) { return r.discord_numeric; });
    polyline("crimson", [](const WernerRow& r) { return r.neg_numeric * r.neg_numeric; });

    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<text x=\"" << kSize - kMargin - 4 << "\" y=\"" << kMargin + 14
        << "\" text-anchor=\"end\" fill=\"steelblue\">discord</text>\n"
        << "<text x=\"" << kSize - kMargin - 4 << "\" y=\"" << kMargin + 30
        << "\" text-anchor=\"end\" fill=\"crimson\">squared negativity</text>\n"
        << "</g>\n</svg>\n";
}

} // namespace discordlab
