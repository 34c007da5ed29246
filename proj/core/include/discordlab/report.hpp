#pragma once

#include <iosfwd>
#include <string>

#include "discordlab/scan.hpp"

namespace discordlab {

/// Locale-independent decimal rendering with 17 significant digits
/// (round-trip safe for double).
std::string format_double(double v);

/// CSV writers. All numeric cells use format_double; re-running a command
/// with identical inputs yields byte-identical files.
void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records);
void write_werner_csv(std::ostream& out, const WernerSweep& sweep);
void write_ppt_csv(std::ostream& out, const PptHistogram& histogram);

/// Scatter of neg_sq (horizontal) against discord (vertical) with the
/// reference line D = N^2; violating samples are drawn in a second color
/// below the line. Presentation only.
void write_scan_svg(std::ostream& out, const std::vector<ScanRecord>& records);

/// Discord and squared negativity of a Werner sweep as polylines over z.
void write_werner_svg(std::ostream& out, const WernerSweep& sweep);

} // namespace discordlab
