#pragma once

#include <filesystem>
#include <iosfwd>

#include "discordlab/bipartite_state.hpp"

namespace discordlab {

/// State JSON format shared with the CLI: an object with integer fields
/// `dim_a`, `dim_b` and `matrix` as a row-major array of rows, each entry a
/// two-element array [re, im]. Parsing rejects size mismatches, non-numeric
/// and non-finite entries (ParseError, with position diagnostics from the
/// JSON layer), then runs full state validation.
BipartiteState read_state_json(std::istream& in);
void write_state_json(std::ostream& out, const BipartiteState& s);

/// File wrappers; open failures raise IoError.
BipartiteState load_state_file(const std::filesystem::path& path);
void save_state_file(const std::filesystem::path& path, const BipartiteState& s);

} // namespace discordlab
