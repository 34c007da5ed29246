#include "discordlab/state_io.hpp"

#include <cmath>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "discordlab/errors.hpp"

namespace discordlab {

namespace {

double finite_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string("state JSON: ") + what + " is not a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string("state JSON: ") + what + " is not finite");
    return v;
}

} // namespace

BipartiteState read_state_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("state JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("state JSON: top level is not an object");
    if (!j.contains("dim_a") || !j.contains("dim_b") || !j.contains("matrix"))
        throw ParseError("state JSON: missing dim_a, dim_b or matrix");
    if (!j["dim_a"].is_number_unsigned() || !j["dim_b"].is_number_unsigned())
        throw ParseError("state JSON: dim_a and dim_b must be non-negative integers");

    const std::size_t dim_a = j["dim_a"].get<std::size_t>();
    const std::size_t dim_b = j["dim_b"].get<std::size_t>();
    if (dim_a == 0 || dim_b == 0) throw ParseError("state JSON: dimensions must be positive");
    const std::size_t d = dim_a * dim_b;

    const nlohmann::json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != d)
        throw ParseError("state JSON: matrix must be an array of dim_a*dim_b rows");

    std::vector<cdouble> entries;
    entries.reserve(d * d);
    for (const nlohmann::json& row : rows) {
        if (!row.is_array() || row.size() != d)
            throw ParseError("state JSON: each matrix row must have dim_a*dim_b entries");
        for (const nlohmann::json& cell : row) {
            if (!cell.is_array() || cell.size() != 2)
                throw ParseError("state JSON: each entry must be a two-element [re, im] array");
            entries.emplace_back(finite_number(cell[0], "matrix entry (re)"),
                                 finite_number(cell[1], "matrix entry (im)"));
        }
    }
    return make_state(dim_a, dim_b, ComplexMatrix(d, d, std::move(entries)));
}

void write_state_json(std::ostream& out, const BipartiteState& s) {
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t d = s.dim();
    for (std::size_t i = 0; i < d; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < d; ++j) {
            const cdouble z = s.rho()(i, j);
            row.push_back({z.real(), z.imag()});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"dim_a", s.dim_a()}, {"dim_b", s.dim_b()}, {"matrix", std::move(rows)}};
    out << j.dump(1) << '\n';
}

BipartiteState load_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open state file: " + path.string());
    return read_state_json(in);
}

void save_state_file(const std::filesystem::path& path, const BipartiteState& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write state file: " + path.string());
    write_state_json(out, s);
    if (!out) throw IoError("error while writing state file: " + path.string());
}

} // namespace discordlab
