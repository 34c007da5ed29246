#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

const fs::path kTool = DISCORDLAB_CLI_PATH;
const fs::path kFixtures = DISCORDLAB_FIXTURE_DIR;

fs::path work_dir() {
    const fs::path dir = fs::current_path() / "cli_work";
    fs::create_directories(dir);
    return dir;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const fs::path out_file = work_dir() / "stdout.txt";
    const std::string cmd =
        kTool.string() + " " + args + " > " + out_file.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

// Value following "key " on its own line of the report output.
std::string report_value(const std::string& out, const std::string& key) {
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
    return {};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("example: Bell fixture reports unit discord and negativity") {
    const RunResult r = run_cli("example " + (kFixtures / "bell_2x2.json").string());
    REQUIRE(r.exit_code == 0);
    CHECK(std::stod(report_value(r.out, "discord")) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::stod(report_value(r.out, "negativity")) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(std::stod(report_value(r.out, "gap"))) <= 1e-10);
    CHECK(report_value(r.out, "neg_count") == "1");
    CHECK(report_value(r.out, "violates") == "no");
}

TEST_CASE("example: product fixture reports all zeros") {
    const RunResult r = run_cli("example " + (kFixtures / "product_2x3.json").string());
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(std::stod(report_value(r.out, "discord"))) <= 1e-10);
    CHECK(std::stod(report_value(r.out, "negativity")) == 0.0);
    CHECK(report_value(r.out, "neg_count") == "0");
}

TEST_CASE("example: shipped 2⊗3 counterexample violates the bound") {
    const RunResult r = run_cli("example " + (kFixtures / "counterexample_2x3.json").string());
    REQUIRE(r.exit_code == 0);
    CHECK(report_value(r.out, "violates") == "yes");
    CHECK(std::stod(report_value(r.out, "gap")) < -1e-10);
    CHECK(std::stod(report_value(r.out, "negativity")) > 2.0 / 5.0);
}

TEST_CASE("example: missing and malformed files map to the right exit codes") {
    CHECK(run_cli("example " + (work_dir() / "no_such_file.json").string()).exit_code == 4);

    const fs::path bad = work_dir() / "bad.json";
    std::ofstream(bad) << "{\"dim_a\": 2";
    CHECK(run_cli("example " + bad.string()).exit_code == 2);
}

TEST_CASE("scan: CSV written, byte-identical re-runs, violator fixture round-trips") {
    const fs::path csv = work_dir() / "scan.csv";
    const fs::path svg = work_dir() / "scan.svg";
    const std::string flags = "scan --dim-b 4 --count 120 --seed 7 --ginibre-k 2 --out " +
                              csv.string() + " --svg " + svg.string();

    const RunResult r1 = run_cli(flags);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(fs::exists(csv));
    REQUIRE(fs::exists(svg));
    CHECK(report_value(r1.out, "total") == "120");

    const std::string first = slurp(csv);
    CHECK(first.rfind("index,discord,negativity,neg_sq,gap,neg_count\n", 0) == 0);

    const RunResult r2 = run_cli(flags);
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(csv) == first);
    CHECK(r2.out == r1.out);

    // k = 2 on 2⊗4 violates in bulk, so the most-violating sample is saved.
    const fs::path violator = work_dir() / "scan.violator.json";
    REQUIRE(report_value(r1.out, "violator") == violator.string());
    REQUIRE(fs::exists(violator));
    const RunResult check = run_cli("example " + violator.string());
    REQUIRE(check.exit_code == 0);
    CHECK(report_value(check.out, "violates") == "yes");
}

TEST_CASE("scan: invalid dimension and unwritable output path") {
    CHECK(run_cli("scan --dim-a 3 --dim-b 3 --count 5 --out " +
                  (work_dir() / "x.csv").string())
              .exit_code == 2);
    CHECK(run_cli("scan --dim-b 3 --count 5 --out /no/such/dir/x.csv").exit_code == 4);
    CHECK(run_cli("scan --dim-b 3 --out missing_count.csv").exit_code == 2);
}

TEST_CASE("ppt-count: histogram and satisfied bound") {
    const RunResult r = run_cli("ppt-count --dim-a 2 --dim-b 3 --count 400 --seed 3 --out " +
                                (work_dir() / "ppt.csv").string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("bound 2: satisfied") != std::string::npos);
    CHECK(report_value(r.out, "total") == "400");
    CHECK(slurp(work_dir() / "ppt.csv").rfind("neg_count,occurrences\n", 0) == 0);

    const RunResult pure =
        run_cli("ppt-count --dim-a 2 --dim-b 5 --count 200 --pure --seed 3");
    REQUIRE(pure.exit_code == 0);
    CHECK(pure.out.find("bound 4: satisfied") != std::string::npos);
}

TEST_CASE("werner: sweep CSV and boundary report") {
    const fs::path csv = work_dir() / "werner.csv";
    const fs::path svg = work_dir() / "werner.svg";
    const RunResult r =
        run_cli("werner --steps 52 --out " + csv.string() + " --svg " + svg.string());
    REQUIRE(r.exit_code == 0);

    const std::string boundary = report_value(r.out, "violation_boundary");
    REQUIRE_FALSE(boundary.empty());
    CHECK(std::stod(boundary) == doctest::Approx(-8.0 / 13.0).epsilon(1e-9));
    CHECK(boundary.find("-8/13") != std::string::npos);

    const std::string content = slurp(csv);
    CHECK(content.rfind("z,discord_numeric,discord_closed,neg_numeric,neg_closed,gap\n", 0) == 0);
    // Header plus 53 grid rows.
    CHECK(std::count(content.begin(), content.end(), '\n') == 54);
    CHECK(fs::exists(svg));

    CHECK(run_cli("werner --m 4 --view-a 2 --view-b 7 --out " + csv.string()).exit_code == 2);
}
