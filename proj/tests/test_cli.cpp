#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nwl/cli.hpp"
#include "nwl/errors.hpp"
#include "nwl/qmath.hpp"

using nlohmann::json;

namespace {

int run_cli(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"nwl"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage)
        argv.push_back(s.c_str());
    return nwl::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("nwl_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

json run_json(std::initializer_list<std::string> args, const std::string& tag) {
    const auto path = temp_file(tag + ".json");
    std::vector<std::string> full(args);
    full.push_back("--out");
    full.push_back(path.string());
    std::vector<std::string> storage{"nwl"};
    storage.insert(storage.end(), full.begin(), full.end());
    std::vector<const char*> argv;
    for (const std::string& s : storage)
        argv.push_back(s.c_str());
    REQUIRE(nwl::cli::run(static_cast<int>(argv.size()), argv.data()) == 0);
    return json::parse(slurp(path));
}

} // namespace

TEST_CASE("grid parsing") {
    CHECK(nwl::cli::parse_grid("0:1:5") ==
          std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(nwl::cli::parse_grid("2:1:3") == std::vector<double>{2.0, 1.5, 1.0});
    CHECK(nwl::cli::parse_grid("0.5:0.5:1") == std::vector<double>{0.5});
    CHECK(nwl::cli::parse_grid("1,2.5,-3") == std::vector<double>{1.0, 2.5, -3.0});
    CHECK(nwl::cli::parse_grid("7") == std::vector<double>{7.0});

    CHECK_THROWS_AS(nwl::cli::parse_grid(""), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("1:2"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("1:2:3:4"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("1:2:0"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("1:2:2.5"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("a,b"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("1,,2"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("nan"), nwl::OutOfRange);
    CHECK_THROWS_AS(nwl::cli::parse_grid("inf:1:3"), nwl::OutOfRange);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}) == 2);                                // missing subcommand
    CHECK(run_cli({"no-such-command"}) == 2);               // unknown subcommand
    CHECK(run_cli({"chsh-sweep", "--shots", "0"}) == 2);    // rejected by validation
    CHECK(run_cli({"chsh-sweep", "--theta", "oops"}) == 2); // bad grid
    CHECK(run_cli({"werner-sweep", "--p", "2"}) == 2);      // outside [0, 1]
    CHECK(run_cli({"circuit-run", "--format", "csv"}) == 2);
    CHECK(run_cli({"vew-train", "--format", "csv"}) == 2);
    CHECK(run_cli({"tomography", "--format", "csv"}) == 2);
    CHECK(run_cli({"vew-train", "--werner", "0.5", "--theta", "1"}) == 2); // excludes
    CHECK(run_cli({"chsh-sweep", "--out", "/no/such/dir/x.csv"}) == 2);
    CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("chsh-sweep CSV output") {
    const auto path = temp_file("chsh.csv");
    REQUIRE(run_cli({"chsh-sweep", "--theta", "0:1.5707963267948966:3", "--phi", "0",
                     "--shots", "4000", "--seed", "9", "--out", path.string()}) == 0);
    const std::string text = slurp(path);
    const std::vector<std::string> lines = split(text, '\n');
    REQUIRE(lines.size() == 5); // header + 3 rows + trailing newline
    CHECK(lines[0] == "theta,phi,chsh_analytic,chsh_sampled,zz_sampled,xx_sampled,ppt,"
                      "concurrence,square_error");
    CHECK(lines[4].empty());

    // Row at theta = pi/4, phi = 0: the deepest violation.
    const std::vector<std::string> row = split(lines[2], ',');
    REQUIRE(row.size() == 9);
    CHECK(std::abs(std::stod(row[0]) - 0.7853981633974483) < 1e-11);
    CHECK(std::abs(std::stod(row[2]) + 2.0 * std::sqrt(2.0)) < 1e-11);
    CHECK(std::abs(std::stod(row[3]) + 2.0 * std::sqrt(2.0)) < 0.1); // sampled
    CHECK(std::abs(std::stod(row[6]) + 0.5) < 1e-11);                // ppt
    CHECK(std::abs(std::stod(row[7]) - 1.0) < 1e-11);                // concurrence
}

TEST_CASE("chsh-sweep exact mode removes the sampling error") {
    const auto path = temp_file("chsh_exact.csv");
    REQUIRE(run_cli({"chsh-sweep", "--exact", "--out", path.string()}) == 0);
    const std::vector<std::string> lines = split(slurp(path), '\n');
    REQUIRE(lines.size() == 9 * 4 + 2); // default grid
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const std::vector<std::string> row = split(lines[i], ',');
        REQUIRE(row.size() == 9);
        CHECK(std::abs(std::stod(row[2]) - std::stod(row[3])) < 1e-11);
        CHECK(std::stod(row[8]) < 1e-20);
    }
}

TEST_CASE("chsh-sweep is byte-identical across reruns and thread counts") {
    const auto a = temp_file("rerun_a.csv");
    const auto b = temp_file("rerun_b.csv");
    REQUIRE(run_cli({"chsh-sweep", "--seed", "3", "--shots", "2000", "--out", a.string()}) ==
            0);
    REQUIRE(run_cli({"chsh-sweep", "--seed", "3", "--shots", "2000", "--out", b.string()}) ==
            0);
    CHECK(slurp(a) == slurp(b));

    setenv("NWL_THREADS", "3", 1);
    const auto c = temp_file("rerun_c.csv");
    REQUIRE(run_cli({"chsh-sweep", "--seed", "3", "--shots", "2000", "--out", c.string()}) ==
            0);
    unsetenv("NWL_THREADS");
    CHECK(slurp(a) == slurp(c));

    // Different seed must actually change the sampled columns.
    const auto d = temp_file("rerun_d.csv");
    REQUIRE(run_cli({"chsh-sweep", "--seed", "4", "--shots", "2000", "--out", d.string()}) ==
            0);
    CHECK(slurp(a) != slurp(d));
}

TEST_CASE("chsh-sweep JSON rows mirror the CSV columns") {
    const json doc = run_json({"chsh-sweep", "--format", "json", "--theta", "0.7853981633974483",
                               "--phi", "0", "--exact"},
                              "chsh");
    CHECK(doc["command"] == "chsh-sweep");
    CHECK(doc["exact"] == true);
    REQUIRE(doc["rows"].size() == 1);
    const json& row = doc["rows"][0];
    CHECK(std::abs(row["chsh_analytic"].get<double>() + 2.0 * std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(row["zz_sampled"].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(row["xx_sampled"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("werner-sweep values") {
    const json doc =
        run_json({"werner-sweep", "--format", "json", "--p", "0,0.2,1"}, "werner");
    REQUIRE(doc["rows"].size() == 3);
    const json& r0 = doc["rows"][0];
    CHECK(r0["chsh"] == 0.0);
    CHECK(std::abs(r0["ppt"].get<double>() - 0.25) < 1e-12);
    CHECK(r0["region"] == "I");
    const json& r2 = doc["rows"][2];
    CHECK(std::abs(r2["chsh"].get<double>() - 2.0 * std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(r2["concurrence"].get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(r2["zz"].get<double>() + 1.0) < 1e-12);
    CHECK(std::abs(r2["rho2_corner"].get<double>() + 0.5) < 1e-12);
    CHECK(r2["region"] == "III");

    // The CHSH column crosses the classical bound exactly at p = 1/sqrt(2).
    const json onset = run_json(
        {"werner-sweep", "--format", "json", "--p", "0.7071067811865475"}, "werner_onset");
    CHECK(std::abs(onset["rows"][0]["chsh"].get<double>() - 2.0) < 1e-12);
    CHECK(onset["rows"][0]["region"] == "II");
}

TEST_CASE("werner-sweep CSV region column") {
    const auto path = temp_file("werner.csv");
    REQUIRE(run_cli({"werner-sweep", "--p", "0:1:3", "--out", path.string()}) == 0);
    const std::vector<std::string> lines = split(slurp(path), '\n');
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "p,chsh,ppt,concurrence,region,zz,xx,rho2_corner");
    CHECK(split(lines[1], ',')[4] == "I");
    CHECK(split(lines[2], ',')[4] == "II");
    CHECK(split(lines[3], ',')[4] == "III");
}

TEST_CASE("circuit-run sampled and exact modes") {
    const json sampled = run_json(
        {"circuit-run", "--theta", "0.39269908169872414", "--phi", "0.7853981633974483",
         "--shots", "5000", "--seed", "11"},
        "crun");
    CHECK(sampled["command"] == "circuit-run");
    std::uint64_t total = 0;
    for (const auto& [key, value] : sampled["counts"].items()) {
        CHECK(key.size() == 4);
        total += value.get<std::uint64_t>();
    }
    CHECK(total == 5000);
    CHECK(std::abs(sampled["zz"].get<double>() - 1.0) < 0.05);
    CHECK(std::abs(sampled["zz_analytic"].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(sampled["xx"].get<double>() - 0.5) < 0.05);
    CHECK(std::abs(sampled["xx_analytic"].get<double>() - 0.5) < 1e-12);

    const json exact = run_json(
        {"circuit-run", "--theta", "0.39269908169872414", "--phi", "0.7853981633974483",
         "--exact"},
        "crun_exact");
    const auto dist = exact["distribution"].get<std::vector<double>>();
    REQUIRE(dist.size() == 16);
    double sum = 0.0;
    for (double v : dist)
        sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(std::abs(exact["zz"].get<double>() - exact["zz_analytic"].get<double>()) < 1e-12);
    CHECK(std::abs(exact["xx"].get<double>() - exact["xx_analytic"].get<double>()) < 1e-12);
}

TEST_CASE("vew-train output") {
    const json doc = run_json({"vew-train", "--theta", "0.7853981633974483", "--phi", "0"},
                              "vew");
    CHECK(doc["family"] == "chsh");
    CHECK(doc["state"]["kind"] == "pure");
    CHECK(std::abs(doc["witness_value"].get<double>() + 2.0) < 1e-3);
    CHECK(doc["detected"] == true);
    const auto alpha = doc["alpha"].get<std::vector<double>>();
    REQUIRE(alpha.size() == 2);
    CHECK(std::hypot(alpha[0], alpha[1]) <= std::sqrt(2.0) + 1e-9);
    for (const auto& r : doc["constraint_residuals"])
        CHECK(r.get<double>() < 1e-3);
    CHECK(doc["evals_used"].get<std::size_t>() <= 2000);

    const json blind =
        run_json({"vew-train", "--theta", "0", "--phi", "0"}, "vew_blind");
    CHECK(std::abs(blind["witness_value"].get<double>()) < 1e-3);
    CHECK(blind["detected"] == false);

    const json werner = run_json(
        {"vew-train", "--family", "pauli", "--werner", "0.8", "--refs", "werner"},
        "vew_werner");
    CHECK(werner["state"]["kind"] == "werner");
    CHECK(std::abs(werner["witness_value"].get<double>() + 1.6) < 1e-3);
}

TEST_CASE("tomography reconstructs the post-circuit state") {
    const json exact = run_json({"tomography", "--theta", "0.39269908169872414", "--phi",
                                 "0.7853981633974483", "--exact"},
                                "tomo_exact");
    CHECK(exact["max_abs_error"].get<double>() < 1e-10);
    CHECK(exact["settings"].size() == 9);
    CHECK(exact["settings"][0] == "XX");
    CHECK(exact["settings"][8] == "ZZ");
    // c = cos(pi/4) sin(pi/4) * 2 / 2 = 1/2 shows up as the XX pair term.
    CHECK(std::abs(exact["pair_expectations"]["XX"].get<double>() - 0.5) < 1e-12);
    CHECK(std::abs(exact["single_expectations"]["ZI"].get<double>()) < 1e-12);

    const json sampled = run_json({"tomography", "--theta", "0.39269908169872414", "--phi",
                                   "0.7853981633974483", "--shots", "10000", "--seed", "0"},
                                  "tomo_sampled");
    CHECK(sampled["max_abs_error"].get<double>() < 0.05);

    // Projection returns a positive semidefinite unit-trace estimate.
    const json projected = run_json({"tomography", "--theta", "0.39269908169872414", "--phi",
                                     "0.7853981633974483", "--shots", "2000", "--project"},
                                    "tomo_proj");
    nwl::ComplexMatrix est(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            est(i, j) = nwl::Complex(projected["rho2_re"][i][j].get<double>(),
                                     projected["rho2_im"][i][j].get<double>());
    CHECK(std::abs(est.trace().real() - 1.0) < 1e-12);
    const std::vector<double> eig = nwl::hermitian_eigenvalues(est);
    CHECK(eig.back() > -1e-12);
    CHECK(projected["max_abs_error"].get<double>() < 0.1);
}

TEST_CASE("tomography determinism") {
    const json a = run_json({"tomography", "--shots", "2000", "--seed", "5"}, "tomo_a");
    const json b = run_json({"tomography", "--shots", "2000", "--seed", "5"}, "tomo_b");
    CHECK(a == b);
    const json c = run_json({"tomography", "--shots", "2000", "--seed", "6"}, "tomo_c");
    CHECK(a != c);
}
