#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "kemeny/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = kemeny::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path fixture_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "kemeny-cli-tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = fixture_dir() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string diamond_file() { return write_file("diamond.txt", "4 5\n0 1\n1 2\n2 3\n0 3\n0 2\n"); }
std::string star_file() { return write_file("star.txt", "4 3\n0 1\n0 2\n0 3\n"); }
std::string k4_file() { return write_file("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"); }

} // namespace

TEST_CASE("help version and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--help"}).out.find("analyze") != std::string::npos);
    CHECK(run({"--version"}).out == "kemeny 1.0.0\n");
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"analyze"}).code == 1); // --input is required
    CHECK(run({"analyze", "--input", (fixture_dir() / "absent.txt").string()}).code == 1);
    CHECK(run({"analyze", "--input", diamond_file(), "--format", "yaml"}).code == 1);
}

TEST_CASE("plain-text analysis") {
    const auto r = run({"analyze", "--input", diamond_file()});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("vertices: 4") != std::string::npos);
    CHECK(r.out.find("spanning trees: 8") != std::string::npos);
    CHECK(r.out.find("kemeny: 47/20 (2.35)") != std::string::npos);
    CHECK(r.out.find("pendant twins: none") != std::string::npos);
    CHECK(r.out.find("labels: identity") != std::string::npos);
}

TEST_CASE("json analysis round-trips through its canonical form") {
    const auto r = run({"analyze", "--input", diamond_file(), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"] == 4);
    CHECK(j["edges"] == 5);
    CHECK(j["spanning_trees"] == "8");
    CHECK(j["kemeny"]["exact"] == "47/20");
    CHECK(j["kemeny"]["decimal"] == "2.35");
    CHECK(j["agreement_gap"].get<double>() < 1e-9);
    CHECK(j["canonical"] == "4 5;0 1;0 2;0 3;1 2;2 3");

    std::string listing = j["canonical"].get<std::string>();
    for (char& c : listing)
        if (c == ';') c = '\n';
    const auto again = run({"analyze", "--input", write_file("roundtrip.txt", listing + "\n"), "--format", "json"});
    REQUIRE(again.code == 0);
    CHECK(nlohmann::json::parse(again.out)["kemeny"] == j["kemeny"]);
}

TEST_CASE("csv analysis") {
    const auto r = run({"analyze", "--input", diamond_file(), "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("key,value\n", 0) == 0);
    CHECK(r.out.find("kemeny,2.35\n") != std::string::npos);
    CHECK(r.out.find("spanning_trees,8\n") != std::string::npos);
}

TEST_CASE("matrices appear on request") {
    const auto r = run({"analyze", "--input", diamond_file(), "--format", "json", "--show-matrices"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("resistance"));
    // unit resistance between the two degree-2 corners
    CHECK(j["resistance"][1][3]["exact"] == "1/1");
    CHECK(j["resistance"][1][3]["decimal"] == "1");
    CHECK(j["two_forest"][1][3] == "8");
    CHECK(j["two_forest"][0][2] == "4");

    const auto bare = run({"analyze", "--input", diamond_file(), "--format", "json"});
    CHECK_FALSE(nlohmann::json::parse(bare.out).contains("resistance"));
}

TEST_CASE("per-vertex twin-pendant report") {
    const auto r = run({"braess", "--input", diamond_file(), "--format", "json", "--vertex", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["vertices"].size() == 1);
    CHECK(j["vertices"][0]["vertex"] == 0);
    CHECK(j["vertices"][0]["lambda"] == "2456");
    CHECK(j["vertices"][0]["kappa_tilde"]["exact"] == "131/28");
    CHECK(j["vertices"][0]["kappa_hat"]["exact"] == "493/96");
    CHECK(j["vertices"][0]["verdict"] == true);
    CHECK_FALSE(j.contains("twin_braess")); // overall verdict needs every vertex

    const auto all = run({"braess", "--input", diamond_file(), "--format", "json"});
    const auto ja = nlohmann::json::parse(all.out);
    REQUIRE(ja["vertices"].size() == 4);
    CHECK(ja["twin_braess"] == true);

    const auto text = run({"braess", "--input", diamond_file()});
    CHECK(text.out.find("overall: twin-braess") != std::string::npos);

    const auto csv = run({"braess", "--input", diamond_file(), "--format", "csv"});
    CHECK(csv.out.rfind("vertex,lambda,kappa_tilde,kappa_hat,verdict\n", 0) == 0);
    CHECK(csv.out.find("0,2456,4.67857142857,5.13541666667,true\n") != std::string::npos);
}

TEST_CASE("paradox reports") {
    const auto star = run({"paradox", "--input", star_file(), "--format", "json"});
    REQUIRE(star.code == 0);
    const auto js = nlohmann::json::parse(star.out);
    CHECK(js["paradoxical"] == true);
    CHECK(js["witness"] == nlohmann::json::array({1, 2}));
    REQUIRE(js["rows"].size() == 3);
    CHECK(js["rows"][0]["delta"]["exact"] == "1/24");

    const auto full = run({"paradox", "--input", k4_file(), "--format", "json"});
    const auto jf = nlohmann::json::parse(full.out);
    CHECK(jf["paradoxical"] == false);
    CHECK(jf["rows"].empty());
    CHECK(jf["note"] == "no non-edges");

    const auto text = run({"paradox", "--input", star_file()});
    CHECK(text.out.find("paradoxical: yes (witness 1-2)") != std::string::npos);

    const auto diamond = run({"paradox", "--input", diamond_file()});
    CHECK(diamond.out.find("non-edge 1-3: delta -1/10 (-0.1)") != std::string::npos);
    CHECK(diamond.out.find("paradoxical: no") != std::string::npos);
}

TEST_CASE("self-audit command exit codes") {
    const auto ok = run({"verify", "--max-n", "2", "--format", "json"});
    REQUIRE(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["ok"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["max_n"] == 2);

    CHECK(run({"verify", "--max-n", "7"}).code == 2);
    CHECK(run({"verify", "--max-n", "1"}).code == 2);
}

TEST_CASE("file problems map to distinct exit codes") {
    // well-formed file, disconnected graph: precondition, not parsing
    const auto disc = run({"analyze", "--input", write_file("disc.txt", "4 2\n0 1\n2 3\n")});
    CHECK(disc.code == 2);
    CHECK(disc.err.find("Disconnected") != std::string::npos);

    // malformed content is a parse problem
    CHECK(run({"analyze", "--input", write_file("junk.txt", "hello\n")}).code == 1);
    CHECK(run({"analyze", "--input", write_file("loop.txt", "2 1\n1 1\n")}).code == 1);
    CHECK(run({"analyze", "--input", write_file("short.txt", "3 2\n0 1\n")}).code == 1);
}

TEST_CASE("labels outside the contiguous range are remapped") {
    const auto path = write_file("labels.txt", "3 2\n10 20\n20 30\n");
    const auto r = run({"analyze", "--input", path, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["labels"] == nlohmann::json::array({10, 20, 30}));
    CHECK(j["kemeny"]["exact"] == "3/2");

    const auto text = run({"analyze", "--input", path});
    CHECK(text.out.find("labels: 10->0 20->1 30->2") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
    const auto direct = run({"analyze", "--input", diamond_file(), "--format", "csv"});
    const auto target = (fixture_dir() / "report.csv").string();
    const auto filed = run({"analyze", "--input", diamond_file(), "--format", "csv", "--output", target});
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(target) == direct.out);
}

TEST_CASE("experiment reports and seed echo") {
    const auto csv = run({"experiment", "--kind", "trees", "--n", "4", "--mode", "exhaustive"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.find("# seed: 1729") != std::string::npos); // default seed is documented output
    CHECK(csv.out.find("n,samples,pendant_twin_count,pendant_twin_fraction,paradoxical_count,"
                       "paradoxical_fraction,mean_appearance,paradox_mode,sample_mode\n") != std::string::npos);
    CHECK(csv.out.find("4,16,4,0.25,4,0.25,0.25,twin-edge-witness,exhaustive\n") != std::string::npos);

    const auto json = run({"experiment", "--kind", "trees", "--n", "4,5", "--mode", "exhaustive", "--format", "json"});
    REQUIRE(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["seed"] == 1729);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["pendant_twin_count"] == 4);
    CHECK(j["rows"][1]["samples"] == 125);
    CHECK_FALSE(j.contains("details"));

    const auto detail_path = (fixture_dir() / "detail.json").string();
    const auto with_detail =
        run({"experiment", "--kind", "trees", "--n", "4", "--mode", "exhaustive", "--detail", detail_path});
    REQUIRE(with_detail.code == 0);
    const auto jd = nlohmann::json::parse(slurp(detail_path));
    REQUIRE(jd["details"].size() == 16);
    int witnessed = 0;
    for (const auto& d : jd["details"])
        if (d.contains("witness")) ++witnessed;
    CHECK(witnessed == 4);
}

TEST_CASE("monte carlo rides along with analysis") {
    const auto r = run({"analyze", "--input", diamond_file(), "--format", "json", "--monte-carlo", "10"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["monte_carlo"]["trials"] == 10);
    CHECK(j["monte_carlo"]["seed"] == 1729);

    const auto seeded = run({"analyze", "--input", diamond_file(), "--format", "json", "--monte-carlo", "10",
                             "--seed", "55"});
    CHECK(nlohmann::json::parse(seeded.out)["monte_carlo"]["seed"] == 55);
}

TEST_CASE("experiment flag interplay") {
    CHECK(run({"experiment", "--kind", "gnp", "--n", "5"}).code == 1);
    CHECK(run({"experiment", "--kind", "gnp", "--n", "5"}).err.find("requires --p") != std::string::npos);
    CHECK(run({"experiment", "--kind", "trees", "--n", "5", "--p", "0.5"}).code == 1);
    CHECK(run({"experiment", "--kind", "gnp", "--n", "5", "--p", "0.5", "--mode", "exhaustive"}).code == 1);
    CHECK(run({"experiment", "--kind", "trees", "--n", "3"}).code == 2);     // too small for a paradox
    CHECK(run({"experiment", "--kind", "pizza", "--n", "5"}).code == 1);     // not an ensemble
    // practically unreachable connectivity at p = 0.01
    CHECK(run({"experiment", "--kind", "gnp", "--n", "12", "--p", "0.01", "--max-attempts", "2", "--samples", "1"})
              .code == 2);

    const auto gnp = run({"experiment", "--kind", "gnp", "--n", "3", "--p", "1.0", "--samples", "2"});
    REQUIRE(gnp.code == 0);
    CHECK(gnp.out.find("# p: 1") != std::string::npos);
    CHECK(gnp.out.find("3,2,0,0,0,0,0,full-scan,sampled\n") != std::string::npos);
}
