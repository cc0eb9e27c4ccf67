#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sjj/cli.hpp"
#include "sjj/observables.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sjj::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Table {
    std::string meta;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    return cells;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::getline(in, t.meta);
    std::string line;
    std::getline(in, line);
    t.header = split(line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        for (const auto& c : split(line)) row.push_back(std::stod(c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

fs::path temp_dir() {
    auto d = fs::temp_directory_path() / ("sjj_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

// Half a unit in the 12th significant digit of x.
double print_ulp(double x) {
    if (x == 0.0) return 0.0;
    return 0.5 * std::pow(10.0, std::floor(std::log10(std::abs(x))) - 11.0);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({"spectrum", "--model", "xyz", "--n", "4", "--coupling", "1"}).code == 2);
    CHECK(run({"spectrum", "--n", "4", "--grid", "1:0:0.1"}).code == 2);
    CHECK(run({"spectrum", "--n", "4", "--grid", "0:1:0"}).code == 2);
    CHECK(run({"spectrum", "--n", "4", "--grid", "abc"}).code == 2);
    CHECK(run({"spectrum", "--n", "4"}).code == 2);
    CHECK(run({"losses", "--n", "10", "--coupling", "4", "--la", "1"}).code == 2);
    CHECK(run({"physical", "--a-sc", "-1e-9", "--omega-x", "1", "--omega-perp", "10", "--n", "10"}).code == 2);
    CHECK(run({"ground", "--n", "4", "--coupling", "1", "--config", "/nonexistent/cfg.json"}).code == 2);
    const auto r = run({"spectrum", "--n", "4", "--grid", "1:0:0.1"});
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("domain and numerical errors exit with 3 and 4") {
    CHECK(run({"spectrum", "--n", "0", "--coupling", "1"}).code == 3);
    CHECK(run({"losses", "--n", "10", "--input", "noon", "--la", "1", "--lb", "1"}).code == 3);
    CHECK(run({"losses", "--n", "10", "--coupling", "4", "--eta-a", "1.5"}).code == 3);
    CHECK(run({"meanfield", "--coupling", "10", "--z0", "0.99", "--dtau", "2", "--tau-max", "20"}).code == 4);
}

TEST_CASE("help and version") {
    CHECK(run({"--help"}).code == 0);
    const auto v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("csv metadata line echoes the effective configuration") {
    const auto r = run({"ground", "--model", "bjj", "--n", "6", "--coupling", "1.5"});
    REQUIRE(r.code == 0);
    const auto t = parse_csv(r.out);
    REQUIRE(t.meta.rfind("# sjj 0.1.0 ground ", 0) == 0);
    const auto cfg = nlohmann::json::parse(t.meta.substr(std::string("# sjj 0.1.0 ground ").size()));
    CHECK(cfg["model"] == "bjj");
    CHECK(cfg["n"] == 6);
    CHECK(cfg["coupling"] == doctest::Approx(1.5));
    CHECK(!cfg.contains("threads"));
    CHECK(t.header == std::vector<std::string>{"n", "prob", "amp"});
    CHECK(t.rows.size() == 7);
}

TEST_CASE("json output carries version, command and config") {
    const auto r = run({"spectrum", "--n", "3", "--grid", "0:1:0.5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["version"] == "0.1.0");
    CHECK(j["command"] == "spectrum");
    CHECK(j["config"]["n"] == 3);
    CHECK(j["columns"] == nlohmann::json::array({"coupling", "k", "energy"}));
    CHECK(j["rows"].size() == 12);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const std::vector<std::vector<std::string>> cmds{
        {"spectrum", "--n", "40", "--grid", "0:4:0.25"},
        {"hz", "--model", "bjj", "--n", "60", "--grid", "0:3:0.1"},
        {"losses", "--n", "40", "--coupling", "4", "--p-min", "1e-9"},
    };
    for (const auto& base : cmds) {
        auto one = base, four = base;
        one.insert(one.end(), {"--threads", "1"});
        four.insert(four.end(), {"--threads", "4"});
        const auto a = run(one), b = run(four), c = run(four);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(b.out == c.out);
    }
}

TEST_CASE("config file is overridden by explicit flags") {
    const auto dir = temp_dir();
    const auto cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"model": "bjj", "n": 8, "coupling": 2.5})";
    auto t = parse_csv(run({"ground", "--config", cfg.string()}).out);
    CHECK(t.rows.size() == 9);
    CHECK(t.meta.find("\"model\":\"bjj\"") != std::string::npos);
    t = parse_csv(run({"ground", "--config", cfg.string(), "--n", "5"}).out);
    CHECK(t.rows.size() == 6);
    CHECK(t.meta.find("\"coupling\":2.5") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("SJJ_THREADS is validated") {
    ::setenv("SJJ_THREADS", "2", 1);
    CHECK(run({"spectrum", "--n", "4", "--coupling", "1"}).code == 0);
    ::setenv("SJJ_THREADS", "many", 1);
    CHECK(run({"spectrum", "--n", "4", "--coupling", "1"}).code == 2);
    CHECK(run({"spectrum", "--n", "4", "--coupling", "1", "--threads", "1"}).code == 0);
    ::unsetenv("SJJ_THREADS");
}

TEST_CASE("output file is written whole or not at all") {
    const auto dir = temp_dir();
    const auto path = dir / "out.csv";
    REQUIRE(run({"ground", "--n", "10", "--coupling", "1", "-o", path.string()}).code == 0);
    CHECK(slurp(path) == run({"ground", "--n", "10", "--coupling", "1"}).out);
    CHECK(!fs::exists(path.string() + ".partial"));

    const auto bad = dir / "bad.csv";
    CHECK(run({"meanfield", "--coupling", "10", "--z0", "0.99", "--dtau", "2", "--tau-max", "20", "-o", bad.string()}).code == 4);
    CHECK(!fs::exists(bad));
    CHECK(!fs::exists(bad.string() + ".partial"));
    CHECK(run({"ground", "--n", "4", "--coupling", "1", "-o", (dir / "missing" / "x.csv").string()}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("spectrum at N=2 matches the closed forms") {
    for (const char* model : {"sjj", "bjj"}) {
        const auto t = parse_csv(run({"spectrum", "--model", model, "--n", "2", "--grid", "0:10:0.1"}).out);
        REQUIRE(t.rows.size() == 101 * 3);
        const double k = std::string(model) == "sjj" ? 4.0 * 0.79 * 0.79 : 16.0;
        for (std::size_t i = 0; i < t.rows.size(); i += 3) {
            const double c = t.rows[i][0];
            std::vector<double> e{(-c - std::sqrt(c * c + k)) / 4.0, -c / 2.0, (-c + std::sqrt(c * c + k)) / 4.0};
            std::sort(e.begin(), e.end());
            for (int j = 0; j < 3; ++j) {
                CHECK(t.rows[i + j][1] == j);
                CHECK(t.rows[i + j][2] == doctest::Approx(e[j]).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("ground-state distributions at N=300") {
    auto probs = [](const char* model, const char* c) {
        const auto t = parse_csv(run({"ground", "--model", model, "--n", "300", "--coupling", c}).out);
        std::vector<double> p;
        for (const auto& r : t.rows) p.push_back(r[1]);
        return p;
    };
    const auto p4 = probs("sjj", "4");
    CHECK(p4[0] >= 0.45);
    CHECK(p4[0] <= 0.5);
    CHECK(p4[300] >= 0.45);
    CHECK(p4[300] <= 0.5);

    const auto p2 = probs("sjj", "2");
    CHECK(std::max_element(p2.begin(), p2.end()) - p2.begin() == 150);

    // BJJ past its crossover: twin peaks off the edges, not at N/2
    for (const char* c : {"2", "4"}) {
        const auto b = probs("bjj", c);
        const auto peak = std::max_element(b.begin(), b.begin() + 150) - b.begin();
        CHECK(peak > 0);
        CHECK(b[peak] > 10.0 * b[150]);
        CHECK(b[0] < b[peak]);
        CHECK(b[300 - peak] == doctest::Approx(b[peak]).epsilon(1e-9));
    }
}

TEST_CASE("hz sweep reproduces the library minimum") {
    const auto t = parse_csv(run({"hz", "--model", "sjj", "--n", "300", "--grid", "0:4:0.01"}).out);
    REQUIRE(t.header[0] == "coupling");
    REQUIRE(t.header[1] == "hz1");
    double best = 10.0, at = 0.0;
    for (const auto& r : t.rows)
        if (r[1] < best) best = r[1], at = r[0];
    CHECK(best == doctest::Approx(0.31924).epsilon(0.005 / 0.31924));
    CHECK(at == doctest::Approx(2.001).epsilon(0.001));

    const auto b = parse_csv(run({"hz", "--model", "bjj", "--n", "300", "--grid", "0:4:0.01"}).out);
    double bbest = 10.0;
    for (const auto& r : b.rows) bbest = std::min(bbest, r[1]);
    const auto lib = sjj::cj_scan(sjj::ModelKind::BJJ, 300, [] {
        std::vector<double> g;
        for (int i = 0; i <= 400; ++i) g.push_back(0.01 * i);
        return g;
    }());
    CHECK(bbest == doctest::Approx(lib.c_j).epsilon(1e-10));
}

TEST_CASE("hz single coupling and unrefined sweep") {
    const auto one = parse_csv(run({"hz", "--n", "300", "--coupling", "8"}).out);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0][2] == doctest::Approx(0.5).epsilon(0.01));
    const auto raw = parse_csv(run({"hz", "--n", "20", "--grid", "0:2:0.5", "--refine-step", "0"}).out);
    CHECK(raw.rows.size() == 5);
}

TEST_CASE("meanfield") {
    const auto single = parse_csv(run({"meanfield", "--coupling", "2", "--z0", "0.5", "--tau-max", "0"}).out);
    CHECK(single.rows.size() == 1);

    const auto fixed = parse_csv(run({"meanfield", "--coupling", "1", "--z0", "0", "--tau-max", "10"}).out);
    for (const auto& r : fixed.rows) CHECK(std::abs(r[1]) < 1e-14);

    const auto trapped = parse_csv(run({"meanfield", "--coupling", "4", "--z0", "0.6", "--tau-max", "100"}).out);
    double zmin = 1.0, drift = 0.0;
    for (const auto& r : trapped.rows) zmin = std::min(zmin, r[1]), drift = std::max(drift, std::abs(r[4]));
    CHECK(zmin > 0.0);
    CHECK(drift <= 1e-8);
    CHECK(trapped.rows.size() == 1001);
}

TEST_CASE("losses: single branch and traced mixture") {
    const auto b = parse_csv(run({"losses", "--n", "300", "--coupling", "4", "--la", "1", "--lb", "0"}).out);
    REQUIRE(b.rows.size() == 300);
    const auto top = std::max_element(b.rows.begin(), b.rows.end(), [](auto& x, auto& y) { return x[1] < y[1]; });
    CHECK((*top)[0] == 0);

    const auto sat = parse_csv(run({"losses", "--n", "30", "--input", "noon", "--satellite", "0.05", "--la", "1", "--lb", "1"}).out);
    int nonzero = 0;
    for (const auto& r : sat.rows) nonzero += r[1] > 0.0;
    CHECK(nonzero == 2);

    // Each printed prob carries up to half a unit in its 12th digit.
    const auto mix = parse_csv(run({"losses", "--n", "60", "--coupling", "4"}).out);
    REQUIRE(mix.header == std::vector<std::string>{"la", "lb", "n", "prob"});
    double total = 0.0, bound = 0.0;
    for (const auto& r : mix.rows) total += r[3], bound += print_ulp(r[3]);
    CHECK(std::abs(total - 1.0) <= 1e-12 + bound);
}

TEST_CASE("hartree, crossover and physical") {
    const auto h = nlohmann::json::parse(run({"hartree", "--lambda", "2"}).out);
    std::map<std::string, double> s;
    for (const auto& br : h["branches"]) s[br["branch"]] = br["s"];
    CHECK(s["S+"] == doctest::Approx(0.707107).epsilon(1e-6));
    CHECK(s["S-"] == doctest::Approx(-0.707107).epsilon(1e-6));
    CHECK(nlohmann::json::parse(run({"hartree", "--lambda", "3"}).out)["cat_overlap"].is_null());

    const double c = nlohmann::json::parse(run({"crossover", "--model", "sjj", "--n", "300"}).out)["coupling"];
    CHECK(c >= 2.000);
    CHECK(c <= 2.002);

    const auto p = nlohmann::json::parse(run({"physical", "--a-sc", "-1.4e-9", "--omega-x", "439.8", "--omega-perp", "4398.2",
                                              "--kappa-hz", "77", "--n", "300", "--a-perp", "1.4e-6"})
                                             .out);
    CHECK(p["results"]["Lambda"].get<double>() == doctest::Approx(2.0).epsilon(0.025));
    CHECK(p["results"]["uN_c"].get<double>() == doctest::Approx(2.0 * M_PI * 0.67).epsilon(1e-11));
}

TEST_CASE("json output of every command has the keys the schema requires") {
    std::ifstream f(SJJ_SCHEMA_PATH);
    REQUIRE(f);
    const auto schema = nlohmann::json::parse(f);
    const auto& defs = schema["$defs"];
    const std::vector<std::vector<std::string>> cmds{
        {"spectrum", "--n", "4", "--coupling", "1"},
        {"ground", "--n", "4", "--coupling", "1"},
        {"hz", "--n", "4", "--coupling", "1"},
        {"meanfield", "--coupling", "1", "--tau-max", "1"},
        {"losses", "--n", "4", "--coupling", "1", "--la", "1", "--lb", "0"},
        {"losses", "--n", "4", "--coupling", "1"},
        {"hartree", "--coupling", "2"},
        {"crossover", "--n", "20"},
        {"physical", "--a-sc", "-1.4e-9", "--omega-x", "439.8", "--omega-perp", "4398.2", "--kappa-hz", "77", "--n", "300"},
    };
    for (auto args : cmds) {
        args.insert(args.end(), {"--format", "json"});
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        for (const auto& k : schema["required"]) CHECK(j.contains(k.get<std::string>()));
        const std::string cmd = j["command"];
        CAPTURE(cmd);
        for (const auto& rule : schema["allOf"]) {
            const auto& cond = rule["if"]["properties"]["command"];
            const bool applies = cond.contains("const") ? cond["const"] == cmd
                                                        : std::find(cond["enum"].begin(), cond["enum"].end(), cmd) != cond["enum"].end();
            if (!applies) continue;
            const auto& then = rule["then"].contains("$ref") ? defs["table"] : rule["then"];
            for (const auto& k : then["required"]) CHECK(j.contains(k.get<std::string>()));
            if (then.contains("properties") && then["properties"].contains("results"))
                for (const auto& k : then["properties"]["results"]["required"]) CHECK(j["results"].contains(k.get<std::string>()));
        }
        if (j.contains("columns")) {
            std::string key = cmd;
            if (cmd == "losses") key = j["columns"].size() == 2 ? "losses_branch" : "losses_traced";
            CHECK(j["columns"] == defs["columns"][key]);
            for (const auto& row : j["rows"]) CHECK(row.size() == j["columns"].size());
        }
    }
}
