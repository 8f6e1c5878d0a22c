// Drives the installed binary end to end: generation fixtures, extraction
// output, oracle lines, benchmark CSV shape, and exit-code contracts.

#include <catch2/catch_amalgamated.hpp>

#include <indpath/graph.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace indpath;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

// each caller gets its own scratch directory under the build tree
fs::path fresh_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() / ("indpath_cli_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

RunResult run_cli(const std::string& args, const fs::path& dir) {
    fs::path so = dir / "stdout.txt", se = dir / "stderr.txt";
    std::string cmd = std::string(INDPATH_CLI_PATH) + " " + args + " > " + so.string() + " 2> " +
                      se.string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(so);
    r.err = slurp(se);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// pull "path induced ..." out of extraction output and check it against g
PathWitness witness_from(const std::string& out, const Graph& g) {
    for (const auto& line : lines_of(out))
        if (line.rfind("path ", 0) == 0) {
            PathWitness w = parse_path_witness(line + "\n");
            REQUIRE(w.induced);
            Verdict v = verify_path_witness(g, w);
            INFO(v.reason);
            REQUIRE(v.ok);
            return w;
        }
    FAIL("no witness line in output");
    return {};
}

int field_after(const std::string& out, const std::string& key) {
    for (const auto& line : lines_of(out))
        if (line.rfind(key + " ", 0) == 0) return std::stoi(line.substr(key.size() + 1));
    FAIL("no '" + key + "' line in output");
    return -1;
}

}  // namespace

TEST_CASE("gen writes parseable byte-stable fixtures") {
    fs::path d = fresh_dir("gen");
    auto r1 = run_cli("gen --family doubling --i 3 --out " + (d / "a").string(), d);
    REQUIRE(r1.exit_code == 0);

    auto meta = nlohmann::json::parse(r1.out);
    CHECK(meta["family"] == "doubling");
    CHECK(meta["n"] == 24);
    CHECK(meta["m"] == 45);
    CHECK(meta["params"]["i"] == 3);
    CHECK(meta["predicted_lip"] == 8.0);

    Graph g = parse_graph(slurp(d / "a.graph"));
    CHECK(g.n == 24);
    CHECK(g.edge_count() == 45);
    PathWitness ham = parse_path_witness(slurp(d / "a.ham"));
    CHECK_FALSE(ham.induced);
    CHECK(ham.vertices.size() == 24);
    CHECK(verify_path_witness(g, ham).ok);

    // same command, same bytes
    auto r2 = run_cli("gen --family doubling --i 3 --out " + (d / "b").string(), d);
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(d / "a.graph") == slurp(d / "b.graph"));
    CHECK(slurp(d / "a.ham") == slurp(d / "b.ham"));

    SECTION("smallest instance is the triangle") {
        auto r = run_cli("gen --family doubling --i 0 --out " + (d / "t").string(), d);
        REQUIRE(r.exit_code == 0);
        CHECK(slurp(d / "t.graph") == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    }
    SECTION("tower instance carries a verified spanning witness") {
        auto r = run_cli("gen --family tower --t 2 --k 1 --i 1 --out " + (d / "tw").string(), d);
        REQUIRE(r.exit_code == 0);
        auto m = nlohmann::json::parse(r.out);
        CHECK(m["n"] == 8);
        Graph tg = parse_graph(slurp(d / "tw.graph"));
        CHECK(verify_path_witness(tg, parse_path_witness(slurp(d / "tw.ham"))).ok);
    }
    SECTION("family without a spanning path writes no witness file") {
        auto r = run_cli("gen --family stacked --i 2 --out " + (d / "st").string(), d);
        REQUIRE(r.exit_code == 0);
        auto m = nlohmann::json::parse(r.out);
        CHECK(m["ham"].is_null());
        CHECK_FALSE(fs::exists(d / "st.ham"));
    }
    SECTION("out-of-range parameters are usage errors") {
        auto r = run_cli("gen --family doubling --i 99 --out " + (d / "z").string(), d);
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("error:") != std::string::npos);
    }
}

TEST_CASE("extract runs each algorithm and re-verifies its witness") {
    fs::path d = fresh_dir("extract");
    REQUIRE(run_cli("gen --family doubling --i 2 --out " + (d / "d2").string(), d).exit_code == 0);
    Graph d2 = parse_graph(slurp(d / "d2.graph"));
    std::string d2args = " --input " + (d / "d2.graph").string() + " --path-file " +
                         (d / "d2.ham").string();

    SECTION("named k-tree extraction") {
        auto r = run_cli("extract --algo ktree" + d2args, d);
        REQUIRE(r.exit_code == 0);
        CHECK(lines_of(r.out).front() == "algorithm ktree");
        PathWitness w = witness_from(r.out, d2);
        CHECK(field_after(r.out, "size") == w.size());
        CHECK(w.size() >= 2);  // log2(12-3)/2 ~ 1.58 certified
    }
    SECTION("auto dispatch prefers the k-tree recognizer") {
        auto r = run_cli("extract --algo auto" + d2args, d);
        REQUIRE(r.exit_code == 0);
        CHECK(lines_of(r.out).front() == "algorithm ktree");
    }
    SECTION("outerplanar needs no witness file") {
        auto r = run_cli("extract --algo outerplanar --input " + (d / "d2.graph").string(), d);
        REQUIRE(r.exit_code == 0);
        PathWitness w = witness_from(r.out, d2);
        CHECK(w.size() >= 2);  // log2(12)/2 ~ 1.79 certified
    }
    SECTION("interval pipeline from a representation file") {
        std::ostringstream rep;
        rep << "i 9\n";
        for (int j = 0; j < 9; ++j) rep << "v " << j << " " << 10 * j << " " << 10 * j + 12 << "\n";
        spit(d / "stair.iv", rep.str());
        spit(d / "stair.path", "path plain 0 1 2 3 4 5 6 7 8\n");
        auto r = run_cli("extract --algo interval --intervals " + (d / "stair.iv").string() +
                             " --path-file " + (d / "stair.path").string(),
                         d);
        REQUIRE(r.exit_code == 0);
        CHECK(lines_of(r.out).front() == "algorithm interval");
        CHECK(field_after(r.out, "size") == 9);  // clique number 2: whole path survives
        CHECK(field_after(r.out, "omega") == 2);

        auto r2 = run_cli("extract --algo auto --intervals " + (d / "stair.iv").string() +
                              " --path-file " + (d / "stair.path").string(),
                          d);
        REQUIRE(r2.exit_code == 0);
        CHECK(lines_of(r2.out).front() == "algorithm interval");
    }
    SECTION("host outside the algorithm class is a structured failure") {
        spit(d / "k4.graph", "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
        spit(d / "k4.path", "path plain 0 1 2 3\n");
        auto r = run_cli("extract --algo tw2 --input " + (d / "k4.graph").string() +
                             " --path-file " + (d / "k4.path").string(),
                         d);
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("not a partial 2-tree") != std::string::npos);
    }
    SECTION("missing witness file is a usage error") {
        auto r = run_cli("extract --algo ktree --input " + (d / "d2.graph").string(), d);
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("oracle prints the exact size with its optimality flag") {
    fs::path d = fresh_dir("oracle");
    spit(d / "tri.graph", "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    auto r = run_cli("oracle --input " + (d / "tri.graph").string(), d);
    REQUIRE(r.exit_code == 0);
    CHECK(lines_of(r.out).front() == "lip 2 optimal");
    witness_from(r.out, parse_graph(slurp(d / "tri.graph")));

    SECTION("chordless cycle keeps all but one vertex") {
        spit(d / "c8.graph", "p 8 8\ne 0 1\ne 0 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\n");
        auto rc = run_cli("oracle --input " + (d / "c8.graph").string(), d);
        REQUIRE(rc.exit_code == 0);
        CHECK(lines_of(rc.out).front() == "lip 7 optimal");
    }
    SECTION("doubling growth step adds two vertices to the optimum") {
        REQUIRE(run_cli("gen --family doubling --i 3 --out " + (d / "d3").string(), d).exit_code ==
                0);
        auto rd = run_cli("oracle --input " + (d / "d3.graph").string(), d);
        REQUIRE(rd.exit_code == 0);
        CHECK(lines_of(rd.out).front() == "lip 8 optimal");
    }
    SECTION("exhausted node budget is reported as such") {
        REQUIRE(run_cli("gen --family doubling --i 3 --out " + (d / "d3").string(), d).exit_code ==
                0);
        auto rb = run_cli("oracle --input " + (d / "d3.graph").string() + " --budget-nodes 3", d);
        REQUIRE(rb.exit_code == 0);
        auto first = lines_of(rb.out).front();
        CHECK(first.find("budget") != std::string::npos);
    }
    SECTION("missing input file is a usage error") {
        auto rm = run_cli("oracle --input " + (d / "absent.graph").string(), d);
        CHECK(rm.exit_code == 2);
    }
    SECTION("malformed graph reports the offending line") {
        spit(d / "bad.graph", "p 3 3\ne 0 1\ne 2 1\n");
        auto rb = run_cli("oracle --input " + (d / "bad.graph").string(), d);
        CHECK(rb.exit_code == 2);
        CHECK(rb.err.find("line 3") != std::string::npos);
    }
}

TEST_CASE("bench emits ordered rows with enforced invariants") {
    fs::path d = fresh_dir("bench");
    std::string suite;
    for (int i = 0; i <= 6; ++i) suite += "doubling i=" + std::to_string(i) + "\n";
    spit(d / "suite.txt", suite);

    auto r = run_cli("bench --input " + (d / "suite.txt").string(), d);
    REQUIRE(r.exit_code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] ==
          "family,params,n,m,algorithm,extracted_size,bound_value,oracle_size,oracle_optimal,"
          "millis");
    for (size_t j = 1; j < rows.size(); ++j) {
        auto f = csv_fields(rows[j]);
        REQUIRE(f.size() == 10);
        CHECK(f[0] == "doubling");
        CHECK(f[1] == "i=" + std::to_string(j - 1));
        CHECK(f[4] == "ktree");
        int extracted = std::stoi(f[5]);
        double bound = std::stod(f[6]);
        CHECK(static_cast<double>(extracted) >= bound - 1e-9);
        long long n = std::stoll(f[2]);
        if (n <= 256) {  // oracle columns auto-populate at small sizes
            REQUIRE(f[8] == "1");
            CHECK(extracted <= std::stoi(f[7]));
        } else {
            CHECK(f[7].empty());
            CHECK(f[8].empty());
        }
    }

    SECTION("parallel execution keeps row order and content") {
        auto r1 = run_cli("bench --input " + (d / "suite.txt").string() + " --out " +
                              (d / "j1.csv").string(),
                          d);
        auto r4 = run_cli("bench --input " + (d / "suite.txt").string() + " --jobs 4 --out " +
                              (d / "j4.csv").string(),
                          d);
        REQUIRE(r1.exit_code == 0);
        REQUIRE(r4.exit_code == 0);
        auto a = lines_of(slurp(d / "j1.csv"));
        auto b = lines_of(slurp(d / "j4.csv"));
        REQUIRE(a.size() == b.size());
        for (size_t j = 0; j < a.size(); ++j) {
            auto fa = csv_fields(a[j]), fb = csv_fields(b[j]);
            fa.back() = fb.back() = "";  // wall-clock column may differ
            CHECK(fa == fb);
        }
    }
    SECTION("empty suite produces only the header") {
        spit(d / "empty.txt", "# nothing\n\n");
        auto re = run_cli("bench --input " + (d / "empty.txt").string(), d);
        REQUIRE(re.exit_code == 0);
        auto out = lines_of(re.out);
        REQUIRE(out.size() == 1);
        CHECK(out[0].rfind("family,", 0) == 0);
    }
    SECTION("oracle columns populate when forced on") {
        spit(d / "one.txt", "tower t=2 k=1 i=1 algo=none oracle=on\n");
        auto ro = run_cli("bench --input " + (d / "one.txt").string(), d);
        REQUIRE(ro.exit_code == 0);
        auto f = csv_fields(lines_of(ro.out).at(1));
        CHECK(f[4] == "none");
        CHECK(f[5].empty());
        CHECK(f[7] == "4");
        CHECK(f[8] == "1");
    }
    SECTION("unknown suite keys are usage errors") {
        spit(d / "bad.txt", "doubling i=1 flavor=mint\n");
        auto rb = run_cli("bench --input " + (d / "bad.txt").string(), d);
        CHECK(rb.exit_code == 2);
        CHECK(rb.err.find("line 1") != std::string::npos);
    }
    SECTION("entry failures are reported per line and fail the run") {
        spit(d / "mix.txt", "doubling i=1\nstacked i=2 algo=ktree\n");
        auto rm = run_cli("bench --input " + (d / "mix.txt").string(), d);
        CHECK(rm.exit_code == 1);
        CHECK(rm.err.find("line 2") != std::string::npos);
        auto out = lines_of(rm.out);  // surviving rows still emitted
        REQUIRE(out.size() == 2);
        CHECK(csv_fields(out[1])[0] == "doubling");
    }
}

TEST_CASE("verify prints one line per shipped guarantee") {
    fs::path d = fresh_dir("verify");
    auto r = run_cli("verify", d);
    auto out = lines_of(r.out);
    REQUIRE(out.size() >= 12);  // 11 criteria plus the summary
    int pass = 0, fail = 0;
    for (size_t j = 0; j + 1 < out.size(); ++j) {
        CAPTURE(out[j]);
        bool p = out[j].rfind("PASS", 0) == 0;
        bool f = out[j].rfind("FAIL", 0) == 0;
        REQUIRE((p || f));
        pass += p;
        fail += f;
    }
    CHECK(pass + fail == 11);
    CHECK(r.exit_code == (fail > 0 ? 1 : 0));
}

TEST_CASE("unknown flags and subcommands are usage errors") {
    fs::path d = fresh_dir("usage");
    CHECK(run_cli("frobnicate", d).exit_code == 2);
    CHECK(run_cli("oracle --frobnicate 1", d).exit_code == 2);
    CHECK(run_cli("", d).exit_code == 2);
    auto h = run_cli("--help", d);
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("gen") != std::string::npos);
}
