#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "repbasis/io.hpp"

using namespace repbasis;
using repbasis::io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("repbasis_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& body) const {
        const auto p = path_ / name;
        std::ofstream(p) << body;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(cli, construct_unique_representation) {
    const auto r = run({"construct", "--form", "2,3", "--target", "const:1", "--window", "5", "--rounds", "1"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["certificate"]["clean"].get<bool>());
    const IntSet a = io::parse_set(j["set"].dump());
    const LinearForm f = validate_form(2, 3);
    for (i64 n = -5; n <= 5; ++n) EXPECT_EQ(rep_count(a, f, n), 1u) << n;
}

TEST(cli, construct_rejects_excluded_form) {
    EXPECT_EQ(run({"construct", "--form", "1,1"}).code, cli::kInputError);
    EXPECT_EQ(run({"construct", "--form", "2,4"}).code, cli::kInputError);
    EXPECT_EQ(run({"construct", "--form", "2"}).code, cli::kInputError);
    EXPECT_EQ(run({"construct", "--form", "2,3", "--target", "const:0"}).code, cli::kInputError);
}

TEST(cli, construct_search_exhausted) {
    TempDir dir;
    // Blocks every candidate value for target 0 with |t| <= 4 (5t, 15t, -10t).
    json values = json::array();
    for (int t = -4; t <= 4; ++t)
        if (t != 0) {
            values.push_back(5 * t);
            values.push_back(15 * t);
            values.push_back(-10 * t);
        }
    json spec = {{"default", 1}, {"zero_set", {{"kind", "finite-list"}, {"values", values}}}};
    const auto path = dir.write("spec.json", spec.dump());
    const auto r = run({"construct", "--form", "2,3", "--target", "@" + path, "--window", "2", "--radius", "4"});
    EXPECT_EQ(r.code, cli::kSearchExhausted);
    EXPECT_TRUE(r.out.empty());
    const json diag = json::parse(r.err.substr(0, r.err.find("\nerror")));
    EXPECT_EQ(diag["error"], "search-exhausted");
    EXPECT_EQ(diag["step"], 1);
}

TEST(cli, construct_output_file_and_repfn_round_trip) {
    TempDir dir;
    const auto out_path = dir.write("construction.json", "");
    const auto r = run({"construct", "--form", "3,-5", "--target", "const:2", "--window", "4", "--rounds", "2", "--out",
                        out_path});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(r.out.empty());

    std::ifstream in(out_path);
    const json j = json::parse(in);
    const json& table = j["certificate"]["table"];
    const auto lo = std::to_string(table["lo"].get<i64>());
    const auto hi = std::to_string(table["hi"].get<i64>());
    // The construction file itself is accepted as a set file.
    const auto rep = run({"repfn", "--set", out_path, "--form", "3,-5", "--lo=" + lo, "--hi=" + hi});
    ASSERT_EQ(rep.code, cli::kOk) << rep.err;
    EXPECT_EQ(json::parse(rep.out), table);
}

TEST(cli, repfn_examples) {
    TempDir dir;
    const auto set = dir.write("a.txt", "-2\n3\n");
    const auto r = run({"repfn", "--set", set, "--form", "2,3", "--lo", "-20", "--hi", "20"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["counts"].dump(), R"({"-10":1,"0":1,"5":1,"15":1})");

    const auto empty = dir.write("empty.txt", "");
    const auto e = run({"repfn", "--set", empty, "--form", "2,3", "--lo=-3", "--hi=3"});
    EXPECT_EQ(e.code, cli::kOk);
    EXPECT_EQ(json::parse(e.out)["counts"].dump(), "{}");

    const auto bad = dir.write("bad.txt", "1\n2\nthree\n");
    const auto b = run({"repfn", "--set", bad, "--form", "2,3", "--lo=-3", "--hi=3"});
    EXPECT_EQ(b.code, cli::kInputError);
    EXPECT_NE(b.err.find("line 3"), std::string::npos) << b.err;
}

TEST(cli, sidon_examples) {
    TempDir dir;
    const auto g = run({"gadic", "--g", "2", "--m", "2", "--limit", "100"});
    ASSERT_EQ(g.code, cli::kOk);
    const auto gset = dir.write("gadic.json", g.out);
    EXPECT_EQ(run({"sidon", "--set", gset, "--form", "1,2", "--g", "1", "--lo", "0", "--hi", "100"}).code, cli::kOk);

    const auto small = dir.write("s.txt", "0\n1\n3\n");
    const auto r = run({"sidon", "--set", small, "--form", "1,2", "--g", "1", "--lo", "0", "--hi", "9"});
    EXPECT_EQ(r.code, cli::kPredicateFalse);
    EXPECT_EQ(json::parse(r.out)["witness"], 3);

    EXPECT_EQ(run({"sidon", "--set", small, "--form", "1,2", "--g", "0", "--lo", "0", "--hi", "9"}).code,
              cli::kInputError);
}

TEST(cli, gadic_examples) {
    const auto r = run({"gadic", "--g", "2", "--m", "2", "--limit", "10"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(json::parse(r.out)["set"].dump(), "[0,1,4,5]");

    const auto d = run({"gadic", "--g", "2", "--m", "2", "--decode", "6"});
    ASSERT_EQ(d.code, cli::kOk);
    EXPECT_EQ(json::parse(d.out)["decode"]["tuple"].dump(), "[4,1]");

    const auto t = run({"gadic", "--g", "3", "--m", "2", "--limit", "5", "--decode-table"});
    ASSERT_EQ(t.code, cli::kOk);
    EXPECT_EQ(json::parse(t.out)["decode_table"].size(), 6u);

    EXPECT_EQ(run({"gadic", "--g", "1", "--m", "2", "--limit", "10"}).code, cli::kInputError);
}

TEST(cli, density_outputs) {
    const auto j = run({"density", "--zero-set", "perfect-squares", "--radii", "10,100,1000"});
    ASSERT_EQ(j.code, cli::kOk);
    const json p = json::parse(j.out);
    EXPECT_EQ(p["profile"][2]["count"], 32);

    const auto c = run({"density", "--zero-set", "finite-list:1,2,3", "--radii", "1000", "--format", "csv"});
    ASSERT_EQ(c.code, cli::kOk);
    EXPECT_EQ(c.out, "radius,count,ratio\n1000,3,0.00149925037481\n");
    EXPECT_EQ(run({"density", "--zero-set", "primes"}).code, cli::kInputError);
}

TEST(cli, explain_t) {
    const auto ok = run({"explain-t", "--form", "2,3", "--b", "0", "--t", "1"});
    ASSERT_EQ(ok.code, cli::kOk) << ok.err;
    EXPECT_EQ(json::parse(ok.out)["report"]["verdict"], "admissible");

    const auto bad = run({"explain-t", "--form", "2,3", "--b", "0", "--t", "0"});
    EXPECT_EQ(bad.code, cli::kPredicateFalse);
    EXPECT_EQ(json::parse(bad.out)["report"]["case"], "degenerate-pair");

    const auto scan = run({"explain-t", "--form", "2,3", "--b", "0", "--scan", "10"});
    ASSERT_EQ(scan.code, cli::kOk);
    EXPECT_EQ(json::parse(scan.out)["t"], 1);

    EXPECT_EQ(run({"explain-t", "--form", "2,3", "--b", "4", "--t", "1", "--zero-set", "perfect-squares"}).code,
              cli::kInputError);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}
