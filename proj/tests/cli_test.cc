// Copyright 2026 The stabmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stabmub/cli.h"
#include "stabmub/error.h"

namespace stabmub {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
    json doc() const {
        return json::parse(out);
    }
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "stabmub");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("stabmub_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

TEST(ArgumentTest, Lists) {
    EXPECT_EQ(parse_degree_list("1,3-5,3"), (std::vector<unsigned>{1, 3, 4, 5}));
    EXPECT_THROW(parse_degree_list("0"), Error);
    EXPECT_THROW(parse_degree_list("4-2"), Error);
    EXPECT_THROW(parse_degree_list("17"), Error);
    EXPECT_EQ(parse_kind_list("both").size(), 2u);
    EXPECT_EQ(parse_sign_list("all", 3).size(), 8u);
    EXPECT_EQ(parse_sign_list("+-,-+,+-", 2).size(), 2u);
    EXPECT_THROW(parse_sign_list("+", 2), Error);
}

TEST(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"generate", "--n", "x"}).code, kExitUsage);
    EXPECT_EQ(run({"generate", "--n", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--n", "2", "--suite", "bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--n", "5"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--n", "4", "--suite", "covariance"}).code, kExitUsage);
    CliRun nogo = run({"nogo", "--n", "3"});
    EXPECT_EQ(nogo.code, kExitUsage);
    EXPECT_NE(nogo.err.find("DegreeTooLarge"), std::string::npos);
    EXPECT_EQ(run({"conjugacy", "--n", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(CliTest, FieldInfo) {
    CliRun r = run({"field", "info", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    json j = r.doc();
    EXPECT_EQ(j["modulus_bits"], 7);
    EXPECT_EQ(j["self_dual_basis"], json::array({2, 3}));
    EXPECT_EQ(run({"field", "info", "--n", "1-3"}).doc().size(), 3u);
}

TEST(CliTest, TorusShow) {
    json j = run({"torus", "show", "--n", "3", "--kind", "nonsplit"}).doc();
    EXPECT_EQ(j["order"], 9);
    EXPECT_EQ(j["direction_cycle_type"], json::array({9}));
    json s = run({"torus", "show", "--n", "3", "--kind", "split"}).doc();
    EXPECT_EQ(s["direction_cycle_type"], json::array({7, 1, 1}));
}

TEST(CliTest, MultiplierTable) {
    json j = run({"multiplier", "table", "--n", "1", "--kind", "nonsplit", "--signs", "+"}).doc();
    EXPECT_EQ(j["g"][6], 3);
    EXPECT_EQ(run({"multiplier", "table", "--n", "2", "--kind", "split"}).doc().size(), 4u);
    EXPECT_EQ(run({"multiplier", "table", "--n", "6"}).code, kExitUsage);
}

TEST(CliTest, GenerateSingleFile) {
    fs::path dir = scratch_dir("single");
    fs::path file = dir / "mub.json";
    CliRun r = run({"generate", "--n", "1", "--kind", "nonsplit", "--signs", "+", "--out", file.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(file);
    json j = json::parse(in);
    EXPECT_EQ(j["bases"].size(), 3u);
    for (const auto &b : j["bases"]) {
        for (const auto &v : b) {
            EXPECT_EQ(v.size(), 2u);
        }
    }
    EXPECT_EQ(run({"generate", "--n", "2", "--kind", "split", "--out", file.string()}).code, kExitUsage);
}

TEST(CliTest, GenerateDirectoryAndVerify) {
    fs::path dir = scratch_dir("dir");
    CliRun r = run({"generate", "--n", "2", "--kind", "split", "--signs", "all", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    int mubs = 0;
    std::vector<std::string> files;
    for (const auto &e : fs::directory_iterator(dir)) {
        files.push_back(e.path().string());
        mubs += e.path().filename().string().rfind("mub_", 0) == 0;
    }
    EXPECT_EQ(mubs, 4);
    EXPECT_EQ(files.size(), 9u);
    std::vector<std::string> args = {"verify", "--in"};
    args.insert(args.end(), files.begin(), files.end());
    CliRun v = run(args);
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(v.doc()["status"], "pass");
}

TEST(CliTest, GenerateSplitN1Warns) {
    CliRun r = run({"generate", "--n", "1", "--kind", "split", "--signs", "+"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("trivial"), std::string::npos);
    EXPECT_EQ(r.doc()["bases"].size(), 3u);
}

TEST(CliTest, GenerateIsIdempotent) {
    CliRun a = run({"generate", "--n", "2", "--kind", "nonsplit", "--signs", "+-"});
    CliRun b = run({"generate", "--n", "2", "--kind", "nonsplit", "--signs", "+-", "--jobs", "3"});
    EXPECT_EQ(a.out, b.out);
    CliRun norm = run({"generate", "--n", "2", "--kind", "nonsplit", "--signs", "+-", "--normalize-phase"});
    EXPECT_TRUE(norm.doc()["normalize_phase"].get<bool>());
}

TEST(CliTest, VerifyDetectsFlippedSign) {
    fs::path dir = scratch_dir("flip");
    fs::path file = dir / "mub.json";
    ASSERT_EQ(run({"generate", "--n", "2", "--kind", "nonsplit", "--signs", "++", "--out", file.string()}).code, 0);
    EXPECT_EQ(run({"verify", "--in", file.string()}).code, 0);
    json j;
    {
        std::ifstream in(file);
        j = json::parse(in);
    }
    json &entry = j["bases"][2][1][3];
    int idx = entry[0].get<int>() != 0 ? 0 : 1;
    entry[idx] = -entry[idx].get<int>();
    {
        std::ofstream(file) << j.dump();
    }
    CliRun v = run({"verify", "--in", file.string()});
    EXPECT_EQ(v.code, kExitCheckFailed);
    json rep = v.doc();
    EXPECT_EQ(rep["status"], "fail");
    bool located = false;
    for (const auto &c : rep["checks"]) {
        if (c["name"] == file.string() + ":file.matches_construction") {
            EXPECT_EQ(c["status"], "fail");
            EXPECT_EQ(c["counterexample"]["line_index"], 9);
            EXPECT_EQ(c["counterexample"]["entry"], 3);
            located = true;
        }
    }
    EXPECT_TRUE(located);
}

TEST(CliTest, VerifyInputErrors) {
    EXPECT_EQ(run({"verify", "--in", "/nonexistent/file.json"}).code, kExitIo);
    fs::path dir = scratch_dir("bad");
    fs::path file = dir / "bad.json";
    {
        std::ofstream(file) << "{\"type\": \"mub\", \"n\": 1}";
    }
    CliRun r = run({"verify", "--in", file.string()});
    EXPECT_EQ(r.code, kExitIo);
    EXPECT_NE(r.err.find("ParseError"), std::string::npos);
    {
        std::ofstream(file) << "[1, 2";
    }
    EXPECT_EQ(run({"verify", "--in", file.string()}).code, kExitIo);
}

TEST(CliTest, VerifyMultiplierFileCorruption) {
    fs::path dir = scratch_dir("mult");
    ASSERT_EQ(run({"generate", "--n", "1", "--kind", "nonsplit", "--signs", "+", "--out", dir.string()}).code, 0);
    fs::path file = dir / "multiplier_n1_nonsplit_p.json";
    json j;
    {
        std::ifstream in(file);
        j = json::parse(in);
    }
    EXPECT_EQ(run({"verify", "--in", file.string()}).code, 0);
    j["g"][6] = 1;
    {
        std::ofstream(file) << j.dump();
    }
    CliRun v = run({"verify", "--in", file.string()});
    EXPECT_EQ(v.code, kExitCheckFailed);
}

TEST(CliTest, VerifyConfigSmall) {
    CliRun r = run({"verify", "--n", "1-2", "--seed", "5"});
    EXPECT_EQ(r.code, 0) << r.out;
    json rep = r.doc();
    EXPECT_EQ(rep["failed"], 0);
    std::set<std::string> prefixes;
    for (const auto &c : rep["checks"]) {
        std::string name = c["name"];
        prefixes.insert(name.substr(0, name.find('[')));
    }
    EXPECT_EQ(prefixes, (std::set<std::string>{"appendix", "conjugacy", "covariance", "distinctness", "multiplier",
                                               "nogo", "quadrature"}));
}

TEST(CliTest, ReportsAreByteIdentical) {
    CliRun a = run({"verify", "--n", "2", "--suite", "multiplier,quadrature", "--seed", "3", "--jobs", "1"});
    CliRun b = run({"verify", "--n", "2", "--suite", "multiplier,quadrature", "--seed", "3", "--jobs", "4"});
    EXPECT_EQ(a.out, b.out);
    CliRun t = run({"verify", "--n", "1", "--suite", "multiplier", "--timing"});
    EXPECT_TRUE(t.doc().contains("wall_time_s"));
    EXPECT_FALSE(a.doc().contains("wall_time_s"));
}

TEST(CliTest, ElementOutsideTorusFails) {
    CliRun r = run({"verify", "--n", "1", "--kind", "nonsplit", "--signs", "+", "--element", "1,1,0,1"});
    EXPECT_EQ(r.code, kExitCheckFailed);
    json rep = r.doc();
    ASSERT_EQ(rep["checks"].size(), 2u);
    EXPECT_EQ(rep["checks"][0]["counterexample"]["reason"], "not in torus");
    EXPECT_EQ(rep["checks"][1]["status"], "fail");

    CliRun ok = run({"verify", "--n", "1", "--kind", "nonsplit", "--signs", "+", "--element", "1,1,1,0"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(run({"verify", "--n", "1", "--element", "1,1,1,1"}).code, kExitUsage);
}

TEST(CliTest, Nogo) {
    CliRun r = run({"nogo", "--n", "1-2"});
    ASSERT_EQ(r.code, 0) << r.out;
    json rep = r.doc();
    std::map<std::string, json> summaries;
    int even_witnesses = 0;
    for (const auto &c : rep["checks"]) {
        std::string name = c["name"];
        if (name.ends_with("subgroup_orders")) {
            summaries[name] = c["details"]["orders"];
        }
        if (c["details"].contains("witness")) {
            even_witnesses++;
        }
    }
    EXPECT_EQ(summaries["nogo[n=1].subgroup_orders"], json({{"1", 1}, {"2", 3}, {"3", 1}}));
    EXPECT_EQ(summaries["nogo[n=2].subgroup_orders"], json({{"1", 1}, {"2", 15}, {"3", 10}, {"5", 6}}));
    EXPECT_EQ(even_witnesses, 2 * (3 + 15));
}

TEST(CliTest, Conjugacy) {
    json rep = run({"conjugacy", "--n", "1-3"}).doc();
    ASSERT_EQ(rep["checks"].size(), 3u);
    EXPECT_EQ(rep["checks"][0]["checked"], 5);
    EXPECT_EQ(rep["checks"][1]["checked"], 59);
    EXPECT_EQ(rep["checks"][2]["checked"], 503);
    EXPECT_EQ(rep["status"], "pass");
}

}  // namespace
}  // namespace stabmub
