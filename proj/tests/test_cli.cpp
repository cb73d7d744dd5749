#include "weylgpd/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = weylgpd::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("roots") {
    const auto r = run({"roots", "--graph", "A2-1pt"});
    CHECK(r.code == 0);
    CHECK(r.out == "x: 1*a1 + 0*a2\nx: 0*a1 + 1*a2\nx: 1*a1 + 1*a2\n");
}

TEST_CASE("elements with filters") {
    const auto r = run({"elements", "--graph", "A2-std-3pt", "--from", "x3", "--to", "x1"});
    CHECK(r.code == 0);
    CHECK(r.out == "x3 -> x1 : 2 : 2,1\nx3 -> x1 : 3 : 1,2,1\n");
    CHECK(run({"elements", "--graph", "row10"}).out.find("x1 -> x1 : 0 : e\n") == 0);
}

TEST_CASE("reduced words default to the longest element") {
    CHECK(run({"reduced", "--graph", "B2-1pt", "--start", "x"}).out == "1,2,1,2\n2,1,2,1\n");
    CHECK(run({"reduced", "--graph", "B2-1pt", "--start", "x", "--word", "2,1,1,2,1"}).out == "1\n");
}

TEST_CASE("nilhecke products") {
    CHECK(run({"nilhecke", "--graph", "row10", "--start", "x1", "--word", "1,2"}).out == "1 * T[x3->x1: 1,2]\n");
    CHECK(run({"nilhecke", "--graph", "row10", "--start", "x1", "--word", "1,1"}).out == "0\n");
}

TEST_CASE("psi") {
    const auto r = run({"psi", "--graph", "A2-std-3pt", "--start", "x1", "--word", "1,2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1*t1*t2 + 1*t2^2 * T[2,1]\n1*t1^2*t2 + 1*t1*t2^2 * T[1,2,1]\n");
    const auto j = run({"psi", "--graph", "A2-std-3pt", "--start", "x2", "--word", "1,2,1", "--json"});
    CHECK(j.out.find("\"coefficient\": \"1*t1^2*t2 + 1*t1*t2^2\"") != std::string::npos);
}

TEST_CASE("bruhat writes a DOT file") {
    const auto path = (std::filesystem::temp_directory_path() / "weylgpd_test_bruhat.dot").string();
    const auto r = run({"bruhat", "--graph", "A2-1pt", "--from", "x", "--to", "x", "--dot", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream dot;
    dot << in.rdbuf();
    std::size_t nodes = 0, edges = 0;
    std::string line;
    while (std::getline(dot, line)) {
        if (line.find("->") != std::string::npos)
            ++edges;
        else if (line.rfind("  \"", 0) == 0)
            ++nodes;
    }
    CHECK(nodes == 6);
    CHECK(edges == 8);
    std::remove(path.c_str());
}

TEST_CASE("graph files and the builtin prefix") {
    const auto path = (std::filesystem::temp_directory_path() / "A2-1pt").string();
    {
        std::ofstream f(path);
        f << R"({"rank": 2, "objects": ["p"], "edges": [], "cartan": {"p": [[2, 0], [0, 2]]}})";
    }
    const auto cwd = std::filesystem::current_path();
    std::filesystem::current_path(std::filesystem::temp_directory_path());
    // an existing file shadows the builtin name unless the prefix is used
    CHECK(run({"roots", "--graph", "A2-1pt"}).out == "p: 1*a1 + 0*a2\np: 0*a1 + 1*a2\n");
    CHECK(run({"roots", "--graph", "builtin:A2-1pt"}).out.rfind("x: ", 0) == 0);
    std::filesystem::current_path(cwd);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run({"builtins"}).code == 0);
    CHECK(run({"validate", "--graph", "row10"}).code == 0);
    CHECK(run({"verify", "--graph", "A2-1pt"}).code == 0);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"roots"}).code == 2);
    CHECK(run({"roots", "--graph", "builtin:nope"}).code == 2);
    CHECK(run({"psi", "--graph", "A2-1pt", "--start", "y", "--word", "1"}).code == 2);
    CHECK(run({"psi", "--graph", "A2-1pt", "--start", "x", "--word", "1,9"}).code == 2);

    const auto not_reduced = run({"psi", "--graph", "A2-1pt", "--start", "x", "--word", "1,1"});
    CHECK(not_reduced.code == 1);
    CHECK(not_reduced.out.empty());

    const auto path = (std::filesystem::temp_directory_path() / "weylgpd_bad_graph.json").string();
    {
        std::ofstream f(path);
        f << R"({"rank": 2, "objects": ["p"], "edges": [], "cartan": {"p": [[2, 1], [-1, 2]]}})";
    }
    const auto bad = run({"validate", "--graph", path});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("gcm") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"psi", "--graph", "row10", "--start", "x3", "--word", "1,2,1,2,1,2"};
    CHECK(run(args).out == run(args).out);
}
