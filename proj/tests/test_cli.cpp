#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclefactor/cli.hpp"
#include "cyclefactor/constructions.hpp"
#include "cyclefactor/json_io.hpp"

using namespace cyclefactor;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cyclefactor");
    std::ostringstream out, err;
    Run r;
    r.code = dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("cyclefactor_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("gen then expect reproduces the G_6 value") {
    const Run gen = run({"gen", "--family", "xd", "--d", "3"});
    REQUIRE(gen.code == 0);
    CHECK(gen.out == to_text(looped_bidirected_cycle(6)));
    const std::string path = write_temp("xd3.txt", gen.out);
    const Run expect = run({"expect", "--graph", path, "--histogram", "--edge-usage"});
    REQUIRE(expect.code == 0);
    const Json j = Json::parse(expect.out);
    CHECK(j["expectation"] == "4/1");
    CHECK(j["N"] == "20");
    CHECK(j["histogram"]["4"] == "9");
    CHECK(j["edge_usage"].size() == 18);
    const Run table = run({"expect", "--graph", path, "--format", "table", "--threads", "2"});
    CHECK(table.code == 0);
    CHECK(table.out.find("E 4/1") != std::string::npos);
}

TEST_CASE("gen families") {
    CHECK(run({"gen", "--family", "gn", "--n", "5"}).out == to_text(looped_bidirected_cycle(5)));
    const std::vector<DiGraph> k3s(2, complete_looped(3));
    CHECK(run({"gen", "--family", "complete", "--m", "3", "--copies", "2"}).out == to_text(disjoint_union(k3s)));
    CHECK(run({"gen", "--family", "gkd", "--k", "3", "--d", "4"}).out == to_text(build_gkd(3, 4)));
    CHECK(run({"gen", "--family", "k222"}).out == to_text(as_symmetric_digraph(complete_multipartite({2, 2, 2}))));
    CHECK(run({"gen", "--family", "clique", "--m", "5", "--copies", "6"}).out ==
          to_text(as_symmetric_digraph(copies(clique(5), 6))));
    CHECK(run({"gen", "--family", "splice", "--m", "5"}).out ==
          to_text(as_symmetric_digraph(undirected_three_block_splice(5))));
    const std::string out = temp_path("gen_out.txt");
    CHECK(run({"gen", "--family", "cycle", "--n", "6", "--out", out}).code == 0);
    CHECK(read_graph_file(out) == as_symmetric_digraph(cycle_graph(6)));
}

TEST_CASE("gen errors") {
    CHECK(run({"gen", "--family", "xd"}).code == 2);
    CHECK(run({"gen", "--family", "xd", "--d", "2"}).code == 2);
    CHECK(run({"gen", "--family", "petersen"}).code == 2);
    CHECK(run({"gen", "--family", "gn", "--n", "6", "--copies", "0"}).code == 2);
}

TEST_CASE("expect on a graph without a cycle-factor") {
    const std::string path = write_temp("sink.txt", "2 -1\n0: 1\n1:\n");
    const Run r = run({"expect", "--graph", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("no cycle-factor") != std::string::npos);
    CHECK(run({"expect", "--graph", temp_path("does_not_exist.txt")}).code == 2);
    const std::string bad = write_temp("bad.txt", "2 1\n0: 0\n");
    CHECK(run({"expect", "--graph", bad}).code == 2);
}

TEST_CASE("undirected expectation") {
    const std::string c6 = write_temp("c6.txt", run({"gen", "--family", "cycle", "--n", "6"}).out);
    const Run permissive = run({"expect", "--graph", c6, "--undirected", "--convention", "permissive"});
    REQUIRE(permissive.code == 0);
    CHECK(Json::parse(permissive.out)["expectation"] == "7/3");
    CHECK(Json::parse(permissive.out)["convention"] == "permissive");
    const std::string k222 = write_temp("k222.txt", run({"gen", "--family", "k222"}).out);
    CHECK(Json::parse(run({"expect", "--graph", k222, "--undirected"}).out)["expectation"] == "6/5");
    const std::string looped = write_temp("looped.txt", run({"gen", "--family", "gn", "--n", "6"}).out);
    CHECK(run({"expect", "--graph", looped, "--undirected"}).code == 2);
    CHECK(run({"expect", "--graph", c6, "--convention", "loose"}).code == 2);
}

TEST_CASE("verify emits a certificate for every verdict") {
    const std::string g6 = write_temp("g6.txt", run({"gen", "--family", "gn", "--n", "6"}).out);
    const Run beats = run({"verify", "--graph", g6, "--d", "3", "--provenance", "test"});
    REQUIRE(beats.code == 0);
    const Json j = Json::parse(beats.out);
    CHECK(j["verdict"] == "beats_benchmark");
    CHECK(j["excess"] == "1/3");
    CHECK(j["provenance"] == "test");
    CHECK(j["graph"] == to_text(looped_bidirected_cycle(6)));

    const std::string k3 = write_temp("k3.txt", run({"gen", "--family", "complete", "--m", "3", "--copies", "2"}).out);
    CHECK(Json::parse(run({"verify", "--graph", k3, "--d", "3"}).out)["verdict"] == "ties");
    const std::string g8 = write_temp("g8.txt", run({"gen", "--family", "gn", "--n", "8"}).out);
    CHECK(run({"verify", "--graph", g8, "--d", "3"}).code == 2);
    const std::string c4 = write_temp("c4.txt", "4 2\n0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n");
    const Run below = run({"verify", "--graph", c4, "--d", "2"});
    CHECK(below.code == 0);
    CHECK(Json::parse(below.out)["verdict"] == "below");
}

TEST_CASE("formula and table") {
    const Run f = run({"formula", "--d", "3"});
    REQUIRE(f.code == 0);
    const Json j = Json::parse(f.out);
    CHECK(j["excess"] == "1/3");
    CHECK(j["expectation"] == "4/1");
    CHECK(j["benchmark"] == "11/3");
    CHECK(Json::parse(run({"formula", "--d", "4"}).out)["excess"] == "29/114");
    CHECK(run({"formula", "--d", "2"}).code == 2);
    CHECK(run({"formula", "--d", "5", "--format", "table"}).code == 0);
    const Json t = Json::parse(run({"table1", "--d", "3"}).out);
    CHECK(t["rows"].size() == 4);
    CHECK(t["rows"][0]["mean"] == "14/3");
    CHECK(run({"table1", "--d", "6", "--format", "table"}).out.find("u1u2,v1v2") != std::string::npos);
}

TEST_CASE("suites") {
    const Run d2 = run({"suite", "--name", "d2", "--n-max", "4"});
    CHECK(d2.code == 0);
    CHECK(Json::parse(d2.out)["pass"] == true);
    CHECK(run({"suite", "--name", "xd-cross", "--d-max", "4"}).code == 0);
    CHECK(run({"suite", "--name", "xd-cross", "--d-max", "7"}).code == 2);
    CHECK(run({"suite", "--name", "gn-class", "--n-max", "8"}).code == 0);
    const Run max = run({"suite", "--name", "regular-max", "--n", "4", "--d", "2"});
    CHECK(max.code == 0);
    CHECK(Json::parse(max.out)["entries"][0]["max_excess"] == "0/1");
    CHECK(run({"suite", "--name", "nope"}).code == 2);
}

TEST_CASE("search writes a JSON-lines leaderboard") {
    const Run stdout_run = run({"search", "--n", "6", "--d", "3", "--pop", "4", "--iters", "5"});
    REQUIRE(stdout_run.code == 0);
    std::istringstream lines(stdout_run.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        CHECK(j.contains("certificate"));
        CHECK(j["fingerprint"].get<std::string>().size() == 16);
        ++count;
    }
    CHECK(count >= 1);
    CHECK(count <= 4);

    const std::string out = temp_path("search.jsonl");
    const Run file_run = run({"search", "--n", "6", "--d", "3", "--pop", "4", "--iters", "5", "--out", out});
    REQUIRE(file_run.code == 0);
    std::ifstream in(out);
    std::string from_file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(from_file == stdout_run.out);
    CHECK(run({"search", "--n", "7", "--d", "3"}).code == 2);
}

TEST_CASE("help and parse errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"expect", "--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"formula"}).code == 2);
    CHECK(run({"formula", "--d", "x"}).code == 2);
    CHECK(run({"--threads", "0", "formula", "--d", "3"}).code == 2);
}

TEST_CASE("report reproduces the published values") {
    const Run r = run({"report", "--paper"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 11);
    CHECK(run({"report"}).code == 2);
    CHECK(run({"report", "--paper"}).out == r.out);
}
