#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bookdec/cli.hpp"
#include "bookdec/constructions.hpp"
#include "bookdec/graph.hpp"
#include "bookdec/indices.hpp"
#include "bookdec/rational.hpp"

using namespace bookdec;

namespace {

struct CliResult {
    int rc;
    std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct by flags and by grammar") {
    CliResult r = cli({"construct", "turan", "--n", "6", "--k", "3"});
    CHECK(r.rc == 0);
    CHECK(r.out == to_graph6(turan_graph(6, 3)) + "\n");

    CliResult flags = cli({"construct", "book", "--t", "1", "--p", "1", "--q", "1"});
    CliResult grammar = cli({"construct", "book:1,1,1"});
    CHECK(flags.rc == 0);
    CHECK(flags.out == grammar.out);
    CHECK(flags.out == to_graph6(bull_graph()) + "\n");

    CliResult sum = cli({"construct", "path", "--n", "4", "--summary"});
    CHECK(sum.rc == 0);
    CHECK(sum.out.find("n = 4, edges = 3") != std::string::npos);
}

TEST_CASE("construct json reports order and size") {
    CliResult r = cli({"--format", "json", "construct", "polarity", "--q", "3"});
    REQUIRE(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["construction"] == "polarity:3");
    CHECK(doc["n"] == 13);
    CHECK(doc["edges"] == 24);
}

TEST_CASE("construct failures exit with 2") {
    CHECK(cli({"construct", "bogus", "--n", "4"}).rc == 2);
    CHECK(cli({"construct", "kite", "--n", "5"}).rc == 2);      // missing --k
    CHECK(cli({"construct", "polarity", "--q", "4"}).rc == 2);  // not prime
}

TEST_CASE("eval on an inline graph") {
    CliResult r = cli({"eval", "--index", "M2", "--graph", "g6:" + to_graph6(cycle_graph(5))});
    CHECK(r.rc == 0);
    CHECK(r.out == "20\n");
    CHECK(cli({"eval", "--index", "M2", "--graph", "C5"}).out == "20\n");
    CHECK(cli({"eval", "--index", "nope", "--graph", "C5"}).rc == 2);
    CHECK(cli({"eval", "--index", "M2", "--graph", "zz!"}).rc == 2);
}

TEST_CASE("construct then eval round-trips every registry index") {
    CliResult built = cli({"construct", "turan", "--n", "7", "--k", "3"});
    REQUIRE(built.rc == 0);
    std::string g6 = built.out.substr(0, built.out.size() - 1);
    Graph g = turan_graph(7, 3);
    for (const IndexDef& def : registry_all()) {
        CliResult r = cli({"eval", "--index", def.name, "--graph", "g6:" + g6});
        CHECK(r.rc == 0);
        CHECK(r.out == rat_to_string(eval_index(def, g)) + "\n");
    }
}

TEST_CASE("weights command") {
    CliResult j = cli({"--format", "json", "weights", "--index", "M2"});
    REQUIRE(j.rc == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["index"] == "M2");
    CHECK(doc["class_weights"].size() == 4);

    CliResult c = cli({"--format", "csv", "weights", "--index", "M2"});
    CHECK(c.out.substr(0, c.out.find('\n')) == "index,t,p,q,label,graph6,weight");

    CHECK(cli({"weights", "--index", "R0_r:0"}).rc == 2);
}

TEST_CASE("count command") {
    CHECK(cli({"count", "--pattern", "S_1_2", "--graph", "bull"}).out == "2\n");
    CHECK(cli({"count", "--pattern", "book:1,1,1", "--graph", "bull"}).out == "1\n");
    CHECK(cli({"count", "--pattern", "P4", "--graph", "bull"}).out == "5\n");

    CliResult j = cli({"--format", "json", "count", "--pattern", "K3", "--graph",
                       "g6:" + to_graph6(complete_graph(5)), "--embeddings"});
    REQUIRE(j.rc == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["count"] == 10);
    CHECK(doc["embeddings"] == 60);
    CHECK(doc["automorphisms"] == 6);
}

TEST_CASE("search command") {
    CliResult r = cli({"--format", "json", "search", "--n", "5", "--triangle-free",
                       "--objective", "index:M2"});
    REQUIRE(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["optimum"] == "36");
    CHECK(doc["matched_construction"] == "turan:5,2");
    CHECK(doc["direction"] == "max");

    CliResult t = cli({"--format", "json", "search", "--n", "6", "--forbid", "K4",
                       "--objective", "pattern:K3"});
    REQUIRE(t.rc == 0);
    CHECK(nlohmann::json::parse(t.out)["optimum"] == "8");

    CHECK(cli({"search", "--n", "5", "--objective", "nonsense"}).rc == 2);
    CHECK(cli({"search", "--n", "5", "--objective", "index:M2", "--direction", "sideways"}).rc == 2);
}

TEST_CASE("verify command") {
    CliResult xu = cli({"--format", "json", "verify", "xu", "--nmax", "5"});
    CHECK(xu.rc == 0);
    CHECK(nlohmann::json::parse(xu.out)["pass"] == true);

    CHECK(cli({"verify", "identities", "--nmax", "5", "--trials", "6"}).rc == 0);
    CHECK(cli({"verify", "genkite:C5", "--nmax", "5"}).rc == 0);
    CHECK(cli({"verify", "genkite:P4", "--nmax", "5"}).rc == 2);  // base not vertex-transitive
    CHECK(cli({"verify", "bogus"}).rc == 2);
}

TEST_CASE("asymptotics command") {
    CliResult r = cli({"--format", "json", "asymptotics", "--nmax", "5", "--kmax", "4"});
    REQUIRE(r.rc == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["rows"].size() > 0);
}

TEST_CASE("--json writes a file") {
    const char* path = "cli_json_test_output.json";
    CliResult r = cli({"--json", path, "eval", "--index", "M1", "--graph", "K4"});
    REQUIRE(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    auto doc = nlohmann::json::parse(f);
    CHECK(doc["value"] == 36);
    f.close();
    std::remove(path);
}

TEST_CASE("usage errors and help") {
    CHECK(cli({}).rc == 2);
    CHECK(cli({"frobnicate"}).rc == 2);
    CliResult help = cli({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("construct") != std::string::npos);
}
