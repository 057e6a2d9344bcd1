#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dpsq/cli.hpp"
#include "dpsq/cover.hpp"
#include "dpsq/generate.hpp"
#include "dpsq/io.hpp"

using namespace dpsq;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = run_cli(args, out, err, &in);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("gen golden bytes") {
    CliRun r = run({"gen", "cycle", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
    CliRun t = run({"gen", "theta", "2", "2", "2"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "p edge 8 9\n"));
    CHECK(!contains(t.out, "c boundary"));
    CliRun y = run({"gen", "y", "1", "1", "1"});
    CHECK(y.code == 0);
    CHECK(contains(y.out, "c boundary 3 5 7\n"));
    CHECK(run({"gen", "nope"}).code == 2);
    CHECK(run({"gen", "cycle", "x"}).code == 2);
}

TEST_CASE("square golden") {
    CliRun r = run({"square", "--gen", "cycle", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
}

TEST_CASE("square reads stdin") {
    CliRun r = run({"square"}, "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(r.code == 0);
    CHECK(r.out == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CliRun bad = run({"square"}, "p edge 3 9\n");
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "error:"));
}

TEST_CASE("girth") {
    CHECK(run({"girth", "--gen", "petersen"}).out == "5\n");
    CHECK(run({"girth", "--gen", "path", "5"}).out == "inf\n");
}

TEST_CASE("mad golden") {
    CliRun r = run({"mad", "--gen", "theta", "2", "2", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "9/4\n");
    CHECK(run({"mad", "--gen", "complete", "4"}).out == "3/1\n");
}

TEST_CASE("dp-chromatic golden") {
    CliRun r = run({"dp-chromatic", "--gen", "cycle", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("dp-check yields a verifiable witness on failure") {
    CliRun ok = run({"dp-check", "-k", "3", "--gen", "cycle", "4"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "colorable\n");

    CliRun bad = run({"dp-check", "-k", "2", "--gen", "cycle", "4"});
    CHECK(bad.code == 1);
    REQUIRE(contains(bad.out, "not-colorable\n"));
    std::string rest = bad.out.substr(bad.out.find('\n') + 1);
    std::istringstream cov(rest);
    Cover witness = read_cover(cov, generate("cycle", {4}).g);
    CHECK(!find_transversal(witness).has_value());
}

TEST_CASE("budget env var forces exit 3") {
    setenv("DPSQ_BUDGET", "1", 1);
    CliRun r = run({"dp-check", "-k", "2", "--gen", "cycle", "4"});
    unsetenv("DPSQ_BUDGET");
    CHECK(r.code == 3);
    CHECK(contains(r.err, "budget exceeded:"));
    CliRun again = run({"dp-check", "-k", "2", "--gen", "cycle", "4"});
    CHECK(again.code == 1); // without the cap the check completes
}

TEST_CASE("detect") {
    CliRun r = run({"detect", "-k", "6", "--gen", "theta", "2", "2", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "OCC 2-thread"));
    CHECK(contains(r.out, "TOTAL 3\n"));
    CliRun none = run({"detect", "-k", "5", "--gen", "theta", "2", "2", "2"});
    CHECK(none.out == "TOTAL 0\n");
}

TEST_CASE("verify-lemma golden line") {
    CliRun r = run({"verify-lemma", "face:3:5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "LEMMA face:3:5 VERIFIED n_covers=0 certificate=greedy:1,2,3\n");
    CliRun iso = run({"verify-lemma", "6red:3"});
    CHECK(iso.code == 0);
    CHECK(contains(iso.out, " iso=K5"));
    CHECK(run({"verify-lemma", "bogus"}).code == 2);
}

TEST_CASE("verify-lemma respects the budget env") {
    setenv("DPSQ_BUDGET", "10", 1);
    CliRun r = run({"verify-lemma", "5red:4"});
    unsetenv("DPSQ_BUDGET");
    CHECK(r.code == 3);
    CHECK(contains(r.out, "LEMMA 5red:4 BUDGET"));
    CHECK(contains(r.out, "certificate=partial"));
}

TEST_CASE("discharge output") {
    CliRun r = run({"discharge", "--rule", "R1", "--gen", "theta", "2", "2", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "v 1 init=3/1 final=9/4\n"));
    CHECK(contains(r.out, "MIN 9/4\n"));
    int vlines = 0;
    std::istringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line))
        if (line.rfind("v ", 0) == 0) ++vlines;
    CHECK(vlines == 8);
    CHECK(run({"discharge", "--rule", "R9", "--gen", "cycle", "5"}).code == 2);
}

TEST_CASE("audit") {
    CliRun r = run({"audit", "-k", "5", "--gen", "theta", "2", "2", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out,
                   "AUDIT k=5 applicable=yes min_final=9/4 bound=9/4 mad=9/4 "
                   "structure=ok verdict=pass\n"));
    CliRun blocked = run({"audit", "-k", "6", "--gen", "theta", "2", "2", "2"});
    CHECK(blocked.code == 0);
    CHECK(contains(blocked.out, "AUDIT k=6 applicable=no verdict=pass\n"));
    CHECK(contains(blocked.out, "OCC 2-thread"));
}

TEST_CASE("sweep small") {
    CliRun r = run({"sweep", "-k", "5", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "SWEEP k=5 PASS"));
    CliRun s = run({"sweep", "-k", "6", "--max-n", "5", "--sample", "3",
                    "--seed", "11"});
    CHECK(s.code == 0);
    CHECK(contains(s.out, " sampled\n"));
    CHECK(contains(s.out, "SWEEP k=6 PASS"));
}

TEST_CASE("transversal subcommand") {
    {
        std::ofstream f("cli_twisted.cover");
        f << "l 1 2\nl 2 2\nl 3 2\nl 4 2\n"
          << "m 1 2 0:0 1:1\nm 2 3 0:0 1:1\nm 3 4 0:0 1:1\nm 1 4 0:1 1:0\n";
    }
    CliRun bad = run({"transversal", "--gen", "cycle", "4", "--cover",
                      "cli_twisted.cover"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "no-transversal\n");

    {
        std::ofstream f("cli_identity.cover");
        f << "l 1 2\nl 2 2\nl 3 2\nl 4 2\n"
          << "m 1 2 0:0 1:1\nm 2 3 0:0 1:1\nm 3 4 0:0 1:1\nm 1 4 0:0 1:1\n";
    }
    CliRun ok = run({"transversal", "--gen", "cycle", "4", "--cover",
                     "cli_identity.cover"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "t 1 "));
    CHECK(run({"transversal", "--gen", "cycle", "4", "--cover",
               "no_such.cover"}).code == 2);
}

TEST_CASE("input handling errors") {
    CHECK(run({"dp-check", "--gen", "cycle", "4"}).code == 2); // missing -k
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"mad", "-i", "absent.graph"}).code == 2);
    CHECK(run({"mad", "-i", "cli_twisted.cover", "--gen", "cycle", "4"}).code == 2);
}

TEST_CASE("input from file") {
    {
        std::ofstream f("cli_c5.graph");
        f << "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
    }
    CliRun r = run({"mad", "-i", "cli_c5.graph"});
    CHECK(r.code == 0);
    CHECK(r.out == "2/1\n");
}

TEST_CASE("verify-all reports every lemma") {
    CliRun r = run({"verify-all"});
    CHECK(r.code == 0);
    int lemmas = 0;
    std::istringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.rfind("LEMMA ", 0) == 0) {
            ++lemmas;
            CHECK(contains(line, " VERIFIED "));
        }
    }
    CHECK(lemmas == 22);
}
