#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "descmat/cli.hpp"
#include "descmat/fine_sets.hpp"
#include "descmat/serialize.hpp"

using namespace descmat;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix subcommand prints A_2") {
    CliResult r = run({"matrix", "A", "2", "--format", "pretty"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1  1  1  1\n"
          "1 -1  1 -1\n"
          "1  1 -1 -1\n"
          "1 -1  0  1\n");
}

TEST_CASE("matrix subcommand formats") {
    CHECK(run({"matrix", "AM", "0"}).out == "1\n");
    CHECK(run({"matrix", "AM", "1", "--format", "csv"}).out == "1,0\n1,-2\n");
    CHECK(run({"matrix", "AM", "1", "--format", "json"}).out == "[[\"1\",\"0\"],[\"1\",\"-2\"]]\n");
    CliResult mx = run({"matrix", "MX", "1", "--x", "1/2"});
    CHECK(mx.code == 0);
    CHECK(mx.out == "  1    0\n1/2 -3/2\n");
}

TEST_CASE("explicit construction is byte-identical to the recursion") {
    for (const char* fam : {"A", "B", "H", "Z", "M", "AM", "BM", "HM"}) {
        for (const char* fmt : {"pretty", "csv", "json"}) {
            CliResult rec = run({"matrix", fam, "4", "--format", fmt});
            CliResult exp = run({"matrix", fam, "4", "--format", fmt, "--explicit"});
            CHECK(rec.code == 0);
            CHECK(rec.out == exp.out);
        }
    }
    CliResult mx = run({"matrix", "MX", "3", "--x", "2/3"});
    CliResult mxe = run({"matrix", "MX", "3", "--x", "2/3", "--explicit"});
    CHECK(mx.out == mxe.out);
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> args = {"descent-dist", "involutions", "4", "--mode", "both",
                                     "--format", "json"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> args2 = {"character", "4", "--source", "mn", "--format", "csv"};
    CHECK(run(args2).out == run(args2).out);
}

TEST_CASE("character tables") {
    CliResult mn = run({"character", "3", "--source", "mn"});
    CHECK(mn.code == 0);
    CHECK(mn.out ==
          "  row 1,1,1 2,1  3\n"
          "1,1,1     1  -1  1\n"
          "  2,1     2   0 -1\n"
          "    3     1   1  1\n");

    // row (n) of the table is all ones
    CliResult mn4 = run({"character", "4", "--source", "mn", "--format", "csv"});
    CHECK(mn4.out.find("4,1,1,1,1,1\n") != std::string::npos);

    CliResult len3 = run({"character", "3", "--source", "length", "--format", "csv"});
    CHECK(len3.out ==
          "row,\"1,1,1\",\"2,1\",3\n"
          "k=0,1,1,1\n"
          "k=1,2,0,-1\n"
          "k=2,2,0,-1\n"
          "k=3,1,-1,1\n");
}

TEST_CASE("character diffs against Murnaghan-Nakayama are empty") {
    for (const char* source : {"knuth", "length", "involutions"}) {
        CliResult diff = run({"character", "5", "--source", source, "--diff", "mn",
                              "--format", "csv"});
        CHECK(diff.code == 0);
        CHECK(diff.out == "row,mu," + std::string(source) + ",mn\n");
    }
}

TEST_CASE("descent distributions") {
    CliResult inv = run({"descent-dist", "involutions", "3", "--mode", "both"});
    CHECK(inv.out ==
          "descent_set direct inverted diff\n"
          "         {}      1        1    0\n"
          "        {1}      1        1    0\n"
          "        {2}      1        1    0\n"
          "      {1,2}      1        1    0\n");

    CliResult syt = run({"descent-dist", "syt", "4", "--shape", "2,2", "--mode", "both",
                         "--format", "csv"});
    CHECK(syt.out ==
          "ord,direct,inverted,diff\n"
          "0,0,0,0\n"
          "1,0,0,0\n"
          "2,1,1,0\n"
          "3,0,0,0\n"
          "4,0,0,0\n"
          "5,1,1,0\n"
          "6,0,0,0\n"
          "7,0,0,0\n");

    CliResult empty = run({"descent-dist", "explicit", "3", "--empty"});
    CHECK(empty.out ==
          "descent_set direct\n"
          "         {}      0\n"
          "        {1}      0\n"
          "        {2}      0\n"
          "      {1,2}      0\n");

    CliResult knuth = run({"descent-dist", "knuth", "4", "--shape", "3,1", "--mode", "inverted",
                           "--format", "json"});
    CHECK(knuth.code == 0);
    CHECK(knuth.out.find("\"inverted\":\"1\"") != std::string::npos);

    CliResult perms = run({"descent-dist", "explicit", "3", "--perm", "132", "--perm", "312",
                           "--mode", "both", "--format", "csv"});
    CHECK(perms.out ==
          "ord,direct,inverted,diff\n"
          "0,0,0,0\n"
          "1,1,1,0\n"
          "2,1,1,0\n"
          "3,0,0,0\n");
}

TEST_CASE("verify subcommand") {
    CliResult trivial = run({"verify", "all", "0", "--format", "json"});
    CHECK(trivial.code == 0);

    CliResult eigen = run({"verify", "eigen", "3"});
    CHECK(eigen.code == 0);
    CHECK(eigen.out.find("\"pass\": true") != std::string::npos);
    CHECK(eigen.out.find("charpoly-eigen-product/A/n=3") != std::string::npos);

    CliResult pretty = run({"verify", "inverses", "2", "--format", "pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("pass") != std::string::npos);

    // the flag form of the bound behaves like the positional
    CliResult flag = run({"verify", "eigen", "--n-max", "2"});
    CliResult positional = run({"verify", "eigen", "2"});
    CHECK(flag.code == 0);
    CHECK(flag.out == positional.out);
}

TEST_CASE("exit codes and usage errors") {
    CHECK(run({"matrix", "Q", "2"}).code == 2);
    CHECK(run({"matrix", "A", "13"}).code == 2);       // over the cap
    CHECK(run({"matrix", "AM", "11"}).code == 2);      // over the product cap
    CHECK(run({"matrix", "MX", "2"}).code == 2);       // missing --x
    CHECK(run({"verify", "bogus", "3"}).code == 2);
    CHECK(run({"character", "9"}).code == 2);          // over the character cap
    CHECK(run({"descent-dist", "syt", "4"}).code == 2);           // missing --shape
    CHECK(run({"descent-dist", "syt", "4", "--shape", "2,1"}).code == 2);  // wrong sum
    CHECK(run({"descent-dist", "length", "3", "--length", "9"}).code == 2);
    CHECK(run({"descent-dist", "explicit", "3", "--perm", "12"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--out writes the file") {
    std::string path = "cli_out_test.tmp";
    CliResult r = run({"matrix", "B", "1", "--out", path, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "1,1\n0,-1\n");
    std::remove(path.c_str());
}

TEST_CASE("render helpers") {
    CHECK_THROWS_AS(format_from_string("yaml"), std::invalid_argument);
    Table t;
    t.header = {"a", "b"};
    t.rows = {{"1", "2,3"}};
    CHECK(render_table(t, OutputFormat::Csv) == "a,b\n1,\"2,3\"\n");
    CHECK(subset_to_json(Subset::of({1, 3}, 4)).dump() == "[1,3]");
}

TEST_CASE("fineness reports serialize to the documented JSON shape") {
    FinenessReport r = fineness(FineFamily::involutions(3));
    nlohmann::json j = fineness_to_json(r);
    CHECK(j["family"] == "involutions(n=3)");
    CHECK(j["n"] == 3);
    CHECK(j["fine"] == true);
    CHECK(j["consistent"] == true);
    CHECK(j["multiplicities"] == nlohmann::json({{"1,1,1", "1"}, {"2,1", "1"}, {"3", "1"}}));
    CHECK(j["consistency_failures"].empty());

    FinenessReport bad = fineness(FineFamily::explicit_set(3, {Permutation({2, 1, 3})}));
    nlohmann::json jb = fineness_to_json(bad);
    CHECK(jb["fine"] == false);
    CHECK_FALSE(jb["consistency_failures"].empty());
}
