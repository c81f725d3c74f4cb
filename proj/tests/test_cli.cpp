#include <catch2/catch_amalgamated.hpp>

#include "skewcell/cli.hpp"

using namespace skewcell;

TEST_CASE("verify subcommand exit codes") {
    auto ok = run_cli({"verify", "--gen", "toy:3", "--field", "rational"});
    INFO(ok.output);
    CHECK(ok.exit_code == 0);
    CHECK(ok.artifacts.count("verify.json") == 1);

    auto usage = run_cli({"verify", "--gen", "toy:3"});
    CHECK(usage.exit_code == 2); // field is mandatory for generators

    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.exit_code == 2);

    auto badgen = run_cli({"verify", "--gen", "matrix:4:1,2,-2,1:2,1,4,3", "--field",
                           "rational"});
    CHECK(badgen.exit_code == 1); // BadWeights is a verification failure
}

TEST_CASE("decomp on toy:3 gives the expected CSV") {
    auto res = run_cli({"decomp", "--gen", "toy:3", "--field", "rational"});
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.artifacts.count("decomp.csv") == 1);
    std::string csv = res.artifacts.at("decomp.csv");
    // rows (i,k) with a single nonzero column per side, entry t^k
    CHECK(csv == "cell,(0,0),(1,0)\n"
                 "(0,2),t^2,0\n"
                 "(0,1),t^1,0\n"
                 "(0,0),1,0\n"
                 "(1,2),0,t^2\n"
                 "(1,1),0,t^1\n"
                 "(1,0),0,1\n");
}

TEST_CASE("fixedpoint and clifford subcommands") {
    auto fp = run_cli({"fixedpoint", "--gen", "matrix:4:1,1,-1,-1:2,1,4,3", "--field",
                       "rational"});
    INFO(fp.output);
    REQUIRE(fp.exit_code == 0);
    auto file = load_algebra(fp.artifacts.at("fixedpoint.json"));
    CHECK(file.algebra.dim == 8);
    CHECK(file.embedding.has_value());

    auto cl = run_cli({"clifford", "--gen", "klr:klr-2-2-2"});
    INFO(cl.output);
    CHECK(cl.exit_code == 0);
}

TEST_CASE("adjust on the fixture file") {
    std::string path = std::string(SKEWCELL_DATA_DIR) + "/klr-2-2-2.json";
    auto res = run_cli({"adjust", "--file", path, "--char", "3"});
    INFO(res.output);
    CHECK(res.exit_code == 0);
    CHECK(res.artifacts.count("adjust_dq.csv") == 1);
    CHECK(res.artifacts.count("adjust_df.csv") == 1);
    CHECK(res.artifacts.count("adjust_af.csv") == 1);
    CHECK(res.artifacts.at("adjust_af.csv") == "cell,((0|1,1);0)\n((0|1,1);0),1\n");
}

TEST_CASE("combinatorial subcommands") {
    auto ug = run_cli({"uglov", "--e", "2", "--p", "2", "--n", "2", "--rho", "0"});
    CHECK(ug.exit_code == 0);
    auto j = nlohmann::json::parse(ug.artifacts.at("uglov.json"));
    CHECK(j["uglov"].size() == 2);

    auto dom = run_cli({"dominance", "--e", "2", "--p", "2", "--n", "2", "--rho", "0"});
    CHECK(dom.exit_code == 0);
    auto dj = nlohmann::json::parse(dom.artifacts.at("dominance.json"));
    CHECK(dj["shapes"].size() == 5);
    CHECK(dj["strictly_dominates"].size() == 8);

    auto tab = run_cli({"tableaux", "--e", "2", "--p", "2", "--n", "2", "--rho", "0"});
    CHECK(tab.exit_code == 0);

    auto sk = run_cli({"skeleton", "--e", "2", "--p", "2", "--n", "2", "--rho", "0"});
    CHECK(sk.exit_code == 0);
    auto sj = nlohmann::json::parse(sk.artifacts.at("skeleton.json"));
    CHECK(sj["elements"].size() == 4);

    auto bad = run_cli({"uglov", "--e", "2", "--p", "2", "--n", "2", "--rho", "0,1"});
    CHECK(bad.exit_code == 1); // strict d-charge gap fails
}

TEST_CASE("identical runs produce identical artifacts") {
    auto a = run_cli({"decomp", "--gen", "klr:klr-2-2-2", "--format", "json"});
    auto b = run_cli({"decomp", "--gen", "klr:klr-2-2-2", "--format", "json"});
    REQUIRE(a.exit_code == 0);
    CHECK(a.artifacts == b.artifacts);
}
