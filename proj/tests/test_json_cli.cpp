#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "posetlab/extremal.hpp"
#include "posetlab/json_io.hpp"
#include "test_util.hpp"

using namespace posetlab;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out);
    out << text;
}

int run(const std::string& args, const std::string& out_path) {
    std::string cmd = std::string(POSETLAB_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("family JSON round trip") {
    Rng rng(5001);
    for (int t = 0; t < 50; ++t) {
        SetFamily f = testutil::random_family(static_cast<int>(rng.range(1, 12)), rng.range(0, 30), rng);
        json j = family_to_json(f);
        CHECK(family_from_json(j) == f);
        // canonical serialization is byte-stable
        CHECK(family_to_json(family_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("family JSON rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_family(R"({"n": 3, "sets": [[1],[1]]})"),
                         doctest::Contains("duplicate set"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_family(R"({"n": 3, "sets": [[1,1]]})"),
                         doctest::Contains("repeats element"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_family(R"({"n": 3, "sets": [[4]]})"),
                         doctest::Contains("sets[0][0]"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_family(R"({"n": 64, "sets": []})"),
                         doctest::Contains("out of range"), std::runtime_error);
    CHECK_THROWS_AS(parse_family("{"), std::runtime_error);
    CHECK_THROWS_AS(parse_family(R"({"sets": []})"), std::runtime_error);
}

TEST_CASE("poset JSON round trip applies closure") {
    json j{{"size", 3}, {"lt", json::array({json::array({0, 1}), json::array({1, 2})})}};
    Poset p = poset_from_json(j);
    CHECK(p.less(0, 2));
    CHECK(poset_from_json(poset_to_json(p)) == p);
    json cyc{{"size", 2}, {"lt", json::array({json::array({0, 1}), json::array({1, 0})})}};
    CHECK_THROWS_AS(poset_from_json(cyc), std::invalid_argument);
}

TEST_CASE("checkpoint record round trip") {
    CheckpointRecord r;
    r.rank_start = 17;
    r.rank_end = 42;
    r.best_objective = Natural(123456789012345ull);
    r.best_family = layer_union(4, {1, 2});
    CheckpointRecord back = checkpoint_from_json(checkpoint_to_json(r));
    CHECK(back.rank_start == 17);
    CHECK(back.rank_end == 42);
    CHECK(back.best_objective == r.best_objective);
    CHECK(back.best_family == r.best_family);
}

TEST_CASE("cli count reports zero butterflies on an extremal family") {
    spit("star42.json", family_to_json(sigma_star(4, 2)[0]).dump());
    int rc = run("count --family star42.json --poset butterfly", "count_out.csv");
    CHECK(rc == 0);
    CHECK(slurp("count_out.csv") == "op,poset,n,size,value\ncount,butterfly,4,10,0\n");
    rc = run("count --family star42.json --poset chain:2", "count_out.csv");
    CHECK(rc == 0);
    CHECK(slurp("count_out.csv") ==
          "op,poset,n,size,value\ncount,chain:2,4,10," + count_chains(sigma_star(4, 2)[0], 2).to_decimal() + "\n");
}

TEST_CASE("cli construct writes the family and the sidecar report") {
    int rc = run("construct --n 4 --extra 1 --strategy residue --out constructed.json", "construct_out.txt");
    CHECK(rc == 0);
    SetFamily fam = parse_family(slurp("constructed.json"));
    CHECK(fam.size() == 11);
    json report = json::parse(slurp("constructed.json.report.json"));
    CHECK(report["butterfly_count"] == "3");
    CHECK(report["sigma"] == 10);
    CHECK(report["f"] == 3);
    CHECK(report["E"] == 1);
}

TEST_CASE("cli construct reports capacity errors as usage failures") {
    int rc = run("construct --n 4 --extra 3 --strategy residue", "construct_fail.txt");
    CHECK(rc == 1);
}

TEST_CASE("cli lym emits exact rationals") {
    SetFamily chain3 = make_family(4, {mask_of({1}), mask_of({1, 2}), mask_of({1, 2, 3})});
    spit("chain3.json", family_to_json(chain3).dump());
    int rc = run("lym --family chain3.json --improved", "lym_out.csv");
    CHECK(rc == 0);
    CHECK(slurp("lym_out.csv") == "op,n,size,value\nimproved_lym,4,3,2/3\n");
    spit("layers12.json", family_to_json(layer_union(4, {1, 2})).dump());
    rc = run("lym --family layers12.json", "lym_out.csv");
    CHECK(rc == 0);
    CHECK(slurp("lym_out.csv") == "op,n,size,value\nlubell,4,10,2/1\n");
}

TEST_CASE("cli rejects malformed family files with exit 1") {
    spit("bad.json", R"({"n": 3, "sets": [[9]]})");
    CHECK(run("lym --family bad.json", "bad_out.txt") == 1);
    CHECK(run("count --family nonexistent.json", "bad_out.txt") == 1);
}

TEST_CASE("cli bounds grid is clean by default and exit-2 with the literal rows") {
    CHECK(run("bounds --grid 3:6", "grid_out.csv") == 0);
    CHECK(run("bounds --grid 3:3 --literal-vi", "grid_lit.csv") == 2);
    std::string text = slurp("grid_lit.csv");
    CHECK(text.find("vi-literal") != std::string::npos);
    CHECK(text.find("violated") != std::string::npos);
}

TEST_CASE("cli bounds stability row") {
    CHECK(run("bounds --stab cor_butt --n 8 --m 6", "stab_out.csv") == 0);
    CHECK(slurp("stab_out.csv") == "name,n,m,lhs,rhs,verdict\ncor_butt,8,6,,124,unevaluated\n");
}

TEST_CASE("cli iso census and audit run clean") {
    spit("layer52.json", family_to_json(full_layer(5, 2)).dump());
    CHECK(run("iso --family layer52.json --k 2 --sqrt", "iso_out.csv") == 0);
    std::string text = slurp("iso_out.csv");
    CHECK(text.rfind("op,n,k,param,lhs,rhs,verdict\n", 0) == 0);
    CHECK(run("iso --family layer52.json --k 2 --delta 0.9", "iso_out2.csv") == 0);
    CHECK(run("audit prop1 --n 4 --e-max 1 --seed 5", "audit_out.csv") == 0);
    std::string audit = slurp("audit_out.csv");
    CHECK(audit.find("prop1b-exact") != std::string::npos);
    CHECK(audit.find("violated") == std::string::npos);
}

TEST_CASE("cli oracle emits a witness") {
    CHECK(run("oracle max-free --n 3 --poset chain:2", "oracle_out.json") == 0);
    json w = json::parse(slurp("oracle_out.json"));
    CHECK(w["objective"] == "3");
    CHECK(w["heuristic"] == false);
    CHECK(run("oracle min-copies --n 5 --size 20", "oracle_large.json") == 1); // needs --allow-large
}

TEST_CASE("cli reports are byte-identical across thread counts and formats stay stable") {
    spit("det_family.json", family_to_json(build_construction(6, 2, CodeStrategy::residue)).dump());
    CHECK(run("--threads 1 count --family det_family.json --poset butterfly", "det1.csv") == 0);
    CHECK(run("--threads 4 count --family det_family.json --poset butterfly", "det4.csv") == 0);
    CHECK(slurp("det1.csv") == slurp("det4.csv"));
    CHECK(run("--threads 1 iso --family layer52.json --k 2 --epsilon 0.5", "iso_t1.csv") == 0);
    CHECK(run("--threads 4 iso --family layer52.json --k 2 --epsilon 0.5", "iso_t4.csv") == 0);
    CHECK(slurp("iso_t1.csv") == slurp("iso_t4.csv"));
    // json format variant parses
    CHECK(run("--format json bounds --stab weakstab --n 10 --m 5", "stab.json") == 0);
    json rows = json::parse(slurp("stab.json"));
    CHECK(rows.is_array());
    CHECK(rows[0]["name"] == "weakstab");
    // env var overrides --threads without changing report bytes
    std::string cmd = std::string("POSETLAB_THREADS=3 ") + POSETLAB_BIN +
                      " --threads 1 count --family det_family.json --poset butterfly > det_env.csv";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp("det_env.csv") == slurp("det1.csv"));
}
