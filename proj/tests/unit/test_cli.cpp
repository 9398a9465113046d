#include <doctest.h>

#include <json.hpp>

#include "orbit_duality/cli.hpp"
#include "orbit_duality/errors.hpp"

using namespace orbit_duality;
using cli::run;

TEST_CASE("group spec parsing") {
    auto g = cli::parse_group_spec("C2@n=3");
    CHECK(g.classical());
    CHECK(g.rank == 2);
    CHECK(g.n == 3);
    CHECK(g.input_size() == 5);
    CHECK(cli::parse_group_spec("B3@n=4").input_size() == 7);
    CHECK(cli::parse_group_spec("B3@n=2").input_size() == 6);
    CHECK(cli::parse_group_spec("A3@n=1").input_size() == 4);
    CHECK(cli::parse_group_spec("D4@n=5").input_size() == 8);
    CHECK(cli::to_string(cli::parse_group_spec("E7@n=5")) == "E7@n=5");
    CHECK_FALSE(cli::parse_group_spec("G2@n=1").classical());
    for (const char* bad : {"C0@n=1", "C2@n=0", "C2", "X2@n=1", "H4@n=2", "C2@n=-1"})
        CHECK_THROWS_AS(cli::parse_group_spec(bad), DomainError);
}

TEST_CASE("dual command") {
    auto r = run({"dual", "C1@n=2", "[2]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("output: [2]\n") != std::string::npos);
    CHECK(run({"dual", "G2@n=3", "G2"}).out.find("output: A1\n") != std::string::npos);
    CHECK(run({"dual", "A1@n=1", "[2]"}).out.find("output: [1,1]\n") != std::string::npos);
    CHECK(run({"dual", "D4@n=1", "[2,2,2,2]^I"}).out.find("output: [4,4]^I\n") != std::string::npos);
}

TEST_CASE("dual json round trips through the partition format") {
    auto r = run({"dual", "B1@n=4", "[3]", "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["group"] == "B1@n=4");
    CHECK(j["n"] == 4);
    CHECK(j["input"] == "[3]");
    CHECK(parse_partition(j["output"].get<std::string>()) == Partition{1, 1, 1});
    CHECK(j["path"] == "closed-formula");
}

TEST_CASE("input errors exit 2") {
    auto wrong_type = run({"dual", "C2@n=1", "[3,2]"});
    CHECK(wrong_type.exit_code == 2);
    CHECK(wrong_type.err.find("not of type B") != std::string::npos);
    CHECK(run({"dual", "A2@n=1", "[2]"}).exit_code == 2);
    CHECK(run({"dual", "A2@n=1", "[1,2]"}).exit_code == 2);
    CHECK(run({"dual", "G2@n=1", "E8"}).exit_code == 2);
    CHECK(run({"dual", "A1@n=1", "[2]^I"}).exit_code == 2);
    auto ap_exc = run({"ap", "G2@n=3", "G2"});
    CHECK(ap_exc.exit_code == 2);
    CHECK(ap_exc.err.find("AP path unavailable") != std::string::npos);
    CHECK(run({"speh", "1", "3", "2", "4"}).exit_code == 2);
    CHECK(run({"verify", "nonsense"}).exit_code == 2);
    CHECK(run({"verify", "order", "--max-size", "0"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("ap command traces") {
    auto c2 = run({"ap", "C2@n=2", "[4]"});
    CHECK(c2.exit_code == 0);
    CHECK(c2.out.find("output: [2,1,1]\n") != std::string::npos);
    auto a1 = run({"ap", "A1@n=2", "[2]"});
    CHECK(a1.out.find("lambda: {1/4, -1/4}") != std::string::npos);
    CHECK(a1.out.find("output: [2]\n") != std::string::npos);
    CHECK(run({"ap", "B1@n=1", "[2]"}).out.find("output: [1,1,1]\n") != std::string::npos);
    auto j = nlohmann::json::parse(run({"ap", "C2@n=2", "[4]", "--json"}).out);
    CHECK(j["path"] == "annihilator-partition");
    CHECK(j["trace"]["classes"].size() == 2);
}

TEST_CASE("speh command") {
    CHECK(run({"speh", "1", "2", "5", "6"}).out.find("output: [6,4]\n") != std::string::npos);
    CHECK(run({"speh", "1", "1", "2", "2"}).out.find("output: [2]\n") != std::string::npos);
    CHECK(run({"speh", "2", "1", "3", "2"}).out.find("output: [4,2]\n") != std::string::npos);
}

TEST_CASE("verify command is deterministic") {
    auto a = run({"verify", "induction", "--samples", "100", "--seed", "5"});
    auto b = run({"verify", "induction", "--samples", "100", "--seed", "5"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed 5") != std::string::npos);
    auto j = nlohmann::json::parse(run({"verify", "tables", "--json"}).out);
    CHECK(j["passed"] == true);
}

TEST_CASE("table command") {
    auto q = run({"table", "query", "E8", "E8", "7"});
    CHECK(q.out.find("output: A6+A1\n") != std::string::npos);
    auto d = run({"table", "dump"});
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 157);
}
