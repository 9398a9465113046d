#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orbit_duality/errors.hpp"
#include "orbit_duality/exceptional.hpp"

using namespace orbit_duality;
using G = ExceptionalGroup;

namespace {
std::string squash(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

const std::string kTiny =
    "G2 | 0 | >=1 -> G2\n"
    "G2 | A1 | n=1 -> G2(a1) ; >=2 -> G2\n";
}  // namespace

TEST_CASE("label normalization") {
    CHECK(normalize_label("\\tilde{A}_1") == "A~1");
    CHECK(normalize_label("Ã1") == "A~1");
    CHECK(normalize_label("A_1 + \\tilde{A}_1") == "A1+A~1");
    CHECK(normalize_label("E_8(b_6)") == "E8(b6)");
    CHECK(normalize_label("(3A1)″") == "(3A1)''");
    CHECK(normalize_label("\\set{0}") == "0");
    CHECK(normalize_label("{0}") == "0");
}

TEST_CASE("published lookups") {
    CHECK(d_bv_exceptional(G::G2, "G2", 3) == "A1");
    CHECK(d_bv_exceptional(G::F4, "F4", 3) == "A~2+A1");
    CHECK(d_bv_exceptional(G::F4, "F4", 3) == normalize_label("\\tilde{A}_2 + A_1"));
    CHECK(d_bv_exceptional(G::E8, "E8", 7) == "A6+A1");
    CHECK(stabilization_threshold(G::E8, "E8") == 30);
    CHECK(stabilization_threshold(G::G2, "A1") == 2);
    CHECK(stabilization_threshold(G::E7, "E7") == 18);
    CHECK(general_q_lookup(G::G2, "G2", 4) == "G2(a1)");
    CHECK(general_q_lookup(G::F4, "C3", 8) == "F4(a1)");
    CHECK(general_q_lookup(G::E6, "E6", 8) == "D5");
}

TEST_CASE("lookup accepts unnormalized labels") {
    CHECK(d_bv_exceptional(G::E8, "E_8", 7) == "A6+A1");
    CHECK(d_bv_exceptional(G::G2, "Ã1", 1000) == "G2");
}

TEST_CASE("lookup errors") {
    CHECK_THROWS_AS(d_bv_exceptional(G::G2, "E8", 1), DomainError);
    CHECK_THROWS_AS(d_bv_exceptional(G::G2, "G2", 0), DomainError);
    CHECK_THROWS_AS(stabilization_threshold(G::F4, "nonsense"), DomainError);
}

TEST_CASE("embedded table structure") {
    const auto& t = ExceptionalTables::embedded();
    for (G g : {G::G2, G::F4, G::E6, G::E7, G::E8}) {
        CHECK(static_cast<int>(t.rows_of(g).size()) == expected_orbit_count(g));
        for (int n = 1; n <= 40; ++n) CHECK(t.lookup(g, "0", n) == regular_label(g));
        for (const auto* row : t.rows_of(g)) {
            CHECK(t.lookup(g, row->orbit, 500) == regular_label(g));
            int threshold = t.stabilization_threshold(g, row->orbit);
            CHECK(t.lookup(g, row->orbit, threshold) == regular_label(g));
            if (threshold > 1) CHECK(t.lookup(g, row->orbit, threshold - 1) != regular_label(g));
        }
    }
    // E7 E7(a1) at n=2 is stored as printed.
    CHECK(t.lookup(G::E7, "E7(a1)", 2) == "A3+3A1");
}

TEST_CASE("serialize round trip matches the data asset modulo whitespace") {
    std::ifstream in(ORBIT_DUALITY_TABLES_PATH);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    auto reparsed = ExceptionalTables::parse(buf.str());
    CHECK(squash(reparsed.serialize()) == squash(buf.str()));
    CHECK(squash(ExceptionalTables::embedded().serialize()) == squash(buf.str()));
}

TEST_CASE("parse rejects malformed tables") {
    auto without_tail = std::string("G2 | A1 | n=1 -> G2(a1)\n");
    CHECK_THROWS_AS(ExceptionalTables::parse(without_tail), InvariantError);
    auto wrong_tail = std::string("G2 | A1 | n=1 -> G2(a1) ; >=2 -> A1\n");
    CHECK_THROWS_AS(ExceptionalTables::parse(wrong_tail), InvariantError);
    auto gap = std::string("G2 | A1 | n=1 -> G2(a1) ; >=3 -> G2\n");
    CHECK_THROWS_WITH_AS(ExceptionalTables::parse(gap), doctest::Contains("n=2 matched by 0"), InvariantError);
    auto overlap = std::string("G2 | A1 | n=1,2 -> G2(a1) ; 2..3 -> A1 ; >=4 -> G2\n");
    CHECK_THROWS_AS(ExceptionalTables::parse(overlap), InvariantError);
    auto bad_group = std::string("H4 | 0 | >=1 -> H4\n");
    CHECK_THROWS_AS(ExceptionalTables::parse(bad_group), InvariantError);
    // correct rows but incomplete group
    CHECK_THROWS_WITH_AS(ExceptionalTables::parse(kTiny), doctest::Contains("expected 5"), InvariantError);
}

TEST_CASE("ORBIT_DUALITY_DATA override") {
    ::setenv("ORBIT_DUALITY_DATA", ORBIT_DUALITY_TABLES_PATH, 1);
    CHECK(ExceptionalTables::load_default().lookup(G::G2, "G2", 3) == "A1");
    ::setenv("ORBIT_DUALITY_DATA", "/nonexistent/tables.txt", 1);
    CHECK_THROWS_AS(ExceptionalTables::load_default(), DomainError);
    ::unsetenv("ORBIT_DUALITY_DATA");
    CHECK(ExceptionalTables::load_default().rows().size() == 157);
}
