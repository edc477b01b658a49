#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nda/report.hpp"

using nda::LawVerdict;
using nda::Nat;
using nda::OpTable;
using nda::ProjectiveArithmetic;

namespace {

ProjectiveArithmetic make(const char* text) {
    return ProjectiveArithmetic::make(nda::parse_generator_spec(text));
}

}  // namespace

TEST_CASE("verdict JSON round-trips exactly, including big witnesses") {
    LawVerdict v;
    v.law_id = nda::LawId::associativity;
    v.subject = "power:2";
    v.bound = Nat(10u);
    v.arity = 3;
    v.holds = false;
    v.witness = {Nat(3u), Nat(3u), nda::pow_u(Nat(2u), 4096)};
    v.notes = "notes, with a comma and \"quotes\"";
    auto j = nda::to_json(v);
    CHECK(nda::verdict_from_json(j) == v);
    // through text as well
    auto reparsed = nlohmann::json::parse(j.dump());
    CHECK(nda::verdict_from_json(reparsed) == v);
}

TEST_CASE("verdicts from real checks round-trip") {
    auto A = make("power:2");
    for (const auto& req : nda::standard_law_suite()) {
        auto v = nda::run_law(A, req, Nat(10u));
        CHECK(nda::verdict_from_json(nlohmann::json::parse(nda::to_json(v).dump())) == v);
    }
}

TEST_CASE("operation tables render and round-trip") {
    auto A = make("power:2");
    auto t = nda::make_op_table(A, "add", Nat(11u));
    CHECK(t.cells.size() == 12);
    CHECK(t.cells[2][2] == Nat(2u));
    CHECK(t.cells[10][11] == Nat(14u));
    CHECK(t.cells[11][11] == Nat(15u));
    CHECK(nda::table_from_json(nlohmann::json::parse(nda::to_json(t).dump())) == t);

    auto md = nda::render_markdown(t);
    CHECK(md.find("| 11 |") != std::string::npos);
    auto csv = nda::render_csv(t);
    CHECK(csv.substr(0, 4) == "add,");
    CHECK_THROWS_AS(nda::make_op_table(A, "sub", Nat(3u)), std::invalid_argument);
}

TEST_CASE("machine infinity report round-trips and renders runs") {
    auto rep = nda::machine_infinity_demo(make("power:2"), Nat(50u));
    CHECK(nda::mi_from_json(nlohmann::json::parse(nda::to_json(rep).dump())) == rep);
    CHECK(nda::render_members(rep.members) == "1..50");

    CHECK(nda::render_members({}) == "(empty)");
    CHECK(nda::render_members({Nat(3u)}) == "3");
    CHECK(nda::render_members({Nat(1u), Nat(2u), Nat(4u), Nat(7u), Nat(8u), Nat(9u)}) ==
          "1, 2, 4, 7..9");
}

TEST_CASE("verdict lists render in all formats") {
    auto A = make("power:2");
    std::vector<LawVerdict> vs = {nda::check_associativity(A, Nat(10u)),
                                  nda::check_zero_neutral(A, Nat(10u))};
    auto md = nda::render_markdown(vs);
    CHECK(md.find("associativity") != std::string::npos);
    CHECK(md.find("**no**") != std::string::npos);
    auto csv = nda::render_csv(vs);
    CHECK(csv.find("zero-neutral") != std::string::npos);
    CHECK(csv.find("law_id,gen,bound,arity,holds,witness,notes") == 0);
}
