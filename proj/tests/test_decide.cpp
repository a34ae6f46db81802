#include "doctest.h"

#include <random>

#include "supp4/decide.hpp"

using namespace supp4;

static Budget small_budget() {
    Budget b;
    b.max_rewrite_rules = 2000;
    b.max_steps = 20000;
    b.max_cosets = 20000;
    return b;
}

TEST_CASE("todd-coxeter known orders") {
    Budget b = small_budget();
    auto r = todd_coxeter(Presentation::parse(1, "xxxxx"), {}, b);
    CHECK(r.completed);
    CHECK(r.index == 5);
    CHECK(validate_coset_table(Presentation::parse(1, "xxxxx"), r.table));

    Presentation s3 = Presentation::parse(2, "xx,yy,xyxyxy");
    r = todd_coxeter(s3, {}, b);
    CHECK(r.completed);
    CHECK(r.index == 6);
    CHECK(validate_coset_table(s3, r.table));

    Presentation a5 = Presentation::parse(2, "xx,yyy,xyxyxyxyxy");
    r = todd_coxeter(a5, {}, b);
    CHECK(r.completed);
    CHECK(r.index == 60);
    CHECK(validate_coset_table(a5, r.table));

    // subgroup <x> in S3 has index 3
    r = todd_coxeter(s3, {FreeWord::parse("x", 2)}, b);
    CHECK(r.completed);
    CHECK(r.index == 3);
    CHECK(validate_coset_table(s3, r.table, {FreeWord::parse("x", 2)}));

    // free group: exhaustion, reported distinctly
    Budget tiny = b;
    tiny.max_cosets = 500;
    r = todd_coxeter(Presentation::parse(2, ""), {}, tiny);
    CHECK(!r.completed);
}

TEST_CASE("knuth-bendix basics") {
    Budget b = small_budget();
    RewriteSystem sys = knuth_bendix(Presentation::parse(1, "xxxxx"), b);
    CHECK(sys.confluent);
    std::vector<std::string> nf;
    for (int k = 0; k < 5; ++k)
        nf.push_back(sys.normal_form(FreeWord::parse("x", 1).pow(k)).str());
    CHECK(nf == std::vector<std::string>{"1", "x", "xx", "XX", "X"});

    RewriteSystem cm = knuth_bendix(Presentation::parse(2, "xYXy"), b);
    CHECK(cm.confluent);
    CHECK(cm.normal_form(FreeWord::parse("yx", 2)) == cm.normal_form(FreeWord::parse("xy", 2)));

    RewriteSystem s3 = knuth_bendix(Presentation::parse(2, "xx,yy,xyxyxy"), b);
    CHECK(s3.confluent);
}

TEST_CASE("confluent system agrees with coset table on random word pairs") {
    Budget b = small_budget();
    Presentation p = Presentation::parse(2, "xx,yyy,xyxyxyxyxy");  // A5
    DecisionContext ctx(p, b);
    REQUIRE(ctx.rws.confluent);
    REQUIRE(ctx.regular_run().completed);
    std::mt19937 rng(17);
    for (int t = 0; t < 1000; ++t) {
        std::vector<Letter> ra, rb;
        for (int i = 0; i < static_cast<int>(rng() % 9); ++i)
            ra.push_back(make_letter(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1));
        for (int i = 0; i < static_cast<int>(rng() % 9); ++i)
            rb.push_back(make_letter(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1));
        FreeWord a = FreeWord::reduce(ra, 2), wb = FreeWord::reduce(rb, 2);
        bool nf_eq = ctx.rws.normal_form(a) == ctx.rws.normal_form(wb);
        bool tc_eq = ctx.trace_coset(a) == ctx.trace_coset(wb);
        CHECK(nf_eq == tc_eq);
    }
}

TEST_CASE("equal_in_group") {
    Budget b = small_budget();
    CHECK(equal_in_group(Presentation::parse(2, "xYXy"), FreeWord::parse("xy", 2),
                         FreeWord::parse("yx", 2), b) == TriBool::Yes);
    CHECK(equal_in_group(Presentation::parse(1, "xxxxx"), FreeWord::parse("x", 1).pow(7),
                         FreeWord::parse("xx", 1), b) == TriBool::Yes);
    CHECK(equal_in_group(Presentation::parse(2, ""), FreeWord::parse("x", 2),
                         FreeWord::parse("y", 2), b) == TriBool::No);
}

TEST_CASE("order_of") {
    Budget b = small_budget();
    CHECK(order_of(Presentation::parse(1, "xxxxx"), FreeWord::parse("xx", 1), b) == 5);
    CHECK(!order_of(Presentation::parse(2, ""), FreeWord::parse("x", 2), b).has_value());
    // appendix pair: x has order 8 in <x,y | y^-1 x^3 y^-1 x^-1, y^-1 x^2 y x^2>
    auto n = order_of(Presentation::parse(2, "YxxxYX,Yxxyxx"), FreeWord::parse("x", 2), b);
    REQUIRE(n.has_value());
    CHECK(*n == 8);
}

TEST_CASE("derivations evaluate to the claimed identity") {
    Budget b = small_budget();
    Presentation p = Presentation::parse(2, "YxxxYX,Yxxyxx");
    DecisionContext ctx(p, b);
    Derivation proof;
    auto n = ctx.order_of(FreeWord::parse("x", 2), &proof);
    REQUIRE(n.has_value());
    FreeWord val = evaluate_derivation(proof, p.relators, 2);
    CHECK(val == FreeWord::parse("x", 2).pow(*n));

    Derivation eq;
    Presentation cyc = Presentation::parse(2, "xxxy");  // y = x^-3
    DecisionContext c2(cyc, b);
    REQUIRE(c2.equal(FreeWord::parse("xy", 2), FreeWord::parse("XX", 2), &eq) == TriBool::Yes);
    FreeWord v2 = evaluate_derivation(eq, cyc.relators, 2);
    CHECK(v2 == FreeWord::parse("xy", 2) * FreeWord::parse("XX", 2).inverse());
}

TEST_CASE("budget exhaustion is reported, never wrong answers") {
    Budget starved;
    starved.max_rewrite_rules = 4;
    starved.max_steps = 10;
    starved.max_cosets = 4;
    Presentation p = Presentation::parse(2, "xx,yyy,xyxyxyxyxy");
    RewriteSystem sys = knuth_bendix(p, starved);
    CHECK(!sys.confluent);
    auto r = todd_coxeter(p, {}, starved);
    CHECK(!r.completed);
    DecisionContext ctx(p, starved);
    CHECK(ctx.equal(FreeWord::parse("x", 2), FreeWord::parse("x", 2)) == TriBool::Yes);
}
