#include "doctest.h"

#include <random>

#include "supp4/word.hpp"

using namespace supp4;

TEST_CASE("free reduction") {
    FreeWord w = FreeWord::parse("xXy", 2);
    CHECK(w.str() == "y");
    CHECK(FreeWord::parse("YxxxYX", 2).str() == "YxxxYX");
    CHECK(FreeWord::parse("xyYX", 2).empty());
    CHECK(FreeWord::parse("1", 2).empty());
    CHECK_THROWS(FreeWord::parse("z", 2));
}

TEST_CASE("inverse and product") {
    FreeWord w = FreeWord::parse("xy", 2);
    CHECK(w.inverse().str() == "YX");
    CHECK((w * w.inverse()).empty());
    CHECK(FreeWord::identity(2).inverse().empty());
    CHECK(FreeWord::parse("xx", 2).inverse().str() == "XX");
    CHECK_THROWS((void)(FreeWord::parse("xy", 2) * FreeWord::parse("Yz", 3)));
}

TEST_CASE("concat examples") {
    CHECK((FreeWord::parse("xy", 3) * FreeWord::parse("Yz", 3)).str() == "xz");
    CHECK((FreeWord::parse("x", 2) * FreeWord::parse("x", 2)).str() == "xx");
}

TEST_CASE("cyclic reduce") {
    auto [core, conj] = FreeWord::parse("xyX", 2).cyclic_reduce();
    CHECK(core.str() == "y");
    CHECK(conj.str() == "x");
    auto [core2, conj2] = FreeWord::parse("yXyyxy", 2).cyclic_reduce();
    CHECK(core2.str() == "yXyyxy");
    CHECK(conj2.empty());
    auto [core3, conj3] = FreeWord::parse("Xyyyx", 2).cyclic_reduce();
    CHECK(core3.str() == "yyy");
    CHECK(conj3.str() == "X");
    FreeWord w = FreeWord::parse("xyX", 2);
    CHECK(conj.inverse() * w * conj == core);
}

TEST_CASE("substitute") {
    // y -> xy applied to y^-1 x^3 y^-1 x^-1 gives y^-1 x^2 y^-1 x^-2
    FreeWord w = FreeWord::parse("YxxxYX", 2);
    FreeWord img = FreeWord::parse("xy", 2);
    CHECK(w.substitute(1, img).str() == "YxxYXX");
    CHECK(w.substitute(1, FreeWord::parse("y", 2)) == w);
    CHECK(FreeWord::parse("y", 2).substitute(1, FreeWord::parse("Xy", 2)).str() == "Xy");
}

TEST_CASE("tietze inverse pair") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> raw;
        int len = static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i)
            raw.push_back(make_letter(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1));
        FreeWord w = FreeWord::reduce(raw, 2);
        FreeWord a = w.substitute(1, FreeWord::parse("xy", 2));
        FreeWord b = a.substitute(1, FreeWord::parse("Xy", 2));
        CHECK(b == w);
        CHECK((w * w.inverse()).empty());
        FreeWord r1 = w.substitute(0, FreeWord::parse("x", 2));
        CHECK(r1 == w);
    }
}

TEST_CASE("round trip and ordering") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> raw;
        int len = static_cast<int>(rng() % 10);
        for (int i = 0; i < len; ++i)
            raw.push_back(make_letter(static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1));
        FreeWord w = FreeWord::reduce(raw, 3);
        CHECK(FreeWord::parse(w.str(), 3) == w);
        CHECK(FreeWord::reduce(w.letters(), 3) == w);  // idempotent
    }
}

TEST_CASE("cyclic normal form identifies rotations and inversion") {
    FreeWord a = FreeWord::parse("yXyyxy", 2);
    FreeWord rot = FreeWord::parse("Xyyxyy", 2);
    CHECK(a.cyclic_normal_form() == rot.cyclic_normal_form());
    CHECK(a.cyclic_normal_form() == a.inverse().cyclic_normal_form());
}
