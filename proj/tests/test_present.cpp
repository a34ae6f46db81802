#include "doctest.h"

#include <functional>
#include <random>

#include "supp4/presentation.hpp"

using namespace supp4;

// brute-force oracle: SNF diagonal via gcds of k x k minors
static std::vector<BigInt> minor_gcd_diagonal(const IntMatrix& m) {
    std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
    std::size_t k = std::min(r, c);
    std::vector<BigInt> dk(k + 1, 0);
    dk[0] = 1;
    for (std::size_t sz = 1; sz <= k; ++sz) {
        BigInt g = 0;
        std::vector<std::size_t> ri(sz), ci(sz);
        std::function<void(std::size_t, std::size_t)> rec_c = [&](std::size_t p2, std::size_t l2) {
            if (p2 == sz) {
                IntMatrix sub(sz, std::vector<BigInt>(sz));
                for (std::size_t i = 0; i < sz; ++i)
                    for (std::size_t j = 0; j < sz; ++j) sub[i][j] = m[ri[i]][ci[j]];
                g = boost::multiprecision::gcd(g, BigInt(abs(mat_det(sub))));
                return;
            }
            for (std::size_t v = l2; v < c; ++v) {
                ci[p2] = v;
                rec_c(p2 + 1, v + 1);
            }
        };
        std::function<void(std::size_t, std::size_t)> rec_r = [&](std::size_t pos, std::size_t lo) {
            if (pos == sz) {
                rec_c(0, 0);
                return;
            }
            for (std::size_t v = lo; v < r; ++v) {
                ri[pos] = v;
                rec_r(pos + 1, v + 1);
            }
        };
        rec_r(0, 0);
        dk[sz] = g;
    }
    std::vector<BigInt> diag;
    for (std::size_t sz = 1; sz <= k; ++sz) {
        if (dk[sz] == 0) break;
        diag.push_back(dk[sz] / dk[sz - 1]);
    }
    return diag;
}

TEST_CASE("abelianize basics") {
    auto inv = abelianize(Presentation::parse(3, "xxx"));
    CHECK(inv.torsion_factors == std::vector<long long>{3});
    CHECK(inv.free_rank == 2);

    inv = abelianize(Presentation::parse(2, "xYXy"));
    CHECK(inv.torsion_factors.empty());
    CHECK(inv.free_rank == 2);

    // <x,y | x^2 y, x y^2> -> [[2,1],[1,2]] -> Z/3
    inv = abelianize(Presentation::parse(2, "xxy,xyy"));
    CHECK(inv.torsion_factors == std::vector<long long>{3});
    CHECK(inv.free_rank == 0);
}

TEST_CASE("smith transforms verified on random matrices") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 3;
        IntMatrix m(r, std::vector<BigInt>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int>(rng() % 11) - 5;
        auto snf = smith_normal_form(m);
        CHECK(verify_smith(m, snf));
        auto oracle = minor_gcd_diagonal(m);
        std::vector<BigInt> got = snf.diagonal;
        REQUIRE(got.size() == oracle.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == oracle[i]);
    }
}

TEST_CASE("tietze substitution") {
    Presentation p = Presentation::parse(2, "YxxxYX,Yxxyxx");
    Presentation q = tietze_substitute(p, 1, FreeWord::parse("xy", 2));
    CHECK(q.relators[0].str() == "YxxYXX");
    CHECK(q.relators[1].str() == "Yxxyxx");
    CHECK(abelianize(p) == abelianize(q));

    Presentation r = Presentation::parse(2, "yXX");
    Presentation s = tietze_substitute(r, 1, FreeWord::parse("xxy", 2));
    REQUIRE(s.relators.size() == 1);
    CHECK(s.relators[0].str() == "y");

    CHECK_THROWS(tietze_substitute(r, 1, FreeWord::parse("xx", 2)));
}

TEST_CASE("tietze substitution preserves abelianization") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<FreeWord> rels;
        int nr = 1 + rng() % 3;
        for (int i = 0; i < nr; ++i) {
            std::vector<Letter> raw;
            int len = 1 + rng() % 8;
            for (int j = 0; j < len; ++j)
                raw.push_back(make_letter(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1));
            FreeWord w = FreeWord::reduce(raw, 2);
            if (!w.empty()) rels.push_back(w);
        }
        Presentation p(2, rels);
        for (const char* img : {"xy", "Xy", "xxy"}) {
            Presentation q = tietze_substitute(p, 1, FreeWord::parse(img, 2));
            CHECK(abelianize(p) == abelianize(q));
        }
    }
}

TEST_CASE("tietze eliminate pinned generator") {
    Presentation p = Presentation::parse(3, "zxy");
    auto q = tietze_eliminate(p, 2);
    REQUIRE(q.has_value());
    CHECK(q->rank == 2);
    CHECK(q->relators.empty());

    auto r = tietze_eliminate(Presentation::parse(2, "xxy"), 1);
    REQUIRE(r.has_value());
    CHECK(r->rank == 1);
    CHECK(r->relators.empty());

    CHECK(!tietze_eliminate(Presentation::parse(2, "xyxy"), 0).has_value());
}
