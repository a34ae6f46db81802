#include "doctest.h"

#include <fstream>
#include <sstream>

#include "supp4/oracle.hpp"

using namespace supp4;

static Budget run_budget() {
    Budget b;
    b.max_rewrite_rules = 1500;
    b.max_steps = 12000;
    b.max_cosets = 60000;
    return b;
}

struct FixtureRow {
    int id;
    std::string word;
    std::string kind;
    std::string extra;
};

static std::vector<FixtureRow> load_rows(const std::string& name) {
    std::ifstream in(std::string(SUPP4_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<FixtureRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        FixtureRow r;
        std::string id;
        std::getline(ss, id, '\t');
        r.id = std::stoi(id);
        std::getline(ss, r.word, '\t');
        std::getline(ss, r.kind, '\t');
        std::getline(ss, r.extra, '\t');
        rows.push_back(r);
    }
    return rows;
}

TEST_CASE("classify single relators from worked cases") {
    Budget b = run_budget();
    ProtectedSet ps12 = ProtectedSet::for_regime(RegimeTemplate::S12);
    ProtectedSet ps10 = ProtectedSet::for_regime(RegimeTemplate::S10);

    Verdict v = classify(Presentation::parse(3, "xxx"), ps12, b);
    CHECK(v.kind() == "torsion");
    if (auto* t = std::get_if<TorsionCert>(&v.cert)) {
        CHECK(t->w.str() == "x");
        CHECK(t->n == 3);
    }
    CHECK(verify_certificate(Presentation::parse(3, "xxx"), v, ps12));

    v = classify(Presentation::parse(2, "xYXy"), ps10, b);
    CHECK(v.kind() == "abelian");
    CHECK(verify_certificate(Presentation::parse(2, "xYXy"), v, ps10));

    v = classify(Presentation::parse(2, "YxxxYX,Yxxyxx"), ps10, b);
    CHECK(v.kind() == "torsion");
    if (auto* t = std::get_if<TorsionCert>(&v.cert)) {
        CHECK(t->w.str() == "x");
        CHECK(t->n == 8);
    }
    CHECK(verify_certificate(Presentation::parse(2, "YxxxYX,Yxxyxx"), v, ps10));

    v = classify(Presentation::parse(2, "yXXYx"), ps10, b);
    CHECK(v.kind() == "bs");
    if (auto* q = std::get_if<BsQuotientCert>(&v.cert)) {
        long long mm = std::min(std::llabs(q->m), std::llabs(q->n));
        long long nn = std::max(std::llabs(q->m), std::llabs(q->n));
        CHECK(mm == 1);
        CHECK(nn == 2);
    }
    CHECK(verify_certificate(Presentation::parse(2, "yXXYx"), v, ps10));

    v = classify(Presentation::parse(2, ""), ps10, b);
    CHECK(v.inconclusive());
}

TEST_CASE("verify_certificate rejects wrong claims") {
    Budget b = run_budget();
    ProtectedSet ps12 = ProtectedSet::for_regime(RegimeTemplate::S12);
    Presentation p = Presentation::parse(3, "xxx");
    Verdict good = classify(p, ps12, b);
    REQUIRE(good.kind() == "torsion");
    Verdict bad = good;
    std::get<TorsionCert>(bad.cert).n = 2;
    CHECK(!verify_certificate(p, bad, ps12));
    Verdict bad2 = good;
    std::get<TorsionCert>(bad2.cert).w = FreeWord::parse("y", 3);
    CHECK(!verify_certificate(p, bad2, ps12));
}

TEST_CASE("s10 cycle-of-length-3 table kinds") {
    Budget b = run_budget();
    ProtectedSet ps = ProtectedSet::for_regime(RegimeTemplate::S10);
    auto disposed = load_rows("s10_c3_disposed.tsv");
    REQUIRE(disposed.size() == 57);
    for (const auto& row : disposed) {
        Presentation p = Presentation::parse(2, row.word);
        Verdict v = classify(p, ps, b);
        bool ok = !v.inconclusive() && verify_certificate(p, v, ps);
        CHECK_MESSAGE(ok, "row ", row.id, " ", row.word, " not disposed");
        if (row.kind == "bs") {
            CHECK_MESSAGE(v.kind() == "bs", "row ", row.id, " ", row.word,
                          " expected bs got ", v.kind());
        } else {
            CHECK_MESSAGE(v.kind() == row.kind, "row ", row.id, " ", row.word, " expected ",
                          row.kind, " got ", v.kind());
        }
    }

    auto survivors = load_rows("s10_c3_survivors.tsv");
    REQUIRE(survivors.size() == 14);
    for (const auto& row : survivors) {
        Presentation p = Presentation::parse(2, row.word);
        Verdict v = classify(p, ps, b);
        CHECK_MESSAGE(v.inconclusive(), "survivor ", row.id, " ", row.word,
                      " wrongly disposed as ", v.kind());
    }
}

TEST_CASE("monotonicity: larger budgets only resolve inconclusive verdicts") {
    Budget small = run_budget();
    small.max_rewrite_rules = 60;
    small.max_steps = 400;
    small.max_cosets = 300;
    Budget big = run_budget();
    ProtectedSet ps = ProtectedSet::for_regime(RegimeTemplate::S10);
    auto rows = load_rows("s10_c3_disposed.tsv");
    for (std::size_t i = 0; i < rows.size(); i += 5) {
        Presentation p = Presentation::parse(2, rows[i].word);
        Verdict lo = classify(p, ps, small);
        Verdict hi = classify(p, ps, big);
        if (!lo.inconclusive()) CHECK(lo.kind() == hi.kind());
    }
}
