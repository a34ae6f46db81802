#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "supp4/decide.hpp"

namespace supp4 {

enum class RegimeTemplate { S12, S10 };
enum class AlgebraMode { ZeroDivisor, Unit };

struct Regime {
    RegimeTemplate support = RegimeTemplate::S12;
    AlgebraMode mode = AlgebraMode::ZeroDivisor;

    int rank() const { return support == RegimeTemplate::S12 ? 3 : 2; }
};

// Words of S_alpha, guaranteed pairwise distinct and nontrivial in the ambient
// torsion-free group. Torsion/collision certificates may only cite these.
struct ProtectedSet {
    RegimeTemplate regime;
    std::vector<FreeWord> words;

    static ProtectedSet for_regime(RegimeTemplate t) {
        ProtectedSet ps;
        ps.regime = t;
        if (t == RegimeTemplate::S12) {
            for (const char* s : {"x", "X", "y", "Y", "z", "Z", "Xy", "Yx", "Xz", "Zx", "Yz", "Zy"})
                ps.words.push_back(FreeWord::parse(s, 3));
        } else {
            for (const char* s : {"x", "X", "xx", "XX", "y", "Y", "Xy", "Yx", "xy", "YX"})
                ps.words.push_back(FreeWord::parse(s, 2));
        }
        return ps;
    }

    bool contains(const FreeWord& w) const {
        for (const auto& u : words)
            if (u == w) return true;
        return false;
    }
};

struct TorsionCert {
    FreeWord w;  // a protected word
    int n = 0;   // >= 2, with a derivation of w^n = 1
    Derivation proof;
};

struct CollisionCert {
    FreeWord a, b;  // distinct protected words proven equal
    Derivation proof;  // derivation of a * b^-1 = 1
};

struct AbelianCert {
    // one derivation of [g_i, g_j] = 1 per generator pair i < j
    std::vector<std::pair<std::pair<int, int>, Derivation>> commutators;
};

struct FiniteCert {
    long long order = 0;
    CosetTable table;
};

struct BsQuotientCert {
    long long m = 0, n = 0;      // b a^m b^-1 = a^n, m != n
    FreeWord a_word, b_word;     // images of the BS generators in p
    std::vector<FreeWord> gen_exprs;  // per generator of p: word over a,b (rank 2)
    Derivation relation_proof;        // b_word a_word^m b_word^-1 a_word^-n = 1
    std::vector<Derivation> expr_proofs;  // gen_i * expr_i(a_word,b_word)^-1 = 1
};

struct InconclusiveMark {
    Budget used;
};

struct Verdict {
    std::variant<FiniteCert, AbelianCert, TorsionCert, CollisionCert, BsQuotientCert,
                 InconclusiveMark>
        cert;

    bool inconclusive() const { return std::holds_alternative<InconclusiveMark>(cert); }
    std::string kind() const {
        if (std::holds_alternative<FiniteCert>(cert)) return "finite";
        if (std::holds_alternative<AbelianCert>(cert)) return "abelian";
        if (std::holds_alternative<TorsionCert>(cert)) return "torsion";
        if (std::holds_alternative<CollisionCert>(cert)) return "collision";
        if (std::holds_alternative<BsQuotientCert>(cert)) return "bs";
        return "inconclusive";
    }
};

// substitute a -> A, b -> B (rank-2 expression word into words of rank `rank`)
inline FreeWord expand_expr(const FreeWord& expr, const FreeWord& A, const FreeWord& B) {
    FreeWord out = FreeWord::identity(A.rank());
    for (Letter l : expr.letters()) {
        const FreeWord& img = gen_of(l) == 0 ? A : B;
        out = out * (sign_of(l) > 0 ? img : img.inverse());
    }
    return out;
}

struct BsBounds {
    int word_len = 6;
    int max_exp = 6;
    int nielsen_depth = 3;
    // Disposals rest on the known result for torsion-free quotients of
    // BS(1,n); only certificates with min(|m|,|n|) = 1 count as contradictions.
    bool unit_exponent_only = true;
};

// Independent audit: every obligation checked by free-word arithmetic (plus
// table validation for Finite). Accepts or rejects; never consults engines.
inline bool verify_certificate(const Presentation& p, const Verdict& v,
                               const ProtectedSet& ps) {
    if (v.inconclusive()) return false;
    if (const auto* f = std::get_if<FiniteCert>(&v.cert)) {
        return f->order >= 1 && f->table.index == f->order &&
               validate_coset_table(p, f->table);
    }
    if (const auto* a = std::get_if<AbelianCert>(&v.cert)) {
        std::set<std::pair<int, int>> seen;
        for (const auto& [pair, d] : a->commutators) {
            auto [i, j] = pair;
            if (i < 0 || j <= i || j >= p.rank) return false;
            FreeWord gi = FreeWord::letter(i, 1, p.rank), gj = FreeWord::letter(j, 1, p.rank);
            FreeWord comm = gi * gj * gi.inverse() * gj.inverse();
            if (evaluate_derivation(d, p.relators, p.rank) != comm) return false;
            seen.insert(pair);
        }
        for (int i = 0; i < p.rank; ++i)
            for (int j = i + 1; j < p.rank; ++j)
                if (!seen.count({i, j})) return false;
        return true;
    }
    if (const auto* t = std::get_if<TorsionCert>(&v.cert)) {
        if (t->n < 2 || !ps.contains(t->w)) return false;
        return evaluate_derivation(t->proof, p.relators, p.rank) == t->w.pow(t->n);
    }
    if (const auto* c = std::get_if<CollisionCert>(&v.cert)) {
        if (c->a == c->b || !ps.contains(c->a) || !ps.contains(c->b)) return false;
        return evaluate_derivation(c->proof, p.relators, p.rank) ==
               c->a * c->b.inverse();
    }
    if (const auto* b = std::get_if<BsQuotientCert>(&v.cert)) {
        if (b->m == b->n) return false;
        if (static_cast<int>(b->gen_exprs.size()) != p.rank ||
            static_cast<int>(b->expr_proofs.size()) != p.rank)
            return false;
        FreeWord rel = b->b_word * b->a_word.pow(static_cast<int>(b->m)) *
                       b->b_word.inverse() * b->a_word.pow(static_cast<int>(-b->n));
        if (evaluate_derivation(b->relation_proof, p.relators, p.rank) != rel) return false;
        for (int i = 0; i < p.rank; ++i) {
            FreeWord gi = FreeWord::letter(i, 1, p.rank);
            FreeWord img = expand_expr(b->gen_exprs[i], b->a_word, b->b_word);
            if (evaluate_derivation(b->expr_proofs[i], p.relators, p.rank) !=
                gi * img.inverse())
                return false;
        }
        return true;
    }
    return false;
}

// Bounded search for a certified surjection from BS(m,n), m != n. Candidate
// generator pairs come from Nielsen moves, so the generator expressions are
// free identities; obligations are then proved in p itself.
inline std::optional<BsQuotientCert> search_bs_witness(const Presentation& p,
                                                       DecisionContext& ctx,
                                                       const BsBounds& bounds) {
    struct State {
        FreeWord A, B;    // candidate images, words over p's generators
        FreeWord ea, eb;  // inverse bookkeeping: x = ea(A,B), y = eb(A,B), rank 2
    };
    if (p.rank != 2) return std::nullopt;
    FreeWord a2 = FreeWord::letter(0, 1, 2), b2 = FreeWord::letter(1, 1, 2);
    std::vector<State> states{{a2, b2, a2, b2}};
    std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> seen{
        {a2.letters(), b2.letters()}};

    auto push = [&](std::vector<State>& out, State s) {
        if (static_cast<int>(s.A.size()) > bounds.word_len ||
            static_cast<int>(s.B.size()) > bounds.word_len)
            return;
        auto key = std::make_pair(s.A.letters(), s.B.letters());
        if (seen.insert(key).second) out.push_back(std::move(s));
    };

    std::vector<State> frontier = states;
    for (int depth = 0; depth < bounds.nielsen_depth; ++depth) {
        std::vector<State> next;
        for (const State& s : frontier) {
            // A -> A*B^-1 has inverse a -> a*b at the expression level, etc.
            push(next, {s.A * s.B, s.B, s.ea.substitute(0, a2 * b2.inverse()),
                        s.eb.substitute(0, a2 * b2.inverse())});
            push(next, {s.A * s.B.inverse(), s.B, s.ea.substitute(0, a2 * b2),
                        s.eb.substitute(0, a2 * b2)});
            push(next, {s.B * s.A, s.B, s.ea.substitute(0, b2.inverse() * a2),
                        s.eb.substitute(0, b2.inverse() * a2)});
            push(next, {s.A, s.B * s.A, s.ea.substitute(1, b2 * a2.inverse()),
                        s.eb.substitute(1, b2 * a2.inverse())});
            push(next, {s.A, s.B * s.A.inverse(), s.ea.substitute(1, b2 * a2),
                        s.eb.substitute(1, b2 * a2)});
            push(next, {s.A, s.A * s.B, s.ea.substitute(1, a2.inverse() * b2),
                        s.eb.substitute(1, a2.inverse() * b2)});
            // swap and invert-A
            State sw{s.B, s.A, s.ea, s.eb};
            for (FreeWord* e : {&sw.ea, &sw.eb}) {
                FreeWord tmp = FreeWord::identity(2);
                for (Letter l : e->letters())
                    tmp = tmp * FreeWord::letter(gen_of(l) == 0 ? 1 : 0, sign_of(l), 2);
                *e = tmp;
            }
            push(next, std::move(sw));
            State ia{s.A.inverse(), s.B, s.ea.substitute(0, a2.inverse()),
                     s.eb.substitute(0, a2.inverse())};
            push(next, std::move(ia));
        }
        states.insert(states.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    for (const State& s : states) {
        if (ctx.rws.normal_form(s.A).empty()) continue;
        for (int m = 1; m <= bounds.max_exp; ++m) {
            for (int n = -bounds.max_exp; n <= bounds.max_exp; ++n) {
                if (n == 0 || n == m) continue;
                if (bounds.unit_exponent_only && m != 1 && n != 1 && n != -1) continue;
                // normalize to m > 0 and (m, n) lexicographically by |.|
                FreeWord rel = s.B * s.A.pow(m) * s.B.inverse() * s.A.pow(-n);
                Derivation proof;
                if (ctx.is_trivial(rel, &proof) != TriBool::Yes) continue;
                if (ctx.rws.normal_form(s.A.pow(m)).empty()) continue;
                BsQuotientCert cert;
                cert.m = m;
                cert.n = n;
                cert.a_word = s.A;
                cert.b_word = s.B;
                cert.gen_exprs = {s.ea, s.eb};
                cert.relation_proof = std::move(proof);
                cert.expr_proofs = {{}, {}};  // free identities by construction
                return cert;
            }
        }
    }
    return std::nullopt;
}

struct ClassifyOptions {
    BsBounds bs;
    std::vector<BsQuotientCert> curated_bs;  // tried before the bounded search
    int finite_first_cosets = 3000;          // cheap first-stage finiteness probe
};

// Checker order: finite (cheap stage), abelian, torsion, collision, BS,
// then finite again with the full budget. First verified certificate wins.
inline Verdict classify(const Presentation& p, const ProtectedSet& ps, const Budget& budget,
                        const ClassifyOptions& opts = {}) {
    // stage 1: cheap finiteness probe
    Budget small = budget;
    small.max_cosets = std::min(budget.max_cosets, opts.finite_first_cosets);
    TcRun probe = todd_coxeter(p, {}, small);
    if (probe.completed && validate_coset_table(p, probe.table)) {
        FiniteCert f{probe.index, probe.table};
        return Verdict{std::move(f)};
    }

    DecisionContext ctx(p, budget);

    // abelian: all generator commutators trivial
    {
        AbelianCert cert;
        bool all = true;
        for (int i = 0; i < p.rank && all; ++i)
            for (int j = i + 1; j < p.rank && all; ++j) {
                FreeWord gi = FreeWord::letter(i, 1, p.rank), gj = FreeWord::letter(j, 1, p.rank);
                FreeWord comm = gi * gj * gi.inverse() * gj.inverse();
                Derivation d;
                if (ctx.is_trivial(comm, &d) == TriBool::Yes)
                    cert.commutators.push_back({{i, j}, std::move(d)});
                else
                    all = false;
            }
        if (all) return Verdict{std::move(cert)};
    }

    // torsion over protected words
    for (const FreeWord& w : ps.words) {
        Derivation proof;
        auto n = ctx.order_of(w, &proof);
        if (!n) continue;
        if (*n == 1) {
            // w itself dies in the quotient; certify w^2 = 1 instead
            Derivation twice = proof;
            append_derivation(twice, conjugate_derivation(proof, w));
            TorsionCert t{w, 2, std::move(twice)};
            return Verdict{std::move(t)};
        }
        TorsionCert t{w, *n, std::move(proof)};
        return Verdict{std::move(t)};
    }

    // collision of two distinct protected words
    for (std::size_t i = 0; i < ps.words.size(); ++i)
        for (std::size_t j = i + 1; j < ps.words.size(); ++j) {
            Derivation d;
            if (ctx.equal(ps.words[i], ps.words[j], &d) == TriBool::Yes) {
                CollisionCert c{ps.words[i], ps.words[j], std::move(d)};
                return Verdict{std::move(c)};
            }
        }

    // curated BS witnesses, then bounded search (rank 2; rank 3 via elimination)
    for (const auto& hint : opts.curated_bs) {
        Verdict v{hint};
        if (verify_certificate(p, v, ps)) return v;
    }
    if (p.rank == 2) {
        auto bs = search_bs_witness(p, ctx, opts.bs);
        if (bs) {
            Verdict v{std::move(*bs)};
            if (verify_certificate(p, v, ps)) return v;
        }
    } else {
        for (int g = p.rank - 1; g >= 0; --g) {
            auto elim = tietze_eliminate_info(p, g);
            if (!elim || elim->reduced.rank != 2) continue;
            DecisionContext ectx(elim->reduced, budget);
            auto bs = search_bs_witness(elim->reduced, ectx, opts.bs);
            if (!bs) continue;
            // lift candidate words through the elimination and re-prove in p
            auto lift = [&](const FreeWord& w) {
                std::vector<Letter> out;
                for (Letter l : w.letters()) {
                    int gg = gen_of(l);
                    out.push_back(make_letter(gg >= g ? gg + 1 : gg, sign_of(l)));
                }
                return FreeWord::reduce(out, p.rank);
            };
            // expression of the eliminated generator over (a,b): substitute the
            // remaining generators' expressions into its defining word
            FreeWord elim_expr = FreeWord::identity(2);
            for (Letter l : elim->image.letters()) {
                FreeWord e = bs->gen_exprs[gen_of(l)];
                elim_expr = elim_expr * (sign_of(l) > 0 ? e : e.inverse());
            }
            BsQuotientCert cert;
            cert.m = bs->m;
            cert.n = bs->n;
            cert.a_word = lift(bs->a_word);
            cert.b_word = lift(bs->b_word);
            FreeWord rel = cert.b_word * cert.a_word.pow(static_cast<int>(cert.m)) *
                           cert.b_word.inverse() * cert.a_word.pow(static_cast<int>(-cert.n));
            Derivation rp;
            if (ctx.is_trivial(rel, &rp) != TriBool::Yes) continue;
            cert.relation_proof = std::move(rp);
            bool ok = true;
            for (int i = 0; i < p.rank && ok; ++i) {
                FreeWord gi = FreeWord::letter(i, 1, p.rank);
                FreeWord expr = i < g ? bs->gen_exprs[i]
                                      : (i == g ? elim_expr : bs->gen_exprs[i - 1]);
                FreeWord img = expand_expr(expr, cert.a_word, cert.b_word);
                Derivation ep;
                if (ctx.equal(gi, img, &ep) == TriBool::Yes) {
                    cert.gen_exprs.push_back(expr);
                    cert.expr_proofs.push_back(std::move(ep));
                } else {
                    ok = false;
                }
            }
            if (!ok) continue;
            Verdict v{std::move(cert)};
            if (verify_certificate(p, v, ps)) return v;
        }
    }

    // stage 2: full-budget finiteness
    if (budget.max_cosets > small.max_cosets) {
        TcRun full = todd_coxeter(p, {}, budget);
        if (full.completed && validate_coset_table(p, full.table)) {
            FiniteCert f{full.index, full.table};
            return Verdict{std::move(f)};
        }
    }
    return Verdict{InconclusiveMark{budget}};
}

}  // namespace supp4
