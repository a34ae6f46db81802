#pragma once

#include <optional>

#include "supp4/coset.hpp"
#include "supp4/presentation.hpp"
#include "supp4/rewrite.hpp"

namespace supp4 {

enum class TriBool { Yes, No, Unknown };

// Cached per-presentation engine state so pipelines don't redo completions.
struct DecisionContext {
    Presentation p;
    Budget budget;
    RewriteSystem rws;
    std::optional<TcRun> regular;  // enumeration over the trivial subgroup

    DecisionContext(Presentation pres, const Budget& b) : p(std::move(pres)), budget(b) {
        rws = knuth_bendix(p, budget);
    }

    const TcRun& regular_run() {
        if (!regular) regular = todd_coxeter(p, {}, budget);
        return *regular;
    }

    long long trace_coset(const FreeWord& w) {
        const TcRun& r = regular_run();
        long long c = 0;
        for (Letter l : w.letters()) c = r.table.rows[c][CosetTable::column(l)];
        return c;
    }

    // yes/no only with a confluence or coset-table proof; derivation filled on
    // rewriting-provable equalities
    TriBool equal(const FreeWord& a, const FreeWord& b, Derivation* proof = nullptr) {
        FreeWord na = rws.normal_form(a);
        FreeWord nb = rws.normal_form(b);
        if (na == nb) {
            if (proof) {
                Derivation ta, tb;
                rws.normal_form(a, &ta);
                rws.normal_form(b, &tb);
                *proof = ta;
                append_derivation(*proof, inverse_derivation(tb));
            }
            return TriBool::Yes;
        }
        if (rws.confluent) return TriBool::No;
        if (regular_run().completed)
            return trace_coset(a) == trace_coset(b) ? TriBool::Yes : TriBool::No;
        return TriBool::Unknown;
    }

    TriBool is_trivial(const FreeWord& w, Derivation* proof = nullptr) {
        return equal(w, FreeWord::identity(p.rank), proof);
    }

    // least n >= 1 with w^n = 1 provable by rewriting (exact when confluent)
    std::optional<int> order_of(const FreeWord& w, Derivation* proof = nullptr) {
        FreeWord acc = FreeWord::identity(p.rank);
        int hit = 0;
        for (int n = 1; n <= budget.max_exponent && !hit; ++n) {
            acc = rws.normal_form(acc * w);
            if (acc.empty()) hit = n;
        }
        if (!hit) return std::nullopt;
        if (proof) {
            // replay with traces: w^hit * eps^-1 is the concatenation of the
            // per-factor reduction traces
            Derivation steps;
            acc = FreeWord::identity(p.rank);
            for (int n = 1; n <= hit; ++n) {
                Derivation t;
                acc = rws.normal_form(acc * w, &t);
                append_derivation(steps, t);
            }
            *proof = std::move(steps);
        }
        return hit;
    }
};

inline TriBool equal_in_group(const Presentation& p, const FreeWord& a, const FreeWord& b,
                              const Budget& budget) {
    DecisionContext ctx(p, budget);
    return ctx.equal(a, b);
}

inline std::optional<int> order_of(const Presentation& p, const FreeWord& w,
                                   const Budget& budget) {
    DecisionContext ctx(p, budget);
    return ctx.order_of(w);
}

}  // namespace supp4
