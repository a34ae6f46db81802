#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "supp4/presentation.hpp"
#include "supp4/word.hpp"

namespace supp4 {

struct Budget {
    int max_rewrite_rules = 20000;
    int max_word_length = 64;
    int max_cosets = 1000000;
    long long max_steps = 200000;  // critical-pair examinations / TC definitions
    int max_exponent = 64;         // order_of search bound

    Budget scaled(double f) const {
        Budget b = *this;
        b.max_rewrite_rules = static_cast<int>(b.max_rewrite_rules * f);
        b.max_cosets = static_cast<int>(b.max_cosets * f);
        b.max_steps = static_cast<long long>(b.max_steps * f);
        return b;
    }
};

// One conjugated-relator term: conj * relator[index]^sign * conj^-1.
struct TraceTerm {
    FreeWord conj;
    int relator = 0;
    int sign = 1;
};

// A derivation certifies a group identity w = 1 as a product of conjugated
// relators whose free reduction equals w. Verification needs word arithmetic
// only, nothing from the engines that produced it.
using Derivation = std::vector<TraceTerm>;

inline Derivation inverse_derivation(const Derivation& d) {
    Derivation out;
    out.reserve(d.size());
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        out.push_back({it->conj, it->relator, -it->sign});
    return out;
}

inline Derivation conjugate_derivation(const Derivation& d, const FreeWord& c) {
    Derivation out;
    out.reserve(d.size());
    for (const auto& t : d) out.push_back({c * t.conj, t.relator, t.sign});
    return out;
}

inline void append_derivation(Derivation& dst, const Derivation& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

inline FreeWord evaluate_derivation(const Derivation& d,
                                    const std::vector<FreeWord>& relators, int rank) {
    FreeWord acc = FreeWord::identity(rank);
    for (const auto& t : d) {
        FreeWord r = relators.at(t.relator);
        if (t.sign < 0) r = r.inverse();
        acc = acc * r.conjugate(t.conj);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Shortlex string rewriting over the doubled alphabet x < X < y < Y < z < Z.
// Free cancellation is expressed as ordinary rules; every derived rule carries
// a derivation of lhs * rhs^-1 from the relators.
// ---------------------------------------------------------------------------

inline int letter_ord(Letter l) { return 2 * gen_of(l) + (sign_of(l) < 0 ? 1 : 0); }

inline bool shortlex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_ord(a[i]) < letter_ord(b[i]);
    return false;
}

struct RewriteRule {
    std::vector<Letter> lhs, rhs;
    Derivation how;  // derivation of lhs * rhs^-1 (empty for free cancellation)
    bool active = true;
};

class RewriteSystem {
public:
    int rank = 0;
    std::vector<FreeWord> relators;
    std::vector<RewriteRule> rules;
    bool confluent = false;

    FreeWord to_word(const std::vector<Letter>& ls) const {
        return FreeWord::reduce(ls, rank);
    }

    std::size_t active_rule_count() const {
        std::size_t n = 0;
        for (const auto& r : rules)
            if (r.active) ++n;
        return n;
    }

    // leftmost match of any active rule; (position, rule id)
    std::optional<std::pair<std::size_t, std::size_t>> find_step(
        const std::vector<Letter>& w, std::size_t skip = static_cast<std::size_t>(-1)) const {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (std::size_t ri : index_[letter_ord(w[pos])]) {
                if (ri == skip) continue;
                const auto& r = rules[ri];
                if (!r.active || pos + r.lhs.size() > w.size()) continue;
                bool match = true;
                for (std::size_t k = 1; k < r.lhs.size(); ++k)
                    if (w[pos + k] != r.lhs[k]) {
                        match = false;
                        break;
                    }
                if (match) return std::make_pair(pos, ri);
            }
        }
        return std::nullopt;
    }

    // fully reduce; optionally collect the derivation of w * nf^-1
    std::vector<Letter> normal_form_letters(std::vector<Letter> w,
                                            Derivation* trace = nullptr) const {
        while (true) {
            auto st = find_step(w);
            if (!st) break;
            auto [pos, ri] = *st;
            const auto& r = rules[ri];
            if (trace && !r.how.empty()) {
                FreeWord prefix =
                    FreeWord::reduce(std::vector<Letter>(w.begin(), w.begin() + pos), rank);
                append_derivation(*trace, conjugate_derivation(r.how, prefix));
            }
            std::vector<Letter> next;
            next.reserve(w.size() - r.lhs.size() + r.rhs.size());
            next.insert(next.end(), w.begin(), w.begin() + pos);
            next.insert(next.end(), r.rhs.begin(), r.rhs.end());
            next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
            w = std::move(next);
        }
        return w;
    }

    FreeWord normal_form(const FreeWord& w, Derivation* trace = nullptr) const {
        return to_word(normal_form_letters(w.letters(), trace));
    }

    void reindex() {
        for (auto& b : index_) b.clear();
        for (std::size_t i = 0; i < rules.size(); ++i)
            if (rules[i].active && !rules[i].lhs.empty())
                index_[letter_ord(rules[i].lhs[0])].push_back(i);
    }

    void index_add(std::size_t i) {
        if (rules[i].active && !rules[i].lhs.empty())
            index_[letter_ord(rules[i].lhs[0])].push_back(i);
    }

private:
    std::array<std::vector<std::size_t>, 8> index_{};
};

// Knuth-Bendix completion. Returned system is confluent only if all critical
// pairs resolved within budget; otherwise it is a sound partial system.
inline RewriteSystem knuth_bendix(const Presentation& p, const Budget& budget) {
    RewriteSystem sys;
    sys.rank = p.rank;
    sys.relators = p.relators;
    constexpr std::size_t kMaxWitness = 20000;

    std::vector<char> processed;  // per rule: overlaps examined
    bool overflow = false;

    // forward declaration trick via std::function avoided: plain lambda recursion
    auto add_equation = [&](std::vector<Letter> a, std::vector<Letter> b, Derivation how) {
        std::vector<Letter> na = sys.normal_form_letters(a);
        std::vector<Letter> nb = sys.normal_form_letters(b);
        if (na == nb) return;  // resolved; no witness needed
        Derivation ta, tb;
        sys.normal_form_letters(a, &ta);
        sys.normal_form_letters(b, &tb);
        // a*na^-1 = ta, b*nb^-1 = tb, a*b^-1 = how
        // => na*nb^-1 = ta^-1 * how * tb
        Derivation w = inverse_derivation(ta);
        append_derivation(w, how);
        append_derivation(w, tb);
        if (shortlex_less(na, nb)) {
            std::swap(na, nb);
            w = inverse_derivation(w);
        }
        if (static_cast<int>(na.size()) > budget.max_word_length || w.size() > kMaxWitness) {
            overflow = true;
            return;
        }
        sys.rules.push_back({std::move(na), std::move(nb), std::move(w), true});
        sys.index_add(sys.rules.size() - 1);
        processed.push_back(0);
    };

    for (int g = 0; g < p.rank; ++g)
        for (int s : {1, -1}) {
            Letter l = make_letter(g, s);
            sys.rules.push_back({{l, inv_letter(l)}, {}, {}, true});
            processed.push_back(0);
        }
    sys.reindex();

    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        Derivation d{{FreeWord::identity(p.rank), static_cast<int>(k), 1}};
        add_equation(p.relators[k].letters(), {}, std::move(d));
    }

    long long steps = 0;
    while (!overflow) {
        // pick the shortest-lhs unprocessed active rule
        std::size_t i = sys.rules.size();
        for (std::size_t k = 0; k < sys.rules.size(); ++k)
            if (sys.rules[k].active && !processed[k] &&
                (i == sys.rules.size() || sys.rules[k].lhs.size() < sys.rules[i].lhs.size()))
                i = k;
        if (i == sys.rules.size()) break;
        processed[i] = 1;

        // interreduce older rules against rule i
        const std::vector<Letter> li = sys.rules[i].lhs;
        std::size_t existing = sys.rules.size();
        for (std::size_t k = 0; k < existing; ++k) {
            if (k == i || !sys.rules[k].active || sys.rules[k].how.empty()) continue;
            bool reducible = false;
            if (li.size() <= sys.rules[k].lhs.size()) {
                const auto& lk = sys.rules[k].lhs;
                for (std::size_t pos = 0; pos + li.size() <= lk.size() && !reducible; ++pos) {
                    bool m = true;
                    for (std::size_t t = 0; t < li.size(); ++t)
                        if (lk[pos + t] != li[t]) {
                            m = false;
                            break;
                        }
                    if (m && !(li.size() == lk.size() && i > k)) reducible = true;
                }
            }
            if (reducible) {
                sys.rules[k].active = false;
                sys.reindex();
                auto lhs = sys.rules[k].lhs;
                auto rhs = sys.rules[k].rhs;
                auto how = sys.rules[k].how;
                add_equation(std::move(lhs), std::move(rhs), std::move(how));
            }
        }
        if (!sys.rules[i].active) continue;

        // overlaps of rule i with every rule present at entry (both orders);
        // rules created below get their own processing turn later
        const std::size_t bound = sys.rules.size();
        for (std::size_t j = 0; j < bound && !overflow; ++j) {
            if (!sys.rules[i].active) break;
            if (!sys.rules[j].active) continue;
            for (int dir = 0; dir < 2 && !overflow; ++dir) {
                std::size_t a_id = dir == 0 ? i : j;
                std::size_t b_id = dir == 0 ? j : i;
                if (dir == 1 && i == j) continue;
                const auto l1 = sys.rules[a_id].lhs, r1 = sys.rules[a_id].rhs;
                const auto l2 = sys.rules[b_id].lhs, r2 = sys.rules[b_id].rhs;
                const Derivation h1 = sys.rules[a_id].how, h2 = sys.rules[b_id].how;
                // suffix of l1 = prefix of l2 (incl. containment at the ends)
                for (std::size_t ov = 1; ov <= std::min(l1.size(), l2.size()); ++ov) {
                    if (ov == l1.size() && ov == l2.size()) continue;  // same word
                    bool eq = true;
                    for (std::size_t t = 0; t < ov; ++t)
                        if (l1[l1.size() - ov + t] != l2[t]) {
                            eq = false;
                            break;
                        }
                    if (!eq) continue;
                    if (steps++ > budget.max_steps ||
                        static_cast<int>(sys.active_rule_count()) > budget.max_rewrite_rules) {
                        overflow = true;
                        break;
                    }
                    std::vector<Letter> a(l1.begin(), l1.end() - ov);
                    std::vector<Letter> b(l2.begin() + ov, l2.end());
                    // u = a + l2 + b_rest where overlap region is l2's prefix
                    std::vector<Letter> w1;  // r1 + b
                    w1.insert(w1.end(), r1.begin(), r1.end());
                    w1.insert(w1.end(), b.begin(), b.end());
                    std::vector<Letter> w2;  // a + r2
                    w2.insert(w2.end(), a.begin(), a.end());
                    w2.insert(w2.end(), r2.begin(), r2.end());
                    // u*w1^-1 = h1 ; u*w2^-1 = conj_a(h2)
                    // => w1*w2^-1 = h1^-1 * conj_a(h2)
                    Derivation how = inverse_derivation(h1);
                    append_derivation(how,
                                      conjugate_derivation(h2, FreeWord::reduce(a, p.rank)));
                    add_equation(std::move(w1), std::move(w2), std::move(how));
                }
                // containment: l2 strictly inside l1 (not prefix/suffix aligned)
                if (l2.size() < l1.size()) {
                    for (std::size_t pos = 1; pos + l2.size() < l1.size(); ++pos) {
                        bool m = true;
                        for (std::size_t t = 0; t < l2.size(); ++t)
                            if (l1[pos + t] != l2[t]) {
                                m = false;
                                break;
                            }
                        if (!m) continue;
                        if (steps++ > budget.max_steps) {
                            overflow = true;
                            break;
                        }
                        std::vector<Letter> a(l1.begin(), l1.begin() + pos);
                        std::vector<Letter> c(l1.begin() + pos + l2.size(), l1.end());
                        std::vector<Letter> w2;
                        w2.insert(w2.end(), a.begin(), a.end());
                        w2.insert(w2.end(), r2.begin(), r2.end());
                        w2.insert(w2.end(), c.begin(), c.end());
                        Derivation how = inverse_derivation(h1);
                        append_derivation(how,
                                          conjugate_derivation(h2, FreeWord::reduce(a, p.rank)));
                        add_equation(std::vector<Letter>(r1), std::move(w2), std::move(how));
                    }
                }
            }
        }
    }
    bool unprocessed = false;
    for (std::size_t k = 0; k < sys.rules.size(); ++k)
        if (sys.rules[k].active && !processed[k]) unprocessed = true;
    sys.confluent = !unprocessed && !overflow;
    return sys;
}

}  // namespace supp4
