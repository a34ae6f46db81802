#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "supp4/presentation.hpp"
#include "supp4/rewrite.hpp"

namespace supp4 {

// Todd-Coxeter coset enumeration, HLT strategy with lookahead and compaction.
// Columns: 2*gen for the generator, 2*gen+1 for its inverse.

struct CosetTable {
    int rank = 0;
    std::vector<std::vector<std::int32_t>> rows;  // rows[c][col], -1 = undefined
    bool complete = false;
    long long index = 0;

    static int column(Letter l) { return 2 * gen_of(l) + (sign_of(l) < 0 ? 1 : 0); }
    static int inverse_column(int col) { return col ^ 1; }
};

enum class TcOutcome { Completed, Exhausted };

struct TcResult {
    TcOutcome outcome = TcOutcome::Exhausted;
    CosetTable table;   // populated on completion
    long long index = 0;
    long long cosets_used = 0;
};

class ToddCoxeter {
public:
    ToddCoxeter(const Presentation& p, const std::vector<FreeWord>& subgroup,
                const Budget& budget)
        : p_(p), budget_(budget) {
        ncols_ = 2 * p.rank;
        for (const auto& r : p.relators) rel_cols_.push_back(to_cols(r));
        for (const auto& w : subgroup) sub_cols_.push_back(to_cols(w));
    }

    TcResult run() {
        tab_.assign(1, std::vector<std::int32_t>(ncols_, -1));
        rep_.assign(1, 0);
        dead_ = 0;
        defs_ = 0;
        defs_cap_ = 8LL * budget_.max_cosets + 10000;

        for (const auto& w : sub_cols_)
            while (!trace_and_close(0, w))
                if (!reclaim()) return exhausted();

        std::size_t scan = 0;
        while (true) {
            scan = next_live(scan);
            if (scan >= tab_.size()) break;
            for (const auto& rel : rel_cols_) {
                while (!trace_and_close(static_cast<std::int32_t>(scan), rel)) {
                    std::size_t remap = scan;
                    if (!reclaim(&remap)) return exhausted();
                    scan = remap;
                }
                if (find(static_cast<std::int32_t>(scan)) != static_cast<std::int32_t>(scan))
                    break;  // current coset merged away
            }
            if (find(static_cast<std::int32_t>(scan)) == static_cast<std::int32_t>(scan))
                ++scan;
        }

        TcResult res;
        res.outcome = TcOutcome::Completed;
        res.cosets_used = defs_;
        res.table = compact();
        res.index = res.table.index;
        return res;
    }

private:
    std::vector<int> to_cols(const FreeWord& w) const {
        std::vector<int> c;
        c.reserve(w.size());
        for (Letter l : w.letters()) c.push_back(CosetTable::column(l));
        return c;
    }

    std::int32_t find(std::int32_t c) {
        while (rep_[c] != c) {
            rep_[c] = rep_[rep_[c]];
            c = rep_[c];
        }
        return c;
    }

    std::int32_t entry(std::int32_t c, int col) {
        std::int32_t t = tab_[c][col];
        if (t < 0) return -1;
        t = find(t);
        tab_[c][col] = t;
        return t;
    }

    std::size_t next_live(std::size_t from) {
        while (from < tab_.size() && rep_[from] != static_cast<std::int32_t>(from)) ++from;
        return from;
    }

    bool define(std::int32_t c, int col) {
        if (static_cast<long long>(tab_.size()) - dead_ >= budget_.max_cosets) return false;
        if (defs_ >= defs_cap_) return false;
        ++defs_;
        std::int32_t n = static_cast<std::int32_t>(tab_.size());
        tab_.emplace_back(ncols_, -1);
        rep_.push_back(n);
        tab_[c][col] = n;
        tab_[n][CosetTable::inverse_column(col)] = c;
        return true;
    }

    void set_edge(std::int32_t a, int col, std::int32_t b) {
        std::int32_t ta = entry(a, col);
        if (ta < 0) {
            tab_[a][col] = b;
            std::int32_t tb = entry(b, CosetTable::inverse_column(col));
            if (tb < 0)
                tab_[b][CosetTable::inverse_column(col)] = a;
            else if (tb != a)
                merge(tb, a);
        } else if (ta != b) {
            merge(ta, b);
        }
    }

    void merge(std::int32_t a, std::int32_t b) {
        pending_.push_back({find(a), find(b)});
        process_pending();
    }

    void process_pending() {
        while (!pending_.empty()) {
            auto [a, b] = pending_.back();
            pending_.pop_back();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            rep_[b] = a;
            ++dead_;
            for (int col = 0; col < ncols_; ++col) {
                std::int32_t t = tab_[b][col];
                if (t < 0) continue;
                t = find(t);
                std::int32_t s = entry(a, col);
                if (s < 0) {
                    tab_[a][col] = t;
                    std::int32_t back = entry(t, CosetTable::inverse_column(col));
                    if (back < 0)
                        tab_[t][CosetTable::inverse_column(col)] = a;
                    else if (back != a)
                        pending_.push_back({back, a});
                } else if (s != t) {
                    pending_.push_back({s, t});
                }
            }
        }
    }

    // trace word from coset c, defining cosets as needed; close the cycle
    bool trace_and_close(std::int32_t c, const std::vector<int>& cols) {
        c = find(c);
        std::int32_t cur = c;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            cur = find(cur);
            c = find(c);
            std::int32_t nxt = entry(cur, cols[i]);
            if (nxt < 0) {
                if (i + 1 == cols.size()) {
                    set_edge(cur, cols[i], c);
                    return true;
                }
                if (!define(cur, cols[i])) return false;
                nxt = find(tab_[cur][cols[i]]);
            }
            cur = nxt;
            if (i + 1 == cols.size() && find(cur) != find(c)) merge(cur, c);
        }
        return true;
    }

    // lookahead (deduction-only pass), then in-place compaction if it freed
    // anything; remaps *scan through the renumbering
    bool reclaim(std::size_t* scan = nullptr) {
        if (defs_ >= defs_cap_) return false;
        long long before = dead_;
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (rep_[c] != static_cast<std::int32_t>(c)) continue;
            for (const auto& rel : rel_cols_) trace_deduce(static_cast<std::int32_t>(c), rel);
        }
        if (dead_ == before && static_cast<long long>(tab_.size()) == dead_ + budget_.max_cosets)
            return false;  // nothing freed, still at the cap
        if (dead_ == before) return false;
        // compact in place
        std::vector<std::int32_t> newid(tab_.size(), -1);
        std::int32_t n = 0;
        for (std::size_t c = 0; c < tab_.size(); ++c)
            if (rep_[c] == static_cast<std::int32_t>(c)) newid[c] = n++;
        std::vector<std::vector<std::int32_t>> nt(n, std::vector<std::int32_t>(ncols_, -1));
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (newid[c] < 0) continue;
            for (int col = 0; col < ncols_; ++col) {
                std::int32_t t = tab_[c][col];
                if (t >= 0) nt[newid[c]][col] = newid[find(t)];
            }
        }
        if (scan) {
            std::int32_t s = find(static_cast<std::int32_t>(*scan));
            *scan = static_cast<std::size_t>(newid[s]);
        }
        tab_ = std::move(nt);
        rep_.resize(tab_.size());
        std::iota(rep_.begin(), rep_.end(), 0);
        dead_ = 0;
        return true;
    }

    // trace without definitions; deduce the final edge when only one is missing
    void trace_deduce(std::int32_t c, const std::vector<int>& cols) {
        c = find(c);
        // forward from start
        std::int32_t f = c;
        std::size_t fi = 0;
        while (fi < cols.size()) {
            std::int32_t n = entry(f, cols[fi]);
            if (n < 0) break;
            f = n;
            ++fi;
        }
        if (fi == cols.size()) {
            if (f != find(c)) merge(f, c);
            return;
        }
        // backward from end
        std::int32_t bck = find(c);
        std::size_t bi = cols.size();
        while (bi > fi) {
            std::int32_t n = entry(bck, CosetTable::inverse_column(cols[bi - 1]));
            if (n < 0) break;
            bck = n;
            --bi;
        }
        if (bi == fi + 1) set_edge(f, cols[fi], bck);
    }

    TcResult exhausted() {
        TcResult res;
        res.outcome = TcOutcome::Exhausted;
        res.cosets_used = static_cast<long long>(tab_.size());
        return res;
    }

    CosetTable compact() {
        std::vector<std::int32_t> newid(tab_.size(), -1);
        std::int32_t n = 0;
        for (std::size_t c = 0; c < tab_.size(); ++c)
            if (rep_[c] == static_cast<std::int32_t>(c)) newid[c] = n++;
        CosetTable out;
        out.rank = p_.rank;
        out.rows.assign(n, std::vector<std::int32_t>(ncols_, -1));
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (newid[c] < 0) continue;
            for (int col = 0; col < ncols_; ++col) {
                std::int32_t t = tab_[c][col];
                if (t >= 0) out.rows[newid[c]][col] = newid[find(t)];
            }
        }
        out.complete = true;
        for (const auto& row : out.rows)
            for (auto v : row)
                if (v < 0) out.complete = false;
        out.index = n;
        return out;
    }

    const Presentation& p_;
    Budget budget_;
    int ncols_ = 0;
    std::vector<std::vector<int>> rel_cols_, sub_cols_;
    std::vector<std::vector<std::int32_t>> tab_;
    std::vector<std::int32_t> rep_;
    std::vector<std::pair<std::int32_t, std::int32_t>> pending_;
    long long dead_ = 0;
    long long defs_ = 0;
    long long defs_cap_ = 0;
};

struct TcRun {
    bool completed = false;
    long long index = 0;
    CosetTable table;
};

inline TcRun todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup,
                          const Budget& budget) {
    ToddCoxeter tc(p, subgroup, budget);
    TcResult r = tc.run();
    TcRun out;
    out.completed = r.outcome == TcOutcome::Completed && r.table.complete;
    out.index = r.index;
    out.table = std::move(r.table);
    return out;
}

// Independent validation of a completed table: all columns are mutually
// inverse bijections, every relator fixes every coset, subgroup generators
// fix coset 0, and the action is transitive.
inline bool validate_coset_table(const Presentation& p, const CosetTable& t,
                                 const std::vector<FreeWord>& subgroup = {}) {
    if (!t.complete || t.rank != p.rank) return false;
    long long n = static_cast<long long>(t.rows.size());
    if (t.index != n || n == 0) return false;
    int ncols = 2 * p.rank;
    for (const auto& row : t.rows)
        if (static_cast<int>(row.size()) != ncols) return false;
    for (long long c = 0; c < n; ++c)
        for (int col = 0; col < ncols; ++col) {
            std::int32_t d = t.rows[c][col];
            if (d < 0 || d >= n) return false;
            if (t.rows[d][CosetTable::inverse_column(col)] != c) return false;
        }
    auto trace = [&](long long start, const FreeWord& w) {
        long long c = start;
        for (Letter l : w.letters()) c = t.rows[c][CosetTable::column(l)];
        return c;
    };
    for (const auto& r : p.relators)
        for (long long c = 0; c < n; ++c)
            if (trace(c, r) != c) return false;
    for (const auto& s : subgroup)
        if (trace(0, s) != 0) return false;
    // transitivity
    std::vector<char> seen(n, 0);
    std::vector<long long> stack{0};
    seen[0] = 1;
    long long cnt = 1;
    while (!stack.empty()) {
        long long c = stack.back();
        stack.pop_back();
        for (int col = 0; col < ncols; ++col) {
            long long d = t.rows[c][col];
            if (!seen[d]) {
                seen[d] = 1;
                ++cnt;
                stack.push_back(d);
            }
        }
    }
    return cnt == n;
}

}  // namespace supp4
