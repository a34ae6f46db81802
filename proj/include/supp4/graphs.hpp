#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace supp4 {

// Simple graphs on up to 16 vertices, adjacency as row bitmasks.
struct SimpleGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    static SimpleGraph empty(int n) {
        if (n < 0 || n > 16) throw std::invalid_argument("vertex count out of range");
        SimpleGraph g;
        g.n = n;
        return g;
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop");
        adj[u] |= std::uint16_t(1) << v;
        adj[v] |= std::uint16_t(1) << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(std::uint16_t(1) << v);
        adj[v] &= ~(std::uint16_t(1) << u);
    }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) e.push_back({u, v});
        return e;
    }
    std::vector<int> degree_sequence() const {  // non-increasing
        std::vector<int> d;
        for (int v = 0; v < n; ++v) d.push_back(degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }
    bool connected() const {
        if (n == 0) return false;
        std::uint32_t seen = 1;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (has_edge(v, u) && !((seen >> u) & 1)) {
                    seen |= 1u << u;
                    stack.push_back(u);
                }
        }
        return seen == (1u << n) - 1;
    }
    SimpleGraph permuted(const std::vector<int>& perm) const {  // vertex v -> perm[v]
        SimpleGraph g = empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
        return g;
    }
    // upper-triangle bitstring, used as the canonical certificate payload
    std::vector<std::uint8_t> code() const {
        std::vector<std::uint8_t> bits;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) bits.push_back(has_edge(u, v) ? 1 : 0);
        return bits;
    }
    bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
    bool operator<(const SimpleGraph& o) const {
        if (n != o.n) return n < o.n;
        return code() < o.code();
    }
};

// ---------------------------------------------------------------------------
// canonical labeling: refinement + individualization, minimizing the code
// ---------------------------------------------------------------------------
namespace graphdetail {

inline std::vector<int> refine_colors(const SimpleGraph& g, std::vector<int> color) {
    for (int round = 0; round < g.n; ++round) {
        // signature: (color, sorted multiset of neighbor colors)
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (int u = 0; u < g.n; ++u)
                if (g.has_edge(v, u)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(g.n);
        int c = 0;
        for (int i = 0; i < g.n; ++i) {
            if (i && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct CanonSearch {
    const SimpleGraph& g;
    std::vector<std::uint8_t> best;
    bool have = false;

    explicit CanonSearch(const SimpleGraph& gg) : g(gg) {}

    void leaf(const std::vector<int>& order) {
        std::vector<int> perm(g.n);
        for (int i = 0; i < g.n; ++i) perm[order[i]] = i;
        auto code = g.permuted(perm).code();
        if (!have || code < best) {
            best = std::move(code);
            have = true;
        }
    }

    void descend(std::vector<int> color) {
        color = refine_colors(g, color);
        // find smallest non-singleton color class
        int target = -1;
        for (int c = 0;; ++c) {
            int cnt = 0;
            for (int v = 0; v < g.n; ++v)
                if (color[v] == c) ++cnt;
            if (cnt == 0) break;
            if (cnt > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            // discrete: order = vertices sorted by color
            std::vector<int> order(g.n);
            std::vector<std::pair<int, int>> cv;
            for (int v = 0; v < g.n; ++v) cv.push_back({color[v], v});
            std::sort(cv.begin(), cv.end());
            for (int i = 0; i < g.n; ++i) order[i] = cv[i].second;
            leaf(order);
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> next = color;
            for (int u = 0; u < g.n; ++u)
                if (next[u] >= target && u != v) next[u] += 1;
            descend(std::move(next));
        }
    }
};

}  // namespace graphdetail

inline std::vector<std::uint8_t> canonical_form(const SimpleGraph& g) {
    graphdetail::CanonSearch s(g);
    s.descend(std::vector<int>(g.n, 0));
    return s.best;
}

inline SimpleGraph canonical_graph(const SimpleGraph& g) {
    auto code = canonical_form(g);
    SimpleGraph out = SimpleGraph::empty(g.n);
    std::size_t k = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v, ++k)
            if (code[k]) out.add_edge(u, v);
    return out;
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// generation with twin-class pruning and canonical deduplication
// ---------------------------------------------------------------------------
namespace graphdetail {

inline bool degrees_feasible(const std::vector<int>& rem, int from) {
    // Erdos-Gallai on the remaining degrees of vertices from..n-1
    std::vector<int> d(rem.begin() + from, rem.end());
    std::sort(d.rbegin(), d.rend());
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2) return false;
    int m = static_cast<int>(d.size());
    for (int k = 1; k <= m; ++k) {
        long long lhs = 0;
        for (int i = 0; i < k; ++i) lhs += d[i];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < m; ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

template <typename Sink>
void gen_rec(SimpleGraph& g, std::vector<int>& rem, int v, const Sink& sink) {
    int n = g.n;
    if (v == n) {
        if (std::all_of(rem.begin(), rem.end(), [](int r) { return r == 0; }) && g.connected())
            sink(g);
        return;
    }
    int need = rem[v];
    if (need == 0) {
        gen_rec(g, rem, v + 1, sink);
        return;
    }
    // candidates: later vertices with remaining degree
    std::vector<int> cands;
    for (int u = v + 1; u < n; ++u)
        if (rem[u] > 0) cands.push_back(u);
    if (static_cast<int>(cands.size()) < need) return;

    // twin classes: same remaining degree and same adjacency among 0..v
    auto twin_key = [&](int u) {
        std::uint32_t k = static_cast<std::uint32_t>(g.adj[u] & ((1u << (v + 1)) - 1));
        return (static_cast<std::uint64_t>(rem[u]) << 32) | k;
    };

    std::vector<int> pick;
    auto choose = [&](auto&& self, std::size_t idx, int left) -> void {
        if (left == 0) {
            for (int u : pick) {
                g.add_edge(v, u);
                --rem[u];
            }
            rem[v] = 0;
            bool ok = degrees_feasible(rem, v + 1);
            if (ok) gen_rec(g, rem, v + 1, sink);
            rem[v] = need;
            for (int u : pick) {
                g.remove_edge(v, u);
                ++rem[u];
            }
            return;
        }
        if (idx >= cands.size() || cands.size() - idx < static_cast<std::size_t>(left)) return;
        int u = cands[idx];
        // twin pruning: skip u if an unchosen earlier twin exists
        bool skip = false;
        if (!pick.empty() || idx > 0) {
            for (std::size_t j = 0; j < idx; ++j) {
                int w = cands[j];
                if (twin_key(w) == twin_key(u) &&
                    std::find(pick.begin(), pick.end(), w) == pick.end()) {
                    skip = true;
                    break;
                }
            }
        }
        if (!skip) {
            pick.push_back(u);
            self(self, idx + 1, left - 1);
            pick.pop_back();
        }
        self(self, idx + 1, left);
    };
    choose(choose, 0, need);
}

}  // namespace graphdetail

// all connected graphs with the given degree sequence, one per iso class
inline std::vector<SimpleGraph> generate_connected_by_degseq(std::vector<int> seq) {
    int n = static_cast<int>(seq.size());
    if (n < 1 || n > 16) throw std::invalid_argument("bad degree sequence length");
    std::sort(seq.rbegin(), seq.rend());
    for (int d : seq)
        if (d < 0 || d >= n) throw std::invalid_argument("non-graphical degree");
    if (!graphdetail::degrees_feasible(seq, 0)) return {};

    SimpleGraph g = SimpleGraph::empty(n);
    std::vector<int> rem = seq;
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<SimpleGraph> out;
    graphdetail::gen_rec(g, rem, 0, [&](const SimpleGraph& h) {
        auto c = canonical_form(h);
        if (seen.insert(c).second) out.push_back(canonical_graph(h));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SimpleGraph> generate_connected_regular(int k, int n) {
    if (k >= n || (k * n) % 2 != 0) return {};
    return generate_connected_by_degseq(std::vector<int>(n, k));
}

// non-induced subgraph embedding (monomorphism) search
inline std::optional<std::vector<int>> find_subgraph_embedding(const SimpleGraph& g,
                                                               const SimpleGraph& h) {
    if (h.n > g.n || h.edge_count() > g.edge_count()) return std::nullopt;
    // order pattern vertices: most-connected-first among the already placed
    std::vector<int> order;
    {
        std::vector<char> used(h.n, 0);
        for (int step = 0; step < h.n; ++step) {
            int best = -1, bc = -1, bd = -1;
            for (int v = 0; v < h.n; ++v) {
                if (used[v]) continue;
                int c = 0;
                for (int u : order)
                    if (h.has_edge(v, u)) ++c;
                int d = h.degree(v);
                if (c > bc || (c == bc && d > bd)) {
                    best = v;
                    bc = c;
                    bd = d;
                }
            }
            order.push_back(best);
            used[best] = 1;
        }
    }
    std::vector<int> map(h.n, -1);
    std::uint32_t used_g = 0;
    auto rec = [&](auto&& self, std::size_t step) -> bool {
        if (step == order.size()) return true;
        int v = order[step];
        for (int cand = 0; cand < g.n; ++cand) {
            if ((used_g >> cand) & 1) continue;
            if (g.degree(cand) < h.degree(v)) continue;
            bool ok = true;
            for (std::size_t s = 0; s < step && ok; ++s)
                if (h.has_edge(v, order[s]) && !g.has_edge(cand, map[order[s]])) ok = false;
            if (!ok) continue;
            map[v] = cand;
            used_g |= 1u << cand;
            if (self(self, step + 1)) return true;
            used_g &= ~(1u << cand);
            map[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

inline bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h) {
    return find_subgraph_embedding(g, h).has_value();
}

// induced variant, available but unused by the pipeline
inline bool contains_induced_subgraph(const SimpleGraph& g, const SimpleGraph& h) {
    if (h.n > g.n) return false;
    std::vector<int> map(h.n, -1);
    std::uint32_t used_g = 0;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == h.n) return true;
        for (int cand = 0; cand < g.n; ++cand) {
            if ((used_g >> cand) & 1) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (h.has_edge(v, u) != g.has_edge(cand, map[u])) ok = false;
            if (!ok) continue;
            map[v] = cand;
            used_g |= 1u << cand;
            if (self(self, v + 1)) return true;
            used_g &= ~(1u << cand);
        }
        return false;
    };
    return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// multigraphs
// ---------------------------------------------------------------------------
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, int> mult;  // (u<v) -> multiplicity

    static Multigraph empty(int n) {
        Multigraph m;
        m.n = n;
        return m;
    }
    void add_edge(int u, int v, int k = 1) {
        if (u == v) throw std::invalid_argument("loop");
        if (u > v) std::swap(u, v);
        mult[{u, v}] += k;
    }
    int multiplicity(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = mult.find({u, v});
        return it == mult.end() ? 0 : it->second;
    }
    int degree(int v) const {
        int d = 0;
        for (const auto& [e, k] : mult)
            if (e.first == v || e.second == v) d += k;
        return d;
    }
    int edge_count() const {
        int s = 0;
        for (const auto& [e, k] : mult) s += k;
        return s;
    }
    // |M(v)|: number of parallel pairs at v (pairs of distinct edges with the
    // same endpoints, both touching v)
    int parallel_pairs_at(int v) const {
        int s = 0;
        for (const auto& [e, k] : mult)
            if (e.first == v || e.second == v) s += k * (k - 1) / 2;
        return s;
    }
};

inline SimpleGraph simplify_multigraph(const Multigraph& m) {
    SimpleGraph g = SimpleGraph::empty(m.n);
    for (const auto& [e, k] : m.mult)
        if (k > 0) g.add_edge(e.first, e.second);
    return g;
}

// 4-regular reduction: drop all edges of each marked K4 except two disjoint ones
inline SimpleGraph reduce_to_regular(const SimpleGraph& g,
                                     const std::vector<std::array<int, 4>>& cliques) {
    for (std::size_t a = 0; a < cliques.size(); ++a) {
        for (const auto& q : {cliques[a]}) {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (!g.has_edge(q[i], q[j]))
                        throw std::invalid_argument("marked set is not a clique");
        }
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            int common = 0;
            for (int u : cliques[a])
                for (int v : cliques[b])
                    if (u == v) ++common;
            if (common > 1) throw std::invalid_argument("cliques share more than one vertex");
        }
    }
    SimpleGraph out = g;
    for (const auto& q : cliques) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) out.remove_edge(q[i], q[j]);
        out.add_edge(q[0], q[1]);
        out.add_edge(q[2], q[3]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// graph6 (n <= 62)
// ---------------------------------------------------------------------------
inline std::string to_graph6(const SimpleGraph& g) {
    std::string s;
    s.push_back(static_cast<char>(g.n + 63));
    auto bits = g.code();
    int acc = 0, nb = 0;
    for (std::uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++nb == 6) {
            s.push_back(static_cast<char>(acc + 63));
            acc = 0;
            nb = 0;
        }
    }
    if (nb) s.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return s;
}

inline SimpleGraph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6");
    int n = s[0] - 63;
    if (n < 0 || n > 16) throw std::invalid_argument("graph6 size out of supported range");
    SimpleGraph g = SimpleGraph::empty(n);
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        if (v < 0 || v > 63) throw std::invalid_argument("bad graph6 byte");
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    std::size_t k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k) {
            if (k >= bits.size()) throw std::invalid_argument("graph6 truncated");
            if (bits[k]) g.add_edge(u, v);
        }
    return g;
}

// multigraph text format: first line n, then "u v multiplicity" lines
inline std::string multigraph_to_text(const Multigraph& m) {
    std::string s = std::to_string(m.n) + "\n";
    for (const auto& [e, k] : m.mult)
        if (k > 0)
            s += std::to_string(e.first) + " " + std::to_string(e.second) + " " +
                 std::to_string(k) + "\n";
    return s;
}

inline Multigraph multigraph_from_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("bad multigraph header");
    Multigraph m = Multigraph::empty(n);
    int u, v, k;
    while (in >> u >> v >> k) m.add_edge(u, v, k);
    return m;
}

}  // namespace supp4
