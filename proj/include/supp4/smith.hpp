#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace supp4 {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    IntMatrix out(r, std::vector<BigInt>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            BigInt s = 0;
            for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            out[i][j] = s;
        }
    return out;
}

inline BigInt mat_det(IntMatrix m) {  // fraction-free Gauss-Bareiss
    std::size_t n = m.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? BigInt(1) : BigInt(sign) * m[n - 1][n - 1];
}

struct SmithResult {
    IntMatrix d;                    // diagonal form, d1 | d2 | ...
    IntMatrix u, v;                 // unimodular: u * a * v = d
    std::vector<BigInt> diagonal;   // nonzero entries, divisibility chain
};

// Smith normal form with tracked row/column transforms.
inline SmithResult smith_normal_form(const IntMatrix& a0) {
    std::size_t rows = a0.size(), cols = rows ? a0[0].size() : 0;
    SmithResult res;
    res.d = a0;
    res.u = identity_matrix(rows);
    res.v = identity_matrix(cols);
    IntMatrix& a = res.d;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : res.v) std::swap(r[i], r[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (std::size_t c = 0; c < rows; ++c) res.u[dst][c] += f * res.u[src][c];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) res.v[r][dst] += f * res.v[r][src];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : res.u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    BigInt m = abs(a[i][j]);
                    if (!found || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    BigInt q = a[i][t] / a[t][t];
                    add_row(i, t, -q);
                    if (a[i][t] != 0) {  // remainder smaller than pivot
                        swap_rows(t, i);
                        dirty = true;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    BigInt q = a[t][j] / a[t][t];
                    add_col(j, t, -q);
                    if (a[t][j] != 0) {
                        swap_cols(t, j);
                        dirty = true;
                    }
                }
        }
        if (a[t][t] < 0) negate_row(t);

        // enforce divisibility d_t | a[i][j] for the trailing block
        for (std::size_t i = t + 1; i < rows && a[t][t] != 0; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row(t, i, 1);
                    // restart elimination at this pivot
                    i = rows;
                    j = cols;
                    // redo the clearing loop
                    bool d2 = true;
                    while (d2) {
                        d2 = false;
                        for (std::size_t r = t + 1; r < rows; ++r)
                            if (a[r][t] != 0) {
                                BigInt q = a[r][t] / a[t][t];
                                add_row(r, t, -q);
                                if (a[r][t] != 0) {
                                    swap_rows(t, r);
                                    d2 = true;
                                }
                            }
                        for (std::size_t c = t + 1; c < cols; ++c)
                            if (a[t][c] != 0) {
                                BigInt q = a[t][c] / a[t][t];
                                add_col(c, t, -q);
                                if (a[t][c] != 0) {
                                    swap_cols(t, c);
                                    d2 = true;
                                }
                            }
                    }
                    if (a[t][t] < 0) negate_row(t);
                    i = t;  // recheck whole block
                    break;
                }
        ++t;
    }
    for (std::size_t i = 0; i < rows && i < cols; ++i)
        if (a[i][i] != 0) res.diagonal.push_back(a[i][i]);
    return res;
}

// check u*a0*v == d and |det u| == |det v| == 1
inline bool verify_smith(const IntMatrix& a0, const SmithResult& r) {
    if (mat_mul(mat_mul(r.u, a0), r.v) != r.d) return false;
    BigInt du = mat_det(r.u), dv = mat_det(r.v);
    if (du != 1 && du != -1) return false;
    if (dv != 1 && dv != -1) return false;
    for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i)
        if (r.diagonal[i + 1] % r.diagonal[i] != 0) return false;
    return true;
}

}  // namespace supp4
