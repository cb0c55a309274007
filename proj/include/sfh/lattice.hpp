#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sfh/rational.hpp"

namespace sfh {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

namespace detail {

inline void check_magnitude(long long v) {
    // Entries in this library come from small incidence matrices; a blowup
    // past 2^40 during unimodular reduction indicates a bug, not real data.
    if (v > (1LL << 40) || v < -(1LL << 40))
        throw std::overflow_error("lattice: coefficient blowup");
}

} // namespace detail

// Basis of the integer kernel {v : A v = 0, v integral} of an integer matrix,
// computed by unimodular column reduction (Euclidean ops on columns, tracked
// in an identity block). The result is a genuine lattice basis: the kernel of
// an integer matrix is saturated, so no separate saturation pass is needed.
inline IntMat integer_kernel_basis(const IntMat& a_in, int cols) {
    int rows = (int)a_in.size();
    // work = A stacked over identity; we act by column operations.
    IntMat work(rows + cols, IntVec(cols, 0));
    for (int r = 0; r < rows; r++) {
        if ((int)a_in[r].size() != cols) throw std::invalid_argument("integer_kernel_basis: ragged matrix");
        for (int c = 0; c < cols; c++) work[r][c] = a_in[r][c];
    }
    for (int c = 0; c < cols; c++) work[rows + c][c] = 1;

    int lead = 0; // next column to place a pivot in
    for (int r = 0; r < rows && lead < cols; r++) {
        // Clear row r to a single entry in column `lead` by gcd reduction.
        while (true) {
            int nz = -1;
            for (int c = lead + 1; c < cols; c++)
                if (work[r][c] != 0) { nz = c; break; }
            if (nz < 0) break;
            if (work[r][lead] == 0) {
                for (auto& row : work) std::swap(row[lead], row[nz]);
                continue;
            }
            // Reduce the larger entry by the smaller one.
            long long q = work[r][nz] / work[r][lead];
            if (q != 0) {
                for (auto& row : work) {
                    row[nz] -= q * row[lead];
                    detail::check_magnitude(row[nz]);
                }
            }
            if (work[r][nz] != 0)
                for (auto& row : work) std::swap(row[lead], row[nz]);
        }
        if (work[r][lead] != 0) lead++;
    }
    // Columns past `lead` vanish on all of A: their identity-block parts are
    // the kernel basis.
    IntMat basis;
    for (int c = lead; c < cols; c++) {
        // Verify the column really lies in the kernel (the reduction above
        // only clears rows left to right).
        bool in_kernel = true;
        for (int r = 0; r < rows; r++)
            if (work[r][c] != 0) { in_kernel = false; break; }
        if (!in_kernel) continue;
        IntVec v(cols);
        for (int i = 0; i < cols; i++) v[i] = work[rows + i][c];
        basis.push_back(v);
    }
    return basis;
}

namespace detail {

// Fourier-Motzkin feasibility for {y : C y >= b} over the rationals.
// Variable count is tiny (lattice rank), so the elimination blowup stays
// manageable; constraints are deduplicated after normalization.
struct LinIneq {
    std::vector<Rat> a; // coefficients
    Rat b;              // a . y >= b
};

inline bool fm_feasible(std::vector<LinIneq> cons, int nvars) {
    for (int v = nvars - 1; v >= 0; v--) {
        std::vector<LinIneq> pos, neg, zero;
        for (auto& c : cons) {
            int s = c.a[v].sign();
            if (s > 0) pos.push_back(c);
            else if (s < 0) neg.push_back(c);
            else zero.push_back(c);
        }
        std::vector<LinIneq> next = zero;
        for (auto& p : pos) {
            for (auto& n : neg) {
                // Combine to cancel variable v.
                Rat cp = p.a[v], cn = Rat(0) - n.a[v];
                LinIneq m;
                m.a.resize(nvars);
                for (int i = 0; i < nvars; i++)
                    m.a[i] = p.a[i] * cn + n.a[i] * cp;
                m.b = p.b * cn + n.b * cp;
                next.push_back(std::move(m));
            }
        }
        // Normalize and dedup to keep the constraint count in check.
        for (auto& c : next) {
            long long g = 0;
            auto acc = [&g](const Rat& r) {
                g = std::gcd(g, std::abs(r.num()));
            };
            for (auto& x : c.a) acc(x);
            acc(c.b);
            long long l = 1;
            for (auto& x : c.a) l = std::lcm(l, x.den());
            l = std::lcm(l, c.b.den());
            Rat scale(l, g == 0 ? 1 : g);
            for (auto& x : c.a) x *= scale;
            c.b *= scale;
        }
        std::sort(next.begin(), next.end(), [](const LinIneq& x, const LinIneq& y) {
            for (size_t i = 0; i < x.a.size(); i++) {
                if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
            }
            return x.b < y.b;
        });
        next.erase(std::unique(next.begin(), next.end(), [](const LinIneq& x, const LinIneq& y) {
                       return x.a == y.a && x.b == y.b;
                   }),
                   next.end());
        if (next.size() > 200000)
            throw std::runtime_error("fm_feasible: constraint blowup");
        cons = std::move(next);
    }
    for (auto& c : cons)
        if (c.b.sign() > 0) return false; // 0 >= b with b > 0
    return true;
}

} // namespace detail

// Does some nonzero integer combination of the basis vectors have all
// coordinates >= 0? Decided exactly: for each coordinate i we test rational
// feasibility of { B^T y >= 0, (B^T y)_i >= 1 }; a nonnegative nonzero
// combination exists iff one of these systems is feasible (scaling makes
// ">= some positive value" equivalent to "> 0", and a rational solution
// scales to an integer one).
inline bool nonneg_nonzero_in_lattice(const IntMat& basis) {
    if (basis.empty()) return false;
    int k = (int)basis.size();
    int n = (int)basis[0].size();
    for (auto& v : basis)
        if ((int)v.size() != n) throw std::invalid_argument("nonneg_nonzero_in_lattice: ragged basis");

    for (int i = 0; i < n; i++) {
        bool col_nonzero = false;
        for (int j = 0; j < k; j++)
            if (basis[j][i] != 0) { col_nonzero = true; break; }
        if (!col_nonzero) continue;
        std::vector<detail::LinIneq> cons;
        for (int c = 0; c < n; c++) {
            detail::LinIneq ineq;
            ineq.a.resize(k);
            for (int j = 0; j < k; j++) ineq.a[j] = Rat(basis[j][c]);
            ineq.b = (c == i) ? Rat(1) : Rat(0);
            if (c == i) cons.push_back(ineq);
            else cons.push_back(std::move(ineq));
        }
        if (detail::fm_feasible(std::move(cons), k)) return true;
    }
    return false;
}

// Exhaustive search over bounded integer combinations; test oracle for
// nonneg_nonzero_in_lattice on small bases.
inline bool nonneg_nonzero_box_search(const IntMat& basis, int bound) {
    if (basis.empty()) return false;
    int k = (int)basis.size();
    int n = (int)basis[0].size();
    std::vector<int> coef(k, -bound);
    while (true) {
        bool all_zero = true;
        for (int j = 0; j < k; j++) if (coef[j] != 0) all_zero = false;
        if (!all_zero) {
            bool ok = true, nonzero = false;
            for (int c = 0; c < n && ok; c++) {
                long long s = 0;
                for (int j = 0; j < k; j++) s += (long long)coef[j] * basis[j][c];
                if (s < 0) ok = false;
                if (s > 0) nonzero = true;
            }
            if (ok && nonzero) return true;
        }
        int j = 0;
        while (j < k && coef[j] == bound) { coef[j] = -bound; j++; }
        if (j == k) return false;
        coef[j]++;
    }
}

} // namespace sfh
