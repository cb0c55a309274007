#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/errors.hpp"
#include "sfh/gf2.hpp"

namespace sfh {

// ---------------------------------------------------------------------------
// generators

// All bijective pairings of alpha curves with beta curves realized by one
// intersection point per pair, lexicographically ordered by the point tuple.
// Empty families yield the single empty generator.
inline std::vector<Generator> enumerate_generators(const Diagram& d) {
    std::vector<Generator> out;
    Generator cur(d.n_alpha, -1);
    std::vector<bool> beta_used(d.curves.size(), false);
    std::function<void(int)> rec = [&](int ai) {
        if (ai == d.n_alpha) {
            out.push_back(cur);
            return;
        }
        // Iterate candidate points in increasing index order for determinism.
        std::vector<int> cands = d.alpha(ai).points;
        std::sort(cands.begin(), cands.end());
        for (int pi : cands) {
            int bc = d.points[pi].beta_curve;
            if (beta_used[bc]) continue;
            beta_used[bc] = true;
            cur[ai] = pi;
            rec(ai + 1);
            beta_used[bc] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// Contact generator as a Generator (entry per alpha curve), if present.
inline std::optional<Generator> contact_generator(const Diagram& d) {
    if (!d.contact) return std::nullopt;
    Generator g(d.n_alpha, -1);
    for (int pi : *d.contact) g[d.points[pi].alpha_curve] = pi;
    return g;
}

// ---------------------------------------------------------------------------
// connecting domains

struct SearchOptions {
    bool oracle = false;  // exhaustive {0,1} sweep instead of the pruned search
    bool swapped = false; // exchange the roles of the two curve families
};

namespace detail {

// Integer coefficients of the alpha-side defect functional at each point,
// over region multiplicities.
inline IntMat defect_coefficients(const Diagram& d) {
    IntMat coeff(d.points.size(), IntVec(d.regions.size(), 0));
    auto add_seg = [&](int row, int seg, int sign) {
        const DSegment& s = d.segments[seg];
        coeff[row][s.left] += sign;
        coeff[row][s.right] -= sign;
    };
    for (size_t pi = 0; pi < d.points.size(); pi++) {
        const DPoint& p = d.points[pi];
        int na = (int)d.curves[p.alpha_curve].points.size();
        add_seg((int)pi, d.seg_index(p.alpha_curve, (p.alpha_pos + na - 1) % na), +1);
        add_seg((int)pi, d.seg_index(p.alpha_curve, p.alpha_pos), -1);
    }
    return coeff;
}

// Counted domains in a nice diagram are embedded bigons or squares; verify
// the shape of every search result, failing loudly on an engine bug.
inline void assert_domain_shape(const Diagram& d, const Domain& dom, const Generator& x,
                                const Generator& y) {
    int corners = 0;
    for (size_t pi = 0; pi < d.points.size(); pi++) {
        const auto& s = d.points[pi].sectors;
        int covered = dom[s[0]] + dom[s[1]] + dom[s[2]] + dom[s[3]];
        bool in_x = std::find(x.begin(), x.end(), (int)pi) != x.end();
        bool in_y = std::find(y.begin(), y.end(), (int)pi) != y.end();
        if (in_x && in_y) {
            if (covered != 0)
                throw ComputeError(ErrorCode::BAD_DOMAIN,
                                   "search produced a non-empty domain at a fixed coordinate");
        } else if (in_x || in_y) {
            if (covered != 1)
                throw ComputeError(ErrorCode::BAD_DOMAIN,
                                   "counted domain lacks a simple corner at a moving coordinate");
            corners++;
        }
    }
    for (int m : dom.mult)
        if (m != 0 && m != 1)
            throw ComputeError(ErrorCode::BAD_DOMAIN, "counted domain has multiplicity outside {0,1}");
    Rat e = euler_measure(d, dom);
    if (!((corners == 2 && e == Rat(1, 2)) || (corners == 4 && e == Rat(0))))
        throw ComputeError(ErrorCode::BAD_DOMAIN, "counted domain is not a bigon or a square");
    // The support glues to a disk: chi = cells - interior segments + interior
    // points over the mult-1 subcomplex.
    long long chi = 0;
    for (size_t r = 0; r < d.regions.size(); r++)
        if (dom[(int)r] == 1) chi += d.regions[r].chi;
    for (const auto& s : d.segments)
        if (dom[s.left] == 1 && dom[s.right] == 1) chi -= 1;
    for (const auto& p : d.points) {
        const auto& s = p.sectors;
        if (dom[s[0]] == 1 && dom[s[1]] == 1 && dom[s[2]] == 1 && dom[s[3]] == 1) chi += 1;
    }
    if (chi != 1)
        throw ComputeError(ErrorCode::BAD_DOMAIN, "counted domain does not support a disk");
}

} // namespace detail

// All nonnegative domains, vanishing on boundary regions, that connect x to y
// with Maslov index one. Multiplicities of counted domains in a nice diagram
// lie in {0,1}, so the search runs over subsets of the interior regions with
// defect propagation; the oracle flag switches to a plain exhaustive sweep.
inline std::vector<Domain> connecting_domains(const Diagram& d, const Generator& x,
                                              const Generator& y,
                                              const SearchOptions& opts = {}) {
    auto nice = is_nice(d);
    if (!nice.nice)
        throw ComputeError(ErrorCode::NOT_NICE, "diagram has interior regions that are not bigons or squares",
                           nice.offenders);
    if (x == y) return {};

    int nr = (int)d.regions.size();
    std::vector<int> req = required_alpha_defect(d, x, y);
    if (opts.swapped)
        for (auto& v : req) v = -v;

    std::vector<int> interior;
    for (int r = 0; r < nr; r++)
        if (!d.regions[r].meets_boundary) interior.push_back(r);

    IntMat coeff = detail::defect_coefficients(d);

    // Forced zeros: a point shared by x and y keeps all four sectors empty.
    std::vector<int> forced_zero(nr, 0);
    for (int pi : x)
        if (std::find(y.begin(), y.end(), pi) != y.end())
            for (int s : d.points[pi].sectors) forced_zero[s] = 1;

    std::vector<Domain> found;
    auto consider = [&](const Domain& dom) {
        BoundaryChain bc = boundary_chain(d, dom);
        for (size_t pi = 0; pi < d.points.size(); pi++)
            if (bc.alpha_defect[pi] != req[pi]) return;
        if (euler_measure(d, dom) + point_measure(d, dom, x) + point_measure(d, dom, y) != Rat(1))
            return;
        detail::assert_domain_shape(d, dom, x, y);
        found.push_back(dom);
    };

    if (opts.oracle) {
        if (interior.size() > 20)
            throw ComputeError(ErrorCode::ORACLE_UNAVAILABLE,
                               "exhaustive sweep is limited to 20 interior regions");
        for (unsigned long long mask = 1; mask < (1ULL << interior.size()); mask++) {
            Domain dom(nr);
            bool ok = true;
            for (size_t i = 0; i < interior.size(); i++)
                if (mask & (1ULL << i)) {
                    if (forced_zero[interior[i]]) { ok = false; break; }
                    dom[interior[i]] = 1;
                }
            if (ok) consider(dom);
        }
        std::sort(found.begin(), found.end());
        return found;
    }

    // Pruned search: assign interior regions in an order that visits the
    // neighborhoods of the moving coordinates first, tracking at each point
    // the range of defects still reachable.
    std::vector<int> order;
    {
        std::vector<bool> queued(nr, false);
        for (size_t pi = 0; pi < d.points.size(); pi++)
            if (req[pi] != 0)
                for (int s : d.points[pi].sectors)
                    if (!d.regions[s].meets_boundary && !queued[s]) {
                        queued[s] = true;
                        order.push_back(s);
                    }
        for (int r : interior)
            if (!queued[r]) order.push_back(r);
    }
    int n_assign = (int)order.size();
    std::vector<int> value(nr, 0);
    // Per point: current defect of assigned part, and +/- slack from
    // unassigned regions.
    int np = (int)d.points.size();
    std::vector<int> cur(np, 0), slack_pos(np, 0), slack_neg(np, 0);
    for (int pi = 0; pi < np; pi++)
        for (int r : order) {
            if (coeff[pi][r] > 0) slack_pos[pi] += coeff[pi][r];
            if (coeff[pi][r] < 0) slack_neg[pi] += coeff[pi][r];
        }
    std::function<void(int)> rec = [&](int k) {
        if (k == n_assign) {
            Domain dom(nr);
            bool nonzero = false;
            for (int r : order)
                if (value[r]) { dom[r] = 1; nonzero = true; }
            if (nonzero) consider(dom);
            return;
        }
        int r = order[k];
        for (int pi = 0; pi < np; pi++) {
            if (coeff[pi][r] > 0) slack_pos[pi] -= coeff[pi][r];
            if (coeff[pi][r] < 0) slack_neg[pi] -= coeff[pi][r];
        }
        int choices = forced_zero[r] ? 1 : 2;
        for (int v = 0; v < choices; v++) {
            value[r] = v;
            if (v)
                for (int pi = 0; pi < np; pi++) cur[pi] += coeff[pi][r];
            bool feasible = true;
            for (int pi = 0; pi < np; pi++)
                if (cur[pi] + slack_neg[pi] > req[pi] || cur[pi] + slack_pos[pi] < req[pi]) {
                    feasible = false;
                    break;
                }
            if (feasible) rec(k + 1);
            if (v)
                for (int pi = 0; pi < np; pi++) cur[pi] -= coeff[pi][r];
        }
        value[r] = 0;
        for (int pi = 0; pi < np; pi++) {
            if (coeff[pi][r] > 0) slack_pos[pi] += coeff[pi][r];
            if (coeff[pi][r] < 0) slack_neg[pi] += coeff[pi][r];
        }
    };
    rec(0);
    std::sort(found.begin(), found.end());
    return found;
}

// ---------------------------------------------------------------------------
// differential and homology

struct DifferentialMatrix {
    std::vector<Generator> gens; // canonically ordered
    Gf2Matrix matrix;            // entry (i,j) = #domains from gens[j] to gens[i] mod 2
};

inline int hamming(const Generator& a, const Generator& b) {
    int h = 0;
    for (size_t i = 0; i < a.size(); i++)
        if (a[i] != b[i]) h++;
    return h;
}

inline DifferentialMatrix differential(const Diagram& d, const SearchOptions& opts = {}) {
    auto nice = is_nice(d);
    if (!nice.nice)
        throw ComputeError(ErrorCode::NOT_NICE, "differential requires a nice diagram", nice.offenders);
    if (!check_admissibility(d))
        throw ComputeError(ErrorCode::NOT_ADMISSIBLE, "diagram admits a nonnegative periodic domain");

    DifferentialMatrix res;
    res.gens = enumerate_generators(d);
    int n = (int)res.gens.size();
    res.matrix = Gf2Matrix(n, n);
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) {
            if (i == j) continue;
            // A counted bigon or square moves at most two coordinates.
            int h = hamming(res.gens[j], res.gens[i]);
            if (h > 2) continue;
            auto doms = connecting_domains(d, res.gens[j], res.gens[i], opts);
            if (doms.size() % 2) res.matrix.set(i, j, true);
        }
    }
    // d(d(x)) = 0 over GF(2); a failure is an engine bug, never user error.
    for (int j = 0; j < n; j++) {
        BitVec col(n);
        for (int i = 0; i < n; i++)
            if (res.matrix.get(i, j)) col.set(i, true);
        BitVec sq = res.matrix.mul(col);
        if (sq.any())
            throw ComputeError(ErrorCode::DSQUARED_NONZERO, "differential does not square to zero");
    }
    return res;
}

inline int sfh_dimension(const DifferentialMatrix& dm) {
    int n = dm.matrix.rows();
    int rank = gf2_rank(dm.matrix);
    return n - 2 * rank;
}

struct EhResult {
    bool is_cycle = false;
    bool trivial = false;
};

inline EhResult eh_class(const Diagram& d, const DifferentialMatrix& dm) {
    auto cg = contact_generator(d);
    if (!cg)
        throw ComputeError(ErrorCode::NO_CONTACT_GENERATOR, "diagram has no contact generator");
    auto it = std::lower_bound(dm.gens.begin(), dm.gens.end(), *cg);
    if (it == dm.gens.end() || *it != *cg)
        throw ComputeError(ErrorCode::NO_CONTACT_GENERATOR, "contact generator is not a generator");
    int idx = (int)(it - dm.gens.begin());
    int n = dm.matrix.rows();

    EhResult res;
    res.is_cycle = true;
    for (int i = 0; i < n; i++)
        if (dm.matrix.get(i, idx)) { res.is_cycle = false; break; }
    BitVec target(n);
    target.set(idx, true);
    auto sol = gf2_solve(dm.matrix, target);
    res.trivial = sol.solution.has_value();
    return res;
}

// ---------------------------------------------------------------------------
// report

struct Diagnostics {
    bool balanced = false;
    bool nice = false;
    bool admissible = false;
    int interior_regions = 0;
    double elapsed_ms = 0.0; // never serialized: output must be reproducible
};

struct Report {
    std::string name;
    int generator_count = 0;
    int sfh_dimension = 0;
    std::optional<bool> eh_is_cycle;
    std::optional<bool> eh_trivial;
    Diagnostics diagnostics;
};

// Runs the full pipeline on a validated diagram, failing fast on the first
// hard error (NOT_BALANCED, NOT_NICE, NOT_ADMISSIBLE).
inline Report compute_report(const Diagram& d, const SearchOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.name = d.name;

    auto bal = check_balanced(d);
    if (!bal.balanced)
        throw ComputeError(ErrorCode::NOT_BALANCED, "diagram is not balanced", bal.reasons);
    rep.diagnostics.balanced = true;

    auto nice = is_nice(d);
    if (!nice.nice)
        throw ComputeError(ErrorCode::NOT_NICE, "diagram is not nice", nice.offenders);
    rep.diagnostics.nice = true;

    if (!check_admissibility(d))
        throw ComputeError(ErrorCode::NOT_ADMISSIBLE, "diagram admits a nonnegative periodic domain");
    rep.diagnostics.admissible = true;

    for (const auto& r : d.regions)
        if (!r.meets_boundary) rep.diagnostics.interior_regions++;

    DifferentialMatrix dm = differential(d, opts);
    rep.generator_count = (int)dm.gens.size();
    rep.sfh_dimension = sfh_dimension(dm);
    if (d.contact && !dm.gens.empty()) {
        EhResult eh = eh_class(d, dm);
        rep.eh_is_cycle = eh.is_cycle;
        rep.eh_trivial = eh.trivial;
    }
    rep.diagnostics.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace sfh
