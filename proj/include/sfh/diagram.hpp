#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sfh/errors.hpp"
#include "sfh/lattice.hpp"
#include "sfh/ratmat.hpp"
#include "sfh/rational.hpp"

namespace sfh {

// A combinatorial sutured Heegaard diagram, stored as incidence data: curves
// are cyclic point sequences, consecutive points delimit segments carrying
// side regions, and every intersection point carries the cyclic list of the
// four regions around it.
//
// Orientation conventions, fixed once for the whole engine:
//  * sectors[0..3] run counterclockwise (with respect to the orientation of
//    the surface) starting with the sector immediately counterclockwise of
//    the outgoing alpha direction;
//  * "left" of a directed segment means counterclockwise of its direction;
//  * a domain connects x to y when its alpha-side boundary chain has
//    coefficient +1 at each point of y, -1 at each point of x, 0 elsewhere.

struct Violation {
    std::string code;
    std::string entity;
    std::string detail;
};

struct Curve {
    std::string id;
    bool is_alpha = true;
    std::vector<int> points; // cyclic, indices into Diagram::points
};

struct DPoint {
    std::string id;
    int alpha_curve = -1, alpha_pos = -1;
    int beta_curve = -1, beta_pos = -1;
    std::array<int, 4> sectors{-1, -1, -1, -1}; // region indices
};

struct DRegion {
    std::string id;
    int chi = 0;
    bool meets_boundary = false;
    int corner_count = 0; // derived: number of (point, sector slot) incidences
};

struct DSegment {
    int curve = -1;
    int from_pos = -1; // position of the from-point on the curve
    int from_pt = -1, to_pt = -1;
    int left = -1, right = -1; // region indices
};

// Integer multiplicity vector indexed by regions.
struct Domain {
    std::vector<int> mult;

    explicit Domain(int n_regions = 0) : mult(n_regions, 0) {}
    int operator[](int r) const { return mult[r]; }
    int& operator[](int r) { return mult[r]; }
    int size() const { return (int)mult.size(); }

    Domain& operator+=(const Domain& o) {
        for (size_t i = 0; i < mult.size(); i++) mult[i] += o.mult[i];
        return *this;
    }
    friend Domain operator+(Domain a, const Domain& b) { return a += b; }
    Domain scaled(int k) const {
        Domain d(*this);
        for (auto& m : d.mult) m *= k;
        return d;
    }
    bool is_zero() const {
        for (int m : mult) if (m != 0) return false;
        return true;
    }
    friend bool operator==(const Domain& a, const Domain& b) { return a.mult == b.mult; }
    friend bool operator<(const Domain& a, const Domain& b) { return a.mult < b.mult; }
};

// One chosen point per alpha curve (entry i = point on alpha curve i).
using Generator = std::vector<int>;

class Diagram {
public:
    std::string name;
    int euler_char = 0;
    int boundary_components = 1;
    std::vector<Curve> curves; // all alpha curves first, then all beta curves
    int n_alpha = 0;
    std::vector<DPoint> points;
    std::vector<DRegion> regions;
    std::vector<DSegment> segments; // curve-major, one per (curve, position)
    std::optional<std::vector<int>> contact; // point index per alpha curve
    std::vector<Violation> load_violations; // reference errors found on load

    int n_beta() const { return (int)curves.size() - n_alpha; }
    const Curve& alpha(int i) const { return curves[i]; }
    const Curve& beta(int i) const { return curves[n_alpha + i]; }

    int seg_index(int curve, int pos) const { return seg_start_[curve] + pos; }
    const DSegment& seg(int curve, int pos) const { return segments[seg_index(curve, pos)]; }

    // Rebuilds segment indexing and derived counts. Call after filling fields.
    void finalize() {
        seg_start_.assign(curves.size() + 1, 0);
        for (size_t c = 0; c < curves.size(); c++)
            seg_start_[c + 1] = seg_start_[c] + (int)curves[c].points.size();
        // If segments were not supplied in curve-major order, reorder them.
        std::vector<DSegment> ordered(seg_start_.back());
        std::vector<bool> seen(ordered.size(), false);
        for (auto& s : segments) {
            if (s.curve < 0 || s.from_pos < 0) continue;
            int idx = seg_index(s.curve, s.from_pos);
            ordered[idx] = s;
            seen[idx] = true;
        }
        for (size_t c = 0; c < curves.size(); c++) {
            int n = (int)curves[c].points.size();
            for (int k = 0; k < n; k++) {
                int idx = seg_index((int)c, k);
                if (!seen[idx]) {
                    ordered[idx].curve = (int)c;
                    ordered[idx].from_pos = k;
                    ordered[idx].from_pt = curves[c].points[k];
                    ordered[idx].to_pt = curves[c].points[(k + 1) % n];
                }
            }
        }
        segments = std::move(ordered);
        for (auto& r : regions) r.corner_count = 0;
        for (auto& p : points)
            for (int s : p.sectors)
                if (s >= 0 && s < (int)regions.size()) regions[s].corner_count++;
    }

    int region_index(const std::string& id) const {
        for (size_t i = 0; i < regions.size(); i++)
            if (regions[i].id == id) return (int)i;
        return -1;
    }
    int point_index(const std::string& id) const {
        for (size_t i = 0; i < points.size(); i++)
            if (points[i].id == id) return (int)i;
        return -1;
    }

private:
    std::vector<int> seg_start_;
};

// ---------------------------------------------------------------------------
// validate

namespace detail {

inline void check_sector_side_coherence(const Diagram& d, int pi, std::vector<Violation>& out) {
    const DPoint& p = d.points[pi];
    for (int s : p.sectors)
        if (s < 0) return; // dangling sector already reported by the loader
    auto seg_ok = [&](const DSegment& s) { return s.left >= 0 && s.right >= 0; };

    const Curve& ca = d.curves[p.alpha_curve];
    int na = (int)ca.points.size();
    const DSegment& a_out = d.seg(p.alpha_curve, p.alpha_pos);
    const DSegment& a_in = d.seg(p.alpha_curve, (p.alpha_pos + na - 1) % na);
    const Curve& cb = d.curves[p.beta_curve];
    int nb = (int)cb.points.size();
    const DSegment& b_out = d.seg(p.beta_curve, p.beta_pos);
    const DSegment& b_in = d.seg(p.beta_curve, (p.beta_pos + nb - 1) % nb);
    if (!seg_ok(a_out) || !seg_ok(a_in) || !seg_ok(b_out) || !seg_ok(b_in)) return;

    const auto& s = p.sectors;
    bool alpha_ok = a_out.left == s[0] && a_out.right == s[3] &&
                    a_in.left == s[1] && a_in.right == s[2];
    // The crossing sign is not stored; the beta half-segments occupy either
    // the (s0|s1, s2|s3) ray or the other one. Exactly the two cases below
    // are geometrically possible.
    bool case_pos = b_out.left == s[1] && b_out.right == s[0] &&
                    b_in.left == s[2] && b_in.right == s[3];
    bool case_neg = b_in.left == s[0] && b_in.right == s[1] &&
                    b_out.left == s[3] && b_out.right == s[2];
    if (!alpha_ok)
        out.push_back({"sector-side-mismatch", p.id, "alpha side regions disagree with sectors"});
    else if (!case_pos && !case_neg)
        out.push_back({"sector-side-mismatch", p.id, "beta side regions disagree with sectors"});
}

} // namespace detail

inline std::vector<Violation> validate(const Diagram& d) {
    std::vector<Violation> out = d.load_violations;
    int n_pts = (int)d.points.size();
    int n_reg = (int)d.regions.size();

    if (n_reg == 0)
        out.push_back({"no-regions", d.name, "a diagram must have at least one region"});
    if (d.boundary_components < 1)
        out.push_back({"bad-boundary-count", d.name, "boundary_components must be positive"});

    // Curves: nonempty, valid references, each point used once per family.
    std::vector<int> alpha_use(n_pts, 0), beta_use(n_pts, 0);
    for (size_t c = 0; c < d.curves.size(); c++) {
        const Curve& cv = d.curves[c];
        if (cv.points.empty()) {
            out.push_back({"empty-curve", cv.id, "curve has no points"});
            continue;
        }
        for (size_t k = 0; k < cv.points.size(); k++) {
            int pi = cv.points[k];
            if (pi < 0 || pi >= n_pts) {
                out.push_back({"dangling-point", cv.id, "curve names a nonexistent point"});
                continue;
            }
            const DPoint& p = d.points[pi];
            if (cv.is_alpha) {
                alpha_use[pi]++;
                if (p.alpha_curve != (int)c || p.alpha_pos != (int)k)
                    out.push_back({"back-reference", p.id, "alpha curve/position does not match curve list"});
            } else {
                beta_use[pi]++;
                if (p.beta_curve != (int)c || p.beta_pos != (int)k)
                    out.push_back({"back-reference", p.id, "beta curve/position does not match curve list"});
            }
        }
    }
    for (int pi = 0; pi < n_pts; pi++) {
        if (alpha_use[pi] != 1)
            out.push_back({"point-family-count", d.points[pi].id,
                           "point must lie on exactly one alpha curve"});
        if (beta_use[pi] != 1)
            out.push_back({"point-family-count", d.points[pi].id,
                           "point must lie on exactly one beta curve"});
    }

    // Sectors reference existing regions.
    for (const auto& p : d.points)
        for (int s : p.sectors)
            if (s < 0 || s >= n_reg)
                out.push_back({"dangling-region", p.id, "sector names a nonexistent region"});

    // Segment side regions.
    for (const auto& s : d.segments) {
        if (s.left < 0 || s.left >= n_reg || s.right < 0 || s.right >= n_reg) {
            std::string id = s.curve >= 0 ? d.curves[s.curve].id : std::string("?");
            out.push_back({"dangling-region", id, "segment names a nonexistent side region"});
        }
    }

    // Sector/side coherence at every point.
    bool refs_ok = true;
    for (const auto& v : out)
        if (v.code == "dangling-point" || v.code == "back-reference" || v.code == "point-family-count")
            refs_ok = false;
    if (refs_ok)
        for (int pi = 0; pi < n_pts; pi++)
            detail::check_sector_side_coherence(d, pi, out);

    // Global Euler identity: sum chi(R) - #segments + #points = euler_char.
    long long chi_sum = 0;
    for (const auto& r : d.regions) chi_sum += r.chi;
    if (chi_sum - (long long)d.segments.size() + n_pts != d.euler_char)
        out.push_back({"euler-mismatch", d.name,
                       "sum chi(R) - E + V = " +
                           std::to_string(chi_sum - (long long)d.segments.size() + n_pts) +
                           " but euler_char = " + std::to_string(d.euler_char)});

    // Boundary bookkeeping: each boundary circle lies in the closure of
    // exactly one region, so the flagged regions number between 1 and the
    // number of boundary circles.
    int flagged = 0;
    for (const auto& r : d.regions)
        if (r.meets_boundary) flagged++;
    if (n_reg > 0 && (flagged < 1 || flagged > d.boundary_components))
        out.push_back({"boundary-flags", d.name,
                       std::to_string(flagged) + " regions flagged for " +
                           std::to_string(d.boundary_components) + " boundary circles"});

    // Contact generator: one point per alpha curve and per beta curve.
    if (d.contact) {
        std::set<int> on_alpha, on_beta;
        bool refs = true;
        for (int pi : *d.contact) {
            if (pi < 0 || pi >= n_pts) {
                out.push_back({"dangling-point", d.name, "contact generator names a nonexistent point"});
                refs = false;
                continue;
            }
            on_alpha.insert(d.points[pi].alpha_curve);
            on_beta.insert(d.points[pi].beta_curve);
        }
        if (refs && ((int)d.contact->size() != d.n_alpha ||
                     (int)on_alpha.size() != d.n_alpha ||
                     (int)on_beta.size() != (int)d.curves.size() - d.n_alpha))
            out.push_back({"contact-generator", d.name,
                           "contact generator must name one point on each alpha and each beta curve"});
    }
    return out;
}

// ---------------------------------------------------------------------------
// balancedness

struct BalanceResult {
    bool balanced = false;
    std::vector<std::string> reasons;
};

inline BalanceResult check_balanced(const Diagram& d) {
    BalanceResult res;
    if (d.n_alpha != d.n_beta()) {
        res.reasons.push_back("curve families have different sizes");
        return res;
    }

    // Every component of the surface must meet the boundary (no closed
    // components). Components are read off the region adjacency graph.
    int n_reg = (int)d.regions.size();
    std::vector<int> comp(n_reg);
    for (int i = 0; i < n_reg; i++) comp[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) { comp[x] = comp[comp[x]]; x = comp[x]; }
        return x;
    };
    for (const auto& s : d.segments)
        if (s.left >= 0 && s.right >= 0) comp[find(s.left)] = find(s.right);
    std::map<int, bool> comp_has_boundary;
    for (int i = 0; i < n_reg; i++) {
        int c = find(i);
        comp_has_boundary[c] = comp_has_boundary[c] || d.regions[i].meets_boundary;
    }
    for (auto& [c, has] : comp_has_boundary)
        if (!has) {
            res.reasons.push_back("component containing region " + d.regions[c].id +
                                  " does not meet the boundary");
            return res;
        }

    // Rational independence of each family in the first homology of the
    // surface, presented by the diagram's own cell structure: a combination
    // of curves is null-homologous iff it is a combination of interior region
    // boundaries (boundary regions cannot appear, their coefficient would
    // show on a suture circle).
    int n_seg = (int)d.segments.size();
    auto region_boundary_rows = [&]() {
        RatMatrix m(0, n_seg);
        for (int r = 0; r < n_reg; r++) {
            if (d.regions[r].meets_boundary) continue;
            std::vector<Rat> row(n_seg);
            for (int s = 0; s < n_seg; s++) {
                int v = 0;
                if (d.segments[s].left == r) v += 1;
                if (d.segments[s].right == r) v -= 1;
                row[s] = Rat(v);
            }
            m.append_row(row);
        }
        return m;
    };
    auto family_independent = [&](bool alpha_family) {
        RatMatrix base = region_boundary_rows();
        int base_rank = rational_rank(base);
        int count = 0;
        for (size_t c = 0; c < d.curves.size(); c++) {
            if (d.curves[c].is_alpha != alpha_family) continue;
            count++;
            std::vector<Rat> row(n_seg);
            int n = (int)d.curves[c].points.size();
            for (int k = 0; k < n; k++) row[d.seg_index((int)c, k)] = Rat(1);
            base.append_row(row);
        }
        return rational_rank(base) == base_rank + count;
    };
    if (!family_independent(true)) {
        res.reasons.push_back("alpha curves are dependent in rational first homology");
        return res;
    }
    if (!family_independent(false)) {
        res.reasons.push_back("beta curves are dependent in rational first homology");
        return res;
    }
    res.balanced = true;
    return res;
}

// ---------------------------------------------------------------------------
// niceness

struct NiceResult {
    bool nice = false;
    std::vector<std::string> offenders; // region ids
};

inline NiceResult is_nice(const Diagram& d) {
    NiceResult res;
    for (const auto& r : d.regions) {
        if (r.meets_boundary) continue;
        if (!(r.chi == 1 && (r.corner_count == 2 || r.corner_count == 4)))
            res.offenders.push_back(r.id);
    }
    res.nice = res.offenders.empty();
    return res;
}

// ---------------------------------------------------------------------------
// index quantities

inline Rat euler_measure(const Diagram& d, const Domain& dom) {
    Rat e(0);
    for (size_t r = 0; r < d.regions.size(); r++) {
        if (dom[(int)r] == 0) continue;
        e += Rat(dom[(int)r]) * (Rat(d.regions[r].chi) - Rat(d.regions[r].corner_count, 4));
    }
    return e;
}

inline Rat point_measure(const Diagram& d, const Domain& dom, const Generator& g) {
    Rat n(0);
    for (int pi : g) {
        const auto& s = d.points[pi].sectors;
        n += Rat(dom[s[0]] + dom[s[1]] + dom[s[2]] + dom[s[3]], 4);
    }
    return n;
}

// Boundary data of a domain: the multiplicity of every curve segment in the
// boundary 1-chain, and the resulting chain boundary coefficient at each
// point, split by family.
struct BoundaryChain {
    std::vector<int> seg_mult;     // per segment: d(left) - d(right)
    std::vector<int> alpha_defect; // per point
    std::vector<int> beta_defect;  // per point (always the negation)
};

inline BoundaryChain boundary_chain(const Diagram& d, const Domain& dom) {
    BoundaryChain bc;
    bc.seg_mult.resize(d.segments.size());
    for (size_t s = 0; s < d.segments.size(); s++)
        bc.seg_mult[s] = dom[d.segments[s].left] - dom[d.segments[s].right];
    bc.alpha_defect.assign(d.points.size(), 0);
    bc.beta_defect.assign(d.points.size(), 0);
    for (size_t pi = 0; pi < d.points.size(); pi++) {
        const DPoint& p = d.points[pi];
        int na = (int)d.curves[p.alpha_curve].points.size();
        int in_a = bc.seg_mult[d.seg_index(p.alpha_curve, (p.alpha_pos + na - 1) % na)];
        int out_a = bc.seg_mult[d.seg_index(p.alpha_curve, p.alpha_pos)];
        bc.alpha_defect[pi] = in_a - out_a;
        int nb = (int)d.curves[p.beta_curve].points.size();
        int in_b = bc.seg_mult[d.seg_index(p.beta_curve, (p.beta_pos + nb - 1) % nb)];
        int out_b = bc.seg_mult[d.seg_index(p.beta_curve, p.beta_pos)];
        bc.beta_defect[pi] = in_b - out_b;
    }
    return bc;
}

// Required alpha defect for a domain connecting x to y: +1 at points of y,
// -1 at points of x, 0 elsewhere (coinciding coordinates cancel).
inline std::vector<int> required_alpha_defect(const Diagram& d, const Generator& x,
                                              const Generator& y) {
    std::vector<int> req(d.points.size(), 0);
    for (int pi : y) req[pi] += 1;
    for (int pi : x) req[pi] -= 1;
    return req;
}

inline bool connects(const Diagram& d, const Domain& dom, const Generator& x,
                     const Generator& y) {
    BoundaryChain bc = boundary_chain(d, dom);
    std::vector<int> req = required_alpha_defect(d, x, y);
    for (size_t pi = 0; pi < d.points.size(); pi++) {
        if (bc.alpha_defect[pi] != req[pi]) return false;
        if (bc.beta_defect[pi] != -req[pi]) return false;
    }
    return true;
}

inline Rat maslov_index(const Diagram& d, const Domain& dom, const Generator& x,
                        const Generator& y) {
    if (!connects(d, dom, x, y))
        throw ComputeError(ErrorCode::BAD_DOMAIN,
                           "domain boundary chain does not connect the given generators");
    return euler_measure(d, dom) + point_measure(d, dom, x) + point_measure(d, dom, y);
}

// ---------------------------------------------------------------------------
// periodic domains and admissibility

// Basis of the lattice of domains with zero boundary defect at every point
// and multiplicity zero on every region that meets the boundary.
inline std::vector<Domain> periodic_domains(const Diagram& d) {
    std::vector<int> interior;
    for (size_t r = 0; r < d.regions.size(); r++)
        if (!d.regions[r].meets_boundary) interior.push_back((int)r);
    if (interior.empty()) return {};
    std::vector<int> col_of_region(d.regions.size(), -1);
    for (size_t i = 0; i < interior.size(); i++) col_of_region[interior[i]] = (int)i;

    // Defect-at-point equations as integer rows over interior multiplicities.
    IntMat a(d.points.size(), IntVec(interior.size(), 0));
    auto add_seg = [&](int row, int seg, int sign) {
        const DSegment& s = d.segments[seg];
        if (col_of_region[s.left] >= 0) a[row][col_of_region[s.left]] += sign;
        if (col_of_region[s.right] >= 0) a[row][col_of_region[s.right]] -= sign;
    };
    for (size_t pi = 0; pi < d.points.size(); pi++) {
        const DPoint& p = d.points[pi];
        int na = (int)d.curves[p.alpha_curve].points.size();
        add_seg((int)pi, d.seg_index(p.alpha_curve, (p.alpha_pos + na - 1) % na), +1);
        add_seg((int)pi, d.seg_index(p.alpha_curve, p.alpha_pos), -1);
    }
    IntMat basis = integer_kernel_basis(a, (int)interior.size());
    std::vector<Domain> out;
    for (auto& v : basis) {
        Domain dom((int)d.regions.size());
        for (size_t i = 0; i < interior.size(); i++) dom[interior[i]] = (int)v[i];
        out.push_back(std::move(dom));
    }
    return out;
}

inline bool check_admissibility(const Diagram& d) {
    auto basis = periodic_domains(d);
    IntMat rows;
    for (auto& dom : basis) {
        IntVec v(dom.mult.begin(), dom.mult.end());
        rows.push_back(std::move(v));
    }
    return !nonneg_nonzero_in_lattice(rows);
}

} // namespace sfh
