#pragma once

// Hand-encoded diagram fixtures. Side regions and sector lists were worked
// out on paper from explicit pictures; tests treat them as ground truth.

#include "sfh/diagram.hpp"

namespace fixtures {

using namespace sfh;

inline Curve mk_curve(std::string id, bool is_alpha, std::vector<int> pts) {
    Curve c;
    c.id = std::move(id);
    c.is_alpha = is_alpha;
    c.points = std::move(pts);
    return c;
}

inline void set_point(Diagram& d, int pi, std::string id, int ac, int ap, int bc, int bp,
                      std::array<int, 4> sectors) {
    d.points[pi].id = std::move(id);
    d.points[pi].alpha_curve = ac;
    d.points[pi].alpha_pos = ap;
    d.points[pi].beta_curve = bc;
    d.points[pi].beta_pos = bp;
    d.points[pi].sectors = sectors;
}

inline void add_seg(Diagram& d, int curve, int pos, int left, int right) {
    DSegment s;
    s.curve = curve;
    s.from_pos = pos;
    int n = (int)d.curves[curve].points.size();
    s.from_pt = d.curves[curve].points[pos];
    s.to_pt = d.curves[curve].points[(pos + 1) % n];
    s.left = left;
    s.right = right;
    d.segments.push_back(s);
}

// One alpha, one beta on a once-punctured torus, meeting once. The single
// region is the punctured square (an annulus).
inline Diagram punctured_torus(bool with_contact = true) {
    Diagram d;
    d.name = "punctured-torus";
    d.euler_char = -1;
    d.boundary_components = 1;
    d.regions = {{"R", 0, true, 0}};
    d.points.resize(1);
    d.curves = {mk_curve("a0", true, {0}), mk_curve("b0", false, {0})};
    d.n_alpha = 1;
    set_point(d, 0, "p", 0, 0, 1, 0, {0, 0, 0, 0});
    add_seg(d, 0, 0, 0, 0);
    add_seg(d, 1, 0, 0, 0);
    if (with_contact) d.contact = std::vector<int>{0};
    d.finalize();
    return d;
}

// Equator plus a wave crossing it six times on a once-punctured sphere.
// Complement: five interior bigons, one boundary lune, two interior hexagons
// (the niceness offenders).
//
// Regions: 0:L0 (punctured lune) 1:L1 2:L2 (north lunes), 3:M0 4:M1 5:M2
// (south lunes), 6:HN 7:HS (hexagons).
inline Diagram wave_sphere() {
    Diagram d;
    d.name = "wave-sphere";
    d.euler_char = 1;
    d.boundary_components = 1;
    d.regions = {{"L0", 0, true, 0}, {"L1", 1, false, 0}, {"L2", 1, false, 0},
                 {"M0", 1, false, 0}, {"M1", 1, false, 0}, {"M2", 1, false, 0},
                 {"HN", 1, false, 0}, {"HS", 1, false, 0}};
    const int L0 = 0, L1 = 1, L2 = 2, M0 = 3, M1 = 4, M2 = 5, HN = 6, HS = 7;
    d.points.resize(6);
    d.curves = {mk_curve("a0", true, {0, 1, 2, 3, 4, 5}),
                mk_curve("b0", false, {0, 1, 2, 3, 4, 5})};
    d.n_alpha = 1;
    set_point(d, 0, "p0", 0, 0, 1, 0, {L0, HN, M2, HS});
    set_point(d, 1, "p1", 0, 1, 1, 1, {HN, L0, HS, M0});
    set_point(d, 2, "p2", 0, 2, 1, 2, {L1, HN, M0, HS});
    set_point(d, 3, "p3", 0, 3, 1, 3, {HN, L1, HS, M1});
    set_point(d, 4, "p4", 0, 4, 1, 4, {L2, HN, M1, HS});
    set_point(d, 5, "p5", 0, 5, 1, 5, {HN, L2, HS, M2});
    // alpha (equator), oriented p0 -> p1 -> ...
    add_seg(d, 0, 0, L0, HS);
    add_seg(d, 0, 1, HN, M0);
    add_seg(d, 0, 2, L1, HS);
    add_seg(d, 0, 3, HN, M1);
    add_seg(d, 0, 4, L2, HS);
    add_seg(d, 0, 5, HN, M2);
    // beta (wave): arcs p0p1, p2p3, p4p5 run north of the equator.
    add_seg(d, 1, 0, HN, L0);
    add_seg(d, 1, 1, M0, HS);
    add_seg(d, 1, 2, HN, L1);
    add_seg(d, 1, 3, M1, HS);
    add_seg(d, 1, 4, HN, L2);
    add_seg(d, 1, 5, M2, HS);
    d.finalize();
    return d;
}

// Two parallel alphas and two parallel betas on a once-punctured torus; all
// complementary regions are squares, the curve families are dependent in
// homology, and the periodic lattice contains nonnegative elements.
//
// Regions 0:SA 1:SB 2:SC 3:SD (SD punctured).
inline Diagram torus_grid() {
    Diagram d;
    d.name = "torus-grid";
    d.euler_char = -1;
    d.boundary_components = 1;
    d.regions = {{"SA", 1, false, 0}, {"SB", 1, false, 0}, {"SC", 1, false, 0},
                 {"SD", 0, true, 0}};
    const int SA = 0, SB = 1, SC = 2, SD = 3;
    d.points.resize(4); // 0:p11 1:p12 2:p21 3:p22
    d.curves = {mk_curve("a0", true, {0, 1}), mk_curve("a1", true, {2, 3}),
                mk_curve("b0", false, {0, 2}), mk_curve("b1", false, {1, 3})};
    d.n_alpha = 2;
    set_point(d, 0, "p11", 0, 0, 2, 0, {SA, SB, SD, SC});
    set_point(d, 1, "p12", 0, 1, 3, 0, {SB, SA, SC, SD});
    set_point(d, 2, "p21", 1, 0, 2, 1, {SC, SD, SB, SA});
    set_point(d, 3, "p22", 1, 1, 3, 1, {SD, SC, SA, SB});
    add_seg(d, 0, 0, SA, SC); // p11 -> p12
    add_seg(d, 0, 1, SB, SD); // p12 -> p11
    add_seg(d, 1, 0, SC, SA); // p21 -> p22
    add_seg(d, 1, 1, SD, SB); // p22 -> p21
    add_seg(d, 2, 0, SB, SA); // p11 -> p21
    add_seg(d, 2, 1, SD, SC); // p21 -> p11
    add_seg(d, 3, 0, SA, SB); // p12 -> p22
    add_seg(d, 3, 1, SC, SD); // p22 -> p12
    d.finalize();
    return d;
}

// Genus-1 surface with two boundary circles, one alpha and one beta meeting
// twice, complement = one big boundary region plus two interior bigons that
// both run from the second point to the first. Worked out on paper from the
// doubled-band picture; exercises every orientation convention at once.
//
// Points: 0:xp (the contact corner), 1:xm. Regions: 0:RA 1:RB 2:RC.
inline Diagram two_bigon_tube() {
    Diagram d;
    d.name = "two-bigon-tube";
    d.euler_char = -2;
    d.boundary_components = 2;
    d.regions = {{"RA", -2, true, 0}, {"RB", 1, false, 0}, {"RC", 1, false, 0}};
    d.points.resize(2);
    d.curves = {mk_curve("a1", true, {0, 1}), mk_curve("b1", false, {0, 1})};
    d.n_alpha = 1;
    set_point(d, 0, "xp", 0, 0, 1, 0, {0, 1, 0, 2});
    set_point(d, 1, "xm", 0, 1, 1, 1, {1, 0, 2, 0});
    add_seg(d, 0, 0, 0, 2); // xp -> xm
    add_seg(d, 0, 1, 1, 0); // xm -> xp
    add_seg(d, 1, 0, 2, 0); // xp -> xm
    add_seg(d, 1, 1, 0, 1); // xm -> xp
    d.contact = std::vector<int>{0};
    d.finalize();
    return d;
}

// One alpha and one beta meeting three times; two interior bigons send the
// two non-contact generators to the contact one, so the homology has
// dimension one and the contact class is a boundary.
//
// Points: 0:x (contact), 1:p1, 2:p2. Regions: 0:Rbig 1:Rw 2:Re.
inline Diagram three_point_twist() {
    Diagram d;
    d.name = "three-point-twist";
    d.euler_char = -2;
    d.boundary_components = 2;
    d.regions = {{"Rbig", -1, true, 0}, {"Rw", 1, false, 0}, {"Re", 1, false, 0}};
    d.points.resize(3);
    d.curves = {mk_curve("a1", true, {0, 2, 1}), mk_curve("b1", false, {0, 2, 1})};
    d.n_alpha = 1;
    set_point(d, 0, "x", 0, 0, 1, 0, {0, 1, 0, 2});
    set_point(d, 1, "p1", 0, 2, 1, 2, {1, 0, 0, 0});
    set_point(d, 2, "p2", 0, 1, 1, 1, {0, 0, 2, 0});
    add_seg(d, 0, 0, 0, 2); // x -> p2
    add_seg(d, 0, 1, 0, 0); // p2 -> p1
    add_seg(d, 0, 2, 1, 0); // p1 -> x
    add_seg(d, 1, 0, 2, 0); // x -> p2
    add_seg(d, 1, 1, 0, 0); // p2 -> p1
    add_seg(d, 1, 2, 0, 1); // p1 -> x
    d.contact = std::vector<int>{0};
    d.finalize();
    return d;
}

// No curves at all on an annulus.
inline Diagram empty_annulus() {
    Diagram d;
    d.name = "empty-annulus";
    d.euler_char = 0;
    d.boundary_components = 2;
    d.regions = {{"R", 0, true, 0}};
    d.n_alpha = 0;
    d.contact = std::vector<int>{};
    d.finalize();
    return d;
}

} // namespace fixtures
