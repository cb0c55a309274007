#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/errors.hpp"
#include "sfh/rational.hpp"

namespace sfh {

// ---------------------------------------------------------------------------
// Abstract partial open book: a base disk with discretized boundary positions
// 0..N-1, bands attached along disjoint position intervals, a subset of bands
// marked as the handles carrying the monodromy, and one arc word per marked
// band describing the image of the pushoff of its cocore.
//
// Band coordinates: (s, t) with t = 0 the first foot, t = 1 the second, s the
// transverse direction. Feet glue orientation-compatibly: foot_1 with s
// increasing counterclockwise, foot_2 with s increasing clockwise, so the two
// free sides connect foot_1-start to foot_2-end (side L, s = 0) and
// foot_1-end to foot_2-start (side R, s = 1). Parallel strands occupy lanes
// s = slot/(slots+1). The cocore of a marked band runs along t = 1/2 and its
// pushoff is shifted one step along the boundary orientation at both ends,
// which places the endpoint hooks of the image arc next to side L on foot_2
// and next to side R on foot_1.

struct Band {
    std::string id;
    std::array<int, 2> foot1{0, 0}; // [start, end] positions, start < end
    std::array<int, 2> foot2{0, 0};
    int slots = 1;
    bool is_P = false;
};

struct PobToken {
    bool is_chord = false;
    int band = -1;   // traversal: band index
    int dir = +1;    // +1: enter foot_1, exit foot_2; -1: the reverse
    int slot = 1;    // lane within the band
    int chord_pos = 0; // chord waypoint position (inert, validated only)
};

// Endpoint of an arc on the boundary of the surface: a point on one of the
// two free sides of a band. The images of pushoffs start on side L and end
// on side R of their own band.
struct ArcEnd {
    int band = -1;
    int side = 0; // 0 = L, 1 = R
    friend bool operator==(const ArcEnd& a, const ArcEnd& b) {
        return a.band == b.band && a.side == b.side;
    }
};

struct ArcWord {
    ArcEnd start, end;
    std::vector<PobToken> tokens;
};

struct PartialOpenBook {
    std::string name;
    int circle_size = 0;
    std::vector<Band> bands;
    std::map<int, ArcWord> words; // band index -> image of its pushoff
    std::vector<Violation> load_violations;

    std::vector<int> p_bands() const {
        std::vector<int> out;
        for (size_t i = 0; i < bands.size(); i++)
            if (bands[i].is_P) out.push_back((int)i);
        return out;
    }
    int band_index(const std::string& id) const {
        for (size_t i = 0; i < bands.size(); i++)
            if (bands[i].id == id) return (int)i;
        return -1;
    }
};

// Canonical pushoff of the cocore of marked band j: same endpoints shifted
// one step along the boundary orientation, crossing the cocore once inside
// the band. Slot 0 marks the crossing as the distinguished one.
inline ArcWord standard_pushoff(const PartialOpenBook& pob, int j) {
    (void)pob;
    ArcWord w;
    w.start = {j, 0};
    w.end = {j, 1};
    PobToken t;
    t.band = j;
    t.dir = -1;
    t.slot = 0;
    w.tokens = {t};
    return w;
}

// ---------------------------------------------------------------------------
// ports and chords of the arrangement

namespace detail {

struct Port {
    Rat pos;       // exact circle position
    int band = -1; // owning band
    int foot = 0;  // 0 or 1
    // kind: 0 = strand lane (slot in `slot`), 1 = hookX (word start), 2 = hookY (word end)
    int kind = 0;
    int slot = 0;
    int word = -1;  // word (P-band index) this port belongs to
    int token = -1; // token index within the word, for strand ports
    bool entry = false; // strand port: true if the strand enters here
};

inline Rat foot_port_pos(const Band& b, int foot, const Rat& s) {
    if (foot == 0)
        return Rat(b.foot1[0]) + s * Rat(b.foot1[1] - b.foot1[0]);
    return Rat(b.foot2[1]) - s * Rat(b.foot2[1] - b.foot2[0]);
}

inline Rat lane_s(const Band& b, int slot) { return Rat(slot, b.slots + 1); }
inline Rat hook_s(const Band& b) { return Rat(1, 2 * (b.slots + 1)); }

struct Chord {
    Rat a, b;     // endpoint positions
    int word = -1; // which image arc it belongs to
};

struct Arrangement {
    std::vector<Port> ports;   // all ports
    std::vector<Chord> chords; // all disk chords
};

// Ports and chords induced by the words; returns nullopt if a token is
// malformed (those are reported by validate_pob).
inline std::optional<Arrangement> build_arrangement(const PartialOpenBook& pob) {
    Arrangement arr;
    for (const auto& [j, w] : pob.words) {
        if (j < 0 || j >= (int)pob.bands.size() || !pob.bands[j].is_P) return std::nullopt;
        const Band& bj = pob.bands[j];
        Port hook_x;
        hook_x.band = j;
        hook_x.foot = 1; // exits through foot_2, hugging side L
        hook_x.kind = 1;
        hook_x.word = j;
        hook_x.pos = foot_port_pos(bj, 1, hook_s(bj));
        Port hook_y;
        hook_y.band = j;
        hook_y.foot = 0; // enters through foot_1, hugging side R
        hook_y.kind = 2;
        hook_y.word = j;
        hook_y.pos = foot_port_pos(bj, 0, Rat(1) - hook_s(bj));
        arr.ports.push_back(hook_x);
        int prev = (int)arr.ports.size() - 1; // chord source port index
        for (size_t ti = 0; ti < w.tokens.size(); ti++) {
            const PobToken& t = w.tokens[ti];
            if (t.is_chord) continue;
            if (t.band < 0 || t.band >= (int)pob.bands.size()) return std::nullopt;
            const Band& bb = pob.bands[t.band];
            if (t.slot < 1 || t.slot > bb.slots) return std::nullopt;
            int entry_foot = t.dir > 0 ? 0 : 1;
            Port pin;
            pin.band = t.band;
            pin.foot = entry_foot;
            pin.kind = 0;
            pin.slot = t.slot;
            pin.word = j;
            pin.token = (int)ti;
            pin.entry = true;
            pin.pos = foot_port_pos(bb, entry_foot, lane_s(bb, t.slot));
            Port pout = pin;
            pout.foot = 1 - entry_foot;
            pout.entry = false;
            pout.pos = foot_port_pos(bb, 1 - entry_foot, lane_s(bb, t.slot));
            arr.ports.push_back(pin);
            arr.chords.push_back({arr.ports[prev].pos, pin.pos, j});
            arr.ports.push_back(pout);
            prev = (int)arr.ports.size() - 1;
        }
        arr.ports.push_back(hook_y);
        arr.chords.push_back({arr.ports[prev].pos, hook_y.pos, j});
    }
    return arr;
}

inline bool chords_cross(const Chord& c1, const Chord& c2, int circle) {
    auto in_arc = [&](const Rat& lo, const Rat& hi, const Rat& x) {
        // open CCW arc from lo to hi
        if (lo < hi) return lo < x && x < hi;
        return x > lo || x < hi;
    };
    (void)circle;
    int inside = (in_arc(c1.a, c1.b, c2.a) ? 1 : 0) + (in_arc(c1.a, c1.b, c2.b) ? 1 : 0);
    return inside == 1;
}

} // namespace detail

// ---------------------------------------------------------------------------
// validation

inline std::vector<Violation> validate_pob(const PartialOpenBook& pob) {
    std::vector<Violation> out = pob.load_violations;
    int n = pob.circle_size;
    if (n < 1) out.push_back({"bad-circle", pob.name, "circle_size must be positive"});

    // Feet: valid, pairwise disjoint intervals.
    std::vector<std::pair<std::array<int, 2>, std::string>> feet;
    for (const auto& b : pob.bands) {
        for (auto f : {b.foot1, b.foot2}) {
            if (f[0] < 0 || f[1] >= n || f[0] >= f[1])
                out.push_back({"bad-foot", b.id, "foot interval must satisfy 0 <= start < end < circle_size"});
            else
                feet.push_back({f, b.id});
        }
        if (b.slots < 1) out.push_back({"bad-slots", b.id, "slot capacity must be positive"});
    }
    for (size_t i = 0; i < feet.size(); i++)
        for (size_t k = i + 1; k < feet.size(); k++) {
            auto [f, id1] = feet[i];
            auto [g, id2] = feet[k];
            if (f[0] <= g[1] && g[0] <= f[1])
                out.push_back({"feet-overlap", id1 + "/" + id2, "band feet must be pairwise disjoint"});
        }
    if (!out.empty()) return out; // geometry below assumes a sane surface

    // Monodromy coverage: an image for every marked band, none for others.
    for (size_t i = 0; i < pob.bands.size(); i++) {
        bool has = pob.words.count((int)i) > 0;
        if (pob.bands[i].is_P && !has)
            out.push_back({"MISSING_IMAGE", pob.bands[i].id, "marked band has no image arc"});
        if (!pob.bands[i].is_P && has)
            out.push_back({"EXTRANEOUS_IMAGE", pob.bands[i].id, "unmarked band cannot carry monodromy"});
    }

    // Endpoints: image of the pushoff of band j starts on side L and ends on
    // side R of band j.
    for (const auto& [j, w] : pob.words) {
        ArcWord push = standard_pushoff(pob, j);
        if (!(w.start == push.start) || !(w.end == push.end))
            out.push_back({"H_A_IDENTITY_VIOLATION", pob.bands[j].id,
                           "image arc endpoints differ from the pushoff endpoints"});
    }

    // Tokens: in-range references, slots exclusive per band.
    std::map<int, std::set<int>> used_slots;
    for (const auto& [j, w] : pob.words) {
        for (const auto& t : w.tokens) {
            if (t.is_chord) {
                if (t.chord_pos < 0 || t.chord_pos >= n)
                    out.push_back({"bad-chord", pob.bands[j].id, "chord waypoint out of range"});
                continue;
            }
            if (t.band < 0 || t.band >= (int)pob.bands.size()) {
                out.push_back({"dangling-band", pob.bands[j].id, "token names a nonexistent band"});
                continue;
            }
            const Band& bb = pob.bands[t.band];
            if (t.slot < 1 || t.slot > bb.slots) {
                out.push_back({"bad-slot", bb.id, "token slot out of range"});
                continue;
            }
            if (!used_slots[t.band].insert(t.slot).second)
                out.push_back({"SLOT_COLLISION", bb.id,
                               "two strands share slot " + std::to_string(t.slot)});
        }
    }
    if (!out.empty()) return out;

    // Embeddedness: all disk chords pairwise non-crossing (crossing chords of
    // one arc break embeddedness, of two arcs break disjointness).
    auto arr = detail::build_arrangement(pob);
    if (!arr) {
        out.push_back({"NOT_EMBEDDING", pob.name, "arrangement could not be built"});
        return out;
    }
    for (size_t i = 0; i < arr->chords.size(); i++)
        for (size_t k = i + 1; k < arr->chords.size(); k++)
            if (detail::chords_cross(arr->chords[i], arr->chords[k], n)) {
                out.push_back({"NOT_EMBEDDING",
                               pob.bands[arr->chords[i].word].id + "/" + pob.bands[arr->chords[k].word].id,
                               "image arcs cross in the disk"});
                return out;
            }
    return out;
}

// ---------------------------------------------------------------------------
// census

// |alpha_i ∩ beta_j| = [i = j] + number of traversals of marked band i in the
// image word of band j; indexed by marked-band order.
inline std::vector<std::vector<int>> intersection_census(const PartialOpenBook& pob) {
    auto ps = pob.p_bands();
    std::map<int, int> p_index;
    for (size_t i = 0; i < ps.size(); i++) p_index[ps[i]] = (int)i;
    std::vector<std::vector<int>> c(ps.size(), std::vector<int>(ps.size(), 0));
    for (size_t j = 0; j < ps.size(); j++) {
        c[j][j] += 1;
        auto it = pob.words.find(ps[j]);
        if (it == pob.words.end()) continue;
        for (const auto& t : it->second.tokens) {
            if (t.is_chord) continue;
            auto pi = p_index.find(t.band);
            if (pi != p_index.end()) c[pi->second][j] += 1;
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// suture circles

// Number of boundary circles of the Heegaard surface: walk the circle
// counterclockwise, crossing marked bands through their second-sheet foot
// copies and diverting along the free sides of unmarked bands.
inline int suture_count(const PartialOpenBook& pob) {
    struct Foot {
        int start, end, band, foot;
    };
    std::vector<Foot> feet;
    for (size_t b = 0; b < pob.bands.size(); b++) {
        feet.push_back({pob.bands[b].foot1[0], pob.bands[b].foot1[1], (int)b, 0});
        feet.push_back({pob.bands[b].foot2[0], pob.bands[b].foot2[1], (int)b, 1});
    }
    if (feet.empty()) return 1;
    std::sort(feet.begin(), feet.end(), [](const Foot& a, const Foot& b) { return a.start < b.start; });
    auto next_after = [&](int pos) {
        for (const auto& f : feet)
            if (f.start > pos) return f;
        return feet.front();
    };
    std::map<std::pair<int, int>, int> idx;
    for (size_t i = 0; i < feet.size(); i++) idx[{feet[i].band, feet[i].foot}] = (int)i;
    std::vector<int> succ(feet.size());
    for (size_t i = 0; i < feet.size(); i++) {
        Foot nxt = next_after(feet[i].end);
        if (pob.bands[nxt.band].is_P)
            succ[i] = idx[{nxt.band, nxt.foot}];
        else
            succ[i] = idx[{nxt.band, 1 - nxt.foot}];
    }
    std::vector<bool> seen(feet.size(), false);
    int circuits = 0;
    for (size_t i = 0; i < feet.size(); i++) {
        if (seen[i]) continue;
        circuits++;
        int cur = (int)i;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = succ[cur];
        }
    }
    return circuits;
}

// ---------------------------------------------------------------------------
// diagram construction

namespace detail {

// Fine cells of one band piece. K = number of used lanes, sorted ascending.
struct BandCells {
    std::vector<int> lanes; // used slots, ascending
    // second sheet (always present)
    std::vector<int> top;    // P-band: T_0..T_K; unmarked band: slabs C_0..C_K
    std::vector<int> bottom; // P-band only: B_0..B_K
    int xc = -1, yc = -1;    // P-band hook corner cells
    // first sheet (P-band only)
    int n0 = -1, s0 = -1, w0 = -1, e0 = -1;
};

struct FineComplex {
    int n_cells = 0;
    std::vector<std::pair<int, int>> glue;  // merged cell pairs
    std::vector<bool> touches_boundary;     // per cell
    int new_cell() {
        touches_boundary.push_back(false);
        return n_cells++;
    }
};

// Disk faces of a non-crossing chord system with marked boundary vertices.
struct DiskFaces {
    // vertex list sorted by position; arcs[i] = face adjacent to the arc from
    // vertex i to vertex i+1 (cyclic)
    std::vector<Rat> verts;
    std::vector<int> arc_face;
    int n_faces = 0;
};

inline DiskFaces disk_faces(std::vector<Rat> verts, const std::vector<Chord>& chords,
                            FineComplex& fc) {
    DiskFaces df;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    df.verts = verts;
    int nv = (int)verts.size();
    auto vid = [&](const Rat& p) {
        return (int)(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
    };
    std::vector<int> chord_at(nv, -1); // partner vertex of the chord at a vertex
    for (const auto& c : chords) {
        chord_at[vid(c.a)] = vid(c.b);
        chord_at[vid(c.b)] = vid(c.a);
    }
    if (nv == 0) {
        df.n_faces = 1;
        df.arc_face = {};
        int f = fc.new_cell();
        (void)f;
        return df;
    }
    // Directed edges: 0..nv-1 arc (i -> i+1), nv..2nv-1 arc (i -> i-1),
    // 2nv + i chord out of vertex i (if any).
    int ne = 3 * nv;
    std::vector<int> face_of(ne, -1);
    auto head = [&](int e) {
        if (e < nv) return (e + 1) % nv;
        if (e < 2 * nv) return (e - nv + nv - 1) % nv;
        return chord_at[e - 2 * nv];
    };
    auto next_edge = [&](int e) {
        int h = head(e);
        if (e < nv) {
            // arrived counterclockwise; leave by the chord if there is one
            if (chord_at[h] >= 0) return 2 * nv + h;
            return h; // continue counterclockwise
        }
        if (e < 2 * nv) return nv + (h + nv - 1) % nv; // outer face walk
        return h; // arrived by chord: continue counterclockwise
    };
    df.arc_face.assign(nv, -1);
    for (int e0 = 0; e0 < ne; e0++) {
        if (e0 >= nv && e0 < 2 * nv) continue; // outer face
        if (e0 >= 2 * nv && chord_at[e0 - 2 * nv] < 0) continue;
        if (face_of[e0] >= 0) continue;
        int f = fc.new_cell();
        df.n_faces++;
        int e = e0;
        do {
            face_of[e] = f;
            if (e < nv) df.arc_face[e] = f;
            e = next_edge(e);
        } while (e != e0);
    }
    return df;
}

} // namespace detail

// Builds the sutured Heegaard diagram of a valid partial open book: the
// doubled marked bands carry the distinguished intersection points, the image
// words lay down the rest, and the complementary regions are assembled by
// gluing the disk faces, band cells and second-sheet copies.
inline Diagram build_diagram(const PartialOpenBook& pob) {
    {
        auto v = validate_pob(pob);
        if (!v.empty())
            throw ComputeError(ErrorCode::ARRANGEMENT_DEGENERATE,
                               "cannot build a diagram from an invalid partial open book: " +
                                   v.front().code + " (" + v.front().entity + ")");
    }
    auto arr_opt = detail::build_arrangement(pob);
    auto& arr = *arr_opt;
    auto ps = pob.p_bands();
    std::map<int, int> p_index;
    for (size_t i = 0; i < ps.size(); i++) p_index[ps[i]] = (int)i;

    detail::FineComplex fc;

    // Band cells.
    std::vector<detail::BandCells> bc(pob.bands.size());
    for (size_t b = 0; b < pob.bands.size(); b++) {
        std::set<int> lanes;
        for (const auto& p : arr.ports)
            if (p.band == (int)b && p.kind == 0 && p.entry) lanes.insert(p.slot);
        bc[b].lanes.assign(lanes.begin(), lanes.end());
        int K = (int)bc[b].lanes.size();
        for (int i = 0; i <= K; i++) bc[b].top.push_back(fc.new_cell());
        if (pob.bands[b].is_P) {
            for (int i = 0; i <= K; i++) bc[b].bottom.push_back(fc.new_cell());
            bc[b].xc = fc.new_cell();
            bc[b].yc = fc.new_cell();
            bc[b].n0 = fc.new_cell();
            bc[b].s0 = fc.new_cell();
            bc[b].w0 = fc.new_cell();
            bc[b].e0 = fc.new_cell();
            // Side gluings between the two sheets.
            fc.glue.push_back({bc[b].bottom[0], bc[b].s0});
            fc.glue.push_back({bc[b].top[0], bc[b].w0});
            fc.glue.push_back({bc[b].xc, bc[b].n0});
            fc.glue.push_back({bc[b].yc, bc[b].s0});
            fc.glue.push_back({bc[b].bottom[K], bc[b].e0});
            fc.glue.push_back({bc[b].top[K], bc[b].n0});
            // First-sheet feet are boundary.
            fc.touches_boundary[bc[b].s0] = true;
            fc.touches_boundary[bc[b].n0] = true;
        } else {
            // Free sides of unmarked bands are boundary.
            fc.touches_boundary[bc[b].top[0]] = true;
            fc.touches_boundary[bc[b].top[K]] = true;
        }
    }

    // Disk faces. Vertices: every port plus every foot corner.
    std::vector<Rat> verts;
    for (const auto& p : arr.ports) verts.push_back(p.pos);
    for (const auto& b : pob.bands) {
        verts.push_back(Rat(b.foot1[0]));
        verts.push_back(Rat(b.foot1[1]));
        verts.push_back(Rat(b.foot2[0]));
        verts.push_back(Rat(b.foot2[1]));
    }
    detail::DiskFaces df = detail::disk_faces(verts, arr.chords, fc);

    // Classify boundary arcs: glue covered arcs to band cells, flag the faces
    // on uncovered arcs.
    int nv = (int)df.verts.size();
    auto band_cell_for = [&](int b, int foot, const Rat& smid) -> int {
        const auto& cells = bc[b];
        int K = (int)cells.lanes.size();
        const Band& bb = pob.bands[b];
        if (pob.bands[b].is_P) {
            Rat hs = detail::hook_s(bb);
            if (foot == 0 && smid > Rat(1) - hs) return cells.yc;
            if (foot == 1 && smid < hs) return cells.xc;
        }
        int i = 0;
        while (i < K && detail::lane_s(bb, cells.lanes[i]) < smid) i++;
        if (foot == 0 && pob.bands[b].is_P) return cells.bottom[i];
        return cells.top[i];
    };
    for (int i = 0; i < nv; i++) {
        const Rat& u = df.verts[i];
        const Rat& v = df.verts[(i + 1) % nv];
        Rat mid = (i + 1 < nv) ? (u + v) / Rat(2) : (u + Rat(pob.circle_size) + v) / Rat(2);
        int face = df.arc_face[i];
        // Which foot covers the midpoint?
        int cov_band = -1, cov_foot = -1;
        for (size_t b = 0; b < pob.bands.size() && cov_band < 0; b++) {
            if (Rat(pob.bands[b].foot1[0]) < mid && mid < Rat(pob.bands[b].foot1[1])) {
                cov_band = (int)b;
                cov_foot = 0;
            }
            if (Rat(pob.bands[b].foot2[0]) < mid && mid < Rat(pob.bands[b].foot2[1])) {
                cov_band = (int)b;
                cov_foot = 1;
            }
        }
        if (cov_band < 0) {
            fc.touches_boundary[face] = true;
            continue;
        }
        const Band& bb = pob.bands[cov_band];
        Rat smid = cov_foot == 0
                       ? (mid - Rat(bb.foot1[0])) / Rat(bb.foot1[1] - bb.foot1[0])
                       : (Rat(bb.foot2[1]) - mid) / Rat(bb.foot2[1] - bb.foot2[0]);
        fc.glue.push_back({face, band_cell_for(cov_band, cov_foot, smid)});
    }

    // Union-find over fine cells.
    std::vector<int> parent(fc.n_cells);
    for (int i = 0; i < fc.n_cells; i++) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (auto [a, b] : fc.glue) parent[find(a)] = find(b);

    // Region table: canonical order by smallest member cell.
    std::map<int, int> root_to_region;
    std::vector<int> region_of_cell(fc.n_cells);
    {
        std::vector<int> roots;
        for (int i = 0; i < fc.n_cells; i++)
            if (find(i) == i) roots.push_back(i);
        std::map<int, int> min_member;
        for (int i = 0; i < fc.n_cells; i++) {
            int r = find(i);
            if (!min_member.count(r)) min_member[r] = i;
        }
        std::vector<std::pair<int, int>> order; // (min member, root)
        for (int r : roots) order.push_back({min_member[r], r});
        std::sort(order.begin(), order.end());
        for (size_t i = 0; i < order.size(); i++) root_to_region[order[i].second] = (int)i;
        for (int i = 0; i < fc.n_cells; i++) region_of_cell[i] = root_to_region[find(i)];
    }
    int n_regions = (int)root_to_region.size();

    Diagram d;
    d.name = pob.name;
    d.boundary_components = suture_count(pob);
    d.euler_char = 1 - (int)pob.bands.size() - (int)ps.size();

    // chi(region) = cells - internal glue edges (no interior vertices occur
    // in this construction); boundary flag is inherited from the cells.
    {
        std::vector<int> cells_in(n_regions, 0), glue_in(n_regions, 0);
        std::vector<bool> meets(n_regions, false);
        for (int i = 0; i < fc.n_cells; i++) {
            cells_in[region_of_cell[i]]++;
            if (fc.touches_boundary[i]) meets[region_of_cell[i]] = true;
        }
        for (auto [a, b] : fc.glue) glue_in[region_of_cell[a]]++;
        int width = 1, tmp = n_regions;
        while (tmp >= 10) { width++; tmp /= 10; }
        for (int r = 0; r < n_regions; r++) {
            std::string num = std::to_string(r);
            while ((int)num.size() < width) num = "0" + num;
            d.regions.push_back({"R" + num, cells_in[r] - glue_in[r], meets[r], 0});
        }
    }

    // Points. Distinguished point on each doubled band, then one point per
    // traversal of a marked band.
    struct StrandPt {
        int point = -1;
        int lane_index = 0; // 1-based within used lanes
        int dir = +1;
    };
    std::map<int, int> contact_pt;                 // P-band -> point index
    std::map<std::pair<int, int>, StrandPt> strand; // (word, token) -> point
    auto sector_region = [&](int cell) { return region_of_cell[cell]; };
    for (int j : ps) {
        DPoint p;
        p.id = "x@" + pob.bands[j].id;
        p.sectors = {sector_region(bc[j].n0), sector_region(bc[j].w0),
                     sector_region(bc[j].s0), sector_region(bc[j].e0)};
        contact_pt[j] = (int)d.points.size();
        d.points.push_back(p);
    }
    for (const auto& [j, w] : pob.words) {
        for (size_t ti = 0; ti < w.tokens.size(); ti++) {
            const PobToken& t = w.tokens[ti];
            if (t.is_chord || !pob.bands[t.band].is_P) continue;
            const auto& cells = bc[t.band];
            int li = (int)(std::lower_bound(cells.lanes.begin(), cells.lanes.end(), t.slot) -
                           cells.lanes.begin()) + 1;
            DPoint p;
            p.id = "t@" + pob.bands[j].id + "#" + std::to_string(ti + 1);
            p.sectors = {sector_region(cells.top[li - 1]), sector_region(cells.top[li]),
                         sector_region(cells.bottom[li]), sector_region(cells.bottom[li - 1])};
            strand[{j, (int)ti}] = {(int)d.points.size(), li, t.dir};
            d.points.push_back(p);
        }
    }

    // Curves. Alphas: distinguished point, then strand points by descending
    // lane. Betas: distinguished point, then own strand points in reverse
    // word order.
    d.n_alpha = (int)ps.size();
    for (int j : ps) {
        Curve a;
        a.id = "a@" + pob.bands[j].id;
        a.is_alpha = true;
        a.points.push_back(contact_pt[j]);
        std::vector<std::pair<int, int>> on_band; // (lane index, point)
        for (const auto& [key, sp] : strand) {
            int token_band = pob.words.at(key.first).tokens[key.second].band;
            if (token_band == j) on_band.push_back({sp.lane_index, sp.point});
        }
        std::sort(on_band.rbegin(), on_band.rend());
        for (auto& [li, pt] : on_band) a.points.push_back(pt);
        d.curves.push_back(a);
    }
    for (int j : ps) {
        Curve b;
        b.id = "b@" + pob.bands[j].id;
        b.is_alpha = false;
        b.points.push_back(contact_pt[j]);
        const ArcWord& w = pob.words.at(j);
        for (int ti = (int)w.tokens.size() - 1; ti >= 0; ti--) {
            auto it = strand.find({j, ti});
            if (it != strand.end()) b.points.push_back(it->second.point);
        }
        d.curves.push_back(b);
    }
    // Back references.
    for (size_t c = 0; c < d.curves.size(); c++)
        for (size_t k = 0; k < d.curves[c].points.size(); k++) {
            DPoint& p = d.points[d.curves[c].points[k]];
            if (d.curves[c].is_alpha) {
                p.alpha_curve = (int)c;
                p.alpha_pos = (int)k;
            } else {
                p.beta_curve = (int)c;
                p.beta_pos = (int)k;
            }
        }

    // Segments: side regions read off the sector lists at both ends. The
    // beta rules depend on which ray the outgoing half-segment occupies:
    // at a distinguished point and at a strand traversed against the band
    // the outgoing beta ray sits between sectors 2 and 3, otherwise between
    // sectors 0 and 1.
    auto beta_case_pos = [&](int pi) {
        for (auto& [key, sp] : strand)
            if (sp.point == pi) return sp.dir < 0;
        return false; // distinguished points
    };
    for (size_t c = 0; c < d.curves.size(); c++) {
        const Curve& cv = d.curves[c];
        int ncv = (int)cv.points.size();
        for (int k = 0; k < ncv; k++) {
            int q = cv.points[k], qn = cv.points[(k + 1) % ncv];
            const auto& sq = d.points[q].sectors;
            const auto& sn = d.points[qn].sectors;
            DSegment s;
            s.curve = (int)c;
            s.from_pos = k;
            s.from_pt = q;
            s.to_pt = qn;
            if (cv.is_alpha) {
                s.left = sq[0];
                s.right = sq[3];
                if (s.left != sn[1] || s.right != sn[2])
                    throw ComputeError(ErrorCode::ARRANGEMENT_DEGENERATE,
                                       "inconsistent side regions along an alpha segment");
            } else {
                bool out_pos = beta_case_pos(q), in_pos = beta_case_pos(qn);
                s.left = out_pos ? sq[1] : sq[3];
                s.right = out_pos ? sq[0] : sq[2];
                int in_left = in_pos ? sn[2] : sn[0];
                int in_right = in_pos ? sn[3] : sn[1];
                if (s.left != in_left || s.right != in_right)
                    throw ComputeError(ErrorCode::ARRANGEMENT_DEGENERATE,
                                       "inconsistent side regions along a beta segment");
            }
            d.segments.push_back(s);
        }
    }

    std::vector<int> contact;
    for (int j : ps) contact.push_back(contact_pt[j]);
    d.contact = contact;
    d.finalize();
    return d;
}

} // namespace sfh
