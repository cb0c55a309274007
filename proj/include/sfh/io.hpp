#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sfh/diagram.hpp"
#include "sfh/floer.hpp"
#include "sfh/pob.hpp"

namespace sfh {

using ordered_json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline ordered_json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

} // namespace detail

// ---------------------------------------------------------------------------
// .pob: {"circle_size": N, "bands": [{id, foot_1, foot_2, slots, is_P}...],
//        "monodromy": {band id: [[band,"+"|"-",slot] | ["chord",pos], ...]}}

inline PartialOpenBook pob_from_json(const ordered_json& j, const std::string& name) {
    PartialOpenBook pob;
    pob.name = name;
    try {
        pob.circle_size = j.at("circle_size").get<int>();
        for (const auto& bj : j.at("bands")) {
            Band b;
            b.id = bj.at("id").get<std::string>();
            b.foot1 = {bj.at("foot_1").at(0).get<int>(), bj.at("foot_1").at(1).get<int>()};
            b.foot2 = {bj.at("foot_2").at(0).get<int>(), bj.at("foot_2").at(1).get<int>()};
            b.slots = bj.value("slots", 1);
            b.is_P = bj.value("is_P", false);
            pob.bands.push_back(b);
        }
        if (j.contains("monodromy")) {
            for (auto it = j.at("monodromy").begin(); it != j.at("monodromy").end(); ++it) {
                int bi = pob.band_index(it.key());
                if (bi < 0) {
                    pob.load_violations.push_back(
                        {"dangling-band", it.key(), "monodromy names a nonexistent band"});
                    continue;
                }
                ArcWord w = standard_pushoff(pob, bi);
                w.tokens.clear();
                for (const auto& tj : it.value()) {
                    PobToken t;
                    if (tj.at(0).is_string() && tj.at(0).get<std::string>() == "chord") {
                        t.is_chord = true;
                        t.chord_pos = tj.at(1).get<int>();
                    } else {
                        std::string bid = tj.at(0).get<std::string>();
                        t.band = pob.band_index(bid);
                        if (t.band < 0)
                            pob.load_violations.push_back(
                                {"dangling-band", bid, "token names a nonexistent band"});
                        std::string dir = tj.at(1).get<std::string>();
                        if (dir != "+" && dir != "-")
                            throw ParseError("token direction must be \"+\" or \"-\"");
                        t.dir = dir == "+" ? +1 : -1;
                        t.slot = tj.at(2).get<int>();
                    }
                    w.tokens.push_back(t);
                }
                pob.words[bi] = w;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed .pob: ") + e.what());
    }
    return pob;
}

inline PartialOpenBook load_pob(const std::string& path, const std::string& name) {
    return pob_from_json(detail::parse_json_file(path), name);
}

// ---------------------------------------------------------------------------
// .sfd

inline Diagram diagram_from_json(const ordered_json& j, const std::string& fallback_name) {
    Diagram d;
    try {
        d.name = j.value("name", fallback_name);
        d.euler_char = j.at("euler_char").get<int>();
        d.boundary_components = j.at("boundary_components").get<int>();
        std::map<std::string, int> pt_of, reg_of;
        for (const auto& pj : j.at("points")) {
            DPoint p;
            p.id = pj.at("id").get<std::string>();
            pt_of[p.id] = (int)d.points.size();
            d.points.push_back(p);
        }
        for (const auto& rj : j.at("regions")) {
            DRegion r;
            r.id = rj.at("id").get<std::string>();
            r.chi = rj.at("chi").get<int>();
            r.meets_boundary = rj.at("meets_boundary").get<bool>();
            reg_of[r.id] = (int)d.regions.size();
            d.regions.push_back(r);
        }
        auto resolve_pt = [&](const std::string& id) {
            auto it = pt_of.find(id);
            if (it == pt_of.end()) {
                d.load_violations.push_back({"dangling-point", id, "unknown point id"});
                return -1;
            }
            return it->second;
        };
        auto resolve_reg = [&](const std::string& id) {
            auto it = reg_of.find(id);
            if (it == reg_of.end()) {
                d.load_violations.push_back({"dangling-region", id, "unknown region id"});
                return -1;
            }
            return it->second;
        };
        // Sector lists ride on the point records.
        {
            int pi = 0;
            for (const auto& pj : j.at("points")) {
                const auto& sec = pj.at("sectors");
                for (int s = 0; s < 4; s++)
                    d.points[pi].sectors[s] = resolve_reg(sec.at(s).get<std::string>());
                pi++;
            }
        }
        int ci = 0;
        for (const char* fam : {"alpha", "beta"}) {
            bool is_alpha = std::string(fam) == "alpha";
            for (const auto& cj : j.at(fam)) {
                Curve c;
                c.id = (is_alpha ? "a" : "b") + std::to_string(is_alpha ? ci : ci - d.n_alpha);
                c.is_alpha = is_alpha;
                for (const auto& pid : cj) {
                    int pi = resolve_pt(pid.get<std::string>());
                    c.points.push_back(pi);
                    if (pi >= 0) {
                        if (is_alpha) {
                            d.points[pi].alpha_curve = ci;
                            d.points[pi].alpha_pos = (int)c.points.size() - 1;
                        } else {
                            d.points[pi].beta_curve = ci;
                            d.points[pi].beta_pos = (int)c.points.size() - 1;
                        }
                    }
                }
                d.curves.push_back(c);
                ci++;
                if (is_alpha) d.n_alpha = ci;
            }
        }
        // Segment records keyed by (curve, from point).
        std::map<std::pair<std::string, std::string>, std::array<std::string, 3>> seg_rec;
        for (const auto& sj : j.at("segments")) {
            auto key = std::make_pair(sj.at("curve").get<std::string>(),
                                      sj.at("from").get<std::string>());
            if (seg_rec.count(key))
                d.load_violations.push_back({"extra-segment", key.first, "duplicate segment record"});
            seg_rec[key] = {sj.at("to").get<std::string>(), sj.at("left").get<std::string>(),
                            sj.at("right").get<std::string>()};
        }
        for (size_t c = 0; c < d.curves.size(); c++) {
            const Curve& cv = d.curves[c];
            int ncv = (int)cv.points.size();
            for (int k = 0; k < ncv; k++) {
                DSegment s;
                s.curve = (int)c;
                s.from_pos = k;
                s.from_pt = cv.points[k];
                s.to_pt = cv.points[(k + 1) % ncv];
                if (s.from_pt >= 0) {
                    auto it = seg_rec.find({cv.id, d.points[s.from_pt].id});
                    if (it == seg_rec.end()) {
                        d.load_violations.push_back(
                            {"missing-segment", cv.id, "no record for a curve segment"});
                    } else {
                        if (s.to_pt < 0 || it->second[0] != d.points[s.to_pt].id)
                            d.load_violations.push_back(
                                {"segment-mismatch", cv.id, "segment record does not follow the curve"});
                        s.left = resolve_reg(it->second[1]);
                        s.right = resolve_reg(it->second[2]);
                        seg_rec.erase(it);
                    }
                }
                d.segments.push_back(s);
            }
        }
        for (const auto& [key, rec] : seg_rec)
            d.load_violations.push_back({"extra-segment", key.first, "record matches no curve segment"});
        if (j.contains("contact_generator") && !j.at("contact_generator").is_null()) {
            std::vector<int> cg;
            for (const auto& pid : j.at("contact_generator")) cg.push_back(resolve_pt(pid.get<std::string>()));
            d.contact = cg;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed .sfd: ") + e.what());
    }
    d.finalize();
    return d;
}

inline Diagram load_diagram(const std::string& path, const std::string& name) {
    return diagram_from_json(detail::parse_json_file(path), name);
}

// Canonical serialization: points, regions and segments in lexicographic id
// order, every cyclic curve list rotated to start at its smallest point id,
// segment records referencing positional curve ids.
inline ordered_json diagram_to_json(const Diagram& d) {
    ordered_json j;
    j["name"] = d.name;
    j["euler_char"] = d.euler_char;
    j["boundary_components"] = d.boundary_components;

    auto positional_id = [&](int c) {
        return (d.curves[c].is_alpha ? "a" : "b") +
               std::to_string(d.curves[c].is_alpha ? c : c - d.n_alpha);
    };
    auto curve_list = [&](bool alpha_family) {
        ordered_json fam = ordered_json::array();
        for (size_t c = 0; c < d.curves.size(); c++) {
            if (d.curves[c].is_alpha != alpha_family) continue;
            const auto& pts = d.curves[c].points;
            int n = (int)pts.size(), best = 0;
            for (int k = 1; k < n; k++)
                if (d.points[pts[k]].id < d.points[pts[best]].id) best = k;
            ordered_json lst = ordered_json::array();
            for (int k = 0; k < n; k++) lst.push_back(d.points[pts[(best + k) % n]].id);
            fam.push_back(lst);
        }
        return fam;
    };
    j["alpha"] = curve_list(true);
    j["beta"] = curve_list(false);

    std::vector<int> pt_order(d.points.size()), reg_order(d.regions.size());
    for (size_t i = 0; i < pt_order.size(); i++) pt_order[i] = (int)i;
    for (size_t i = 0; i < reg_order.size(); i++) reg_order[i] = (int)i;
    std::sort(pt_order.begin(), pt_order.end(),
              [&](int a, int b) { return d.points[a].id < d.points[b].id; });
    std::sort(reg_order.begin(), reg_order.end(),
              [&](int a, int b) { return d.regions[a].id < d.regions[b].id; });

    ordered_json pts = ordered_json::array();
    for (int pi : pt_order) {
        ordered_json p;
        p["id"] = d.points[pi].id;
        ordered_json sec = ordered_json::array();
        for (int s : d.points[pi].sectors) sec.push_back(d.regions[s].id);
        p["sectors"] = sec;
        pts.push_back(p);
    }
    j["points"] = pts;

    struct SegKey {
        std::string curve, from, to, left, right;
    };
    std::vector<SegKey> segs;
    for (const auto& s : d.segments)
        segs.push_back({positional_id(s.curve), d.points[s.from_pt].id, d.points[s.to_pt].id,
                        d.regions[s.left].id, d.regions[s.right].id});
    std::sort(segs.begin(), segs.end(), [](const SegKey& a, const SegKey& b) {
        return std::tie(a.curve, a.from, a.to) < std::tie(b.curve, b.from, b.to);
    });
    ordered_json sj = ordered_json::array();
    for (const auto& s : segs) {
        ordered_json rec;
        rec["curve"] = s.curve;
        rec["from"] = s.from;
        rec["to"] = s.to;
        rec["left"] = s.left;
        rec["right"] = s.right;
        sj.push_back(rec);
    }
    j["segments"] = sj;

    ordered_json rj = ordered_json::array();
    for (int ri : reg_order) {
        ordered_json r;
        r["id"] = d.regions[ri].id;
        r["chi"] = d.regions[ri].chi;
        r["meets_boundary"] = d.regions[ri].meets_boundary;
        rj.push_back(r);
    }
    j["regions"] = rj;

    if (d.contact) {
        ordered_json cg = ordered_json::array();
        for (int pi : *d.contact) cg.push_back(d.points[pi].id);
        j["contact_generator"] = cg;
    }
    return j;
}

inline void save_diagram(const Diagram& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << diagram_to_json(d).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// report serialization (field order fixed; timing deliberately omitted so
// output is byte-identical across runs)

inline ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["name"] = r.name;
    j["generator_count"] = r.generator_count;
    j["sfh_dimension"] = r.sfh_dimension;
    if (r.eh_is_cycle) j["eh_is_cycle"] = *r.eh_is_cycle;
    if (r.eh_trivial) j["eh_trivial"] = *r.eh_trivial;
    ordered_json diag;
    diag["balanced"] = r.diagnostics.balanced;
    diag["nice"] = r.diagnostics.nice;
    diag["admissible"] = r.diagnostics.admissible;
    diag["interior_regions"] = r.diagnostics.interior_regions;
    j["diagnostics"] = diag;
    return j;
}

inline std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "diagram: " << r.name << "\n";
    os << "generators: " << r.generator_count << "\n";
    os << "SFH dimension (GF(2)): " << r.sfh_dimension << "\n";
    if (r.eh_is_cycle) {
        os << "EH class: ";
        if (!*r.eh_is_cycle)
            os << "not a cycle\n";
        else if (*r.eh_trivial)
            os << "trivial (boundary)\n";
        else
            os << "nontrivial (generator candidate)\n";
    } else {
        os << "EH class: no contact generator\n";
    }
    os << "checks: balanced=" << (r.diagnostics.balanced ? "yes" : "no")
       << " nice=" << (r.diagnostics.nice ? "yes" : "no")
       << " admissible=" << (r.diagnostics.admissible ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace sfh
