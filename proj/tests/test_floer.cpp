#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "sfh/floer.hpp"

using namespace sfh;

// Permanent of the point-count matrix, brute force; cross-checks the
// generator enumeration.
static long long census_permanent(const Diagram& d) {
    int n = d.n_alpha;
    if (n == 0) return 1;
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (const auto& p : d.points) c[p.alpha_curve][p.beta_curve - n]++;
    std::vector<bool> used(n, false);
    std::function<long long(int)> rec = [&](int i) -> long long {
        if (i == n) return 1;
        long long s = 0;
        for (int j = 0; j < n; j++)
            if (!used[j] && c[i][j]) {
                used[j] = true;
                s += c[i][j] * rec(i + 1);
                used[j] = false;
            }
        return s;
    };
    return rec(0);
}

TEST_CASE("enumerate_generators") {
    SECTION("single point") {
        auto g = enumerate_generators(fixtures::punctured_torus());
        REQUIRE(g.size() == 1);
        REQUIRE(g[0] == Generator{0});
    }
    SECTION("empty families give the empty generator") {
        auto g = enumerate_generators(fixtures::empty_annulus());
        REQUIRE(g.size() == 1);
        REQUIRE(g[0].empty());
    }
    SECTION("grid has two matchings") {
        auto g = enumerate_generators(fixtures::torus_grid());
        REQUIRE(g.size() == 2);
        REQUIRE(g[0] == Generator{0, 3});
        REQUIRE(g[1] == Generator{1, 2});
    }
    SECTION("count equals the permanent of the census matrix") {
        for (auto d : {fixtures::punctured_torus(), fixtures::torus_grid(),
                       fixtures::two_bigon_tube(), fixtures::three_point_twist()})
            REQUIRE((long long)enumerate_generators(d).size() == census_permanent(d));
    }
}

TEST_CASE("connecting domains on the two-bigon tube") {
    Diagram d = fixtures::two_bigon_tube();
    Generator gxp = {0}, gxm = {1};
    auto doms = connecting_domains(d, gxm, gxp);
    REQUIRE(doms.size() == 2);
    for (auto& dom : doms) {
        REQUIRE(euler_measure(d, dom) == Rat(1, 2));
        REQUIRE(maslov_index(d, dom, gxm, gxp) == Rat(1));
    }
    REQUIRE(connecting_domains(d, gxp, gxm).empty());
    SECTION("oracle sweep agrees") {
        SearchOptions o;
        o.oracle = true;
        REQUIRE(connecting_domains(d, gxm, gxp, o) == doms);
        REQUIRE(connecting_domains(d, gxp, gxm, o).empty());
    }
    SECTION("family swap reverses the direction") {
        SearchOptions s;
        s.swapped = true;
        REQUIRE(connecting_domains(d, gxp, gxm, s) == doms);
        REQUIRE(connecting_domains(d, gxm, gxp, s).empty());
    }
}

TEST_CASE("two-bigon tube: trivial differential, dimension 2, nontrivial class") {
    Diagram d = fixtures::two_bigon_tube();
    REQUIRE(validate(d).empty());
    REQUIRE(check_balanced(d).balanced);
    REQUIRE(is_nice(d).nice);
    auto per = periodic_domains(d);
    REQUIRE(per.size() == 1);
    REQUIRE(check_admissibility(d));

    auto dm = differential(d);
    REQUIRE(dm.gens.size() == 2);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            REQUIRE_FALSE(dm.matrix.get(i, j));
    REQUIRE(sfh_dimension(dm) == 2);
    auto eh = eh_class(d, dm);
    REQUIRE(eh.is_cycle);
    REQUIRE_FALSE(eh.trivial);
}

TEST_CASE("three-point twist: the two bigons hit the contact generator") {
    Diagram d = fixtures::three_point_twist();
    REQUIRE(validate(d).empty());
    REQUIRE(check_balanced(d).balanced);
    REQUIRE(is_nice(d).nice);
    REQUIRE(check_admissibility(d));

    Generator gx = {0}, gp1 = {1}, gp2 = {2};
    REQUIRE(connecting_domains(d, gp1, gx).size() == 1);
    REQUIRE(connecting_domains(d, gp2, gx).size() == 1);
    REQUIRE(connecting_domains(d, gx, gp1).empty());
    REQUIRE(connecting_domains(d, gx, gp2).empty());
    REQUIRE(connecting_domains(d, gp1, gp2).empty());
    REQUIRE(connecting_domains(d, gp2, gp1).empty());

    auto dm = differential(d);
    REQUIRE(dm.gens.size() == 3);
    // Columns of p1 and p2 both map to x.
    REQUIRE(dm.matrix.get(0, 1));
    REQUIRE(dm.matrix.get(0, 2));
    REQUIRE(sfh_dimension(dm) == 1);
    auto eh = eh_class(d, dm);
    REQUIRE(eh.is_cycle);
    REQUIRE(eh.trivial);

    SECTION("swap transposes the matrix") {
        SearchOptions s;
        s.swapped = true;
        auto dms = differential(d, s);
        REQUIRE(dms.matrix == dm.matrix.transposed());
        REQUIRE(sfh_dimension(dms) == sfh_dimension(dm));
    }
    SECTION("oracle differential is identical") {
        SearchOptions o;
        o.oracle = true;
        auto dmo = differential(d, o);
        REQUIRE(dmo.matrix == dm.matrix);
    }
}

TEST_CASE("differential preconditions") {
    SECTION("non-nice diagram is rejected") {
        try {
            differential(fixtures::wave_sphere());
            FAIL("expected NOT_NICE");
        } catch (const ComputeError& e) {
            REQUIRE(e.code() == ErrorCode::NOT_NICE);
            REQUIRE(e.offenders() == std::vector<std::string>{"HN", "HS"});
        }
    }
    SECTION("inadmissible diagram is rejected") {
        try {
            differential(fixtures::torus_grid());
            FAIL("expected NOT_ADMISSIBLE");
        } catch (const ComputeError& e) {
            REQUIRE(e.code() == ErrorCode::NOT_ADMISSIBLE);
        }
    }
}

TEST_CASE("compute_report") {
    SECTION("punctured torus") {
        auto rep = compute_report(fixtures::punctured_torus());
        REQUIRE(rep.generator_count == 1);
        REQUIRE(rep.sfh_dimension == 1);
        REQUIRE(rep.eh_is_cycle == true);
        REQUIRE(rep.eh_trivial == false);
        REQUIRE(rep.diagnostics.balanced);
        REQUIRE(rep.diagnostics.nice);
        REQUIRE(rep.diagnostics.admissible);
    }
    SECTION("empty diagram: the empty generator carries the class") {
        auto rep = compute_report(fixtures::empty_annulus());
        REQUIRE(rep.generator_count == 1);
        REQUIRE(rep.sfh_dimension == 1);
        REQUIRE(rep.eh_is_cycle == true);
        REQUIRE(rep.eh_trivial == false);
    }
    SECTION("unbalanced diagram fails fast") {
        try {
            compute_report(fixtures::torus_grid());
            FAIL("expected NOT_BALANCED");
        } catch (const ComputeError& e) {
            REQUIRE(e.code() == ErrorCode::NOT_BALANCED);
        }
    }
    SECTION("no contact generator: no class verdict") {
        auto rep = compute_report(fixtures::punctured_torus(false));
        REQUIRE_FALSE(rep.eh_is_cycle.has_value());
        REQUIRE_FALSE(rep.eh_trivial.has_value());
    }
}
