#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qblock/rep.hpp"

using namespace qblock;

namespace {

struct Fixture {
    Algebra lam = make_dihedral_algebra(Gf(1, 0));
    Algebra hat = make_quaternion_algebra(Gf(1, 0));
};

Fixture& fx() {
    static Fixture f;
    return f;
}

std::vector<Rep> six_modules(const Algebra& a) {
    return {simple(a, 0),
            simple(a, 1),
            uniserial_module(a, {0, 1}),
            uniserial_module(a, {1, 0}),
            uniserial_module(a, {0, 0, 1}),
            uniserial_module(a, {1, 0, 0})};
}

}  // namespace

TEST_CASE("projective modules match the radical-layer tables") {
    Rep p0 = projective(fx().lam, 0), p1 = projective(fx().lam, 1);
    validate_rep(p0);
    validate_rep(p1);
    CHECK(p0.total_dim() == 12);
    CHECK(p1.total_dim() == 7);
    LoewyData l1 = loewy(p1);
    CHECK(l1.rad_layers == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {1, 0}, {0, 1}});
    LoewyData l0 = loewy(p0);
    CHECK(l0.rad_layers == std::vector<std::vector<int>>{{1, 0}, {1, 1}, {1, 1}, {2, 0}, {1, 1}, {1, 1}, {1, 0}});
    CHECK(loewy_diagram(l1) == "1\n0\n0\n1\n0\n0\n1\n");

    Rep q0 = projective(fx().hat, 0), q1 = projective(fx().hat, 1);
    validate_rep(q0);
    validate_rep(q1);
    CHECK(q0.total_dim() == 24);
    CHECK(q1.total_dim() == 14);
    CHECK(loewy(q0).length() == 13);
    CHECK(loewy(q1).length() == 13);
    CHECK(composition_counts(q0) == std::vector<int>{16, 8});
    CHECK(composition_counts(q1) == std::vector<int>{8, 6});
    // tops are simple: projectives are indecomposable
    CHECK(loewy(q0).rad_layers[0] == std::vector<int>{1, 0});
    CHECK(loewy(q1).rad_layers[0] == std::vector<int>{0, 1});
}

TEST_CASE("uniserial constructions and failures") {
    Rep m01 = uniserial_module(fx().hat, {0, 1});
    CHECK(m01.total_dim() == 2);
    Rep m001 = uniserial_module(fx().hat, {0, 0, 1});
    CHECK(m001.total_dim() == 3);
    CHECK(loewy(m001).rad_layers == std::vector<std::vector<int>>{{1, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(uniserial_module(fx().lam, {1, 1}), NoSuchUniserial);
    CHECK_THROWS_AS(uniserial_module(fx().hat, {1, 1}), NoSuchUniserial);
    // over the dihedral-type algebra too, where the extension space along
    // the chain is bigger but the uniserial is still unique
    Rep l001 = uniserial_module(fx().lam, {0, 0, 1});
    CHECK(l001.total_dim() == 3);
    CHECK(is_indecomposable(l001));
}

TEST_CASE("hom dimensions") {
    Rep s0 = simple(fx().lam, 0), s1 = simple(fx().lam, 1);
    CHECK(hom(s0, s1).dim() == 0);
    CHECK(hom(uniserial_module(fx().lam, {0, 0, 1}), uniserial_module(fx().lam, {0, 0, 1})).dim() == 1);
    CHECK_THROWS_AS(hom(s0, simple(fx().hat, 0)), AlgebraMismatch);
}

TEST_CASE("hom against projectives counts composition multiplicities") {
    for (const Algebra* a : {&fx().lam, &fx().hat}) {
        Rep p0 = projective(*a, 0), p1 = projective(*a, 1);
        for (const Rep& m : six_modules(*a)) {
            CHECK(hom(p0, m).dim() == m.dims[0]);
            CHECK(hom(p1, m).dim() == m.dims[1]);
        }
    }
}

TEST_CASE("stable hom and the trace-vanishing shadow") {
    Rep p0 = projective(fx().lam, 0);
    CHECK(stable_hom(p0, p0).dim == 0);
    CHECK(stable_hom(uniserial_module(fx().lam, {0, 1}), uniserial_module(fx().lam, {0, 1})).dim == 1);
    // End over the small algebra = stable End over the big one, module by module
    auto lam_six = six_modules(fx().lam);
    for (const Rep& m : lam_six) {
        Rep infl = inflate(m, fx().hat);
        CHECK(hom(m, m).dim() == 1);
        CHECK(stable_hom(infl, infl).dim == 1);
    }
}

TEST_CASE("syzygies of the simples") {
    Rep x = syzygy(simple(fx().lam, 1));
    CHECK(x.total_dim() == 6);
    CHECK(is_isomorphic(x, uniserial_module(fx().lam, {0, 0, 1, 0, 0, 1})));
    CHECK(syzygy(projective(fx().lam, 0)).total_dim() == 0);
    Rep o0 = syzygy(simple(fx().lam, 0));
    CHECK(o0.total_dim() == 11);  // rad P0
}

TEST_CASE("second syzygy of the length-3 uniserial over the quaternion-type algebra") {
    Rep m = uniserial_module(fx().hat, {0, 0, 1});
    Rep o1 = syzygy(m);
    CHECK(o1.total_dim() == 21);
    Rep o2 = syzygy(o1);
    CHECK(o2.total_dim() == 17);
    CHECK(composition_counts(o2) == std::vector<int>{10, 7});
    CHECK(hom(o2, m).dim() == 2);
    CHECK(stable_hom(o2, m).dim == 1);
}

TEST_CASE("cosyzygy mirrors for the opposite-socle module") {
    Rep m = uniserial_module(fx().hat, {1, 0, 0});
    Rep oi2 = cosyzygy(cosyzygy(m));
    CHECK(oi2.total_dim() == 17);
    CHECK(hom(m, oi2).dim() == 2);
    CHECK(stable_hom(m, oi2).dim == 1);
}

TEST_CASE("syzygy and cosyzygy are mutually inverse on the classified modules") {
    for (const Algebra* a : {&fx().lam, &fx().hat})
        for (const Rep& m : six_modules(*a)) {
            CHECK(is_isomorphic(cosyzygy(syzygy(m)), m));
            CHECK(is_isomorphic(syzygy(cosyzygy(m)), m));
        }
}

TEST_CASE("ext dimensions between simples count arrows") {
    for (const Algebra* a : {&fx().lam, &fx().hat}) {
        CHECK(ext_dim(simple(*a, 0), simple(*a, 0), 1) == 1);
        CHECK(ext_dim(simple(*a, 0), simple(*a, 1), 1) == 1);
        CHECK(ext_dim(simple(*a, 1), simple(*a, 0), 1) == 1);
        CHECK(ext_dim(simple(*a, 1), simple(*a, 1), 1) == 0);
    }
}

TEST_CASE("self-extensions of the classified modules") {
    for (const Algebra* a : {&fx().lam, &fx().hat}) {
        CHECK(ext_dim(uniserial_module(*a, {0, 1}), uniserial_module(*a, {0, 1}), 1) == 1);
        CHECK(ext_dim(uniserial_module(*a, {1, 0}), uniserial_module(*a, {1, 0}), 1) == 1);
        CHECK(ext_dim(uniserial_module(*a, {0, 0, 1}), uniserial_module(*a, {0, 0, 1}), 1) == 1);
        CHECK(ext_dim(uniserial_module(*a, {1, 0, 0}), uniserial_module(*a, {1, 0, 0}), 1) == 1);
    }
}

TEST_CASE("second self-extension over the quaternion-type algebra is one-dimensional") {
    CHECK(ext_dim(uniserial_module(fx().hat, {0, 0, 1}), uniserial_module(fx().hat, {0, 0, 1}), 2) == 1);
    CHECK(ext_dim(uniserial_module(fx().hat, {1, 0, 0}), uniserial_module(fx().hat, {1, 0, 0}), 2) == 1);
}

TEST_CASE("no first extension of the big uniserial against the small one") {
    Rep x = uniserial_module(fx().lam, {0, 0, 1, 0, 0, 1});
    CHECK(ext_dim(x, uniserial_module(fx().lam, {0, 0, 1}), 1) == 0);
    CHECK(ext_dim(x, x, 1) == 0);
}

TEST_CASE("ext via syzygies against the brute-force oracle on k[x]/(x^2)") {
    Quiver q{1, {{"x", 0, 0}}};
    RelationSet r;
    r.relations.push_back({{{parse_math_word(q, "xx"), Gf::one(1)}}});
    Algebra a(q, r, 10, 1, std::vector<int>{2});
    Rep k = simple(a, 0);
    // oracle: enumerate every 2x2 nilpotent action, count isomorphism
    // classes of the resulting modules (expected: split and one non-split)
    std::vector<Rep> classes;
    for (unsigned bits = 0; bits < 16; ++bits) {
        Mat n(2, 2, 1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) n.set(i, j, (bits >> (2 * i + j)) & 1);
        if (!(n * n).is_zero()) continue;
        Rep e;
        e.alg = &a;
        e.dims = {2};
        e.act = {n};
        bool fresh = true;
        for (const Rep& c : classes)
            if (is_isomorphic(c, e)) {
                fresh = false;
                break;
            }
        if (fresh) classes.push_back(e);
    }
    CHECK(classes.size() == 2);
    CHECK(ext_dim(k, k, 1) == static_cast<int>(classes.size()) - 1);
}

TEST_CASE("loewy layer totals equal composition counts") {
    for (const Algebra* a : {&fx().lam, &fx().hat}) {
        std::vector<Rep> zoo = six_modules(*a);
        zoo.push_back(projective(*a, 0));
        zoo.push_back(projective(*a, 1));
        for (const Rep& m : zoo) {
            LoewyData l = loewy(m);
            std::vector<int> tot(m.dims.size(), 0);
            for (const auto& lay : l.rad_layers)
                for (size_t v = 0; v < lay.size(); ++v) tot[v] += lay[v];
            CHECK(tot == composition_counts(m));
            std::vector<int> tot2(m.dims.size(), 0);
            for (const auto& lay : l.soc_layers)
                for (size_t v = 0; v < lay.size(); ++v) tot2[v] += lay[v];
            CHECK(tot2 == composition_counts(m));
            CHECK(l.soc_layers.size() == l.rad_layers.size());
        }
    }
}

TEST_CASE("simple modules have a one-layer filtration") {
    LoewyData l = loewy(simple(fx().lam, 0));
    CHECK(l.rad_layers == std::vector<std::vector<int>>{{1, 0}});
}

TEST_CASE("isomorphism and indecomposability checks") {
    Rep m01 = uniserial_module(fx().lam, {0, 1});
    Rep m10 = uniserial_module(fx().lam, {1, 0});
    CHECK(!is_isomorphic(m01, m10));
    CHECK(is_isomorphic(m01, m01));
    CHECK(is_indecomposable(uniserial_module(fx().lam, {0, 0, 1})));
    Rep s0 = simple(fx().lam, 0);
    CHECK(!is_indecomposable(direct_sum(s0, s0)));
    CHECK(is_indecomposable(projective(fx().lam, 1)));
}

TEST_CASE("inflation: the dihedral-type uniserials inflate to the quaternion-type ones") {
    Rep m = inflate(uniserial_module(fx().lam, {0, 1}), fx().hat);
    CHECK(is_isomorphic(m, uniserial_module(fx().hat, {0, 1})));
    Rep m3 = inflate(uniserial_module(fx().lam, {1, 0, 0}), fx().hat);
    CHECK(is_isomorphic(m3, uniserial_module(fx().hat, {1, 0, 0})));
}
