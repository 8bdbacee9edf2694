#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "relhom/pset.hpp"

using namespace relhom;

TEST_CASE("kernel, cokernel, collapse example") {
    // collapse {*,a,b} -> {*,c}, a,b |-> c
    auto collapse = pset_morphism(PSetObject{3}, PSetObject{2}, {0, 1, 1});
    auto k = pset_kernel(collapse);
    CHECK(k.obj.size == 1);  // only * maps to *
    auto c = pset_cokernel(collapse);
    CHECK(c.obj.size == 1);  // image is everything
    CHECK(pset_kernel(pset_identity(PSetObject{4})).obj.size == 1);
    auto kz = pset_kernel(pset_zero(PSetObject{4}, PSetObject{3}));
    CHECK(kz.obj.size == 4);
}

TEST_CASE("cokernel keeps non-image elements with least-index renumbering") {
    // f : {*,x} -> {*,a,b,c}, x |-> b
    auto f = pset_morphism(PSetObject{2}, PSetObject{4}, {0, 2});
    auto c = pset_cokernel(f);
    CHECK(c.obj.size == 3);
    CHECK(c.proj.map == std::vector<int>{0, 1, 0, 2});
}

TEST_CASE("product and pairing") {
    auto p = pset_product(PSetObject{2}, PSetObject{3});
    CHECK(p.obj.size == 6);
    auto u = pset_morphism(PSetObject{2}, PSetObject{2}, {0, 1});
    auto v = pset_morphism(PSetObject{2}, PSetObject{3}, {0, 2});
    auto t = pset_pair(u, v);
    CHECK(pset_compose(p.p1, t) == u);
    CHECK(pset_compose(p.p2, t) == v);
}

TEST_CASE("hom enumeration is exhaustive and basepoint preserving") {
    auto homs = pset_homs(PSetObject{3}, PSetObject{3});
    CHECK(homs.size() == 9);
    std::set<std::vector<int>> seen;
    for (const auto& h : homs) {
        CHECK(h.map[0] == 0);
        seen.insert(h.map);
    }
    CHECK(seen.size() == 9);
    CHECK(pset_homs(PSetObject{1}, PSetObject{5}).size() == 1);
}

TEST_CASE("the split-epi short-five counterexample data exists at size 3") {
    // A = {*,x,y} -> B = {*,b} with x,y |-> b; section b |-> x
    auto f = pset_morphism(PSetObject{3}, PSetObject{2}, {0, 1, 1});
    auto s = pset_morphism(PSetObject{2}, PSetObject{3}, {0, 1});
    CHECK(pset_compose(f, s) == pset_identity(PSetObject{2}));
    CHECK(pset_kernel(f).obj.size == 1);
    // A' = {*,z} -> B iso, zero kernel too; w collapses x,y to z, not injective
    auto fp = pset_morphism(PSetObject{2}, PSetObject{2}, {0, 1});
    CHECK(pset_kernel(fp).obj.size == 1);
    auto w = pset_morphism(PSetObject{3}, PSetObject{2}, {0, 1, 1});
    CHECK(pset_compose(fp, w) == f);
}
