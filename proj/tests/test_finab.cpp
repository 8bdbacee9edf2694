#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "relhom/finab.hpp"

using namespace relhom;

namespace {

FinAbObject Z(long n) { return n == 1 ? FinAbObject{} : FinAbObject{{Int(n)}}; }

Mat make(int r, int c, std::initializer_list<long> vals) {
    Mat m(r, c);
    int i = 0;
    for (long v : vals) m.a[i++] = v;
    return m;
}

// element-enumeration oracle: image and kernel as index sets
std::set<long> image_set(const FinAbMorphism& f) {
    std::set<long> s;
    for (long i = 0; i < finab_order_long(f.dom); ++i) s.insert(finab_apply(f, i));
    return s;
}
std::set<long> kernel_set(const FinAbMorphism& f) {
    std::set<long> s;
    for (long i = 0; i < finab_order_long(f.dom); ++i)
        if (finab_apply(f, i) == 0) s.insert(i);
    return s;
}

}  // namespace

TEST_CASE("well-definedness congruence") {
    CHECK(finab_hom_well_defined(make(1, 1, {1}), Z(4), Z(2)));
    CHECK(!finab_hom_well_defined(make(1, 1, {1}), Z(2), Z(4)));
    CHECK(finab_hom_well_defined(make(1, 1, {0}), Z(2), Z(4)));
    CHECK_THROWS_AS(finab_morphism(Z(2), Z(4), make(1, 1, {1})), input_error);
}

TEST_CASE("compose mod-2 after times-2 is zero") {
    auto times2 = finab_morphism(Z(2), Z(4), make(1, 1, {2}));
    auto mod2 = finab_morphism(Z(4), Z(2), make(1, 1, {1}));
    auto c = finab_compose(mod2, times2);
    CHECK(c == finab_zero(Z(2), Z(2)));
    for (long i = 0; i < 2; ++i) CHECK(finab_apply(c, i) == finab_apply(mod2, finab_apply(times2, i)));
    auto idB = finab_identity(Z(4));
    CHECK(finab_compose(idB, times2) == times2);
    CHECK_THROWS_AS(finab_compose(mod2, mod2), input_error);
}

TEST_CASE("kernel of mod-2 on Z/4") {
    auto mod2 = finab_morphism(Z(4), Z(2), make(1, 1, {1}));
    auto k = finab_kernel(mod2);
    CHECK(k.obj == Z(2));
    CHECK(k.incl.m == make(1, 1, {2}));  // generator goes to 2
    CHECK(finab_kernel(finab_identity(Z(6))).obj == Z(1));
    auto kz = finab_kernel(finab_zero(Z(4), Z(2)));
    CHECK(kz.obj == Z(4));
    // incl is an isomorphism onto A for a zero morphism
    CHECK(image_set(kz.incl).size() == 4);
}

TEST_CASE("cokernel of times-2 into Z/4") {
    auto times2 = finab_morphism(Z(2), Z(4), make(1, 1, {2}));
    auto c = finab_cokernel(times2);
    CHECK(c.obj == Z(2));
    CHECK(c.proj.m == make(1, 1, {1}));
    CHECK(finab_cokernel(finab_identity(Z(6))).obj == Z(1));
}

TEST_CASE("hom enumeration counts") {
    CHECK(finab_homs(Z(2), Z(2)).size() == 2);
    CHECK(finab_homs(Z(4), Z(2)).size() == 2);
    CHECK(finab_homs(Z(2), Z(4)).size() == 2);
    CHECK(finab_homs(Z(1), Z(8)).size() == 1);
    CHECK(finab_homs(FinAbObject{{2, 2}}, FinAbObject{{2, 2}}).size() == 16);
    for (const auto& f : finab_homs(Z(6), Z(4)))
        CHECK(finab_hom_well_defined(f.m, f.dom, f.cod));
}

TEST_CASE("element enumeration of Z/2+Z/2") {
    FinAbObject v{{2, 2}};
    CHECK(finab_order_long(v) == 4);
    std::set<std::vector<Int>> seen;
    for (long i = 0; i < 4; ++i) {
        auto t = finab_decode(v, i);
        CHECK(finab_encode(v, t) == i);
        seen.insert(t);
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("object enumeration") {
    auto objs = finab_objects(8);
    // 1, 2, 3, 4, 2+2, 5, 6, 7, 8, 2+4, 2+2+2
    CHECK(objs.size() == 11);
    for (const auto& o : objs) {
        CHECK(o.order() <= 8);
        for (size_t i = 0; i + 1 < o.factors.size(); ++i)
            CHECK(o.factors[i + 1] % o.factors[i] == 0);
    }
}

TEST_CASE("normalization of non-canonical presentations") {
    // Z/4 + Z/9 ~= Z/36
    auto p = finab_normalize(2, mat_diag({Int(4), Int(9)}));
    CHECK(p.obj == Z(36));
    // to_canon then from_canon is the identity mod the presentation
    Mat round = mat_mul(p.to_canon, p.from_canon);
    for (int i = 0; i < p.obj.rank(); ++i)
        CHECK(floor_mod(round.at(i, i), p.obj.factors[i]) == 1);
    auto q = finab_normalize(3, mat_diag({Int(1), Int(2), Int(6)}));
    CHECK(q.obj == FinAbObject{{2, 6}});
}

TEST_CASE("kernel and cokernel satisfy their universal properties (enumerated)") {
    std::vector<FinAbMorphism> samples;
    for (const auto& a : finab_objects(8))
        for (const auto& b : finab_objects(8)) {
            auto homs = finab_homs(a, b);
            for (size_t i = 0; i < homs.size(); i += std::max<size_t>(1, homs.size() / 7))
                samples.push_back(homs[i]);
        }
    auto small = finab_objects(8);
    for (const auto& f : samples) {
        auto ker = finab_kernel(f);
        // incl is mono and f . incl = 0
        CHECK(image_set(ker.incl).size() == static_cast<size_t>(finab_order_long(ker.obj)));
        CHECK(finab_compose(f, ker.incl) == finab_zero(ker.obj, f.cod));
        CHECK(image_set(ker.incl) == kernel_set(f));
        // |dom| = |ker| * |im|
        CHECK(finab_order_long(f.dom) ==
              finab_order_long(ker.obj) * static_cast<long>(image_set(f).size()));

        auto cok = finab_cokernel(f);
        CHECK(finab_compose(cok.proj, f) == finab_zero(f.dom, cok.obj));
        CHECK(image_set(cok.proj).size() == static_cast<size_t>(finab_order_long(cok.obj)));
        CHECK(finab_order_long(f.cod) ==
              finab_order_long(cok.obj) * static_cast<long>(image_set(f).size()));
    }
    // universal property of the kernel against every competitor cone
    auto mod2 = finab_morphism(Z(4), Z(2), make(1, 1, {1}));
    auto times3 = finab_morphism(Z(9), Z(3), make(1, 1, {3}));
    for (const auto& f : {mod2, times3}) {
        auto ker = finab_kernel(f);
        for (const auto& x : small) {
            for (const auto& t : finab_homs(x, f.dom)) {
                if (!(finab_compose(f, t) == finab_zero(x, f.cod))) continue;
                int mediating = 0;
                for (const auto& u : finab_homs(x, ker.obj))
                    if (finab_compose(ker.incl, u) == t) ++mediating;
                CHECK(mediating == 1);
            }
        }
    }
}

TEST_CASE("product projections and pairing") {
    auto pr = finab_product(Z(2), Z(3));
    CHECK(pr.obj == Z(6));
    auto u = finab_morphism(Z(6), Z(2), make(1, 1, {1}));
    auto v = finab_morphism(Z(6), Z(3), make(1, 1, {1}));
    auto t = finab_pair(u, v);
    CHECK(finab_compose(pr.p1, t) == u);
    CHECK(finab_compose(pr.p2, t) == v);
    // pairing the projections gives the identity
    auto tid = finab_pair(pr.p1, pr.p2);
    CHECK(tid == finab_identity(pr.obj));
}
