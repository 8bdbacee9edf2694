#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relhom/axioms.hpp"

using namespace relhom;

namespace {

Mat m1x1(int v) {
    Mat m(1, 1);
    m.at(0, 0) = v;
    return m;
}

const FinAbObject z2{{2}}, z4{{4}};

}  // namespace

TEST_CASE("axiom names round-trip") {
    for (auto id : all_axioms()) {
        auto back = parse_axiom_id(axiom_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(parse_axiom_id("2.2e").has_value());
    CHECK(all_axioms().size() == kAxiomCount);
}

TEST_CASE("views enumerate the expected hom sets") {
    auto v = make_view_finab(4);
    CHECK(v.objects.size() == 5);  // 0, Z/2, Z/3, Z/4, Z/2+Z/2
    CHECK(v.morphism_count > 0);
    long total = 0;
    for (size_t i = 0; i < v.objects.size(); ++i)
        for (size_t j = 0; j < v.objects.size(); ++j) {
            CHECK(v.homs[i][j].size() == hom_set(v.objects[i], v.objects[j]).size());
            total += (long)v.homs[i][j].size();
        }
    CHECK(total == v.morphism_count);

    auto vt = make_view_table(enumerate_categories(1).at(0));
    CHECK(vt.objects.size() == 1);
    CHECK(vt.morphism_count == 1);
}

TEST_CASE("is_kernel_morphism") {
    auto times2 = Morphism{finab_morphism(z2, z4, m1x1(2))};
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    CHECK(is_kernel_morphism(times2, mod2));
    // the identity of Z/4 is not a kernel of mod2, and f k != 0 is rejected
    CHECK_FALSE(is_kernel_morphism(identity_morphism(ObjectRef{z4}), mod2));
    auto id2 = identity_morphism(ObjectRef{z2});
    CHECK(is_kernel_morphism(id2, zero_morphism(ObjectRef{z2}, ObjectRef{z4})));
    CHECK_FALSE(is_kernel_morphism(mod2, mod2));
}

TEST_CASE("finab with regular epis satisfies every axiom") {
    auto v = make_view_finab(6);
    auto e = eclass_builtin(EClassKind::RegularEpi);
    for (auto id : all_axioms()) {
        auto ver = check_axiom(v, e, id);
        INFO("axiom ", axiom_name(id), ": ", ver.detail);
        CHECK(ver.status == Status::Holds);
        CHECK(ver.instances_checked > 0);
    }
}

TEST_CASE("iso class satisfies every axiom on small views") {
    auto e = eclass_builtin(EClassKind::Iso);
    for (auto v : {make_view_finab(4), make_view_pset(3)})
        for (auto id : all_axioms()) {
            auto ver = check_axiom(v, e, id);
            INFO("axiom ", axiom_name(id), ": ", ver.detail);
            CHECK(ver.status == Status::Holds);
        }
}

TEST_CASE("finab with all morphisms fails axiom b, witness rechecks") {
    auto v = make_view_finab(4);
    auto e = eclass_builtin(EClassKind::All);
    auto ver = check_axiom(v, e, AxiomId::A2_1b);
    REQUIRE(ver.status == Status::Fails);
    REQUIRE(ver.witness.has_value());
    const auto& f = ver.witness->find_arrow("f")->mor;
    CHECK_FALSE(is_normal_epi(f));
    CHECK(diagram_commutes(*ver.witness).status == Status::Holds);
    auto re = recheck_axiom(v, e, AxiomId::A2_1b, *ver.witness);
    CHECK(re.status == Status::Fails);
    // the same witness is vacuous for the regular-epi class
    auto re2 = recheck_axiom(v, eclass_builtin(EClassKind::RegularEpi), AxiomId::A2_1b,
                             *ver.witness);
    CHECK(re2.status == Status::Inapplicable);
    CHECK(search_counterexample(v, e, AxiomId::A2_1b).has_value());
    CHECK_FALSE(search_counterexample(v, eclass_builtin(EClassKind::RegularEpi), AxiomId::A2_1b)
                    .has_value());
}

TEST_CASE("pset with split epis fails the short five axiom") {
    auto v = make_view_pset(3);
    auto e = eclass_builtin(EClassKind::SplitEpi);
    auto ver = check_axiom(v, e, AxiomId::A2_1c);
    REQUIRE(ver.status == Status::Fails);
    REQUIRE(ver.witness.has_value());
    const auto& w = ver.witness->find_arrow("w")->mor;
    CHECK_FALSE(is_iso(w));
    CHECK(diagram_commutes(*ver.witness).status == Status::Holds);
    CHECK(recheck_axiom(v, e, AxiomId::A2_1c, *ver.witness).status == Status::Fails);
    // axiom g fails on the same class too: the comparison u below lands in E
    auto vg = check_axiom(v, e, AxiomId::A2_1g);
    CHECK(vg.status == Status::Fails);
    CHECK(recheck_axiom(v, e, AxiomId::A2_1g, *vg.witness).status == Status::Fails);
}

TEST_CASE("pset with split epis fails axiom b but satisfies a, d, e") {
    auto v = make_view_pset(3);
    auto e = eclass_builtin(EClassKind::SplitEpi);
    CHECK(check_axiom(v, e, AxiomId::A2_1b).status == Status::Fails);
    CHECK(check_axiom(v, e, AxiomId::A2_1a).status == Status::Holds);
    CHECK(check_axiom(v, e, AxiomId::A2_1d).status == Status::Holds);
    CHECK(check_axiom(v, e, AxiomId::A2_1e).status == Status::Holds);
}

TEST_CASE("fingrp with regular epis satisfies every axiom") {
    auto v = make_view_fingrp(fingrp_builtin_library(), 8);
    auto e = eclass_builtin(EClassKind::RegularEpi);
    for (auto id : all_axioms()) {
        auto ver = check_axiom(v, e, id);
        INFO("axiom ", axiom_name(id), ": ", ver.detail);
        CHECK(ver.status == Status::Holds);
    }
}

TEST_CASE("explicit class missing a composite fails axiom d") {
    // E = isos plus mod2: Z/4 -> Z/2 but not mod2 . id, closed check is fine;
    // add times2 followed by mod4->2... simplest: E = {isos, mod4to2, mod2to1}
    // without the composite Z/4 -> 0
    auto v = make_view_finab(4);
    FinAbObject z1{{}};
    std::vector<Morphism> arrows;
    for (const auto& a : v.objects)
        for (const auto& b : v.objects)
            for (const auto& f : hom_set(a, b))
                if (is_iso(f)) arrows.push_back(f);
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    auto to1 = zero_morphism(ObjectRef{z2}, ObjectRef{z1});
    arrows.push_back(mod2);
    arrows.push_back(to1);
    auto e = eclass_explicit(arrows);
    auto ver = check_axiom(v, e, AxiomId::A2_1d);
    REQUIRE(ver.status == Status::Fails);
    CHECK(recheck_axiom(v, e, AxiomId::A2_1d, *ver.witness).status == Status::Fails);
    // and axiom e fails too: Z/4 -> 0 is not in E but factors oddly; check
    // against an independent evaluation of the witness
    auto ve = check_axiom(v, e, AxiomId::A2_1e);
    if (ve.status == Status::Fails)
        CHECK(recheck_axiom(v, e, AxiomId::A2_1e, *ve.witness).status == Status::Fails);
}

TEST_CASE("short five instance checker") {
    // pointed-set rows 2 -> 4 -> 2 sharing borders, with a non-injective w
    PSetObject K{2}, A{4}, B{2};
    auto k = Morphism{pset_morphism(K, A, {0, 1})};
    auto f = Morphism{pset_morphism(A, B, {0, 0, 1, 1})};
    auto kp = k;
    auto fp = f;
    auto all = eclass_builtin(EClassKind::All);

    Diagram d;
    d.objects = {{"K", K}, {"A", A}, {"A'", A}, {"B", B}};
    d.arrows = {{"k", "K", "A", k},
                {"f", "A", "B", f},
                {"k'", "K", "A'", kp},
                {"f'", "A'", "B", fp},
                {"w", "A", "A'", Morphism{pset_morphism(A, A, {0, 1, 2, 2})}}};
    auto ver = check_short_five_instance(d, all);
    CHECK(ver.status == Status::Fails);

    d.arrows[4].mor = identity_morphism(ObjectRef{A});
    CHECK(check_short_five_instance(d, all).status == Status::Holds);

    // hypothesis failures are named
    CHECK_THROWS_AS(check_short_five_instance(d, eclass_builtin(EClassKind::Iso)),
                    hypothesis_error);
    d.arrows[4].mor = Morphism{pset_morphism(A, A, {0, 0, 2, 3})};  // breaks w k = k'
    CHECK_THROWS_AS(check_short_five_instance(d, all), hypothesis_error);
    d.arrows[0].mor = Morphism{pset_morphism(K, A, {0, 2})};  // k no longer ker f
    d.arrows[4].mor = identity_morphism(ObjectRef{A});
    d.arrows[2].mor = d.arrows[0].mor;
    CHECK_THROWS_AS(check_short_five_instance(d, all), hypothesis_error);
    Diagram empty;
    CHECK_THROWS_AS(check_short_five_instance(empty, all), input_error);
}

TEST_CASE("theorems hold over the table corpus and concrete backends") {
    std::vector<std::pair<std::string, AxiomStatuses>> results;
    auto corpus = tablecat_corpus(6);
    CHECK(corpus.size() > 1);
    bool some_failure = false;
    for (const auto& entry : corpus) {
        auto st = check_all_axioms(entry.view, entry.cls);
        for (auto s : st) some_failure |= (s.status == Status::Fails);
        results.emplace_back(entry.name, st);
    }
    CHECK(some_failure);  // the corpus is not vacuous

    results.emplace_back("finab4/regular", check_all_axioms(make_view_finab(4),
                                                            eclass_builtin(EClassKind::RegularEpi)));
    results.emplace_back("finab4/all",
                         check_all_axioms(make_view_finab(4), eclass_builtin(EClassKind::All)));
    results.emplace_back("pset3/split", check_all_axioms(make_view_pset(3),
                                                         eclass_builtin(EClassKind::SplitEpi)));
    results.emplace_back("pset3/iso",
                         check_all_axioms(make_view_pset(3), eclass_builtin(EClassKind::Iso)));

    for (auto t : all_theorems()) {
        auto ver = verify_implication(results, t);
        INFO("theorem ", theorem_name(t), ": ", ver.detail);
        CHECK(ver.status == Status::Holds);
        CHECK(ver.instances_checked == (long)results.size());
    }
}
