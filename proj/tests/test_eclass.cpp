#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relhom/eclass.hpp"

using namespace relhom;

namespace {

Mat m1x1(int v) {
    Mat m(1, 1);
    m.at(0, 0) = v;
    return m;
}

const FinAbObject z2{{2}}, z4{{4}};

}  // namespace

TEST_CASE("builtin membership") {
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    auto id2 = identity_morphism(ObjectRef{z2});
    CHECK(member(eclass_builtin(EClassKind::Iso), id2));
    CHECK(member(eclass_builtin(EClassKind::All), mod2));
    CHECK(member(eclass_builtin(EClassKind::RegularEpi), mod2));
    CHECK(member(eclass_builtin(EClassKind::NormalEpi), mod2));
    CHECK_FALSE(member(eclass_builtin(EClassKind::Iso), mod2));
    CHECK_FALSE(member(eclass_builtin(EClassKind::SplitEpi), mod2));
    // pointed-set collapse: split epi but not normal epi
    auto collapse = Morphism{pset_morphism(PSetObject{3}, PSetObject{2}, {0, 1, 1})};
    CHECK(member(eclass_builtin(EClassKind::SplitEpi), collapse));
    CHECK_FALSE(member(eclass_builtin(EClassKind::NormalEpi), collapse));
    // isos belong to every builtin kind
    for (auto k : {EClassKind::Iso, EClassKind::SplitEpi, EClassKind::RegularEpi,
                   EClassKind::NormalEpi, EClassKind::All})
        CHECK(member(eclass_builtin(k), id2));
    CHECK_THROWS_AS(eclass_builtin(EClassKind::Explicit), input_error);
}

TEST_CASE("explicit classes and validation") {
    auto id2 = identity_morphism(ObjectRef{z2});
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    auto e = eclass_explicit({id2, mod2});
    CHECK(member(e, id2));
    CHECK(member(e, mod2));
    CHECK_FALSE(member(e, identity_morphism(ObjectRef{z4})));
    // missing the identity of z4 -> fails validation over {z2, z4}
    std::vector<ObjectRef> objs{ObjectRef{z2}, ObjectRef{z4}};
    auto v = validate_class(e, objs);
    CHECK(v.status == Status::Fails);
    CHECK(v.witness.has_value());
    // the witness arrow is an iso outside the class
    CHECK(is_iso(v.witness->arrows[0].mor));
    CHECK_FALSE(member(e, v.witness->arrows[0].mor));
    // builtins validate by construction
    CHECK(validate_class(eclass_builtin(EClassKind::Iso), objs).status == Status::Holds);
    // all arrows of a table category form a valid explicit class
    auto cats = enumerate_categories(4);
    for (const auto& cat : cats) {
        std::vector<Morphism> all;
        for (int a = 0; a < cat->n_mor(); ++a) all.push_back(TableMorphismRef{cat, a});
        std::vector<ObjectRef> tobjs;
        for (int o = 0; o < cat->n_obj; ++o) tobjs.push_back(TableObjectRef{cat, o});
        CHECK(validate_class(eclass_explicit(all), tobjs).status == Status::Holds);
    }
}

TEST_CASE("predicate classes") {
    auto e3 = eclass_predicate("kernel_coprime:3");
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    CHECK(member(e3, mod2));  // kernel Z/2, coprime to 3
    FinAbObject z9{{9}}, z3{{3}};
    auto mod3 = Morphism{finab_morphism(z9, z3, m1x1(1))};
    CHECK_FALSE(member(eclass_predicate("kernel_coprime:3"), mod3));
    CHECK(member(eclass_predicate("kernel_coprime:2"), mod3));
    CHECK_FALSE(member(e3, Morphism{finab_morphism(z2, z4, m1x1(2))}));  // not epi
    CHECK_THROWS_AS(member(eclass_predicate("nope"), mod2), input_error);
    // contains all isos
    std::vector<ObjectRef> objs{ObjectRef{z2}, ObjectRef{z4}, ObjectRef{z9}};
    CHECK(validate_class(e3, objs).status == Status::Holds);
}

TEST_CASE("intersection") {
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    auto e = eclass_intersection(eclass_builtin(EClassKind::RegularEpi),
                                 eclass_predicate("kernel_coprime:3"));
    CHECK(member(e, mod2));
    auto e2 = eclass_intersection(eclass_builtin(EClassKind::RegularEpi),
                                  eclass_builtin(EClassKind::Iso));
    CHECK_FALSE(member(e2, mod2));
}

TEST_CASE("forgetful functor validates and preimage class works") {
    FunctorDesc forget{FunctorDesc::Kind::ForgetfulFinGrpToPSet};
    std::vector<ObjectRef> sample{fingrp_trivial(), fingrp_cyclic(2), fingrp_cyclic(4),
                                  fingrp_symmetric3()};
    CHECK(validate_functor(forget, sample).status == Status::Holds);

    // identity functor with target class All reduces to the source class
    FunctorDesc ident;
    auto mod2 = Morphism{finab_morphism(z4, z2, m1x1(1))};
    auto pre = preimage_class(ident, eclass_builtin(EClassKind::RegularEpi),
                              eclass_builtin(EClassKind::All));
    CHECK(member(pre, mod2) == member(eclass_builtin(EClassKind::RegularEpi), mod2));
    CHECK_FALSE(member(pre, Morphism{finab_morphism(z2, z4, m1x1(2))}));

    // Example 3.3 instance: RegularEpi cap F^{-1}(SplitEpi) on fingrp equals
    // the regular-epi class extensionally (finite pointed surjections split)
    auto cls = preimage_class(forget, eclass_builtin(EClassKind::RegularEpi),
                              eclass_builtin(EClassKind::SplitEpi));
    for (const auto& ga : fingrp_builtin_library())
        for (const auto& gb : fingrp_builtin_library())
            for (const auto& h : fingrp_homs(ga.group, gb.group)) {
                Morphism f{h};
                CHECK(member(cls, f) == member(eclass_builtin(EClassKind::RegularEpi), f));
            }
}
