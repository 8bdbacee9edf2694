#include "relhom/eclass.hpp"

#include <numeric>

namespace relhom {

ObjectRef functor_apply(const FunctorDesc& f, const ObjectRef& a) {
    if (f.kind == FunctorDesc::Kind::Identity) return a;
    auto* g = std::get_if<FinGrpObjPtr>(&a);
    if (!g) throw input_error("forgetful functor: expected a fingrp object");
    return PSetObject{(*g)->n};
}

Morphism functor_apply(const FunctorDesc& f, const Morphism& m) {
    if (f.kind == FunctorDesc::Kind::Identity) return m;
    auto* g = std::get_if<FinGrpMorphism>(&m);
    if (!g) throw input_error("forgetful functor: expected a fingrp morphism");
    return pset_morphism(PSetObject{g->dom->n}, PSetObject{g->cod->n}, g->map);
}

Verdict validate_functor(const FunctorDesc& f, const std::vector<ObjectRef>& sample) {
    Verdict v;
    for (const auto& a : sample) {
        ++v.instances_checked;
        if (!morphism_eq(functor_apply(f, identity_morphism(a)),
                         identity_morphism(functor_apply(f, a)))) {
            v.status = Status::Fails;
            v.detail = "identity not preserved";
            return v;
        }
    }
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& g : hom_set(a, b)) {
                ++v.instances_checked;
                // kernels preserved (the forgetful functor preserves finite limits)
                auto k = kernel(g);
                auto fk = kernel(functor_apply(f, g));
                if (obj_order(functor_apply(f, k.obj)) != obj_order(fk.obj)) {
                    v.status = Status::Fails;
                    v.detail = "kernel not preserved";
                    return v;
                }
                for (const auto& c : sample)
                    for (const auto& h : hom_set(b, c))
                        if (!morphism_eq(functor_apply(f, compose(h, g)),
                                         compose(functor_apply(f, h), functor_apply(f, g)))) {
                            v.status = Status::Fails;
                            v.detail = "composition not preserved";
                            return v;
                        }
            }
    return v;
}

std::string eclass_kind_name(EClassKind k) {
    switch (k) {
        case EClassKind::Iso: return "iso";
        case EClassKind::SplitEpi: return "split_epi";
        case EClassKind::RegularEpi: return "regular_epi";
        case EClassKind::NormalEpi: return "normal_epi";
        case EClassKind::All: return "all";
        case EClassKind::Explicit: return "explicit";
        case EClassKind::Predicate: return "predicate";
        case EClassKind::Intersection: return "intersection";
        case EClassKind::Preimage: return "preimage";
    }
    return "?";
}

EClass eclass_builtin(EClassKind k) {
    if (k == EClassKind::Explicit || k == EClassKind::Predicate ||
        k == EClassKind::Intersection || k == EClassKind::Preimage)
        throw input_error("eclass_builtin: not a builtin kind");
    EClass e;
    e.kind = k;
    return e;
}

EClass eclass_explicit(std::vector<Morphism> arrows) {
    EClass e;
    e.kind = EClassKind::Explicit;
    e.arrows = std::move(arrows);
    return e;
}

EClass eclass_predicate(std::string name) {
    EClass e;
    e.kind = EClassKind::Predicate;
    e.predicate = std::move(name);
    return e;
}

EClass eclass_intersection(EClass a, EClass b) {
    EClass e;
    e.kind = EClassKind::Intersection;
    e.e1 = std::make_shared<EClass>(std::move(a));
    e.e2 = std::make_shared<EClass>(std::move(b));
    return e;
}

EClass preimage_class(FunctorDesc f, EClass src, EClass target) {
    EClass e;
    e.kind = EClassKind::Preimage;
    e.functor = f;
    e.e1 = std::make_shared<EClass>(std::move(src));
    e.e2 = std::make_shared<EClass>(std::move(target));
    return e;
}

namespace {

bool predicate_member(const std::string& name, const Morphism& f) {
    // "kernel_coprime:<p>": surjections whose kernel order is coprime to p
    const std::string prefix = "kernel_coprime:";
    if (name.rfind(prefix, 0) == 0) {
        long p;
        try {
            p = std::stol(name.substr(prefix.size()));
        } catch (...) {
            throw input_error("predicate " + name + ": bad parameter");
        }
        if (p < 1) throw input_error("predicate " + name + ": bad parameter");
        if (!is_epi(f)) return false;
        long k = obj_order(kernel(f).obj);
        return std::gcd(k, p) == 1;
    }
    throw input_error("unknown predicate class: " + name);
}

}  // namespace

bool member(const EClass& e, const Morphism& f) {
    switch (e.kind) {
        case EClassKind::Iso: return is_iso(f);
        case EClassKind::SplitEpi: {
            auto s = find_section(f);
            return s.has_value();
        }
        case EClassKind::RegularEpi: return is_regular_epi(f);
        case EClassKind::NormalEpi: return is_normal_epi(f);
        case EClassKind::All: return true;
        case EClassKind::Explicit:
            for (const auto& a : e.arrows)
                if (morphism_eq(a, f)) return true;
            return false;
        case EClassKind::Predicate: return predicate_member(e.predicate, f);
        case EClassKind::Intersection: return member(*e.e1, f) && member(*e.e2, f);
        case EClassKind::Preimage:
            return member(*e.e1, f) && member(*e.e2, functor_apply(*e.functor, f));
    }
    throw input_error("unknown eclass kind");
}

Verdict validate_class(const EClass& e, const std::vector<ObjectRef>& objects) {
    Verdict v;
    v.bound = std::to_string(objects.size()) + " objects";
    if (e.kind != EClassKind::Explicit && e.kind != EClassKind::Predicate) return v;
    for (const auto& a : objects)
        for (const auto& b : objects)
            for (const auto& f : hom_set(a, b)) {
                if (!is_iso(f)) continue;
                ++v.instances_checked;
                if (!member(e, f)) {
                    v.status = Status::Fails;
                    v.detail = "isomorphism missing from the class";
                    Diagram w;
                    w.objects = {{"A", a}, {"B", b}};
                    w.arrows = {{"f", "A", "B", f}};
                    v.witness = w;
                    return v;
                }
            }
    return v;
}

}  // namespace relhom
