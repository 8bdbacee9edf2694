#pragma once

#include <memory>

#include "relhom/category.hpp"

namespace relhom {

// Functors usable in preimage classes.
struct FunctorDesc {
    enum class Kind { Identity, ForgetfulFinGrpToPSet };
    Kind kind = Kind::Identity;
};

ObjectRef functor_apply(const FunctorDesc& f, const ObjectRef& a);
Morphism functor_apply(const FunctorDesc& f, const Morphism& m);
// identity/composition laws and kernel preservation on sampled homs
Verdict validate_functor(const FunctorDesc& f, const std::vector<ObjectRef>& sample);

enum class EClassKind {
    Iso,
    SplitEpi,
    RegularEpi,
    NormalEpi,
    All,
    Explicit,
    Predicate,
    Intersection,
    Preimage
};
std::string eclass_kind_name(EClassKind k);

struct EClass;
using EClassPtr = std::shared_ptr<const EClass>;

struct EClass {
    EClassKind kind = EClassKind::All;
    std::vector<Morphism> arrows;  // Explicit
    std::string predicate;         // Predicate, e.g. "kernel_coprime:3"
    EClassPtr e1, e2;              // Intersection; Preimage uses e1 on the source
    std::optional<FunctorDesc> functor;  // Preimage: f in e1 and F(f) in e2
};

EClass eclass_builtin(EClassKind k);
EClass eclass_explicit(std::vector<Morphism> arrows);
EClass eclass_predicate(std::string name);
EClass eclass_intersection(EClass a, EClass b);
// Example 3.3: E cap F^{-1}(E'), membership f -> member(E,f) && member(E',F(f))
EClass preimage_class(FunctorDesc f, EClass e, EClass e_target);

// exact membership; propagates missing_limit_error / budget_error from the
// underlying predicates
bool member(const EClass& e, const Morphism& f);

// for Explicit/Predicate kinds: every isomorphism between the given objects
// must belong to the class; builtins hold by construction
Verdict validate_class(const EClass& e, const std::vector<ObjectRef>& objects);

}  // namespace relhom
