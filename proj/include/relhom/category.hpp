#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relhom/finab.hpp"
#include "relhom/fingrp.hpp"
#include "relhom/pset.hpp"
#include "relhom/tablecat.hpp"

namespace relhom {

enum class BackendKind { FinAb, PSet, FinGrp, Table };
std::string backend_name(BackendKind k);

// Table-category objects and arrows carry their ambient category.
struct TableObjectRef {
    TableCatPtr cat;
    int obj = 0;
};
struct TableMorphismRef {
    TableCatPtr cat;
    int arrow = 0;
};

using ObjectRef = std::variant<FinAbObject, PSetObject, FinGrpObjPtr, TableObjectRef>;
using Morphism = std::variant<FinAbMorphism, PSetMorphism, FinGrpMorphism, TableMorphismRef>;

BackendKind backend_of(const ObjectRef& a);
BackendKind backend_of(const Morphism& f);

bool object_eq(const ObjectRef& a, const ObjectRef& b);
bool morphism_eq(const Morphism& f, const Morphism& g);

ObjectRef dom(const Morphism& f);
ObjectRef cod(const Morphism& f);

bool is_zero_object(const ObjectRef& a);
// the zero object of the same category as a
ObjectRef zero_object_like(const ObjectRef& a);
Morphism identity_morphism(const ObjectRef& a);
Morphism zero_morphism(const ObjectRef& a, const ObjectRef& b);
Morphism compose(const Morphism& g, const Morphism& f);

// element interface of the concrete backends; throws input_error on tablecat
long obj_order(const ObjectRef& a);
long apply_elem(const Morphism& f, long x);

struct KernelData {
    ObjectRef obj;
    Morphism incl;  // obj -> dom(f)
};
struct CokernelData {
    ObjectRef obj;
    Morphism proj;  // cod(f) -> obj
};
struct ProductData {
    ObjectRef obj;
    Morphism p1, p2;
};
struct PullbackData {
    ObjectRef obj;
    Morphism p1, p2;
    Morphism f, g;  // the defining cospan
};

KernelData kernel(const Morphism& f);
CokernelData cokernel(const Morphism& f);
ProductData product(const ObjectRef& a, const ObjectRef& b);
// the unique t into product(cod u, cod v) with p1 t = u, p2 t = v
Morphism pair_to_product(const Morphism& u, const Morphism& v);
PullbackData pullback(const Morphism& f, const Morphism& g);
PullbackData kernel_pair(const Morphism& f);
// the unique t with pb.p1 t = u, pb.p2 t = v; requires pb.f u = pb.g v
Morphism pair_into_pullback(const Morphism& u, const Morphism& v, const PullbackData& pb);

// unique h with m h = f when f factors through the mono m; input_error if m
// is not a monomorphism
std::optional<Morphism> lift_through_mono(const Morphism& m, const Morphism& f);
// unique h with h e = f when f coequalizes what e identifies; input_error if
// e is not an epimorphism
std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& f);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);
std::optional<Morphism> find_section(const Morphism& f);
bool is_regular_epi(const Morphism& f);  // coequalizer of its own kernel pair
bool is_normal_epi(const Morphism& f);   // comparison Coker(ker f) -> cod(f) iso
bool is_normal_mono(const Morphism& f);

struct MorphismProfile {
    bool is_mono = false;
    bool is_epi = false;
    bool is_iso = false;
    bool is_normal_mono = false;
    std::optional<bool> is_split_epi;    // unset when the section search is cut off
    std::optional<bool> is_regular_epi;  // unset when the kernel pair is missing
    std::optional<bool> is_normal_epi;
    std::optional<Morphism> section;
};
MorphismProfile classify(const Morphism& f, long budget = 2000000);

// induced Ker(u) -> Ker(v) for a commutative square f' u = v f
Morphism induced_kernel_map(const Morphism& f, const Morphism& fp, const Morphism& u,
                            const Morphism& v);
// induced Coker(u) -> Coker(v) for the same square
Morphism induced_cokernel_map(const Morphism& f, const Morphism& fp, const Morphism& u,
                              const Morphism& v);

// all morphisms dom -> cod in deterministic order
std::vector<Morphism> hom_set(const ObjectRef& a, const ObjectRef& b, long max_count = 2000000);

struct DiagramObject {
    std::string name;
    ObjectRef obj;
};
struct DiagramArrow {
    std::string name;
    std::string src, dst;
    Morphism mor;
};
struct DiagramEquation {
    // paths in application order: {f, g} denotes g . f
    std::vector<std::string> lhs, rhs;
};
struct Diagram {
    std::vector<DiagramObject> objects;
    std::vector<DiagramArrow> arrows;
    std::vector<DiagramEquation> equations;

    const DiagramObject* find_object(const std::string& name) const;
    const DiagramArrow* find_arrow(const std::string& name) const;
};

enum class Status { Holds, Fails, Inapplicable };
std::string status_name(Status s);

struct Verdict {
    Status status = Status::Holds;
    std::optional<Diagram> witness;
    long instances_checked = 0;
    long inapplicable = 0;
    std::string bound;   // human-readable bound description
    std::string detail;  // first failure / named clause
};

// checks name resolution, endpoint consistency, and every listed equation;
// fails on the first violating equation in declaration order
Verdict diagram_commutes(const Diagram& d);

// composite of a named path in application order; input_error on bad names
Morphism diagram_path(const Diagram& d, const std::vector<std::string>& path);

}  // namespace relhom
