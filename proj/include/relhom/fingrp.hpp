#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relhom/core.hpp"

namespace relhom {

// Finite group by multiplication table; the identity sits at index 0.
struct FinGrpObject {
    int n = 1;
    std::vector<int> table;  // n*n, table[a*n+b] = a*b
    std::vector<int> inv;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
    bool operator==(const FinGrpObject& o) const { return n == o.n && table == o.table; }
};

using FinGrpObjPtr = std::shared_ptr<const FinGrpObject>;

struct FinGrpMorphism {
    FinGrpObjPtr dom, cod;
    std::vector<int> map;

    bool operator==(const FinGrpMorphism& o) const {
        return *dom == *o.dom && *cod == *o.cod && map == o.map;
    }
};

// Validates associativity, identity at 0, inverses.
FinGrpObjPtr fingrp_make(int n, std::vector<int> table);
FinGrpObjPtr fingrp_trivial();

FinGrpMorphism fingrp_morphism(FinGrpObjPtr dom, FinGrpObjPtr cod, std::vector<int> map);
FinGrpMorphism fingrp_identity(const FinGrpObjPtr& a);
FinGrpMorphism fingrp_zero(const FinGrpObjPtr& dom, const FinGrpObjPtr& cod);
FinGrpMorphism fingrp_compose(const FinGrpMorphism& g, const FinGrpMorphism& f);

struct FinGrpSub {
    FinGrpObjPtr obj;
    FinGrpMorphism incl;
};
struct FinGrpQuot {
    FinGrpObjPtr obj;
    FinGrpMorphism proj;
};
struct FinGrpProduct {
    FinGrpObjPtr obj;
    FinGrpMorphism p1, p2;
};

// elements must be a subgroup (checked); result reindexed ascending
FinGrpSub fingrp_subgroup(const FinGrpObjPtr& g, std::vector<int> elements);
// least normal subgroup containing the seed, as a sorted index set
std::vector<int> fingrp_normal_closure(const FinGrpObject& g, const std::vector<int>& seed);
// cosets indexed by least representative; errors if n is not normal
FinGrpQuot fingrp_quotient(const FinGrpObjPtr& g, const std::vector<int>& n);

FinGrpSub fingrp_kernel(const FinGrpMorphism& f);
FinGrpQuot fingrp_cokernel(const FinGrpMorphism& f);
FinGrpProduct fingrp_product(const FinGrpObjPtr& a, const FinGrpObjPtr& b);
FinGrpMorphism fingrp_pair(const FinGrpMorphism& u, const FinGrpMorphism& v);
// { (a,b) : f(a) = g(b) } as a subgroup of the product, with projections
FinGrpProduct fingrp_fiber_product(const FinGrpMorphism& f, const FinGrpMorphism& g);

// smallest-first generating set, then all homomorphisms by image enumeration
std::vector<int> fingrp_generators(const FinGrpObject& g);
std::vector<FinGrpMorphism> fingrp_homs(const FinGrpObjPtr& dom, const FinGrpObjPtr& cod,
                                        long max_candidates = 10000000);

// group builders used for tests and for generating the bundled table files
FinGrpObjPtr fingrp_cyclic(int n);
FinGrpObjPtr fingrp_dihedral(int n);  // order 2n
FinGrpObjPtr fingrp_symmetric3();
FinGrpObjPtr fingrp_quaternion8();
FinGrpObjPtr fingrp_alternating4();

struct NamedGroup {
    std::string name;
    FinGrpObjPtr group;
};
// the bundled library built in-process (the data files mirror this list)
std::vector<NamedGroup> fingrp_builtin_library();

}  // namespace relhom
