#pragma once

#include <optional>
#include <vector>

#include "relhom/core.hpp"

namespace relhom {

// Finite abelian group in invariant-factor form: Z/d1 + ... + Z/dk with
// d1 | d2 | ... | dk, every di >= 2. The empty list is the zero group.
struct FinAbObject {
    std::vector<Int> factors;
    bool operator==(const FinAbObject&) const = default;
    Int order() const;
    int rank() const { return static_cast<int>(factors.size()); }
};

// Homomorphism as a matrix, rows indexed by codomain factors, columns by
// domain factors, entries reduced into [0, cod.factors[i]).
struct FinAbMorphism {
    FinAbObject dom, cod;
    Mat m;
    bool operator==(const FinAbMorphism&) const = default;
};

bool finab_hom_well_defined(const Mat& m, const FinAbObject& dom, const FinAbObject& cod);

// Validates shape and well-definedness, reduces entries.
FinAbMorphism finab_morphism(const FinAbObject& dom, const FinAbObject& cod, Mat m);

FinAbMorphism finab_identity(const FinAbObject& a);
FinAbMorphism finab_zero(const FinAbObject& dom, const FinAbObject& cod);
FinAbMorphism finab_compose(const FinAbMorphism& g, const FinAbMorphism& f);

// Canonical form of Z^k modulo the column lattice of rel (plus nothing else);
// the quotient must be finite. to_canon maps old coordinates to canonical
// generators, from_canon expresses canonical generators in old coordinates.
struct FinAbPresentation {
    FinAbObject obj;
    Mat to_canon;    // obj.rank() x k
    Mat from_canon;  // k x obj.rank()
};
FinAbPresentation finab_normalize(int k, const Mat& rel);

struct FinAbKernel {
    FinAbObject obj;
    FinAbMorphism incl;  // obj -> dom(f)
};
struct FinAbCokernel {
    FinAbObject obj;
    FinAbMorphism proj;  // cod(f) -> obj
};
struct FinAbProduct {
    FinAbObject obj;
    FinAbMorphism p1, p2;
};

FinAbKernel finab_kernel(const FinAbMorphism& f);
FinAbCokernel finab_cokernel(const FinAbMorphism& f);
FinAbProduct finab_product(const FinAbObject& a, const FinAbObject& b);
// The unique t with p1 t = u, p2 t = v into finab_product(cod u, cod v).
FinAbMorphism finab_pair(const FinAbMorphism& u, const FinAbMorphism& v);

// element indexing: mixed radix over the factors, last factor fastest
long finab_order_long(const FinAbObject& a);
std::vector<Int> finab_decode(const FinAbObject& a, long index);
long finab_encode(const FinAbObject& a, const std::vector<Int>& tuple);
long finab_apply(const FinAbMorphism& f, long index);

// all objects of order <= max_order, sorted by (order, factors)
std::vector<FinAbObject> finab_objects(long max_order);
// all morphisms dom -> cod, deterministic lexicographic order
std::vector<FinAbMorphism> finab_homs(const FinAbObject& dom, const FinAbObject& cod,
                                      long max_count = 2000000);

}  // namespace relhom
