#pragma once

#include <vector>

#include "relhom/core.hpp"

namespace relhom {

// Finite pointed set; the basepoint is index 0.
struct PSetObject {
    int size = 1;
    bool operator==(const PSetObject&) const = default;
};

struct PSetMorphism {
    PSetObject dom, cod;
    std::vector<int> map;  // map[0] == 0
    bool operator==(const PSetMorphism&) const = default;
};

PSetMorphism pset_morphism(PSetObject dom, PSetObject cod, std::vector<int> map);
PSetMorphism pset_identity(PSetObject a);
PSetMorphism pset_zero(PSetObject dom, PSetObject cod);
PSetMorphism pset_compose(const PSetMorphism& g, const PSetMorphism& f);

struct PSetKernel {
    PSetObject obj;
    PSetMorphism incl;
};
struct PSetCokernel {
    PSetObject obj;
    PSetMorphism proj;
};
struct PSetProduct {
    PSetObject obj;
    PSetMorphism p1, p2;
};

// kernel = preimage of the basepoint; cokernel collapses the image to the
// basepoint and keeps non-image elements, renumbered by ascending index.
PSetKernel pset_kernel(const PSetMorphism& f);
PSetCokernel pset_cokernel(const PSetMorphism& f);
PSetProduct pset_product(PSetObject a, PSetObject b);
PSetMorphism pset_pair(const PSetMorphism& u, const PSetMorphism& v);

std::vector<PSetObject> pset_objects(int max_size);
std::vector<PSetMorphism> pset_homs(PSetObject dom, PSetObject cod, long max_count = 2000000);

}  // namespace relhom
