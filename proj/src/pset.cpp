#include "relhom/pset.hpp"

namespace relhom {

PSetMorphism pset_morphism(PSetObject dom, PSetObject cod, std::vector<int> map) {
    if (static_cast<int>(map.size()) != dom.size)
        throw input_error("pset: map length does not match domain size");
    if (map.empty() || map[0] != 0) throw input_error("pset: basepoint not preserved");
    for (int v : map)
        if (v < 0 || v >= cod.size) throw input_error("pset: map value out of range");
    return PSetMorphism{dom, cod, std::move(map)};
}

PSetMorphism pset_identity(PSetObject a) {
    std::vector<int> m(a.size);
    for (int i = 0; i < a.size; ++i) m[i] = i;
    return PSetMorphism{a, a, std::move(m)};
}

PSetMorphism pset_zero(PSetObject dom, PSetObject cod) {
    return PSetMorphism{dom, cod, std::vector<int>(dom.size, 0)};
}

PSetMorphism pset_compose(const PSetMorphism& g, const PSetMorphism& f) {
    if (!(f.cod == g.dom)) throw input_error("pset: composition endpoint mismatch");
    std::vector<int> m(f.dom.size);
    for (int i = 0; i < f.dom.size; ++i) m[i] = g.map[f.map[i]];
    return PSetMorphism{f.dom, g.cod, std::move(m)};
}

PSetKernel pset_kernel(const PSetMorphism& f) {
    std::vector<int> pre;
    for (int i = 0; i < f.dom.size; ++i)
        if (f.map[i] == 0) pre.push_back(i);  // index 0 is always first
    PSetKernel k;
    k.obj = PSetObject{static_cast<int>(pre.size())};
    k.incl = PSetMorphism{k.obj, f.dom, std::move(pre)};
    return k;
}

PSetCokernel pset_cokernel(const PSetMorphism& f) {
    std::vector<bool> in_image(f.cod.size, false);
    in_image[0] = true;
    for (int v : f.map) in_image[v] = true;
    std::vector<int> proj(f.cod.size, 0);
    int next = 1;
    for (int i = 0; i < f.cod.size; ++i)
        if (!in_image[i]) proj[i] = next++;
    PSetCokernel c;
    c.obj = PSetObject{next};
    c.proj = PSetMorphism{f.cod, c.obj, std::move(proj)};
    return c;
}

PSetProduct pset_product(PSetObject a, PSetObject b) {
    PSetProduct p;
    p.obj = PSetObject{a.size * b.size};
    std::vector<int> m1(p.obj.size), m2(p.obj.size);
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < b.size; ++j) {
            m1[i * b.size + j] = i;
            m2[i * b.size + j] = j;
        }
    p.p1 = PSetMorphism{p.obj, a, std::move(m1)};
    p.p2 = PSetMorphism{p.obj, b, std::move(m2)};
    return p;
}

PSetMorphism pset_pair(const PSetMorphism& u, const PSetMorphism& v) {
    if (!(u.dom == v.dom)) throw input_error("pset_pair: domain mismatch");
    PSetObject prod{u.cod.size * v.cod.size};
    std::vector<int> m(u.dom.size);
    for (int i = 0; i < u.dom.size; ++i) m[i] = u.map[i] * v.cod.size + v.map[i];
    return PSetMorphism{u.dom, prod, std::move(m)};
}

std::vector<PSetObject> pset_objects(int max_size) {
    std::vector<PSetObject> out;
    for (int n = 1; n <= max_size; ++n) out.push_back(PSetObject{n});
    return out;
}

std::vector<PSetMorphism> pset_homs(PSetObject dom, PSetObject cod, long max_count) {
    long total = 1;
    for (int i = 1; i < dom.size; ++i) {
        total *= cod.size;
        if (total > max_count) throw budget_error("pset_homs: hom set exceeds budget");
    }
    std::vector<PSetMorphism> out;
    out.reserve(total);
    std::vector<int> m(dom.size, 0);
    for (;;) {
        out.push_back(PSetMorphism{dom, cod, m});
        int p = dom.size - 1;
        while (p >= 1 && ++m[p] == cod.size) m[p--] = 0;
        if (p < 1) break;
    }
    return out;
}

}  // namespace relhom
