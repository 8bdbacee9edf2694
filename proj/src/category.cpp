#include "relhom/category.hpp"

#include <set>

#include "relhom/snf.hpp"

namespace relhom {

namespace {

const FinAbMorphism* ab(const Morphism& f) { return std::get_if<FinAbMorphism>(&f); }
const PSetMorphism* ps(const Morphism& f) { return std::get_if<PSetMorphism>(&f); }
const FinGrpMorphism* gr(const Morphism& f) { return std::get_if<FinGrpMorphism>(&f); }
const TableMorphismRef* tb(const Morphism& f) { return std::get_if<TableMorphismRef>(&f); }

void require_same_backend(const Morphism& f, const Morphism& g, const char* op) {
    if (f.index() != g.index())
        throw input_error(std::string(op) + ": morphisms from different backends");
    const auto* a = std::get_if<TableMorphismRef>(&f);
    const auto* b = std::get_if<TableMorphismRef>(&g);
    if (a && a->cat.get() != b->cat.get())
        throw input_error(std::string(op) + ": arrows from different table categories");
}

long image_size(const FinGrpMorphism& f) {
    std::set<int> img(f.map.begin(), f.map.end());
    return static_cast<long>(img.size());
}

}  // namespace

std::string backend_name(BackendKind k) {
    switch (k) {
        case BackendKind::FinAb: return "finab";
        case BackendKind::PSet: return "pset";
        case BackendKind::FinGrp: return "fingrp";
        case BackendKind::Table: return "tablecat";
    }
    return "?";
}

BackendKind backend_of(const ObjectRef& a) { return static_cast<BackendKind>(a.index()); }
BackendKind backend_of(const Morphism& f) { return static_cast<BackendKind>(f.index()); }

bool object_eq(const ObjectRef& a, const ObjectRef& b) {
    if (a.index() != b.index()) return false;
    if (auto* x = std::get_if<FinAbObject>(&a)) return *x == std::get<FinAbObject>(b);
    if (auto* x = std::get_if<PSetObject>(&a)) return *x == std::get<PSetObject>(b);
    if (auto* x = std::get_if<FinGrpObjPtr>(&a)) return **x == *std::get<FinGrpObjPtr>(b);
    const auto& x = std::get<TableObjectRef>(a);
    const auto& y = std::get<TableObjectRef>(b);
    return x.cat.get() == y.cat.get() && x.obj == y.obj;
}

bool morphism_eq(const Morphism& f, const Morphism& g) {
    if (f.index() != g.index()) return false;
    if (auto* x = ab(f)) return *x == *ab(g);
    if (auto* x = ps(f)) return *x == *ps(g);
    if (auto* x = gr(f)) return *x == *gr(g);
    return tb(f)->cat.get() == tb(g)->cat.get() && tb(f)->arrow == tb(g)->arrow;
}

ObjectRef dom(const Morphism& f) {
    if (auto* x = ab(f)) return x->dom;
    if (auto* x = ps(f)) return x->dom;
    if (auto* x = gr(f)) return x->dom;
    return TableObjectRef{tb(f)->cat, tb(f)->cat->dom[tb(f)->arrow]};
}

ObjectRef cod(const Morphism& f) {
    if (auto* x = ab(f)) return x->cod;
    if (auto* x = ps(f)) return x->cod;
    if (auto* x = gr(f)) return x->cod;
    return TableObjectRef{tb(f)->cat, tb(f)->cat->cod[tb(f)->arrow]};
}

bool is_zero_object(const ObjectRef& a) {
    if (auto* x = std::get_if<FinAbObject>(&a)) return x->rank() == 0;
    if (auto* x = std::get_if<PSetObject>(&a)) return x->size == 1;
    if (auto* x = std::get_if<FinGrpObjPtr>(&a)) return (*x)->n == 1;
    const auto& x = std::get<TableObjectRef>(a);
    return x.obj == x.cat->zero;
}

ObjectRef zero_object_like(const ObjectRef& a) {
    switch (backend_of(a)) {
        case BackendKind::FinAb: return FinAbObject{};
        case BackendKind::PSet: return PSetObject{1};
        case BackendKind::FinGrp: return fingrp_trivial();
        case BackendKind::Table: {
            const auto& x = std::get<TableObjectRef>(a);
            if (x.cat->zero < 0) throw input_error("tablecat: category has no zero object");
            return TableObjectRef{x.cat, x.cat->zero};
        }
    }
    throw input_error("unknown backend");
}

Morphism identity_morphism(const ObjectRef& a) {
    if (auto* x = std::get_if<FinAbObject>(&a)) return finab_identity(*x);
    if (auto* x = std::get_if<PSetObject>(&a)) return pset_identity(*x);
    if (auto* x = std::get_if<FinGrpObjPtr>(&a)) return fingrp_identity(*x);
    const auto& x = std::get<TableObjectRef>(a);
    return TableMorphismRef{x.cat, x.cat->identity[x.obj]};
}

Morphism zero_morphism(const ObjectRef& a, const ObjectRef& b) {
    if (a.index() != b.index()) throw input_error("zero_morphism: backends differ");
    if (auto* x = std::get_if<FinAbObject>(&a))
        return finab_zero(*x, std::get<FinAbObject>(b));
    if (auto* x = std::get_if<PSetObject>(&a)) return pset_zero(*x, std::get<PSetObject>(b));
    if (auto* x = std::get_if<FinGrpObjPtr>(&a))
        return fingrp_zero(*x, std::get<FinGrpObjPtr>(b));
    const auto& x = std::get<TableObjectRef>(a);
    const auto& y = std::get<TableObjectRef>(b);
    if (x.cat.get() != y.cat.get())
        throw input_error("zero_morphism: objects from different table categories");
    return TableMorphismRef{x.cat, x.cat->zero_arrow(x.obj, y.obj)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    require_same_backend(g, f, "compose");
    if (auto* x = ab(g)) return finab_compose(*x, *ab(f));
    if (auto* x = ps(g)) return pset_compose(*x, *ps(f));
    if (auto* x = gr(g)) return fingrp_compose(*x, *gr(f));
    if (tb(g)->cat.get() != tb(f)->cat.get())
        throw input_error("compose: arrows from different table categories");
    return TableMorphismRef{tb(g)->cat, tb(g)->cat->compose(tb(g)->arrow, tb(f)->arrow)};
}

long obj_order(const ObjectRef& a) {
    if (auto* x = std::get_if<FinAbObject>(&a)) return finab_order_long(*x);
    if (auto* x = std::get_if<PSetObject>(&a)) return x->size;
    if (auto* x = std::get_if<FinGrpObjPtr>(&a)) return (*x)->n;
    throw input_error("obj_order: table categories have no element interface");
}

long apply_elem(const Morphism& f, long x) {
    if (auto* m = ab(f)) return finab_apply(*m, x);
    if (auto* m = ps(f)) return m->map[x];
    if (auto* m = gr(f)) return m->map[x];
    throw input_error("apply: table categories have no element interface");
}

KernelData kernel(const Morphism& f) {
    if (auto* x = ab(f)) {
        auto k = finab_kernel(*x);
        return {k.obj, k.incl};
    }
    if (auto* x = ps(f)) {
        auto k = pset_kernel(*x);
        return {k.obj, k.incl};
    }
    if (auto* x = gr(f)) {
        auto k = fingrp_kernel(*x);
        return {k.obj, k.incl};
    }
    auto k = tc_kernel(*tb(f)->cat, tb(f)->arrow);
    if (!k) throw missing_limit_error("tablecat: kernel does not exist");
    return {TableObjectRef{tb(f)->cat, k->obj}, TableMorphismRef{tb(f)->cat, k->incl}};
}

CokernelData cokernel(const Morphism& f) {
    if (auto* x = ab(f)) {
        auto c = finab_cokernel(*x);
        return {c.obj, c.proj};
    }
    if (auto* x = ps(f)) {
        auto c = pset_cokernel(*x);
        return {c.obj, c.proj};
    }
    if (auto* x = gr(f)) {
        auto c = fingrp_cokernel(*x);
        return {c.obj, c.proj};
    }
    auto c = tc_cokernel(*tb(f)->cat, tb(f)->arrow);
    if (!c) throw missing_limit_error("tablecat: cokernel does not exist");
    return {TableObjectRef{tb(f)->cat, c->obj}, TableMorphismRef{tb(f)->cat, c->proj}};
}

ProductData product(const ObjectRef& a, const ObjectRef& b) {
    if (a.index() != b.index()) throw input_error("product: backends differ");
    if (auto* x = std::get_if<FinAbObject>(&a)) {
        auto p = finab_product(*x, std::get<FinAbObject>(b));
        return {p.obj, p.p1, p.p2};
    }
    if (auto* x = std::get_if<PSetObject>(&a)) {
        auto p = pset_product(*x, std::get<PSetObject>(b));
        return {p.obj, p.p1, p.p2};
    }
    if (auto* x = std::get_if<FinGrpObjPtr>(&a)) {
        auto p = fingrp_product(*x, std::get<FinGrpObjPtr>(b));
        return {p.obj, p.p1, p.p2};
    }
    const auto& x = std::get<TableObjectRef>(a);
    const auto& y = std::get<TableObjectRef>(b);
    if (x.cat.get() != y.cat.get())
        throw input_error("product: objects from different table categories");
    auto cone = tc_find_limit(*x.cat, {x.obj, y.obj}, {});
    if (!cone) throw missing_limit_error("tablecat: product does not exist");
    return {TableObjectRef{x.cat, cone->apex}, TableMorphismRef{x.cat, cone->legs[0]},
            TableMorphismRef{x.cat, cone->legs[1]}};
}

Morphism pair_to_product(const Morphism& u, const Morphism& v) {
    require_same_backend(u, v, "pair_to_product");
    if (auto* x = ab(u)) return finab_pair(*x, *ab(v));
    if (auto* x = ps(u)) return pset_pair(*x, *ps(v));
    if (auto* x = gr(u)) return fingrp_pair(*x, *gr(v));
    auto p = product(cod(u), cod(v));
    const auto& c = *tb(u)->cat;
    for (int t : c.hom[c.dom[tb(u)->arrow]][std::get<TableObjectRef>(p.obj).obj])
        if (c.compose(tb(p.p1)->arrow, t) == tb(u)->arrow &&
            c.compose(tb(p.p2)->arrow, t) == tb(v)->arrow)
            return TableMorphismRef{tb(u)->cat, t};
    throw inconsistency_error("pair_to_product: no pairing into the table product");
}

PullbackData pullback(const Morphism& f, const Morphism& g) {
    require_same_backend(f, g, "pullback");
    if (!object_eq(cod(f), cod(g))) throw input_error("pullback: codomain mismatch");
    if (auto* x = ab(f)) {
        const auto& y = *ab(g);
        auto p = finab_product(x->dom, y.dom);
        Mat s(x->m.rows, p.obj.rank());
        Mat a = mat_mul(x->m, p.p1.m), b = mat_mul(y.m, p.p2.m);
        for (size_t i = 0; i < s.a.size(); ++i) s.a[i] = a.a[i] - b.a[i];
        auto k = finab_kernel(finab_morphism(p.obj, x->cod, s));
        return {k.obj, finab_compose(p.p1, k.incl), finab_compose(p.p2, k.incl), f, g};
    }
    if (auto* x = ps(f)) {
        const auto& y = *ps(g);
        std::vector<int> m1, m2;
        for (int i = 0; i < x->dom.size; ++i)
            for (int j = 0; j < y.dom.size; ++j)
                if (x->map[i] == y.map[j]) {
                    m1.push_back(i);
                    m2.push_back(j);
                }
        PSetObject obj{static_cast<int>(m1.size())};
        return {obj, pset_morphism(obj, x->dom, m1), pset_morphism(obj, y.dom, m2), f, g};
    }
    if (auto* x = gr(f)) {
        auto p = fingrp_fiber_product(*x, *gr(g));
        return {p.obj, p.p1, p.p2, f, g};
    }
    auto p = tc_pullback(*tb(f)->cat, tb(f)->arrow, tb(g)->arrow);
    if (!p) throw missing_limit_error("tablecat: pullback does not exist");
    return {TableObjectRef{tb(f)->cat, p->obj}, TableMorphismRef{tb(f)->cat, p->p1},
            TableMorphismRef{tb(f)->cat, p->p2}, f, g};
}

PullbackData kernel_pair(const Morphism& f) { return pullback(f, f); }

Morphism pair_into_pullback(const Morphism& u, const Morphism& v, const PullbackData& pb) {
    require_same_backend(u, v, "pair_into_pullback");
    if (!morphism_eq(compose(pb.f, u), compose(pb.g, v)))
        throw input_error("pair_into_pullback: the two composites into the cospan differ");
    if (tb(u)) {
        const auto& c = *tb(u)->cat;
        for (int t : c.hom[c.dom[tb(u)->arrow]][std::get<TableObjectRef>(pb.obj).obj])
            if (c.compose(tb(pb.p1)->arrow, t) == tb(u)->arrow &&
                c.compose(tb(pb.p2)->arrow, t) == tb(v)->arrow)
                return TableMorphismRef{tb(u)->cat, t};
        throw inconsistency_error("pair_into_pullback: no mediating arrow in the table");
    }
    auto t = lift_through_mono(pair_to_product(pb.p1, pb.p2), pair_to_product(u, v));
    if (!t) throw inconsistency_error("pair_into_pullback: lift into the pullback failed");
    return *t;
}

std::optional<Morphism> lift_through_mono(const Morphism& m, const Morphism& f) {
    require_same_backend(m, f, "lift_through_mono");
    if (!object_eq(cod(m), cod(f))) throw input_error("lift_through_mono: codomain mismatch");
    if (!is_mono(m)) throw input_error("lift_through_mono: m is not a monomorphism");
    if (auto* x = ab(m)) {
        const auto& y = *ab(f);
        Mat a = mat_hstack(x->m, mat_diag(x->cod.factors));
        Mat h(x->dom.rank(), y.dom.rank());
        for (int j = 0; j < h.cols; ++j) {
            std::vector<Int> b(y.m.rows);
            for (int i = 0; i < y.m.rows; ++i) b[i] = y.m.at(i, j);
            auto sol = solve_linear(a, b);
            if (!sol) return std::nullopt;
            for (int i = 0; i < h.rows; ++i) h.at(i, j) = (*sol)[i];
        }
        auto lifted = finab_morphism(y.dom, x->dom, h);
        if (!(finab_compose(*x, lifted) == y))
            throw inconsistency_error("lift_through_mono: verification failed");
        return Morphism{lifted};
    }
    if (auto* x = ps(m)) {
        const auto& y = *ps(f);
        std::vector<int> h(y.dom.size, -1);
        for (int i = 0; i < y.dom.size; ++i) {
            for (int j = 0; j < x->dom.size; ++j)
                if (x->map[j] == y.map[i]) { h[i] = j; break; }
            if (h[i] < 0) return std::nullopt;
        }
        return Morphism{pset_morphism(y.dom, x->dom, h)};
    }
    if (auto* x = gr(m)) {
        const auto& y = *gr(f);
        std::vector<int> h(y.dom->n, -1);
        for (int i = 0; i < y.dom->n; ++i) {
            for (int j = 0; j < x->dom->n; ++j)
                if (x->map[j] == y.map[i]) { h[i] = j; break; }
            if (h[i] < 0) return std::nullopt;
        }
        return Morphism{fingrp_morphism(y.dom, x->dom, h)};
    }
    const auto& c = *tb(m)->cat;
    for (int h : c.hom[c.dom[tb(f)->arrow]][c.dom[tb(m)->arrow]])
        if (c.compose(tb(m)->arrow, h) == tb(f)->arrow)
            return Morphism{TableMorphismRef{tb(m)->cat, h}};
    return std::nullopt;
}

std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& f) {
    require_same_backend(e, f, "factor_through_epi");
    if (!object_eq(dom(e), dom(f))) throw input_error("factor_through_epi: domain mismatch");
    if (!is_epi(e)) throw input_error("factor_through_epi: e is not an epimorphism");
    if (auto* x = ab(e)) {
        const auto& y = *ab(f);
        long n = finab_order_long(x->dom);
        Mat h(y.cod.rank(), x->cod.rank());
        for (int j = 0; j < h.cols; ++j) {
            // least preimage of the j-th canonical generator of cod(e)
            std::vector<Int> gen(x->cod.rank(), 0);
            gen[j] = 1;
            long target = finab_encode(x->cod, gen);
            long pre = -1;
            for (long t = 0; t < n; ++t)
                if (finab_apply(*x, t) == target) { pre = t; break; }
            if (pre < 0) throw inconsistency_error("factor_through_epi: epi without preimage");
            auto img = finab_decode(y.cod, finab_apply(y, pre));
            for (int i = 0; i < h.rows; ++i) h.at(i, j) = img[i];
        }
        try {
            auto fac = finab_morphism(x->cod, y.cod, h);
            if (!(finab_compose(fac, *x) == y)) return std::nullopt;
            return Morphism{fac};
        } catch (const input_error&) {
            return std::nullopt;
        }
    }
    if (auto* x = ps(e)) {
        const auto& y = *ps(f);
        std::vector<int> h(x->cod.size, -1);
        for (int i = 0; i < x->dom.size; ++i)
            if (h[x->map[i]] < 0) h[x->map[i]] = y.map[i];
        try {
            auto fac = pset_morphism(x->cod, y.cod, h);
            if (!(pset_compose(fac, *x) == y)) return std::nullopt;
            return Morphism{fac};
        } catch (const input_error&) {
            return std::nullopt;
        }
    }
    if (auto* x = gr(e)) {
        const auto& y = *gr(f);
        std::vector<int> h(x->cod->n, -1);
        for (int i = 0; i < x->dom->n; ++i)
            if (h[x->map[i]] < 0) h[x->map[i]] = y.map[i];
        try {
            auto fac = fingrp_morphism(x->cod, y.cod, h);
            if (!(fingrp_compose(fac, *x) == y)) return std::nullopt;
            return Morphism{fac};
        } catch (const input_error&) {
            return std::nullopt;
        }
    }
    const auto& c = *tb(e)->cat;
    for (int h : c.hom[c.cod[tb(e)->arrow]][c.cod[tb(f)->arrow]])
        if (c.compose(h, tb(e)->arrow) == tb(f)->arrow)
            return Morphism{TableMorphismRef{tb(e)->cat, h}};
    return std::nullopt;
}

bool is_mono(const Morphism& f) {
    if (auto* x = ab(f)) return finab_kernel(*x).obj.order() == 1;
    if (auto* x = ps(f)) {
        std::set<int> img;
        for (int v : x->map)
            if (!img.insert(v).second) return false;
        return true;
    }
    if (auto* x = gr(f)) return fingrp_kernel(*x).obj->n == 1;
    return tc_is_mono(*tb(f)->cat, tb(f)->arrow);
}

bool is_epi(const Morphism& f) {
    if (auto* x = ab(f)) return finab_cokernel(*x).obj.order() == 1;
    if (auto* x = ps(f)) {
        std::set<int> img(x->map.begin(), x->map.end());
        return static_cast<int>(img.size()) == x->cod.size;
    }
    if (auto* x = gr(f)) return image_size(*x) == (*x).cod->n;
    return tc_is_epi(*tb(f)->cat, tb(f)->arrow);
}

bool is_iso(const Morphism& f) {
    if (tb(f)) return tc_is_iso(*tb(f)->cat, tb(f)->arrow);
    return is_mono(f) && is_epi(f);
}

std::optional<Morphism> find_section(const Morphism& f) {
    if (auto* x = ps(f)) {
        if (!is_epi(f)) return std::nullopt;
        std::vector<int> s(x->cod.size, -1);
        for (int i = 0; i < x->dom.size; ++i)
            if (s[x->map[i]] < 0) s[x->map[i]] = i;
        return Morphism{pset_morphism(x->cod, x->dom, s)};
    }
    if (tb(f)) {
        auto s = tc_section(*tb(f)->cat, tb(f)->arrow);
        if (!s) return std::nullopt;
        return Morphism{TableMorphismRef{tb(f)->cat, *s}};
    }
    auto id = identity_morphism(cod(f));
    for (const auto& s : hom_set(cod(f), dom(f)))
        if (morphism_eq(compose(f, s), id)) return s;
    return std::nullopt;
}

bool is_regular_epi(const Morphism& f) {
    if (tb(f)) return tc_is_regular_epi(*tb(f)->cat, tb(f)->arrow);
    // in the concrete backends the coequalizer of the kernel pair is the
    // image, so the comparison to cod(f) is iso exactly when f is surjective
    return is_epi(f);
}

bool is_normal_epi(const Morphism& f) {
    if (tb(f)) return tc_is_normal_epi(*tb(f)->cat, tb(f)->arrow);
    auto k = kernel(f);
    auto c = cokernel(k.incl);
    auto h = factor_through_epi(c.proj, f);
    if (!h) return false;
    return is_iso(*h);
}

bool is_normal_mono(const Morphism& f) {
    if (tb(f)) return tc_is_normal_mono(*tb(f)->cat, tb(f)->arrow);
    auto c = cokernel(f);
    auto k = kernel(c.proj);
    auto h = lift_through_mono(k.incl, f);
    if (!h) return false;
    return is_iso(*h);
}

MorphismProfile classify(const Morphism& f, long budget) {
    MorphismProfile p;
    p.is_mono = is_mono(f);
    p.is_epi = is_epi(f);
    p.is_iso = is_iso(f);
    p.is_normal_mono = is_normal_mono(f);
    p.is_normal_epi = is_normal_epi(f);
    try {
        p.is_regular_epi = is_regular_epi(f);
    } catch (const missing_limit_error&) {
    }
    try {
        if (auto* x = ab(f)) {
            auto id = finab_identity(x->cod);
            for (const auto& s : finab_homs(x->cod, x->dom, budget))
                if (finab_compose(*x, s) == id) {
                    p.section = Morphism{s};
                    break;
                }
            p.is_split_epi = p.section.has_value();
        } else {
            auto s = find_section(f);
            if (s) p.section = s;
            p.is_split_epi = s.has_value();
        }
    } catch (const budget_error&) {
    }
    return p;
}

Morphism induced_kernel_map(const Morphism& f, const Morphism& fp, const Morphism& u,
                            const Morphism& v) {
    if (!morphism_eq(compose(v, f), compose(fp, u)))
        throw input_error("induced_kernel_map: square does not commute");
    auto ku = kernel(u), kv = kernel(v);
    auto h = lift_through_mono(kv.incl, compose(f, ku.incl));
    if (!h) throw inconsistency_error("induced_kernel_map: lift through ker(v) failed");
    return *h;
}

Morphism induced_cokernel_map(const Morphism& f, const Morphism& fp, const Morphism& u,
                              const Morphism& v) {
    if (!morphism_eq(compose(v, f), compose(fp, u)))
        throw input_error("induced_cokernel_map: square does not commute");
    auto cu = cokernel(u), cv = cokernel(v);
    auto h = factor_through_epi(cu.proj, compose(cv.proj, fp));
    if (!h) throw inconsistency_error("induced_cokernel_map: factorization failed");
    return *h;
}

std::vector<Morphism> hom_set(const ObjectRef& a, const ObjectRef& b, long max_count) {
    if (a.index() != b.index()) throw input_error("hom_set: backends differ");
    std::vector<Morphism> out;
    if (auto* x = std::get_if<FinAbObject>(&a))
        for (const auto& h : finab_homs(*x, std::get<FinAbObject>(b), max_count))
            out.push_back(h);
    else if (auto* x = std::get_if<PSetObject>(&a))
        for (const auto& h : pset_homs(*x, std::get<PSetObject>(b), max_count))
            out.push_back(h);
    else if (auto* x = std::get_if<FinGrpObjPtr>(&a))
        for (const auto& h : fingrp_homs(*x, std::get<FinGrpObjPtr>(b), max_count))
            out.push_back(h);
    else {
        const auto& ta = std::get<TableObjectRef>(a);
        const auto& tbb = std::get<TableObjectRef>(b);
        if (ta.cat.get() != tbb.cat.get())
            throw input_error("hom_set: objects from different table categories");
        for (int h : ta.cat->hom[ta.obj][tbb.obj]) out.push_back(TableMorphismRef{ta.cat, h});
    }
    return out;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds-up-to-bound";
        case Status::Fails: return "fails";
        case Status::Inapplicable: return "inapplicable";
    }
    return "?";
}

const DiagramObject* Diagram::find_object(const std::string& name) const {
    for (const auto& o : objects)
        if (o.name == name) return &o;
    return nullptr;
}

const DiagramArrow* Diagram::find_arrow(const std::string& name) const {
    for (const auto& a : arrows)
        if (a.name == name) return &a;
    return nullptr;
}

Morphism diagram_path(const Diagram& d, const std::vector<std::string>& path) {
    if (path.empty()) throw input_error("diagram path is empty");
    const DiagramArrow* first = d.find_arrow(path[0]);
    if (!first) throw input_error("unknown arrow: " + path[0]);
    Morphism m = first->mor;
    for (size_t i = 1; i < path.size(); ++i) {
        const DiagramArrow* next = d.find_arrow(path[i]);
        if (!next) throw input_error("unknown arrow: " + path[i]);
        m = compose(next->mor, m);
    }
    return m;
}

namespace {

std::string render_path(const std::vector<std::string>& path) {
    std::string s;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += *it;
    }
    return s;
}

}  // namespace

Verdict diagram_commutes(const Diagram& d) {
    for (const auto& a : d.arrows) {
        const DiagramObject* s = d.find_object(a.src);
        const DiagramObject* t = d.find_object(a.dst);
        if (!s || !t)
            throw input_error("arrow " + a.name + " references an unknown object");
        if (!object_eq(dom(a.mor), s->obj) || !object_eq(cod(a.mor), t->obj))
            throw input_error("arrow " + a.name + " does not match its endpoints");
    }
    Verdict v;
    for (const auto& eq : d.equations) {
        ++v.instances_checked;
        if (!morphism_eq(diagram_path(d, eq.lhs), diagram_path(d, eq.rhs))) {
            v.status = Status::Fails;
            v.detail = "equation " + render_path(eq.lhs) + " = " + render_path(eq.rhs) +
                       " fails";
            v.witness = d;
            return v;
        }
    }
    return v;
}

}  // namespace relhom
