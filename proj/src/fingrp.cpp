#include "relhom/fingrp.hpp"

#include <algorithm>
#include <numeric>

namespace relhom {

namespace {

std::vector<int> compute_inverses(int n, const std::vector<int>& table) {
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[static_cast<size_t>(a) * n + b] == 0 &&
                table[static_cast<size_t>(b) * n + a] == 0)
                inv[a] = b;
    return inv;
}

FinGrpObjPtr make_unchecked(int n, std::vector<int> table) {
    auto g = std::make_shared<FinGrpObject>();
    g->n = n;
    g->table = std::move(table);
    g->inv = compute_inverses(n, g->table);
    return g;
}

}  // namespace

FinGrpObjPtr fingrp_make(int n, std::vector<int> table) {
    if (n < 1 || static_cast<int>(table.size()) != n * n)
        throw input_error("fingrp: table shape mismatch");
    for (int v : table)
        if (v < 0 || v >= n) throw input_error("fingrp: table entry out of range");
    auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw input_error("fingrp: index 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw input_error("fingrp: associativity fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
    auto g = make_unchecked(n, std::move(table));
    for (int a = 0; a < n; ++a)
        if (g->inv[a] < 0) throw input_error("fingrp: element " + std::to_string(a) +
                                             " has no inverse");
    return g;
}

FinGrpObjPtr fingrp_trivial() { return make_unchecked(1, {0}); }

FinGrpMorphism fingrp_morphism(FinGrpObjPtr dom, FinGrpObjPtr cod, std::vector<int> map) {
    if (static_cast<int>(map.size()) != dom->n) throw input_error("fingrp: map length mismatch");
    if (map[0] != 0) throw input_error("fingrp: identity not preserved");
    for (int v : map)
        if (v < 0 || v >= cod->n) throw input_error("fingrp: map value out of range");
    for (int a = 0; a < dom->n; ++a)
        for (int b = 0; b < dom->n; ++b)
            if (map[dom->mul(a, b)] != cod->mul(map[a], map[b]))
                throw input_error("fingrp: map is not a homomorphism");
    return FinGrpMorphism{std::move(dom), std::move(cod), std::move(map)};
}

FinGrpMorphism fingrp_identity(const FinGrpObjPtr& a) {
    std::vector<int> m(a->n);
    std::iota(m.begin(), m.end(), 0);
    return FinGrpMorphism{a, a, std::move(m)};
}

FinGrpMorphism fingrp_zero(const FinGrpObjPtr& dom, const FinGrpObjPtr& cod) {
    return FinGrpMorphism{dom, cod, std::vector<int>(dom->n, 0)};
}

FinGrpMorphism fingrp_compose(const FinGrpMorphism& g, const FinGrpMorphism& f) {
    if (!(*f.cod == *g.dom)) throw input_error("fingrp: composition endpoint mismatch");
    std::vector<int> m(f.dom->n);
    for (int i = 0; i < f.dom->n; ++i) m[i] = g.map[f.map[i]];
    return FinGrpMorphism{f.dom, g.cod, std::move(m)};
}

FinGrpSub fingrp_subgroup(const FinGrpObjPtr& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements[0] != 0)
        throw input_error("fingrp_subgroup: identity missing");
    std::vector<int> pos(g->n, -1);
    for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
    const int k = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int p = g->mul(elements[i], elements[j]);
            if (pos[p] < 0) throw input_error("fingrp_subgroup: set is not closed");
            table[static_cast<size_t>(i) * k + j] = pos[p];
        }
    FinGrpSub s;
    s.obj = make_unchecked(k, std::move(table));
    s.incl = FinGrpMorphism{s.obj, g, std::move(elements)};
    return s;
}

std::vector<int> fingrp_normal_closure(const FinGrpObject& g, const std::vector<int>& seed) {
    std::vector<bool> in(g.n, false);
    in[0] = true;
    std::vector<int> work = seed;
    for (int s : seed) in[s] = true;
    // close under conjugation, products and inverses
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < g.n; ++a) {
            if (!in[a]) continue;
            int ia = g.inv[a];
            if (!in[ia]) { in[ia] = true; changed = true; }
            for (int b = 0; b < g.n; ++b) {
                if (in[b]) {
                    int p = g.mul(a, b);
                    if (!in[p]) { in[p] = true; changed = true; }
                }
                int c = g.mul(g.mul(b, a), g.inv[b]);
                if (!in[c]) { in[c] = true; changed = true; }
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < g.n; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

FinGrpQuot fingrp_quotient(const FinGrpObjPtr& g, const std::vector<int>& n) {
    std::vector<bool> in(g->n, false);
    for (int v : n) in[v] = true;
    if (n.empty() || !in[0]) throw input_error("fingrp_quotient: identity missing");
    for (int a : n)
        for (int b : n)
            if (!in[g->mul(a, b)]) throw input_error("fingrp_quotient: not a subgroup");
    for (int x = 0; x < g->n; ++x)
        for (int a : n)
            if (!in[g->mul(g->mul(x, a), g->inv[x])])
                throw input_error("fingrp_quotient: subgroup is not normal");
    // coset representative = least element of x N
    std::vector<int> rep(g->n);
    for (int x = 0; x < g->n; ++x) {
        int r = x;
        for (int a : n) r = std::min(r, g->mul(x, a));
        rep[x] = r;
    }
    std::vector<int> reps;
    for (int x = 0; x < g->n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<int> idx(g->n, -1);
    for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
    const int k = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<size_t>(i) * k + j] = idx[rep[g->mul(reps[i], reps[j])]];
    FinGrpQuot q;
    q.obj = make_unchecked(k, std::move(table));
    std::vector<int> proj(g->n);
    for (int x = 0; x < g->n; ++x) proj[x] = idx[rep[x]];
    q.proj = FinGrpMorphism{g, q.obj, std::move(proj)};
    return q;
}

FinGrpSub fingrp_kernel(const FinGrpMorphism& f) {
    std::vector<int> pre;
    for (int i = 0; i < f.dom->n; ++i)
        if (f.map[i] == 0) pre.push_back(i);
    return fingrp_subgroup(f.dom, std::move(pre));
}

FinGrpQuot fingrp_cokernel(const FinGrpMorphism& f) {
    std::vector<int> img(f.map.begin(), f.map.end());
    return fingrp_quotient(f.cod, fingrp_normal_closure(*f.cod, img));
}

FinGrpProduct fingrp_product(const FinGrpObjPtr& a, const FinGrpObjPtr& b) {
    const int na = a->n, nb = b->n, k = na * nb;
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<size_t>(i) * k + j] =
                a->mul(i / nb, j / nb) * nb + b->mul(i % nb, j % nb);
    FinGrpProduct p;
    p.obj = make_unchecked(k, std::move(table));
    std::vector<int> m1(k), m2(k);
    for (int i = 0; i < k; ++i) {
        m1[i] = i / nb;
        m2[i] = i % nb;
    }
    p.p1 = FinGrpMorphism{p.obj, a, std::move(m1)};
    p.p2 = FinGrpMorphism{p.obj, b, std::move(m2)};
    return p;
}

FinGrpMorphism fingrp_pair(const FinGrpMorphism& u, const FinGrpMorphism& v) {
    if (!(*u.dom == *v.dom)) throw input_error("fingrp_pair: domain mismatch");
    FinGrpProduct p = fingrp_product(u.cod, v.cod);
    std::vector<int> m(u.dom->n);
    for (int i = 0; i < u.dom->n; ++i) m[i] = u.map[i] * v.cod->n + v.map[i];
    return FinGrpMorphism{u.dom, p.obj, std::move(m)};
}

FinGrpProduct fingrp_fiber_product(const FinGrpMorphism& f, const FinGrpMorphism& g) {
    if (!(*f.cod == *g.cod)) throw input_error("fingrp_fiber_product: codomain mismatch");
    FinGrpProduct p = fingrp_product(f.dom, g.dom);
    std::vector<int> elems;
    for (int a = 0; a < f.dom->n; ++a)
        for (int b = 0; b < g.dom->n; ++b)
            if (f.map[a] == g.map[b]) elems.push_back(a * g.dom->n + b);
    FinGrpSub s = fingrp_subgroup(p.obj, std::move(elems));
    FinGrpProduct r;
    r.obj = s.obj;
    r.p1 = fingrp_compose(p.p1, s.incl);
    r.p2 = fingrp_compose(p.p2, s.incl);
    return r;
}

std::vector<int> fingrp_generators(const FinGrpObject& g) {
    std::vector<int> gens;
    std::vector<bool> gen_set(g.n, false);
    gen_set[0] = true;
    int count = 1;
    while (count < g.n) {
        int pick = -1;
        for (int i = 0; i < g.n; ++i)
            if (!gen_set[i]) { pick = i; break; }
        gens.push_back(pick);
        // regenerate the closure of gens
        std::fill(gen_set.begin(), gen_set.end(), false);
        gen_set[0] = true;
        count = 1;
        std::vector<int> work{0};
        for (int x : gens)
            if (!gen_set[x]) { gen_set[x] = true; work.push_back(x); ++count; }
        for (size_t i = 0; i < work.size(); ++i)
            for (size_t j = 0; j < work.size(); ++j) {
                int p = g.mul(work[i], work[j]);
                if (!gen_set[p]) { gen_set[p] = true; work.push_back(p); ++count; }
            }
    }
    return gens;
}

std::vector<FinGrpMorphism> fingrp_homs(const FinGrpObjPtr& dom, const FinGrpObjPtr& cod,
                                        long max_candidates) {
    std::vector<int> gens = fingrp_generators(*dom);
    const int ng = static_cast<int>(gens.size());
    long total = 1;
    for (int i = 0; i < ng; ++i) {
        total *= cod->n;
        if (total > max_candidates) throw budget_error("fingrp_homs: candidate budget exceeded");
    }
    std::vector<FinGrpMorphism> out;
    std::vector<int> choice(ng, 0);
    std::vector<int> img(dom->n);
    std::vector<int> known;
    for (;;) {
        // try to extend gens |-> choice to a homomorphism by closure
        std::fill(img.begin(), img.end(), -1);
        img[0] = 0;
        known.assign(1, 0);
        bool ok = true;
        for (int i = 0; i < ng && ok; ++i) {
            if (img[gens[i]] == -1) {
                img[gens[i]] = choice[i];
                known.push_back(gens[i]);
            } else if (img[gens[i]] != choice[i]) {
                ok = false;
            }
        }
        for (size_t i = 0; i < known.size() && ok; ++i)
            for (size_t j = 0; j < known.size() && ok; ++j) {
                int p = dom->mul(known[i], known[j]);
                int q = cod->mul(img[known[i]], img[known[j]]);
                if (img[p] == -1) {
                    img[p] = q;
                    known.push_back(p);
                } else if (img[p] != q) {
                    ok = false;
                }
            }
        if (ok) {
            // full verification; the closure pass only checks pairs seen early
            for (int a = 0; a < dom->n && ok; ++a)
                for (int b = 0; b < dom->n; ++b)
                    if (img[dom->mul(a, b)] != cod->mul(img[a], img[b])) { ok = false; break; }
            if (ok) out.push_back(FinGrpMorphism{dom, cod, img});
        }
        int p = ng - 1;
        while (p >= 0 && ++choice[p] == cod->n) choice[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

FinGrpObjPtr fingrp_cyclic(int n) {
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = (i + j) % n;
    return make_unchecked(n, std::move(t));
}

FinGrpObjPtr fingrp_dihedral(int n) {
    // r^i s^j with index j*n + i; s r^k = r^{-k} s
    const int m = 2 * n;
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < n; ++i2) {
                    int i = (i1 + (j1 ? n - i2 : i2)) % n;
                    int j = j1 ^ j2;
                    t[static_cast<size_t>(j1 * n + i1) * m + (j2 * n + i2)] = j * n + i;
                }
    return make_unchecked(m, std::move(t));
}

namespace {
FinGrpObjPtr perm_group(std::vector<std::vector<int>> perms) {
    std::sort(perms.begin(), perms.end());
    const int k = static_cast<int>(perms.size());
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<int> c(perms[i].size());
            for (size_t x = 0; x < c.size(); ++x) c[x] = perms[i][perms[j][x]];
            int pos = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) -
                                       perms.begin());
            table[static_cast<size_t>(i) * k + j] = pos;
        }
    return make_unchecked(k, std::move(table));
}

bool perm_even(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}
}  // namespace

FinGrpObjPtr fingrp_symmetric3() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return perm_group(std::move(perms));
}

FinGrpObjPtr fingrp_alternating4() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2, 3};
    do {
        if (perm_even(p)) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perm_group(std::move(perms));
}

FinGrpObjPtr fingrp_quaternion8() {
    // elements (s, a): sign s in {+,-}, axis a in {1,i,j,k}; index = a*2 + s
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<int> t(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
            int a = axis[ax][ay];
            int s = (sx + sy + sign[ax][ay]) % 2;
            t[static_cast<size_t>(x) * 8 + y] = a * 2 + s;
        }
    return make_unchecked(8, std::move(t));
}

std::vector<NamedGroup> fingrp_builtin_library() {
    std::vector<NamedGroup> lib;
    lib.push_back({"C1", fingrp_trivial()});
    for (int n = 2; n <= 12; ++n) lib.push_back({"C" + std::to_string(n), fingrp_cyclic(n)});
    lib.push_back({"D2", fingrp_dihedral(2)});
    lib.push_back({"S3", fingrp_symmetric3()});
    lib.push_back({"D4", fingrp_dihedral(4)});
    lib.push_back({"D5", fingrp_dihedral(5)});
    lib.push_back({"D6", fingrp_dihedral(6)});
    lib.push_back({"Q8", fingrp_quaternion8()});
    lib.push_back({"A4", fingrp_alternating4()});
    return lib;
}

}  // namespace relhom
