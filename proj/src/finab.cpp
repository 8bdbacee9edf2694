#include "relhom/finab.hpp"

#include <algorithm>

#include "relhom/snf.hpp"

namespace relhom {

Int FinAbObject::order() const {
    Int n = 1;
    for (const Int& d : factors) n *= d;
    return n;
}

bool finab_hom_well_defined(const Mat& m, const FinAbObject& dom, const FinAbObject& cod) {
    if (m.rows != cod.rank() || m.cols != dom.rank())
        throw input_error("finab: matrix shape does not match dom/cod ranks");
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if ((dom.factors[j] * m.at(i, j)) % cod.factors[i] != 0) return false;
    return true;
}

FinAbMorphism finab_morphism(const FinAbObject& dom, const FinAbObject& cod, Mat m) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = floor_mod(m.at(i, j), cod.factors[i]);
    if (!finab_hom_well_defined(m, dom, cod))
        throw input_error("finab: matrix is not a well-defined homomorphism");
    return FinAbMorphism{dom, cod, std::move(m)};
}

FinAbMorphism finab_identity(const FinAbObject& a) {
    return finab_morphism(a, a, Mat::identity(a.rank()));
}

FinAbMorphism finab_zero(const FinAbObject& dom, const FinAbObject& cod) {
    return FinAbMorphism{dom, cod, Mat(cod.rank(), dom.rank())};
}

FinAbMorphism finab_compose(const FinAbMorphism& g, const FinAbMorphism& f) {
    if (!(f.cod == g.dom)) throw input_error("finab: composition endpoint mismatch");
    return finab_morphism(f.dom, g.cod, mat_mul(g.m, f.m));
}

FinAbPresentation finab_normalize(int k, const Mat& rel) {
    if (rel.rows != k) throw input_error("finab_normalize: relation row count mismatch");
    SnfResult s = smith_normal_form(rel);
    std::vector<int> keep;
    for (int i = 0; i < k; ++i) {
        Int di = (i < s.rank) ? s.d.at(i, i) : Int(0);
        if (di == 0) throw input_error("finab_normalize: quotient is infinite");
        if (di >= 2) keep.push_back(i);
    }
    FinAbPresentation p;
    for (int i : keep) p.obj.factors.push_back(s.d.at(i, i));
    int kk = static_cast<int>(keep.size());
    p.to_canon = Mat(kk, k);
    p.from_canon = Mat(k, kk);
    for (int r = 0; r < kk; ++r)
        for (int c = 0; c < k; ++c)
            p.to_canon.at(r, c) = floor_mod(s.u.at(keep[r], c), p.obj.factors[r]);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < kk; ++c) p.from_canon.at(r, c) = s.u_inv.at(r, keep[c]);
    return p;
}

FinAbKernel finab_kernel(const FinAbMorphism& f) {
    const int n = f.dom.rank(), m = f.cod.rank();
    // lattice L = { x in Z^n : M x = 0 mod cod } as projection of ker [M | diag(e)]
    Mat a = mat_hstack(f.m, mat_diag(f.cod.factors));
    Mat kl = kernel_lattice(a);
    Mat b(n, kl.cols);  // generators of L in Z^n
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < kl.cols; ++j) b.at(i, j) = kl.at(i, j);
    // relations among those generators: { z : B z in diag(d) Z^n }
    Mat rl = kernel_lattice(mat_hstack(b, mat_diag(f.dom.factors)));
    Mat rel(b.cols, rl.cols);
    for (int i = 0; i < b.cols; ++i)
        for (int j = 0; j < rl.cols; ++j) rel.at(i, j) = rl.at(i, j);
    FinAbPresentation p = finab_normalize(b.cols, rel);
    FinAbKernel k;
    k.obj = p.obj;
    k.incl = finab_morphism(p.obj, f.dom, mat_mul(b, p.from_canon));
    return k;
}

FinAbCokernel finab_cokernel(const FinAbMorphism& f) {
    const int m = f.cod.rank();
    FinAbPresentation p = finab_normalize(m, mat_hstack(f.m, mat_diag(f.cod.factors)));
    FinAbCokernel c;
    c.obj = p.obj;
    c.proj = finab_morphism(f.cod, p.obj, p.to_canon);
    return c;
}

namespace {
FinAbPresentation product_presentation(const FinAbObject& a, const FinAbObject& b) {
    std::vector<Int> d = a.factors;
    d.insert(d.end(), b.factors.begin(), b.factors.end());
    return finab_normalize(static_cast<int>(d.size()), mat_diag(d));
}
}  // namespace

FinAbProduct finab_product(const FinAbObject& a, const FinAbObject& b) {
    FinAbPresentation p = product_presentation(a, b);
    const int ka = a.rank(), kb = b.rank();
    Mat sel1(ka, ka + kb), sel2(kb, ka + kb);
    for (int i = 0; i < ka; ++i) sel1.at(i, i) = 1;
    for (int i = 0; i < kb; ++i) sel2.at(i, ka + i) = 1;
    FinAbProduct r;
    r.obj = p.obj;
    r.p1 = finab_morphism(p.obj, a, mat_mul(sel1, p.from_canon));
    r.p2 = finab_morphism(p.obj, b, mat_mul(sel2, p.from_canon));
    return r;
}

FinAbMorphism finab_pair(const FinAbMorphism& u, const FinAbMorphism& v) {
    if (!(u.dom == v.dom)) throw input_error("finab_pair: domain mismatch");
    FinAbPresentation p = product_presentation(u.cod, v.cod);
    return finab_morphism(u.dom, p.obj, mat_mul(p.to_canon, mat_vstack(u.m, v.m)));
}

long finab_order_long(const FinAbObject& a) {
    Int n = a.order();
    if (n > 1000000000) throw budget_error("finab: object too large to enumerate");
    return static_cast<long>(n);
}

std::vector<Int> finab_decode(const FinAbObject& a, long index) {
    std::vector<Int> t(a.factors.size());
    for (int i = a.rank() - 1; i >= 0; --i) {
        long d = static_cast<long>(a.factors[i]);
        t[i] = index % d;
        index /= d;
    }
    return t;
}

long finab_encode(const FinAbObject& a, const std::vector<Int>& tuple) {
    long idx = 0;
    for (int i = 0; i < a.rank(); ++i)
        idx = idx * static_cast<long>(a.factors[i]) +
              static_cast<long>(floor_mod(tuple[i], a.factors[i]));
    return idx;
}

long finab_apply(const FinAbMorphism& f, long index) {
    std::vector<Int> x = finab_decode(f.dom, index);
    std::vector<Int> y(f.cod.rank());
    for (int i = 0; i < f.cod.rank(); ++i) {
        for (int j = 0; j < f.dom.rank(); ++j) y[i] += f.m.at(i, j) * x[j];
        y[i] = floor_mod(y[i], f.cod.factors[i]);
    }
    return finab_encode(f.cod, y);
}

namespace {
void gen_objects(std::vector<Int>& cur, const Int& prod, long max_order,
                 std::vector<FinAbObject>& out) {
    Int last = cur.empty() ? Int(2) : cur.back();
    for (Int d = last; prod * d <= max_order; ++d) {
        if (!cur.empty() && d % last != 0) continue;
        cur.push_back(d);
        out.push_back(FinAbObject{cur});
        gen_objects(cur, prod * d, max_order, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<FinAbObject> finab_objects(long max_order) {
    std::vector<FinAbObject> out;
    out.push_back(FinAbObject{});
    std::vector<Int> cur;
    gen_objects(cur, 1, max_order, out);
    std::sort(out.begin(), out.end(), [](const FinAbObject& x, const FinAbObject& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.factors < y.factors;
    });
    return out;
}

std::vector<FinAbMorphism> finab_homs(const FinAbObject& dom, const FinAbObject& cod,
                                      long max_count) {
    const int m = cod.rank(), n = dom.rank();
    // entry (i,j) ranges over the gcd(d_j, e_i) multiples of e_i/gcd
    std::vector<long> choices(static_cast<size_t>(m) * n);
    std::vector<Int> step(static_cast<size_t>(m) * n);
    Int total = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Int g = gcd(dom.factors[j], cod.factors[i]);
            choices[static_cast<size_t>(i) * n + j] = static_cast<long>(g);
            step[static_cast<size_t>(i) * n + j] = cod.factors[i] / g;
            total *= g;
        }
    if (total > max_count) throw budget_error("finab_homs: hom set exceeds budget");
    std::vector<FinAbMorphism> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<long> idx(choices.size(), 0);
    for (;;) {
        Mat mm(m, n);
        for (size_t p = 0; p < idx.size(); ++p) mm.a[p] = Int(idx[p]) * step[p];
        out.push_back(FinAbMorphism{dom, cod, std::move(mm)});
        int p = static_cast<int>(idx.size()) - 1;
        while (p >= 0 && ++idx[p] == choices[p]) idx[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

}  // namespace relhom
