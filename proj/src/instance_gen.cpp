#include "relhom/instance_gen.hpp"

namespace relhom {

FinAbObject random_finab_object(std::mt19937& rng, long max_order) {
    auto objs = finab_objects(max_order);
    std::uniform_int_distribution<size_t> pick(0, objs.size() - 1);
    return objs[pick(rng)];
}

FinAbMorphism random_finab_morphism(std::mt19937& rng, const FinAbObject& a,
                                    const FinAbObject& b) {
    Mat m((int)b.factors.size(), (int)a.factors.size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            long e = b.factors[i].convert_to<long>();
            long d = a.factors[j].convert_to<long>();
            long g = std::gcd(e, d);
            std::uniform_int_distribution<long> pick(0, g - 1);
            m.at(i, j) = pick(rng) * (e / g);
        }
    return finab_morphism(a, b, m);
}

SnakeInput random_snake_finab(std::mt19937& rng, long max_order, EClass cls) {
    auto B = random_finab_object(rng, max_order);
    auto Bp = random_finab_object(rng, max_order);
    auto R = random_finab_object(rng, max_order);
    auto U = random_finab_object(rng, max_order);
    Morphism s{random_finab_morphism(rng, R, B)};
    Morphism v{random_finab_morphism(rng, B, Bp)};
    auto g = cokernel(s).proj;                    // B -> C := B/im(s)
    auto f = kernel(g).incl;                      // A := Ker(g) -> B
    Morphism t{random_finab_morphism(rng, U, Bp)};
    auto q1 = cokernel(compose(v, f));            // kill v(Ker g)
    auto q2 = cokernel(compose(q1.proj, t));      // then kill im(t)
    auto gp = compose(q2.proj, q1.proj);          // B' -> C'
    auto fp = kernel(gp).incl;                    // A' -> B'
    auto u = lift_through_mono(fp, compose(v, f));
    auto w = factor_through_epi(g, compose(gp, v));
    if (!u || !w) throw inconsistency_error("random snake: induced maps missing");
    return SnakeInput{dom(f),  dom(g), cod(g), dom(fp), dom(gp), cod(gp), f, g,
                      fp,      gp,     *u,     v,       *w,      std::move(cls)};
}

SnakeInput random_snake_fingrp(std::mt19937& rng, const std::vector<NamedGroup>& lib,
                               EClass cls) {
    auto pick_group = [&] {
        std::uniform_int_distribution<size_t> pick(0, lib.size() - 1);
        return lib[pick(rng)].group;
    };
    auto pick_hom = [&](const FinGrpObjPtr& a, const FinGrpObjPtr& b) {
        auto homs = fingrp_homs(a, b);
        std::uniform_int_distribution<size_t> pick(0, homs.size() - 1);
        return Morphism{homs[pick(rng)]};
    };
    auto B = pick_group(), Bp = pick_group(), R = pick_group(), U = pick_group();
    auto s = pick_hom(R, B);
    auto v = pick_hom(B, Bp);
    auto g = cokernel(s).proj;
    auto f = kernel(g).incl;
    auto t = pick_hom(U, Bp);
    auto q1 = cokernel(compose(v, f));
    auto q2 = cokernel(compose(q1.proj, t));
    auto gp = compose(q2.proj, q1.proj);
    auto fp = kernel(gp).incl;
    auto u = lift_through_mono(fp, compose(v, f));
    auto w = factor_through_epi(g, compose(gp, v));
    if (!u || !w) throw inconsistency_error("random snake: induced maps missing");
    return SnakeInput{dom(f),  dom(g), cod(g), dom(fp), dom(gp), cod(gp), f, g,
                      fp,      gp,     *u,     v,       *w,      std::move(cls)};
}

GridInput random_grid_finab(std::mt19937& rng, long max_order, bool corestrict, EClass cls) {
    auto Bp = random_finab_object(rng, max_order);
    auto R = random_finab_object(rng, max_order);
    auto S = random_finab_object(rng, max_order);
    Morphism r{random_finab_morphism(rng, R, Bp)};
    auto gp = cokernel(r).proj;                   // B' -> C' := B'/im(r)
    auto fp = kernel(gp).incl;                    // A' -> B'
    Morphism t{random_finab_morphism(rng, S, Bp)};
    auto imb = kernel(cokernel(t).proj);          // B := im(t) -> B'
    auto v = imb.incl;
    auto pb = pullback(fp, v);                    // A := A' x_{B'} B
    auto u = pb.p1;
    auto f = pb.p2;
    auto gv = compose(gp, v);                     // B -> C'
    Morphism g = gv, w = identity_morphism(cod(gv));
    if (corestrict) {
        auto imc = kernel(cokernel(gv).proj);     // C := im(g'v) -> C'
        w = imc.incl;
        auto cg = lift_through_mono(w, gv);
        if (!cg) throw inconsistency_error("random grid: corestriction missing");
        g = *cg;
    }
    auto cu = cokernel(u), cv = cokernel(v), cw = cokernel(w);
    auto fpp = induced_cokernel_map(f, fp, u, v);
    auto gpp = induced_cokernel_map(g, gp, v, w);
    return GridInput{dom(f),  dom(g),  cod(g),  dom(fp),  dom(gp),  cod(gp),
                     cu.obj,  cv.obj,  cw.obj,  f,        g,        fp,
                     gp,      fpp,     gpp,     u,        v,        w,
                     cu.proj, cv.proj, cw.proj, std::move(cls)};
}

}  // namespace relhom
