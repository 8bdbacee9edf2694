#include "relhom/lemmas.hpp"

namespace relhom {

namespace {

void require_chain(const SequenceSpec& seq) {
    if (seq.arrows.empty()) throw input_error("sequence: no arrows");
    for (size_t i = 0; i + 1 < seq.arrows.size(); ++i)
        if (!object_eq(cod(seq.arrows[i]), dom(seq.arrows[i + 1])))
            throw input_error("sequence: arrows " + std::to_string(i) + " and " +
                              std::to_string(i + 1) + " are not composable");
}

}  // namespace

Verdict is_e_exact_at(const SequenceSpec& seq, int i, const EClass& e) {
    require_chain(seq);
    if (i < 1 || i >= (int)seq.arrows.size())
        throw input_error("sequence: position " + std::to_string(i) + " is not interior");
    const auto& prev = seq.arrows[i - 1];
    const auto& next = seq.arrows[i];
    Verdict v;
    v.instances_checked = 1;
    auto k = kernel(next);
    auto lifted = lift_through_mono(k.incl, prev);
    if (!lifted) {
        v.status = Status::Fails;
        v.detail = "image of the incoming arrow is not contained in the kernel";
        return v;
    }
    if (!member(e, *lifted)) {
        v.status = Status::Fails;
        v.detail = "corestriction to the kernel is not in E";
    }
    return v;
}

Verdict is_e_exact(const SequenceSpec& seq, const EClass& e) {
    require_chain(seq);
    Verdict v;
    for (int i = 1; i < (int)seq.arrows.size(); ++i) {
        auto at = is_e_exact_at(seq, i, e);
        ++v.instances_checked;
        if (at.status != Status::Holds) {
            at.detail = "not E-exact at node " + std::to_string(i) + ": " + at.detail;
            at.instances_checked = v.instances_checked;
            return at;
        }
    }
    return v;
}

Verdict is_short_e_exact(const Morphism& f, const Morphism& g, const EClass& e) {
    if (!object_eq(cod(f), dom(g))) throw input_error("short sequence: cod f != dom g");
    Verdict v;
    v.instances_checked = 1;
    if (!is_kernel_morphism(f, g)) {
        v.status = Status::Fails;
        v.detail = "f is not a kernel of g";
        return v;
    }
    if (!member(e, g)) {
        v.status = Status::Fails;
        v.detail = "g is not in E";
    }
    return v;
}

bool has_normal_e_mono_factorization(const Morphism& f, const EClass& e) {
    if (backend_of(f) == BackendKind::Table) {
        // exhaustive over the finite category
        auto a = dom(f), b = cod(f);
        auto cat = std::get<TableObjectRef>(a).cat;
        for (int y = 0; y < cat->n_obj; ++y) {
            ObjectRef mid = TableObjectRef{cat, y};
            for (const auto& n : hom_set(a, mid)) {
                if (!is_normal_epi(n) || !member(e, n)) continue;
                for (const auto& m : hom_set(mid, b))
                    if (is_mono(m) && morphism_eq(compose(m, n), f)) return true;
            }
        }
        return false;
    }
    // any (epi, mono) factorization runs through the image, so the canonical
    // corestriction decides
    auto im = kernel(cokernel(f).proj);
    auto n = lift_through_mono(im.incl, f);
    return n && is_normal_epi(*n) && member(e, *n);
}

namespace {

// column 0 -> Ker(h) -> X -h-> X' -> Coker(h) -> 0
SequenceSpec column_sequence(const Morphism& h) {
    auto k = kernel(h);
    auto c = cokernel(h);
    auto z = zero_object_like(dom(h));
    SequenceSpec s;
    s.arrows = {zero_morphism(z, k.obj), k.incl, h, c.proj, zero_morphism(c.obj, z)};
    return s;
}

void require_exact_at(const SequenceSpec& seq, int i, const EClass& e, const std::string& what) {
    auto v = is_e_exact_at(seq, i, e);
    if (v.status != Status::Holds)
        throw hypothesis_error(what + " (" + v.detail + ")");
}

void require_column(const Morphism& h, const EClass& e, const std::string& name,
                    const char* top, const char* bottom) {
    auto seq = column_sequence(h);
    const std::string nodes[4] = {"Ker(" + name + ")", top, bottom, "Coker(" + name + ")"};
    for (int i = 1; i <= 4; ++i)
        require_exact_at(seq, i, e, "column " + name + " not E-exact at " + nodes[i - 1]);
}

void require_endpoint(const Morphism& m, const ObjectRef& a, const ObjectRef& b,
                      const std::string& name) {
    if (!object_eq(dom(m), a) || !object_eq(cod(m), b))
        throw input_error("arrow " + name + " does not match the named endpoints");
}

struct SnakeCore {
    SnakeResult res;
    Morphism g1p, g2p;  // g' = g2' g1' with g1' = coker(f')
    bool cond_a = false, cond_b = false;
};

SnakeCore snake_core(const SnakeInput& in) {
    require_endpoint(in.f, in.A, in.B, "f");
    require_endpoint(in.g, in.B, in.C, "g");
    require_endpoint(in.fp, in.Ap, in.Bp, "f'");
    require_endpoint(in.gp, in.Bp, in.Cp, "g'");
    require_endpoint(in.u, in.A, in.Ap, "u");
    require_endpoint(in.v, in.B, in.Bp, "v");
    require_endpoint(in.w, in.C, in.Cp, "w");
    if (!morphism_eq(compose(in.fp, in.u), compose(in.v, in.f)))
        throw hypothesis_error("snake: grid fails f'u = vf");
    if (!morphism_eq(compose(in.gp, in.v), compose(in.w, in.g)))
        throw hypothesis_error("snake: grid fails g'v = wg");

    const auto& e = in.cls;
    require_column(in.u, e, "u", "A", "A'");
    require_column(in.v, e, "v", "B", "B'");
    require_column(in.w, e, "w", "C", "C'");

    auto z = zero_object_like(in.A);
    require_exact_at({{in.f, in.g}}, 1, e, "second row not E-exact at B");
    require_exact_at({{in.g, zero_morphism(in.C, z)}}, 1, e, "second row not E-exact at C");
    require_exact_at({{zero_morphism(z, in.Ap), in.fp}}, 1, e, "third row not E-exact at A'");
    require_exact_at({{in.fp, in.gp}}, 1, e, "third row not E-exact at B'");

    SnakeCore core;
    auto& r = core.res;
    r.ker_u = kernel(in.u);
    r.ker_v = kernel(in.v);
    r.ker_w = kernel(in.w);
    r.coker_u = cokernel(in.u);
    r.coker_v = cokernel(in.v);
    r.coker_w = cokernel(in.w);

    core.g1p = cokernel(in.fp).proj;
    auto g2p = factor_through_epi(core.g1p, in.gp);
    if (!g2p) throw inconsistency_error("snake: g' does not factor through coker(f')");
    core.g2p = *g2p;
    core.cond_a = member(e, core.g1p) && is_mono(core.g2p);
    core.cond_b = member(e, compose(r.coker_w.proj, core.g2p));

    if (!is_kernel_morphism(in.fp, in.gp))
        throw hypothesis_error("snake: f' is not a kernel of g'");

    r.kappa1 = induced_kernel_map(in.f, in.fp, in.u, in.v);
    r.kappa2 = induced_kernel_map(in.g, in.gp, in.v, in.w);
    r.gamma1 = induced_cokernel_map(in.f, in.fp, in.u, in.v);
    r.gamma2 = induced_cokernel_map(in.g, in.gp, in.v, in.w);

    r.P = pullback(in.g, r.ker_w.incl);
    auto vpi1 = compose(in.v, r.P.p1);
    if (!morphism_eq(compose(in.gp, vpi1), zero_morphism(r.P.obj, in.Cp)))
        throw inconsistency_error("snake: g' v pi1 is not zero");
    auto phi = lift_through_mono(in.fp, vpi1);
    if (!phi) throw inconsistency_error("snake: v pi1 does not lift through f'");
    r.phi = *phi;

    auto d = factor_through_epi(r.P.p2, compose(r.coker_u.proj, r.phi));
    if (!d) throw inconsistency_error("snake: coker(u) phi does not factor through pi2");
    r.d = *d;

    r.six_term.arrows = {r.kappa1, r.kappa2, r.d, r.gamma1, r.gamma2};
    return core;
}

}  // namespace

SnakeResult snake(const SnakeInput& in, SnakeMode mode) {
    auto core = snake_core(in);
    const auto& e = in.cls;
    if (!member(e, in.gp)) {
        if (!core.cond_a)
            throw hypothesis_error("snake: g' is not in E and condition (a) fails");
        if (mode == SnakeMode::Homological && !core.cond_b)
            throw hypothesis_error("snake: g' is not in E and condition (b) fails");
    }
    if (mode == SnakeMode::Weak && !core.cond_a)
        throw hypothesis_error("snake: condition (a) fails");

    auto& r = core.res;
    const char* nodes[4] = {"Ker(v)", "Ker(w)", "Coker(u)", "Coker(v)"};
    for (int i = 1; i <= 4; ++i)
        r.exact_at.emplace_back(nodes[i - 1], is_e_exact_at(r.six_term, i, e));

    if (mode == SnakeMode::Weak) {
        r.side_conditions = check_snake_side_conditions(in);
    } else {
        r.side_conditions.detail = "not evaluated (homological mode)";
    }
    return r;
}

Verdict check_snake_side_conditions(const SnakeInput& in) {
    auto core = snake_core(in);
    const auto& e = in.cls;
    auto& r = core.res;

    bool b1 = core.cond_b;
    bool b2 = has_normal_e_mono_factorization(compose(r.coker_v.proj, in.fp), e) &&
              has_normal_e_mono_factorization(compose(r.coker_w.proj, core.g2p), e);
    auto q = pullback(r.coker_u.proj, r.d);
    auto t = pair_into_pullback(r.phi, r.P.p2, q);
    bool b3 = member(e, t);

    Verdict v;
    v.instances_checked = 3;
    auto word = [](bool b) { return b ? std::string("holds") : std::string("fails"); };
    v.detail = "condition (b): " + word(b1) +
               "; (normal epi in E, mono)-factorizations: " + word(b2) +
               "; <phi, pi2> in E: " + word(b3);
    if (!(b1 && b2 && b3)) v.status = Status::Fails;
    return v;
}

Verdict three_by_three(const GridInput& in, GridDirection dir) {
    require_endpoint(in.f, in.A, in.B, "f");
    require_endpoint(in.g, in.B, in.C, "g");
    require_endpoint(in.fp, in.Ap, in.Bp, "f'");
    require_endpoint(in.gp, in.Bp, in.Cp, "g'");
    require_endpoint(in.fpp, in.App, in.Bpp, "f''");
    require_endpoint(in.gpp, in.Bpp, in.Cpp, "g''");
    require_endpoint(in.u, in.A, in.Ap, "u");
    require_endpoint(in.up, in.Ap, in.App, "u'");
    require_endpoint(in.v, in.B, in.Bp, "v");
    require_endpoint(in.vp, in.Bp, in.Bpp, "v'");
    require_endpoint(in.w, in.C, in.Cp, "w");
    require_endpoint(in.wp, in.Cp, in.Cpp, "w'");
    if (!morphism_eq(compose(in.fp, in.u), compose(in.v, in.f)))
        throw hypothesis_error("3x3: square f'u = vf does not commute");
    if (!morphism_eq(compose(in.gp, in.v), compose(in.w, in.g)))
        throw hypothesis_error("3x3: square g'v = wg does not commute");
    if (!morphism_eq(compose(in.fpp, in.up), compose(in.vp, in.fp)))
        throw hypothesis_error("3x3: square f''u' = v'f' does not commute");
    if (!morphism_eq(compose(in.gpp, in.vp), compose(in.wp, in.gp)))
        throw hypothesis_error("3x3: square g''v' = w'g' does not commute");

    const auto& e = in.cls;
    auto z = zero_object_like(in.A);
    auto require_short_column = [&](const Morphism& top, const Morphism& bot,
                                    const std::string& name, const char* n0, const char* n1,
                                    const char* n2) {
        SequenceSpec s;
        s.arrows = {zero_morphism(z, dom(top)), top, bot, zero_morphism(cod(bot), z)};
        const char* nodes[3] = {n0, n1, n2};
        for (int i = 1; i <= 3; ++i)
            require_exact_at(s, i, e,
                             "column " + name + " not E-exact at " + nodes[i - 1]);
    };
    require_short_column(in.u, in.up, "A", "A", "A'", "A''");
    require_short_column(in.v, in.vp, "B", "B", "B'", "B''");
    require_short_column(in.w, in.wp, "C", "C", "C'", "C''");

    auto mid = is_short_e_exact(in.fp, in.gp, e);
    if (mid.status != Status::Holds)
        throw hypothesis_error("3x3: middle row not E-exact (" + mid.detail + ")");

    auto first = is_short_e_exact(in.f, in.g, e);
    auto last = is_short_e_exact(in.fpp, in.gpp, e);
    auto pb = pullback(in.gpp, in.wp);
    auto t = pair_into_pullback(in.vp, in.gp, pb);
    bool extra = member(e, t);

    Verdict v;
    v.instances_checked = 1;
    auto word = [](Status s) { return s == Status::Holds ? "E-exact" : "not E-exact"; };
    v.detail = std::string("first row: ") + word(first.status) +
               "; last row: " + word(last.status) +
               "; <v', g'> in E: " + (extra ? "holds" : "fails");
    bool first_ok = first.status == Status::Holds;
    bool last_ok = last.status == Status::Holds;
    switch (dir) {
        case GridDirection::FirstFromLast:
            if (last_ok && !first_ok) v.status = Status::Fails;
            if (!last_ok) v.status = Status::Inapplicable;
            break;
        case GridDirection::LastFromFirst:
            if (first_ok && !last_ok) v.status = Status::Fails;
            if (!first_ok) v.status = Status::Inapplicable;
            break;
        case GridDirection::Both:
            if (first_ok != last_ok) v.status = Status::Fails;
            break;
    }
    return v;
}

}  // namespace relhom
