#pragma once

#include "relhom/axioms.hpp"

namespace relhom {

// composable chain A_0 -> A_1 -> ... -> A_n; zero ends are ordinary arrows
struct SequenceSpec {
    std::vector<Morphism> arrows;
};

// Definition 4.1(i) at the interior node A_i (1 <= i < arrows.size()):
// f_{i-1} = m e with m = ker(f_i) and e in E
Verdict is_e_exact_at(const SequenceSpec& seq, int i, const EClass& e);
// E-exact at every interior node
Verdict is_e_exact(const SequenceSpec& seq, const EClass& e);

// 0 -> A -f-> B -g-> C -> 0 is E-exact iff f = ker(g) and g in E
Verdict is_short_e_exact(const Morphism& f, const Morphism& g, const EClass& e);

// f = m n with n a normal epimorphism in E and m a monomorphism
bool has_normal_e_mono_factorization(const Morphism& f, const EClass& e);

// Lemma 4.2 grid: columns u, v, w between rows A -f-> B -g-> C -> 0 and
// 0 -> A' -f'-> B' -g'-> C'
struct SnakeInput {
    ObjectRef A, B, C, Ap, Bp, Cp;
    Morphism f, g, fp, gp, u, v, w;
    EClass cls;
};

enum class SnakeMode { Homological, Weak };

struct SnakeResult {
    KernelData ker_u, ker_v, ker_w;
    CokernelData coker_u, coker_v, coker_w;
    Morphism kappa1, kappa2;  // Ker(u) -> Ker(v) -> Ker(w)
    Morphism d;               // Ker(w) -> Coker(u)
    Morphism gamma1, gamma2;  // Coker(u) -> Coker(v) -> Coker(w)
    PullbackData P;           // B x_C Ker(w)
    Morphism phi;             // P -> A', induced by f' and v pi1
    SequenceSpec six_term;
    std::vector<std::pair<std::string, Verdict>> exact_at;
    Verdict side_conditions;  // evaluated in weak mode
};

// hypothesis failures throw hypothesis_error naming the clause; a lift or
// factorization failing after the hypotheses hold is an inconsistency_error
SnakeResult snake(const SnakeInput& in, SnakeMode mode);

// the three bullet conditions after Lemma 4.2, each reported by name
Verdict check_snake_side_conditions(const SnakeInput& in);

// Lemma 4.3 grid: rows (f,g), (f',g'), (f'',g'') and columns (u,u'), (v,v'),
// (w,w'), all bordered by zero
struct GridInput {
    ObjectRef A, B, C, Ap, Bp, Cp, App, Bpp, Cpp;
    Morphism f, g, fp, gp, fpp, gpp;
    Morphism u, v, w, up, vp, wp;
    EClass cls;
};

enum class GridDirection { FirstFromLast, LastFromFirst, Both };

Verdict three_by_three(const GridInput& in, GridDirection dir);

}  // namespace relhom
