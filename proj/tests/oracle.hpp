// independent element-chase oracles for the concrete backends
#pragma once

#include <algorithm>
#include <set>

#include "relhom/lemmas.hpp"

namespace relhom::oracle {

inline std::set<long> image_set(const Morphism& f) {
    std::set<long> s;
    for (long x = 0; x < obj_order(dom(f)); ++x) s.insert(apply_elem(f, x));
    return s;
}

inline std::set<long> kernel_set(const Morphism& f) {
    std::set<long> s;
    for (long x = 0; x < obj_order(dom(f)); ++x)
        if (apply_elem(f, x) == 0) s.insert(x);
    return s;
}

inline bool injective(const Morphism& f) {
    return (long)image_set(f).size() == obj_order(dom(f));
}

inline bool surjective(const Morphism& f) {
    return (long)image_set(f).size() == obj_order(cod(f));
}

// E-exactness at the node between prev and next, by elements
inline bool exact_regular(const Morphism& prev, const Morphism& next) {
    return image_set(prev) == kernel_set(next);  // corestriction onto the kernel
}

inline bool exact_all(const Morphism& prev, const Morphism& next) {
    auto im = image_set(prev), k = kernel_set(next);
    return std::includes(k.begin(), k.end(), im.begin(), im.end());
}

// 0 -> A -f-> B -g-> C -> 0 with E the surjections
inline bool short_exact_regular(const Morphism& f, const Morphism& g) {
    return injective(f) && surjective(g) && exact_regular(f, g);
}

// plain abelian snake: chases d elementwise and re-derives the six-term
// exactness; only meaningful when E plays the surjection role
inline bool snake_matches(const SnakeInput& in, const SnakeResult& r) {
    // d by chase: k in Ker(w) -> c -> some b in g^{-1}(c) -> v(b) -> a' -> [a']
    for (long k = 0; k < obj_order(dom(r.d)); ++k) {
        long c = apply_elem(r.ker_w.incl, k);
        long b = -1;
        for (long x = 0; x < obj_order(in.B) && b < 0; ++x)
            if (apply_elem(in.g, x) == c) b = x;
        if (b < 0) return false;
        long bp = apply_elem(in.v, b);
        long ap = -1;
        for (long y = 0; y < obj_order(in.Ap) && ap < 0; ++y)
            if (apply_elem(in.fp, y) == bp) ap = y;
        if (ap < 0) return false;
        if (apply_elem(r.d, k) != apply_elem(r.coker_u.proj, ap)) return false;
    }
    const auto& a = r.six_term.arrows;
    for (int i = 1; i <= 4; ++i)
        if (!exact_regular(a[i - 1], a[i])) return false;
    return true;
}

}  // namespace relhom::oracle
