#include "relhom/tablecat.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace relhom {

int TableCategory::compose(int g, int f) const {
    if (cod[f] != dom[g]) throw input_error("tablecat: composition endpoint mismatch");
    int r = comp[g][f];
    if (r < 0) throw input_error("tablecat: missing composite");
    return r;
}

int TableCategory::zero_arrow(int a, int b) const {
    if (zero < 0) throw input_error("tablecat: category has no zero object");
    return compose(hom[zero][b][0], hom[a][zero][0]);
}

TableCatPtr tablecat_make(int n_obj, std::vector<int> dom, std::vector<int> cod,
                          std::vector<int> identity, std::vector<std::vector<int>> comp) {
    auto c = std::make_shared<TableCategory>();
    c->n_obj = n_obj;
    c->dom = std::move(dom);
    c->cod = std::move(cod);
    c->identity = std::move(identity);
    c->comp = std::move(comp);
    const int m = c->n_mor();
    if (n_obj < 1) throw input_error("tablecat: need at least one object");
    if (static_cast<int>(c->cod.size()) != m || static_cast<int>(c->identity.size()) != n_obj ||
        static_cast<int>(c->comp.size()) != m)
        throw input_error("tablecat: table shape mismatch");
    for (int a = 0; a < m; ++a) {
        if (c->dom[a] < 0 || c->dom[a] >= n_obj || c->cod[a] < 0 || c->cod[a] >= n_obj)
            throw input_error("tablecat: arrow endpoint out of range");
        if (static_cast<int>(c->comp[a].size()) != m)
            throw input_error("tablecat: composition table shape mismatch");
    }
    for (int o = 0; o < n_obj; ++o) {
        int e = c->identity[o];
        if (e < 0 || e >= m || c->dom[e] != o || c->cod[e] != o)
            throw input_error("tablecat: identity arrow of object " + std::to_string(o) +
                              " is not an endomorphism of it");
    }
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int r = c->comp[g][f];
            if (c->cod[f] != c->dom[g]) continue;
            if (r < 0) throw input_error("tablecat: missing composite for a composable pair");
            if (r >= m || c->dom[r] != c->dom[f] || c->cod[r] != c->cod[g])
                throw input_error("tablecat: composite has wrong endpoints");
        }
    c->hom.assign(n_obj, std::vector<std::vector<int>>(n_obj));
    for (int a = 0; a < m; ++a) c->hom[c->dom[a]][c->cod[a]].push_back(a);
    // zero object: both initial and terminal; least such index
    for (int z = 0; z < n_obj && c->zero < 0; ++z) {
        bool ok = true;
        for (int x = 0; x < n_obj && ok; ++x)
            ok = c->hom[z][x].size() == 1 && c->hom[x][z].size() == 1;
        if (ok) c->zero = z;
    }
    return c;
}

TableCheck tablecat_validate(const TableCategory& c) {
    const int m = c.n_mor();
    for (int f = 0; f < m; ++f) {
        if (c.comp[c.identity[c.cod[f]]][f] != f)
            return {false, "identity law fails: id . " + std::to_string(f)};
        if (c.comp[f][c.identity[c.dom[f]]] != f)
            return {false, "identity law fails: " + std::to_string(f) + " . id"};
    }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (c.cod[g] != c.dom[h]) continue;
            for (int f = 0; f < m; ++f) {
                if (c.cod[f] != c.dom[g]) continue;
                if (c.comp[c.comp[h][g]][f] != c.comp[h][c.comp[g][f]])
                    return {false, "associativity fails at triple (" + std::to_string(h) + "," +
                                       std::to_string(g) + "," + std::to_string(f) + ")"};
            }
        }
    if (c.zero < 0) return {false, "no zero object"};
    return {true, ""};
}

std::optional<TableKernel> tc_kernel(const TableCategory& c, int f) {
    const int a = c.dom[f], b = c.cod[f];
    for (int ko = 0; ko < c.n_obj; ++ko)
        for (int k : c.hom[ko][a]) {
            if (c.compose(f, k) != c.zero_arrow(ko, b)) continue;
            bool universal = true;
            for (int xo = 0; xo < c.n_obj && universal; ++xo)
                for (int x : c.hom[xo][a]) {
                    if (c.compose(f, x) != c.zero_arrow(xo, b)) continue;
                    int mediating = 0;
                    for (int u : c.hom[xo][ko])
                        if (c.compose(k, u) == x) ++mediating;
                    if (mediating != 1) { universal = false; break; }
                }
            if (universal) return TableKernel{ko, k};
        }
    return std::nullopt;
}

std::optional<TableCokernel> tc_cokernel(const TableCategory& c, int f) {
    const int a = c.dom[f], b = c.cod[f];
    for (int qo = 0; qo < c.n_obj; ++qo)
        for (int q : c.hom[b][qo]) {
            if (c.compose(q, f) != c.zero_arrow(a, qo)) continue;
            bool universal = true;
            for (int xo = 0; xo < c.n_obj && universal; ++xo)
                for (int t : c.hom[b][xo]) {
                    if (c.compose(t, f) != c.zero_arrow(a, xo)) continue;
                    int mediating = 0;
                    for (int u : c.hom[qo][xo])
                        if (c.compose(u, q) == t) ++mediating;
                    if (mediating != 1) { universal = false; break; }
                }
            if (universal) return TableCokernel{qo, q};
        }
    return std::nullopt;
}

std::optional<TablePullback> tc_pullback(const TableCategory& c, int f, int g) {
    if (c.cod[f] != c.cod[g]) throw input_error("tc_pullback: codomain mismatch");
    for (int po = 0; po < c.n_obj; ++po)
        for (int p1 : c.hom[po][c.dom[f]])
            for (int p2 : c.hom[po][c.dom[g]]) {
                if (c.compose(f, p1) != c.compose(g, p2)) continue;
                bool universal = true;
                for (int xo = 0; xo < c.n_obj && universal; ++xo)
                    for (int x1 : c.hom[xo][c.dom[f]]) {
                        if (!universal) break;
                        for (int x2 : c.hom[xo][c.dom[g]]) {
                            if (c.compose(f, x1) != c.compose(g, x2)) continue;
                            int mediating = 0;
                            for (int u : c.hom[xo][po])
                                if (c.compose(p1, u) == x1 && c.compose(p2, u) == x2) ++mediating;
                            if (mediating != 1) { universal = false; break; }
                        }
                    }
                if (universal) return TablePullback{po, p1, p2};
            }
    return std::nullopt;
}

namespace {

bool cone_commutes(const TableCategory& c, const std::vector<int>& objs,
                   const std::vector<ShapeArrow>& arrows, int apex,
                   const std::vector<int>& legs) {
    for (const auto& ar : arrows)
        if (c.compose(ar.arrow, legs[ar.src]) != legs[ar.dst]) return false;
    (void)objs;
    (void)apex;
    return true;
}

// enumerate all leg tuples from apex into the shape objects
void all_cones(const TableCategory& c, const std::vector<int>& objs, int apex, size_t i,
               std::vector<int>& legs, const std::function<void(const std::vector<int>&)>& emit) {
    if (i == objs.size()) {
        emit(legs);
        return;
    }
    for (int l : c.hom[apex][objs[i]]) {
        legs[i] = l;
        all_cones(c, objs, apex, i + 1, legs, emit);
    }
}

}  // namespace

std::optional<TableCone> tc_find_limit(const TableCategory& c, const std::vector<int>& objs,
                                       const std::vector<ShapeArrow>& arrows) {
    for (const auto& ar : arrows)
        if (c.dom[ar.arrow] != objs[ar.src] || c.cod[ar.arrow] != objs[ar.dst])
            throw input_error("tc_find_limit: shape arrow endpoints do not match");
    std::optional<TableCone> found;
    for (int apex = 0; apex < c.n_obj && !found; ++apex) {
        std::vector<int> legs(objs.size());
        std::vector<std::vector<int>> candidates;
        all_cones(c, objs, apex, 0, legs, [&](const std::vector<int>& l) {
            if (cone_commutes(c, objs, arrows, apex, l)) candidates.push_back(l);
        });
        for (const auto& cand : candidates) {
            bool universal = true;
            for (int xo = 0; xo < c.n_obj && universal; ++xo) {
                std::vector<int> xl(objs.size());
                all_cones(c, objs, xo, 0, xl, [&](const std::vector<int>& x) {
                    if (!universal || !cone_commutes(c, objs, arrows, xo, x)) return;
                    int mediating = 0;
                    for (int u : c.hom[xo][apex]) {
                        bool match = true;
                        for (size_t i = 0; i < objs.size(); ++i)
                            if (c.compose(cand[i], u) != x[i]) { match = false; break; }
                        if (match) ++mediating;
                    }
                    if (mediating != 1) universal = false;
                });
            }
            if (universal) { found = TableCone{apex, cand}; break; }
        }
    }
    return found;
}

bool tc_is_mono(const TableCategory& c, int f) {
    for (int xo = 0; xo < c.n_obj; ++xo)
        for (int g : c.hom[xo][c.dom[f]])
            for (int h : c.hom[xo][c.dom[f]])
                if (g != h && c.compose(f, g) == c.compose(f, h)) return false;
    return true;
}

bool tc_is_epi(const TableCategory& c, int f) {
    for (int xo = 0; xo < c.n_obj; ++xo)
        for (int g : c.hom[c.cod[f]][xo])
            for (int h : c.hom[c.cod[f]][xo])
                if (g != h && c.compose(g, f) == c.compose(h, f)) return false;
    return true;
}

std::optional<int> tc_inverse(const TableCategory& c, int f) {
    for (int g : c.hom[c.cod[f]][c.dom[f]])
        if (c.compose(g, f) == c.identity[c.dom[f]] && c.compose(f, g) == c.identity[c.cod[f]])
            return g;
    return std::nullopt;
}

bool tc_is_iso(const TableCategory& c, int f) { return tc_inverse(c, f).has_value(); }

std::optional<int> tc_section(const TableCategory& c, int f) {
    for (int s : c.hom[c.cod[f]][c.dom[f]])
        if (c.compose(f, s) == c.identity[c.cod[f]]) return s;
    return std::nullopt;
}

bool tc_is_regular_epi(const TableCategory& c, int f) {
    auto kp = tc_pullback(c, f, f);
    if (!kp) throw missing_limit_error("tc_is_regular_epi: kernel pair does not exist");
    const int r1 = kp->p1, r2 = kp->p2;
    for (int xo = 0; xo < c.n_obj; ++xo)
        for (int t : c.hom[c.dom[f]][xo]) {
            if (c.compose(t, r1) != c.compose(t, r2)) continue;
            int mediating = 0;
            for (int h : c.hom[c.cod[f]][xo])
                if (c.compose(h, f) == t) ++mediating;
            if (mediating != 1) return false;
        }
    return true;
}

bool tc_is_normal_epi(const TableCategory& c, int f) {
    const int a = c.dom[f], b = c.cod[f];
    for (int go = 0; go < c.n_obj; ++go)
        for (int g : c.hom[go][a]) {
            if (c.compose(f, g) != c.zero_arrow(go, b)) continue;
            bool universal = true;
            for (int xo = 0; xo < c.n_obj && universal; ++xo)
                for (int t : c.hom[a][xo]) {
                    if (c.compose(t, g) != c.zero_arrow(go, xo)) continue;
                    int mediating = 0;
                    for (int h : c.hom[b][xo])
                        if (c.compose(h, f) == t) ++mediating;
                    if (mediating != 1) { universal = false; break; }
                }
            if (universal) return true;
        }
    return false;
}

bool tc_is_normal_mono(const TableCategory& c, int f) {
    const int a = c.dom[f], b = c.cod[f];
    for (int go = 0; go < c.n_obj; ++go)
        for (int g : c.hom[b][go]) {
            if (c.compose(g, f) != c.zero_arrow(a, go)) continue;
            bool universal = true;
            for (int xo = 0; xo < c.n_obj && universal; ++xo)
                for (int x : c.hom[xo][b]) {
                    if (c.compose(g, x) != c.zero_arrow(xo, go)) continue;
                    int mediating = 0;
                    for (int u : c.hom[xo][a])
                        if (c.compose(f, u) == x) ++mediating;
                    if (mediating != 1) { universal = false; break; }
                }
            if (universal) return true;
        }
    return false;
}

// ---------------------------------------------------------------------------
// enumeration of small pointed categories

namespace {

struct Builder {
    int n_obj;
    std::vector<int> dom, cod, identity;
    std::vector<std::vector<int>> comp;
    std::vector<std::pair<int, int>> unknown;  // composable non-identity pairs (g, f)
    std::vector<TableCatPtr> out;
    std::set<std::string>* seen;

    int m() const { return static_cast<int>(dom.size()); }

    bool assoc_ok() const {
        const int n = m();
        for (int h = 0; h < n; ++h)
            for (int g = 0; g < n; ++g) {
                if (cod[g] != dom[h]) continue;
                int hg = comp[h][g];
                for (int f = 0; f < n; ++f) {
                    if (cod[f] != dom[g]) continue;
                    int gf = comp[g][f];
                    if (hg >= 0 && gf >= 0) {
                        int l = comp[hg][f], r = comp[h][gf];
                        if (l >= 0 && r >= 0 && l != r) return false;
                    }
                }
            }
        return true;
    }

    void leaf() {
        auto cat = tablecat_make(n_obj, dom, cod, identity, comp);
        if (cat->zero < 0) return;
        if (!tablecat_validate(*cat).ok) return;
        std::string key = tablecat_canonical_key(*cat);
        if (seen->insert(std::move(key)).second) out.push_back(cat);
    }

    void fill(size_t i) {
        if (i == unknown.size()) {
            leaf();
            return;
        }
        auto [g, f] = unknown[i];
        for (int r = 0; r < m(); ++r) {
            if (dom[r] != dom[f] || cod[r] != cod[g]) continue;
            comp[g][f] = r;
            if (assoc_ok()) fill(i + 1);
        }
        comp[g][f] = -1;
    }
};

void distribute_arrows(int n_obj, int extra, int from, std::vector<std::pair<int, int>>& cur,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (extra == 0) {
        emit(cur);
        return;
    }
    const int pairs = n_obj * n_obj;
    for (int p = from; p < pairs; ++p) {
        cur.emplace_back(p / n_obj, p % n_obj);
        distribute_arrows(n_obj, extra - 1, p, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::string tablecat_canonical_key(const TableCategory& c) {
    const int k = c.n_obj, m = c.n_mor();
    std::vector<int> extra;  // non-identity arrows
    std::vector<bool> is_id(m, false);
    for (int o = 0; o < k; ++o) is_id[c.identity[o]] = true;
    for (int a = 0; a < m; ++a)
        if (!is_id[a]) extra.push_back(a);

    std::vector<int> operm(k);
    for (int i = 0; i < k; ++i) operm[i] = i;
    std::string best;
    do {
        std::vector<int> aperm(extra.size());
        for (size_t i = 0; i < extra.size(); ++i) aperm[i] = static_cast<int>(i);
        do {
            // new arrow order: identities of new objects 0..k-1, then permuted extras
            std::vector<int> order(m);   // new id -> old arrow
            std::vector<int> newid(m);   // old arrow -> new id
            std::vector<int> obj_new(k);  // old object -> new object
            for (int i = 0; i < k; ++i) obj_new[operm[i]] = i;
            for (int i = 0; i < k; ++i) order[i] = c.identity[operm[i]];
            for (size_t i = 0; i < extra.size(); ++i) order[k + i] = extra[aperm[i]];
            for (int i = 0; i < m; ++i) newid[order[i]] = i;
            std::string key;
            key += static_cast<char>('0' + k);
            for (int i = k; i < m; ++i)
                key += static_cast<char>('a' + obj_new[c.dom[order[i]]] * 8 +
                                         obj_new[c.cod[order[i]]]);
            for (int g = 0; g < m; ++g)
                for (int f = 0; f < m; ++f) {
                    int r = c.comp[order[g]][order[f]];
                    key += static_cast<char>(r < 0 ? '.' : 'A' + newid[r]);
                }
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(aperm.begin(), aperm.end()));
    } while (std::next_permutation(operm.begin(), operm.end()));
    return best;
}

std::vector<TableCatPtr> enumerate_categories(int max_morphisms, int budget) {
    if (max_morphisms > budget)
        throw budget_error("enumerate_categories: max_morphisms exceeds budget");
    std::set<std::string> seen;
    std::vector<TableCatPtr> out;
    for (int k = 1; k <= max_morphisms; ++k) {
        for (int extra = 0; extra + k <= max_morphisms; ++extra) {
            std::vector<std::pair<int, int>> cur;
            distribute_arrows(k, extra, 0, cur,
                              [&](const std::vector<std::pair<int, int>>& arrows) {
                // a zero object needs singleton hom-sets both ways; prune
                // distributions that cannot have one before filling tables
                std::vector<std::vector<int>> cnt(k, std::vector<int>(k, 0));
                for (int i = 0; i < k; ++i) cnt[i][i] = 1;
                for (auto [a, b2] : arrows) ++cnt[a][b2];
                bool feasible = false;
                for (int z = 0; z < k && !feasible; ++z) {
                    feasible = true;
                    for (int x = 0; x < k; ++x)
                        if (cnt[z][x] != 1 || cnt[x][z] != 1) { feasible = false; break; }
                }
                if (!feasible) return;
                Builder b;
                b.n_obj = k;
                b.seen = &seen;
                const int m = k + static_cast<int>(arrows.size());
                b.dom.resize(m);
                b.cod.resize(m);
                b.identity.resize(k);
                for (int i = 0; i < k; ++i) {
                    b.dom[i] = b.cod[i] = i;
                    b.identity[i] = i;
                }
                for (size_t i = 0; i < arrows.size(); ++i) {
                    b.dom[k + i] = arrows[i].first;
                    b.cod[k + i] = arrows[i].second;
                }
                b.comp.assign(m, std::vector<int>(m, -1));
                for (int f = 0; f < m; ++f) {
                    b.comp[b.identity[b.cod[f]]][f] = f;
                    b.comp[f][b.identity[b.dom[f]]] = f;
                }
                for (int g = k; g < m; ++g)
                    for (int f = k; f < m; ++f)
                        if (b.cod[f] == b.dom[g] && b.comp[g][f] < 0)
                            b.unknown.emplace_back(g, f);
                b.fill(0);
                out.insert(out.end(), b.out.begin(), b.out.end());
            });
        }
    }
    std::sort(out.begin(), out.end(), [](const TableCatPtr& x, const TableCatPtr& y) {
        if (x->n_mor() != y->n_mor()) return x->n_mor() < y->n_mor();
        return tablecat_canonical_key(*x) < tablecat_canonical_key(*y);
    });
    return out;
}

}  // namespace relhom
