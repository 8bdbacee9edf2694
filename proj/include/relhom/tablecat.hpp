#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relhom/core.hpp"

namespace relhom {

// Explicitly tabulated finite pointed category.
struct TableCategory {
    int n_obj = 0;
    std::vector<int> dom, cod;           // per arrow
    std::vector<int> identity;           // per object -> arrow id
    std::vector<std::vector<int>> comp;  // comp[g][f] = g after f, -1 when not composable
    int zero = -1;                       // zero object, -1 when absent
    std::vector<std::vector<std::vector<int>>> hom;  // hom[a][b] = sorted arrow ids

    int n_mor() const { return static_cast<int>(dom.size()); }
    int compose(int g, int f) const;  // throws on endpoint mismatch
    int zero_arrow(int a, int b) const;
};

using TableCatPtr = std::shared_ptr<const TableCategory>;

struct TableCheck {
    bool ok = true;
    std::string detail;
};

// Builds hom lists and locates the zero object. Throws input_error on
// structurally malformed tables (bad indices, missing composites).
TableCatPtr tablecat_make(int n_obj, std::vector<int> dom, std::vector<int> cod,
                          std::vector<int> identity, std::vector<std::vector<int>> comp);

// Associativity, identity laws, zero object existence.
TableCheck tablecat_validate(const TableCategory& c);

struct TableKernel {
    int obj;
    int incl;
};
struct TableCokernel {
    int obj;
    int proj;
};
struct TablePullback {
    int obj;
    int p1, p2;
};

std::optional<TableKernel> tc_kernel(const TableCategory& c, int f);
std::optional<TableCokernel> tc_cokernel(const TableCategory& c, int f);
std::optional<TablePullback> tc_pullback(const TableCategory& c, int f, int g);

// limit of an arbitrary finite diagram shape: objects plus arrows of the
// category between them; returns apex and one projection per shape object
struct TableCone {
    int apex;
    std::vector<int> legs;
};
struct ShapeArrow {
    int src, dst;  // indices into the shape's object list
    int arrow;     // arrow of the category
};
std::optional<TableCone> tc_find_limit(const TableCategory& c, const std::vector<int>& objs,
                                       const std::vector<ShapeArrow>& arrows);

bool tc_is_mono(const TableCategory& c, int f);
bool tc_is_epi(const TableCategory& c, int f);
bool tc_is_iso(const TableCategory& c, int f);
std::optional<int> tc_inverse(const TableCategory& c, int f);
std::optional<int> tc_section(const TableCategory& c, int f);
bool tc_is_regular_epi(const TableCategory& c, int f);   // coequalizer of its kernel pair
bool tc_is_normal_epi(const TableCategory& c, int f);    // cokernel of some morphism
bool tc_is_normal_mono(const TableCategory& c, int f);   // kernel of some morphism

// all pointed categories with at most max_morphisms arrows, canonical order,
// deduplicated by the lexicographically least table under relabeling
std::vector<TableCatPtr> enumerate_categories(int max_morphisms, int budget = 6);

// the canonical relabeling key, exposed for dedup tests
std::string tablecat_canonical_key(const TableCategory& c);

}  // namespace relhom
