#pragma once

#include <optional>

#include "relhom/core.hpp"

namespace relhom {

// u * m * v = d with u, v unimodular and d diagonal, nonnegative,
// d(i,i) | d(i+1,i+1). u_inv and v_inv are the tracked inverses.
struct SnfResult {
    Mat u, d, v, u_inv, v_inv;
    int rank = 0;  // number of nonzero diagonal entries
};

SnfResult smith_normal_form(const Mat& m);

// Columns generate the lattice { x : m x = 0 }.
Mat kernel_lattice(const Mat& m);

// One integer solution of m x = b, if any.
std::optional<std::vector<Int>> solve_linear(const Mat& m, const std::vector<Int>& b);

}  // namespace relhom
