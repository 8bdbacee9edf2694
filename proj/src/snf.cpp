#include "relhom/snf.hpp"

namespace relhom {

namespace {

// Elementary operations on d, mirrored into u / u_inv (rows) or v / v_inv
// (columns) so that u * m * v = d stays invariant.
struct Work {
    Mat d, u, v, u_inv, v_inv;

    explicit Work(const Mat& m)
        : d(m),
          u(Mat::identity(m.rows)),
          v(Mat::identity(m.cols)),
          u_inv(Mat::identity(m.rows)),
          v_inv(Mat::identity(m.cols)) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }
    // row i += k * row j
    void add_row(int i, int j, const Int& k) {
        if (k == 0) return;
        for (int c = 0; c < d.cols; ++c) d.at(i, c) += k * d.at(j, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) += k * u.at(j, c);
        for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, j) -= k * u_inv.at(r, i);
    }
    // col i += k * col j
    void add_col(int i, int j, const Int& k) {
        if (k == 0) return;
        for (int r = 0; r < d.rows; ++r) d.at(r, i) += k * d.at(r, j);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) += k * v.at(r, j);
        for (int c = 0; c < v_inv.cols; ++c) v_inv.at(j, c) -= k * v_inv.at(i, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
    }
};

}  // namespace

SnfResult smith_normal_form(const Mat& m) {
    Work w(m);
    const int nmin = std::min(m.rows, m.cols);
    int t = 0;
    for (; t < nmin; ++t) {
        // pivot: smallest nonzero |entry| in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                const Int& x = w.d.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || abs(x) < abs(w.d.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                Int q = w.d.at(i, t) / w.d.at(t, t);
                w.add_row(i, t, -q);
                if (w.d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < m.cols; ++j) {
                Int q = w.d.at(t, j) / w.d.at(t, t);
                w.add_col(j, t, -q);
                if (w.d.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder became the new smallest entry; move it to the pivot
                int qi = t, qj = t;
                for (int i = t; i < m.rows; ++i)
                    for (int j = t; j < m.cols; ++j) {
                        const Int& x = w.d.at(i, j);
                        if (x != 0 && abs(x) < abs(w.d.at(qi, qj))) { qi = i; qj = j; }
                    }
                w.swap_rows(t, qi);
                w.swap_cols(t, qj);
                continue;
            }
            // pivot must divide every trailing entry
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m.rows && bi < 0; ++i)
                for (int j = t + 1; j < m.cols; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) { bi = i; bj = j; break; }
            if (bi < 0) break;
            w.add_row(t, bi, 1);
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }
    SnfResult r{std::move(w.u), std::move(w.d), std::move(w.v), std::move(w.u_inv),
                std::move(w.v_inv), t};
    return r;
}

Mat kernel_lattice(const Mat& m) {
    SnfResult s = smith_normal_form(m);
    int t = m.cols - s.rank;
    Mat k(m.cols, t);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < t; ++j) k.at(i, j) = s.v.at(i, s.rank + j);
    return k;
}

std::optional<std::vector<Int>> solve_linear(const Mat& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw input_error("solve_linear: shape mismatch");
    SnfResult s = smith_normal_form(m);
    // m x = b  <=>  d y = u b, x = v y
    std::vector<Int> ub(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) ub[i] += s.u.at(i, j) * b[j];
    std::vector<Int> y(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(m.cols);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < m.cols; ++j) x[i] += s.v.at(i, j) * y[j];
    return x;
}

}  // namespace relhom
