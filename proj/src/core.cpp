#include "relhom/core.hpp"

namespace relhom {

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw input_error("mat_mul: shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

Mat mat_hstack(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw input_error("mat_hstack: row mismatch");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat mat_vstack(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) throw input_error("mat_vstack: col mismatch");
    Mat r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

Mat mat_diag(const std::vector<Int>& d) {
    Mat r(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) r.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return r;
}

Int mat_det(const Mat& m) {
    if (m.rows != m.cols) throw input_error("mat_det: not square");
    int n = m.rows;
    if (n == 0) return 1;
    // fraction-free Gaussian elimination (Bareiss)
    Mat w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = t / prev;
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

Int floor_mod(const Int& x, const Int& m) {
    if (m == 0) return x;
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace relhom
