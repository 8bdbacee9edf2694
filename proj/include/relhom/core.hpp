#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace relhom {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row major. Empty dimensions are legal and show up
// routinely (zero objects have rank 0).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const = default;

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_hstack(const Mat& x, const Mat& y);
Mat mat_vstack(const Mat& x, const Mat& y);
Mat mat_diag(const std::vector<Int>& d);
Int mat_det(const Mat& m);
Int floor_mod(const Int& x, const Int& m);  // representative in [0, m)

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};
// Malformed input, unresolvable names, precondition violations. CLI exit 2.
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};
// A lemma or check was invoked on a diagram that fails its hypotheses. CLI exit 3.
struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& msg) : error(msg) {}
};
// Enumeration bound exceeded. CLI exit 3.
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};
// A table category lacks a requested limit or colimit.
struct missing_limit_error : error {
    explicit missing_limit_error(const std::string& msg) : error(msg) {}
};
// A construction that must succeed under verified hypotheses failed.
struct inconsistency_error : error {
    explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

}  // namespace relhom
