#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "relhom/snf.hpp"

using namespace relhom;

namespace {

Mat make(int r, int c, std::initializer_list<long> vals) {
    Mat m(r, c);
    int i = 0;
    for (long v : vals) m.a[i++] = v;
    return m;
}

void check_snf(const Mat& m) {
    SnfResult s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    CHECK(abs(mat_det(s.u)) == 1);
    CHECK(abs(mat_det(s.v)) == 1);
    CHECK(mat_mul(s.u, s.u_inv) == Mat::identity(m.rows));
    CHECK(mat_mul(s.v, s.v_inv) == Mat::identity(m.cols));
    for (int i = 0; i < std::min(m.rows, m.cols); ++i) {
        for (int j = 0; j < m.cols; ++j)
            if (j != i) CHECK(s.d.at(i, j) == 0);
        CHECK(s.d.at(i, i) >= 0);
        if (i + 1 < std::min(m.rows, m.cols) && s.d.at(i + 1, i + 1) != 0)
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
    Mat m = make(2, 2, {2, 0, 0, 3});
    SnfResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    check_snf(m);
}

TEST_CASE("snf of identity and zero") {
    CHECK(smith_normal_form(Mat::identity(3)).d == Mat::identity(3));
    Mat z(2, 3);
    CHECK(smith_normal_form(z).d == z);
    CHECK(smith_normal_form(z).rank == 0);
    check_snf(Mat(0, 0));
    check_snf(Mat(0, 2));
    check_snf(Mat(2, 0));
}

TEST_CASE("snf on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(0, 5), val(-9, 9);
    for (int t = 0; t < 300; ++t) {
        Mat m(dim(rng), dim(rng));
        for (Int& x : m.a) x = val(rng);
        check_snf(m);
    }
}

TEST_CASE("kernel lattice spans exactly the kernel") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 4), val(-6, 6);
    for (int t = 0; t < 200; ++t) {
        Mat m(dim(rng), dim(rng));
        for (Int& x : m.a) x = val(rng);
        Mat k = kernel_lattice(m);
        Mat prod = mat_mul(m, k);
        for (const Int& x : prod.a) CHECK(x == 0);
        // rank of m plus kernel dimension equals column count
        CHECK(smith_normal_form(m).rank + k.cols == m.cols);
    }
}

TEST_CASE("solve_linear finds solutions iff they exist") {
    Mat m = make(2, 2, {2, 0, 0, 3});
    auto x = solve_linear(m, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!solve_linear(m, {1, 0}).has_value());

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> dim(1, 4), val(-5, 5);
    for (int t = 0; t < 200; ++t) {
        Mat a(dim(rng), dim(rng));
        for (Int& v : a.a) v = val(rng);
        std::vector<Int> x0(a.cols);
        for (Int& v : x0) v = val(rng);
        std::vector<Int> b(a.rows);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) b[i] += a.at(i, j) * x0[j];
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        for (int i = 0; i < a.rows; ++i) {
            Int got = 0;
            for (int j = 0; j < a.cols; ++j) got += a.at(i, j) * (*sol)[j];
            CHECK(got == b[i]);
        }
    }
}
