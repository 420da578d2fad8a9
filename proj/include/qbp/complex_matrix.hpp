#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qbp/errors.hpp"
#include "qbp/kernels.hpp"

namespace qbp {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Value type; immutable by convention once
// built (operations return new matrices).
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        require(a_.size() == rows_ * cols_, errc::dimension_mismatch,
                "entry count does not match shape");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat diag(const std::vector<cplx>& d) {
        Mat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return a_.size(); }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }
    std::vector<cplx>& entries() { return a_; }
    const std::vector<cplx>& entries() const { return a_; }

    Mat& operator+=(const Mat& o) {
        require(rows_ == o.rows_ && cols_ == o.cols_, errc::dimension_mismatch, "add");
        kernels::caxpy(a_.size(), 1.0, o.data(), data());
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require(rows_ == o.rows_ && cols_ == o.cols_, errc::dimension_mismatch, "sub");
        kernels::caxpy(a_.size(), -1.0, o.data(), data());
        return *this;
    }
    Mat& operator*=(cplx s) {
        kernels::cscale(a_.size(), s, data());
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, cplx s) { return a *= s; }
    friend Mat operator*(cplx s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        require(a.cols_ == b.rows_, errc::dimension_mismatch, "matmul");
        Mat c(a.rows_, b.cols_);
        kernels::cgemm(a.rows_, a.cols_, b.cols_, a.data(), b.data(), c.data());
        return c;
    }
};

Mat adjoint(const Mat& m);
Mat transpose(const Mat& m);
Mat conjugate(const Mat& m);
cplx trace(const Mat& m);
double frobenius_norm(const Mat& m);
double max_abs(const Mat& m);
Mat kron(const Mat& a, const Mat& b);

// y = A*x for an n^2-vector (used heavily by the channel recursions).
void apply(const Mat& a, const std::vector<cplx>& x, std::vector<cplx>& y);

bool is_hermitian(const Mat& m, double tol);
bool is_unitary(const Mat& m, double tol);
// PSD within tol relative to the largest eigenvalue magnitude (Hermitian required).
bool is_psd(const Mat& m, double tol);

} // namespace qbp
