#include "qbp/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qbp/linalg.hpp"

namespace qbp {

Mat adjoint(const Mat& m) {
    Mat out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
    return out;
}

Mat transpose(const Mat& m) {
    Mat out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

Mat conjugate(const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) out.entries()[i] = std::conj(m.entries()[i]);
    return out;
}

cplx trace(const Mat& m) {
    require(m.is_square(), errc::dimension_mismatch, "trace of non-square matrix");
    cplx t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const Mat& m) {
    double s = 0;
    for (const cplx& z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const Mat& m) {
    double s = 0;
    for (const cplx& z : m.entries()) s = std::max(s, std::abs(z));
    return s;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            cplx v = a(ra, ca);
            if (v == cplx(0)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb) {
                const cplx* src = b.data() + rb * b.cols();
                cplx* dst = out.data() + (ra * b.rows() + rb) * out.cols() + ca * b.cols();
                for (std::size_t cb = 0; cb < b.cols(); ++cb) dst[cb] = v * src[cb];
            }
        }
    return out;
}

void apply(const Mat& a, const std::vector<cplx>& x, std::vector<cplx>& y) {
    require(a.cols() == x.size(), errc::dimension_mismatch, "apply");
    y.resize(a.rows());
    kernels::cgemv(a.rows(), a.cols(), a.data(), x.data(), y.data());
}

bool is_hermitian(const Mat& m, double tol) {
    if (!m.is_square()) return false;
    double scale = std::max(1.0, max_abs(m));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale) return false;
    return true;
}

bool is_unitary(const Mat& m, double tol) {
    if (!m.is_square()) return false;
    Mat g = adjoint(m) * m;
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return max_abs(g) <= tol;
}

bool is_psd(const Mat& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    Spectrum s = eig_hermitian(m);
    if (s.eigenvalues.empty()) return true;
    double top = std::max(s.eigenvalues.front(), 0.0);
    double floor = -tol * std::max(top, 1.0);
    return s.eigenvalues.back() >= floor;
}

} // namespace qbp
