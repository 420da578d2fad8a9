#include "qbp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qbp {

namespace {

constexpr double kJacobiTol = 1e-13;
constexpr int kJacobiMaxSweeps = 64;

double offdiag_norm(const Mat& a) {
    double s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

} // namespace

Mat Spectrum::reconstruct() const { return from_spectrum(*this, eigenvalues); }

Mat from_spectrum(const Spectrum& s, const std::vector<double>& eigenvalues) {
    const std::size_t n = s.basis.rows();
    require(eigenvalues.size() == n, errc::dimension_mismatch, "from_spectrum");
    // U * diag(v) * U^dagger
    Mat scaled = s.basis;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= eigenvalues[c];
    return scaled * adjoint(s.basis);
}

Spectrum eig_hermitian(const Mat& h) {
    require(h.is_square(), errc::dimension_mismatch, "eig_hermitian: non-square");
    require(is_hermitian(h, 1e-10), errc::not_hermitian, "eig_hermitian: input not Hermitian");
    const std::size_t n = h.rows();

    Mat a = h;
    Mat v = Mat::identity(n);
    const double total = frobenius_norm(a);
    const double stop = kJacobiTol * std::max(total, 1e-300);

    for (int sweep = 0; sweep < kJacobiMaxSweeps && offdiag_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx w = a(p, q);
                const double aw = std::abs(w);
                if (aw <= 1e-300) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = w / aw; // e^{i phi}
                const double tau = (aqq - app) / (2.0 * aw);
                const double t =
                    (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G is identity except in the (p,q) plane:
                //   G(p,p)=c, G(p,q)=s, G(q,p)=-s*conj(phase), G(q,q)=c*conj(phase)
                const cplx gqp = -s * std::conj(phase);
                const cplx gqq = c * std::conj(phase);
                // A <- G^dagger A G: columns first, then rows.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + gqp * akq;
                    a(k, q) = s * akp + gqq * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(gqp) * aqk;
                    a(q, k) = s * apk + std::conj(gqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + gqp * vkq;
                    v(k, q) = s * vkp + gqq * vkq;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.basis = Mat(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.basis(r, c) = v(r, order[c]);
    }
    return out;
}

namespace {

void hessenberg_inplace(Mat& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Householder vector from column k below the subdiagonal.
        double xnorm = 0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm <= 1e-300) continue;
        cplx x0 = a(k + 1, k);
        cplx alpha = (std::abs(x0) > 0 ? -(x0 / std::abs(x0)) * xnorm : cplx(-xnorm, 0));
        std::vector<cplx> vvec(n, 0);
        for (std::size_t i = k + 1; i < n; ++i) vvec[i] = a(i, k);
        vvec[k + 1] -= alpha;
        double vnorm2 = 0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(vvec[i]);
        if (vnorm2 <= 1e-300) continue;
        const double beta = 2.0 / vnorm2;
        // A <- (I - beta v v^dagger) A
        for (std::size_t c = 0; c < n; ++c) {
            cplx dot = 0;
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(vvec[i]) * a(i, c);
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, c) -= dot * vvec[i];
        }
        // A <- A (I - beta v v^dagger)
        for (std::size_t r = 0; r < n; ++r) {
            cplx dot = 0;
            for (std::size_t i = k + 1; i < n; ++i) dot += a(r, i) * vvec[i];
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(r, i) -= dot * std::conj(vvec[i]);
        }
    }
}

// Givens pair (c real, s complex) sending (f,g) -> (r,0) under
// [c, s; -conj(s), c].
void givens(cplx f, cplx g, double& c, cplx& s) {
    const double af = std::abs(f), ag = std::abs(g);
    if (ag == 0) {
        c = 1;
        s = 0;
        return;
    }
    if (af == 0) {
        c = 0;
        s = std::conj(g) / ag;
        return;
    }
    const double d = std::hypot(af, ag);
    c = af / d;
    s = (f / af) * std::conj(g) / d;
}

} // namespace

std::vector<cplx> eig_general(const Mat& m) {
    require(m.is_square(), errc::not_square, "eig_general: non-square");
    const std::size_t n = m.rows();
    std::vector<cplx> eigs(n);
    if (n == 0) return eigs;
    if (n == 1) {
        eigs[0] = m(0, 0);
        return eigs;
    }

    Mat a = m;
    hessenberg_inplace(a);
    const double scale = std::max(frobenius_norm(a), 1e-300);
    const double eps = 1e-15;

    std::size_t hi = n - 1;
    int guard = 0;
    const int max_total_iters = 200 * static_cast<int>(n);
    while (true) {
        // Deflate converged subdiagonals.
        while (hi > 0) {
            const double small =
                eps * (std::abs(a(hi - 1, hi - 1)) + std::abs(a(hi, hi)) + eps * scale);
            if (std::abs(a(hi, hi - 1)) <= small) {
                a(hi, hi - 1) = 0;
                eigs[hi] = a(hi, hi);
                --hi;
            } else {
                break;
            }
        }
        if (hi == 0) {
            eigs[0] = a(0, 0);
            break;
        }
        if (++guard > max_total_iters)
            fail(errc::no_convergence, "eig_general: QR iteration stalled");

        // Active block [lo, hi].
        std::size_t lo = hi;
        while (lo > 0) {
            const double small =
                eps * (std::abs(a(lo - 1, lo - 1)) + std::abs(a(lo, lo)) + eps * scale);
            if (std::abs(a(lo, lo - 1)) <= small) {
                a(lo, lo - 1) = 0;
                break;
            }
            --lo;
        }

        // Wilkinson shift from the trailing 2x2 of the block.
        const cplx aa = a(hi - 1, hi - 1), bb = a(hi - 1, hi), cc = a(hi, hi - 1), dd = a(hi, hi);
        const cplx tr2 = (aa + dd) * 0.5;
        const cplx disc = std::sqrt(tr2 * tr2 - (aa * dd - bb * cc));
        const cplx mu = (std::abs(tr2 + disc - dd) < std::abs(tr2 - disc - dd)) ? tr2 + disc
                                                                                : tr2 - disc;

        // One explicit QR sweep on the shifted block via Givens rotations.
        std::vector<double> cs(hi - lo);
        std::vector<cplx> ss(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) a(i, i) -= mu;
        a(hi, hi) -= mu;
        for (std::size_t k = lo; k < hi; ++k) {
            double c;
            cplx s;
            givens(a(k, k), a(k + 1, k), c, s);
            cs[k - lo] = c;
            ss[k - lo] = s;
            for (std::size_t col = k; col <= hi; ++col) {
                const cplx t1 = a(k, col), t2 = a(k + 1, col);
                a(k, col) = c * t1 + s * t2;
                a(k + 1, col) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const double c = cs[k - lo];
            const cplx s = ss[k - lo];
            const std::size_t rmax = std::min(hi, k + 2);
            for (std::size_t row = lo; row <= rmax; ++row) {
                const cplx t1 = a(row, k), t2 = a(row, k + 1);
                a(row, k) = c * t1 + std::conj(s) * t2;
                a(row, k + 1) = -s * t1 + c * t2;
            }
        }
        for (std::size_t i = lo; i < hi; ++i) a(i, i) += mu;
        a(hi, hi) += mu;
    }
    return eigs;
}

Mat mat_log_psd(const Mat& p, double clamp) {
    Spectrum s = eig_hermitian(p); // rejects non-Hermitian input
    const double top = s.eigenvalues.empty() ? 0.0 : std::max(s.eigenvalues.front(), 0.0);
    const double neg_tol = 1e-10 * std::max(top, 1.0);
    require(s.eigenvalues.empty() || s.eigenvalues.back() >= -neg_tol, errc::not_psd,
            "mat_log_psd: negative eigenvalue");
    double eff = clamp;
    if (eff <= 0.0) eff = std::max(1e-12 * top, kLogClampFloor);
    std::vector<double> lg(s.eigenvalues.size());
    for (std::size_t i = 0; i < lg.size(); ++i)
        lg[i] = std::log(std::max(s.eigenvalues[i], eff));
    return from_spectrum(s, lg);
}

Mat mat_exp(const Mat& h) {
    Spectrum s = eig_hermitian(h);
    std::vector<double> ex(s.eigenvalues.size());
    for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = std::exp(s.eigenvalues[i]);
    return from_spectrum(s, ex);
}

Mat star_product(const Mat& a, const Mat& b, double clamp) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), errc::dimension_mismatch,
            "star_product");
    return mat_exp(mat_log_psd(a, clamp) + mat_log_psd(b, clamp));
}

namespace {

std::size_t dims_product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
}

} // namespace

Mat partial_trace(const Mat& m, const std::vector<std::size_t>& dims,
                  const std::vector<std::size_t>& keep) {
    require(m.is_square(), errc::dimension_mismatch, "partial_trace: non-square");
    const std::size_t total = dims_product(dims);
    require(total == m.rows(), errc::dimension_mismatch,
            "partial_trace: dims do not factor the matrix");
    const std::size_t ns = dims.size();

    std::vector<bool> kept(ns, false);
    for (std::size_t k : keep) {
        require(k < ns, errc::dimension_mismatch, "partial_trace: bad subsystem index");
        kept[k] = true;
    }
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < ns; ++i)
        if (!kept[i]) traced.push_back(i);

    // Mixed-radix strides, first subsystem slowest.
    std::vector<std::size_t> stride(ns, 1);
    for (std::size_t i = ns; i-- > 1;) stride[i - 1] = stride[i] * dims[i];

    std::size_t keep_dim = 1;
    for (std::size_t k : keep) keep_dim *= dims[k];
    std::size_t traced_dim = total / keep_dim;

    auto keep_index = [&](const std::vector<std::size_t>& tuple) {
        std::size_t idx = 0;
        for (std::size_t k : keep) idx = idx * dims[k] + tuple[k];
        return idx;
    };

    Mat out(keep_dim, keep_dim);
    std::vector<std::size_t> rt(ns, 0), ct(ns, 0);
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t rem = r;
        for (std::size_t i = 0; i < ns; ++i) {
            rt[i] = rem / stride[i];
            rem %= stride[i];
        }
        const std::size_t orow = keep_index(rt);
        // Column shares the traced components of the row.
        for (std::size_t kc = 0; kc < keep_dim; ++kc) {
            std::size_t remc = kc;
            ct = rt;
            for (std::size_t j = keep.size(); j-- > 0;) {
                const std::size_t k = keep[j];
                ct[k] = remc % dims[k];
                remc /= dims[k];
            }
            std::size_t c = 0;
            for (std::size_t i = 0; i < ns; ++i) c += ct[i] * stride[i];
            out(orow, kc) += m(r, c);
        }
    }
    (void)traced_dim;
    (void)traced;
    return out;
}

Mat embed(const Mat& op, const std::vector<std::size_t>& dims,
          const std::vector<std::size_t>& subsys) {
    const std::size_t total = dims_product(dims);
    const std::size_t ns = dims.size();
    std::size_t sub_dim = 1;
    for (std::size_t s : subsys) sub_dim *= dims[s];
    require(op.rows() == sub_dim && op.cols() == sub_dim, errc::dimension_mismatch,
            "embed: operator does not match subsystem dimensions");

    std::vector<std::size_t> stride(ns, 1);
    for (std::size_t i = ns; i-- > 1;) stride[i - 1] = stride[i] * dims[i];

    Mat out(total, total);
    std::vector<std::size_t> rt(ns, 0), ct(ns, 0);
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t rem = r;
        for (std::size_t i = 0; i < ns; ++i) {
            rt[i] = rem / stride[i];
            rem %= stride[i];
        }
        std::size_t rsub = 0;
        for (std::size_t s : subsys) rsub = rsub * dims[s] + rt[s];
        for (std::size_t csub = 0; csub < sub_dim; ++csub) {
            const cplx v = op(rsub, csub);
            if (v == cplx(0)) continue;
            ct = rt;
            std::size_t remc = csub;
            for (std::size_t j = subsys.size(); j-- > 0;) {
                const std::size_t s = subsys[j];
                ct[s] = remc % dims[s];
                remc /= dims[s];
            }
            std::size_t c = 0;
            for (std::size_t i = 0; i < ns; ++i) c += ct[i] * stride[i];
            out(r, c) = v;
        }
    }
    return out;
}

double specht_ratio(double r) {
    require(r > 0, errc::non_positive_argument, "specht_ratio: r must be positive");
    if (std::abs(r - 1.0) < 1e-9) return 1.0;
    return (r - 1.0) * std::pow(r, 1.0 / (r - 1.0)) / (std::exp(1.0) * std::log(r));
}

double trace_distance(const Mat& a, const Mat& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), errc::dimension_mismatch,
            "trace_distance");
    Mat d = a - b;
    require(is_hermitian(d, 1e-9), errc::not_hermitian, "trace_distance: difference");
    Spectrum s = eig_hermitian(d);
    double sum = 0;
    for (double ev : s.eigenvalues) sum += std::abs(ev);
    return 0.5 * sum;
}

double condition_number(const Mat& pd) {
    Spectrum s = eig_hermitian(pd);
    require(!s.eigenvalues.empty() && s.eigenvalues.back() > 0, errc::not_pd,
            "condition_number: matrix not PD");
    return s.eigenvalues.front() / s.eigenvalues.back();
}

Mat haar_unitary(std::size_t n, Rng& rng) {
    require(n >= 1, errc::bad_dimensions, "haar_unitary: n must be >= 1");
    Mat g(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = {rng.next_normal(), rng.next_normal()};

    // Modified Gram-Schmidt QR. The R diagonal comes out real positive, which
    // is the phase convention that makes Q exactly Haar.
    Mat q = g;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx proj = 0;
            for (std::size_t r = 0; r < n; ++r) proj += std::conj(q(r, prev)) * q(r, c);
            for (std::size_t r = 0; r < n; ++r) q(r, c) -= proj * q(r, prev);
        }
        double nrm = 0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(q(r, c));
        nrm = std::sqrt(nrm);
        require(nrm > 1e-300, errc::singular_transform, "haar_unitary: degenerate sample");
        for (std::size_t r = 0; r < n; ++r) q(r, c) /= nrm;
    }
    return q;
}

Mat random_psd_from_eigs(const std::vector<double>& eigs, Rng& rng) {
    Mat u = haar_unitary(eigs.size(), rng);
    Mat scaled = u;
    for (std::size_t c = 0; c < eigs.size(); ++c)
        for (std::size_t r = 0; r < eigs.size(); ++r) scaled(r, c) *= eigs[c];
    return scaled * adjoint(u);
}

Mat random_hermitian(std::size_t n, Rng& rng) {
    Mat g(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = {rng.next_normal(), rng.next_normal()};
    Mat h = g + adjoint(g);
    h *= 0.5;
    return h;
}

Mat inverse(const Mat& m) {
    require(m.is_square(), errc::not_square, "inverse");
    const std::size_t n = m.rows();
    Mat a = m;
    Mat inv = Mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                piv = r;
            }
        require(best > 1e-300, errc::singular_transform, "inverse: singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        }
        const cplx d = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = a(r, col);
            if (f == cplx(0)) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Mat reshuffle(const Mat& m, std::size_t n1, std::size_t n2) {
    require(m.rows() == n1 * n2 && m.cols() == n1 * n2, errc::dimension_mismatch, "reshuffle");
    Mat out(n1 * n1, n2 * n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t c = 0; c < n1; ++c)
                for (std::size_t d = 0; d < n2; ++d)
                    out(a * n1 + c, b * n2 + d) = m(a * n2 + b, c * n2 + d);
    return out;
}

} // namespace qbp
