#pragma once

#include <vector>

#include "qbp/complex_matrix.hpp"
#include "qbp/rng.hpp"

namespace qbp {

// Hermitian eigendecomposition result. Eigenvalues sorted descending (stable
// ties); columns of `basis` are the matching eigenvectors, so
// basis * diag(eigenvalues) * basis^dagger reconstructs the input.
struct Spectrum {
    std::vector<double> eigenvalues;
    Mat basis;

    Mat reconstruct() const;
};

// Cyclic Jacobi for complex Hermitian matrices. Deterministic; off-diagonal
// Frobenius norm driven below 1e-13 relative to the matrix norm.
Spectrum eig_hermitian(const Mat& h);

// Eigenvalues of a general complex square matrix (Hessenberg + shifted QR).
// No eigenvectors; intended for the small transfer matrices (dim <= 64).
std::vector<cplx> eig_general(const Mat& m);

// Rebuild U * f(diag) * U^dagger.
Mat from_spectrum(const Spectrum& s, const std::vector<double>& eigenvalues);

constexpr double kLogClampFloor = 1e-300;

// log of a PSD matrix; eigenvalues below `clamp` are clamped before the log.
// Default clamp (clamp == 0) resolves to 1e-12 * lambda_max, floored at 1e-300.
Mat mat_log_psd(const Mat& p, double clamp = 0.0);
Mat mat_exp(const Mat& h);
// exp(log a + log b) with the shared clamp rule extending it from PD to PSD.
Mat star_product(const Mat& a, const Mat& b, double clamp = 0.0);

// Partial trace: dims are the subsystem dimensions (their product must equal
// the side of m); keep lists the subsystem indices retained, in order.
Mat partial_trace(const Mat& m, const std::vector<std::size_t>& dims,
                  const std::vector<std::size_t>& keep);

// Embed an operator acting on the subsystems `subsys` (in that order) into the
// full space with dimensions `dims`, tensoring identity elsewhere.
Mat embed(const Mat& op, const std::vector<std::size_t>& dims,
          const std::vector<std::size_t>& subsys);

double specht_ratio(double r);
double trace_distance(const Mat& a, const Mat& b);
// Condition number lambda_max / lambda_min of a PD matrix.
double condition_number(const Mat& pd);

Mat haar_unitary(std::size_t n, Rng& rng);
// U diag(lambda) U^dagger with Haar U; lambda supplied by the caller.
Mat random_psd_from_eigs(const std::vector<double>& eigs, Rng& rng);
Mat random_hermitian(std::size_t n, Rng& rng);

// Matrix inverse via Gauss-Jordan with partial pivoting (small dense use only).
Mat inverse(const Mat& m);

// Solve the least-squares-free exact reshape (a,b),(c,d) -> (a,c),(b,d) for a
// square matrix over a product index of sides n1*n2; used for transfer/Choi
// conversions and the cycle factor reindexing.
Mat reshuffle(const Mat& m, std::size_t n1, std::size_t n2);

} // namespace qbp
