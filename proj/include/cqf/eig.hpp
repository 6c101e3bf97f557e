#pragma once

#include <complex>
#include <vector>

#include "cqf/mat.hpp"

namespace cqf {

/// Eigenvalues of a square real matrix via balancing, Householder
/// Hessenberg reduction and Francis double-shift QR iteration on the
/// resulting Hessenberg form. Unordered. Throws ConvergenceFailure if the
/// iteration has not deflated everything after 100*n sweeps.
std::vector<std::complex<double>> eigenvalues(const Mat& a);

/// max Re(eig(a)); the stability margin of the flow x' = a x.
double spectral_abscissa(const Mat& a);

/// 2-norm (largest |eigenvalue|) of a symmetric matrix.
double sym_norm2(const Mat& s);

/// Smallest eigenvalue of a symmetric matrix.
double sym_min_eig(const Mat& s);

bool is_hurwitz(const Mat& a, double margin);

}  // namespace cqf
