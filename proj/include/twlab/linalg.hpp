#pragma once

#include <complex>
#include <vector>

namespace tw {

// Dense symmetric/Hermitian matrices in row-major order, n x n.
using RealMatrix = std::vector<double>;
using ComplexMatrix = std::vector<std::complex<double>>;

// Householder reduction of a real symmetric matrix to tridiagonal form
// (eigenvalues only; the matrix is destroyed).  Outputs the diagonal and
// the subdiagonal (size n and n-1).
void householder_tridiag(RealMatrix& a, int n, std::vector<double>& diag,
                         std::vector<double>& offdiag);

// Same reduction for a complex Hermitian matrix; the resulting
// tridiagonal matrix is real (off-diagonal phases absorbed).
void householder_tridiag_hermitian(ComplexMatrix& a, int n,
                                   std::vector<double>& diag,
                                   std::vector<double>& offdiag);

// Largest eigenvalue of a real symmetric tridiagonal matrix by Sturm
// sequence bisection inside Gershgorin bounds.
double tridiag_largest_eigenvalue(const std::vector<double>& diag,
                                  const std::vector<double>& offdiag,
                                  double tol = 1e-12);

// All eigenvalues of a real symmetric tridiagonal matrix by implicit QL
// iteration, ascending.  Reference path for cross-checking bisection.
std::vector<double> tridiag_eigenvalues_ql(std::vector<double> diag,
                                           std::vector<double> offdiag);

// Largest eigenvalue of a dense real symmetric matrix (destroys a).
double largest_eigenvalue(RealMatrix& a, int n);

// Largest eigenvalue of a dense complex Hermitian matrix (destroys a).
double largest_eigenvalue_hermitian(ComplexMatrix& a, int n);

// Collapse eigenvalues that appear in near-identical pairs (relative
// tolerance `rel_tol`) into one representative each; used to validate
// the doubled spectra of self-dual embeddings.
std::vector<double> dedup_pairs(std::vector<double> values,
                                double rel_tol = 1e-8);

}  // namespace tw
