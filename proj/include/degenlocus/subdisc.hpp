#ifndef DEGENLOCUS_SUBDISC_HPP
#define DEGENLOCUS_SUBDISC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "degenlocus/covariants.hpp"
#include "degenlocus/matrix.hpp"

namespace degenlocus {

// Subdiscriminant from the spectrum: sum over (n-k)-subsets of the squared
// eigenvalue differences.
Rational sdisc_def(std::span<const Rational> eigenvalues, int k);

// Subdiscriminant from the entries: determinant of the leading
// (n-k) x (n-k) Hankel matrix of power traces p_m = tr(A^m). Eigenvalue-free
// and polynomial in the entries; agrees with sdisc_def on diagonalizable
// input.
GaussianRational sdisc(const QMat& a, int k);
MultiPoly sdisc(const PMat& a, int k);

struct SosTerm {
    Rational weight;   // the factorial of the monomial exponent
    MultiPoly poly;    // real polynomial over the Hermitian coordinates
};

struct SosCertificate {
    int n = 0;
    std::vector<SosTerm> terms;
    size_t square_bound = 0;  // 2 * C(2n-1, n-1)
    bool verified = false;
    bool symbolic = false;    // full symbolic expansion (n <= 3) vs sampled identity
    int samples = 0;
    std::uint64_t seed = 0;
};

// Sum-of-squares certificate for the discriminant of Hermitian n x n
// matrices, built from the monomial coefficients of det(x|Ax|...|A^(n-1)x).
// Verified by full symbolic expansion for n <= 3 and on sampled rational
// points for larger n; throws if verification fails.
SosCertificate sos_certificate(int n, int verify_samples = 0, std::uint64_t seed = 1);

// Exact evaluation of the certificate sum at a Hermitian point, reusing the
// covariant rather than the stored polynomials (the two coincide by
// construction).
Rational sos_sum_at(const QMat& hermitian);

// Laplacian (in x) of det(x|Ax|...|A^(n-1)x) vanishes identically on
// symmetric matrices; checked symbolically for n <= 3 and on samples beyond.
bool harmonic_check_cR(int n, int samples = 12, std::uint64_t seed = 7);

struct FkVanishingReport {
    int n = 0, k = 0, trials = 0;
    bool all_vanish = false;
    long module_dim = 0;   // dim of the irreducible with highest weight (n-k, 1^k)
    long squares = 0;      // 2 * module_dim
    std::uint64_t seed = 0;
};

// f_(k+1) vanishes exactly on Hermitian samples with n-k-1 distinct
// eigenvalues; also reports the square count promised at this (n, k).
FkVanishingReport vanishing_fk_on_stratum(int n, int k, int trials, std::uint64_t seed);

}  // namespace degenlocus

#endif
