#ifndef DEGENLOCUS_COVARIANTS_HPP
#define DEGENLOCUS_COVARIANTS_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "degenlocus/matrix.hpp"
#include "degenlocus/spaces.hpp"

namespace degenlocus {

// Auxiliary form variables x1..xn live in a namespace of their own, appended
// after the matrix coordinates, so covariant values on symbolic matrices are
// cleanly bigraded.
MultiPoly::VarList extend_with_aux(const MultiPoly::VarList& base, int n_aux);

// Traceless projection A - tr(A)/n * I.
QMat c1(const QMat& a);
PMat c1(const PMat& a);

// c1(c1(A)^2), defined on 3x3 matrices.
QMat c2(const QMat& a);
PMat c2(const PMat& a);

// (tr A, tr(c1(A)^2)/6, det(c1(A))/2) on 3x3 matrices.
std::array<GaussianRational, 3> d_invariants(const QMat& a);
std::array<MultiPoly, 3> d_invariants(const PMat& a);

// det(x | Ax | A^2 x): homogeneous cubic in x1..x3 (3x3 only).
MultiPoly c3(const QMat& a);
MultiPoly c3(const PMat& a);

// det of the rows x^T, x^T A, x^T A^2; equals c3 of the transpose.
MultiPoly c4(const QMat& a);
MultiPoly c4(const PMat& a);

// det(x | Ax | ... | A^(n-1) x): the degree-n covariant for any n.
MultiPoly c_full(const QMat& a);
MultiPoly c_full(const PMat& a);

// Maximal minors of [vec I | vec A | ... | vec A^(n-k)] (n^2 rows, row-major
// vectorization); row subsets enumerated in lexicographic order. All C(n^2,
// n-k+1) coordinates vanish exactly when deg(m_A) <= n-k.
std::vector<MultiPoly> wedge_P(const PMat& a, int k);
std::vector<GaussianRational> wedge_P(const QMat& a, int k);

// Minor det([Ae1 | A^2 e1 | ... | A^(n-k) e1] rows k+1..n), 1 <= k <= n-1.
GaussianRational f_k(const QMat& a, int k);
MultiPoly f_k(const PMat& a, int k);

// Sum of second partials over the listed variables.
MultiPoly laplacian(const MultiPoly& p, std::span<const size_t> var_idxs);

// Binary-form covariants: Hessian determinant of a binary quartic and the
// Jacobian of a pair of binary forms (both in exactly two variables).
MultiPoly hessian_quartic(const MultiPoly& q);
MultiPoly jacobian_pair(const MultiPoly& q, const MultiPoly& r);

// Invariance under the maximal unipotent subgroup: full_complex substitutes
// (I + tE_{j,j+1}) A (I - tE_{j,j+1}) for each simple root generator and tests
// t-independence; sym_complex (n = 3) uses exp(tK) of a fixed nilpotent
// antisymmetric K, which is an exact polynomial in t.
bool u_invariance_check(const MultiPoly& p, const SpaceDescriptor& space);

// Z^(n-1) torus weight of a weight-homogeneous polynomial in the full_complex
// coordinates; nullopt when monomial weights disagree.
std::optional<std::vector<long>> torus_weight(const MultiPoly& p, const SpaceDescriptor& space);

// The one-dimensional U-invariant subspace of span{family}; normalized so the
// leading coefficient is 1. Throws when the invariant subspace is not a line.
MultiPoly u_invariant_in_span(std::span<const MultiPoly> family, const SpaceDescriptor& space);

// dim of the irreducible SL(n) module with highest weight (n-k, 1^k), by the
// hook content formula.
long weyl_dim(int n, int k);

// x-coefficient functions of a covariant value, as polynomials over the base
// variables only, keyed descending in graded-lex order of the x-monomials.
std::vector<MultiPoly> coefficient_family(const MultiPoly& value, const MultiPoly::VarList& base,
                                          int n_aux);

// The degree-3 U-invariant representatives of the 3x3 conjugation covariants,
// extracted algorithmically and normalized so that d3*c1U = d2*c2U holds on
// the degenerate locus.
struct UCovariantReps {
    MultiPoly::VarList vars;  // the 9 full_complex coordinates
    MultiPoly d2, d3;         // invariants as polynomials
    MultiPoly c1U, c2U, c3U, c4U;
};
const UCovariantReps& full_case_reps();

}  // namespace degenlocus

#endif
