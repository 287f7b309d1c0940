#ifndef DEGENLOCUS_SPACES_HPP
#define DEGENLOCUS_SPACES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "degenlocus/linalg.hpp"
#include "degenlocus/matrix.hpp"
#include "degenlocus/prng.hpp"

namespace degenlocus {

// The four matrix spaces: Hermitian, real symmetric, all complex matrices,
// complex symmetric. The kind fixes the coordinate variables, the base field
// and the conjugating group.
enum class SpaceKind { hermitian, sym_real, full_complex, sym_complex };

struct SpaceDescriptor {
    SpaceKind kind;
    int n;

    SpaceDescriptor(SpaceKind k, int size);

    // Dimension over the base field (R for hermitian/sym_real, C otherwise).
    size_t dim() const;
    // Ordered coordinate variable list, fixed once per space:
    //   hermitian:  x1..xn, then (a_jk, b_jk) pairs row-major over j < k
    //   sym_*:      s_jk row-major over the upper triangle (j <= k)
    //   full:       a_jk row-major
    std::vector<std::string> coordinate_names() const;

    bool symmetric_kind() const { return kind == SpaceKind::sym_real || kind == SpaceKind::sym_complex; }

    static SpaceDescriptor parse(const std::string& token, int n);  // her|symr|full|symc
    std::string token() const;
};

struct GenericMatrix {
    SpaceDescriptor desc;
    MultiPoly::VarList vars;
    PMat entries;
};

// Symbolic matrix of the space; Hermitian symmetry (conj(A) = A^T) and plain
// symmetry hold identically by construction.
GenericMatrix generic_matrix(const SpaceDescriptor& space);

// Entrywise exact membership test of a concrete matrix in the space.
bool lies_in_space(const QMat& a, const SpaceDescriptor& space);

// Smallest m >= 1 with {I, A, ..., A^m} linearly dependent (Krylov rank).
int min_poly_degree(const QMat& a);

// deg(minimal polynomial) <= n - k.
bool membership_Mk(const QMat& a, int k);

// Exact conjugating matrix: Cayley transform (I-K)(I+K)^-1 of a random
// anti-Hermitian / antisymmetric K for the unitary and orthogonal kinds, a
// random invertible matrix for full_complex. Never fails: singular draws are
// redrawn from the stream.
QMat cayley_conjugator(const SpaceDescriptor& space, SeededRng& rng);
QMat cayley_conjugator(const SpaceDescriptor& space, std::uint64_t seed);

struct DegeneratePoint {
    QMat matrix;
    SpaceDescriptor desc;
    std::vector<int> multiplicities;
    std::vector<Rational> eigenvalues;
    std::uint64_t seed = 0;

    // Coordinates of the matrix in the space's variable order (exact; real
    // numbers for hermitian/sym_real kinds).
    std::vector<GaussianRational> coordinates() const;
};

// g diag(eigenvalues with multiplicities) g^-1 with g from cayley_conjugator;
// lies in the space exactly and has minimal polynomial degree = #eigenvalues.
DegeneratePoint sample_degenerate(const SpaceDescriptor& space, std::vector<int> multiplicities,
                                  std::vector<Rational> eigenvalues, std::uint64_t seed);

// Same, with pairwise-distinct eigenvalues drawn from the stream.
DegeneratePoint sample_degenerate_random(const SpaceDescriptor& space,
                                         const std::vector<int>& multiplicities, SeededRng& rng);

// Shifts the (1,1)-entry of every maximal Jordan block of eigenvalue lambda
// to lambda + eps. Input must be block-diagonal in Jordan form.
QMat jordan_perturb(const QMat& jordan_form, const GaussianRational& lambda, const Rational& eps);

// Conjugation X -> B_r X conj(B_r) extended Q(i)-linearly from
//   B_r E_st conj(B_r) = (E_st + E_{r+1-s,r+1-t} + i E_{r+1-s,t} - i E_{s,r+1-t}) / 2,
// which keeps all entries in Q(i).
QMat conj_B(const QMat& x);

// Symmetric matrix similar to the Jordan block J_r(lambda).
QMat symmetrize_jordan(int r, const GaussianRational& lambda);

// Symmetric perturbation of symmetrize_jordan(r, lambda): for r > 1 the
// characteristic polynomial becomes (x-l-e)(x-l+e)(x-l)^(r-2).
QMat s_perturb(int r, const GaussianRational& lambda, const Rational& eps);

}  // namespace degenlocus

#endif
