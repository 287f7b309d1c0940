#ifndef DEGENLOCUS_IDEALCHECK_HPP
#define DEGENLOCUS_IDEALCHECK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degenlocus/covariants.hpp"
#include "degenlocus/series.hpp"
#include "degenlocus/spaces.hpp"

namespace degenlocus {

// The two 3x3 scenarios: all complex matrices under SL(3), complex symmetric
// matrices under SO(3).
enum class LocusCase { full, sym };

SpaceDescriptor case_space(LocusCase c);

// x-coefficient functions of the cubic covariants on the generic matrix:
// full: the 20 coordinate functions of c3 and c4; sym: the coordinate
// functions of c3 (spanning a 7-dimensional space).
const std::vector<MultiPoly>& degree3_generators(LocusCase c);

// Coordinate functions of c3 alone (the generating set for membership runs).
const std::vector<MultiPoly>& c3_coordinate_functions(LocusCase c);

// Dimension of the degree-d component of the ideal generated by homogeneous
// generators: exact rank of the monomial-multiples coefficient matrix.
long ideal_component_dim(std::span<const MultiPoly> generators, int d);

struct MembershipCertificate {
    MultiPoly target;
    std::vector<MultiPoly> generators;
    std::vector<MultiPoly> cofactors;
    int cofactor_degree = 0;

    // Re-verifies sum(h_i g_i) = target by exact polynomial arithmetic.
    bool verify() const;
};

struct MembershipOutcome {
    bool in_component = false;
    std::optional<MembershipCertificate> certificate;       // when in_component
    std::vector<Rational> farkas_witness;                   // exact dual certificate otherwise
    int primes_used = 0;
};

// Decides degree-D membership with homogeneous cofactors of degree D - deg(g).
// Positive answers carry an exactly re-verified certificate; negative answers
// carry an exactly verified dual witness y with y^T A = 0, y^T b = 1.
MembershipOutcome membership_fixed_degree(const MultiPoly& target,
                                          std::span<const MultiPoly> generators);

// The four relations that generate the kernel of the U-invariant presentation
// together with the cubic coordinates: d2^3 - d3^2, d2 c2U - d3 c1U,
// (c2U)^2 - d2 (c1U)^2, d3 c2U - d2^2 c1U. For the sym case the full-case
// polynomials are restricted to symmetric coordinates.
std::vector<std::pair<std::string, MultiPoly>> membership_targets(LocusCase c);

// Rank of the (points x degree-d monomials) evaluation matrix on sampled
// points of the stratum with the given eigenvalue multiplicities.
long eval_rank_on_stratum(const SpaceDescriptor& space, const std::vector<int>& multiplicities,
                          int d, int num_points, std::uint64_t seed);

struct QuotientDims {
    std::vector<long> quotient;    // dim C[M]_d - ideal rank, d = 0..d_max
    std::vector<long> ideal_rank;
    bool certified = false;        // every degree closed by the two-sided bound
};

// Quotient Hilbert coefficients computed from ranks. Degrees whose matrices
// are small run exact elimination; large degrees are certified exactly by
// pairing the mod-p ideal rank with the mod-p evaluation rank on stratum
// points whose generator-vanishing is checked in exact arithmetic (the two
// bounds meet, so the values are exact, not probabilistic).
QuotientDims quotient_hilbert(LocusCase c, int d_max, std::uint64_t seed);

// Expansion of the closed-form multiplicity series to the given t-order.
TruncSeries multiplicity_series(LocusCase c, size_t order);

// The same series assembled from its two-fraction form; equality with
// multiplicity_series is a library self-check.
TruncSeries multiplicity_series_alt(LocusCase c, size_t order);

// Character (bigraded Hilbert) series obtained from the multiplicity series
// by Weyl antisymmetrization and exact division by the Weyl denominator.
// full: variables q1, q2; sym: variable q with half-powers cleared by q->q^2.
TruncSeries character_series(LocusCase c, size_t order);

// Ordinary Hilbert coefficients: character series specialized at q = 1.
std::vector<Rational> hilbert_from_character(LocusCase c, size_t order);

// Hilbert coefficients from the printed rational-function closed form.
std::vector<Rational> hilbert_closed_form(LocusCase c, size_t order);

// Per-torus-weight dimensions of the degree-d component of the coordinate
// ring (full case): evaluation ranks of weight-grouped monomials on sampled
// points against the q-coefficients of the character series.
bool weight_multiplicity_check(int d, int num_points, std::uint64_t seed);

// The monomial algebra generated by z^2, z^3, D, zD: checks, bidegree by
// bidegree up to the total-degree bound, that the quotient of the polynomial
// ring by the four kernel binomials has the dimensions of the missing-
// monomial description, and that the standard monomial basis maps onto it.
bool monomial_kernel_check(int total_degree_bound);

struct SpanReport {
    long generator_rank = 0;  // rank of the coefficient matrix of the cubic generators
    long wedge_rank = 0;      // rank of the wedge-coordinate coefficient matrix
    long stacked_rank = 0;    // both families stacked
    long expected = 0;        // 20 (full) / 7 (sym)
    bool pass = false;
};

// The wedge coordinates and the cubic covariant coordinates span the same
// degree-3 space: ranks 20 (full) resp. 7 (sym), unchanged under stacking.
SpanReport span_equality_check(LocusCase c);

struct RelationsReport {
    int samples_per_case = 0;
    bool pass = false;
    bool negative_control_pass = false;  // diag(1,2,3) violates d2^3 = d3^2
    std::vector<std::string> failures;
};

// On sampled degenerate points of both 3x3 cases: c3 and c4 vanish,
// d2^3 = d3^2, and d3 c1(A) = d2 c2(A) entrywise; plus the U-invariant
// normalization identity d3 c1U = d2 c2U.
RelationsReport relations_on_M1_check(std::uint64_t seed, int samples_per_case);

}  // namespace degenlocus

#endif
