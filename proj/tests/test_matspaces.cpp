#include <doctest.h>

#include "degenlocus/covariants.hpp"
#include "degenlocus/linalg.hpp"
#include "degenlocus/spaces.hpp"
#include "degenlocus/subdisc.hpp"

using namespace degenlocus;

namespace {

// coefficient-wise complex conjugation (variables denote real quantities)
MultiPoly conj_coeffs(const MultiPoly& p) {
    return p.real_part() - p.imag_part().scaled(GaussianRational::i());
}

QMat diag3(long a, long b, long c) {
    QMat m(3, 3);
    m(0, 0) = GaussianRational(a);
    m(1, 1) = GaussianRational(b);
    m(2, 2) = GaussianRational(c);
    return m;
}

}  // namespace

TEST_CASE("generic matrices satisfy their defining symmetries identically") {
    GenericMatrix her = generic_matrix(SpaceDescriptor(SpaceKind::hermitian, 2));
    CHECK(her.vars->size() == 4);
    CHECK((*her.vars)[0] == "x1");
    CHECK((*her.vars)[2] == "a12");
    CHECK(her.entries(0, 0) == MultiPoly::variable(her.vars, 0));
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(her.entries(k, j) == conj_coeffs(her.entries(j, k)));

    GenericMatrix her3 = generic_matrix(SpaceDescriptor(SpaceKind::hermitian, 3));
    CHECK(her3.vars->size() == 9);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(her3.entries(k, j) == conj_coeffs(her3.entries(j, k)));

    GenericMatrix symc = generic_matrix(SpaceDescriptor(SpaceKind::sym_complex, 2));
    CHECK(symc.vars->size() == 3);
    CHECK((*symc.vars)[1] == "s12");
    CHECK(symc.entries(0, 1) == symc.entries(1, 0));

    GenericMatrix full = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    CHECK(full.vars->size() == 9);
}

TEST_CASE("minimal polynomial degree by Krylov rank") {
    CHECK(min_poly_degree(QMat::identity(4)) == 1);
    CHECK(min_poly_degree(diag3(1, 2, 3)) == 3);
    CHECK(min_poly_degree(diag3(1, 1, 2)) == 2);
    CHECK(min_poly_degree(QMat(3, 3)) == 1);
}

TEST_CASE("stratum membership from the minimal polynomial") {
    CHECK(membership_Mk(diag3(1, 1, 2), 1));
    CHECK_FALSE(membership_Mk(diag3(1, 2, 3), 1));
    CHECK(membership_Mk(diag3(1, 2, 3), 0));
    CHECK(membership_Mk(diag3(5, 5, 5), 2));
    CHECK_THROWS_AS(membership_Mk(diag3(1, 2, 3), 3), std::invalid_argument);
    CHECK_THROWS_AS(membership_Mk(diag3(1, 2, 3), -1), std::invalid_argument);
}

TEST_CASE("cayley conjugators are exactly unitary / orthogonal / invertible") {
    // the antisymmetric 2x2 with unit corner maps to the quarter rotation
    QMat k(2, 2);
    k(0, 1) = GaussianRational(1);
    k(1, 0) = GaussianRational(-1);
    QMat id = QMat::identity(2);
    auto inv = invert(id + k);
    REQUIRE(inv.has_value());
    QMat u = (id - k) * (*inv);
    CHECK(u(0, 0).is_zero());
    CHECK(u(0, 1) == GaussianRational(-1));
    CHECK(u(1, 0) == GaussianRational(1));
    CHECK(u(1, 1).is_zero());

    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        QMat uh = cayley_conjugator(SpaceDescriptor(SpaceKind::hermitian, 3), seed);
        CHECK(conj_transpose(uh) * uh == QMat::identity(3));

        QMat uo = cayley_conjugator(SpaceDescriptor(SpaceKind::sym_real, 3), seed);
        CHECK(uo.transpose() * uo == QMat::identity(3));
        CHECK(det_exact(uo).is_one());

        QMat uc = cayley_conjugator(SpaceDescriptor(SpaceKind::sym_complex, 3), seed);
        CHECK(uc.transpose() * uc == QMat::identity(3));

        QMat g = cayley_conjugator(SpaceDescriptor(SpaceKind::full_complex, 3), seed);
        CHECK_FALSE(det_exact(g).is_zero());
    }
}

TEST_CASE("degenerate samples lie in their space with the declared spectrum") {
    SpaceDescriptor her(SpaceKind::hermitian, 3);
    auto p1 = sample_degenerate(her, {2, 1}, {Rational(1), Rational(2)}, 7);
    CHECK(lies_in_space(p1.matrix, her));
    CHECK(min_poly_degree(p1.matrix) == 2);

    SpaceDescriptor symr(SpaceKind::sym_real, 3);
    auto p2 = sample_degenerate(symr, {2, 1}, {Rational(0), Rational(5)}, 8);
    CHECK(lies_in_space(p2.matrix, symr));
    CHECK(sdisc(p2.matrix, 0).is_zero());

    SpaceDescriptor full(SpaceKind::full_complex, 3);
    auto p3 = sample_degenerate(full, {1, 1, 1}, {Rational(1), Rational(2), Rational(3)}, 9);
    CHECK(min_poly_degree(p3.matrix) == 3);

    CHECK_THROWS_AS(sample_degenerate(her, {2, 1}, {Rational(1), Rational(1)}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_degenerate(her, {2, 2}, {Rational(1), Rational(2)}, 1),
                    std::invalid_argument);
}

TEST_CASE("sampled points: wedge coordinates vanish and subdiscriminants split") {
    SeededRng rng(77);
    for (int rep = 0; rep < 4; ++rep) {
        SpaceDescriptor her(SpaceKind::hermitian, 3);
        auto pt = sample_degenerate_random(her, {2, 1}, rng);
        // k = n - #parts = 1
        for (const auto& c : wedge_P(pt.matrix, 1)) CHECK(c.is_zero());
        CHECK(sdisc(pt.matrix, 0).is_zero());          // sDisc_(k-1)
        CHECK_FALSE(sdisc(pt.matrix, 1).is_zero());    // sDisc_k, generic eigenvalues
    }
}

TEST_CASE("stratum membership agrees with wedge-coordinate vanishing") {
    SeededRng rng(83);
    SpaceDescriptor full(SpaceKind::full_complex, 3);
    std::vector<QMat> pool;
    pool.push_back(sample_degenerate_random(full, {2, 1}, rng).matrix);
    pool.push_back(sample_degenerate_random(full, {3}, rng).matrix);
    pool.push_back(sample_degenerate_random(full, {1, 1, 1}, rng).matrix);
    {
        QMat r(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = rng.next_gaussian();
        pool.push_back(std::move(r));
    }
    const size_t counts[3] = {126, 84, 36};  // C(9, 4-k)
    for (const QMat& a : pool) {
        for (int k = 0; k <= 2; ++k) {
            auto coords = wedge_P(a, k);
            CHECK(coords.size() == counts[k]);
            bool all_zero = true;
            for (const auto& c : coords) all_zero = all_zero && c.is_zero();
            CHECK(all_zero == membership_Mk(a, k));
        }
    }
}

TEST_CASE("jordan perturbation shifts the leading entry of maximal blocks") {
    QMat j2(2, 2);
    j2(0, 1) = GaussianRational(1);
    QMat shifted = jordan_perturb(j2, GaussianRational(0), Rational(1));
    CHECK(shifted(0, 0).is_one());
    CHECK(shifted(0, 1).is_one());
    CHECK(shifted(1, 0).is_zero());
    CHECK(shifted(1, 1).is_zero());
    CHECK(min_poly_degree(shifted) == 2);

    CHECK(jordan_perturb(j2, GaussianRational(0), Rational(0)) == j2);

    // two maximal blocks at the same eigenvalue are both shifted
    QMat twin(4, 4);
    twin(0, 1) = GaussianRational(1);
    twin(2, 3) = GaussianRational(1);
    QMat t = jordan_perturb(twin, GaussianRational(0), Rational(1));
    CHECK(t(0, 0).is_one());
    CHECK(t(2, 2).is_one());
    CHECK(min_poly_degree(t) == 2);  // minimal polynomial x(x-1)

    // only the maximal blocks move
    QMat mixed(3, 3);
    mixed(0, 1) = GaussianRational(1);  // J_2(0) + J_1(0)
    QMat m = jordan_perturb(mixed, GaussianRational(0), Rational(1));
    CHECK(m(0, 0).is_one());
    CHECK(m(2, 2).is_zero());

    CHECK_THROWS_AS(jordan_perturb(j2, GaussianRational(5), Rational(1)), std::invalid_argument);
    QMat notjordan(2, 2);
    notjordan(0, 1) = GaussianRational(2);
    CHECK_THROWS_AS(jordan_perturb(notjordan, GaussianRational(0), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("symmetrized jordan blocks: fixed instances and invariants") {
    for (int r = 1; r <= 5; ++r) CHECK(conj_B(QMat::identity(r)) == QMat::identity(r));

    // the 2x2 instance
    QMat s2 = symmetrize_jordan(2, GaussianRational(Rational(3)));
    CHECK(s2(0, 0) == GaussianRational(Rational(3), Rational(-1, 2)));
    CHECK(s2(0, 1) == GaussianRational(Rational(1, 2)));
    CHECK(s2(1, 0) == GaussianRational(Rational(1, 2)));
    CHECK(s2(1, 1) == GaussianRational(Rational(3), Rational(1, 2)));

    auto xvars = MultiPoly::make_vars({"x"});
    for (int r = 1; r <= 5; ++r) {
        GaussianRational lambda(Rational(2, 3));
        QMat s = symmetrize_jordan(r, lambda);
        CHECK(s == s.transpose());
        CHECK(trace(s) == GaussianRational(Rational(2, 3)) * GaussianRational(r));
        // characteristic polynomial (x - lambda)^r
        MultiPoly x = MultiPoly::variable(xvars, 0);
        MultiPoly expected = (x - MultiPoly::constant(xvars, lambda)).pow(static_cast<unsigned>(r));
        CHECK(char_poly(s) == expected);
    }
}

TEST_CASE("symmetric perturbations split exactly two eigenvalues") {
    auto xvars = MultiPoly::make_vars({"x"});
    MultiPoly x = MultiPoly::variable(xvars, 0);

    QMat one = s_perturb(1, GaussianRational(2), Rational(1, 2));
    CHECK(one(0, 0) == GaussianRational(Rational(5, 2)));

    for (int r = 2; r <= 5; ++r) {
        for (auto [l, e] : {std::pair<long, long>{0, 1}, {2, 3}, {-1, 2}}) {
            GaussianRational lambda(l);
            Rational eps(e, 2);
            QMat s = s_perturb(r, lambda, eps);
            CHECK(s == s.transpose());
            MultiPoly lam = MultiPoly::constant(xvars, lambda);
            MultiPoly ep = MultiPoly::constant(xvars, GaussianRational(eps));
            MultiPoly expected =
                (x - lam - ep) * (x - lam + ep) * (x - lam).pow(static_cast<unsigned>(r - 2));
            CHECK(char_poly(s) == expected);
        }
    }

    // the classic 2x2 split: characteristic polynomial x^2 - eps^2
    QMat s = s_perturb(2, GaussianRational(0), Rational(3));
    MultiPoly expected = x * x - MultiPoly::constant(xvars, GaussianRational(9));
    CHECK(char_poly(s) == expected);

    CHECK_THROWS_AS(s_perturb(0, GaussianRational(0), Rational(1)), std::invalid_argument);
}
