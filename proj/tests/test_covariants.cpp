#include <doctest.h>

#include "degenlocus/covariants.hpp"
#include "degenlocus/linalg.hpp"
#include "degenlocus/prng.hpp"
#include "degenlocus/spaces.hpp"

using namespace degenlocus;

namespace {

// diag(z, z, -2z) over a single symbolic variable
PMat dz_matrix(const MultiPoly::VarList& vars) {
    MultiPoly z = MultiPoly::variable(vars, 0);
    PMat m(3, 3);
    m(0, 0) = z;
    m(1, 1) = z;
    m(2, 2) = z.scaled(GaussianRational(-2));
    return m;
}

QMat random_full(int n, SeededRng& rng) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.next_gaussian();
    return m;
}

long weyl_product_formula(int n, int k) {
    // independent route: prod_{i<j} (l_i - l_j + j - i) / (j - i) for the
    // partition (n-k, 1^k, 0, ...)
    std::vector<long> l(n, 0);
    l[0] = n - k;
    for (int i = 1; i <= k; ++i) l[i] = 1;
    Rational dim(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dim *= Rational(l[i] - l[j] + j - i, j - i);
    REQUIRE(dim.is_integer());
    return static_cast<long>(dim.numerator().get_si());
}

}  // namespace

TEST_CASE("traceless projection") {
    CHECK(c1(QMat::identity(3)) == QMat(3, 3));
    QMat a(3, 3);
    a(0, 0) = GaussianRational(1);
    a(1, 1) = GaussianRational(1);
    a(2, 2) = GaussianRational(-2);
    CHECK(c1(a) == a);

    auto vars = MultiPoly::make_vars({"z"});
    PMat dz = dz_matrix(vars);
    CHECK(c1(dz) == dz);

    // idempotent projection with exactly zero trace on the generic matrix
    GenericMatrix gm = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    PMat t = c1(gm.entries);
    CHECK(trace(t).is_zero());
    CHECK(c1(t) == t);
}

TEST_CASE("second covariant on the degenerate diagonal family") {
    auto vars = MultiPoly::make_vars({"z"});
    PMat dz = dz_matrix(vars);
    MultiPoly z = MultiPoly::variable(vars, 0);
    PMat expected(3, 3);
    for (int i = 0; i < 3; ++i) expected(i, i) = -(z * dz(i, i));
    CHECK(c2(dz) == expected);

    CHECK(c2(QMat::identity(3)) == QMat(3, 3));

    QMat n3(3, 3);
    n3(0, 1) = GaussianRational(1);
    n3(1, 2) = GaussianRational(1);
    CHECK(c2(n3) == c1(n3 * n3));  // n3 is already traceless

    GenericMatrix gm = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    CHECK(trace(c2(gm.entries)).is_zero());
}

TEST_CASE("primary invariants with their normalizations") {
    auto vars = MultiPoly::make_vars({"z"});
    auto d = d_invariants(dz_matrix(vars));
    MultiPoly z = MultiPoly::variable(vars, 0);
    CHECK(d[0].is_zero());
    CHECK(d[1] == z * z);
    CHECK(d[2] == -(z * z * z));

    auto di = d_invariants(QMat::identity(3));
    CHECK(di[0] == GaussianRational(3));
    CHECK(di[1].is_zero());
    CHECK(di[2].is_zero());

    QMat diag(3, 3);
    diag(0, 0) = GaussianRational(1);
    diag(1, 1) = GaussianRational(2);
    diag(2, 2) = GaussianRational(3);
    auto dd = d_invariants(diag);
    CHECK(dd[0] == GaussianRational(6));
    CHECK(dd[1] == GaussianRational(Rational(1, 3)));  // tr(c1^2)/6 = 2/6
    CHECK(dd[2].is_zero());                            // det(diag(-1,0,1))/2

    auto d2 = d_invariants(c1(diag));
    CHECK(d2[0].is_zero());
    CHECK(d2[1] == dd[1]);
    CHECK(d2[2] == dd[2]);
}

TEST_CASE("cubic covariant: diagonal product formula and degenerate vanishing") {
    auto vars = MultiPoly::make_vars({"a1", "a2", "a3"});
    PMat diag(3, 3);
    for (int i = 0; i < 3; ++i) diag(i, i) = MultiPoly::variable(vars, static_cast<size_t>(i));
    MultiPoly value = c3(diag);

    auto ext = value.vars();
    auto v = [&](const std::string& name) {
        for (size_t i = 0; i < ext->size(); ++i)
            if ((*ext)[i] == name) return MultiPoly::variable(ext, i);
        FAIL("missing variable");
        return MultiPoly();
    };
    MultiPoly a1 = v("a1"), a2 = v("a2"), a3 = v("a3");
    MultiPoly expected = (a2 - a1) * (a3 - a1) * (a3 - a2) * v("x1") * v("x2") * v("x3");
    CHECK(value == expected);

    CHECK(c3(QMat::identity(3)).is_zero());

    SeededRng rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        auto pt = sample_degenerate_random(SpaceDescriptor(SpaceKind::full_complex, 3), {2, 1}, rng);
        CHECK(c3(pt.matrix).is_zero());
        CHECK(c4(pt.matrix).is_zero());
    }
}

TEST_CASE("row covariant is the transpose of the column covariant") {
    GenericMatrix gm = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    CHECK(c4(gm.entries) == c3(gm.entries.transpose()));

    GenericMatrix sym = generic_matrix(SpaceDescriptor(SpaceKind::sym_complex, 3));
    CHECK(c4(sym.entries) == c3(sym.entries));
}

TEST_CASE("equivariance under exact conjugation") {
    SeededRng rng(19);
    // column covariant picks up det(g): c3(g A g^-1)(x) = det(g) c3(A)(g^-1 x)
    for (int rep = 0; rep < 3; ++rep) {
        QMat a = random_full(3, rng);
        QMat g = cayley_conjugator(SpaceDescriptor(SpaceKind::full_complex, 3), rng);
        auto gi = invert(g);
        REQUIRE(gi.has_value());
        MultiPoly lhs = c3((g * a) * (*gi));

        MultiPoly base = c3(a);
        auto xv = base.vars();
        std::vector<MultiPoly> images;
        for (size_t i = 0; i < 3; ++i) {
            MultiPoly img(xv);
            for (size_t j = 0; j < 3; ++j)
                img += MultiPoly::variable(xv, j).scaled((*gi)(i, j));
            images.push_back(img);
        }
        MultiPoly rhs = base.subst(images).scaled(det_exact(g));
        CHECK(lhs == rhs);
    }
    // orthogonal conjugation has det 1 exactly
    for (int rep = 0; rep < 3; ++rep) {
        SpaceDescriptor symc(SpaceKind::sym_complex, 3);
        QMat s(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                s(i, j) = rng.next_gaussian();
                s(j, i) = s(i, j);
            }
        QMat g = cayley_conjugator(symc, rng);
        MultiPoly lhs = c3((g * s) * g.transpose());
        MultiPoly base = c3(s);
        auto xv = base.vars();
        std::vector<MultiPoly> images;
        for (size_t i = 0; i < 3; ++i) {
            MultiPoly img(xv);
            for (size_t j = 0; j < 3; ++j)
                img += MultiPoly::variable(xv, j).scaled(g(j, i));  // g^T = g^-1
            images.push_back(img);
        }
        CHECK(lhs == base.subst(images));
    }
}

TEST_CASE("wedge coordinates: counts, vanishing, and span containment") {
    CHECK(wedge_P(QMat::identity(3), 1).size() == 84);
    for (const auto& c : wedge_P(QMat::identity(3), 2)) CHECK(c.is_zero());
    for (const auto& c : wedge_P(QMat::identity(3), 1)) CHECK(c.is_zero());
    CHECK_THROWS_AS(wedge_P(QMat::identity(3), 3), std::invalid_argument);

    // every x-coefficient of c3 and c4 lies in the span of the 84 coordinates
    GenericMatrix gm = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    auto wedge = wedge_P(gm.entries, 1);
    std::map<ExpVec, size_t, GradedLexLess> col;
    auto scan = [&](const MultiPoly& p) {
        for (const auto& [e, c] : p.terms())
            if (!col.count(e)) col.emplace(e, col.size());
    };
    for (const auto& w : wedge) scan(w);
    auto fam3 = coefficient_family(c3(gm.entries), gm.vars, 3);
    auto fam4 = coefficient_family(c4(gm.entries), gm.vars, 3);
    for (const auto& f : fam3) scan(f);
    for (const auto& f : fam4) scan(f);

    RowSpace span(col.size());
    for (const auto& w : wedge) {
        std::vector<GaussianRational> row(col.size());
        for (const auto& [e, c] : w.terms()) row[col.at(e)] = c;
        span.insert(std::move(row));
    }
    const size_t wedge_rank = span.rank();
    for (const auto& fam : {fam3, fam4})
        for (const auto& f : fam) {
            std::vector<GaussianRational> row(col.size());
            for (const auto& [e, c] : f.terms()) row[col.at(e)] = c;
            CHECK_FALSE(span.insert(std::move(row)));  // already inside the span
        }
    CHECK(span.rank() == wedge_rank);
}

TEST_CASE("degree-n covariant: diagonal formula and coefficient counts") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
        auto vars = MultiPoly::make_vars(names);
        PMat diag(n, n);
        for (int i = 0; i < n; ++i) diag(i, i) = MultiPoly::variable(vars, static_cast<size_t>(i));
        MultiPoly value = c_full(diag);

        auto ext = value.vars();
        auto v = [&](size_t i) { return MultiPoly::variable(ext, i); };
        MultiPoly expected = MultiPoly::constant(ext, GaussianRational(1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                expected *= v(static_cast<size_t>(j)) - v(static_cast<size_t>(i));
        for (int i = 0; i < n; ++i) expected *= v(names.size() + static_cast<size_t>(i));
        CHECK(value == expected);
    }

    // Hermitian 2x2: (a-bi) x1^2 + (x2-x1) x1 x2 - (a+bi) x2^2
    GenericMatrix her2 = generic_matrix(SpaceDescriptor(SpaceKind::hermitian, 2));
    MultiPoly value = c_full(her2.entries);
    auto ext = value.vars();
    auto v = [&](size_t i) { return MultiPoly::variable(ext, i); };
    MultiPoly x1 = v(4), x2 = v(5), a = v(2), b = v(3);
    const GaussianRational iu = GaussianRational::i();
    MultiPoly expected = (a - b.scaled(iu)) * x1 * x1 + (v(1) - v(0)) * x1 * x2 -
                         (a + b.scaled(iu)) * x2 * x2;
    CHECK(value == expected);

    // at n = 3 this is the cubic covariant
    GenericMatrix gm = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    CHECK(c_full(gm.entries) == c3(gm.entries));

    // generic coefficient counts fill the full space of degree-n forms
    GenericMatrix f2 = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 2));
    CHECK(coefficient_family(c_full(f2.entries), f2.vars, 2).size() == 3);    // C(3,1)
    CHECK(coefficient_family(c_full(gm.entries), gm.vars, 3).size() == 10);   // C(5,2)
}

TEST_CASE("highest weight minors: weights, invariance, degree") {
    for (int n = 3; n <= 4; ++n) {
        SpaceDescriptor space(SpaceKind::full_complex, n);
        GenericMatrix gm = generic_matrix(space);
        for (int k = 1; k <= n - 1; ++k) {
            MultiPoly fk = f_k(gm.entries, k);
            int deg = 0;
            CHECK(fk.is_homogeneous(&deg));
            CHECK(deg == (n - k) * (n - k + 1) / 2);
            CHECK(u_invariance_check(fk, space));
            auto w = torus_weight(fk, space);
            REQUIRE(w.has_value());
            std::vector<long> expected(static_cast<size_t>(n - 1), 0);
            expected[0] = n - k + 1;
            for (int i = 1; i < k; ++i) expected[static_cast<size_t>(i)] = 1;
            CHECK(*w == expected);
        }
    }

    // bihomogeneity persists at n = 5 (degree and weight, no substitution)
    {
        SpaceDescriptor space(SpaceKind::full_complex, 5);
        GenericMatrix gm = generic_matrix(space);
        for (int k = 1; k <= 4; ++k) {
            MultiPoly fk = f_k(gm.entries, k);
            int deg = 0;
            CHECK(fk.is_homogeneous(&deg));
            CHECK(deg == (5 - k) * (5 - k + 1) / 2);
            auto w = torus_weight(fk, space);
            REQUIRE(w.has_value());
            std::vector<long> expected(4, 0);
            expected[0] = 5 - k + 1;
            for (int i = 1; i < k; ++i) expected[static_cast<size_t>(i)] = 1;
            CHECK(*w == expected);
        }
    }

    // e1 is an eigenvector of a diagonal matrix, so the minor collapses
    QMat diag(3, 3);
    diag(0, 0) = GaussianRational(1);
    diag(1, 1) = GaussianRational(2);
    diag(2, 2) = GaussianRational(3);
    CHECK(f_k(diag, 1).is_zero());
    CHECK_THROWS_AS(f_k(diag, 0), std::invalid_argument);
    CHECK_THROWS_AS(f_k(diag, 3), std::invalid_argument);
}

TEST_CASE("laplacian examples") {
    auto vars = MultiPoly::make_vars({"x1", "x2", "x3"});
    auto x = [&](size_t i) { return MultiPoly::variable(vars, i); };
    std::vector<size_t> all = {0, 1, 2};
    CHECK(laplacian(x(0) * x(1) * x(2), all).is_zero());
    CHECK(laplacian(x(0) * x(0), all) == MultiPoly::constant(vars, GaussianRational(2)));

    GenericMatrix sym = generic_matrix(SpaceDescriptor(SpaceKind::sym_real, 3));
    MultiPoly value = c3(sym.entries);
    std::vector<size_t> aux = {sym.vars->size(), sym.vars->size() + 1, sym.vars->size() + 2};
    CHECK(laplacian(value, aux).is_zero());
}

TEST_CASE("binary quartic covariants") {
    auto vars = MultiPoly::make_vars({"X", "Y"});
    MultiPoly X = MultiPoly::variable(vars, 0), Y = MultiPoly::variable(vars, 1);

    MultiPoly square = (X * X + Y * Y).pow(2);
    CHECK(jacobian_pair(square, hessian_quartic(square)).is_zero());

    MultiPoly fermat = X.pow(4) + Y.pow(4);
    CHECK(hessian_quartic(fermat) == (X * X * Y * Y).scaled(GaussianRational(144)));

    MultiPoly cusp = X.pow(3) * Y;
    CHECK_FALSE(jacobian_pair(cusp, hessian_quartic(cusp)).is_zero());

    CHECK_THROWS_AS(hessian_quartic(X * X), std::invalid_argument);
}

TEST_CASE("unipotent invariance and torus weights of entry functions") {
    SpaceDescriptor space(SpaceKind::full_complex, 3);
    auto vars = MultiPoly::make_vars(space.coordinate_names());
    // row-major entries: index 3*j + k for the (j+1, k+1) entry function
    MultiPoly a31 = MultiPoly::variable(vars, 6);
    MultiPoly a13 = MultiPoly::variable(vars, 2);
    CHECK(u_invariance_check(a31, space));
    CHECK_FALSE(u_invariance_check(a13, space));
    CHECK(*torus_weight(a31, space) == std::vector<long>{2, 1});
    CHECK(*torus_weight(a13, space) == std::vector<long>{-2, -1});

    MultiPoly tr = MultiPoly::variable(vars, 0) + MultiPoly::variable(vars, 4) +
                   MultiPoly::variable(vars, 8);
    CHECK(u_invariance_check(tr, space));
    CHECK(*torus_weight(tr, space) == std::vector<long>{0, 0});

    // a11 + a13 mixes weights
    CHECK_FALSE(torus_weight(MultiPoly::variable(vars, 0) + a13, space).has_value());
}

TEST_CASE("hook dimension formula against the independent product formula") {
    CHECK(weyl_dim(3, 0) == 10);
    CHECK(weyl_dim(3, 1) == 8);
    CHECK(weyl_dim(4, 1) == 45);
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k) CHECK(weyl_dim(n, k) == weyl_product_formula(n, k));
    CHECK_THROWS_AS(weyl_dim(3, 3), std::invalid_argument);
}

TEST_CASE("algorithmic highest-weight representatives") {
    const auto& reps = full_case_reps();
    auto vars = reps.vars;

    // c1's representative is the lower-left entry function
    CHECK(reps.c1U == MultiPoly::variable(vars, 6));

    // c2's representative is the (3,1) entry of the squared traceless part,
    // scale fixed by the identity d3 c1U = d2 c2U on the degenerate locus
    GenericMatrix gm = generic_matrix(SpaceDescriptor(SpaceKind::full_complex, 3));
    PMat t = c1(gm.entries);
    CHECK(reps.c2U == (t * t)(2, 0));

    // c3's representative is f_1 = det of the lower 2x2 of [Ae1|A^2e1],
    // i.e. the coefficient of x1^3
    CHECK(reps.c3U == f_k(gm.entries, 1).monic());

    // c4's representative is the coefficient of x3^3 (the graded-lex smallest)
    auto fam4 = coefficient_family(c4(gm.entries), gm.vars, 3);
    CHECK(reps.c4U == fam4.back().monic());

    SpaceDescriptor space(SpaceKind::full_complex, 3);
    for (const MultiPoly* p : {&reps.c1U, &reps.c2U, &reps.c3U, &reps.c4U}) {
        CHECK(u_invariance_check(*p, space));
        CHECK(torus_weight(*p, space).has_value());
    }
    CHECK(*torus_weight(reps.c1U, space) == std::vector<long>{2, 1});
    CHECK(*torus_weight(reps.c2U, space) == std::vector<long>{2, 1});
    CHECK(*torus_weight(reps.c3U, space) == std::vector<long>{3, 0});
    CHECK(*torus_weight(reps.c4U, space) == std::vector<long>{3, 3});
}

TEST_CASE("the orthogonal unipotent generator is nilpotent, so its exponential is exact") {
    const GaussianRational one(1), iu = GaussianRational::i();
    QMat k(3, 3);
    k(0, 1) = one;
    k(1, 0) = -one;
    k(0, 2) = iu;
    k(2, 0) = -iu;
    CHECK(k.transpose() == k.scaled(GaussianRational(-1)));
    CHECK(k * k * k == QMat(3, 3));

    const GaussianRational half{Rational(1, 2)};
    QMat id = QMat::identity(3);
    QMat e = id + k + (k * k).scaled(half);
    QMat einv = id - k + (k * k).scaled(half);
    CHECK(e * einv == id);
    CHECK(e.transpose() * e == id);
    CHECK(det_exact(e).is_one());
}

TEST_CASE("unipotent invariance in the symmetric case") {
    SpaceDescriptor space(SpaceKind::sym_complex, 3);
    GenericMatrix gm = generic_matrix(space);
    // the trace is invariant; a single off-diagonal coordinate is not
    MultiPoly tr = trace(gm.entries);
    CHECK(u_invariance_check(tr, space));
    CHECK_FALSE(u_invariance_check(MultiPoly::variable(gm.vars, 1), space));

    // the invariant line in the span of c3's coefficients exists and is cubic
    auto fam = coefficient_family(c3(gm.entries), gm.vars, 3);
    MultiPoly rep = u_invariant_in_span(fam, space);
    int deg = 0;
    CHECK(rep.is_homogeneous(&deg));
    CHECK(deg == 3);
    CHECK(u_invariance_check(rep, space));
}
