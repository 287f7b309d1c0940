#include <doctest.h>

#include "degenlocus/linalg.hpp"
#include "degenlocus/matrix.hpp"
#include "degenlocus/multipoly.hpp"
#include "degenlocus/prng.hpp"
#include "degenlocus/rational.hpp"
#include "degenlocus/series.hpp"

using namespace degenlocus;

namespace {

QMat qmat(std::initializer_list<std::initializer_list<long>> rows) {
    QMat m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (const auto& r : rows) {
        size_t j = 0;
        for (long v : r) m(i, j++) = GaussianRational(v);
        ++i;
    }
    return m;
}

// independent oracle: textbook cofactor expansion along the first row
GaussianRational cofactor_det(const QMat& m) {
    const size_t n = m.rows();
    if (n == 1) return m(0, 0);
    GaussianRational acc;
    for (size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        QMat sub(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        GaussianRational term = m(0, j) * cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("rational arithmetic is canonical and exact") {
    Rational a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 2) * Rational(2, 7)).is_one());
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("17").str() == "17");
    CHECK(Rational(-5, 2).str() == "-5/2");
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);

    SeededRng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational r = rng.next_rational();
        CHECK(Rational::parse(r.str()) == r);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
        CHECK((g == 1 || r.is_zero()));
        CHECK(r.denominator() > 0);
    }
}

TEST_CASE("gaussian rationals form a field with involutive conjugation") {
    GaussianRational q(Rational(1, 2), Rational(-3, 4));
    CHECK(q.conj().conj() == q);
    CHECK(q.norm2() == Rational(1, 4) + Rational(9, 16));
    CHECK((q * q.inv()).is_one());
    CHECK((q + (-q)).is_zero());

    // distributivity on random triples
    SeededRng rng(5);
    for (int i = 0; i < 100; ++i) {
        GaussianRational a = rng.next_gaussian(), b = rng.next_gaussian(), c = rng.next_gaussian();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm2().sign() >= 0);
    }
}

TEST_CASE("gaussian rational text form round-trips") {
    CHECK(GaussianRational::parse("1/2-3/4i").str() == "1/2-3/4i");
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK(GaussianRational::parse("3/2i").re().is_zero());
    CHECK(GaussianRational::parse("-7").im().is_zero());
    CHECK(GaussianRational::parse("0").str() == "0");
    CHECK_THROWS_AS(GaussianRational::parse("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);

    SeededRng rng(17);
    for (int i = 0; i < 200; ++i) {
        GaussianRational q = rng.next_gaussian();
        CHECK(GaussianRational::parse(q.str()) == q);
    }
}

TEST_CASE("determinants: pinned values") {
    CHECK(det_exact(qmat({{3, 6}, {6, 14}})) == GaussianRational(6));
    CHECK(det_exact(QMat::identity(5)).is_one());

    auto vars = MultiPoly::make_vars({"a", "b", "c", "d"});
    PMat m(2, 2);
    m(0, 0) = MultiPoly::variable(vars, 0);
    m(0, 1) = MultiPoly::variable(vars, 1);
    m(1, 0) = MultiPoly::variable(vars, 2);
    m(1, 1) = MultiPoly::variable(vars, 3);
    MultiPoly expected = MultiPoly::variable(vars, 0) * MultiPoly::variable(vars, 3) -
                         MultiPoly::variable(vars, 1) * MultiPoly::variable(vars, 2);
    CHECK(det_exact(m) == expected);
    CHECK_THROWS_AS(det_exact(QMat(2, 3)), std::invalid_argument);
}

TEST_CASE("determinants agree with the cofactor oracle on random matrices") {
    SeededRng rng(23);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            QMat m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = rng.next_gaussian();
            CHECK(det_exact(m) == cofactor_det(m));
        }
    }
}

TEST_CASE("rank: pinned values and invariances") {
    CHECK(rank_exact(QMat(3, 4)) == 0);

    QMat vand(3, 3);
    long nodes[3] = {1, 2, 3};
    for (int i = 0; i < 3; ++i) {
        long p = 1;
        for (int j = 0; j < 3; ++j) {
            vand(i, j) = GaussianRational(p);
            p *= nodes[i];
        }
    }
    CHECK(rank_exact(vand) == 3);

    SeededRng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        QMat m(4, 6);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 6; ++j)
                m(i, j) = (rng.next_int(0, 2) == 0) ? GaussianRational(0) : rng.next_gaussian();
        size_t r = rank_exact(m);
        CHECK(rank_exact(m.transpose()) == r);
        QMat p = m;
        p.swap_rows(0, rng.next_int(1, 3));
        CHECK(rank_exact(p) == r);
    }
}

TEST_CASE("fraction-free integer rank agrees with field elimination") {
    SeededRng rng(91);
    for (int rep = 0; rep < 25; ++rep) {
        const size_t rows = 9, cols = 11;
        QMat q(rows, cols);
        std::vector<std::vector<Rational>> rational_rows(rows, std::vector<Rational>(cols));
        for (size_t i = 0; i + 2 < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                // sparse rows with non-consecutive support
                if (rng.next_below(3) != 0) continue;
                Rational v = rng.next_rational();
                rational_rows[i][j] = v;
                q(i, j) = GaussianRational(v);
            }
        // plant two dependent rows
        for (size_t j = 0; j < cols; ++j) {
            rational_rows[rows - 2][j] = rational_rows[0][j] + rational_rows[1][j];
            rational_rows[rows - 1][j] = rational_rows[2][j] - rational_rows[0][j];
            q(rows - 2, j) = GaussianRational(rational_rows[rows - 2][j]);
            q(rows - 1, j) = GaussianRational(rational_rows[rows - 1][j]);
        }
        IntRowSpace irs(cols);
        for (const auto& r : rational_rows) irs.insert_rational(r);
        CHECK(irs.rank() == rank_exact(q));
    }
}

TEST_CASE("linear solve: identity, inconsistent, underdetermined") {
    std::vector<GaussianRational> b = {GaussianRational(Rational(1, 2)), GaussianRational(-3)};
    auto r = linear_solve_exact(QMat::identity(2), b);
    REQUIRE(r.consistent);
    CHECK(r.solution == b);

    QMat a = qmat({{1, 1}, {2, 2}});
    auto bad = linear_solve_exact(a, {GaussianRational(1), GaussianRational(3)});
    CHECK_FALSE(bad.consistent);

    auto under = linear_solve_exact(a, {GaussianRational(1), GaussianRational(2)});
    REQUIRE(under.consistent);
    CHECK(under.solution[0] + under.solution[1] == GaussianRational(1));

    CHECK_THROWS_AS(linear_solve_exact(a, {GaussianRational(1)}), std::invalid_argument);
}

TEST_CASE("multipoly ring axioms and substitution homomorphism") {
    auto vars = MultiPoly::make_vars({"u", "v", "w"});
    SeededRng rng(41);
    auto random_poly = [&](int terms) {
        MultiPoly p(vars);
        for (int t = 0; t < terms; ++t) {
            ExpVec e = {static_cast<int>(rng.next_below(3)), static_cast<int>(rng.next_below(3)),
                        static_cast<int>(rng.next_below(2))};
            p += MultiPoly::monomial(vars, e, rng.next_gaussian());
        }
        return p;
    };
    for (int rep = 0; rep < 12; ++rep) {
        MultiPoly p = random_poly(4), q = random_poly(4), r = random_poly(3);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);

        std::vector<MultiPoly> images = {random_poly(2), random_poly(2), random_poly(2)};
        CHECK((p * q).subst(images) == p.subst(images) * q.subst(images));
        CHECK((p + q).subst(images) == p.subst(images) + q.subst(images));
    }
}

TEST_CASE("multipoly exact division round-trips and detects non-divisibility") {
    auto vars = MultiPoly::make_vars({"u", "v"});
    SeededRng rng(43);
    auto random_poly = [&](int terms) {
        MultiPoly p(vars);
        for (int t = 0; t < terms; ++t)
            p += MultiPoly::monomial(vars, {static_cast<int>(rng.next_below(4)),
                                            static_cast<int>(rng.next_below(4))},
                                     rng.next_gaussian());
        return p;
    };
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly f = random_poly(3), g = random_poly(3);
        if (g.is_zero()) continue;
        auto q = divide_exact(f * g, g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
    }
    MultiPoly u = MultiPoly::variable(vars, 0), v = MultiPoly::variable(vars, 1);
    CHECK_FALSE(divide_exact(u * u + v, u).has_value());
}

TEST_CASE("derivative and homogeneity bookkeeping") {
    auto vars = MultiPoly::make_vars({"u", "v"});
    MultiPoly u = MultiPoly::variable(vars, 0), v = MultiPoly::variable(vars, 1);
    MultiPoly p = u * u * v + v * v * u;  // homogeneous cubic
    int d = 0;
    CHECK(p.is_homogeneous(&d));
    CHECK(d == 3);
    CHECK(p.derivative(0) == u * v + u * v + v * v);
    MultiPoly q = p + u;
    CHECK_FALSE(q.is_homogeneous());
}

TEST_CASE("series expansion of rational functions") {
    auto r = [](long v) { return Rational(v); };
    // geometric series
    auto geo = series_from_rational({r(1)}, {{r(1), r(-1)}}, 4);
    for (size_t d = 0; d <= 4; ++d) CHECK(geo.specialize_q_to_one()[d] == Rational(1));

    // numerator over (1-t)^6 against the convolution oracle
    std::vector<long> num = {1, 3, 6, -10, 10, -5, 1};
    std::vector<Rational> numer;
    for (long v : num) numer.push_back(r(v));
    auto s = series_from_rational(numer, std::vector<std::vector<Rational>>(6, {r(1), r(-1)}), 5);
    auto got = s.specialize_q_to_one();
    for (size_t d = 0; d <= 5; ++d) {
        Rational expect(0);
        for (size_t j = 0; j <= d && j < num.size(); ++j)
            expect += r(num[j]) * Rational::binomial(static_cast<unsigned>(d - j + 5), 5);
        CHECK(got[d] == expect);
    }
    CHECK(got[0] == r(1));
    CHECK(got[1] == r(9));
    CHECK(got[2] == r(45));
    CHECK(got[3] == r(145));
    CHECK(got[4] == r(370));
    CHECK(got[5] == r(811));

    // second family over (1-t)^4
    std::vector<Rational> numer2 = {r(1), r(2), r(3), r(-3), r(1)};
    auto s2 = series_from_rational(numer2, std::vector<std::vector<Rational>>(4, {r(1), r(-1)}), 4);
    auto got2 = s2.specialize_q_to_one();
    std::vector<long> expect2 = {1, 6, 21, 49, 94};
    for (size_t d = 0; d <= 4; ++d) {
        Rational conv(0);
        for (size_t j = 0; j <= d && j < numer2.size(); ++j)
            conv += numer2[j] * Rational::binomial(static_cast<unsigned>(d - j + 3), 3);
        CHECK(got2[d] == conv);
        CHECK(got2[d] == r(expect2[d]));
    }

    CHECK_THROWS_AS(series_from_rational({r(1)}, {{r(0), r(1)}}, 3), std::invalid_argument);
}

TEST_CASE("series product with the reciprocal truncates to 1") {
    auto vars = MultiPoly::make_vars({"q"});
    LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
    LaurentPoly qm = LaurentPoly::monomial(vars, {2}, Rational(1));
    auto f = series_from_rational({one, qm}, {{one, -one}}, 6, vars);           // (1+q^2 t)/(1-t)
    auto g = series_from_rational({one, -one}, {{one, qm}}, 6, vars);           // (1-t)/(1+q^2 t)
    auto prod = f * g;
    CHECK(prod.coeff(0) == one);
    for (size_t d = 1; d <= 6; ++d) CHECK(prod.coeff(d).is_zero());
}

TEST_CASE("laurent division: exact quotients and failure detection") {
    auto vars = MultiPoly::make_vars({"q1", "q2"});
    LaurentPoly q1 = LaurentPoly::monomial(vars, {1, 0}, Rational(1));
    LaurentPoly q2 = LaurentPoly::monomial(vars, {0, 1}, Rational(1));
    CHECK(laurent_divide_exact(q1 * q1 - q2 * q2, q1 - q2) == q1 + q2);

    // negative exponents: (q - q^-1) / (q^-1 (q^2 - 1)) = 1
    auto v1 = MultiPoly::make_vars({"q"});
    LaurentPoly q = LaurentPoly::monomial(v1, {1}, Rational(1));
    LaurentPoly qi = LaurentPoly::monomial(v1, {-1}, Rational(1));
    LaurentPoly one1 = LaurentPoly::constant(v1, Rational(1));
    CHECK(laurent_divide_exact(q - qi, qi * (q * q - one1)) == one1);

    // half powers handled by the internal q -> q^2 clearing: (q^2-1)/(q-1)
    CHECK(laurent_divide_exact(q * q - one1, q - one1) == q + one1);

    LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
    CHECK_THROWS_AS(laurent_divide_exact(q1 - q2 + one, q1 - q2), std::domain_error);
}
