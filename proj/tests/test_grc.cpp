// Copyright 2026 The tbtgrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "tbt/grc.hpp"

using namespace tbt;

namespace {

DenseHermitian two_by_two(Complex rho)
{
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, rho, std::conj(rho), 1.0;
    return DenseHermitian(m);
}

double rel(Complex x, Complex ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }

double max_abs_diff(const BandVector& x, const std::vector<Complex>& y)
{
    double d = 0.0;
    for (Index i = 0; i < y.size(); ++i) {
        d = std::max(d, std::abs(x.at(i) - y[i]));
    }
    return d;
}

BandVector head_basis(Index n, Index k, Index l)
{
    std::vector<Complex> c(l - k + 1);
    c.front() = 1.0;
    return BandVector(n, k, std::move(c));
}

}  // namespace

TEST_CASE("2x2 closed-form step")
{
    const CoeffTables t = grc_full(two_by_two(0.5));
    const CoeffEntry& e = t.at(0, 1);
    CHECK(e.a == Complex(0.5));
    CHECK(e.a_prime == Complex(0.5));
    CHECK(e.v == doctest::Approx(0.75));
    CHECK(e.v_prime == doctest::Approx(0.75));
    CHECK(e.p == BandVector(2, 0, {Complex(1.0), Complex(-0.5)}));
    CHECK(e.q == BandVector(2, 0, {Complex(-0.5), Complex(1.0)}));
}

TEST_CASE("identity gives zero coefficients everywhere")
{
    const Index n = 4;
    const CoeffTables t = grc_full(DenseHermitian(Eigen::MatrixXcd::Identity(n, n)));
    for (Index k = 0; k < n; ++k) {
        for (Index l = k; l < n; ++l) {
            const CoeffEntry& e = t.at(k, l);
            CHECK(e.a == Complex(0.0));
            CHECK(e.a_prime == Complex(0.0));
            CHECK(e.v == 1.0);
            CHECK(e.v_prime == 1.0);
            CHECK(e.p == head_basis(n, k, l));
        }
    }
}

TEST_CASE("grc_step rejects mismatched supports")
{
    const DenseHermitian r = two_by_two(0.25);
    const BandVector e0 = BandVector::basis(2, 0);
    CHECK_THROWS_AS(grc_step(e0, e0, 1.0, 1.0, r, 0, 1), InternalIndexError);
}

TEST_CASE("single inner product step matches the two-numerator oracle")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<Index>(2 + trial % 7);
        const Eigen::MatrixXcd m = testing::random_hpd(static_cast<Eigen::Index>(n), rng);
        const CoeffTables t = grc_full(DenseHermitian(m));
        const testing::DenseTables ref = testing::two_numerator_tables(m);
        for (Index k = 0; k < n; ++k) {
            for (Index l = k + 1; l < n; ++l) {
                const CoeffEntry& e = t.at(k, l);
                const auto& o = ref.at(k, l);
                REQUIRE(rel(e.a, o.a) <= 1e-12);
                REQUIRE(rel(e.a_prime, o.a_prime) <= 1e-12);
                REQUIRE(std::abs(e.v - o.v) <= 1e-12 * o.v);
                REQUIRE(std::abs(e.v_prime - o.v_prime) <= 1e-12 * o.v_prime);
                REQUIRE(max_abs_diff(e.p, o.p) <= 1e-12);
                REQUIRE(max_abs_diff(e.q, o.q) <= 1e-12);
            }
        }
    }
}

TEST_CASE("recursion invariants on random Hermitian PD matrices")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<Index>(3 + trial % 8);
        const DenseHermitian r(testing::random_hpd(static_cast<Eigen::Index>(n), rng));
        const double norm = r.matrix().norm();
        const CoeffTables t = grc_full(r);
        for (Index k = 0; k < n; ++k) {
            for (Index l = k; l < n; ++l) {
                const CoeffEntry& e = t.at(k, l);
                CAPTURE(k);
                CAPTURE(l);
                for (Index j = k + 1; j <= l; ++j) {
                    REQUIRE(std::abs(column_inner(e.p, r, j)) <= 1e-10 * norm);
                }
                for (Index j = k; j < l; ++j) {
                    REQUIRE(std::abs(column_inner(e.q, r, j)) <= 1e-10 * norm);
                }
                REQUIRE(e.v > 0.0);
                REQUIRE(e.v_prime > 0.0);
                REQUIRE(rel(column_inner(e.p, r, k), e.v_prime) <= 1e-10);
                REQUIRE(rel(column_inner(e.q, r, l), e.v) <= 1e-10);
                if (l > k) {
                    const Complex fwd = column_inner(t.at(k, l - 1).p, r, l);
                    const Complex bwd = column_inner(t.at(k + 1, l).q, r, k);
                    REQUIRE(std::abs(fwd - std::conj(bwd)) <= 1e-12 * std::max(std::abs(fwd), norm));
                    const Complex aa = e.a * e.a_prime;
                    REQUIRE(std::abs(aa.imag()) <= 1e-12);
                    REQUIRE(aa.real() >= 0.0);
                    REQUIRE(1.0 - aa.real() > 0.0);
                    REQUIRE(1.0 - aa.real() <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("factorization of trivial matrices")
{
    const DenseHermitian id(Eigen::MatrixXcd::Identity(3, 3));
    const InverseFactor fi = build_factorization(grc_full(id), id);
    for (Index k = 0; k < 3; ++k) {
        CHECK(fi.columns()[k] == head_basis(3, k, 2));
        CHECK(fi.diag()[k] == 1.0);
    }
    CHECK(inverse_dense(fi).matrix() == Eigen::MatrixXcd::Identity(3, 3));
    const std::vector<Complex> b{Complex(1, 2), Complex(-3, 0), Complex(0, 0.5)};
    CHECK(apply_inverse(fi, b) == b);

    const DenseHermitian r = two_by_two(0.5);
    const InverseFactor f = build_factorization(grc_full(r), r);
    CHECK(f.columns()[0] == BandVector(2, 0, {Complex(1.0), Complex(-0.5)}));
    CHECK(f.columns()[1] == BandVector::basis(2, 1));
    CHECK(f.diag()[0] == doctest::Approx(0.75));
    CHECK(f.diag()[1] == doctest::Approx(1.0));

    const std::vector<Complex> e0{Complex(1.0), Complex(0.0)};
    const auto x = apply_inverse(f, e0);
    CHECK(std::abs(x[0] - 4.0 / 3.0) < 1e-15);
    CHECK(std::abs(x[1] + 2.0 / 3.0) < 1e-15);

    Eigen::MatrixXcd expected(2, 2);
    expected << 1.0, -0.5, -0.5, 1.0;
    expected /= 0.75;
    CHECK((inverse_dense(f).matrix() - expected).norm() < 1e-15);
}

TEST_CASE("congruence with the factor columns is diagonal")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd m = testing::random_hpd(6, rng);
        const DenseHermitian r(m);
        const InverseFactor f = build_factorization(grc_full(r), r);
        const Eigen::MatrixXcd p = testing::factor_matrix(f);
        const Eigen::MatrixXcd d = p.transpose() * m * p.conjugate();
        CHECK(testing::max_offdiag(d) <= 1e-10 * m.norm());
        for (Index k = 0; k < 6; ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            CHECK(std::abs(d(kk, kk) - f.diag()[k]) <= 1e-10 * f.diag()[k]);
        }
    }
}

TEST_CASE("conjugate-transpose congruence is diagonal for real symmetric matrices")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd m = testing::random_hpd(6, rng).real().cast<Complex>();
        const DenseHermitian r(0.5 * (m + m.adjoint()));
        const InverseFactor f = build_factorization(grc_full(r), r);
        const Eigen::MatrixXcd p = testing::factor_matrix(f);
        CHECK(testing::max_offdiag(p.adjoint() * r.matrix() * p) <= 1e-10 * m.norm());
    }
}

TEST_CASE("inverse agrees with Gauss-Jordan elimination")
{
    std::mt19937_64 rng(23);
    for (Eigen::Index n = 1; n <= 12; ++n) {
        const Eigen::MatrixXcd m = testing::random_hpd(n, rng);
        const DenseHermitian r(m);
        const InverseFactor f = build_factorization(grc_full(r), r);
        const Eigen::MatrixXcd x = inverse_dense(f).matrix();
        const Eigen::MatrixXcd ref = testing::gauss_inverse(m);
        CAPTURE(n);
        CHECK((x - ref).norm() <= 1e-8 * ref.norm());
        CHECK((x - x.adjoint()).norm() <= 1e-12 * x.norm());
        CHECK((x * m - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("apply_inverse residual")
{
    std::mt19937_64 rng(29);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd m = testing::random_hpd(8, rng);
        const DenseHermitian r(m);
        const InverseFactor f = build_factorization(grc_full(r), r);
        Eigen::VectorXcd b(8);
        for (auto& x : b) {
            x = Complex(normal(rng), normal(rng));
        }
        const auto x = apply_inverse(f, std::span<const Complex>(b.data(), 8));
        const Eigen::VectorXcd xv = Eigen::Map<const Eigen::VectorXcd>(x.data(), 8);
        CHECK((m * xv - b).norm() <= 1e-9 * b.norm());
    }
    const DenseHermitian id(Eigen::MatrixXcd::Identity(2, 2));
    const InverseFactor f = build_factorization(grc_full(id), id);
    CHECK_THROWS_AS(apply_inverse(f, std::vector<Complex>(3)), std::invalid_argument);
}

TEST_CASE("indefinite input raises NotPositiveDefinite with the offending pair")
{
    Eigen::MatrixXcd m(3, 3);
    m << 1.0, 0.2, 0.0, 0.2, 1.0, 2.0, 0.0, 2.0, 1.0;
    try {
        (void)grc_full(DenseHermitian(m));
        FAIL("expected NotPositiveDefinite");
    } catch (const NotPositiveDefinite& e) {
        CHECK(e.k() == 1);
        CHECK(e.l() == 2);
    }

    Eigen::MatrixXcd z = Eigen::MatrixXcd::Identity(2, 2);
    z(1, 1) = 0.0;
    CHECK_THROWS_AS(grc_full(DenseHermitian(z)), NotPositiveDefinite);

    CHECK_THROWS_AS(grc_full(two_by_two(1.0)), NotPositiveDefinite);
}

TEST_CASE("factorization check catches tables from another matrix")
{
    std::mt19937_64 rng(31);
    const DenseHermitian a(testing::random_hpd(4, rng));
    const DenseHermitian b(testing::random_hpd(4, rng));
    CHECK_THROWS_AS(build_factorization(grc_full(a), b), FactorizationMismatch);
}

TEST_CASE("InverseFactor validates its columns")
{
    CHECK_THROWS_AS(InverseFactor({BandVector(2, 0, {Complex(2.0), Complex(0.0)}), BandVector::basis(2, 1)}, {1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(InverseFactor({BandVector::basis(2, 0), BandVector::basis(2, 1)}, {1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(InverseFactor({BandVector(2, 0, {Complex(1.0), Complex(0.0)}), BandVector::basis(2, 1)}, {1.0, -1.0}),
                    std::invalid_argument);
}

TEST_CASE("grc_full counts one inner product and two updates per step")
{
    std::mt19937_64 rng(37);
    const DenseHermitian r(testing::random_hpd(5, rng));
    OpCounter counter;
    (void)grc_full(r, &counter);
    std::uint64_t expected = 0;
    for (Index d = 1; d < 5; ++d) {
        expected += (5 - d) * (3 * d + 3);
    }
    CHECK(counter.mul == expected);
    CHECK(counter.div == 2 * 10);
}
