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

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: matrices are assembled block by block from the raw
// generator table, inverses come from a hand-written Gauss-Jordan
// elimination, and the two-numerator step evaluates both inner products.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tbt/core.hpp"
#include "tbt/grc.hpp"

namespace tbt::testing {

/// Explicit block assembly [[R_0, R_1, ...], [R_1^H, R_0, ...], ...] from the
/// raw generator rows (row d, column s + n1 - 1 holds c(d, s)).
inline Eigen::MatrixXcd block_assembly(const TbtGenerator& g)
{
    const auto n1 = static_cast<Eigen::Index>(g.n1());
    const auto n2 = static_cast<Eigen::Index>(g.n2());
    const auto raw = g.values();
    const auto width = 2 * n1 - 1;
    std::vector<Eigen::MatrixXcd> blocks(static_cast<std::size_t>(n2), Eigen::MatrixXcd(n1, n1));
    for (Eigen::Index d = 0; d < n2; ++d) {
        for (Eigen::Index a = 0; a < n1; ++a) {
            for (Eigen::Index b = 0; b < n1; ++b) {
                blocks[static_cast<std::size_t>(d)](a, b) = raw[static_cast<std::size_t>(d * width + (b - a) + n1 - 1)];
            }
        }
    }
    Eigen::MatrixXcd m(n1 * n2, n1 * n2);
    for (Eigen::Index bi = 0; bi < n2; ++bi) {
        for (Eigen::Index bj = 0; bj < n2; ++bj) {
            m.block(bi * n1, bj * n1, n1, n1) = bj >= bi ? blocks[static_cast<std::size_t>(bj - bi)]
                                                         : Eigen::MatrixXcd(blocks[static_cast<std::size_t>(bi - bj)].adjoint());
        }
    }
    return m;
}

/// Gauss-Jordan inverse with partial pivoting.
inline Eigen::MatrixXcd gauss_inverse(Eigen::MatrixXcd a)
{
    const Eigen::Index n = a.rows();
    Eigen::MatrixXcd inv = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = c;
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (std::abs(a(r, c)) > std::abs(a(piv, c))) {
                piv = r;
            }
        }
        if (std::abs(a(piv, c)) == 0.0) {
            throw std::runtime_error("gauss_inverse: singular");
        }
        a.row(c).swap(a.row(piv));
        inv.row(c).swap(inv.row(piv));
        const Complex scale = 1.0 / a(c, c);
        a.row(c) *= scale;
        inv.row(c) *= scale;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r != c) {
                const Complex f = a(r, c);
                a.row(r) -= f * a.row(c);
                inv.row(r) -= f * inv.row(c);
            }
        }
    }
    return inv;
}

/// Random Hermitian positive definite matrix B B^H + shift I.
inline Eigen::MatrixXcd random_hpd(Eigen::Index n, std::mt19937_64& rng, double shift = 0.5)
{
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd b(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            b(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::MatrixXcd m = b * b.adjoint() / static_cast<double>(n) + shift * Eigen::MatrixXcd::Identity(n, n);
    return 0.5 * (m + m.adjoint());
}

inline Complex dense_dot(const std::vector<Complex>& v, const Eigen::MatrixXcd& m, Index col)
{
    Complex s{};
    for (Index i = 0; i < v.size(); ++i) {
        s += v[i] * m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col));
    }
    return s;
}

/// One recursion step with both numerators computed as inner products and
/// the updates done on full-length vectors.
struct TwoNumeratorStep {
    Complex a;
    Complex a_prime;
    double v;
    double v_prime;
    std::vector<Complex> p;
    std::vector<Complex> q;
};

inline TwoNumeratorStep two_numerator_step(const std::vector<Complex>& p_hat, const std::vector<Complex>& q_hat,
                                           double v_hat, double v_hat_prime, const Eigen::MatrixXcd& r, Index k,
                                           Index l)
{
    TwoNumeratorStep out;
    out.a = dense_dot(p_hat, r, l) / v_hat;
    out.a_prime = dense_dot(q_hat, r, k) / v_hat_prime;
    const double gain = (1.0 - out.a * out.a_prime).real();
    out.v = v_hat * gain;
    out.v_prime = v_hat_prime * gain;
    out.p.resize(p_hat.size());
    out.q.resize(q_hat.size());
    for (Index i = 0; i < p_hat.size(); ++i) {
        out.p[i] = p_hat[i] - out.a * q_hat[i];
        out.q[i] = q_hat[i] - out.a_prime * p_hat[i];
    }
    return out;
}

/// Full reference recursion on dense vectors with two numerators per step.
struct DenseTables {
    Index n = 0;
    std::vector<TwoNumeratorStep> cells;  // row-major n x n, upper triangle used

    const TwoNumeratorStep& at(Index k, Index l) const { return cells[k * n + l]; }
};

inline DenseTables two_numerator_tables(const Eigen::MatrixXcd& r)
{
    DenseTables t;
    t.n = static_cast<Index>(r.rows());
    t.cells.resize(t.n * t.n);
    for (Index k = 0; k < t.n; ++k) {
        auto& c = t.cells[k * t.n + k];
        c.p.assign(t.n, Complex{});
        c.p[k] = 1.0;
        c.q = c.p;
        c.v = c.v_prime = r(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
    }
    for (Index d = 1; d < t.n; ++d) {
        for (Index k = 0; k + d < t.n; ++k) {
            const Index l = k + d;
            const auto& left = t.at(k, l - 1);
            const auto& down = t.at(k + 1, l);
            t.cells[k * t.n + l] = two_numerator_step(left.p, down.q, down.v, left.v_prime, r, k, l);
        }
    }
    return t;
}

inline Eigen::MatrixXcd factor_matrix(const InverseFactor& f)
{
    const auto n = static_cast<Eigen::Index>(f.size());
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto dense = f.columns()[static_cast<Index>(k)].dense();
        for (Eigen::Index i = 0; i < n; ++i) {
            p(i, k) = dense[static_cast<Index>(i)];
        }
    }
    return p;
}

inline double max_offdiag(const Eigen::MatrixXcd& m)
{
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs(m(i, j)));
            }
        }
    }
    return worst;
}

}  // namespace tbt::testing
