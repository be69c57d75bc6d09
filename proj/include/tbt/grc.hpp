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

// Generalized reflection coefficients for an arbitrary Hermitian positive
// definite matrix, filled diagonal by diagonal, and the inverse factorization
//
//     R^{-1} = conj(P) D^{-1} P^T,   P = [p(0,n-1), ..., p(n-1,n-1)],
//
// with D = diag(v'(k, n-1)). This is the dense reference path; the TBT fast
// path in fast.hpp reuses grc_step and must reproduce these tables.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbt/core.hpp"

namespace tbt {

/// Everything the recursion knows about one index pair (k, l).
struct CoeffEntry {
    Complex a;        ///< forward coefficient a(k,l)
    Complex a_prime;  ///< backward coefficient a'(k,l)
    double v = 0.0;   ///< q(k,l)^T R e_l
    double v_prime = 0.0;  ///< p(k,l)^T R e_k
    BandVector p;     ///< support [k,l], p_k = 1
    BandVector q;     ///< support [k,l], q_l = 1
};

/// Diagonal tuple: p = q = e_k, v = v' = r_kk, a = a' = 0 by convention.
CoeffEntry diagonal_entry(Index n, Index k, double r_kk);

/// Relative PD threshold on 1 - a a'.
inline constexpr double kPdTolerance = 1e3 * 2.220446049250313e-16;

/// The part of one recursion step that does not touch the matrix: given the
/// shared numerator p_hat^T R e_l, produce (a, a', p, q, v, v'). Uses
/// q_hat^T R e_k = conj(numerator), so one inner product serves both
/// coefficients.
CoeffEntry finish_step(Complex numerator, const BandVector& p_hat, const BandVector& q_hat, double v_hat,
                       double v_hat_prime, Index k, Index l, OpCounter* counter);

/// One step of the recursion at (k, l) from p_hat = p(k, l-1),
/// q_hat = q(k+1, l), v_hat = v(k+1, l), v_hat_prime = v'(k, l-1).
template <MatrixAccessor Accessor>
CoeffEntry grc_step(const BandVector& p_hat, const BandVector& q_hat, double v_hat, double v_hat_prime,
                    const Accessor& m, Index k, Index l, OpCounter* counter = nullptr)
{
    if (p_hat.lo() != k || p_hat.hi() + 1 != l || q_hat.lo() != k + 1 || q_hat.hi() != l) {
        throw InternalIndexError("grc_step: p_hat/q_hat supports do not match (" + std::to_string(k) + ", " +
                                 std::to_string(l) + ")");
    }
    return finish_step(column_inner(p_hat, m, l, counter), p_hat, q_hat, v_hat, v_hat_prime, k, l, counter);
}

/// Upper-triangular store of CoeffEntry over 0 <= k <= l <= n-1.
class CoeffTables {
public:
    explicit CoeffTables(Index n);

    Index size() const noexcept { return n_; }
    bool contains(Index k, Index l) const;
    const CoeffEntry& at(Index k, Index l) const;
    void set(Index k, Index l, CoeffEntry e);

private:
    Index slot(Index k, Index l) const;

    Index n_;
    std::vector<std::optional<CoeffEntry>> entries_;
};

/// Fill all pairs by increasing l - k for any accessor of an n x n Hermitian matrix.
template <MatrixAccessor Accessor>
CoeffTables grc_tables(Index n, const Accessor& m, OpCounter* counter = nullptr)
{
    CoeffTables t(n);
    for (Index k = 0; k < n; ++k) {
        const double rkk = Complex(m(k, k)).real();
        if (!(rkk > 0.0)) {
            throw NotPositiveDefinite(k, k, "non-positive diagonal entry");
        }
        t.set(k, k, diagonal_entry(n, k, rkk));
    }
    for (Index d = 1; d < n; ++d) {
        for (Index k = 0; k + d < n; ++k) {
            const Index l = k + d;
            const CoeffEntry& left = t.at(k, l - 1);
            const CoeffEntry& down = t.at(k + 1, l);
            t.set(k, l, grc_step(left.p, down.q, down.v, left.v_prime, m, k, l, counter));
        }
    }
    return t;
}

CoeffTables grc_full(const DenseHermitian& r, OpCounter* counter = nullptr);

/// Unit lower-triangular columns p(k, n-1) and positive diagonal v'(k, n-1).
class InverseFactor {
public:
    /// Throws std::invalid_argument when a column is not supported on
    /// [k, n-1] with unit head or a diagonal entry is not positive.
    InverseFactor(std::vector<BandVector> columns, std::vector<double> diag);

    Index size() const noexcept { return columns_.size(); }
    const std::vector<BandVector>& columns() const noexcept { return columns_; }
    const std::vector<double>& diag() const noexcept { return diag_; }

private:
    std::vector<BandVector> columns_;
    std::vector<double> diag_;
};

/// Relative tolerance of the factorization verification pass.
inline constexpr double kFactorCheckTolerance = 1e-10;

/// p^T R conj(p): the diagonal entry of P^T R conj(P) for one column.
template <MatrixAccessor Accessor>
double congruence_diagonal(const BandVector& p, const Accessor& m)
{
    Complex sum{};
    const auto c = p.coeff();
    for (Index a = 0; a < c.size(); ++a) {
        Complex row{};
        for (Index b = 0; b < c.size(); ++b) {
            row += Complex(m(p.lo() + a, p.lo() + b)) * std::conj(c[b]);
        }
        sum += c[a] * row;
    }
    return sum.real();
}

/// Build the factor from the last-column entries and verify each diagonal
/// value against its direct congruence evaluation. Throws FactorizationMismatch.
template <MatrixAccessor Accessor>
InverseFactor verified_factor(std::vector<BandVector> columns, std::vector<double> diag, const Accessor& m)
{
    for (Index k = 0; k < columns.size(); ++k) {
        const double direct = congruence_diagonal(columns[k], m);
        if (std::abs(direct - diag[k]) > kFactorCheckTolerance * std::max(std::abs(direct), std::abs(diag[k]))) {
            throw FactorizationMismatch("factor diagonal " + std::to_string(k) + ": recursion gives " +
                                        std::to_string(diag[k]) + ", direct evaluation " + std::to_string(direct));
        }
    }
    return InverseFactor(std::move(columns), std::move(diag));
}

InverseFactor build_factorization(const CoeffTables& t, const DenseHermitian& r);

/// conj(P) D^{-1} P^T b in three support-limited passes.
std::vector<Complex> apply_inverse(const InverseFactor& f, std::span<const Complex> b);

DenseHermitian inverse_dense(const InverseFactor& f);

}  // namespace tbt
