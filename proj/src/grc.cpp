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

#include "tbt/grc.hpp"

#include <limits>

namespace tbt {

CoeffEntry diagonal_entry(Index n, Index k, double r_kk)
{
    return CoeffEntry{Complex{}, Complex{}, r_kk, r_kk, BandVector::basis(n, k), BandVector::basis(n, k)};
}

namespace {

void check_energy(double v, Index k, Index l, const char* name)
{
    if (std::isnan(v) || v <= 0.0) {
        throw NotPositiveDefinite(k, l, std::string("non-positive energy ") + name);
    }
    if (!std::isfinite(v) || v < std::numeric_limits<double>::min()) {
        throw NumericalBreakdown(std::string("energy ") + name + " out of range at (" + std::to_string(k) + ", " +
                                 std::to_string(l) + ")");
    }
}

}  // namespace

CoeffEntry finish_step(Complex numerator, const BandVector& p_hat, const BandVector& q_hat, double v_hat,
                       double v_hat_prime, Index k, Index l, OpCounter* counter)
{
    check_energy(v_hat, k, l, "v_hat");
    check_energy(v_hat_prime, k, l, "v_hat_prime");

    const Complex a = numerator / v_hat;
    const Complex a_prime = std::conj(numerator) / v_hat_prime;
    const Complex gain = 1.0 - a * a_prime;
    if (counter) {
        counter->div += 2;
        counter->mul += 3;
        counter->add += 1;
    }

    // a a' = |num|^2 / (v_hat v_hat') is real in exact arithmetic.
    if (std::abs(gain.imag()) > 1e-10 * std::max(1.0, std::abs(a * a_prime))) {
        throw NumericalBreakdown("1 - a a' is not real at (" + std::to_string(k) + ", " + std::to_string(l) + ")");
    }
    if (!(gain.real() > kPdTolerance)) {
        throw NotPositiveDefinite(k, l, "1 - a a' = " + std::to_string(gain.real()));
    }

    return CoeffEntry{a,
                      a_prime,
                      v_hat * gain.real(),
                      v_hat_prime * gain.real(),
                      subtract_scaled(p_hat, a, q_hat, counter),
                      subtract_scaled(q_hat, a_prime, p_hat, counter)};
}

// ---------------------------------------------------------------------------

CoeffTables::CoeffTables(Index n) : n_(n), entries_(n * (n + 1) / 2)
{
    if (n == 0) {
        throw std::invalid_argument("CoeffTables: n must be positive");
    }
}

Index CoeffTables::slot(Index k, Index l) const
{
    if (k > l || l >= n_) {
        throw std::out_of_range("CoeffTables: pair (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") out of range");
    }
    // Row k of the upper triangle starts after k rows of decreasing length.
    return k * n_ - k * (k - 1) / 2 + (l - k);
}

bool CoeffTables::contains(Index k, Index l) const
{
    return entries_[slot(k, l)].has_value();
}

const CoeffEntry& CoeffTables::at(Index k, Index l) const
{
    const auto& e = entries_[slot(k, l)];
    if (!e) {
        throw InternalIndexError("CoeffTables: pair (" + std::to_string(k) + ", " + std::to_string(l) +
                                 ") not computed");
    }
    return *e;
}

void CoeffTables::set(Index k, Index l, CoeffEntry e)
{
    entries_[slot(k, l)] = std::move(e);
}

CoeffTables grc_full(const DenseHermitian& r, OpCounter* counter)
{
    return grc_tables(r.size(), r, counter);
}

// ---------------------------------------------------------------------------

InverseFactor::InverseFactor(std::vector<BandVector> columns, std::vector<double> diag)
    : columns_(std::move(columns)), diag_(std::move(diag))
{
    const Index n = columns_.size();
    if (n == 0 || diag_.size() != n) {
        throw std::invalid_argument("InverseFactor: need n columns and n diagonal entries");
    }
    for (Index k = 0; k < n; ++k) {
        const BandVector& c = columns_[k];
        if (c.size() != n || c.lo() != k || c.hi() != n - 1 || c.coeff()[0] != Complex(1.0, 0.0)) {
            throw std::invalid_argument("InverseFactor: column " + std::to_string(k) +
                                        " is not unit lower-triangular on [k, n-1]");
        }
        if (!(diag_[k] > 0.0) || !std::isfinite(diag_[k])) {
            throw std::invalid_argument("InverseFactor: diagonal entry " + std::to_string(k) + " is not positive");
        }
    }
}

InverseFactor build_factorization(const CoeffTables& t, const DenseHermitian& r)
{
    const Index n = t.size();
    if (r.size() != n) {
        throw std::invalid_argument("build_factorization: matrix size mismatch");
    }
    std::vector<BandVector> columns;
    std::vector<double> diag;
    columns.reserve(n);
    diag.reserve(n);
    for (Index k = 0; k < n; ++k) {
        const CoeffEntry& e = t.at(k, n - 1);
        columns.push_back(e.p);
        diag.push_back(e.v_prime);
    }
    return verified_factor(std::move(columns), std::move(diag), r);
}

std::vector<Complex> apply_inverse(const InverseFactor& f, std::span<const Complex> b)
{
    const Index n = f.size();
    if (b.size() != n) {
        throw std::invalid_argument("apply_inverse: vector length mismatch");
    }
    // y = D^{-1} P^T b
    std::vector<Complex> y(n);
    for (Index k = 0; k < n; ++k) {
        const BandVector& col = f.columns()[k];
        Complex s{};
        for (Index i = col.lo(); i <= col.hi(); ++i) {
            s += col.coeff()[i - col.lo()] * b[i];
        }
        y[k] = s / f.diag()[k];
    }
    // x = conj(P) y
    std::vector<Complex> x(n);
    for (Index k = 0; k < n; ++k) {
        const BandVector& col = f.columns()[k];
        for (Index i = col.lo(); i <= col.hi(); ++i) {
            x[i] += std::conj(col.coeff()[i - col.lo()]) * y[k];
        }
    }
    return x;
}

DenseHermitian inverse_dense(const InverseFactor& f)
{
    const auto n = static_cast<Eigen::Index>(f.size());
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const BandVector& col = f.columns()[static_cast<Index>(k)];
        for (Index i = col.lo(); i <= col.hi(); ++i) {
            p(static_cast<Eigen::Index>(i), k) = col.coeff()[i - col.lo()];
        }
    }
    Eigen::VectorXd inv_d(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        inv_d(k) = 1.0 / f.diag()[static_cast<Index>(k)];
    }
    Eigen::MatrixXcd x = p.conjugate() * inv_d.asDiagonal() * p.transpose();
    Eigen::MatrixXcd sym = 0.5 * (x + x.adjoint());
    return DenseHermitian(std::move(sym), 0.0);
}

}  // namespace tbt
