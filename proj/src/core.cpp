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

#include "tbt/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tbt {

NotPositiveDefinite::NotPositiveDefinite(Index k, Index l, const std::string& detail)
    : Error("matrix is not positive definite at (" + std::to_string(k) + ", " + std::to_string(l) + "): " + detail),
      k_(k),
      l_(l)
{
}

std::string summary_line(const OpCounter& counter)
{
    std::ostringstream out;
    out << "mul=" << counter.mul << " add=" << counter.add << " div=" << counter.div;
    return out.str();
}

std::int64_t mod_op(std::int64_t a, std::int64_t b)
{
    if (b < 1) {
        throw std::invalid_argument("mod_op: modulus must be >= 1");
    }
    const std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

std::int64_t sec_op(std::int64_t a, std::int64_t b)
{
    return a - mod_op(a, b);
}

IndexPair index_exchange(Index k, Index l, Index n1)
{
    if (k > l) {
        throw std::invalid_argument("index_exchange: requires k <= l");
    }
    const auto sk = static_cast<std::int64_t>(k);
    const auto sl = static_cast<std::int64_t>(l);
    const auto b = static_cast<std::int64_t>(n1);
    const std::int64_t kx = sec_op(sk, b) + b - 1 - mod_op(sl, b);
    const std::int64_t lx = sec_op(sl, b) + b - 1 - mod_op(sk, b);
    return {static_cast<Index>(kx), static_cast<Index>(lx)};
}

// ---------------------------------------------------------------------------
// TbtGenerator

namespace {

bool finite(Complex z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

TbtGenerator::TbtGenerator(Index n1, Index n2, std::vector<Complex> values)
    : n1_(n1), n2_(n2), values_(std::move(values))
{
    if (n1_ == 0 || n2_ == 0) {
        throw std::invalid_argument("TbtGenerator: n1 and n2 must be positive");
    }
    const Index width = 2 * n1_ - 1;
    if (values_.size() != n2_ * width) {
        throw std::invalid_argument("TbtGenerator: expected n2 * (2 n1 - 1) values");
    }
    if (!std::all_of(values_.begin(), values_.end(), finite)) {
        throw std::invalid_argument("TbtGenerator: non-finite value");
    }
    const Index mid = n1_ - 1;
    Complex& c00 = values_[mid];
    if (!(c00.real() > 0.0)) {
        throw std::invalid_argument("TbtGenerator: c(0,0) must be real and positive");
    }
    const double tol = 1e-12 * c00.real();
    if (std::abs(c00.imag()) > tol) {
        throw std::invalid_argument("TbtGenerator: c(0,0) must be real");
    }
    c00 = Complex(c00.real(), 0.0);
    for (Index s = 1; s < n1_; ++s) {
        const Complex up = values_[mid + s];
        const Complex down = values_[mid - s];
        if (std::abs(down - std::conj(up)) > tol) {
            throw std::invalid_argument("TbtGenerator: block R_0 is not Hermitian (c(0,-s) != conj c(0,s))");
        }
        values_[mid - s] = std::conj(up);
    }
}

TbtGenerator TbtGenerator::identity(Index n1, Index n2)
{
    std::vector<Complex> values(n2 * (2 * n1 - 1));
    values[n1 - 1] = 1.0;
    return TbtGenerator(n1, n2, std::move(values));
}

Complex TbtGenerator::c(Index d, std::int64_t s) const
{
    const auto reach = static_cast<std::int64_t>(n1_) - 1;
    if (d >= n2_ || s < -reach || s > reach) {
        throw std::out_of_range("TbtGenerator::c: index out of range");
    }
    return values_[d * (2 * n1_ - 1) + static_cast<Index>(s + reach)];
}

Complex TbtGenerator::entry(Index i, Index j) const
{
    const Index n = size();
    if (i >= n || j >= n) {
        throw std::out_of_range("tbt_entry: index out of range");
    }
    const Index bi = i / n1_;
    const Index bj = j / n1_;
    if (bj < bi) {
        return std::conj(entry(j, i));
    }
    const auto s = static_cast<std::int64_t>(j % n1_) - static_cast<std::int64_t>(i % n1_);
    return values_[(bj - bi) * (2 * n1_ - 1) + static_cast<Index>(s + static_cast<std::int64_t>(n1_) - 1)];
}

Eigen::MatrixXcd TbtGenerator::block(std::int64_t d) const
{
    const auto m = static_cast<Eigen::Index>(n1_);
    Eigen::MatrixXcd out(m, m);
    const Index ad = static_cast<Index>(d < 0 ? -d : d);
    for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b) {
            out(a, b) = c(ad, b - a);
        }
    }
    if (d < 0) {
        return out.adjoint();
    }
    return out;
}

// ---------------------------------------------------------------------------
// DenseHermitian

DenseHermitian::DenseHermitian(Eigen::MatrixXcd m, double tolerance) : m_(std::move(m))
{
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw std::invalid_argument("DenseHermitian: matrix must be square and non-empty");
    }
    if (!m_.allFinite()) {
        throw std::invalid_argument("DenseHermitian: non-finite entry");
    }
    const double scale = std::max(m_.cwiseAbs().maxCoeff(), 1e-300);
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tolerance * scale) {
        throw std::invalid_argument("DenseHermitian: matrix is not Hermitian");
    }
    const Eigen::Index n = m_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        m_(i, i) = Complex(m_(i, i).real(), 0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            m_(j, i) = std::conj(m_(i, j));
        }
    }
}

DenseHermitian assemble_dense(const TbtGenerator& g)
{
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = g.entry(static_cast<Index>(i), static_cast<Index>(j));
        }
    }
    return DenseHermitian(std::move(m), 0.0);
}

// ---------------------------------------------------------------------------
// BandVector

BandVector::BandVector(Index n, Index lo, std::vector<Complex> coeff) : n_(n), lo_(lo), coeff_(std::move(coeff))
{
    if (coeff_.empty() || lo_ + coeff_.size() > n_) {
        throw std::invalid_argument("BandVector: support must satisfy 0 <= lo <= hi <= n-1");
    }
}

BandVector BandVector::basis(Index n, Index k)
{
    return BandVector(n, k, {Complex(1.0, 0.0)});
}

Complex BandVector::at(Index i) const
{
    if (i >= n_) {
        throw std::out_of_range("BandVector::at: index out of range");
    }
    if (i < lo_ || i > hi()) {
        return {};
    }
    return coeff_[i - lo_];
}

std::vector<Complex> BandVector::dense() const
{
    std::vector<Complex> out(n_);
    std::copy(coeff_.begin(), coeff_.end(), out.begin() + static_cast<std::ptrdiff_t>(lo_));
    return out;
}

BandVector shift(const BandVector& v, std::int64_t t)
{
    const auto lo = static_cast<std::int64_t>(v.lo()) + t;
    const auto hi = static_cast<std::int64_t>(v.hi()) + t;
    if (lo < 0 || hi > static_cast<std::int64_t>(v.size()) - 1) {
        throw InternalIndexError("shift: support [" + std::to_string(v.lo()) + ", " + std::to_string(v.hi()) +
                                 "] moved by " + std::to_string(t) + " leaves the vector");
    }
    return BandVector(v.size(), static_cast<Index>(lo), std::vector<Complex>(v.coeff().begin(), v.coeff().end()));
}

BandVector reverse_support(const BandVector& v)
{
    return BandVector(v.size(), v.lo(), std::vector<Complex>(v.coeff().rbegin(), v.coeff().rend()));
}

BandVector conjugate(const BandVector& v)
{
    std::vector<Complex> c(v.coeff().begin(), v.coeff().end());
    for (auto& z : c) {
        z = std::conj(z);
    }
    return BandVector(v.size(), v.lo(), std::move(c));
}

BandVector exchange_image(const BandVector& v, std::int64_t t)
{
    std::vector<Complex> c(v.coeff().rbegin(), v.coeff().rend());
    for (auto& z : c) {
        z = std::conj(z);
    }
    return shift(BandVector(v.size(), v.lo(), std::move(c)), t);
}

BandVector subtract_scaled(const BandVector& x, Complex alpha, const BandVector& y, OpCounter* counter)
{
    if (x.size() != y.size()) {
        throw std::invalid_argument("subtract_scaled: length mismatch");
    }
    const Index lo = std::min(x.lo(), y.lo());
    const Index hi = std::max(x.hi(), y.hi());
    std::vector<Complex> c(hi - lo + 1);
    for (Index i = x.lo(); i <= x.hi(); ++i) {
        c[i - lo] = x.coeff()[i - x.lo()];
    }
    for (Index i = y.lo(); i <= y.hi(); ++i) {
        c[i - lo] -= alpha * y.coeff()[i - y.lo()];
    }
    if (counter) {
        counter->mul += y.coeff().size();
        counter->add += y.coeff().size();
    }
    return BandVector(x.size(), lo, std::move(c));
}

}  // namespace tbt
