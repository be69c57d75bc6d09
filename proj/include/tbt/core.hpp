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

// Structured core: scalars, the Toeplitz-block-Toeplitz generator, dense
// Hermitian matrices, support-tracked vectors and the block index algebra
// (mod / sec / exchange, shift, support reversal) everything else is built on.

#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tbt/types.hpp"

namespace tbt {

/// Nonnegative remainder a - b*floor(a/b). Requires b >= 1.
std::int64_t mod_op(std::int64_t a, std::int64_t b);

/// Largest multiple of b not exceeding a, i.e. a - mod_op(a, b).
std::int64_t sec_op(std::int64_t a, std::int64_t b);

struct IndexPair {
    Index k = 0;
    Index l = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Mirror of (k, l) about the antidiagonal of its n1-block cell.
/// Preserves l - k. Requires k <= l.
IndexPair index_exchange(Index k, Index l, Index n1);

/// Compact description of a Hermitian TBT matrix: n2 x n2 blocks of size
/// n1 x n1, block (bi, bj) with bj >= bi holding the Toeplitz block whose
/// (a, b) entry is c(bj - bi, b - a). Blocks below the diagonal are the
/// conjugate transposes.
class TbtGenerator {
public:
    /// `values` is laid out row by row: row d holds c(d, s) for
    /// s = -(n1-1) .. n1-1. Throws std::invalid_argument when the block
    /// R_0 is not Hermitian, c(0,0) is not positive or a value is not finite.
    TbtGenerator(Index n1, Index n2, std::vector<Complex> values);

    static TbtGenerator identity(Index n1, Index n2);

    Index n1() const noexcept { return n1_; }
    Index n2() const noexcept { return n2_; }
    Index size() const noexcept { return n1_ * n2_; }

    /// c(d, s) for d in [0, n2-1], s in [-(n1-1), n1-1].
    Complex c(Index d, std::int64_t s) const;

    /// Raw row-major generator values (see constructor).
    std::span<const Complex> values() const noexcept { return values_; }

    /// r_{i,j} of the assembled matrix. Throws std::out_of_range.
    Complex entry(Index i, Index j) const;

    Complex operator()(Index i, Index j) const { return entry(i, j); }

    /// Block R_d of the first block row (d may be negative: R_{-d} = R_d^H).
    Eigen::MatrixXcd block(std::int64_t d) const;

    friend bool operator==(const TbtGenerator&, const TbtGenerator&) = default;

private:
    Index n1_;
    Index n2_;
    std::vector<Complex> values_;
};

inline Complex tbt_entry(const TbtGenerator& g, Index i, Index j) { return g.entry(i, j); }

/// Dense n x n Hermitian matrix. The stored array is exactly Hermitian
/// (upper triangle mirrored, real diagonal).
class DenseHermitian {
public:
    /// Throws std::invalid_argument if `m` is not square or deviates from
    /// Hermitian by more than `tolerance` relative to its largest entry.
    explicit DenseHermitian(Eigen::MatrixXcd m, double tolerance = 1e-12);

    Index size() const noexcept { return static_cast<Index>(m_.rows()); }
    Complex operator()(Index i, Index j) const { return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }

private:
    Eigen::MatrixXcd m_;
};

DenseHermitian assemble_dense(const TbtGenerator& g);

/// Length-n vector whose entries outside [lo, hi] are exactly zero; only the
/// support window is stored.
class BandVector {
public:
    BandVector(Index n, Index lo, std::vector<Complex> coeff);

    /// Canonical basis vector e_k of length n.
    static BandVector basis(Index n, Index k);

    Index size() const noexcept { return n_; }
    Index lo() const noexcept { return lo_; }
    Index hi() const noexcept { return lo_ + coeff_.size() - 1; }
    std::span<const Complex> coeff() const noexcept { return coeff_; }

    /// Entry i of the full-length vector (zero outside the support).
    Complex at(Index i) const;

    std::vector<Complex> dense() const;

    friend bool operator==(const BandVector&, const BandVector&) = default;

private:
    Index n_;
    Index lo_;
    std::vector<Complex> coeff_;
};

/// U^t v: support translated by t. Throws InternalIndexError if the support
/// would leave [0, n-1].
BandVector shift(const BandVector& v, std::int64_t t);

/// Coefficients reversed inside [lo, hi].
BandVector reverse_support(const BandVector& v);

/// Entrywise complex conjugate.
BandVector conjugate(const BandVector& v);

/// U^t (reverse_support(v))^*, the reconstruction used by every exchange.
BandVector exchange_image(const BandVector& v, std::int64_t t);

/// x - alpha * y over the hull of both supports.
BandVector subtract_scaled(const BandVector& x, Complex alpha, const BandVector& y,
                           OpCounter* counter = nullptr);

template <class A>
concept MatrixAccessor = requires(const A& m, Index i, Index j) {
    { m(i, j) } -> std::convertible_to<Complex>;
};

/// sum_{i in [lo, hi]} v_i m(i, col). Touches only the support window.
template <MatrixAccessor Accessor>
Complex column_inner(const BandVector& v, const Accessor& m, Index col, OpCounter* counter = nullptr)
{
    Complex sum{};
    const auto c = v.coeff();
    for (Index t = 0; t < c.size(); ++t) {
        sum += c[t] * Complex(m(v.lo() + t, col));
    }
    if (counter) {
        counter->mul += c.size();
        counter->add += c.size() - 1;
    }
    return sum;
}

}  // namespace tbt
