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

#include "tbt/wwr.hpp"

#include <limits>

namespace tbt {

namespace {

using Block = Eigen::MatrixXcd;

// J conj(M) J
Block flip_conj(const Block& m)
{
    return m.conjugate().reverse();
}

void count_product(OpCounter* counter, Eigen::Index n1)
{
    if (counter) {
        const auto n = static_cast<std::uint64_t>(n1);
        counter->mul += n * n * n;
        counter->add += n * n * (n - 1);
    }
}

// Inverse of a Hermitian error matrix by partially pivoted elimination.
Block invert_error_matrix(const Block& p, Index order, OpCounter* counter)
{
    const Eigen::PartialPivLU<Block> lu(p);
    const double scale = p.cwiseAbs().colwise().sum().maxCoeff();
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * scale;
    const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(pivot > floor)) {
        throw SingularP("prediction-error matrix is singular at order " + std::to_string(order) +
                        " (pivot " + std::to_string(pivot) + ")");
    }
    if (counter) {
        const auto n = static_cast<std::uint64_t>(p.rows());
        counter->mul += n * n * n;
        counter->add += n * n * n;
        counter->div += n;
    }
    return lu.inverse();
}

}  // namespace

std::vector<WwrState> wwr_recurse(const TbtGenerator& g, OpCounter* counter)
{
    const Index n2 = g.n2();
    if (n2 < 2) {
        throw DomainError("wwr_recurse: needs at least two blocks");
    }
    const auto n1 = static_cast<Eigen::Index>(g.n1());

    std::vector<Block> r(n2);
    for (Index d = 0; d < n2; ++d) {
        r[d] = g.block(static_cast<std::int64_t>(d));
    }

    std::vector<WwrState> states;
    states.reserve(n2 - 1);
    std::vector<Block> a;
    Block p = r[0];

    for (Index n = 1; n < n2; ++n) {
        Block delta = r[n];
        for (Index l = 1; l < n; ++l) {
            delta += a[l - 1] * r[n - l];
            count_product(counter, n1);
        }

        const Block k = -delta * invert_error_matrix(flip_conj(p), n, counter);
        count_product(counter, n1);

        // A^n_l = A^{n-1}_l + K J conj(A^{n-1}_{n-l}) J,  A^n_n = K
        std::vector<Block> next(n);
        for (Index l = 1; l < n; ++l) {
            next[l - 1] = a[l - 1] + k * flip_conj(a[n - l - 1]);
            count_product(counter, n1);
        }
        next[n - 1] = k;

        p += k * flip_conj(delta);
        count_product(counter, n1);
        p = 0.5 * (p + p.adjoint()).eval();

        a = next;
        states.push_back(WwrState{n, std::move(next), p, std::move(delta)});
    }
    return states;
}

double wwr_residual(const TbtGenerator& g, const WwrState& final_state)
{
    const Index n2 = g.n2();
    if (final_state.order + 1 != n2) {
        throw std::invalid_argument("wwr_residual: state is not of final order n2 - 1");
    }
    const auto n1 = static_cast<Eigen::Index>(g.n1());
    const auto m = static_cast<Eigen::Index>(n2 - 1);

    Block coeffs(n1, m * n1);
    Block big(m * n1, m * n1);
    Block rhs(n1, m * n1);
    for (Eigen::Index i = 0; i < m; ++i) {
        coeffs.middleCols(i * n1, n1) = final_state.A[static_cast<Index>(i)];
        rhs.middleCols(i * n1, n1) = g.block(i + 1);
        for (Eigen::Index j = 0; j < m; ++j) {
            big.block(i * n1, j * n1, n1, n1) = g.block(j - i);
        }
    }
    return (coeffs * big + rhs).norm();
}

double wwr_rhs_norm(const TbtGenerator& g)
{
    double sq = 0.0;
    for (Index d = 1; d < g.n2(); ++d) {
        sq += g.block(static_cast<std::int64_t>(d)).squaredNorm();
    }
    return std::sqrt(sq);
}

}  // namespace tbt
