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

// Whittle-Wiggins-Robinson block Levinson recursion on the block rows of a
// TBT matrix. Baseline only: it solves the forward normal equations
//
//     sum_{l=1..n} A_l R_{j-l} = -R_j,   j = 1..n,
//
// one block order at a time. The backward predictor of a TBT matrix is the
// conjugate flip J conj(A_l) J of the forward one, with error J conj(P) J.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tbt/core.hpp"

namespace tbt {

struct WwrState {
    Index order = 0;
    std::vector<Eigen::MatrixXcd> A;  ///< A[l-1] = A_l^order, l = 1..order
    Eigen::MatrixXcd P;               ///< forward prediction-error matrix
    Eigen::MatrixXcd delta;           ///< innovation Delta_order
};

/// States for orders 1..n2-1. Throws DomainError when n2 < 2 and SingularP
/// when an error matrix loses rank.
std::vector<WwrState> wwr_recurse(const TbtGenerator& g, OpCounter* counter = nullptr);

/// || A R + r ||_F for the final-order state, with the block Toeplitz matrix
/// R (block (i,j) = R_{j-i}) and r = [R_1 ... R_{n2-1}] assembled densely.
double wwr_residual(const TbtGenerator& g, const WwrState& final_state);

/// || r ||_F, the scale for relative residuals.
double wwr_rhs_norm(const TbtGenerator& g);

}  // namespace tbt
