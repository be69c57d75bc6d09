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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tbt/core.hpp"
#include "tbt/grc.hpp"

namespace tbt {

/// splitmix64. The whole update is
///
///     state += 0x9e3779b97f4a7c15
///     z = state
///     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///     return z ^ (z >> 31)
///
/// and uniform() maps the top 53 bits to [0, 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    double uniform() noexcept;

private:
    std::uint64_t state_;
};

inline constexpr double kDefaultRidge = 1e-6;
inline constexpr double kDefaultTolerance = 1e-8;

/// Random positive definite TBT generator from the biased sample
/// autocorrelation of a complex field.
///
/// The field x(u, v) lives on a (n1 + L) x (n2 + L) grid, L = max(n1, n2),
/// u along the intra-block axis and v along the block axis. Values are drawn
/// u-major (u outer, v inner), real part first, each as 2 * uniform() - 1.
/// Outside the grid x is zero, and with N the grid size
///
///     c(d, s) = (1/N) sum_{u,v} x(u, v) conj(x(u - s, v - d)).
///
/// c(0, -s) is set to conj(c(0, s)) exactly, and c(0,0) is scaled by 1 + ridge.
TbtGenerator generate_pd_tbt(Index n1, Index n2, std::uint64_t seed, double ridge = kDefaultRidge);

/// Largest deviation between two tuples at the same pair: coefficients and
/// vectors relative to max(1, |reference|), energies relative to the reference.
double entry_deviation(const CoeffEntry& x, const CoeffEntry& ref);

struct VerifyReport {
    double table_deviation = 0.0;     ///< fast fetch vs dense oracle, all pairs
    double inverse_residual = 0.0;    ///< ||R X - I||_F / sqrt(n)
    std::optional<double> wwr_residual;  ///< relative normal-equation residual (n2 >= 2)
    double tolerance = kDefaultTolerance;
    bool passed = false;

    std::string to_string() const;
};

/// Cross-check fast tables, the fast inverse and the WWR baseline.
/// NotPositiveDefinite propagates.
VerifyReport run_verify(const TbtGenerator& g, double tolerance = kDefaultTolerance);

}  // namespace tbt
