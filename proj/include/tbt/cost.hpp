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

// Closed-form operation counts of the fast TBT recursion and of the WWR
// baseline. The triple-sum form and the expanded fast count differ at small
// sizes and agree in their leading term 3/4 n1^3 n2^2.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace tbt {

struct CostReport {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    double opc_sum12 = 0.0;  ///< halved triple sums, c1 = 3
    double opc15 = 0.0;      ///< expanded fast-algorithm count
    double opcwwr14 = 0.0;   ///< WWR count
    double ratio = 0.0;      ///< opc15 / opcwwr14
    std::optional<std::uint64_t> measured_mul;
};

/// 1/2 [ sum_{d2=0}^{n2-1} sum_{d1=1}^{n1-1} sum_{u=0}^{n1-d1-1} c1 (n1 d2 + d1)
///     + sum_{d2=1}^{n2-1} sum_{d1=0}^{n1-1} sum_{u=0}^{n1-d1-1} c1 (n1 d2 - d1) ]
double opc_triple_sum(std::int64_t n1, std::int64_t n2, double c1);

/// Six-term expansion with c1 = 3 plus 5/2 n1^2 n2 for divisions and energy updates.
double opc_closed_form(std::int64_t n1, std::int64_t n2);

/// (n2-1) 3 n1^3 + n1^3 (n2+1)(n2-2). Throws DomainError for n2 < 2.
double opcwwr(std::int64_t n1, std::int64_t n2);

/// One row per n = n1 = n2 in [n_min, n_max]. Requires 2 <= n_min <= n_max.
std::vector<CostReport> comparison_table(std::int64_t n_min, std::int64_t n_max);

/// Header `n1,n2,opc_eq15,opc_eq12_c1_3,opcwwr_eq14,ratio`, values with 6 significant digits.
void write_cost_csv(std::ostream& out, const std::vector<CostReport>& rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tbt
