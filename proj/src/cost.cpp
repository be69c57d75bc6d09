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

#include "tbt/cost.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tbt/types.hpp"

namespace tbt {

double opc_triple_sum(std::int64_t n1, std::int64_t n2, double c1)
{
    if (n1 < 1 || n2 < 1) {
        throw std::invalid_argument("opc_triple_sum: sizes must be positive");
    }
    double upper = 0.0;
    for (std::int64_t d2 = 0; d2 < n2; ++d2) {
        for (std::int64_t d1 = 1; d1 < n1; ++d1) {
            // the summand does not depend on u = 0 .. n1-d1-1
            upper += c1 * static_cast<double>((n1 - d1) * (n1 * d2 + d1));
        }
    }
    double lower = 0.0;
    for (std::int64_t d2 = 1; d2 < n2; ++d2) {
        for (std::int64_t d1 = 0; d1 < n1; ++d1) {
            lower += c1 * static_cast<double>((n1 - d1) * (n1 * d2 - d1));
        }
    }
    return 0.5 * (upper + lower);
}

double opc_closed_form(std::int64_t n1_, std::int64_t n2_)
{
    if (n1_ < 1 || n2_ < 1) {
        throw std::invalid_argument("opc_closed_form: sizes must be positive");
    }
    const auto n1 = static_cast<double>(n1_);
    const auto n2 = static_cast<double>(n2_);
    return (n1 - 1) * 3.0 / 4.0 * (n1 - 1) * n1
         - 3.0 / 12.0 * (n1 - 1) * n1 * (2 * n1 - 1)
         + n1 * 3.0 / 2.0 * (n2 - 1) * n2 * (n1 - 1) * (n1 - 1)
         - n1 * (n2 - 1) * n2 * 3.0 / 4.0 * (n1 - 1) * n1
         + (n1 - 1) * n1 * 3.0 / 4.0 * (n2 - 1) * n2
         + 5.0 / 2.0 * n1 * n1 * n2;
}

double opcwwr(std::int64_t n1_, std::int64_t n2_)
{
    if (n2_ < 2) {
        throw DomainError("opcwwr: the WWR count is defined for n2 >= 2");
    }
    if (n1_ < 1) {
        throw std::invalid_argument("opcwwr: n1 must be positive");
    }
    const auto n1 = static_cast<double>(n1_);
    const auto n2 = static_cast<double>(n2_);
    const double cube = n1 * n1 * n1;
    return (n2 - 1) * 3.0 * cube + cube * (n2 + 1) * (n2 - 2);
}

std::vector<CostReport> comparison_table(std::int64_t n_min, std::int64_t n_max)
{
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("comparison_table: need 2 <= min <= max");
    }
    std::vector<CostReport> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        CostReport r;
        r.n1 = n;
        r.n2 = n;
        r.opc_sum12 = opc_triple_sum(n, n, 3.0);
        r.opc15 = opc_closed_form(n, n);
        r.opcwwr14 = opcwwr(n, n);
        r.ratio = r.opc15 / r.opcwwr14;
        rows.push_back(r);
    }
    return rows;
}

void write_cost_csv(std::ostream& out, const std::vector<CostReport>& rows)
{
    out << "n1,n2,opc_eq15,opc_eq12_c1_3,opcwwr_eq14,ratio\n";
    char buf[160];
    for (const CostReport& r : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%lld,%.6g,%.6g,%.6g,%.6g\n", static_cast<long long>(r.n1),
                      static_cast<long long>(r.n2), r.opc15, r.opc_sum12, r.opcwwr14, r.ratio);
        out << buf;
    }
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("loglog_slope: need at least two matching points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace tbt
