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

#include "tbt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tbt/fast.hpp"
#include "tbt/io.hpp"
#include "tbt/wwr.hpp"

namespace tbt {

std::uint64_t SplitMix64::next() noexcept
{
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

TbtGenerator generate_pd_tbt(Index n1, Index n2, std::uint64_t seed, double ridge)
{
    if (n1 == 0 || n2 == 0) {
        throw std::invalid_argument("generate_pd_tbt: sizes must be positive");
    }
    if (!(ridge >= 0.0)) {
        throw std::invalid_argument("generate_pd_tbt: ridge must be non-negative");
    }
    const Index pad = std::max(n1, n2);
    const auto rows = static_cast<std::int64_t>(n1 + pad);  // u
    const auto cols = static_cast<std::int64_t>(n2 + pad);  // v

    SplitMix64 rng(seed);
    std::vector<Complex> field(static_cast<Index>(rows * cols));
    for (auto& z : field) {
        const double re = 2.0 * rng.uniform() - 1.0;
        const double im = 2.0 * rng.uniform() - 1.0;
        z = Complex(re, im);
    }
    const auto at = [&](std::int64_t u, std::int64_t v) {
        return field[static_cast<Index>(u * cols + v)];
    };

    const auto reach = static_cast<std::int64_t>(n1) - 1;
    const Index width = 2 * n1 - 1;
    const double inv_count = 1.0 / static_cast<double>(rows * cols);
    std::vector<Complex> values(n2 * width);
    for (Index d = 0; d < n2; ++d) {
        const auto sd = static_cast<std::int64_t>(d);
        for (std::int64_t s = -reach; s <= reach; ++s) {
            if (d == 0 && s < 0) {
                continue;
            }
            Complex acc{};
            for (std::int64_t u = std::max<std::int64_t>(0, s); u < std::min(rows, rows + s); ++u) {
                for (std::int64_t v = sd; v < cols; ++v) {
                    acc += at(u, v) * std::conj(at(u - s, v - sd));
                }
            }
            values[d * width + static_cast<Index>(s + reach)] = acc * inv_count;
        }
    }
    const Index mid = n1 - 1;
    values[mid] = Complex(values[mid].real() * (1.0 + ridge), 0.0);
    for (Index s = 1; s < n1; ++s) {
        values[mid - s] = std::conj(values[mid + s]);
    }
    return TbtGenerator(n1, n2, std::move(values));
}

// ---------------------------------------------------------------------------

namespace {

double vector_deviation(const BandVector& x, const BandVector& ref)
{
    if (x.size() != ref.size()) {
        return INFINITY;
    }
    double scale = 1.0;
    for (Complex z : ref.coeff()) {
        scale = std::max(scale, std::abs(z));
    }
    double worst = 0.0;
    const Index lo = std::min(x.lo(), ref.lo());
    const Index hi = std::max(x.hi(), ref.hi());
    for (Index i = lo; i <= hi; ++i) {
        worst = std::max(worst, std::abs(x.at(i) - ref.at(i)));
    }
    return worst / scale;
}

double scalar_deviation(Complex x, Complex ref)
{
    return std::abs(x - ref) / std::max(1.0, std::abs(ref));
}

}  // namespace

double entry_deviation(const CoeffEntry& x, const CoeffEntry& ref)
{
    return std::max({scalar_deviation(x.a, ref.a),
                     scalar_deviation(x.a_prime, ref.a_prime),
                     std::abs(x.v - ref.v) / std::abs(ref.v),
                     std::abs(x.v_prime - ref.v_prime) / std::abs(ref.v_prime),
                     vector_deviation(x.p, ref.p),
                     vector_deviation(x.q, ref.q)});
}

std::string VerifyReport::to_string() const
{
    std::ostringstream out;
    out << "table_deviation=" << format_real(table_deviation) << '\n';
    out << "inverse_residual=" << format_real(inverse_residual) << '\n';
    if (wwr_residual) {
        out << "wwr_residual=" << format_real(*wwr_residual) << '\n';
    } else {
        out << "wwr_residual=n/a\n";
    }
    out << "tolerance=" << format_real(tolerance) << '\n';
    out << (passed ? "PASS" : "FAIL") << '\n';
    return out.str();
}

VerifyReport run_verify(const TbtGenerator& g, double tolerance)
{
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("run_verify: tolerance must be positive");
    }
    VerifyReport report;
    report.tolerance = tolerance;

    const DenseHermitian dense = assemble_dense(g);
    const CoeffTables oracle = grc_full(dense);
    const CanonicalTables fast = tbt_grc(g);
    const Index n = g.size();
    for (Index k = 0; k < n; ++k) {
        for (Index l = k; l < n; ++l) {
            report.table_deviation = std::max(report.table_deviation, entry_deviation(fetch(fast, k, l), oracle.at(k, l)));
        }
    }

    const DenseHermitian inverse = inverse_dense(tbt_factorization(g));
    const auto en = static_cast<Eigen::Index>(n);
    report.inverse_residual = (dense.matrix() * inverse.matrix() - Eigen::MatrixXcd::Identity(en, en)).norm() /
                              std::sqrt(static_cast<double>(n));

    if (g.n2() >= 2) {
        const auto states = wwr_recurse(g);
        const double scale = wwr_rhs_norm(g);
        const double residual = wwr_residual(g, states.back());
        report.wwr_residual = scale > 0.0 ? residual / scale : residual;
    }

    report.passed = report.table_deviation <= tolerance && report.inverse_residual <= tolerance &&
                    (!report.wwr_residual || *report.wwr_residual <= tolerance);
    return report;
}

}  // namespace tbt
