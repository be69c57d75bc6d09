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

#include "tbt/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tbt {

namespace {

// Next line that is neither blank nor a comment, split on whitespace.
bool next_record(std::istream& in, std::vector<std::string>& fields)
{
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        fields.clear();
        std::istringstream split(line);
        for (std::string f; split >> f;) {
            fields.push_back(std::move(f));
        }
        return true;
    }
    return false;
}

std::vector<std::string> require_record(std::istream& in, const char* what)
{
    std::vector<std::string> fields;
    if (!next_record(in, fields)) {
        throw FormatError(std::string("unexpected end of input while reading ") + what);
    }
    return fields;
}

double parse_real(const std::string& s)
{
    double x = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (*begin == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc() || ptr != end) {
        throw FormatError("not a number: '" + s + "'");
    }
    return x;
}

Index parse_index(const std::string& s)
{
    Index x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw FormatError("not a non-negative integer: '" + s + "'");
    }
    return x;
}

std::vector<Complex> parse_pairs(const std::vector<std::string>& fields, std::size_t offset, std::size_t count,
                                 const char* what)
{
    if (fields.size() != offset + 2 * count) {
        throw FormatError(std::string(what) + ": expected " + std::to_string(count) + " complex values, got " +
                          std::to_string((fields.size() - offset) / 2));
    }
    std::vector<Complex> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = Complex(parse_real(fields[offset + 2 * i]), parse_real(fields[offset + 2 * i + 1]));
    }
    return out;
}

void put_complex(std::ostream& out, Complex z)
{
    out << format_real(z.real()) << ' ' << format_real(z.imag());
}

}  // namespace

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

void write_generator(std::ostream& out, const TbtGenerator& g)
{
    out << g.n1() << ' ' << g.n2() << '\n';
    const Index width = 2 * g.n1() - 1;
    const auto values = g.values();
    for (Index d = 0; d < g.n2(); ++d) {
        for (Index s = 0; s < width; ++s) {
            if (s != 0) {
                out << ' ';
            }
            put_complex(out, values[d * width + s]);
        }
        out << '\n';
    }
}

TbtGenerator read_generator(std::istream& in)
{
    const auto header = require_record(in, "generator header");
    if (header.size() != 2) {
        throw FormatError("generator header must be `n1 n2`");
    }
    const Index n1 = parse_index(header[0]);
    const Index n2 = parse_index(header[1]);
    if (n1 == 0 || n2 == 0) {
        throw FormatError("generator sizes must be positive");
    }
    std::vector<Complex> values;
    values.reserve(n2 * (2 * n1 - 1));
    for (Index d = 0; d < n2; ++d) {
        const auto row = parse_pairs(require_record(in, "generator row"), 0, 2 * n1 - 1, "generator row");
        values.insert(values.end(), row.begin(), row.end());
    }
    try {
        return TbtGenerator(n1, n2, std::move(values));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

void write_dense(std::ostream& out, const Eigen::MatrixXcd& m)
{
    out << m.rows() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j != 0) {
                out << ' ';
            }
            put_complex(out, m(i, j));
        }
        out << '\n';
    }
}

Eigen::MatrixXcd read_dense(std::istream& in)
{
    const auto header = require_record(in, "dense header");
    if (header.size() != 1) {
        throw FormatError("dense header must be `n`");
    }
    const Index n = parse_index(header[0]);
    const auto en = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd m(en, en);
    for (Eigen::Index i = 0; i < en; ++i) {
        const auto row = parse_pairs(require_record(in, "dense row"), 0, n, "dense row");
        for (Eigen::Index j = 0; j < en; ++j) {
            m(i, j) = row[static_cast<Index>(j)];
        }
    }
    return m;
}

void write_factor(std::ostream& out, const InverseFactor& f)
{
    out << f.size() << '\n';
    for (const BandVector& col : f.columns()) {
        out << col.lo() << ' ' << col.hi();
        for (Complex z : col.coeff()) {
            out << ' ';
            put_complex(out, z);
        }
        out << '\n';
    }
    out << "diag";
    for (double d : f.diag()) {
        out << ' ' << format_real(d);
    }
    out << '\n';
}

InverseFactor read_factor(std::istream& in)
{
    const auto header = require_record(in, "factor header");
    if (header.size() != 1) {
        throw FormatError("factor header must be `n`");
    }
    const Index n = parse_index(header[0]);
    std::vector<BandVector> columns;
    for (Index k = 0; k < n; ++k) {
        const auto fields = require_record(in, "factor column");
        if (fields.size() < 2) {
            throw FormatError("factor column must start with `k hi`");
        }
        const Index lo = parse_index(fields[0]);
        const Index hi = parse_index(fields[1]);
        if (hi < lo || hi >= n) {
            throw FormatError("factor column support out of range");
        }
        columns.emplace_back(n, lo, parse_pairs(fields, 2, hi - lo + 1, "factor column"));
    }
    const auto diag_fields = require_record(in, "factor diagonal");
    if (diag_fields.size() != n + 1 || diag_fields[0] != "diag") {
        throw FormatError("factor diagonal must be `diag d_0 ... d_{n-1}`");
    }
    std::vector<double> diag;
    for (Index k = 0; k < n; ++k) {
        diag.push_back(parse_real(diag_fields[k + 1]));
    }
    try {
        return InverseFactor(std::move(columns), std::move(diag));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

void write_wwr(std::ostream& out, const WwrState& final_state, double residual)
{
    out << "# WWR coefficient blocks A_1 .. A_" << final_state.order << " of order " << final_state.order << '\n';
    for (Index l = 0; l < final_state.A.size(); ++l) {
        if (l != 0) {
            out << '\n';
        }
        write_dense(out, final_state.A[l]);
    }
    out << "# residual=" << format_real(residual) << '\n';
}

TbtGenerator load_generator(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    return read_generator(in);
}

void save_generator(const std::filesystem::path& path, const TbtGenerator& g)
{
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    write_generator(out, g);
    if (!out) {
        throw FormatError("write failed for " + path.string());
    }
}

}  // namespace tbt
