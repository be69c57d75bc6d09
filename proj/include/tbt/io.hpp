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

// Plain-text formats. Lines starting with `#` and blank lines are ignored by
// every reader. Floating values are written with 17 significant digits so a
// write/read cycle is exact.
//
//   generator   `n1 n2`, then n2 lines of 2*n1-1 pairs `re im` for
//               c(d, -(n1-1)) .. c(d, n1-1)
//   dense       `n`, then n lines of n pairs `re im`
//   factor      `n`, then n lines `k hi re im ...` (column k on [k, hi]),
//               then `diag d_0 ... d_{n-1}`

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "tbt/core.hpp"
#include "tbt/grc.hpp"
#include "tbt/wwr.hpp"

namespace tbt {

std::string format_real(double x);

void write_generator(std::ostream& out, const TbtGenerator& g);
TbtGenerator read_generator(std::istream& in);

void write_dense(std::ostream& out, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_dense(std::istream& in);

void write_factor(std::ostream& out, const InverseFactor& f);
InverseFactor read_factor(std::istream& in);

/// Final-order WWR blocks A_1 .. A_{n2-1} in dense format, one section per
/// block separated by blank lines, closed by `# residual=<value>`.
void write_wwr(std::ostream& out, const WwrState& final_state, double residual);

TbtGenerator load_generator(const std::filesystem::path& path);
void save_generator(const std::filesystem::path& path, const TbtGenerator& g);

}  // namespace tbt
