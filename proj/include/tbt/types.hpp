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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tbt {

using Complex = std::complex<double>;
using Index = std::size_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The recursion met 1 - a*a' <= tolerance (or a non-positive energy) at (k, l).
class NotPositiveDefinite : public Error {
public:
    NotPositiveDefinite(Index k, Index l, const std::string& detail);
    Index k() const noexcept { return k_; }
    Index l() const noexcept { return l_; }

private:
    Index k_;
    Index l_;
};

/// Prediction energies underflowed or became non-finite.
class NumericalBreakdown : public Error {
public:
    using Error::Error;
};

/// An exchange or shift required data that the canonical half cannot supply.
/// Always an implementation bug, never a user error.
class InternalIndexError : public Error {
public:
    using Error::Error;
};

/// The diagonal of the inverse factorization disagrees with its direct evaluation.
class FactorizationMismatch : public Error {
public:
    using Error::Error;
};

/// WWR prediction-error block is numerically singular.
class SingularP : public Error {
public:
    using Error::Error;
};

/// A closed-form cost formula was evaluated outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or unreadable text file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Complex multiply / add / divide tally of one solver run.
struct OpCounter {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    std::uint64_t div = 0;

    std::uint64_t total() const noexcept { return mul + add + div; }
};

/// `mul=<int> add=<int> div=<int>`
std::string summary_line(const OpCounter& counter);

}  // namespace tbt
