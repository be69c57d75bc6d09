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

// Fast 2D Levinson for Hermitian Toeplitz-block-Toeplitz matrices.
//
// Only pairs (k, l) with k < n1 and k <= k' (k' from index_exchange) are
// ever computed. Every other pair is recovered by
//
//   * block shift:  (k, l) -> (k mod n1, l - k sec n1), vectors moved by k sec n1;
//   * exchange:     at the mirror (k', l') of a pair,
//                     a  = conj(a'(k',l')),  a' = conj(a(k',l')),
//                     v  = v'(k',l'),         v' = v(k',l'),
//                     p  = U^{k-k'} conj(reversed q(k',l')),
//                     q  = U^{k-k'} conj(reversed p(k',l')).
//
// Total work is O(n1^3 n2^2) scalar operations; the matrix is only read
// through the generator.

#pragma once

#include <optional>
#include <vector>

#include "tbt/core.hpp"
#include "tbt/grc.hpp"

namespace tbt {

/// True for off-diagonal pairs in the stored half: k < n1, k < l, k <= k'.
bool in_canonical_half(Index k, Index l, Index n1);

/// One recursion step of the fast schedule, in execution order.
struct ScheduleStep {
    enum class Loop { Lower, Upper };
    /// Where p_hat = p(k, l-1) comes from.
    enum class PSource {
        Stored,     ///< stored entry, or the diagonal e_k
        Exchanged,  ///< rebuilt from the mirror of (k, l-1); lower loop, u = 0
    };
    /// Where q_hat = q(k+1, l) comes from.
    enum class QSource {
        Stored,      ///< stored entry, or the diagonal e_l
        SelfMirror,  ///< k == k': q_hat = U conj(reversed p_hat)
    };

    Index k = 0;
    Index l = 0;
    Loop loop = Loop::Upper;
    PSource p_source = PSource::Stored;
    QSource q_source = QSource::Stored;

    friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

/// Lower-triangle and exclusively-upper-triangle loops over d2 = 0..n2-1,
/// keeping only k <= k'.
std::vector<ScheduleStep> fast_schedule(Index n1, Index n2);

/// Coefficients for the stored half of one TBT matrix.
class CanonicalTables {
public:
    explicit CanonicalTables(TbtGenerator g);

    const TbtGenerator& generator() const noexcept { return g_; }
    Index n1() const noexcept { return g_.n1(); }
    Index size() const noexcept { return g_.size(); }

    bool has(Index k, Index l) const;
    /// Stored entry, or the synthesized diagonal tuple when k == l.
    /// Throws InternalIndexError for anything else.
    CoeffEntry lookup(Index k, Index l) const;
    const CoeffEntry& stored(Index k, Index l) const;
    void store(Index k, Index l, CoeffEntry e);

    /// Number of stored off-diagonal entries.
    Index stored_count() const;

private:
    Index slot(Index k, Index l) const;

    TbtGenerator g_;
    std::vector<std::optional<CoeffEntry>> entries_;
};

/// Run the fast recursion. Throws NotPositiveDefinite with the offending pair.
CanonicalTables tbt_grc(const TbtGenerator& g, OpCounter* counter = nullptr);

/// Full tuple at any 0 <= k <= l <= n-1 from the canonical half.
CoeffEntry fetch(const CanonicalTables& t, Index k, Index l);

/// Same factorization as build_factorization(grc_full(assemble_dense(g))).
InverseFactor tbt_factorization(const TbtGenerator& g, OpCounter* counter = nullptr);

}  // namespace tbt
