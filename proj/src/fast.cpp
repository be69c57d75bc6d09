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

#include "tbt/fast.hpp"

namespace tbt {

namespace {

std::int64_t signed_diff(Index a, Index b)
{
    return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

std::string pair_name(Index k, Index l)
{
    return "(" + std::to_string(k) + ", " + std::to_string(l) + ")";
}

}  // namespace

bool in_canonical_half(Index k, Index l, Index n1)
{
    return k < n1 && k < l && k <= index_exchange(k, l, n1).k;
}

std::vector<ScheduleStep> fast_schedule(Index n1, Index n2)
{
    using Step = ScheduleStep;
    std::vector<Step> steps;
    const auto mirror_k = [n1](Index k, Index l) { return index_exchange(k, l, n1).k; };

    for (Index d2 = 0; d2 < n2; ++d2) {
        if (d2 != 0) {
            // Lower triangle loop, d1 = n1-1 .. 0.
            for (Index d1 = n1; d1-- > 0;) {
                for (Index u = 0; u + d1 < n1; ++u) {
                    const Index k = u + d1;
                    const Index l = d2 * n1 + u;
                    const Index kx = mirror_k(k, l);
                    if (k > kx) {
                        continue;
                    }
                    steps.push_back(Step{k, l, Step::Loop::Lower,
                                         u == 0 ? Step::PSource::Exchanged : Step::PSource::Stored,
                                         k == kx ? Step::QSource::SelfMirror : Step::QSource::Stored});
                }
            }
        }
        // Exclusively upper triangle loop, d1 = 1 .. n1-1.
        for (Index d1 = 1; d1 < n1; ++d1) {
            for (Index u = 0; u + d1 < n1; ++u) {
                const Index k = u;
                const Index l = d2 * n1 + u + d1;
                const Index kx = mirror_k(k, l);
                if (k > kx) {
                    continue;
                }
                steps.push_back(Step{k, l, Step::Loop::Upper, Step::PSource::Stored,
                                     k == kx ? Step::QSource::SelfMirror : Step::QSource::Stored});
            }
        }
    }
    return steps;
}

// ---------------------------------------------------------------------------

CanonicalTables::CanonicalTables(TbtGenerator g) : g_(std::move(g)), entries_(g_.n1() * g_.size()) {}

Index CanonicalTables::slot(Index k, Index l) const
{
    if (!in_canonical_half(k, l, n1()) || l >= size()) {
        throw InternalIndexError("pair " + pair_name(k, l) + " is outside the canonical half");
    }
    return k * size() + l;
}

bool CanonicalTables::has(Index k, Index l) const
{
    if (k >= n1() || l >= size() || !in_canonical_half(k, l, n1())) {
        return false;
    }
    return entries_[slot(k, l)].has_value();
}

const CoeffEntry& CanonicalTables::stored(Index k, Index l) const
{
    const auto& e = entries_[slot(k, l)];
    if (!e) {
        throw InternalIndexError("pair " + pair_name(k, l) + " requested before it was computed");
    }
    return *e;
}

CoeffEntry CanonicalTables::lookup(Index k, Index l) const
{
    if (k == l) {
        return diagonal_entry(size(), k, g_.c(0, 0).real());
    }
    return stored(k, l);
}

void CanonicalTables::store(Index k, Index l, CoeffEntry e)
{
    entries_[slot(k, l)] = std::move(e);
}

Index CanonicalTables::stored_count() const
{
    Index count = 0;
    for (const auto& e : entries_) {
        count += e.has_value() ? 1 : 0;
    }
    return count;
}

// ---------------------------------------------------------------------------

CanonicalTables tbt_grc(const TbtGenerator& g, OpCounter* counter)
{
    CanonicalTables t(g);
    const Index n1 = g.n1();
    const double r00 = g.c(0, 0).real();
    const Index n = g.size();

    for (const ScheduleStep& step : fast_schedule(n1, g.n2())) {
        const Index k = step.k;
        const Index l = step.l;

        // p_hat = p(k, l-1), v_hat' = v'(k, l-1)
        BandVector p_hat = BandVector::basis(n, k);
        double v_hat_prime = r00;
        if (step.p_source == ScheduleStep::PSource::Exchanged) {
            const IndexPair m = index_exchange(k, l - 1, n1);
            const CoeffEntry mirror = t.lookup(m.k, m.l);
            p_hat = exchange_image(mirror.q, signed_diff(k, m.k));
            v_hat_prime = mirror.v;
        } else if (k != l - 1) {
            const CoeffEntry& left = t.stored(k, l - 1);
            p_hat = left.p;
            v_hat_prime = left.v_prime;
        }

        // q_hat = q(k+1, l), v_hat = v(k+1, l)
        BandVector q_hat = BandVector::basis(n, l);
        double v_hat = r00;
        if (step.q_source == ScheduleStep::QSource::SelfMirror) {
            q_hat = exchange_image(p_hat, 1);
            v_hat = v_hat_prime;
        } else if (k + 1 != l) {
            const CoeffEntry& down = t.stored(k + 1, l);
            q_hat = down.q;
            v_hat = down.v;
        }

        t.store(k, l, grc_step(p_hat, q_hat, v_hat, v_hat_prime, g, k, l, counter));
    }
    return t;
}

CoeffEntry fetch(const CanonicalTables& t, Index k, Index l)
{
    const Index n = t.size();
    if (k > l || l >= n) {
        throw std::out_of_range("fetch: pair " + pair_name(k, l) + " out of range");
    }
    if (k == l) {
        return t.lookup(k, l);
    }
    const Index n1 = t.n1();
    const Index tau = static_cast<Index>(sec_op(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n1)));
    const Index k0 = k - tau;
    const Index l0 = l - tau;

    CoeffEntry e = [&]() -> CoeffEntry {
        if (in_canonical_half(k0, l0, n1)) {
            return t.stored(k0, l0);
        }
        const IndexPair m = index_exchange(k0, l0, n1);
        const CoeffEntry& mirror = t.stored(m.k, m.l);
        const std::int64_t offset = signed_diff(k0, m.k);
        return CoeffEntry{std::conj(mirror.a_prime),
                          std::conj(mirror.a),
                          mirror.v_prime,
                          mirror.v,
                          exchange_image(mirror.q, offset),
                          exchange_image(mirror.p, offset)};
    }();

    if (tau != 0) {
        e.p = shift(e.p, static_cast<std::int64_t>(tau));
        e.q = shift(e.q, static_cast<std::int64_t>(tau));
    }
    return e;
}

InverseFactor tbt_factorization(const TbtGenerator& g, OpCounter* counter)
{
    const CanonicalTables t = tbt_grc(g, counter);
    const Index n = g.size();
    std::vector<BandVector> columns;
    std::vector<double> diag;
    columns.reserve(n);
    diag.reserve(n);
    for (Index k = 0; k < n; ++k) {
        CoeffEntry e = fetch(t, k, n - 1);
        columns.push_back(std::move(e.p));
        diag.push_back(e.v_prime);
    }
    return verified_factor(std::move(columns), std::move(diag), g);
}

}  // namespace tbt
