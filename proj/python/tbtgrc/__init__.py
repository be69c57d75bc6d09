# Copyright 2026 The tbtgrc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Toeplitz-block-Toeplitz inversion by generalized reflection coefficients."""

from ._core import (
    CanonicalTables,
    CoeffEntry,
    CoeffTables,
    DomainError,
    FactorizationMismatch,
    FormatError,
    InternalIndexError,
    InverseFactor,
    NotPositiveDefinite,
    NumericalBreakdown,
    OpCounter,
    SingularP,
    TbtError,
    TbtGenerator,
    comparison_table,
    generate_pd_tbt,
    grc_full,
    index_exchange,
    load_generator,
    mod_op,
    opc_closed_form,
    opc_triple_sum,
    opcwwr,
    oracle_factorization,
    run_verify,
    save_generator,
    sec_op,
    tbt_factorization,
    tbt_grc,
    wwr_coefficients,
    wwr_relative_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
