# Copyright 2026 The pandc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact Price & Choose mechanisms, solvers and oracles."""

from ._pandc import (
    Allocation,
    EquilibriumReport,
    MonotoneTransform,
    PandcError,
    PriceVector,
    Session,
    UtilityProfile,
    VerificationReport,
    backward_induction,
    check_maskin_monotonicity,
    epsilon_maximizers,
    generate_profile,
    robust_epsilon_bound,
    solve,
    verify_chooser_indifference,
    verify_proposer_optimality,
    verify_robust_equilibrium,
    welfare_stats,
)

__all__ = [
    "Allocation",
    "EquilibriumReport",
    "MonotoneTransform",
    "PandcError",
    "PriceVector",
    "Session",
    "UtilityProfile",
    "VerificationReport",
    "backward_induction",
    "check_maskin_monotonicity",
    "epsilon_maximizers",
    "generate_profile",
    "robust_epsilon_bound",
    "solve",
    "verify_chooser_indifference",
    "verify_proposer_optimality",
    "verify_robust_equilibrium",
    "welfare_stats",
]
