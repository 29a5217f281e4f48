# Copyright 2026 The Kubernetes Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from .kappa import (
    BonnetMyersReport,
    bonnet_myers_check,
    bonnet_myers_diameter_bound,
    kappa_certificate,
    kappa_lly,
    kappa_p,
    optimal_potential_gap,
    positive_pair_witness,
    product_formula_rhs,
)
from .piecewise import PiecewiseLinear, Piece, profile_function, profile_to_json, reconstruct_by_sampling
from .profile import (
    BoundCheck,
    BoundReport,
    IdlenessProfile,
    PinnedSupremum,
    check_critical_bounds,
    critical_points,
    evaluate_profile,
    idleness_profile,
    lly_from_profile,
    maximizing_potential,
    neighbourhood_gap,
    potential_sup_cj,
)

__all__ = [
    "BonnetMyersReport",
    "bonnet_myers_check",
    "bonnet_myers_diameter_bound",
    "kappa_certificate",
    "kappa_lly",
    "kappa_p",
    "optimal_potential_gap",
    "positive_pair_witness",
    "product_formula_rhs",
    "PiecewiseLinear",
    "Piece",
    "profile_function",
    "profile_to_json",
    "reconstruct_by_sampling",
    "BoundCheck",
    "BoundReport",
    "IdlenessProfile",
    "PinnedSupremum",
    "check_critical_bounds",
    "critical_points",
    "evaluate_profile",
    "idleness_profile",
    "lly_from_profile",
    "maximizing_potential",
    "neighbourhood_gap",
    "potential_sup_cj",
]
