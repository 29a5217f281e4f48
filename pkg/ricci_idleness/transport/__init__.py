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
from .flow import FlowSolution, MinCostFlowNetwork
from .measures import Measure, lazy_measure
from .oracle import ORACLE_MAX_VERTICES, oracle_w1_enum
from .wasserstein import (
    CertificateReport,
    Potential,
    TransportPlan,
    W1Certificate,
    certificate_to_json,
    check_certificate,
    integerize_potential,
    is_one_lipschitz,
    lipschitz_violations,
    potential_domain,
    w1,
)

__all__ = [
    "FlowSolution",
    "MinCostFlowNetwork",
    "Measure",
    "lazy_measure",
    "ORACLE_MAX_VERTICES",
    "oracle_w1_enum",
    "CertificateReport",
    "Potential",
    "TransportPlan",
    "W1Certificate",
    "certificate_to_json",
    "check_certificate",
    "integerize_potential",
    "is_one_lipschitz",
    "lipschitz_violations",
    "potential_domain",
    "w1",
]
