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


class CurvatureToolkitError(ValueError):
    """Base class for every input or domain error raised by ricci_idleness."""


# graph construction


class IndexOutOfRange(CurvatureToolkitError):
    pass


class SelfLoop(CurvatureToolkitError):
    pass


class TooSmall(CurvatureToolkitError):
    pass


class DegenerateFamily(CurvatureToolkitError):
    pass


class TooSmallForIsometry(CurvatureToolkitError):
    pass


class TruncationTooShallow(CurvatureToolkitError):
    pass


class SameVertex(CurvatureToolkitError):
    pass


# measures and transport


class IsolatedVertex(CurvatureToolkitError):
    pass


class BadIdleness(CurvatureToolkitError):
    pass


class InvalidMeasure(CurvatureToolkitError):
    pass


class DisconnectedSupports(CurvatureToolkitError):
    pass


class NotOptimalInput(CurvatureToolkitError):
    pass


class InfeasibleFlow(CurvatureToolkitError):
    pass


class TooLargeForOracle(CurvatureToolkitError):
    pass


# curvature engine


class InfeasiblePin(CurvatureToolkitError):
    pass


class DistanceTooSmall(CurvatureToolkitError):
    pass


class MoreThanThreePieces(CurvatureToolkitError):
    pass


class NotConcave(CurvatureToolkitError):
    pass


class BothDistancesZero(CurvatureToolkitError):
    pass


class NonPositiveKappa(CurvatureToolkitError):
    pass


class InvariantViolation(CurvatureToolkitError):
    """A structural property of the computed quantities failed. Never expected on valid input."""


# cli


class InvalidRational(CurvatureToolkitError):
    pass


class InvalidGeneratorSpec(CurvatureToolkitError):
    pass


class PairSelectionError(CurvatureToolkitError):
    pass
