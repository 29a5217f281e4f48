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
import re
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from ricci_idleness.errors import InvalidRational

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

HINT_DIGITS = 12


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parses "num/den" or an integer. Decimal notation is rejected so no value is ever rounded."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise InvalidRational(f"'{text}' is not an exact rational (use 'num/den' or an integer)")
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise InvalidRational(f"'{text}' has a zero denominator")
    return Fraction(int(match.group(1)), den)


def format_rational(value: Fraction | int) -> str:
    """Canonical "num/den" form. Integers still carry the "/1"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def decimal_hint(value: Fraction | int, digits: int = HINT_DIGITS) -> str:
    """Informational decimal rendering with `digits` significant digits."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        rendered = Decimal(value.numerator) / Decimal(value.denominator)
    return format(rendered, "f")
