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
from fractions import Fraction

import pytest

from ricci_idleness.errors import InvalidRational
from ricci_idleness.utils import decimal_hint, format_rational, parse_rational


@pytest.mark.parametrize(
    "text,expected",
    [("1/2", Fraction(1, 2)), ("0", Fraction(0)), (" -3 / 6 ", Fraction(-1, 2)), ("4/2", Fraction(2)), ("+7", Fraction(7))],
)
def test_parse_rational(text: str, expected: Fraction) -> None:
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["0.5", "1e-3", "1/0", "a/b", "", "1/-2"])
def test_parse_rational_rejects(text: str) -> None:
    with pytest.raises(InvalidRational):
        parse_rational(text)


def test_parse_rational_passthrough() -> None:
    assert parse_rational(3) == 3
    assert parse_rational(Fraction(2, 3)) == Fraction(2, 3)


def test_format_rational() -> None:
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(0)) == "0/1"


def test_decimal_hint() -> None:
    assert decimal_hint(Fraction(1, 3)) == "0.333333333333"
    assert decimal_hint(Fraction(2, 3)) == "0.666666666667"
    assert decimal_hint(Fraction(-2, 21)) == "-0.0952380952381"
    assert decimal_hint(Fraction(1, 2)) == "0.5"
