"""Shared helpers for the test suite."""

from __future__ import annotations

from numsgps import NumericalSemigroup


def sg(*gens: int) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def gens_of(s: NumericalSemigroup) -> tuple:
    return s.minimal_generators
