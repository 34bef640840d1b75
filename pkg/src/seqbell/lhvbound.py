"""Classical bounds by exhaustive enumeration of deterministic models.

Both local models are convex with deterministic extremal points, so the
maximum of a linear expression over the model equals its maximum over the
deterministic strategies. That standard fact turns each bound into a
finite, exact integer enumeration:

* fully local: every party answers each of its inputs with a fixed sign,
  2^6 = 64 strategies;
* hybrid bipartition: one pair of parties answers jointly (each paired
  outcome may depend on both paired inputs, with no nonsignaling
  constraint inside the pair) while the remaining party answers alone,
  3 bipartitions x 16 x 16 x 4 = 3072 strategies.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .bell import MERMIN_TERMS, SVETLICHNY_TERMS
from .scenario import genuine_pair_simulated, standard_pair_simulated

BIPARTITIONS = ("AB|C", "AC|B", "BC|A")

_SIGNS = (-1, 1)


@dataclass(frozen=True)
class DeterministicLocalStrategy:
    a0: int
    a1: int
    b0: int
    b1: int
    c0: int
    c1: int

    def outcomes(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        return (self.a0, self.a1)[x], (self.b0, self.b1)[y], (self.c0, self.c1)[z]


@dataclass(frozen=True)
class DeterministicHybridStrategy:
    """Joint outcomes for one bipartition's pair, solo outcomes for the rest.

    ``joint_first``/``joint_second`` give the paired parties' outcomes as
    functions of both paired inputs, indexed by 2*i + j; ``solo`` is the
    lone party's per-input outcome.
    """

    bipartition: str
    joint_first: tuple[int, int, int, int]
    joint_second: tuple[int, int, int, int]
    solo: tuple[int, int]

    def outcomes(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        if self.bipartition == "AB|C":
            return self.joint_first[2 * x + y], self.joint_second[2 * x + y], self.solo[z]
        if self.bipartition == "AC|B":
            return self.joint_first[2 * x + z], self.solo[y], self.joint_second[2 * x + z]
        if self.bipartition == "BC|A":
            return self.solo[x], self.joint_first[2 * y + z], self.joint_second[2 * y + z]
        raise ValueError(f"unknown bipartition {self.bipartition!r}")


def local_strategies() -> Iterator[DeterministicLocalStrategy]:
    for signs in itertools.product(_SIGNS, repeat=6):
        yield DeterministicLocalStrategy(*signs)


def hybrid_strategies() -> Iterator[DeterministicHybridStrategy]:
    for bipartition in BIPARTITIONS:
        for first in itertools.product(_SIGNS, repeat=4):
            for second in itertools.product(_SIGNS, repeat=4):
                for solo in itertools.product(_SIGNS, repeat=2):
                    yield DeterministicHybridStrategy(bipartition, first, second, solo)


def _value(strategy, terms) -> int:
    total = 0
    for (x, y, z), coeff in terms:
        a, b, c = strategy.outcomes(x, y, z)
        total += coeff * a * b * c
    return total


def mermin_value_of(strategy) -> int:
    return _value(strategy, MERMIN_TERMS)


def svetlichny_value_of(strategy) -> int:
    return _value(strategy, SVETLICHNY_TERMS)


def mermin_classical_max() -> float:
    """Largest Mermin value over all 64 deterministic fully-local strategies."""
    return float(max(mermin_value_of(s) for s in local_strategies()))


def svetlichny_classical_max() -> float:
    """Largest Svetlichny value over all 3072 deterministic hybrid strategies."""
    return float(max(svetlichny_value_of(s) for s in hybrid_strategies()))


def quantum_witness_max(kind: str) -> float:
    """Simulated inequality value at phi = pi/4, p = 1.

    A witness that the quantum strategies exceed the enumerated classical
    bounds; not a proof of the quantum maximum.
    """
    phi = math.pi / 4
    if kind == "mermin":
        return standard_pair_simulated(phi, 1.0)[0]
    if kind == "svetlichny":
        return genuine_pair_simulated(phi, 1.0, 0.5)[0]
    raise ValueError(f"unknown inequality kind {kind!r}")
