"""Tripartite correlators and the Mermin / Svetlichny inequality values.

The two inequalities are fixed sign combinations of correlators
<A_x B_y C_z>. Their coefficient tables live here so that the quantum
evaluation (this module) and the classical-bound enumeration share a
single definition of each expression.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cmatrix import identity, kron

# ((x, y, z), coefficient) terms. Mermin sums the three single-excitation
# correlators minus the all-ones one; Svetlichny takes every correlator
# with +1 except A1B1C1 and A0B0C0.
MERMIN_TERMS = (
    ((1, 0, 0), 1),
    ((0, 1, 0), 1),
    ((0, 0, 1), 1),
    ((1, 1, 1), -1),
)
SVETLICHNY_TERMS = tuple(
    ((x, y, z), -1 if x == y == z else 1)
    for x in (0, 1)
    for y in (0, 1)
    for z in (0, 1)
)

# Classical bounds: fully-local models for Mermin, hybrid bipartition
# models for Svetlichny. Certified by enumeration in the lhvbound module.
MERMIN_CLASSICAL_BOUND = 2.0
SVETLICHNY_CLASSICAL_BOUND = 4.0

_IMAG_TOL = 1e-10


@dataclass(frozen=True)
class TripartiteSettings:
    """One +-1 observable per party and input (identity allowed)."""

    a0: np.ndarray
    a1: np.ndarray
    b0: np.ndarray
    b1: np.ndarray
    c0: np.ndarray
    c1: np.ndarray

    def __post_init__(self):
        for name in ("a0", "a1", "b0", "b1", "c0", "c1"):
            o = getattr(self, name)
            if o.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2, got {o.shape}")
            if np.max(np.abs(o @ o - identity(2))) > 1e-12:
                raise ValueError(f"{name} does not square to the identity")

    def observable(self, x: int, y: int, z: int) -> tuple[np.ndarray, ...]:
        return (
            (self.a0, self.a1)[x],
            (self.b0, self.b1)[y],
            (self.c0, self.c1)[z],
        )


def expectation(rho: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    """<A (x) B (x) C> on rho. Raises if the trace has an imaginary residue."""
    value = np.trace(rho @ kron(kron(a, b), c))
    if abs(value.imag) > _IMAG_TOL:
        raise RuntimeError(
            f"correlator has imaginary part {value.imag:g}; "
            "an operator upstream is not Hermitian"
        )
    return float(value.real)


def _inequality_value(rho, settings: TripartiteSettings, terms) -> float:
    return sum(
        coeff * expectation(rho, *settings.observable(x, y, z))
        for (x, y, z), coeff in terms
    )


def mermin_value(rho: np.ndarray, settings: TripartiteSettings) -> float:
    """Mermin combination; exceeds 2 only for standard tripartite nonlocality."""
    return _inequality_value(rho, settings, MERMIN_TERMS)


def svetlichny_value(rho: np.ndarray, settings: TripartiteSettings) -> float:
    """Svetlichny combination; exceeds 4 only for genuine tripartite nonlocality."""
    return _inequality_value(rho, settings, SVETLICHNY_TERMS)
