"""Points of CP^N: homogeneous coordinates, local charts and rank-1 projectors.

A projective point is stored as an unnormalized coordinate vector; two points
are the same iff their rank-1 projectors coincide, which sidesteps any scale
or phase convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChartSingularError, DimensionMismatchError

# |coords[chart]| below CHART_TOL * max|coords| counts as singular
CHART_TOL = 1e-14
PROJECTOR_TOL = 1e-12


def _complex_vector(values) -> np.ndarray:
    v = np.asarray(values, dtype=complex)
    if v.ndim != 1:
        raise ValueError("expected a one-dimensional coordinate array")
    return v


@dataclass(frozen=True, eq=False)
class HomogeneousPoint:
    """A point [zeta_0 : ... : zeta_N] of CP^N, unnormalized."""

    coords: np.ndarray

    def __post_init__(self):
        v = _complex_vector(self.coords)
        if v.size < 2 or not np.any(np.abs(v) > 0.0):
            raise ValueError("need at least two coordinates, not all zero")
        object.__setattr__(self, "coords", v)

    @property
    def n(self) -> int:
        return self.coords.size - 1

    def unit_vector(self) -> np.ndarray:
        return self.coords / np.linalg.norm(self.coords)

    def projector(self) -> np.ndarray:
        v = self.unit_vector()
        return np.outer(v, v.conj())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoint):
            return NotImplemented
        if self.coords.size != other.coords.size:
            return False
        return projector_distance(self.projector(), other.projector()) <= PROJECTOR_TOL

    __hash__ = None  # tolerance-based equality


@dataclass(frozen=True, eq=False)
class ChartPoint:
    """Local coordinates on the chart where coordinate `chart_index` equals 1."""

    chart_index: int
    local: np.ndarray

    def __post_init__(self):
        v = _complex_vector(self.local)
        if not 0 <= self.chart_index <= v.size:
            raise ValueError(f"chart index {self.chart_index} out of range for CP^{v.size}")
        object.__setattr__(self, "local", v)

    @property
    def n(self) -> int:
        return self.local.size

    def lift(self) -> HomogeneousPoint:
        coords = np.insert(self.local, self.chart_index, 1.0)
        return HomogeneousPoint(coords)


def to_chart(point: HomogeneousPoint, chart: int, tol: float = CHART_TOL) -> ChartPoint:
    """Divide by coordinate `chart` and drop it.

    Raises ChartSingularError when that coordinate is (relatively) zero.
    """
    v = point.coords
    if not 0 <= chart <= point.n:
        raise ValueError(f"chart {chart} out of range for CP^{point.n}")
    pivot = v[chart]
    if abs(pivot) <= tol * np.max(np.abs(v)):
        raise ChartSingularError(f"coordinate {chart} vanishes; point lies outside that chart")
    return ChartPoint(chart, np.delete(v / pivot, chart))


def chart_vector(c: ChartPoint) -> np.ndarray:
    """Unit vector (local coords with 1 inserted) / sqrt(1 + sum |local|^2).

    The amplitude at `chart_index` is real positive by construction.
    """
    lift = np.insert(c.local, c.chart_index, 1.0)
    return lift / np.sqrt(1.0 + np.sum(np.abs(c.local) ** 2))


def projector_of(v: np.ndarray) -> np.ndarray:
    """Rank-1 projector |v><v| of a unit vector."""
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def chart_transition(c: ChartPoint, target: int) -> ChartPoint:
    """Re-express the same projective point in another chart."""
    return to_chart(c.lift(), target)


def projector_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Frobenius distance between two projectors."""
    p = np.asarray(p)
    q = np.asarray(q)
    if p.shape != q.shape:
        raise DimensionMismatchError(f"projector shapes differ: {p.shape} vs {q.shape}")
    return float(np.linalg.norm(p - q))
