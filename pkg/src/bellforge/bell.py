"""Maximally entangled bipartite states built by integrating coherent-state
tensor products against the invariant measure.

The central object is

    |B> = (1/sqrt(dim V)) Integral d mu(Z) |Z> (x) |Z^b>

where Z^b is a catalog twist of Z. Because |Z^b> = U conj(|Z>) and the
coherent family resolves the identity, the integral collapses to the closed
form (1/sqrt(d)) (I (x) U) sum_k |k>|k>; the numerical integrators reproduce
it to quadrature accuracy, which is what the verification suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coherent import coherent_cp1, level_one_states_from_homogeneous, spin_states_from_homogeneous
from .errors import DimensionMismatchError, DomainError
from .flatmaps import FlatMapId, global_unitary
from .quadrature import (
    MCSpec,
    QuadratureSpecCP1,
    QuadratureSpecCP2,
    integrate_cp1,
    integrate_cp2,
    sample_fubini_study,
)


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Unit vector in V_a (x) V_b, amplitudes flat with index a*dim_b + b."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != self.dim_a * self.dim_b:
            raise DimensionMismatchError(
                f"expected {self.dim_a * self.dim_b} amplitudes, got {amps.size}"
            )
        object.__setattr__(self, "amplitudes", amps)

    def matrix(self) -> np.ndarray:
        """Amplitude matrix M[a, b], the object the Schmidt decomposition acts on."""
        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def closed_form_bell_cp1(two_j: int, tag: int) -> BipartiteState:
    """The four spin-j families:

    1: sum_k |k>|k>            2: sum_k (-1)^k |k>|k>
    3: sum_k |k>|2j-k>         4: sum_k (-1)^k |k>|2j-k>
    all divided by sqrt(2j+1).
    """
    if tag not in (1, 2, 3, 4):
        raise DomainError(f"tag must be 1..4, got {tag}")
    dim = two_j + 1
    amps = np.zeros(dim * dim, dtype=complex)
    for k in range(dim):
        partner = k if tag in (1, 2) else two_j - k
        sign = (-1.0) ** k if tag in (2, 4) else 1.0
        amps[k * dim + partner] = sign
    return BipartiteState(dim, dim, amps / np.sqrt(dim))


def generalized_bell(n: int, p: int, q: int) -> BipartiteState:
    """(1/sqrt(n)) sum_k omega^(pk) |k> (x) |k+q mod n>, omega = exp(2 pi i/n).

    An orthonormal basis of maximally entangled states for every n; for n = 2
    and n = 3 it coincides with the cp1 spin-1/2 and cp2 closed forms.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if not (0 <= p < n and 0 <= q < n):
        raise DomainError(f"need 0 <= p, q < {n}, got ({p}, {q})")
    omega = np.exp(2j * np.pi / n)
    amps = np.zeros(n * n, dtype=complex)
    for k in range(n):
        amps[k * n + (k + q) % n] = omega ** (p * k)
    return BipartiteState(n, n, amps / np.sqrt(n))


def closed_form_bell_cp2(p: int, q: int) -> BipartiteState:
    """The nine cp2 states, indexed by the pair (p, q) of the flat-map catalog."""
    if not (0 <= p <= 2 and 0 <= q <= 2):
        raise DomainError(f"need 0 <= p, q <= 2, got ({p}, {q})")
    return generalized_bell(3, p, q)


def _dims_for(flat: FlatMapId, two_j: int | None) -> tuple[int, int]:
    """(state dimension, manifold dimension) for a catalog id."""
    if flat.space == "cp1":
        if two_j is None:
            raise DomainError("cp1 integrals need two_j")
        if two_j < 0:
            raise DomainError("two_j must be nonnegative")
        return two_j + 1, 1
    return flat.n + 1, flat.n


def _fivel_mc(flat: FlatMapId, spec: MCSpec, two_j: int | None) -> BipartiteState:
    dim, n = _dims_for(flat, two_j)
    rows = sample_fubini_study(n, spec)
    if flat.space == "cp1":
        states = spin_states_from_homogeneous(two_j, rows)
    else:
        states = level_one_states_from_homogeneous(rows)
    u = global_unitary(flat, dim)
    twisted = states.conj() @ u.T
    # mean of |Z>(x)|Z^b> over samples, scaled by the total measure dim V
    matrix = (dim / spec.samples) * states.T @ twisted
    return BipartiteState(dim, dim, matrix.reshape(-1) / np.sqrt(dim))


def fivel_bell(
    flat: FlatMapId,
    spec: QuadratureSpecCP1 | QuadratureSpecCP2 | MCSpec | None = None,
    *,
    two_j: int | None = None,
) -> tuple[BipartiteState, float]:
    """Numerically evaluate the coherent-state integral for one catalog map.

    Deterministic quadrature covers the sphere (cp1 at any spin, cpn with
    n = 1) and cpn with n = 2; pass an MCSpec for higher n or for
    cross-checks. Returns the state and the norm residual abs(norm - 1).
    """
    if isinstance(spec, MCSpec):
        state = _fivel_mc(flat, spec, two_j)
        return state, abs(state.norm() - 1.0)

    dim, n = _dims_for(flat, two_j)
    if n == 1:
        spin = two_j if flat.space == "cp1" else 1
        if spec is None:
            spec = QuadratureSpecCP1.for_spin(spin)
        u = global_unitary(flat, dim)

        def integrand(z):
            psi = coherent_cp1(spin, z)
            return np.kron(psi, u @ psi.conj())

        amps = integrate_cp1(integrand, spin, spec) / np.sqrt(dim)
    elif n == 2:
        if spec is None:
            spec = QuadratureSpecCP2()
        u = global_unitary(flat, dim)

        def integrand(z1, z2):
            psi = np.array([1.0, z1, z2], dtype=complex)
            psi /= np.linalg.norm(psi)
            return np.kron(psi, u @ psi.conj())

        amps = integrate_cp2(integrand, spec) / np.sqrt(dim)
    else:
        raise DomainError(
            f"no deterministic rule on CP^{n}; pass an MCSpec for Monte Carlo"
        )
    state = BipartiteState(dim, dim, amps)
    return state, abs(state.norm() - 1.0)


def bell_target(flat: FlatMapId, *, two_j: int | None = None) -> BipartiteState:
    """(1/sqrt(d)) (I (x) U) sum_k |k>|k>: what the integral must produce."""
    dim, _ = _dims_for(flat, two_j)
    u = global_unitary(flat, dim)
    amps = np.zeros(dim * dim, dtype=complex)
    for k in range(dim):
        amps[k * dim : (k + 1) * dim] = u[:, k]
    return BipartiteState(dim, dim, amps / np.sqrt(dim))


def unitary_transport_identity(
    flat: FlatMapId,
    spec: QuadratureSpecCP1 | QuadratureSpecCP2 | MCSpec | None = None,
    *,
    two_j: int | None = None,
) -> float:
    """Distance between the numerically integrated state and bell_target."""
    numeric, _ = fivel_bell(flat, spec, two_j=two_j)
    target = bell_target(flat, two_j=two_j)
    return float(np.linalg.norm(numeric.amplitudes - target.amplitudes))
