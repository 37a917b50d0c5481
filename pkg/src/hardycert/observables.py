"""Measurement construction for the two-distinct-weight nonlocality argument.

Given a pure state whose Schmidt expansion contains two distinct weights
p1 < p2, two weight-dependent 2x2 unitaries rotate that Schmidt pair into the
"x" and "y" measurement bases on each subsystem.  The resulting four
three-outcome observables (eigenvalues +1, -1 on the rotated pair, 0 on the
rest of the space) have joint statistics with a sharp signature: five
designated joint probabilities vanish exactly while a sixth equals

    a = p1^2 p2^2 (p1 - p2)^2 / (p1^2 + p2^2 - p1 p2)^2 > 0.

That signature is what the certification module's criterion feeds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NonPositiveWeightError,
    SubsystemMismatchError,
)
from .linalg import tensor_product

if TYPE_CHECKING:
    from .states import DensityOperator, HardyPair, SchmidtForm

#: Canonical outcome order for the three-outcome observables.  Lexicographic
#: enumerations elsewhere (deterministic strategies, behavior tables) follow it.
OUTCOMES = (1, 0, -1)

#: Probabilities within this window outside [0, 1] are clipped to the boundary.
PROBABILITY_CLIP = 1e-12


def hardy_parameter_a(p1: float, p2: float) -> float:
    """Closed form of the single nonzero probability in the designated table.

    Symmetric in its arguments and zero exactly when the weights coincide, so
    equal-weight states certify nothing.
    """
    if p1 <= 0.0 or p2 <= 0.0:
        raise NonPositiveWeightError(f"weights must be positive, got ({p1}, {p2})")
    if p1 == p2:
        return 0.0
    denom = p1 * p1 + p2 * p2 - p1 * p2
    return (p1 * p1) * (p2 * p2) * (p1 - p2) ** 2 / (denom * denom)


@dataclass(frozen=True)
class RotationPair:
    """The two 2x2 unitaries that generate the measurement bases.

    ``u`` maps the Schmidt pair to the x basis; ``v @ u`` maps it to the y
    basis.  Both depend only on the selected weights.
    """

    u: np.ndarray
    v: np.ndarray


def build_rotations(p1: float, p2: float) -> RotationPair:
    """Construct the weight-dependent unitaries for a pair p1 != p2.

    With r = sqrt(p1 p2) and q = p2 - p1:

        u = (p1 + p2)^(-1/2)          [[sqrt(p2), -i sqrt(p1)],
                                       [-i sqrt(p1), sqrt(p2)]]
        v = (p1^2 + p2^2 - p1 p2)^(-1/2) [[-i q, r],
                                          [r, -i q]]
    """
    if p1 <= 0.0 or p2 <= 0.0:
        raise NonPositiveWeightError(f"weights must be positive, got ({p1}, {p2})")
    su = 1.0 / math.sqrt(p1 + p2)
    u = su * np.array(
        [
            [math.sqrt(p2), -1j * math.sqrt(p1)],
            [-1j * math.sqrt(p1), math.sqrt(p2)],
        ]
    )
    r = math.sqrt(p1 * p2)
    q = p2 - p1
    sv = 1.0 / math.sqrt(p1 * p1 + p2 * p2 - p1 * p2)
    v = sv * np.array([[-1j * q, r], [r, -1j * q]])
    return RotationPair(u=u, v=v)


@dataclass(frozen=True)
class MeasurementBases:
    """The eight unit vectors underlying the four observables.

    Subsystem-1 vectors live in C^d1, subsystem-2 vectors in C^d2; all eight
    stay inside the two-dimensional span of the selected Schmidt pair on
    their side.
    """

    x_plus_1: np.ndarray
    x_minus_1: np.ndarray
    y_plus_1: np.ndarray
    y_minus_1: np.ndarray
    x_plus_2: np.ndarray
    x_minus_2: np.ndarray
    y_plus_2: np.ndarray
    y_minus_2: np.ndarray


def build_bases(sf: SchmidtForm, pair: HardyPair) -> MeasurementBases:
    """Rotate the selected Schmidt pair into the measurement bases.

    Convention: the smaller weight's Schmidt vectors occupy slot 1 of the
    rotation and the larger weight's slot 2.  The x vectors are the u-images
    of those slots and the y vectors the (v u)-images, separately on each
    subsystem.  The slot assignment is pinned by the vanishing of the five
    designated joint probabilities, which the test suite checks directly.
    """
    rot = build_rotations(pair.p1, pair.p2)
    w = rot.v @ rot.u
    alpha = np.column_stack(
        [sf.left_basis[:, pair.index_small], sf.left_basis[:, pair.index_large]]
    )
    beta = np.column_stack(
        [sf.right_basis[:, pair.index_small], sf.right_basis[:, pair.index_large]]
    )
    # Row k of the rotation holds the coefficients of the k-th new vector in
    # the Schmidt-pair basis, so the image vectors are columns of basis @ R.T.
    x1 = alpha @ rot.u.T
    y1 = alpha @ w.T
    x2 = beta @ rot.u.T
    y2 = beta @ w.T
    return MeasurementBases(
        x_plus_1=x1[:, 0],
        x_minus_1=x1[:, 1],
        y_plus_1=y1[:, 0],
        y_minus_1=y1[:, 1],
        x_plus_2=x2[:, 0],
        x_minus_2=x2[:, 1],
        y_plus_2=y2[:, 0],
        y_minus_2=y2[:, 1],
    )


@dataclass(frozen=True)
class Observable:
    """A three-outcome observable given by its spectral projector family.

    ``proj_plus`` and ``proj_minus`` are rank one; ``proj_zero`` covers the
    remainder of the space (the zero matrix when the subsystem is a qubit).
    """

    label: str
    subsystem: int
    proj_plus: np.ndarray
    proj_minus: np.ndarray
    proj_zero: np.ndarray

    def projector(self, outcome: int) -> np.ndarray:
        """Spectral projector for an outcome in {+1, 0, -1}."""
        if outcome == 1:
            return self.proj_plus
        if outcome == -1:
            return self.proj_minus
        if outcome == 0:
            return self.proj_zero
        raise ValueError(f"outcome must be one of {OUTCOMES}, got {outcome!r}")


@dataclass(frozen=True)
class HardyObservableSet:
    """The four observables X1, Y1 (subsystem 1) and X2, Y2 (subsystem 2)."""

    x1: Observable
    y1: Observable
    x2: Observable
    y2: Observable


def _rank_one(vec: np.ndarray) -> np.ndarray:
    return np.outer(vec, vec.conj())


def _observable(label: str, subsystem: int, plus: np.ndarray, minus: np.ndarray, dim: int) -> Observable:
    proj_plus = _rank_one(plus)
    proj_minus = _rank_one(minus)
    proj_zero = np.eye(dim) - proj_plus - proj_minus
    return Observable(
        label=label,
        subsystem=subsystem,
        proj_plus=proj_plus,
        proj_minus=proj_minus,
        proj_zero=proj_zero,
    )


def build_observables(bases: MeasurementBases, d1: int, d2: int) -> HardyObservableSet:
    """Assemble the four three-outcome observables from the basis vectors."""
    if bases.x_plus_1.shape != (d1,) or bases.x_plus_2.shape != (d2,):
        raise DimensionMismatchError(
            f"basis vectors have dims ({bases.x_plus_1.shape[0]}, "
            f"{bases.x_plus_2.shape[0]}), expected ({d1}, {d2})"
        )
    return HardyObservableSet(
        x1=_observable("X1", 1, bases.x_plus_1, bases.x_minus_1, d1),
        y1=_observable("Y1", 1, bases.y_plus_1, bases.y_minus_1, d1),
        x2=_observable("X2", 2, bases.x_plus_2, bases.x_minus_2, d2),
        y2=_observable("Y2", 2, bases.y_plus_2, bases.y_minus_2, d2),
    )


def _clip_probability(value: float) -> float:
    if -PROBABILITY_CLIP <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + PROBABILITY_CLIP:
        return 1.0
    return value


def joint_probability(
    sigma: DensityOperator,
    obs_a: Observable,
    outcome_a: int,
    obs_b: Observable,
    outcome_b: int,
) -> float:
    """Tr[(P_a (x) P_b) sigma] for one joint outcome of a subsystem-1 and a
    subsystem-2 observable, clipped to [0, 1] against round-off overshoot."""
    if obs_a.subsystem != 1 or obs_b.subsystem != 2:
        raise SubsystemMismatchError(
            f"expected subsystems (1, 2), got ({obs_a.subsystem}, {obs_b.subsystem})"
        )
    proj = tensor_product(obs_a.projector(outcome_a), obs_b.projector(outcome_b))
    if proj.shape != sigma.matrix.shape:
        raise DimensionMismatchError(
            f"projector shape {proj.shape} does not match state shape {sigma.matrix.shape}"
        )
    value = float(np.trace(proj @ sigma.matrix).real)
    return _clip_probability(value)


class HardyProbabilityTable(NamedTuple):
    """The six designated joint probabilities, in canonical order.

    For an exact two-distinct-weight pure state the first five vanish and the
    last equals ``hardy_parameter_a(p1, p2)``.
    """

    x1_plus_x2_plus: float
    y1_plus_x2_minus: float
    x1_minus_y2_plus: float
    y1_plus_x2_zero: float
    x1_zero_y2_plus: float
    y1_plus_y2_plus: float


def hardy_probability_table(sigma: DensityOperator, obs: HardyObservableSet) -> HardyProbabilityTable:
    """Evaluate the six designated probabilities of a state on an observable set."""
    return HardyProbabilityTable(
        x1_plus_x2_plus=joint_probability(sigma, obs.x1, +1, obs.x2, +1),
        y1_plus_x2_minus=joint_probability(sigma, obs.y1, +1, obs.x2, -1),
        x1_minus_y2_plus=joint_probability(sigma, obs.x1, -1, obs.y2, +1),
        y1_plus_x2_zero=joint_probability(sigma, obs.y1, +1, obs.x2, 0),
        x1_zero_y2_plus=joint_probability(sigma, obs.x1, 0, obs.y2, +1),
        y1_plus_y2_plus=joint_probability(sigma, obs.y1, +1, obs.y2, +1),
    )


__all__ = [
    "OUTCOMES",
    "PROBABILITY_CLIP",
    "HardyObservableSet",
    "HardyProbabilityTable",
    "MeasurementBases",
    "Observable",
    "RotationPair",
    "build_bases",
    "build_observables",
    "build_rotations",
    "hardy_parameter_a",
    "hardy_probability_table",
    "joint_probability",
]
