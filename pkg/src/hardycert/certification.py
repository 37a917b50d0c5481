"""Trace-distance certification of nonlocality.

A mixed state sigma within trace distance epsilon of a pure state carrying two
distinct Schmidt weights inherits that state's probability signature up to
epsilon per entry.  Whenever

    6 * epsilon < a,

no local realistic model can reproduce sigma's predictions for the four
constructed observables, so a strictly positive margin a - 6 epsilon is a
nonlocality (and hence nonseparability) certificate.  The bound is sufficient
only: a non-positive margin decides nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DimensionMismatchError, NotHardyError
from .linalg import hermitian_eig, trace_norm
from .observables import (
    HardyProbabilityTable,
    build_bases,
    build_observables,
    hardy_probability_table,
)
from .states import (
    DEFAULT_DELTA,
    DensityOperator,
    HardyPair,
    StateVector,
    find_hardy_pair,
    pure_density,
    schmidt_decompose,
)

#: A margin must exceed this to count as a certification; anything closer to
#: zero is numerically indistinguishable from the boundary.
CERTIFICATION_TOL = 1e-10


class Verdict(Enum):
    """Outcome of the criterion for one (state, candidate) pair."""

    NONLOCAL_CERTIFIED = "NonlocalCertified"
    INCONCLUSIVE = "Inconclusive"
    NOT_HARDY = "NotHardy"


@dataclass(frozen=True)
class CertificationReport:
    """Result of running the criterion.

    ``margin`` is always ``a - 6 * epsilon``; the verdict is
    NONLOCAL_CERTIFIED exactly when the margin clears CERTIFICATION_TOL.
    ``pair`` and ``table`` are None when the candidate has no admissible
    weight pair (verdict NOT_HARDY), in which case ``a`` is reported as 0.
    """

    epsilon: float
    a: float
    margin: float
    verdict: Verdict
    pair: HardyPair | None
    table: HardyProbabilityTable | None


def trace_distance(s1: DensityOperator, s2: DensityOperator) -> float:
    """Half the trace norm of s1 - s2.

    This metric dominates every projector-probability gap between the two
    states, which is the only property the criterion needs from it.
    """
    if (s1.d1, s1.d2) != (s2.d1, s2.d2):
        raise DimensionMismatchError(
            f"dims ({s1.d1}, {s1.d2}) and ({s2.d1}, {s2.d2}) do not match"
        )
    value = 0.5 * trace_norm(s1.matrix - s2.matrix)
    return min(max(value, 0.0), 1.0)


def certify(
    sigma: DensityOperator,
    candidate: StateVector,
    delta: float = DEFAULT_DELTA,
) -> CertificationReport:
    """Run the criterion for ``sigma`` against a candidate pure state.

    Schmidt-decomposes the candidate, selects the weight pair maximizing the
    parameter ``a`` (weights closer than ``delta`` are not admissible),
    measures epsilon as the trace distance from ``sigma`` to the candidate's
    projector, and compares ``6 * epsilon`` against ``a``.  The six designated
    joint probabilities of ``sigma`` on the constructed observables are
    evaluated and included for inspection.
    """
    if (sigma.d1, sigma.d2) != (candidate.d1, candidate.d2):
        raise DimensionMismatchError(
            f"state dims ({sigma.d1}, {sigma.d2}) do not match candidate "
            f"dims ({candidate.d1}, {candidate.d2})"
        )
    epsilon = trace_distance(sigma, pure_density(candidate))
    sf = schmidt_decompose(candidate)
    pair = find_hardy_pair(sf, delta=delta)
    if pair is None:
        return CertificationReport(
            epsilon=epsilon,
            a=0.0,
            margin=-6.0 * epsilon,
            verdict=Verdict.NOT_HARDY,
            pair=None,
            table=None,
        )
    obs = build_observables(build_bases(sf, pair), sigma.d1, sigma.d2)
    table = hardy_probability_table(sigma, obs)
    margin = pair.a - 6.0 * epsilon
    verdict = Verdict.NONLOCAL_CERTIFIED if margin > CERTIFICATION_TOL else Verdict.INCONCLUSIVE
    return CertificationReport(
        epsilon=epsilon,
        a=pair.a,
        margin=margin,
        verdict=verdict,
        pair=pair,
        table=table,
    )


def candidate_from_state(sigma: DensityOperator) -> StateVector:
    """Top eigenvector of a state, as the default certification candidate.

    When the top eigenvalue is degenerate the eigensolver's last column is
    returned as-is; callers who care can inspect the spectral gap themselves
    (the command-line tool reports it).
    """
    system = hermitian_eig(sigma.matrix)
    top = system.eigenvectors[:, -1]
    return StateVector(d1=sigma.d1, d2=sigma.d2, amplitudes=top)


@dataclass(frozen=True)
class NoiseThresholdReport:
    """Critical mixing weight for p |psi><psi| + (1 - p) noise mixtures.

    Mixtures with p above ``p_star`` have strictly positive criterion margin;
    mixtures below do not.  ``d_noise`` is the trace distance from the noise
    operator to the pure projector and ``a`` the candidate's parameter.
    """

    p_star: float
    d_noise: float
    a: float


def noise_threshold(
    psi: StateVector,
    noise: DensityOperator,
    delta: float = DEFAULT_DELTA,
) -> NoiseThresholdReport:
    """Critical mixing weight, in closed form.

    The Hermitian difference between the mixture and the pure projector
    scales exactly linearly in (1 - p), so the distance obeys
    D(sigma_p, psi) = (1 - p) * d_noise and the criterion boundary sits at

        p_star = max(0, 1 - a / (6 * d_noise)),

    with p_star = 0 whenever the bare noise operator already lies inside the
    certified neighborhood (including noise = |psi><psi| itself).

    Raises
    ------
    NotHardyError
        The candidate has no admissible pair of distinct Schmidt weights.
    """
    if (psi.d1, psi.d2) != (noise.d1, noise.d2):
        raise DimensionMismatchError(
            f"candidate dims ({psi.d1}, {psi.d2}) do not match noise "
            f"dims ({noise.d1}, {noise.d2})"
        )
    pair = find_hardy_pair(schmidt_decompose(psi), delta=delta)
    if pair is None:
        raise NotHardyError("candidate state has no admissible pair of distinct Schmidt weights")
    d_noise = trace_distance(noise, pure_density(psi))
    if 6.0 * d_noise <= pair.a:
        p_star = 0.0
    else:
        p_star = 1.0 - pair.a / (6.0 * d_noise)
    return NoiseThresholdReport(p_star=p_star, d_noise=d_noise, a=pair.a)


__all__ = [
    "CERTIFICATION_TOL",
    "CertificationReport",
    "NoiseThresholdReport",
    "Verdict",
    "candidate_from_state",
    "certify",
    "noise_threshold",
    "trace_distance",
]
