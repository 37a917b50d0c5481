import numpy as np
import pytest

from hardycert import (
    DimensionMismatchError,
    NotHardyError,
    StateVector,
    Verdict,
    candidate_from_state,
    certify,
    find_hardy_pair,
    maximally_mixed,
    noise_threshold,
    pure_density,
    schmidt_decompose,
    trace_distance,
    validate_density,
)
from support import (
    certified_mixture,
    random_density,
    random_hardy_state,
    random_projector,
)

A_FIXTURE = 4.0 / 45.0


def fixture_state() -> StateVector:
    amps = np.zeros(4, dtype=complex)
    amps[0] = np.sqrt(0.2)
    amps[3] = np.sqrt(0.8)
    return StateVector(d1=2, d2=2, amplitudes=amps)


def white_noise_mixture(p: float) -> "validate_density":
    psi = fixture_state()
    return validate_density(p * psi.projector() + (1 - p) * np.eye(4) / 4.0, 2, 2)


# ------------------------------------------------------------ trace distance


def test_trace_distance_identical_states():
    rho = maximally_mixed(2, 2)
    assert trace_distance(rho, rho) == 0.0


def test_trace_distance_orthogonal_pure_states():
    zero = np.zeros(4, dtype=complex)
    zero[0] = 1.0
    one = np.zeros(4, dtype=complex)
    one[3] = 1.0
    d = trace_distance(
        pure_density(StateVector(2, 2, zero)), pure_density(StateVector(2, 2, one))
    )
    assert d == pytest.approx(1.0, abs=1e-12)


def test_trace_distance_white_noise_fixture():
    d = trace_distance(maximally_mixed(2, 2), pure_density(fixture_state()))
    assert d == pytest.approx(0.75, abs=1e-12)


def test_trace_distance_metric_axioms():
    rng = np.random.default_rng(41)
    for _ in range(20):
        a = random_density(2, 2, rng)
        b = random_density(2, 2, rng)
        c = random_density(2, 2, rng)
        dab = trace_distance(a, b)
        assert dab == pytest.approx(trace_distance(b, a), abs=1e-12)
        assert -1e-12 <= dab <= 1.0 + 1e-12
        assert dab <= trace_distance(a, c) + trace_distance(c, b) + 1e-10


def test_trace_distance_rejects_mismatched_dims():
    with pytest.raises(DimensionMismatchError):
        trace_distance(maximally_mixed(2, 2), maximally_mixed(2, 3))


def test_trace_distance_dominates_projector_gaps():
    rng = np.random.default_rng(42)
    for _ in range(100):
        d1 = int(rng.integers(2, 4))
        d2 = int(rng.integers(2, 4))
        s1 = random_density(d1, d2, rng)
        s2 = random_density(d1, d2, rng)
        proj = random_projector(d1 * d2, rng)
        gap = abs(np.trace(proj @ s1.matrix).real - np.trace(proj @ s2.matrix).real)
        assert gap <= trace_distance(s1, s2) + 1e-10


# ----------------------------------------------------------------- certify


def test_certify_pure_fixture():
    psi = fixture_state()
    report = certify(pure_density(psi), psi)
    assert report.epsilon <= 1e-12
    assert report.a == pytest.approx(A_FIXTURE, abs=1e-12)
    assert report.margin == pytest.approx(A_FIXTURE, abs=1e-10)
    assert report.verdict is Verdict.NONLOCAL_CERTIFIED
    assert max(abs(v) for v in report.table[:5]) <= 1e-10


def test_certify_white_noise_mixtures():
    psi = fixture_state()
    report = certify(white_noise_mixture(0.99), psi)
    assert report.epsilon == pytest.approx(0.0075, abs=1e-12)
    assert report.verdict is Verdict.NONLOCAL_CERTIFIED

    report = certify(white_noise_mixture(0.9), psi)
    assert report.epsilon == pytest.approx(0.075, abs=1e-12)
    assert report.verdict is Verdict.INCONCLUSIVE
    assert report.margin < 0.0


def test_certify_equal_weight_candidate_is_not_hardy():
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1.0 / np.sqrt(2.0)
    candidate = StateVector(2, 2, bell)
    report = certify(maximally_mixed(2, 2), candidate)
    assert report.verdict is Verdict.NOT_HARDY
    assert report.a == 0.0
    assert report.pair is None and report.table is None
    assert report.margin == pytest.approx(-6.0 * report.epsilon, abs=1e-15)


def test_certify_margin_identity_and_verdict_consistency():
    rng = np.random.default_rng(43)
    for _ in range(25):
        psi = random_hardy_state(rng, d1=2, d2=2)
        sigma = random_density(2, 2, rng)
        report = certify(sigma, psi)
        assert report.margin == pytest.approx(report.a - 6.0 * report.epsilon, abs=1e-12)
        if report.margin > 1e-10:
            assert report.verdict is Verdict.NONLOCAL_CERTIFIED
        else:
            assert report.verdict is not Verdict.NONLOCAL_CERTIFIED


def test_certify_delta_forwarding():
    psi = fixture_state()
    # sqrt(0.8) - sqrt(0.2) ~ 0.447; a delta beyond that leaves no pair.
    report = certify(pure_density(psi), psi, delta=0.5)
    assert report.verdict is Verdict.NOT_HARDY


def test_certify_rejects_mismatched_dims():
    with pytest.raises(DimensionMismatchError):
        certify(maximally_mixed(2, 3), fixture_state())


def test_certify_table_deviation_bounded_by_epsilon():
    rng = np.random.default_rng(44)
    for _ in range(50):
        psi = random_hardy_state(rng, d1=2, d2=3)
        tau = random_density(2, 3, rng)
        w = float(rng.uniform(0.0, 1.0))
        sigma = validate_density(
            (1 - w) * psi.projector() + w * tau.matrix, 2, 3
        )
        report = certify(sigma, psi)
        targets = np.array([0.0, 0.0, 0.0, 0.0, 0.0, report.a])
        deviation = np.max(np.abs(np.array(report.table) - targets))
        assert deviation <= report.epsilon + 1e-10


# ------------------------------------------------------- candidate selection


def test_candidate_from_state_recovers_dominant_pure_state():
    psi = fixture_state()
    candidate = candidate_from_state(white_noise_mixture(0.9))
    overlap = abs(np.vdot(candidate.amplitudes, psi.amplitudes)) ** 2
    assert overlap == pytest.approx(1.0, abs=1e-10)


def test_candidate_from_state_runs_on_degenerate_input():
    candidate = candidate_from_state(maximally_mixed(2, 2))
    assert np.linalg.norm(candidate.amplitudes) == pytest.approx(1.0, abs=1e-9)
    report = certify(maximally_mixed(2, 2), candidate)
    assert report.verdict in (Verdict.NOT_HARDY, Verdict.INCONCLUSIVE)


def test_certified_pair_generator_behaves():
    rng = np.random.default_rng(45)
    sigma, psi = certified_mixture(rng, d1=2, d2=2)
    report = certify(sigma, psi)
    assert report.margin > 1e-3


# ------------------------------------------------------------ noise threshold


def test_noise_threshold_white_noise_fixture():
    report = noise_threshold(fixture_state(), maximally_mixed(2, 2))
    assert report.d_noise == pytest.approx(0.75, abs=1e-12)
    assert report.a == pytest.approx(A_FIXTURE, abs=1e-12)
    assert report.p_star == pytest.approx(1.0 - A_FIXTURE / 4.5, abs=1e-12)
    assert report.p_star == pytest.approx(0.9802469, abs=1e-6)


def test_noise_threshold_zero_for_self_noise():
    psi = fixture_state()
    report = noise_threshold(psi, pure_density(psi))
    assert report.d_noise <= 1e-12
    assert report.p_star == 0.0


def test_noise_threshold_orthogonal_noise():
    psi = fixture_state()
    flip = np.zeros(4, dtype=complex)
    flip[1] = 1.0  # |01>, orthogonal to psi
    report = noise_threshold(psi, pure_density(StateVector(2, 2, flip)))
    assert report.d_noise == pytest.approx(1.0, abs=1e-12)
    assert report.p_star == pytest.approx(1.0 - A_FIXTURE / 6.0, abs=1e-12)


def test_noise_threshold_requires_distinct_weights():
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1.0 / np.sqrt(2.0)
    with pytest.raises(NotHardyError):
        noise_threshold(StateVector(2, 2, bell), maximally_mixed(2, 2))


def test_noise_threshold_rejects_mismatched_dims():
    with pytest.raises(DimensionMismatchError):
        noise_threshold(fixture_state(), maximally_mixed(2, 3))


def test_noise_threshold_boundary_spot_checks():
    rng = np.random.default_rng(46)
    psi = fixture_state()
    for _ in range(10):
        noise = random_density(2, 2, rng)
        report = noise_threshold(psi, noise)
        if not 0.01 < report.p_star < 0.99:
            continue
        for p, expect_positive in ((report.p_star + 0.01, True), (report.p_star - 0.01, False)):
            sigma = validate_density(
                p * psi.projector() + (1 - p) * noise.matrix, 2, 2
            )
            margin = certify(sigma, psi).margin
            assert (margin > 0) == expect_positive


def test_mixture_distance_is_linear_in_noise_weight():
    rng = np.random.default_rng(47)
    psi = fixture_state()
    pure = pure_density(psi)
    for _ in range(10):
        noise = random_density(2, 2, rng)
        base = trace_distance(noise, pure)
        for p in np.linspace(0.1, 0.9, 9):
            sigma = validate_density(
                p * psi.projector() + (1 - p) * noise.matrix, 2, 2
            )
            assert trace_distance(sigma, pure) == pytest.approx((1 - p) * base, abs=1e-10)
