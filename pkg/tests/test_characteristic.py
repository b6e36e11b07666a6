# Test the equivalent forms of the quantization condition
import numpy as np
import pytest
import stepmom.characteristic as sch
from stepmom.core import HERMITIAN, PT, RootConfig, Segment, StepProfile, single_segment_profile
from stepmom.rootfind import find_roots

try:
    from hypothesis import given
    from hypothesis import strategies as st
except ModuleNotFoundError:  # pragma: no cover
    pytest.skip("hypothesis is required for these tests", allow_module_level=True)

ETA = np.linspace(0.05, 4 * np.pi, 997)
SCAN = RootConfig(eta_min=1e-6, eta_max=4 * np.pi)
FORMS = [sch.DETERMINANT_FORM, sch.EXPANDED_FORM, sch.TRANSFER_MATRIX_FORM]
CASES = [(mode, mu0) for mode in (HERMITIAN, PT) for mu0 in (0.0, 0.1, 0.2, 0.3)]
etas = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
steps = st.floats(min_value=0.0, max_value=0.9, allow_nan=False)


def closed(eta, mu0, mode):
    return sch.closed_form_char(eta, mu0, mode)


def test_known_values():
    assert abs(sch.hermitian_char(np.pi / 2, 0.0)) < 1e-15
    assert abs(sch.pt_char(np.pi / 2, 0.0)) < 1e-15
    assert sch.hermitian_char(0.0, 0.3) == 0.0
    assert sch.pt_char(2.4, 1.0) > 0
    assert sch.pt_char(np.pi / 2, 0.2) > 0


def test_reference_roots():
    # Roots recovered from tabulated energy ratios
    eta_h = np.pi / 2 * np.sqrt(0.8567)
    roots = find_roots(lambda x: sch.hermitian_char(x, 0.2), SCAN)
    assert eta_h == pytest.approx(roots[0].eta, rel=2e-3)
    eta_pt = np.pi / 2 * np.sqrt(3.5791) / 1.09
    roots = find_roots(lambda x: sch.pt_char(x, 0.3), SCAN)
    assert eta_pt == pytest.approx(roots[1].eta, rel=2e-3)
    assert abs(sch.pt_char(roots[1].eta, 0.3)) < 1e-10


@given(eta=etas, mu0=steps)
def test_odd_in_eta(eta, mu0):
    assert sch.hermitian_char(-eta, mu0) == pytest.approx(
        -sch.hermitian_char(eta, mu0), abs=1e-12
    )
    assert sch.pt_char(-eta, mu0) == pytest.approx(-sch.pt_char(eta, mu0), abs=1e-12)


@given(eta=etas)
def test_no_step_limit(eta):
    assert sch.hermitian_char(eta, 0.0) == pytest.approx(np.sin(2 * eta), abs=1e-12)
    assert sch.pt_char(eta, 0.0) == pytest.approx(np.sin(2 * eta), abs=1e-12)


@pytest.mark.parametrize("mode, mu0", CASES)
def test_matching_and_expanded(mode, mu0):
    match = sch.matching_char(ETA, mu0, mode)
    factor = 1 - mu0 ** 2 if mode == HERMITIAN else 1.0
    scale = np.max(np.abs(ETA * closed(ETA, mu0, mode)))
    assert np.allclose(match * factor, ETA * closed(ETA, mu0, mode), atol=1e-12 * scale)
    assert np.allclose(sch.expanded_char(ETA, mu0, mode), 2 * match, atol=1e-11 * scale)


@pytest.mark.parametrize("mode, mu0", CASES)
def test_determinant(mode, mu0):
    det = sch.determinant_char(ETA, mu0, mode)
    expected = ETA * closed(ETA, mu0, mode)
    scale = np.max(np.abs(expected))
    np.testing.assert_allclose(det.real, expected, rtol=1e-8, atol=1e-8 * scale)
    assert np.max(np.abs(det.imag)) < 1e-8 * scale


def test_boundary_matrix_shape():
    assert sch.boundary_matrix(ETA[:5], 0.1, PT).shape == (5, 4, 4)
    assert sch.boundary_matrix(1.0, 0.1, PT).shape == (4, 4)


def test_pt_transfer_matrix_is_real():
    prof = sch.two_segment_profile(PT, 0.3)
    vals = sch.transfer_matrix_char(ETA * 1.09, prof)
    assert np.max(np.abs(vals.imag)) < 1e-10 * np.max(np.abs(vals.real))


def test_single_segment_roots():
    prof = single_segment_profile()
    roots = find_roots(
        lambda lam: np.real(sch.transfer_matrix_char(lam, prof)),
        RootConfig(eta_min=1e-6, eta_max=2 * np.pi),
    )
    expected = np.arange(1, 5) * np.pi / 2
    assert np.allclose([r.eta for r in roots], expected, atol=1e-9)


def test_uniform_segments_multiply():
    # Splitting a uniform segment does not move the roots
    pieces = StepProfile(
        None,
        None,
        (Segment(-1.0, -0.3, 1.0), Segment(-0.3, 0.4, 1.0), Segment(0.4, 1.0, 1.0)),
    )
    lam = np.linspace(0.1, 10, 50)
    assert np.allclose(
        sch.transfer_matrix_char(lam, pieces),
        sch.transfer_matrix_char(lam, single_segment_profile()),
        atol=1e-12,
    )


@pytest.mark.parametrize("mode, mu0", CASES)
@pytest.mark.parametrize("kind", FORMS)
def test_forms_share_roots(mode, mu0, kind):
    reference = find_roots(sch.characteristic_function(mode, mu0), SCAN)
    other = find_roots(sch.characteristic_function(mode, mu0, kind), SCAN)
    assert len(other) == len(reference)
    assert np.allclose(
        [r.eta for r in other], [r.eta for r in reference], rtol=0, atol=1e-9
    )


def test_pt_root_pair_in_window():
    roots = find_roots(sch.characteristic_function(PT, 0.3), SCAN)
    assert len(roots) == 2


@pytest.mark.parametrize(
    "mode, kind",
    [(PT, sch.HERMITIAN_CLOSED_FORM), (HERMITIAN, sch.PT_CLOSED_FORM), (PT, "spline")],
)
def test_characteristic_function_errors(mode, kind):
    with pytest.raises(sch.DomainError):
        sch.characteristic_function(mode, 0.1, kind)


def test_transfer_matrix_rejects_non_positive():
    with pytest.raises(sch.DomainError):
        sch.transfer_matrix_char(0.0, single_segment_profile())
