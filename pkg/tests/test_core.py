# Test domain types and dimensionless reductions
import numpy as np
import pytest
import stepmom.core as smc

try:
    from hypothesis import given, settings
    from hypothesis import strategies as st
except ModuleNotFoundError:  # pragma: no cover
    pytest.skip("hypothesis is required for these tests", allow_module_level=True)

MODES = ("mode", [smc.HERMITIAN, smc.PT])
etas = st.floats(min_value=1e-3, max_value=100.0, allow_nan=False)
steps = st.floats(min_value=0.0, max_value=0.95, allow_nan=False)


def test_ground_energy():
    assert smc.ground_energy() == pytest.approx(np.pi ** 2 / 4)
    well = smc.WellConfig(half_width=2.0, hbar=1.0, mass=1.0)
    assert smc.ground_energy(well) == pytest.approx(np.pi ** 2 / 32)


@pytest.mark.parametrize(*MODES)
def test_energy_ratio_standard_well(mode):
    eta = np.arange(1, 6) * np.pi / 2
    assert np.allclose(smc.energy_ratio(eta, 0.0, mode), np.arange(1, 6) ** 2)


def test_energy_ratio_pt_factor():
    ratio = smc.energy_ratio(1.0, 0.3, smc.PT)
    assert ratio == pytest.approx((2 / np.pi) ** 2 * 1.09 ** 2)
    assert isinstance(ratio, float)


@pytest.mark.parametrize(
    "eta, mu0, mode, expected",
    [
        (np.pi / 2, 0.0, smc.HERMITIAN, (np.pi / 2, np.pi / 2)),
        (1.0, 0.5, smc.HERMITIAN, (2 / 3, 2.0)),
        (1.0, 0.3, smc.PT, (1 - 0.3j, 1 + 0.3j)),
    ],
)
def test_wave_numbers(eta, mu0, mode, expected):
    kappa_l, kappa_bar_l = smc.wave_numbers(eta, mu0, mode)
    assert kappa_l == pytest.approx(expected[0])
    assert kappa_bar_l == pytest.approx(expected[1])


@given(eta=etas, mu0=steps)
def test_hermitian_wave_numbers_invariant(eta, mu0):
    kappa_l, kappa_bar_l = smc.wave_numbers(eta, mu0, smc.HERMITIAN)
    assert kappa_l.real * (1 + mu0) == pytest.approx(eta, rel=1e-12)
    assert kappa_bar_l.real * (1 - mu0) == pytest.approx(eta, rel=1e-12)
    assert kappa_l.imag == 0 and kappa_bar_l.imag == 0


@given(eta=etas, mu0=st.floats(min_value=0.0, max_value=5.0))
def test_pt_wave_numbers_conjugate(eta, mu0):
    kappa_l, kappa_bar_l = smc.wave_numbers(eta, mu0, smc.PT)
    assert kappa_bar_l == np.conj(kappa_l)
    assert kappa_l.real == eta


@given(eta=etas)
def test_modes_agree_without_step(eta):
    assert smc.energy_ratio(eta, 0.0, smc.HERMITIAN) == smc.energy_ratio(
        eta, 0.0, smc.PT
    )
    assert smc.wave_numbers(eta, 0.0, smc.HERMITIAN) == pytest.approx(
        smc.wave_numbers(eta, 0.0, smc.PT)
    )


@pytest.mark.parametrize(*MODES)
def test_energy_ratio_increasing(mode):
    eta = np.linspace(0.1, 20, 200)
    assert np.all(np.diff(smc.energy_ratio(eta, 0.2, mode)) > 0)


@pytest.mark.parametrize(
    "eta, mu0, mode",
    [
        (0.0, 0.1, smc.HERMITIAN),
        (-1.0, 0.1, smc.PT),
        (np.inf, 0.1, smc.PT),
        (1.0, 1.0, smc.HERMITIAN),
        (1.0, 1.5, smc.HERMITIAN),
        (1.0, -0.1, smc.PT),
        (1.0, np.nan, smc.PT),
        (1.0, 0.1, "real"),
        (1.0, 0.1, None),
    ],
)
def test_domain_errors(eta, mu0, mode):
    with pytest.raises(smc.DomainError):
        smc.energy_ratio(eta, mu0, mode)


def test_large_pt_step_accepted():
    assert smc.check_mu0(2.0, "PT") == 2.0


def test_check_root_config():
    smc.check_root_config(smc.DEFAULT_ROOT_CONFIG)
    for bad in (
        {"eta_min": 0.0},
        {"eta_max": 1e-7},
        {"grid_step": 0.0},
        {"refine_tol": -1.0},
        {"max_refine_iters": 0},
        {"tangency_tol": -1e-3},
    ):
        with pytest.raises(smc.DomainError):
            smc.check_root_config(smc.DEFAULT_ROOT_CONFIG._replace(**bad))


def test_two_segment_profile():
    prof = smc.two_segment_profile(smc.HERMITIAN, 0.2)
    assert [seg.alpha for seg in prof.segments] == pytest.approx([1.2, 0.8])
    assert prof.segments[0].end == prof.segments[1].start == 0.0
    prof = smc.two_segment_profile(smc.PT, 0.2, smc.WellConfig(half_width=3.0))
    assert prof.segments[0].start == -3.0 and prof.segments[-1].end == 3.0
    assert prof.segments[1].alpha == 1 - 0.2j


@pytest.mark.parametrize(
    "segments",
    [
        (),
        (smc.Segment(-1.0, 0.0, 1.0), smc.Segment(0.1, 1.0, 1.0)),
        (smc.Segment(-1.0, 0.5, 1.0), smc.Segment(0.0, 1.0, 1.0)),
        (smc.Segment(-1.0, 0.0, 0.0), smc.Segment(0.0, 1.0, 1.0)),
        (smc.Segment(-0.5, 1.0, 1.0),),
    ],
)
def test_check_profile_errors(segments):
    with pytest.raises(smc.DomainError):
        smc.check_profile(smc.StepProfile(None, None, segments))


def test_profile_eta_scale():
    assert smc.profile_eta_scale(smc.HERMITIAN, 0.3) == 1.0
    assert smc.profile_eta_scale(smc.PT, 0.3) == pytest.approx(1.09)
