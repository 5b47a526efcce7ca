import pytest

from src.certifier import BuchsbaumCertifier, corso_boundary_check
from src.filtrations import Filtration, find_reduction


@pytest.mark.parametrize(
    ("fixture", "lhs", "rhs"),
    [
        ("plane_ring", 0, 0),
        ("embedded_point_ring", 0, -1),
        ("two_planes_ring", 1, 0),
    ],
)
def test_corso_boundary_on_maximal_ideal(fixture, lhs, rhs, request, small_config):
    """Test the two sides of the Corso inequality for the maximal ideal."""
    R = request.getfixturevalue(fixture)
    F = Filtration.adic(R.maximal_ideal)
    Q = find_reduction(F, small_config.reduction_trials, 6, seed=0)
    result = corso_boundary_check(R, R.maximal_ideal, Q, small_config.horizon)
    assert (result.lhs, result.rhs) == (lhs, rhs)
    assert result.holds_geq
    assert result.equal == (lhs == rhs)


def test_corso_escalates_on_equality(plane_ring, small_config):
    """Test that boundary equality on a sane input triggers certification."""
    outcome = BuchsbaumCertifier(small_config).corso(plane_ring.maximal_ideal)
    assert outcome["corso"].equal
    assert outcome["sample_passed"] is True
    certificate = outcome["certificate"]
    assert certificate is not None
    assert certificate.corso is not None
    assert certificate.corso.escalated


def test_corso_does_not_escalate_on_strict_inequality(embedded_point_ring, small_config):
    """Test that a strict inequality is reported without a certificate."""
    outcome = BuchsbaumCertifier(small_config).corso(embedded_point_ring.maximal_ideal)
    assert not outcome["corso"].equal
    assert outcome["certificate"] is None
