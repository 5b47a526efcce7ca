from src.certifier import check_intersection_condition, sanity_sample
from src.filtrations import Filtration, ReductionCertificate, find_reduction


def test_intersection_range_empty_for_embedded_point(embedded_point_ring):
    """Test that d = 1 and r = 1 leave no n to check."""
    R = embedded_point_ring
    F = Filtration.adic(R.maximal_ideal)
    Q = ReductionCertificate((R.ambient.gen(1),), 1, 5)
    assert check_intersection_condition(F, Q) == []


def test_intersection_range_empty_for_regular_ring(plane_ring):
    """Test that r = 0 on a plane gives a vacuous pass."""
    F = Filtration.adic(plane_ring.maximal_ideal)
    Q = ReductionCertificate(tuple(plane_ring.ambient.gens()), 0, 4)
    assert check_intersection_condition(F, Q) == []


def test_intersection_condition_on_two_planes(two_planes_ring, small_config):
    """Test the single condition at n = 3 for two planes meeting at a point."""
    F = Filtration.adic(two_planes_ring.maximal_ideal)
    Q = find_reduction(F, small_config.reduction_trials, 4, seed=0)
    assert Q.r == 1
    checks = check_intersection_condition(F, Q)
    assert [check.n for check in checks] == [3]
    assert checks[0].holds
    assert checks[0].name == "intersection_2"


def test_sanity_sample_on_plane(plane_ring):
    """Test that every sampled sop of a polynomial ring is standard with invariant zero."""
    sample = sanity_sample(plane_ring, trials=4, seed=0)
    assert sample.trials == 4
    assert sample.all_standard
    assert sample.linear_passed and sample.quadratic_passed
    assert set(sample.values) == {0}
    assert len(sample.sops) == 4


def test_sanity_sample_on_embedded_point(embedded_point_ring):
    """Test that sops from m and m² share the invariant one."""
    sample = sanity_sample(embedded_point_ring, trials=4, seed=3)
    assert sample.all_standard
    assert set(sample.values) == {1}


def test_sanity_sample_is_seeded(embedded_point_ring):
    """Test that the same seed draws the same sops."""
    first = sanity_sample(embedded_point_ring, trials=2, seed=5)
    second = sanity_sample(embedded_point_ring, trials=2, seed=5)
    assert first.sops == second.sops
