from src.catalog import default_battery
from src.certifier import equivalence_selftest
from src.filtrations import Filtration


def test_selftest_agrees_on_buchsbaum_rings(
    plane_ring, embedded_point_ring, two_planes_ring, small_config
):
    """Test that invariant equality and the intersection conditions agree."""
    battery = [
        ("plane/adic(m)", Filtration.adic(plane_ring.maximal_ideal)),
        ("embedded_point/adic(m)", Filtration.adic(embedded_point_ring.maximal_ideal)),
        ("two_planes/adic(m)", Filtration.adic(two_planes_ring.maximal_ideal)),
    ]
    report = equivalence_selftest(battery, small_config)
    assert report.passed
    assert [entry.label for entry in report.entries] == [label for label, _ in battery]
    assert all(entry.invariant_equality for entry in report.entries)
    assert all(entry.condition_holds for entry in report.entries)


def test_selftest_skips_insane_inputs(plane_and_line_ring, small_config):
    """Test that a non-Buchsbaum ring is skipped rather than counted."""
    battery = [("plane_and_line/adic(m)", Filtration.adic(plane_and_line_ring.maximal_ideal))]
    report = equivalence_selftest(battery, small_config)
    entry = report.entries[0]
    assert entry.skipped
    assert entry.agree is None
    assert report.passed


def test_selftest_on_default_battery(small_config):
    """Test agreement on the full battery of adic, parameter-adic and Ratliff-Rush filtrations."""
    report = equivalence_selftest(default_battery(seed=0), small_config)
    assert len(report.entries) == 11
    assert report.passed
    assert sum(not entry.skipped for entry in report.entries) >= 6
