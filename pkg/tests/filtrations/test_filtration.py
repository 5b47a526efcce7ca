import pytest

from src.errors import FiltrationError
from src.filtrations import (
    Filtration,
    ReductionCertificate,
    filtration_ideal,
    find_reduction,
    intersection_equalities,
    quotient_filtration,
    reduction_number,
    validate_goodness,
)
from src.models.descriptions import FiltrationKind


def test_adic_members(plane_ring):
    """Test that adic(m) materializes powers of m."""
    F = Filtration.adic(plane_ring.maximal_ideal)
    assert F.ideal(0).is_unit()
    assert F.ideal(2) == plane_ring.ideal(["x^2", "x*y", "y^2"])
    assert F.beta == 1


def test_negative_index_rejected(plane_ring):
    """Test that negative indices raise a FiltrationError."""
    with pytest.raises(FiltrationError, match="negative"):
        Filtration.adic(plane_ring.maximal_ideal).ideal(-1)


def test_adic_filtration_is_good(embedded_point_ring):
    """Test that adic(m) passes goodness validation."""
    report = validate_goodness(Filtration.adic(embedded_point_ring.maximal_ideal), 4)
    assert report.passed
    assert not report.reduction_checked


def test_table_filtration_extends_by_reduction(plane_ring):
    """Test that a table continues as Q·I_{n-1} past its stored ideals."""
    R = plane_ring
    m = R.maximal_ideal
    F = Filtration.table([m, m**2], R.ideal(["x", "y"]), 0)
    assert F.ideal(3) == m**3
    assert F.beta == 2
    report = validate_goodness(F, 3)
    assert report.passed
    assert report.reduction_checked


def test_table_goodness_failure(plane_ring):
    """Test that a non-multiplicative table reports its first failure."""
    R = plane_ring
    F = Filtration.table([R.maximal_ideal, R.ideal(["x^3"])], R.ideal(["x", "y"]), 1)
    report = validate_goodness(F, 3)
    assert not report.passed
    assert report.first_failure.check == "multiplicative"
    assert report.first_failure.n == 1


def test_table_requires_non_negative_r(plane_ring):
    """Test that a negative reduction number is rejected."""
    R = plane_ring
    with pytest.raises(FiltrationError):
        Filtration.table([R.maximal_ideal], R.maximal_ideal, -1)


def test_description_rebuilds_filtration(embedded_point_ring):
    """Test that a filtration rebuilt from its description has equal members."""
    R = embedded_point_ring
    F = Filtration.adic(R.maximal_ideal)
    rebuilt = Filtration.from_description(R, F.describe())
    assert rebuilt.kind == FiltrationKind.ADIC
    assert rebuilt.ideal(3) == F.ideal(3)


def test_intersection_equalities_for_parameter_reduction(plane_ring):
    """Test that (x, y) ∩ m^k = (x, y)·m^{k-1} on a polynomial ring."""
    R = plane_ring
    F = Filtration.adic(R.maximal_ideal)
    Q = ReductionCertificate(tuple(R.ambient.gens()), 0, 4)
    assert all(holds for _, holds in intersection_equalities(F, Q, 4))


def test_quotient_filtration(plane_ring):
    """Test the image of adic(m) on F[x,y]/(x^2)."""
    R = plane_ring
    F = Filtration.adic(R.maximal_ideal)
    x = R.ambient.gen(0)
    F.reduction = ReductionCertificate(tuple(R.ambient.gens()), 0, 4)
    image = quotient_filtration(F, x, 2)
    assert image.kind == FiltrationKind.QUOTIENT
    assert image.ring.dim == 1
    assert image.reduction is not None
    assert image.reduction.generators == (R.ambient.gen(1),)
    assert image.reduction.r == 1
    assert image.beta == 1


def test_quotient_filtration_errors(plane_ring):
    """Test that bad slice data is rejected."""
    R = plane_ring
    F = Filtration.adic(R.ideal(["x"]))
    with pytest.raises(FiltrationError, match="positive"):
        quotient_filtration(F, R.ambient.gen(0), 0)
    with pytest.raises(FiltrationError, match="is not in I_1"):
        quotient_filtration(F, R.ambient.gen(1), 1)


def test_quotient_filtration_recomputes_reduction_number(two_planes_ring):
    """Test that the image reduction on A/(a^2) carries its own verified r."""
    F = Filtration.adic(two_planes_ring.maximal_ideal)
    Q = find_reduction(F, 6, 4, seed=0)
    image = quotient_filtration(F, Q.generators[0], 2)
    assert image.reduction is not None
    assert image.reduction.generators == Q.generators[1:]
    bound = image.reduction.verified_up_to
    assert image.reduction.r == reduction_number(image, image.reduction.ideal(image.ring), bound)
    assert image.reduction.r == 2
    assert validate_goodness(image, bound).passed


@pytest.mark.parametrize("fixture", ["embedded_point_ring", "two_planes_ring", "quadric_ring"])
def test_filtration_ideal_of_adic_is_power(fixture, request):
    """Test that the n-th member of adic(m) is the n-fold product of m."""
    R = request.getfixturevalue(fixture)
    F = Filtration.adic(R.maximal_ideal)
    product = R.unit_ideal()
    for n in range(6):
        assert filtration_ideal(F, n) == product
        product = product * R.maximal_ideal
