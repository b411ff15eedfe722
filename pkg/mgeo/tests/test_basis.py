"""
Unit and regression tests for strongly orthonormal bases and the max S_i criterion.
"""

# Import package, test suite, and other packages as needed
import mgeo.geometry.basis as bas
from mgeo.spaces import builtin_space
from mgeo.geometry.convexity import strict_convexity_probe
from mgeo.tests.oracle import sweep_max_coefficient
import pytest
import numpy as np

l2 = builtin_space("l2")
linf = builtin_space("linf")
l1 = builtin_space("l1")

skew = [[1.0, 0.0], [np.sqrt(0.5), np.sqrt(0.5)]]

def test_basis_functionals(space=l2):
    """Test that the coordinate functionals recover the coefficients"""
    basis = bas.Basis(space, skew)
    w = np.array([0.3, -1.2])
    coefficients = basis.coefficients(w)
    errors = []
    if not np.allclose(coefficients @ basis.vectors, w):
        errors.append("coefficients {} do not rebuild w".format(coefficients))
    if not np.allclose([basis.functional(i) @ basis[j] for i in range(2) for j in range(2)], [1.0, 0.0, 0.0, 1.0]):
        errors.append("functionals are not dual to the basis")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('vectors', [[[1.0, 0.0]], [[1.0, 0.0], [1.0, 0.0]], [[2.0, 0.0], [0.0, 1.0]], [[0.0, 0.0], [0.0, 1.0]]])
def test_basis_rejects(vectors, space=l2):
    """Test rejection of wrong shapes, dependent vectors, non-unit vectors and the zero vector"""
    with pytest.raises(ValueError):
        bas.Basis(space, vectors)

def test_basis_normalize(space=linf):
    """Test rescaling onto the unit sphere"""
    basis = bas.Basis(space, [[2.0, 0.0], [1.0, 3.0]], normalize=True)
    assert np.allclose(space.norm_many(basis.vectors), 1.0)

@pytest.mark.parametrize('i', [2, -1, 1.0])
def test_basis_index(i, space=l2):
    """Test rejection of bad basis indices"""
    with pytest.raises(ValueError):
        bas.Basis.from_standard(space).functional(i)

@pytest.mark.parametrize('name', ["l2", "l1", "linf"])
def test_max_coefficient_standard(name):
    """Test that the standard basis has max S_i = 1 in the classical planes"""
    space = builtin_space(name)
    basis = bas.Basis.from_standard(space)
    values = [bas.max_coefficient(space, basis, i).value for i in range(2)]
    assert values == pytest.approx([1.0, 1.0], abs=1e-9)

def test_max_coefficient_skew(space=l2):
    """Test max S_0 = sqrt(2) for the skew Euclidean basis"""
    result = bas.max_coefficient(space, bas.Basis(space, skew), 0)
    errors = []
    if result.value != pytest.approx(np.sqrt(2.0), abs=1e-9):
        errors.append("value {}".format(result.value))
    if not np.allclose(result.maximizer, [np.sqrt(0.5), -np.sqrt(0.5)], atol=1e-5):
        errors.append("maximizer {}".format(result.maximizer))
    if not result.converged:
        errors.append("not converged")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('name, kwargs', [("lp", {"p": 4.0}), ("stadium", {}), ("quartic_cubic", {}), ("l1", {})])
def test_max_coefficient_against_sweep(name, kwargs):
    """Test the optimizer against a brute-force angle sweep"""
    space = builtin_space(name, **kwargs)
    basis = bas.Basis(space, [[1.0, 0.2], [-0.3, 1.0]], normalize=True)
    for i in range(2):
        expected = sweep_max_coefficient(space, basis.functional(i))
        assert bas.max_coefficient(space, basis, i).value == pytest.approx(expected, abs=1e-7)

@pytest.mark.parametrize('signs', [(-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)])
def test_max_coefficient_sign_invariant(signs):
    """Test that re-signing basis vectors leaves every max S_i unchanged"""
    space = builtin_space("lp", p=4.0)
    vectors = np.array([[1.0, 0.2], [-0.3, 1.0]])
    basis = bas.Basis(space, vectors, normalize=True)
    flipped = bas.Basis(space, np.array(signs)[:, None] * vectors, normalize=True)
    errors = []
    for i in range(2):
        value, flipped_value = bas.max_coefficient(space, basis, i).value, bas.max_coefficient(space, flipped, i).value
        if flipped_value != pytest.approx(value, abs=1e-8):
            errors.append("max S_{} is {} after re-signing, {} before".format(i, flipped_value, value))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_max_coefficient_three_dimensions():
    """Test the ascent without the planar sweep"""
    space = builtin_space("l2", dim=3)
    basis = bas.Basis(space, [[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]], normalize=True)
    result = bas.max_coefficient(space, basis, 0)
    assert result.value == pytest.approx(np.linalg.norm(basis.functional(0)), abs=1e-7)

def test_uniqueness(space=linf):
    """Test that max S_0 is attained on a whole face of the max-norm sphere and at a single point of the circle"""
    basis = bas.Basis.from_standard(space)
    flat = bas.uniqueness_probe(space, basis, 0, 1.0, [1.0, 0.0])
    basis2 = bas.Basis.from_standard(l2)
    round_ = bas.uniqueness_probe(l2, basis2, 0, 1.0, [1.0, 0.0])
    errors = []
    if flat.unique or abs(flat.witness[0] - 1.0) > 1e-7:
        errors.append("max norm {}".format(flat))
    if not round_.unique:
        errors.append("Euclidean second maximizer {}".format(round_.witness))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('name, expected', [("l2", True), ("l1", True), ("linf", False)])
def test_direct_standard_basis(name, expected):
    """Test the definition on standard bases: the max norm has flat directions at e_1"""
    space = builtin_space(name)
    result = bas.strongly_orthonormal_direct(space, bas.Basis.from_standard(space))
    assert result.verdict is expected

def test_direct_skew_witness(space=l2):
    """Test that a skew basis fails with a witness below 1"""
    result = bas.strongly_orthonormal_direct(space, bas.Basis(space, skew))
    errors = []
    if result.verdict:
        errors.append("skew basis passed")
    elif result.witness["value"] != pytest.approx(np.sqrt(0.5), abs=1e-6) or result.witness["relation"] != "NotOrthogonal":
        errors.append("witness {}".format(result.witness))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_direct_three_dimensions():
    """Test the definition with random combinations in three dimensions"""
    space = builtin_space("lp", p=3.0, dim=3)
    assert bas.strongly_orthonormal_direct(space, bas.Basis.from_standard(space)).verdict

def test_criterion_strictly_convex(space=l2):
    """Test that the criterion and the definition agree in the Euclidean plane"""
    convexity = strict_convexity_probe(space, num_samples=500, modulus_samples=36)
    good = bas.basis_report(space, bas.Basis.from_standard(space), convexity=convexity, num_samples=500)
    bad = bas.basis_report(space, bas.Basis(space, skew), convexity=convexity, num_samples=500)
    errors = []
    if not (good.verdict_direct and good.verdict_criterion and good.agreement and good.hypothesis_verified):
        errors.append("standard basis {}".format(good))
    if bad.verdict_direct or bad.verdict_criterion or not bad.agreement:
        errors.append("skew basis {}".format(bad))
    if [r.index for r in good.records] != [0, 1] or not all(r.unique for r in good.records):
        errors.append("records {}".format(good.records))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_criterion_only_necessary(space=linf):
    """Test that without strict convexity max S_i = 1 does not give strong orthonormality"""
    report = bas.basis_report(space, bas.Basis.from_standard(space), num_samples=500)
    errors = []
    if report.verdict_direct or not report.verdict_criterion or report.agreement:
        errors.append("verdicts {} {}".format(report.verdict_direct, report.verdict_criterion))
    if report.hypothesis_verified:
        errors.append("flat segment of the max norm was not found")
    if report.records[0].unique or report.records[0].second_maximizer is None:
        errors.append("maximizer of S_0 reported unique")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_criterion_l1(space=l1):
    """Test that strong orthonormality implies max S_i = 1 in a space that is not strictly convex"""
    report = bas.basis_report(space, bas.Basis.from_standard(space), num_samples=500)
    assert report.verdict_direct and report.verdict_criterion and not report.hypothesis_verified
