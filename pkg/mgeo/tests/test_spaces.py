"""
Unit and regression tests for the mgeo spaces package: norm forms, builtin spaces, kernels and validation.
"""

# Import package, test suite, and other packages as needed
import mgeo.spaces as sp
import pytest
import sys
import numpy as np

stadium = sp.builtin_space("stadium")
hexagon = sp.space(form="polyhedral", functionals=[[1.0, 0.0], [0.5, np.sqrt(3.0) / 2], [-0.5, np.sqrt(3.0) / 2]],
                   name="hexagon")
convex_builtins = ["l1", "l2", "linf", "stadium", "quartic_cubic", "circle"]

def test_spaces_imported():
#    """Sample test, will always pass so long as import statement worked"""
    assert "mgeo.spaces" in sys.modules

@pytest.mark.parametrize('name, v, answer', [
    ("l1", [3.0, -4.0], 7.0),
    ("l2", [3.0, -4.0], 5.0),
    ("linf", [3.0, -4.0], 4.0),
    ("circle", [3.0, -4.0], 5.0),
])
def test_builtin_norm_values(name, v, answer):
    """Test norms of the coordinate spaces and of the circle gauge"""
    assert sp.eval_norm(sp.builtin_space(name), v) == pytest.approx(answer, abs=1e-12)

def test_lp_norm_three_dim(space=sp.builtin_space("lp", p=3, dim=3)):
    """Test a p-norm in three dimensions"""
    assert sp.eval_norm(space, [1.0, 1.0, 1.0]) == pytest.approx(3.0**(1.0 / 3.0), abs=1e-14)

@pytest.mark.parametrize('v, answer', [([0.0, 1.0], 1.0), ([0.5, -1.0], 1.0), ([2.0, 0.0], np.sqrt(2.0)),
                                       ([1.0, 1.0], 1.0), ([0.0, 0.0], 0.0)])
def test_stadium_norm(v, answer, space=stadium):
    """Test the stadium gauge on its flat lines, its caps and at the origin"""
    assert sp.eval_norm(space, v) == pytest.approx(answer, abs=1e-12)

def test_polyhedral_norm(space=hexagon):
    """Test the norm of the regular hexagon"""
    errors = []
    if sp.eval_norm(space, [1.0, 0.0]) != pytest.approx(1.0, abs=1e-14):
        errors.append("(1,0) has norm {}".format(sp.eval_norm(space, [1.0, 0.0])))
    if sp.eval_norm(space, [0.0, 1.0]) != pytest.approx(np.sqrt(3.0) / 2, abs=1e-14):
        errors.append("(0,1) has norm {}".format(sp.eval_norm(space, [0.0, 1.0])))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('name', convex_builtins)
def test_norm_many_matches_norm(name):
    """Test that batched evaluation agrees with single evaluation"""
    space = sp.builtin_space(name)
    V = np.random.default_rng(3).standard_normal((50, 2))
    single = np.array([space.norm(v) for v in V])
    assert np.allclose(space.norm_many(V), single, rtol=1e-12, atol=0.0)

@pytest.mark.parametrize('name', convex_builtins)
def test_sphere_point_is_unit(name):
    """Test that sphere points have norm one"""
    space = sp.builtin_space(name)
    thetas = np.linspace(0.0, 2.0 * np.pi, 37)
    points = sp.sphere_points_2d(space, thetas)
    assert np.allclose(space.norm_many(points), 1.0, atol=1e-12)

@pytest.mark.parametrize('name', convex_builtins)
def test_validate_norm_builtins(name):
    """Test that the convex builtin spaces satisfy the norm axioms"""
    report = sp.validate_norm(sp.builtin_space(name), sample_count=2000)
    failed = [key for key, check in report.checks.items() if not check.passed]
    assert report.passed, "failed checks: {}".format(failed)

def test_validate_norm_star():
    """Test that the non-convex star fails the triangle inequality with a witness"""
    report = sp.validate_norm(sp.builtin_space("star"), sample_count=2000)
    errors = []
    if report.passed:
        errors.append("star passed the norm axioms")
    if report.checks["triangle"].passed or report.checks["triangle"].witness is None:
        errors.append("triangle check: {}".format(report.checks["triangle"]))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('name, answer', [("stadium", True), ("quartic_cubic", True), ("circle", True),
                                          ("star", False)])
def test_validate_gauge_convexity(name, answer):
    """Test the convexity walk of the builtin gauge boundaries"""
    report = sp.validate_gauge_convexity(sp.builtin_space(name).boundary)
    assert report.passed == answer
    if not answer:
        assert len(report.witness_angles) == 3

@pytest.mark.parametrize('kwargs, error', [
    ({"form": "lp", "p": 0.5}, ValueError),
    ({"form": "lp", "p": "two"}, ValueError),
    ({"form": "lp", "p": 2, "dim": 0}, ValueError),
    ({"form": "polyhedral", "functionals": [[1.0, 1.0], [2.0, 2.0]]}, ValueError),
    ({"form": "gauge2d"}, ValueError),
    ({"form": "ellipsoid"}, ImportError),
    ({"p": 2}, ValueError),
])
def test_space_factory_errors(kwargs, error):
    """Test rejection of malformed space definitions"""
    with pytest.raises(error):
        sp.space(**kwargs)

def test_builtin_errors():
    """Test rejection of unknown names and non-planar gauges"""
    with pytest.raises(ValueError):
        sp.builtin_space("ellipse")
    with pytest.raises(ValueError):
        sp.builtin_space("stadium", dim=3)
    with pytest.raises(ValueError):
        sp.builtin_space("lp")

@pytest.mark.parametrize('v', [[1.0, 0.0, 0.0], [np.nan, 1.0], [], "abc"])
def test_eval_norm_rejects_bad_vectors(v, space=sp.builtin_space("l2")):
    """Test dimension and finiteness checks on vectors"""
    with pytest.raises((ValueError, TypeError)):
        sp.eval_norm(space, v)

def test_jit_kernels_match():
    """Test that the Numba kernels agree with the numpy kernels"""
    pytest.importorskip("numba")
    from mgeo.spaces import jit_exts, nojit_exts

    V = np.ascontiguousarray(np.random.default_rng(1).standard_normal((20, 3)))
    F = np.ascontiguousarray(hexagon.functionals)
    errors = []
    for p in [1.0, 1.5, 3.0, np.inf]:
        if not np.allclose(jit_exts.lp_norm_rows(V, p), nojit_exts.lp_norm_rows(V, p), rtol=1e-12):
            errors.append("lp_norm_rows differs for p={}".format(p))
        if jit_exts.lp_norm(V[0], p) != pytest.approx(nojit_exts.lp_norm(V[0], p), rel=1e-12):
            errors.append("lp_norm differs for p={}".format(p))
    W = np.ascontiguousarray(V[:, :2])
    if not np.allclose(jit_exts.polyhedral_norm_rows(W, F), nojit_exts.polyhedral_norm_rows(W, F), rtol=1e-12):
        errors.append("polyhedral_norm_rows differs")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))
