"""
Unit and regression tests for the mgeo orthogonality package.

The functions tested are directional_min, golden_section, is_birkhoff, is_strongly_birkhoff, classify, residual,
companion_arc_2d and orthogonal_companion_2d.
"""

# Import package, test suite, and other packages as needed
import mgeo.orthogonality as orth
from mgeo.orthogonality.minimize import sublevel_edge, aitken_limit
from mgeo.spaces import builtin_space, sphere_point_2d
from mgeo.tests.oracle import lp_companion
import pytest
import numpy as np

linf = builtin_space("linf")
l2 = builtin_space("l2")
l1 = builtin_space("l1")

def test_golden_section_quadratic():
    """Test golden-section search on a parabola"""
    result = orth.golden_section(lambda t: (t - 0.3)**2, -2.0, 2.0, xtol=1e-10)
    assert result.x == pytest.approx(0.3, abs=1e-8)

def test_sublevel_edge():
    """Test bisection for the edge of the set {|t| <= 1}"""
    edge, nfev = sublevel_edge(lambda t: abs(t), 0.0, 3.0, 1.0)
    assert edge == pytest.approx(1.0, abs=1e-12) and nfev > 0

def test_aitken_limit():
    """Test extrapolation of geometric sequences and the collapse onto the known minimizer"""
    errors = []
    limit = aitken_limit(0.5 + 0.2, 0.5 + 0.2 * 0.9, 0.5 + 0.2 * 0.81, 0.0)
    if limit != pytest.approx(0.5, abs=1e-12):
        errors.append("geometric limit {} is not 0.5".format(limit))
    if aitken_limit(-0.9, -0.7, -0.02, 0.0) != 0.0:
        errors.append("accelerating edges did not collapse")
    if aitken_limit(0.3, 0.2, 0.15, 0.12) != 0.12:
        errors.append("limit passed the minimizer")
    if aitken_limit(1.0, 1.0, 1.0, 0.0) != 1.0:
        errors.append("constant edges moved")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('p', [14.0, 20.0, 50.0, 100.0])
def test_high_p_axis_pair_strongly_birkhoff(p):
    """Test that (1,0) is strongly orthogonal to (0,1) for large p, where the norm grows like |l|^p"""
    space = builtin_space("lp", p=p)
    verdict = orth.classify(space, [1.0, 0.0], [0.0, 1.0])
    errors = []
    if verdict.relation != orth.Relation.STRONGLY_BIRKHOFF:
        errors.append("relation {} with witness {}".format(verdict.relation.value, verdict.witness))
    lo, hi = verdict.min_result.limit_interval
    if hi - lo > 1e-2:
        errors.append("extrapolated minimizer set [{}, {}]".format(lo, hi))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_limit_interval_of_segment(space=linf):
    """Test that a segment of minimizers keeps its width after extrapolation"""
    result = orth.directional_min(space, [1.0, 0.0], [0.0, 1.0])
    lo, hi = result.limit_interval
    assert lo == pytest.approx(-1.0, abs=1e-6) and hi == pytest.approx(1.0, abs=1e-6)

def test_directional_min_linf_flat(space=linf):
    """Test the flat minimizer interval of ||(1,1) + l(-1,0)|| in the max norm"""
    result = orth.directional_min(space, [1.0, 1.0], [-1.0, 0.0])
    errors = []
    if result.min_value != pytest.approx(1.0, abs=1e-12):
        errors.append("min_value {} is not 1".format(result.min_value))
    if result.flat_interval[0] != pytest.approx(0.0, abs=1e-6) or result.flat_interval[1] != pytest.approx(2.0,
                                                                                                          abs=1e-6):
        errors.append("flat_interval {} is not [0, 2]".format(result.flat_interval))
    if result.isolated:
        errors.append("minimizer reported isolated")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_directional_min_euclidean(space=l2):
    """Test the minimizer of ||x + l y|| against the projection formula"""
    x, y = np.array([1.0, 0.0]), np.array([1.0, 1.0])
    result = orth.directional_min(space, x, y)
    errors = []
    if result.argmin != pytest.approx(-0.5, abs=1e-7):
        errors.append("argmin {} is not -1/2".format(result.argmin))
    if result.min_value != pytest.approx(1.0 / np.sqrt(2.0), abs=1e-12):
        errors.append("min_value {} is not 1/sqrt(2)".format(result.min_value))
    if not result.isolated:
        errors.append("minimizer not isolated")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('a, b', [(1.0, 1.0), (1e-3, 1e3), (1e4, 2.0), (7.5, 1e-4)])
def test_classify_scale_invariant(a, b, space=linf):
    """Test that rescaling x and y leaves the relation unchanged"""
    x, y = np.array([1.0, 1.0]), np.array([-1.0, 0.0])
    verdict = orth.classify(space, a * x, b * y)
    assert verdict.relation == orth.Relation.BIRKHOFF_ONLY

def test_directional_min_rejects_zero(space=l2):
    """Test that the zero vector is rejected"""
    with pytest.raises(ValueError):
        orth.directional_min(space, [0.0, 0.0], [1.0, 0.0])

@pytest.mark.parametrize('space, x, y, relation', [
    (linf, [1.0, 1.0], [-1.0, 0.0], orth.Relation.BIRKHOFF_ONLY),
    (linf, [1.0, 0.0], [0.0, 1.0], orth.Relation.BIRKHOFF_ONLY),
    (l2, [1.0, 0.0], [0.0, 1.0], orth.Relation.STRONGLY_BIRKHOFF),
    (l2, [1.0, 0.0], [1.0, 0.0], orth.Relation.NOT_ORTHOGONAL),
    (l1, [1.0, 0.0], [0.0, 1.0], orth.Relation.STRONGLY_BIRKHOFF),
    (l1, [0.5, 0.5], [-0.5, 0.5], orth.Relation.BIRKHOFF_ONLY),
])
def test_classify(space, x, y, relation):
    """Test classification of reference pairs"""
    assert orth.classify(space, x, y).relation == relation

def test_birkhoff_only_witness(space=linf):
    """Test the witness and flat interval of (1,0) against (0,1) in the max norm"""
    verdict = orth.classify(space, [1.0, 0.0], [0.0, 1.0])
    errors = []
    lo, hi = verdict.min_result.flat_interval
    if lo != pytest.approx(-1.0, abs=1e-6) or hi != pytest.approx(1.0, abs=1e-6):
        errors.append("flat_interval {} is not [-1, 1]".format(verdict.min_result.flat_interval))
    if verdict.witness != pytest.approx(0.5, abs=1e-6):
        errors.append("witness {} is not 1/2".format(verdict.witness))
    if space.norm(np.array([1.0, verdict.witness])) > 1.0 + 1e-9:
        errors.append("witness does not attain the minimum")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_not_orthogonal_witness(space=l2):
    """Test that the witness of a non-orthogonal pair lowers the norm"""
    verdict = orth.classify(space, [1.0, 0.0], [1.0, 1.0])
    assert space.norm(np.array([1.0, 0.0]) + verdict.witness * np.array([1.0, 1.0])) < 1.0 - 1e-9

def test_predicates(space=linf):
    """Test the boolean predicates on the max norm example pair"""
    x, y = [1.0, 1.0], [-1.0, 0.0]
    assert orth.is_birkhoff(space, x, y) and not orth.is_strongly_birkhoff(space, x, y)

@pytest.mark.parametrize('p', [1.5, 2.0, 3.0, 4.0, 20.0])
def test_lp_pairs_strongly_birkhoff(p, num_pairs=1000):
    """Test that exact B-orthogonal pairs of strictly convex p-norm planes are strongly orthogonal"""
    space = builtin_space("lp", p=p)
    wrong = []
    for theta in np.arange(num_pairs) * 2.0 * np.pi / num_pairs:
        x = sphere_point_2d(space, theta)
        y = lp_companion(p, x)
        relation = orth.classify(space, x, y).relation
        if relation != orth.Relation.STRONGLY_BIRKHOFF:
            wrong.append("theta {:.6g}: {}".format(theta, relation.value))
    assert not wrong, "pairs not strongly orthogonal:\n{}".format("\n".join(wrong))

@pytest.mark.parametrize('name', ["linf", "l1"])
def test_polyhedral_planes_have_birkhoff_only_pairs(name, num_pairs=36):
    """Test that companions in the max and sum norms include pairs that are not strongly orthogonal"""
    space = builtin_space(name)
    relations = []
    for theta in np.arange(num_pairs) * 2.0 * np.pi / num_pairs:
        x = sphere_point_2d(space, theta)
        relations.append(orth.classify(space, x, orth.orthogonal_companion_2d(space, x)).relation)
    errors = []
    if orth.Relation.NOT_ORTHOGONAL in relations:
        errors.append("a companion is not B-orthogonal")
    if orth.Relation.BIRKHOFF_ONLY not in relations:
        errors.append("no BirkhoffOnly pair")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_residual(space=l2):
    """Test the signed distance from zero to the minimizer"""
    result = orth.directional_min(space, [1.0, 0.0], [1.0, 1.0])
    errors = []
    if orth.residual(result) != pytest.approx(-0.5, abs=1e-5):
        errors.append("residual {} is not -1/2".format(orth.residual(result)))
    if orth.residual(orth.directional_min(space, [1.0, 0.0], [0.0, 1.0])) != 0.0:
        errors.append("residual of an orthogonal pair is not 0")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_companion_arc_euclidean(space=l2):
    """Test that the companion of (1,0) in the Euclidean plane is (0,1)"""
    arc = orth.companion_arc_2d(space, [1.0, 0.0])
    errors = []
    if arc.mid != pytest.approx(np.pi / 2, abs=1e-6):
        errors.append("midpoint {} is not pi/2".format(arc.mid))
    if not arc.smooth:
        errors.append("arc of width {} reported not smooth".format(arc.width))
    if not np.allclose(orth.orthogonal_companion_2d(space, [2.0, 0.0]), [0.0, 1.0], atol=1e-6):
        errors.append("companion is {}".format(orth.orthogonal_companion_2d(space, [2.0, 0.0])))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_companion_arc_corner(space=linf):
    """Test the companion arc at the corner (1,1) of the max norm sphere"""
    arc = orth.companion_arc_2d(space, [1.0, 1.0])
    errors = []
    if arc.lo != pytest.approx(np.pi / 2, abs=1e-6) or arc.hi != pytest.approx(np.pi, abs=1e-6):
        errors.append("arc [{}, {}] is not [pi/2, pi]".format(arc.lo, arc.hi))
    if arc.smooth:
        errors.append("corner reported smooth")
    if not np.allclose(orth.orthogonal_companion_2d(space, [1.0, 1.0]), [-1.0, 1.0], atol=1e-6):
        errors.append("companion is {}".format(orth.orthogonal_companion_2d(space, [1.0, 1.0])))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_companion_requires_plane():
    """Test that companions are only defined in the plane"""
    with pytest.raises(ValueError):
        orth.companion_arc_2d(builtin_space("l2", dim=3), [1.0, 0.0, 0.0])
