"""
Unit and regression tests for conjugate diameters, the Radon test and the exhaustive pair scan.
"""

# Import package, test suite, and other packages as needed
import mgeo.geometry.planar as pln
from mgeo.spaces import builtin_space
from mgeo.geometry.convexity import strict_convexity_probe
import pytest
import numpy as np

l2 = builtin_space("l2")
linf = builtin_space("linf")

def _has_pair(pairs, a, b, tol=1e-6):
    return any((pln._angle_gap(p.theta_x, a) < tol and pln._angle_gap(p.theta_y, b) < tol) or
               (pln._angle_gap(p.theta_x, b) < tol and pln._angle_gap(p.theta_y, a) < tol) for p in pairs)

def test_diameter_pair_euclidean(space=l2):
    """Test that a Euclidean diameter and its perpendicular are strongly conjugate"""
    pair = pln.diameter_pair(space, 0.3)
    errors = []
    if pair.strength != pln.Strength.STRONGLY_CONJUGATE:
        errors.append("strength {}".format(pair.strength))
    if pair.theta_y != pytest.approx(0.3 + np.pi / 2, abs=1e-7):
        errors.append("theta_y {}".format(pair.theta_y))
    if max(pair.residual_xy, pair.residual_yx) > 1e-8:
        errors.append("residuals {} {}".format(pair.residual_xy, pair.residual_yx))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_merge_pairs(space=l2):
    """Test that pairs repeated up to sign and order are dropped"""
    pairs = [pln.diameter_pair(space, theta) for theta in [0.0, np.pi / 2, np.pi, 0.4]]
    kept = pln.merge_pairs(pairs)
    assert [p.theta_x for p in kept] == pytest.approx([0.0, 0.4])

def test_conjugate_euclidean(space=l2):
    """Test that every Euclidean diameter has a strongly conjugate partner"""
    search = pln.find_conjugate_diameters(space, grid_size=36)
    errors = []
    if not search.all_conjugate or not search.smooth:
        errors.append("flags {} {}".format(search.all_conjugate, search.smooth))
    if len(search.pairs) != 18:
        errors.append("{} pairs after merging".format(len(search.pairs)))
    if any(p.strength != pln.Strength.STRONGLY_CONJUGATE for p in search.pairs):
        errors.append("weak pairs in the Euclidean plane")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_conjugate_max_norm(space=linf):
    """Test the axes as conjugate diameters and the diagonals as strongly conjugate ones"""
    search = pln.find_conjugate_diameters(space, grid_size=36)
    strong = [p for p in search.pairs if p.strength == pln.Strength.STRONGLY_CONJUGATE]
    weak = [p for p in search.pairs if p.strength == pln.Strength.CONJUGATE]
    errors = []
    if search.smooth:
        errors.append("corners of the square were not noticed")
    if not _has_pair(strong, np.pi / 4, 3 * np.pi / 4):
        errors.append("diagonals missing from {}".format([(p.theta_x, p.theta_y) for p in strong]))
    if not _has_pair(weak, 0.0, np.pi / 2):
        errors.append("axes missing from {}".format([(p.theta_x, p.theta_y) for p in weak]))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_conjugate_stadium():
    """Test that the stadium axes are conjugate but not strongly so"""
    search = pln.find_conjugate_diameters(builtin_space("stadium"), grid_size=36)
    first = search.pairs[0]
    errors = []
    if first.theta_x != pytest.approx(0.0) or first.theta_y != pytest.approx(np.pi / 2, abs=1e-7):
        errors.append("first pair at {} {}".format(first.theta_x, first.theta_y))
    if first.strength != pln.Strength.CONJUGATE:
        errors.append("strength {}".format(first.strength))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('name, kwargs', [("lp", {"p": 4.0}), ("lp", {"p": 1.5}), ("l1", {})])
def test_conjugate_exists(name, kwargs):
    """Test that the search finds mutually B-orthogonal diameters in other planes"""
    space = builtin_space(name, **kwargs)
    search = pln.find_conjugate_diameters(space, grid_size=90)
    assert search.pairs and all(max(p.residual_xy, p.residual_yx) <= 1e-6 for p in search.pairs)

def test_conjugate_rejects_dimension():
    """Test the planar requirement"""
    with pytest.raises(ValueError):
        pln.find_conjugate_diameters(builtin_space("l2", dim=3))

def test_radon_euclidean(space=l2):
    """Test that the circle is a Radon curve without caveat"""
    result = pln.is_radon(space, grid_size=36)
    assert result.radon and not result.caveat and result.max_residual < 1e-8

def test_radon_l4():
    """Test that the 4-norm plane is not a Radon curve and the witness is asymmetric"""
    space = builtin_space("lp", p=4.0)
    result = pln.is_radon(space, grid_size=36)
    x, y = result.witness_pair
    errors = []
    if result.radon or result.max_residual < 1e-3:
        errors.append("verdict {} with residual {}".format(result.radon, result.max_residual))
    if result.caveat:
        errors.append("smooth sphere reported with caveat")
    if np.linalg.norm(x) == 0.0 or np.linalg.norm(y) == 0.0:
        errors.append("missing witness")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_radon_caveat(space=linf):
    """Test that corners of the square raise the midpoint-rule caveat"""
    assert pln.is_radon(space, grid_size=36).caveat

def test_pair_scan_euclidean(space=l2):
    """Test the scan of the Euclidean plane at one degree"""
    scan = pln.exhaustive_pair_scan(space, angular_resolution=1.0)
    errors = []
    if scan.grid_size != 180 or scan.near_hits != 90:
        errors.append("grid {} near-hits {}".format(scan.grid_size, scan.near_hits))
    if len(scan.strong_pairs) != 90:
        errors.append("{} strong pairs".format(len(scan.strong_pairs)))
    if scan.covered_fraction != pytest.approx(1.0):
        errors.append("covered fraction {}".format(scan.covered_fraction))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_pair_scan_max_norm(space=linf):
    """Test that the scan of the square finds the diagonals"""
    scan = pln.exhaustive_pair_scan(space, angular_resolution=1.0)
    assert _has_pair(scan.strong_pairs, np.pi / 4, 3 * np.pi / 4) and scan.covered_fraction < 1.0

def test_pair_scan_quartic_cubic():
    """Test that the quartic/cubic sphere has conjugate but no strongly conjugate diameters, and that the scan finds
    every pair of the targeted search"""
    space = builtin_space("quartic_cubic")
    scan = pln.exhaustive_pair_scan(space, angular_resolution=0.25)
    search = pln.find_conjugate_diameters(space)
    errors = []
    if not scan.conjugate_pairs or scan.strong_pairs:
        errors.append("{} conjugate and {} strong pairs".format(len(scan.conjugate_pairs), len(scan.strong_pairs)))
    if any(p.strength == pln.Strength.STRONGLY_CONJUGATE for p in search.pairs):
        errors.append("targeted search found a strongly conjugate pair")
    for p in search.pairs:
        if not _has_pair(scan.conjugate_pairs, p.theta_x, p.theta_y, tol=1e-5):
            errors.append("pair ({:.6g}, {:.6g}) missed by the scan".format(p.theta_x, p.theta_y))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_radon_and_coverage_l4():
    """Test that a plane without the Radon property leaves grid angles uncovered by strongly conjugate pairs"""
    space = builtin_space("lp", p=4.0)
    scan = pln.exhaustive_pair_scan(space, angular_resolution=1.0)
    errors = []
    if pln.is_radon(space, grid_size=36).radon:
        errors.append("4-norm plane reported Radon")
    if not scan.covered_fraction < 1.0:
        errors.append("covered fraction {}".format(scan.covered_fraction))
    if not _has_pair(scan.strong_pairs, 0.0, np.pi / 2):
        errors.append("axes not strongly conjugate")
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('resolution', [0.0, 1.5])
def test_pair_scan_resolution(resolution, space=l2):
    """Test the range check of the angular resolution"""
    with pytest.raises(ValueError):
        pln.exhaustive_pair_scan(space, angular_resolution=resolution)

def test_generalized_conjugate():
    """Test pairwise conjugacy of three diameters"""
    space = builtin_space("l2", dim=3)
    good = pln.generalized_conjugate_check(space, np.eye(3))
    bad = pln.generalized_conjugate_check(space, [[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    errors = []
    if not good.verdict:
        errors.append("standard diameters failed at {}".format(good.failing_pair))
    if bad.verdict or bad.failing_pair != (0, 1):
        errors.append("skew diameters {} {}".format(bad.verdict, bad.failing_pair))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

@pytest.mark.parametrize('diameters', [[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]], [[1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [0.0, 0.0, 1.0]]])
def test_generalized_conjugate_rejects(diameters):
    """Test rejection of too few and of parallel diameters"""
    with pytest.raises(ValueError):
        pln.generalized_conjugate_check(builtin_space("l2", dim=3), diameters)

def test_crosscheck_euclidean(space=l2):
    """Test that strongly conjugate pairs are exactly the strongly orthonormal bases"""
    convexity = strict_convexity_probe(space, num_samples=500, modulus_samples=36)
    result = pln.conjugate_basis_crosscheck(space, grid_size=36, convexity=convexity)
    errors = []
    if result.skipped or not result.hypothesis_verified:
        errors.append("cross-check skipped")
    if result.disagreements:
        errors.append("disagreements {}".format(result.disagreements))
    if result.agreements != 21:
        errors.append("{} agreements".format(result.agreements))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_crosscheck_skipped(space=linf):
    """Test that a plane with a flat segment is skipped"""
    convexity = strict_convexity_probe(space, num_samples=500, modulus_samples=36)
    result = pln.conjugate_basis_crosscheck(space, convexity=convexity)
    assert result.skipped and not result.hypothesis_verified
