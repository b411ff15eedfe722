"""
Cross-checks of the line minimizer against brute-force and closed-form references.
"""

# Import package, test suite, and other packages as needed
from mgeo.orthogonality import directional_min
from mgeo.spaces import builtin_space, sphere_point_2d
from mgeo.tests.oracle import GridSpec, grid_min, closed_form_lp_min
import pytest
import numpy as np

def _random_pairs(dim, count, seed):
    rng = np.random.default_rng(seed)
    return [(rng.standard_normal(dim), rng.standard_normal(dim)) for _ in range(count)]

@pytest.mark.parametrize('name, p', [("l1", 1), ("l2", 2), ("linf", np.inf)])
@pytest.mark.parametrize('dim', [2, 3, 5])
def test_closed_form(name, p, dim):
    """Test the minimum against the closed form for p = 1, 2 and infinity"""
    space = builtin_space(name, dim=dim)
    errors = []
    for x, y in _random_pairs(dim, 25, seed=dim):
        result = directional_min(space, x, y)
        _, expected = closed_form_lp_min(p, x, y)
        if abs(result.min_value - expected) > 1e-8 * (1.0 + expected):
            errors.append("x={} y={}: {} vs {}".format(x, y, result.min_value, expected))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_closed_form_euclidean_argmin():
    """Test the Euclidean minimizer, which is unique"""
    space = builtin_space("l2", dim=4)
    for x, y in _random_pairs(4, 10, seed=11):
        lam, _ = closed_form_lp_min(2, x, y)
        assert directional_min(space, x, y).argmin == pytest.approx(lam, abs=1e-6 * (1.0 + abs(lam)))

@pytest.mark.parametrize('name, kwargs', [("stadium", {}), ("quartic_cubic", {}), ("lp", {"p": 3.0}), ("circle", {})])
def test_grid(name, kwargs):
    """Test the minimum against a zooming grid search on planar gauges"""
    space = builtin_space(name, **kwargs)
    grid = GridSpec(-2.5, 2.5)
    errors = []
    for k in range(12):
        x = sphere_point_2d(space, 0.37 + k * np.pi / 6)
        y = sphere_point_2d(space, 1.1 + k * 0.9)
        result = directional_min(space, x, y)
        _, expected = grid_min(space, x, y, grid)
        if abs(result.min_value - expected) > 1e-8:
            errors.append("pair {}: {} vs {}".format(k, result.min_value, expected))
    assert not errors, "errors occured:\n{}".format("\n".join(errors))

def test_flat_interval_contains_grid_minimizer():
    """Test that the grid minimizer falls in the measured flat interval on a flat face"""
    space = builtin_space("linf")
    x, y = [1.0, 0.5], [0.0, 1.0]
    result = directional_min(space, x, y)
    lam, _ = grid_min(space, x, y, GridSpec(-2.5, 2.5))
    assert result.flat_interval[0] - 1e-9 <= lam <= result.flat_interval[1] + 1e-9

@pytest.mark.parametrize('lo, hi, steps, rounds', [(1.0, 1.0, 11, 1), (0.0, 1.0, 1, 1), (0.0, 1.0, 11, -1)])
def test_grid_spec_rejects(lo, hi, steps, rounds):
    """Test the grid parameter checks"""
    with pytest.raises(ValueError):
        GridSpec(lo, hi, steps, rounds)

@pytest.mark.parametrize('p, x, y', [(3, [1.0, 0.0], [0.0, 1.0]), (2, [1.0, 0.0], [0.0, 0.0]), (2, [1.0], [0.0, 1.0])])
def test_closed_form_rejects(p, x, y):
    """Test the closed-form argument checks"""
    with pytest.raises(ValueError):
        closed_form_lp_min(p, x, y)
