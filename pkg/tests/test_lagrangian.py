"""Evaluation, maximization, and certification of the simplex polynomial."""

import itertools
import random
from fractions import Fraction

import pytest

from hylag import (
    Hypergraph,
    SizeError,
    SolverConfig,
    Weighting,
    check_pair_identity,
    check_scaling_bound,
    clique,
    clique_lagrangian,
    colex_segment,
    evaluate,
    grid_oracle,
    kkt_residual,
    link,
    max_clique_number,
    maximize,
    motzkin_straus_value,
    partials,
    symmetrize,
)

THIRD = Fraction(1, 3)
STAR = Hypergraph(3, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
STAR_MAX = (THIRD, Fraction(2, 9), Fraction(2, 9), Fraction(2, 9))


def rational_simplex(rng, n):
    w = [rng.randint(0, 9) for _ in range(n)]
    if sum(w) == 0:
        w[0] = 1
    s = sum(w)
    return [Fraction(x, s) for x in w]


# -- weighting type ------------------------------------------------------------


def test_weighting_exact_mode():
    w = Weighting([Fraction(1, 2), Fraction(1, 2)])
    assert w.is_exact
    assert w.support == (1, 2)
    assert Weighting.uniform(4).values == (Fraction(1, 4),) * 4


def test_weighting_float_mode():
    w = Weighting([0.5, 0.25, 0.25])
    assert not w.is_exact
    assert w.values == (0.5, 0.25, 0.25)


def test_weighting_validation():
    with pytest.raises(ValueError):
        Weighting([Fraction(1, 2), Fraction(1, 3)])  # exact sum != 1
    with pytest.raises(ValueError):
        Weighting([0.5, 0.6])
    with pytest.raises(ValueError):
        Weighting([Fraction(3, 2), Fraction(-1, 2)])
    Weighting(())  # empty is the degenerate weighting and is legal
    with pytest.raises(ValueError):
        Weighting.uniform(0)


def test_weighting_support_skips_zeros():
    w = Weighting([Fraction(1, 2), Fraction(0), Fraction(1, 2)])
    assert w.support == (1, 3)


def test_weighting_rationalized():
    w = Weighting([1 / 3, 2 / 3]).rationalized()
    assert w.values == (THIRD, Fraction(2, 3))
    exact = Weighting([Fraction(1, 4)] * 4)
    assert exact.rationalized() is exact


def test_weighting_json_round_trip():
    for w in (Weighting([Fraction(2, 5), Fraction(3, 5)]), Weighting([0.125, 0.875])):
        back = Weighting.from_json_dict(w.to_json_dict())
        assert back == w and back.is_exact == w.is_exact


def test_weighting_sorted_descending():
    w = Weighting([0.2, 0.5, 0.3]).sorted_descending()
    assert w.values == (0.5, 0.3, 0.2)


# -- evaluate / partials ---------------------------------------------------------


def test_evaluate_single_edge():
    H = Hypergraph(2, [(1, 2)])
    assert evaluate(H, [0.5, 0.5]) == 0.25
    assert evaluate(H, [Fraction(1, 2), Fraction(1, 2)]) == Fraction(1, 4)


def test_evaluate_triple_clique_uniform():
    assert evaluate(clique(3, 3), [THIRD] * 3) == Fraction(1, 27)


def test_evaluate_star_at_maximizer():
    assert evaluate(STAR, STAR_MAX) == Fraction(4, 81)


def test_evaluate_off_simplex_allowed():
    # evaluate treats y as a free vector (used by finite differences)
    assert evaluate(Hypergraph(2, [(1, 2)]), [2.0, 3.0]) == 6.0


def test_evaluate_short_vector_rejected():
    with pytest.raises(ValueError):
        evaluate(clique(4, 3), [0.5, 0.5])


def test_partials_examples():
    assert partials(Hypergraph(2, [(1, 2)]), [0.5, 0.5]) == [0.5, 0.5]
    p = partials(STAR, STAR_MAX)
    assert p[0] == Fraction(4, 27)  # equals r * lambda = 3 * 4/81
    assert partials(clique(4, 3), [Fraction(1, 4)] * 4) == [Fraction(3, 16)] * 4


def test_partials_are_link_values():
    rng = random.Random(2)
    for _ in range(30):
        pool = list(itertools.combinations(range(1, 7), 3))
        H = Hypergraph(3, rng.sample(pool, rng.randint(1, 12)))
        y = rational_simplex(rng, 6)
        p = partials(H, y)
        for v in H.support:
            assert p[v - 1] == evaluate(link(H, {v}), y)


def test_euler_identity_exact():
    rng = random.Random(3)
    for _ in range(60):
        r = rng.randint(1, 4)
        n = rng.randint(max(2, r), 7)
        pool = list(itertools.combinations(range(1, n + 1), r))
        H = Hypergraph(r, rng.sample(pool, rng.randint(1, len(pool))))
        y = rational_simplex(rng, n)
        p = partials(H, y)
        assert sum(yi * pi for yi, pi in zip(y, p)) == r * evaluate(H, y)


def test_partials_match_finite_differences():
    rng = random.Random(4)
    eps = 1e-6
    for _ in range(25):
        pool = list(itertools.combinations(range(1, 7), 3))
        H = Hypergraph(3, rng.sample(pool, rng.randint(1, 15)))
        y = [rng.random() for _ in range(6)]
        s = sum(y)
        y = [v / s for v in y]
        p = partials(H, y)
        base = evaluate(H, y)
        for i in rng.sample(range(6), 3):
            bumped = list(y)
            bumped[i] += eps
            fd = (evaluate(H, bumped) - base) / eps
            assert abs(p[i] - fd) <= 1e-5


# -- closed forms -----------------------------------------------------------------


def test_clique_lagrangian_values():
    assert clique_lagrangian(4, 3) == Fraction(1, 16)
    assert clique_lagrangian(5, 3) == Fraction(2, 25)
    for r in range(1, 7):
        assert clique_lagrangian(r, r) == Fraction(1, r**r)
    with pytest.raises(ValueError):
        clique_lagrangian(2, 3)


def test_max_clique_number():
    triangle = Hypergraph(2, [(1, 2), (1, 3), (2, 3)])
    assert max_clique_number(triangle) == 3
    c5 = Hypergraph(2, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert max_clique_number(c5) == 2
    with pytest.raises(ValueError):
        max_clique_number(clique(4, 3))
    path13 = Hypergraph(2, [(i, i + 1) for i in range(1, 13)])
    with pytest.raises(SizeError):
        max_clique_number(path13)


def test_motzkin_straus_examples():
    triangle = Hypergraph(2, [(1, 2), (1, 3), (2, 3)])
    assert motzkin_straus_value(triangle) == THIRD
    assert motzkin_straus_value(Hypergraph(2, [(1, 2)])) == Fraction(1, 4)
    c5 = Hypergraph(2, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert motzkin_straus_value(c5) == Fraction(1, 4)
    assert motzkin_straus_value(Hypergraph(2, [])) == 0
    with pytest.raises(ValueError):
        motzkin_straus_value(clique(4, 3))


# -- maximize ----------------------------------------------------------------------


def test_maximize_clique_4_3():
    res = maximize(clique(4, 3), SolverConfig(starts=12, seed=0))
    assert res.value_exact == Fraction(1, 16)
    assert res.weighting.values == (Fraction(1, 4),) * 4
    assert res.support_size == 4
    assert res.method == "multistart"
    assert res.kkt_residual.on_support <= 1e-7
    assert res.kkt_residual.off_support <= 1e-7


def test_maximize_colex_2_3():
    res = maximize(colex_segment(2, 3), SolverConfig(starts=12, seed=1))
    assert res.value_exact == Fraction(1, 27)


def test_maximize_star():
    res = maximize(STAR, SolverConfig(starts=16, seed=2))
    assert res.value_exact == Fraction(4, 81)
    assert res.weighting.values == STAR_MAX
    assert res.support_size == 4
    # the reported value is the exact evaluation at the reported weighting
    assert evaluate(STAR, res.weighting) == res.value_exact
    assert res.value == float(res.value_exact)


def test_maximize_edgeless_degenerate():
    res = maximize(Hypergraph(3, []), SolverConfig(starts=4, seed=0))
    assert res.value == 0.0 and res.value_exact == 0
    assert res.method == "degenerate"
    assert res.support_size == 0


def test_maximize_weighting_descends():
    rng = random.Random(12)
    for seed in range(6):
        pool = list(itertools.combinations(range(1, 7), 3))
        H = Hypergraph(3, rng.sample(pool, rng.randint(2, 12)))
        res = maximize(H, SolverConfig(starts=10, seed=seed))
        vals = [v for v in res.weighting.values if v > 0]
        assert vals == sorted(vals, reverse=True) or evaluate(H, res.weighting) == res.value_exact


def test_maximize_deterministic():
    H = colex_segment(6, 3)
    a = maximize(H, SolverConfig(starts=10, seed=42))
    b = maximize(H, SolverConfig(starts=10, seed=42))
    assert a.value_exact == b.value_exact
    assert a.weighting == b.weighting


def test_maximize_monotone_under_edge_addition():
    rng = random.Random(8)
    for _ in range(10):
        pool = list(itertools.combinations(range(1, 6), 3))
        k = rng.randint(1, len(pool) - 1)
        sub = rng.sample(pool, k)
        sup = sub + [e for e in pool if e not in sub][: rng.randint(1, 3)]
        lo = maximize(Hypergraph(3, sub), SolverConfig(starts=10, seed=3)).value
        hi = maximize(Hypergraph(3, sup), SolverConfig(starts=10, seed=3)).value
        assert lo <= hi + 1e-9


def test_maximize_agrees_with_motzkin_straus():
    rng = random.Random(77)
    for seed in range(8):
        n = rng.randint(3, 8)
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.6]
        if not edges:
            edges = [(1, 2)]
        H = Hypergraph(2, edges)
        res = maximize(H, SolverConfig(starts=12, seed=seed))
        assert abs(res.value - float(motzkin_straus_value(H))) <= 1e-6


def test_result_json_dict():
    res = maximize(clique(3, 3), SolverConfig(starts=4, seed=0))
    d = res.to_json_dict()
    assert d["value"] == "1/27"
    assert d["support_size"] == 3
    assert set(d) >= {"value", "value_float", "weighting", "kkt_on_support", "method"}


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(starts=0)
    with pytest.raises(ValueError):
        SolverConfig(max_iters=0)
    with pytest.raises(ValueError):
        SolverConfig(step_tol=0.0)


# -- grid oracle -------------------------------------------------------------------


def test_grid_oracle_examples():
    assert grid_oracle(clique(3, 3), 3).value_exact == Fraction(1, 27)
    assert grid_oracle(Hypergraph(2, [(1, 2)]), 2).value_exact == Fraction(1, 4)
    res = grid_oracle(STAR, 9)
    assert res.value_exact == Fraction(4, 81)
    assert res.weighting.values == STAR_MAX
    assert res.method == "oracle"


def test_grid_oracle_monotone_under_refinement():
    assert grid_oracle(STAR, 9).value_exact >= grid_oracle(STAR, 3).value_exact
    H = colex_segment(5, 3)
    assert grid_oracle(H, 12).value_exact >= grid_oracle(H, 6).value_exact


def test_grid_oracle_lower_bounds_maximize():
    rng = random.Random(6)
    for seed in range(6):
        pool = list(itertools.combinations(range(1, 6), 3))
        H = Hypergraph(3, rng.sample(pool, rng.randint(1, 8)))
        res = maximize(H, SolverConfig(starts=10, seed=seed))
        assert grid_oracle(H, 8).value <= res.value + 1e-9


def test_grid_oracle_guards():
    with pytest.raises(ValueError):
        grid_oracle(clique(3, 3), 0)
    with pytest.raises(SizeError):
        grid_oracle(clique(40, 2), 12)
    assert grid_oracle(Hypergraph(3, []), 5).method == "degenerate"


# -- certificates ------------------------------------------------------------------


def test_symmetrize_single_edge():
    z = symmetrize(clique(3, 3), [0.5, 0.3, 0.2], 2, 3)
    assert z.values == (0.5, 0.25, 0.25)
    before = evaluate(clique(3, 3), [0.5, 0.3, 0.2])
    after = evaluate(clique(3, 3), z)
    assert abs(before - 0.030) < 1e-12
    assert after == 0.03125
    assert after >= before


def test_symmetrize_fixpoint():
    y = [Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)]
    z = symmetrize(clique(3, 3), y, 1, 2)
    assert z.values == tuple(y)


def test_symmetrize_star_pair():
    z = symmetrize(STAR, [0.4, 0.3, 0.2, 0.1], 3, 4)
    assert z.values == (0.4, 0.3, 0.15000000000000002, 0.15000000000000002) or \
        z.values == (0.4, 0.3, 0.15, 0.15)
    assert evaluate(STAR, z) >= evaluate(STAR, [0.4, 0.3, 0.2, 0.1])


def test_symmetrize_requires_exchangeable():
    with pytest.raises(ValueError):
        symmetrize(STAR, [0.4, 0.3, 0.2, 0.1], 1, 2)


def test_kkt_residual_examples():
    assert kkt_residual(clique(4, 3), [Fraction(1, 4)] * 4).on_support == 0.0
    res = kkt_residual(STAR, STAR_MAX)
    assert res.on_support == 0.0
    corner = kkt_residual(Hypergraph(2, [(1, 2)]), [Fraction(1), Fraction(0)])
    assert corner.on_support == 0.0
    assert corner.off_support == 1.0


def test_pair_identity_at_maximizers():
    assert check_pair_identity(STAR, STAR_MAX, 1, 2) == 0
    assert check_pair_identity(STAR, STAR_MAX, 2, 3) == 0
    uniform = [Fraction(1, 4)] * 4
    for i, j in itertools.combinations(range(1, 5), 2):
        assert check_pair_identity(clique(4, 3), uniform, i, j) == 0
    with pytest.raises(ValueError):
        check_pair_identity(STAR, STAR_MAX, 3, 2)


def test_pair_identity_r2_uses_indicator():
    # for graphs the pair link degenerates to the edge indicator
    tri = Hypergraph(2, [(1, 2), (1, 3), (2, 3)])
    y = [Fraction(1, 3)] * 3
    assert check_pair_identity(tri, y, 1, 2) == 0


def test_scaling_bound_equality_case():
    assert check_scaling_bound(clique(4, 3), [0.25] * 4, 1)


def test_scaling_bound_degenerate_weight_one():
    assert check_scaling_bound(clique(4, 3), [Fraction(1), Fraction(0), Fraction(0), Fraction(0)], 1)
