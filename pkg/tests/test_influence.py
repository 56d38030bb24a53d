import itertools

import pytest

from rgt.agents import frustration_strategies
from rgt.algebra import Universe, enumerate_alternatives, interval_members
from rgt.boolfunc import BooleanFunction
from rgt.decision import decision_equation, forward_solve
from rgt.influence import (
    PRODUCT_INTERVAL,
    SUM_INTERVAL,
    InfluenceSystem,
    TargetChoice,
    effective_variables,
    equality_residual,
    feasible_targets,
    product_pairs,
    solve_influence_equation,
    solve_product,
    solve_sum,
    solve_system,
    solve_zero_canonical,
    sum_pairs,
)
from rgt.polynomial import fold, parse

from conftest import pairs_text

U = Universe(("alpha", "beta"))
ALTS = enumerate_alternatives(U)
P = U.parse

EQUATION_PAIRS_AB_C = {
    ("{alpha}", "{alpha}"), ("{alpha}", "0"), ("{beta}", "{alpha}"),
    ("1", "{alpha}"), ("1", "0"), ("0", "{alpha}"),
}
PAIRS_B_PLUS_C = {
    ("{beta}", "{alpha}"), ("1", "{alpha}"), ("{alpha}", "{beta}"), ("1", "{beta}"),
    ("0", "1"), ("{alpha}", "1"), ("{beta}", "1"), ("1", "1"), ("1", "0"),
}


def system(poly, subject, upper, lower=None, fixed=None):
    eq = decision_equation(parse(poly), subject)
    target = TargetChoice(P(upper), P(upper if lower is None else lower))
    return solve_system(InfluenceSystem.for_equation(eq, target, {k: P(v) for k, v in (fixed or {}).items()}))


def test_residual_vanishes_iff_equal():
    for n in (1, 2, 3):
        u = Universe(tuple(f"t{i}" for i in range(n)))
        for p, q in itertools.product(enumerate_alternatives(u), repeat=2):
            assert equality_residual(p, q).is_empty == (p == q)
    assert equality_residual(P("1"), P("{alpha}")) == P("{beta}")
    assert equality_residual(P("{alpha}"), P("{beta}")) == U.full


def test_zero_canonical():
    assert solve_zero_canonical(U.empty, U.empty) == (U.full, U.empty)
    upper, lower = solve_zero_canonical(U.full, P("{alpha}"))
    assert interval_members(upper, lower) == []


def test_interval_solver_examples():
    assert [str(x) for x in interval_members(*solve_sum(P("{alpha}"), P("{alpha}")))] == ["0", "{alpha}"]
    assert [str(x) for x in interval_members(*solve_sum(P("1"), P("{alpha}")))] == ["{beta}", "1"]
    assert interval_members(*solve_sum(U.empty, U.empty)) == [U.empty]
    assert solve_product(P("{beta}"), U.full) == (P("{beta}"), P("{beta}"))
    assert interval_members(*solve_product(P("{beta}"), U.empty)) == []
    assert interval_members(*solve_product(U.empty, U.empty)) == ALTS


@pytest.mark.parametrize("n", [1, 2, 3])
def test_interval_solvers_match_brute_force(n):
    u = Universe(tuple(f"t{i}" for i in range(n)))
    alts = enumerate_alternatives(u)
    key = lambda p: (p[0].bits, p[1].bits)
    for chi in alts:
        brute_sum = sorted(((x, y) for x in alts for y in alts if x | y == chi), key=key)
        brute_prod = sorted(((x, y) for x in alts for y in alts if x & y == chi), key=key)
        assert sum_pairs(chi) == brute_sum
        assert product_pairs(chi) == brute_prod
        for xj in alts:
            assert SUM_INTERVAL.at(chi, xj) == solve_sum(chi, xj)
            assert PRODUCT_INTERVAL.at(chi, xj) == solve_product(chi, xj)


def test_influence_equation_ab_c():
    eq = decision_equation(parse("ab+c"), "a")
    sols = solve_influence_equation(eq.A, eq.B, P("{alpha}"))
    assert set(pairs_text(sols)) == EQUATION_PAIRS_AB_C and len(sols) == 6
    for s in sols:
        env = {**s.as_dict(), "a": P("{alpha}")}
        assert fold(parse("ab+c")).evaluate(env) == P("{alpha}")


def test_system_is_stricter_than_the_single_equation():
    assert pairs_text(system("ab+c", "a", "{alpha}")) == [("0", "{alpha}"), ("{alpha}", "{alpha}")]
    assert pairs_text(system("ab+c", "a", "{alpha}", fixed={"b": "{alpha}"})) == [("{alpha}",)]


def test_system_b_plus_c():
    sols = system("a(b+c)", "a", "1")
    assert set(pairs_text(sols)) == PAIRS_B_PLUS_C and len(sols) == 9


def test_canonical_order():
    sols = system("a(b+c)", "a", "1")
    assert [s.sort_key() for s in sols] == sorted(s.sort_key() for s in sols)
    assert sols[0].variables == ("b", "c")


BS_BETA = {
    ("0", "{beta}", "1"), ("{beta}", "{beta}", "1"), ("0", "1", "{beta}"),
    ("{beta}", "1", "{beta}"), ("0", "{beta}", "{beta}"), ("{beta}", "{beta}", "{beta}"),
}
BS_ZERO = {
    ("0", "1", "0"), ("0", "0", "0"), ("0", "0", "{alpha}"), ("0", "0", "{beta}"), ("0", "0", "1"),
    ("0", "{alpha}", "{beta}"), ("0", "{alpha}", "0"), ("0", "{beta}", "{alpha}"), ("0", "{beta}", "0"),
}
BS_INTERVAL = {("{beta}",) + t[1:] for t in BS_ZERO}


def test_babysitter_systems():
    assert set(pairs_text(system("ab+cd", "a", "{beta}"))) == BS_BETA
    assert set(pairs_text(system("ab+cd", "a", "0"))) == BS_ZERO
    interval = system("ab+cd", "a", "{beta}", "0")
    assert set(pairs_text(interval)) == BS_INTERVAL and len(interval) == 9
    assert pairs_text(interval)[:2] == [("{beta}", "0", "0"), ("{beta}", "0", "{alpha}")]


def test_system_solutions_reproduce_target():
    eq = decision_equation(parse("ab+cd"), "a")
    for upper, lower in [("{beta}", "0"), ("1", "{alpha}"), ("{alpha}", "{alpha}")]:
        t = TargetChoice(P(upper), P(lower))
        for s in solve_system(InfluenceSystem.for_equation(eq, t)):
            assert list(forward_solve(eq, s.as_dict(), U).choices) == interval_members(t.upper, t.lower)


def test_target_and_system_validation():
    with pytest.raises(ValueError):
        TargetChoice(P("{alpha}"), P("{beta}"))
    eq = decision_equation(parse("ab+c"), "a")
    with pytest.raises(ValueError):
        InfluenceSystem.for_equation(eq, TargetChoice.single(U.full), {"z": U.full})


def test_zero_free_variables():
    eq = decision_equation(parse("abc"), "a")
    assert pairs_text(system("abc", "a", "1")) == [()]
    assert system("abc", "a", "0") == []
    assert eq.influence_variables == ()


def test_effective_variables():
    w = fold(parse("b(a+d)+c"))
    eq = decision_equation(parse("b(a+d)+c"), "a")
    assert effective_variables(eq.A, eq.B) == ("b", "c")
    eq = decision_equation(parse("a(b+c)"), "b")
    assert effective_variables(eq.A, eq.B) == ("a", "c")
    one = BooleanFunction.constant(True)
    assert effective_variables(one, one) == ()
    assert w.variables == ("b", "c")


def test_feasible_targets_a_bc():
    eq = decision_equation(parse("a(b+c)"), "a")
    ft = feasible_targets(eq.A, eq.B, universe=U)
    assert ft.alternatives == [U.full]
    assert set(pairs_text(ft.strategies[0])) == PAIRS_B_PLUS_C


def test_feasible_targets_super_active():
    eq = decision_equation(parse("c(ab+d)"), "a")
    ft = feasible_targets(eq.A, eq.B, universe=U)
    assert ft.alternatives == [U.full] and pairs_text(ft.strategies[0]) == [()]


@pytest.mark.parametrize("poly,subject", [("a(b+c)", "a"), ("a(b+c)", "b"), ("ab+cd", "a"), ("b(a+d)+c", "a")])
def test_feasible_targets_oracle(poly, subject):
    eq = decision_equation(parse(poly), subject)
    free = eq.influence_variables
    ft = feasible_targets(eq.A, eq.B, universe=U)
    expected = {}
    for values in itertools.product(ALTS, repeat=len(free)):
        out = forward_solve(eq, dict(zip(free, values)), U)
        if len(out.choices) == 1:
            expected.setdefault(out.choices[0], []).append(values)
    assert ft.alternatives == sorted(expected, key=lambda x: x.bits)
    for chi, z in ft.as_dict().items():
        assert [s.values for s in z] == expected[chi]


def test_frustration_is_complement_of_reachable():
    eq = decision_equation(parse("a(b+c)"), "a")
    ft = feasible_targets(eq.A, eq.B, universe=U)
    reachable = {s.values for z in ft.strategies for s in z}
    frustrated = frustration_strategies(eq.A, eq.B, universe=U)
    everything = set(itertools.product(ALTS, repeat=2))
    assert {s.values for s in frustrated} == everything - reachable
    assert len(frustrated) == 7
    assert {("{alpha}", "{alpha}"), ("{beta}", "0")} <= set(pairs_text(frustrated))
