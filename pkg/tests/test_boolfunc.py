import itertools

import numpy as np
import pytest

from rgt.algebra import Universe, enumerate_alternatives
from rgt.boolfunc import BooleanFunction, MissingInfluence, semantically_equal

a, b, c = (BooleanFunction.variable(n) for n in "abc")


def test_operators_and_support():
    f = (a & b) | (a & ~b)
    assert f.support() == ("a",)
    assert f.reduce() == a
    assert semantically_equal(f, a)
    assert not semantically_equal(f, b)
    assert (a | ~a).constant_value is True
    assert (a & ~a).constant_value is False
    assert (a | b).constant_value is None


def test_cofactors():
    f = (a & (b | c)) | ~a
    assert f.cofactor("a", 1).reduce() == (b | c)
    assert f.cofactor("a", 0).reduce().constant_value is True
    assert f.cofactor("z", 1) is f


def test_variable_order_is_canonical():
    t = np.array([[0, 1], [0, 0]], dtype=bool)  # true only at b=0, a=1
    f = BooleanFunction(("b", "a"), t)
    assert f.variables == ("a", "b")
    assert f(a=1, b=0) and not f(a=0, b=1)
    with pytest.raises(ValueError):
        BooleanFunction(("a", "a"), np.zeros((2, 2)))
    with pytest.raises(ValueError):
        BooleanFunction(("a",), np.zeros((2, 2)))


def test_immutable():
    with pytest.raises(AttributeError):
        a.table = None
    with pytest.raises(ValueError):
        a.table[0] = True


def test_setwise_evaluation_matches_per_action_rows():
    u = Universe(("p", "q", "r"))
    f = (a & ~b) | (c & b)
    for env in itertools.product(enumerate_alternatives(u), repeat=3):
        assignment = dict(zip("abc", env))
        got = f.evaluate(assignment)
        for i, action in enumerate(u.actions):
            bits = {k: (v.bits >> i) & 1 for k, v in assignment.items()}
            assert (action in got) == f(**bits)


def test_missing_and_constant_evaluation():
    u = Universe(("alpha", "beta"))
    with pytest.raises(MissingInfluence):
        (a | b).evaluate({"a": u.full})
    assert BooleanFunction.constant(True).evaluate({}, u) == u.full
    with pytest.raises(ValueError):
        BooleanFunction.constant(True).evaluate({})


def test_expression_text():
    assert ((a & (b | c)) | ~a).to_expression() == "~a + b + c"
    assert ((a & b) | c).to_expression() == "ab + c"
    assert BooleanFunction.constant(False).to_expression() == "0"
