import itertools

import pytest

from rgt.algebra import Universe, enumerate_alternatives


@pytest.fixture
def u2():
    return Universe(("alpha", "beta"))


@pytest.fixture
def u2_risky():
    return Universe(("alpha", "beta"), risky={"alpha"})


def alt(u, text):
    return u.parse(text)


def pairs_text(strategies):
    """Strategies as tuples of printed alternatives, for comparison with hand-written lists."""
    return [tuple(str(v) for v in s.values) for s in strategies]


def all_assignments(u, names):
    alts = enumerate_alternatives(u)
    for values in itertools.product(alts, repeat=len(names)):
        yield dict(zip(names, values))
