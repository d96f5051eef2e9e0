import random
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

import ppcforge as pf

DATA = Path(__file__).parent / "data"


@pytest.fixture
def psts7():
    return pf.psts7_fixture()


@pytest.fixture
def example11():
    """The 13-block PSTS(11) built from the side-7 square with rho=3."""
    return pf.factor_join_packed(3, 8)


@pytest.fixture
def bose9():
    return pf.construct_bose(9)


@pytest.fixture
def psts11_text():
    return (DATA / "psts11.txt").read_text()


def linear_subset(triples):
    """Greedily keep triples while no pair repeats."""
    chosen, pairs = [], set()
    for t in triples:
        tp = {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])}
        if tp & pairs:
            continue
        pairs |= tp
        chosen.append(t)
    return chosen


@st.composite
def designs(draw, max_v=9, max_blocks=12):
    """Random small valid designs: sample triples, drop linearity breakers."""
    v = draw(st.integers(min_value=3, max_value=max_v))
    pool = list(combinations(range(v), 3))
    picks = draw(st.lists(st.sampled_from(pool), max_size=max_blocks))
    return pf.validate(v, linear_subset(picks))


def sub_designs(design, count, max_blocks, seed):
    """Deterministic random sub-designs of one design."""
    rng = random.Random(seed)
    out = []
    blocks = list(design.blocks)
    for _ in range(count):
        k = rng.randint(0, min(max_blocks, len(blocks)))
        out.append(pf.validate(design.v, rng.sample(blocks, k)))
    return out


def sweep_parameters():
    """All (rho, ell) pairs the construction sweep covers."""
    out = []
    for rho in range(1, 6):
        for ell in range(2 * rho, 25, 2):
            if (ell, rho) == (4, 2):
                continue
            out.append((rho, ell))
    return out


@pytest.fixture(scope="session")
def sweep():
    """Every construction in the verification sweep, solved once.

    Yields tuples (kind, rho, ell, witness, solved) where kind is one of
    "pure", "packed", "trimmed" and solved is the exact solver's result.
    """
    rows = []
    for rho, ell in sweep_parameters():
        builds = [
            ("pure", pf.factor_join(rho, ell)),
            ("packed", pf.factor_join_packed(rho, ell)),
        ]
        if ell > 2 * rho:
            builds.append(("trimmed", pf.factor_join_odd(rho, ell)))
        for kind, witness in builds:
            solved = pf.solve_max_ppc(witness.design)
            rows.append((kind, rho, ell, witness, solved))
    return rows
