import random

import pytest

from lexstab.errors import InputError
from lexstab.monomial import Monomial, dim_degree, is_universal_lex, minimalize, num_monomials
from lexstab.unilex import (
    GammaSpec,
    gamma_from_b,
    generators_from_gamma,
    hf_from_b,
    hf_from_b_polynomial,
    hf_gamma,
)

from ideals import brute_count

X = Monomial.from_vars


def random_gamma(rng, h_max=4, deg_max=6, alpha_max=3):
    h = rng.randint(1, h_max)
    degs = sorted(rng.sample(range(1, deg_max + 1), h))
    return GammaSpec(tuple((d, rng.randint(1, alpha_max)) for d in degs))


@pytest.mark.parametrize("pairs, expected", [
    (((2, 2),), [X(1, 1), X(1, 2)]),
    (((2, 2), (3, 1)), [X(1, 1), X(1, 2), X(1, 3, 3)]),
    (((1, 1),), [X(1)]),
    (((2, 2), (3, 1), (4, 1), (5, 2)),
     [X(1, 1), X(1, 2), X(1, 3, 3), X(1, 3, 4, 4), X(1, 3, 4, 5, 5), X(1, 3, 4, 5, 6)]),
])
def test_generators_from_gamma_examples(pairs, expected):
    assert generators_from_gamma(GammaSpec(pairs)) == expected


@pytest.mark.parametrize("pairs, N, t, expected", [
    (((2, 2),), 3, 2, 2),
    (((2, 2), (3, 1)), 5, 3, 10),
    (((3, 2), (5, 1)), 5, 2, 0),
])
def test_hf_gamma_examples(pairs, N, t, expected):
    g = GammaSpec(pairs)
    assert hf_gamma(g, N, t) == expected
    assert dim_degree(minimalize(generators_from_gamma(g), g.total), N, t) == expected


def test_hf_gamma_rejects_boundary():
    g = GammaSpec(((2, 2), (3, 1)))
    with pytest.raises(InputError):
        hf_gamma(g, 3, 3)


def test_hf_gamma_matches_brute_force_on_random_specs():
    rng = random.Random(17)
    for _ in range(60):
        g = random_gamma(rng)
        gens = generators_from_gamma(g)
        bh = g.total
        for N in range(bh + 1, bh + 5):
            for t in range(g.degrees[-1] + 4):
                if num_monomials(N, t) > 3000:
                    continue  # keeps the enumeration cheap; smaller N cover the same shape
                assert hf_gamma(g, N, t) == brute_count(gens, N, t), (g, N, t)


def test_gamma_generators_are_universal_lex():
    rng = random.Random(23)
    for _ in range(40):
        g = random_gamma(rng, h_max=3, deg_max=4, alpha_max=2)
        gens = generators_from_gamma(g)
        assert is_universal_lex(gens, g.total + 5, fast_path=False), g


def test_bookkeeping():
    rng = random.Random(29)
    for _ in range(100):
        g = random_gamma(rng)
        gens = generators_from_gamma(g)
        assert len(gens) == g.total == g.betas[-1]
        used = {i for m in gens for i, e in enumerate(m.exponents) if e}
        assert len(used) == g.total
        assert [m.degree for m in gens] == [d for d, a in g.pairs for _ in range(a)]


@pytest.mark.parametrize("b, N, t, expected", [
    ([0, 2], 3, 2, 2),
    ([0, 2, 3], 5, 3, 10),
    ([0, 0, 0], 4, 3, 0),
])
def test_hf_from_b_examples(b, N, t, expected):
    assert hf_from_b(b, N, t) == expected
    assert hf_from_b_polynomial(b, N, t) == expected


def test_hf_from_b_agrees_with_gamma():
    rng = random.Random(31)
    for _ in range(80):
        g = random_gamma(rng)
        d = g.degrees[-1]
        b = [sum(a for dj, a in g.pairs if dj <= j) for j in range(1, d + 1)]
        assert gamma_from_b(b) == g
        for N in range(g.total + 1, g.total + 5):
            for t in range(d + 3):
                assert hf_from_b(b, N, t) == hf_gamma(g, N, t)
                assert hf_from_b_polynomial(b, N, t) == hf_gamma(g, N, t)


@pytest.mark.parametrize("b, pairs", [
    ([0, 2, 3, 4], ((2, 2), (3, 1), (4, 1))),
    ([0, 0, 0], ()),
    ([1], ((1, 1),)),
])
def test_gamma_from_b_examples(b, pairs):
    assert gamma_from_b(b) == GammaSpec(pairs)


def test_gamma_validation():
    for bad in [((2, 0),), ((3, 1), (2, 1)), ((0, 1),), ((2, 1), (2, 1))]:
        with pytest.raises(InputError):
            GammaSpec(bad)
    with pytest.raises(InputError):
        gamma_from_b([2, 1])
    g = GammaSpec(((2, 2), (3, 1)))
    assert g.betas == [0, 2, 3]
    assert GammaSpec.from_json(g.to_json()) == g
    assert g.to_json() == {"gamma": [[2, 2], [3, 1]]}
