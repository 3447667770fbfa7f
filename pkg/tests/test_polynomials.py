"""Ring algebra and substitution for the exact sparse polynomials."""

import random
from fractions import Fraction

import pytest

from bachflow.polynomials import Poly, monomial


def random_poly(rng: random.Random, nvars: int = 3, nterms: int = 5) -> Poly:
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, 3) for _ in range(nvars))
        terms[exps] = terms.get(exps, 0) + Fraction(rng.randint(-9, 9))
    return Poly(nvars, terms)


def random_point(rng: random.Random, nvars: int = 3):
    return tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(nvars))


def test_ring_axioms_and_evaluation_homomorphism():
    rng = random.Random(7)
    for _ in range(25):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert a - a == Poly(3)
        assert not bool(a - a)
        x = random_point(rng)
        assert (a * b)(*x) == a(*x) * b(*x)
        assert (a + b)(*x) == a(*x) + b(*x)


def test_scalar_multiplication():
    f = Poly(2, {(2, 0): 1, (0, 1): -3})
    assert 2 * f == f * 2 == f + f
    assert Fraction(1, 2) * (f + f) == f
    assert 0 * f == Poly(2)


def test_zero_terms_are_pruned():
    f = Poly(2, {(1, 0): 1})
    g = Poly(2, {(1, 0): -1, (0, 2): 4})
    assert (f + g).terms == {(0, 2): Fraction(4)}
    assert not bool(f + Poly(2, {(1, 0): -1}))


def test_signed_remap_matches_direct_substitution():
    rng = random.Random(9)
    # x := -u, y := v, z := u, collapsing three variables onto two
    images = [(-1, 0), (1, 1), (1, 0)]
    for _ in range(20):
        f = random_poly(rng)
        u, v = random_point(rng, 2)
        assert f.signed_remap(images, 2)(u, v) == f(-u, v, u)


def test_signed_remap_identity_and_permutation():
    f = Poly(3, {(2, 1, 0): 3, (0, 0, 3): -1})
    assert f.signed_remap([(1, 0), (1, 1), (1, 2)]) == f
    g = f.signed_remap([(1, 1), (1, 2), (1, 0)])  # x->y, y->z, z->x
    assert g == Poly(3, {(0, 2, 1): 3, (3, 0, 0): -1})


def test_signed_remap_validation():
    f = Poly(2, {(1, 1): 1})
    with pytest.raises(ValueError):
        f.signed_remap([(2, 0), (1, 1)])
    with pytest.raises(ValueError):
        f.signed_remap([(1, 0), (1, 5)])
    with pytest.raises(ValueError):
        f.signed_remap([(1, 0)])


def test_monomial_and_total_degree():
    m = monomial(3, (1, 0, 2), 7)
    assert m.terms == {(1, 0, 2): Fraction(7)}
    assert m.total_degree() == 3
    assert Poly(3).total_degree() == 0


def test_coefficients_all_positive():
    assert Poly(2, {(1, 0): 1, (0, 3): Fraction(1, 2)}).coefficients_all_positive()
    assert not Poly(2, {(1, 0): 1, (0, 3): -1}).coefficients_all_positive()


def test_float_evaluation():
    f = Poly(2, {(2, 0): 1, (0, 1): 1})
    assert f(0.5, 2.0) == 2.25
    assert isinstance(f(0.5, 2.0), float)


def test_arity_errors():
    f = Poly(2, {(1, 0): 1})
    with pytest.raises(ValueError):
        f(1, 2, 3)
    with pytest.raises(ValueError):
        f + Poly(3)
    with pytest.raises(ValueError):
        Poly(2, {(1,): 1})
    with pytest.raises(ValueError):
        Poly(1, {(-1,): 1})
