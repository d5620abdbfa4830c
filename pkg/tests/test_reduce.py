import random

import pytest
from hypothesis import given

from freepc import (
    Alphabet, DivisionStep, FieldSpec, Poly, UsageError, divide, is_normal, keygen_chain,
    keygen_quad, normal_form,
)

from conftest import PRIMES, polys, rand_poly

F2, F7 = FieldSpec(2), FieldSpec(7)
A2 = Alphabet(2)


def test_self_division(rng):
    for _ in range(50):
        f = rand_poly(rng, F7, A2, nonzero=True)
        res = divide(f, [f])
        assert res.steps == (DivisionStep(1, F7(1), A2.empty, A2.empty),)
        assert not res.remainder


@pytest.mark.parametrize("p", PRIMES)
def test_tip_reduces_to_scaled_tail(p):
    F = FieldSpec(p)
    for seed in range(20):
        g = keygen_quad(F, random.Random(seed)).G[0]
        tv = g.tip_view()
        r = divide(Poly.monomial(tv.tip, 1, F), [g]).remainder
        assert r == tv.tail.scale(-tv.ctip.inverse())


def test_hand_executed_division():
    # over GF(2): x.y.x = (x.y + y).x + y.x
    g = Poly(F2, A2, {(1, 2, 1): 1})
    f = Poly(F2, A2, {(1, 2): 1, (2,): 1})
    res = divide(g, [f])
    assert res.steps == (DivisionStep(1, F2(1), A2.empty, A2.word(1)),)
    assert res.remainder == Poly(F2, A2, {(2, 1): 1})
    assert res.check(g, [f])


def test_divisor_errors():
    g = Poly.constant(1, F7, A2)
    with pytest.raises(UsageError):
        divide(g, [])
    with pytest.raises(UsageError):
        divide(g, [Poly.zero(F7, A2)])
    with pytest.raises(UsageError):
        divide(g, [Poly.constant(1, FieldSpec(5), A2)])


def test_lowest_index_and_leftmost_win():
    # both divisors have tip x1; the first one must be used, at the leftmost spot
    g = Poly(F7, A2, {(2, 1, 1): 1})
    f1 = Poly(F7, A2, {(1,): 1, (): 1})
    f2 = Poly(F7, A2, {(1,): 1, (): 2})
    res = divide(g, [f1, f2])
    assert res.steps[0] == DivisionStep(1, F7(1), A2.word(2), A2.word(1))
    assert all(st.divisor_index == 1 for st in res.steps)


def test_normal_form_examples(rng):
    key = keygen_chain(F7, 6, rng)
    G = key.G
    A6 = key.alphabet
    assert not normal_form(Poly.zero(F7, A6), G)
    m = Poly(F7, A6, {(2, 1): 3, (6, 5, 4, 3, 2, 1): 1, (): 4})
    assert normal_form(m, G) == m
    for _ in range(50):
        u = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 5)))
        v = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 5)))
        ugv = Poly(F7, A6, G[0].sandwich(u, v))
        res = divide(ugv, G)
        assert not res.remainder and res.check(ugv, G)


def test_is_normal_examples(rng):
    A6 = Alphabet(6)
    assert is_normal(Poly.zero(F7, A2), [A2.word(1)])
    assert not is_normal(Poly(F7, A2, {(1, 2): 1}), [A2.word(1, 2)])
    g = keygen_chain(F7, 6, rng).G[0]
    assert is_normal(g.tail, [A6.word(1, 2, 3, 4, 5, 6)])
    with pytest.raises(UsageError):
        is_normal(g, [A6.empty])


def _random_instance(rng):
    p = rng.choice(PRIMES)
    F, A = FieldSpec(p), Alphabet(rng.randint(1, 3))
    g = rand_poly(rng, F, A, max_terms=8, max_len=6)
    divisors = [rand_poly(rng, F, A, max_terms=4, max_len=3, nonzero=True)
                for _ in range(rng.randint(1, 3))]
    return g, divisors


def test_division_certificate_random():
    rng = random.Random(3)
    for _ in range(1000):
        g, divisors = _random_instance(rng)
        res = divide(g, divisors)
        assert res.check(g, divisors)
        if res.remainder:
            assert res.remainder.tip <= g.tip
        assert normal_form(g, divisors) == res.remainder


def test_idempotent_random():
    rng = random.Random(4)
    for _ in range(300):
        g, divisors = _random_instance(rng)
        r = normal_form(g, divisors)
        assert normal_form(r, divisors) == r


@given(polys(p=5, n=2, max_terms=6, max_len=5), polys(p=5, n=2, max_terms=3, max_len=3))
def test_adding_ideal_elements_keeps_normal_form(f, cof):
    F = FieldSpec(5)
    G = keygen_quad(F, random.Random(len(f))).G
    q = cof * G[0] * cof + G[0] * cof
    assert normal_form(f + q, G) == normal_form(f, G)
