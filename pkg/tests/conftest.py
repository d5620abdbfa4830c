import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from freepc import Alphabet, FieldSpec, Poly

GOLDEN = Path(__file__).parent / "golden"
PRIMES = [2, 3, 5, 7, 13]

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def rand_poly(rng: random.Random, field: FieldSpec, alphabet: Alphabet,
              max_terms: int = 8, max_len: int = 6, nonzero: bool = False) -> Poly:
    while True:
        terms = {}
        for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
            w = tuple(rng.randint(1, alphabet.n) for _ in range(rng.randint(0, max_len)))
            terms[w] = rng.randrange(field.p)
        f = Poly(field, alphabet, terms)
        if f or not nonzero:
            return f


@st.composite
def polys(draw, p=7, n=3, max_terms=6, max_len=4):
    field, alphabet = FieldSpec(p), Alphabet(n)
    words = st.lists(st.integers(1, n), max_size=max_len).map(tuple)
    terms = draw(st.dictionaries(words, st.integers(0, p - 1), max_size=max_terms))
    return Poly(field, alphabet, terms)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
