"""Noncommutative Polly Cracker.

The private key is a Groebner basis G of a two-sided ideal I; the public key
is a list of ideal elements q_r built from G.  A message is a polynomial
whose monomials avoid every tip of G, a ciphertext is the message plus a
random element of the ideal generated by the public polynomials, and
decryption is reduction modulo G.

Only the two key shapes below are generated.  Their tips have no
self-overlap, so {g} is automatically a Groebner basis and normal forms
are unique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .errors import SamplingError, UsageError
from .ff import FieldSpec, ff_random
from .ncpoly import Poly
from .reduce import is_normal, normal_form
from .word import ORDERING, Alphabet, Letters, Word, find_subword, tips_overlap_free

MAX_REDRAWS = 1000


@dataclass(frozen=True)
class EncryptionParams:
    terms_per_q: int = 3
    cofactor_len: int = 4
    cofactor_terms: int = 3
    seed: int | None = None

    def __post_init__(self):
        for name in ("terms_per_q", "cofactor_len", "cofactor_terms"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be >= 1")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _check_universe(field: FieldSpec, alphabet: Alphabet, polys: Sequence[Poly], what: str) -> None:
    for f in polys:
        if f.field != field or f.alphabet != alphabet:
            raise UsageError(f"{what} lives in a different universe")


@dataclass(frozen=True)
class PrivateKey:
    G: tuple[Poly, ...]
    field: FieldSpec
    alphabet: Alphabet
    ordering: str = ORDERING

    def __post_init__(self):
        object.__setattr__(self, "G", tuple(self.G))
        if self.ordering != ORDERING:
            raise UsageError(f"unsupported ordering {self.ordering!r}")
        if not self.G:
            raise UsageError("private key needs at least one generator")
        _check_universe(self.field, self.alphabet, self.G, "generator")
        for g in self.G:
            if not g:
                raise UsageError("generators must be nonzero")
            if not len(g.tip):
                raise UsageError("a constant generator spans the whole algebra")
        if not tips_overlap_free(self.tips):
            raise UsageError("generator tips overlap; the key is not a guaranteed Groebner basis")

    @property
    def tips(self) -> tuple[Word, ...]:
        return tuple(g.tip for g in self.G)


@dataclass(frozen=True)
class PublicKey:
    B: tuple[Poly, ...]
    tips: tuple[Word, ...]
    field: FieldSpec
    alphabet: Alphabet
    ordering: str = ORDERING

    def __post_init__(self):
        object.__setattr__(self, "B", tuple(self.B))
        object.__setattr__(self, "tips", tuple(self.tips))
        if self.ordering != ORDERING:
            raise UsageError(f"unsupported ordering {self.ordering!r}")
        if not self.tips or any(not len(t) for t in self.tips):
            raise UsageError("public key needs nonempty tip words")
        _check_universe(self.field, self.alphabet, self.B, "public polynomial")
        if any(t.alphabet != self.alphabet for t in self.tips):
            raise UsageError("tip word lives in a different alphabet")


@dataclass(frozen=True)
class Message:
    poly: Poly


@dataclass(frozen=True)
class Ciphertext:
    poly: Poly


@dataclass(frozen=True)
class Product:
    """One summand ``left * generators[index] * right`` of an ideal element."""

    index: int  # 0-based into the generator list
    left: Poly
    right: Poly


@dataclass
class Transcript:
    products: list[Product] = dc_field(default_factory=list)


# key generation

def keygen_chain(field: FieldSpec, n: int, rng: random.Random) -> PrivateKey:
    """g = x1*x2*...*xn + c1*x1 + ... + cn*xn + c0 with every c nonzero."""
    if n < 2:
        raise UsageError("chain keys need n >= 2")
    alpha = Alphabet(n)
    terms: dict[Letters, int] = {tuple(range(1, n + 1)): 1}
    terms[()] = ff_random(field, True, rng).value
    for i in range(1, n + 1):
        terms[(i,)] = ff_random(field, True, rng).value
    return PrivateKey((Poly(field, alpha, terms),), field, alpha)


def keygen_quad(field: FieldSpec, rng: random.Random) -> PrivateKey:
    """g = a*x1.x2 + b*x1 + c*x2 + d with a nonzero."""
    alpha = Alphabet(2)
    a = ff_random(field, True, rng).value
    b, c, d = (ff_random(field, False, rng).value for _ in range(3))
    g = Poly(field, alpha, {(1, 2): a, (1,): b, (2,): c, (): d})
    return PrivateKey((g,), field, alpha)


# randomness helpers

def random_word(alphabet: Alphabet, max_len: int, rng: random.Random) -> Letters:
    length = rng.randint(0, max_len)
    return tuple(rng.randint(1, alphabet.n) for _ in range(length))


def random_poly(field: FieldSpec, alphabet: Alphabet, max_terms: int, max_len: int,
                rng: random.Random, *, nonzero: bool = True,
                avoid: Sequence[Letters] = ()) -> Poly:
    """Random polynomial with 1..max_terms terms of length <= max_len.

    Words containing any of ``avoid`` are rejected.
    """
    for _ in range(MAX_REDRAWS):
        terms: dict[Letters, int] = {}
        for _ in range(rng.randint(1, max_terms)):
            for _ in range(MAX_REDRAWS):
                w = random_word(alphabet, max_len, rng)
                if all(find_subword(w, t) < 0 for t in avoid):
                    break
            else:
                raise SamplingError("could not draw a word avoiding the tips")
            terms[w] = terms.get(w, 0) + ff_random(field, True, rng).value
        f = Poly(field, alphabet, terms)
        if f or not nonzero:
            return f
    raise SamplingError("could not draw a nonzero polynomial")


def random_cofactor(field: FieldSpec, alphabet: Alphabet, params: EncryptionParams,
                    rng: random.Random) -> Poly:
    return random_poly(field, alphabet, params.cofactor_terms, params.cofactor_len, rng)


CofactorDraw = Callable[[FieldSpec, Alphabet, EncryptionParams, random.Random], Poly]


def combine(generators: Sequence[Poly], products: Sequence[Product]) -> Poly:
    """Sum of ``left * generators[index] * right`` over ``products``."""
    f0 = generators[0]
    acc = Poly.zero(f0.field, f0.alphabet)
    for pr in products:
        acc = acc + pr.left * generators[pr.index] * pr.right
    return acc


def draw_products(generators: Sequence[Poly], params: EncryptionParams, rng: random.Random,
                  counts: Sequence[int] | None = None,
                  draw: CofactorDraw = random_cofactor) -> list[Product]:
    """Random two-sided cofactors; ``counts[i]`` summands for generator i."""
    f0 = generators[0]
    if counts is None:
        counts = [rng.randint(1, params.terms_per_q) for _ in generators]
    if len(counts) != len(generators):
        raise UsageError("one count per generator required")
    out = []
    for i, k in enumerate(counts):
        for _ in range(k):
            left = draw(f0.field, f0.alphabet, params, rng)
            right = draw(f0.field, f0.alphabet, params, rng)
            out.append(Product(i, left, right))
    return out


def derive_public(priv: PrivateKey, s: int, params: EncryptionParams, rng: random.Random,
                  draw: CofactorDraw = random_cofactor) -> PublicKey:
    """Publish ``s`` random nonzero elements of the ideal generated by G."""
    if s < 1:
        raise UsageError("s must be >= 1")
    B = []
    for _ in range(s):
        for _ in range(MAX_REDRAWS):
            counts = [rng.randint(1, params.terms_per_q) for _ in priv.G]
            q = combine(priv.G, draw_products(priv.G, params, rng, counts, draw))
            if q:
                break
        else:
            raise RuntimeError("public polynomial kept vanishing")
        if normal_form(q, priv.G):
            raise RuntimeError("public polynomial does not reduce to zero")
        B.append(q)
    return PublicKey(tuple(B), priv.tips, priv.field, priv.alphabet, priv.ordering)


def sample_message(pub: PublicKey, max_terms: int, max_len: int, rng: random.Random) -> Message:
    if max_terms < 1 or max_len < 1:
        raise UsageError("message bounds must be >= 1")
    avoid = [t.letters for t in pub.tips]
    m = random_poly(pub.field, pub.alphabet, max_terms, max_len, rng, nonzero=False, avoid=avoid)
    return Message(m)


def _check_message(pub: PublicKey, m: Message) -> None:
    if m.poly.field != pub.field or m.poly.alphabet != pub.alphabet:
        raise UsageError("message lives in a different universe")


def ideal_noise(pub: PublicKey, params: EncryptionParams, rng: random.Random,
                counts: Sequence[int] | None = None) -> tuple[Poly, list[Product]]:
    """Random element of the ideal generated by the public polynomials."""
    if not pub.B:
        return Poly.zero(pub.field, pub.alphabet), []
    products = draw_products(pub.B, params, rng, counts)
    return combine(pub.B, products), products


def encrypt(pub: PublicKey, m: Message, params: EncryptionParams, rng: random.Random,
            *, counts: Sequence[int] | None = None, transcript: Transcript | None = None) -> Ciphertext:
    """c = sum F_ij * q_i * H_ij + m.

    ``counts`` fixes the number of summands per public polynomial; pass a
    :class:`Transcript` to capture the drawn cofactors.
    """
    _check_message(pub, m)
    noise, products = ideal_noise(pub, params, rng, counts)
    if transcript is not None:
        transcript.products.extend(products)
    return Ciphertext(noise + m.poly)


def decrypt(priv: PrivateKey, c: Ciphertext) -> Message:
    if c.poly.field != priv.field or c.poly.alphabet != priv.alphabet:
        raise UsageError("ciphertext lives in a different universe")
    return Message(normal_form(c.poly, priv.G))


def is_message(pub: PublicKey, f: Poly) -> bool:
    return is_normal(f, pub.tips)
