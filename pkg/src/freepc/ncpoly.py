"""Sparse polynomials in the free algebra GF(p)<x1..xn>.

A :class:`Poly` maps raw letter tuples to nonzero int residues.  Terms are
kept in descending deglex order, so the first entry is always the tip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, UsageError
from .ff import FieldSpec, Scalar
from .word import Alphabet, Letters, Word, deglex_key


def _sorted_terms(terms: dict[Letters, int]) -> dict[Letters, int]:
    return dict(sorted(terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=True))


class Poly:
    """An element of the free algebra over a prime field.

    Instances are immutable; all arithmetic returns new polynomials.
    """

    __slots__ = ("field", "alphabet", "_terms", "_hash")

    def __init__(self, field: FieldSpec, alphabet: Alphabet, terms: dict[Letters, int] | None = None):
        p = field.p
        clean = {}
        for w, c in (terms or {}).items():
            w = alphabet.check(w)
            c %= p
            if c:
                clean[w] = c
        self.field = field
        self.alphabet = alphabet
        self._terms = _sorted_terms(clean)
        self._hash = None

    @classmethod
    def _trusted(cls, field, alphabet, terms: dict[Letters, int]) -> "Poly":
        # terms already reduced and nonzero; only ordering is restored
        f = object.__new__(cls)
        f.field = field
        f.alphabet = alphabet
        f._terms = _sorted_terms(terms)
        f._hash = None
        return f

    # constructors

    @classmethod
    def zero(cls, field: FieldSpec, alphabet: Alphabet) -> "Poly":
        return cls(field, alphabet)

    @classmethod
    def constant(cls, c: int | Scalar, field: FieldSpec, alphabet: Alphabet) -> "Poly":
        return cls.monomial(Word((), alphabet), c, field)

    @classmethod
    def monomial(cls, word: Word, coeff: int | Scalar = 1, field: FieldSpec | None = None) -> "Poly":
        if isinstance(coeff, Scalar):
            if field is not None and field != coeff.field:
                raise UsageError("field mismatch")
            field = coeff.field
            coeff = coeff.value
        if field is None:
            raise UsageError("field required for an int coefficient")
        return cls(field, word.alphabet, {word.letters: coeff})

    # structure

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.field == other.field and self.alphabet == other.alphabet
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.p, self.alphabet.n, tuple(self._terms.items())))
        return self._hash

    def items(self):
        """(letters, int coefficient) pairs in descending deglex order."""
        return self._terms.items()

    def terms(self) -> list[tuple[Scalar, Word]]:
        return [(Scalar(c, self.field), Word._raw(w, self.alphabet)) for w, c in self._terms.items()]

    def words(self) -> list[Word]:
        return [Word._raw(w, self.alphabet) for w in self._terms]

    def coeff(self, word: Word | Letters) -> Scalar:
        key = word.letters if isinstance(word, Word) else tuple(word)
        return Scalar(self._terms.get(key, 0), self.field)

    def max_degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise UsageError(f"field mismatch: GF({self.field.p}) vs GF({other.field.p})")
        if self.alphabet != other.alphabet:
            raise UsageError(f"alphabet mismatch: n={self.alphabet.n} vs n={other.alphabet.n}")

    # arithmetic

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        p = self.field.p
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = (out.get(w, 0) + c) % p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return Poly._trusted(self.field, self.alphabet, out)

    def __neg__(self) -> "Poly":
        p = self.field.p
        return Poly._trusted(self.field, self.alphabet, {w: p - c for w, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def scale(self, a: int | Scalar) -> "Poly":
        if isinstance(a, Scalar):
            if a.field != self.field:
                raise UsageError(f"field mismatch: GF({self.field.p}) vs GF({a.field.p})")
            a = a.value
        p = self.field.p
        a %= p
        if a == 0:
            return Poly.zero(self.field, self.alphabet)
        return Poly._trusted(self.field, self.alphabet, {w: c * a % p for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        p = self.field.p
        out: dict[Letters, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                out[w] = (out.get(w, 0) + a * b) % p
        return Poly._trusted(self.field, self.alphabet, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def sandwich(self, left: Letters, right: Letters, coeff: int = 1) -> dict[Letters, int]:
        """Raw terms of ``coeff * left * self * right`` for words ``left``, ``right``."""
        p = self.field.p
        return {left + w + right: c * coeff % p for w, c in self._terms.items()}

    # tip decomposition

    def tip_view(self) -> "TipView":
        if not self._terms:
            raise DomainError("the zero polynomial has no tip")
        it = iter(self._terms.items())
        tip, ctip = next(it)
        tail = Poly._trusted(self.field, self.alphabet, dict(it))
        return TipView(Word._raw(tip, self.alphabet), Scalar(ctip, self.field), tail)

    @property
    def tip(self) -> Word:
        return self.tip_view().tip

    @property
    def ctip(self) -> Scalar:
        return self.tip_view().ctip

    @property
    def tail(self) -> "Poly":
        return self.tip_view().tail

    def monic(self) -> "Poly":
        return self.scale(self.field.inv_int(self.tip_view().ctip.value))

    def __str__(self):
        from .wire.text import emit_poly
        return emit_poly(self)

    def __repr__(self):
        return f"Poly({str(self)!r}, p={self.field.p}, n={self.alphabet.n})"


@dataclass(frozen=True)
class TipView:
    tip: Word
    ctip: Scalar
    tail: Poly

    def reassemble(self) -> Poly:
        return Poly.monomial(self.tip, self.ctip) + self.tail


def poly_from_terms(terms: Iterable[tuple[int | Scalar, Word]],
                    field: FieldSpec | None = None,
                    alphabet: Alphabet | None = None) -> Poly:
    """Sum of ``coeff * word`` pairs; duplicate words are combined."""
    terms = list(terms)
    for c, w in terms:
        if isinstance(c, Scalar):
            if field is None:
                field = c.field
            elif c.field != field:
                raise UsageError("field mismatch among coefficients")
        if alphabet is None:
            alphabet = w.alphabet
        elif w.alphabet != alphabet:
            raise UsageError("alphabet mismatch among words")
    if field is None or alphabet is None:
        raise UsageError("cannot infer the field/alphabet of an empty or int-only term list")
    out: dict[Letters, int] = {}
    for c, w in terms:
        v = c.value if isinstance(c, Scalar) else c
        out[w.letters] = out.get(w.letters, 0) + v
    return Poly(field, alphabet, out)


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_scale(a: Scalar | int, f: Poly) -> Poly:
    return f.scale(a)


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def tip_view(f: Poly) -> TipView:
    return f.tip_view()
