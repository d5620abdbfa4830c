"""Noncommutative monomials: words over x1..xn.

A word is stored as a tuple of 1-based letter indices.  Monomials are
multiplied by concatenation and ordered degree-lexicographically with
x1 < x2 < ... < xn, which is an admissible well-ordering.

The polynomial code works directly on the raw tuples; :class:`Word` is the
checked public face that knows its alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import UsageError

MAX_VARS = 64
ORDERING = "deglex"

Letters = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_VARS:
            raise UsageError(f"alphabet size must be in [1, {MAX_VARS}], got {self.n!r}")

    def check(self, letters: Iterable[int]) -> Letters:
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, int) or not 1 <= a <= self.n:
                raise UsageError(f"letter index {a!r} outside x1..x{self.n}")
        return letters

    def word(self, *letters: int) -> "Word":
        return Word(letters, self)

    @property
    def empty(self) -> "Word":
        return Word((), self)

    def letters(self) -> Iterator["Word"]:
        return (Word((i,), self) for i in range(1, self.n + 1))

    def words_up_to(self, length: int) -> Iterator["Word"]:
        """All words of length <= ``length`` in increasing deglex order."""
        level: list[Letters] = [()]
        for _ in range(length + 1):
            for w in level:
                yield Word(w, self)
            level = [w + (a,) for w in level for a in range(1, self.n + 1)]


class Word:
    """An element of the free monoid on the alphabet."""

    __slots__ = ("letters", "alphabet")

    def __init__(self, letters: Iterable[int], alphabet: Alphabet):
        object.__setattr__(self, "letters", alphabet.check(letters))
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def _raw(cls, letters: Letters, alphabet: Alphabet) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "alphabet", alphabet)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.alphabet == other.alphabet

    def __hash__(self):
        return hash((self.letters, self.alphabet.n))

    def __lt__(self, other: "Word") -> bool:
        return compare_deglex(self, other) < 0

    def __le__(self, other: "Word") -> bool:
        return compare_deglex(self, other) <= 0

    def __gt__(self, other: "Word") -> bool:
        return compare_deglex(self, other) > 0

    def __ge__(self, other: "Word") -> bool:
        return compare_deglex(self, other) >= 0

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __str__(self):
        return ".".join(f"x{a}" for a in self.letters) if self.letters else "1"

    def __repr__(self):
        return f"Word({str(self)!r}, n={self.alphabet.n})"


def _same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise UsageError(f"alphabet mismatch: n={u.alphabet.n} vs n={v.alphabet.n}")


def deglex_key(letters: Letters) -> tuple[int, Letters]:
    """Sort key realising the deglex order on raw letter tuples."""
    return (len(letters), letters)


def concat(u: Word, v: Word) -> Word:
    _same_alphabet(u, v)
    return Word._raw(u.letters + v.letters, u.alphabet)


def find_subword(m: Letters, b: Letters) -> int:
    """Index of the leftmost occurrence of ``b`` in ``m``, or -1."""
    lb = len(b)
    if not lb:
        return 0
    first = b[0]
    for i in range(len(m) - lb + 1):
        if m[i] == first and m[i:i + lb] == b:
            return i
    return -1


def subword_factor(m: Word, b: Word) -> tuple[Word, Word] | None:
    """Split ``m`` as ``l * b * r`` at the leftmost occurrence of ``b``."""
    _same_alphabet(m, b)
    if not b.letters:
        raise UsageError("cannot factor by the empty word")
    i = find_subword(m.letters, b.letters)
    if i < 0:
        return None
    a = m.alphabet
    return Word._raw(m.letters[:i], a), Word._raw(m.letters[i + len(b):], a)


def divides(b: Word, m: Word) -> bool:
    """True iff ``b`` occurs in ``m`` as a subword."""
    return subword_factor(m, b) is not None


def compare_deglex(u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    _same_alphabet(u, v)
    ku, kv = deglex_key(u.letters), deglex_key(v.letters)
    return (ku > kv) - (ku < kv)


def has_self_overlap(w: Word | Letters) -> bool:
    """True iff some nonempty proper prefix of ``w`` equals a suffix."""
    letters = w.letters if isinstance(w, Word) else w
    return any(letters[:k] == letters[-k:] for k in range(1, len(letters)))


def tips_overlap_free(tips: Iterable[Word | Letters]) -> bool:
    """No tip overlaps itself or another, and none contains another.

    A generating set whose tips pass this check has no obstructions at all,
    so it is a Groebner basis of the ideal it generates.
    """
    ts = [t.letters if isinstance(t, Word) else tuple(t) for t in tips]
    for i, a in enumerate(ts):
        for j, b in enumerate(ts):
            if i != j and find_subword(a, b) >= 0:
                return False
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    return False
    return True
