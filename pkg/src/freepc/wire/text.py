"""Text form of words and polynomials.

Grammar::

    poly  := "0" | term (" + " term)*
    term  := coeff | coeff "*" word
    word  := var ("." var)*
    var   := "x" index

Coefficients are always explicit.  :func:`emit_poly` writes terms in
descending deglex order with coefficients in [1, p); :func:`parse_poly`
also accepts other spacing, any term order, repeated words and zero
coefficients.
"""

from __future__ import annotations

from ..errors import ParseError
from ..ff import FieldSpec
from ..ncpoly import Poly
from ..word import Alphabet, Letters, Word


def emit_word(w: Word | Letters) -> str:
    letters = w.letters if isinstance(w, Word) else w
    if not letters:
        raise ValueError("the empty word has no standalone text form")
    return ".".join(f"x{a}" for a in letters)


def emit_poly(f: Poly) -> str:
    if not f:
        return "0"
    parts = []
    for w, c in f.items():
        parts.append(f"{c}*{emit_word(w)}" if w else str(c))
    return " + ".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def offset(self) -> int:
        return len(self.text[:self.i].encode("utf-8"))

    def fail(self, msg: str):
        raise ParseError(msg, self.offset())

    def ws(self):
        t = self.text
        while self.i < len(t) and t[self.i] in " \t":
            self.i += 1

    def at_end(self) -> bool:
        return self.i >= len(self.text)

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.i += 1

    def number(self, what: str) -> int:
        start = self.i
        t = self.text
        while self.i < len(t) and t[self.i] in "0123456789":
            self.i += 1
        if start == self.i:
            self.fail(f"expected {what}")
        return int(t[start:self.i])

    def word(self, alphabet: Alphabet) -> Letters:
        letters = []
        while True:
            self.ws()
            self.expect("x")
            start = self.i
            idx = self.number("variable index")
            if not 1 <= idx <= alphabet.n:
                self.i = start
                self.fail(f"variable x{idx} outside x1..x{alphabet.n}")
            letters.append(idx)
            self.ws()
            if self.peek() != ".":
                return tuple(letters)
            self.i += 1


def parse_word(text: str, alphabet: Alphabet) -> Word:
    sc = _Scanner(text)
    letters = sc.word(alphabet)
    sc.ws()
    if not sc.at_end():
        sc.fail("trailing characters after word")
    return Word(letters, alphabet)


def parse_poly(text: str, field: FieldSpec, alphabet: Alphabet) -> Poly:
    sc = _Scanner(text)
    terms: dict[Letters, int] = {}
    sc.ws()
    if sc.at_end():
        sc.fail("empty polynomial")
    while True:
        sc.ws()
        start = sc.i
        c = sc.number("coefficient")
        if c >= field.p:
            sc.i = start
            sc.fail(f"coefficient {c} not below p={field.p}")
        sc.ws()
        w: Letters = ()
        if sc.peek() == "*":
            sc.i += 1
            w = sc.word(alphabet)
        terms[w] = terms.get(w, 0) + c
        sc.ws()
        if sc.at_end():
            break
        sc.expect("+")
    return Poly(field, alphabet, terms)
