"""Line-based key and ciphertext files.

Every file starts with the same preamble::

    pollycracker v1
    field p=<int>
    vars n=<int>
    order deglex

followed by ``generator <poly>`` lines (private key), ``tip <word>`` lines
then ``public <poly>`` lines (public key), or a single
``ciphertext <poly>`` line.
"""

from __future__ import annotations

import re
from pathlib import Path

from ..errors import FreePCError, ParseError
from ..ff import FieldSpec
from ..ncpoly import Poly
from ..pollycracker import Ciphertext, PrivateKey, PublicKey
from ..word import ORDERING, Alphabet
from .text import emit_poly, emit_word, parse_poly, parse_word

HEADER = "pollycracker v1"


def _preamble(field: FieldSpec, alphabet: Alphabet, ordering: str = ORDERING) -> list[str]:
    return [HEADER, f"field p={field.p}", f"vars n={alphabet.n}", f"order {ordering}"]


def dump_private(key: PrivateKey) -> str:
    lines = _preamble(key.field, key.alphabet, key.ordering)
    lines += [f"generator {emit_poly(g)}" for g in key.G]
    return "\n".join(lines) + "\n"


def dump_public(pub: PublicKey) -> str:
    lines = _preamble(pub.field, pub.alphabet, pub.ordering)
    lines += [f"tip {emit_word(t)}" for t in pub.tips]
    lines += [f"public {emit_poly(q)}" for q in pub.B]
    return "\n".join(lines) + "\n"


def dump_ciphertext(c: Ciphertext) -> str:
    lines = _preamble(c.poly.field, c.poly.alphabet)
    lines.append(f"ciphertext {emit_poly(c.poly)}")
    return "\n".join(lines) + "\n"


_PARAM_LINES = [
    ("field", re.compile(r"field p=(\d+)")),
    ("vars", re.compile(r"vars n=(\d+)")),
    ("order", re.compile(r"order (\S+)")),
]


def _split(text: str):
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise ParseError(f"missing {HEADER!r} header", 0)
    vals = []
    for lineno, (name, pat) in enumerate(_PARAM_LINES, 2):
        m = pat.fullmatch(lines[lineno - 1]) if len(lines) >= lineno else None
        if not m:
            raise ParseError(f"line {lineno}: expected {name} line")
        vals.append(m.group(1))
    try:
        field = FieldSpec(int(vals[0]))
        alphabet = Alphabet(int(vals[1]))
    except FreePCError as exc:
        raise ParseError(f"bad parameters: {exc}") from exc
    if vals[2] != ORDERING:
        raise ParseError(f"unsupported ordering {vals[2]!r}")
    body = []
    for lineno, line in enumerate(lines[4:], 5):
        kw, sep, rest = line.partition(" ")
        if not sep:
            raise ParseError(f"line {lineno}: unrecognised line {line!r}")
        body.append((lineno, kw, rest))
    return field, alphabet, body


def _poly(rest: str, field, alphabet, lineno: int) -> Poly:
    try:
        return parse_poly(rest, field, alphabet)
    except ParseError as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc


def load_private(text: str) -> PrivateKey:
    field, alphabet, body = _split(text)
    gens = []
    for lineno, kw, rest in body:
        if kw != "generator":
            raise ParseError(f"line {lineno}: unexpected {kw!r} in a private key")
        gens.append(_poly(rest, field, alphabet, lineno))
    if not gens:
        raise ParseError("private key has no generator lines")
    return PrivateKey(tuple(gens), field, alphabet)


def load_public(text: str) -> PublicKey:
    field, alphabet, body = _split(text)
    tips, B = [], []
    for lineno, kw, rest in body:
        if kw == "tip" and not B:
            try:
                tips.append(parse_word(rest, alphabet))
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
        elif kw == "public" and tips:
            B.append(_poly(rest, field, alphabet, lineno))
        else:
            raise ParseError(f"line {lineno}: unexpected {kw!r} in a public key")
    if not tips:
        raise ParseError("public key has no tip lines")
    return PublicKey(tuple(B), tuple(tips), field, alphabet)


def load_ciphertext(text: str) -> Ciphertext:
    field, alphabet, body = _split(text)
    if len(body) != 1 or body[0][1] != "ciphertext":
        raise ParseError("ciphertext file must hold exactly one ciphertext line")
    lineno, _, rest = body[0]
    return Ciphertext(_poly(rest, field, alphabet, lineno))


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
