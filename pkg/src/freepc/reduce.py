"""Division in the free algebra and normal forms.

Dividing g by f_1..f_k writes ``g = sum coeff * u * f_i * v + r`` where no
tip(f_i) occurs as a subword of any monomial of r.  The strategy is fixed
so results are reproducible: always rewrite the deglex-largest reducible
monomial, preferring the lowest divisor index and the leftmost occurrence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import UsageError
from .ff import Scalar
from .ncpoly import Poly
from .word import Letters, Word, deglex_key, find_subword


@dataclass(frozen=True)
class DivisionStep:
    divisor_index: int  # 1-based, matching f_1..f_k
    coeff: Scalar
    left: Word
    right: Word


@dataclass(frozen=True)
class DivisionResult:
    steps: tuple[DivisionStep, ...]
    remainder: Poly

    def quotient_sum(self, divisors: Sequence[Poly]) -> Poly:
        """The ideal part ``sum coeff * left * f_i * right``."""
        f0 = divisors[0]
        acc: dict[Letters, int] = {}
        p = f0.field.p
        for st in self.steps:
            f = divisors[st.divisor_index - 1]
            for w, c in f.sandwich(st.left.letters, st.right.letters, st.coeff.value).items():
                acc[w] = (acc.get(w, 0) + c) % p
        return Poly(f0.field, f0.alphabet, acc)

    def check(self, g: Poly, divisors: Sequence[Poly]) -> bool:
        """Verify reconstruction, the tip bound and irreducibility of r."""
        if self.quotient_sum(divisors) + self.remainder != g:
            return False
        if g:
            top = deglex_key(g.tip.letters)
            for st in self.steps:
                f = divisors[st.divisor_index - 1]
                key = deglex_key(st.left.letters + f.tip.letters + st.right.letters)
                if key > top:
                    return False
        elif self.steps:
            return False
        tips = [f.tip.letters for f in divisors]
        return all(find_subword(w, t) < 0 for w in self.remainder._terms for t in tips)


def _heap_key(w: Letters):
    # max-heap on deglex via heapq's min-heap
    return (-len(w), tuple(-a for a in w))


def _check_divisors(g: Poly, divisors: Sequence[Poly]) -> None:
    if not divisors:
        raise UsageError("need at least one divisor")
    for i, f in enumerate(divisors, 1):
        if not isinstance(f, Poly):
            raise UsageError(f"divisor {i} is not a polynomial")
        g._check(f)
        if not f:
            raise UsageError(f"divisor {i} is the zero polynomial")


def _divide(g: Poly, divisors: Sequence[Poly], record: bool):
    _check_divisors(g, divisors)
    p = g.field.p
    alpha = g.alphabet
    heads = []
    for f in divisors:
        tv = f.tip_view()
        heads.append((tv.tip.letters, g.field.inv_int(tv.ctip.value), tuple(tv.tail.items())))

    work = dict(g.items())
    heap = [_heap_key(w) for w in work]
    heapq.heapify(heap)
    queued = set(work)
    remainder: dict[Letters, int] = {}
    steps: list[DivisionStep] = []

    while heap:
        key = heapq.heappop(heap)
        w = tuple(-a for a in key[1])
        queued.discard(w)
        c = work.pop(w, 0)
        if not c:
            continue
        for idx, (t, inv, tail) in enumerate(heads):
            pos = find_subword(w, t)
            if pos >= 0:
                break
        else:
            remainder[w] = c
            continue
        q = c * inv % p
        left, right = w[:pos], w[pos + len(t):]
        if record:
            steps.append(DivisionStep(idx + 1, Scalar(q, g.field),
                                      Word._raw(left, alpha), Word._raw(right, alpha)))
        # the tip term cancels w exactly; push the rewritten tail
        for tw, tc in tail:
            nw = left + tw + right
            assert deglex_key(nw) < deglex_key(w), "reduction step must decrease the monomial"
            v = (work.get(nw, 0) - q * tc) % p
            if v:
                work[nw] = v
                if nw not in queued:
                    queued.add(nw)
                    heapq.heappush(heap, _heap_key(nw))
            else:
                work.pop(nw, None)

    r = Poly._trusted(g.field, alpha, remainder)
    return tuple(steps), r


def divide(g: Poly, divisors: Sequence[Poly]) -> DivisionResult:
    steps, r = _divide(g, divisors, record=True)
    return DivisionResult(steps, r)


def normal_form(f: Poly, G: Sequence[Poly]) -> Poly:
    """Remainder of ``f`` on division by ``G`` (no certificate kept)."""
    return _divide(f, G, record=False)[1]


def is_normal(f: Poly, tips: Sequence[Word]) -> bool:
    """True iff no monomial of ``f`` contains any of ``tips``."""
    raw = []
    for t in tips:
        if not len(t):
            raise UsageError("tips must be nonempty words")
        raw.append(t.letters)
    return all(find_subword(w, t) < 0 for w in f._terms for t in raw)
