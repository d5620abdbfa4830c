"""Chosen-ciphertext key recovery against noncommutative Polly Cracker.

For a generator g with tip T and tail(g) = g - Ctip(g)*T, the single
monomial T reduces modulo g to -Ctip(g)^-1 * tail(g).  Sandwiching T
between masks t and s whose products with the tail stay irreducible, and
adding public ideal noise, gives a fake ciphertext

    c'' = t*T*s + sum F*q*H + h

whose decryption is -Ctip(g)^-1 * t*tail(g)*s + h.  Subtracting h and
cancelling t and s on both sides yields the tail up to the unknown scalar,
which is enough to rebuild g' = T + Ctip(g)^-1 * tail(g), a scalar multiple
of g that decrypts exactly like the private key.  One oracle query per
generator suffices.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import AttackError, DomainError, PartialRecoveryError, QuotientError, UsageError
from .ff import FieldSpec
from .ncpoly import Poly
from .pollycracker import (
    Ciphertext, EncryptionParams, PrivateKey, PublicKey, decrypt, encrypt, ideal_noise,
    random_poly, sample_message,
)
from .reduce import is_normal, normal_form
from .word import ORDERING, Alphabet, Letters, Word, deglex_key, find_subword

MASK_TRIES = 200


@dataclass(frozen=True)
class AttackerKnowledge:
    """What the attacker knows about each private generator: its tip, and a
    superset of the words that may occur in its tail."""

    tips: tuple[Word, ...]
    tail_support: tuple[frozenset[Word], ...]
    field: FieldSpec
    alphabet: Alphabet
    ordering: str = ORDERING

    def __post_init__(self):
        object.__setattr__(self, "tips", tuple(self.tips))
        object.__setattr__(self, "tail_support", tuple(frozenset(s) for s in self.tail_support))
        if len(self.tips) != len(self.tail_support):
            raise UsageError("need one tail support per tip")
        for tip, sup in zip(self.tips, self.tail_support):
            for w in sup:
                if not w < tip:
                    raise UsageError(f"tail word {w} is not below tip {tip}")

    @classmethod
    def linear_tails(cls, pub: PublicKey) -> "AttackerKnowledge":
        """Tails made of letters and a constant, as in both built-in key shapes."""
        support = frozenset(pub.alphabet.words_up_to(1))
        sups = []
        for tip in pub.tips:
            if len(tip) < 2:
                raise UsageError(f"tip {tip} is too short for a linear tail")
            sups.append(support)
        return cls(pub.tips, tuple(sups), pub.field, pub.alphabet, pub.ordering)

    @classmethod
    def for_shape(cls, shape: str, pub: PublicKey) -> "AttackerKnowledge":
        n = pub.alphabet.n
        if shape == "chain":
            expected = tuple(range(1, n + 1))
        elif shape == "quad":
            if n != 2:
                raise UsageError("quad keys live over two variables")
            expected = (1, 2)
        else:
            raise UsageError(f"unknown key shape {shape!r}")
        if len(pub.tips) != 1 or pub.tips[0].letters != expected:
            raise UsageError(f"published tips do not match the {shape} shape")
        return cls.linear_tails(pub)


class Oracle:
    """Decryption oracle interface with a query counter.

    Subclasses implement :meth:`_decrypt`; callers use :meth:`query`.
    """

    def __init__(self):
        self.queries = 0
        self._lock = threading.Lock()

    def query(self, c: Ciphertext) -> Poly:
        with self._lock:
            self.queries += 1
        return self._decrypt(c)

    def _decrypt(self, c: Ciphertext) -> Poly:
        raise NotImplementedError


class LocalOracle(Oracle):
    """In-process oracle holding the private key."""

    def __init__(self, priv: PrivateKey):
        super().__init__()
        self.priv = priv

    def _decrypt(self, c: Ciphertext) -> Poly:
        return decrypt(self.priv, c).poly


@dataclass(frozen=True)
class MaskPair:
    t: Poly
    s: Poly
    h: Poly


@dataclass(frozen=True)
class RecoveredKey:
    G_prime: tuple[Poly, ...]
    verified: bool
    trials: int


@dataclass(frozen=True)
class VerifyReport:
    matches: int
    total: int

    @property
    def ok(self) -> bool:
        return self.matches == self.total

    def __str__(self):
        return f"{self.matches}/{self.total}"


def _all_tips(k: AttackerKnowledge) -> list[Letters]:
    return [t.letters for t in k.tips]


def validate_mask(k: AttackerKnowledge, gen_index: int, t: Poly, s: Poly) -> bool:
    """True iff t * w * s avoids every known tip for every possible tail word w."""
    if not t or not s:
        raise UsageError("masks must be nonzero")
    support = k.tail_support[gen_index]
    if not support:
        raise UsageError("empty tail support")
    tips = _all_tips(k)
    for w in support:
        for a in t._terms:
            for b in s._terms:
                m = a + w.letters + b
                if any(find_subword(m, tip) >= 0 for tip in tips):
                    return False
    return True


def default_mask(k: AttackerKnowledge, gen_index: int, rng: random.Random,
                 with_h: bool = True) -> MaskPair:
    """Random small masks passing :func:`validate_mask`, else t = s = 1."""
    tips = _all_tips(k)
    one = Poly.constant(1, k.field, k.alphabet)
    pick = None
    for _ in range(MASK_TRIES):
        t = random_poly(k.field, k.alphabet, 2, 2, rng)
        s = random_poly(k.field, k.alphabet, 2, 2, rng)
        if validate_mask(k, gen_index, t, s):
            pick = (t, s)
            break
    if pick is None:
        pick = (one, one)
        if not validate_mask(k, gen_index, one, one):
            raise AttackError(f"no valid mask found for generator {gen_index + 1}")
    if with_h and rng.random() < 0.75:
        h = random_poly(k.field, k.alphabet, 3, 3, rng, avoid=tips)
    else:
        h = Poly.zero(k.field, k.alphabet)
    return MaskPair(pick[0], pick[1], h)


def _check_mask(k: AttackerKnowledge, gen_index: int, mask: MaskPair) -> None:
    if not validate_mask(k, gen_index, mask.t, mask.s):
        raise AttackError("mask (t, s) can hit a tip")
    if not is_normal(mask.h, k.tips):
        raise AttackError("mask h contains a tip")


def build_fake_ciphertext(k: AttackerKnowledge, gen_index: int, mask: MaskPair,
                          pub: PublicKey | None, params: EncryptionParams,
                          rng: random.Random) -> Ciphertext:
    """c'' = t * tip * s + (public ideal noise) + h."""
    _check_mask(k, gen_index, mask)
    tip = Poly.monomial(k.tips[gen_index], 1, k.field)
    fake = mask.t * tip * mask.s + mask.h
    if pub is not None:
        if pub.field != k.field or pub.alphabet != k.alphabet:
            raise UsageError("public key lives in a different universe")
        noise, _ = ideal_noise(pub, params, rng)
        fake = fake + noise
    return Ciphertext(fake)


def exact_divide_two_sided(P: Poly, t: Poly, s: Poly) -> Poly:
    """The unique w with t * w * s == P; raises :class:`QuotientError` otherwise."""
    if not t or not s:
        raise UsageError("cofactors must be nonzero")
    P._check(t)
    P._check(s)
    tt, ts = t.tip_view(), s.tip_view()
    lt, ls = len(tt.tip), len(ts.tip)
    tl, sl = tt.tip.letters, ts.tip.letters
    inv = P.field.inv_int(tt.ctip.value * ts.ctip.value)
    p = P.field.p
    w: dict[Letters, int] = {}
    rest = P
    while rest:
        top, c = next(iter(rest.items()))
        if len(top) < lt + ls or top[:lt] != tl or top[len(top) - ls:] != sl:
            raise QuotientError(f"tip {Word._raw(top, P.alphabet)} does not factor through the cofactor tips")
        mid = top[lt:len(top) - ls]
        q = c * inv % p
        w[mid] = (w.get(mid, 0) + q) % p
        step = t * Poly._trusted(P.field, P.alphabet, {mid: q}) * s
        nxt = rest - step
        if nxt and deglex_key(next(iter(nxt.items()))[0]) >= deglex_key(top):
            raise QuotientError("residual did not decrease")
        rest = nxt
    return Poly(P.field, P.alphabet, w)


def recover_generator(k: AttackerKnowledge, gen_index: int, oracle: Oracle, mask: MaskPair,
                      pub: PublicKey | None, params: EncryptionParams,
                      rng: random.Random) -> Poly:
    """One oracle query; returns g' = tip + Ctip^-1 * tail."""
    fake = build_fake_ciphertext(k, gen_index, mask, pub, params, rng)
    reply = oracle.query(fake)
    if reply.field != k.field or reply.alphabet != k.alphabet:
        raise AttackError("oracle reply lives in a different universe")
    try:
        w = exact_divide_two_sided(reply - mask.h, mask.t, mask.s)
    except QuotientError as exc:
        raise AttackError(f"reply is not a two-sided multiple of the masks: {exc}") from exc
    tip = Poly.monomial(k.tips[gen_index], 1, k.field)
    g_prime = tip - w
    if g_prime.tip != k.tips[gen_index] or not all(x in k.tail_support[gen_index] for x in w.words()):
        raise AttackError("recovered tail contradicts the assumed key form")
    return g_prime


def verify_recovery(G_prime: Sequence[Poly], reference: Oracle, pub: PublicKey, trials: int,
                    params: EncryptionParams, rng: random.Random,
                    msg_terms: int = 4, msg_len: int = 4) -> VerifyReport:
    """Encrypt fresh messages; compare oracle decryption with reduction by G_prime."""
    if trials < 1:
        raise UsageError("trials must be >= 1")
    matches = 0
    for _ in range(trials):
        m = sample_message(pub, msg_terms, msg_len, rng)
        c = encrypt(pub, m, params, rng)
        if reference.query(c) == normal_form(c.poly, G_prime):
            matches += 1
    return VerifyReport(matches, trials)


def recover_reduced_basis(k: AttackerKnowledge, oracle: Oracle, pub: PublicKey | None,
                          params: EncryptionParams, rng: random.Random,
                          trials: int = 0) -> RecoveredKey:
    """Recover every generator of a reduced Groebner basis.

    Masks are checked against all known tips since the oracle reduces by
    the whole basis.  With ``trials`` > 0 the result is also verified
    against the oracle on that many fresh ciphertexts.
    """
    G_prime = []
    for i in range(len(k.tips)):
        try:
            mask = default_mask(k, i, rng)
            G_prime.append(recover_generator(k, i, oracle, mask, pub, params, rng))
        except (AttackError, DomainError) as exc:
            raise PartialRecoveryError(i + 1, str(exc)) from exc
    # public polynomials lie in the ideal; a leftover means a generator was missed
    if pub is not None and any(normal_form(q, G_prime) for q in pub.B):
        raise PartialRecoveryError(len(G_prime) + 1, "public key is not inside the recovered ideal")
    verified = False
    if trials:
        if pub is None:
            raise UsageError("verification needs a public key")
        verified = verify_recovery(G_prime, oracle, pub, trials, params, rng).ok
    return RecoveredKey(tuple(G_prime), verified, trials)
