"""
Recovering an equivalent key with one chosen ciphertext
=======================================================

The attacker knows the tip of g and that its tail is linear.  Sending
t * tip * s plus ideal noise plus a harmless h returns a two-sided multiple
of the tail, from which g' = tip + Ctip^-1 * tail follows.
"""

import random

from freepc import (
    AttackerKnowledge, EncryptionParams, FieldSpec, LocalOracle, MaskPair, derive_public,
    keygen_quad, recover_generator, validate_mask, verify_recovery,
)
from freepc.wire.text import parse_poly

rng = random.Random(1)
params = EncryptionParams()
F = FieldSpec(101)

key = keygen_quad(F, rng)
pub = derive_public(key, 2, params, rng)
oracle = LocalOracle(key)
k = AttackerKnowledge.for_shape("quad", pub)
print("secret g          :", key.G[0])

t = parse_poly("1*x2 + 3*x2.x2", F, key.alphabet)
s = parse_poly("1*x1", F, key.alphabet)
h = parse_poly("7*x2.x1 + 1", F, key.alphabet)
print("mask valid        :", validate_mask(k, 0, t, s))

g_prime = recover_generator(k, 0, oracle, MaskPair(t, s, h), pub, params, rng)
print("recovered g'      :", g_prime)
print("Ctip(g) * g' == g :", g_prime.scale(key.G[0].ctip) == key.G[0])
print("oracle queries    :", oracle.queries)

report = verify_recovery([g_prime], oracle, pub, 25, params, rng)
print("fresh ciphertexts decrypted identically:", report)
