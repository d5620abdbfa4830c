"""
Reduced bases with several generators
=====================================

Repeating the attack once per generator breaks a reduced Groebner basis
too.  Masks must avoid every tip, because the oracle reduces by all of them.
"""

import random

from freepc import (
    Alphabet, AttackerKnowledge, EncryptionParams, FieldSpec, LocalOracle, PrivateKey,
    derive_public, recover_reduced_basis,
)
from freepc.wire.text import parse_poly

rng = random.Random(3)
F, A = FieldSpec(11), Alphabet(4)
g1 = parse_poly("4*x1.x2 + 1*x3 + 2*x1 + 9", F, A)
g2 = parse_poly("7*x3.x4 + 5*x2 + 1", F, A)
key = PrivateKey((g1, g2), F, A)

params = EncryptionParams()
pub = derive_public(key, 2, params, rng)
oracle = LocalOracle(key)
rec = recover_reduced_basis(AttackerKnowledge.linear_tails(pub), oracle, pub, params, rng, trials=40)
for g, gp in zip(key.G, rec.G_prime):
    print(f"{g}  ->  {gp}")
print("queries:", oracle.queries, " verified:", rec.verified)
