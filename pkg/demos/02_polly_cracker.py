"""
Noncommutative Polly Cracker round trip
=======================================

Key generation, public key derivation, encryption of a message that avoids
the published tip, and decryption by reduction.
"""

import random

from freepc import EncryptionParams, decrypt, derive_public, encrypt, keygen_chain, sample_message
from freepc import FieldSpec

rng = random.Random(0)
params = EncryptionParams()

key = keygen_chain(FieldSpec(13), 6, rng)
print("private g =", key.G[0])

pub = derive_public(key, 2, params, rng)
print("public polynomials:", [len(q) for q in pub.B], "terms; tip", pub.tips[0])

m = sample_message(pub, 4, 4, rng)
c = encrypt(pub, m, params, rng)
print("message    :", m.poly)
print("ciphertext :", len(c.poly), "terms")
print("decrypted  :", decrypt(key, c).poly)
assert decrypt(key, c).poly == m.poly
