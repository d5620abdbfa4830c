"""
Attacking a decryption oracle over TCP
======================================

The oracle service speaks a line protocol (PARAMS / DECRYPT).  The attack
client talks to it through the same interface as the in-process oracle.
The equivalent shell session is::

    freepc keygen --shape chain --p 7 --n 6 --seed 1 --out demo.key
    freepc pubkey --key demo.key --s 2 --seed 2 --out demo.pub
    freepc oracle --key demo.key --listen 127.0.0.1:7070 &
    freepc attack --pub demo.pub --oracle 127.0.0.1:7070 --shape chain --seed 3 --out rec.key
    freepc verify --pub demo.pub --recovered rec.key --oracle 127.0.0.1:7070 --trials 50
"""

import random

from freepc import AttackerKnowledge, EncryptionParams, FieldSpec, derive_public, keygen_chain
from freepc import recover_reduced_basis, verify_recovery
from freepc.wire.oracle import OracleServer, RemoteOracle

rng = random.Random(2)
params = EncryptionParams()
key = keygen_chain(FieldSpec(7), 6, rng)
pub = derive_public(key, 2, params, rng)

with OracleServer(key) as server:
    host, port = server.address
    with RemoteOracle(host, port) as oracle:
        print("PARAMS ->", oracle.request("PARAMS"))
        rec = recover_reduced_basis(AttackerKnowledge.for_shape("chain", pub), oracle, pub, params, rng)
        print("recovered:", rec.G_prime[0])
        print("DECRYPT queries used for recovery:", server.decrypt_queries)
        print("verification:", verify_recovery(rec.G_prime, oracle, pub, 50, params, rng))
