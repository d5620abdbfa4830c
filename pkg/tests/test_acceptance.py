"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
pytest terminal summary under "acceptance criteria"."""

import random
import time

import pytest

from freepc import (
    Alphabet, AttackerKnowledge, EncryptionParams, FieldSpec, LocalOracle, MaskPair,
    Poly, PrivateKey, decrypt, default_mask, derive_public, divide, encrypt,
    exact_divide_two_sided, keygen_chain, keygen_quad, normal_form, recover_generator,
    recover_reduced_basis, sample_message, validate_mask,
)
from freepc import cli
from freepc.wire.files import load_private, read_text
from freepc.wire.oracle import OracleServer
from freepc.wire.text import parse_poly

from conftest import ACCEPTANCE, GOLDEN, PRIMES, rand_poly

PARAMS = EncryptionParams()
# lighter ciphertexts for the 100-per-key equivalence sweep
SWEEP = EncryptionParams(terms_per_q=2, cofactor_len=2, cofactor_terms=2)
KEYS_PER_FIELD = 100
A6 = Alphabet(6)


def record(num, ok, detail):
    ACCEPTANCE[num] = (bool(ok), detail)
    assert ok, detail


def as_text(letters):
    return "." + ".".join(map(str, letters)) + "."


def equivalence_sweep(key, g_prime, rng, count=100):
    pub = derive_public(key, 1, SWEEP, rng)
    agree = 0
    for _ in range(count):
        c = encrypt(pub, sample_message(pub, 3, 3, rng), SWEEP, rng).poly
        agree += normal_form(c, key.G) == normal_form(c, [g_prime])
    return agree


# criterion 4 aggregates over the keys recovered in criteria 2 and 3
_EQUIV = {"keys": 0, "agree": 0, "total": 0}


def test_01_reference_mask_example():
    t0 = time.perf_counter()
    ok = True
    for p in PRIMES:
        F = FieldSpec(p)
        key = keygen_chain(F, 6, random.Random(100 + p))
        pub = derive_public(key, 1, PARAMS, random.Random(p))
        k = AttackerKnowledge.for_shape("chain", pub)
        t = parse_poly("1*x2.x4 + 1*x2.x3.x6 + 1*x4.x1.x5", F, A6)
        s = parse_poly("1*x5.x1.x3 + 1*x6.x2.x4", F, A6)
        ok &= validate_mask(k, 0, t, s)
        # independent scan: string search over every monomial of t*tail*s
        prod = t * key.G[0].tip_view().tail * s
        tip = as_text((1, 2, 3, 4, 5, 6))
        ok &= all(tip not in as_text(w) for w, _ in prod.items())
        ok &= len(prod) > 0
    dt = time.perf_counter() - t0
    record(1, ok and dt < 1.0, f"reference (t, s) valid for p in {PRIMES}; {dt:.3f}s (< 1s)")


def _recover_many(shape, rng):
    exact = runs = 0
    h_identical = h_runs = 0
    one_query = True
    recovery_time = 0.0
    for p in PRIMES:
        F = FieldSpec(p)
        for _ in range(KEYS_PER_FIELD):
            key = keygen_chain(F, 6, rng) if shape == "chain" else keygen_quad(F, rng)
            pub = derive_public(key, 2, PARAMS, rng)
            k = AttackerKnowledge.for_shape(shape, pub)
            g = key.G[0]
            oracle = LocalOracle(key)
            t0 = time.perf_counter()
            rec = recover_reduced_basis(k, oracle, pub, PARAMS, rng)
            recovery_time += time.perf_counter() - t0
            one_query &= oracle.queries == 1
            (gp,) = rec.G_prime
            runs += 1
            exact += gp.scale(g.ctip) == g
            if shape == "quad":
                mask = default_mask(k, 0, rng, with_h=False)
                h = Poly.zero(F, key.alphabet)
                while not h:
                    h = default_mask(k, 0, rng).h
                o0, o1 = LocalOracle(key), LocalOracle(key)
                g0 = recover_generator(k, 0, o0, mask, pub, PARAMS, rng)
                g1 = recover_generator(k, 0, o1, MaskPair(mask.t, mask.s, h), pub, PARAMS, rng)
                one_query &= o0.queries == o1.queries == 1
                h_runs += 1
                h_identical += g0 == g1 == gp
            _EQUIV["keys"] += 1
            _EQUIV["agree"] += equivalence_sweep(key, gp, rng)
            _EQUIV["total"] += 100
    return exact, runs, one_query, h_identical, h_runs, recovery_time


def test_02_chain_recovery():
    rng = random.Random(2)
    exact, runs, one_query, _, _, dt = _recover_many("chain", rng)
    ok = exact == runs == KEYS_PER_FIELD * len(PRIMES) and one_query and dt < 30
    record(2, ok, f"chain: {exact}/{runs} exact, one query each={one_query}, "
                  f"recovery {dt:.1f}s (< 30s)")


def test_03_quad_recovery():
    rng = random.Random(3)
    exact, runs, one_query, h_same, h_runs, _ = _recover_many("quad", rng)
    ok = exact == runs == KEYS_PER_FIELD * len(PRIMES) and one_query and h_same == h_runs == runs
    record(3, ok, f"quad: {exact}/{runs} exact, c''=c'+h identical {h_same}/{h_runs}, "
                  f"one query each={one_query}")


def test_04_decryption_equivalence():
    if _EQUIV["keys"] == 0:
        pytest.skip("needs criteria 2 and 3 in the same session")
    e = _EQUIV
    record(4, e["agree"] == e["total"] and e["keys"] == 1000,
           f"{e['keys']} recovered keys, {e['agree']}/{e['total']} ciphertexts decrypt identically")


def test_05_roundtrip():
    rng = random.Random(5)
    t0 = time.perf_counter()
    good = 0
    for i in range(1000):
        F = FieldSpec(PRIMES[i % len(PRIMES)])
        key = keygen_quad(F, rng) if i % 2 else keygen_chain(F, rng.randint(2, 6), rng)
        pub = derive_public(key, rng.randint(1, 2), PARAMS, rng)
        m = sample_message(pub, 4, 4, rng)
        good += decrypt(key, encrypt(pub, m, PARAMS, rng)).poly == m.poly
    dt = time.perf_counter() - t0
    record(5, good == 1000 and dt < 60, f"{good}/1000 round trips in {dt:.1f}s (< 60s)")


def test_06_division_certificate():
    rng = random.Random(6)
    good = 0
    for _ in range(1000):
        F, A = FieldSpec(rng.choice(PRIMES)), Alphabet(rng.randint(1, 4))
        g = rand_poly(rng, F, A, max_terms=8, max_len=6)
        divisors = [rand_poly(rng, F, A, 4, 3, nonzero=True) for _ in range(rng.randint(1, 3))]
        good += divide(g, divisors).check(g, divisors)
    record(6, good == 1000, f"{good}/1000 certificates satisfy all three invariants")


def test_07_exact_two_sided_division():
    rng = random.Random(7)
    good = 0
    for _ in range(1000):
        F, A = FieldSpec(rng.choice(PRIMES)), Alphabet(rng.randint(1, 4))
        t = rand_poly(rng, F, A, 3, 3, nonzero=True)
        s = rand_poly(rng, F, A, 3, 3, nonzero=True)
        w = rand_poly(rng, F, A, 5, 4)
        good += exact_divide_two_sided(t * w * s, t, s) == w
    record(7, good == 1000, f"{good}/1000 quotients recovered")


def test_08_ordering_axioms():
    rng = random.Random(8)
    violations = 0
    for _ in range(10_000):
        a = Alphabet(rng.randint(1, 8))
        p, q, r = (a.word(*[rng.randint(1, a.n) for _ in range(rng.randint(0, 12))]) for _ in range(3))
        if p < q:
            violations += not (p * r < q * r)
            violations += not (r * p < r * q)
        if len(q) and len(r):
            violations += not (q * r > q and q * r > r)
    record(8, violations == 0, f"10^4 triples, {violations} violations")


def test_09_oracle_integration(tmp_path, capsys):
    key = load_private(read_text(GOLDEN / "chain_demo.key"))
    pubfile = GOLDEN / "chain_demo.pub"
    out = tmp_path / "recovered.key"
    t0 = time.perf_counter()
    with OracleServer(key) as srv:
        addr = "%s:%d" % srv.address
        rc1 = cli.main(["attack", "--pub", str(pubfile), "--oracle", addr, "--shape", "chain",
                        "--seed", "9", "--out", str(out)])
        recovery_queries = srv.decrypt_queries
        capsys.readouterr()
        rc2 = cli.main(["verify", "--pub", str(pubfile), "--recovered", str(out), "--oracle", addr,
                        "--trials", "50", "--seed", "10"])
        report = capsys.readouterr().out.strip()
        total_queries = srv.decrypt_queries
    dt = time.perf_counter() - t0
    rec = load_private(read_text(out))
    equivalent = rec.G[0].scale(key.G[0].ctip) == key.G[0]
    ok = (rc1 == rc2 == 0 and report == "50/50" and recovery_queries == 1
          and total_queries == 51 and equivalent and dt < 10)
    record(9, ok, f"attack used {recovery_queries} DECRYPT, verify {report}, "
                  f"equivalent={equivalent}, {dt:.2f}s (< 10s)")


def test_10_two_generator_basis():
    rng = random.Random(10)
    F, A = FieldSpec(7), Alphabet(4)
    g1 = parse_poly("3*x1.x2 + 1*x4 + 5*x3 + 2*x1 + 6", F, A)
    g2 = parse_poly("2*x3.x4 + 4*x2 + 1*x1 + 3", F, A)
    key = PrivateKey((g1, g2), F, A)
    pub = derive_public(key, 2, PARAMS, rng)
    k = AttackerKnowledge.linear_tails(pub)
    oracle = LocalOracle(key)
    rec = recover_reduced_basis(k, oracle, pub, PARAMS, rng, trials=50)
    both = rec.G_prime == (g1.monic(), g2.monic())
    record(10, both and rec.verified, f"recovered both generators={both}, verified={rec.verified} "
                                      f"({rec.trials} trials)")
