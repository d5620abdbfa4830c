"""Command line interface: ``freepc <command> ...``.

Every randomised command takes ``--seed``; the FREEPC_SEED environment
variable provides the default.
"""

from __future__ import annotations

import argparse
import os
import random
import signal
import sys
import threading
from pathlib import Path

from .cca import AttackerKnowledge, recover_reduced_basis, verify_recovery
from .errors import FreePCError
from .ff import FieldSpec
from .pollycracker import (
    EncryptionParams, Message, PrivateKey, decrypt, derive_public, encrypt, is_message,
    keygen_chain, keygen_quad,
)
from .wire.files import (
    dump_ciphertext, dump_private, dump_public, load_ciphertext, load_private, load_public,
    read_text, write_text,
)
from .wire.oracle import RemoteOracle, parse_hostport, serve_oracle
from .wire.text import emit_poly, parse_poly


def _default_seed() -> int | None:
    env = os.environ.get("FREEPC_SEED")
    return int(env) if env not in (None, "") else None


def _rng(args) -> random.Random:
    return random.Random(args.seed)


def _params(args) -> EncryptionParams:
    return EncryptionParams(args.terms_per_q, args.cofactor_len, args.cofactor_terms, args.seed)


def _hostport(text: str) -> tuple[str, int]:
    try:
        return parse_hostport(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_keygen(args) -> int:
    field = FieldSpec(args.p)
    rng = _rng(args)
    if args.shape == "chain":
        key = keygen_chain(field, args.n if args.n is not None else 6, rng)
    else:
        if args.n not in (None, 2):
            raise FreePCError("quad keys always use n=2")
        key = keygen_quad(field, rng)
    write_text(args.out, dump_private(key))
    return 0


def cmd_pubkey(args) -> int:
    priv = load_private(read_text(args.key))
    pub = derive_public(priv, args.s, _params(args), _rng(args))
    write_text(args.out, dump_public(pub))
    return 0


def cmd_encrypt(args) -> int:
    pub = load_public(read_text(args.pub))
    text = args.msg
    if Path(text).is_file():
        text = read_text(text).strip()
    m = parse_poly(text, pub.field, pub.alphabet)
    if not is_message(pub, m):
        raise FreePCError("message contains a published tip; it is not in the message space")
    c = encrypt(pub, Message(m), _params(args), _rng(args))
    write_text(args.out, dump_ciphertext(c))
    return 0


def cmd_decrypt(args) -> int:
    priv = load_private(read_text(args.key))
    c = load_ciphertext(read_text(args.ct))
    print(emit_poly(decrypt(priv, c).poly))
    return 0


def cmd_oracle(args) -> int:
    priv = load_private(read_text(args.key))
    host, port = args.listen

    def ready(addr):
        print(f"listening on {addr[0]}:{addr[1]}", flush=True)

    serve_oracle(priv, host, port, on_ready=ready)
    return 0


def cmd_attack(args) -> int:
    pub = load_public(read_text(args.pub))
    k = AttackerKnowledge.for_shape(args.shape, pub)
    with RemoteOracle(*args.oracle) as oracle:
        rec = recover_reduced_basis(k, oracle, pub, _params(args), _rng(args))
        queries = oracle.queries
    key = PrivateKey(rec.G_prime, pub.field, pub.alphabet)
    write_text(args.out, dump_private(key))
    print(f"recovered {len(rec.G_prime)} generator(s) using {queries} DECRYPT quer{'y' if queries == 1 else 'ies'}")
    return 0


def cmd_verify(args) -> int:
    pub = load_public(read_text(args.pub))
    rec = load_private(read_text(args.recovered))
    with RemoteOracle(*args.oracle) as oracle:
        report = verify_recovery(rec.G, oracle, pub, args.trials, _params(args), _rng(args))
    print(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="freepc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def seeded(p):
        p.add_argument("--seed", type=int, default=_default_seed())

    def enc_params(p):
        d = EncryptionParams()
        p.add_argument("--terms-per-q", type=int, default=d.terms_per_q)
        p.add_argument("--cofactor-len", type=int, default=d.cofactor_len)
        p.add_argument("--cofactor-terms", type=int, default=d.cofactor_terms)

    p = sub.add_parser("keygen", help="generate a private key")
    p.add_argument("--shape", choices=["chain", "quad"], required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int)
    seeded(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("pubkey", help="derive a public key")
    p.add_argument("--key", required=True)
    p.add_argument("--s", type=int, required=True)
    seeded(p)
    enc_params(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pubkey)

    p = sub.add_parser("encrypt", help="encrypt a message polynomial")
    p.add_argument("--pub", required=True)
    p.add_argument("--msg", required=True, help="polynomial text, or a file holding it")
    seeded(p)
    enc_params(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    p.add_argument("--key", required=True)
    p.add_argument("--ct", required=True)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("oracle", help="serve a decryption oracle over TCP")
    p.add_argument("--key", required=True)
    p.add_argument("--listen", type=_hostport, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("attack", help="recover an equivalent key from a live oracle")
    p.add_argument("--pub", required=True)
    p.add_argument("--oracle", type=_hostport, required=True)
    p.add_argument("--shape", choices=["chain", "quad"], required=True)
    seeded(p)
    enc_params(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("verify", help="compare a recovered key with the oracle")
    p.add_argument("--pub", required=True)
    p.add_argument("--recovered", required=True)
    p.add_argument("--oracle", type=_hostport, required=True)
    p.add_argument("--trials", type=int, required=True)
    seeded(p)
    enc_params(p)
    p.set_defaults(func=cmd_verify)
    return ap


def _sigterm(signum, frame):
    raise KeyboardInterrupt


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "oracle" and threading.current_thread() is threading.main_thread():
        signal.signal(signal.SIGTERM, _sigterm)
    try:
        return args.func(args)
    except (FreePCError, OSError) as exc:
        print(f"freepc {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
