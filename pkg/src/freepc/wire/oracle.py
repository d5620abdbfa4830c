"""TCP decryption oracle and its client.

Line protocol, UTF-8, one response line per request line::

    PARAMS\\n            -> OK p=<p> n=<n> order=deglex\\n
    DECRYPT <poly>\\n    -> OK <canonical poly>\\n
    anything else       -> ERR <message>\\n

The server decrypts whatever it is sent.
"""

from __future__ import annotations

import logging
import socket
import socketserver
import threading

from ..cca import Oracle
from ..errors import FreePCError, OracleError, ParseError
from ..ff import FieldSpec
from ..ncpoly import Poly
from ..pollycracker import Ciphertext, PrivateKey, decrypt
from ..word import ORDERING, Alphabet
from .text import emit_poly, parse_poly

log = logging.getLogger(__name__)

MAX_LINE = 1 << 20


def params_payload(field: FieldSpec, alphabet: Alphabet) -> str:
    return f"p={field.p} n={alphabet.n} order={ORDERING}"


def respond(priv: PrivateKey, line: str) -> tuple[str, bool]:
    """Response line for one request, and whether it was a DECRYPT."""
    cmd, _, arg = line.partition(" ")
    if cmd == "PARAMS" and not arg:
        return f"OK {params_payload(priv.field, priv.alphabet)}\n", False
    if cmd == "DECRYPT":
        try:
            c = parse_poly(arg, priv.field, priv.alphabet)
        except ParseError as exc:
            return f"ERR parse: {exc}\n", False
        m = decrypt(priv, Ciphertext(c))
        return f"OK {emit_poly(m.poly)}\n", True
    return "ERR parse: unknown command\n", False


class _Handler(socketserver.StreamRequestHandler):
    server: "OracleServer"

    def handle(self):
        while True:
            raw = self.rfile.readline(MAX_LINE + 1)
            if not raw:
                return
            if not raw.endswith(b"\n") and len(raw) > MAX_LINE:
                # drain the rest of the oversized line
                while raw and not raw.endswith(b"\n"):
                    raw = self.rfile.readline(MAX_LINE + 1)
                self._send("ERR line too long\n")
                continue
            try:
                line = raw.decode("utf-8").rstrip("\n").rstrip("\r")
            except UnicodeDecodeError:
                self._send("ERR parse: invalid utf-8\n")
                continue
            reply, was_decrypt = respond(self.server.priv, line)
            if was_decrypt:
                self.server.count_decrypt()
            self._send(reply)

    def _send(self, text: str):
        self.wfile.write(text.encode("utf-8"))
        self.wfile.flush()


class OracleServer(socketserver.ThreadingTCPServer):
    """Threaded oracle; each connection is served in order on its own thread."""

    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, priv: PrivateKey, address: tuple[str, int] = ("127.0.0.1", 0)):
        super().__init__(address, _Handler)
        self.priv = priv
        self.decrypt_queries = 0
        self._count_lock = threading.Lock()
        self._thread: threading.Thread | None = None

    def count_decrypt(self):
        with self._count_lock:
            self.decrypt_queries += 1

    @property
    def address(self) -> tuple[str, int]:
        return self.server_address[:2]

    def start(self) -> "OracleServer":
        self._thread = threading.Thread(target=self.serve_forever, daemon=True)
        self._thread.start()
        return self

    def stop(self):
        self.shutdown()
        self.server_close()
        if self._thread is not None:
            self._thread.join()

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc):
        self.stop()


def serve_oracle(priv: PrivateKey, host: str, port: int, on_ready=None) -> None:
    """Serve until interrupted; ``on_ready`` receives the bound address."""
    srv = OracleServer(priv, (host, port))
    try:
        if on_ready is not None:
            on_ready(srv.address)
        log.info("oracle listening on %s:%d", *srv.address)
        srv.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        srv.server_close()


class RemoteOracle(Oracle):
    """Client side of the protocol, usable wherever an :class:`Oracle` is."""

    def __init__(self, host: str, port: int, timeout: float | None = 30.0):
        super().__init__()
        self._sock = socket.create_connection((host, port), timeout=timeout)
        self._file = self._sock.makefile("rwb")
        payload = self.request("PARAMS")
        try:
            fields = dict(item.split("=", 1) for item in payload.split())
            self.field = FieldSpec(int(fields["p"]))
            self.alphabet = Alphabet(int(fields["n"]))
            order = fields["order"]
        except (KeyError, ValueError, FreePCError) as exc:
            raise OracleError(f"bad PARAMS reply {payload!r}") from exc
        if order != ORDERING:
            raise OracleError(f"oracle uses unsupported ordering {order!r}")

    def request(self, line: str) -> str:
        try:
            self._file.write(line.encode("utf-8") + b"\n")
            self._file.flush()
            reply = self._file.readline(MAX_LINE + 2)
        except OSError as exc:
            raise OracleError(f"connection failed: {exc}") from exc
        if not reply.endswith(b"\n"):
            raise OracleError("connection closed by oracle")
        text = reply.decode("utf-8").rstrip("\n")
        status, _, payload = text.partition(" ")
        if status == "OK":
            return payload
        if status == "ERR":
            raise OracleError(payload)
        raise OracleError(f"malformed reply {text!r}")

    def _decrypt(self, c: Ciphertext) -> Poly:
        payload = self.request(f"DECRYPT {emit_poly(c.poly)}")
        try:
            return parse_poly(payload, self.field, self.alphabet)
        except ParseError as exc:
            raise OracleError(f"unparsable plaintext: {exc}") from exc

    def close(self):
        self._file.close()
        self._sock.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def parse_hostport(text: str) -> tuple[str, int]:
    host, sep, port = text.rpartition(":")
    if not sep or not port.isdigit():
        raise ValueError(f"expected host:port, got {text!r}")
    return host or "127.0.0.1", int(port)
