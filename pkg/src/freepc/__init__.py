"""Noncommutative Polly Cracker over free algebras, and a chosen-ciphertext
attack that recovers an equivalent private key from one fake ciphertext."""

from .errors import (
    AttackError, DomainError, FreePCError, OracleError, ParseError, PartialRecoveryError,
    QuotientError, SamplingError, UsageError,
)
from .ff import FieldSpec, Scalar, ff_arith, ff_inv, ff_random
from .word import Alphabet, Word, compare_deglex, concat, subword_factor
from .ncpoly import Poly, TipView, poly_add, poly_from_terms, poly_mul, poly_scale, tip_view
from .reduce import DivisionResult, DivisionStep, divide, is_normal, normal_form
from .pollycracker import (
    Ciphertext, EncryptionParams, Message, PrivateKey, PublicKey, decrypt, derive_public,
    encrypt, keygen_chain, keygen_quad, sample_message,
)
from .cca import (
    AttackerKnowledge, LocalOracle, MaskPair, Oracle, RecoveredKey, VerifyReport,
    build_fake_ciphertext, default_mask, exact_divide_two_sided, recover_generator,
    recover_reduced_basis, validate_mask, verify_recovery,
)

__version__ = "0.1.0"
