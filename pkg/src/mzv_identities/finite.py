"""Truncated multiple harmonic sums modulo primes and congruence checks over prime sweeps."""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from sympy import isprime, primerange

from .combo import FINITE, ZetaCombo
from .errors import BadPrimeError, ConfigurationError, IndexDomainError
from .identities import IdentityInstance
from .index import Index
from .report import FAIL, PASS, VerificationReport

DEFAULT_PRIMES = (11, 1009)
FLOOR_RULE = "p - 1 > weight"
# residues and their products must fit in int64
MAX_PRIME = 2**31


@dataclass(frozen=True)
class PrimeSet:
    primes: tuple[int, ...]
    floor_rule: str = FLOOR_RULE

    def __post_init__(self) -> None:
        for p in self.primes:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly ascending")

    @classmethod
    def from_range(cls, lo: int, hi: int) -> PrimeSet:
        """All primes in ``[lo, hi]``."""
        return cls(tuple(int(p) for p in primerange(lo, hi + 1)))

    @classmethod
    def parse(cls, text: str) -> PrimeSet:
        """``"a..b"`` (inclusive range) or a comma-separated list of primes."""
        m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
        if m:
            return cls.from_range(int(m.group(1)), int(m.group(2)))
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad prime set {text!r}: {exc}") from None

    @classmethod
    def default(cls) -> PrimeSet:
        return cls.from_range(*DEFAULT_PRIMES)

    def admits(self, p: int, weight: int) -> bool:
        return p - 1 > weight

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class FiniteEval:
    residues: dict[int, int]


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} exceeds the supported range (< 2**31)")


@functools.lru_cache(maxsize=256)
def inverse_table(p: int) -> np.ndarray:
    """``inv[n] = n^-1 mod p`` for ``1 <= n < p``; ``inv[0] = 0``."""
    inv = [0, 1] + [0] * (p - 2)
    for i in range(2, p):
        inv[i] = (p - (p // i) * inv[p % i] % p) % p
    return np.array(inv[:p], dtype=np.int64)


@functools.lru_cache(maxsize=4096)
def _inverse_power(p: int, e: int) -> np.ndarray:
    if e == 1:
        return inverse_table(p)
    return _inverse_power(p, e - 1) * inverse_table(p) % p


@functools.lru_cache(maxsize=1 << 17)
def _fmzv_cached(k: Index, p: int) -> int:
    term = _inverse_power(p, k[-1])
    for part in reversed(k[:-1]):
        below = np.empty_like(term)
        below[0] = 0
        np.cumsum(term[:-1], out=below[1:])
        term = _inverse_power(p, part) * (below % p) % p
    return int(term.sum() % p)


def eval_fmzv_mod_p(k, p: int) -> int:
    """Sum over ``p > n_1 > ... > n_d >= 1`` of ``1 / (n_1^k_1 ... n_d^k_d)`` reduced mod ``p``."""
    k = tuple(k)
    if not k:
        raise IndexDomainError("the empty index is not allowed here")
    _check_prime(p)
    return _fmzv_cached(k, p)


def _term_residue(k: Index, p: int) -> int:
    return 1 % p if not k else _fmzv_cached(k, p)


def eval_combo_mod_p(c: ZetaCombo, p: int) -> int:
    _check_prime(p)
    for coef in c.terms.values():
        if coef.denominator % p == 0:
            raise BadPrimeError(p, coef.denominator)
    total = 0
    for k, coef in c.items():
        total += coef.numerator * pow(coef.denominator, -1, p) * _term_residue(k, p)
    return total % p


def eval_fmzv(k, primes: Iterable[int]) -> FiniteEval:
    return FiniteEval({p: eval_fmzv_mod_p(k, p) for p in primes})


def verify_finite(inst: IdentityInstance, ps: PrimeSet | None = None) -> VerificationReport:
    """Check ``lhs - rhs == 0 mod p`` at every admitted prime; failures and skips are all reported."""
    if inst.kind != FINITE:
        raise ValueError(f"instance of kind {inst.kind!r} cannot be verified on the finite backend")
    ps = PrimeSet.default() if ps is None else ps
    diff = inst.difference()
    wt = max(inst.weights(), default=0)
    skipped: list[dict] = []
    failures: list[dict] = []
    tested = 0
    for p in ps.primes:
        if not ps.admits(p, wt):
            skipped.append({"p": p, "reason": "weight"})
            continue
        try:
            residue = eval_combo_mod_p(diff, p)
        except BadPrimeError:
            skipped.append({"p": p, "reason": "denominator"})
            continue
        tested += 1
        if residue:
            failures.append({"p": p, "residue": residue})
    if tested == 0:
        raise ConfigurationError(f"no admitted primes among {len(ps)} for an identity of weight {wt}")
    status = FAIL if failures else PASS
    details = {"primes_tested": tested, "skipped": skipped, "failures": failures}
    return VerificationReport(status, float(len(failures)), 0.0, "finite", details)
