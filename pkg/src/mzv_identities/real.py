"""Truncated nested sums for admissible multiple zeta values, with a tail bound."""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numba
import numpy as np

from .combo import REAL, ZetaCombo
from .errors import AdmissibilityError
from .identities import IdentityInstance
from .index import Index, format_index, is_admissible
from .report import FAIL, PASS, VerificationReport

DEFAULT_TRUNC = 10**6
ROUNDING_ALLOWANCE = 1e-12  # per term of an identity


@dataclass(frozen=True)
class RealEval:
    value: float
    tail_bound: float
    trunc_n: int


@numba.njit(cache=True)
def _nested_sum(parts, trunc):
    # One ascending sweep over n; level t holds sum over n > n_{t+1} > ... of the
    # inner product, level d is the constant 1.  Neumaier-compensated per level.
    d = parts.shape[0]
    s = np.zeros(d + 1)
    c = np.zeros(d + 1)
    s[d] = 1.0
    for n in range(1, trunc):
        x = float(n)
        # outer levels first, so level t sees level t+1 summed over m < n only
        for t in range(d):
            term = (s[t + 1] + c[t + 1]) / x ** parts[t]
            total = s[t] + term
            if abs(s[t]) >= abs(term):
                c[t] += (s[t] - total) + term
            else:
                c[t] += (term - total) + s[t]
            s[t] = total
    return s[0] + c[0]


def tail_bound(k: Index, trunc: int) -> float:
    """``2 (1 + ln N)^(d-1) N^(1-k_1) / (k_1 - 1)``."""
    d, k1 = len(k), k[0]
    return 2.0 * (1.0 + math.log(trunc)) ** (d - 1) * float(trunc) ** (1 - k1) / (k1 - 1)


@functools.lru_cache(maxsize=4096)
def _eval_cached(k: Index, trunc: int) -> RealEval:
    value = float(_nested_sum(np.asarray(k, dtype=np.int64), trunc))
    return RealEval(value, tail_bound(k, trunc), trunc)


def eval_mzv(k, trunc: int = DEFAULT_TRUNC) -> RealEval:
    """Sum over ``N > n_1 > ... > n_d >= 1`` in O(d N) time."""
    k = tuple(k)
    if not is_admissible(k):
        raise AdmissibilityError(f"zeta({format_index(k)}) diverges: need k_1 >= 2")
    if trunc < 2:
        raise ValueError(f"truncation must be >= 2, got {trunc}")
    return _eval_cached(k, int(trunc))


def _term_eval(k: Index, trunc: int) -> RealEval:
    if not k:  # the empty symbol is the constant 1
        return RealEval(1.0, 0.0, trunc)
    return eval_mzv(k, trunc)


def eval_combo(c: ZetaCombo, trunc: int = DEFAULT_TRUNC) -> RealEval:
    if c.kind != REAL:
        raise ValueError("the real backend only evaluates real zeta symbols")
    for k in c.indices():
        if k and not is_admissible(k):
            raise AdmissibilityError(f"combination contains divergent symbol zeta({format_index(k)})")
    evals = [(coef, _term_eval(k, trunc)) for k, coef in c.items()]
    value = math.fsum(float(coef) * e.value for coef, e in evals)
    tail = math.fsum(abs(float(coef)) * e.tail_bound for coef, e in evals)
    return RealEval(value, tail, trunc)


def verify_real(inst: IdentityInstance, trunc: int = DEFAULT_TRUNC) -> VerificationReport:
    """Check ``lhs - rhs`` against the combined tail bound plus a rounding allowance per term."""
    if inst.kind != REAL:
        raise ValueError(f"instance of kind {inst.kind!r} cannot be verified on the real backend")
    diff = inst.difference()
    ev = eval_combo(diff, trunc)
    tolerance = ev.tail_bound + ROUNDING_ALLOWANCE * (len(inst.lhs) + len(inst.rhs))
    terms = []
    for k, coef in diff.items():
        e = _term_eval(k, trunc)
        terms.append({"index": list(k), "coef": str(coef), "value": e.value, "tail_bound": e.tail_bound})
    status = PASS if abs(ev.value) <= tolerance else FAIL
    return VerificationReport(status, ev.value, tolerance, "real", {"trunc": trunc, "terms": terms})
