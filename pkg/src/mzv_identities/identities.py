"""Generators for both sides of the height/refinement identities and the relation families they rest on.

Every generator returns exact :class:`ZetaCombo` data.  The ``*_algebraic``
generators rebuild the two main identities from word-algebra expansions and
serve as an independent check on the combinatorial ones.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import index as ix
from .combo import FINITE, REAL, ZetaCombo
from .errors import IndexDomainError
from .words import (
    NcPoly,
    alpha,
    beta_proj,
    derivation,
    lx_shift,
    reg_star_constant,
    require_h0,
    require_h1,
    sigma_trunc,
    stuffle,
    tau,
    to_zeta_combo,
    word_from_index,
)

HEIGHT_ONE = "height-one"
MAIN = "main"
MAIN_ALGEBRAIC = "main-algebraic"
FINITE_MAIN = "finite"
FINITE_ALGEBRAIC = "finite-algebraic"
OHNO = "ohno"
OHNO_FINITE = "ohno-finite"
DERIVATION = "derivation"
DERIVATION_FINITE = "derivation-finite"

THEOREM_KINDS = {
    HEIGHT_ONE: REAL,
    MAIN: REAL,
    MAIN_ALGEBRAIC: REAL,
    OHNO: REAL,
    DERIVATION: REAL,
    FINITE_MAIN: FINITE,
    FINITE_ALGEBRAIC: FINITE,
    OHNO_FINITE: FINITE,
    DERIVATION_FINITE: FINITE,
}


@dataclass(frozen=True)
class IdentityInstance:
    lhs: ZetaCombo
    rhs: ZetaCombo
    theorem: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.lhs.kind != self.rhs.kind:
            raise ValueError("both sides of an identity must use the same symbol kind")

    @property
    def kind(self) -> str:
        return self.lhs.kind

    def difference(self) -> ZetaCombo:
        return self.lhs - self.rhs

    def weights(self) -> set[int]:
        return self.lhs.weights() | self.rhs.weights()

    def perturbed(self, position: int = 0, delta: int | Fraction = 1) -> IdentityInstance:
        """Copy with the ``position``-th RHS coefficient (canonical order) shifted by ``delta``."""
        terms = list(self.rhs.items())
        if not terms:
            raise ValueError("cannot perturb an empty right-hand side")
        k, _ = terms[position]
        rhs = self.rhs + ZetaCombo({k: delta}, self.kind)
        return IdentityInstance(self.lhs, rhs, self.theorem, {**self.params, "perturbed": list(k)})

    def to_record(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "lhs": self.lhs.to_records(),
            "rhs": self.rhs.to_records(),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_record(), indent=indent)

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> IdentityInstance:
        kind = THEOREM_KINDS.get(record["theorem"], REAL)
        return cls(
            ZetaCombo.from_records(record["lhs"], kind),
            ZetaCombo.from_records(record["rhs"], kind),
            record["theorem"],
            dict(record.get("params", {})),
        )

    def latex(self) -> str:
        return f"{self.lhs.latex()} = {self.rhs.latex()}"

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def _require_feasible(k: Sequence[int], r: int) -> None:
    ix.require_nonempty(k)
    if r < len(k):
        raise IndexDomainError(f"need r >= dep(k) = {len(k)}, got r = {r}")


def _ones(n: int) -> tuple[int, ...]:
    return (1,) * n


def _refinement_side(k: Sequence[int], r: int, kind: str) -> ZetaCombo:
    d = len(k)
    acc: dict[tuple[int, ...], int] = {}
    for kp in ix.refinements(k):
        j = len(kp)
        if j > r:
            continue
        sign = -1 if (j - d) % 2 else 1
        for rr in ix.compositions(r, j):
            key = ix.add_indices(kp, rr)
            acc[key] = acc.get(key, 0) + sign
    return ZetaCombo(acc, kind)


def gen_height_one(k: int, r: int) -> IdentityInstance:
    if k < 1 or r < 1:
        raise IndexDomainError(f"need k, r >= 1, got k = {k}, r = {r}")
    lhs = ZetaCombo({(k + 1, *_ones(r - 1)): 1})
    acc: dict[tuple[int, ...], int] = {}
    for i in range(1, min(k, r) + 1):
        sign = 1 if i % 2 else -1
        for a in ix.compositions(k, i):
            for b in ix.compositions(r, i):
                key = ix.add_indices(a, b)
                acc[key] = acc.get(key, 0) + sign
    return IdentityInstance(lhs, ZetaCombo(acc), HEIGHT_ONE, {"k": k, "r": r})


def gen_main(k: Sequence[int], r: int) -> IdentityInstance:
    """Sum over ``r_1 + ... + r_d = r`` on the left, signed refinement sum on the right."""
    k = tuple(k)
    _require_feasible(k, r)
    lhs: dict[tuple[int, ...], int] = {}
    for rr in ix.compositions(r, len(k)):
        key = tuple(p for part, ri in zip(k, rr) for p in (part + 1, *_ones(ri - 1)))
        lhs[key] = lhs.get(key, 0) + 1
    return IdentityInstance(ZetaCombo(lhs), _refinement_side(k, r, REAL), MAIN, {"k": list(k), "r": r})


def gen_finite(k: Sequence[int], r: int) -> IdentityInstance:
    """Finite analogue of :func:`gen_main`; the left side also carries leading strings of ones."""
    k = tuple(k)
    _require_feasible(k, r)
    lhs: dict[tuple[int, ...], int] = {}
    for rr in ix.compositions(r + 1, len(k) + 1):
        key = _ones(rr[0] - 1) + tuple(p for part, ri in zip(k, rr[1:]) for p in (part + 1, *_ones(ri - 1)))
        lhs[key] = lhs.get(key, 0) + 1
    return IdentityInstance(
        ZetaCombo(lhs, FINITE), _refinement_side(k, r, FINITE), FINITE_MAIN, {"k": list(k), "r": r}
    )


def _shift_sum(k: tuple[int, ...], m: int) -> dict[tuple[int, ...], int]:
    acc: dict[tuple[int, ...], int] = {}
    for eps in ix.weak_compositions(m, len(k)):
        key = ix.add_indices(k, eps)
        acc[key] = acc.get(key, 0) + 1
    return acc


def gen_ohno(k: Sequence[int], m: int) -> IdentityInstance:
    k = tuple(k)
    ix.require_admissible(k)
    if m < 0:
        raise IndexDomainError(f"m must be >= 0, got {m}")
    lhs = ZetaCombo(_shift_sum(k, m))
    rhs = ZetaCombo(_shift_sum(ix.dual(k), m))
    return IdentityInstance(lhs, rhs, OHNO, {"k": list(k), "m": m})


def gen_ohno_finite(k: Sequence[int], m: int) -> IdentityInstance:
    k = tuple(k)
    ix.require_nonempty(k)
    if m < 0:
        raise IndexDomainError(f"m must be >= 0, got {m}")
    lhs = ZetaCombo(_shift_sum(k, m), FINITE)
    rhs: dict[tuple[int, ...], int] = {}
    for shifted, n in _shift_sum(ix.hoffman_dual(k), m).items():
        key = ix.hoffman_dual(shifted)
        rhs[key] = rhs.get(key, 0) + n
    return IdentityInstance(lhs, ZetaCombo(rhs, FINITE), OHNO_FINITE, {"k": list(k), "m": m})


def _as_poly(w: str | NcPoly) -> NcPoly:
    return NcPoly.word(w) if isinstance(w, str) else w


def gen_derivation(l: int, w: str | NcPoly) -> ZetaCombo:
    """``Z(del_l(w))`` for admissible ``w``; the result is a relation (it evaluates to zero)."""
    a = _as_poly(w)
    require_h0(a, "derivation-relation word")
    return to_zeta_combo(derivation("del", l, a), REAL)


def gen_derivation_finite(l: int, w: str | NcPoly) -> ZetaCombo:
    """``Z_F(x^-1 del_l(x w))`` for ``w`` in h^1."""
    a = _as_poly(w)
    require_h1(a, "finite derivation-relation word")
    image = derivation("del", l, lx_shift("prepend", a))
    return to_zeta_combo(lx_shift("strip", image), FINITE)


def relation_instance(combo: ZetaCombo, theorem: str, params: dict[str, Any]) -> IdentityInstance:
    """Wrap a relation ``combo = 0`` as an identity with an empty right-hand side."""
    return IdentityInstance(combo, ZetaCombo(kind=combo.kind), theorem, params)


def derivation_instance(l: int, w: str) -> IdentityInstance:
    return relation_instance(gen_derivation(l, w), DERIVATION, {"l": l, "word": w})


def derivation_finite_instance(l: int, w: str) -> IdentityInstance:
    return relation_instance(gen_derivation_finite(l, w), DERIVATION_FINITE, {"l": l, "word": w})


def _alpha_of_index(k: tuple[int, ...]) -> tuple[NcPoly, int, int]:
    a = alpha(NcPoly.word(word_from_index(k)))
    sign = -1 if len(k) % 2 else 1
    return a, sum(k), sign


def gen_main_algebraic(k: Sequence[int], r: int) -> IdentityInstance:
    """:func:`gen_main` rebuilt from degree-(wt + r) parts of sigma(alpha(w)) and tau sigma tau(alpha(w))."""
    k = tuple(k)
    _require_feasible(k, r)
    a, wt, sign = _alpha_of_index(k)
    deg = wt + r
    right = beta_proj(deg, sigma_trunc(a, deg))
    left = beta_proj(deg, tau(sigma_trunc(tau(a), deg)))
    return IdentityInstance(
        to_zeta_combo(left.scale(sign)),
        to_zeta_combo(right.scale(sign)),
        MAIN_ALGEBRAIC,
        {"k": list(k), "r": r},
    )


def gen_finite_algebraic(k: Sequence[int], r: int) -> IdentityInstance:
    """:func:`gen_finite` rebuilt from the x-conjugated word expansions."""
    k = tuple(k)
    _require_feasible(k, r)
    a, wt, sign = _alpha_of_index(k)
    deg = wt + r
    b = lx_shift("prepend", a)
    # the degree deg + 1 part of the conjugated image is stripped down to degree deg
    right = lx_shift("strip", beta_proj(deg + 1, sigma_trunc(b, deg + 1)))
    left = lx_shift("strip", beta_proj(deg + 1, tau(sigma_trunc(tau(b), deg + 1))))
    return IdentityInstance(
        to_zeta_combo(left.scale(sign), FINITE),
        to_zeta_combo(right.scale(sign), FINITE),
        FINITE_ALGEBRAIC,
        {"k": list(k), "r": r},
    )


def zeta_star(k: Sequence[int]) -> NcPoly:
    """Constant term (T = 0) of the harmonic regularization of ``k``; the empty index gives 1."""
    k = tuple(k)
    if not k:
        return NcPoly.one()
    return reg_star_constant(NcPoly.word(word_from_index(k)))


def sym_mzv_star(k: Sequence[int]) -> ZetaCombo:
    """Symmetrized sum of products of reversed-prefix and suffix regularized values."""
    k = tuple(k)
    ix.require_nonempty(k)
    total = NcPoly.zero()
    for i in range(len(k) + 1):
        sign = -1 if sum(k[:i]) % 2 else 1
        total = total + stuffle(zeta_star(k[:i][::-1]), zeta_star(k[i:])).scale(sign)
    out = to_zeta_combo(total, REAL)
    bad = [idx for idx in out.indices() if not ix.is_admissible(idx)]
    if bad:
        raise AssertionError(f"non-admissible terms survived regularization: {bad}")
    return out


_PARAMS = {
    HEIGHT_ONE: ("k", "r"),
    MAIN: ("k", "r"),
    MAIN_ALGEBRAIC: ("k", "r"),
    FINITE_MAIN: ("k", "r"),
    FINITE_ALGEBRAIC: ("k", "r"),
    OHNO: ("k", "m"),
    OHNO_FINITE: ("k", "m"),
    DERIVATION: ("l", "word"),
    DERIVATION_FINITE: ("l", "word"),
}


def theorem_params(theorem: str) -> tuple[str, ...]:
    try:
        return _PARAMS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}") from None


THEOREMS = tuple(_PARAMS)


def make_instance(theorem: str, **params: Any) -> IdentityInstance:
    """Build the instance for ``theorem`` from keyword parameters (see :func:`theorem_params`)."""
    needed = theorem_params(theorem)
    missing = [name for name in needed if params.get(name) is None]
    if missing:
        raise ValueError(f"theorem {theorem!r} needs {', '.join('--' + n for n in missing)}")
    extra = sorted(name for name, v in params.items() if v is not None and name not in needed)
    if extra:
        raise ValueError(f"theorem {theorem!r} does not take {', '.join('--' + n for n in extra)}")
    if theorem == HEIGHT_ONE:
        k = params["k"]
        if not isinstance(k, int):
            if len(k) != 1:
                raise IndexDomainError("height-one takes a single positive integer k")
            k = k[0]
        return gen_height_one(k, params["r"])
    if theorem in (OHNO, OHNO_FINITE):
        gen = gen_ohno if theorem == OHNO else gen_ohno_finite
        return gen(params["k"], params["m"])
    if theorem == DERIVATION:
        return derivation_instance(params["l"], params["word"])
    if theorem == DERIVATION_FINITE:
        return derivation_finite_instance(params["l"], params["word"])
    gen = {
        MAIN: gen_main,
        MAIN_ALGEBRAIC: gen_main_algebraic,
        FINITE_MAIN: gen_finite,
        FINITE_ALGEBRAIC: gen_finite_algebraic,
    }[theorem]
    return gen(params["k"], params["r"])
