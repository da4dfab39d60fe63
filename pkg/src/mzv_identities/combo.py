"""Formal rational linear combinations of zeta symbols."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .index import Index, format_index

Scalar = Union[int, Fraction]

REAL = "real"
FINITE = "finite"
KINDS = (REAL, FINITE)


def index_key(k: Index) -> tuple[int, int, Index]:
    """Canonical order: weight, then depth, then lexicographic."""
    return (sum(k), len(k), k)


def format_coef(c: Fraction) -> str:
    """Reduced rational as a decimal string: ``"-2"``, ``"1/2"``."""
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class ZetaCombo:
    """Exact linear combination of indices, tagged real (zeta) or finite (zeta_F)."""

    __slots__ = ("_terms", "kind")

    def __init__(self, terms: Mapping[Index, Scalar] | Iterable[tuple[Index, Scalar]] = (), kind: str = REAL):
        if kind not in KINDS:
            raise ValueError(f"unknown symbol kind {kind!r}")
        acc: dict[Index, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            k = tuple(int(part) for part in k)
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self.kind = kind

    @property
    def terms(self) -> dict[Index, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Index, Fraction]]:
        for k in sorted(self._terms, key=index_key):
            yield k, self._terms[k]

    def indices(self) -> list[Index]:
        return sorted(self._terms, key=index_key)

    def coefficient(self, k: Index) -> Fraction:
        return self._terms.get(tuple(k), Fraction(0))

    def weights(self) -> set[int]:
        return {sum(k) for k in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZetaCombo):
            return NotImplemented
        return self.kind == other.kind and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.kind, frozenset(self._terms.items())))

    def _check(self, other: ZetaCombo) -> None:
        if self.kind != other.kind:
            raise ValueError(f"cannot combine {self.kind} and {other.kind} symbols")

    def __add__(self, other: ZetaCombo) -> ZetaCombo:
        if not isinstance(other, ZetaCombo):
            return NotImplemented
        self._check(other)
        return ZetaCombo([*self._terms.items(), *other._terms.items()], self.kind)

    def __neg__(self) -> ZetaCombo:
        return ZetaCombo({k: -c for k, c in self._terms.items()}, self.kind)

    def __sub__(self, other: ZetaCombo) -> ZetaCombo:
        if not isinstance(other, ZetaCombo):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> ZetaCombo:
        return ZetaCombo({k: c * v for k, v in self._terms.items()}, self.kind)

    def with_kind(self, kind: str) -> ZetaCombo:
        return ZetaCombo(self._terms, kind)

    def to_records(self) -> list[dict]:
        return [{"coef": format_coef(c), "index": list(k)} for k, c in self.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping], kind: str = REAL) -> ZetaCombo:
        return cls([(tuple(r["index"]), Fraction(r["coef"])) for r in records], kind)

    def symbol(self, k: Index) -> str:
        return f"{'zeta_F' if self.kind == FINITE else 'zeta'}({format_index(k)})"

    def latex(self) -> str:
        if not self._terms:
            return "0"
        name = r"\zeta_{\mathcal F}" if self.kind == FINITE else r"\zeta"
        parts = []
        for k, c in self.items():
            mag = abs(c)
            if mag == 1:
                coef = ""
            elif mag.denominator == 1:
                coef = str(mag.numerator)
            else:
                coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            sym = f"{name}({format_index(k)})" if k else "1"
            parts.append(("-" if c < 0 else "+", coef + sym))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, c in self.items():
            mag = abs(c)
            body = self.symbol(k) if mag == 1 else f"{format_coef(mag)}*{self.symbol(k)}"
            out.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"ZetaCombo({self}, kind={self.kind!r})"
