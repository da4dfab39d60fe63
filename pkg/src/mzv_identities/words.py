"""The Hoffman algebra Q<x, y> and the maps on it used by the identity generators.

Words are plain strings over the letters ``"x"`` and ``"y"``; the empty string
is the unit.  :class:`NcPoly` is an exact rational linear combination of words.
Coefficients are :class:`fractions.Fraction` throughout.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .combo import REAL, ZetaCombo
from .errors import DivisibilityError, IndexDomainError, WordError
from .index import Index

Word = str
Scalar = Union[int, Fraction]


def word_key(w: Word) -> tuple[int, Word]:
    """Display order: degree first, then lexicographic with x < y."""
    return (len(w), w)


class NcPoly:
    """Noncommutative polynomial over Q in x and y.

    Instances are treated as immutable; arithmetic returns new objects and zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if w.strip("xy"):
                raise WordError(f"word {w!r} uses letters outside {{x, y}}")
            acc[w] = acc.get(w, Fraction(0)) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> NcPoly:
        # trusted constructor: caller guarantees valid words and nonzero Fractions
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def word(cls, w: Word, coef: Scalar = 1) -> NcPoly:
        return cls({w: coef})

    @classmethod
    def one(cls) -> NcPoly:
        return cls._raw({"": Fraction(1)})

    @classmethod
    def zero(cls) -> NcPoly:
        return cls._raw({})

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        """Terms in display order."""
        for w in sorted(self._terms, key=word_key):
            yield w, self._terms[w]

    def words(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NcPoly({"": other})
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: NcPoly) -> NcPoly:
        if not isinstance(other, NcPoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return NcPoly._raw(acc)

    def __neg__(self) -> NcPoly:
        return NcPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: NcPoly) -> NcPoly:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> NcPoly:
        c = Fraction(c)
        if c == 0:
            return NcPoly.zero()
        return NcPoly._raw({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other: NcPoly | Scalar) -> NcPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other: Scalar) -> NcPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"NcPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for w, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = w or "1"
            text = body if mag == 1 else (f"{mag}" if not w else f"{mag}*{w}")
            out.append(f"{sign} {text}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _collect(pairs: Iterable[tuple[Word, Fraction]]) -> NcPoly:
    acc: dict[Word, Fraction] = {}
    for w, c in pairs:
        acc[w] = acc.get(w, 0) + c
    return NcPoly._raw({w: c for w, c in acc.items() if c != 0})


def as_poly(a: NcPoly | Word) -> NcPoly:
    return NcPoly.word(a) if isinstance(a, str) else a


# -- membership in the subalgebras ------------------------------------------

def in_h1(w: Word) -> bool:
    return w == "" or w.endswith("y")


def in_h0(w: Word) -> bool:
    return w == "" or (w.startswith("x") and w.endswith("y"))


def require_h1(a: NcPoly, what: str = "operand") -> None:
    for w in a._terms:
        if not in_h1(w):
            raise WordError(f"{what} contains word {w!r} not ending in y")


def require_h0(a: NcPoly, what: str = "operand") -> None:
    for w in a._terms:
        if not in_h0(w):
            raise WordError(f"{what} contains non-admissible word {w!r}")


# -- words <-> indices -------------------------------------------------------

def word_from_index(k: Sequence[int]) -> Word:
    """``z_{k_1} ... z_{k_d}`` with ``z_k = x^(k-1) y``."""
    if len(k) == 0:
        raise IndexDomainError("word_from_index needs depth >= 1")
    return "".join("x" * (part - 1) + "y" for part in k)


def index_from_word(w: Word) -> Index:
    if not w or not w.endswith("y"):
        raise WordError(f"word {w!r} does not end in y")
    return tuple(len(block) + 1 for block in w[:-1].split("y"))


def _index_of(w: Word) -> Index:
    # total on h^1, including the empty word
    return index_from_word(w) if w else ()


def _word_of(k: Index) -> Word:
    return word_from_index(k) if k else ""


# -- products and maps -------------------------------------------------------

def nc_mul(a: NcPoly, b: NcPoly) -> NcPoly:
    """Concatenation product, extended bilinearly."""
    return _collect((u + v, c * d) for u, c in a._terms.items() for v, d in b._terms.items())


def tau(a: NcPoly) -> NcPoly:
    """Anti-automorphism swapping x and y."""
    swap = str.maketrans("xy", "yx")
    return NcPoly._raw({w[::-1].translate(swap): c for w, c in a._terms.items()})


def beta_proj(m: int, a: NcPoly) -> NcPoly:
    """Degree-``m`` part."""
    return NcPoly._raw({w: c for w, c in a._terms.items() if len(w) == m})


def _substitute(a: NcPoly, images: Mapping[str, NcPoly], max_deg: int | None = None) -> NcPoly:
    """Apply the ring endomorphism with the given letter images.

    Images must have no constant term, so partial products never lose degree
    and may be pruned against ``max_deg`` as soon as they exceed it.
    """
    img = {letter: list(p._terms.items()) for letter, p in images.items()}
    acc: dict[Word, Fraction] = {}
    for w, c in a._terms.items():
        partial: dict[Word, Fraction] = {"": c}
        for i, letter in enumerate(w):
            remaining = len(w) - i - 1
            nxt: dict[Word, Fraction] = {}
            for u, cu in partial.items():
                for v, cv in img[letter]:
                    uv = u + v
                    if max_deg is not None and len(uv) + remaining > max_deg:
                        continue
                    nxt[uv] = nxt.get(uv, 0) + cu * cv
            partial = {u: cu for u, cu in nxt.items() if cu != 0}
        for u, cu in partial.items():
            acc[u] = acc.get(u, 0) + cu
    return NcPoly._raw({w: c for w, c in acc.items() if c != 0})


_ALPHA = {"x": NcPoly({"x": 1, "xy": -1}), "y": NcPoly({"xy": -1})}


def alpha(a: NcPoly) -> NcPoly:
    """Endomorphism with x -> x - xy, y -> -xy."""
    return _substitute(a, _ALPHA)


def sigma_trunc(a: NcPoly, max_deg: int) -> NcPoly:
    """x -> x, y -> (1 + x + x^2 + ...) y, keeping only words of degree <= ``max_deg``."""
    top = max(0, max_deg)
    sigma_y = NcPoly({"x" * e + "y": 1 for e in range(top)})
    return _substitute(a, {"x": NcPoly.word("x"), "y": sigma_y}, max_deg=max_deg)


@functools.lru_cache(maxsize=None)
def _z_power(n: int) -> NcPoly:
    out = NcPoly.one()
    z = NcPoly({"x": 1, "y": 1})
    for _ in range(n):
        out = nc_mul(out, z)
    return out


@functools.lru_cache(maxsize=None)
def derivation_images(kind: str, l: int) -> dict[str, NcPoly]:
    """Letter images of the derivation ``kind`` ("del" or "D") at level ``l``."""
    if l < 1:
        raise ValueError(f"derivation level must be >= 1, got {l}")
    if kind == "del":
        dx = nc_mul(nc_mul(NcPoly.word("x"), _z_power(l - 1)), NcPoly.word("y"))
        return {"x": dx, "y": -dx}
    if kind == "D":
        return {"x": NcPoly.zero(), "y": NcPoly.word("x" * l + "y")}
    raise ValueError(f"unknown derivation kind {kind!r}; expected 'del' or 'D'")


def derivation(kind: str, l: int, a: NcPoly) -> NcPoly:
    """Apply the derivation through Leibniz's rule, one letter position at a time."""
    img = {letter: list(p._terms.items()) for letter, p in derivation_images(kind, l).items()}

    def pairs() -> Iterator[tuple[Word, Fraction]]:
        for w, c in a._terms.items():
            for i, letter in enumerate(w):
                head, tail = w[:i], w[i + 1:]
                for v, cv in img[letter]:
                    yield head + v + tail, c * cv

    return _collect(pairs())


def lx_shift(direction: str, a: NcPoly) -> NcPoly:
    """Left multiplication by x (``"prepend"``) or its inverse (``"strip"``)."""
    if direction == "prepend":
        return NcPoly._raw({"x" + w: c for w, c in a._terms.items()})
    if direction == "strip":
        for w in a._terms:
            if not w.startswith("x"):
                raise DivisibilityError(f"cannot strip a leading x from word {w!r}")
        return NcPoly._raw({w[1:]: c for w, c in a._terms.items()})
    raise ValueError(f"unknown direction {direction!r}; expected 'prepend' or 'strip'")


# -- harmonic (stuffle) product ------------------------------------------------

@functools.lru_cache(maxsize=1 << 16)
def stuffle_indices(a: Index, b: Index) -> tuple[tuple[Index, int], ...]:
    """Stuffle product of two indices as ``((index, multiplicity), ...)``."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[Index, int] = {}
    for head, left, right in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        for k, n in stuffle_indices(left, right):
            key = (head, *k)
            acc[key] = acc.get(key, 0) + n
    return tuple(sorted(acc.items()))


def stuffle(a: NcPoly, b: NcPoly) -> NcPoly:
    """Harmonic product on h^1."""
    require_h1(a, "left stuffle operand")
    require_h1(b, "right stuffle operand")
    return _collect(
        (_word_of(k), ca * cb * n)
        for u, ca in a._terms.items()
        for v, cb in b._terms.items()
        for k, n in stuffle_indices(_index_of(u), _index_of(v))
    )


# -- harmonic regularization ---------------------------------------------------

class RegPoly:
    """Polynomial in the regularization variable T with coefficients in h^0."""

    __slots__ = ("_coefs",)

    def __init__(self, coefs: Mapping[int, NcPoly] = ()):
        self._coefs = {e: p for e, p in dict(coefs).items() if p}

    @property
    def coefficients(self) -> dict[int, NcPoly]:
        return dict(self._coefs)

    def coefficient(self, e: int) -> NcPoly:
        return self._coefs.get(e, NcPoly.zero())

    def constant_term(self) -> NcPoly:
        return self.coefficient(0)

    @property
    def degree(self) -> int:
        return max(self._coefs, default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegPoly):
            return NotImplemented
        return self._coefs == other._coefs

    def __hash__(self) -> int:
        return hash(frozenset(self._coefs.items()))

    def __add__(self, other: RegPoly) -> RegPoly:
        out = dict(self._coefs)
        for e, p in other._coefs.items():
            out[e] = out.get(e, NcPoly.zero()) + p
        return RegPoly(out)

    def __neg__(self) -> RegPoly:
        return RegPoly({e: -p for e, p in self._coefs.items()})

    def __sub__(self, other: RegPoly) -> RegPoly:
        return self + (-other)

    def scale(self, c: Scalar) -> RegPoly:
        return RegPoly({e: p.scale(c) for e, p in self._coefs.items()})

    def __mul__(self, other: RegPoly) -> RegPoly:
        """Product in h^0[T], coefficients multiplied with the stuffle product."""
        out: dict[int, NcPoly] = {}
        for i, p in self._coefs.items():
            for j, q in other._coefs.items():
                out[i + j] = out.get(i + j, NcPoly.zero()) + stuffle(p, q)
        return RegPoly(out)

    def shift(self, n: int = 1) -> RegPoly:
        """Multiply by T^n."""
        return RegPoly({e + n: p for e, p in self._coefs.items()})

    def __repr__(self) -> str:
        if not self._coefs:
            return "RegPoly(0)"
        inner = " + ".join(f"T^{e}*({p})" for e, p in sorted(self._coefs.items()))
        return f"RegPoly({inner})"


def _leading_ones(k: Index) -> int:
    n = 0
    for part in k:
        if part != 1:
            break
        n += 1
    return n


@functools.lru_cache(maxsize=None)
def _reg_index(k: Index) -> RegPoly:
    n = _leading_ones(k)
    if n == 0:
        return RegPoly({0: NcPoly.word(_word_of(k))})
    # z_1 * (z_1^(n-1) v) = n z_1^n v + R, every word of R having fewer leading z_1
    rest = k[1:]
    out = _reg_index(rest).shift(1)
    for m, mult in stuffle_indices((1,), rest):
        if m == k:
            if mult != n:
                raise AssertionError(f"stuffle bookkeeping broke on {k}")
            continue
        out = out - _reg_index(m).scale(mult)
    return out.scale(Fraction(1, n))


def reg_star(a: NcPoly) -> RegPoly:
    """Write ``a`` in h^0[z_1] under the stuffle product and send z_1 to T."""
    require_h1(a, "reg_star operand")
    out = RegPoly()
    for w, c in a._terms.items():
        out = out + _reg_index(_index_of(w)).scale(c)
    return out


def reg_star_constant(a: NcPoly) -> NcPoly:
    return reg_star(a).constant_term()


def to_zeta_combo(a: NcPoly, kind: str = REAL) -> ZetaCombo:
    """Relabel each word of h^1 by its index; the empty word becomes the empty index."""
    require_h1(a, "to_zeta_combo operand")
    return ZetaCombo({_index_of(w): c for w, c in a._terms.items()}, kind)
