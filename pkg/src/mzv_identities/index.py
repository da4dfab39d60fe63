"""Combinatorics of indices (compositions naming zeta symbols).

An index is a plain ``tuple[int, ...]`` of positive integers.  The empty
tuple is legal data and stands for the empty symbol.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterator, NamedTuple, Sequence

from .errors import AdmissibilityError, IndexDomainError, IndexSyntaxError

Index = tuple[int, ...]


class IndexStats(NamedTuple):
    weight: int
    depth: int
    height: int
    admissible: bool


def weight(k: Sequence[int]) -> int:
    return sum(k)


def depth(k: Sequence[int]) -> int:
    return len(k)


def height(k: Sequence[int]) -> int:
    return sum(1 for part in k if part >= 2)


def is_admissible(k: Sequence[int]) -> bool:
    return len(k) >= 1 and k[0] >= 2


def stats(k: Sequence[int]) -> IndexStats:
    return IndexStats(weight(k), depth(k), height(k), is_admissible(k))


def require_admissible(k: Sequence[int]) -> None:
    if not is_admissible(k):
        raise AdmissibilityError(f"index ({format_index(k)}) is not admissible: need depth >= 1 and k_1 >= 2")


def require_nonempty(k: Sequence[int]) -> None:
    if len(k) == 0:
        raise IndexDomainError("the empty index is not allowed here")


def dual(k: Sequence[int]) -> Index:
    """Dual index of an admissible ``k``.

    ``k`` is split into blocks ``(a+1, 1, ..., 1)`` with ``b - 1`` trailing ones;
    the dual lists the blocks ``(b+1, 1, ..., 1)`` with ``a - 1`` ones in
    reverse order.

    >>> dual((4, 1, 1, 1))
    (5, 1, 1)
    >>> dual((3,))
    (2, 1)
    """
    require_admissible(k)
    blocks: list[tuple[int, int]] = []
    for part in k:
        if part >= 2:
            blocks.append((part - 1, 1))
        else:
            a, b = blocks[-1]
            blocks[-1] = (a, b + 1)
    out: list[int] = []
    for a, b in reversed(blocks):
        out.append(b + 1)
        out.extend([1] * (a - 1))
    return tuple(out)


def _boundaries(k: Sequence[int]) -> set[int]:
    return set(itertools.accumulate(k[:-1]))


def _from_boundaries(n: int, cuts: set[int]) -> Index:
    points = [0, *sorted(cuts), n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def hoffman_dual(k: Sequence[int]) -> Index:
    """Hoffman's dual: swap part boundaries and non-boundaries in the all-ones expansion.

    >>> hoffman_dual((2, 1))
    (1, 2)
    """
    require_nonempty(k)
    n = weight(k)
    return _from_boundaries(n, set(range(1, n)) - _boundaries(k))


def compositions(n: int, parts: int) -> list[Index]:
    """All ``parts``-tuples of positive integers summing to ``n``, lexicographically."""
    if parts == 0:
        return [()] if n == 0 else []
    if parts > n:
        return []
    out = []
    for cuts in itertools.combinations(range(1, n), parts - 1):
        points = (0, *cuts, n)
        out.append(tuple(b - a for a, b in zip(points, points[1:])))
    out.sort()
    return out


def all_compositions(n: int) -> list[Index]:
    """Compositions of ``n`` of every depth, lexicographically."""
    if n == 0:
        return [()]
    return sorted(c for d in range(1, n + 1) for c in compositions(n, d))


def weak_compositions(n: int, parts: int) -> list[Index]:
    """``parts``-tuples of nonnegative integers summing to ``n``, lexicographically."""
    if parts == 0:
        return [()] if n == 0 else []
    return [tuple(c - 1 for c in comp) for comp in compositions(n + parts, parts)]


def refinements(k: Sequence[int]) -> list[Index]:
    """Every ``k'`` that coarsens to ``k`` by summing adjacent blocks, lexicographically."""
    require_nonempty(k)
    pieces = [all_compositions(part) for part in k]
    return sorted(tuple(itertools.chain.from_iterable(choice)) for choice in itertools.product(*pieces))


def indices_of_weight(n: int, *, admissible_only: bool = False) -> Iterator[Index]:
    for k in all_compositions(n):
        if admissible_only and not is_admissible(k):
            continue
        yield k


def add_indices(a: Sequence[int], b: Sequence[int]) -> Index:
    """Componentwise sum of two indices of equal depth."""
    if len(a) != len(b):
        raise IndexDomainError("componentwise sum needs indices of equal depth")
    return tuple(x + y for x, y in zip(a, b))


def format_index(k: Sequence[int]) -> str:
    return ",".join(str(part) for part in k)


_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<punct>[(),])|(?P<bad>\S))")


def parse_index(text: str) -> Index:
    """Parse ``"4,1,1,1"`` or ``"(4, 1, 1, 1)"`` into an index.

    Raises :class:`IndexSyntaxError` (with offset) on malformed text and
    :class:`IndexDomainError` on entries below 1.
    """
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastgroup)
        if m.lastgroup == "bad":
            raise IndexSyntaxError(f"unexpected character {text[start]!r}", start)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()

    end = len(text)
    if tokens and tokens[0][1] == "(":
        if tokens[-1][1] != ")":
            raise IndexSyntaxError("missing closing parenthesis", end)
        tokens = tokens[1:-1]
    parts: list[int] = []
    expect_int = True
    for kind, value, offset in tokens:
        if expect_int:
            if kind != "int":
                raise IndexSyntaxError(f"expected an integer, found {value!r}", offset)
            n = int(value)
            if n < 1:
                raise IndexDomainError(f"index entries must be positive, got {n} at offset {offset}")
            parts.append(n)
        elif value != ",":
            raise IndexSyntaxError(f"expected ',', found {value!r}", offset)
        expect_int = not expect_int
    if parts and expect_int:
        raise IndexSyntaxError("trailing comma", end)
    return tuple(parts)
