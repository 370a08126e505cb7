"""Numerical semigroups H = <a_1, ..., a_l> with exact membership.

Membership is answered from the Apery set with respect to the smallest
generator: x is in H iff x >= Ap(m)[x mod m].  The Apery set is computed as
a shortest-path problem on the residues mod m, which needs no a priori bound
on the Frobenius number.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Iterator


def _apery_residues(m: int, gens: Iterable[int]) -> list[int]:
    # Dijkstra on Z/m: an edge r -> r+g of weight g for every generator g.
    gens = sorted(set(gens))
    dist = [-1] * m
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] != -1:
            continue
        dist[r] = d
        for g in gens:
            s = (r + g) % m
            if dist[s] == -1:
                heapq.heappush(heap, (d + g, s))
    return dist


def _minimize(gens: list[int]) -> list[int]:
    """Drop every generator that is a sum of smaller kept ones."""
    kept: list[int] = []
    for g in sorted(set(gens)):
        if not kept:
            kept.append(g)
            continue
        # kept may have gcd > 1, so test representability directly
        reach = bytearray(g + 1)
        reach[0] = 1
        for x in range(1, g + 1):
            for k in kept:
                if k > x:
                    break
                if reach[x - k]:
                    reach[x] = 1
                    break
        if not reach[g]:
            kept.append(g)
    return kept


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, stored by its minimal generating set.

    Build one with :meth:`NumericalSemigroup.new` (or :func:`semigroup`);
    the constructor fills the cached invariants from the generators.
    """

    generators: tuple[int, ...]
    frobenius: int = field(init=False)
    gap_count: int = field(init=False)
    membership_table: tuple[bool, ...] = field(init=False, repr=False)
    _apery: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = self.generators[0]
        apery = _apery_residues(m, self.generators)
        frob = max(apery) - m
        table = tuple(x >= apery[x % m] for x in range(frob + 1))
        object.__setattr__(self, "_apery", tuple(apery))
        object.__setattr__(self, "frobenius", frob)
        object.__setattr__(self, "gap_count", table.count(False))
        object.__setattr__(self, "membership_table", table)

    @classmethod
    def new(cls, raw_generators: Iterable[int]) -> "NumericalSemigroup":
        raw = [int(g) for g in raw_generators]
        if not raw:
            raise ValueError("a numerical semigroup needs at least one generator")
        if any(g <= 0 for g in raw):
            raise ValueError(f"generators must be positive, got {raw}")
        if reduce(gcd, raw) != 1:
            raise ValueError(f"generators {sorted(set(raw))} have gcd {reduce(gcd, raw)} != 1")
        return cls(tuple(_minimize(raw)))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return self.membership_table[x]

    def contains(self, x: int) -> bool:
        return x in self

    def gaps(self) -> list[int]:
        return [x for x in range(1, self.frobenius + 1) if not self.membership_table[x]]

    def elements(self, upto: int) -> list[int]:
        """Members of H in [0, upto], ascending."""
        return [x for x in range(upto + 1) if x in self]

    def iter_elements(self) -> Iterator[int]:
        x = 0
        while True:
            if x in self:
                yield x
            x += 1

    def is_symmetric(self) -> bool:
        f = self.frobenius
        return all((x in self) != ((f - x) in self) for x in range(f + 1))

    def apery(self, m: int) -> list[int]:
        """The least element of H in each residue class mod m (m a positive member)."""
        if m <= 0 or m not in self:
            raise ValueError(f"{m} is not a positive element of {self}")
        if m == self.generators[0]:
            return list(self._apery)
        return _apery_residues(m, self.generators)

    def extend(self, c: int) -> "NumericalSemigroup":
        """The semigroup H + <c>."""
        if c <= 0:
            raise ValueError("extension element must be positive")
        if c in self:
            return self
        return NumericalSemigroup.new(self.generators + (c,))

    def min_translate(self, c: int) -> int:
        """Least h in H with h + c in H."""
        if c <= 0:
            raise ValueError("translation must be positive")
        for h in self.iter_elements():
            if h + c in self:
                return h
        raise AssertionError("unreachable")  # pragma: no cover

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def semigroup(*gens: int) -> NumericalSemigroup:
    """Shorthand: ``semigroup(3, 5, 7)``."""
    if len(gens) == 1 and not isinstance(gens[0], int):
        return NumericalSemigroup.new(gens[0])
    return NumericalSemigroup.new(gens)


def parse_generators(text: str) -> NumericalSemigroup:
    """Parse a comma-separated generator list such as ``"8,15"``."""
    try:
        gens = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise ValueError(f"cannot parse generator list {text!r}") from None
    return NumericalSemigroup.new(gens)
