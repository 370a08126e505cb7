"""Betti numbers of A/I for an Ulrich ideal I of a d-dimensional Cohen-Macaulay local ring.

With n = mu(I) the ranks of the minimal free resolution depend only on (d, n):

    beta_0 = 1,
    beta_i = C(d, i) + (n - d) beta_{i-1}        (i >= 1),

which solves to (n - d)^{i - d} (n - d + 1)^d once i >= d.  Powers use 0^0 = 1,
so n = d (a parameter ideal) gives the Koszul ranks C(d, i).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class BettiParams:
    d: int
    n: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.d}")
        if self.n < self.d:
            raise ValueError(f"mu(I) = {self.n} is smaller than the dimension {self.d}")


def _pow(base: int, exp: int) -> int:
    return 1 if exp == 0 else base**exp


def betti(p: BettiParams, i: int) -> int:
    if i < 0:
        raise ValueError("homological index must be nonnegative")
    d, r = p.d, p.n - p.d
    if i == 0:
        return 1
    if i >= d:
        return _pow(r, i - d) * _pow(r + 1, d)
    return sum(comb(d, j) * _pow(r, i - j) for j in range(i + 1))


def betti_recursive(p: BettiParams, upto: int) -> list[int]:
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    seq = [1]
    for i in range(1, upto + 1):
        seq.append(comb(p.d, i) + (p.n - p.d) * seq[-1])
    return seq


def betti_sequence(p: BettiParams, upto: int) -> list[int]:
    return [betti(p, i) for i in range(upto + 1)]
