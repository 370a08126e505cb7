"""ADE dual graphs, McKay ranks and the catalog of Ulrich ideals of simple singularities.

Vertex numbering:

* ``A_n``: the path E1 - E2 - ... - En.
* ``D_n``: the path E1 - ... - E_{n-2}, with E_{n-1} and E_n both attached to E_{n-2}.
* ``E_6, E_7, E_8``: the path E2 - E3 - ... - E_n, with E1 attached to E4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Cycle, DualGraph


@dataclass(frozen=True, order=True)
class ADEType:
    family: str
    n: int

    def __post_init__(self) -> None:
        f, n = self.family, self.n
        ok = (
            (f == "A" and n >= 1)
            or (f == "D" and n >= 4)
            or (f == "E" and n in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"{f}_{n} is not a simply-laced Dynkin type")

    @classmethod
    def parse(cls, text: str) -> "ADEType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse ADE type {text!r}; expected e.g. A5, D6, E8")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.n}"


def _edges(t: ADEType) -> list[tuple[int, int]]:
    n = t.n
    if t.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    return [(1, 4)] + [(i, i + 1) for i in range(2, n)]


def build_ade(t: ADEType | str) -> DualGraph:
    if isinstance(t, str):
        t = ADEType.parse(t)
    ids = [f"E{i}" for i in range(1, t.n + 1)]
    return DualGraph.build(
        [(v, -2) for v in ids],
        [(f"E{a}", f"E{b}") for a, b in _edges(t)],
    )


def mckay_ranks(t: ADEType | str) -> Cycle:
    """Ranks of the nonfree indecomposable MCM modules, one per vertex.

    By the McKay correspondence these are the coefficients of the fundamental cycle.
    """
    return build_ade(t).fundamental_cycle()


@dataclass(frozen=True)
class IdealCatalogEntry:
    ideal: str
    colength: int


def surface_ideals(t: ADEType | str) -> list[IdealCatalogEntry]:
    """Nonparameter Ulrich ideals of the two-dimensional simple singularity of type t.

    Normal forms: A_n  x^{n+1} + y^2 + z^2 (written as xy = z^{n+1} up to coordinates),
    D_n  x^2 + y^{n-1} + y z^2,  E_6  x^2 + y^3 + z^4,  E_7  x^2 + y^3 + y z^3,
    E_8  x^2 + y^3 + z^5.
    """
    if isinstance(t, str):
        t = ADEType.parse(t)
    n = t.n
    out: list[IdealCatalogEntry] = []
    if t.family == "A":
        top = n // 2 if n % 2 == 0 else (n + 1) // 2
        out = [IdealCatalogEntry(_xyz(i), i) for i in range(1, top + 1)]
    elif t.family == "D":
        if n % 2 == 0:
            m = n // 2
            out = [IdealCatalogEntry(_xyz(i), i) for i in range(1, m)]
            out += [
                IdealCatalogEntry(f"(x+sqrt(-1)*{_pow('y', m - 1)}, {_pow('y', m)}, z)", m),
                IdealCatalogEntry(f"(x-sqrt(-1)*{_pow('y', m - 1)}, {_pow('y', m)}, z)", m),
            ]
        else:
            m = (n - 1) // 2
            out = [IdealCatalogEntry(_xyz(i), i) for i in range(1, m + 1)]
        out.append(IdealCatalogEntry("(x^2, y, z)", 2))
    else:
        top = 3 if n == 7 else 2
        out = [IdealCatalogEntry(_xyz(i), i) for i in range(1, top + 1)]
    return out


def curve_ideals(t: ADEType | str) -> list[IdealCatalogEntry]:
    """Nonparameter Ulrich ideals of the one-dimensional simple singularity of type t."""
    if isinstance(t, str):
        t = ADEType.parse(t)
    n = t.n
    if t.family == "A":
        top = n // 2 if n % 2 == 0 else (n + 1) // 2
        return [IdealCatalogEntry(f"(x, {_pow('y', i)})", i) for i in range(1, top + 1)]
    if t.family == "D":
        if n % 2 == 0:
            k = (n - 2) // 2
            return [
                IdealCatalogEntry("(x^2, y)", 2),
                IdealCatalogEntry(f"(x+sqrt(-1)*{_pow('y', k)}, {_pow('y', n // 2)})", n // 2),
                IdealCatalogEntry(f"(x-sqrt(-1)*{_pow('y', k)}, {_pow('y', n // 2)})", n // 2),
            ]
        return [
            IdealCatalogEntry("(x^2, y)", 2),
            IdealCatalogEntry(f"(x, {_pow('y', (n - 1) // 2)})", (n - 1) // 2),
        ]
    if n == 6:
        return [IdealCatalogEntry("(x, y^2)", 2)]
    if n == 7:
        return [IdealCatalogEntry("(x, y^3)", 3)]
    return []


def _pow(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


def _xyz(i: int) -> str:
    return f"(x, {_pow('y', i)}, z)"


# Reference data -----------------------------------------------------------


def expected_rdp_cycles(t: ADEType | str) -> list[tuple[Cycle, int]]:
    """Closed-form list of Ulrich cycles (with colengths) for each ADE type."""
    if isinstance(t, str):
        t = ADEType.parse(t)
    n = t.n
    if t.family == "A":
        # Z_i has coefficients 1, 2, ..., i, i, ..., i, ..., 2, 1 as the
        # minimal cycle through E_i and E_{n+1-i}
        out = []
        top = n // 2 if n % 2 == 0 else (n + 1) // 2
        for i in range(1, top + 1):
            z = tuple(min(k, i, n + 1 - k) for k in range(1, n + 1))
            out.append((z, i))
        return out
    if t.family == "D":
        return _d_cycles(n)
    table = {
        6: [((2, 2, 3, 4, 3, 2), 2)],
        7: [((3, 2, 4, 6, 5, 4, 2), 2), ((3, 2, 4, 6, 5, 4, 3), 3)],
        8: [((5, 4, 7, 10, 8, 6, 4, 2), 2)],
    }
    z0 = mckay_ranks(t)
    return [(z0, 1)] + table[n]


def _d_cycles(n: int) -> list[tuple[Cycle, int]]:
    m = n // 2
    out: list[tuple[Cycle, int]] = []

    def low(k: int) -> Cycle:
        # 1, 2, ..., 2k+1, then 2k+2 repeated, forks k+1, k+1
        head = list(range(1, 2 * k + 2))
        body = [2 * k + 2] * (n - 2 * k - 3)
        return tuple(head + body + [k + 1, k + 1])

    for k in range(0, m - 1):
        z = low(k) if k > 0 else tuple([1] + [2] * (n - 3) + [1, 1])
        out.append((z, k + 1))
    if n % 2 == 0:
        chain = list(range(1, 2 * m - 1))
        out.append((tuple(chain + [m - 1, m]), m))
        out.append((tuple(chain + [m, m - 1]), m))
    else:
        out.append((tuple(list(range(1, 2 * m)) + [m, m]), m))
    out.append((tuple([2] * (n - 2) + [1, 1]), 2))
    return out


# Simple good ideals (cycle, colength, mu) for E6, E7, E8, as tabulated.
SIMPLE_GOOD_IDEALS: dict[int, list[tuple[Cycle, int, int]]] = {
    6: [
        ((2, 1, 2, 3, 2, 1), 1, 3),
        ((2, 2, 3, 4, 3, 2), 2, 3),
        ((3, 2, 4, 6, 4, 2), 3, 4),
        ((3, 2, 4, 6, 5, 3), 4, 4),
        ((3, 3, 5, 6, 4, 2), 4, 4),
        ((3, 4, 5, 6, 4, 2), 6, 4),
        ((3, 2, 4, 6, 5, 4), 6, 4),
        ((4, 3, 6, 8, 6, 3), 6, 5),
        ((4, 3, 6, 8, 6, 4), 7, 5),
        ((4, 4, 6, 8, 6, 3), 7, 5),
        ((5, 4, 8, 10, 7, 4), 10, 6),
        ((5, 4, 7, 10, 8, 4), 10, 6),
        ((6, 5, 10, 12, 8, 4), 15, 7),
        ((6, 4, 8, 12, 10, 5), 15, 7),
    ],
    7: [
        ((2, 2, 3, 4, 3, 2, 1), 1, 3),
        ((3, 2, 4, 6, 5, 4, 2), 2, 3),
        ((3, 2, 4, 6, 5, 4, 3), 3, 3),
        ((4, 3, 6, 8, 6, 4, 2), 3, 4),
        ((5, 3, 6, 9, 7, 5, 3), 4, 4),
        ((6, 4, 8, 12, 6, 6, 3), 6, 5),
        ((6, 4, 8, 12, 6, 7, 4), 7, 5),
        ((7, 4, 8, 12, 8, 6, 3), 7, 5),
        ((8, 5, 10, 15, 8, 8, 4), 10, 6),
        ((9, 6, 12, 18, 15, 10, 5), 15, 7),
    ],
    8: [
        ((3, 2, 4, 6, 5, 4, 3, 2), 1, 3),
        ((5, 4, 7, 10, 8, 6, 4, 2), 2, 3),
        ((6, 4, 8, 12, 10, 8, 6, 3), 3, 4),
        ((8, 5, 10, 15, 12, 9, 6, 3), 4, 4),
        ((9, 6, 12, 18, 15, 12, 8, 4), 6, 5),
        ((10, 7, 14, 20, 16, 12, 8, 4), 7, 5),
        ((12, 8, 16, 24, 20, 15, 10, 5), 10, 6),
        ((15, 10, 20, 30, 24, 18, 12, 6), 15, 7),
    ],
}
