"""Ulrich cycles on the minimal resolution of a rational surface singularity.

An anti-nef cycle Z represents the integrally closed ideal I_Z, and I_Z is
Ulrich exactly when U(Z) = 0, where

    U(Z) = (Z_0.Z)(p_a(Z) - 1) + Z^2 = (mu(I_Z) - 1) l(A/I_Z) - e(I_Z).

Three enumerators are provided: a bounded exhaustive search, the chain search
for multiplicity e >= 3, and an exact solver for rational double points.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ResourceLimitError
from .graph import Cycle, DualGraph, GraphError
from .limits import CYCLE_CAP, resolve_cap


@dataclass(frozen=True)
class UlrichCycleReport:
    cycle: Cycle
    colength: int
    multiplicity: int
    mu: int
    u: int
    marks: tuple[int, ...] = ()
    chain: tuple[Cycle, ...] = field(default=(), compare=False)

    def to_json(self, G: DualGraph) -> dict:
        out = {
            "cycle": G.cycle_dict(self.cycle),
            "colength": self.colength,
            "multiplicity": self.multiplicity,
            "mu": self.mu,
            "u": self.u,
            "marks": [G.ids[i] for i in self.marks],
        }
        if self.chain:
            out["chain"] = [{"Y": G.cycle_dict(y)} for y in self.chain]
        return out


def report(G: DualGraph, z: Cycle, chain: tuple[Cycle, ...] = ()) -> UlrichCycleReport:
    stats = G.ideal_stats(z)
    marks = tuple(module_marks(G, z)) if G.is_rdp else ()
    return UlrichCycleReport(z, stats.colength, stats.multiplicity, stats.mu, G.u_value(z), marks, chain)


def _sorted(reports) -> list[UlrichCycleReport]:
    return sorted(reports, key=lambda r: (r.colength, r.cycle))


def is_ulrich_cycle(G: DualGraph, z) -> bool:
    z = G.cycle(z)
    if not any(z) or not G.is_antinef(z):
        return False
    ulrich = G.u_value(z) == 0
    if G.is_rdp:
        # on a rational double point the criterion collapses to Z.Z_0 = -2
        short = G.dot(z, G.fundamental) == -2
        if short != ulrich:
            raise AssertionError(f"U(Z) = 0 and Z.Z_0 = -2 disagree on {z}")
    return ulrich


def _require_rational(G: DualGraph) -> None:
    if not G.is_rational:
        raise GraphError("graph is not rational (p_a(Z_0) != 0)")


def bfs_order(G: DualGraph) -> list[int]:
    order, seen = [0], {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def enumerate_bruteforce(G: DualGraph, bound: int | None = None, cap: int | None = None) -> list[UlrichCycleReport]:
    """Every Ulrich cycle with 0 <= Z <= bound * Z_0, by exhaustive search.

    Vertices are assigned in breadth-first order, each within the range left
    open by Z.E <= 0 at itself and its assigned neighbours.  A nonzero
    anti-nef cycle dominates Z_0, which gives the lower end of every range.
    ``cap`` bounds the number of search nodes, in thousands.  A warning is emitted when an
    Ulrich cycle touches the box boundary.
    """
    _require_rational(G)
    n = G.size
    bound = n + 1 if bound is None else bound
    if bound < 1:
        raise ValueError("bound must be positive")
    limit = resolve_cap(cap, CYCLE_CAP) * 1000
    z0 = G.fundamental
    top = [bound * c for c in z0]
    weight = [-G.matrix[i][i] for i in range(n)]
    nbrs = [[(j, G.matrix[i][j]) for j in G.neighbors(i)] for i in range(n)]
    order = bfs_order(G)
    assigned = [False] * n
    z = [0] * n
    pull = [0] * n  # sum of m_ij z_j over assigned neighbours j
    found: list[Cycle] = []
    nodes = 0

    def dfs(k: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise ResourceLimitError(f"brute-force search exceeded {limit} nodes; raise --cap or ULRICH_CAP")
        if k == n:
            # every leaf is anti-nef; evaluate U(Z) in O(n) before the full check
            deg = [pull[i] - weight[i] * z[i] for i in range(n)]
            zz = sum(a * b for a, b in zip(z, deg))
            kz = sum(a * (w - 2) for a, w in zip(z, weight))
            z0z = sum(a * b for a, b in zip(z0, deg))
            if z0z * (zz + kz) // 2 + zz == 0:
                cyc = tuple(z)
                if is_ulrich_cycle(G, cyc):
                    found.append(cyc)
            return
        v = order[k]
        # own constraint: pull_v <= w_v z_v
        lo = max(z0[v], -(-pull[v] // weight[v]))
        hi = top[v]
        for j, m in nbrs[v]:
            room = weight[j] * (z[j] if assigned[j] else top[j]) - pull[j]
            hi = min(hi, room // m)
        if lo > hi:
            return
        assigned[v] = True
        for val in range(lo, hi + 1):
            z[v] = val
            for j, m in nbrs[v]:
                pull[j] += m * val
            dfs(k + 1)
            for j, m in nbrs[v]:
                pull[j] -= m * val
        z[v] = 0
        assigned[v] = False

    dfs(0)
    for cyc in found:
        if any(c == t for c, t in zip(cyc, top)):
            warnings.warn(f"Ulrich cycle {cyc} touches the search box; larger ones may exist", stacklevel=2)
    return _sorted(report(G, c) for c in found)


def enumerate_chain(G: DualGraph) -> list[UlrichCycleReport]:
    """Ulrich cycles of a rational singularity with e >= 3 via chains Z_0 < Z_1 < ...

    Z_i = Z_{i-1} + Y_i where Y_i is the fundamental cycle of a connected
    component C of {E : E.Z_{i-1} = 0} containing every vertex with E^2 <= -3,
    Y_i agrees with Z_0 on those vertices, Y_i <= Y_{i-1} and Z_i is anti-nef.
    """
    _require_rational(G)
    if G.multiplicity < 3:
        raise GraphError("chain enumeration needs multiplicity e >= 3; use the RDP solver")
    n = G.size
    z0 = G.fundamental
    heavy = {i for i in range(n) if G.matrix[i][i] <= -3}
    orthogonal = {i for i, d in enumerate(G.degrees(z0)) if d == 0}
    witness: dict[Cycle, tuple[Cycle, ...]] = {z0: ()}
    stack: list[tuple[Cycle, Cycle]] = [(z0, z0)]
    while stack:
        z, prev_y = stack.pop()
        zero = [i for i, d in enumerate(G.degrees(z)) if d == 0]
        for comp in G.components(zero):
            if not heavy <= set(comp):
                continue
            sub = G.induced(comp).fundamental_cycle()
            y = [0] * n
            for i, c in zip(comp, sub):
                y[i] = c
            y = tuple(y)
            if any(y[i] != z0[i] for i in heavy):
                continue
            if any(a > b for a, b in zip(y, prev_y)):
                continue
            znew = tuple(a + b for a, b in zip(z, y))
            if not G.is_antinef(znew):
                continue
            assert set(comp) <= orthogonal, "chain step left {E : E.Z_0 = 0}"
            assert G.u_value(znew) == 0, f"chain produced non-Ulrich cycle {znew}"
            assert 1 - G.arithmetic_genus(znew) == 2 - G.arithmetic_genus(z), "colength did not grow by 1"
            if znew not in witness:
                witness[znew] = witness[z] + (y,)
                stack.append((znew, y))
    return _sorted(report(G, z, chain) for z, chain in witness.items())


def enumerate_rdp(G: DualGraph) -> list[UlrichCycleReport]:
    """Exact classification on a rational double point.

    Ulrich cycles are the anti-nef Z with Z.Z_0 = -2.  Writing w_i = -Z.E_i >= 0
    this reads sum n_i w_i = 2 with n = Z_0, leaving three shapes for w:
    e_i with n_i = 2, 2 e_i with n_i = 1, or e_i + e_j with n_i = n_j = 1.
    Each w is solved for Z over Q and kept when integral.
    """
    if not G.is_rdp:
        raise GraphError("graph is not a rational double point (needs all E^2 = -2)")
    n = G.size
    z0 = G.fundamental
    ones = [i for i in range(n) if z0[i] == 1]
    targets = [[2 if k == i else 0 for k in range(n)] for i in ones]
    targets += [[1 if k == i else 0 for k in range(n)] for i in range(n) if z0[i] == 2]
    targets += [[1 if k in (i, j) else 0 for k in range(n)] for i, j in combinations(ones, 2)]
    found = set()
    for w in targets:
        sol = G.solve(w)
        if all(x.denominator == 1 for x in sol):
            cyc = tuple(int(x) for x in sol)
            assert is_ulrich_cycle(G, cyc)
            found.add(cyc)
    return _sorted(report(G, z) for z in found)


def enumerate_cycles(G: DualGraph, method: str = "auto", bound: int | None = None, cap: int | None = None) -> list[UlrichCycleReport]:
    if method == "auto":
        method = "rdp" if G.is_rdp else "chain"
    if method == "brute":
        return enumerate_bruteforce(G, bound=bound, cap=cap)
    if method == "rdp":
        return enumerate_rdp(G)
    if method == "chain":
        return enumerate_rdp(G) if G.is_rdp else enumerate_chain(G)
    raise ValueError(f"unknown method {method!r}")


# Ulrich modules ------------------------------------------------------------


def module_marks(G: DualGraph, z) -> list[int]:
    """Vertices E_i with a_i = n_i * l(A/I_Z): the indecomposable Ulrich modules for I_Z."""
    if not G.is_rdp:
        raise GraphError("module marks are defined on rational double points only")
    z = G.cycle(z)
    ell = G.ideal_stats(z).colength
    return [i for i, (a, c) in enumerate(zip(z, G.fundamental)) if a == c * ell]


def kato_length(G: DualGraph, z, k: dict[int, int] | list[int], k0: int = 0) -> int:
    """l(M/I_Z M) for M = A^{k0} + sum k_i M_i, from the first Chern class.

    Equals rank(M) * l(A/I_Z) + sum k_i a_i with rank(M) = k0 + sum k_i n_i.
    """
    z = G.cycle(z)
    ks = k if isinstance(k, dict) else dict(enumerate(k))
    if any(v < 0 for v in ks.values()) or k0 < 0:
        raise ValueError("multiplicities must be nonnegative")
    ell = G.ideal_stats(z).colength
    z0 = G.fundamental
    rank = k0 + sum(v * z0[i] for i, v in ks.items())
    return rank * ell + sum(v * z[i] for i, v in ks.items())


# The linear system behind the A_n and D_n classification -------------------


def _fund_linear_ok(x: tuple[int, ...], monotone: bool) -> bool:
    m = len(x)
    if x[0] != 1 or any(v < 1 for v in x):
        return False
    if m > 1 and x[1] > 2 * x[0]:
        return False
    if any(x[i - 1] + x[i + 1] > 2 * x[i] for i in range(1, m - 1)):
        return False
    return not monotone or m == 1 or x[m - 1] >= x[m - 2]


def fund_linear_solutions(m: int, monotone: bool = False) -> list[tuple[int, ...]]:
    """All positive integer x with x_1 = 1, x_2 <= 2 x_1 and x_{i-1} + x_{i+1} <= 2 x_i.

    Solutions are concave with first step at most 1, so x_i <= i <= m and the
    search over [1, m]^m (pruned on prefixes) is exhaustive.  The system alone
    admits decreasing tails such as (1, 2, 1); ``monotone=True`` adds
    x_m >= x_{m-1}, which for concave x forces x to be nondecreasing.
    """
    if m < 1:
        raise ValueError("m must be positive")
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        i = len(prefix)
        if i == m:
            x = tuple(prefix)
            if _fund_linear_ok(x, monotone):
                out.append(x)
            return
        for v in range(1, m + 1):
            if i == 1 and v > 2 * prefix[0]:
                continue
            if i >= 2 and prefix[i - 2] + v > 2 * prefix[i - 1]:
                continue
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([1])
    return sorted(out)


def fund_linear_closed_form(m: int) -> list[tuple[int, ...]]:
    """(1, 2, ..., k, k+1, ..., k+1) for k = 0, ..., m-1."""
    return sorted(tuple(min(i, k) + 1 for i in range(m)) for k in range(m))
