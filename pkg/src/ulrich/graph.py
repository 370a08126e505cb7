"""Weighted dual graphs of resolutions and their intersection theory.

Cycles are tuples of nonnegative integers in vertex order.  The canonical
divisor is never built; only its pairing K.E_i = -E_i^2 - 2 is used, which is
integral even when K itself is a Q-divisor.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

Cycle = tuple[int, ...]


class GraphError(ValueError):
    pass


def leading_minors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            # Bareiss cannot pivot past a vanishing minor; finish with exact determinants
            return minors + [0] + [_det([row[: j + 1] for row in matrix[: j + 1]]) for j in range(k + 1, n)]
        minors.append(a[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return minors


def _det(m: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return int(det)


class IdealStats(NamedTuple):
    colength: int
    multiplicity: int
    mu: int


@dataclass(frozen=True)
class DualGraph:
    """A validated dual graph: vertex ids, and the intersection matrix in input order."""

    ids: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.ids)})

    # construction -------------------------------------------------------

    @classmethod
    def build(
        cls,
        vertices: Iterable[tuple[str, int]],
        edges: Iterable[tuple[str, str] | tuple[str, str, int]] = (),
    ) -> "DualGraph":
        verts = list(vertices)
        if not verts:
            raise GraphError("graph has no vertices")
        ids = [str(v) for v, _ in verts]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate vertex id")
        index = {v: i for i, v in enumerate(ids)}
        n = len(ids)
        m = [[0] * n for _ in range(n)]
        for i, (_, s) in enumerate(verts):
            m[i][i] = int(s)
        seen: dict[tuple[str, str], int] = {}
        for e in edges:
            a, b = str(e[0]), str(e[1])
            mult = int(e[2]) if len(e) > 2 else 1
            if a not in index or b not in index:
                raise GraphError(f"edge {a}-{b} mentions an unknown vertex")
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if mult < 1:
                raise GraphError(f"edge {a}-{b} has multiplicity {mult} < 1")
            if (a, b) in seen:
                raise GraphError(f"duplicate edge {a}-{b}")
            if (b, a) in seen:
                if seen[(b, a)] != mult:
                    raise GraphError(f"asymmetric edges between {a} and {b}")
                seen[(a, b)] = mult
                continue
            seen[(a, b)] = mult
            m[index[a]][index[b]] = m[index[b]][index[a]] = mult
        return cls.from_matrix(ids, m)

    @classmethod
    def from_matrix(cls, ids: Sequence[str], matrix: Sequence[Sequence[int]]) -> "DualGraph":
        n = len(ids)
        if n == 0 or len(matrix) != n or any(len(r) != n for r in matrix):
            raise GraphError("intersection matrix has the wrong shape")
        for i in range(n):
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise GraphError("asymmetric edges")
                if i != j and matrix[i][j] < 0:
                    raise GraphError("negative off-diagonal intersection")
        neg = [[-x for x in row] for row in matrix]
        if any(d <= 0 for d in leading_minors(neg)):
            raise GraphError("not negative definite")
        g = cls(tuple(ids), tuple(tuple(int(x) for x in row) for row in matrix))
        if len(g.components(range(n))) != 1:
            raise GraphError("disconnected")
        for i in range(n):
            if matrix[i][i] >= -1:
                raise GraphError(f"non-minimal vertex (self >= -1): {ids[i]}")
        return g

    @classmethod
    def from_json(cls, data: Mapping | str) -> "DualGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            vertices = [(v["id"], v["self"]) for v in data["vertices"]]
            edges = [(e["a"], e["b"], e.get("mult", 1)) for e in data.get("edges", [])]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph description: missing {exc}") from None
        return cls.build(vertices, edges)

    def to_json(self) -> dict:
        n = self.size
        return {
            "vertices": [{"id": v, "self": self.matrix[i][i]} for i, v in enumerate(self.ids)],
            "edges": [
                {"a": self.ids[i], "b": self.ids[j], "mult": self.matrix[i][j]}
                for i in range(n)
                for j in range(i + 1, n)
                if self.matrix[i][j]
            ],
        }

    # basic structure ----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.ids)

    def self_intersection(self, i: int) -> int:
        return self.matrix[i][i]

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.size) if j != i and self.matrix[i][j]]

    def components(self, vertices: Iterable[int]) -> list[list[int]]:
        """Connected components of the induced subgraph, each sorted, in order of least vertex."""
        pool = set(vertices)
        comps = []
        for start in sorted(pool):
            if start not in pool:
                continue
            pool.discard(start)
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.neighbors(u):
                    if w in pool:
                        pool.discard(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> "DualGraph":
        vs = sorted(vertices)
        return DualGraph(
            tuple(self.ids[i] for i in vs),
            tuple(tuple(self.matrix[i][j] for j in vs) for i in vs),
        )

    def cycle(self, data: Mapping[str, int] | Sequence[int]) -> Cycle:
        """Normalize a mapping id -> coefficient (missing ids are 0) or a vector."""
        if isinstance(data, Mapping):
            unknown = set(data) - set(self.ids)
            if unknown:
                raise GraphError(f"cycle mentions unknown vertices {sorted(unknown)}")
            z = tuple(int(data.get(v, 0)) for v in self.ids)
        else:
            z = tuple(int(x) for x in data)
            if len(z) != self.size:
                raise GraphError(f"cycle has {len(z)} coefficients, graph has {self.size} vertices")
        if any(x < 0 for x in z):
            raise GraphError("cycle coefficients must be nonnegative")
        return z

    def cycle_dict(self, z: Sequence[int]) -> dict[str, int]:
        return {v: int(x) for v, x in zip(self.ids, z)}

    # intersection theory ------------------------------------------------

    def dot(self, z: Sequence[int], w: Sequence[int]) -> int:
        m = self.matrix
        return sum(z[i] * m[i][j] * w[j] for i in range(self.size) if z[i] for j in range(self.size) if w[j])

    def degrees(self, z: Sequence[int]) -> tuple[int, ...]:
        """The vector (Z.E_i)_i."""
        return tuple(sum(self.matrix[i][j] * z[j] for j in range(self.size)) for i in range(self.size))

    def is_antinef(self, z: Sequence[int]) -> bool:
        return all(d <= 0 for d in self.degrees(z))

    def antinef_closure(self, z: Sequence[int]) -> Cycle:
        """The least anti-nef cycle >= z: raise the lowest-index vertex with Z.E_j > 0 until none is left."""
        z = list(z)
        while True:
            deg = self.degrees(z)
            j = next((i for i, d in enumerate(deg) if d > 0), None)
            if j is None:
                return tuple(z)
            z[j] += 1

    @cached_property
    def fundamental(self) -> Cycle:
        return self.antinef_closure([1] * self.size)

    def fundamental_cycle(self) -> Cycle:
        """Minimal nonzero anti-nef cycle, by Laufer's algorithm (lowest index first)."""
        return self.fundamental

    def canonical_degree(self, z: Sequence[int]) -> int:
        return sum(x * (-self.matrix[i][i] - 2) for i, x in enumerate(z))

    def arithmetic_genus(self, z: Sequence[int]) -> int:
        total = self.dot(z, z) + self.canonical_degree(z)
        if total % 2:
            raise GraphError("Z^2 + K.Z is odd; invalid graph/cycle pair")
        return total // 2 + 1

    @property
    def multiplicity(self) -> int:
        """e = -Z_0^2, the multiplicity of the singularity."""
        z0 = self.fundamental
        return -self.dot(z0, z0)

    @property
    def is_rational(self) -> bool:
        return self.arithmetic_genus(self.fundamental) == 0

    @property
    def is_rdp(self) -> bool:
        return all(self.matrix[i][i] == -2 for i in range(self.size)) and self.is_rational

    def ideal_stats(self, z: Sequence[int]) -> IdealStats:
        """(l(A/I), e(I), mu(I)) for the integrally closed ideal represented by Z."""
        if not any(z):
            raise GraphError("the zero cycle represents the unit ideal")
        if not self.is_antinef(z):
            raise GraphError("cycle is not anti-nef")
        return IdealStats(
            colength=1 - self.arithmetic_genus(z),
            multiplicity=-self.dot(z, z),
            mu=1 - self.dot(z, self.fundamental),
        )

    def u_value(self, z: Sequence[int]) -> int:
        """U(Z) = (Z_0.Z)(p_a(Z) - 1) + Z^2 on the minimal resolution."""
        return self.dot(self.fundamental, z) * (self.arithmetic_genus(z) - 1) + self.dot(z, z)

    def u_delta(self, z: Sequence[int], y: Sequence[int]) -> int:
        """U(Z + Y) - U(Z), evaluated from the closed expression in Y, Z, Z_0 and K."""
        z0 = self.fundamental
        zp = tuple(a + b for a, b in zip(z, y))
        pz = self.arithmetic_genus(z)
        py = self.arithmetic_genus(y)
        yz0 = self.dot(y, z0)
        return (
            yz0 * ((pz - 1) + (py - 1))
            + self.dot(y, z) * (self.dot(zp, z0) + 2)
            + (py - 1) * (self.dot(z, z0) + 2)
            - self.canonical_degree(y)
        )

    def solve(self, w: Sequence[int]) -> tuple[Fraction, ...]:
        """The rational cycle Z with -Z.E_i = w_i for all i."""
        n = self.size
        a = [[Fraction(-self.matrix[i][j]) for j in range(n)] + [Fraction(w[i])] for i in range(n)]
        for k in range(n):
            piv = next(i for i in range(k, n) if a[i][k] != 0)
            a[k], a[piv] = a[piv], a[k]
            for i in range(n):
                if i != k and a[i][k] != 0:
                    f = a[i][k] / a[k][k]
                    for j in range(k, n + 1):
                        a[i][j] -= f * a[k][j]
        return tuple(a[i][n] / a[i][i] for i in range(n))


def parse_cycle(G: DualGraph, text: str) -> Cycle:
    """Parse ``"E1=2,E2=1"``; omitted vertices get coefficient 0."""
    data = {}
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "=" not in tok:
            raise GraphError(f"cannot parse cycle term {tok!r}; expected ID=COEFF")
        key, val = tok.split("=", 1)
        try:
            data[key.strip()] = int(val)
        except ValueError:
            raise GraphError(f"coefficient of {key.strip()} is not an integer") from None
    return G.cycle(data)


def star(center_self: int, arms: Sequence[Sequence[int]], prefix: str = "E") -> DualGraph:
    """A star: one center vertex and chains hanging off it.

    Vertex order is the center first, then each arm from the center outwards.
    """
    verts = [(f"{prefix}0", center_self)]
    edges = []
    for a, arm in enumerate(arms, start=1):
        prev = f"{prefix}0"
        for k, s in enumerate(arm, start=1):
            v = f"{prefix}{a}.{k}"
            verts.append((v, s))
            edges.append((prev, v))
            prev = v
    return DualGraph.build(verts, edges)


def chain(selfs: Sequence[int], prefix: str = "E") -> DualGraph:
    ids = [f"{prefix}{i}" for i in range(1, len(selfs) + 1)]
    return DualGraph.build(zip(ids, selfs), zip(ids, ids[1:]))
