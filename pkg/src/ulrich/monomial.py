"""Monomial ideals of A = k[[t^H]] and nonparameter monomial Ulrich ideals.

A monomial ideal is an H-ideal: its exponent set S satisfies S + H = S.  It is
stored by its minimal generators g_1 < ... < g_n, minimal meaning that no
difference g_j - g_i lies in H.

For a monomial ideal with smallest exponent a the principal ideal (t^a) is a
reduction, so the multiplicity is e(I) = l(A/(t^a)) = a.  Ulrich-ness is then
the pair of exact conditions

    I^2 = t^a I        and        a = mu(I) * l(A/I),

the second being the equality case of e(I) <= (mu(I) - d + 1) l(A/I) for d = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ResourceLimitError, UnitColonError
from .limits import SEMIGROUP_CAP, resolve_cap
from .semigroup import NumericalSemigroup

def _minimal(H: NumericalSemigroup, exps: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for g in sorted(set(exps)):
        if not any((g - k) in H for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    semigroup: NumericalSemigroup
    generators: tuple[int, ...]

    @property
    def mu(self) -> int:
        return len(self.generators)

    @property
    def reduction_exponent(self) -> int:
        return self.generators[0]

    def __contains__(self, x: int) -> bool:
        H = self.semigroup
        return any((x - g) in H for g in self.generators)

    def colength(self) -> int:
        """l(A/I): the number of members of H outside the exponent set."""
        H = self.semigroup
        top = self.generators[0] + H.frobenius
        return sum(1 for h in range(top + 1) if h in H and h not in self)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __str__(self) -> str:
        return "(" + ", ".join(f"t^{g}" for g in self.generators) + ")"


def ideal(H: NumericalSemigroup, exponents: Iterable[int]) -> MonomialIdeal:
    exps = list(exponents)
    if not exps:
        raise ValueError("an ideal needs at least one generator")
    for g in exps:
        if g == 0:
            raise ValueError("exponent 0 gives the unit ideal, which is not representable")
        if g not in H:
            raise ValueError(f"exponent {g} is not in {H}")
    return MonomialIdeal(H, _minimal(H, exps))


def maximal_ideal(H: NumericalSemigroup) -> MonomialIdeal:
    return MonomialIdeal(H, H.generators)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.semigroup != J.semigroup:
        raise ValueError("ideals live in different semigroup rings")
    sums = (g + h for g in I.generators for h in J.generators)
    return MonomialIdeal(I.semigroup, _minimal(I.semigroup, sums))


def colon_principal(a: int, I: MonomialIdeal) -> MonomialIdeal:
    """(t^a) : I as a monomial ideal.

    h qualifies iff h + g - a lies in H for every generator g.  Every
    h > frobenius + a qualifies, so the scan below is exhaustive.
    """
    H = I.semigroup
    if a <= 0 or a not in H:
        raise ValueError(f"{a} is not a positive element of {H}")
    if all((g - a) in H for g in I.generators):
        raise UnitColonError(f"(t^{a}) : {I} is the unit ideal")
    top = H.frobenius + a + max(I.generators)
    members = [
        h for h in range(1, top + 1)
        if h in H and all((h + g - a) in H for g in I.generators)
    ]
    return MonomialIdeal(H, _minimal(H, members))


@dataclass(frozen=True)
class UlrichCheck:
    """Diagnostics behind :func:`is_ulrich`."""

    stable: bool
    multiplicity: int
    mu: int
    colength: int

    @property
    def parameter(self) -> bool:
        return self.mu == 1

    @property
    def length_equality(self) -> bool:
        return self.multiplicity == self.mu * self.colength

    def __bool__(self) -> bool:
        return self.parameter or (self.stable and self.length_equality)


def ulrich_check(I: MonomialIdeal) -> UlrichCheck:
    a = I.reduction_exponent
    Q = MonomialIdeal(I.semigroup, (a,))
    stable = product(I, I) == product(Q, I)
    return UlrichCheck(stable=stable, multiplicity=a, mu=I.mu, colength=I.colength())


def is_ulrich(I: MonomialIdeal) -> bool:
    return bool(ulrich_check(I))


@dataclass(frozen=True)
class UlrichIdealRecord:
    ideal: MonomialIdeal
    colength: int
    mu: int
    reduction_exponent: int
    c: int | None = None

    @classmethod
    def of(cls, I: MonomialIdeal) -> "UlrichIdealRecord":
        c = I.generators[1] - I.generators[0] if I.mu == 2 else None
        return cls(I, I.colength(), I.mu, I.reduction_exponent, c)

    @property
    def sort_key(self) -> tuple:
        return (self.colength, self.ideal.generators)

    def to_json(self) -> dict:
        out = {
            "generators": list(self.ideal.generators),
            "colength": self.colength,
            "mu": self.mu,
            "reduction": self.reduction_exponent,
        }
        if self.c is not None:
            out["c"] = self.c
        return out


def _records(ideals: Iterable[MonomialIdeal]) -> list[UlrichIdealRecord]:
    unique = {I.generators: I for I in ideals}
    return sorted((UlrichIdealRecord.of(I) for I in unique.values()), key=lambda r: r.sort_key)


def _max_orders(H: NumericalSemigroup, upto: int) -> list[int]:
    """order[x] = largest k with x a sum of k generators (-1 when x is not in H)."""
    order = [-1] * (upto + 1)
    order[0] = 0
    for x in range(1, upto + 1):
        best = -1
        for g in H.generators:
            if g > x:
                break
            if order[x - g] >= 0 and order[x - g] + 1 > best:
                best = order[x - g] + 1
        order[x] = best
    return order


def enumerate_bruteforce(H: NumericalSemigroup, cap: int | None = None) -> list[UlrichIdealRecord]:
    """All monomial Ulrich ideals with mu >= 2, by exhaustive search.

    Every such I contains m^q, q the number of gaps, and its smallest exponent
    a satisfies a = mu * l(A/I) with (mu - 1) l(A/I) = l(I/Q) <= q, so a <= 2q.
    With a fixed, I = (a + H) u T where T is an up-set of the finite poset
    P_a = {h in H : h > a, h - a not in H}.  Each up-set containing the
    exponents of m^q is generated and tested with :func:`is_ulrich`.
    """
    cap = resolve_cap(cap, SEMIGROUP_CAP)
    q = H.gap_count
    if q == 0:
        return []
    F = H.frobenius
    order = _max_orders(H, 2 * q + F + 1)
    gens = H.generators
    found: list[MonomialIdeal] = []

    for a in range(H.multiplicity, min(2 * q, q * H.multiplicity) + 1):
        if a not in H:
            continue
        below = sum(1 for h in range(a) if h in H)
        budget = a // 2 - below  # l(A/I) <= a/2 since mu >= 2
        if budget < 0:
            continue
        poset = [h for h in range(a + 1, a + F + 1) if h in H and (h - a) not in H]
        if len(poset) > cap:
            raise ResourceLimitError(
                f"search space for reduction t^{a} in {H} has {len(poset)} free exponents "
                f"(cap {cap}); raise --cap or ULRICH_CAP"
            )
        index = {h: i for i, h in enumerate(poset)}
        succ = [[index[h + g] for g in gens if h + g in index] for h in poset]
        forced = [order[h] >= q for h in poset]
        chosen = [False] * len(poset)

        def leaf() -> None:
            members = [a] + [h for h, keep in zip(poset, chosen) if keep]
            I = MonomialIdeal(H, _minimal(H, members))
            if I.mu >= 2 and is_ulrich(I):
                found.append(I)

        def dfs(i: int, excluded: int) -> None:
            if i < 0:
                leaf()
                return
            if all(chosen[j] for j in succ[i]):
                chosen[i] = True
                dfs(i - 1, excluded)
                chosen[i] = False
            if not forced[i] and excluded < budget:
                dfs(i - 1, excluded + 1)

        dfs(len(poset) - 1, 0)

    return _records(found)


def enumerate_gorenstein(H: NumericalSemigroup) -> list[UlrichIdealRecord]:
    """Ulrich ideals of a Gorenstein semigroup ring via the extension criterion.

    I = (t^a, t^{a+c}) is Ulrich iff c is not in H, 2c is in H, H + <c> is
    symmetric and a = min{h in H : h + c in H}.
    """
    if not H.is_symmetric():
        raise ValueError(f"{H} is not symmetric; use the brute-force method")
    found = []
    for c in range(1, H.frobenius + 1):
        if c in H or (2 * c) not in H:
            continue
        if not H.extend(c).is_symmetric():
            continue
        a = H.min_translate(c)
        found.append(MonomialIdeal(H, (a, a + c)))
    return _records(found)


def enumerate_two_gen(a: int, b: int) -> list[UlrichIdealRecord]:
    """Closed form for H = <a, b>: empty unless one generator is even."""
    if a <= 1 or b <= 1:
        raise ValueError("both generators must exceed 1")
    H = NumericalSemigroup.new([a, b])
    if H.generators != tuple(sorted((a, b))):
        raise ValueError(f"{a}, {b} do not generate minimally")
    if a % 2 and b % 2:
        return []
    if a % 2:
        a, b = b, a
    if a == 2:
        cs = range(1, b - 1, 2)  # b = 2l + 1, c odd in [1, 2l)
    else:
        cs = (a * cp // 2 for cp in range(1, b, 2))
    ideals = []
    for c in cs:
        alpha = H.min_translate(c)
        ideals.append(MonomialIdeal(H, (alpha, alpha + c)))
    return _records(ideals)


def enumerate_ulrich(H: NumericalSemigroup, method: str = "auto", cap: int | None = None) -> list[UlrichIdealRecord]:
    if method == "auto":
        method = "gorenstein" if H.is_symmetric() else "brute"
    if method == "brute":
        return enumerate_bruteforce(H, cap=cap)
    if method == "gorenstein":
        return enumerate_gorenstein(H)
    if method == "two-gen":
        if len(H.generators) != 2:
            raise ValueError(f"{H} is not two-generated")
        return enumerate_two_gen(*H.generators)
    raise ValueError(f"unknown method {method!r}")
