"""The ten acceptance criteria, each checked at exact equality.

Every criterion records one PASS/FAIL line; pytest prints them in its terminal
summary, and ``python3 tests/test_acceptance.py`` prints them directly.
Criteria 6 and 10 do not hold as stated (see the failure details); they are
marked as strict expected failures so an unexpected pass is also reported.
"""

import json
import random
import sys
from io import StringIO
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from corpus import ADE_TYPES, abc_graph, cyclic_graph, rational_graphs, symmetric_semigroups  # noqa: E402

from ulrich.catalog import SIMPLE_GOOD_IDEALS, build_ade, expected_rdp_cycles  # noqa: E402
from ulrich.cli import run  # noqa: E402
from ulrich.cycles import (  # noqa: E402
    enumerate_bruteforce,
    enumerate_chain,
    enumerate_cycles,
    enumerate_rdp,
    fund_linear_closed_form,
    fund_linear_solutions,
)
from ulrich.free_resolution import BettiParams, betti, betti_recursive  # noqa: E402
from ulrich.monomial import enumerate_bruteforce as ns_brute  # noqa: E402
from ulrich.monomial import enumerate_gorenstein, enumerate_two_gen  # noqa: E402

RESULTS: dict[int, str] = {}


def record(n: int, title: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else f" ({len(failures)} problem(s); first: {failures[0]})"
    RESULTS[n] = f"criterion {n:2d} {status}: {title}{detail}"
    assert not failures, "; ".join(failures[:5])


def ns_ulrich(gens: str) -> set[tuple[int, ...]]:
    out = StringIO()
    assert run(["ns", "ulrich", "--gens", gens, "--format", "json"], stdout=out, stderr=StringIO()) == 0
    return {tuple(r["generators"]) for r in json.loads(out.getvalue())["results"]["ideals"]}


def ns_ulrich_records(gens: str) -> list[dict]:
    out = StringIO()
    run(["ns", "ulrich", "--gens", gens, "--format", "json"], stdout=out, stderr=StringIO())
    return json.loads(out.getvalue())["results"]["ideals"]


def test_criterion_01_semigroup_examples():
    bad = []
    if ns_ulrich("3,5,7") != {(3, 5, 7)}:
        bad.append("<3,5,7>")
    if ns_ulrich("3,5") != set():
        bad.append("<3,5>")
    recs = ns_ulrich_records("8,15")
    if {tuple(r["generators"]) for r in recs} != {(8 * i, 60) for i in range(1, 8)}:
        bad.append("<8,15> ideals")
    if {r["c"] for r in recs} != {4, 12, 20, 28, 36, 44, 52}:
        bad.append("<8,15> c values")
    for a in (5, 6, 7, 8):
        if ns_ulrich(",".join(map(str, range(a, 2 * a - 1)))) != set():
            bad.append(f"<{a},...,{2 * a - 2}>")
    for ell in range(1, 7):
        if len(ns_ulrich(f"2,{2 * ell + 1}")) != ell:
            bad.append(f"<2,{2 * ell + 1}>")
    expected_4_6 = {
        2: {(4, 6), (4, 7)},
        3: {(4, 6), (8, 11), (6, 11), (4, 11)},
        4: {(4, 6), (12, 15), (10, 15), (8, 15), (6, 15), (4, 15)},
    }
    for ell, want in expected_4_6.items():
        if ns_ulrich(f"4,6,{4 * ell - 1}") != want:
            bad.append(f"<4,6,{4 * ell - 1}>")
    record(1, "semigroup examples", bad)


def test_criterion_02_method_agreement():
    corpus = symmetric_semigroups(20)
    bad = []
    if len(corpus) < 20:
        bad.append(f"corpus has only {len(corpus)} semigroups")
    for H in corpus:
        brute, gor = ns_brute(H), enumerate_gorenstein(H)
        if brute != gor:
            bad.append(f"brute != gorenstein on {H}")
        if len(H.generators) == 2 and enumerate_two_gen(*H.generators) != gor:
            bad.append(f"two-gen != gorenstein on {H}")
    record(2, f"method agreement on {len(corpus)} symmetric semigroups", bad)


def test_criterion_03_fundamental_cycles():
    printed = {
        "E6": (2, 1, 2, 3, 2, 1),
        "E7": (2, 2, 3, 4, 3, 2, 1),
        "E8": (3, 2, 4, 6, 5, 4, 3, 2),
    }
    bad = []
    for t in ADE_TYPES:
        z0 = build_ade(t).fundamental_cycle()
        if t.family == "A":
            want = (1,) * t.n
        elif t.family == "D":
            want = (1,) + (2,) * (t.n - 3) + (1, 1)
        else:
            want = printed[str(t)]
        if z0 != want:
            bad.append(f"{t}: {z0}")
    record(3, "fundamental cycles of A1-A10, D4-D10, E6-E8", bad)


def expected_count(t) -> int:
    n = t.n
    if t.family == "A":
        return n // 2 if n % 2 == 0 else (n + 1) // 2
    if t.family == "D":
        return n // 2 + 2 if n % 2 == 0 else (n - 1) // 2 + 1
    return {6: 2, 7: 3, 8: 2}[n]


def test_criterion_04_rdp_classification():
    bad = []
    for t in ADE_TYPES:
        got = enumerate_rdp(build_ade(t))
        if len(got) != expected_count(t):
            bad.append(f"{t}: {len(got)} cycles, expected {expected_count(t)}")
        if sorted((r.cycle, r.colength) for r in got) != sorted(expected_rdp_cycles(t)):
            bad.append(f"{t}: cycle list differs")
        if t.family == "D":
            m = t.n // 2
            ladder = list(range(1, m)) + ([m, m, 2] if t.n % 2 == 0 else [m, 2])
            if sorted(r.colength for r in got) != sorted(ladder):
                bad.append(f"{t}: colengths {[r.colength for r in got]}")
    record(4, "ADE Ulrich-cycle classification", bad)


def test_criterion_05_module_marks():
    bad = []
    E6, E8 = build_ade("E6"), build_ade("E8")
    r6 = {r.cycle: r for r in enumerate_rdp(E6)}
    if [E6.ids[i] for i in r6[(2, 2, 3, 4, 3, 2)].marks] != ["E2", "E6"]:
        bad.append("E6 Z1 marks")
    r8 = {r.cycle: r for r in enumerate_rdp(E8)}
    if [E8.ids[i] for i in r8[(5, 4, 7, 10, 8, 6, 4, 2)].marks] != ["E2"]:
        bad.append("E8 Z1 marks")
    for t in ADE_TYPES:
        G = build_ade(t)
        for r in enumerate_rdp(G):
            if r.cycle == G.fundamental_cycle() and r.marks != tuple(range(G.size)):
                bad.append(f"{t}: Z0 not fully marked")
            if not r.marks:
                bad.append(f"{t}: {r.cycle} has no mark")
    record(5, "Ulrich module marks", bad)


@pytest.mark.xfail(strict=True, reason="four printed E7 rows are not anti-nef cycles")
def test_criterion_06_simple_good_ideal_tables():
    bad = []
    for k, rows in sorted(SIMPLE_GOOD_IDEALS.items()):
        G = build_ade(f"E{k}")
        for z, ell, mu in rows:
            if not G.is_antinef(z):
                bad.append(f"E{k} row {z} is not anti-nef (degrees {G.degrees(z)})")
                continue
            s = G.ideal_stats(z)
            if (s.colength, s.mu) != (ell, mu):
                bad.append(f"E{k} row {z}: got ({s.colength}, {s.mu}), printed ({ell}, {mu})")
    total = sum(len(r) for r in SIMPLE_GOOD_IDEALS.values())
    record(6, f"simple-good-ideal tables ({total} rows)", bad)


def test_criterion_07_non_gorenstein_enumeration():
    bad = []
    abc = enumerate_chain(abc_graph())
    want = [((1,) * 7, 1), ((2, 2, 1, 2, 1, 2, 1), 2), ((3, 2, 1, 2, 1, 2, 1), 3)]
    if [(r.cycle, r.colength) for r in abc] != want:
        bad.append("three-arm star")
    if [r.cycle for r in enumerate_chain(cyclic_graph())] != [(1, 1, 1)]:
        bad.append("(-2,-3,-2) chain")
    graphs = list(rational_graphs()) + [build_ade(t) for t in ADE_TYPES]
    for G in graphs:
        if [r.cycle for r in enumerate_cycles(G, "chain")] != [r.cycle for r in enumerate_bruteforce(G)]:
            bad.append(f"chain != brute force on {G.to_json()}")
    record(7, f"chain algorithm vs brute force on {len(graphs)} graphs", bad)


def test_criterion_08_u_identities():
    rng = random.Random(8)
    graphs = list(rational_graphs()) + [build_ade(t) for t in ADE_TYPES]
    rdps = [build_ade(t) for t in ADE_TYPES]
    cases = 0
    bad = []

    def rand_cycle(G):
        z = [rng.randint(0, 5) for _ in range(G.size)]
        if not any(z):
            z[rng.randrange(G.size)] = 1
        return tuple(z)

    for _ in range(1000):
        G = rng.choice(graphs)
        z, y = G.antinef_closure(rand_cycle(G)), rand_cycle(G)
        zp = tuple(a + b for a, b in zip(z, y))
        if G.u_delta(z, y) != G.u_value(zp) - G.u_value(z):
            bad.append(f"u_delta on {z}, {y}")
        y2 = rand_cycle(G)
        s = tuple(a + b for a, b in zip(y, y2))
        if G.arithmetic_genus(s) != G.arithmetic_genus(y) + G.arithmetic_genus(y2) + G.dot(y, y2) - 1:
            bad.append(f"p_a additivity on {y}, {y2}")
        w = G.antinef_closure(y2)
        if not G.is_antinef(tuple(min(a, b) for a, b in zip(z, w))):
            bad.append(f"inf of {z}, {w}")
        R = rng.choice(rdps)
        v = R.antinef_closure(rand_cycle(R))
        ell = R.ideal_stats(v).colength
        if any(a > n * ell for a, n in zip(v, R.fundamental_cycle())):
            bad.append(f"rank bound on {v}")
        cases += 4
    for G in graphs:
        for r in enumerate_cycles(G):
            cases += 1
            if r.multiplicity != (r.mu - 1) * r.colength:
                bad.append(f"quotient law on {r.cycle}")
    record(8, f"U-identities over {cases} cases", bad)


def test_criterion_09_betti():
    bad = []
    for d in range(5):
        for n in range(d, d + 6):
            p = BettiParams(d, n)
            closed = [betti(p, i) for i in range(13)]
            if closed != betti_recursive(p, 12):
                bad.append(f"closed != recursion at d={d}, n={n}")
            if any(closed[i + 1] != (n - d) * closed[i] for i in range(d, 12)):
                bad.append(f"periodic growth at d={d}, n={n}")
            if d == 0 and closed != [n ** i for i in range(13)]:
                bad.append(f"d=0, n={n}")
    if betti_recursive(BettiParams(1, 2), 8) != [1] + [2] * 8:
        bad.append("(1, 2) sequence")
    if betti(BettiParams(2, 3), 2) != 4:
        bad.append("beta_2 for (2, 3)")
    record(9, "Betti numbers", bad)


@pytest.mark.xfail(strict=True, reason="the bare inequality system admits non-monotone solutions such as (1, 2, 1)")
def test_criterion_10_fund_linear():
    bad = []
    for m in range(1, 9):
        got, want = fund_linear_solutions(m), fund_linear_closed_form(m)
        if got != want:
            extra = sorted(set(got) - set(want))
            bad.append(f"m={m}: {len(got)} solutions vs {len(want)}, e.g. {extra[0]}")
    record(10, "linear system solutions vs closed form", bad)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for n in sorted(RESULTS):
        print(RESULTS[n])
