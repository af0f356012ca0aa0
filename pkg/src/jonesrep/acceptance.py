"""Acceptance criteria: each check runs against its time limit and reports pass/fail."""

from __future__ import annotations

import itertools
import math
import time
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from flint import fmpq_poly

from . import linalg as la
from .analysis import (
    GroupTable,
    adjoint_irreducible,
    char_poly,
    classify_discreteness,
    connectivity_certificate,
    elliptic_witness,
    projective_image,
)
from .arith import DomainError, InadmissibleColor, ParameterSpec, cos_minpoly
from .potts import connected_graphs, oracle_parameters, planar_graph, potts_partition
from .projector import annihilates_caps, is_idempotent, jones_wenzl
from .rep import build, cob_matrix, dimension, gram_matrix, invariance_check, printed_cob_matrix
from .skein import (
    braid_closure_diagram,
    bracket_state_sum,
    closure_bracket,
    enumerate_basis,
    parse_braid_word,
)

COMMUTATOR = "[2, 2 3 3 3 2 -1]"


@dataclass
class Outcome:
    key: str
    title: str
    passed: bool
    seconds: float
    limit: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.key:<3} {self.title} ({self.seconds:.2f}s / {self.limit:g}s) {self.detail}".rstrip()


@lru_cache(maxsize=None)
def _recurrence_table(n: int, c: int, r: int) -> int:
    """The piecewise recurrence with explicit boundary rows, written out separately."""
    if n == 0:
        return 1 if c == 0 else 0
    if c == 0:
        return _recurrence_table(n - 1, 1, r) if r - 2 > 0 else 0
    if c == r - 2:
        return _recurrence_table(n - 1, r - 3, r)
    return _recurrence_table(n - 1, c - 1, r) + _recurrence_table(n - 1, c + 1, r)


def check_dimension_table():
    table = {(4, 0): 2, (4, 2): 3, (5, 1): 5}
    bad = [k for k, v in table.items() if dimension(*k) != v]
    r_range = [r for r in range(5, 13)]
    bad += [("d(5,3,r)", r) for r in r_range if not 3 <= dimension(5, 3, r) <= 4]
    for n in range(0, 11):
        for c in range(0, n + 1):
            count = len(enumerate_basis(n, c)) if (n + c) % 2 == 0 else 0
            if dimension(n, c) != count:
                bad.append(("count", n, c))
    for r in range(3, 13):
        for n in range(0, 13):
            for c in range(0, r - 1):
                if dimension(n, c, r) != _recurrence_table(n, c, r):
                    bad.append(("recurrence", n, c, r))
                positive = c <= n and (c + n) % 2 == 0
                if (dimension(n, c, r) > 0) != positive:
                    bad.append(("support", n, c, r))
    return not bad, f"mismatches: {bad[:4]}" if bad else "table, d(5,3,r) for r >= 5, counts and recurrence agree"


def check_dim1_inequality():
    failures = []
    for r in range(4, 13, 2):
        for c in range(0, r - 2):
            if not 2 * c < r - 2:
                continue
            for n in range(0, 13):
                d = dimension(n, c, r)
                if d > 0 and not d > dimension(n, r - 2 - c, r):
                    failures.append((n, c, r))
    if not failures:
        return True, "strict inequality holds for even r <= 12, n <= 12"
    rs = sorted({f[2] for f in failures})
    n, c, r = failures[0]
    return False, (f"{len(failures)} counterexamples, all with r in {rs}, "
                   f"e.g. d({n},{c},{r}) = d({n},{r - 2 - c},{r}) = {dimension(n, c, r)}")


def check_dim2():
    bad = []
    for n in range(0, 15):
        for c in range(5, 15):
            d = dimension(n, c)
            if 1 <= d <= 2 and not (c == n or n <= 3 or (n, c) == (0, 4)):
                bad.append((n, c))
    return not bad, f"exceptions: {bad}" if bad else "no exceptions for n, c <= 14"


def check_matrices():
    g = ParameterSpec.generic()
    f = g.field
    s = f.gen
    h = build(4, 0, g)
    printed = {
        (1,): [[-s, 0], [-s ** -1, s ** -3]],
        (3,): [[-s, 0], [-s ** -1, s ** -3]],
        (2,): [[s ** -3, -s ** -1], [0, -s]],
        (2, 1): [[0, -s ** -4], [1, -s ** -2]],
        (3, 2, 1): [[0, s ** -3], [s ** -3, 0]],
    }
    bad = [w for w, m in printed.items()
           if not la.equal(h.in_basis("printed", h.word_matrix(w)), la.matrix(m, f))]
    h31 = build(3, 1, g)
    tau1 = h31.in_basis("printed", h31.generator(1))
    if not la.equal(tau1, la.matrix([[s ** -3, 0], [0, -s]], f)):
        bad.append("X(3,1) tau1")
    q2, q3 = h31.field.coerce(s ** 2 + s ** -2), h31.field.coerce(s ** 4 + 1 + s ** -4)
    expected = la.matrix([[-f.one / q2, 1], [q3 / (q2 * q2), f.one / q2]], f)
    if not la.equal(printed_cob_matrix(1, g), expected):
        bad.append("cob c=1")
    return not bad, f"mismatches: {bad}" if bad else "sigma_3, sigma_4, tau_1 = tau_3, tau_2, X(3,1) tau_1, cob(1)"


def check_commutator():
    g = ParameterSpec.generic()
    f = g.field
    h = build(4, 2, g)
    cp = char_poly(h.word_matrix(parse_braid_word(COMMUTATOR)), f)
    t = f.gen ** 4
    a = (t - 1 + f.one / t) ** 3
    # (x - 1)(x^2 + a x + 1)
    expected = [-f.one, 1 - a, a - 1, f.one]
    ok = len(cp) == 4 and all(x == y for x, y in zip(cp, expected))
    return ok, "(x - 1)(x^2 + (t - 1 + 1/t)^3 x + 1)" if ok else f"got {[str(x) for x in cp]}"


def _shifted(poly: fmpq_poly, shift: int) -> list:
    """Coefficients of poly(u - shift)."""
    return [Fraction(int(c.p), int(c.q)) for c in poly(fmpq_poly([-shift, 1])).coeffs()]


def check_angles():
    word = parse_braid_word(COMMUTATOR)
    results = []
    h = build(4, 2, ParameterSpec.unit_circle("1/5"))
    e1 = elliptic_witness(h, word)
    results.append((e1, 96.778652, 4))
    p7 = ParameterSpec.from_trace(_shifted(cos_minpoly(7), 1), 1 + 2 * math.cos(2 * math.pi / 7))
    e2 = elliptic_witness(build(4, 2, p7), word)
    results.append((e2, 165.812896, 6))
    ok = all(e.verdict == "InfiniteOrder" and abs(e.angle_degrees - ang) <= 1e-5 and e.degree_bound == b
             for e, ang, b in results)
    detail = "; ".join(f"{e.angle_degrees:.6f} deg, bound {e.degree_bound}, {e.verdict}" for e, _, _ in results)
    return ok, detail


def check_icosahedral():
    h = build(3, 1, ParameterSpec.root_of_unity(10))
    image = projective_image(h, cap=500)
    if image.order != 60:
        return False, f"order {image.order}"
    table = GroupTable.from_image(image, h.field)
    simple = table.is_simple()
    return simple, f"order 60, simple: {simple}"


def check_invariance():
    g = ParameterSpec.generic()
    bad = []
    for n in range(1, 6):
        for c in range(n % 2, n + 1, 2):
            for norm in ("bracket", "rescaled"):
                if not invariance_check(build(n, c, g, norm)):
                    bad.append((n, c, norm))
    return not bad, f"fails: {bad}" if bad else "all generators, n <= 5, both normalizations"


def check_jones_wenzl():
    jones_wenzl.cache_clear()
    bad = [c for c in range(1, 7) if not (is_idempotent(c) and annihilates_caps(c))]
    try:
        jones_wenzl(5, ParameterSpec.root_of_unity(5))
        raised = False
    except InadmissibleColor:
        raised = True
    ok = not bad and raised
    return ok, f"c <= 6 exact; (5, r=5) raises: {raised}" + (f"; fails at {bad}" if bad else "")


def check_connectivity():
    g = ParameterSpec.generic()
    plain = connectivity_certificate(build(4, 0, g), "plain")
    full = len(plain.edges) == 8
    adjoint = connectivity_certificate(build(4, 2, g), "adjoint")
    control = connectivity_certificate(build(4, 2, g), "adjoint", control=True)
    ok = plain.strongly_connected and full and adjoint.strongly_connected and not control.strongly_connected
    return ok, (f"plain X(4,0): {plain.strongly_connected} ({len(plain.edges)} edges); "
                f"sl(X(4,2)): {adjoint.strongly_connected}; control: {control.strongly_connected}")


def _braid_words(strands: int, max_len: int):
    letters = [k for i in range(1, strands) for k in (i, -i)]
    for length in range(0, max_len + 1):
        yield from itertools.product(letters, repeat=length)


def check_oracles():
    g = ParameterSpec.generic()
    mismatches = []
    count = 0
    for strands in (1, 2, 3):
        for word in _braid_words(strands, 4):
            count += 1
            if closure_bracket(word, strands, g) != bracket_state_sum(braid_closure_diagram(word, strands), g):
                mismatches.append((strands, word))
    graphs = 0
    for p in oracle_parameters():
        for v, edges in connected_graphs(4, 5):
            weights = [(-1) ** i * (i + 2) for i in range(len(edges))]
            res = potts_partition(planar_graph(v, edges, weights), p)
            graphs += 1
            if not res.agree:
                mismatches.append(("potts", v, tuple(edges)))
    return not mismatches, f"{count} closures, {graphs} graph evaluations" + (f"; mismatches {mismatches[:3]}" if mismatches else "")


def check_discreteness():
    cases = []
    cases.append(("t = -2", ParameterSpec.rational(-2), True))
    cases.append(("t = -1/3", ParameterSpec.rational("-1/3"), True))
    cases.append(("t + 1/t = 3", ParameterSpec.from_trace([-3, 1], 3), True))
    for n in (5, 7, 8):
        u = 1 + 2 * math.cos(2 * math.pi / n)
        cases.append((f"t + 1/t = 1 + 2cos(2pi/{n})", ParameterSpec.from_trace(_shifted(cos_minpoly(n), 1), u), True))
    for n in (5, 7):
        q = 1 - 2 * Fraction(1, n)
        cases.append((f"theta = pi - 2pi/{n}", ParameterSpec.unit_circle(q), True))
        cases.append((f"theta = -(pi - 2pi/{n})", ParameterSpec.unit_circle(-q), True))
    cases.append(("t + 1/t = 2.9", ParameterSpec.from_trace(["-29/10", 1], 2.9), False))
    cases.append(("theta = 0.7 pi", ParameterSpec.unit_circle("7/10"), False))
    bad = []
    for name, p, expected in cases:
        v = classify_discreteness(p)
        if v.discrete != expected:
            bad.append(name)
    scan = classify_discreteness(ParameterSpec.from_trace(["-29/10", 1], 2.9))
    ok = not bad and "closest n" in scan.evidence
    return ok, f"{len(cases)} cases" + (f"; wrong: {bad}" if bad else "; indiscrete sample carries scan evidence")


def check_kernel():
    p3 = ParameterSpec.root_of_unity(3)
    g3 = gram_matrix(4, 0, p3)
    rank3 = la.rank(g3, p3.field)
    h = build(4, 0, p3)
    g = ParameterSpec.generic()
    degenerate = []
    for n in range(1, 6):
        for c in range(n % 2, n + 1, 2):
            gm = gram_matrix(n, c, g)
            if la.rank(gm, g.field) != gm.shape[0]:
                degenerate.append((n, c))
    ok = rank3 == 1 and h.dim == 1 == dimension(4, 0, 3) and not degenerate
    return ok, f"rank at r=3: {rank3}, reduced dim {h.dim}; generic degenerate: {degenerate or 'none'}"


CRITERIA: list[tuple[str, str, float, Callable]] = [
    ("1a", "dimension table and recurrence", 1.0, check_dimension_table),
    ("1b", "strict dimension inequality (r even)", 1.0, check_dim1_inequality),
    ("1c", "small-dimension check", 1.0, check_dim2),
    ("2", "matrix reproduction", 1.0, check_matrices),
    ("3", "commutator characteristic polynomial", 10.0, check_commutator),
    ("4", "angle witnesses", 5.0, check_angles),
    ("5", "icosahedral image", 30.0, check_icosahedral),
    ("6", "form invariance", 30.0, check_invariance),
    ("7", "Jones-Wenzl properties", 10.0, check_jones_wenzl),
    ("8", "connectivity certificates", 30.0, check_connectivity),
    ("9", "oracle equivalences", 60.0, check_oracles),
    ("10", "discreteness classifier", 5.0, check_discreteness),
    ("11", "kernel reduction", 10.0, check_kernel),
]


def run_criterion(key: str) -> Outcome:
    for k, title, limit, fn in CRITERIA:
        if k == key:
            start = time.perf_counter()
            try:
                passed, detail = fn()
            except (DomainError, ArithmeticError, ValueError) as exc:
                passed, detail = False, f"error: {exc}"
            elapsed = time.perf_counter() - start
            if elapsed > limit:
                passed, detail = False, detail + " (time limit exceeded)"
            return Outcome(k, title, passed, elapsed, limit, detail)
    raise KeyError(key)


def run_all(echo: Callable[[str], None] | None = print) -> list[Outcome]:
    results = []
    for key, *_ in CRITERIA:
        out = run_criterion(key)
        if echo:
            echo(out.line())
        results.append(out)
    return results
