"""Temperley-Lieb diagrams and Jones-Wenzl projectors.

A diagram on c strands is an involution on 2c points: ``0..c-1`` are the
input ends (top to bottom), ``c..2c-1`` the output ends in the same order.
Composition ``compose(x, y)`` means "first y, then x".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .arith import InadmissibleColor, ParameterSpec, delta, quantum_integer
from .skein import PlanarMatching, SkeinVector, trace_strands

Diagram = tuple[int, ...]


def identity_diagram(c: int) -> Diagram:
    return tuple(list(range(c, 2 * c)) + list(range(c)))


def tl_generator(c: int, i: int) -> Diagram:
    """e_i joins strands i and i+1 (1-based) on both sides."""
    if not 1 <= i < c:
        raise ValueError(f"e_{i} does not exist on {c} strands")
    p = list(identity_diagram(c))
    a, b = i - 1, i
    p[a], p[b] = b, a
    p[c + a], p[c + b] = c + b, c + a
    return tuple(p)


def compose(x: Diagram, y: Diagram) -> tuple[Diagram, int]:
    """Diagram of x after y, and the number of closed loops."""
    c = len(x) // 2
    # ends of the result: y's inputs (0..c-1) and x's outputs (c..2c-1);
    # a walk alternates between y and x through the middle points
    out = [-1] * (2 * c)
    seen_mid = [False] * c
    for start in range(2 * c):
        if out[start] >= 0:
            continue
        if start < c:
            j, side = y[start], "y"
        else:
            j, side = x[start], "x"
        while True:
            if side == "y":
                if j < c:
                    end = j
                    break
                seen_mid[j - c] = True
                j, side = x[j - c], "x"
            else:
                if j >= c:
                    end = j
                    break
                seen_mid[j] = True
                j, side = y[c + j], "y"
        out[start], out[end] = end, start
    loops = 0
    for k in range(c):
        if seen_mid[k]:
            continue
        loops += 1
        # a closed loop alternates x-caps and y-cups through middle points
        m = k
        while True:
            a = x[m]
            seen_mid[m] = seen_mid[a] = True
            m = y[c + a] - c
            if m == k:
                break
    return tuple(out), loops


def tensor_identity(x: Diagram) -> Diagram:
    """x with one extra straight strand at the bottom."""
    c = len(x) // 2
    shift = [j if j < c else j + 1 for j in x]
    p = shift[:c] + [2 * c + 1] + shift[c:] + [c]
    return tuple(p)


@dataclass(frozen=True)
class ProjectorExpansion:
    c: int
    spec: ParameterSpec
    terms: Mapping[Diagram, object]

    @property
    def field(self):
        return self.spec.field

    def coefficient(self, d: Diagram):
        return self.terms.get(d, self.field.zero)

    def __len__(self):
        return len(self.terms)


def tl_multiply(x: Mapping[Diagram, object], y: Mapping[Diagram, object], spec: ParameterSpec) -> dict:
    """Product of two linear combinations of diagrams, x after y."""
    f = spec.field
    d = delta(spec)
    out: dict = {}
    for dx, cx in x.items():
        for dy, cy in y.items():
            res, loops = compose(dx, dy)
            key = (res, loops)
            out[key] = out.get(key, f.zero) + cx * cy
    total: dict = {}
    powers = {0: f.one}
    for (res, loops), coef in out.items():
        if loops not in powers:
            powers[loops] = d ** loops
        total[res] = total.get(res, f.zero) + coef * powers[loops]
    return {k: v for k, v in total.items() if v != 0}


def tl_equal(x: Mapping[Diagram, object], y: Mapping[Diagram, object]) -> bool:
    keys = set(x) | set(y)
    return all(x.get(k, 0) == y.get(k, 0) for k in keys)


def check_admissible(c: int, spec: ParameterSpec) -> None:
    if c < 0:
        raise InadmissibleColor("color must be nonnegative")
    for k in range(1, c + 1):
        if quantum_integer(k, spec) == 0:
            raise InadmissibleColor(f"color {c} is inadmissible: [{k}] vanishes at {spec.describe()}")


@lru_cache(maxsize=None)
def jones_wenzl(c: int, spec: ParameterSpec | None = None) -> ProjectorExpansion:
    """JW_c = JW_{c-1}(x)1 + ([c-1]/[c]) (JW_{c-1}(x)1) e_{c-1} (JW_{c-1}(x)1).

    The sign of the correction term reflects the loop value -[2].
    """
    spec = spec or ParameterSpec.generic()
    check_admissible(c, spec)
    f = spec.field
    if c <= 1:
        return ProjectorExpansion(c, spec, {identity_diagram(c): f.one})
    prev = jones_wenzl(c - 1, spec)
    lifted = {tensor_identity(d): x for d, x in prev.terms.items()}
    e = {tl_generator(c, c - 1): f.one}
    middle = tl_multiply(tl_multiply(lifted, e, spec), lifted, spec)
    ratio = quantum_integer(c - 1, spec) / quantum_integer(c, spec)
    out = dict(lifted)
    for d, x in middle.items():
        out[d] = out.get(d, f.zero) + ratio * x
    return ProjectorExpansion(c, spec, {d: x for d, x in out.items() if x != 0})


def is_idempotent(c: int, spec: ParameterSpec | None = None) -> bool:
    jw = jones_wenzl(c, spec)
    return tl_equal(tl_multiply(jw.terms, jw.terms, jw.spec), jw.terms)


def annihilates_caps(c: int, spec: ParameterSpec | None = None) -> bool:
    """e_i JW_c = JW_c e_i = 0 for every i."""
    jw = jones_wenzl(c, spec)
    for i in range(1, c):
        e = {tl_generator(c, i): jw.field.one}
        if tl_multiply(e, jw.terms, jw.spec) or tl_multiply(jw.terms, e, jw.spec):
            return False
    return True


def clasp_compose(v: SkeinVector, c: int | None = None) -> SkeinVector:
    """Attach JW_c to the clasp of every matching in v.

    Clasp point n+j (j counted from the bottom) meets projector input
    c-1-j.  Terms that end with a clasp turnback are zero.
    """
    c = v.c if c is None else c
    if c != v.c:
        raise ValueError(f"vector has clasp size {v.c}, not {c}")
    spec = v.spec
    f = spec.field
    jw = jones_wenzl(c, spec)
    d = delta(spec)
    n = v.n
    out: dict = {}
    for m, x in v.terms.items():
        for diag, y in jw.terms.items():
            edges = []
            for i, j in m.pairs():
                edges.append((_m_label(i, n, c), _m_label(j, n, c)))
            for i, j in enumerate(diag):
                if i < j:
                    edges.append((_jw_label(i, c), _jw_label(j, c)))
            ends = [("L", k) for k in range(n)] + [("C", k) for k in range(c)]
            pairs, loops = trace_strands(edges, ends)
            point = {("L", k): k for k in range(n)}
            point.update({("C", k): n + k for k in range(c)})
            p = [0] * (n + c)
            for a, b in pairs:
                p[point[a]], p[point[b]] = point[b], point[a]
            res = PlanarMatching(tuple(p), n, c)
            if res.has_turnback():
                continue
            coef = x * y * (d ** loops if loops else f.one)
            out[res] = out.get(res, f.zero) + coef
    return SkeinVector(n, c, spec, out)


def _m_label(i: int, n: int, c: int):
    return ("L", i) if i < n else ("in", c - 1 - (i - n))


def _jw_label(i: int, c: int):
    # projector output k sits at height k from the top, i.e. new clasp point c-1-k
    return ("in", i) if i < c else ("C", c - 1 - (i - c))
