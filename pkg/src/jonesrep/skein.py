"""Planar matchings, the Kauffman bracket rewriting engine, and link diagrams.

Boundary points of the rectangle are numbered cyclically: the n left points
top to bottom as 0..n-1, then the c clasp points on the right bottom to top
as n..n+c-1.  A matching is stored as its involution ``pairing``.

A right-handed crossing on strands i, i+1 resolves as

    -s * (identity smoothing) - s^-1 * e_i,

where s = t^(1/4); the left-handed crossing swaps s and 1/s.  With these
signs the cup on two points picks up s^-3 = t^(-3/4).
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Mapping

from .arith import DomainError, ParameterSpec, delta


@dataclass(frozen=True, order=True)
class PlanarMatching:
    pairing: tuple[int, ...]
    n: int
    c: int

    def __post_init__(self):
        size = self.n + self.c
        if len(self.pairing) != size:
            raise ValueError("pairing length must be n + c")
        for i, j in enumerate(self.pairing):
            if j == i or self.pairing[j] != i:
                raise ValueError("pairing must be a fixed-point-free involution")
        stack = []
        for i, j in enumerate(self.pairing):
            if j > i:
                stack.append(j)
            elif stack.pop() != i:
                raise ValueError("pairing is not noncrossing")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n: int, c: int = 0) -> "PlanarMatching":
        p = [None] * (n + c)
        for i, j in pairs:
            p[i], p[j] = j, i
        return cls(tuple(p), n, c)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.pairing) if i < j]

    def is_clasp(self, i: int) -> bool:
        return i >= self.n

    def has_turnback(self) -> bool:
        """True when two clasp points are joined; such a skein is zero."""
        return any(self.is_clasp(i) and self.is_clasp(j) for i, j in self.pairs())

    def flip(self) -> "PlanarMatching":
        """Mirror top to bottom: left point i -> n-1-i, clasp point j -> reversed."""
        n, c = self.n, self.c

        def f(i):
            return n - 1 - i if i < n else n + (n + c - 1 - i)

        return PlanarMatching.from_pairs(((f(i), f(j)) for i, j in self.pairs()), n, c)

    def describe(self) -> str:
        def name(i):
            return str(i + 1) if i < self.n else f"c{i - self.n + 1}"

        return " ".join(f"{name(i)}-{name(j)}" for i, j in self.pairs()) or "empty"

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c, "pairs": [list(p) for p in self.pairs()]}


def _noncrossing(points: tuple[int, ...], n: int) -> list[list[tuple[int, int]]]:
    """Noncrossing perfect matchings of points in which no two points >= n are paired."""
    if not points:
        return [[]]
    first, out = points[0], []
    for k in range(1, len(points), 2):
        if first >= n and points[k] >= n:
            continue
        for inner in _noncrossing(points[1:k], n):
            for outer in _noncrossing(points[k + 1:], n):
                out.append([(first, points[k])] + inner + outer)
    return out


@lru_cache(maxsize=None)
def enumerate_basis(n: int, c: int) -> tuple[PlanarMatching, ...]:
    """Admissible matchings of W(n*1, c), sorted lexicographically by pairing."""
    if n < 0 or c < 0:
        raise DomainError("n and c must be nonnegative")
    if (n + c) % 2:
        raise DomainError(f"n + c must be even, got n={n}, c={c}")
    out = [PlanarMatching.from_pairs(pairs, n, c) for pairs in _noncrossing(tuple(range(n + c)), n)]
    return tuple(sorted(out))


def cap_cup(m: PlanarMatching, i: int) -> tuple[PlanarMatching | None, int]:
    """Apply e_i (joins left points i-1 and i, 1-based strand i).

    Returns the new matching (None if a clasp turnback was created) and the
    number of closed loops produced.
    """
    a, b = i - 1, i
    if not (1 <= i <= m.n - 1):
        raise DomainError(f"strand index {i} out of range 1..{m.n - 1}")
    if m.pairing[a] == b:
        return m, 1
    pa, pb = m.pairing[a], m.pairing[b]
    if m.is_clasp(pa) and m.is_clasp(pb):
        return None, 0
    p = list(m.pairing)
    p[a], p[b], p[pa], p[pb] = b, a, pb, pa
    return PlanarMatching(tuple(p), m.n, m.c), 0


@dataclass(frozen=True)
class ClosedDiagram:
    loops: int

    def __post_init__(self):
        if self.loops < 0:
            raise ValueError("loop count must be nonnegative")


def evaluate_closed(d: ClosedDiagram | int, p: ParameterSpec | None = None):
    loops = d.loops if isinstance(d, ClosedDiagram) else d
    return delta(p) ** loops


@dataclass(frozen=True)
class SkeinVector:
    n: int
    c: int
    spec: ParameterSpec
    terms: Mapping[PlanarMatching, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        for m in self.terms:
            if (m.n, m.c) != (self.n, self.c):
                raise ValueError("matching does not belong to this skein space")
        object.__setattr__(self, "terms", {m: x for m, x in self.terms.items() if x != 0})

    @classmethod
    def basis_vector(cls, m: PlanarMatching, spec: ParameterSpec | None = None) -> "SkeinVector":
        spec = spec or ParameterSpec.generic()
        return cls(m.n, m.c, spec, {m: spec.field.one})

    @property
    def field(self):
        return self.spec.field

    def _combine(self, other: "SkeinVector", sign: int) -> "SkeinVector":
        if (other.n, other.c, other.spec) != (self.n, self.c, self.spec):
            raise ValueError("vectors from different skein spaces")
        out = dict(self.terms)
        for m, x in other.terms.items():
            out[m] = out.get(m, self.field.zero) + (x if sign > 0 else -x)
        return SkeinVector(self.n, self.c, self.spec, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, x) -> "SkeinVector":
        x = self.field.coerce(x)
        return SkeinVector(self.n, self.c, self.spec, {m: x * y for m, y in self.terms.items()})

    def __rmul__(self, x):
        return self.scale(x)

    def __eq__(self, other):
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def coordinates(self, basis: Iterable[PlanarMatching] | None = None) -> list:
        basis = enumerate_basis(self.n, self.c) if basis is None else basis
        index = set(basis)
        extra = [m for m in self.terms if m not in index]
        if extra:
            raise ValueError(f"vector has components outside the basis: {extra[0].describe()}")
        return [self.terms.get(m, self.field.zero) for m in basis]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({x})*[{m.describe()}]" for m, x in sorted(self.terms.items()))


def apply_tl(v: SkeinVector, i: int) -> SkeinVector:
    """The cap-cup generator e_i with loop and turnback rules."""
    f = v.field
    d = delta(v.spec)
    out: dict = {}
    for m, x in v.terms.items():
        res, loops = cap_cup(m, i)
        if res is None:
            continue
        out[res] = out.get(res, f.zero) + (x * d if loops else x)
    return SkeinVector(v.n, v.c, v.spec, out)


def crossing_coefficients(spec: ParameterSpec, handedness: str = "right",
                          normalization: str = "bracket"):
    """(identity coefficient, e_i coefficient) of a single crossing."""
    f = spec.field
    s = f.gen
    s_inv = f.one / s
    if handedness == "right":
        a, b = -s, -s_inv
        scale = s_inv
    elif handedness == "left":
        a, b = -s_inv, -s
        scale = s
    else:
        raise ValueError("handedness must be 'left' or 'right'")
    if normalization == "rescaled":
        a, b = a * scale, b * scale
    elif normalization != "bracket":
        raise ValueError("normalization must be 'bracket' or 'rescaled'")
    return a, b


def apply_crossing(v: SkeinVector, i: int, handedness: str = "right",
                   normalization: str = "bracket") -> SkeinVector:
    if not (1 <= i <= v.n - 1):
        raise DomainError(f"strand index {i} out of range 1..{v.n - 1}")
    a, b = crossing_coefficients(v.spec, handedness, normalization)
    return v.scale(a) + apply_tl(v, i).scale(b)


def apply_word(v: SkeinVector, word: Iterable[int], normalization: str = "bracket") -> SkeinVector:
    """Act by the braid word; matrix convention, so the last letter acts first."""
    for letter in reversed(list(word)):
        v = apply_crossing(v, abs(letter), "right" if letter > 0 else "left", normalization)
    return v


def bicolor_parity(m: PlanarMatching) -> str:
    """Parity of the number of black regions, with the top region white.

    Boundary segment j sits between points j-1 and j (segment 0 is the top
    edge); colours alternate along the boundary, and following an arc from
    point j lands on segment pairing[j] + 1 of the same region.
    """
    return "odd" if black_regions(m) % 2 else "even"


def black_regions(m: PlanarMatching) -> int:
    size = m.n + m.c
    seen, black = set(), 0
    for start in range(size):
        if start in seen:
            continue
        j = start
        while j not in seen:
            seen.add(j)
            j = (m.pairing[j] + 1) % size
        black += start % 2
    return black


# ---------------------------------------------------------------------------
# gluing


def trace_strands(edges: Iterable[tuple], boundary: Iterable = ()) -> tuple[list[tuple], int]:
    """Follow arcs through a union of partial matchings.

    ``edges`` joins labels in pairs; every label must meet two edges unless it
    is a boundary label (one edge).  Returns the induced pairs of boundary
    labels and the number of closed loops.
    """
    edges = list(edges)
    adj: dict = {}
    for k, (a, b) in enumerate(edges):
        adj.setdefault(a, []).append((k, b))
        adj.setdefault(b, []).append((k, a))
    bset = set(boundary)
    for label, inc in adj.items():
        want = 1 if label in bset else 2
        if len(inc) != want:
            raise ValueError(f"label {label!r} has degree {len(inc)}, expected {want}")
    used: set[int] = set()
    pairs = []
    for start in boundary:
        if not any(k not in used for k, _ in adj.get(start, [])):
            continue
        cur = start
        while True:
            k, nxt = next((k, o) for k, o in adj[cur] if k not in used)
            used.add(k)
            cur = nxt
            if cur in bset:
                break
        pairs.append((start, cur))
    loops = 0
    for k0 in range(len(edges)):
        if k0 in used:
            continue
        loops += 1
        cur = edges[k0][0]
        k = k0
        while k not in used:
            used.add(k)
            a, b = edges[k]
            cur = b if a == cur else a
            k = next((kk for kk, _ in adj[cur] if kk not in used), k)
    return pairs, loops


def pairing_loops(a: PlanarMatching, b: PlanarMatching) -> int:
    """Loops formed by gluing a matching to the mirror image of another (c = 0)."""
    if (a.n, a.c) != (b.n, b.c) or a.c:
        raise ValueError("pairing_loops needs two matchings of W(n, 0)")
    edges = [(("p", i), ("p", j)) for i, j in a.pairs()]
    edges += [(("p", i), ("p", j)) for i, j in b.pairs()]
    return trace_strands(edges)[1]


# ---------------------------------------------------------------------------
# braid words


_WORD_TOKEN = re.compile(r"\s*(-?\d+|\[|\]|,)")


def parse_braid_word(text: str) -> tuple[int, ...]:
    """Signed generator indices; ``[a, b]`` expands to a b a^-1 b^-1."""
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad braid word {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    i = 0

    def word(stop):
        nonlocal i
        out: list[int] = []
        while i < len(tokens) and tokens[i] not in stop:
            tok = tokens[i]
            if tok == "[":
                i += 1
                a = word({","})
                if i >= len(tokens) or tokens[i] != ",":
                    raise ValueError(f"missing ',' in commutator of {text!r}")
                i += 1
                b = word({"]"})
                if i >= len(tokens) or tokens[i] != "]":
                    raise ValueError(f"missing ']' in {text!r}")
                i += 1
                out += a + b + invert_word(a) + invert_word(b)
            elif tok in ",]":
                raise ValueError(f"unexpected {tok!r} in {text!r}")
            else:
                k = int(tok)
                if k == 0:
                    raise ValueError("generator index 0 is not allowed")
                out.append(k)
                i += 1
        return out

    out = word(set())
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return tuple(out)


def invert_word(word: Iterable[int]) -> list[int]:
    return [-k for k in reversed(list(word))]


def format_word(word: Iterable[int]) -> str:
    return " ".join(str(k) for k in word)


# ---------------------------------------------------------------------------
# link diagrams and the state-sum oracle


@dataclass(frozen=True)
class LinkDiagram:
    """PD code: each crossing X[a,b,c,d] lists edge labels counterclockwise,
    starting from the incoming under-strand.  ``free_loops`` counts components
    without crossings, which PD notation cannot express."""

    crossings: tuple[tuple, ...]
    free_loops: int = 0

    def __post_init__(self):
        counts: dict = {}
        for x in self.crossings:
            if len(x) != 4:
                raise DomainError("each crossing needs four edge labels")
            for label in x:
                counts[label] = counts.get(label, 0) + 1
        bad = [k for k, v in counts.items() if v != 2]
        if bad:
            raise DomainError(f"edge label {bad[0]!r} occurs {counts[bad[0]]} times, expected 2")
        if self.free_loops < 0:
            raise DomainError("free loop count must be nonnegative")


def parse_pd(text: str) -> LinkDiagram:
    """Accepts ``PD[X[1,2,3,4], ...]``, bare ``X[...]`` lists, or JSON
    (a list of 4-tuples or ``{"crossings": [...], "loops": k}``)."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return LinkDiagram(tuple(tuple(x) for x in data.get("crossings", [])), int(data.get("loops", 0)))
    if text.startswith("[") and "X" not in text:
        data = ast.literal_eval(text)
        return LinkDiagram(tuple(tuple(x) for x in data))
    found = re.findall(r"X\[\s*([^\]]*)\]", text)
    if not found and text not in ("PD[]", ""):
        raise DomainError(f"cannot parse PD code {text[:40]!r}")
    crossings = tuple(tuple(int(v) for v in body.split(",")) for body in found)
    return LinkDiagram(crossings)


def bracket_state_sum(link: LinkDiagram, p: ParameterSpec | None = None):
    """Brute force over all 2^k smoothings.

    At X[a,b,c,d] the A-smoothing joins (a,b),(c,d) and carries A = -s; the
    B-smoothing joins (a,d),(b,c) and carries 1/A.  Each state contributes
    A^(#A - #B) delta^(loops).
    """
    p = p or ParameterSpec.generic()
    f = p.field
    A = -f.gen
    A_inv = f.one / A
    d = delta(p)
    total = f.zero
    k = len(link.crossings)
    for state in iproduct((0, 1), repeat=k):
        edges = []
        for (a, b, c, dd), choice in zip(link.crossings, state):
            if choice == 0:
                edges += [(("e", a), ("e", b)), (("e", c), ("e", dd))]
            else:
                edges += [(("e", a), ("e", dd)), (("e", b), ("e", c))]
        loops = trace_strands(edges)[1] + link.free_loops
        weight = f.one
        for choice in state:
            weight = weight * (A if choice == 0 else A_inv)
        total = total + weight * d ** loops
    if k == 0 and link.free_loops == 0:
        return f.one
    return total


def braid_closure_diagram(word: Iterable[int], strands: int) -> LinkDiagram:
    """PD code of the closure of a braid on ``strands`` strands.

    Strands run left to right, position 1 on top.  Letter +i is the crossing
    in which the strand at position i passes over on its way to position i+1;
    its A-smoothing is the identity smoothing, matching the engine's
    right-handed crossing.
    """
    word = list(word)
    if any(not 1 <= abs(k) < strands for k in word):
        raise DomainError("braid letter out of range")
    next_label = strands + 1
    current = list(range(1, strands + 1))
    raw = []
    for letter in word:
        i = abs(letter) - 1
        in_top, in_bot = current[i], current[i + 1]
        out_top, out_bot = next_label, next_label + 1
        next_label += 2
        current[i], current[i + 1] = out_top, out_bot
        if letter > 0:
            raw.append((in_bot, out_bot, out_top, in_top))
        else:
            raw.append((in_top, in_bot, out_bot, out_top))
    # closing up identifies the final label at each position with the initial one
    alias = {final: start for start, final in zip(range(1, strands + 1), current)}
    crossings = tuple(tuple(alias.get(x, x) for x in xing) for xing in raw)
    used = {x for xing in crossings for x in xing}
    free = sum(1 for pos in range(1, strands + 1) if pos not in used)
    return LinkDiagram(crossings, free)


def closure_bracket(word: Iterable[int], strands: int, p: ParameterSpec | None = None):
    """Bracket of a braid closure computed by the skein engine.

    The braid acts on the nested matching of W(2*strands, 0) (strands on the
    first half of the points) and the result is paired with the same nested
    matching, which closes every strand around the right.
    """
    p = p or ParameterSpec.generic()
    n = 2 * strands
    nested = PlanarMatching.from_pairs(((i, n - 1 - i) for i in range(strands)), n, 0)
    v = apply_word(SkeinVector.basis_vector(nested, p), word)
    d = delta(p)
    total = p.field.zero
    for m, x in v.terms.items():
        total = total + x * d ** pairing_loops(nested, m)
    return total
