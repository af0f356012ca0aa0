"""Braid group representations on W(n*1, c) and their reductions X(n*1, c).

Matrices act on column vectors in the canonical matching basis; column j is
the image of basis vector j, and a braid word maps to the left-to-right
product of its generator matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg as la
from .arith import DomainError, InadmissibleColor, Laurent, ParameterSpec, delta, quantum_integer
from .projector import check_admissible, jones_wenzl
from .skein import (
    PlanarMatching,
    SkeinVector,
    apply_crossing,
    bicolor_parity,
    enumerate_basis,
    trace_strands,
)

INF = None


# ---------------------------------------------------------------------------
# dimensions


@lru_cache(maxsize=None)
def dimension(n: int, c: int, r: int | None = INF) -> int:
    """d(n, c, r): dimension of X(n*1, c) when t has order r (None for generic).

    d(0,0) = 1, d(0,c>0) = 0, and for n > 0
    d(n,c) = d(n-1,c-1) + d(n-1,c+1) with the admissible colors truncated
    to 0..r-2.
    """
    if n < 0 or c < 0:
        raise DomainError("n and c must be nonnegative")
    if r is not None:
        if r < 3:
            raise DomainError("the truncated recurrence needs r >= 3")
        if c > r - 2:
            raise InadmissibleColor(f"color {c} exceeds r - 2 = {r - 2}")
    if n == 0:
        return 1 if c == 0 else 0
    total = 0
    if c > 0:
        total += dimension(n - 1, c - 1, r)
    if r is None or c + 1 <= r - 2:
        total += dimension(n - 1, c + 1, r)
    return total


def dimension_excess(n: int, c: int, r: int) -> int:
    """e(n, c, r) = d(n, c, r) - d(n, r-2-c, r)."""
    return dimension(n, c, r) - dimension(n, r - 2 - c, r)


# ---------------------------------------------------------------------------
# generator matrices and the pairing


def _vector_matrix(vectors: Sequence[SkeinVector], basis: Sequence[PlanarMatching], field) -> np.ndarray:
    out = la.zeros(len(basis), len(vectors), field)
    for j, v in enumerate(vectors):
        for i, x in enumerate(v.coordinates(basis)):
            out[i, j] = x
    return out


@lru_cache(maxsize=None)
def _generic_generators(n: int, c: int, normalization: str) -> tuple[tuple, tuple]:
    spec = ParameterSpec.generic()
    f = spec.field
    basis = enumerate_basis(n, c)
    gens, invs = [], []
    for i in range(1, n):
        for hand, dest in (("right", gens), ("left", invs)):
            images = [apply_crossing(SkeinVector.basis_vector(m, spec), i, hand, normalization) for m in basis]
            dest.append(_vector_matrix(images, basis, f))
    if normalization == "rescaled":
        # odd matchings are multiplied by t^(1/2); conjugate by that diagonal
        d = [f.gen ** 2 if bicolor_parity(m) == "odd" else f.one for m in basis]
        size = len(basis)
        for mats in (gens, invs):
            for k, m in enumerate(mats):
                conj = la.zeros(size, size, f)
                for i in range(size):
                    for j in range(size):
                        conj[i, j] = m[i, j] * d[j] / d[i]
                mats[k] = conj
    return tuple(gens), tuple(invs)


def _gram_entry(a: PlanarMatching, b: PlanarMatching, jw, d, field):
    n, c = a.n, a.c
    base = []
    for (m, tag) in ((a, "A"), (b, "B")):
        for i, j in m.pairs():
            base.append((_gram_label(i, n, tag), _gram_label(j, n, tag)))
    total = field.zero
    for diag, coef in jw.terms.items():
        edges = list(base)
        for i, j in enumerate(diag):
            if i < j:
                edges.append((_jw_end(i, c), _jw_end(j, c)))
        loops = trace_strands(edges)[1]
        total = total + coef * d ** loops
    return total


def _gram_label(i: int, n: int, tag: str):
    return ("L", i) if i < n else (tag, i - n)


def _jw_end(i: int, c: int):
    # input k meets the first rectangle's clasp point at height k from the top
    return ("A", c - 1 - i) if i < c else ("B", c - 1 - (i - c))


def gram_matrix(n: int, c: int, p: ParameterSpec | None = None, basis=None) -> np.ndarray:
    """Gram matrix of the pairing: glue A to the mirror of B, a projector between the clasps."""
    p = p or ParameterSpec.generic()
    if p.order is not None:
        if c > p.order - 2 and not (p.order <= 2 and c == 0):
            raise InadmissibleColor(f"color {c} is not admissible at r = {p.order}")
    check_admissible(c, p)
    basis = enumerate_basis(n, c) if basis is None else basis
    f = p.field
    jw = jones_wenzl(c, p)
    d = delta(p)
    size = len(basis)
    g = la.zeros(size, size, f)
    for i in range(size):
        for j in range(i, size):
            g[i, j] = g[j, i] = _gram_entry(basis[i], basis[j], jw, d, f)
    return g


# ---------------------------------------------------------------------------
# handles


@dataclass(eq=False)
class RepresentationHandle:
    n: int
    c: int
    spec: ParameterSpec
    normalization: str
    basis: tuple[PlanarMatching, ...]
    generators: tuple[np.ndarray, ...]
    inverse_generators: tuple[np.ndarray, ...]
    gram: np.ndarray
    reduced: bool = False
    w_dimension: int = 0
    base_change: dict = dc_field(default_factory=dict)

    @property
    def field(self):
        return self.spec.field

    @property
    def dim(self) -> int:
        return len(self.basis)

    def generator(self, letter: int) -> np.ndarray:
        if not 1 <= abs(letter) <= self.n - 1:
            raise DomainError(f"generator {letter} out of range for B_{self.n}")
        mats = self.generators if letter > 0 else self.inverse_generators
        return mats[abs(letter) - 1]

    def word_matrix(self, word: Sequence[int]) -> np.ndarray:
        return la.product([self.generator(k) for k in word], self.field, self.dim)

    def in_basis(self, name: str, m: np.ndarray) -> np.ndarray:
        """m expressed in a recorded alternative basis (columns of base_change[name])."""
        p = self.base_change[name]
        return la.mul(la.mul(la.inverse(p, self.field), m, self.field), p, self.field)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "parameter": self.spec.to_json(),
            "normalization": self.normalization,
            "dimension": self.dim,
            "reduced": self.reduced,
            "basis": [m.describe() for m in self.basis],
            "generators": [la.to_strings(m) for m in self.generators],
            "gram": la.to_strings(self.gram),
        }


def build(n: int, c: int, p: ParameterSpec | None = None, normalization: str = "bracket") -> RepresentationHandle:
    p = p or ParameterSpec.generic()
    if n < 1:
        raise DomainError("need at least one strand")
    if (n + c) % 2:
        raise DomainError(f"n + c must be even, got n={n}, c={c}")
    if p.order is not None and p.order >= 3 and c > p.order - 2:
        raise InadmissibleColor(f"color {c} exceeds r - 2 = {p.order - 2}")
    if not p.is_exact:
        raise DomainError("build needs an exact parameter; evaluate a generic handle instead")
    f = p.field
    basis = enumerate_basis(n, c)
    gens, invs = _generic_generators(n, c, normalization)
    if not p.is_generic:
        gens = tuple(la.convert(m, f) for m in gens)
        invs = tuple(la.convert(m, f) for m in invs)
    gram = gram_matrix(n, c, p, basis)
    if normalization == "rescaled":
        d = la.zeros(len(basis), len(basis), f)
        for i, m in enumerate(basis):
            d[i, i] = f.gen ** 2 if bicolor_parity(m) == "odd" else f.one
        gram = la.mul(la.mul(la.transpose(la.bar(d, f)), gram, f), d, f)
    handle = RepresentationHandle(n, c, p, normalization, basis, gens, invs, gram,
                                  w_dimension=len(basis))
    if len(basis) and la.rank(gram, f) < len(basis):
        handle = _reduce(handle)
    handle.base_change.update(_printed_bases(handle))
    return handle


def _reduce(h: RepresentationHandle) -> RepresentationHandle:
    """Quotient by the kernel of the Gram matrix; pivot columns give the basis."""
    f = h.field
    g = h.gram
    _, pivots = la.rref(g, f)
    gpp = g[np.ix_(pivots, pivots)]
    gpp_inv = la.inverse(gpp, f)

    def project(m):
        gm = la.mul(g, m, f)
        return la.mul(gpp_inv, gm[np.ix_(pivots, pivots)], f)

    return RepresentationHandle(
        h.n, h.c, h.spec, h.normalization,
        tuple(h.basis[i] for i in pivots),
        tuple(project(m) for m in h.generators),
        tuple(project(m) for m in h.inverse_generators),
        gpp, reduced=True, w_dimension=h.w_dimension,
    )


def _printed_bases(h: RepresentationHandle) -> dict:
    """Bases in which printed matrices are stated, as columns in handle coordinates."""
    f = h.field
    out = {}
    if (h.n, h.c) == (4, 0) and h.dim == 2:
        # printed order: nested arcs first, then the side-by-side cups
        out["printed"] = la.matrix([[0, 1], [1, 0]], f)
        if h.normalization == "bracket":
            # basis used for t < 0: the side-by-side cups carry t^(1/2)
            out["printed_negative"] = la.matrix([[0, f.gen ** 2], [1, 0]], f)
    if (h.n, h.c) == (3, 1) and h.dim == 2 and h.normalization == "bracket":
        # tau_1 eigenbasis: the capped matching, then the projector on strands 1,2
        out["printed"] = la.matrix([[1, f.one / quantum_integer(2, h.spec)], [0, 1]], f)
    return out


def flip_matrix(n: int, c: int, p: ParameterSpec | None = None) -> np.ndarray:
    """Permutation matrix of the top-bottom mirror on the matching basis."""
    p = p or ParameterSpec.generic()
    basis = enumerate_basis(n, c)
    index = {m: i for i, m in enumerate(basis)}
    out = la.zeros(len(basis), len(basis), p.field)
    for j, m in enumerate(basis):
        out[index[m.flip()], j] = p.field.one
    return out


# ---------------------------------------------------------------------------
# invariance of the pairing


def invariance_check(h: RepresentationHandle, generators: Sequence[np.ndarray] | None = None) -> bool:
    """bar(M)^T G M == G for every generator M (bar: s -> 1/s)."""
    f = h.field
    mats = h.generators if generators is None else generators
    for m in mats:
        lhs = la.mul(la.mul(la.transpose(la.bar(m, f)), h.gram, f), m, f)
        if not la.equal(lhs, h.gram):
            return False
    return True


# ---------------------------------------------------------------------------
# full twists


@dataclass(eq=False)
class TwistSplit:
    strands: tuple[int, int]
    colors: list[int]
    eigenvalues: list
    bases: list[np.ndarray]
    twist: np.ndarray

    @property
    def dims(self) -> list[int]:
        return [b.shape[1] for b in self.bases]

    def change_of_basis(self) -> np.ndarray:
        return np.concatenate(self.bases, axis=1)


def full_twist_word(lo: int, k: int) -> list[int]:
    """(s_lo s_lo+1 ... s_lo+k-2)^k on the k strands starting at position lo."""
    return [lo + j for j in range(k - 1)] * k


def twist_eigenvalue(a: int, k: int, spec: ParameterSpec, normalization: str = "bracket"):
    """Eigenvalue of the full twist on k strands fusing to color a: s^(a(a+2) - 3k)."""
    f = spec.field
    value = f.gen ** (a * (a + 2) - 3 * k)
    if normalization == "rescaled":
        value = value * f.gen ** (-k * (k - 1))
    return value


def full_twist_split(h: RepresentationHandle, strands: str | tuple[int, int] = "first") -> TwistSplit:
    """Eigenspaces of the full twist on a block of consecutive strands.

    Candidate eigenvalues come from the colors a the block can fuse to; each
    candidate is confirmed by an exact nullspace computation.
    """
    if strands == "first":
        lo, hi = 1, h.n - 1
    elif strands == "last":
        lo, hi = 2, h.n
    else:
        lo, hi = strands
    k = hi - lo + 1
    if h.dim == 0 or k < 1:
        raise DomainError("nothing to split")
    f = h.field
    twist = h.word_matrix(full_twist_word(lo, k))
    r = h.spec.order
    max_color = k if r is None else min(k, r - 2)
    groups: dict = {}
    for a in range(k % 2, max_color + 1, 2):
        lam = twist_eigenvalue(a, k, h.spec, h.normalization)
        groups.setdefault(lam, []).append(a)
    colors, values, bases = [], [], []
    for lam, cols in groups.items():
        shifted = twist.copy()
        for i in range(h.dim):
            shifted[i, i] = shifted[i, i] - lam
        ns = la.nullspace(shifted, f)
        if ns.shape[1]:
            colors.append(cols[0] if len(cols) == 1 else tuple(cols))
            values.append(lam)
            bases.append(ns)
    if sum(b.shape[1] for b in bases) != h.dim:
        raise DomainError("full twist is not diagonalizable with the predicted spectrum")
    order = sorted(range(len(colors)), key=lambda i: -(colors[i] if isinstance(colors[i], int) else max(colors[i])))
    return TwistSplit((lo, hi), [colors[i] for i in order], [values[i] for i in order],
                      [bases[i] for i in order], twist)


def clasp_twist_scalar(c: int, p: ParameterSpec | None = None):
    """Full twist on a clasped color-c strand, corrected by one positive kink per strand.

    The kink factor t^(3/4) is the value of the closure of a single positive
    crossing divided by the loop value.
    """
    p = p or ParameterSpec.generic()
    h = build(c, c, p) if c else None
    f = p.field
    if c == 0:
        return f.one
    twist = h.word_matrix(full_twist_word(1, c))
    return twist[0, 0] * f.gen ** (3 * c)


# ---------------------------------------------------------------------------
# the clasp change-of-basis identity


def _four_clasp_labels(c: int):
    top = list(range(c))
    left = c
    bottom = list(range(c + 1, 2 * c + 1))
    right = 2 * c + 1
    return top, left, bottom, right


def _skeletons(c: int):
    top, left, bottom, right = _four_clasp_labels(c)
    a = [(left, top[c - 1]), (right, bottom[c - 1])] + [(top[j], bottom[c - 2 - j]) for j in range(c - 1)]
    b = [(left, bottom[0]), (right, top[0])] + [(top[j], bottom[c - j]) for j in range(1, c)]
    return a, b


def _insert_projector(pairs, side1_order: list[int], spec: ParameterSpec, c: int) -> dict:
    """Insert a Jones-Wenzl projector on every strand crossing a cut."""
    top, _, bottom, _ = _four_clasp_labels(c)
    rank = {x: i for i, x in enumerate(side1_order)}
    crossing = []
    fixed = []
    for a, b in pairs:
        if (a in rank) != (b in rank):
            x, y = (a, b) if a in rank else (b, a)
            crossing.append((x, y))
        else:
            fixed.append((a, b))
    crossing.sort(key=lambda xy: rank[xy[0]])
    m = len(crossing)
    f = spec.field
    d = delta(spec)
    jw = jones_wenzl(m, spec)
    out: dict = {}
    tgroup, bgroup = set(top), set(bottom)
    for diag, coef in jw.terms.items():
        edges = list(fixed)
        for k, (x, y) in enumerate(crossing):
            edges.append((x, ("in", k)))
            edges.append((("out", k), y))
        for i, j in enumerate(diag):
            if i < j:
                edges.append((_jw_node(i, m), _jw_node(j, m)))
        result, loops = trace_strands(edges, list(range(2 * c + 2)))
        if any((a in tgroup and b in tgroup) or (a in bgroup and b in bgroup) for a, b in result):
            continue
        key = tuple(sorted(tuple(sorted(p)) for p in result))
        out[key] = out.get(key, f.zero) + coef * d ** loops
    return {k: v for k, v in out.items() if v != 0}


def _jw_node(i: int, m: int):
    return ("in", i) if i < m else ("out", i - m)


def cob_matrix(c: int, p: ParameterSpec | None = None) -> np.ndarray:
    """Coefficients of v1, v2 (rows) in terms of w1, w2 (columns).

    Boundary: a color-c clasp on top, a single strand on the left, a color-c
    clasp at the bottom and a single strand on the right.  v1, v2 carry the
    projector on the cut separating top and right from bottom and left (colors
    c+1 and c-1); w1, w2 on the cut separating top and left from bottom and
    right (colors c-1 and c+1).
    """
    p = p or ParameterSpec.generic()
    if c < 1:
        raise DomainError("the change-of-basis identity needs c >= 1")
    check_admissible(c + 1, p)
    f = p.field
    top, left, bottom, right = _four_clasp_labels(c)
    sk_a, sk_b = _skeletons(c)
    cut_v = [right] + top
    cut_w = top + [left]
    v1 = _insert_projector(sk_a, cut_v, p, c)
    v2 = _insert_projector(sk_b, cut_v, p, c)
    w1 = _insert_projector(sk_a, cut_w, p, c)
    w2 = _insert_projector(sk_b, cut_w, p, c)
    keys = sorted(set(v1) | set(v2) | set(w1) | set(w2))
    w = la.matrix([[w1.get(k, 0) for k in keys], [w2.get(k, 0) for k in keys]], f)
    v = la.matrix([[v1.get(k, 0) for k in keys], [v2.get(k, 0) for k in keys]], f)
    # solve C w = v via the normal rows: pick two independent columns of w
    _, cols = la.rref(la.transpose(w), f)
    if len(cols) != 2:
        raise DomainError("w1, w2 are not independent")
    wsq = w[:, cols]
    coeffs = la.mul(v[:, cols], la.inverse(wsq, f), f)
    if not la.equal(la.mul(coeffs, w, f), v):
        raise DomainError("v1, v2 are not in the span of w1, w2")
    return coeffs


def cob_expected(c: int, p: ParameterSpec | None = None) -> np.ndarray:
    p = p or ParameterSpec.generic()
    q = lambda k: quantum_integer(k, p)  # noqa: E731
    f = p.field
    return la.matrix([[q(c) * q(c + 2) / q(c + 1) ** 2, f.one / q(c + 1)],
                      [-f.one / q(c + 1), f.one]], f)


def printed_cob_matrix(c: int, p: ParameterSpec | None = None) -> np.ndarray:
    """The same coefficients with rows ordered (v2, v1)."""
    m = cob_matrix(c, p)
    return m[[1, 0], :]


def cob_identity_check(c: int, p: ParameterSpec | None = None) -> bool:
    if not 1 <= c <= 4:
        raise DomainError("cob_identity_check supports 1 <= c <= 4")
    return la.equal(cob_matrix(c, p), cob_expected(c, p))


# ---------------------------------------------------------------------------
# traces


def markov_trace_bracket(word: Sequence[int], strands: int, p: ParameterSpec | None = None):
    """Bracket of a braid closure as sum over colors of (-1)^c [c+1] tr(rho_c(word))."""
    p = p or ParameterSpec.generic()
    f = p.field
    total = f.zero
    for c in range(strands % 2, strands + 1, 2):
        h = build(strands, c, p)
        m = h.word_matrix(word)
        tr = f.zero
        for i in range(h.dim):
            tr = tr + m[i, i]
        sign = -1 if c % 2 else 1
        total = total + sign * quantum_integer(c + 1, p) * tr
    return total
