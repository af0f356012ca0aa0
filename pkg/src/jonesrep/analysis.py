"""Density and discreteness certificates for braid group representations."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import flint
import networkx as nx
import numpy as np
from flint import fmpq, fmpq_mat, fmpq_poly

from . import linalg as la
from .arith import (
    INFINITE_ORDER,
    AlgebraicNumber,
    DomainError,
    Laurent,
    NFElement,
    NumberField,
    ParameterSpec,
    RatFunc,
    cos_minpoly,
    format_terms,
    root_of_unity_order,
)
from .rep import RepresentationHandle, build, full_twist_split, full_twist_word


# ---------------------------------------------------------------------------
# characteristic polynomials


def char_poly(m: np.ndarray, field) -> list:
    """Monic characteristic polynomial, coefficients low to high."""
    return la.charpoly(m, field)


def strip_unit_root(coeffs: list, field) -> tuple[int, list]:
    """Divide out (x - 1) as often as possible; return the multiplicity and quotient."""
    mult = 0
    coeffs = list(coeffs)
    while len(coeffs) > 1:
        # synthetic division by (x - 1), high to low
        out = []
        acc = field.zero
        for c in reversed(coeffs):
            acc = acc + c
            out.append(acc)
        if out[-1] != 0:
            break
        coeffs = list(reversed(out[:-1]))
        mult += 1
    return mult, coeffs


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        text = str(c)
        if not mono:
            parts.append(text)
        elif text == "1":
            parts.append(mono)
        elif text == "-1":
            parts.append("-" + mono)
        elif _is_atomic(text):
            parts.append(f"{text}*{mono}")
        else:
            parts.append(f"({text})*{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _is_atomic(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return " " not in body and "(" not in body


def format_factored(coeffs: list, field) -> str:
    mult, rest = strip_unit_root(coeffs, field)
    pieces = ["(x - 1)"] * mult
    if len(rest) > 1:
        pieces.append(f"({format_poly(rest)})")
    return "*".join(pieces) if pieces else "1"


# ---------------------------------------------------------------------------
# exact helpers over number fields


def multiplication_matrix(x: NFElement) -> fmpq_mat:
    """Matrix of y -> x y on the power basis of x's field."""
    f = x.field
    d = f.degree
    cols = []
    for j in range(d):
        cols.append(_padded(x * f.s_power(j), d))
    return fmpq_mat(d, d, [cols[j][i] for i in range(d) for j in range(d)])


def _padded(x: NFElement, d: int) -> list:
    coeffs = list(x.poly.coeffs())
    return [fmpq(c) for c in coeffs] + [fmpq(0)] * (d - len(coeffs))


def element_minpoly(x: NFElement) -> fmpq_poly:
    """Minimal polynomial of x over Q."""
    cp = multiplication_matrix(x).charpoly()
    target = complex(x)
    return AlgebraicNumber(cp, target).poly


def norm_polynomial(coeffs: Sequence[NFElement], field: NumberField) -> fmpq_poly:
    """Charpoly over Q of the companion matrix of a monic polynomial over the field."""
    k = len(coeffs) - 1
    d = field.degree
    big = [[fmpq(0)] * (k * d) for _ in range(k * d)]
    blocks = {}
    for i in range(1, k):
        blocks[(i, i - 1)] = field.one
    for i in range(k):
        blocks[(i, k - 1)] = -coeffs[i]
    for (bi, bj), x in blocks.items():
        mm = multiplication_matrix(field.coerce(x))
        for a in range(d):
            for b in range(d):
                big[bi * d + a][bj * d + b] = mm[a, b]
    return fmpq_mat(k * d, k * d, [v for row in big for v in row]).charpoly()


def coefficient_field_degree(values: Sequence[NFElement], field: NumberField) -> int:
    """[Q(values) : Q], as the dimension of the Q-algebra the values generate."""
    d = field.degree
    basis: list[list] = []
    rows: list[list] = []

    def add(x: NFElement) -> bool:
        vec = _padded(x, d)
        trial = fmpq_mat(len(rows) + 1, d, [v for row in rows + [vec] for v in row])
        if trial.rank() > len(rows):
            rows.append(vec)
            basis.append(x)
            return True
        return False

    add(field.one)
    gens = [field.coerce(v) for v in values if not field.coerce(v).is_rational()]
    grew = True
    while grew:
        grew = False
        for b in list(basis):
            for g in gens:
                if add(b * g):
                    grew = True
    return len(basis)


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    """(n, kappa, dim); kappa = (l1 + l2)^2 / (l1 l2) for the two twist eigenvalues.

    kappa is unchanged by rescaling both eigenvalues and by inverting them,
    so it records the eigenvalue ratio up to inversion.
    """

    n: int
    kappa: object
    dim: int

    def to_json(self) -> dict:
        return {"n": self.n, "kappa": None if self.kappa is None else str(self.kappa), "dim": self.dim}


def twist_kappa(twist: np.ndarray, field):
    mp = la.minimal_polynomial(twist, field)
    if len(mp) == 2:
        return None
    if len(mp) != 3:
        raise DomainError(f"full twist has {len(mp) - 1} distinct eigenvalues, expected at most 2")
    c0, c1 = mp[0], mp[1]
    return c1 * c1 / c0


def twist_block(n: int, c: int) -> tuple[int, int]:
    """Strands of the distinguished full twist; for c = 0 the last strand joins the clasp."""
    return (1, n - 2) if c == 0 else (1, n - 1)


def fingerprint(n: int, c: int, p: ParameterSpec | None = None, h: RepresentationHandle | None = None) -> Fingerprint:
    h = h or build(n, c, p)
    if h.dim == 0:
        raise DomainError("fingerprint of a zero space")
    lo, hi = twist_block(n, c)
    if hi - lo < 1:
        return Fingerprint(n, None, h.dim)
    twist = full_twist_split(h, (lo, hi)).twist
    return Fingerprint(n, twist_kappa(twist, h.field), h.dim)


def fingerprint_from_generators(n: int, c: int, gens: Sequence[np.ndarray], field) -> Fingerprint:
    """Fingerprint computed directly from generator matrices (for transformed copies)."""
    size = gens[0].shape[0]
    lo, hi = twist_block(n, c)
    word = full_twist_word(lo, hi - lo + 1)
    twist = la.product([gens[k - 1] for k in word], field, size)
    return Fingerprint(n, twist_kappa(twist, field), size)


# ---------------------------------------------------------------------------
# connectivity certificates


@dataclass
class ConnectivityGraph:
    vertices: list[str]
    edges: list[tuple[str, str]]
    strongly_connected: bool

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges],
                "strongly_connected": self.strongly_connected}


def overlap_graph(g_parts: dict, h_parts: dict, field, complement: np.ndarray | None = None) -> ConnectivityGraph:
    """Digraph C(X, G, H): A -> B when the projection of A onto B is nonzero.

    ``g_parts`` and ``h_parts`` map names to matrices whose columns span the
    summands; each family (plus ``complement`` when the summands only fill a
    subspace) must be a direct sum decomposition.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(g_parts)
    graph.add_nodes_from(h_parts)
    for src, dst in ((g_parts, h_parts), (h_parts, g_parts)):
        names = list(dst)
        blocks = [dst[k] for k in names]
        if complement is not None:
            blocks.append(complement)
        full = np.concatenate(blocks, axis=1)
        if full.shape[0] != full.shape[1]:
            raise DomainError("summands do not form a direct sum decomposition")
        inv = la.inverse(full, field)
        offsets = np.cumsum([0] + [b.shape[1] for b in blocks])
        for a, vecs in src.items():
            coords = la.mul(inv, vecs, field)
            for i, b in enumerate(names):
                block = coords[offsets[i]:offsets[i + 1], :]
                if not la.is_zero(block):
                    graph.add_edge(a, b)
    return ConnectivityGraph(list(graph.nodes), list(graph.edges), nx.is_strongly_connected(graph))


def _split_for(h: RepresentationHandle, which: str):
    """Eigenspace bases of the twist on the first or last block of strands.

    For c = 0 the last strand is absorbed into the clasp, so the blocks are
    strands 1..n-2 and 2..n-1.
    """
    lo, hi = twist_block(h.n, h.c)
    block = (lo, hi) if which == "first" else (lo + 1, hi + 1)
    return full_twist_split(h, block)


def adjoint_summands(bases: Sequence[np.ndarray], field, tag: str) -> dict:
    """Summands of sl(X) for X = V_1 + ... + V_k: sl(V_i), Hom(V_j, V_i) and block scalars.

    Operators are flattened row-major into vectors of length N^2.
    """
    p = np.concatenate(list(bases), axis=1)
    q = la.inverse(p, field)
    n = p.shape[0]
    offs = np.cumsum([0] + [b.shape[1] for b in bases])
    k = len(bases)

    def op(i, a, j, b):
        # P_i E_ab Q_j
        return np.outer(p[:, offs[i] + a], q[offs[j] + b, :]).reshape(-1)

    def stack(vecs):
        out = np.empty((n * n, len(vecs)), dtype=object)
        for j, v in enumerate(vecs):
            out[:, j] = v
        return out

    parts = {}
    for i in range(k):
        d = offs[i + 1] - offs[i]
        if d < 2:
            continue  # sl of a line is the null term
        vecs = [op(i, a, i, b) for a in range(d) for b in range(d) if a != b]
        vecs += [op(i, a, i, a) - op(i, a + 1, i, a + 1) for a in range(d - 1)]
        parts[f"sl({tag}{i + 1})"] = stack(vecs)
    for i in range(k):
        for j in range(k):
            if i != j:
                di, dj = offs[i + 1] - offs[i], offs[j + 1] - offs[j]
                parts[f"{tag}{i + 1}x{tag}{j + 1}*"] = stack(
                    [op(i, a, j, b) for a in range(di) for b in range(dj)])
    if k > 1:
        dims = [offs[i + 1] - offs[i] for i in range(k)]
        idents = [sum(op(i, a, i, a) for a in range(dims[i])) for i in range(k)]
        vecs = [idents[i] * dims[i + 1] - idents[i + 1] * dims[i] for i in range(k - 1)]
        parts[f"I_{tag}"] = stack(vecs)
    return parts


def plain_summands(bases: Sequence[np.ndarray], tag: str) -> dict:
    return {f"{tag}{i + 1}": b for i, b in enumerate(bases)}


def connectivity_certificate(h: RepresentationHandle, space: str = "adjoint",
                             control: bool = False) -> ConnectivityGraph:
    """Strong connectivity of the overlap digraph between the two twist splittings.

    ``space`` is ``plain`` (X itself) or ``adjoint`` (sl(X)).  With
    ``control`` the second splitting is replaced by the first, which can
    never be strongly connected; it serves as a negative control.
    """
    if h.n < 3:
        raise DomainError("need at least three strands for two overlapping twists")
    f = h.field
    g = _split_for(h, "first").bases
    hh = g if control else _split_for(h, "last").bases
    if space == "plain":
        return overlap_graph(plain_summands(g, "V"), plain_summands(hh, "W"), f)
    if space != "adjoint":
        raise DomainError(f"unknown space {space!r}")
    n = h.dim
    ident = la.identity(n, f).reshape(-1, 1)
    return overlap_graph(adjoint_summands(g, f, "V"), adjoint_summands(hh, f, "W"), f, complement=ident)


# ---------------------------------------------------------------------------
# Burnside span test


@dataclass
class SpanVerdict:
    result: bool | None
    span_dim: int
    full_dim: int
    word_length: int
    field: str

    @property
    def label(self) -> str:
        return {True: "irreducible", False: "reducible", None: "inconclusive"}[self.result]

    def to_json(self) -> dict:
        return {"verdict": self.label, "span_dim": self.span_dim, "full_dim": self.full_dim,
                "word_length": self.word_length, "field": self.field}


class _Echelon:
    """Incrementally maintained row echelon basis of a subspace of K^m."""

    def __init__(self, field):
        self.field = field
        self.rows: list[tuple[int, list]] = []

    def reduce(self, v: list) -> list:
        v = list(v)
        for piv, row in self.rows:
            if v[piv]:
                c = v[piv]
                v = [x - c * y if y else x for x, y in zip(v, row)]
        return v

    def add(self, v: list) -> bool:
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = self.field.one / v[piv]
        v = [x * inv if x else x for x in v]
        for k, (p, row) in enumerate(self.rows):
            if row[piv]:
                c = row[piv]
                self.rows[k] = (p, [x - c * y if y else x for x, y in zip(row, v)])
        self.rows.append((piv, v))
        return True

    def __len__(self):
        return len(self.rows)


def burnside_span(gens: Sequence[np.ndarray], field, cap: int = 12) -> SpanVerdict:
    """Dimension of the algebra generated by ``gens``, built from words of length <= cap."""
    n = gens[0].shape[0]
    full = n * n
    ech = _Echelon(field)
    start = la.identity(n, field)
    ech.add(list(start.reshape(-1)))
    frontier = [start]
    length = 0
    while frontier and len(ech) < full:
        if length >= cap:
            return SpanVerdict(None, len(ech), full, length, repr(field))
        length += 1
        new = []
        for m in frontier:
            for g in gens:
                prod = la.mul(g, m, field)
                if ech.add(list(prod.reshape(-1))):
                    new.append(prod)
        frontier = new
    return SpanVerdict(len(ech) == full, len(ech), full, length, repr(field))


def _sl_basis(n: int, field) -> list[np.ndarray]:
    out = []
    for a in range(n):
        for b in range(n):
            if a != b:
                e = la.zeros(n, n, field)
                e[a, b] = field.one
                out.append(e)
    for a in range(n - 1):
        e = la.zeros(n, n, field)
        e[a, a] = field.one
        e[a + 1, a + 1] = -field.one
        out.append(e)
    return out


def _sl_coords(x: np.ndarray, field) -> list:
    n = x.shape[0]
    coords = [x[a, b] for a in range(n) for b in range(n) if a != b]
    # diagonal: x_aa = c_a - c_{a-1}, so c_a = sum_{i<=a} x_ii
    acc = field.zero
    for a in range(n - 1):
        acc = acc + x[a, a]
        coords.append(acc)
    return coords


def adjoint_matrices(gens: Sequence[np.ndarray], field) -> list[np.ndarray]:
    n = gens[0].shape[0]
    basis = _sl_basis(n, field)
    out = []
    for g in gens:
        gi = la.inverse(g, field)
        cols = [_sl_coords(la.mul(la.mul(g, e, field), gi, field), field) for e in basis]
        m = la.zeros(len(basis), len(basis), field)
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                m[i, j] = x
        out.append(m)
    return out


_SPECIAL_FIELD = NumberField(fmpq_poly([-2, 1]), 2.0, "s = 2")


def _specialize(mats: Sequence[np.ndarray], field):
    """Generic matrices evaluated at s = 2, or None if a denominator vanishes."""
    try:
        return [la.convert(m, field) for m in mats]
    except ZeroDivisionError:
        return None


def irreducibility(h: RepresentationHandle, adjoint: bool = True, cap: int = 12) -> SpanVerdict:
    """Burnside test on X or sl(X).

    For a generic parameter the span is first computed at the rational point
    s = 2; full rank there implies full rank generically.
    """
    gens = list(h.generators)
    f = h.field
    if h.dim < 2 and adjoint:
        return SpanVerdict(True, 0, 0, 0, repr(f))
    if h.spec.is_generic:
        special = _specialize(gens, _SPECIAL_FIELD)
        if special is not None:
            mats = adjoint_matrices(special, _SPECIAL_FIELD) if adjoint else special
            verdict = burnside_span(mats, _SPECIAL_FIELD, cap)
            if verdict.result:
                return verdict
    mats = adjoint_matrices(gens, f) if adjoint else gens
    return burnside_span(mats, f, cap)


def adjoint_irreducible(h: RepresentationHandle, cap: int = 12) -> SpanVerdict:
    if h.dim > 5:
        raise DomainError("adjoint test is limited to dim X <= 5")
    return irreducibility(h, adjoint=True, cap=cap)


# ---------------------------------------------------------------------------
# finite projective images


EXCEEDS_CAP = "ExceedsCap"


def _projective_key(m: np.ndarray, field) -> tuple:
    flat = list(m.reshape(-1))
    lead = next(x for x in flat if x)
    inv = field.one / lead
    return tuple(x * inv for x in flat)


@dataclass
class ProjectiveImage:
    order: int | str
    elements: list[tuple] = dc_field(repr=False, default_factory=list)
    size: int = 0

    def to_json(self) -> dict:
        return {"order": self.order}


def projective_image(h: RepresentationHandle, cap: int = 2000) -> ProjectiveImage:
    """Close the projectivized generators under multiplication."""
    f = h.field
    if not h.spec.is_exact or h.spec.is_generic:
        raise DomainError("projective image needs a specialized exact parameter")
    n = h.dim
    gens = [_projective_key(g, f) for g in h.generators]
    ident = _projective_key(la.identity(n, f), f)
    seen = {ident: 0}
    elements = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            xm = np.array(x, dtype=object).reshape(n, n)
            for g in gens:
                gm = np.array(g, dtype=object).reshape(n, n)
                key = _projective_key(la.mul(xm, gm, f), f)
                if key not in seen:
                    seen[key] = len(elements)
                    elements.append(key)
                    new.append(key)
                    if len(elements) > cap:
                        return ProjectiveImage(EXCEEDS_CAP, [], n)
        frontier = new
    return ProjectiveImage(len(elements), elements, n)


def projective_image_order(h: RepresentationHandle, cap: int = 2000) -> int | str:
    return projective_image(h, cap).order


@dataclass
class GroupTable:
    table: np.ndarray  # table[i, j] = index of element i * element j
    identity: int

    @classmethod
    def from_image(cls, image: ProjectiveImage, field) -> "GroupTable":
        n = image.size
        index = {e: i for i, e in enumerate(image.elements)}
        mats = [np.array(e, dtype=object).reshape(n, n) for e in image.elements]
        size = len(mats)
        table = np.zeros((size, size), dtype=int)
        for i in range(size):
            for j in range(size):
                table[i, j] = index[_projective_key(la.mul(mats[i], mats[j], field), field)]
        return cls(table, 0)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def inverse(self, i: int) -> int:
        return int(np.nonzero(self.table[i] == self.identity)[0][0])

    def conjugacy_classes(self) -> list[frozenset]:
        remaining = set(range(self.order))
        classes = []
        while remaining:
            x = min(remaining)
            cls = frozenset(int(self.table[self.table[g, x], self.inverse(g)]) for g in range(self.order))
            classes.append(cls)
            remaining -= cls
        return classes

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def _is_subgroup(self, subset: frozenset) -> bool:
        return all(int(self.table[a, b]) in subset for a in subset for b in subset)

    def normal_subgroups(self) -> list[frozenset]:
        """Normal subgroups, found as unions of conjugacy classes closed under products."""
        classes = [c for c in self.conjugacy_classes() if self.identity not in c]
        base = frozenset([self.identity])
        found = []
        for mask in range(1 << len(classes)):
            subset = set(base)
            for i, c in enumerate(classes):
                if mask >> i & 1:
                    subset |= c
            if self.order % len(subset):
                continue
            subset = frozenset(subset)
            if self._is_subgroup(subset):
                found.append(subset)
        return found

    def is_simple(self) -> bool:
        return self.order > 1 and all(len(s) in (1, self.order) for s in self.normal_subgroups())


# ---------------------------------------------------------------------------
# elliptic witnesses


@dataclass
class EllipticWitness:
    word: list[int]
    charpoly: str
    factor: str
    eigenvalue: AlgebraicNumber | None
    degree_bound: int | None
    order: int | float | None
    verdict: str

    @property
    def angle_degrees(self) -> float | None:
        return None if self.eigenvalue is None else abs(self.eigenvalue.argument_degrees())

    def to_json(self) -> dict:
        out = {"word": self.word, "charpoly": self.charpoly, "factor": self.factor,
               "verdict": self.verdict, "degree_bound": self.degree_bound}
        if self.eigenvalue is not None:
            out["eigenvalue_minpoly"] = [str(c) for c in self.eigenvalue.defining_polynomial()]
            out["angle_degrees"] = round(self.angle_degrees, 9)
        out["order"] = None if self.order is None else ("infinite" if self.order == INFINITE_ORDER else self.order)
        return out


def elliptic_witness(h: RepresentationHandle, word: Sequence[int], projective: bool = False) -> EllipticWitness:
    """Decide whether the image of ``word`` is elliptic of infinite order.

    The (x - 1) factors of the characteristic polynomial are removed; the
    rest must be a quadratic x^2 + a x + 1 whose roots lie on the unit
    circle.  With ``projective`` a 2x2 matrix is replaced by its eigenvalue
    ratio polynomial x^2 + (2 - tr^2/det) x + 1.
    """
    f = h.field
    if not isinstance(f, NumberField):
        raise DomainError("elliptic witnesses need a specialized exact parameter")
    m = h.word_matrix(word)
    cp = char_poly(m, f)
    if projective:
        if h.dim != 2:
            raise DomainError("projective mode needs a 2-dimensional space")
        tr = m[0, 0] + m[1, 1]
        quad = [f.one, f.one * 2 - tr * tr / la.det(m, f), f.one]
    else:
        _, quad = strip_unit_root(cp, f)
    factor_text = format_poly(quad)
    if len(quad) != 3 or quad[0] != 1:
        return EllipticWitness(list(word), format_poly(cp), factor_text, None, None, None, "NotElliptic")
    roots = np.roots([complex(quad[2]), complex(quad[1]), complex(quad[0])])
    if any(abs(abs(z) - 1) > 1e-9 for z in roots):
        return EllipticWitness(list(word), format_poly(cp), factor_text, None, None, None, "NotElliptic")
    lam_approx = max(roots, key=lambda z: cmath.phase(z))
    flint.ctx.prec = max(flint.ctx.prec, 128)
    lam = AlgebraicNumber(norm_polynomial(quad, f), lam_approx)
    if not lam.has_unit_modulus():
        return EllipticWitness(list(word), format_poly(cp), factor_text, lam, None, None, "NotElliptic")
    bound = 2 * coefficient_field_degree(quad, f)
    order = root_of_unity_order(lam, bound)
    verdict = "InfiniteOrder" if order == INFINITE_ORDER else "FiniteOrder"
    return EllipticWitness(list(word), format_poly(cp), factor_text, lam, bound, order, verdict)


# ---------------------------------------------------------------------------
# discreteness of B_3 on X(3*1, 1, t)


def triangle_order(r: int) -> int:
    """Order of the eigenvalue ratio -t of a braid generator when t has order r."""
    if r % 2:
        return 2 * r
    if r % 4 == 2:
        return r // 2
    return r


@dataclass
class DiscretenessVerdict:
    regime: str
    discrete: bool
    w: str
    w_approx: float
    vertex: str | None = None
    triangle: tuple | None = None
    theta_degrees: float | None = None
    proven: bool = True
    evidence: str = ""

    def to_json(self) -> dict:
        return {"regime": self.regime, "verdict": "discrete" if self.discrete else "indiscrete",
                "two_cos_theta": self.w, "two_cos_theta_approx": self.w_approx,
                "vertex": self.vertex, "triangle": list(self.triangle) if self.triangle else None,
                "theta_degrees": self.theta_degrees, "proven": self.proven, "evidence": self.evidence}


SCAN_LIMIT = 10 ** 6


def _t_field(p: ParameterSpec):
    """A number field containing t, with t as its generator image."""
    if p.kind == "rational":
        return None
    if p.kind == "algebraic":
        return NumberField(fmpq_poly([fmpq(c.numerator, c.denominator) for c in p.poly]), p.t_value, "Q(t)")
    return None


def _trace_value(p: ParameterSpec):
    """w = t - 1 + 1/t as an exact scalar and its minimal polynomial over Q."""
    if p.kind == "rational":
        w = p.value - 1 + 1 / p.value
        return w, fmpq_poly([-fmpq(w.numerator, w.denominator), 1])
    if p.kind == "root_of_unity":
        f = p.field
        w = f.gen ** 4 - 1 + f.gen ** -4
        return w, element_minpoly(w)
    f = _t_field(p)
    w = f.gen - 1 + f.gen_inv
    return w, element_minpoly(w)


def _is_two_cos(w, wpoly: fmpq_poly, n: int) -> bool:
    """Exact test that w equals 2 cos(2 pi / n): same minimal polynomial, same embedding."""
    if n < 1:
        return False
    target = cos_minpoly(n)
    if target != wpoly:
        return False
    return abs(complex(w) - 2 * math.cos(2 * math.pi / n)) < 1e-9


def _scan(value: float, fn) -> tuple[int, float]:
    ns = np.arange(1, SCAN_LIMIT + 1, dtype=np.float64)
    gaps = np.abs(fn(ns) - value)
    i = int(np.argmin(gaps))
    return i + 1, float(gaps[i])


def _t_order(p: ParameterSpec) -> int | None:
    if p.kind == "root_of_unity":
        return p.r
    if p.kind == "rational":
        return {1: 1, -1: 2}.get(p.value)
    if p.kind == "algebraic":
        tpoly = fmpq_poly([fmpq(c.numerator, c.denominator) for c in p.poly])
        lam = AlgebraicNumber(tpoly, p.t_value)
        if not lam.has_unit_modulus():
            return None
        order = root_of_unity_order(lam, lam.degree)
        return None if order == INFINITE_ORDER else int(order)
    return None


def classify_discreteness(p: ParameterSpec) -> DiscretenessVerdict:
    """Discreteness of the projective B_3 action on X(3*1, 1, t) for real t or |t| = 1."""
    if p.is_generic or not p.is_exact:
        raise DomainError("classification needs an exact specialized parameter")
    t = p.t_value
    w, wpoly = _trace_value(p)
    w_c = complex(w) if not isinstance(w, Fraction) else complex(float(w))
    w_text = str(w)
    if abs(t.imag) < 1e-12 * max(1.0, abs(t)) and (p.kind != "root_of_unity" or p.r <= 2):
        return _classify_real(p, t.real, w, wpoly, w_c.real, w_text)
    if abs(abs(t) - 1) < 1e-12:
        return _classify_unit(p, t, w_c.real, w_text)
    raise DomainError("classification covers real t and |t| = 1 only")


def _classify_real(p, t: float, w, wpoly, w_val: float, w_text: str) -> DiscretenessVerdict:
    if t == 0 or t == -1:
        raise DomainError("t = 0 and t = -1 are excluded")
    if t < 0:
        return DiscretenessVerdict("real", True, w_text, w_val, vertex="hyperideal or ideal",
                                   triangle=(2, 3, math.inf),
                                   evidence="t < 0: generators are a rotation by pi and by 2 pi/3")
    u = w_val + 1  # t + 1/t
    if p.kind == "rational":
        at_three = p.value + 1 / p.value == 3
    else:
        # t + 1/t = 3 iff w = 2, a rational number
        at_three = wpoly.degree() == 1 and -wpoly.coeffs()[0] / wpoly.coeffs()[1] == 2
    if at_three:
        return DiscretenessVerdict("real", True, w_text, w_val, vertex="ideal", triangle=(2, 3, math.inf),
                                   evidence="t + 1/t = 3: the vertex element is parabolic")
    if u > 3:
        return DiscretenessVerdict("real", True, w_text, w_val, vertex="hyperideal", triangle=(2, 3, math.inf),
                                   evidence="t + 1/t > 3: the vertex element is hyperbolic")
    theta = math.acos(max(-1.0, min(1.0, w_val / 2)))
    guess = max(1, round(2 * math.pi / theta)) if theta > 0 else 1
    for n in (guess - 1, guess, guess + 1):
        if _is_two_cos(w, wpoly, n):
            return DiscretenessVerdict("real", True, w_text, w_val, vertex=f"angle 2pi/{n}",
                                       triangle=(2, 3, n), theta_degrees=math.degrees(theta),
                                       evidence=f"t - 1 + 1/t = 2cos(2pi/{n}) exactly")
    n, gap = _scan(w_val, lambda ns: 2 * np.cos(2 * np.pi / ns))
    return DiscretenessVerdict("real", False, w_text, w_val, theta_degrees=math.degrees(theta), proven=False,
                               evidence=f"t - 1 + 1/t is not 2cos(2pi/n) (exact check near n = {guess}); "
                                        f"closest n <= {SCAN_LIMIT} is {n} at distance {gap:.3e}; "
                                        "indiscreteness rests on the orbifold classification")


def _classify_unit(p, t: complex, w_val: float, w_text: str) -> DiscretenessVerdict:
    theta = abs(cmath.phase(t))
    if theta < 1e-12 or abs(theta - math.pi) < 1e-12:
        raise DomainError("t = 1 and t = -1 lie on the real line")
    order = _t_order(p)
    if order is not None and order == 3:
        raise DomainError("theta = 2 pi/3 is the excluded boundary between the two regimes")
    compact = theta < 2 * math.pi / 3
    regime = "unit circle, compact" if compact else "unit circle, noncompact"
    tdeg = math.degrees(theta)
    if order is None:
        n, gap = _scan(theta, lambda ns: np.pi - 2 * np.pi / ns)
        return DiscretenessVerdict(regime, False, w_text, w_val, theta_degrees=tdeg, proven=compact,
                                   evidence=f"t is not a root of unity; closest pi - 2pi/n for n <= {SCAN_LIMIT} "
                                            f"is n = {n} at distance {gap:.3e}")
    # -t has order s; a generator is a rotation by pi - |theta|
    s = triangle_order(order)
    if compact:
        # inside SO(3): finite (2,3,s) groups need s <= 5
        discrete = s <= 5
        return DiscretenessVerdict(regime, discrete, w_text, w_val,
                                   vertex=f"rotation of order {s}", triangle=(2, 3, s), theta_degrees=tdeg,
                                   evidence=f"-t has order {s}; the image is "
                                            + ("a finite rotation group" if discrete else "an infinite subgroup of SO(3)"))
    # |theta| / 2pi = j / order exactly; test 1/2 - j/order = 1/n
    j = round(theta * order / (2 * math.pi))
    gap = Fraction(1, 2) - Fraction(j, order)
    exact = gap > 0 and gap.numerator == 1
    n = gap.denominator if exact else None
    return DiscretenessVerdict(regime, exact, w_text, w_val,
                               vertex=f"angle 2pi/{n}" if exact else None,
                               triangle=(2, 3, n) if exact else None, theta_degrees=tdeg,
                               evidence=(f"|theta| = pi - 2pi/{n}" if exact else
                                         f"-t has order {s} but pi - |theta| = 2pi*{gap} is not 2pi/n"))
