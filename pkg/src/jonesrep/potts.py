"""Weighted Potts partition functions of planar graphs through the Kauffman bracket.

Each vertex is doubled into a small circle and each edge is replaced by a
combination of two smoothings: one that joins the two vertex circles
through the edge and one that cuts across it.  With loop value -[2] the
bracket of the result, times (-[2])^v, is the partition function at
n = [2]^2 = t + 2 + 1/t colors.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import DomainError, ParameterSpec, delta, parse_scalar, quantum_integer
from .skein import trace_strands


@dataclass(frozen=True)
class PlanarGraph:
    """A graph with a rotation system.

    ``edges[i] = (u, v, weight)``; ``rotations[u]`` lists the ids of the
    edges at u in counterclockwise order.
    """

    vertices: int
    edges: tuple[tuple[int, int, object], ...]
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, (u, v, _) in enumerate(self.edges):
            if u == v:
                raise DomainError(f"edge {i} is a loop; loops are not supported")
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise DomainError(f"edge {i} has an endpoint out of range")
        if len(self.rotations) != self.vertices:
            raise DomainError("need one rotation per vertex")
        for u, rot in enumerate(self.rotations):
            expected = sorted(i for i, (a, b, _) in enumerate(self.edges) if u in (a, b))
            if sorted(rot) != expected:
                raise DomainError(f"rotation at vertex {u} does not list its edges exactly once")

    @classmethod
    def from_json(cls, data: dict | str, spec: ParameterSpec | None = None) -> "PlanarGraph":
        if isinstance(data, str):
            data = json.loads(data)
        spec = spec or ParameterSpec.generic()
        verts = data["vertices"]
        names = list(range(verts)) if isinstance(verts, int) else list(verts)
        index = {str(x): i for i, x in enumerate(names)}
        edges = []
        for item in data["edges"]:
            u, v = item[0], item[1]
            w = item[2] if len(item) > 2 else "1"
            edges.append((index[str(u)], index[str(v)], parse_scalar(str(w), spec.field)))
        rot_data = data.get("rotations")
        if rot_data is None:
            rots = [tuple(i for i, (a, b, _) in enumerate(edges) if u in (a, b)) for u in range(len(names))]
            g = cls(len(names), tuple(edges), tuple(rots))
            return g.with_planar_rotation()
        rots = [tuple(rot_data.get(str(x), rot_data.get(x, ()))) if isinstance(rot_data, dict) else tuple(rot_data[i])
                for i, x in enumerate(names)]
        return cls(len(names), tuple(edges), tuple(rots))

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": [[u, v, str(w)] for u, v, w in self.edges],
            "rotations": {str(u): list(r) for u, r in enumerate(self.rotations)},
        }

    def components(self) -> list[set[int]]:
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        groups: dict = {}
        for x in range(self.vertices):
            groups.setdefault(find(x), set()).add(x)
        return list(groups.values())

    def face_count(self) -> int:
        """Faces of the embedding, counted per component (an isolated vertex has one)."""
        seen = set()
        faces = 0
        for i, (u, v, _) in enumerate(self.edges):
            for dart in ((i, u, v), (i, v, u)):
                if dart in seen:
                    continue
                faces += 1
                d = dart
                while d not in seen:
                    seen.add(d)
                    e, a, b = d
                    rot = self.rotations[b]
                    nxt = rot[(rot.index(e) + 1) % len(rot)]
                    x, y, _ = self.edges[nxt]
                    d = (nxt, b, y if x == b else x)
        isolated = sum(1 for r in self.rotations if not r)
        return faces + isolated

    def is_planar_embedding(self) -> bool:
        """Euler check: v - e + f = 2 on every connected component."""
        comps = len(self.components())
        return self.vertices - len(self.edges) + self.face_count() == 2 * comps

    def with_planar_rotation(self) -> "PlanarGraph":
        """Search the cyclic orders at each vertex for a planar rotation system."""
        choices = []
        for rot in self.rotations:
            if len(rot) <= 2:
                choices.append([tuple(rot)])
            else:
                first, rest = rot[0], rot[1:]
                choices.append([(first,) + p for p in itertools.permutations(rest)])
        for combo in itertools.product(*choices):
            g = PlanarGraph(self.vertices, self.edges, tuple(combo))
            if g.is_planar_embedding():
                return g
        raise DomainError("graph has no planar rotation system")


# ---------------------------------------------------------------------------
# skein side


def edge_skein(y, spec: ParameterSpec | None = None) -> dict:
    """Coefficients of the two smoothings replacing an edge of weight y."""
    spec = spec or ParameterSpec.generic()
    f = spec.field
    y = f.coerce(y)
    return {"through": (f.one - y) / quantum_integer(2, spec), "cut": f.one}


def _corner_arcs(g: PlanarGraph) -> list[tuple]:
    arcs = []
    for u, rot in enumerate(g.rotations):
        k = len(rot)
        for i in range(k):
            e, nxt = rot[i], rot[(i + 1) % k]
            arcs.append((_side(g, e, u, "left"), _side(g, nxt, u, "right")))
    return arcs


def _side(g: PlanarGraph, e: int, u: int, which: str):
    a, _, _ = g.edges[e]
    end = 0 if u == a else 1
    # seen from its first endpoint the left side is +; from the second it is -
    plus = (which == "left") == (end == 0)
    return (e, end, "+" if plus else "-")


def _edge_arcs(e: int, state: str) -> list[tuple]:
    if state == "through":
        return [((e, 0, "+"), (e, 1, "+")), ((e, 0, "-"), (e, 1, "-"))]
    return [((e, 0, "+"), (e, 0, "-")), ((e, 1, "+"), (e, 1, "-"))]


def state_loops(g: PlanarGraph, states: Sequence[str]) -> int:
    arcs = _corner_arcs(g)
    for e, st in enumerate(states):
        arcs += _edge_arcs(e, st)
    isolated = sum(1 for r in g.rotations if not r)
    return trace_strands(arcs)[1] + isolated


def graph_bracket(g: PlanarGraph, spec: ParameterSpec | None = None):
    """Bracket of the doubled diagram, expanded over all edge smoothings."""
    spec = spec or ParameterSpec.generic()
    if not g.is_planar_embedding():
        raise DomainError("rotation system is not planar")
    f = spec.field
    d = delta(spec)
    coefs = [edge_skein(w, spec) for _, _, w in g.edges]
    total = f.zero
    powers: dict = {}
    for states in itertools.product(("through", "cut"), repeat=len(g.edges)):
        coef = f.one
        for c, st in zip(coefs, states):
            coef = coef * c[st]
        if coef == 0:
            continue
        loops = state_loops(g, states)
        if loops not in powers:
            powers[loops] = d ** loops
        total = total + coef * powers[loops]
    return total


# ---------------------------------------------------------------------------
# partition functions


@dataclass
class PottsResult:
    n: object
    z_skein: object
    z_oracle: object | None
    prefactor: object
    oracle_skipped: bool

    @property
    def agree(self) -> bool | None:
        return None if self.z_oracle is None else self.z_skein == self.z_oracle

    def to_json(self) -> dict:
        return {"n": str(self.n), "z_skein": str(self.z_skein),
                "z_oracle": None if self.z_oracle is None else str(self.z_oracle),
                "prefactor": str(self.prefactor), "oracle_skipped": self.oracle_skipped,
                "agree": self.agree}


def color_count(spec: ParameterSpec):
    return quantum_integer(2, spec) ** 2


def _integer_value(x) -> int | None:
    if isinstance(x, (int, Fraction)):
        q = Fraction(x)
    elif hasattr(x, "is_rational") and x.is_rational():
        q = x.rational_value()
    elif hasattr(x, "is_constant") and x.is_constant():
        q = x.constant_value()
    else:
        return None
    return int(q) if q.denominator == 1 and q > 0 else None


def coloring_sum(g: PlanarGraph, n: int, spec: ParameterSpec | None = None):
    """Sum over all n-colorings: y_e when the ends of e agree, 1 otherwise."""
    spec = spec or ParameterSpec.generic()
    f = spec.field
    weights = [f.coerce(w) for _, _, w in g.edges]
    total = f.zero
    for colors in itertools.product(range(n), repeat=g.vertices):
        term = f.one
        for (u, v, _), w in zip(g.edges, weights):
            if colors[u] == colors[v]:
                term = term * w
        total = total + term
    return total


def potts_partition(g: PlanarGraph, spec: ParameterSpec | None = None, oracle: bool = True) -> PottsResult:
    spec = spec or ParameterSpec.generic()
    n = color_count(spec)
    pre = (-quantum_integer(2, spec)) ** g.vertices
    z = pre * graph_bracket(g, spec)
    n_int = _integer_value(n)
    z_or = coloring_sum(g, n_int, spec) if oracle and n_int is not None else None
    return PottsResult(n, z, z_or, pre, n_int is None)


# ---------------------------------------------------------------------------
# small graphs


def connected_graphs(max_vertices: int = 4, max_edges: int = 5) -> Iterable[tuple[int, list[tuple[int, int]]]]:
    """All labeled connected simple graphs with the given bounds."""
    for v in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(v), 2))
        for k in range(0, min(max_edges, len(pairs)) + 1):
            for edges in itertools.combinations(pairs, k):
                if _connected(v, edges):
                    yield v, list(edges)


def _connected(v: int, edges: Sequence[tuple[int, int]]) -> bool:
    reach = {0}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            if (a in reach) != (b in reach):
                reach |= {a, b}
                changed = True
    return len(reach) == v


def planar_graph(v: int, edges: Sequence[tuple[int, int]], weights: Sequence) -> PlanarGraph:
    full = tuple((a, b, w) for (a, b), w in zip(edges, weights))
    rots = tuple(tuple(i for i, (a, b) in enumerate(edges) if u in (a, b)) for u in range(v))
    return PlanarGraph(v, full, rots).with_planar_rotation()


def oracle_parameters() -> list[ParameterSpec]:
    """t = 1 (n = 4) and t + 1/t = 7 (n = 9, a point with n > 4)."""
    return [ParameterSpec.rational(1), ParameterSpec.from_trace([-7, 1], 7)]
