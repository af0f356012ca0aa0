import itertools
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jonesrep import linalg as la
from jonesrep.arith import InadmissibleColor, Laurent, ParameterSpec
from jonesrep.rep import (
    build,
    cob_identity_check,
    dimension,
    dimension_excess,
    flip_matrix,
    full_twist_split,
    gram_matrix,
    invariance_check,
    markov_trace_bracket,
)
from jonesrep.skein import closure_bracket


def _walks(n, c, top=None):
    # lattice paths 0 -> c with n unit steps, staying in [0, top]
    count = 0
    for steps in itertools.product((1, -1), repeat=n):
        h, ok = 0, True
        for x in steps:
            h += x
            if h < 0 or (top is not None and h > top):
                ok = False
                break
        count += ok and h == c
    return count


@pytest.mark.parametrize("n", range(0, 10))
def test_generic_dimension_counts_walks(n):
    for c in range(n % 2, n + 1, 2):
        assert dimension(n, c) == _walks(n, c)


@pytest.mark.parametrize("r", range(3, 8))
def test_truncated_dimension_counts_walks(r):
    for n in range(0, 10):
        for c in range(n % 2, min(n, r - 2) + 1, 2):
            assert dimension(n, c, r) == _walks(n, c, r - 2)


@pytest.mark.parametrize("r", [6, 8, 10, 12])
def test_excess_is_half_level_dimension(r):
    for n in range(0, 11):
        for c in range(n % 2, min(n, r // 2 - 2) + 1, 2):
            assert dimension_excess(n, c, r) == dimension(n, c, r // 2)


def test_dimension_examples():
    assert dimension(4, 0) == 2
    assert dimension(4, 2) == 3
    assert dimension(5, 1) == 5
    assert dimension(0, 0) == 1
    assert dimension(4, 0, 3) == 1
    with pytest.raises(InadmissibleColor):
        dimension(4, 4, 5)


@pytest.mark.parametrize("n,c,r", [(4, 0, 3), (4, 0, 4), (5, 1, 4), (6, 0, 5), (5, 3, 6), (6, 2, 5)])
def test_gram_rank_at_roots(n, c, r):
    p = ParameterSpec.root_of_unity(r)
    assert la.rank(gram_matrix(n, c, p), p.field) == dimension(n, c, r)
    assert build(n, c, p).dim == dimension(n, c, r)


def _braid_relations(h):
    f, d = h.field, h.dim
    gens = [h.generator(i) for i in range(1, h.n)]
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            ab = la.mul(a, b, f)
            if abs(i - j) == 1:
                if not la.equal(la.mul(ab, a, f), la.mul(la.mul(b, a, f), b, f)):
                    return False
            elif i != j and not la.equal(ab, la.mul(b, a, f)):
                return False
    return True


spaces = st.sampled_from([(3, 1), (4, 0), (4, 2), (5, 1), (5, 3), (6, 0)])
norms = st.sampled_from(["bracket", "rescaled"])


@given(spaces, norms)
def test_braid_relations_and_invariance(nc, norm):
    h = build(*nc, normalization=norm)
    assert _braid_relations(h)
    assert invariance_check(h)
    for i in range(1, h.n):
        assert la.equal(la.mul(h.generator(i), h.generator(-i), h.field), la.identity(h.dim, h.field))


def test_corrupted_generator_fails_invariance():
    h = build(4, 2)
    bad = [g.copy() for g in h.generators]
    bad[0][0, 0] = bad[0][0, 0] + h.field.one
    assert not invariance_check(h, bad)


@pytest.mark.parametrize("r", [5, 7])
def test_relations_at_roots(r):
    h = build(5, 1, ParameterSpec.root_of_unity(r))
    assert _braid_relations(h)
    assert invariance_check(h)


def test_tau1_eigenvalues():
    # eigenvalues t^{-3/4} and -t^{1/4}
    h = build(3, 1)
    m = h.generator(1)
    s = Laurent.monomial
    for lam in (s(-3), -s(1)):
        assert la.rank(m - lam * la.identity(2, h.field), h.field) == 1


@given(spaces)
def test_flip_involution(nc):
    n, c = nc
    h = build(n, c)
    f = flip_matrix(n, c)
    assert la.equal(la.mul(f, f, h.field), la.identity(h.dim, h.field))
    for i in range(1, n):
        assert la.equal(la.mul(la.mul(f, h.generator(i), h.field), f, h.field), h.generator(n - i))


@pytest.mark.parametrize("n,c", [(4, 0), (4, 2), (5, 1), (5, 3), (6, 2)])
def test_twist_split_fills_space(n, c):
    h = build(n, c)
    for side in ("first", "last"):
        split = full_twist_split(h, side)
        assert sum(split.dims) == h.dim
        p = split.change_of_basis()
        assert la.rank(p, h.field) == h.dim


@pytest.mark.parametrize("c", [1, 2, 3])
def test_cob_identity(c):
    assert cob_identity_check(c)


@pytest.mark.parametrize("word,strands", [([1, -2, 1], 3), ([1, 2, 3, 1], 4), ([2, 2, -1, 3, -2], 4)])
def test_markov_trace_matches_closure(word, strands):
    p = ParameterSpec.generic()
    assert markov_trace_bracket(word, strands, p) == closure_bracket(word, strands, p)


def test_printed_bases():
    h = build(4, 0)
    assert "printed" in h.base_change and "printed_negative" in h.base_change
    m = h.in_basis("printed", h.generator(1))
    assert la.to_strings(m)[0] == ["-s", "0"]
