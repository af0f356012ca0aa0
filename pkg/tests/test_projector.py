import pytest

from jonesrep.arith import InadmissibleColor, ParameterSpec, quantum_integer
from jonesrep.projector import (
    annihilates_caps,
    check_admissible,
    identity_diagram,
    is_idempotent,
    jones_wenzl,
    tl_generator,
)


@pytest.mark.parametrize("c", range(0, 5))
def test_generic_projector_properties(c):
    p = ParameterSpec.generic()
    assert is_idempotent(c, p)
    assert annihilates_caps(c, p)
    assert jones_wenzl(c, p).coefficient(identity_diagram(c)) == p.field.one


def test_jw2_expansion():
    p = ParameterSpec.generic()
    jw = jones_wenzl(2, p)
    # f2 = 1 + e1/[2]
    assert jw.coefficient(tl_generator(2, 1)) == p.field.one / quantum_integer(2, p)


@pytest.mark.parametrize("r", [4, 5, 6])
def test_admissibility_at_roots(r):
    p = ParameterSpec.root_of_unity(r)
    # the recursion divides by [1], ..., [c], so it runs up to c = r - 1
    for c in range(0, r):
        check_admissible(c, p)
        assert is_idempotent(c, p)
    with pytest.raises(InadmissibleColor):
        jones_wenzl(r, p)
