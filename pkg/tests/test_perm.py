import pytest

from bifixgroup.errors import PreconditionError
from bifixgroup.perm import (PermutationGroupOnSet, alternating_group, cycles, cyclic_group, dihedral_group,
                             group_iso, group_name, inverse, mul, perm_order, symmetric_group)


def test_basics():
    g = (1, 2, 0)
    assert mul(g, inverse(g)) == (0, 1, 2)
    assert perm_order(g) == 3
    assert cycles((1, 0, 2)) == [(0, 1)]


def test_closure_orders():
    assert symmetric_group(4).order == 24
    assert alternating_group(5).order == 60
    assert cyclic_group(6).order == 6
    assert dihedral_group(5).order == 10


def test_not_a_permutation():
    with pytest.raises(PreconditionError):
        PermutationGroupOnSet((0, 1), [("x", (0, 0))])


def test_iso_and_names():
    a5 = PermutationGroupOnSet(range(5), [("a", (1, 2, 0, 3, 4)), ("b", (0, 1, 3, 4, 2))])
    assert a5.order == 60
    assert group_iso(a5, alternating_group(5)) is not None
    assert group_iso(cyclic_group(2), cyclic_group(3)) is None
    assert group_iso(symmetric_group(3), cyclic_group(6)) is None
    assert group_name(a5) == "A5"
    assert group_name(symmetric_group(3)) == "S3"
    assert group_name(cyclic_group(2)) == "C2"


def test_iso_is_homomorphism():
    s4 = PermutationGroupOnSet(range(4), [("a", (1, 2, 3, 0)), ("b", (1, 0, 2, 3))])
    phi = group_iso(s4, symmetric_group(4))
    assert phi is not None and set(phi) <= {"a", "b"}


def test_transitivity():
    assert not PermutationGroupOnSet((0, 1), []).is_transitive()
    assert cyclic_group(5).is_transitive()
