import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockbound.actions import Action, ActionError
from fockbound.groups import Group


def test_z_on_z_points_and_lengths(zz):
    A = zz.action
    G = A.group
    x = A.point(0, G.parse("a3"))
    assert x.length == 3
    assert A.act(G.parse("a-5"), x) == A.point(0, G.parse("a-2"))
    assert len(A.ball(4)) == 9
    assert [A.format_point(p) for p in A.sphere(1)] == ["0/a", "0/a-1"]


def test_orbit_stabilizer_on_triangle(dihedral):
    A = dihedral.action
    # three vertices, each stabilized by a subgroup of order 2
    assert A.stabilizer_order(0) == 2
    assert len(A.ball(5)) == 3
    for x in A.ball(2):
        fixing = [g for g in A.group.ball(5) if A.act(g, x) == x]
        assert len(fixing) == 2


def test_flip_involution_swaps_orbits(flip):
    A = flip.action
    G = A.group
    x = A.point(0, G.parse("a2"))
    Ix = A.involute(x)
    assert Ix.orbit == 1 and Ix.length == 2
    assert A.involute(Ix) == x
    assert A.weights[0] * A.weights[1] == 1


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 1))
def test_action_laws_on_flip(g, h, k):
    from fockbound.config import load_config

    A = load_config("flip_z").action
    G = A.group
    ge, he = G.from_vector([g]), G.from_vector([h])
    x = A.point(k, G.from_vector([3]))
    assert A.act(G.mul(ge, he), x) == A.act(ge, A.act(he, x))
    assert A.act(ge, A.involute(x)) == A.involute(A.act(ge, x))
    assert A.act(ge, x).length <= G.length(ge) + x.length


def test_point_text_round_trip(free2):
    A = free2.action
    for x in A.ball(3):
        assert A.parse_point(A.format_point(x)) == x
    with pytest.raises(ActionError):
        A.parse_point("a")
    with pytest.raises(ActionError):
        A.point(1)


def test_infinite_stabilizer_rejected():
    Z = Group("free-abelian", 1)
    with pytest.raises(ActionError):
        Action(Z, stabilizers=[[Z.parse("a2")]])


def test_involution_must_square_to_identity():
    Z = Group("free-abelian", 1)
    with pytest.raises(ActionError):
        Action(Z, orbits=2, pairing=[1, 1])
    with pytest.raises(ActionError):
        Action(Z, orbits=1, involution_shifts=[Z.parse("a")])
