from hypothesis import given

from cayleyfn.digraph import decompose, omega, stabilizer, stable_image, sup_b, twigs
from cayleyfn.transformation import Transformation, constant, identity, image_chain

from conftest import transformations, vertices


def test_worked_example_alpha_structure(worked):
    alpha, _ = worked
    dec = decompose(alpha)
    assert len(dec.components) == 1
    comp = dec.components[0]
    assert comp.cycle_length == 4
    assert set(comp.cycle) == vertices(alpha, "b", "c", "d", "e")
    assert [b.length for b in comp.branches] == [1] * 9
    assert stabilizer(alpha) == 1
    assert sup_b(alpha) == 1
    assert omega(alpha) == frozenset(range(13)) - vertices(alpha, "b", "c", "d", "e")


def test_identity_and_constant():
    assert stable_image(identity(5)) == frozenset(range(5))
    assert omega(identity(5)) == frozenset(range(5))
    assert stabilizer(identity(5)) == 0
    assert stable_image(constant(4)) == frozenset({0})
    assert omega(constant(4)) == frozenset({1, 2, 3})


def test_chain():
    t = Transformation((0, 0, 1))
    dec = decompose(t)
    assert dec.cycle_lengths == [1]
    assert [b.path for b in dec.branches] == [(2, 1, 0)]
    assert stabilizer(t) == 2
    assert omega(t) == frozenset({2})
    assert dec.depth == (0, 1, 2)


def test_canonical_ordering():
    # two components; cycles rotated to start at their smallest vertex
    t = Transformation((4, 3, 1, 2, 0, 4))
    dec = decompose(t)
    assert [c.cycle for c in dec.components] == [(0, 4), (1, 3, 2)]
    assert dec.vertex_to_component == (0, 1, 1, 1, 0, 0)
    assert [b.path for b in dec.components[0].branches] == [(5, 4)]


def test_branches_share_tails():
    # 3 -> 1, 2 -> 1, 1 -> 0 -> 0
    t = Transformation((0, 0, 1, 1))
    dec = decompose(t)
    assert [b.path for b in dec.branches] == [(2, 1, 0), (3, 1, 0)]
    assert [b.path for b in twigs(t)] == [(2, 1, 0), (3, 1, 0)]


@given(transformations(max_size=10))
def test_stabilizer_matches_image_chain(f):
    chain = image_chain(f)
    assert stabilizer(f) == len(chain) - 1
    assert stable_image(f) == chain[-1]


@given(transformations(max_size=10))
def test_partition_and_depth(f):
    dec = decompose(f)
    seen = set()
    for i, comp in enumerate(dec.components):
        vs = comp.vertices
        assert not (vs & seen)
        seen |= vs
        assert all(dec.vertex_to_component[v] == i for v in vs)
        assert len(set(comp.cycle)) == comp.cycle_length
        for j, v in enumerate(comp.cycle):
            assert f(v) == comp.cycle[(j + 1) % comp.cycle_length]
    assert seen == set(range(f.size))
    for v in range(f.size):
        if dec.depth[v] > 0:
            assert dec.depth[f(v)] == dec.depth[v] - 1


@given(transformations(max_size=10))
def test_twigs_equal_branches(f):
    dec = decompose(f)
    assert sorted(b.path for b in twigs(f)) == sorted(b.path for b in dec.branches)
    assert sup_b(f) == stabilizer(f)


@given(transformations(max_size=10))
def test_omega_is_deepest_layer(f):
    s = stabilizer(f)
    om = omega(f)
    assert om
    if s > 0:
        d = decompose(f).depth
        assert om == {v for v in range(f.size) if d[v] == s}
        assert all(b.start in om or b.length < s for b in decompose(f).branches)
