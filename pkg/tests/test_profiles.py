import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fkdiv.errors import EmptySetError
from fkdiv.graphs import Graph, Instance
from fkdiv.profiles import (
    BITSET_LIMIT,
    ProfileSet,
    ProfileSpace,
    check_coloring,
    merge_components,
    minkowski_merge,
    profile_of,
    satisfaction,
    shift,
    with_vertex,
)


def filled(k, qbound, profiles, track_witnesses=False):
    ps = ProfileSet(k, qbound, track_witnesses)
    for p in profiles:
        ps.add(tuple(p))
    return ps


def test_satisfaction_examples():
    assert satisfaction((0, 5)) == 0
    assert satisfaction((7,)) == 7


def test_shift_examples():
    assert shift((0, 0), 2, 5) == (0, 5)
    assert shift((3, 1), 1, 4) == (7, 1)


def test_with_vertex_keeps_sorted():
    assert with_vertex(((1, 3), ()), 0, 2) == ((1, 2, 3), ())


def test_profile_of_and_check():
    inst = Instance(Graph(3, [(0, 1)]), ((1, 2, 4), (8, 1, 1)))
    col = ((0, 2), (1,))
    check_coloring(inst.graph, col)
    assert profile_of(inst, col) == (5, 1)
    with pytest.raises(ValueError):
        check_coloring(inst.graph, ((0, 1), ()))
    with pytest.raises(ValueError):
        check_coloring(inst.graph, ((0,), (0,)))


def test_minkowski_merge_example():
    a = filled(2, 9, [(1, 0), (0, 1)])
    b = filled(2, 9, [(2, 0), (0, 2)])
    merged = minkowski_merge(a, b)
    assert set(merged.profiles()) == {(3, 0), (1, 2), (2, 1), (0, 3)}


def test_merge_components_single_and_pair():
    a = filled(1, 5, [(2,), (3,)])
    assert merge_components([a]) == a
    b = filled(1, 5, [(1,)])
    assert set(merge_components([a, b]).profiles()) == {(3,), (4,)}
    with pytest.raises(EmptySetError):
        merge_components([])


def test_best_examples():
    assert filled(2, 5, [(0, 0)]).best()[0] == 0
    assert filled(1, 9, [(5,), (9,)]).best()[0] == 9
    with pytest.raises(EmptySetError):
        ProfileSet(1, 3).best()


def test_best_prefers_lexicographic_profile_on_ties():
    ps = filled(2, 9, [(3, 5), (5, 3), (3, 4)])
    value, profile, _ = ps.best()
    assert value == 3
    assert profile == (5, 3)


def test_prune_keeps_zero_profile_alone():
    assert filled(2, 4, [(0, 0)]).prune_dominated().profiles() == [(0, 0)]


def test_prune_drops_dominated_only():
    ps = filled(2, 9, [(2, 2), (1, 1), (3, 0), (2, 3)])
    kept = set(ps.prune_dominated().profiles())
    assert kept == {(3, 0), (2, 3)}


def test_prune_preserves_best_value():
    rows = [(1, 7), (4, 4), (7, 1), (0, 0), (4, 3)]
    ps = filled(2, 9, rows)
    assert ps.prune_dominated().best()[0] == ps.best()[0] == 4


def test_add_rejects_out_of_range():
    ps = ProfileSet(2, 4)
    with pytest.raises(ValueError):
        ps.add((5, 0))
    with pytest.raises(ValueError):
        ps.add((-1, 0))


def test_extended_and_combine_small():
    ps = filled(2, 9, [(0, 0), (1, 2)])
    up = ps.extended(0, 3)
    assert set(up.profiles()) == {(3, 0), (4, 2)}
    both = up.combine(filled(2, 9, [(0, 1)]))
    assert set(both.profiles()) == {(3, 1), (4, 3)}
    minus = up.combine(filled(2, 9, [(3, 0)]), minus=(3, 0))
    assert set(minus.profiles()) == {(3, 0), (4, 2)}


def test_witness_tracking_keeps_lexicographically_smallest():
    ps = ProfileSet(1, 9, track_witnesses=True)
    ps.add((4,), ((2, 3),))
    ps.add((4,), ((1, 5),))
    ps.add((4,), ((6,),))
    assert ps.witness_for((4,)) == ((1, 5),)


def test_remapped_and_map_witnesses():
    ps = ProfileSet(1, 9, track_witnesses=True)
    ps.add((4,), ((0, 1),))
    out = ps.remapped({0: 5, 1: 2})
    assert out.witness_for((4,)) == ((2, 5),)
    out2 = out.map_witnesses(lambda w: tuple(tuple(v + 1 for v in c) for c in w))
    assert out2.witness_for((4,)) == ((3, 6),)


def test_bitset_mode_engages_only_when_small():
    small = ProfileSet(2, 3)
    big = ProfileSet(3, 200)
    tracking = ProfileSet(2, 3, track_witnesses=True)
    assert small._bits is not None
    assert big._bits is None
    assert tracking._bits is None
    assert (3 + 1) ** 2 <= BITSET_LIMIT < (200 + 1) ** 3


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_bitset_and_map_modes_agree(data):
    k = data.draw(st.integers(min_value=1, max_value=2))
    qbound = data.draw(st.integers(min_value=1, max_value=6))
    rows = data.draw(
        st.lists(
            st.tuples(*[st.integers(min_value=0, max_value=qbound)] * k),
            max_size=8,
        )
    )
    amount = data.draw(st.integers(min_value=0, max_value=qbound))
    cls0 = data.draw(st.integers(min_value=0, max_value=k - 1))
    bit = ProfileSet(k, 2 * qbound)
    mapped = ProfileSet(k, 2 * qbound, track_witnesses=True)
    assert bit._bits is not None and mapped._bits is None
    for i, row in enumerate(rows):
        bit.add(row)
        mapped.add(row, tuple((i,) if j == 0 else () for j in range(k)))
    assert bit.profiles() == mapped.profiles()
    assert (
        bit.extended(cls0, amount).profiles()
        == mapped.extended(cls0, amount, vertex=99).profiles()
    )
    assert bit.combine(bit).profiles() == mapped.combine(mapped).profiles()
    assert (
        bit.prune_dominated().profiles() == mapped.prune_dominated().profiles()
    )
    if rows:
        assert bit.best()[:2] == mapped.best()[:2]


def test_space_zero_and_finalize():
    space = ProfileSpace(2, 9, prune=True)
    z = space.zero()
    assert z.profiles() == [(0, 0)]
    ps = space.empty()
    ps.add((1, 1))
    ps.add((2, 2))
    assert space.finalize(ps).profiles() == [(2, 2)]


def test_space_for_instance_uses_qbound():
    inst = Instance(Graph(2, []), ((3, 4), (1, 1)))
    space = ProfileSpace.for_instance(inst)
    assert space.qbound == 7
