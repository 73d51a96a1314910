import pytest

from seytight import (
    Digraph,
    DigraphBuilder,
    EmbeddingMap,
    InputError,
    Orientation,
    directed_cycle,
    cycle_power,
    disjoint_union,
    empty_orientation,
    pendant_triangle,
)
from conftest import random_orientation


def test_out_neighbourhoods():
    c5 = directed_cycle(5)
    assert c5.out_neighbourhood(0) == [1]
    assert cycle_power(7, 2).out_neighbourhood(0) == [1, 2]
    assert empty_orientation(4).out_neighbourhood(2) == []


def test_second_out_neighbourhoods():
    assert cycle_power(7, 2).second_out_neighbourhood(0) == [3, 4]
    assert directed_cycle(5).second_out_neighbourhood(0) == [2]
    star = Orientation(3, [(0, 1), (0, 2)])
    assert star.second_out_neighbourhood(0) == []


def test_in_and_second_in():
    c5 = directed_cycle(5)
    assert c5.in_neighbourhood(0) == [4]
    assert c5.second_in_neighbourhood(0) == [3]
    pend = pendant_triangle()
    assert pend.in_neighbourhood(0) == [2, 3]
    assert pend.second_in_neighbourhood(0) == [1]


def test_out_of_range_vertex_rejected():
    c5 = directed_cycle(5)
    with pytest.raises(InputError):
        c5.out_neighbourhood(5)
    with pytest.raises(InputError):
        c5.second_in_neighbourhood(-1)


def test_no_self_loops_or_two_cycles():
    with pytest.raises(InputError):
        Digraph(3, [(1, 1)])
    with pytest.raises(InputError):
        Orientation(3, [(0, 1), (1, 0)])
    # digraphs accept 2-cycles
    d = Digraph(3, [(0, 1), (1, 0)])
    assert d.arc_count == 2


def test_converse():
    assert directed_cycle(3).converse() == Orientation(3, [(0, 2), (1, 0), (2, 1)])
    single = Orientation(2, [(0, 1)])
    assert single.converse() == Orientation(2, [(1, 0)])
    pend_conv = pendant_triangle().converse()
    assert pend_conv.out_degree(0) == 2
    for d in (directed_cycle(5), pendant_triangle(), cycle_power(9, 3)):
        assert d.converse().converse() == d


def test_scc_and_condensation():
    c5 = directed_cycle(5)
    assert c5.strongly_connected_components() == [[0, 1, 2, 3, 4]]
    assert c5.condensation().n == 1

    pend = pendant_triangle()
    assert pend.strongly_connected_components() == [[0, 1, 2], [3]]
    assert pend.condensation().arcs() == [(1, 0)]

    e3 = empty_orientation(3)
    assert e3.strongly_connected_components() == [[0], [1], [2]]
    assert e3.condensation().arc_count == 0


def test_condensation_acyclic(rng):
    for _ in range(40):
        d = random_orientation(rng, rng.randrange(1, 8))
        cond = d.condensation()
        # an acyclic digraph has only singleton SCCs
        assert all(len(c) == 1 for c in cond.strongly_connected_components())


def test_reachable_closure():
    pend = pendant_triangle()
    assert pend.reachable_closure(1) == pend  # {3} reaches everything
    assert pend.reachable_closure(0) == directed_cycle(3)
    c5 = directed_cycle(5)
    assert c5.reachable_closure(0) == c5
    with pytest.raises(InputError):
        pend.reachable_closure(2)


def test_induced_subgraph():
    c5 = directed_cycle(5)
    assert c5.induced_subgraph([0, 1, 2]) == Orientation(3, [(0, 1), (1, 2)])
    assert c5.induced_subgraph(range(5)) == c5
    assert cycle_power(7, 2).induced_subgraph([0, 1, 2]) == Orientation(
        3, [(0, 1), (0, 2), (1, 2)]
    )
    with pytest.raises(InputError):
        c5.induced_subgraph([0, 9])


def test_induced_subgraph_identity_random(rng):
    for _ in range(25):
        d = random_orientation(rng, rng.randrange(1, 9))
        assert d.induced_subgraph(range(d.n)) == d


def test_disjoint_union():
    two = disjoint_union(directed_cycle(3), directed_cycle(3))
    assert two.n == 6
    assert two.arcs() == [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    assert isinstance(two, Orientation)


def test_neighbourhood_disjointness(rng):
    for _ in range(30):
        d = random_orientation(rng, rng.randrange(1, 9))
        for v in range(d.n):
            first = d.out_mask(v)
            second = d.second_out_mask(v)
            assert first & second == 0
            assert not (first >> v & 1) and not (second >> v & 1)


def test_second_in_matches_converse(rng):
    for _ in range(30):
        d = random_orientation(rng, rng.randrange(1, 9))
        conv = d.converse()
        for v in range(d.n):
            assert d.second_in_neighbourhood(v) == conv.second_out_neighbourhood(v)


def test_builder():
    b = DigraphBuilder(2)
    b.add_arc(0, 1)
    v = b.add_vertex()
    b.add_arc(v, 0)
    d = b.build_orientation()
    assert d.n == 3 and d.arcs() == [(0, 1), (2, 0)]
    with pytest.raises(InputError):
        DigraphBuilder(1).add_arc(0, 0)


def test_embedding_map_validation():
    guest = Orientation(2, [(0, 1)])
    host = Orientation(4, [(1, 3), (0, 2)])
    EmbeddingMap(guest=guest, host=host, image=(1, 3))
    with pytest.raises(InputError):
        EmbeddingMap(guest=guest, host=host, image=(3, 1))  # arc direction flipped
    with pytest.raises(InputError):
        EmbeddingMap(guest=guest, host=host, image=(1, 1))  # not injective
