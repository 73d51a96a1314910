import pytest

from seytight import (
    Orientation,
    SizeCapError,
    cycle_power,
    directed_cycle,
    empty_orientation,
    is_isomorphic,
    is_seymour_tight,
    is_sullivan_tight,
    lex_product,
    parse_edge_text,
    pendant_triangle,
)
from seytight.enumeration import (
    converse_conjecture_experiment,
    dedupe_up_to_isomorphism,
    enumerate_orientations,
    lowdegree_census,
    max_out_degree_filter,
    search,
    sink_free_filter,
    sullivan_catalogue,
    verify_lowdegree_classification,
    verify_no_counterexample,
)
from seytight.tightness import profile


def test_enumeration_is_complete():
    assert sum(1 for _ in enumerate_orientations(3)) == 27
    assert sum(1 for _ in enumerate_orientations(4)) == 729
    assert sum(1 for _ in enumerate_orientations(0)) == 1


def test_unfiltered_refusal():
    with pytest.raises(SizeCapError, match="3\\^21"):
        next(enumerate_orientations(7))
    # filtered scans at the same size are allowed
    gen = enumerate_orientations(7, [max_out_degree_filter(1)])
    next(gen)
    gen.close()


def test_filters_prune():
    capped = list(enumerate_orientations(4, [max_out_degree_filter(1)]))
    assert all(max(d.out_degree(v) for v in range(4)) <= 1 for d in capped)
    assert len(capped) < 729
    sink_free = list(enumerate_orientations(3, [sink_free_filter()]))
    assert all(all(d.out_degree(v) > 0 for v in range(3)) for d in sink_free)


def test_search_tight_n3():
    report = search(3, "seymour-tight", dedup=True)
    assert report.count_total == 27
    classes = report.match_orientations()
    assert len(classes) == 2
    assert any(is_isomorphic(d, empty_orientation(3)) for d in classes)
    assert any(is_isomorphic(d, directed_cycle(3)) for d in classes)


def test_search_matches_generator_oracle():
    # kernels against the independent pure generator, all four predicates
    from seytight.enumeration import _PREDICATE_CHECKS

    for pred, checker in _PREDICATE_CHECKS.items():
        report = search(4, pred)
        expected = sorted(
            d.arcs() for d in enumerate_orientations(4) if checker(d)
        )
        got = sorted(d.arcs() for d in report.match_orientations())
        assert got == expected, pred


def test_scan_tight_matches_annihilate_ones():
    # redundant cross-module check: everything the scan labels tight has
    # sign-matrix row sums zero
    from seytight import seymour_matrix

    for d in search(4, "seymour-tight").match_orientations():
        assert seymour_matrix(d).matvec([1] * d.n) == [0] * d.n


def test_search_sharded_is_deterministic():
    solo = search(4, "seymour-tight", jobs=1)
    sharded = search(4, "seymour-tight", jobs=3)
    assert solo.matches == sharded.matches
    assert solo.count_total == sharded.count_total == 3**6


def test_search_sc_tight_n4():
    report = search(4, "seymour-tight", dedup=True)
    sc_tight = [d for d in report.match_orientations() if d.is_strongly_connected()]
    assert len(sc_tight) == 1
    assert is_isomorphic(sc_tight[0], directed_cycle(4))


def test_search_filtered_path():
    report = search(5, "seymour-tight", dedup=True, max_out_degree=1)
    classes = report.match_orientations()
    # out-degree <= 1 and tight means every arc points at an out-degree-1
    # vertex: unions of cycles with pendant in-trees plus isolated vertices.
    # On 5 vertices: E5; C3 (+2K1); C3+tail (+K1); C4 (+K1); C5; C4+tail;
    # C3+2-chain; C3+two tails on one vertex; C3+two tails on two vertices.
    assert len(classes) == 9
    for d in classes:
        for v in range(5):
            if d.out_degree(v) == 1:
                assert d.out_degree(d.out_neighbourhood(v)[0]) == 1


def test_verify_no_counterexample_small():
    for n in (4, 5):
        report = verify_no_counterexample(n)
        assert report.count_total == 3 ** (n * (n - 1) // 2)
        assert report.matches == []
    with pytest.raises(SizeCapError):
        verify_no_counterexample(7)


def test_lowdegree_census_examples():
    five = lowdegree_census(5, 1)
    assert len(five.matches) == 1
    assert is_isomorphic(five.match_orientations()[0], directed_cycle(5))

    six = lowdegree_census(6, 2)
    classes = six.match_orientations()
    assert len(classes) == 2
    assert any(is_isomorphic(d, cycle_power(6, 2)) for d in classes)
    assert any(
        is_isomorphic(d, lex_product(directed_cycle(3), empty_orientation(2)))
        for d in classes
    )

    seven = lowdegree_census(7, 2)
    assert len(seven.matches) == 1
    assert is_isomorphic(seven.match_orientations()[0], cycle_power(7, 2))

    with pytest.raises(SizeCapError):
        lowdegree_census(8, 1)


def test_verify_lowdegree_classification_small():
    report = verify_lowdegree_classification(n_max_degree1=5, n_max_degree2=6)
    assert report["violations"] == []
    assert len(report["degree1"][4].matches) == 1


def test_converse_experiment():
    report = converse_conjecture_experiment(7)
    assert report["converse_violations"] == []
    assert report["fixed_k_violations"] == []
    # labelled Eulerian Seymour-tight counts (new data, frozen as regression guard)
    counts = {n: report["per_n"][n]["eulerian_tight"] for n in range(3, 8)}
    assert counts == {3: 3, 4: 15, 5: 99, 6: 729, 7: 7959}
    assert "not a proof" in report["note"]
    # pendant triangle is excluded by the Eulerian filter but fails directly
    pend = pendant_triangle()
    assert is_seymour_tight(pend) and not is_seymour_tight(pend.converse())
    p = profile(pend)
    assert p.out1 != p.in1  # not Eulerian
    # cycle powers are converse-invariant up to relabelling
    assert is_seymour_tight(cycle_power(6, 2).converse())


def test_sullivan_catalogue_n3():
    cat = sullivan_catalogue(3)
    classes = [parse_edge_text(s, as_orientation=True) for s in cat["matches"]]
    assert len(classes) == 2
    assert any(is_isomorphic(d, empty_orientation(3)) for d in classes)
    assert any(is_isomorphic(d, directed_cycle(3)) for d in classes)
    assert cat["tournament_diameter2_equivalence"] is True


def test_sullivan_catalogue_n5():
    cat = sullivan_catalogue(5)
    assert cat["tournaments_checked"] == 1024
    assert cat["tournament_diameter2_equivalence"] is True
    assert len(cat["not_seymour_tight"]) >= 1
    for s in cat["not_seymour_tight"]:
        d = parse_edge_text(s, as_orientation=True)
        assert is_sullivan_tight(d) and not is_seymour_tight(d)


def test_dedupe_up_to_isomorphism():
    c4 = directed_cycle(4)
    relabelled = Orientation(4, [(1, 2), (2, 3), (3, 0), (0, 1)])
    other = empty_orientation(4)
    reps = dedupe_up_to_isomorphism([c4, relabelled, other])
    assert len(reps) == 2
    # canonical representatives are stable under input order
    reps2 = dedupe_up_to_isomorphism([other, relabelled, c4])
    assert [d.arcs() for d in reps] == [d.arcs() for d in reps2]


def test_dedupe_outputs_pairwise_non_isomorphic():
    raw = search(4, "seymour-tight").match_orientations()
    reps = dedupe_up_to_isomorphism(raw)
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert not is_isomorphic(a, b)
        assert any(is_isomorphic(a, r) for r in raw)
