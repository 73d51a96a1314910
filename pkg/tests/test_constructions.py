from pathlib import Path

import pytest

from seytight import (
    FamilySpec,
    InputError,
    Orientation,
    ValidationError,
    add_source_by_neighbourhood_copy,
    build_family,
    circulant_tournament,
    cycle_power,
    deficiency_of_product,
    directed_cycle,
    disjoint_union,
    embed_in_seymour_tight,
    empty_orientation,
    family_catalogue,
    gen_lex_product,
    hom_bijective_attach,
    hom_source_attach,
    is_seymour_tight,
    is_sullivan_tight,
    is_uniform_on,
    lex_product,
    pendant_triangle,
    profile,
    replace_uniform_subset,
    to_edge_text,
)
from seytight.tightness import NeighbourhoodProfile
from conftest import random_orientation

DATA = Path(__file__).parent / "data"


def test_build_family_examples():
    cp = build_family(FamilySpec("cycle-power", 7, 2))
    assert cp.n == 7 and cp.arc_count == 14 and is_seymour_tight(cp)
    t5 = build_family(FamilySpec("tournament", 5))
    assert all(t5.out_degree(v) == 2 for v in range(5)) and is_seymour_tight(t5)
    assert build_family(FamilySpec("empty", 3)).arc_count == 0


def test_family_parameter_validation():
    with pytest.raises(InputError):
        FamilySpec("cycle-power", 6, 3)  # 2k >= n
    with pytest.raises(InputError):
        FamilySpec("tournament", 6)
    with pytest.raises(InputError):
        FamilySpec("cycle", 2)
    with pytest.raises(InputError):
        FamilySpec("what", 3)


def test_lex_product_examples():
    c3e2 = lex_product(directed_cycle(3), empty_orientation(2))
    assert c3e2.n == 6 and c3e2.arc_count == 12
    assert all(c3e2.out_degree(v) == 2 for v in range(6))
    assert is_seymour_tight(c3e2)

    d = cycle_power(7, 3)
    assert lex_product(d, empty_orientation(1)) == d

    c3c3 = lex_product(directed_cycle(3), directed_cycle(3))
    assert c3c3.n == 9 and all(c3c3.out_degree(v) == 4 for v in range(9))
    assert is_seymour_tight(c3c3)


def test_gen_lex_product_examples():
    mixed = gen_lex_product(
        directed_cycle(3),
        [empty_orientation(3), empty_orientation(3), directed_cycle(3)],
    )
    assert mixed.n == 9 and is_seymour_tight(mixed)
    assert sorted(set(mixed.out_degree(v) for v in range(9))) == [3, 4]

    kernel_weighted = gen_lex_product(
        cycle_power(6, 2),
        [
            empty_orientation(1),
            empty_orientation(3),
            empty_orientation(1),
            empty_orientation(3),
            empty_orientation(1),
            directed_cycle(3),
        ],
        check="seymour",
    )
    assert kernel_weighted.n == 12 and is_seymour_tight(kernel_weighted)

    g = directed_cycle(3)
    assert gen_lex_product(directed_cycle(4), [g] * 4) == lex_product(directed_cycle(4), g)


def test_gen_lex_kernel_validation_names_row():
    with pytest.raises(ValidationError, match="row"):
        gen_lex_product(
            directed_cycle(3),
            [empty_orientation(1), empty_orientation(2), empty_orientation(3)],
            check="seymour",
        )
    with pytest.raises(InputError):
        gen_lex_product(directed_cycle(3), [empty_orientation(1)] * 2)


def test_sullivan_products():
    # R of the triangle is zero, so any size triple is accepted
    t5 = circulant_tournament(5)
    mixed = gen_lex_product(
        directed_cycle(3),
        [directed_cycle(3), t5, empty_orientation(2)],
        check="sullivan",
    )
    assert is_sullivan_tight(mixed)
    prod = lex_product(cycle_power(7, 2), cycle_power(5, 2))
    assert is_sullivan_tight(prod)
    single = cycle_power(5, 2)
    assert lex_product(empty_orientation(1), single) == single


def test_is_uniform_on():
    c3e2 = lex_product(directed_cycle(3), empty_orientation(2))
    block0 = [0, 1]
    for v in range(2, 6):
        assert is_uniform_on(c3e2, v, block0)
    path = Orientation(3, [(0, 1), (1, 2)])
    assert not is_uniform_on(path, 0, [1, 2])
    assert is_uniform_on(path, 0, [])
    with pytest.raises(InputError):
        is_uniform_on(path, 1, [1, 2])


def test_replace_uniform_subset():
    host = lex_product(directed_cycle(3), empty_orientation(3))
    swapped = replace_uniform_subset(host, [6, 7, 8], directed_cycle(3), require_tight=True)
    assert is_seymour_tight(swapped)
    assert sorted(set(swapped.out_degree(v) for v in range(9))) == [3, 4]

    # replacing X by its own induced orientation changes nothing
    same = replace_uniform_subset(host, [6, 7, 8], host.induced_subgraph([6, 7, 8]))
    assert same == host

    with pytest.raises(ValidationError, match="not uniform"):
        replace_uniform_subset(Orientation(3, [(0, 1), (1, 2)]), [1, 2], empty_orientation(2))
    with pytest.raises(InputError):
        replace_uniform_subset(host, [6, 7, 8], empty_orientation(2))


def test_replace_uniform_subset_in_tournament():
    # regular 9-tournament with a uniform triangle: X -> O complete, I -> X
    # complete, O -> I complete, O and I internally cyclic
    x, o, i = [0, 1, 2], [3, 4, 5], [6, 7, 8]
    arcs = [(0, 1), (1, 2), (2, 0)]
    arcs += [(a, b) for a in x for b in o]
    arcs += [(a, b) for a in i for b in x]
    arcs += [(a, b) for a in o for b in i]
    arcs += [(3, 4), (4, 5), (5, 3), (6, 7), (7, 8), (8, 6)]
    t9 = Orientation(9, arcs)
    assert all(t9.out_degree(v) == 4 for v in range(9)) and is_seymour_tight(t9)

    for h in (empty_orientation(3), directed_cycle(3)):
        replaced = replace_uniform_subset(t9, x, h, require_tight=True)
        assert is_seymour_tight(replaced)


def test_add_source_by_neighbourhood_copy():
    c3 = directed_cycle(3)
    six = add_source_by_neighbourhood_copy(c3, c3, [1])  # X = N1(0)
    assert six.n == 6 and is_seymour_tight(six) and not six.is_strongly_connected()

    quad = add_source_by_neighbourhood_copy(empty_orientation(1), c3, [1])
    assert quad.n == 4 and is_seymour_tight(quad)
    from seytight import is_isomorphic

    assert is_isomorphic(quad, pendant_triangle())

    g = cycle_power(7, 2)
    nine = add_source_by_neighbourhood_copy(empty_orientation(2), g, g.out_neighbourhood(0))
    assert nine.n == 9 and is_seymour_tight(nine)

    with pytest.raises(ValidationError, match=r"\|X\|"):
        add_source_by_neighbourhood_copy(c3, cycle_power(7, 2), [0])  # |N1(X)\X| = 2


def test_hom_attachments():
    c3 = directed_cycle(3)
    twin = hom_bijective_attach(c3, c3, [0, 1, 2])
    assert twin.n == 6 and is_seymour_tight(twin) and not twin.is_strongly_connected()

    c6 = directed_cycle(6)
    nine = hom_source_attach(c6, c3, [v % 3 for v in range(6)])
    assert nine.n == 9 and is_seymour_tight(nine)

    doubled = hom_source_attach(c3, c3, [0, 1, 2])
    for d in range(3):
        assert doubled.out_degree(d) == 2 * c3.out_degree(d)

    with pytest.raises(ValidationError, match="homomorphism"):
        hom_source_attach(c6, c3, [0, 0, 1, 1, 2, 2])
    with pytest.raises(InputError, match="bijection"):
        hom_bijective_attach(c6, c3, [v % 3 for v in range(6)])


def test_embed_in_seymour_tight_examples():
    for guest in (empty_orientation(1), Orientation(2, [(0, 1)]), circulant_tournament(5)):
        em = embed_in_seymour_tight(guest)
        assert em.guest == guest
        assert is_seymour_tight(em.host)
        assert em.host.is_strongly_connected()
        # EmbeddingMap already validates inducedness at construction
        sub = em.host.induced_subgraph(em.image)
        assert sub.arc_count == guest.arc_count

    # size arithmetic for the 5-vertex circulant tournament: m originals,
    # m common sinks, m private sinks, and a 3*k_v gadget absorbing each
    # private sink with k_v = m + 1 - |N2(v)| = 4
    host = embed_in_seymour_tight(circulant_tournament(5)).host
    assert host.n == 3 * (5 + 5 + 5 + 5 * (3 * 4 - 1))
    assert host.n == 210


def test_embed_in_seymour_tight_random(rng):
    for _ in range(8):
        guest = random_orientation(rng, rng.randrange(1, 6))
        em = embed_in_seymour_tight(guest)
        assert is_seymour_tight(em.host) and em.host.is_strongly_connected()


def test_deficiency_of_product():
    d = cycle_power(5, 2)
    g = directed_cycle(3)
    assert deficiency_of_product(profile(d), 3, profile(g)) == [0] * 15

    fake = NeighbourhoodProfile(out1=(2, 2), out2=(1, 1), in1=(0, 0), in2=(0, 0))
    tight3 = profile(directed_cycle(3))
    assert deficiency_of_product(fake, 3, tight3) == [3] * 6

    with pytest.raises(InputError):
        deficiency_of_product(fake, 4, tight3)


def test_deficiency_of_product_matches_brute_force(rng):
    specs = [s for s in family_catalogue(6)]
    for _ in range(30):
        d = rng.choice(specs).build()
        g = rng.choice(specs).build()
        predicted = deficiency_of_product(profile(d), g.n, profile(g))
        actual = profile(lex_product(d, g)).seymour_deficiencies()
        assert predicted == actual


def test_iterated_product_deficiency_stays_positive():
    # synthetic counterexample-like profile: k-fold self-product keeps def >= 1
    fake = NeighbourhoodProfile(out1=(3, 4), out2=(2, 3), in1=(0, 0), in2=(0, 0))
    current = fake
    size = 2
    for _ in range(4):
        defs = deficiency_of_product(current, size, current)
        assert all(x >= 1 for x in defs)
        out1 = [size * a + b for a in current.out1 for b in current.out1]
        out2 = [size * a + b for a in current.out2 for b in current.out2]
        current = NeighbourhoodProfile(
            out1=tuple(out1),
            out2=tuple(out2),
            in1=(0,) * len(out1),
            in2=(0,) * len(out1),
        )
        size = size * size


def test_all_or_nothing_second_neighbourhood(rng):
    # if everything outside X is uniform on X, second neighbourhoods meet X
    # completely or not at all
    for _ in range(20):
        outer = random_orientation(rng, rng.randrange(2, 5))
        parts = [random_orientation(rng, 2) for _ in range(outer.n)]
        prod = gen_lex_product(outer, parts)
        block = [0, 1]  # the first part
        xmask = 0b11
        for v in range(2, prod.n):
            second = prod.second_out_mask(v)
            assert second & xmask in (0, xmask)


def test_strong_connectivity_transfer(rng):
    for _ in range(20):
        g = random_orientation(rng, rng.randrange(1, 5))
        d = directed_cycle(rng.randrange(3, 6))
        assert lex_product(d, g).is_strongly_connected()


def test_attachments_preserve_tightness_on_random_tight_inputs(rng):
    specs = family_catalogue(7)
    for _ in range(25):
        d = rng.choice(specs).build()
        g = rng.choice(specs).build()
        if g.n == 0:
            continue
        x = g.out_neighbourhood(rng.randrange(g.n))
        if x:  # X = N1(x) of a tight graph always satisfies the precondition
            assert is_seymour_tight(add_source_by_neighbourhood_copy(d, g, x))
        # identity homomorphism attachments on the same tight graph
        assert is_seymour_tight(hom_source_attach(g, g, list(range(g.n))))
        assert is_seymour_tight(hom_bijective_attach(g, g, list(range(g.n))))


def test_hom_attach_with_quotient_map(rng):
    # reduction mod m is a homomorphism from a cycle power to its quotient power
    for n, m, k in [(6, 3, 1), (8, 4, 1), (12, 6, 2), (10, 5, 2)]:
        big = cycle_power(n, k)
        small = cycle_power(m, k)
        f = [v % m for v in range(n)]
        assert is_seymour_tight(hom_source_attach(big, small, f))


def test_golden_mixed_parts_fixture():
    outer = directed_cycle(4)
    parts = [
        directed_cycle(4),
        disjoint_union(directed_cycle(3), empty_orientation(1)),
        empty_orientation(4),
        pendant_triangle(),
    ]
    g = gen_lex_product(outer, parts, check="seymour")
    assert is_seymour_tight(g)
    expected = (DATA / "c4_mixed_parts.edges").read_text()
    assert to_edge_text(g) == expected
