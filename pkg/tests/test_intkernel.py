from itertools import product as iter_product

import pytest

from seytight import (
    InputError,
    SignMatrix,
    chi_vectors,
    circulant_tournament,
    cycle_power,
    directed_cycle,
    in_kernel,
    integer_kernel_basis,
    lex_product,
    empty_orientation,
    nonnegative_kernel_vectors,
    seymour_matrix,
)


def brute_force_box_solutions(rows, bound):
    """Independent oracle: scan the whole box for exact kernel vectors."""
    n = len(rows[0])
    out = []
    for x in iter_product(range(bound + 1), repeat=n):
        if all(sum(r * xi for r, xi in zip(row, x)) == 0 for row in rows):
            out.append(x)
    return sorted(out)


def test_kernel_of_c6_squared():
    basis = integer_kernel_basis(seymour_matrix(cycle_power(6, 2)))
    assert basis.dimension == 2
    assert basis.contains((1, 3, 1, 3, 1, 3))
    assert basis.contains((1, 1, 1, 1, 1, 1))
    assert not basis.contains((1, 0, 0, 0, 0, 0))


def test_all_ones_in_kernel_of_tight_graphs():
    for d in (directed_cycle(5), cycle_power(9, 3), circulant_tournament(7)):
        basis = integer_kernel_basis(seymour_matrix(d))
        assert basis.contains((1,) * d.n)


def test_full_rank_gives_empty_basis():
    shift = SignMatrix(((0, 1), (-1, 0)), "seymour")
    basis = integer_kernel_basis(shift)
    assert basis.dimension == 0
    assert basis.contains((0, 0))
    assert not basis.contains((1, 0))


def test_basis_vectors_are_primitive_and_verified():
    from math import gcd

    for d in (cycle_power(6, 2), cycle_power(8, 2), directed_cycle(4)):
        mat = seymour_matrix(d)
        basis = integer_kernel_basis(mat)
        for vec in basis.vectors:
            g = 0
            for x in vec:
                g = gcd(g, x)
            assert g == 1
            assert in_kernel(mat, vec)
        assert basis.vectors == tuple(sorted(basis.vectors))


def test_chi_vectors():
    assert chi_vectors(6, 2) == [(1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1)]
    assert chi_vectors(7, 2) == [(1, 1, 1, 1, 1, 1, 1)]
    nine = chi_vectors(9, 3)
    assert len(nine) == 3
    mat = seymour_matrix(cycle_power(9, 3))
    for chi in nine:
        assert in_kernel(mat, chi)
    with pytest.raises(InputError):
        chi_vectors(6, 3)


def test_chi_vectors_in_basis_span():
    for n, k in [(6, 2), (8, 2), (9, 3), (10, 4), (12, 3)]:
        basis = integer_kernel_basis(seymour_matrix(cycle_power(n, k)))
        for chi in chi_vectors(n, k):
            assert basis.contains(chi)


def test_nonnegative_kernel_vectors_examples():
    mat = seymour_matrix(cycle_power(6, 2))
    hits = nonnegative_kernel_vectors(mat, 3)
    for expected in [(1, 3, 1, 3, 1, 3), (1, 1, 1, 1, 1, 1), (3, 1, 3, 1, 3, 1), (0,) * 6]:
        assert expected in hits

    shift = SignMatrix(((0, 1), (-1, 0)), "seymour")
    assert nonnegative_kernel_vectors(shift, 5) == [(0, 0)]

    assert nonnegative_kernel_vectors(seymour_matrix(directed_cycle(3)), 2) == [
        (0, 0, 0),
        (1, 1, 1),
        (2, 2, 2),
    ]
    with pytest.raises(InputError):
        nonnegative_kernel_vectors(mat, 0)


def test_nonnegative_matches_brute_force_box():
    cases = [
        (seymour_matrix(cycle_power(6, 2)).rows, 3),
        (seymour_matrix(directed_cycle(4)).rows, 2),
        (seymour_matrix(lex_product(directed_cycle(3), empty_orientation(2))).rows, 2),
        (((0, 1, -1), (-1, 0, 1), (1, -1, 0)), 3),
    ]
    for rows, bound in cases:
        assert nonnegative_kernel_vectors(rows, bound) == brute_force_box_solutions(rows, bound)


def test_every_returned_vector_annihilates(rng):
    from conftest import random_orientation

    for _ in range(10):
        d = random_orientation(rng, rng.randrange(2, 7))
        mat = seymour_matrix(d)
        for vec in nonnegative_kernel_vectors(mat, 2):
            assert in_kernel(mat, vec)
        for vec in integer_kernel_basis(mat).vectors:
            assert in_kernel(mat, vec)
