import pytest

from seytight import (
    InputError,
    Orientation,
    cycle_power,
    directed_cycle,
    parse_edge_text,
    pendant_triangle,
    to_dot,
    to_edge_text,
)


def test_edge_text_round_trip():
    for d in (directed_cycle(5), cycle_power(7, 2), pendant_triangle(), Orientation(3)):
        assert parse_edge_text(to_edge_text(d), as_orientation=True) == d


def test_edge_text_format():
    assert to_edge_text(directed_cycle(3)) == "3\n0 1\n1 2\n2 0\n"
    assert to_edge_text(Orientation(2)) == "2\n"


def test_reader_accepts_any_order():
    assert parse_edge_text("3\n2 0\n0 1\n1 2\n") == directed_cycle(3)


def test_reader_rejects_bad_input():
    with pytest.raises(InputError):
        parse_edge_text("")
    with pytest.raises(InputError):
        parse_edge_text("x\n0 1\n")
    with pytest.raises(InputError):
        parse_edge_text("3\n0 1\n0 1\n")  # duplicate
    with pytest.raises(InputError):
        parse_edge_text("3\n1 1\n")  # loop
    with pytest.raises(InputError):
        parse_edge_text("2\n0 5\n")  # out of range
    with pytest.raises(InputError):
        parse_edge_text("3\n0 1 2\n")  # malformed


def test_dot_export():
    dot = to_dot(Orientation(3, [(0, 1)]))
    assert dot == "digraph {\n  0;\n  1;\n  2;\n  0 -> 1;\n}\n"


def test_writes_byte_deterministic():
    d = pendant_triangle()
    assert to_edge_text(d) == to_edge_text(parse_edge_text(to_edge_text(d)))
    assert to_dot(d) == to_dot(parse_edge_text(to_edge_text(d)))
