"""Test root system construction, highest roots and centers"""
from fractions import Fraction

import networkx as nx
import pytest

from abstrata.core.errors import InvalidSpecError, ParseError
from abstrata.core.linalg import identity, matmul, to_matrix
from abstrata.core.rootsystem import (
    RootSystemSpec,
    all_specs,
    build_root_system,
    cartan_determinant,
    cartan_inverse,
    center_elements,
    center_generators,
    center_invariant_factors,
    coroot_pairing,
    highest_coroot_pairing,
    highest_root,
    is_central,
    parse_class,
    parse_group_spec,
    positive_roots,
    vertex_name,
)


def data(text):
    return build_root_system(RootSystemSpec.parse(text))


def test_cartan_small():
    """Test Cartan matrices of A1, A2, B2"""
    assert data("A1").cartan == ((2,),)
    assert data("A2").cartan == ((2, -1), (-1, 2))
    b2 = data("B2")
    assert b2.cartan == ((2, -2), (-1, 2))
    assert b2.is_long(0) and not b2.is_long(1)


def test_long_short_assignment():
    """Test the documented long/short numbering for the multiply laced types"""
    assert [data("B3").is_long(v) for v in range(3)] == [True, True, False]
    assert [data("C3").is_long(v) for v in range(3)] == [False, False, True]
    assert [data("F4").is_long(v) for v in range(4)] == [True, True, False, False]
    assert [data("G2").is_long(v) for v in range(2)] == [False, True]
    assert data("G2").lengths == (Fraction(1, 3), Fraction(1))


def test_trivalent_vertex_numbering():
    """Test D and E trivalent vertices sit at a_{n-2} and a4"""
    d5 = data("D5")
    e6 = data("E6")
    assert d5.degree(2) == 3
    assert sorted(d5.adjacency[2]) == [1, 3, 4]
    assert e6.degree(3) == 3
    assert sorted(e6.adjacency[3]) == [1, 2, 4]


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "A", "2A"])
def test_invalid_specs(text):
    """Test invalid (family, rank) combinations are rejected"""
    with pytest.raises(InvalidSpecError):
        RootSystemSpec.parse(text)


def test_spec_parse_and_str():
    """Test spec parsing is case-insensitive on the family"""
    assert RootSystemSpec.parse("e6") == RootSystemSpec("E", 6)
    assert str(RootSystemSpec.parse(" D4 ")) == "D4"
    assert vertex_name(0) == "a1"


def test_cartan_inverse_examples():
    """Test exact inverses for A1, A2, B2"""
    assert cartan_inverse(data("A1")) == ((Fraction(1, 2),),)
    assert cartan_inverse(data("A2")) == (
        (Fraction(2, 3), Fraction(1, 3)),
        (Fraction(1, 3), Fraction(2, 3)),
    )
    assert cartan_inverse(data("B2")) == ((1, 1), (Fraction(1, 2), 1))


@pytest.mark.parametrize("spec", all_specs(12), ids=str)
def test_cartan_invariants(spec):
    """Test inverse is exact and positive and the diagram is connected"""
    d = build_root_system(spec)
    assert matmul(to_matrix(d.cartan), d.cartan_inverse) == identity(d.rank)
    assert all(x > 0 for row in d.cartan_inverse for x in row)

    graph = nx.Graph()
    graph.add_nodes_from(d.vertices)
    graph.add_edges_from(edge for edge, _ in d.bonds)
    assert nx.is_connected(graph)


@pytest.mark.parametrize(
    "text,count",
    [("A1", 1), ("A4", 10), ("B3", 9), ("C4", 16), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)],
)
def test_positive_root_counts(text, count):
    """Test the number of positive roots"""
    assert len(positive_roots(data(text))) == count


def test_highest_root_examples():
    """Test highest root coefficients"""
    assert highest_root(data("A2")).h == (1, 1)
    assert highest_root(data("A1")).h == (1,)
    assert highest_root(data("G2")).h == (3, 2)
    assert highest_root(data("G2")).g == (1, 2)
    assert highest_root(data("F4")).h == (2, 3, 4, 2)
    assert highest_root(data("B3")).h == (1, 2, 2)


def test_e8_highest_root_peak():
    """Test the E8 highest root peaks exactly at the trivalent vertex"""
    top = highest_root(data("E8"))
    assert top.h == (2, 3, 4, 6, 5, 4, 3, 2)
    assert top.height == 29
    peak = max(top.h)
    assert [v for v, k in enumerate(top.h) if k == peak] == [3]


@pytest.mark.parametrize("spec", all_specs(8), ids=str)
def test_highest_root_dominant(spec):
    """Test n(alpha, highest root) >= 0 and the highest root pairs integrally"""
    d = build_root_system(spec)
    top = highest_root(d)
    assert all(highest_coroot_pairing(d, v) >= 0 for v in d.vertices)
    assert all(isinstance(coroot_pairing(d, top.h, v), int) for v in d.vertices)
    assert top.h in positive_roots(d)


def test_center_examples():
    """Test center generators for E8, A2, D4"""
    assert center_generators(data("E8")) == ()

    (z,) = center_generators(data("A2"))
    assert z.order == 3
    assert z.label == "z1"

    z1, z2 = center_generators(data("D4"))
    assert (z1.order, z2.order) == (2, 2)
    assert z1.residues == (0, 0, Fraction(1, 2), Fraction(1, 2))


def test_d_even_generators():
    """Test D6 generators are the vector class and a half-spin class"""
    z1, z2 = center_generators(data("D6"))
    half = Fraction(1, 2)
    assert z1.residues == (0, 0, 0, 0, half, half)
    assert z2.residues == (half, 0, half, 0, half, 0)


@pytest.mark.parametrize("spec", all_specs(8), ids=str)
def test_center_order_matches_determinant(spec):
    """Test |Z| = |det C| and matches the Smith normal form"""
    d = build_root_system(spec)
    order = len(center_elements(d))
    assert order == abs(cartan_determinant(d))

    product = 1
    for factor in center_invariant_factors(d):
        product *= factor
    assert product == order

    for z in center_generators(d):
        assert all((z.order * r).denominator == 1 for r in z.residues)
        assert is_central(d, z)
    assert sorted(z.order for z in center_generators(d)) == sorted(center_invariant_factors(d))


def test_parse_class_forms():
    """Test central class syntax"""
    a5 = data("A5")
    assert parse_class(a5, "sc").is_trivial
    assert parse_class(a5, "").is_trivial
    assert parse_class(a5, "z1").order == 6
    assert parse_class(a5, "z1^2").order == 3
    assert parse_class(a5, "z1^3").order == 2
    assert parse_class(a5, "ad").order == 6

    d4 = data("D4")
    both = parse_class(d4, "z1+z2")
    assert both.order == 2
    assert both.label == "z1+z2"


@pytest.mark.parametrize("text", ["ad", "z3", "w1", "z1^x"])
def test_parse_class_rejects(text):
    """Test D4 "ad" and unknown generators are rejected"""
    with pytest.raises(ParseError):
        parse_class(data("D4"), text)


def test_parse_group_spec():
    """Test group specs with quotient suffixes"""
    d, c = parse_group_spec("E6/ad")
    assert str(d.spec) == "E6"
    assert c.order == 3

    d, c = parse_group_spec("B3/z1")
    assert c.residues == (0, 0, Fraction(1, 2))

    d, c = parse_group_spec("G2")
    assert c.is_trivial
