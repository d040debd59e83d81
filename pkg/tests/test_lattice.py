"""Even-translation subgroups extracted from parallel edge pairs."""

from __future__ import annotations

import random

import pytest

from cubeloops import (
    BadVectorError,
    NotParallelError,
    QuotientElement,
    SameEdgeError,
    all_pairs_lattice,
    compose_quotient,
    direction_product_translation,
    double_bit_vector,
    even_translation_lattice,
    halve_even_vector,
    pair_translation_lattice,
    parallel_pair_translation,
    parse_word,
    quotient_identity,
    reflection_closure,
    reflection_generators,
    span_lattice,
    validate,
)

# published even-translation subgroups for the six 8-edge classes
REFERENCE_SPANS_N4 = {
    "12314243": [(0, 2, 2, 0), (2, 0, 2, 2), (2, 2, 0, 0), (0, 2, 0, 0)],
    "12314342": [(0, 2, 2, 0), (2, 0, 0, 0), (2, 0, 0, 2), (0, 0, 2, 0)],
    "12341234": [(0, 2, 2, 2), (2, 0, 2, 2), (2, 2, 0, 2), (2, 2, 2, 0)],
    "12314234": [(0, 2, 2, 0), (2, 0, 2, 2)],
    "12314324": [(2, 0, 0, 2), (0, 2, 2, 0)],
    "12321434": [(0, 0, 2, 0), (2, 2, 0, 2)],
}


def test_pair_translation_reference_pairs():
    g1 = validate(parse_word("12314243", 4))
    assert parallel_pair_translation(g1, 0, 3) == (0, 2, 2, 0)
    g6 = validate(parse_word("12321434", 4))
    assert parallel_pair_translation(g6, 2, 6) == (2, 2, 0, 2)
    gp = validate(parse_word("12321232", 3))
    assert parallel_pair_translation(gp, 0, 4) == (0, 0, 2)


def test_pair_translation_rejects_bad_pairs():
    path = validate(parse_word("12314243", 4))
    with pytest.raises(SameEdgeError):
        parallel_pair_translation(path, 2, 2)
    with pytest.raises(NotParallelError):
        parallel_pair_translation(path, 0, 1)


def test_pair_translation_matches_rotation_composition(n3_classes, n4_classes):
    # oracle: composing the two half-turns in the quotient group must give a
    # pure translation whose vector is exactly the combinatorial formula
    for word in (*n3_classes, *n4_classes):
        path = validate(word)
        gens = reflection_generators(path)
        labels = word.labels
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                if labels[i] != labels[j]:
                    continue
                product = compose_quotient(gens.quotient[i], gens.quotient[j])
                assert product.flips == 0
                assert product.vector == parallel_pair_translation(path, i, j)
                assert parallel_pair_translation(path, j, i) == product.vector


def test_pair_lattice_reference_orders():
    hexagon = validate(parse_word("123123", 3))
    assert pair_translation_lattice(hexagon).order == 4
    g3 = validate(parse_word("12314234", 4))
    assert pair_translation_lattice(g3) == span_lattice(4, [(0, 2, 2, 0), (2, 0, 2, 2)])
    assert pair_translation_lattice(g3).order == 4
    # the staircase family keeps a rank-2 pair lattice in every dimension
    for text, dim in (
        ("123123", 3),
        ("12341243", 4),
        ("1234512543", 5),
        ("123456126543", 6),
    ):
        path = validate(parse_word(text, dim))
        assert pair_translation_lattice(path).order == 4


def test_pair_lattice_base_edge_choice_is_irrelevant(n3_classes, n4_classes):
    for word in (*n3_classes, *n4_classes):
        path = validate(word)
        assert pair_translation_lattice(path, base_edge="first") == pair_translation_lattice(
            path, base_edge="last"
        )
    with pytest.raises(ValueError):
        pair_translation_lattice(validate(parse_word("123123", 3)), base_edge="middle")


def test_all_pairs_lattice_equals_base_pair_lattice(n3_classes, n4_classes):
    for word in (*n3_classes, *n4_classes):
        path = validate(word)
        assert all_pairs_lattice(path) == pair_translation_lattice(path)


def test_direction_product_is_composition_order_independent():
    rng = random.Random(55221)
    for text, dim in (("123123", 3), ("12321232", 3), ("145231425232", 5)):
        path = validate(parse_word(text, dim))
        gens = reflection_generators(path)
        first_edges: dict[int, int] = {}
        for i, d in enumerate(path.word.labels):
            first_edges.setdefault(d, i)
        expected = direction_product_translation(path)
        for _ in range(10):
            order = list(first_edges.values())
            rng.shuffle(order)
            element = quotient_identity(dim)
            for i in order:
                element = compose_quotient(element, gens.quotient[i])
            assert element.vector == expected
            assert element.flips == 0


def test_direction_product_orientability_pins():
    hexagon = validate(parse_word("123123", 3))
    product = direction_product_translation(hexagon)
    assert all(x % 2 == 0 for x in product)
    assert not pair_translation_lattice(hexagon).contains(product)

    five = validate(parse_word("145231425232", 5))
    assert pair_translation_lattice(five).contains(direction_product_translation(five))


def test_direction_product_even_dimension_is_not_a_translation():
    path = validate(parse_word("12341234", 4))
    product = direction_product_translation(path)
    assert all(x % 2 == 1 for x in product)
    with pytest.raises(BadVectorError):
        pair_translation_lattice(path).contains(product)


def test_even_lattice_reference_values():
    g1 = validate(parse_word("12314243", 4))
    assert even_translation_lattice(g1).order == 16
    g4 = validate(parse_word("12314324", 4))
    assert even_translation_lattice(g4) == span_lattice(4, [(2, 0, 0, 2), (0, 2, 2, 0)])
    hexagon = validate(parse_word("123123", 3))
    assert even_translation_lattice(hexagon).order == 8
    assert pair_translation_lattice(hexagon).order == 4


def test_even_lattice_matches_published_spans(n4_m8_classes):
    for text, generators in REFERENCE_SPANS_N4.items():
        path = validate(parse_word(text, 4))
        assert even_translation_lattice(path) == span_lattice(4, generators)


def test_contains_reference_memberships():
    g1 = validate(parse_word("12314243", 4))
    lam = even_translation_lattice(g1)
    assert lam.contains((0, 0, 0, 0))
    assert lam.contains((2, 2, 0, 0))
    g3 = validate(parse_word("12314234", 4))
    lam3 = even_translation_lattice(g3)
    assert not lam3.contains((2, 0, 0, 0))
    # cross-check against the explicit four-element enumeration
    elements = set(lam3.elements())
    assert len(elements) == 4
    assert (2, 0, 0, 0) not in elements
    assert (0, 0, 0, 0) in elements
    with pytest.raises(BadVectorError):
        lam3.contains((2, 1, 0, 0))


def test_halve_double_roundtrip():
    assert halve_even_vector((2, 0, 2, 0)) == 0b0101
    assert double_bit_vector(0b0101, 4) == (2, 0, 2, 0)
    with pytest.raises(BadVectorError):
        halve_even_vector((2, 3, 0, 0))


def test_lattice_elements_form_a_group(n4_m8_classes):
    for word in n4_m8_classes:
        lam = even_translation_lattice(validate(word))
        elements = set(lam.elements())
        assert len(elements) == lam.order
        for v in lam.basis_vectors():
            assert v in elements
        for a in elements:
            for b in elements:
                total = tuple((x + y) % 4 for x, y in zip(a, b))
                assert total in elements


def test_odd_dimension_order_dichotomy(n3_classes, random_n5_paths):
    for word in n3_classes:
        path = validate(word)
        lam0 = pair_translation_lattice(path).order
        lam_q = even_translation_lattice(path).order
        assert lam_q in (lam0, 2 * lam0)
    for path in random_n5_paths[:20]:
        lam0 = pair_translation_lattice(path).order
        lam_q = even_translation_lattice(path).order
        assert lam_q in (lam0, 2 * lam0)


def test_even_dimension_orders_agree(n4_m8_classes):
    for word in n4_m8_classes:
        path = validate(word)
        assert even_translation_lattice(path).order == pair_translation_lattice(path).order


def test_lattice_elements_lie_in_reflection_closure(n3_classes, n4_m8_classes):
    for word in (*n3_classes, *n4_m8_classes):
        path = validate(word)
        closure = reflection_closure(reflection_generators(path))
        for v in even_translation_lattice(path).elements():
            assert QuotientElement.from_vector(v) in closure
