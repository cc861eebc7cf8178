"""Outer commutator words: grammar, variable discipline, verbal subgroups."""

import pytest

from invariantize.errors import ArityMismatch, NotNormal, ParseError, VariableError
from invariantize.groups.library import cyclic, dihedral, symmetric
from invariantize.groups.model import normal_subgroups, product_set
from invariantize.groups.words import (
    OuterCommutatorWord,
    bracket,
    leaf,
    parse_ocw,
    verbal_subgroup,
)

A3 = frozenset({0, 3, 4})


class TestParsing:
    def test_single_variable(self):
        w = parse_ocw("x1")
        assert w.weight == 1
        assert w.leaves() == [1]
        assert w.text() == "x1"

    def test_plain_commutator(self):
        w = parse_ocw("[x1,x2]")
        assert w.weight == 2
        assert w.left == leaf(1)
        assert w.right == leaf(2)

    def test_nested_left(self):
        w = parse_ocw("[[x1,x2],x3]")
        assert w.weight == 3
        assert w.leaves() == [1, 2, 3]

    def test_balanced_weight_four(self):
        w = parse_ocw("[[x1,x2],[x3,x4]]")
        assert w.weight == 4
        assert w.text() == "[[x1,x2],[x3,x4]]"

    def test_whitespace_ignored(self):
        assert parse_ocw(" [ x1 , x2 ] ") == parse_ocw("[x1,x2]")

    def test_text_roundtrip(self):
        for text in ["x1", "[x1,x2]", "[x1,[x2,x3]]", "[[x1,[x2,x3]],x4]"]:
            assert parse_ocw(text).text() == text

    @pytest.mark.parametrize(
        "text",
        ["", "[x1,x2", "x", "[x1;x2]", "y1", "x1]", "[x1,x2]]", "[,x1]", "[x1,]"],
    )
    def test_malformed_words_rejected(self, text):
        with pytest.raises(ParseError):
            parse_ocw(text)

    @pytest.mark.parametrize("text", ["x2", "[x1,x1]", "[x2,x1]", "[[x1,x3],x2]"])
    def test_variable_order_enforced(self, text):
        with pytest.raises(VariableError):
            parse_ocw(text)

    def test_variable_error_is_a_parse_error(self):
        with pytest.raises(ParseError):
            parse_ocw("[x1,x1]")


class TestConstruction:
    def test_leaf_and_bracket(self):
        w = bracket(leaf(1), bracket(leaf(2), leaf(3)))
        assert w.weight == 3
        assert w.text() == "[x1,[x2,x3]]"

    def test_node_must_be_leaf_or_bracket(self):
        with pytest.raises(ValueError):
            OuterCommutatorWord()
        with pytest.raises(ValueError):
            OuterCommutatorWord(var=1, left=leaf(1), right=leaf(2))


class TestVerbalSubgroups:
    def test_identity_word_returns_argument(self):
        g = symmetric(3)
        assert verbal_subgroup(g, leaf(1), [A3]) == A3

    def test_commutator_of_abelian_group_is_trivial(self):
        g = cyclic(6)
        w = parse_ocw("[x1,x2]")
        assert verbal_subgroup(g, w, [g.elements, g.elements]) == g.trivial

    def test_derived_subgroup_of_s3(self):
        g = symmetric(3)
        w = parse_ocw("[x1,x2]")
        assert verbal_subgroup(g, w, [g.elements, g.elements]) == A3

    def test_weight_four_word_on_s3(self):
        # [[S3,S3],[S3,S3]] = [A3,A3] = 1
        g = symmetric(3)
        w = parse_ocw("[[x1,x2],[x3,x4]]")
        assert verbal_subgroup(g, w, [g.elements] * 4) == g.trivial

    def test_slots_are_positional(self):
        g = symmetric(3)
        w = parse_ocw("[x1,x2]")
        assert verbal_subgroup(g, w, [A3, g.trivial]) == g.trivial
        assert verbal_subgroup(g, w, [g.elements, A3]) == A3

    def test_arity_mismatch(self):
        g = symmetric(3)
        with pytest.raises(ArityMismatch):
            verbal_subgroup(g, parse_ocw("[x1,x2]"), [A3])

    def test_non_normal_argument_rejected(self):
        g = symmetric(3)
        with pytest.raises(NotNormal):
            verbal_subgroup(g, parse_ocw("[x1,x2]"), [A3, frozenset({0, 1})])

    @pytest.mark.parametrize("g", [symmetric(3), dihedral(4)], ids=lambda g: g.name)
    def test_distributes_over_subgroup_products(self, g):
        # w(A*B, K) = w(A, K) * w(B, K), the law behind slot composition
        w = parse_ocw("[x1,x2]")
        normals = normal_subgroups(g)
        for a in normals:
            for b in normals:
                for k in normals:
                    joined = verbal_subgroup(g, w, [product_set(g, a, b), k])
                    split = product_set(
                        g,
                        verbal_subgroup(g, w, [a, k]),
                        verbal_subgroup(g, w, [b, k]),
                    )
                    assert joined == split

    def test_result_is_normal(self):
        from invariantize.groups.model import is_normal

        g = dihedral(6)
        w = parse_ocw("[[x1,x2],x3]")
        for n in normal_subgroups(g):
            value = verbal_subgroup(g, w, [n, g.elements, n])
            assert is_normal(g, value)
