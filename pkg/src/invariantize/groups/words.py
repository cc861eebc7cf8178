"""Outer commutator words: parsing and verbal subgroup evaluation.

A word is a binary bracket tree whose leaves, read left to right, are the
distinct variables x1..xt.  Evaluated on normal subgroups, a bracket node
yields the subgroup generated by all commutators between its two sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import ArityMismatch, InvariantViolation, NotNormal, ParseError, VariableError
from .model import FiniteGroup, commutator_subgroup, is_normal


@dataclass(frozen=True)
class OuterCommutatorWord:
    """Either a leaf (``var`` set, 1-based) or a bracket (both sides set)."""

    var: int | None = None
    left: "OuterCommutatorWord | None" = None
    right: "OuterCommutatorWord | None" = None

    def __post_init__(self) -> None:
        leaf = self.var is not None
        node = self.left is not None and self.right is not None
        if leaf == node:
            raise ValueError("word is either a leaf or a bracket of two words")

    @property
    def weight(self) -> int:
        if self.var is not None:
            return 1
        return self.left.weight + self.right.weight

    def leaves(self) -> list[int]:
        if self.var is not None:
            return [self.var]
        return self.left.leaves() + self.right.leaves()

    def text(self) -> str:
        if self.var is not None:
            return f"x{self.var}"
        return f"[{self.left.text()},{self.right.text()}]"


def leaf(i: int) -> OuterCommutatorWord:
    return OuterCommutatorWord(var=i)


def bracket(u: OuterCommutatorWord, v: OuterCommutatorWord) -> OuterCommutatorWord:
    return OuterCommutatorWord(left=u, right=v)


def parse_ocw(text: str) -> OuterCommutatorWord:
    """Parse ``W ::= xINT | [W,W]``; variables must read x1..xt left to right."""
    s = "".join(text.split())
    pos = 0

    def fail(msg: str) -> ParseError:
        return ParseError(f"{msg} at position {pos} in {text!r}")

    def parse_word() -> OuterCommutatorWord:
        nonlocal pos
        if pos >= len(s):
            raise fail("unexpected end of word")
        if s[pos] == "[":
            pos += 1
            left = parse_word()
            if pos >= len(s) or s[pos] != ",":
                raise fail("expected ','")
            pos += 1
            right = parse_word()
            if pos >= len(s) or s[pos] != "]":
                raise fail("expected ']'")
            pos += 1
            return bracket(left, right)
        if s[pos] == "x":
            pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if start == pos:
                raise fail("expected a variable index")
            return leaf(int(s[start:pos]))
        raise fail(f"unexpected character {s[pos]!r}")

    word = parse_word()
    if pos != len(s):
        raise fail("trailing input")
    seen = word.leaves()
    if seen != list(range(1, len(seen) + 1)):
        raise VariableError(
            f"variables must be x1..x{len(seen)} in left-to-right order, got "
            + ", ".join(f"x{i}" for i in seen)
        )
    return word


def verbal_subgroup(
    g: FiniteGroup,
    word: OuterCommutatorWord,
    args: Sequence[frozenset[int]],
) -> frozenset[int]:
    """Evaluate the word on normal subgroups; the result is again normal."""
    if len(args) != word.weight:
        raise ArityMismatch(
            f"word of weight {word.weight} applied to {len(args)} subgroups"
        )
    for i, a in enumerate(args):
        if not is_normal(g, a):
            raise NotNormal(f"argument {i + 1} is not a normal subgroup")

    def evaluate(w: OuterCommutatorWord, offset: int) -> frozenset[int]:
        if w.var is not None:
            return frozenset(args[offset])
        lw = w.left.weight
        left_val = evaluate(w.left, offset)
        right_val = evaluate(w.right, offset + lw)
        value = commutator_subgroup(g, left_val, right_val)
        if not is_normal(g, value):
            raise InvariantViolation("bracket of normal subgroups came out non-normal")
        return value

    return evaluate(word, 0)
