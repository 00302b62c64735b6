"""Tiny relation-word language for printed presentations.

Grammar (ASCII rendering of the source presentations):

    relations := chain (',' chain)*
    chain     := expr ('=' expr)+          -- pairwise equations
    expr      := term ('*' term)*
    term      := atom ('^' int)?           -- int may be negative
    atom      := '1' | letter | '[' expr ',' expr ']'

Letters range over a..e.  Evaluation happens against a Group engine and
an assignment letter -> element index.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import numpy as np

LETTERS = "abcde"


class Node:
    __slots__ = ()


class Gen(Node):
    __slots__ = ("letter",)

    def __init__(self, letter):
        self.letter = letter


class One(Node):
    __slots__ = ()


class Pow(Node):
    __slots__ = ("base", "exp")

    def __init__(self, base, exp):
        self.base = base
        self.exp = exp


class Mul(Node):
    __slots__ = ("factors",)

    def __init__(self, factors):
        self.factors = factors


class Comm(Node):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise ValueError(f"expected {ch!r} at {self.pos} in {self.text!r}")
        self.pos += 1

    def parse_int(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected integer at {start} in {self.text!r}")
        return int(self.text[start : self.pos])

    def parse_atom(self) -> Node:
        ch = self.peek()
        if ch == "1":
            self.pos += 1
            return One()
        if ch == "[":
            self.take("[")
            left = self.parse_expr()
            self.take(",")
            right = self.parse_expr()
            self.take("]")
            return Comm(left, right)
        if ch in LETTERS:
            self.pos += 1
            return Gen(ch)
        raise ValueError(f"unexpected {ch!r} at {self.pos} in {self.text!r}")

    def parse_term(self) -> Node:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.take("^")
            return Pow(atom, self.parse_int())
        return atom

    def parse_expr(self) -> Node:
        factors = [self.parse_term()]
        while self.peek() == "*":
            self.take("*")
            factors.append(self.parse_term())
        return factors[0] if len(factors) == 1 else Mul(factors)

    def parse_chain(self) -> List[Node]:
        exprs = [self.parse_expr()]
        while self.peek() == "=":
            self.take("=")
            exprs.append(self.parse_expr())
        if len(exprs) < 2:
            raise ValueError(f"no '=' in relation chain {self.text!r}")
        return exprs


def parse_relations(text: str) -> List[Tuple[Node, Node]]:
    """Equations (lhs, rhs) from a comma-separated relation string."""
    eqs: List[Tuple[Node, Node]] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        # commas inside [..] were split; re-join
        while chunk.count("[") != chunk.count("]"):
            raise ValueError("use parse_relation_list for comma-safe parsing")
        exprs = _Parser(chunk).parse_chain()
        for a, b in zip(exprs, exprs[1:]):
            eqs.append((a, b))
    return eqs


def split_relations(text: str) -> List[str]:
    """Split on top-level commas only (commas inside [..] are argument
    separators)."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [s.strip() for s in parts if s.strip()]


def parse_presentation(text: str) -> List[Tuple[Node, Node]]:
    eqs: List[Tuple[Node, Node]] = []
    for chunk in split_relations(text):
        exprs = _Parser(chunk).parse_chain()
        for a, b in zip(exprs, exprs[1:]):
            eqs.append((a, b))
    return eqs


def letters_of(text: str) -> List[str]:
    seen = [ch for ch in LETTERS if ch in text.replace(" ", "")]
    return seen


def eval_node(node: Node, group, env: Dict[str, int]) -> Optional[int]:
    """Evaluate to an element index, or None if an unbound letter occurs."""
    if isinstance(node, One):
        return group.identity
    if isinstance(node, Gen):
        return env.get(node.letter)
    if isinstance(node, Pow):
        base = eval_node(node.base, group, env)
        return None if base is None else group.pow(base, node.exp)
    if isinstance(node, Mul):
        acc = group.identity
        for f in node.factors:
            v = eval_node(f, group, env)
            if v is None:
                return None
            acc = group.mul(acc, v)
        return acc
    if isinstance(node, Comm):
        left = eval_node(node.left, group, env)
        right = eval_node(node.right, group, env)
        if left is None or right is None:
            return None
        return group.comm(left, right)
    raise TypeError(node)


def eval_node_vec(node: Node, group, env: Dict[str, np.ndarray]) -> np.ndarray:
    """Vectorized evaluation; every env entry is an index array."""
    if isinstance(node, One):
        return np.zeros_like(next(iter(env.values())))
    if isinstance(node, Gen):
        return env[node.letter]
    if isinstance(node, Pow):
        return group.pow_vec(eval_node_vec(node.base, group, env), node.exp)
    if isinstance(node, Mul):
        acc = None
        for f in node.factors:
            v = eval_node_vec(f, group, env)
            acc = v if acc is None else group.mul_vec(acc, v)
        return acc
    if isinstance(node, Comm):
        return group.comm_vec(
            eval_node_vec(node.left, group, env), eval_node_vec(node.right, group, env)
        )
    raise TypeError(node)


def power_bound(text: str, letter: str) -> Optional[int]:
    """The exponent N from an explicit relation chain `letter^N = ... = 1`,
    used to prefilter generator candidates by element order."""
    for chunk in split_relations(text):
        exprs = _Parser(chunk).parse_chain()
        nodes = exprs
        if not any(isinstance(e, One) for e in nodes):
            continue
        for e in nodes:
            if isinstance(e, Pow) and isinstance(e.base, Gen) and e.base.letter == letter:
                if e.exp > 0:
                    return e.exp
            if isinstance(e, Gen) and e.letter == letter:
                return 1
    return None
