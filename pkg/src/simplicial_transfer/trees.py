"""Rooted planar trees with all vertices of arity >= 2, and their evaluation
as operations.

A tree with n leaves encodes an n-ary operation: leaves receive the
inclusion g, each internal vertex of arity k receives the k-ary product of
the algebra side, each interior edge receives the homotopy H, and the root
receives either the projection f (product operations) or H (morphism
operations).  Reading from the leaves to the root with Koszul signs at every
slotwise application yields the operation.

Trees are stored as nested children tuples; the preorder arity sequence is a
canonical encoding, unique per planar isomorphism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .tensorwords import Homog, compositions, koszul_sign

__all__ = [
    "PlanarTree",
    "LEAF",
    "enumerate_trees",
    "tree_count",
    "path_trees",
    "tree_to_text",
    "tree_from_text",
    "evaluate_tree_m",
    "evaluate_tree_G",
]


@dataclass(frozen=True)
class PlanarTree:
    children: tuple["PlanarTree", ...] = ()

    def __post_init__(self):
        if len(self.children) == 1:
            raise ValueError("internal vertices need arity >= 2")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def n_leaves(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.n_leaves for child in self.children)

    def encoding(self) -> tuple[int, ...]:
        """Preorder arity sequence; leaves contribute 0."""
        if self.is_leaf:
            return (0,)
        out: tuple[int, ...] = (len(self.children),)
        for child in self.children:
            out += child.encoding()
        return out

    def __repr__(self) -> str:
        return f"PlanarTree({tree_to_text(self)!r})"


LEAF = PlanarTree()


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[PlanarTree, ...]:
    """All planar trees with n leaves and every vertex of arity >= 2, in a
    deterministic order without duplicates."""
    if n < 1:
        raise ValueError("need at least one leaf")
    if n == 1:
        return (LEAF,)
    out: list[PlanarTree] = []
    for k in range(2, n + 1):
        for comp in compositions(n, k):
            for kids in product(*(enumerate_trees(m) for m in comp)):
                out.append(PlanarTree(kids))
    return tuple(out)


def tree_count(n: int) -> int:
    return len(enumerate_trees(n))


def path_trees(n_plus_1: int, position: int) -> tuple[PlanarTree, ...]:
    """Binary trees with n_plus_1 leaves whose path from the given leaf
    (1-indexed) to the root passes through every internal vertex.

    Such trees correspond to words of length n in {left, right} with
    position-1 "right" steps: walking from the distinguished leaf down to the
    root, each vertex hangs one extra leaf on the other side.
    """
    if not 1 <= position <= n_plus_1:
        raise ValueError("leaf position out of range")
    n = n_plus_1 - 1
    if n == 0:
        return (LEAF,)
    i = position - 1
    out = []
    for right_steps in combinations(range(n), i):
        rset = set(right_steps)
        tree = LEAF
        for step in range(n):
            tree = PlanarTree((LEAF, tree)) if step in rset else PlanarTree((tree, LEAF))
        out.append(tree)
    return tuple(out)


def tree_to_text(tree: PlanarTree) -> str:
    if tree.is_leaf:
        return "*"
    return "(" + " ".join(tree_to_text(c) for c in tree.children) + ")"


def tree_from_text(text: str) -> PlanarTree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> PlanarTree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of tree text")
        token = tokens[pos]
        pos += 1
        if token == "*":
            return LEAF
        if token != "(":
            raise ValueError(f"unexpected token {token!r}")
        kids = []
        while pos < len(tokens) and tokens[pos] != ")":
            kids.append(parse())
        if pos >= len(tokens):
            raise ValueError("unbalanced parentheses")
        pos += 1
        return PlanarTree(tuple(kids))

    tree = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens after tree")
    return tree


# -- evaluation ----------------------------------------------------------


def _split_word(tree: PlanarTree, word: tuple):
    blocks = []
    start = 0
    for child in tree.children:
        size = child.n_leaves
        blocks.append(word[start : start + size])
        start += size
    return blocks


def _eval_vertex(tree: PlanarTree, word: tuple[Homog, ...], bundle):
    """Value of the subtree composite up to (not including) the map attached
    to the outgoing edge; returns (parity, degree, value)."""
    blocks = _split_word(tree, word)
    parities: list[int] = []
    in_degrees: list[int] = []
    out_degrees: list[int] = []
    values = []
    for child, block in zip(tree.children, blocks):
        block_degree = sum(h.degree for h in block)
        in_degrees.append(block_degree)
        if child.is_leaf:
            parities.append(0)
            out_degrees.append(block_degree)
            values.append(bundle.g(block[0].carrier))
        else:
            # interior edge: H caps the child vertex
            child_parity, child_degree, child_value = _eval_vertex(child, block, bundle)
            parities.append((child_parity + 1) % 2)
            out_degrees.append(child_degree - 1)
            values.append(bundle.H(child_value))
    sign = koszul_sign(parities, in_degrees) if bundle.koszul_signs else 1
    value = bundle.m_A(out_degrees, values)
    if sign != 1:
        value = sign * value
    parity = (1 + sum(parities)) % 2
    return parity, sum(out_degrees) + 1, value


def _check_inputs(tree: PlanarTree, word) -> None:
    if len(word) != tree.n_leaves:
        raise ValueError("arity mismatch: word length must equal the leaf count")
    if tree.is_leaf:
        raise ValueError("a single leaf carries no vertex operation")


def evaluate_tree_m(tree: PlanarTree, word: tuple[Homog, ...], bundle):
    """The operation of a tree with f at the root, on a word of cochain
    letters; returns a cochain."""
    _check_inputs(tree, word)
    _, _, value = _eval_vertex(tree, word, bundle)
    return bundle.f(value)


def evaluate_tree_G(tree: PlanarTree, word: tuple[Homog, ...], bundle):
    """The same composite with H at the root; returns an algebra-side value."""
    _check_inputs(tree, word)
    _, _, value = _eval_vertex(tree, word, bundle)
    return bundle.H(value)
