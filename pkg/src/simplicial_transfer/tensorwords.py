"""Formal tensor words over a graded vector space and the sign machinery.

Letters carry the degree used in every sign computation; for concrete
carriers (forms, cochains) that is the shifted degree, form or cochain
degree minus one.  Words are tuples of letters, and formal sums of words
(or of tuples of words, for split tensors) live in :class:`TensorSum`.

The Koszul rule is the single source of signs: moving an odd operator past
an element of degree d costs (-1)^d.  The shuffle product, the splitting
maps, and the span membership oracle for split shuffles are all built on
words; the membership oracle is the finite linear-algebra instance of the
statement that splitting a shuffle yields outer shuffles of groupings plus
terms with a shuffle inside one slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Any, Callable, Sequence

__all__ = [
    "Homog",
    "TensorSum",
    "koszul_sign",
    "koszul_apply",
    "shuffle",
    "outer_shuffle",
    "deconcatenations",
    "compositions",
    "shuffle_span_membership",
    "formal_word",
]


@dataclass(frozen=True)
class Homog:
    """A homogeneous letter: a carrier plus the degree that drives signs."""

    carrier: Any
    degree: int

    def __repr__(self) -> str:
        return f"{self.carrier}:{self.degree}"


Word = tuple  # tuple[Homog, ...]


def formal_word(names: str | Sequence[str], degrees: Sequence[int]) -> Word:
    """Build a word of formal letters, e.g. formal_word("ab", (0, 1))."""
    if len(names) != len(degrees):
        raise ValueError("one degree per letter")
    return tuple(Homog(n, d) for n, d in zip(names, degrees))


class TensorSum:
    """Sparse rational combination of hashable keys (words or word tuples)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Any, Fraction] = {}
        if terms:
            for key, coeff in (terms.items() if isinstance(terms, dict) else terms):
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                new = clean.get(key, Fraction(0)) + coeff
                if new == 0:
                    clean.pop(key, None)
                else:
                    clean[key] = new
        self.terms = clean

    def __add__(self, other: "TensorSum") -> "TensorSum":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, Fraction(0)) + coeff
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
        return TensorSum(out)

    def __neg__(self) -> "TensorSum":
        return TensorSum({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorSum") -> "TensorSum":
        return self + (-other)

    def __rmul__(self, scalar) -> "TensorSum":
        scalar = Fraction(scalar)
        if scalar == 0:
            return TensorSum()
        return TensorSum({k: scalar * c for k, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def items(self):
        return self.terms.items()

    def __repr__(self) -> str:
        if not self.terms:
            return "TensorSum(0)"
        return "TensorSum(" + " + ".join(f"{c}*{k}" for k, c in self.terms.items()) + ")"


def koszul_sign(parities: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign for slotwise application: (-1)^(sum_{i<j} parity_j * degree_i)."""
    exponent = 0
    for i in range(len(degrees)):
        if degrees[i] % 2 == 0:
            continue
        for j in range(i + 1, len(parities)):
            exponent += parities[j]
    return -1 if exponent % 2 else 1


def koszul_apply(
    operators: Sequence[tuple[Callable[[Homog], Any], int]], word: Word
) -> TensorSum:
    """Apply one operator per letter with the Koszul sign.

    Each operator is a pair (fn, parity); fn maps a letter to a letter or to
    an iterable of (coefficient, letter) pairs.
    """
    if len(operators) != len(word):
        raise ValueError("arity mismatch: one operator per letter")
    sign = koszul_sign([p for _, p in operators], [a.degree for a in word])
    slots: list[list[tuple[Fraction, Homog]]] = []
    for (fn, _), letter in zip(operators, word):
        image = fn(letter)
        if isinstance(image, Homog):
            slots.append([(Fraction(1), image)])
        else:
            slots.append([(Fraction(c), h) for c, h in image])
    out = TensorSum()
    for combo in product(*slots):
        coeff = Fraction(sign)
        for c, _ in combo:
            coeff *= c
        out = out + TensorSum({tuple(h for _, h in combo): coeff})
    return out


def _interleavings(p: int, q: int):
    return combinations(range(p + q), p)


def _shuffle_terms(u: Sequence, v: Sequence, degree_of: Callable[[Any], int]):
    """Yield (sign, merged tuple) over all order-preserving interleavings."""
    p, q = len(u), len(v)
    vdeg = [degree_of(x) for x in v]
    udeg = [degree_of(x) for x in u]
    for upos in _interleavings(p, q):
        upos_set = set(upos)
        merged: list = []
        exponent = 0
        ui = vi = 0
        seen_v_degree = 0
        for slot in range(p + q):
            if slot in upos_set:
                exponent += udeg[ui] * seen_v_degree
                merged.append(u[ui])
                ui += 1
            else:
                seen_v_degree += vdeg[vi]
                merged.append(v[vi])
                vi += 1
        yield (-1 if exponent % 2 else 1), tuple(merged)


def shuffle(u: Word, v: Word) -> TensorSum:
    """Shuffle product of two words; the sign counts inversions weighted by
    the letter degrees."""
    out: dict[Word, Fraction] = {}
    for sign, merged in _shuffle_terms(u, v, lambda h: h.degree):
        new = out.get(merged, Fraction(0)) + sign
        if new == 0:
            out.pop(merged, None)
        else:
            out[merged] = new
    return TensorSum(out)


def word_degree(word: Word) -> int:
    return sum(h.degree for h in word)


def outer_shuffle(xs: Sequence[Word], ys: Sequence[Word]) -> TensorSum:
    """Shuffle two tuples of words as words-of-words; each inner word acts as
    a single letter whose degree is the sum of its letters' degrees."""
    out: dict[tuple, Fraction] = {}
    for sign, merged in _shuffle_terms(tuple(xs), tuple(ys), word_degree):
        new = out.get(merged, Fraction(0)) + sign
        if new == 0:
            out.pop(merged, None)
        else:
            out[merged] = new
    return TensorSum(out)


def compositions(n: int, k: int):
    """Ordered tuples of k positive integers summing to n."""
    if k < 1 or k > n:
        return
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def deconcatenations(word: Word, k: int) -> TensorSum:
    """Sum of all splittings of a word into k nonempty blocks; no signs."""
    n = len(word)
    if not 1 <= k <= n:
        raise ValueError(f"cannot split a word of length {n} into {k} blocks")
    out: dict[tuple, Fraction] = {}
    for comp in compositions(n, k):
        blocks = []
        start = 0
        for size in comp:
            blocks.append(word[start : start + size])
            start += size
        out[tuple(blocks)] = out.get(tuple(blocks), Fraction(0)) + 1
    return TensorSum(out)


# -- span membership for split shuffles ----------------------------------


def _letter_key(h: Homog):
    return (str(h.carrier), h.degree)


def _grouped_key(grouped: tuple) -> tuple:
    return tuple(tuple(_letter_key(h) for h in word) for word in grouped)


def _sorted_vec(ts: TensorSum) -> dict:
    return {_grouped_key(k): c for k, c in ts.items()}


def _multiset_splits(letters: tuple, parts: int):
    """All ways to distribute distinct letters into `parts` nonempty ordered
    groups (as tuples of sub-multisets, order inside a group not yet fixed)."""
    for assignment in product(range(parts), repeat=len(letters)):
        groups = [[] for _ in range(parts)]
        for letter, slot in zip(letters, assignment):
            groups[slot].append(letter)
        if all(groups):
            yield tuple(tuple(g) for g in groups)


def _arrangements(letters: tuple):
    return sorted(set(permutations(letters)), key=repr)


def _span_generators(letters: tuple, k: int) -> list[dict]:
    """Spanning set of the target subspace inside k-fold split tensors over
    the given letters: outer shuffles of groupings, plus split tensors with a
    shuffle in one slot."""
    gens: list[dict] = []
    # (a) outer shuffles of a p-block and a q-block grouping, p + q = k
    for p in range(1, k):
        q = k - p
        for assignment in product(range(2), repeat=len(letters)):
            left = tuple(l for l, a in zip(letters, assignment) if a == 0)
            right = tuple(l for l, a in zip(letters, assignment) if a == 1)
            if len(left) < p or len(right) < q:
                continue
            for lgroups in _multiset_splits(left, p):
                for rgroups in _multiset_splits(right, q):
                    for lwords in product(*(_arrangements(g) for g in lgroups)):
                        for rwords in product(*(_arrangements(g) for g in rgroups)):
                            vec = _sorted_vec(outer_shuffle(lwords, rwords))
                            if vec:
                                gens.append(vec)
    # (b) split tensors with one slot an inner shuffle
    for groups in _multiset_splits(letters, k):
        for j in range(k):
            slot = groups[j]
            if len(slot) < 2:
                continue
            for cut in product(range(2), repeat=len(slot)):
                u = tuple(l for l, a in zip(slot, cut) if a == 0)
                v = tuple(l for l, a in zip(slot, cut) if a == 1)
                if not u or not v:
                    continue
                for uw in _arrangements(u):
                    for vw in _arrangements(v):
                        inner = shuffle(uw, vw)
                        for others in product(
                            *(
                                _arrangements(g) if i != j else ((),)
                                for i, g in enumerate(groups)
                            )
                        ):
                            vec: dict = {}
                            for word, coeff in inner.items():
                                grouped = tuple(
                                    word if i == j else others[i] for i in range(k)
                                )
                                key = _grouped_key(grouped)
                                vec[key] = vec.get(key, Fraction(0)) + coeff
                            vec = {kk: c for kk, c in vec.items() if c}
                            if vec:
                                gens.append(vec)
    return gens


def _reduce(vec: dict, pivots: dict) -> dict:
    vec = {k: c for k, c in vec.items() if c}
    while True:
        hit = None
        for key in vec:
            if key in pivots:
                if hit is None or key > hit:
                    hit = key
        if hit is None:
            return vec
        coeff = vec[hit]
        for key, c in pivots[hit].items():
            new = vec.get(key, Fraction(0)) - coeff * c
            if new == 0:
                vec.pop(key, None)
            else:
                vec[key] = new


def _echelon_insert(vec: dict, pivots: dict) -> None:
    vec = _reduce(vec, pivots)
    if not vec:
        return
    pivot = max(vec)
    inv = 1 / vec[pivot]
    pivots[pivot] = {k: c * inv for k, c in vec.items()}


def shuffle_span_membership(x: TensorSum, max_letters: int = 5) -> bool:
    """Decide whether a sum of k-fold split words lies in the span of outer
    shuffles of groupings plus split words with a shuffled slot.

    Works over formal letters (string carriers).  All terms must share one
    block count k and one letter multiset; at most ``max_letters`` letters.
    """
    if not x:
        return True
    keys = list(x.terms)
    k = len(keys[0])
    if any(len(key) != k for key in keys):
        raise ValueError("terms must share the block count")
    letters = tuple(sorted((h for w in keys[0] for h in w), key=_letter_key))
    if len(letters) > max_letters:
        raise ValueError(f"instance too large: more than {max_letters} letters")
    for key in keys:
        flat = tuple(sorted((h for w in key for h in w), key=_letter_key))
        if flat != letters:
            raise ValueError("terms must share the letter multiset")
    pivots: dict = {}
    for gen in _span_generators(letters, k):
        _echelon_insert(gen, pivots)
    return not _reduce(_sorted_vec(x), pivots)
