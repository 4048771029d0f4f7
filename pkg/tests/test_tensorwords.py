from fractions import Fraction
from itertools import product

import pytest

from simplicial_transfer.tensorwords import (
    Homog,
    TensorSum,
    compositions,
    deconcatenations,
    formal_word,
    koszul_apply,
    koszul_sign,
    shuffle,
    shuffle_span_membership,
)


def word_names(word):
    return tuple(h.carrier for h in word)


def test_koszul_sign_basics():
    assert koszul_sign([0, 0, 0], [1, 1, 1]) == 1
    # one odd operator in the second slot passing one odd element
    assert koszul_sign([0, 1], [1, 0]) == -1
    assert koszul_sign([1, 0], [0, 1]) == 1


def test_koszul_apply_examples():
    a = Homog("a", 1)
    b = Homog("b", 0)
    ident = lambda h: h
    cap = lambda h: Homog(f"H{h.carrier}", h.degree - 1)
    # parity-0 operators never produce a sign
    out = koszul_apply([(ident, 0), (ident, 0)], (a, b))
    assert out == TensorSum({(a, b): Fraction(1)})
    # an odd operator in the second slot passes the odd letter a
    out = koszul_apply([(ident, 0), (cap, 1)], (a, b))
    assert out == TensorSum({(a, Homog("Hb", -1)): Fraction(-1)})
    # an odd operator in the first slot passes nothing
    out = koszul_apply([(cap, 1), (ident, 0)], (a, b))
    assert out == TensorSum({(Homog("Ha", 0), b): Fraction(1)})
    with pytest.raises(ValueError):
        koszul_apply([(ident, 0)], (a, b))


def test_koszul_apply_composes():
    # slotwise application of composites equals the two applications in
    # sequence, up to the interchange sign (-1)^{sum_{i<j} |phi_j||psi_i|};
    # each operator's degree shift must agree with its parity mod 2
    letters = (Homog("a", 1), Homog("b", 2), Homog("c", 0))
    for p_phi, p_psi in product((0, 1), repeat=2):
        phi = lambda h, s=p_phi: Homog(f"P{h.carrier}", h.degree + s)
        psi = lambda h, s=p_psi: Homog(f"Q{h.carrier}", h.degree + s - 2)
        once = koszul_apply(
            [(lambda h: phi(psi(h)), (p_phi + p_psi) % 2)] * 3, letters
        )
        first = koszul_apply([(psi, p_psi)] * 3, letters)
        total = TensorSum()
        for word, coeff in first.items():
            total = total + coeff * koszul_apply([(phi, p_phi)] * 3, word)
        interchange = koszul_sign([p_phi] * 3, [p_psi] * 3)
        assert once == interchange * total


def test_shuffle_two_letters():
    for da, db in product((-1, 0, 1), repeat=2):
        u = formal_word("a", (da,))
        v = formal_word("b", (db,))
        out = shuffle(u, v)
        sign = -1 if (da * db) % 2 else 1
        expected = TensorSum(
            {(u[0], v[0]): Fraction(1), (v[0], u[0]): Fraction(sign)}
        )
        assert out == expected


def test_shuffle_displayed_example():
    # a1 a2 sh a3 = a1a2a3 + (-1)^{|a2||a3|} a1a3a2 + (-1)^{(|a1|+|a2|)|a3|} a3a1a2
    d = {"a": 1, "b": 1, "c": 1}
    u = formal_word("ab", (d["a"], d["b"]))
    v = formal_word("c", (d["c"],))
    out = shuffle(u, v)
    a, b = u
    (c,) = v
    assert out == TensorSum(
        {(a, b, c): 1, (a, c, b): -1, (c, a, b): 1}
    )


def test_shuffle_term_count():
    u = formal_word("ab", (0, 0))
    v = formal_word("cd", (0, 0))
    assert len(shuffle(u, v).terms) == 6


def test_shuffle_graded_commutative_and_associative():
    degrees = (-1, 0, 1)
    for d in product(degrees, repeat=3):
        a = formal_word("a", d[:1])
        b = formal_word("b", d[1:2])
        c = formal_word("c", d[2:])
        ab = shuffle(a, b)
        # commutativity on single letters and on a pair against a letter
        sign = -1 if (d[0] * d[1]) % 2 else 1
        assert ab == sign * shuffle(b, a)
        pair = formal_word("ab", d[:2])
        pair_sign = -1 if ((d[0] + d[1]) * d[2]) % 2 else 1
        assert shuffle(pair, c) == pair_sign * shuffle(c, pair)
        # associativity: shuffle of shuffles agree termwise
        left = TensorSum()
        for w, coeff in ab.items():
            left = left + coeff * shuffle(w, c)
        right = TensorSum()
        for w, coeff in shuffle(b, c).items():
            right = right + coeff * shuffle(a, w)
        assert left == right


def test_compositions():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(compositions(4, 1)) == [(4,)]
    assert list(compositions(2, 3)) == []


def test_deconcatenations():
    w = formal_word("ab", (0, 1))
    out = deconcatenations(w, 2)
    assert set(out.terms) == {((w[0],), (w[1],))}
    w3 = formal_word("abc", (0, 0, 0))
    out = deconcatenations(w3, 2)
    assert {tuple(map(word_names, key)) for key in out.terms} == {
        (("a",), ("b", "c")),
        (("a", "b"), ("c",)),
    }
    out = deconcatenations(w3, 3)
    assert {tuple(map(word_names, key)) for key in out.terms} == {
        (("a",), ("b",), ("c",))
    }
    with pytest.raises(ValueError):
        deconcatenations(w, 3)


def nabla_of_shuffle(u, v, k):
    total = TensorSum()
    for word, coeff in shuffle(u, v).items():
        if len(word) >= k:
            total = total + coeff * deconcatenations(word, k)
    return total


def test_membership_examples():
    a = formal_word("a", (0,))
    b = formal_word("b", (1,))
    assert shuffle_span_membership(nabla_of_shuffle(a, b, 2))
    ab = formal_word("ab", (0, 1))
    c = formal_word("c", (-1,))
    assert shuffle_span_membership(nabla_of_shuffle(ab, c, 2))
    generic = TensorSum({(a, b): Fraction(1)})
    assert not shuffle_span_membership(generic)


def test_membership_rejects_oversize():
    letters = formal_word("abcdef", (0,) * 6)
    bad = TensorSum({(letters[:3], letters[3:]): Fraction(1)})
    with pytest.raises(ValueError):
        shuffle_span_membership(bad)


def test_membership_small_sweep():
    # shuffles of two short words always split into the spanned subspace
    shapes = [(1, 1), (1, 2), (2, 1)]
    degrees = (-1, 0, 1)
    names = "abcd"
    for p, q in shapes:
        total = p + q
        for ds in product(degrees, repeat=total):
            u = formal_word(names[:p], ds[:p])
            v = formal_word(names[p : p + q], ds[p:])
            for k in range(2, min(3, total) + 1):
                assert shuffle_span_membership(nabla_of_shuffle(u, v, k))
