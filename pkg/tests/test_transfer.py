from fractions import Fraction
from itertools import product

import pytest

from simplicial_transfer.cochains import (
    Cochain,
    interval_basis_components,
    unit_cochain,
)
from simplicial_transfer.forms import parse_form
from simplicial_transfer.rationals import UniPoly, bernoulli_number, factorial
from simplicial_transfer.tensorwords import Homog
from simplicial_transfer.transfer import (
    SimplexContraction,
    check_a_infinity,
    check_c_infinity,
    check_morphism,
    check_unital,
    interval_product_table,
    morphism_G,
    p_polynomial_sequence,
    transferred_m,
    transferred_m_trees,
)
from simplicial_transfer.trees import evaluate_tree_m, path_trees


def interval_letters():
    t = Homog(Cochain.basis_element(1, (1,)), -1)
    dt = Homog(Cochain.basis_element(1, (0, 1)), 0)
    return t, dt


def dt_coefficient(cochain):
    one, t, dt = interval_basis_components(cochain)
    assert one == 0 and t == 0
    return dt


def test_arity_one_is_the_coboundary():
    bundle = SimplexContraction(1)
    x0 = Homog(Cochain.basis_element(1, (0,)), -1)
    assert transferred_m(bundle, (x0,)) == -1 * Cochain.basis_element(1, (0, 1))


def test_binary_product_on_interval():
    bundle = SimplexContraction(1)
    t, dt = interval_letters()
    assert transferred_m(bundle, (t, t)) == Cochain.basis_element(1, (1,))
    assert dt_coefficient(transferred_m(bundle, (t, dt))) == Fraction(1, 2)
    assert dt_coefficient(transferred_m(bundle, (dt, t))) == Fraction(-1, 2)


def test_ternary_product_reproduces_b2():
    bundle = SimplexContraction(1)
    t, dt = interval_letters()
    assert dt_coefficient(transferred_m(bundle, (t, dt, dt))) == Fraction(1, 12)
    assert not transferred_m(bundle, (t, t, dt))
    assert not transferred_m(bundle, (t, dt, dt, dt))


def test_morphism_components():
    bundle = SimplexContraction(1)
    t, dt = interval_letters()
    assert morphism_G(bundle, (dt,)) == parse_form("dt1", 1)
    assert not morphism_G(bundle, (t, t))
    assert morphism_G(bundle, (t, dt)) == parse_form("1/2 t1 + -1/2 t1^2", 1)


def test_tree_sum_agrees_with_recursion():
    bundle = SimplexContraction(1)
    basis = bundle.b_basis()
    for n in range(1, 5):
        for word in product(basis, repeat=n):
            assert transferred_m(bundle, word) == transferred_m_trees(bundle, word)


def test_tree_sum_agrees_with_recursion_on_the_triangle():
    bundle = SimplexContraction(2)
    basis = bundle.b_basis()
    for n in range(1, 4):
        for word in product(basis, repeat=n):
            assert transferred_m(bundle, word) == transferred_m_trees(bundle, word)


def test_single_vertex_tree_matches_morphism_component():
    from simplicial_transfer.trees import enumerate_trees, evaluate_tree_G

    bundle = SimplexContraction(1)
    (two_leaf,) = enumerate_trees(2)
    t, dt = interval_letters()
    assert not evaluate_tree_G(two_leaf, (t, t), bundle)
    assert evaluate_tree_G(two_leaf, (t, dt), bundle) == parse_form(
        "1/2 t1 + -1/2 t1^2", 1
    )
    for a in bundle.b_basis():
        for b in bundle.b_basis():
            assert evaluate_tree_G(two_leaf, (a, b), bundle) == morphism_G(
                bundle, (a, b)
            )


def test_path_trees_carry_the_product():
    # on words dt^i, t, dt^(n-i) every contributing binary tree is a path
    # tree and contributes (-1)^i times the value on (t, dt, ..., dt)
    bundle = SimplexContraction(1)
    t, dt = interval_letters()
    for n in (1, 2, 4):
        base = transferred_m(bundle, (t,) + (dt,) * n)
        for i in range(n + 1):
            word = (dt,) * i + (t,) + (dt,) * (n - i)
            expected_sign = -1 if i % 2 else 1
            total = bundle.zero_B()
            for tree in path_trees(n + 1, i + 1):
                contribution = evaluate_tree_m(tree, word, bundle)
                assert contribution == expected_sign * base
                total = total + contribution
            assert total == transferred_m(bundle, word)


def test_structure_relations_interval():
    report = check_a_infinity(SimplexContraction(1), 4)
    assert report.all_passed, report.to_text()


def test_structure_relations_triangle():
    report = check_a_infinity(SimplexContraction(2), 3)
    assert report.all_passed, report.to_text()


def test_morphism_relations_interval():
    report = check_morphism(SimplexContraction(1), 3)
    assert report.all_passed, report.to_text()


def test_shuffle_vanishing_interval():
    report = check_c_infinity(SimplexContraction(1), 3)
    assert report.all_passed, report.to_text()


def test_unitality_interval():
    report = check_unital(SimplexContraction(1), 3)
    assert report.all_passed, report.to_text()
    bundle = SimplexContraction(1)
    assert bundle.unit_B() == unit_cochain(1)


def test_broken_signs_fail_with_counterexample():
    report = check_a_infinity(SimplexContraction(1, koszul_signs=False), 2)
    assert not report.all_passed
    failing = [c for c in report.checks if not c.passed]
    assert failing and failing[0].counterexample


def test_interval_table():
    table = interval_product_table(5)
    assert table.all_passed, table.to_text()
    lookup = {e["word"]: e["value"] for e in table.entries}
    assert lookup["t,t"] == "1 t"
    assert lookup["t,dt,dt"] == "1/12 dt"
    assert lookup["t,t,dt"] == "0"
    assert lookup["t,dt,dt,dt"] == "0"
    assert len(table.findings) == 2
    with pytest.raises(ValueError):
        interval_product_table(1)


def test_p_polynomials():
    seq = p_polynomial_sequence(8)
    assert seq.polys[0] == UniPoly((0, 1))
    assert seq.polys[1] == UniPoly((0, Fraction(-1, 2), Fraction(1, 2)))
    assert seq.matches_closed_form()
    assert seq.integral_identities()
    # b_2 = -(the raw integral of p_2) = 1/12 = B_2/2!
    assert seq.integrals[1] == Fraction(1, 12)
    assert seq.integrals[1] == bernoulli_number(2) / factorial(2)


def test_memoization_is_shared_within_a_bundle():
    bundle = SimplexContraction(1)
    t, dt = interval_letters()
    before = len(bundle._memo_G)
    transferred_m(bundle, (t, dt, dt, dt, dt))
    mid = len(bundle._memo_G)
    transferred_m(bundle, (t, dt, dt, dt, dt))
    assert mid > before
    assert len(bundle._memo_G) == mid
