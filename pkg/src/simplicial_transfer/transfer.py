"""Homotopy transfer of the product structure from polynomial forms onto
cochains, by the sum over planar trees and its inductive reformulation.

The algebra side is a differential graded commutative algebra, so the only
nonzero products are the differential and the binary product; on the shifted
grading (degree = form degree - 1) the binary operation is

    m_2(x, y) = (-1)^{|x|+1} x ^ y,

an operation of degree +1, and all operations of arity >= 3 vanish.  The
transferred n-ary cochain operations are

    m_n = sum over trees with n leaves of the tree operation,

equivalently, by grouping trees at the root,

    m_n = sum_{k, n_1+...+n_k=n} f o m_k o (G_{n_1} x ... x G_{n_k}),
    G_n  = sum_{k, n_1+...+n_k=n} H o m_k o (G_{n_1} x ... x G_{n_k}),

with G_1 = g and m_1 the cochain coboundary.  Both routes are implemented;
their agreement is itself one of the checked identities.  The blocks
G_{n_i} have even parity and degree zero, so no slot signs arise in the
recursion itself; all other slotwise applications are Koszul-signed.

The identity batteries here are the arbiter for every sign convention in the
package: associativity-up-to-homotopy, the morphism relations, vanishing on
shuffles, and unitality are checked exactly on complete word bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cochains import (
    Cochain,
    basis_faces,
    coboundary,
    format_cochain,
    include_g,
    interval_basis_components,
    project_f,
    unit_cochain,
)
from .contraction import homotopy_H, s_operator
from .forms import Form, differential, format_form, integrate_top, wedge
from .rationals import UniPoly, bernoulli_number, bernoulli_polynomial, binomial
from .rationals import factorial, rational_str
from .reporting import CheckRecord, VerificationReport
from .tensorwords import Homog, compositions, shuffle
from .trees import enumerate_trees, evaluate_tree_m

__all__ = [
    "SimplexContraction",
    "transferred_m",
    "transferred_m_trees",
    "morphism_G",
    "check_a_infinity",
    "check_morphism",
    "check_c_infinity",
    "check_unital",
    "interval_product_table",
    "IntervalTable",
    "p_polynomial_sequence",
    "PPolynomials",
]


class SimplexContraction:
    """The contraction data on a fixed simplex dimension, packaged for the
    transfer engine.

    ``koszul_signs=False`` drops every slotwise sign; it exists only so the
    verification commands can demonstrate a failing battery.
    """

    def __init__(self, dim: int, koszul_signs: bool = True):
        self.dim = dim
        self.koszul_signs = koszul_signs
        self._memo_G: dict = {}

    # algebra side
    def d_A(self, x: Form) -> Form:
        return differential(x)

    def m_A(self, degrees, values):
        k = len(values)
        if k == 1:
            return self.d_A(values[0])
        if k == 2:
            sign = 1 if (degrees[0] + 1) % 2 == 0 else -1
            prod = wedge(values[0], values[1])
            return prod if sign == 1 else -prod
        return self.zero_A()

    def m_A_is_zero(self, k: int) -> bool:
        return k >= 3

    def one_A(self) -> Form:
        return Form.one(self.dim)

    def zero_A(self) -> Form:
        return Form.zero(self.dim)

    # cochain side
    def d_B(self, c: Cochain) -> Cochain:
        return coboundary(c)

    def zero_B(self) -> Cochain:
        return Cochain.zero(self.dim)

    def unit_B(self) -> Cochain:
        return project_f(self.one_A())

    # contraction maps
    def f(self, x: Form) -> Cochain:
        return project_f(x)

    def g(self, c: Cochain) -> Form:
        return include_g(c)

    def H(self, x: Form) -> Form:
        return homotopy_H(x)

    # bases and labels
    def b_basis(self) -> list[Homog]:
        return [
            Homog(Cochain.basis_element(self.dim, face), len(face) - 2)
            for face in basis_faces(self.dim)
        ]

    def letter_label(self, letter: Homog) -> str:
        carrier = letter.carrier
        if isinstance(carrier, Cochain) and len(carrier.coeffs) == 1:
            (face, coeff), = carrier.coeffs.items()
            if coeff == 1:
                return "x(" + ",".join(map(str, face)) + ")"
        return repr(carrier)

    def render_B(self, value) -> str:
        return format_cochain(value)

    def render_A(self, value) -> str:
        return format_form(value)


def _word_degrees(word) -> list[int]:
    return [h.degree for h in word]


def morphism_G(bundle, word: tuple[Homog, ...]) -> "Form":
    """The morphism component on a word of cochain letters; G_1 = g and the
    higher components follow the homotopy-capped recursion."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    if n == 1:
        return bundle.g(word[0].carrier)
    cached = bundle._memo_G.get(word)
    if cached is not None:
        return cached
    total = bundle.zero_A()
    for k in range(2, n + 1):
        if bundle.m_A_is_zero(k) and k > 2:
            continue
        for comp in compositions(n, k):
            blocks = []
            start = 0
            for size in comp:
                blocks.append(word[start : start + size])
                start += size
            values = [morphism_G(bundle, block) for block in blocks]
            if any(not v for v in values):
                continue
            degrees = [sum(_word_degrees(block)) for block in blocks]
            # the G blocks have even parity, so no slot sign arises
            total = total + bundle.m_A(degrees, values)
    result = bundle.H(total)
    bundle._memo_G[word] = result
    return result


def transferred_m(bundle, word: tuple[Homog, ...]):
    """The transferred n-ary operation on a word of cochain letters; arity 1
    is the cochain differential."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    if n == 1:
        return bundle.d_B(word[0].carrier)
    total = bundle.zero_A()
    for k in range(2, n + 1):
        if bundle.m_A_is_zero(k) and k > 2:
            continue
        for comp in compositions(n, k):
            blocks = []
            start = 0
            for size in comp:
                blocks.append(word[start : start + size])
                start += size
            values = [morphism_G(bundle, block) for block in blocks]
            if any(not v for v in values):
                continue
            degrees = [sum(_word_degrees(block)) for block in blocks]
            total = total + bundle.m_A(degrees, values)
    return bundle.f(total)


def transferred_m_trees(bundle, word: tuple[Homog, ...]):
    """The same operation as a direct sum over planar trees."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    if n == 1:
        return bundle.d_B(word[0].carrier)
    total = bundle.zero_B()
    for tree in enumerate_trees(n):
        total = total + evaluate_tree_m(tree, word, bundle)
    return total


def _insertion_sign(bundle, word, j: int) -> int:
    """Koszul sign for sliding an odd operation past the first j letters."""
    if not bundle.koszul_signs:
        return 1
    exponent = sum(word[i].degree for i in range(j))
    return -1 if exponent % 2 else 1


def _relation_value(bundle, word) -> "Cochain":
    """Left side of the structure relation at the word's arity:

        sum_{k,j} +- m_{n-k+1}(b_1..b_j, m_k(b_{j+1}..b_{j+k}), ..., b_n).
    """
    n = len(word)
    total = bundle.zero_B()
    for k in range(1, n + 1):
        for j in range(0, n - k + 1):
            inner_word = word[j : j + k]
            inner = transferred_m(bundle, inner_word)
            if not inner:
                continue
            inner_degree = sum(_word_degrees(inner_word)) + 1
            outer_word = word[:j] + (Homog(inner, inner_degree),) + word[j + k :]
            sign = _insertion_sign(bundle, word, j)
            term = transferred_m(bundle, outer_word)
            total = total + (term if sign == 1 else sign * term)
    return total


def _word_label(bundle, word) -> str:
    return "(" + ", ".join(bundle.letter_label(h) for h in word) + ")"


def check_a_infinity(bundle, max_arity: int, basis=None) -> VerificationReport:
    """Structure relations: the signed sum of nested transferred operations
    vanishes on every basis word of each arity."""
    basis = list(basis if basis is not None else bundle.b_basis())
    report = VerificationReport(
        family="structure relations",
        arity_range=(1, max_arity),
        basis=f"{len(basis)} basis letters",
    )
    for n in range(1, max_arity + 1):
        failure = None
        count = 0
        for word in product(basis, repeat=n):
            count += 1
            value = _relation_value(bundle, word)
            if value:
                failure = (
                    f"word={_word_label(bundle, word)} residual={bundle.render_B(value)}"
                )
                break
        report.checks.append(
            CheckRecord(
                name=f"relation at arity {n}",
                basis_size=count,
                passed=failure is None,
                counterexample=failure,
            )
        )
    return report


def check_morphism(bundle, max_arity: int, basis=None) -> VerificationReport:
    """Morphism relations: the algebra-side combination of G components
    equals the G image of the cochain-side operations, word by word."""
    basis = list(basis if basis is not None else bundle.b_basis())
    report = VerificationReport(
        family="morphism relations",
        arity_range=(1, max_arity),
        basis=f"{len(basis)} basis letters",
    )
    for n in range(1, max_arity + 1):
        failure = None
        count = 0
        for word in product(basis, repeat=n):
            count += 1
            lhs = bundle.d_A(morphism_G(bundle, word))
            for k in range(2, n + 1):
                if bundle.m_A_is_zero(k) and k > 2:
                    continue
                for comp in compositions(n, k):
                    blocks = []
                    start = 0
                    for size in comp:
                        blocks.append(word[start : start + size])
                        start += size
                    values = [morphism_G(bundle, block) for block in blocks]
                    if any(not v for v in values):
                        continue
                    degrees = [sum(_word_degrees(block)) for block in blocks]
                    lhs = lhs + bundle.m_A(degrees, values)
            rhs = bundle.zero_A()
            for k in range(1, n + 1):
                for j in range(0, n - k + 1):
                    inner_word = word[j : j + k]
                    inner = transferred_m(bundle, inner_word)
                    if not inner:
                        continue
                    inner_degree = sum(_word_degrees(inner_word)) + 1
                    outer_word = (
                        word[:j] + (Homog(inner, inner_degree),) + word[j + k :]
                    )
                    sign = _insertion_sign(bundle, word, j)
                    term = morphism_G(bundle, outer_word)
                    rhs = rhs + (term if sign == 1 else sign * term)
            if lhs != rhs:
                failure = (
                    f"word={_word_label(bundle, word)} "
                    f"lhs={bundle.render_A(lhs)} rhs={bundle.render_A(rhs)}"
                )
                break
        report.checks.append(
            CheckRecord(
                name=f"morphism relation at arity {n}",
                basis_size=count,
                passed=failure is None,
                counterexample=failure,
            )
        )
    return report


def check_c_infinity(bundle, max_arity: int, basis=None) -> VerificationReport:
    """Shuffle vanishing: every transferred operation and every morphism
    component kills shuffles of nonempty words."""
    basis = list(basis if basis is not None else bundle.b_basis())
    report = VerificationReport(
        family="shuffle vanishing",
        arity_range=(2, max_arity),
        basis=f"{len(basis)} basis letters",
    )
    for n in range(2, max_arity + 1):
        failure_m = None
        failure_g = None
        count = 0
        for p in range(1, n):
            q = n - p
            for u in product(basis, repeat=p):
                for v in product(basis, repeat=q):
                    count += 1
                    sh = shuffle(u, v)
                    total_m = bundle.zero_B()
                    total_g = bundle.zero_A()
                    for word, coeff in sh.items():
                        m_val = transferred_m(bundle, word)
                        if m_val:
                            total_m = total_m + coeff * m_val
                        g_val = morphism_G(bundle, word)
                        if g_val:
                            total_g = total_g + coeff * g_val
                    label = f"{_word_label(bundle, u)} shuffle {_word_label(bundle, v)}"
                    if failure_m is None and total_m:
                        failure_m = f"{label} gives {bundle.render_B(total_m)}"
                    if failure_g is None and total_g:
                        failure_g = f"{label} gives {bundle.render_A(total_g)}"
                if failure_m and failure_g:
                    break
        report.checks.append(
            CheckRecord(
                name=f"operation vanishes on shuffles, arity {n}",
                basis_size=count,
                passed=failure_m is None,
                counterexample=failure_m,
            )
        )
        report.checks.append(
            CheckRecord(
                name=f"morphism vanishes on shuffles, arity {n}",
                basis_size=count,
                passed=failure_g is None,
                counterexample=failure_g,
            )
        )
    return report


def check_unital(bundle, max_arity: int) -> VerificationReport:
    """Unit laws for the transferred structure, with unit f(1)."""
    basis = bundle.b_basis()
    e = bundle.unit_B()
    e_letter = Homog(e, -1)
    report = VerificationReport(
        family="unitality",
        arity_range=(1, max_arity),
        basis=f"{len(basis)} basis letters",
    )

    def record(name, size, failure):
        report.checks.append(
            CheckRecord(name=name, basis_size=size, passed=failure is None, counterexample=failure)
        )

    unit_expected = unit_cochain(bundle.dim) if isinstance(e, Cochain) else None
    failure = None
    if unit_expected is not None and e != unit_expected:
        failure = f"f(1) = {bundle.render_B(e)}"
    record("unit is the sum of vertex indicators", 1, failure)

    failure = None
    if transferred_m(bundle, (e_letter,)):
        failure = "differential of the unit is nonzero"
    record("unit is closed", 1, failure)

    failure = None
    for b in basis:
        left = transferred_m(bundle, (e_letter, b))
        sign = 1 if (b.degree + 1) % 2 == 0 else -1
        right = transferred_m(bundle, (b, e_letter))
        right = right if sign == 1 else sign * right
        if left != b.carrier or right != b.carrier:
            failure = (
                f"letter {bundle.letter_label(b)}: e*b={bundle.render_B(left)}, "
                f"signed b*e={bundle.render_B(right)}"
            )
            break
    record("binary unit laws", len(basis), failure)

    for n in range(3, max_arity + 1):
        failure = None
        count = 0
        for slot in range(n):
            for rest in product(basis, repeat=n - 1):
                count += 1
                word = rest[:slot] + (e_letter,) + rest[slot:]
                value = transferred_m(bundle, word)
                if value:
                    failure = f"word={_word_label(bundle, word)} gives {bundle.render_B(value)}"
                    break
            if failure:
                break
        record(f"operations of arity {n} vanish on the unit", count, failure)

    failure = None
    if morphism_G(bundle, (e_letter,)) != bundle.one_A():
        failure = "g does not send the unit to 1"
    record("morphism sends unit to 1", 1, failure)

    for n in range(2, max_arity + 1):
        failure = None
        count = 0
        for slot in range(n):
            for rest in product(basis, repeat=n - 1):
                count += 1
                word = rest[:slot] + (e_letter,) + rest[slot:]
                value = morphism_G(bundle, word)
                if value:
                    failure = f"word={_word_label(bundle, word)} gives {bundle.render_A(value)}"
                    break
            if failure:
                break
        record(f"morphism components of arity {n} vanish on the unit", count, failure)

    return report


# -- the interval product table ------------------------------------------


@dataclass
class IntervalTable:
    """Products of the interval cochains t and dt, reported in the basis
    {1, t, dt}, together with the derived Bernoulli comparisons."""

    max_arity: int
    entries: list[dict] = field(default_factory=list)
    checks: list[CheckRecord] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(rec.passed for rec in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "max_arity": self.max_arity,
            "all_passed": self.all_passed,
            "entries": self.entries,
            "checks": [rec.to_json_dict() for rec in self.checks],
            "findings": self.findings,
        }

    def to_text(self) -> str:
        lines = [f"products of t and dt up to arity {self.max_arity} (basis 1, t, dt)"]
        width = max(len(e["word"]) for e in self.entries) if self.entries else 0
        for e in self.entries:
            lines.append(f"  m({e['word']:<{width}}) = {e['value']}")
        lines.append("")
        lines.extend(rec.to_text() for rec in self.checks)
        if self.findings:
            lines.append("")
            lines.append("findings (reported, not asserted):")
            lines.extend(f"  - {finding}" for finding in self.findings)
        return "\n".join(lines)


def _component_string(components) -> str:
    c1, ct, cdt = components
    parts = []
    if c1:
        parts.append(rational_str(c1))
    if ct:
        parts.append(f"{rational_str(ct)} t")
    if cdt:
        parts.append(f"{rational_str(cdt)} dt")
    return " + ".join(parts) if parts else "0"


def interval_product_table(max_arity: int) -> IntervalTable:
    """Evaluate every product of t and dt on the interval up to the given
    arity, and compare against the Bernoulli predictions.

    Asserted comparisons: m_2(t,t) = t; the dt coefficient of
    m_{n+1}(t, dt, ..., dt) has absolute value |B_n|/n!; all words outside
    the single-t family (and m_2(t,t)) vanish; and the one-t family scales
    by binomial coefficients in absolute value.  The literal sign pattern is
    emitted under findings instead of being asserted, because the two
    printed sign conventions for it contradict each other at arity 2; the
    computed products are the ground truth here.
    """
    if max_arity < 2:
        raise ValueError("max_arity must be >= 2")
    bundle = SimplexContraction(1)
    t = Homog(Cochain.basis_element(1, (1,)), -1)
    dt = Homog(Cochain.basis_element(1, (0, 1)), 0)
    letters = {"t": t, "dt": dt}

    table = IntervalTable(max_arity=max_arity)
    values: dict[tuple[str, ...], tuple[Fraction, Fraction, Fraction]] = {}
    for n in range(2, max_arity + 1):
        for names in product(("t", "dt"), repeat=n):
            word = tuple(letters[name] for name in names)
            value = transferred_m(bundle, word)
            components = interval_basis_components(value)
            values[names] = components
            table.entries.append(
                {"word": ",".join(names), "value": _component_string(components)}
            )

    def record(name, size, failure):
        table.checks.append(
            CheckRecord(name=name, basis_size=size, passed=failure is None, counterexample=failure)
        )

    failure = None
    if values[("t", "t")] != (0, 1, 0):
        failure = f"m(t,t) = {_component_string(values[('t', 't')])}"
    record("m(t,t) = t", 1, failure)

    failure = None
    family: dict[int, Fraction] = {}
    count = 0
    for n in range(1, max_arity):
        names = ("t",) + ("dt",) * n
        c1, ct, cdt = values[names]
        family[n] = cdt
        expected = abs(bernoulli_number(n)) / factorial(n)
        count += 1
        if c1 or ct or abs(cdt) != expected:
            failure = (
                f"m({','.join(names)}) = {_component_string(values[names])}, "
                f"expected magnitude {rational_str(expected)}"
            )
            break
    record("dt coefficient of m(t,dt,...,dt) has magnitude |B_n|/n!", count, failure)

    failure = None
    count = 0
    for names, components in values.items():
        t_count = names.count("t")
        if names == ("t", "t"):
            continue
        one_t_family = t_count == 1
        if one_t_family:
            continue
        count += 1
        if components != (0, 0, 0):
            failure = f"m({','.join(names)}) = {_component_string(components)}"
            break
    record("all words outside the one-t family vanish", count, failure)

    failure = None
    count = 0
    for n in range(1, min(4, max_arity - 1) + 1):
        base = family[n]
        if base == 0:
            continue
        for i in range(0, n + 1):
            names = ("dt",) * i + ("t",) + ("dt",) * (n - i)
            c1, ct, cdt = values[names]
            count += 1
            if c1 or ct or abs(cdt) != binomial(n, i) * abs(base):
                failure = (
                    f"m({','.join(names)}) = {_component_string(values[names])}, "
                    f"expected magnitude {rational_str(binomial(n, i) * abs(base))}"
                )
                break
        if failure:
            break
    record("one-t family scales by binomial coefficients", count, failure)

    # findings: the literal sign patterns, computed exactly
    signed = []
    for n in sorted(family):
        bn = bernoulli_number(n) / factorial(n)
        if family[n] == 0:
            signed.append(f"n={n}: zero")
        elif family[n] == bn:
            signed.append(f"n={n}: equals B_n/n!")
        elif family[n] == -bn:
            signed.append(f"n={n}: equals -B_n/n!")
    table.findings.append(
        "dt coefficient of m(t,dt^n) versus B_n/n!: "
        + "; ".join(signed)
        + " (the computed values follow (-1)^n B_n/n!)"
    )
    ratio_notes = []
    for n in range(1, min(4, max_arity - 1) + 1):
        base = family[n]
        if base == 0:
            continue
        pattern = []
        for i in range(0, n + 1):
            names = ("dt",) * i + ("t",) + ("dt",) * (n - i)
            ratio = values[names][2] / base
            pattern.append(f"i={i}: {rational_str(ratio)}")
        ratio_notes.append(f"n={n} [{', '.join(pattern)}]")
    table.findings.append(
        "ratio m(dt^i,t,dt^(n-i)) / m(t,dt^n): "
        + "; ".join(ratio_notes)
        + " (the computed pattern is (-1)^i C(n,i); an exponent n-i instead of i "
        "contradicts the computed arity-2 products)"
    )
    return table


# -- the polynomial recursion behind the table ----------------------------


@dataclass
class PPolynomials:
    """The polynomials p_n produced by the homotopy recursion on the
    interval, with their closed forms and integrals."""

    polys: list[UniPoly]
    closed_forms: list[UniPoly]
    integrals: list[Fraction]  # b_n = (-1)^{n-1} integral of p_n

    def matches_closed_form(self) -> bool:
        return self.polys == self.closed_forms

    def integral_identities(self) -> bool:
        return all(
            b == (bernoulli_number(n) / factorial(n)) * (1 if n % 2 == 0 else -1)
            for n, b in enumerate(self.integrals, start=1)
        )


def _interval_poly_form(p: UniPoly) -> Form:
    return Form(1, {((k,), ()): c for k, c in enumerate(p.coeffs)})


def _form_to_unipoly(x: Form) -> UniPoly:
    coeffs: dict[int, Fraction] = {}
    for (exps, dts), coeff in x.terms.items():
        if dts:
            raise ValueError("not a polynomial 0-form")
        coeffs[exps[0]] = coeff
    size = max(coeffs, default=-1) + 1
    return UniPoly([coeffs.get(k, Fraction(0)) for k in range(size)])


def p_polynomial_sequence(n_max: int) -> PPolynomials:
    """p_1 = t and p_n = s(p_{n-1} dt), compared with (B_n(t) - B_n)/n! and
    integrated exactly over the interval."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    dt = Form.monomial(1, (0,), (1,))
    polys: list[UniPoly] = [UniPoly((0, 1))]
    while len(polys) < n_max:
        current = _interval_poly_form(polys[-1])
        polys.append(_form_to_unipoly(s_operator(wedge(current, dt))))
    closed = [
        Fraction(1, factorial(n)) * (bernoulli_polynomial(n) - UniPoly((bernoulli_number(n),)))
        for n in range(1, n_max + 1)
    ]
    integrals = []
    for n, p in enumerate(polys, start=1):
        raw = integrate_top(wedge(_interval_poly_form(p), dt))
        integrals.append(raw if n % 2 == 1 else -raw)
    return PPolynomials(polys=polys, closed_forms=closed, integrals=integrals)
