"""Finite ordered simplicial complexes: global cochains, compatible families
of forms, the levelwise contraction, and the cup-like product.

A complex is given by totally ordered vertices and maximal simplices; the
closure stores every face.  A global form assigns a polynomial form to every
simplex of the closure, compatibly with face restriction; cochains, forms,
and the contraction maps are all levelwise, so the transfer engine runs on a
complex exactly as it does on a single simplex.

The product of two cochains is f(ga ^ gb).  It is graded commutative, local
(supported on common stars), satisfies the Leibniz rule, and has the
constant 0-cochain as identity, but it is not associative; the ternary
transferred operation is the correcting homotopy, which the battery checks
through the structure relation at arity three.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations

from .cochains import Cochain, elementary_form
from .contraction import homotopy_H as _local_H
from .forms import Form, differential, face_restrict, format_form, integrate_top, wedge
from .rationals import parse_rational, rational_str
from .reporting import CheckRecord, VerificationReport
from .tensorwords import Homog
from .transfer import transferred_m, _relation_value

__all__ = [
    "OrderedComplex",
    "GlobalCochain",
    "GlobalForm",
    "ComplexFormatError",
    "load_complex",
    "complex_from_data",
    "global_f",
    "global_g",
    "global_H",
    "global_coboundary",
    "global_wedge",
    "global_differential",
    "cup",
    "ComplexContraction",
    "transferred_global_m",
    "check_whitney_conditions",
    "global_cochain_records",
    "global_cochain_from_records",
    "load_global_cochain",
]

Simplex = tuple[int, ...]


class ComplexFormatError(ValueError):
    pass


class OrderedComplex:
    """Finite simplicial complex with totally ordered vertices.

    Vertices are arbitrary labels; simplices are stored as strictly
    increasing tuples of vertex indices, and the closure contains every
    nonempty face of every maximal simplex.
    """

    __slots__ = ("vertices", "maximal", "simplices", "_hash")

    def __init__(self, vertices, maximal):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ComplexFormatError("duplicate vertex labels")
        closure: set[Simplex] = set()
        maximal_clean: list[Simplex] = []
        for simplex in maximal:
            simplex = tuple(simplex)
            if any(simplex[i] >= simplex[i + 1] for i in range(len(simplex) - 1)):
                raise ComplexFormatError(f"simplex {list(simplex)} is not increasing")
            if not simplex:
                raise ComplexFormatError("empty simplex")
            if simplex[0] < 0 or simplex[-1] >= len(vertices):
                raise ComplexFormatError(f"simplex {list(simplex)} has unknown vertex")
            if simplex in maximal_clean:
                raise ComplexFormatError(f"duplicate simplex {list(simplex)}")
            maximal_clean.append(simplex)
            for k in range(1, len(simplex) + 1):
                closure.update(combinations(simplex, k))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "maximal", tuple(maximal_clean))
        object.__setattr__(
            self, "simplices", tuple(sorted(closure, key=lambda s: (len(s), s)))
        )
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("OrderedComplex is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrderedComplex)
            and self.vertices == other.vertices
            and self.simplices == other.simplices
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.vertices, self.simplices))
            object.__setattr__(self, "_hash", h)
        return h

    def dim_of(self, simplex: Simplex) -> int:
        return len(simplex) - 1

    def star(self, simplices) -> set[Simplex]:
        """All simplices having some member of the given set as a face."""
        base = set(simplices)
        return {
            s
            for s in self.simplices
            if any(set(b) <= set(s) for b in base)
        }

    def __repr__(self) -> str:
        return f"OrderedComplex(vertices={list(self.vertices)}, maximal={[list(m) for m in self.maximal]})"


def complex_from_data(data: dict) -> OrderedComplex:
    if not isinstance(data, dict) or "vertices" not in data or "simplices" not in data:
        raise ComplexFormatError('expected {"vertices": [...], "simplices": [[...]]}')
    return OrderedComplex(data["vertices"], data["simplices"])


def load_complex(text: str) -> OrderedComplex:
    """Parse the JSON complex format {"vertices": [...], "simplices": [[...]]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"invalid JSON: {exc}") from exc
    return complex_from_data(data)


def _positions(sub: Simplex, ambient: Simplex) -> Simplex:
    return tuple(ambient.index(v) for v in sub)


class GlobalCochain:
    """Rational coefficients on the simplices of a complex."""

    __slots__ = ("complex", "coeffs", "_hash")

    def __init__(self, complex_: OrderedComplex, coeffs=None):
        clean: dict[Simplex, Fraction] = {}
        if coeffs:
            known = set(complex_.simplices)
            for simplex, coeff in (
                coeffs.items() if isinstance(coeffs, dict) else coeffs
            ):
                simplex = tuple(simplex)
                if simplex not in known:
                    raise ValueError(f"simplex {list(simplex)} not in the complex")
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                new = clean.get(simplex, Fraction(0)) + coeff
                if new == 0:
                    clean.pop(simplex, None)
                else:
                    clean[simplex] = new
        object.__setattr__(self, "complex", complex_)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("GlobalCochain is immutable")

    @classmethod
    def basis_element(cls, complex_: OrderedComplex, simplex) -> "GlobalCochain":
        return cls(complex_, {tuple(simplex): Fraction(1)})

    @classmethod
    def unit(cls, complex_: OrderedComplex) -> "GlobalCochain":
        return cls(
            complex_, {s: Fraction(1) for s in complex_.simplices if len(s) == 1}
        )

    def __add__(self, other: "GlobalCochain") -> "GlobalCochain":
        if self.complex != other.complex:
            raise ValueError("complex mismatch")
        out = dict(self.coeffs)
        for simplex, coeff in other.coeffs.items():
            new = out.get(simplex, Fraction(0)) + coeff
            if new == 0:
                out.pop(simplex, None)
            else:
                out[simplex] = new
        return GlobalCochain(self.complex, out)

    def __neg__(self) -> "GlobalCochain":
        return GlobalCochain(self.complex, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "GlobalCochain") -> "GlobalCochain":
        return self + (-other)

    def __rmul__(self, scalar) -> "GlobalCochain":
        scalar = Fraction(scalar)
        if scalar == 0:
            return GlobalCochain(self.complex)
        return GlobalCochain(
            self.complex, {s: scalar * c for s, c in self.coeffs.items()}
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GlobalCochain)
            and self.complex == other.complex
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self.coeffs.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def support(self) -> set[Simplex]:
        return set(self.coeffs)

    def degrees(self) -> set[int]:
        return {len(s) - 1 for s in self.coeffs}

    def homogeneous_degree(self) -> int | None:
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def restrict_to(self, simplex: Simplex) -> Cochain:
        """The local cochain induced on one simplex of the closure."""
        out = {}
        for face, coeff in self.coeffs.items():
            if set(face) <= set(simplex):
                out[_positions(face, simplex)] = coeff
        return Cochain(len(simplex) - 1, out)

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{list(s)}: {rational_str(c)}"
            for s, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))
        )
        return f"GlobalCochain({{{entries}}})"


class GlobalForm:
    """A polynomial form on every simplex of the closure, compatible with
    face restriction; the invariant is checked on construction."""

    __slots__ = ("complex", "assign", "_hash")

    def __init__(self, complex_: OrderedComplex, assign, validate: bool = True):
        cleaned: dict[Simplex, Form] = {}
        for simplex in complex_.simplices:
            form = assign.get(simplex)
            if form is None:
                form = Form.zero(len(simplex) - 1)
            if form.dim != len(simplex) - 1:
                raise ValueError(f"form on {list(simplex)} has wrong dimension")
            cleaned[simplex] = form
        object.__setattr__(self, "complex", complex_)
        object.__setattr__(self, "assign", cleaned)
        object.__setattr__(self, "_hash", None)
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("GlobalForm is immutable")

    def validate(self) -> None:
        """Check compatibility: restricting the form on a simplex to any face
        gives the form stored on the face."""
        for simplex in self.complex.simplices:
            form = self.assign[simplex]
            if len(simplex) == 1:
                continue
            for k in range(1, len(simplex)):
                for face in combinations(simplex, k):
                    local_face = _positions(face, simplex)
                    restricted = face_restrict(form, local_face)
                    if restricted != self.assign[face]:
                        raise ValueError(
                            f"incompatible family: {list(simplex)} -> {list(face)}"
                        )

    @classmethod
    def zero(cls, complex_: OrderedComplex) -> "GlobalForm":
        return cls(complex_, {}, validate=False)

    @classmethod
    def one(cls, complex_: OrderedComplex) -> "GlobalForm":
        return cls(
            complex_,
            {s: Form.one(len(s) - 1) for s in complex_.simplices},
            validate=False,
        )

    def __add__(self, other: "GlobalForm") -> "GlobalForm":
        if self.complex != other.complex:
            raise ValueError("complex mismatch")
        return GlobalForm(
            self.complex,
            {s: self.assign[s] + other.assign[s] for s in self.complex.simplices},
            validate=False,
        )

    def __neg__(self) -> "GlobalForm":
        return GlobalForm(
            self.complex,
            {s: -self.assign[s] for s in self.complex.simplices},
            validate=False,
        )

    def __sub__(self, other: "GlobalForm") -> "GlobalForm":
        return self + (-other)

    def __rmul__(self, scalar) -> "GlobalForm":
        return GlobalForm(
            self.complex,
            {s: scalar * self.assign[s] for s in self.complex.simplices},
            validate=False,
        )

    def __bool__(self) -> bool:
        return any(self.assign.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GlobalForm)
            and self.complex == other.complex
            and self.assign == other.assign
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self.assign.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{list(s)}: {format_form(f)}"
            for s, f in sorted(self.assign.items(), key=lambda kv: (len(kv[0]), kv[0]))
            if f
        )
        return f"GlobalForm({{{entries}}})"


def global_g(c: GlobalCochain) -> GlobalForm:
    """Levelwise inclusion by elementary forms."""
    complex_ = c.complex
    assign = {}
    for simplex in complex_.simplices:
        local = c.restrict_to(simplex)
        total = Form.zero(len(simplex) - 1)
        for face, coeff in local.coeffs.items():
            total = total + coeff * elementary_form(face, len(simplex) - 1)
        assign[simplex] = total
    return GlobalForm(complex_, assign, validate=False)


def global_f(a: GlobalForm) -> GlobalCochain:
    """Levelwise integration: the coefficient on a simplex is the integral
    of its form over the whole simplex."""
    out = {}
    for simplex in a.complex.simplices:
        value = integrate_top(a.assign[simplex])
        if value != 0:
            out[simplex] = value
    return GlobalCochain(a.complex, out)


def global_H(a: GlobalForm) -> GlobalForm:
    """Levelwise contraction homotopy; the output family is revalidated."""
    return GlobalForm(
        a.complex,
        {s: _local_H(a.assign[s]) for s in a.complex.simplices},
        validate=True,
    )


def global_wedge(a: GlobalForm, b: GlobalForm) -> GlobalForm:
    if a.complex != b.complex:
        raise ValueError("complex mismatch")
    return GlobalForm(
        a.complex,
        {s: wedge(a.assign[s], b.assign[s]) for s in a.complex.simplices},
        validate=False,
    )


def global_differential(a: GlobalForm) -> GlobalForm:
    return GlobalForm(
        a.complex,
        {s: differential(a.assign[s]) for s in a.complex.simplices},
        validate=False,
    )


def global_coboundary(c: GlobalCochain) -> GlobalCochain:
    """(delta c)(v_0...v_k) = sum_j (-1)^j c(v_0...omit j...v_k)."""
    out = {}
    for simplex in c.complex.simplices:
        if len(simplex) < 2:
            continue
        acc = Fraction(0)
        for j in range(len(simplex)):
            sub = simplex[:j] + simplex[j + 1 :]
            coeff = c.coeffs.get(sub)
            if coeff is not None:
                acc += -coeff if j % 2 else coeff
        if acc != 0:
            out[simplex] = acc
    return GlobalCochain(c.complex, out)


def cup(a: GlobalCochain, b: GlobalCochain) -> GlobalCochain:
    """The product f(ga ^ gb), computed simplexwise."""
    if a.complex != b.complex:
        raise ValueError("complex mismatch")
    return global_f(global_wedge(global_g(a), global_g(b)))


class ComplexContraction:
    """The levelwise contraction on a complex, exposing the same interface
    as the single-simplex bundle so the transfer engine runs unchanged."""

    def __init__(self, complex_: OrderedComplex, koszul_signs: bool = True):
        self.complex = complex_
        self.koszul_signs = koszul_signs
        self._memo_G: dict = {}

    def d_A(self, x: GlobalForm) -> GlobalForm:
        return global_differential(x)

    def m_A(self, degrees, values):
        k = len(values)
        if k == 1:
            return self.d_A(values[0])
        if k == 2:
            sign = 1 if (degrees[0] + 1) % 2 == 0 else -1
            prod = global_wedge(values[0], values[1])
            return prod if sign == 1 else -prod
        return self.zero_A()

    def m_A_is_zero(self, k: int) -> bool:
        return k >= 3

    def one_A(self) -> GlobalForm:
        return GlobalForm.one(self.complex)

    def zero_A(self) -> GlobalForm:
        return GlobalForm.zero(self.complex)

    def d_B(self, c: GlobalCochain) -> GlobalCochain:
        return global_coboundary(c)

    def zero_B(self) -> GlobalCochain:
        return GlobalCochain(self.complex)

    def unit_B(self) -> GlobalCochain:
        return global_f(self.one_A())

    def f(self, x: GlobalForm) -> GlobalCochain:
        return global_f(x)

    def g(self, c: GlobalCochain) -> GlobalForm:
        return global_g(c)

    def H(self, x: GlobalForm) -> GlobalForm:
        return global_H(x)

    def b_basis(self) -> list[Homog]:
        return [
            Homog(GlobalCochain.basis_element(self.complex, s), len(s) - 2)
            for s in self.complex.simplices
        ]

    def letter_label(self, letter: Homog) -> str:
        carrier = letter.carrier
        if isinstance(carrier, GlobalCochain) and len(carrier.coeffs) == 1:
            (simplex, coeff), = carrier.coeffs.items()
            if coeff == 1:
                return "x(" + ",".join(map(str, simplex)) + ")"
        return repr(carrier)

    def render_B(self, value) -> str:
        return repr(value)

    def render_A(self, value) -> str:
        return repr(value)


def transferred_global_m(cochains, bundle=None) -> GlobalCochain:
    """The transferred operation on a word of homogeneous global cochains."""
    cochains = tuple(cochains)
    if not cochains:
        raise ValueError("empty word")
    complex_ = cochains[0].complex
    if bundle is None:
        bundle = ComplexContraction(complex_)
    word = []
    for c in cochains:
        degree = c.homogeneous_degree()
        if degree is None:
            raise ValueError("inputs must be homogeneous (or zero)")
        word.append(Homog(c, degree - 1))
    return transferred_m(bundle, tuple(word))


def check_whitney_conditions(
    complex_: OrderedComplex, require_nonassociativity_witness: bool | None = None
) -> VerificationReport:
    """The classical product conditions for a ⊔ b = f(ga ^ gb), checked over
    every pair of basis cochains, plus the homotopy certificate for its
    failure of associativity.

    By default a nonassociative triple is demanded exactly when the complex
    has an edge; on a discrete complex the product is honestly associative.
    """
    if require_nonassociativity_witness is None:
        require_nonassociativity_witness = any(
            len(s) >= 2 for s in complex_.simplices
        )
    bundle = ComplexContraction(complex_)
    basis = [GlobalCochain.basis_element(complex_, s) for s in complex_.simplices]
    report = VerificationReport(
        family="cup product conditions",
        arity_range=(2, 3),
        basis=f"{len(basis)} basis cochains on {len(complex_.simplices)} simplices",
    )

    def label(c: GlobalCochain) -> str:
        (simplex,) = c.support()
        return "x(" + ",".join(map(str, simplex)) + ")"

    def record(name, size, failure):
        report.checks.append(
            CheckRecord(name=name, basis_size=size, passed=failure is None, counterexample=failure)
        )

    # locality: the product lives in the star of both supports
    failure = None
    count = 0
    for a in basis:
        star_a = complex_.star(a.support())
        for b in basis:
            count += 1
            prod = cup(a, b)
            allowed = star_a & complex_.star(b.support())
            if not prod.support() <= allowed:
                failure = f"{label(a)} cup {label(b)} leaves the common star"
                break
        if failure:
            break
    record("product is supported on common stars", count, failure)

    # Leibniz with the sign of the left degree
    failure = None
    count = 0
    for a in basis:
        i = a.homogeneous_degree()
        sign = -1 if i % 2 else 1
        for b in basis:
            count += 1
            lhs = global_coboundary(cup(a, b))
            rhs = cup(global_coboundary(a), b) + sign * cup(a, global_coboundary(b))
            if lhs != rhs:
                failure = f"delta({label(a)} cup {label(b)}) mismatch"
                break
        if failure:
            break
    record("coboundary is a signed derivation of the product", count, failure)

    # unit law
    one = GlobalCochain.unit(complex_)
    failure = None
    count = 0
    for b in basis:
        count += 1
        if cup(one, b) != b or cup(b, one) != b:
            failure = f"unit law fails on {label(b)}"
            break
    record("constant 0-cochain is the identity", count, failure)

    # graded commutativity (unshifted degrees)
    failure = None
    count = 0
    for a in basis:
        i = a.homogeneous_degree()
        for b in basis:
            count += 1
            j = b.homogeneous_degree()
            sign = -1 if (i * j) % 2 else 1
            if cup(a, b) != sign * cup(b, a):
                failure = f"{label(a)} cup {label(b)} not graded commutative"
                break
        if failure:
            break
    record("product is graded commutative", count, failure)

    # nonassociativity witness plus its homotopy certificate
    witness = None
    for a in basis:
        for b in basis:
            for c in basis:
                if cup(cup(a, b), c) != cup(a, cup(b, c)):
                    witness = (a, b, c)
                    break
            if witness:
                break
        if witness:
            break
    if witness is None:
        failure = (
            "no nonassociative triple found"
            if require_nonassociativity_witness
            else None
        )
        record("nonassociativity witness with homotopy certificate", len(basis) ** 3, failure)
    else:
        a, b, c = witness
        word = tuple(Homog(x, x.homogeneous_degree() - 1) for x in (a, b, c))
        residual = _relation_value(bundle, word)
        failure = None
        if residual:
            failure = f"structure relation fails on the witness {tuple(map(label, witness))}"
        record(
            "nonassociativity witness with homotopy certificate "
            f"({label(a)}, {label(b)}, {label(c)})",
            len(basis) ** 3,
            failure,
        )
    return report


# -- cochain files ---------------------------------------------------------


def global_cochain_records(c: GlobalCochain) -> dict:
    return {
        "entries": [
            {"simplex": list(s), "coeff": rational_str(coeff)}
            for s, coeff in sorted(c.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ]
    }


def global_cochain_from_records(data: dict, complex_: OrderedComplex) -> GlobalCochain:
    if not isinstance(data, dict) or "entries" not in data:
        raise ComplexFormatError('expected {"entries": [{"simplex": ..., "coeff": ...}]}')
    return GlobalCochain(
        complex_,
        [
            (tuple(entry["simplex"]), parse_rational(entry["coeff"]))
            for entry in data["entries"]
        ],
    )


def load_global_cochain(text: str, complex_: OrderedComplex) -> GlobalCochain:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"invalid JSON: {exc}") from exc
    return global_cochain_from_records(data, complex_)
