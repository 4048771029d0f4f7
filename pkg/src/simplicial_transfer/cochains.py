"""Normalized simplicial cochains on the n-simplex and the maps that tie
them to polynomial forms.

A cochain assigns a rational to each nondegenerate face (strictly increasing
vertex sequence) of the simplex.  The coboundary is the Stokes dual of the
de Rham differential, so that integration over faces is a chain map; the
elementary forms give the section g with f o g = 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .forms import Form, generator, integrate_face, wedge
from .rationals import factorial, parse_rational, rational_str

__all__ = [
    "Cochain",
    "basis_faces",
    "coboundary",
    "elementary_form",
    "project_f",
    "include_g",
    "unit_cochain",
    "restrict_cochain",
    "interval_basis_components",
    "cochain_from_interval_basis",
    "cochain_records",
    "cochain_from_records",
    "format_cochain",
]

Face = tuple[int, ...]


@lru_cache(maxsize=None)
def basis_faces(dim: int) -> tuple[Face, ...]:
    """All nondegenerate faces of the dim-simplex, sorted by (size, lex)."""
    out: list[Face] = []
    for k in range(dim + 1):
        out.extend(combinations(range(dim + 1), k + 1))
    return tuple(out)


def _check_face(face, dim: int) -> Face:
    face = tuple(face)
    if not face:
        raise ValueError("face must be nonempty")
    if any(face[i] >= face[i + 1] for i in range(len(face) - 1)):
        raise ValueError(f"face {face} is not strictly increasing")
    if face[0] < 0 or face[-1] > dim:
        raise ValueError(f"face {face} out of range for dimension {dim}")
    return face


class Cochain:
    """Rational coefficients on nondegenerate faces; zeros never stored."""

    __slots__ = ("dim", "coeffs", "_hash")

    def __init__(self, dim: int, coeffs=None):
        if dim < 0:
            raise ValueError("dimension must be >= 0")
        clean: dict[Face, Fraction] = {}
        if coeffs:
            for face, coeff in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                face = _check_face(face, dim)
                new = clean.get(face, Fraction(0)) + coeff
                if new == 0:
                    clean.pop(face, None)
                else:
                    clean[face] = new
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cochain is immutable")

    @classmethod
    def zero(cls, dim: int) -> "Cochain":
        return cls(dim)

    @classmethod
    def basis_element(cls, dim: int, face) -> "Cochain":
        return cls(dim, {tuple(face): Fraction(1)})

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.coeffs)
        for face, coeff in other.coeffs.items():
            new = out.get(face, Fraction(0)) + coeff
            if new == 0:
                out.pop(face, None)
            else:
                out[face] = new
        return Cochain(self.dim, out)

    def __neg__(self) -> "Cochain":
        return Cochain(self.dim, {f: -c for f, c in self.coeffs.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __rmul__(self, scalar) -> "Cochain":
        scalar = Fraction(scalar)
        if scalar == 0:
            return Cochain(self.dim)
        return Cochain(self.dim, {f: scalar * c for f, c in self.coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.dim, frozenset(self.coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Cochain({self.dim}, {format_cochain(self)!r})"

    def degree_part(self, k: int) -> "Cochain":
        return Cochain(
            self.dim, {f: c for f, c in self.coeffs.items() if len(f) == k + 1}
        )

    def cochain_degrees(self) -> set[int]:
        return {len(f) - 1 for f in self.coeffs}

    def homogeneous_degree(self) -> int | None:
        degs = self.cochain_degrees()
        return degs.pop() if len(degs) == 1 else None


def coboundary(c: Cochain) -> Cochain:
    """(delta c)(i_0...i_k) = sum_j (-1)^j c(i_0...omit j...i_k)."""
    out: dict[Face, Fraction] = {}
    for face in basis_faces(c.dim):
        if len(face) < 2:
            continue
        acc = Fraction(0)
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            coeff = c.coeffs.get(sub)
            if coeff is not None:
                acc += -coeff if j % 2 else coeff
        if acc != 0:
            out[face] = acc
    return Cochain(c.dim, out)


def elementary_form(face, dim: int) -> Form:
    """Whitney elementary form of a face:

        k! sum_j (-1)^j t_{i_j} dt_{i_0} ... omit dt_{i_j} ... dt_{i_k}
    """
    face = _check_face(face, dim)
    k = len(face) - 1
    total = Form.zero(dim)
    for j, vertex in enumerate(face):
        term = generator(dim, "t", vertex)
        for l, other in enumerate(face):
            if l == j:
                continue
            term = wedge(term, generator(dim, "dt", other))
        total = total + ((-1 if j % 2 else 1) * term)
    return factorial(k) * total


def project_f(a: Form) -> Cochain:
    """Integrate over every face: the cochain side of the contraction."""
    out: dict[Face, Fraction] = {}
    for face in basis_faces(a.dim):
        value = integrate_face(a, face)
        if value != 0:
            out[face] = value
    return Cochain(a.dim, out)


def include_g(c: Cochain) -> Form:
    """Linear extension of face -> elementary form."""
    total = Form.zero(c.dim)
    for face, coeff in c.coeffs.items():
        total = total + coeff * elementary_form(face, c.dim)
    return total


def unit_cochain(dim: int) -> Cochain:
    """The 0-cochain with value 1 at every vertex; equals f(1)."""
    return Cochain(dim, {(i,): Fraction(1) for i in range(dim + 1)})


def restrict_cochain(c: Cochain, face) -> Cochain:
    """Pull back along the face inclusion: local face J -> global face(J)."""
    face = _check_face(face, c.dim)
    k = len(face) - 1
    out: dict[Face, Fraction] = {}
    for local in basis_faces(k):
        coeff = c.coeffs.get(tuple(face[j] for j in local))
        if coeff is not None:
            out[local] = coeff
    return Cochain(k, out)


# -- interval identification N_1 = span{1, t, dt} ------------------------


def interval_basis_components(c: Cochain) -> tuple[Fraction, Fraction, Fraction]:
    """Components of an interval cochain in the basis {1, t, dt}, under
    1 = x(0)+x(1), t = x(1), dt = x(01)."""
    if c.dim != 1:
        raise ValueError("interval basis applies to dimension 1")
    a = c.coeffs.get((0,), Fraction(0))
    b = c.coeffs.get((1,), Fraction(0))
    e = c.coeffs.get((0, 1), Fraction(0))
    return a, b - a, e


def cochain_from_interval_basis(c_one, c_t, c_dt) -> Cochain:
    c_one, c_t, c_dt = Fraction(c_one), Fraction(c_t), Fraction(c_dt)
    return Cochain(1, {(0,): c_one, (1,): c_one + c_t, (0, 1): c_dt})


# -- serialization -------------------------------------------------------


def cochain_records(c: Cochain) -> list[dict]:
    return [
        {"face": list(face), "coeff": rational_str(coeff)}
        for face, coeff in sorted(c.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]


def cochain_from_records(records, dim: int) -> Cochain:
    return Cochain(
        dim, [(tuple(r["face"]), parse_rational(r["coeff"])) for r in records]
    )


def format_cochain(c: Cochain) -> str:
    if not c.coeffs:
        return "0"
    entries = []
    for face, coeff in sorted(c.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0])):
        entries.append(f"face=[{','.join(map(str, face))}] coeff={rational_str(coeff)}")
    return "; ".join(entries)
