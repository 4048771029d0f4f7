"""Differential forms with polynomial coefficients on the standard simplex.

The algebra on the n-simplex is generated by t_0..t_n (degree 0) and
dt_0..dt_n (degree 1) subject to

    t_0 + ... + t_n = 1        and        dt_0 + ... + dt_n = 0,

with differential d(t_i) = dt_i, d(dt_i) = 0.  Elements are stored in the
normal form that eliminates the 0-indexed generators, so a monomial is

    t_1^{a_1} ... t_n^{a_n} dt_{s_1} ... dt_{s_m},    s_1 < ... < s_m,

keyed by the pair (exponent tuple, dt index tuple).  Coefficients are exact
rationals, zero terms are never stored, and reordering of dt factors is
resolved into a sign at construction time; equality of forms is therefore
literal equality of term maps.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import re

from .rationals import factorial, rational_str

__all__ = [
    "Form",
    "generator",
    "wedge",
    "differential",
    "vertex_evaluate",
    "face_restrict",
    "integrate_top",
    "integrate_face",
    "monomial_basis",
    "format_form",
    "parse_form",
]

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


def _merge_dts(s: tuple[int, ...], t: tuple[int, ...]):
    """Merge two ascending dt index tuples; returns (sign, merged) or None
    when an index repeats (the product is zero)."""
    if not s:
        return 1, t
    if not t:
        return 1, s
    inversions = 0
    merged = []
    i = j = 0
    while i < len(s) and j < len(t):
        if s[i] == t[j]:
            return None
        if s[i] < t[j]:
            merged.append(s[i])
            i += 1
        else:
            # t[j] moves past the remaining factors of s
            inversions += len(s) - i
            merged.append(t[j])
            j += 1
    merged.extend(s[i:])
    merged.extend(t[j:])
    return (-1 if inversions % 2 else 1), tuple(merged)


class Form:
    """Sparse rational combination of simplex monomials; may mix form degrees."""

    __slots__ = ("dim", "terms", "_hash")

    def __init__(self, dim: int, terms=None):
        if dim < 0:
            raise ValueError("dimension must be >= 0")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for key, coeff in (terms.items() if isinstance(terms, dict) else terms):
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                exps, dts = key
                acc = clean.get((tuple(exps), tuple(dts)))
                new = coeff if acc is None else acc + coeff
                if new == 0:
                    clean.pop((tuple(exps), tuple(dts)), None)
                else:
                    clean[(tuple(exps), tuple(dts))] = new
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    @classmethod
    def zero(cls, dim: int) -> "Form":
        return cls(dim)

    @classmethod
    def one(cls, dim: int) -> "Form":
        return cls(dim, {((0,) * dim, ()): Fraction(1)})

    @classmethod
    def monomial(cls, dim: int, exps, dts, coeff=1) -> "Form":
        return cls(dim, {(tuple(exps), tuple(dts)): Fraction(coeff)})

    # -- linear structure ------------------------------------------------

    def __add__(self, other: "Form") -> "Form":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, Fraction(0)) + coeff
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
        return Form(self.dim, out)

    def __neg__(self) -> "Form":
        return Form(self.dim, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __rmul__(self, scalar) -> "Form":
        scalar = Fraction(scalar)
        if scalar == 0:
            return Form(self.dim)
        return Form(self.dim, {k: scalar * c for k, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Form)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.dim, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Form({self.dim}, {format_form(self)!r})"

    # -- degree bookkeeping ----------------------------------------------

    def form_degrees(self) -> set[int]:
        return {len(dts) for _, dts in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.form_degrees()) <= 1

    def homogeneous_degree(self) -> int | None:
        """Form degree when homogeneous and nonzero, else None."""
        degs = self.form_degrees()
        return degs.pop() if len(degs) == 1 else None

    def degree_part(self, k: int) -> "Form":
        return Form(
            self.dim, {key: c for key, c in self.terms.items() if len(key[1]) == k}
        )

    def poly_degree(self) -> int:
        return max((sum(exps) for exps, _ in self.terms), default=0)


def generator(dim: int, kind: str, index: int) -> Form:
    """Normal form of the generator t_index or dt_index on the dim-simplex.

    Index 0 is rewritten through the barycentric relations
    t_0 = 1 - (t_1 + ... + t_n) and dt_0 = -(dt_1 + ... + dt_n).
    """
    if not 0 <= index <= dim:
        raise ValueError(f"vertex index {index} out of range for dimension {dim}")
    n = dim
    if kind == "t":
        if index == 0:
            terms = {((0,) * n, ()): Fraction(1)}
            for j in range(1, n + 1):
                exps = tuple(1 if i == j else 0 for i in range(1, n + 1))
                terms[(exps, ())] = Fraction(-1)
            return Form(n, terms)
        exps = tuple(1 if i == index else 0 for i in range(1, n + 1))
        return Form(n, {(exps, ()): Fraction(1)})
    if kind == "dt":
        zero_exps = (0,) * n
        if index == 0:
            return Form(n, {(zero_exps, (j,)): Fraction(-1) for j in range(1, n + 1)})
        return Form(n, {(zero_exps, (index,)): Fraction(1)})
    raise ValueError(f"unknown generator kind {kind!r}")


def wedge(a: Form, b: Form) -> Form:
    """Graded commutative product; dt factors anticommute and square to zero."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    out: dict[Monomial, Fraction] = {}
    for (ae, ad), ac in a.terms.items():
        for (be, bd), bc in b.terms.items():
            merged = _merge_dts(ad, bd)
            if merged is None:
                continue
            sign, dts = merged
            exps = tuple(x + y for x, y in zip(ae, be))
            key = (exps, dts)
            new = out.get(key, Fraction(0)) + sign * ac * bc
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
    return Form(a.dim, out)


def differential(a: Form) -> Form:
    """Graded Leibniz extension of d(t_i) = dt_i, d(dt_i) = 0."""
    out: dict[Monomial, Fraction] = {}
    for (exps, dts), coeff in a.terms.items():
        for pos, e in enumerate(exps):
            if e == 0:
                continue
            j = pos + 1
            if j in dts:
                continue
            # dt_j moves into ascending position past the smaller indices
            below = sum(1 for s in dts if s < j)
            sign = -1 if below % 2 else 1
            new_exps = exps[:pos] + (e - 1,) + exps[pos + 1 :]
            new_dts = tuple(sorted(dts + (j,)))
            key = (new_exps, new_dts)
            new = out.get(key, Fraction(0)) + sign * e * coeff
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
    return Form(a.dim, out)


def vertex_evaluate(a: Form, index: int) -> Fraction:
    """Evaluate at vertex e_index: t_index -> 1, other t -> 0, dt -> 0."""
    if not 0 <= index <= a.dim:
        raise ValueError(f"vertex index {index} out of range for dimension {a.dim}")
    total = Fraction(0)
    for (exps, dts), coeff in a.terms.items():
        if dts:
            continue
        if all(e == 0 for pos, e in enumerate(exps) if pos + 1 != index):
            total += coeff
    return total


def _check_face(face: tuple[int, ...], dim: int) -> tuple[int, ...]:
    face = tuple(face)
    if not face:
        raise ValueError("face must be nonempty")
    if any(face[i] >= face[i + 1] for i in range(len(face) - 1)):
        raise ValueError(f"face {face} is not strictly increasing")
    if face[0] < 0 or face[-1] > dim:
        raise ValueError(f"face {face} out of range for dimension {dim}")
    return face


@lru_cache(maxsize=None)
def _restriction_images(dim: int, face: tuple[int, ...]):
    """Images of the stored generators t_1..t_n, dt_1..dt_n of the dim-simplex
    under pullback along the face inclusion, as forms on the face simplex."""
    k = len(face) - 1
    t_img: dict[int, Form] = {}
    dt_img: dict[int, Form] = {}
    for local, vertex in enumerate(face):
        if vertex == 0:
            continue
        t_img[vertex] = generator(k, "t", local)
        dt_img[vertex] = generator(k, "dt", local)
    return t_img, dt_img


def face_restrict(a: Form, face) -> Form:
    """Pull back along the inclusion of the face (i_0 < ... < i_k).

    Vertex i_j becomes local vertex j; generators at vertices missing from
    the face are sent to zero and the result is renormalized on the face.
    """
    face = _check_face(face, a.dim)
    k = len(face) - 1
    t_img, dt_img = _restriction_images(a.dim, face)
    in_face = set(face)
    out = Form.zero(k)
    for (exps, dts), coeff in a.terms.items():
        if any(exps[j - 1] > 0 and j not in in_face for j in range(1, a.dim + 1)):
            continue
        if any(s not in in_face for s in dts):
            continue
        acc = coeff * Form.one(k)
        for pos, e in enumerate(exps):
            j = pos + 1
            if e == 0:
                continue
            img = t_img[j]
            for _ in range(e):
                acc = wedge(acc, img)
            if not acc:
                break
        for s in dts:
            if not acc:
                break
            acc = wedge(acc, dt_img[s])
        out = out + acc
    return out


def integrate_top(a: Form) -> Fraction:
    """Integral over the whole simplex:

        I(t_1^{a_1}...t_n^{a_n} dt_1...dt_n) = a_1!...a_n!/(a_1+...+a_n+n)!

    Monomials that do not carry every dt factor integrate to zero.  On the
    0-simplex this is evaluation of the constant.
    """
    n = a.dim
    full = tuple(range(1, n + 1))
    total = Fraction(0)
    for (exps, dts), coeff in a.terms.items():
        if dts != full:
            continue
        numer = 1
        for e in exps:
            numer *= factorial(e)
        total += coeff * Fraction(numer, factorial(sum(exps) + n))
    return total


def integrate_face(a: Form, face) -> Fraction:
    """Integral over the geometric face (i_0 < ... < i_k)."""
    return integrate_top(face_restrict(a, face))


def monomial_basis(dim: int, max_poly_degree: int, form_degree: int | None = None):
    """Yield every monomial Form on the dim-simplex with polynomial degree up
    to the bound, optionally restricted to one form degree."""
    degrees = range(dim + 1) if form_degree is None else (form_degree,)
    exps_list = _exponents(dim, max_poly_degree)
    for k in degrees:
        for dts in combinations(range(1, dim + 1), k):
            for exps in exps_list:
                yield Form.monomial(dim, exps, dts)


@lru_cache(maxsize=None)
def _exponents(dim: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if dim == 0:
        return ((),)
    out = []
    for head in range(bound + 1):
        for tail in _exponents(dim - 1, bound - head):
            out.append((head,) + tail)
    return tuple(sorted(out))


# -- text syntax --------------------------------------------------------

_T_TOKEN = re.compile(r"^t(\d+)(?:\^(\d+))?$")
_DT_TOKEN = re.compile(r"^dt(\d+)$")


def format_form(a: Form) -> str:
    """Render as '+'-separated terms like "3/2 t1^2 t2 dt1 dt3"."""
    if not a.terms:
        return "0"
    parts = []
    for (exps, dts), coeff in sorted(a.terms.items()):
        factors = [rational_str(coeff)]
        for pos, e in enumerate(exps):
            if e == 0:
                continue
            factors.append(f"t{pos + 1}" + (f"^{e}" if e > 1 else ""))
        factors.extend(f"dt{s}" for s in dts)
        parts.append(" ".join(factors))
    return " + ".join(parts)


def parse_form(text: str, dim: int) -> Form:
    """Parse the textual syntax produced by :func:`format_form`.

    dt factors may appear in any order (a sign is tracked); a repeated dt
    index makes the term vanish.
    """
    text = text.strip()
    if text in ("0", ""):
        return Form.zero(dim)
    result = Form.zero(dim)
    for raw_term in text.split("+"):
        raw_term = raw_term.strip()
        if not raw_term:
            continue
        coeff = Fraction(1)
        exps = [0] * dim
        dts: list[int] = []
        saw_coeff = False
        for token in raw_term.split():
            m = _T_TOKEN.match(token)
            if m:
                idx = int(m.group(1))
                if not 1 <= idx <= dim:
                    raise ValueError(f"generator {token!r} out of range")
                exps[idx - 1] += int(m.group(2) or 1)
                continue
            m = _DT_TOKEN.match(token)
            if m:
                idx = int(m.group(1))
                if not 1 <= idx <= dim:
                    raise ValueError(f"generator {token!r} out of range")
                dts.append(idx)
                continue
            if saw_coeff:
                raise ValueError(f"unrecognized token {token!r}")
            coeff = Fraction(token)
            saw_coeff = True
        if len(set(dts)) != len(dts):
            continue
        inversions = sum(
            1 for i in range(len(dts)) for j in range(i + 1, len(dts)) if dts[i] > dts[j]
        )
        if inversions % 2:
            coeff = -coeff
        result = result + Form.monomial(dim, tuple(exps), tuple(sorted(dts)), coeff)
    return result
