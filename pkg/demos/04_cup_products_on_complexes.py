#!/usr/bin/env python3
"""Cup-like products on finite simplicial complexes.

On any finite ordered complex, including cochains as elementary forms,
multiplying, and integrating back defines a graded commutative product with
the classical support, derivation, and unit properties; it fails to be
associative, and the transferred ternary operation repairs that failure up to
coboundary.
"""

from simplicial_transfer import (
    ComplexContraction,
    GlobalCochain,
    OrderedComplex,
    check_a_infinity,
    check_whitney_conditions,
    cup,
    global_coboundary,
    load_complex,
    transferred_global_m,
)

triangle = OrderedComplex([0, 1, 2], [[0, 1, 2]])
boundary = load_complex('{"vertices": [0, 1, 2], "simplices": [[0, 1], [0, 2], [1, 2]]}')
path = OrderedComplex([0, 1, 2], [[0, 1], [1, 2]])

print("Closure of the solid triangle:", [list(s) for s in triangle.simplices])
print()

x0 = GlobalCochain.basis_element(triangle, (0,))
e01 = GlobalCochain.basis_element(triangle, (0, 1))

print("Products of indicator cochains:")
print("  x0 cup x0 =", cup(x0, x0))
print("  x0 cup e01 =", cup(x0, e01))
print("  far-apart vertices on a path multiply to zero:",
      not cup(GlobalCochain.basis_element(path, (0,)),
              GlobalCochain.basis_element(path, (2,))))
print()

print("Associativity fails:")
lhs = cup(cup(x0, x0), e01)
rhs = cup(x0, cup(x0, e01))
print("  (x0 cup x0) cup e01 =", lhs)
print("  x0 cup (x0 cup e01) =", rhs)
print()

print("The transferred ternary operation measures the failure; the structure")
print("relation at arity three holds on the whole basis:")
bundle = ComplexContraction(triangle)
print(" ", check_a_infinity(bundle, 3).checks[-1].to_text())
print()

print("The coboundary is the arity-one operation:")
print("  m_1(x0) =", transferred_global_m([x0]))
print("  delta(x0) =", global_coboundary(x0))
print()

print("The classical product conditions, checked on the boundary triangle:")
print(check_whitney_conditions(boundary).to_text())
