"""Exact homotopy-transfer engine on simplicial cochains.

The package computes, entirely in rational arithmetic, the higher product
structure that polynomial differential forms induce on simplicial cochains
through the Whitney inclusion and Dupont's contraction, and verifies the
defining identities of that structure on complete finite bases.  On the
interval the higher products reproduce the Bernoulli numbers.
"""

from .rationals import (
    Rational,
    UniPoly,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    exp_series_ratio,
    factorial,
    parse_rational,
    rational_str,
)
from .forms import (
    Form,
    differential,
    face_restrict,
    format_form,
    generator,
    integrate_face,
    integrate_top,
    monomial_basis,
    parse_form,
    vertex_evaluate,
    wedge,
)
from .cochains import (
    Cochain,
    basis_faces,
    coboundary,
    cochain_from_interval_basis,
    cochain_from_records,
    cochain_records,
    elementary_form,
    format_cochain,
    include_g,
    interval_basis_components,
    project_f,
    restrict_cochain,
    unit_cochain,
)
from .contraction import check_contraction, h_operator, homotopy_H, s_operator
from .tensorwords import (
    Homog,
    TensorSum,
    deconcatenations,
    formal_word,
    koszul_apply,
    koszul_sign,
    outer_shuffle,
    shuffle,
    shuffle_span_membership,
)
from .trees import (
    LEAF,
    PlanarTree,
    enumerate_trees,
    evaluate_tree_G,
    evaluate_tree_m,
    path_trees,
    tree_count,
    tree_from_text,
    tree_to_text,
)
from .transfer import (
    IntervalTable,
    PPolynomials,
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
from .complexes import (
    ComplexContraction,
    ComplexFormatError,
    GlobalCochain,
    GlobalForm,
    OrderedComplex,
    check_whitney_conditions,
    complex_from_data,
    cup,
    global_H,
    global_coboundary,
    global_cochain_from_records,
    global_cochain_records,
    global_differential,
    global_f,
    global_g,
    global_wedge,
    load_complex,
    load_global_cochain,
    transferred_global_m,
)
from .reporting import CheckRecord, ContractionReport, VerificationReport

__version__ = "0.1.0"
