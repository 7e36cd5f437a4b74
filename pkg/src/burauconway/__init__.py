"""Exact Burau/Alexander/Conway computations for braid closures and the mod-4 splitting test."""

from .braidword import (
    BraidWord,
    closure_permutation,
    concat,
    is_knot_closure,
    mirror_star,
    parse_braid,
    power,
    reverse_re,
    ww_star,
)
from .burau import alexander_of_closure, char_poly, det, generator_matrix, represent
from .conway import (
    conway_of_closure,
    conway_of_ww_star,
    formal_sqrt_in_zsq,
    phi,
    phi_split_1m,
    phi_split_mm,
    three_braid_closed_form,
    z_split_lead_obstruction,
)
from .lucasfib import fibonacci, gen_fib_at, lucas, lucas_to_z_of_symmetric, omega
from .polyring import IntPoly, LambdaPoly, LaurentPoly, parse_intpoly, parse_laurent
from .splitmod4 import (
    conjecture_checks,
    cond_congruence,
    is_square_mod4,
    lead_coeff_restriction,
    split_mod4,
    sqrt_mod2,
    theorem11_report,
)

__version__ = "0.1.0"
