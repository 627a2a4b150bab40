"""Moment inequality toolkit for sums of independent random variables."""

from ._mgl import (
    Atom,
    FiniteDistribution,
    SharpnessNotAttained,
    abs_moment,
    builtin_names,
    check_condition,
    convolve,
    decompose,
    fuzz,
    gap,
    gap_callable,
    make_two_point_centered,
    make_two_point_symmetric,
    mean,
    moment_ratio,
    phi_four,
    phi_two,
    point_mass,
    psi,
    psi_extremum,
    rademacher,
    random_centered,
    random_symmetric,
    ratio_extremize,
    recompose,
    sharp_bounds,
    total_variation,
)

__all__ = [
    "Atom",
    "FiniteDistribution",
    "SharpnessNotAttained",
    "abs_moment",
    "builtin_names",
    "check_condition",
    "convolve",
    "decompose",
    "fuzz",
    "gap",
    "gap_callable",
    "make_two_point_centered",
    "make_two_point_symmetric",
    "mean",
    "moment_ratio",
    "phi_four",
    "phi_two",
    "point_mass",
    "psi",
    "psi_extremum",
    "rademacher",
    "random_centered",
    "random_symmetric",
    "ratio_extremize",
    "recompose",
    "sharp_bounds",
    "total_variation",
]
