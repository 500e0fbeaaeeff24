"""Exact enumeration of alternating (zigzag) permutations.

A permutation ``w = w_1 w_2 ... w_n`` is *alternating* when
``w_1 > w_2 < w_3 > w_4 < ...`` and *reverse alternating* when the
inequalities are flipped.  This package counts them exactly — refined by
cycle type, fixed points, shape under the RSK correspondence,
inverse-descent class, and multiset content — via umbral evaluation of
symmetric-function identities, and validates every formula against
brute-force oracles.

Layers, bottom to top:

``zigzag.exact``     Euler numbers, umbral polynomials, the umbral step.
``zigzag.perms``     permutations, tableaux, ribbon shapes, and all oracles.
``zigzag.symfunc``   power-sum symmetric functions, characters, patterns.
``zigzag.useries``   truncated (q,)t-series over umbral polynomials.
``zigzag.formulas``  the counting formulas, each with cross-checked routes.
``zigzag.cli``       the ``zigzag`` command-line interface.
"""

from .exact import E, EulerPoly, Rational, euler_number, euler_numbers, umbral_eval

__all__ = [
    "E",
    "EulerPoly",
    "Rational",
    "euler_number",
    "euler_numbers",
    "umbral_eval",
]

__version__ = "0.1.0"
