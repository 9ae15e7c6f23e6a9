"""Colored permutations, rim hook lattices and their limit laws."""

from fractions import Fraction

from . import _core
from ._core import (
    GuardError,
    PainleveError,
    airy_ai,
    combine,
    conjugate,
    core_and_quotient,
    dim_1,
    dim_m_formula,
    dim_m_removal,
    fredholm_airy_oracle,
    haar_moment,
    hastings_mcleod,
    is_decomposable,
    l_even,
    l_odd,
    limit_cdf,
    lis_colored,
    lis_plain,
    partitions_of,
    removable_rim_hooks,
    sample_scaled_L,
    shape_of_colored,
    theorem81_csv,
    tw_cdf,
    verify_identities,
    width_defect,
)

__version__ = _core.__version__


def _fractions(pmf):
    return {value: Fraction(num, den) for value, (num, den) in sorted(pmf.items())}


def exact_L_distribution(n, m):
    """Exact law of the colored LIS on S_n^(m) as {value: Fraction}."""
    return _fractions(_core.exact_L_pmf(n, m))


def enumerate_L_even(n):
    return _fractions(_core.enumerate_L_even_pmf(n))


def enumerate_L_odd(n):
    return _fractions(_core.enumerate_L_odd_pmf(n))


def exact_L_cdf(n, m):
    """{k: P(L <= k)} with exact fractions."""
    total = Fraction(0)
    out = {}
    for value, mass in exact_L_distribution(n, m).items():
        total += mass
        out[value] = total
    return out
