import math
from fractions import Fraction

import pytest

import rimhook


def test_version():
    assert rimhook.__version__ == "0.3.0"


def hook_dimension(rows):
    cols = [sum(1 for r in rows if r > j) for j in range(rows[0])]
    product = 1
    for i, r in enumerate(rows):
        for j in range(r):
            product *= r - j + cols[j] - i - 1
    return math.factorial(sum(rows)) // product


def test_partitions_and_dimensions():
    assert len(rimhook.partitions_of(10)) == 42
    assert rimhook.dim_1([2, 2]) == 2
    big = [30, 20, 10, 5]
    assert rimhook.dim_1(big) == hook_dimension(big)
    assert rimhook.dim_1(big) > 2**63
    assert rimhook.conjugate([3, 1]) == [2, 1, 1]
    assert sum(rimhook.dim_1(p) ** 2 for p in rimhook.partitions_of(8)) == math.factorial(8)


def test_quotient_round_trip():
    core, quotient = rimhook.core_and_quotient([2, 2], 2)
    assert core == []
    assert quotient == [[1], [1]]
    assert rimhook.combine(quotient) == [2, 2]
    assert rimhook.is_decomposable([3, 1], 2)
    assert not rimhook.is_decomposable([4, 2], 3)
    assert rimhook.removable_rim_hooks([2, 2], 2) == [[2], [1, 1]]
    assert rimhook.dim_m_formula([[1], [1]]) == rimhook.dim_m_removal([2, 2], 2) == 2
    assert rimhook.width_defect([3, 1], 2) == 1
    with pytest.raises(ValueError):
        rimhook.width_defect([1], 2)


def test_lis_statistics():
    assert rimhook.lis_plain([3, 1, 4, 5, 9, 2, 6]) == 4
    assert rimhook.lis_colored([2, 3, 1], [1, 1, 2], 2) == 3
    assert max(rimhook.shape_of_colored([1, 2], [2, 2], 2)) == 4
    assert (rimhook.l_even([1], [1]), rimhook.l_odd([1], [1])) == (2, 3)
    assert (rimhook.l_even([1], [-1]), rimhook.l_odd([1], [-1])) == (1, 1)


def test_exact_laws():
    cdf = rimhook.exact_L_cdf(2, 2)
    assert cdf == {1: Fraction(1, 8), 2: Fraction(3, 4), 3: Fraction(7, 8), 4: Fraction(1)}
    assert rimhook.exact_L_distribution(4, 2) == rimhook.enumerate_L_even(4)
    assert rimhook.enumerate_L_odd(1) == {1: Fraction(1, 2), 3: Fraction(1, 2)}
    with pytest.raises(rimhook.GuardError):
        rimhook.exact_L_distribution(11, 4)


def test_monte_carlo_is_reproducible():
    a = rimhook.sample_scaled_L(200, 2, 300, seed=5, threads=2)
    b = rimhook.sample_scaled_L(200, 2, 300, seed=5, threads=2)
    assert a == b and len(a) == 300 and a == sorted(a)
    m = rimhook.haar_moment(2, 2, 2, 20000, seed=3)
    assert abs(m["estimate"] - 6.0) < 4 * m["stderr"]


def test_limit_laws():
    assert rimhook.airy_ai(0.0) == pytest.approx(0.3550280539, abs=1e-10)
    assert abs(rimhook.tw_cdf(-2.0) - rimhook.fredholm_airy_oracle(-2.0)) < 1e-6
    assert rimhook.limit_cdf(0.0, 2) == pytest.approx(rimhook.tw_cdf(0.0) ** 2)
    assert rimhook.hastings_mcleod([0.0])[0] > 0


def test_verify_and_theorem81():
    rows = rimhook.verify_identities(3, 2)
    assert rows and all(r["status"] == "PASS" for r in rows)
    csv = rimhook.theorem81_csv(100, 2, 200, seed=1)
    assert csv.startswith("# rimhook 0.3.0 theorem81")
    assert "x,empirical_cdf,limit_cdf,ks" in csv
