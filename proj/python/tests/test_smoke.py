from fractions import Fraction

import pytest

import monotri


def test_hmt_counts_agree():
    for method in ("brute", "recursion", "theorem", "beta", "gamma-bar"):
        assert monotri.count_hmt(4, 2, [1, 2], method=method) == 3
    assert monotri.count_weak_hmt(3, 3, [1, 2]) == 5
    assert monotri.beta(3, 3, [1, 2]) == Fraction(5)


def test_polynomials_as_text():
    assert monotri.gamma_poly(2) == "x - k1 + 1"
    assert monotri.gamma_poly(1) == "1"
    assert monotri.gamma_star(1) == "1"


def test_big_integers_are_python_ints():
    v = monotri.asm_count(40)
    assert isinstance(v, int)
    assert v > 2**64
    assert monotri.vsasm_count(3) == 26
    assert monotri.count_vsasm(3, method="brute") == 26


def test_rationals_are_fractions():
    assert monotri.leading_constant(5) == Fraction(1, 48)
    assert isinstance(monotri.leading_constant(3), Fraction)


def test_generating_function_values():
    assert monotri.mt_gf_coeff([3, 2, 1]) == -1
    assert monotri.mt_gf_coeff([-1, 2, 3]) == 7
    assert monotri.alpha_value([-1, 2, 3]) == 23
    assert monotri.asm_constant_term(4) == 42
    value, in_region, warnings = monotri.hmt_gf_coeff(2, 5, [3])
    assert (value, in_region, warnings) == (3, True, [])


def test_asm_enumeration():
    assert [monotri.enumerate_asm(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]
    assert monotri.count_mt([1, 2, 3]) == 7


def test_extended_sum_with_python_callable():
    assert monotri.extended_sum(lambda l: l[0], [1, 3]) == 6
    assert monotri.extended_sum(lambda l: Fraction(1, 2), [5, 3]) == Fraction(-1, 2)
    assert monotri.gamma_recursive(3, 10, [4, 2], extended=True) == -8


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        monotri.count_hmt(3, 3, [2, 1])
    with pytest.raises(ValueError):
        monotri.count_hmt(3, 3, [1, 2], method="nope")


def test_verify_suite():
    report = monotri.verify("genfun")
    assert report and all(p["passed"] for p in report)


def test_cli_entry():
    code, out, err = monotri.run_cli(["mt", "count", "--bottom", "1,2,3"])
    assert (code, out, err) == (0, "7\n", "")
    code, _, _ = monotri.run_cli(["asm", "count", "--size", "0"])
    assert code == 2
