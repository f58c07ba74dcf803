import pytest
from hypothesis import given, settings, strategies as st

from loopmod.drinfeld import (DrinfeldTuple, chi_of, detect_period, expand_roots,
                              extract_base, minus_tuple, parse_tuple, power_quotient)
from loopmod.errors import (ConfigError, FactoredFormRequired, NotADivisor, NotPeriodic,
                            TrivialTuple)
from loopmod.ratfunc import FieldElem


def coeffs(pi, i=1):
    return [str(c) for c in pi.polys[i - 1]]


def test_period_intro_example():
    pi = parse_tuple("roots: [[1, -1]]", 1, 2)
    assert coeffs(pi) == ["1", "0", "-1"]
    assert detect_period(pi) == 2


def test_period_examples():
    assert detect_period(parse_tuple("coeffs: [[1, -1], [1], [1]]", 3, 1)) == 1
    assert detect_period(parse_tuple("coeffs: [[1, 0, 0, -1], [1, 0, 0, 0, 0, 0, -1]]",
                                     2, 1)) == 3
    with pytest.raises(TrivialTuple):
        detect_period(parse_tuple("coeffs: [[1], [1]]", 2, 1))


def test_extract_base_examples():
    pi = parse_tuple("roots: [[1, -1]]", 1, 2)
    base = extract_base(pi, 2)
    assert coeffs(base) == ["1", "-1"]
    assert [str(b) for b in base.roots[0]] == ["1"]
    pi1 = parse_tuple("roots: [[1]]", 1, 1)
    assert extract_base(pi1, 1).polys == pi1.polys
    pi3 = DrinfeldTuple.natural_power(1, 3)
    assert coeffs(pi3) == ["1", "0", "0", "-1"]
    assert coeffs(extract_base(pi3, 3)) == ["1", "-1"]


def test_extract_base_representative_is_deterministic():
    pi = parse_tuple("roots: [[z^2, z, 1]]", 1, 3)
    assert [str(b) for b in extract_base(pi, 3).roots[0]] == ["1"]
    pi = parse_tuple("roots: [[-2, 2]]", 1, 2)
    assert [str(b) for b in extract_base(pi, 2).roots[0]] == ["2"]


def test_extract_base_errors():
    with pytest.raises(FactoredFormRequired):
        extract_base(parse_tuple("coeffs: [[1, 0, -1]]", 1, 2), 2)
    with pytest.raises(NotPeriodic):
        extract_base(parse_tuple("roots: [[1, 1]]", 1, 2), 2)


def test_power_quotient_examples():
    base = parse_tuple("roots: [[1]]", 1, 4)
    assert coeffs(power_quotient(base, 2, 1)) == ["1", "0", "-1"]
    assert coeffs(power_quotient(base, 2, 2)) == ["1", "-1"]
    assert coeffs(power_quotient(base, 4, 2)) == ["1", "0", "-1"]
    assert coeffs(power_quotient(base, 4, 1)) == ["1", "0", "0", "0", "-1"]
    with pytest.raises(NotADivisor):
        power_quotient(base, 4, 3)


def test_power_quotient_coefficient_form():
    base = parse_tuple("coeffs: [[1, -1]]", 1, 4)
    assert coeffs(power_quotient(base, 4, 2)) == ["1", "0", "-1"]


def test_minus_tuple_examples():
    assert coeffs(minus_tuple(parse_tuple("coeffs: [[1, -1]]", 1, 1))) == ["1", "-1"]
    assert coeffs(minus_tuple(parse_tuple("coeffs: [[1, -2]]", 1, 1))) == ["1", "-1/2"]
    triv = parse_tuple("coeffs: [[1], [1]]", 2, 1)
    assert minus_tuple(triv).polys == triv.polys


def test_chi_examples():
    chi = chi_of(parse_tuple("coeffs: [[1, -1]]", 1, 1), 0)
    c, t = chi.value(("P", 1, 1))
    assert str(c) == "-1" and t == 1
    assert chi.value(("P", 1, 0))[0].is_one()
    chi2 = chi_of(parse_tuple("coeffs: [[1, 0, -1]]", 1, 2), 0)
    assert chi2.value(("P", 1, 1))[0].is_zero()
    assert chi2.value(("K", 1))[0] == FieldElem.q(2, 2)
    assert chi_of(parse_tuple("coeffs: [[1, 0, -1]]", 1, 2), 3).value(("D",))[0] == \
        FieldElem.q(2, 3)


def test_chi_support_multiple_of_period():
    pi = parse_tuple("coeffs: [[1, 0, 0, 2, 0, 0, -1], [1, 0, 0, 5]]", 2, 1)
    m = detect_period(pi)
    assert m == 3
    assert all(r % m == 0 for _, r in chi_of(pi, 0).support())


def test_parse_errors():
    with pytest.raises(ConfigError):
        parse_tuple("polys: [[1]]", 1, 1)
    with pytest.raises(ConfigError):
        parse_tuple("roots: [[1], [2]]", 1, 1)
    with pytest.raises(ConfigError):
        parse_tuple("coeffs: [[2, 1]]", 1, 1)
    with pytest.raises(ConfigError):
        parse_tuple("roots: [[__import__('os')]]", 1, 1)
    with pytest.raises(ConfigError):
        parse_tuple("roots: [[z^x]]", 1, 3)


def test_parse_symbols():
    pi = parse_tuple("roots: [[z, -z + q/2]]", 1, 3)
    z, q = FieldElem.zeta(3), FieldElem.q(3)
    assert pi.polys[0] == expand_roots(3, [z, -z + q / 2])


def test_roots_must_match_coefficients():
    with pytest.raises(ValueError):
        DrinfeldTuple(1, ((FieldElem.one(1), FieldElem.one(1)),), 1,
                      roots=((FieldElem.one(1),),))


root_exps = st.lists(st.integers(0, 5), min_size=1, max_size=3)


@settings(max_examples=30, deadline=None)
@given(root_exps, st.sampled_from([2, 3, 6]))
def test_factor_round_trip(exps, m):
    # a zeta_m-stable multiset from orbit representatives zeta_6^e * (e+2)
    M = 6
    reps = [FieldElem.zeta(M, e) * (e + 2) for e in exps]
    zm = FieldElem.zeta(M, M // m)
    roots = [b * zm ** s for b in reps for s in range(m)]
    pi = DrinfeldTuple.from_roots(1, [roots], M)
    assert detect_period(pi) % m == 0
    base = extract_base(pi, m)
    assert power_quotient(base, m, 1).polys == pi.polys
    assert power_quotient(base, m, m).polys == base.polys
    if detect_period(base) == 1:
        for d in (1, m):
            assert detect_period(power_quotient(base, m, d)) % (m // d) == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(0, 3))
def test_minus_involution(vals, e):
    roots = [FieldElem.zeta(4, e) * v for v in vals]
    pi = DrinfeldTuple.from_roots(1, [roots], 4)
    assert minus_tuple(minus_tuple(pi)).polys == pi.polys
