import pytest

import toricmf

POWER_FAMILY_K3 = {"a": [6, 6, 6], "b": [1, 4, 1], "c": [4, 1, 1]}
QUARTIC = {"a": [4, 4], "b": [1, 3], "c": [3, 1]}
TWISTED_CUBIC = {"a": [3, 3], "b": [1, 2], "c": [2, 1]}
TORSION = {
    "a": [2, 2],
    "b": [1, 1],
    "c": [1, 1],
    "torsion": {"moduli": [2], "h_x": [[1], [1]], "h_z": [1], "h_y": [0]},
}


def test_ext_gcd_bezout():
    g, u, v = toricmf.ext_gcd(4, 6)
    assert g == 2 and 4 * u + 6 * v == 2
    big = 10**40 + 7
    g, u, v = toricmf.ext_gcd(6 * big, 15 * big)
    assert g == 3 * big and u * 6 * big + v * 15 * big == g


def test_lattice_and_fan():
    assert toricmf.normalize_basis((4, 0), (-1, 1)) == ((4, 0), (3, 1))
    assert toricmf.kernel_of_pair_map([3, 1], [1, 3], [4, 4]) == ((4, 0), (3, 1))
    assert toricmf.hj_expand(4, 3) == ([2, 2, 2], [4, 3, 2, 1, 0])
    assert toricmf.lattice_ltilde(POWER_FAMILY_K3) == ((6, 0), (2, 2))
    assert toricmf.lattice_ltilde(TORSION) == ((2, 0), (0, 2))
    fan = toricmf.build_fan(QUARTIC)
    assert fan["eps"] == [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]
    assert (fan["nu"], fan["mu_neg"]) == (0, 2)
    assert fan["invariants_ok"]


def test_generators_and_macaulayfication():
    texts = {g["text"] for g in toricmf.generators(POWER_FAMILY_K3)}
    assert "z^6 - x1*x2^4*x3" in texts and len(texts) == 5
    assert toricmf.new_semigroup_generators(POWER_FAMILY_K3) == [{"coords": [2, 2, 2]}]
    assert toricmf.semigroup_member(POWER_FAMILY_K3, [2, 2, 2]) is None
    assert toricmf.semigroup_member(QUARTIC, [4, 4]) == (1, 1, [0, 0])
    assert toricmf.in_lattice(QUARTIC, [-1, -1, 1, 1])
    assert not toricmf.in_lattice(TORSION, [0, 0, -1, 1])


def test_analyze_report():
    rep = toricmf.analyze(TWISTED_CUBIC, verify=True, max_degree=9)
    assert rep["is_cm"] is True and rep["tau"] == "3"
    assert rep["macaulayfication"]["trivial"] is True
    assert rep["verification"]["passed"] is True
    rep = toricmf.analyze(POWER_FAMILY_K3)
    assert "verification" not in rep
    assert rep["macaulayfication"]["new_gens"] == [{"coords": ["2", "2", "2"]}]


def test_errors():
    with pytest.raises(toricmf.InvalidInput, match="missing key 'c'"):
        toricmf.parse_input({"a": [3], "b": [4]})
    with pytest.raises(ValueError):
        toricmf.analyze('{"a": [3], "b": [0], "c": [5]}')
