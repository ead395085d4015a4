"""Smoke tests for the python module: a thin sanity pass over the bound API."""

import permcf


def test_stats():
    assert permcf.stat("des", [4, 1, 2, 7, 9, 6, 5, 8, 3]) == 4
    assert permcf.stat("exc", [3, 2, 1]) == 1
    assert permcf.stat("inv", [4, 1, 2, 3]) == 3
    assert permcf.signed_stat("des_B", [-1]) == 1
    assert "nest" in permcf.stat_names()


def test_bijections():
    assert permcf.apply("psi", [4, 1, 2, 7, 9, 6, 5, 8, 3]) == [3, 5, 1, 4, 9, 6, 8, 2, 7]
    assert permcf.apply("psi_fv", [4, 1, 2, 7, 9, 6, 5, 8, 3]) == "UBRDURBD;0,0,0,1,0,1,1,0"
    assert "phi_fz_var" in permcf.bijection_names()


def test_cf_and_gamma():
    coeffs = permcf.cf_expand("eulerian-s", 3)
    assert coeffs[3] == "1+4*t+t^2"
    assert permcf.gamma_expand("1+4*t+t^2", 2) == ["1", "2"]


def test_class_polynomial():
    assert permcf.class_polynomial("S(231)", 4, ["des"]) == "1+6*p+6*p^2+p^3"


def test_verify_subset():
    report = permcf.verify(["eq-1.2"], 5)
    assert report["pass"] is True
    assert report["cases"][0]["id"] == "eq-1.2"
    assert report["cases"][0]["status"] == "pass"


def test_table():
    csv = permcf.table("S", ["des"], 3)
    assert "3,1,4,1" in csv
