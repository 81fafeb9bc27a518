import math

import pytest

import birkhoff


def test_parse_and_hessian():
    assert birkhoff.parse_poly("x*y") == "x*y"
    assert birkhoff.hessian("x*y*z") == "2*x*y*z"
    with pytest.raises(birkhoff.ParseError):
        birkhoff.parse_poly("x^3+w")


def test_check_reports():
    conic = birkhoff.check("6*x^2+3*y^2+2*z^2")
    assert conic["verdict"] == "PASS_DEGREE_2"
    assert conic["c"] == "288"
    fermat = birkhoff.check("x^3+y^3+z^3", k=2)
    assert fermat["verdict"] == "FAIL_SMOOTH_HIGH_DEGREE"
    assert len(fermat["inflections"]) == 9
    assert birkhoff.hess_c("x^3+y^3+z^3", k=2) is None
    with pytest.raises(birkhoff.DegenerateInput):
        birkhoff.check("x^3+y^3+z^3")


def test_identities():
    assert birkhoff.third_order_identity_check("x^3-2*x*y+y^2-1")
    assert birkhoff.cube_identity_check("x^2+y^2-1", "x+2*y")
    assert birkhoff.hf_identity_check("x^3+y^3+z^3")


def test_mu3():
    r = birkhoff.mu3("x^2+2*y^2-1", "hyperbolic")
    assert r["even_coefficients_vanish"] and r["mu1_matches"] and r["identity_holds"]
    assert (r["scalar"], r["metric_power"]) == ("1/3", 2)
    assert birkhoff.mu3("x^2+y^2-1/4", "sphere", "2")["both_vanish_mod_g"]


def test_simulate_and_curvature():
    orbit = birkhoff.simulate("x^2+2*y^2-3*z^2", bounces=200, psi="-6*x^2-3*y^2+2*z^2")
    assert orbit["max_residual"] < 1e-8
    assert len(orbit["momenta"]) == 201
    assert orbit["csv"].startswith("bounce,r1,r2,r3,v1,v2,v3,M1,M2,M3,psi_residual\n")
    k = birkhoff.geodesic_curvature("x^2+y^2-z^2", "sphere", (math.sqrt(0.5), 0.0, math.sqrt(0.5)))
    assert abs(k - 1.0) < 1e-6
    with pytest.raises(birkhoff.DegenerateInput):
        birkhoff.simulate("x^2+y^2-z^2", start_offset=2.0)


def test_cli():
    code, out, _ = birkhoff.cli(["verify", "--which", "cube", "--cases", "5"])
    assert code == 0
    assert out.endswith("verify cube: 5/5 passed\n")
    assert birkhoff.cli(["simulate", "--cone", "x^2+2*y^2+3*z^2"])[0] == 4
