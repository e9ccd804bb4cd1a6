import json
import os
import subprocess
from fractions import Fraction

import pytest

import cmbrauer


def test_class_numbers():
    assert cmbrauer.fundamental_discriminant(-16) == (-4, 2)
    assert [cmbrauer.class_number(-4, f) for f in range(1, 6)] == [1, 1, 2, 2, 2]
    assert cmbrauer.class_number(-7, 3) == 4
    assert cmbrauer.class_number(-20) == 2
    assert cmbrauer.count_reduced_forms(-84) == 4
    with pytest.raises(ValueError):
        cmbrauer.class_number(-12, 1)


def test_big_integers_round_trip():
    m20 = 2**38 * 3**14 * 5**6 * 7**3 * 11**2 * 13 * 17 * 19
    assert cmbrauer.minkowski_constant(20) == m20
    assert cmbrauer.fundamental_discriminant(-4 * (10**20) ** 2) == (-4, 10**20)


def test_census():
    report = cmbrauer.cm_count_total(1, 200)
    assert report["total"] == 13
    assert report["certified_complete"]
    assert cmbrauer.cm_count_per_field(-3, 2) == 9
    assert cmbrauer.conductor_bound(-4, 2)[0] == 5
    assert cmbrauer.singular_k3_bound(1, 9) == 56


def test_lattices_and_brauer():
    assert cmbrauer.disc_hom(-3, 1, 1) == Fraction(3, 4)
    assert cmbrauer.disc_ns_kummer(-8, 1, 3) == 288
    assert cmbrauer.parse_lattice(64, "kummer") == (-4, 2)
    assert cmbrauer.brauer_shape_maximal(3, 1, K_in_k=True) == [3, 3]
    assert cmbrauer.divisibility_bound(1, 2, -20) == 288
    assert cmbrauer.uniform_bound_EE(1, -4) == 8


def test_grossencharakter():
    assert cmbrauer.count_points_ap(-1, 0, -4, 5) == -2
    assert cmbrauer.estimate_m(-1, 0, -4, 2, 10) == 1


def test_bounds():
    r = cmbrauer.eval_bound("isog_pair", {"f1": 1, "f2": 1, "disc": -4, "M_degree": 2})
    assert r["integer_bound"] == 25
    assert not r["conditional"]
    assert r["upper_value"] >= Fraction(256) / Fraction(355, 113) ** 2
    with pytest.raises(ValueError):
        cmbrauer.eval_bound("faltings_GRH", {"k_degree": 1})
    g = cmbrauer.eval_bound("faltings_GRH", {"k_degree": 1}, assume_grh=True)
    assert g["conditional"] and g["integer_bound"] == 298
    c = cmbrauer.compose_intro_bound(64, 1)
    assert c["constant_identity_holds"] and c["inequality_holds"]
    assert len(cmbrauer.bound_ids()) == 14


def test_cli_in_process():
    code, out, _ = cmbrauer.run_cli(["cm-count", "--degree", "1", "--bound", "200"])
    assert code == 0
    assert json.loads(out)["result"]["total"] == "13"
    code, _, _ = cmbrauer.run_cli(["nope"])
    assert code == 64


@pytest.mark.skipif("CMBRAUER_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary():
    proc = subprocess.run(
        [os.environ["CMBRAUER_CLI"], "classnum", "--disc", "-3", "--conductor", "6"],
        capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["result"]["class_number"] == "3"
