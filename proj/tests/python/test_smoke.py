import json
import math

import pytest

import globdyn


def test_sturm():
    assert globdyn.enumerate_sturm(5) == [[1, 2, 3, 4, 5], [1, 4, 3, 2, 5]]
    assert globdyn.enumerate_sturm(7, method="arches") == globdyn.enumerate_sturm(7)
    assert globdyn.is_sturm([1, 4, 3, 2, 5])
    assert not globdyn.is_sturm([1, 3, 2, 4, 5])
    assert globdyn.morse_vector([1, 4, 3, 2, 5]) == [0, 1, 2, 1, 0]


def test_meanders_and_traces():
    assert globdyn.meander_components([1, 4, 3, 2, 5]) == 1
    assert globdyn.seaweed_components("2,4") == 2
    assert globdyn.billiard_components("2,2|1,3") == globdyn.seaweed_components("2,2|1,3")
    assert globdyn.birainbow_formula([4, 6]) == 2
    assert globdyn.tl_trace("N=4: 2 1 3") == 1


def test_shooting():
    assert globdyn.shoot_sigma(15.0) == [1, 4, 3, 2, 5]
    assert len(globdyn.find_equilibria(15.0)) == 5


def test_bianchi():
    assert max(abs(x) for x in globdyn.bianchi_rhs([0, 0, 0, 1, 0])) == 0.0
    r = 1 - 0.75 * (3 * 0.01**2 - 6 * 0.01**2)
    traj = globdyn.bianchi_integrate([0.01, 0.01, 0.01, math.sqrt(r), 0], 20.0, backward=True)
    assert traj["t"][-1] == pytest.approx(-20.0)
    assert max(abs(x) for x in traj["Omega"]) < 1e-6
    assert all(b >= a for a, b in zip(traj["J"], traj["J"][1:]))


def test_kasner():
    assert globdyn.kasner_images(0.0) == [(math.pi, 0)]
    it = globdyn.kasner_iterate(0.3, 5)
    assert len(it["steps"]) == 6
    assert it["termination"] == "max-iterations"
    assert globdyn.ifs_steps_to_cover([(math.radians(10), math.radians(1))], 2.4) == 11
    full = globdyn.ifs_iterate([(0.0, 0.1)], 40, 2.4)
    assert full == [(0.0, 2 * math.pi)]
    stats = globdyn.termination_stats(1000, 50, 1.8, seed=7, jobs=2)
    assert stats["fraction"] >= 0.99


def test_errors():
    with pytest.raises(globdyn.GlobdynError) as info:
        globdyn.kasner_images(math.pi / 3)
    assert info.value.code == "TangencyPoint"
    with pytest.raises(ValueError):
        globdyn.is_sturm([1, 1])


def test_cli():
    code, out, _ = globdyn.cli(["sturm", "check", "1,4,3,2,5"])
    assert code == 0
    assert json.loads(out)["sturm"] is True
    assert globdyn.cli(["nonsense"])[0] == 2
