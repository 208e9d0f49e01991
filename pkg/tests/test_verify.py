import json

import pytest

from cartanshift import cli
from cartanshift import verify as vf

SMALL = dict(n_max=4, samples=3)


def test_config_validation():
    vf.RunConfig().validate()
    for bad in (dict(prime=8), dict(prime=7, n_max=4), dict(prime=2**61 - 1), dict(trials=1),
                dict(samples=-1), dict(i_max=0), dict(suites=("V0",))):
        with pytest.raises(ValueError):
            vf.RunConfig(**bad).validate()
    cfg = vf.RunConfig()
    assert (cfg.n_exterior, cfg.n_symmetric, cfg.imax(4)) == (6, 5, 6)
    assert vf.RunConfig(n_max=3).n_symmetric == 3


def test_parse_suites():
    assert vf.parse_suites("all") == vf.SUITES
    assert vf.parse_suites("v3,V1") == ("V1", "V3")
    assert vf.parse_suites("V1,X") == ("V1", "X")


def test_small_run_passes_and_is_deterministic():
    cfg = vf.RunConfig(**SMALL)
    a = vf.run(cfg)
    assert a.passed, {k: s.witnesses for k, s in a.suites.items() if not s.passed}
    assert list(a.to_json()["suites"]) == sorted(vf.SUITES, key=vf.SUITES.index)
    assert all(s.samples > 0 for s in a.suites.values())
    assert a.dumps() == vf.run(cfg).dumps()


def test_v7_reports_strict_increase():
    res = vf.run_suite("V7", vf.RunConfig(**SMALL))
    assert res.passed and res.notes["strict adeg increases"] >= 1


def test_failures_carry_input_and_replay(monkeypatch, capsys):
    monkeypatch.setattr(vf, "socle_dims", lambda c, q: [-1])
    cfg = vf.RunConfig(seed=3, **SMALL)
    res = vf.run_suite("V7", cfg)
    assert not res.passed and res.failures["socle = facets by size"] > 0
    w = res.witnesses[0]
    assert w["check"] == "socle = facets by size"
    assert set(w["input"]) == {"n", "facets"}
    assert w["replay"] == "cartanshift verify --suite V7 --seed 3 --prime 2147483647 --trials 3 --samples 3 --n-max 4"
    code = cli.main(["verify", "--suite", "V7", "--seed", "3", "--samples", "3", "--n-max", "4"])
    report = json.loads(capsys.readouterr().out)
    assert code == cli.EXIT_FAILED and not report["passed"]


def test_package_errors_become_failures(monkeypatch):
    from cartanshift.errors import OracleDisagreement

    def boom(*a, **k):
        raise OracleDisagreement("forced")
    monkeypatch.setattr(vf, "is_cm", boom)
    res = vf.run_suite("V9", vf.RunConfig(**SMALL))
    assert not res.passed and "sample:OracleDisagreement" in res.failures


def test_truncation_flag_runs():
    cfg = vf.RunConfig(n_max=3, samples=2, truncate_above_p=True, suites=("V1", "V3"))
    rep = vf.run(cfg)
    assert rep.passed and rep.to_json()["config"]["truncate_above_p"]
    assert "--truncate-above-p" in cfg.replay("V1")
