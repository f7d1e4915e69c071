import json
from pathlib import Path

import pytest

from kleppner.cli import main
from kleppner.config import ConfigError, parse_config
from kleppner.report import run

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
ALL_FIXTURES = sorted(FIXTURES.glob("*.tomlish"))


def test_fixture_dir_is_populated():
    names = {p.name for p in ALL_FIXTURES}
    assert {"nct_pq.tomlish", "nct_three_torus.tomlish", "heisenberg.tomlish",
            "f2z2_sigma.tomlish", "z2z2_oracle.tomlish"} <= names


@pytest.mark.parametrize("path", ALL_FIXTURES, ids=lambda p: p.stem)
def test_fixtures_parse_and_run(path):
    config = parse_config(path.read_text(), name=path.stem)
    report = run(config)
    payload = report.to_dict(include_timing=False)
    assert payload["instance"] == path.stem
    if "validate" in config.analyses:
        assert payload["validate"]["passed"]
    if "oracle" in config.analyses:
        assert payload["oracle"]["route_a"] == payload["oracle"]["route_b"]


def test_fixture_conclusions():
    def verdict_of(name):
        config = parse_config((FIXTURES / name).read_text(), name=name)
        return run(config).payload["verdict"]["conclusion"]

    assert verdict_of("nct_pq.tomlish") == "holds"
    assert verdict_of("nct_three_torus.tomlish") == "holds"
    assert verdict_of("nct_three_torus_dependent.tomlish") == "fails"
    assert verdict_of("heisenberg.tomlish") == "holds"
    assert verdict_of("heisenberg_rational.tomlish") == "fails"
    assert verdict_of("f2z2_sigma.tomlish") == "holds"


def test_empty_config_reports_missing_group():
    with pytest.raises(ConfigError, match="missing \\[group\\] section"):
        parse_config("")


def test_symbol_conflict_rejected():
    text = """
[basis]
symbols = theta

[params]
theta = 1/2

[group]
kind = free_abelian
rank = 2
"""
    with pytest.raises(ConfigError, match="both as a basis symbol"):
        parse_config(text)


def test_parse_diagnostics_carry_line_numbers():
    text = "[group]\nkind = free_abelian\nrank = 2\nbogus line here\n"
    with pytest.raises(ConfigError, match="line 4"):
        parse_config(text)


def test_unknown_keys_and_kinds_rejected():
    with pytest.raises(ConfigError, match="unknown group kind"):
        parse_config("[group]\nkind = banach\n")
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config("[group]\nkind = heisenberg\nflavor = blue\n")
    with pytest.raises(ConfigError, match="unknown analysis"):
        parse_config("[group]\nkind = heisenberg\n[run]\nanalyses = frobnicate\n")


def test_oracle_requires_finite_group():
    text = "[group]\nkind = free_abelian\nrank = 2\n[run]\nanalyses = oracle\n"
    with pytest.raises(ConfigError, match="finite group"):
        parse_config(text)


def test_undeclared_symbol_in_phase():
    text = """
[group]
kind = free_abelian
rank = 2

[cocycle]
kind = rotation
theta = zeta
"""
    with pytest.raises(ConfigError, match="zeta"):
        parse_config(text)


def test_params_resolve_dependent_values():
    text = """
[basis]
symbols = t3

[params]
t1 = 1/3 + (2)t3

[group]
kind = free_abelian
rank = 2

[cocycle]
kind = rotation
theta = t1
"""
    config = parse_config(text)
    val = config.cocycle((1, 0), (0, 1))
    from fractions import Fraction
    assert val.rational == Fraction(1, 6)
    assert val.coeff("t3") == 1


def test_json_report_round_trips():
    config = parse_config((FIXTURES / "nct_pq.tomlish").read_text(), name="nct_pq")
    report = run(config)
    blob = report.to_json()
    parsed = json.loads(blob)
    assert parsed == report.to_dict()
    assert parsed["schema"] == 1


def test_reports_deterministic_modulo_timing():
    text = (FIXTURES / "heisenberg.tomlish").read_text()
    r1 = run(parse_config(text, name="x")).to_dict(include_timing=False)
    r2 = run(parse_config(text, name="x")).to_dict(include_timing=False)
    assert r1 == r2


def test_cli_exit_codes(tmp_path, capsys):
    ok = main(["--input", str(FIXTURES / "z2z2_oracle.tomlish")])
    assert ok == 0
    out = capsys.readouterr().out
    assert "route A dim = 1" in out

    bad = tmp_path / "broken.tomlish"
    bad.write_text("[group]\nkind = nonsense\n")
    assert main(["--input", str(bad)]) == 1
    assert main(["--input", str(tmp_path / "missing.tomlish")]) == 1


def test_cli_json_format(capsys):
    assert main(["--input", str(FIXTURES / "f2z2_sigma.tomlish"), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"]["conclusion"] == "holds"
    assert payload["centralizers"]["trivial"]["status"] == "holds"


def test_cli_seed_and_cap_override(capsys):
    assert main(["--input", str(FIXTURES / "nct_pq.tomlish"), "--seed", "42",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["seed"] == 42


def test_cli_oracle_mismatch_exit_code(monkeypatch, capsys):
    import kleppner.oracle as oracle_mod

    def broken_route_b(rep, helems):
        return 999, []

    monkeypatch.setattr(oracle_mod, "_route_b", broken_route_b)
    code = main(["--input", str(FIXTURES / "z2z2_oracle.tomlish")])
    assert code == 2
    assert "ORACLE MISMATCH" in capsys.readouterr().err


def test_explicit_finite_table_config():
    text = """
[group]
kind = finite
table = [[0,1],[1,0]]

[cocycle]
kind = table
table = [["0","0"],["0","1/2"]]

[run]
analyses = validate kleppner oracle
"""
    config = parse_config(text)
    report = run(config)
    assert report.payload["validate"]["passed"]
    # sigma(1,1) = -1 on Z_2 is a coboundary: the nontrivial class stays
    # regular, Kleppner fails, and the commutant is two-dimensional
    assert report.payload["kleppner"]["status"] == "fails"
    assert report.payload["oracle"]["route_a"] == 2
    assert report.payload["oracle"]["route_b"] == 2
