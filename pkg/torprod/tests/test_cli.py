import json

import pytest
from click.testing import CliRunner

from src.commands import cli, run
from src.models import FullReport, SpaceDescriptor
from src.utils.errors import TorsionDetected


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, env=None):
    return runner.invoke(cli, list(args), env=env)


def test_euler(runner):
    result = invoke(runner, "euler", "--fixture", "pps-2-4-6-2")
    assert result.exit_code == 0
    assert result.stdout == "4\n"


def test_hvector(runner):
    result = invoke(runner, "hvector", "--polytope", "prism")
    assert result.exit_code == 0
    assert result.stdout.strip() == "1 2 2 1"
    result = invoke(runner, "hvector", "--polytope", "square", "--order", "v11,v10,v01,v00")
    assert result.stdout.strip() == "1 2 1"


def test_pontryagin(runner):
    result = invoke(runner, "pontryagin", "--fixture", "cp2-connected-sum")
    assert result.exit_code == 0
    assert result.stdout.strip() == "6*x1*x2 (nonzero)"
    result = invoke(runner, "pontryagin", "--family", "PT", "--m", "3", "--polytope", "square",
                    "--char", "hirzebruch", "--r", "2", "--var", "x")
    assert result.stdout.strip() == "0 (zero)"


def test_homology(runner):
    result = invoke(runner, "homology", "--fixture", "dold-1-1", "--twisted")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[:4] == ["H_0 = Z", "H_1 = Z", "H_2 = Z/2", "H_3 = 0"]
    assert "closed form: agrees" in result.stdout


def test_cohomology(runner):
    result = invoke(runner, "cohomology", "--fixture", "ps-2-2-rp1")
    assert result.exit_code == 0
    assert "total: 12" in result.stdout
    assert "base ring: outside the ring hypotheses" in result.stdout
    result = invoke(runner, "cohomology", "--fixture", "pps-2-2-1", "--basis")
    assert "relation: b1^2 = a^2*b1" in result.stdout
    result = invoke(runner, "cohomology", "--fixture", "dold-1-1", "--ring", "Q")
    assert "poincare: 1 + t + t^2 + t^3" in result.stdout


def test_sw_class(runner):
    result = invoke(runner, "sw-class", "--family", "PPS", "--m", "1", "--pair", "1:1", "--splitting", "thom")
    assert result.stdout.strip() == "w = 1 + a"
    result = invoke(runner, "sw-class", "--fixture", "pt-3-cp1-cp1")
    assert result.stdout.strip() == "w = 1 + c^2"


def test_span(runner):
    result = invoke(runner, "span", "--fixture", "pt-3-cp1-cp1")
    assert result.exit_code == 0
    assert "span: 5 <= span <= 7" in result.stdout
    assert "lower bound from: CP1-fibre extension (iterated)" in result.stdout
    assert "stably parallelizable: No" in result.stdout


def test_verify_fields(runner):
    result = invoke(runner, "verify-fields", "--construction", "sphere-fibre", "--m", "3", "--n", "5", "--p", "3",
                    "--trials", "20")
    assert result.exit_code == 0
    assert "fields: 5" in result.stdout
    assert "result: ok" in result.stdout
    result = invoke(runner, "verify-fields", "--construction", "sphere-fibre", "--m", "3", "--n", "5", "--p", "3",
                    "--corrupted", "--trials", "0", "--point", "1,0,0,0;0,0,0,0,0,1")
    assert "result: 1 failures" in result.stdout
    assert "independence failed" in result.stdout


def test_verify_fields_seed_from_environment(runner):
    result = invoke(runner, "verify-fields", "--fixture", "pps-3-5-3", "--trials", "5",
                    env={"TORPROD_SEED": "11"})
    assert "checked: 5 points (seed 11)" in result.stdout


def test_all_is_deterministic(runner, tmp_path):
    first = invoke(runner, "all", "--fixture", "pt-3-cp1-cp1", "--json", str(tmp_path / "one.json"),
                   env={"TORPROD_WORKERS": "1", "TORPROD_TRIALS": "10"})
    second = invoke(runner, "all", "--fixture", "pt-3-cp1-cp1", "--json", str(tmp_path / "two.json"),
                    env={"TORPROD_WORKERS": "2", "TORPROD_TRIALS": "10"})
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    assert (tmp_path / "one.json").read_text() == (tmp_path / "two.json").read_text()
    report = FullReport.model_validate_json((tmp_path / "one.json").read_text())
    assert report.euler.euler == 0
    assert report.span.span_lower == 5


def test_all_records_skipped_sections(runner, tmp_path):
    path = tmp_path / "dold.json"
    result = invoke(runner, "all", "--fixture", "dold-1-1", "--json", str(path))
    assert result.exit_code == 0
    report = FullReport.model_validate_json(path.read_text())
    assert "sw-class" in report.skipped
    assert report.homology.homology == ["Z", "Z", "Z", "Z"]


def test_descriptor_file(runner, tmp_path):
    path = tmp_path / "space.json"
    path.write_text(SpaceDescriptor(family="PT", m=[2], cp=[2]).model_dump_json())
    result = invoke(runner, "euler", "--descriptor", str(path))
    assert result.stdout == "3\n"


def test_fixtures_and_schema(runner):
    result = invoke(runner, "fixtures")
    assert "dold-1-1" in result.stdout
    assert "hirzebruch[:<r>]" in result.stdout
    assert "simplex:<n>" in result.stdout
    schema = json.loads(invoke(runner, "schema").stdout)
    assert "FullReport" in schema
    assert "SpaceDescriptor" in schema


def test_input_errors_exit_two(runner):
    assert invoke(runner, "pontryagin", "--fixture", "rp-3").exit_code == 2
    assert invoke(runner, "hvector", "--polytope", "square", "--functional", "1,0").exit_code == 2
    assert invoke(runner, "euler", "--fixture", "no-such-fixture").exit_code == 2
    assert invoke(runner, "euler").exit_code == 2
    assert invoke(runner, "euler", "--fixture", "rp-3", env={"TORPROD_WORKERS": "0"}).exit_code == 2


def test_run_exit_codes(monkeypatch, capsys):
    assert run(["euler", "--fixture", "rp-3"]) == 0
    assert capsys.readouterr().out == "0\n"
    assert run(["euler", "--fixture", "no-such-fixture"]) == 2
    assert run(["euler", "--no-such-option"]) == 2

    def broken(space):
        raise TorsionDetected("relation lattice has invariant factors [2]")

    monkeypatch.setattr("src.commands.report.euler_characteristic", broken)
    assert run(["euler", "--fixture", "rp-3"]) == 1

    def crash(space):
        raise RuntimeError("boom")

    monkeypatch.setattr("src.commands.report.euler_characteristic", crash)
    assert run(["euler", "--fixture", "rp-3"]) == 1
