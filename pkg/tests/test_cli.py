# cohomotopy\tests\test_cli.py

import json

import pytest
from click.testing import CliRunner

from cohomotopy.__main__ import main
from cohomotopy.utils import ExitCodes


@pytest.fixture
def runner():
    return CliRunner()


def _json(runner, tmp_path, *args):
    out = tmp_path / "report.json"
    result = runner.invoke(main, [*args, "--json", str(out)])
    return result, json.loads(out.read_text(encoding="utf-8"))


def test_validate_clean_file(runner, corpus_file):
    result = runner.invoke(main, ["validate", str(corpus_file("dold-m1"))])

    assert result.exit_code == ExitCodes.OK
    assert "all relations hold" in result.output


def test_validate_reports_violations(runner, corpus_file, tmp_path):
    result, document = _json(runner, tmp_path, "validate", str(corpus_file("dold-m3-corrupt-sq2")))

    assert result.exit_code == ExitCodes.VALIDATION_FAILED
    assert sorted({v["code"] for v in document["validation"]["violations"]}) == ["d", "e"]


def test_parse_errors_exit_with_their_code(runner, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")

    result = runner.invoke(main, ["validate", str(path)])

    assert result.exit_code == ExitCodes.PARSE_ERROR


def test_codim2_json(runner, corpus_file, tmp_path):
    path = corpus_file("cp2xs")
    result, document = _json(runner, tmp_path, "codim2", str(path))

    assert result.exit_code == ExitCodes.OK
    assert document["schemaVersion"] == 1
    assert document["command"] == "codim2"
    assert document["input"]["file"] == "cp2xs.json"
    assert len(document["input"]["sha256"]) == 64
    middle = document["results"]["codim2"]["report"]["branches"][0]["middle"]
    assert middle["display"] == "ℤ^1"
    framed_spin = document["results"]["framedSpin2"]["branches"][0]["middle"]
    assert framed_spin["invariantFactors"] == [2]


def test_json_output_is_deterministic(runner, corpus_file, tmp_path):
    outputs = []
    for name in ("first.json", "second.json"):
        out = tmp_path / name
        result = runner.invoke(main, ["codim3", str(corpus_file("dold-m3")), "--json", str(out)])
        assert result.exit_code == ExitCodes.OK
        outputs.append(out.read_text(encoding="utf-8"))

    assert outputs[0] == outputs[1]


def test_json_to_stdout(runner):
    result = runner.invoke(main, ["oracle", "--wedge", "n+1", "--target", "8", "--json", "-"])

    assert result.exit_code == ExitCodes.OK
    assert json.loads(result.output)["results"]["group"]["invariantFactors"] == [2]


def test_codim3_with_assumptions(runner, corpus_file, tmp_path):
    result, document = _json(runner, tmp_path, "codim3", str(corpus_file("dold-m0")), "--assume-phi-trivial")

    assert result.exit_code == ExitCodes.OK
    branches = document["results"]["pi"]["branches"]
    assert len(branches) == 1
    assert branches[0]["invariants"]["invariantFactors"] == [12]
    assert "tower" in document["results"]


def test_codim3_text_lists_branches(runner, corpus_file):
    result = runner.invoke(main, ["codim3", str(corpus_file("dold-m3"))])

    assert result.exit_code == ExitCodes.OK
    assert "eps3=0" in result.output
    assert "eps3=1" in result.output


def test_wrong_codimension_is_a_hypothesis_error(runner, corpus_file):
    result = runner.invoke(main, ["codim3", str(corpus_file("s2xsn"))])

    assert result.exit_code == ExitCodes.HYPOTHESIS_ERROR


def test_batch_keeps_the_worst_code(runner, corpus_file, tmp_path):
    result, documents = _json(runner, tmp_path, "validate", str(corpus_file("s2xsn")),
                               str(corpus_file("cw-corrupt-sq4")))

    assert result.exit_code == ExitCodes.VALIDATION_FAILED
    assert [d["input"]["file"] for d in documents] == ["s2xsn.json", "cw-corrupt-sq4.json"]


def test_bordism(runner, corpus_file):
    result = runner.invoke(main, ["bordism", "--k", "3", str(corpus_file("snxt3"))])

    assert result.exit_code == ExitCodes.OK
    assert "Omega_3^String(snxt3)" in result.output


def test_bordism_tag_error(runner, corpus_file):
    result = runner.invoke(main, ["bordism", "--k", "1", str(corpus_file("dold-m1"))])

    assert result.exit_code == ExitCodes.HYPOTHESIS_ERROR


def test_section_check(runner):
    result = runner.invoke(main, ["section-check", "--k", "2", "--kappa", "zero", "--euler-h", "zero",
                                  "--defect", "nonzero"])

    assert result.exit_code == ExitCodes.OK
    assert result.output.strip() == "NotExists (fails: defectDelta)"


def test_section_check_contradiction(runner):
    result = runner.invoke(main, ["section-check", "--euler-g", "zero", "--kappa", "nonzero"])

    assert result.exit_code == ExitCodes.VALIDATION_FAILED


def test_oracle(runner, tmp_path):
    result, document = _json(runner, tmp_path, "oracle", "--wedge", "n,n+3", "--target", "5")

    assert result.exit_code == ExitCodes.OK
    assert document["results"]["group"]["display"] == "ℤ^1 ⊕ ℤ/24"


def test_oracle_out_of_range(runner):
    result = runner.invoke(main, ["oracle", "--wedge", "n+8", "--target", "5"])

    assert result.exit_code == ExitCodes.HYPOTHESIS_ERROR


def test_corpus_listing(runner):
    result = runner.invoke(main, ["corpus"])

    assert result.exit_code == ExitCodes.OK
    assert "dold-m1-corrupt-w3" in result.output
    assert "fails g" in result.output
