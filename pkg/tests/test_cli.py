import json
from importlib.resources import files

import jsonschema
import pytest

from schurforge.cli import main, parse_field
from schurforge.errors import ConstructionError


@pytest.fixture(scope="module")
def schema():
    return json.loads(files("schurforge").joinpath("schemas/report.schema.json").read_text())


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def first_json(text):
    return json.JSONDecoder().raw_decode(text)[0]


def test_parse_field():
    assert parse_field("7").p == 7
    assert parse_field("Q").kind == "rational"
    ctx = parse_field("2:2")
    assert ctx.kind == "extension" and ctx.order == 4
    with pytest.raises(ConstructionError):
        parse_field("4")


def test_show_golden(capsys):
    code, out, _ = run_cli(capsys, "show", "-c", "0,2,3", "-f", "Q")
    assert code == 0
    assert "S_c = x0*x1 + x0*x2 + x1*x2" in out
    code, out, _ = run_cli(capsys, "show", "-c", "0,1,2", "-f", "Q")
    assert code == 0
    assert "S_c = 1" in out


def test_show_mod7(capsys):
    code, out, _ = run_cli(capsys, "show", "-c", "0,2,5", "-f", "7", "--format", "json")
    assert code == 0
    doc = first_json(out)
    assert doc["result"]["total_degree"] == 4
    assert doc["result"]["gaps"] == [2, 3]


def test_show_json_schema(capsys, schema):
    code, out, _ = run_cli(capsys, "show", "-c", "0,2,5", "-f", "2:2", "--format", "json")
    assert code == 0
    jsonschema.validate(first_json(out), schema)


def test_show_bad_sequence_exit_2(capsys):
    code, _, err = run_cli(capsys, "show", "-c", "2,1", "-f", "Q")
    assert code == 2
    code, _, err = run_cli(capsys, "show", "-c", "0,2,5", "-f", "4")
    assert code == 2


def test_expand_golden(capsys, schema):
    code, out, _ = run_cli(capsys, "expand", "-c", "0,2,5", "-f", "Q", "--format", "json")
    assert code == 0
    doc = first_json(out)
    jsonschema.validate(doc, schema)
    rows = doc["result"]["rows"]
    assert rows[0]["div_C_b_a"] is True and rows[0]["assoc_C_b_a"] is True
    assert rows[1]["div_C_b_a"] is True
    assert rows[3]["assoc_C_a"] is True


def test_expand_requires_three_variables(capsys):
    code, _, err = run_cli(capsys, "expand", "-c", "0,2,5,7", "-f", "Q")
    assert code == 2


def test_irred_consistent(capsys, schema):
    code, out, _ = run_cli(capsys, "irred", "-c", "0,2,5", "-f", "7", "--format", "json")
    assert code == 0
    doc = first_json(out)
    jsonschema.validate(doc, schema)
    assert doc["result"]["theorem"]["applies"] is True
    assert doc["result"]["verdict"]["kind"] == "irreducible"

    code, out, _ = run_cli(capsys, "irred", "-c", "0,2,4", "-f", "3", "--format", "json")
    assert code == 0
    doc = first_json(out)
    assert doc["result"]["verdict"]["kind"] == "reducible"
    assert doc["result"]["verdict"]["witness"]["factor"] == "x0 + x1"


def test_irred_capped(capsys):
    code, out, _ = run_cli(
        capsys, "irred", "-c", "0,2,5,7", "-f", "5", "--cap", "2", "--format", "json"
    )
    assert code == 0
    doc = first_json(out)
    assert doc["result"]["verdict"]["kind"] == "inconclusive"
    assert doc["result"]["verdict"]["searched_degree"] == 2


def test_irred_rejects_rationals(capsys):
    code, _, err = run_cli(capsys, "irred", "-c", "0,2,5", "-f", "Q")
    assert code == 2
    assert "finite" in err


def test_irred_certify(capsys, schema):
    code, out, _ = run_cli(
        capsys, "irred", "-c", "0,2,5", "-f", "3", "--certify", "--seed", "5", "--format", "json"
    )
    assert code == 0
    doc = first_json(out)
    jsonschema.validate(doc, schema)
    assert doc["result"]["certificate"]["status"] in ("certified", "unknown")


def test_survey_csv_and_exit(capsys, tmp_path):
    out_path = tmp_path / "survey.csv"
    code, out, _ = run_cli(
        capsys, "survey", "--amax", "6", "--primes", "2,3", "-o", str(out_path)
    )
    assert code == 0
    assert "12 instances" in out and "0 inconsistencies" in out
    text = out_path.read_text()
    assert text.splitlines()[0].startswith("a,b,p,total_degree")


def test_survey_json_schema(capsys, schema):
    code, out, _ = run_cli(
        capsys, "survey", "--amax", "5", "--primes", "2", "--format", "json"
    )
    assert code == 0
    jsonschema.validate(first_json(out), schema)


def test_survey_bound_exit_2(capsys):
    code, _, err = run_cli(capsys, "survey", "--amax", "20")
    assert code == 2
    assert "bound exceeded" in err


def test_survey_workers_byte_identical(capsys, tmp_path):
    paths = []
    for idx, workers in enumerate((1, 2)):
        out_path = tmp_path / f"s{idx}.csv"
        code, _, _ = run_cli(
            capsys,
            "survey",
            "--amax",
            "6",
            "--primes",
            "2,3",
            "--workers",
            str(workers),
            "-o",
            str(out_path),
        )
        assert code == 0
        paths.append(out_path.read_bytes())
    assert paths[0] == paths[1]


def test_verify_facts_small_grid(capsys, schema):
    code, out, _ = run_cli(
        capsys,
        "verify-facts",
        "--bmax", "6",
        "--primes", "2,3",
        "--kmax", "4",
        "--minmax-nmax", "3",
        "--minmax-cmax", "4",
        "--format", "json",
    )
    assert code == 0
    doc = first_json(out)
    jsonschema.validate(doc, schema)
    assert doc["result"]["failed"] == 0
    assert all(r["status"] == "pass" for r in doc["result"]["reports"])


def test_verify_facts_mutation_self_test(capsys):
    code, out, err = run_cli(
        capsys,
        "verify-facts",
        "--bmax", "5",
        "--primes", "2",
        "--kmax", "1",
        "--minmax-nmax", "3",
        "--minmax-cmax", "3",
        "--inject-mutation",
    )
    assert code == 1
    assert "first failure" in err


def test_text_report_array_output(capsys):
    # default text mode of verify-facts prints the report array plus a summary
    code, out, _ = run_cli(
        capsys,
        "verify-facts",
        "--bmax", "4",
        "--primes", "2",
        "--kmax", "1",
        "--minmax-nmax", "3",
        "--minmax-cmax", "3",
    )
    assert code == 0
    reports = first_json(out)
    assert isinstance(reports, list)
    assert "fact checks" in out
