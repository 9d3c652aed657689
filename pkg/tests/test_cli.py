from __future__ import annotations

import io
import json
import subprocess
import sys

import jsonschema
import pytest

from iolab import schemas
from iolab.cli import EXIT_CONTRACT, EXIT_OK, EXIT_PARSE, run
from iolab.textio import read_structure

TWO_TWO = "poset twotwo\nelements: a b c d\na < b\nc < d\n"
CYCLE = "poset loop\nelements: a b\na < b\nb < a\n"
PATH_GRAPH = "graph path\nelements: p q r s\np -- q\nq -- r\nr -- s\n"


def cli(*argv):
    buf = io.StringIO()
    code = run([str(a) for a in argv], buf)
    return code, buf.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def gen(tmp_path, *argv):
    p = tmp_path / ("_".join(str(a) for a in argv).replace("-", "") + ".txt")
    code, _ = cli("gen", *argv, "--out", p)
    assert code == EXIT_OK
    return p


def test_semiorder_has_five_antichains(tmp_path):
    code, text = cli("amchain", gen(tmp_path, "in", 6))
    assert code == EXIT_OK
    assert text.splitlines()[0] == "5 maximal antichains"
    assert text.splitlines()[1] == "0: {0, 1}"


def test_palpha_decomposes_to_a_prime_root(tmp_path):
    code, text = cli("decompose", gen(tmp_path, "palpha", "--ordinal", "w", "--size", 20), "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(text)
    jsonschema.validate(doc, schemas.MODULE_TREE)
    assert doc["kind"] == "prime"


def test_check_reports_a_witness(tmp_path):
    code, text = cli("check", write(tmp_path, "tt.txt", TWO_TWO), "--json")
    assert code == EXIT_OK
    doc = json.loads(text)
    jsonschema.validate(doc, schemas.CHECK)
    assert doc["interval_order"] is False and sorted(doc["witness"]) == ["a", "b", "c", "d"]
    code, text = cli("check", write(tmp_path, "tt.txt", TWO_TWO))
    assert "interval order: no" in text and "2+2" in text


def test_exit_codes(tmp_path, capsys):
    tt = write(tmp_path, "tt.txt", TWO_TWO)
    assert cli("amchain", tt)[0] == EXIT_CONTRACT
    assert "interval order required" in capsys.readouterr().err
    assert cli("amchain", write(tmp_path, "loop.txt", CYCLE))[0] == EXIT_PARSE
    assert cli("amchain", write(tmp_path, "bad.txt", "poset x\nelements: a\na < zz\n"))[0] == EXIT_PARSE
    assert cli("amchain", tmp_path / "missing.txt")[0] == EXIT_PARSE
    assert cli("gen", "palpha", "--ordinal", "w", "--size", 3)[0] == EXIT_CONTRACT
    assert cli("gen", "palpha", "--ordinal", "w^", "--size", 10)[0] == EXIT_PARSE
    with pytest.raises(SystemExit) as err:
        cli("amchain")
    assert err.value.code == EXIT_PARSE
    with pytest.raises(SystemExit) as err:
        cli("represent", tt, "--mode", "sideways")
    assert err.value.code == EXIT_PARSE


@pytest.mark.parametrize("mode", ["standard", "downset"])
def test_represent_json(tmp_path, mode):
    code, text = cli("represent", gen(tmp_path, "bq", 3), "--mode", mode, "--json")
    assert code == EXIT_OK
    jsonschema.validate(json.loads(text), schemas.REPRESENTATION)


def test_json_outputs_match_schemas(tmp_path):
    f = gen(tmp_path, "in", 5)
    for argv, schema in [
        (("amchain", f, "--json"), schemas.AMCHAIN),
        (("singulars", f, "--json"), schemas.SINGULARS),
        (("oracle", "modules", f), schemas.ORACLE),
        (("oracle", "antichains", f), schemas.ORACLE),
        (("verify", f, "--json"), schemas.VERIFY),
    ]:
        code, text = cli(*argv)
        assert code == EXIT_OK
        jsonschema.validate(json.loads(text), schema)


def test_singulars_of_a_semiorder(tmp_path):
    assert cli("singulars", gen(tmp_path, "in", 7))[1] == "0 6\n"


def test_decompose_text_and_dot(tmp_path):
    tt = write(tmp_path, "tt.txt", TWO_TWO)
    code, text = cli("decompose", tt)
    assert code == EXIT_OK and text.splitlines()[0].endswith("a b c d")
    code, dot = cli("decompose", tt, "--format", "dot")
    assert dot.count("{") == dot.count("}") and dot.count('"') % 2 == 0
    assert dot.lstrip().startswith("digraph")
    code, _ = cli("decompose", write(tmp_path, "path.txt", PATH_GRAPH), "--format", "dot")
    assert code == EXIT_OK


@pytest.mark.parametrize("argv", [("in", 7), ("bq", 4), ("palpha", "--ordinal", "1", "--size", 14),
                                  ("palpha", "--ordinal", "w", "--size", 16)])
def test_verify_passes_on_generated_files(tmp_path, argv):
    code, text = cli("verify", gen(tmp_path, *argv))
    assert code == EXIT_OK, text
    assert "FAIL" not in text


def test_verify_on_a_graph_and_a_non_interval_order(tmp_path):
    assert cli("verify", write(tmp_path, "path.txt", PATH_GRAPH))[0] == EXIT_OK
    assert cli("verify", write(tmp_path, "tt.txt", TWO_TWO))[0] == EXIT_OK


def test_seed_makes_verify_deterministic(tmp_path):
    f = gen(tmp_path, "bq", 4)
    runs = [cli("--seed", s, "verify", f, "--json")[1] for s in (7, 7)]
    assert runs[0] == runs[1]


def test_gen_round_trip(tmp_path):
    from iolab.constructions import semiorder

    f = gen(tmp_path, "in", 7)
    assert read_structure(f) == semiorder(7)
    code, text = cli("gen", "in", 7)
    assert text == f.read_text()


def test_module_entry_point(tmp_path):
    f = write(tmp_path, "tt.txt", TWO_TWO)
    proc = subprocess.run([sys.executable, "-m", "iolab", "check", str(f)], capture_output=True, text=True)
    assert proc.returncode == 0 and "interval order: no" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "iolab", "amchain", str(f)], capture_output=True, text=True)
    assert proc.returncode == 1
