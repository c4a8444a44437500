import json
import subprocess
import sys

import pytest

from expdomain.cli import main, render_json, render_text, run_command
from expdomain.dsl import parse_spec


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


@pytest.fixture
def animals_path(corpus_dir):
    return str(corpus_dir / "animals.exd")


@pytest.mark.parametrize("s1, s2, key, expected", [
    ("cat", "mammal", "narrower", True),
    ("cat", "dog", "compatible", False),
    ("cat", "black", "independent", True),
])
def test_relate_golden(capsys, animals_path, s1, s2, key, expected):
    assert report(capsys, "relate", animals_path, s1, s2)["results"][key] is expected


def test_json_output_is_byte_identical(capsys, animals_path):
    first = run_cli(capsys, "properties", animals_path, "--json")
    second = run_cli(capsys, "properties", animals_path, "--json")
    assert first == second and first[0] == 0


def test_subprocess_entry_point(animals_path):
    cmd = [sys.executable, "-m", "expdomain", "possibilities", animals_path, "--json"]
    runs = [subprocess.run(cmd, capture_output=True, check=True) for _ in range(2)]
    assert runs[0].stdout == runs[1].stdout
    data = json.loads(runs[0].stdout)
    assert data["schema"] == "expdomain.report/1"
    assert [p["label"] for p in data["results"]["possibilities"]] == ["FFF", "FFT", "FTF", "FTT", "TFF", "TFT"]


def test_possibilities_report(capsys, animals_path):
    res = report(capsys, "possibilities", animals_path)["results"]
    assert res["count"] == 6 and res["bound"] == 8
    assert res["possibilities"][4]["minterm"] == "cat & !dog & !black"


def test_properties_sierpinski(capsys, corpus_dir):
    res = report(capsys, "properties", str(corpus_dir / "sierpinski.exd"))["results"]
    assert res["is_t0"] is True and res["is_hausdorff"] is False
    assert res["approx_verifiable"] == {"F": False, "T": True}


def test_topology_and_sigma(capsys, corpus_dir):
    path = str(corpus_dir / "sierpinski.exd")
    assert report(capsys, "topology", path)["results"]["opens"] == [[], ["T"], ["F", "T"]]
    assert report(capsys, "sigma", path)["results"]["count"] == 4


def test_check_classify_dnf(capsys, animals_path, corpus_dir):
    res = report(capsys, "check", animals_path)["results"]
    assert (res["atoms"], res["assignments"], res["admissible"]) == (4, 16, 8)
    assert report(capsys, "classify", animals_path, "cat | dog")["results"]["class"] == "VerifiableOnly"
    res = report(capsys, "classify", str(corpus_dir / "decidable.exd"), "true")["results"]
    assert res["class"] == "Decidable" and "convention" in res["note"]
    res = report(capsys, "dnf", animals_path, "cat")["results"]
    assert res["possibilities"] == ["TFF", "TFT"] and res["disjunction_equivalent"]


def test_simulate(capsys, corpus_dir):
    res = report(capsys, "simulate", str(corpus_dir / "dovetail.scn"))["results"]
    assert (res["outcome"], res["steps"], res["round"]) == ("Verified", 41, 5)
    res = report(capsys, "simulate", str(corpus_dir / "swans.scn"))["results"]
    assert res["outcome"] == "Pending" and not res["terminates"]


def test_text_and_json_carry_same_information(capsys, animals_path):
    data = report(capsys, "possibilities", animals_path)
    code, text, _ = run_cli(capsys, "possibilities", animals_path)
    assert code == 0 and text == render_text(data)
    for p in data["results"]["possibilities"]:
        assert f'label: "{p["label"]}"' in text and f'minterm: "{p["minterm"]}"' in text


def test_exit_codes(capsys, tmp_path, animals_path):
    assert run_cli(capsys, "relate", animals_path, "cat", "horse")[0] == 1
    assert run_cli(capsys, "dnf", animals_path, "!cat")[0] == 1
    bad = tmp_path / "bad.exd"
    bad.write_text("context x { basis: ; }")
    code, _, err = run_cli(capsys, "check", str(bad))
    assert code == 1 and "1:20" in err
    assert run_cli(capsys, "check", str(tmp_path / "missing.exd"))[0] == 2
    assert run_cli(capsys, "check", animals_path, "--frobnicate")[0] == 2
    assert run_cli(capsys, "nonsense", animals_path)[0] == 2
    assert run_cli(capsys, "relate", animals_path, "cat")[0] == 2
    empty = tmp_path / "unsat.exd"
    empty.write_text("context u { atoms: a; constraints: a; !a; basis: a; }")
    assert run_cli(capsys, "check", str(empty))[0] == 1


def test_cap_flag(capsys, corpus_dir):
    code, _, err = run_cli(capsys, "topology", str(corpus_dir / "interval.exd"), "--cap", "3")
    assert code == 1 and "EnumerationCapExceeded" in err


def test_run_command_library_surface(corpus_dir):
    spec = parse_spec((corpus_dir / "animals.exd").read_text())
    rep = run_command("relate", ["cat", "dog"], spec, seed=3)
    assert rep["command"] == {"name": "relate", "args": ["cat", "dog"], "file": None, "cap": 16, "seed": 3}
    assert render_json(rep) == render_json(run_command("relate", ["cat", "dog"], spec, seed=3))
    with pytest.raises(ValueError):
        run_command("bogus", [], spec)
