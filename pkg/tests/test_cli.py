import json
import subprocess
import sys

import pytest

from titsindex.cli import main
from titsindex.render import render_text
from titsindex.tits_index import TitsIndex, validate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_e8_p5(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "E8", "--prime", "5")
    assert code == 0 and len(json.loads(out)) == 2


def test_enumerate_b4(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "B", "--rank", "4", "--prime", "2")
    assert code == 0 and len(json.loads(out)) == 5


def test_enumerate_a5_p3_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "A", "--rank", "5", "--prime", "3", "--format", "text")
    assert code == 0
    assert out.split("\n\n") == ["1A5[{1}{2}{3}{4}{5}]\n(o)--(o)--(o)--(o)--(o)", "1A5[{3}]\no--o--(o)--o--o\n"]


def test_usage_and_domain_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--type", "E8"])
    assert info.value.code == 2
    code, _, err = run(capsys, "enumerate", "--type", "E9", "--prime", "2")
    assert code == 1 and "valid range" in err


def test_validate_orbit_violation(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"diagram": {"type": "A5"}, "t": 2, "distinguished": [[1]]}))
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1 and "not an orbit" in err


def test_schema_error_names_field(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"diagram": {"type": "A5"}}))
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1 and "distinguished" in err


def test_enumerate_round_trip(tmp_path, capsys):
    for argv in (["--type", "2E6", "--prime", "2"], ["--type", "1D", "--rank", "7", "--prime", "2"],
                 ["--type", "E7", "--prime", "2"]):
        code, out, _ = run(capsys, "enumerate", *argv)
        docs = json.loads(out)
        path = tmp_path / "all.json"
        path.write_text(out)
        code, _, _ = run(capsys, "validate", str(path))
        assert code == 0
        code, rendered, _ = run(capsys, "render", str(path))
        assert code == 0
        expected = "\n".join(render_text(TitsIndex.from_json(d)) + "\n" for d in docs)
        assert rendered == expected
        for d in docs:
            ix = TitsIndex.from_json(d)
            assert not validate(ix) and ix.to_json() == d


def test_render_formats(tmp_path, capsys):
    path = tmp_path / "g2.json"
    path.write_text(json.dumps({"diagram": {"type": "G2"}, "distinguished": []}))
    assert run(capsys, "render", str(path), "--ascii-only")[1] == "o###o\n"
    assert run(capsys, "render", str(path), "--format", "svg")[1].startswith("<?xml")
    assert run(capsys, "render", str(path), "--format", "tikz")[1].startswith("\\begin{tikzpicture}")


def _profile(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def z(order, c):
    return {"group": [order], "coords": [c], "is_symbol": True, "killed_by_K": False}


def test_equiv_f4_all(tmp_path, capsys):
    a = _profile(tmp_path, "a.json", {"family": "F4", "f3": z(2, 1), "f5": z(2, 1), "g3": z(3, 1)})
    b = _profile(tmp_path, "b.json", {"family": "F4", "f3": z(2, 1), "f5": z(2, 1), "g3": z(3, 2)})
    code, out, _ = run(capsys, "equiv", a, b, "--all")
    assert code == 0 and json.loads(out)["verdict"] == "equivalent"


def test_equiv_unavailable_exit_3(tmp_path, capsys):
    a = _profile(tmp_path, "a.json", {"family": "E7", "ind_A": 2})
    code, out, err = run(capsys, "equiv", a, a, "--prime", "2")
    assert code == 3 and "criterion_unavailable" in err
    assert json.loads(out)["verdict"] == "criterion_unavailable"


def test_equiv_missing_slot_exit_1(tmp_path, capsys):
    a = _profile(tmp_path, "a.json", {"family": "G2"})
    code, _, err = run(capsys, "equiv", a, a, "--prime", "2")
    assert code == 1 and "b" in err


def test_tables_contains_e8_primes(tmp_path, capsys):
    code, _, _ = run(capsys, "tables", "--out", str(tmp_path))
    assert code == 0
    rows = json.loads((tmp_path / "torsion_primes.json").read_text())["rows"]
    assert {"types": "E_8", "center_exponent": "1", "primes": [2, 3, 5]} in rows


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "titsindex", "enumerate", "--type", "G2", "--prime", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and len(json.loads(res.stdout)) == 2
