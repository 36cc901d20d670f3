import json

import pytest

from ocycles import cyclefile, diagram
from ocycles.cli import main
from ocycles.engine import decode_compressed


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_perms(capsys):
    code, out, _ = run(capsys, "gen", "--family", "perms", "--n", "3", "--s", "1")
    assert code == 0
    head, body = out.splitlines()
    head = json.loads(head)
    assert head["m"] == 6 and head["n"] == 3 and head["s"] == 1
    assert len(body.split()) == 12


def test_gen_infeasible(capsys):
    code, _, err = run(capsys, "gen", "--family", "perms", "--n", "4", "--s", "2")
    assert code == 2
    assert "n-s = gcd(n,s) = 2" in err


@pytest.mark.parametrize("argv", [
    ["gen", "--family", "perms", "--s", "1"],
    ["gen", "--family", "perms", "--n", "3", "--s", "3"],
    ["gen", "--family", "nope", "--n", "3", "--s", "1"],
    ["check", "juggling", "--caps", "n_max"],
])
def test_bad_params(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_gen_juggling_verified(capsys, tmp_path):
    path = tmp_path / "j.txt"
    assert run(capsys, "gen", "--family", "juggling", "--n", "3", "--b", "1", "--s", "1",
               "--out", str(path))[0] == 0
    cf = cyclefile.loads(path.read_text())
    assert cf.m == 8
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.startswith("PASS")


@pytest.mark.parametrize("family, flags", [
    ("msetperms", ["--multiset", "0,0,1,2"]),
    ("kperms", ["--n", "4", "--k", "3"]),
    ("surjections", ["--n", "4", "--h", "2"]),
])
def test_gen_verify_roundtrip(capsys, tmp_path, family, flags):
    path = tmp_path / "c.txt"
    assert run(capsys, "gen", "--family", family, *flags, "--s", "1", "--expand", "--out", str(path))[0] == 0
    assert run(capsys, "verify", str(path))[0] == 0


def test_verify_altered_symbol(capsys, tmp_path):
    _, out, _ = run(capsys, "gen", "--family", "perms", "--n", "3", "--s", "1")
    head, body = out.splitlines()
    symbols = body.split()
    symbols[0] = "2" if symbols[0] != "2" else "1"
    path = tmp_path / "bad.txt"
    path.write_text(head + "\n" + " ".join(symbols) + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 3
    assert out.startswith("FAIL") and ("missing" in out or "duplicate" in out)


def test_verify_truncated(capsys, tmp_path):
    _, out, _ = run(capsys, "gen", "--family", "perms", "--n", "3", "--s", "1")
    head, body = out.splitlines()
    path = tmp_path / "short.txt"
    path.write_text(head + "\n" + " ".join(body.split()[:-1]) + "\n")
    assert run(capsys, "verify", str(path))[0] == 1
    path.write_text("not json\n1 2 3\n")
    assert run(capsys, "verify", str(path))[0] == 1


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "gen", "--family", "perms", "--n", "4", "--s", "1", "--expand")
    _, js, _ = run(capsys, "gen", "--family", "perms", "--n", "4", "--s", "1", "--expand", "--format", "json")
    a, b = cyclefile.loads(text), cyclefile.loads(js)
    assert a == b
    doc = json.loads(js)
    assert doc["header"] == json.loads(text.splitlines()[0])
    assert tuple(doc["body"]) == a.body
    assert decode_compressed(a.body, a.n, a.s) == a.objects


def test_check_juggling_witness_row(capsys):
    code, out, _ = run(capsys, "check", "juggling", "--caps", "n_max=4,b_max=1")
    assert code == 0
    assert "juggling\t4\t2\tb=1\tfalse\tfalse\ttrue" in out
    assert '"sequence": [2, 0, 2, 0]' in out


def test_check_lemmas(capsys):
    code, out, _ = run(capsys, "check", "lemmas", "--caps", "trials=1000", "--seed", "1")
    assert code == 0 and "PASS" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "kperms", "--caps", "n_max=4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and all(r["agreement"] for r in doc["kperms"])


def test_check_report_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "check", "perms", "--caps", "n_max=4", "--report-dir", str(tmp_path))
    assert code == 0
    rows = (tmp_path / "perms.csv").read_text().splitlines()
    assert rows[0].startswith("family,n,s")
    assert len(rows) == 1 + 2 * (1 + 2 + 3)
    assert (tmp_path / "perms.png").stat().st_size > 0


def test_siteswap(capsys):
    code, out, _ = run(capsys, "siteswap", "0", "1", "5")
    assert code == 0
    assert "valid: yes" in out and "balls: 2" in out and "permutation: 0 2 1" in out
    _, out, _ = run(capsys, "siteswap", "1", "0", "5")
    assert "valid: no" in out and "balls" not in out
    _, out, _ = run(capsys, "siteswap", "0", "--format", "json")
    assert json.loads(out) == {"sequence": [0], "period": 1, "valid": True, "balls": 0, "permutation": [0]}
    _, out, _ = run(capsys, "siteswap", "015")
    assert "balls: 2" in out


def test_diagram_arcs_figure_one():
    arcs = {(a.start, a.end): a.clipped for a in diagram.diagram_arcs((0, 1, 5), 3)}
    for key, clipped in {(1, 2): False, (2, 7): False, (4, 5): False, (5, 10): True, (7, 8): False}.items():
        assert arcs[key] == clipped
    # the throw at beat 8 follows the same clipping rule
    assert arcs[(8, 13)] is True
    assert len(arcs) == 6


def test_diagram_single_dot(capsys):
    assert diagram.diagram_arcs((0,), 1) == []
    _, out, _ = run(capsys, "diagram", "0", "--periods", "1")
    assert out.splitlines() == ["o", "0"]


def test_diagram_invalid_renders_with_note(capsys):
    code, out, _ = run(capsys, "diagram", "1", "0", "5")
    assert code == 0 and "collision" in out
    code, svg, _ = run(capsys, "diagram", "1", "0", "5", "--format", "svg")
    assert code == 0 and svg.startswith("<svg") and "collision" in svg


def test_svg_deterministic(capsys):
    a = run(capsys, "diagram", "0", "1", "5", "--format", "svg")[1]
    b = run(capsys, "diagram", "0", "1", "5", "--format", "svg")[1]
    assert a == b
    assert a.count("<circle") == 9 and a.count("<path") == 6


def test_diagram_png(capsys, tmp_path):
    path = tmp_path / "d.png"
    assert run(capsys, "diagram", "5", "3", "1", "--format", "png", "--out", str(path))[0] == 0
    assert path.stat().st_size > 0
    assert run(capsys, "diagram", "5", "3", "1", "--format", "png")[0] == 1
