import json
import subprocess
import sys

import pytest

from golodcert.cli import main, parse_corpus_ideals, split_corpus
from golodcert.golod import parse_certificate, verify_certificate
from golodcert.ideal import parse_ideal, product
from golodcert.simplicial import SimplicialComplex, format_complex, parse_complex

from conftest import ideal

SQUARE = "ring n=4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n"
CI = "ring n=4\nx1*x2\nx3*x4\n"
C4 = "vertices 4\nfacet 1 2\nfacet 2 3\nfacet 3 4\nfacet 1 4\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_gcd_default_order_prints_certificate(files, capsys):
    code, out, _ = run(capsys, "check-gcd", files("ex.ideal", SQUARE), "--order", "prop21")
    assert code == 0
    cert = parse_certificate(out)
    assert cert.ideal == ideal(4, "x1*x3", "x1*x4", "x2*x3", "x2*x4")
    assert verify_certificate(out)


def test_check_gcd_search_reports_none(files, capsys):
    code, out, _ = run(capsys, "check-gcd", files("ci.ideal", CI), "--order", "search")
    assert code == 2
    assert out == "no order exists (exhaustive)\n"


def test_check_gcd_failing_order(files, capsys):
    code, out, _ = run(capsys, "check-gcd", files("ci.ideal", CI))
    assert code == 2 and out.startswith("fail: no witness")
    code, _, _ = run(capsys, "check-gcd", files("ci2.ideal", CI), "--order", "greedy")
    assert code == 1


def test_check_gcd_order_file(files, capsys):
    ex = files("ex.ideal", SQUARE)
    code, _, _ = run(capsys, "check-gcd", ex, "--order", files("o.txt", "x1*x3 ≺ x1*x4 ≺ x2*x3 ≺ x2*x4\n"))
    assert code == 0
    code, _, err = run(capsys, "check-gcd", ex, "--order", files("bad.txt", "x1*x3\n"))
    assert code == 1 and "error" in err


def test_verify_cert(files, capsys):
    _, cert, _ = run(capsys, "check-gcd", files("ex.ideal", SQUARE))
    assert run(capsys, "verify-cert", files("c.txt", cert))[0] == 0
    tampered = cert.replace("x1*x3 -> x2*x3", "x1*x3 -> x2*x4")
    code, out, _ = run(capsys, "verify-cert", files("t.txt", tampered))
    assert code == 2 and "invalid" in out


def test_ma_trivial_four_cycle(files, capsys):
    code, out, _ = run(capsys, "ma-trivial", files("c4.complex", C4))
    assert code == 2
    assert out.startswith("nontrivial")
    assert "witness: ({1,3}, 0) * ({2,4}, 0)" in out
    code, out, _ = run(capsys, "ma-trivial", files("c4b.complex", C4), "--json")
    assert json.loads(out)["witness"] == {"sigma_a": [1, 3], "p_a": 0, "sigma_b": [2, 4], "p_b": 0}
    code, out, _ = run(capsys, "ma-trivial", files("e.complex", "vertices 4\nfacet 1 2\nfacet 3 4\n"))
    assert code == 0 and out.startswith("trivial")


def test_ideal_arithmetic_commands(files, capsys):
    a = files("a.ideal", "ring n=2\nx1\n")
    b = files("b.ideal", "ring n=2\nx2\n")
    assert run(capsys, "product", a, b)[1] == "ring n=2\nx1*x2\n"
    assert run(capsys, "intersect", a, b)[1] == "ring n=2\nx1*x2\n"
    m = files("m.ideal", "ring n=2\nx1\nx2\n")
    assert parse_ideal(run(capsys, "power", m, "-k", "2")[1]) == ideal(2, "x1^2", "x1*x2", "x2^2")
    tri = files("t.ideal", "ring n=3\nx1*x2\nx1*x3\nx2*x3\n")
    got = parse_ideal(run(capsys, "sympow", tri, "-k", "2")[1])
    assert got == ideal(3, "x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2")
    code, out, _ = run(capsys, "polarize", files("p.ideal", "ring n=1\nx1^2\n"))
    assert code == 0 and parse_ideal(out) == ideal(2, "x1*x2")


def test_complex_commands(files, capsys):
    c4 = files("c4.complex", C4)
    assert parse_complex(run(capsys, "dual", c4)[1]) == SimplicialComplex.on(4, [[1, 3], [2, 4]])
    assert parse_ideal(run(capsys, "sr-ideal", c4)[1]) == ideal(4, "x1*x3", "x2*x4")
    sq = files("sq.ideal", "ring n=4\nx1*x3\nx2*x4\n")
    assert run(capsys, "sr-complex", sq)[1] == format_complex(parse_complex(C4))
    pts = files("pts.complex", "vertices 2\nfacet 1\nfacet 2\n")
    joined = parse_complex(run(capsys, "join", pts, pts)[1])
    assert joined == SimplicialComplex.on(4, [[1, 3], [1, 4], [2, 3], [2, 4]])


def test_join_dual_pipeline_command(files, capsys):
    irr = files("irr.complex", "vertices 2\nfacet\n")
    code, out, _ = run(capsys, "join-dual-pipeline", irr, irr, "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["identity_holds"] and rep["triviality"]["verdict"] == "trivial"
    assert rep["gamma_facets"] == [[1, 2], [3, 4]]


def test_betti_engines(files, capsys):
    sq = files("sq.ideal", "ring n=4\nx1*x3\nx2*x4\n")
    code, out, _ = run(capsys, "betti", sq, "--engine", "both", "--json")
    tables = json.loads(out)
    assert code == 0 and tables["taylor"] == tables["hochster"]
    dims = {(e["i"], tuple(e["sigma"])): e["dim"] for e in tables["taylor"]}
    assert dims == {(0, ()): 1, (1, (1, 3)): 1, (1, (2, 4)): 1, (2, (1, 2, 3, 4)): 1}
    for field in ("2", "3"):
        assert run(capsys, "betti", sq, "--engine", "both", "--field", field)[0] == 0
    code, _, err = run(capsys, "betti", files("nsq.ideal", "ring n=1\nx1^2\n"), "--engine", "hochster")
    assert code == 1 and "squarefree" in err


def test_series_and_probe(files, capsys):
    code, out, _ = run(capsys, "series", files("h.ideal", "ring n=1\nx1^2\n"), "-d", "4")
    assert code == 0
    assert out == "1 1 1 1 1\n"
    tri = files("t.ideal", "ring n=3\nx1*x2\nx1*x3\nx2*x3\n")
    code, out, _ = run(capsys, "probe-sympow", tri, "--kmax", "3")
    assert code == 0
    assert [l for l in out.splitlines() if not l.startswith("#")] == ["k=2: c=none", "k=3: c=1"]


def test_gen_corpus_is_deterministic(capsys):
    first = run(capsys, "gen-corpus", "--seed", "7", "--count", "5")[1]
    assert run(capsys, "gen-corpus", "--seed", "7", "--count", "5")[1] == first
    assert run(capsys, "gen-corpus", "--seed", "8", "--count", "5")[1] != first
    ideals = parse_corpus_ideals(first)
    assert len(ideals) == 5
    assert all(i.width <= 6 and len(i.gens) <= 6 for i in ideals)
    cxs = run(capsys, "gen-corpus", "--seed", "7", "--kind", "complex", "--count", "3")[1]
    assert len([parse_complex(c) for c in split_corpus(cxs)]) == 3


def test_output_flag_and_env_field(files, capsys, tmp_path, monkeypatch):
    out_path = tmp_path / "out.txt"
    assert run(capsys, "sr-ideal", files("c.complex", C4), "-o", str(out_path))[1] == ""
    assert parse_ideal(out_path.read_text()) == ideal(4, "x1*x3", "x2*x4")
    monkeypatch.setenv("GOLODCERT_FIELD", "4")
    assert run(capsys, "ma-trivial", files("c2.complex", C4))[0] == 1


def test_errors_exit_one(files, capsys):
    assert main(["ma-trivial", "/nonexistent/file"]) == 1
    assert main(["power", files("bad.ideal", "ring n=2\ny1\n"), "-k", "2"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["product", "--bogus-flag"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["power", files("x.ideal", "ring n=1\nx1\n"), "-k", "-1"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_round_trip_through_files(files, capsys):
    a = files("a.ideal", "ring n=3\nx1^2*x2\nx3\n")
    b = files("b.ideal", "ring n=3\nx2\nx1*x3^2\n")
    out = run(capsys, "product", a, b)[1]
    assert parse_ideal(out) == product(ideal(3, "x1^2*x2", "x3"), ideal(3, "x2", "x1*x3^2"))
    again = run(capsys, "product", files("p.ideal", out), files("u.ideal", "ring n=3\n1\n"))[1]
    assert again == out


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "golodcert", "check-gcd", files("ci.ideal", CI), "--order", "search"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert proc.stdout == "no order exists (exhaustive)\n"
