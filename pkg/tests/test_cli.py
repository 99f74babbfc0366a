import json

import pytest

from berge import parse_hg, validate
from berge.cli import main, read_report
from berge.errors import FormatError


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def _report(capsys, argv):
    code, out = _run(capsys, argv)
    return code, read_report(out)


def test_construct_round_trip(capsys):
    code, out = _run(capsys, ["construct", "fano"])
    assert code == 0
    h = parse_hg(out)
    assert h.n == 7 and h.m == 7
    code, out = _run(capsys, ["construct", "matching_k2", "--n", "6"])
    assert parse_hg(out).m == 2


def test_construct_to_file(tmp_path, capsys):
    path = tmp_path / "star.hg"
    code, _ = _run(capsys, ["construct", "star_k3", "--n", "7", "-o", str(path)])
    assert code == 0
    assert parse_hg(path.read_text()).m == 3


def test_construct_bad_params(capsys):
    assert main(["construct", "sts_bose", "--n", "8"]) == 2
    assert main(["construct", "star_k3"]) == 2


def test_shadow_verb(tmp_path, capsys):
    f = tmp_path / "t.hg"
    f.write_text("3 1\n0 1 2\n")
    code, rep = _report(capsys, ["shadow", str(f)])
    assert code == 0
    assert rep["result"]["n"] == 3
    assert rep["result"]["shadow_edges"] == 3


def test_stats_verb(tmp_path, capsys):
    f = tmp_path / "fano.hg"
    main(["construct", "fano", "-o", str(f)])
    capsys.readouterr()
    code, rep = _report(capsys, ["stats", str(f)])
    assert code == 0
    r = rep["result"]
    assert (r["n"], r["m"], r["shadow_edges"], r["min_shadow_degree"]) == (7, 7, 21, 6)


def test_solve_verbs(tmp_path, capsys):
    f = tmp_path / "fano.hg"
    main(["construct", "fano", "-o", str(f)])
    capsys.readouterr()
    code, rep = _report(capsys, ["solve", "longest-path", str(f)])
    assert code == 0 and rep["result"]["length"] == 6
    # witness re-validates
    h = parse_hg(f.read_text())
    from berge import BergePath, is_valid_berge_path

    w = BergePath(
        vertices=tuple(rep["result"]["witness_vertices"]),
        hyperedges=tuple(tuple(e) for e in rep["result"]["witness_edges"]),
    )
    assert is_valid_berge_path(h, w)
    code, rep = _report(capsys, ["solve", "circumference", str(f)])
    assert code == 0 and rep["result"]["length"] == 7
    code, rep = _report(capsys, ["solve", "has-path", str(f), "--k", "7"])
    assert code == 0 and rep["result"]["found"] is False
    code, rep = _report(capsys, ["solve", "has-path", str(f), "--k", "6"])
    assert rep["result"]["found"] is True


def test_solve_acyclic_circumference(tmp_path, capsys):
    f = tmp_path / "t.hg"
    f.write_text("3 1\n0 1 2\n")
    code, rep = _report(capsys, ["solve", "circumference", str(f)])
    assert code == 0 and rep["result"]["length"] is None


def test_missing_file_exits_2(capsys):
    assert main(["solve", "longest-path", "missing.hg"]) == 2
    assert "error" in capsys.readouterr().err


def test_invalid_hg_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.hg"
    f.write_text("4 2\n0 1 2\n0 1 3\n")
    assert main(["stats", str(f)]) == 2
    assert "linearity" in capsys.readouterr().err


def test_check_claims_clean(tmp_path, capsys):
    f = tmp_path / "c.hg"
    f.write_text("4 4\n0 1\n0 2\n1 2\n2 3\n")
    code, rep = _report(capsys, ["check", "claims", str(f)])
    assert code == 0
    r = rep["result"]
    assert r["cycle_length"] == 3
    assert r["checked_vertices"] == 1
    assert r["violations"] == []


def test_check_claims_acyclic(tmp_path, capsys):
    f = tmp_path / "a.hg"
    f.write_text("3 1\n0 1 2\n")
    code, rep = _report(capsys, ["check", "claims", str(f)])
    assert code == 0 and rep["result"]["cycle_length"] is None


def test_verify_remark_cli(tmp_path, capsys):
    code, rep = _report(capsys, ["verify", "remark", "--n", "6", "--k", "2",
                                 "--jobs", "1"])
    assert code == 0
    r = rep["result"]
    assert r["holds"] is True and r["max_shadow_edges"] == 6
    assert rep["command"]["campaign"] == "remark"


def test_verify_rejects_bad_k(capsys):
    assert main(["verify", "theorem-uniform", "--n", "5", "--k", "3"]) == 2
    assert main(["verify", "remark", "--n", "5", "--k", "4"]) == 2


def test_verify_cap_exit(capsys):
    assert main(["verify", "theorem-shadow", "--n", "9", "--k", "4"]) == 2


def test_witness_dir(tmp_path, capsys):
    wdir = tmp_path / "wit"
    code, _ = _run(capsys, ["verify", "theorem-shadow", "--n", "4", "--k", "4",
                            "--jobs", "1", "--witness-dir", str(wdir)])
    assert code == 0
    files = sorted(wdir.glob("witness_*.hg"))
    assert files
    for f in files:
        h = parse_hg(f.read_text())
        assert h.n == 4


def test_output_determinism(tmp_path, capsys):
    args = ["verify", "claims", "--n", "5", "--samples", "40", "--seed", "9"]
    _, out1 = _run(capsys, args + ["--jobs", "1"])
    _, out2 = _run(capsys, args + ["--jobs", "2"])
    a, b = json.loads(out1), json.loads(out2)
    a.pop("timing")
    b.pop("timing")
    assert a == b


def test_report_reader_rejects_unknown_fields():
    good = json.dumps({"schema_version": "1", "command": {}, "result": {},
                       "timing": {"seconds": 0}})
    read_report(good)
    with pytest.raises(FormatError):
        read_report(json.dumps({"schema_version": "2", "command": {},
                                "result": {}, "timing": {}}))
    with pytest.raises(FormatError):
        read_report(json.dumps({"schema_version": "1", "command": {},
                                "result": {}, "timing": {}, "extra": 1}))


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
