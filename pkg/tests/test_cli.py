"""Command-line driver: outputs, exit codes, determinism."""

import json

import pytest

from hilbhasse.cli import main
from hilbhasse.zips import check_equivalence, zip_from_json_obj

CONSISTENT_ZIP = {"p": 2, "k": 1, "n": 2, "perm": [0, 1],
                  "omega": [[[1], [0]], [[1], [0]]],
                  "conj": [[[1], [0]], [[0], [1]]]}


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_verify_equivalence_f2_n2(capsys):
    code, out = run_cli(capsys, ["verify-equivalence", "--p", "2", "--n", "2",
                                 "--perm", "split"])
    assert code == 0
    assert out == "81/81 consistent\n"


def test_verify_equivalence_inert_and_explicit_perm(capsys):
    code, out = run_cli(capsys, ["verify-equivalence", "--p", "2", "--n", "2",
                                 "--perm", "inert"])
    assert code == 0 and out.endswith("81/81 consistent\n")
    code, out = run_cli(capsys, ["verify-equivalence", "--p", "2", "--n", "2",
                                 "--perm", "1,0"])
    assert code == 0 and out.endswith("81/81 consistent\n")


def test_verify_equivalence_json_format(capsys):
    code, out = run_cli(capsys, ["verify-equivalence", "--p", "3", "--n", "1",
                                 "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload == {"total": 16, "consistent": 16, "failures": []}


def test_strata_table(capsys):
    code, out = run_cli(capsys, ["strata-table", "--n", "3"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "w\tlength\tcodim\tord"
    assert len(lines) == 9
    for line in lines[1:]:
        w, length, codim, order = line.split("\t")
        assert int(order) == 3 - int(length) == int(codim)


def test_weight_space_eta(capsys):
    code, out = run_cli(capsys, ["weight-space", "--n", "2", "--target", "eta"])
    assert code == 0
    assert out == "dimension\t1\nx10*x20\n"


def test_weight_space_w0eta_and_raw_target(capsys):
    code, out = run_cli(capsys, ["weight-space", "--n", "2", "--target", "w0eta"])
    assert code == 0 and out == "dimension\t1\nx11*x21\n"
    code, out = run_cli(capsys, ["weight-space", "--n", "2",
                                 "--target", "1,0;-2"])
    assert code == 0 and out == "dimension\t0\n"


def test_census(capsys):
    code, out = run_cli(capsys, ["census", "--p", "2", "--n", "1"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "w\tlength\tcell_size\texpected"
    assert lines[1] == "+\t0\t2\t2"
    assert lines[2] == "-\t1\t4\t4"
    assert lines[-1].endswith("OK")


def test_orbits(capsys):
    code, out = run_cli(capsys, ["orbits", "--p", "2", "--n", "1"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "w\tlength\tcell_size\torbit_count\torbit_sizes"
    sizes = [int(line.split("\t")[2]) for line in lines[1:]]
    assert sum(sizes) == 6


def test_zip_check_agrees_with_library(capsys, tmp_path):
    path = tmp_path / "zip.json"
    path.write_text(json.dumps(CONSISTENT_ZIP))
    code, out = run_cli(capsys, ["zip-check", "--file", str(path)])
    assert code == 0
    report = check_equivalence(zip_from_json_obj(CONSISTENT_ZIP))
    assert out.strip().split("\n")[1] == report.tsv_row()
    code, out = run_cli(capsys, ["zip-check", "--file", str(path),
                                 "--format", "json"])
    assert code == 0
    assert json.loads(out) == report.to_json_obj()


def test_identical_configs_are_byte_identical(capsys):
    argv = ["orbits", "--p", "3", "--n", "1", "--format", "json"]
    _, first = run_cli(capsys, argv)
    _, second = run_cli(capsys, argv)
    assert first == second


def test_output_file(tmp_path, capsys):
    target = tmp_path / "table.tsv"
    code, out = run_cli(capsys, ["strata-table", "--n", "2",
                                 "--output", str(target)])
    assert code == 0 and out == ""
    assert target.read_text().startswith("w\tlength\tcodim\tord\n")


def test_bound_refusal_exit_code(capsys):
    code = main(["verify-equivalence", "--p", "3", "--n", "3", "--bound", "100"])
    assert code == 3


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["strata-table"])  # missing required --n
    assert exc.value.code == 2


def test_missing_zip_file_is_a_usage_error(capsys):
    code = main(["zip-check", "--file", "/no/such/file.json"])
    assert code == 2


def test_bad_perm_is_a_usage_error(capsys):
    code = main(["verify-equivalence", "--p", "2", "--n", "2", "--perm", "0,0"])
    assert code == 2


def test_failed_equivalence_prints_replayable_counterexample(capsys, monkeypatch):
    # no real zip is inconsistent, so force a failing report to exercise the
    # counterexample-first output path
    import hilbhasse.cli as cli_mod
    from hilbhasse.zips import ZipReport

    def broken(z):
        flags = (False,) * z.n
        return ZipReport(flags, 0, z.n, False)

    monkeypatch.setattr(cli_mod, "check_equivalence", broken)
    code, out = run_cli(capsys, ["verify-equivalence", "--p", "2", "--n", "1"])
    assert code == 1
    lines = out.strip().split("\n")
    assert lines[-1] == "0/9 consistent"
    assert len(lines) == 10
    # every counterexample line carries the full zip datum, replayable as is
    first = json.loads(lines[0].split("\t")[1])
    assert set(first) == {"p", "k", "n", "perm", "omega", "conj"}
    assert zip_from_json_obj(first) is not None
