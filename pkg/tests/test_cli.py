import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from jumpjacobi.cli import (
    EXIT_CONFIG,
    EXIT_NUMERIC,
    EXIT_OK,
    ConfigError,
    RunConfig,
    config_from_argv,
    main,
    parse_complexes,
    parse_n_list,
    render,
    run_table,
)
from jumpjacobi.quadrature import WeightSpec


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def _parse_csv(text):
    lines = text.splitlines()
    assert lines[0].startswith("# ")
    meta = json.loads(lines[0][2:])
    reader = csv.reader(io.StringIO("\n".join(lines[1:])))
    header = next(reader)
    rows = [[float(v) for v in row] for row in reader]
    return meta, header, rows


def test_parse_n_list():
    assert parse_n_list("32,64") == [32, 64]
    assert parse_n_list("10:20:5") == [10, 15, 20]
    assert parse_n_list("3:5") == [3, 4, 5]
    with pytest.raises(ConfigError):
        parse_n_list("1:x")
    with pytest.raises(ConfigError):
        parse_n_list("1:5:0")


def test_parse_complexes():
    assert parse_complexes("2,0.5+0.8i") == [2 + 0j, 0.5 + 0.8j]


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(spec=WeightSpec(), command="bogus")
    with pytest.raises(ConfigError):
        RunConfig(spec=WeightSpec(), command="recur", tol=0.0)
    with pytest.raises(ConfigError):
        RunConfig(spec=WeightSpec(), command="recur", n_list=[0])


def test_recur_schema(capsys):
    code, out, _ = _run(["recur", "--c", "2", "--alpha", "0", "--beta", "0", "--n", "256"], capsys)
    assert code == EXIT_OK
    meta, header, rows = _parse_csv(out)
    assert header[:7] == ["n", "a_n", "b_n", "pred_a", "pred_b", "err_a_n2", "err_b_n2"]
    assert meta["spec"]["c"] == 2.0 and meta["quad_npts"] >= 256
    assert rows[0][0] == 256
    assert abs(rows[0][1] - 0.5) < 1e-2


def test_deterministic_output(capsys):
    argv = ["outer", "--c", "2", "--z", "2,0.5+0.8i", "--n", "16,32"]
    _, first, _ = _run(argv, capsys)
    _, second, _ = _run(argv, capsys)
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ["recur", "--c", "2", "--n", "16,32"],
        ["kernel", "--c", "2", "--x", "0.3", "--y", "-0.2", "--n", "32,64"],
        ["zeros", "--c", "2", "--n", "60", "--k-min", "-2", "--k-max", "2"],
    ],
)
def test_csv_json_round_trip(argv, capsys):
    _, csv_text, _ = _run(argv, capsys)
    _, json_text, _ = _run(argv + ["--format", "json"], capsys)
    meta, header, rows = _parse_csv(csv_text)
    doc = json.loads(json_text)
    assert doc["provenance"] == meta
    assert doc["columns"] == header
    for r_csv, r_json in zip(rows, doc["rows"]):
        for a, b in zip(r_csv, r_json):
            if b is None:
                assert math.isnan(a)
            else:
                assert a == b


def test_kernel_err_decays(capsys):
    code, out, _ = _run(["kernel", "--c", "2", "--x", "0.3", "--y", "-0.2", "--n", "32,64,128,256"], capsys)
    assert code == EXIT_OK
    _, header, rows = _parse_csv(out)
    err = np.array([r[header.index("abs_err")] for r in rows])
    assert err[-1] < err[0]


def test_local_and_szego(capsys):
    code, out, _ = _run(["local", "--c", "2", "--x", "0.1", "--n", "32,64"], capsys)
    assert code == EXIT_OK
    code, out, _ = _run(["local", "--c", "2", "--x", "0.6", "--scaled", "--n", "64"], capsys)
    assert code == EXIT_OK
    code, out, _ = _run(["szego", "--c", "2", "--x=-0.5,0.5"], capsys)
    assert code == EXIT_OK
    _, header, rows = _parse_csv(out)
    assert len(rows) == 2


def test_props_exit(capsys):
    code, out, _ = _run(["props", "--c", "2"], capsys)
    assert code == EXIT_OK


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "w.json"
    cfg.write_text(WeightSpec(0.5, 0.0, 3.0, (0.0, 0.2)).to_json())
    out_file = tmp_path / "o.csv"
    code, _, _ = _run(["recur", "--config", str(cfg), "--n", "10", "--out", str(out_file)], capsys)
    assert code == EXIT_OK
    meta, _, _ = _parse_csv(out_file.read_text())
    assert meta["spec"]["alpha"] == 0.5


def test_exit_codes(capsys):
    assert _run(["recur", "--c", "-1"], capsys)[0] == EXIT_CONFIG
    assert _run(["recur", "--bogus"], capsys)[0] == EXIT_CONFIG
    assert _run(["nothing"], capsys)[0] == EXIT_CONFIG
    assert _run(["recur", "--config", "/nonexistent.json"], capsys)[0] == EXIT_CONFIG
    assert _run(["recur", "--n", "5000"], capsys)[0] == EXIT_NUMERIC
    assert _run(["local", "--c", "2", "--x", "0.9", "--n", "32"], capsys)[0] == EXIT_NUMERIC


def test_run_table_meta():
    cfg = config_from_argv(["recur", "--n", "8"])
    tab = run_table(cfg)
    assert tab.meta["tool"].startswith("jumpjacobi ")
    assert render(tab, "json").endswith("\n")


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "jumpjacobi.cli", "recur", "--n", "4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert res.stdout.startswith("# ")
