import json

import pytest

from cayley_runs.cli import run_cli

from conftest import FIG_MAPPING, FIG_RUN_STARTS, FIG_TREE_PARENT


@pytest.fixture
def fig_files(tmp_path):
    tree = tmp_path / "tree.txt"
    tree.write_text(" ".join(map(str, FIG_TREE_PARENT)) + "\n")
    mapping = tmp_path / "mapping.txt"
    mapping.write_text(" ".join(map(str, FIG_MAPPING)) + "\n")
    return tree, mapping


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_runs_command(capsys, fig_files):
    _, mapping = fig_files
    code, out = run(capsys, "runs", "--input", str(mapping))
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 13
    assert payload["starts"] == sorted(FIG_RUN_STARTS)


def test_runs_command_tree(capsys, fig_files):
    tree, _ = fig_files
    code, out = run(capsys, "runs", "--input", str(tree), "--tree")
    assert code == 0
    assert json.loads(out)["count"] == 13


def test_runs_command_json_input(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 2, "image": [2, 1]}))
    code, out = run(capsys, "runs", "--input", str(path))
    assert code == 0
    assert json.loads(out) == {"count": 1, "starts": [1]}


def test_phi_produces_figure_mapping(capsys, fig_files):
    tree, _ = fig_files
    code, out = run(capsys, "phi", "--tree", str(tree), "--mark", "1")
    assert code == 0
    assert out.strip() == " ".join(map(str, FIG_MAPPING))


def test_phi_inverse_recovers_marked_tree(capsys, fig_files):
    _, mapping = fig_files
    code, out = run(capsys, "phi-inv", "--mapping", str(mapping))
    assert code == 0
    payload = json.loads(out)
    assert tuple(payload["parent"]) == FIG_TREE_PARENT
    assert payload["mark"] == 1


def test_partition_round_trip(capsys, tmp_path, fig_files):
    _, mapping = fig_files
    code, out = run(capsys, "partition", "encode", "--mapping", str(mapping))
    assert code == 0
    encoded = tmp_path / "partition.json"
    encoded.write_text(out)
    code, out = run(capsys, "partition", "decode", "--input", str(encoded))
    assert code == 0
    assert out.strip() == " ".join(map(str, FIG_MAPPING))


def test_table_mapping(capsys):
    code, out = run(capsys, "table", "--kind", "mapping", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["3,1,3", "3,2,18", "3,3,6"]


def test_table_oracle_agrees_with_formula(capsys):
    code, formula = run(capsys, "table", "--kind", "tree", "--n", "4")
    assert code == 0
    code, oracle = run(capsys, "table", "--kind", "tree", "--n", "4", "--oracle")
    assert code == 0
    assert formula == oracle


def test_table_connected_series_vs_oracle(capsys):
    code, from_series = run(capsys, "table", "--kind", "connected", "--n", "4")
    assert code == 0
    code, from_oracle = run(capsys, "table", "--kind", "connected", "--n", "4", "--oracle")
    assert code == 0
    assert from_series == from_oracle


def test_table_respects_bound(capsys):
    code, _ = run(capsys, "table", "--kind", "mapping", "--n", "8", "--oracle")
    assert code == 2
    code, _ = run(capsys, "table", "--kind", "mapping", "--n", "8")
    assert code == 0  # closed form has no exhaustive bound


def test_series_csv(capsys):
    code, out = run(capsys, "series", "--which", "F", "--order", "4")
    assert code == 0
    rows = {tuple(line.split(",")[:2]): line.split(",")[2:] for line in out.splitlines()}
    assert rows[("3", "2")] == ["1", "1"]  # 6 / 3! = 1
    assert rows[("4", "2")] == ["7", "8"]  # 21 / 4!


def test_verify_series(capsys):
    code, out = run(capsys, "verify-series", "--order", "6")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_verify_all_small(capsys):
    code, out = run(capsys, "verify-all", "--n-max", "3")
    assert code == 0
    assert "FAIL" not in out


def test_asymptotics_json(capsys):
    code, out = run(capsys, "asymptotics", "--v", "1.0", "--constants")
    assert code == 0
    payload = json.loads(out)
    assert payload["tau"] == 1.0
    assert abs(payload["rho"] - 0.367879441171) < 1e-12
    assert abs(payload["mu"] - 0.632120558829) < 1e-9
    assert abs(payload["sigma2"] - 0.097208874698) < 1e-7


def test_mc_json_deterministic(capsys):
    code, first = run(capsys, "mc", "--n", "50", "--samples", "2000", "--seed", "5")
    assert code == 0
    code, second = run(capsys, "mc", "--n", "50", "--samples", "2000", "--seed", "5")
    assert code == 0
    assert first == second
    payload = json.loads(first)
    for key in ("mean", "variance", "mean_over_n", "variance_over_n",
                "histogram", "ks_statistic"):
        assert key in payload


def test_mc_tree_flag(capsys):
    code, out = run(capsys, "mc", "--n", "5", "--samples", "500", "--seed", "2", "--trees")
    assert code == 0
    assert json.loads(out)["samples"] == 500


def test_config_file_supplies_defaults(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rng_seed": 77, "exhaustive_bound": 5}))
    code, with_cfg = run(capsys, "--config", str(cfg),
                         "mc", "--n", "10", "--samples", "100")
    assert code == 0
    assert json.loads(with_cfg)["seed"] == 77
    code, explicit = run(capsys, "mc", "--n", "10", "--samples", "100", "--seed", "77")
    assert json.loads(explicit) == json.loads(with_cfg)
    # the configured bound now blocks the n=6 oracle unless overridden
    code, _ = run(capsys, "--config", str(cfg),
                  "table", "--kind", "mapping", "--n", "6", "--oracle")
    assert code == 2
    code, _ = run(capsys, "--config", str(cfg), "table", "--kind", "mapping",
                  "--n", "6", "--oracle", "--max-size", "6")
    assert code == 0


def test_usage_errors(capsys):
    assert run_cli(["table", "--kind", "nonsense", "--n", "3"]) == 2
    assert run_cli(["phi"]) == 2
    assert run_cli([]) == 2
    assert run_cli(["no-such-command"]) == 2


def test_missing_file_is_reported(capsys):
    assert run_cli(["runs", "--input", "/nonexistent/path.txt"]) == 2
    assert "error" in capsys.readouterr().err
