import json
from pathlib import Path

import pytest

from wlmotif import config
from wlmotif.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


@pytest.fixture(autouse=True)
def restore_defaults():
    # main() installs its config process-wide
    yield
    config.apply(config.load_config(None))


def g(name):
    return str(DATA / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_wl_equiv_exit_codes(capsys):
    code, out = run(capsys, "wl", "equiv", "--left", g("c6"), "--right", g("two_k3"), "-k", "1")
    assert code == 0 and out["equivalent"] is True
    code, out = run(capsys, "wl", "equiv", "--left", g("c6"), "--right", g("two_k3"), "-k", "2")
    assert code == 3 and out["equivalent"] is False


def test_wl_refine_uses_fingerprints(capsys):
    code, out = run(capsys, "wl", "refine", "--graph", g("c5"), "-k", "1")
    assert code == 0 and out["classes"] == 1
    assert all(len(c["color"]) == 16 for c in out["colors"])


def test_tw_and_hom_count(capsys, tmp_path):
    dec = tmp_path / "td.json"
    code, out = run(capsys, "tw", "--graph", g("k4"), "--decomposition", str(dec))
    assert code == 0 and out["treewidth"] == 3 and dec.exists()
    for method in ("brute", "td", "auto"):
        code, out = run(capsys, "hom", "count", "--pattern", g("k3"), "--graph", g("k3"), "--method", method)
        assert (code, out["homs"]) == (0, 6)


def test_motif_support_serializes_fractions(capsys):
    code, out = run(capsys, "motif", "support", "--kind", "sub", "--pattern", g("p4"))
    assert code == 0
    assert all(set(item["coefficient"]) == {"num", "den"} for item in out["support"])
    assert any(item["coefficient"]["den"] > 1 for item in out["support"])


def test_wldim_commands(capsys, tmp_path):
    assert run(capsys, "wldim", "sub", "--pattern", g("c7"))[1]["dimension"] == 2
    assert run(capsys, "wldim", "ind", "--pattern", g("p4"), "--cross-check")[1]["dimension"] == 3
    assert run(capsys, "wldim", "graphlet", "-k", "4")[1]["dimension"] == 3
    support = tmp_path / "s.json"
    run(capsys, "--output", str(support), "motif", "support", "--kind", "is", "-k", "3")
    assert run(capsys, "wldim", "param", "--support", str(support))[1]["dimension"] == 2


def test_eta_build(capsys):
    code, out = run(capsys, "eta", "build", "--pattern", g("k2"), "-k", "1", "--graphs", g("c6"), g("two_k3"))
    assert code == 0 and out["sums"] == [12, 12] and len(out["table"]) == 1


def test_cfi_commands(capsys, tmp_path):
    code, out = run(capsys, "cfi", "build", "--base", g("k3"), "--twist")
    assert code == 0 and out["product"]["sigma"] == ["1"]
    assert len(out["product"]["vertices"]) == 6 and out["twist_set"] == [0]
    left = tmp_path / "l.json"
    code, out = run(capsys, "cfi", "witness", "--pattern", g("k3"), "--out-left", str(left))
    assert code == 0 and out["equivalent"] and out["differ"] and left.exists()


def test_usage_errors_exit_one(capsys):
    assert main([]) == 1
    assert main(["hom", "count", "--pattern", g("k3")]) == 1
    assert main(["motif", "support", "--kind", "sub"]) == 1
    assert main(["tw", "--graph", "/nonexistent.json"]) == 1
    assert main(["verify", "no-such-criterion"]) == 1


def test_bad_graph_file_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [{"id": 0, "label": "1"}], "edges": [{"u": 0, "v": 0, "label": "1"}]}')
    assert main(["tw", "--graph", str(bad)]) == 1


def test_guard_exceeded_exits_two(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"guards": {"spasm_n": 3}}))
    assert main(["--config", str(cfg), "wldim", "sub", "--pattern", g("c5")]) == 2


def test_output_is_deterministic(capsys):
    argv = ["motif", "support", "--kind", "ind", "--pattern", g("p4")]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_verify_single_criterion(capsys):
    code = main(["verify", "gf2"])
    captured = capsys.readouterr()
    assert code == 0 and captured.err.startswith("[PASS]")
    assert json.loads(captured.out)["all_passed"] is True
