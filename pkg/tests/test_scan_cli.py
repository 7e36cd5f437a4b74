import csv
import io
import json
import subprocess
import sys
from dataclasses import replace

import pytest

from burauconway import cli
from burauconway import fixtures as fx
from burauconway.braidword import is_knot_closure, parse_braid, ww_star
from burauconway.scan import (
    ResampleLimit,
    ScanConfig,
    ScanRecord,
    TheoremViolation,
    check_record,
    evaluate_word,
    format_csv,
    format_jsonl,
    is_prime,
    random_braid,
    scan,
)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_config_validation():
    for bad in (dict(strands=4), dict(strands=1), dict(length_min=0), dict(length_min=5, length_max=4),
                dict(power_k=0), dict(workers=0)):
        with pytest.raises(ValueError):
            ScanConfig(**bad)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(7919) and not is_prime(7917)


def test_random_braid_deterministic_and_in_range():
    cfg = ScanConfig(strands=5, length_min=12, length_max=12, power_k=2, seed=1)
    assert random_braid(cfg, 0) == random_braid(cfg, 0)
    assert random_braid(cfg, 0) != random_braid(cfg, 1)
    for i in range(20):
        w = random_braid(cfg, i)
        assert len(w) == 12 and w.strands == 5
        assert all(1 <= abs(g) <= 4 for g in w.letters)
        assert is_knot_closure(ww_star(w, cfg.power_k))


def test_random_braid_resample_limit():
    # (ww*)^3 on 3 strands has closure permutation p^6 = id, so never a knot
    cfg = ScanConfig(strands=3, length_min=2, length_max=4, power_k=3, max_attempts=50)
    with pytest.raises(ResampleLimit):
        random_braid(cfg, 0)
    recs = scan(ScanConfig(strands=3, length_min=2, length_max=4, power_k=3, sample_count=2, max_attempts=20))
    assert all(r.status.startswith("error") for r in recs)


def test_table_row_injected():
    cfg = ScanConfig(sample_count=0)
    (rec,) = scan(cfg, (parse_braid(fx.LEAD_TABLE[0][0], 5),))
    assert rec.lead == -3 and rec.lead_is_prime and not rec.lead_is_square
    assert rec.split4 and rec.restriction_ok and not rec.sign_ok
    assert rec.index == -1
    assert rec.conway[-1] == rec.lead


def test_records_are_consistent():
    cfg = ScanConfig(strands=5, length_min=6, length_max=10, power_k=2, sample_count=25, seed=3)
    for rec in scan(cfg):
        assert rec.status == "ok"
        assert rec.lead == rec.conway[-1]
        assert rec.lead_is_prime == is_prime(abs(rec.lead))
        assert rec.split4 and rec.restriction_ok
        assert abs(rec.lead) % 4 != 2


def test_evaluate_word_records_errors():
    rec = evaluate_word(parse_braid("1", 3), 1, 7)
    assert rec.status.startswith("error: NotAKnot")
    assert rec.index == 7


def test_check_record_raises_on_violation():
    bad = ScanRecord(index=0, braid_word="1", conway=[1, 0, 1], lead=1, split4=False)
    with pytest.raises(TheoremViolation):
        check_record(bad, 5)
    check_record(bad, 4)  # even strands are recorded, not asserted
    with pytest.raises(TheoremViolation):
        check_record(ScanRecord(index=0, braid_word="1", lead=6, split4=True, restriction_ok=True), 5)


def test_determinism_across_workers():
    cfg = ScanConfig(strands=5, length_min=6, length_max=12, power_k=2, sample_count=24, seed=99)
    outputs = set()
    for workers in (1, 4, 8):
        c = replace(cfg, workers=workers)
        outputs.add(format_jsonl(c, scan(c)))
    assert len(outputs) == 1


def test_jsonl_and_csv_formats():
    cfg = ScanConfig(sample_count=3, seed=5)
    recs = scan(cfg)
    lines = format_jsonl(cfg, recs).splitlines()
    meta = json.loads(lines[0])["meta"]
    assert meta["seed"] == 5 and "workers" not in meta and meta["random_model"]
    assert [json.loads(x)["index"] for x in lines[1:]] == [0, 1, 2]
    rows = list(csv.DictReader(io.StringIO(format_csv(recs))))
    assert len(rows) == 3
    assert [int(c) for c in rows[0]["conway"].split()] == recs[0].conway


def test_plot_written(tmp_path):
    from burauconway.plotting import lead_histogram

    recs = scan(ScanConfig(sample_count=6, seed=2), (parse_braid(fx.LEAD_TABLE[0][0], 5),))
    path = tmp_path / "leads.png"
    lead_histogram(recs, path, title="test")
    assert path.stat().st_size > 1000


def test_cli_alex_and_conway(capsys):
    code, out, _ = run_cli(capsys, "alex", "--strands", "2", "1", "1", "1")
    assert code == 0 and out.strip() == "t^-1 - 1 + t"
    code, out, _ = run_cli(capsys, "conway", "--strands", "5", "--ww", "--power", "2", fx.FIGURE2_WORD)
    assert code == 0 and out.strip() == fx.FIGURE2_CONWAY
    code, out, _ = run_cli(capsys, "conway", "--strands", "2", "--json", "1 1 1")
    assert json.loads(out) == {"conway": [1, 0, 1]}


def test_cli_split4(capsys):
    code, out, _ = run_cli(capsys, "split4", "1 + 3*z^2 + 8*z^4")
    assert code == 0 and "splits mod 4: yes" in out
    code, out, _ = run_cli(capsys, "split4", "1 + z^2")
    assert code == 1 and "splits mod 4: no" in out
    code, out, _ = run_cli(capsys, "split4", "--json", "1 - z^2")
    data = json.loads(out)
    assert code == 0 and data["splits_mod4"] and all(data["conditions"].values())
    code, out, _ = run_cli(capsys, "split4", "--braid", "--strands", "5", "--ww", "--power", "2",
                           "--json", fx.LEAD_TABLE[0][0])
    assert code == 0 and json.loads(out)["poly"] == fx.PRIME_LEAD_CONWAY


def test_cli_errors(capsys):
    code, _, err = run_cli(capsys, "conway", "--strands", "3", "1")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "split4", "1 + + z")
    assert code == 2
    code, _, err = run_cli(capsys, "alex", "--strands", "3", "7")
    assert code == 2
    code, _, err = run_cli(capsys, "scan", "--strands", "4")
    assert code == 2


def test_cli_scan_outputs(capsys, tmp_path):
    out_path, csv_path, png = tmp_path / "s.jsonl", tmp_path / "s.csv", tmp_path / "s.png"
    code, _, _ = run_cli(capsys, "scan", "--count", "4", "--seed", "8", "--length", "6:9",
                         "--word", fx.LEAD_TABLE[1][0], "--output", str(out_path),
                         "--csv", str(csv_path), "--plot", str(png))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 6
    assert json.loads(lines[1])["lead"] == 5
    assert csv_path.read_text().startswith("index,")
    assert png.exists()


def test_cli_scan_violation_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise TheoremViolation("synthetic")

    monkeypatch.setattr(cli, "scan", boom)
    code, _, err = run_cli(capsys, "scan", "--count", "1")
    assert code == 2 and "THEOREM VIOLATION" in err


def test_cli_verify_paper(capsys):
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().endswith("checks passed")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "burauconway", "split4", "1 + z^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    proc = subprocess.run([sys.executable, "-m", "burauconway", "conway", "--strands", "3", "1", "-2", "1", "-2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 - z^2"
