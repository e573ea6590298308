import csv
import json
import shutil
from pathlib import Path

import pytest

from lexigauge._data import data_dir
from lexigauge.cli import main
from lexigauge.corpus import load_report


@pytest.fixture()
def sample_texts(tmp_path):
    a = tmp_path / "a.txt"
    a.write_text("Words repeat, words differ. A small sample text! Enough words now?",
                 encoding="utf-8")
    b = tmp_path / "b.txt"
    b.write_text("Another file with different content. Something else entirely here;"
                 " more to say. And a question? Yes.", encoding="utf-8")
    return a, b


def read_lines(path):
    return Path(path).read_text(encoding="utf-8").splitlines()


def test_analyze_csv_report(sample_texts, tmp_path):
    a, b = sample_texts
    out = tmp_path / "report.csv"
    assert main(["analyze", str(a), str(b), "--lang", "en", "--out", str(out)]) == 0
    lines = read_lines(out)
    assert lines[0] == "# schema: lexigauge-report-v1"
    assert lines[1].startswith("id,name,genre,origin,L,D,d,h,g,j,")
    records = load_report(out)
    assert len(records) == 2
    assert records[0]["id"] == "T1"
    assert records[0]["name"] == "a"
    assert isinstance(records[0]["L"], int)
    assert 0 < records[0]["d"] <= 1


def test_analyze_jsonl_report(sample_texts, tmp_path):
    a, _ = sample_texts
    out = tmp_path / "report.jsonl"
    assert main(["analyze", str(a), "--lang", "en", "--format", "jsonl",
                 "--out", str(out)]) == 0
    records = [json.loads(line) for line in read_lines(out)]
    assert len(records) == 1
    assert records[0]["schema"] == "lexigauge-report-v1"
    assert records[0]["id"] == "T1"


def test_analyze_report_roundtrips_to_printed_precision(sample_texts, tmp_path):
    a, _ = sample_texts
    out = tmp_path / "report.csv"
    main(["analyze", str(a), "--lang", "en", "--out", str(out)])
    with open(out, newline="", encoding="utf-8") as fh:
        raw = list(csv.DictReader(r for r in fh if not r.startswith("#")))
    parsed = load_report(out)
    for raw_row, rec in zip(raw, parsed):
        for col, value in rec.items():
            if isinstance(value, float):
                assert value == float(raw_row[col])


def test_analyze_byte_identical_between_runs(sample_texts, tmp_path):
    a, b = sample_texts
    out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    main(["analyze", str(a), str(b), "--lang", "en", "--out", str(out1)])
    main(["analyze", str(a), str(b), "--lang", "en", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


def test_analyze_partial_failure_exit_codes(sample_texts, tmp_path, capsys):
    a, _ = sample_texts
    missing = tmp_path / "missing.txt"
    # some succeed: exit 0 with a diagnostic
    assert main(["analyze", str(a), str(missing), "--lang", "en",
                 "--out", str(tmp_path / "r.csv")]) == 0
    assert "missing.txt" in capsys.readouterr().err
    # all fail: exit 1
    assert main(["analyze", str(missing), "--lang", "en",
                 "--out", str(tmp_path / "r2.csv")]) == 1


def test_analyze_zipf_override(sample_texts, tmp_path):
    a, _ = sample_texts
    out = tmp_path / "r.csv"
    main(["analyze", str(a), "--lang", "en", "--zipf-g", "1.0", "--out", str(out)])
    assert load_report(out)[0]["g"] == 1.0


def test_analyze_unknown_preset(sample_texts, tmp_path):
    a, _ = sample_texts
    assert main(["analyze", str(a), "--lang", "en", "--preset", "bogus"]) == 2


def test_analyze_preset_switch(sample_texts, tmp_path):
    a, _ = sample_texts
    out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    main(["analyze", str(a), "--lang", "en", "--out", str(out1)])
    main(["analyze", str(a), "--lang", "en", "--preset", "reconstructed-en",
          "--out", str(out2)])
    r1, r2 = load_report(out1)[0], load_report(out2)[0]
    assert r1["wqs_verbatim"] != r2["wqs_verbatim"]
    assert r2["wqs_verbatim"] == r2["wqs_reconstructed"]


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["analyze", "x.txt", "--lang", "fr"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["plot-data", "--figure", "bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def _write_manifest(path, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "name", "genre", "origin", "language", "nobel", "year", "source_path"])
        w.writerows(rows)


@pytest.fixture()
def synthetic_growth_corpus(tmp_path):
    # texts whose vocabulary follows D = 3.766 * L^0.67 up to integer rounding
    rows = []
    for i, L in enumerate((500, 1000, 2000, 4000, 8000)):
        D = round(3.766 * L**0.67)
        words = [f"w{k}" for k in range(D)] + ["w0"] * (L - D)
        p = tmp_path / f"t{i}.txt"
        p.write_text(" ".join(words), encoding="utf-8")
        rows.append([f"T{i}", f"text{i}", "S", "O", "EN", "false", "", str(p)])
    manifest = tmp_path / "manifest.csv"
    _write_manifest(manifest, rows)
    return manifest


def test_fit_heaps_from_manifest(synthetic_growth_corpus, capsys):
    assert main(["fit", "--manifest", str(synthetic_growth_corpus), "--model", "heaps"]) == 0
    out = capsys.readouterr().out
    assert "English:" in out
    c = float(out.split("c=")[1].split()[0])
    beta = float(out.split("beta=")[1].split()[0])
    assert c == pytest.approx(3.766, rel=0.01)
    assert beta == pytest.approx(0.67, rel=0.01)


def test_fit_writes_params_file(synthetic_growth_corpus, tmp_path):
    out = tmp_path / "params.csv"
    assert main(["fit", "--manifest", str(synthetic_growth_corpus), "--model", "heaps",
                 "--out", str(out)]) == 0
    with open(out, newline="", encoding="utf-8") as fh:
        rows = {r["language"]: r for r in csv.DictReader(fh)}
    assert float(rows["English"]["heaps_c"]) == pytest.approx(3.766, rel=0.01)
    # spanish keeps its bundled defaults
    assert float(rows["Spanish"]["heaps_c"]) == 2.3


def test_fit_single_text_manifest(tmp_path):
    p = tmp_path / "only.txt"
    p.write_text("a few words here. nothing else!", encoding="utf-8")
    manifest = tmp_path / "m.csv"
    _write_manifest(manifest, [["T0", "only", "S", "O", "EN", "false", "", str(p)]])
    assert main(["fit", "--manifest", str(manifest), "--model", "heaps"]) == 1


def test_fit_entropy_and_zipf_models(synthetic_growth_corpus, capsys):
    assert main(["fit", "--manifest", str(synthetic_growth_corpus), "--model", "entropy"]) == 0
    assert "exponent=" in capsys.readouterr().out
    assert main(["fit", "--manifest", str(synthetic_growth_corpus), "--model", "zipf"]) == 0
    assert "mean g=" in capsys.readouterr().out


def test_tables_output(capsys):
    assert main(["tables"]) == 0
    out = capsys.readouterr().out
    assert "group statistics: d_rel" in out
    assert "en-nobel     37" in out
    assert "scale and readability statistics" in out
    assert "es-nobel" in out


def test_tables_missing_dir(tmp_path):
    assert main(["tables", "--reference-dir", str(tmp_path / "empty")]) == 1


def test_plot_data_entropy(capsys):
    assert main(["plot-data", "--figure", "entropy"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "# figure: entropy"
    assert any(line.startswith("# series:") for line in lines)
    data = [l for l in lines if l and not l.startswith("#")]
    assert data[0] == "series,d,h"
    curves_en = [l for l in data if l.startswith("curve-en,")]
    curves_es = [l for l in data if l.startswith("curve-es,")]
    assert len(curves_en) == 100
    assert len(curves_es) == 100
    groups = {l.split(",")[0] for l in data[1:]}
    assert {"en-nobel", "en-non", "es-nobel", "es-non"} <= groups


def test_plot_data_wqs_plane(tmp_path):
    out = tmp_path / "plane.csv"
    assert main(["plot-data", "--figure", "wqs-plane", "--out", str(out)]) == 0
    lines = read_lines(out)
    header = next(l for l in lines if not l.startswith("#"))
    assert header == "series,d_rel,h_rel,j,wqs"
    assert len([l for l in lines if not l.startswith("#")]) == 314 + 1


def test_plot_data_report_figures(sample_texts, tmp_path):
    a, b = sample_texts
    report = tmp_path / "report.csv"
    main(["analyze", str(a), str(b), "--lang", "en", "--out", str(report)])

    assert main(["plot-data", "--figure", "diversity"]) == 1  # needs a report

    out = tmp_path / "div.csv"
    assert main(["plot-data", "--figure", "diversity", "--report", str(report),
                 "--out", str(out)]) == 0
    lines = [l for l in read_lines(out) if not l.startswith("#")]
    assert lines[0] == "series,L,D"
    assert sum(1 for l in lines if l.startswith("curve-")) == 200

    out2 = tmp_path / "zipf.csv"
    assert main(["plot-data", "--figure", "zipf", "--report", str(report),
                 "--out", str(out2)]) == 0
    assert any(l.startswith("data,") for l in read_lines(out2))


def test_plot_data_trend(tmp_path, capsys):
    dated = tmp_path / "1900.alpha.txt"
    dated.write_text("dated text with words. more words here!", encoding="utf-8")
    dated2 = tmp_path / "1950.beta.txt"
    dated2.write_text("a later dated text, with words. even more!", encoding="utf-8")
    undated = tmp_path / "gamma.txt"
    undated.write_text("no year prefix on this one. none!", encoding="utf-8")

    report = tmp_path / "r.csv"
    main(["analyze", str(dated), str(dated2), str(undated), "--lang", "en",
          "--out", str(report)])
    capsys.readouterr()

    out = tmp_path / "trend.csv"
    assert main(["plot-data", "--figure", "trend", "--report", str(report),
                 "--out", str(out)]) == 0
    lines = read_lines(out)
    assert sum(1 for l in lines if l.startswith("data,")) == 2
    assert sum(1 for l in lines if l.startswith("fit,")) == 100

    # a report with no dated rows yields an empty point set and a warning
    report2 = tmp_path / "r2.csv"
    main(["analyze", str(undated), "--lang", "en", "--out", str(report2)])
    capsys.readouterr()
    out2 = tmp_path / "trend2.csv"
    assert main(["plot-data", "--figure", "trend", "--report", str(report2),
                 "--out", str(out2)]) == 0
    assert "warning" in capsys.readouterr().err
    assert not any(l.startswith("data,") for l in read_lines(out2))


def test_verify_passes_on_bundled_tables(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    assert "[documented divergence]" in out
    assert "FAIL" not in out


def test_verify_zero_tolerance_fails(capsys):
    assert main(["verify", "--tolerance", "0"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_detects_corruption(tmp_path, capsys):
    work = tmp_path / "tables"
    work.mkdir()
    for name in ("english_non_nobel.csv", "english_nobel.csv", "spanish_non_nobel.csv",
                 "spanish_nobel.csv", "language_params.csv", "wqs_presets.csv",
                 "integrity.csv"):
        shutil.copy(data_dir() / name, work / name)
    target = work / "english_non_nobel.csv"
    text = target.read_text(encoding="utf-8")
    assert "0.515" in text
    target.write_text(text.replace("E1,1381.JohnBall,S,O,0.515", "E1,1381.JohnBall,S,O,0.525", 1),
                      encoding="utf-8")
    assert main(["verify", "--reference-dir", str(work)]) == 1
    out = capsys.readouterr().out
    assert "E1" in out
    assert "FAIL" in out
