"""Command-line surface.

Subcommands:
  analyze    score text files and emit a per-text metric report
  fit        fit the growth/entropy/frequency models to a corpus manifest
  tables     recompute the recorded group statistics from the bundled tables
  plot-data  emit figure-ready point files (never rendered images)
  verify     check the bundled tables against their recorded targets

Exit codes: 0 success, 1 data or verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import hashlib
import json
import math
import sys
from pathlib import Path

from . import targets
from ._data import data_path
from .corpus import (
    REPORT_COLUMNS,
    CorpusEntry,
    Genre,
    GroupKey,
    Language,
    Origin,
    load_bundled_tables,
    load_manifest,
    load_report,
    load_text,
    select_group,
)
from .models import fit_entropy_model, fit_heaps, load_language_params
from .pipeline import AnalysisError, TextMetrics, analyze_text
from .profile import build_profile
from .stats import linear_regression, pearson, summarize, t_test
from .tokenizer import tokenize
from .wqs import load_wqs_presets, wqs, StylePoint
from .zipf import fit_zipf_exponent

SCHEMA = "lexigauge-report-v1"

_REPORT_FLOATS = tuple(
    c for c in REPORT_COLUMNS if c not in ("id", "name", "genre", "origin", "L", "D")
)


def _record_values(m: TextMetrics) -> dict:
    return {
        "id": m.entry.id,
        "name": m.entry.name,
        "genre": m.entry.genre.value,
        "origin": m.entry.origin.value,
        "L": m.L,
        "D": m.D,
        "d": m.d,
        "h": m.h,
        "g": m.g,
        "j": m.j,
        "d_rel": m.d_rel,
        "h_rel": m.h_rel,
        "W": m.W,
        "S": m.S,
        "readability": m.readability,
        "wqs_verbatim": m.wqs_verbatim,
        "wqs_reconstructed": m.wqs_reconstructed,
    }


def write_report(records: list[TextMetrics], fmt: str, stream) -> None:
    """Serialize records as delimited text (csv) or line-delimited records
    (jsonl). Both carry the schema version; both are deterministic."""
    if fmt == "csv":
        stream.write(f"# schema: {SCHEMA}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for m in records:
            values = _record_values(m)
            writer.writerow(
                [
                    f"{values[c]:.6f}" if c in _REPORT_FLOATS else values[c]
                    for c in REPORT_COLUMNS
                ]
            )
    elif fmt == "jsonl":
        for m in records:
            values = _record_values(m)
            for c in _REPORT_FLOATS:
                values[c] = float(f"{values[c]:.6f}")
            stream.write(json.dumps({"schema": SCHEMA, **values}) + "\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def _open_out(out: str | None):
    if out is None:
        return sys.stdout, False
    return open(out, "w", encoding="utf-8", newline=""), True


# ---------------------------------------------------------------- analyze


def cmd_analyze(args) -> int:
    language = Language.parse(args.lang)
    params = load_language_params()[language]
    if args.preset is not None:
        presets = load_wqs_presets()
        if args.preset not in presets:
            print(
                f"error: unknown preset {args.preset!r}; available: {', '.join(sorted(presets))}",
                file=sys.stderr,
            )
            return 2
        params = dataclasses.replace(params, wqs_preset=presets[args.preset])
    records: list[TextMetrics] = []
    failed = 0
    for i, path in enumerate(args.paths, start=1):
        entry = CorpusEntry(
            id=f"T{i}",
            name=Path(path).stem,
            genre=Genre.SPEECH,
            language=language,
            origin=Origin.ORIGINAL,
            nobel=False,
            source_path=str(path),
        )
        try:
            records.append(analyze_text(entry, params, zipf_g=args.zipf_g))
        except AnalysisError as exc:
            failed += 1
            print(f"error: {exc.cause}", file=sys.stderr)
    stream, close = _open_out(args.out)
    try:
        write_report(records, args.format, stream)
    finally:
        if close:
            stream.close()
    return 1 if failed and not records else 0


# -------------------------------------------------------------------- fit


def _manifest_profiles(manifest_path: str):
    """(entry, tokenized, profile) triples for every loadable manifest text."""
    out = []
    for entry in load_manifest(manifest_path):
        text = load_text(entry)
        t = tokenize(text, language=entry.language)
        out.append((entry, t, build_profile(t)))
    return out


def cmd_fit(args) -> int:
    try:
        triples = _manifest_profiles(args.manifest)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    by_lang: dict[Language, list] = {}
    for triple in triples:
        by_lang.setdefault(triple[0].language, []).append(triple)

    fitted: dict[Language, dict[str, float]] = {}
    lines: list[str] = []
    if args.model == "heaps":
        for language, group in sorted(by_lang.items(), key=lambda kv: kv[0].value):
            points = [(t.L, p.D) for _, t, p in group]
            if len(points) < 3 or len({L for L, _ in points}) < 2:
                lines.append(f"{language.value}: insufficient data ({len(points)} texts)")
                continue
            c, beta = fit_heaps(points)
            sse = sum((D - c * L**beta) ** 2 for L, D in points)
            fitted[language] = {"heaps_c": c, "heaps_beta": beta}
            lines.append(
                f"{language.value}: c={c:.6g} beta={beta:.6g} sse={sse:.6g} n={len(points)}"
            )
    elif args.model == "entropy":
        from .profile import entropy, specific_diversity

        for language, group in sorted(by_lang.items(), key=lambda kv: kv[0].value):
            points = [
                (specific_diversity(p), entropy(p))
                for _, _, p in group
                if 0 < specific_diversity(p) < 1 and entropy(p) > 0
            ]
            if len(points) < 2:
                lines.append(f"{language.value}: insufficient data ({len(points)} usable texts)")
                continue
            e = fit_entropy_model(points)
            sse = sum((h - d**e) ** 2 for d, h in points)
            fitted[language] = {"entropy_exponent": e}
            lines.append(f"{language.value}: exponent={e:.6g} sse={sse:.6g} n={len(points)}")
    else:  # zipf: a per-text exponent, reported text by text
        rows = []
        for language, group in sorted(by_lang.items(), key=lambda kv: kv[0].value):
            gs = []
            for entry, _, p in group:
                if p.D < 3:
                    lines.append(f"{entry.id}: too few ranks to fit ({p.D})")
                    continue
                g = fit_zipf_exponent(p)
                gs.append(g)
                rows.append((entry.id, language, g))
                lines.append(f"{entry.id}: g={g:.6g}")
            if gs:
                fitted[language] = {"zipf_g_mean": sum(gs) / len(gs)}
                lines.append(f"{language.value}: mean g={sum(gs) / len(gs):.6g} n={len(gs)}")

    for line in lines:
        print(line)
    if not fitted:
        print("error: no group had enough data to fit", file=sys.stderr)
        return 1

    if args.out and args.model in ("heaps", "entropy"):
        defaults = load_language_params()
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["language", "heaps_c", "heaps_beta", "entropy_exponent", "c_sy"])
            for language, params in sorted(defaults.items(), key=lambda kv: kv[0].value):
                merged = {
                    "heaps_c": params.heaps_c,
                    "heaps_beta": params.heaps_beta,
                    "entropy_exponent": params.entropy_exponent,
                }
                merged.update(fitted.get(language, {}))
                writer.writerow(
                    [
                        language.value,
                        f"{merged['heaps_c']:.10g}",
                        f"{merged['heaps_beta']:.10g}",
                        f"{merged['entropy_exponent']:.10g}",
                        f"{params.c_sy:.10g}",
                    ]
                )
        print(f"wrote {args.out}")
    return 0


# ----------------------------------------------------------------- tables


GROUP_KEYS = {
    "en-nobel": GroupKey(Language.ENGLISH, True),
    "en-non": GroupKey(Language.ENGLISH, False),
    "es-nobel": GroupKey(Language.SPANISH, True),
    "es-non": GroupKey(Language.SPANISH, False),
}


def _groups(rows):
    return {label: select_group(rows, key) for label, key in GROUP_KEYS.items()}


def _pvalue_pairs(groups, metric):
    values = {label: [getattr(r, metric) for r in rows] for label, rows in groups.items()}
    return {
        "en nobel vs non": (values["en-nobel"], values["en-non"]),
        "es nobel vs non": (values["es-nobel"], values["es-non"]),
        "nobel en vs es": (values["en-nobel"], values["es-nobel"]),
        "non en vs es": (values["en-non"], values["es-non"]),
    }


def cmd_tables(args) -> int:
    try:
        rows = load_bundled_tables(args.reference_dir)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    groups = _groups(rows)

    for metric in ("d_rel", "h_rel", "j"):
        print(f"== group statistics: {metric} ==")
        print(f"{'group':10s} {'n':>4s} {'mean':>10s} {'recorded':>10s} {'delta':>9s} "
              f"{'std':>10s} {'recorded':>10s} {'delta':>9s}")
        for label, rows_g in groups.items():
            n_rec, mean_rec, std_rec = targets.RECORDED_GROUP_STATS[metric][label]
            s = summarize([getattr(r, metric) for r in rows_g])
            print(f"{label:10s} {s.n:4d} {s.mean:10.5f} {mean_rec:10.5f} {s.mean - mean_rec:+9.5f} "
                  f"{s.std:10.5f} {std_rec:10.5f} {s.std - std_rec:+9.5f}")
        print(f"{'t-test':28s} {'p':>10s} {'recorded':>10s}")
        pairs = _pvalue_pairs(groups, metric)
        for pair, (a, b) in pairs.items():
            kind, rec = targets.RECORDED_PVALUES[metric][pair]
            p = t_test(a, b)
            rec_text = f"{rec:g}" if kind == "eq" else f"<{rec:g}"
            print(f"{pair:28s} {p:10.3g} {rec_text:>10s}")
        print()

    print("== scale and readability statistics ==")
    print(f"{'group':10s} {'n':>4s} {'wqs':>8s} {'rec':>6s} {'std':>7s} {'rec':>6s} "
          f"{'read':>8s} {'rec':>7s} {'std':>7s} {'rec':>6s} {'corr':>7s} {'rec':>6s}")
    scale_groups = dict(groups)
    scale_groups["en-all"] = groups["en-nobel"] + groups["en-non"]
    scale_groups["es-all"] = groups["es-nobel"] + groups["es-non"]
    for label in ("en-all", "en-nobel", "en-non", "es-all", "es-nobel", "es-non"):
        n_rec, wm, ws, rm, rs, corr_rec = targets.RECORDED_SCALE_STATS[label]
        rows_g = scale_groups[label]
        wqs_vals = [r.wqs for r in rows_g]
        read_vals = [r.readability for r in rows_g]
        sw, sr = summarize(wqs_vals), summarize(read_vals)
        corr = pearson(wqs_vals, read_vals)
        print(f"{label:10s} {sw.n:4d} {sw.mean:8.4f} {wm:6.2f} {sw.std:7.4f} {ws:6.2f} "
              f"{sr.mean:8.3f} {rm:7.2f} {sr.std:7.3f} {rs:6.2f} {corr:7.4f} {corr_rec:6.2f}")
    print(f"{'t-test':28s} {'p':>10s} {'recorded':>10s}")
    for pair, (kind, rec) in targets.RECORDED_SCALE_PVALUES.items():
        lang = pair.split()[0]
        metric = "wqs" if "wqs" in pair else "readability"
        a = [getattr(r, metric) for r in scale_groups[f"{lang}-nobel"]]
        b = [getattr(r, metric) for r in scale_groups[f"{lang}-non"]]
        p = t_test(a, b)
        rec_text = f"{rec:g}" if kind == "eq" else f"<{rec:g}"
        print(f"{pair:28s} {p:10.3g} {rec_text:>10s}")
    return 0


# -------------------------------------------------------------- plot-data


FIGURES = ("diversity", "entropy", "zipf", "wqs-plane", "trend")


def _log_spaced(lo: float, hi: float, n: int = 100) -> list[float]:
    if lo <= 0 or hi <= lo:
        return [lo] * n
    step = (math.log(hi) - math.log(lo)) / (n - 1)
    return [math.exp(math.log(lo) + i * step) for i in range(n)]


def _group_label(entry) -> str:
    return f"{entry.language.code.lower()}-{'nobel' if entry.nobel else 'non'}"


def cmd_plotdata(args) -> int:
    figure = args.figure
    params = load_language_params()
    need_report = figure in ("diversity", "zipf", "trend")
    if need_report and not args.report:
        print(f"error: figure {figure!r} needs per-text counts; pass --report", file=sys.stderr)
        return 1

    rows_out: list[tuple] = []
    header: list[str] = []
    comments: list[str] = [f"# figure: {figure}"]

    if args.report:
        records = load_report(args.report)
    else:
        try:
            fixture_rows = load_bundled_tables(args.reference_dir)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1

    if figure == "entropy":
        header = ["series", "d", "h"]
        comments += ["# x: d (specific diversity)", "# y: h (normalized entropy)"]
        if args.report:
            points = [("data", r["d"], r["h"]) for r in records]
        else:
            points = [(_group_label(r.entry), r.d, r.h) for r in fixture_rows]
        rows_out += points
        ds = [p[1] for p in points if p[1] > 0]
        if ds:
            for language, p in sorted(params.items(), key=lambda kv: kv[0].value):
                curve = f"curve-{language.code.lower()}"
                for d in _log_spaced(min(ds), max(ds)):
                    rows_out.append((curve, d, d**p.entropy_exponent))
    elif figure == "wqs-plane":
        header = ["series", "d_rel", "h_rel", "j", "wqs"]
        comments += ["# x: d_rel", "# y: h_rel", "# extras: j, wqs"]
        if args.report:
            rows_out += [
                ("data", r["d_rel"], r["h_rel"], r["j"], r["wqs_verbatim"]) for r in records
            ]
        else:
            rows_out += [
                (_group_label(r.entry), r.d_rel, r.h_rel, r.j, r.wqs) for r in fixture_rows
            ]
    elif figure == "diversity":
        header = ["series", "L", "D"]
        comments += ["# x: L (symbols)", "# y: D (distinct symbols)"]
        rows_out += [("data", r["L"], r["D"]) for r in records]
        Ls = [r["L"] for r in records if r["L"] > 0]
        if Ls:
            for language, p in sorted(params.items(), key=lambda kv: kv[0].value):
                curve = f"curve-{language.code.lower()}"
                for L in _log_spaced(min(Ls), max(Ls)):
                    rows_out.append((curve, L, p.heaps_c * L**p.heaps_beta))
    elif figure == "zipf":
        header = ["series", "L", "j"]
        comments += ["# x: L (symbols)", "# y: j (frequency-profile deviation)"]
        rows_out += [("data", r["L"], r["j"]) for r in records]
    else:  # trend
        header = ["series", "year", "S"]
        comments += ["# x: year", "# y: S (words per phrase)"]
        from .corpus import _parse_year

        dated = [
            (year, r["S"])
            for r in records
            if (year := _parse_year(r["name"])) is not None
        ]
        rows_out += [("data", year, s) for year, s in dated]
        if len(dated) >= 2 and len({y for y, _ in dated}) >= 2:
            fit = linear_regression([float(y) for y, _ in dated], [s for _, s in dated])
            years = sorted({y for y, _ in dated})
            lo, hi = years[0], years[-1]
            for i in range(100):
                x = lo + (hi - lo) * i / 99
                rows_out.append(("fit", x, fit.slope * x + fit.intercept))
            comments.append(f"# fit: slope={fit.slope:.6g} per year, intercept={fit.intercept:.6g}")
        else:
            print("warning: no dated rows; emitting empty point set", file=sys.stderr)

    series = sorted({r[0] for r in rows_out})
    comments.append(f"# series: {', '.join(series) if series else '(none)'}")

    stream, close = _open_out(args.out)
    try:
        for line in comments:
            stream.write(line + "\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows_out:
            writer.writerow(
                [row[0]] + [f"{v:.6f}" if isinstance(v, float) else v for v in row[1:]]
            )
    finally:
        if close:
            stream.close()
    return 0


# ----------------------------------------------------------------- verify


def _check(checks: list, ok: bool, message: str, info: bool = False) -> None:
    checks.append(("INFO" if info else ("PASS" if ok else "FAIL"), message))


def _verify_digests(checks: list, directory: Path) -> None:
    sidecar = directory / "integrity.csv"
    if not sidecar.is_file():
        _check(checks, True, "row digests: no integrity.csv sidecar; skipped", info=True)
        return
    expected: dict[tuple[str, str], str] = {}
    with open(sidecar, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(r for r in fh if not r.startswith("#"))
        for row in reader:
            expected[(row["file"], row["id"])] = row["digest"]
    bad = []
    seen = set()
    from .corpus import BUNDLED_TABLES

    for name, _, _ in BUNDLED_TABLES:
        path = directory / name
        if not path.is_file():
            continue
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(r for r in fh if not r.startswith("#"))
            for row in reader:
                blob = "|".join(
                    row[c] for c in ("d", "h", "d_rel", "h_rel", "j", "readability", "wqs")
                )
                digest = hashlib.md5(blob.encode()).hexdigest()[:10]
                key = (name, row["id"])
                seen.add(key)
                if key not in expected:
                    bad.append(f"{name} row {row['id']}: not in integrity sidecar")
                elif expected[key] != digest:
                    bad.append(f"{name} row {row['id']}: numeric fields altered")
    missing = sorted(set(expected) - seen)
    for key in missing:
        bad.append(f"{key[0]} row {key[1]}: listed in sidecar but missing from table")
    if bad:
        for b in bad[:10]:
            _check(checks, False, f"row digests: {b}")
        if len(bad) > 10:
            _check(checks, False, f"row digests: ... and {len(bad) - 10} more")
    else:
        _check(checks, True, f"row digests: all {len(seen)} rows intact")


def cmd_verify(args) -> int:
    tol = args.tolerance
    if tol < 0:
        print("error: --tolerance must be >= 0", file=sys.stderr)
        return 2
    checks: list[tuple[str, str]] = []
    directory = Path(args.reference_dir) if args.reference_dir else data_path("integrity.csv").parent

    try:
        rows = load_bundled_tables(args.reference_dir)
    except (OSError, ValueError) as exc:
        print(f"FAIL  table load: {exc}")
        print("1 hard failure")
        return 1

    _verify_digests(checks, directory)

    groups = _groups(rows)
    sizes = {label: len(g) for label, g in groups.items()}
    _check(checks, sizes == targets.GROUP_SIZES,
           f"group sizes: {sizes} vs recorded {targets.GROUP_SIZES}")

    cell_tol = targets.TOL_GROUP_CELL * tol
    for metric in ("d_rel", "h_rel", "j"):
        for label, rows_g in groups.items():
            _, mean_rec, std_rec = targets.RECORDED_GROUP_STATS[metric][label]
            s = summarize([getattr(r, metric) for r in rows_g])
            for field, got, rec in (("mean", s.mean, mean_rec), ("std", s.std, std_rec)):
                message = (f"{metric} {label} {field}: {got:.5f} vs recorded {rec:.5f} "
                           f"(delta {got - rec:+.5f})")
                if (metric, label, field) in targets.DOCUMENTED_DIVERGENCES:
                    _check(checks, True, message + " [documented divergence]", info=True)
                else:
                    _check(checks, abs(got - rec) <= cell_tol, message)

        pairs = _pvalue_pairs(groups, metric)
        for pair, (a, b) in pairs.items():
            kind, rec = targets.RECORDED_PVALUES[metric][pair]
            p = t_test(a, b)
            if kind == "lt":
                _check(checks, p < rec, f"{metric} p {pair}: {p:.3g} < recorded bound {rec:g}")
            else:
                message = f"{metric} p {pair}: {p:.4g} vs recorded {rec:g}"
                if (metric, pair) in targets.DIVERGENT_PVALUES:
                    _check(checks, True, message + " [documented divergence]", info=True)
                else:
                    _check(checks, abs(p - rec) <= targets.TOL_PVALUE_REL * tol * rec, message)

    scale_groups = dict(groups)
    scale_groups["en-all"] = groups["en-nobel"] + groups["en-non"]
    scale_groups["es-all"] = groups["es-nobel"] + groups["es-non"]
    scale_tol = targets.TOL_SCALE_CELL * tol
    for label in ("en-all", "en-nobel", "en-non", "es-all", "es-nobel", "es-non"):
        n_rec, wm, ws, rm, rs, corr_rec = targets.RECORDED_SCALE_STATS[label]
        rows_g = scale_groups[label]
        _check(checks, len(rows_g) == n_rec, f"scale group {label} n: {len(rows_g)} vs {n_rec}")
        wqs_vals = [r.wqs for r in rows_g]
        read_vals = [r.readability for r in rows_g]
        sw, sr = summarize(wqs_vals), summarize(read_vals)
        corr = pearson(wqs_vals, read_vals)
        for field, got, rec in (
            ("wqs mean", sw.mean, wm), ("wqs std", sw.std, ws),
            ("readability mean", sr.mean, rm), ("readability std", sr.std, rs),
            ("correlation", corr, corr_rec),
        ):
            _check(checks, abs(got - rec) <= scale_tol,
                   f"{label} {field}: {got:.4f} vs recorded {rec:.2f} (delta {got - rec:+.4f})")
    for pair, (kind, rec) in targets.RECORDED_SCALE_PVALUES.items():
        lang = pair.split()[0]
        metric = "wqs" if "wqs" in pair else "readability"
        a = [getattr(r, metric) for r in scale_groups[f"{lang}-nobel"]]
        b = [getattr(r, metric) for r in scale_groups[f"{lang}-non"]]
        p = t_test(a, b)
        if kind == "lt":
            _check(checks, p < rec, f"scale p {pair}: {p:.3g} < recorded bound {rec:g}")
        else:
            _check(checks, abs(p - rec) <= targets.TOL_PVALUE_REL * tol * rec,
                   f"scale p {pair}: {p:.4g} vs recorded {rec:g}")

    preset_path = None
    if args.reference_dir:
        candidate = Path(args.reference_dir) / "wqs_presets.csv"
        preset_path = str(candidate) if candidate.is_file() else None
    presets = load_wqs_presets(preset_path)
    for code in ("en", "es"):
        coeffs = presets[f"verbatim-{code}"]
        direction = targets.RECORDED_DIRECTIONS[code]
        weights = (coeffs.weights.d_rel, coeffs.weights.h_rel, coeffs.weights.j)
        ratios = [w / d for w, d in zip(weights, direction)]
        spread = max(ratios) / min(ratios) - 1
        _check(checks, spread < 1e-4,
               f"verbatim-{code} weight/direction ratios agree: spread {spread:.2e}")
        mean_ratio = sum(ratios) / 3
        rec_scale = targets.RECORDED_SCALE_FACTORS[code]
        _check(checks, abs(mean_ratio - rec_scale) < 1e-3,
               f"verbatim-{code} scale factor {mean_ratio:.4f} vs recorded {rec_scale}")

    e1 = targets.E1_SCALE_CHECK
    e1_rows = [r for r in rows if r.entry.id == e1["row"]]
    if not e1_rows:
        _check(checks, False, f"row {e1['row']} missing from tables")
    else:
        row = e1_rows[0]
        point = StylePoint(*e1["point"])
        matches = (abs(row.d_rel - point.d_rel) < 5e-5 and abs(row.h_rel - point.h_rel) < 5e-5
                   and abs(row.j - point.j) < 5e-5)
        _check(checks, matches, f"row {e1['row']} coordinates match the recorded example point")
        got = wqs(presets["verbatim-en"], point)
        _check(checks, abs(got - e1["expected"]) <= e1["tolerance"],
               f"verbatim-en scale on row {e1['row']}: {got:.4f} vs expected {e1['expected']}")
        _check(checks, True,
               f"row {e1['row']} recorded wqs column ({e1['recorded_column_value']}) differs from "
               f"the scale evaluation ({got:.4f}); known recording inconsistency", info=True)

    for status, message in checks:
        print(f"{status:4s}  {message}")
    failures = sum(1 for s, _ in checks if s == "FAIL")
    infos = sum(1 for s, _ in checks if s == "INFO")
    passes = sum(1 for s, _ in checks if s == "PASS")
    print(f"\n{passes} passed, {failures} failed, {infos} informational")
    return 1 if failures else 0


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexigauge",
        description="Corpus stylometry: diversity, entropy, frequency-profile "
                    "deviation, readability, and the writing quality scale.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="score text files and emit a metric report")
    p.add_argument("paths", nargs="+", help="UTF-8 text files")
    p.add_argument("--lang", required=True, choices=("en", "es"))
    p.add_argument("--format", default="csv", choices=("csv", "jsonl"))
    p.add_argument("--zipf-g", type=float, default=None,
                   help="fix the frequency-profile exponent instead of fitting it")
    p.add_argument("--preset", default=None,
                   help="scale preset for the wqs_verbatim column (default verbatim-<lang>)")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fit", help="fit corpus models to a manifest of texts")
    p.add_argument("--manifest", required=True)
    p.add_argument("--model", required=True, choices=("heaps", "entropy", "zipf"))
    p.add_argument("--out", default=None, help="write a parameter file with the fitted values")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("tables", help="recompute the recorded group statistics")
    p.add_argument("--reference-dir", default=None,
                   help="directory of reference tables (default: bundled)")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("plot-data", help="emit figure-ready point files")
    p.add_argument("--figure", required=True, choices=FIGURES)
    p.add_argument("--reference-dir", default=None)
    p.add_argument("--report", default=None,
                   help="analysis report to plot instead of the bundled tables")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("verify", help="check bundled tables against recorded targets")
    p.add_argument("--reference-dir", default=None)
    p.add_argument("--tolerance", type=float, default=1.0,
                   help="scales the recorded-value tolerances (0 fails on rounding alone)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
