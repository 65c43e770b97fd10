"""Operator command line: serve the API, build indexes, run analyses.

Exit codes: 0 success, 1 input validation (schema/config) error, 2 I/O
error such as a missing file. Every report is written to a file so runs
can be diffed; repeated runs over identical inputs produce identical
bytes.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as qcio
from .postqc import (
    aggregate_expert,
    anova_oneway,
    cohens_kappa,
    completion_time_filter,
    find_duplicates,
    merge_ratings,
)
from .postqc.expert import summary_csv_rows, summary_text_table
from .prequal import summarize_demographics, write_demographics_csv
from .robustness import report_csv_rows, report_text_table, run_robustness
from .search import build_index, load_corpus_jsonl, OfflineSearchBackend
from .service import (
    ConfigError,
    build_backend,
    build_cache,
    create_app,
    load_lexicon,
    load_study_config,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crowdqc",
        description="Quality control for crowdsourced free-text collection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the validation/submission API")
    serve.add_argument("--config", required=True, help="study config (JSON or TOML)")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--event-log", default="events.jsonl")
    serve.add_argument("--static-dir", default=None, help="serve UI assets from here")

    index = sub.add_parser("index", help="build a search index from a corpus")
    index.add_argument("--corpus", required=True, help="JSONL of {doc_id, body}")
    index.add_argument("--out", required=True, help="index output path")

    postqc = sub.add_parser("postqc", help="post-collection analysis reports")
    postqc.add_argument("--responses", required=True, help="JSONL of collected responses")
    postqc.add_argument("--ratings", required=True, help="CSV of evaluator ratings")
    postqc.add_argument("--expert", default=None, help="CSV of expert Likert records")
    postqc.add_argument("--out", required=True, help="output directory")
    postqc.add_argument("--n", type=int, default=3, help="shingle width")
    postqc.add_argument("--threshold", type=float, default=0.8, help="duplicate Jaccard")
    postqc.add_argument("--min-seconds", type=float, default=0.0)

    robust = sub.add_parser("robustness", help="run labeled items through the screen")
    robust.add_argument("--items", required=True, help="JSONL of labeled responses")
    robust.add_argument("--corpus", required=True, help="JSONL source corpus")
    robust.add_argument("--config", required=True, help="study config (JSON or TOML)")
    robust.add_argument("--out", required=True, help="output directory")

    demo = sub.add_parser("demographics", help="summarize a worker roster")
    demo.add_argument("--roster", required=True, help="JSONL of worker profiles")
    demo.add_argument("--out", required=True, help="CSV output path")

    return parser


def _cmd_serve(args) -> int:
    import uvicorn

    config = load_study_config(args.config)
    app = create_app(
        config,
        backend=build_backend(config.backend),
        lexicon=load_lexicon(config),
        event_log_path=args.event_log,
        cache=build_cache(config.backend),
        static_dir=args.static_dir,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _cmd_index(args) -> int:
    index = build_index(load_corpus_jsonl(args.corpus))
    Path(args.out).write_text(index.to_json(), encoding="utf-8")
    print(f"indexed {len(index)} documents -> {args.out}")
    return 0


def _cmd_postqc(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    responses = qcio.load_collected_responses(args.responses)

    report = find_duplicates(
        [(r.response_id, r.text) for r in responses],
        n=args.n,
        threshold=args.threshold,
    )
    dup_rows: list[list[str]] = [["cluster", "response_id"]]
    for cluster_id, members in enumerate(report.clusters):
        for member in members:
            dup_rows.append([str(cluster_id), member])
    qcio.write_csv(out_dir / "duplicates.csv", dup_rows)

    flagged = completion_time_filter(
        [(r.response_id, r.elapsed_seconds) for r in responses], args.min_seconds
    )
    qcio.write_csv(
        out_dir / "timing_flags.csv", [["response_id"], *[[rid] for rid in flagged]]
    )

    by_evaluator = qcio.load_ratings_csv(args.ratings)
    if len(by_evaluator) != 2:
        raise qcio.SchemaError(
            Path(args.ratings), 1, f"need exactly 2 evaluators, got {len(by_evaluator)}"
        )
    (eval1, list1), (eval2, list2) = sorted(by_evaluator.items())
    merged = merge_ratings(list1, list2)
    ordered_ids = sorted(merged.per_response)
    vec1 = [dict((r.response_id, r.overall_good) for r in list1)[rid] for rid in ordered_ids]
    vec2 = [dict((r.response_id, r.overall_good) for r in list2)[rid] for rid in ordered_ids]
    kappa = cohens_kappa(vec1, vec2)
    anova = anova_oneway([vec1, vec2])
    ratings_rows = [
        ["metric", "value"],
        ["evaluator_1", eval1],
        ["evaluator_2", eval2],
        ["responses", str(len(ordered_ids))],
        ["overall_good_pct", f"{merged.good_pct:.2f}"],
        ["overall_bad_pct", f"{merged.bad_pct:.2f}"],
        ["duplicate_pct", f"{report.duplicate_rate:.2f}"],
        ["kappa", f"{kappa.kappa:.6f}"],
        ["observed_agreement", f"{kappa.p_o:.6f}"],
        ["chance_agreement", f"{kappa.p_e:.6f}"],
        ["anova_f", f"{anova.f:.6f}"],
        ["anova_df_between", str(anova.df_between)],
        ["anova_df_within", str(anova.df_within)],
        ["anova_p", f"{anova.p:.8f}"],
    ]
    qcio.write_csv(out_dir / "ratings_summary.csv", ratings_rows)

    lines = [
        f"responses rated: {len(ordered_ids)} (evaluators {eval1}, {eval2})",
        f"overall good: {merged.good_pct:.2f}%   overall bad: {merged.bad_pct:.2f}%",
        f"duplicates: {report.duplicate_rate:.2f}% "
        f"({len(report.clusters)} clusters over {report.total} responses)",
        f"kappa: {kappa.kappa:.4f} (observed {kappa.p_o:.4f}, chance {kappa.p_e:.4f})",
        f"anova: F={anova.f:.4f} df=({anova.df_between},{anova.df_within}) "
        f"p={anova.p:.6f}",
        f"timing flags (<{args.min_seconds}s): {len(flagged)}",
    ]

    if args.expert:
        summary = aggregate_expert(qcio.load_expert_csv(args.expert))
        qcio.write_csv(out_dir / "expert_summary.csv", summary_csv_rows(summary))
        (out_dir / "expert_summary.txt").write_text(
            summary_text_table(summary), encoding="utf-8"
        )
        lines.append(
            f"expert records: {summary.total_count} "
            f"({summary.total_intelligible} intelligible, "
            f"{summary.total_exact_match} exact matches)"
        )

    (out_dir / "report.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("\n".join(lines))
    return 0


def _cmd_robustness(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    items = qcio.load_labeled_responses(args.items)
    config = load_study_config(args.config)
    backend = OfflineSearchBackend(build_index(load_corpus_jsonl(args.corpus)))
    lexicon = load_lexicon(config)

    report = run_robustness(items, config.qc, backend, lexicon)
    qcio.write_csv(out_dir / "report.csv", report_csv_rows(report))
    (out_dir / "report.txt").write_text(report_text_table(report), encoding="utf-8")
    item_rows = [["question_id", "category", "decision", "flagged", "correct"]]
    for item in report.items:
        item_rows.append(
            [
                item.question_id,
                item.category,
                item.decision.value if item.decision else "error",
                str(item.flagged).lower(),
                str(item.correct).lower(),
            ]
        )
    for item in report.errored:
        item_rows.append([item.question_id, item.category, "error", "false", "false"])
    qcio.write_csv(out_dir / "items.csv", item_rows)
    print(report_text_table(report), end="")
    return 0


def _cmd_demographics(args) -> int:
    roster = qcio.load_roster(args.roster)
    summary = summarize_demographics(roster)
    write_demographics_csv(summary, args.out)
    print(f"summarized {summary.n} workers -> {args.out}")
    return 0


_COMMANDS = {
    "serve": _cmd_serve,
    "index": _cmd_index,
    "postqc": _cmd_postqc,
    "robustness": _cmd_robustness,
    "demographics": _cmd_demographics,
}


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (qcio.SchemaError, ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        name = getattr(exc, "filename", None)
        print(f"error: cannot read {name or 'input'}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
