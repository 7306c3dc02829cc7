"""Command-line entry point: every pipeline stage plus the explorer server.

Exit codes: 0 success, 1 usage error, 2 data error (the error class name is
printed on stderr). All outputs are byte-stable across runs and worker
counts: floats go through the canonical 12-significant-digit formatter and
counting stages merge per-document results in document order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import api as api_mod
from .ca import cluster_isotopies, correspondence_analysis, project
from .cooccurrence import (
    ContextSpec,
    CooccurrenceMatrix,
    build_cooc_matrix,
    pivot_profile,
    select_top_lemmas,
)
from .corpus import load_corpus, partition
from .dictionary import build_dictionary, compare_ranks, dictionary_to_csv, dictionary_to_dict
from .errors import LogometreError
from .lexicon import load_lexicon
from .plots import scatter_svg
from .report import ReportConfig, build_report, render_report
from .serialize import canonical_json

DEFAULT_POS = "NOUN,PROPN"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _write(text, output):
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def _selector(pairs):
    selector = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValueError(f"--select expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        selector[key] = value
    return selector


def _pos_set(spec: str):
    tags = tuple(t for t in spec.split(",") if t)
    if not tags:
        raise ValueError("--pos must name at least one tag")
    return tags


def _context(args) -> ContextSpec:
    if args.context == "window":
        return ContextSpec("window", window=args.window)
    if args.window is not None:
        raise ValueError("--window only applies with --context window")
    return ContextSpec(args.context)


def _add_common(sub, select=True, pos=True, context=False, workers=True):
    if select:
        sub.add_argument("--select", action="append", metavar="KEY=VALUE",
                         help="metadata filter, repeatable; all pairs must match")
    if pos:
        sub.add_argument("--pos", default=DEFAULT_POS,
                         help=f"comma-separated POS filter (default {DEFAULT_POS})")
    if context:
        sub.add_argument("--context", choices=("sentence", "paragraph", "window"),
                         default="sentence")
        sub.add_argument("--window", type=int, default=None, help="window size in tokens")
    if workers:
        sub.add_argument("--workers", type=int,
                         default=int(os.environ.get("LOGOMETRE_WORKERS", "1")))
    sub.add_argument("-o", "--output", default=None, help="output file (default stdout)")


def build_parser() -> _Parser:
    parser = _Parser(prog="logometre",
                     description="logometric analysis of annotated corpora")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("validate", help="check a corpus file and print a summary")
    p.add_argument("corpus")
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("LOGOMETRE_WORKERS", "1")))
    p.add_argument("-o", "--output", default=None)

    p = commands.add_parser("dict", help="POS-filtered frequency dictionary")
    p.add_argument("corpus")
    p.add_argument("--top", type=int, default=None, help="limit to the first K ranks")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(p)

    p = commands.add_parser("compare", help="rank-compare two corpora through a lexicon")
    p.add_argument("corpus_a")
    p.add_argument("corpus_b")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--top", type=int, default=20)
    _add_common(p, select=False)

    p = commands.add_parser("cooc", help="cooccurrence matrix over the top-N lemmas")
    p.add_argument("corpus")
    p.add_argument("--n", type=int, default=300)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p, context=True)

    p = commands.add_parser("ca", help="correspondence analysis of a matrix JSON")
    p.add_argument("matrix")
    p.add_argument("--axes", default="1,2", help="axis pair for --svg, e.g. 1,2")
    p.add_argument("--svg", default=None, help="write a factor map SVG here")
    p.add_argument("--cluster", type=int, default=None, help="k-means cluster count")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("LOGOMETRE_WORKERS", "1")))
    p.add_argument("-o", "--output", default=None)

    p = commands.add_parser("pivot", help="cooccurrence profile of one pivot lemma")
    p.add_argument("corpus")
    p.add_argument("--word", required=True)
    p.add_argument("--min-joint", type=int, default=2)
    _add_common(p, context=True)

    p = commands.add_parser("report", help="full paired comparison report")
    p.add_argument("corpus_a")
    p.add_argument("corpus_b")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--config", default=None, help="JSON file of report parameters")
    p.add_argument("--html", default=None, help="also render a self-contained HTML page")
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("LOGOMETRE_WORKERS", "1")))
    p.add_argument("-o", "--output", default=None)

    p = commands.add_parser("serve", help="serve a report over HTTP for the explorer UI")
    p.add_argument("report")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("LOGOMETRE_WORKERS", "1")))
    p.add_argument("--corpus-a", default=None, help="override the recorded side-A corpus path")
    p.add_argument("--corpus-b", default=None, help="override the recorded side-B corpus path")
    p.add_argument("--ui-dir", default=None, help="serve static UI assets from this directory")

    return parser


def _cmd_validate(args):
    corpus = load_corpus(args.corpus)
    computed = sum(d.token_count() for d in corpus.documents)
    if computed != corpus.token_count:
        raise LogometreError("token_count invariant violated")
    sentences = sum(len(d.sentences) for d in corpus.documents)
    _write(f"ok: {len(corpus.documents)} documents, {corpus.token_count} tokens, "
           f"{sentences} sentences, language {corpus.language}\n", args.output)
    return 0


def _cmd_dict(args):
    corpus = load_corpus(args.corpus)
    sub = partition(corpus, _selector(args.select))
    dictionary = build_dictionary(sub, _pos_set(args.pos), workers=args.workers)
    if args.format == "csv":
        _write(dictionary_to_csv(dictionary, limit=args.top), args.output)
    else:
        _write(canonical_json(dictionary_to_dict(dictionary, limit=args.top)) + "\n",
               args.output)
    return 0


def _cmd_compare(args):
    corpus_a = load_corpus(args.corpus_a)
    corpus_b = load_corpus(args.corpus_b)
    lexicon = load_lexicon(args.lexicon, lang_a=corpus_a.language, lang_b=corpus_b.language)
    pos = _pos_set(args.pos)
    dict_a = build_dictionary(corpus_a.whole(), pos, workers=args.workers)
    dict_b = build_dictionary(corpus_b.whole(), pos, workers=args.workers)
    comparison = compare_ranks(dict_a, dict_b, lexicon, args.top)
    _write(canonical_json(comparison.to_dict()) + "\n", args.output)
    return 0


def _cmd_cooc(args):
    corpus = load_corpus(args.corpus)
    sub = partition(corpus, _selector(args.select))
    dictionary = build_dictionary(sub, _pos_set(args.pos), workers=args.workers)
    lemmas = select_top_lemmas(dictionary, args.n)
    matrix = build_cooc_matrix(sub, lemmas, _context(args), workers=args.workers)
    if args.format == "csv":
        _write(matrix.to_csv(), args.output)
    else:
        _write(canonical_json(matrix.to_dict()) + "\n", args.output)
    return 0


def _cmd_ca(args):
    with open(args.matrix, encoding="utf-8") as f:
        matrix = CooccurrenceMatrix.from_dict(json.load(f))
    solution = correspondence_analysis(matrix)
    payload = solution.to_dict()
    if args.cluster is not None:
        clustering = cluster_isotopies(solution, args.cluster, seed=args.seed)
        payload["clusters"] = clustering.to_dict()
    if args.svg:
        ax = tuple(int(a) for a in args.axes.split(","))
        if len(ax) != 2:
            raise ValueError("--axes expects two comma-separated indices")
        points = project(solution, ax)
        pct = (float(solution.inertia_pct[ax[0] - 1]), float(solution.inertia_pct[ax[1] - 1]))
        clusters = payload.get("clusters", {}).get("assignment") if args.cluster else None
        svg = scatter_svg(points, axes=ax, inertia_pct=pct,
                          masses=[float(m) for m in solution.row_masses],
                          clusters=clusters)
        _write(svg + "\n", args.svg)
    _write(canonical_json(payload) + "\n", args.output)
    return 0


def _cmd_pivot(args):
    corpus = load_corpus(args.corpus)
    sub = partition(corpus, _selector(args.select))
    profile = pivot_profile(sub, args.word, _context(args),
                            min_joint=args.min_joint, pos_filter=_pos_set(args.pos))
    _write(canonical_json(profile.to_dict()) + "\n", args.output)
    return 0


def _cmd_report(args):
    corpus_a = load_corpus(args.corpus_a)
    corpus_b = load_corpus(args.corpus_b)
    lexicon = load_lexicon(args.lexicon, lang_a=corpus_a.language, lang_b=corpus_b.language)
    if args.config:
        with open(args.config, encoding="utf-8") as f:
            config = ReportConfig.from_dict(json.load(f))
    else:
        config = ReportConfig()
    report = build_report(corpus_a, corpus_b, lexicon, config,
                          corpus_paths=(args.corpus_a, args.corpus_b),
                          workers=args.workers)
    _write(render_report(report, "json") + "\n", args.output)
    if args.html:
        _write(render_report(report, "html") + "\n", args.html)
    return 0


def _cmd_serve(args):
    service = api_mod.serve_from_files(
        args.report, port=args.port, host=args.host,
        corpus_a=args.corpus_a, corpus_b=args.corpus_b, ui_dir=args.ui_dir)
    print(f"serving on http://{args.host}:{service.port}/ (Ctrl-C to stop)")
    try:
        service.wait()
    except KeyboardInterrupt:
        service.stop()
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "dict": _cmd_dict,
    "compare": _cmd_compare,
    "cooc": _cmd_cooc,
    "ca": _cmd_ca,
    "pivot": _cmd_pivot,
    "report": _cmd_report,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"FileNotFound: {exc}", file=sys.stderr)
        return 2
    except LogometreError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
