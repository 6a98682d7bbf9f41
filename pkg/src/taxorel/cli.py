"""Command-line pipeline: ingest -> contexts -> extract -> filter ->
metrics -> evaluate -> complementarity.

A run is driven by a declarative INI config (sections and key/value pairs);
command-line flags may override config keys.  Runs are deterministic: the
pipeline contains no randomness, every file is written in sorted order, and
a manifest records the config digest and a content digest per output file,
so identical inputs produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import hashlib
import io
import json
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .contexts import (
    extract_document_contexts,
    extract_window_contexts,
    save_matrix,
    select_vocabulary,
)
from .corpus import (
    Corpus,
    CorpusFormatError,
    corpus_stats,
    load_corpus,
    load_pos_mapping,
    sentence_documents,
)
from .evaluation import EvalReport, complementarity_matrix, evaluate
from .extractors import (
    MEASURES,
    extract_df,
    extract_docsub,
    extract_dsim,
    extract_hclust,
    extract_patterns,
    extract_slqs,
    extract_tf,
)
from .gold import GoldFormatError, load_gold
from .patterns import default_patterns, load_patterns
from .relations import RelationSet, load_relations, save_relations
from .taxonomy import (
    best_parent_filter,
    break_cycles,
    build_taxonomy,
    compute_metrics,
    taxonomy_relations,
    transitive_reduction,
)
from .weighting import context_entropies, weight_lmi, weight_ppmi

METHODS = ("patt", "dsim", "slqs", "tf", "df", "docsub", "hclust")
DEFAULT_LAMBDAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


class StageError(RuntimeError):
    """A pipeline stage failed; partial outputs have been removed."""

    def __init__(self, stage: str, cause: str) -> None:
        super().__init__(f"stage {stage!r} failed: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class RunConfig:
    corpus_path: str
    language: str
    gold_path: str
    output_dir: str
    vocabulary_size: int = 1000
    window_size: int = 5
    methods: tuple[str, ...] = METHODS
    pseudo_documents: bool = False
    best_parent: bool = False
    pos_mapping: str | None = None
    patterns_path: str | None = None
    dsim_measure: str = "clarkede"
    slqs_contexts: int = 50
    docsub_lambdas: tuple[float, ...] = DEFAULT_LAMBDAS
    hclust_clusters: int = 100

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = list(value) if isinstance(value, tuple) else value
        return out


def load_config(path: str | Path, overrides: dict | None = None) -> RunConfig:
    """Build a RunConfig from an INI file, applying any overrides on top."""
    parser = configparser.ConfigParser()
    read = parser.read(path, encoding="utf-8")
    if not read:
        raise ValueError(f"cannot read config file {path}")

    def get(section, key, fallback=None):
        return parser.get(section, key, fallback=fallback)

    methods = get("methods", "methods", ",".join(METHODS))
    lambdas = get("docsub", "lambdas", ",".join(str(l) for l in DEFAULT_LAMBDAS))
    config = RunConfig(
        corpus_path=get("corpus", "path", ""),
        language=get("corpus", "language", "EN").upper(),
        gold_path=get("gold", "path", ""),
        output_dir=get("output", "dir", "out"),
        vocabulary_size=int(get("vocabulary", "n", "1000")),
        window_size=int(get("contexts", "window_size", "5")),
        methods=tuple(m.strip() for m in methods.split(",") if m.strip()),
        pseudo_documents=parser.getboolean("corpus", "pseudo_documents", fallback=False),
        best_parent=parser.getboolean("filter", "best_parent", fallback=False),
        pos_mapping=get("corpus", "pos_mapping") or None,
        patterns_path=get("patt", "patterns") or None,
        dsim_measure=get("dsim", "measure", "clarkede").lower(),
        slqs_contexts=int(get("slqs", "top_contexts", "50")),
        docsub_lambdas=tuple(float(l) for l in lambdas.split(",") if l.strip()),
        hclust_clusters=int(get("hclust", "clusters", "100")),
    )
    if overrides:
        config = replace(config, **overrides)
    return config


def validate(config: RunConfig) -> list[str]:
    """Return every problem that would prevent a run; empty means runnable."""
    problems = []
    if not config.corpus_path or not Path(config.corpus_path).exists():
        problems.append(f"corpus path does not exist: {config.corpus_path!r}")
    if not config.gold_path or not Path(config.gold_path).exists():
        problems.append(f"gold path does not exist: {config.gold_path!r}")
    if config.language not in ("EN", "PT"):
        problems.append(f"language must be EN or PT, got {config.language!r}")
    if config.pos_mapping and not Path(config.pos_mapping).exists():
        problems.append(f"pos mapping does not exist: {config.pos_mapping!r}")
    if config.patterns_path and not Path(config.patterns_path).exists():
        problems.append(f"patterns file does not exist: {config.patterns_path!r}")
    if config.vocabulary_size < 1:
        problems.append("vocabulary size n must be >= 1")
    if config.window_size < 3 or config.window_size % 2 == 0:
        problems.append("window_size must be an odd integer >= 3")
    if not config.methods:
        problems.append("no methods configured")
    for m in config.methods:
        if m not in METHODS:
            problems.append(f"unknown method {m!r}")
    if config.dsim_measure not in MEASURES:
        problems.append(f"dsim measure must be one of {MEASURES}")
    if config.slqs_contexts < 1:
        problems.append("slqs top_contexts must be >= 1")
    if "docsub" in config.methods and not config.docsub_lambdas:
        problems.append("docsub requires at least one lambda")
    for lam in config.docsub_lambdas:
        if not 0 < lam <= 1:
            problems.append(f"docsub lambda {lam} outside (0, 1]")
    if config.hclust_clusters < 1:
        problems.append("hclust clusters must be >= 1")
    return problems


def _load_run_corpus(
    path: str, language: str, pos_mapping: str | None, pseudo_documents: bool
) -> Corpus:
    mapping = load_pos_mapping(pos_mapping) if pos_mapping else None
    corpus = load_corpus(path, language, mapping)
    return sentence_documents(corpus) if pseudo_documents else corpus


def _json_text(data) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _metrics_text(metrics_dict: dict) -> str:
    return "".join(f"{k}\t{v}\n" for k, v in sorted(metrics_dict.items()))


def _csv_text(methods: tuple[str, ...], cells: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", *methods])
    for ma in methods:
        row = [ma]
        for mb in methods:
            value = cells[(ma, mb)]
            row.append("" if value is None else f"{value:.4f}")
        writer.writerow(row)
    return buf.getvalue()


_EMPTY_REPORT = {
    "precision": 0.0,
    "recall": 0.0,
    "fmeasure": 0.0,
    "common_count": 0,
    "extracted_count": 0,
    "gold_count": 0,
    "no_shared_terms": False,
    "empty_relation_set": True,
}


def run(config: RunConfig) -> Path:
    """Execute the full pipeline; return the manifest path.

    Any stage failure removes the files already written and raises
    StageError naming the stage.
    """
    problems = validate(config)
    if problems:
        raise StageError("validate", "; ".join(problems))
    outdir = Path(config.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, text: str) -> None:
        path = outdir / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    stage = "ingest"
    try:
        corpus = _load_run_corpus(
            config.corpus_path,
            config.language,
            config.pos_mapping,
            config.pseudo_documents,
        )
        stats = corpus_stats(corpus)
        emit(
            "corpus_stats.txt",
            f"documents\t{stats.num_documents}\n"
            f"sentences\t{stats.num_sentences}\n"
            f"content_words\t{stats.num_content_words}\n"
            f"vocabulary\t{stats.vocabulary_size}\n",
        )

        stage = "gold"
        gold = load_gold(config.gold_path)

        stage = "contexts"
        window_m = extract_window_contexts(corpus, config.window_size)
        doc_m = extract_document_contexts(corpus)

        stage = "vocabulary"
        vocab = select_vocabulary(window_m, gold, config.vocabulary_size)
        emit("vocabulary.txt", "".join(f"{t}\n" for t in vocab.terms))

        stage = "weighting"
        ppmi = lmi = entropies = None
        if {"dsim", "hclust"} & set(config.methods):
            ppmi = weight_ppmi(window_m)
        if "slqs" in config.methods:
            lmi = weight_lmi(window_m)
            entropies = context_entropies(window_m)

        relsets: dict[str, RelationSet] = {}
        sweep_summary = None
        for method in config.methods:
            stage = f"extract:{method}"
            if method == "patt":
                patterns = (
                    load_patterns(config.patterns_path, config.language)
                    if config.patterns_path
                    else default_patterns(config.language)
                )
                relsets[method] = extract_patterns(corpus, patterns, vocab)
            elif method == "dsim":
                relsets[method] = extract_dsim(ppmi, vocab, config.dsim_measure)
            elif method == "slqs":
                relsets[method] = extract_slqs(lmi, entropies, vocab, config.slqs_contexts)
            elif method == "tf":
                relsets[method] = extract_tf(doc_m, vocab)
            elif method == "df":
                relsets[method] = extract_df(doc_m, vocab)
            elif method == "hclust":
                k = min(config.hclust_clusters, len(vocab))
                relsets[method] = extract_hclust(ppmi, doc_m, vocab, k)
            elif method == "docsub":
                relsets[method], sweep_summary = _docsub_sweep(
                    config, doc_m, vocab, gold, emit
                )

        for method in config.methods:
            relset = relsets[method]
            stage = f"relations:{method}"
            emit(f"relations_{method}.tsv", _relations_text(relset))

            stage = f"taxonomy:{method}"
            tax = build_taxonomy(relset)
            if config.best_parent and tax.nodes:
                tax = best_parent_filter(tax, doc_m)
                emit(
                    f"filtered_{method}.tsv",
                    _relations_text(taxonomy_relations(tax, method)),
                )

            stage = f"evaluate:{method}"
            if tax.nodes:
                report = evaluate(tax, gold).to_dict()
                report["empty_relation_set"] = False
            else:
                report = dict(_EMPTY_REPORT)
            emit(f"eval_{method}.json", _json_text(report))

            stage = f"metrics:{method}"
            if tax.nodes:
                reduced = transitive_reduction(break_cycles(tax))
                metrics = compute_metrics(reduced).to_dict()
            else:
                metrics = {"empty_relation_set": True}
            emit(f"metrics_{method}.json", _json_text(metrics))
            emit(f"metrics_{method}.txt", _metrics_text(metrics))

        if sweep_summary is not None:
            emit("docsub_sweep.json", _json_text(sweep_summary))

        stage = "complementarity"
        if len(relsets) > 1:
            matrix = complementarity_matrix(list(relsets.values()), gold)
            emit("complementarity_direct.csv", _csv_text(matrix.methods, matrix.direct))
            emit("complementarity_inverse.csv", _csv_text(matrix.methods, matrix.inverse))
            emit("relative_precision.csv", _csv_text(matrix.methods, matrix.relative))

        stage = "manifest"
        config_dict = config.to_dict()
        digest = hashlib.sha256(
            json.dumps(config_dict, sort_keys=True).encode("utf-8")
        ).hexdigest()
        outputs = {
            p.name: hashlib.sha256(p.read_bytes()).hexdigest() for p in written
        }
        manifest_path = outdir / "manifest.json"
        manifest_path.write_text(
            _json_text(
                {"config": config_dict, "config_digest": digest, "outputs": outputs}
            ),
            encoding="utf-8",
        )
        return manifest_path
    except StageError:
        raise
    except Exception as exc:
        for path in written:
            path.unlink(missing_ok=True)
        raise StageError(stage, str(exc)) from exc


def _relations_text(relset: RelationSet) -> str:
    lines = []
    for rel in relset:
        score = "" if rel.score is None else repr(rel.score)
        lines.append(f"{rel.hyponym}\t{rel.hypernym}\t{rel.method}\t{score}\n")
    return "".join(lines)


def _docsub_sweep(config, doc_m, vocab, gold, emit):
    """Evaluate every configured lambda, keep the best-F one as canonical."""
    best = None
    summary = []
    for lam in config.docsub_lambdas:
        relset = extract_docsub(doc_m, vocab, lam)
        if relset:
            tax = build_taxonomy(relset)
            report = evaluate(tax, gold)
        else:
            report = EvalReport(0.0, 0.0, 0.0, 0, 0, 0)
        emit(f"eval_docsub_{lam:g}.json", _json_text(report.to_dict()))
        summary.append(
            {
                "lambda": lam,
                "relations": len(relset),
                "precision": report.precision,
                "recall": report.recall,
                "fmeasure": report.fmeasure,
            }
        )
        if best is None or (report.fmeasure, -lam) > (best[0], -best[1]):
            best = (report.fmeasure, lam, relset)
    return best[2], {"best_lambda": best[1], "sweep": summary}


# ---------------------------------------------------------------------------
# command-line interface


def _add_corpus_args(parser) -> None:
    parser.add_argument("corpus", help="corpus file or directory (vertical format)")
    parser.add_argument("--language", required=True, choices=("EN", "PT", "en", "pt"))
    parser.add_argument("--pos-mapping", help="finePOS<TAB>coarsePOS mapping file")
    parser.add_argument(
        "--pseudo-documents",
        action="store_true",
        help="treat every sentence as its own document",
    )


def _corpus_from_args(args) -> Corpus:
    return _load_run_corpus(
        args.corpus, args.language.upper(), args.pos_mapping, args.pseudo_documents
    )


def _cmd_stats(args) -> int:
    stats = corpus_stats(_corpus_from_args(args))
    print(f"documents\t{stats.num_documents}")
    print(f"sentences\t{stats.num_sentences}")
    print(f"content_words\t{stats.num_content_words}")
    print(f"vocabulary\t{stats.vocabulary_size}")
    return 0


def _cmd_contexts(args) -> int:
    corpus = _corpus_from_args(args)
    if args.model == "window":
        matrix = extract_window_contexts(corpus, args.window_size)
    else:
        matrix = extract_document_contexts(corpus)
    save_matrix(matrix, args.out)
    print(f"wrote {args.out} ({len(matrix)} terms)")
    return 0


def _extract_for_args(args, corpus, gold):
    window_m = extract_window_contexts(corpus, args.window_size)
    vocab = select_vocabulary(window_m, gold, args.n)
    method = args.method
    if method == "patt":
        patterns = (
            load_patterns(args.patterns, corpus.language)
            if args.patterns
            else default_patterns(corpus.language)
        )
        return extract_patterns(corpus, patterns, vocab)
    if method == "dsim":
        return extract_dsim(weight_ppmi(window_m), vocab, args.measure)
    if method == "slqs":
        return extract_slqs(
            weight_lmi(window_m), context_entropies(window_m), vocab, args.top_contexts
        )
    doc_m = extract_document_contexts(corpus)
    if method == "tf":
        return extract_tf(doc_m, vocab)
    if method == "df":
        return extract_df(doc_m, vocab)
    if method == "docsub":
        return extract_docsub(doc_m, vocab, args.lam)
    k = min(args.clusters, len(vocab))
    return extract_hclust(weight_ppmi(window_m), doc_m, vocab, k)


def _cmd_extract(args) -> int:
    corpus = _corpus_from_args(args)
    gold = load_gold(args.gold)
    relset = _extract_for_args(args, corpus, gold)
    save_relations(relset, args.out)
    print(f"wrote {args.out} ({len(relset)} relations)")
    return 0


def _cmd_filter_parent(args) -> int:
    corpus = _corpus_from_args(args)
    relset = load_relations(args.relations)
    tax = best_parent_filter(build_taxonomy(relset), extract_document_contexts(corpus))
    save_relations(taxonomy_relations(tax, relset.method), args.out)
    print(f"wrote {args.out} ({tax.num_edges} relations kept)")
    return 0


def _cmd_metrics(args) -> int:
    relset = load_relations(args.relations)
    reduced = transitive_reduction(break_cycles(build_taxonomy(relset)))
    metrics = compute_metrics(reduced).to_dict()
    if args.out_json:
        Path(args.out_json).write_text(_json_text(metrics), encoding="utf-8")
    if args.out_text:
        Path(args.out_text).write_text(_metrics_text(metrics), encoding="utf-8")
    if not args.out_json and not args.out_text:
        sys.stdout.write(_metrics_text(metrics))
    return 0


def _cmd_evaluate(args) -> int:
    relset = load_relations(args.relations)
    report = evaluate(build_taxonomy(relset), load_gold(args.gold))
    if args.out:
        Path(args.out).write_text(_json_text(report.to_dict()), encoding="utf-8")
    print(
        f"precision={report.precision:.4f} recall={report.recall:.4f} "
        f"fmeasure={report.fmeasure:.4f}"
    )
    return 0


def _cmd_complement(args) -> int:
    relsets = [load_relations(path) for path in args.relations]
    matrix = complementarity_matrix(relsets, load_gold(args.gold))
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, cells in (
        ("complementarity_direct.csv", matrix.direct),
        ("complementarity_inverse.csv", matrix.inverse),
        ("relative_precision.csv", matrix.relative),
    ):
        (outdir / name).write_text(
            _csv_text(matrix.methods, cells), encoding="utf-8"
        )
    print(f"wrote 3 matrices under {outdir}")
    return 0


def _cmd_run(args) -> int:
    overrides = {}
    if args.output_dir:
        overrides["output_dir"] = args.output_dir
    if args.methods:
        overrides["methods"] = tuple(m.strip() for m in args.methods.split(","))
    if args.n:
        overrides["vocabulary_size"] = args.n
    if args.best_parent:
        overrides["best_parent"] = True
    if args.pseudo_documents:
        overrides["pseudo_documents"] = True
    manifest = run(load_config(args.config, overrides))
    print(f"wrote {manifest}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="taxorel",
        description="Extract and evaluate taxonomic (is-a) relations from "
        "POS-tagged corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="corpus statistics")
    _add_corpus_args(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("contexts", help="export a co-occurrence matrix")
    _add_corpus_args(p)
    p.add_argument("--model", required=True, choices=("window", "document"))
    p.add_argument("--window-size", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_contexts)

    p = sub.add_parser("extract", help="run one extraction method")
    _add_corpus_args(p)
    p.add_argument("--gold", required=True)
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--n", type=int, default=1000, help="vocabulary size")
    p.add_argument("--window-size", type=int, default=5)
    p.add_argument("--measure", default="clarkede", choices=MEASURES)
    p.add_argument("--lam", type=float, default=0.5, help="docsub threshold")
    p.add_argument("--clusters", type=int, default=100)
    p.add_argument("--top-contexts", type=int, default=50)
    p.add_argument("--patterns", help="pattern template file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("filter-parent", help="keep the best parent per term")
    p.add_argument("relations", help="relations TSV to filter")
    _add_corpus_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_filter_parent)

    p = sub.add_parser("metrics", help="hierarchy metrics of a relation file")
    p.add_argument("relations")
    p.add_argument("--out-json")
    p.add_argument("--out-text")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("evaluate", help="score relations against a gold standard")
    p.add_argument("relations")
    p.add_argument("--gold", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("complement", help="cross-method overlap matrices")
    p.add_argument("relations", nargs="+")
    p.add_argument("--gold", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("run", help="full pipeline from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir")
    p.add_argument("--methods")
    p.add_argument("--n", type=int)
    p.add_argument("--best-parent", action="store_true")
    p.add_argument("--pseudo-documents", action="store_true")
    p.set_defaults(func=_cmd_run)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StageError as exc:
        print(f"error in {exc.stage}: {exc.cause}", file=sys.stderr)
        return 1
    except (CorpusFormatError, GoldFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
