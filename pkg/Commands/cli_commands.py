import os
import sys
from typing import Dict, List, Optional

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Config.run_config import RunConfig
from Core.api_types import ApiSpec
from Core.errors import ExtractionError
from Corpus.crawler import CrawlConfig, crawl
from Corpus.page_loader import Page, load_dir
from Classifier.labels import load_labeled_examples
from Classifier.linear_svm import cross_validate, evaluate, predict, train
from Classifier.model_store import load_model, save_model
from Diff.report import render_report, summary_lines
from Diff.spec_diff import diff_specs
from Harvest.candidates import extract_all
from Harvest.features import featurize
from Harvest.prober import probe_all
from Inference.base_url import infer_base_url
from Inference.clustering import ClusteringConfig, iterate_templates
from Inference.methods import derive_endpoints
from Inference.paths import paths_from_relative_mentions, paths_from_urls
from SpecIO.openapi_io import read_spec, write_spec
from UI.console_handler import log_info, log_success, log_warning
from UI.report_view import print_diff_summary, print_extract_summary, print_metrics

# -------------------------------
# Subcommand implementations. Each returns an exit code; library errors
# propagate to main.py, which maps them to exit codes.
# -------------------------------


def _load_pages(config: RunConfig) -> List[Page]:
    if config.input_dir is not None:
        return load_dir(config.input_dir)
    crawl_config = CrawlConfig(
        config.seed_url, config.max_pages, config.max_depth, config.delay_ms
    )
    return crawl(crawl_config, cache_dir=config.cache_dir)


def _source_of(config: RunConfig) -> str:
    if config.seed_url is not None:
        return config.seed_url
    return os.path.basename(os.path.normpath(config.input_dir))


def classify_api_urls(pages: List[Page], model_path: Optional[str], probe_enabled: bool):
    """
    Harvests candidates and keeps the URLs the model classifies as API
    calls. Returns (candidate count, API URLs in first-seen order, URL ->
    page it was first seen on).
    """
    model = load_model(model_path)
    candidates = extract_all(pages)
    probes = probe_all([c.raw for c in candidates], probe_enabled)

    api_urls: List[str] = []
    origins: Dict[str, str] = {}
    for candidate in candidates:
        if not predict(model, featurize(candidate, probes[candidate.raw])):
            continue
        if candidate.raw not in origins:
            origins[candidate.raw] = candidate.page_url
            api_urls.append(candidate.raw)
    log_info("[CLASSIFIER]", f"{len(api_urls)} of {len(candidates)} candidate URLs classified as API calls")
    return len(candidates), api_urls, origins


def build_spec(pages: List[Page], config: RunConfig):
    """Runs the pipeline from pages to an ApiSpec; also returns summary stats."""
    candidate_count, api_urls, origins = classify_api_urls(pages, config.model, config.probe)
    if not api_urls:
        raise ExtractionError("no API URLs classified")

    base = infer_base_url(api_urls)
    paths = paths_from_urls(api_urls, base, origins) + paths_from_relative_mentions(pages, base)
    if paths:
        templates = iterate_templates(paths, ClusteringConfig())
    else:
        log_warning("[TEMPLATES]", "No endpoint paths found; the output lists no paths")
        templates = []
    endpoints = derive_endpoints(pages, templates, base)

    spec = ApiSpec(base, tuple(endpoints), _source_of(config))
    stats = {
        "pages": len(pages),
        "candidates": candidate_count,
        "positives": len(api_urls),
        "base URL": base.full,
        "templates": len(templates),
        "endpoints": sum(len(e.methods) for e in endpoints),
    }
    return spec, stats


def run_extract(config: RunConfig) -> int:
    pages = _load_pages(config)
    spec, stats = build_spec(pages, config)
    write_spec(spec, config.out)
    log_success("[MAIN]", f"Specification written to {config.out}")
    print_extract_summary(stats)
    return cfg.EXIT_OK


def run_train(config: RunConfig) -> int:
    examples = load_labeled_examples(config.corpus, config.labels, config.probe)
    model = train(examples, config.epochs, config.reg, config.random_seed)
    save_model(model, config.out)
    accuracy, f1 = evaluate(model, examples)
    print_metrics("Training set", accuracy, f1)
    return cfg.EXIT_OK


def run_cv(config: RunConfig) -> int:
    examples = load_labeled_examples(config.corpus, config.labels, config.probe)
    accuracy, f1 = cross_validate(
        examples, config.folds, config.random_seed, config.epochs, config.reg
    )
    print_metrics(f"{config.folds}-fold cross-validation", accuracy, f1)
    return cfg.EXIT_OK


def run_diff(config: RunConfig) -> int:
    report = diff_specs(read_spec(config.generated), read_spec(config.existing))
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(render_report(report))
        log_info("[DIFF]", f"Report written to {config.out}")
    print_diff_summary(summary_lines(report))
    return cfg.EXIT_OK if report.clean else cfg.EXIT_MISMATCH


COMMANDS = {
    "extract": run_extract,
    "train": run_train,
    "cv": run_cv,
    "diff": run_diff,
}


def run(config: RunConfig) -> int:
    return COMMANDS[config.subcommand](config)
