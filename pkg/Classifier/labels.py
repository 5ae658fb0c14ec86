import csv
import os
import sys
from typing import Dict, List

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.errors import ClassifierError
from Corpus.page_loader import file_url, load_dir
from Classifier.linear_svm import LabeledExample
from Harvest.candidates import CandidateUrl, extract_candidates
from Harvest.features import featurize
from Harvest.prober import probe_all
from UI.console_handler import log_info, log_warning

# ---------------------------------------------------------------
# Labeled training data: a CSV with header page,url,label joined with
# the candidates harvested from the referenced corpus pages. A label
# applies to every occurrence context of the URL on that page.
# ---------------------------------------------------------------

REQUIRED_COLUMNS = ("page", "url", "label")


def read_label_rows(labels_path: str) -> List[Dict[str, str]]:
    if not os.path.exists(labels_path):
        raise ClassifierError(f"Labels file not found: {labels_path}")
    with open(labels_path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or any(
            c not in reader.fieldnames for c in REQUIRED_COLUMNS
        ):
            raise ClassifierError(
                f"Labels file needs the header {','.join(REQUIRED_COLUMNS)}"
            )
        return list(reader)


def load_labeled_examples(
    corpus_dir: str, labels_path: str, probe_enabled: bool = False
) -> List[LabeledExample]:
    """Builds labeled feature vectors from a corpus directory and a labels CSV."""
    rows = read_label_rows(labels_path)
    pages = {page.url: page for page in load_dir(corpus_dir)}
    candidates_by_page: Dict[str, List[CandidateUrl]] = {}

    matched = []
    for line_number, row in enumerate(rows, start=2):
        page_url = file_url(row["page"].strip())
        label_text = row["label"].strip()
        if label_text not in ("0", "1"):
            log_warning("[CLASSIFIER]", f"Line {line_number}: label must be 0 or 1, skipped")
            continue
        if page_url not in pages:
            log_warning("[CLASSIFIER]", f"Line {line_number}: page {row['page']} not in corpus, skipped")
            continue
        if page_url not in candidates_by_page:
            candidates_by_page[page_url] = extract_candidates(pages[page_url])
        hits = [c for c in candidates_by_page[page_url] if c.raw == row["url"].strip()]
        if not hits:
            log_warning("[CLASSIFIER]", f"Line {line_number}: {row['url']} not found on {row['page']}, skipped")
            continue
        matched.extend((candidate, label_text == "1") for candidate in hits)

    probes = probe_all([c.raw for c, _ in matched], probe_enabled)
    examples = [LabeledExample(featurize(c, probes[c.raw]), label) for c, label in matched]
    log_info("[CLASSIFIER]", f"{len(examples)} labeled examples from {len(rows)} label rows")
    return examples
