import json
import os
import sys
from dataclasses import dataclass
from typing import Dict, List

from bs4.element import Tag

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.html_text import element_text, parse_html, render_with_spans
from Core.url_tools import find_absolute_urls
from Corpus.page_loader import Page
from UI.console_handler import log_debug

# ---------------------------------------------------------------
# Candidate URL extraction: every URL rendered in a page's text,
# together with the page-context flags the classifier needs.
# href values and <script> content never produce candidates since
# only rendered text nodes are scanned.
# ---------------------------------------------------------------


@dataclass(frozen=True)
class CandidateUrl:
    raw: str
    page_url: str
    clickable: bool = False
    in_code_tag: bool = False
    within_json: bool = False


def _is_json_block(element: Tag, cache: Dict[int, bool]) -> bool:
    """True if the element's rendered text is a JSON object or array."""
    key = id(element)
    if key not in cache:
        text = element_text(element).strip()
        result = False
        if text[:1] in ("{", "["):
            try:
                result = isinstance(json.loads(text), (dict, list))
            except ValueError:
                result = False
        cache[key] = result
    return cache[key]


def extract_candidates(page: Page) -> List[CandidateUrl]:
    """
    Returns the candidate URLs of a page in document order, one per distinct
    (raw, clickable, in_code_tag, within_json) combination.
    """
    soup = parse_html(page.html)
    rendered = render_with_spans(soup)
    json_cache: Dict[int, bool] = {}

    candidates = []
    seen = set()
    for token in find_absolute_urls(rendered.text):
        node = rendered.node_at(token.start)
        ancestors = list(node.parents) if node is not None else []

        clickable = any(a.name == "a" and a.has_attr("href") for a in ancestors)
        in_code = any(a.name == "code" for a in ancestors)
        within_json = any(
            isinstance(a, Tag) and a.name not in ("[document]", "html", "body")
            and _is_json_block(a, json_cache)
            for a in ancestors
        )

        candidate = CandidateUrl(token.text, page.url, clickable, in_code, within_json)
        key = (candidate.raw, clickable, in_code, within_json)
        if key in seen:
            continue
        seen.add(key)
        candidates.append(candidate)

    log_debug("[HARVEST]", f"{len(candidates)} candidate URLs on {page.url}")
    return candidates


def extract_all(pages: List[Page]) -> List[CandidateUrl]:
    """Candidates of every page, merged in fetch_order."""
    candidates = []
    for page in sorted(pages, key=lambda p: p.fetch_order):
        candidates.extend(extract_candidates(page))
    return candidates
