import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.api_types import BaseUrl, PathSegment, render_segments
from Core.html_text import parse_html, render_with_spans
from Core.url_tools import find_relative_paths, normalize_url, parse_segments, split_path
from Corpus.page_loader import Page
from UI.console_handler import log_debug, log_info


@dataclass(frozen=True)
class Path:
    """An endpoint path as documented, relative to the base URL."""

    segments: Tuple[PathSegment, ...]
    origin_page: str = ""
    origin_raw: str = ""

    def __post_init__(self):
        if not self.segments:
            raise ValueError("path needs at least one segment")

    def render(self) -> str:
        return render_segments(self.segments)

    def __len__(self):
        return len(self.segments)


def residual_segments(url: str, base: BaseUrl) -> Optional[List[str]]:
    """
    Raw path segments of url after the base URL, or None when url does not
    start with the base URL (scheme, host and whole base path segments).
    """
    normalized = normalize_url(url)
    if normalized is None:
        return None
    if normalized.scheme != base.scheme or normalized.netloc != base.host:
        return None
    prefix = base.path_segments
    if normalized.segments[: len(prefix)] != prefix:
        return None
    return list(normalized.segments[len(prefix):])


def paths_from_urls(
    api_urls: Sequence[str], base: BaseUrl, origins: Optional[Dict[str, str]] = None
) -> List[Path]:
    """
    Truncates the base URL from every classified URL. URLs outside the base
    URL and URLs with nothing left after truncation contribute nothing.
    origins optionally maps a URL to the page it was found on.
    """
    origins = origins or {}
    paths = []
    for url in api_urls:
        residual = residual_segments(url, base)
        if not residual:
            continue
        paths.append(Path(parse_segments(residual), origins.get(url, ""), url))
    log_debug("[TEMPLATES]", f"{len(paths)} paths from {len(api_urls)} API URLs")
    return paths


def paths_from_relative_mentions(pages: Sequence[Page], base: Optional[BaseUrl] = None) -> List[Path]:
    """
    Relative paths ("/users/{id}") mentioned in the rendered text of the pages.
    A leading base path ("/v1/users" under base path "/v1") is removed.
    """
    base_prefix = base.path_segments if base is not None else ()
    paths = []
    for page in sorted(pages, key=lambda p: p.fetch_order):
        text = render_with_spans(parse_html(page.html)).text
        for token in find_relative_paths(text):
            raw_segments = split_path(token.text)
            if base_prefix and tuple(raw_segments[: len(base_prefix)]) == base_prefix:
                raw_segments = raw_segments[len(base_prefix):]
            if not raw_segments:
                continue
            paths.append(Path(parse_segments(raw_segments), page.url, token.text))
    log_info("[TEMPLATES]", f"{len(paths)} relative path mentions in {len(pages)} pages")
    return paths
