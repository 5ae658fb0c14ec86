import os
import sys
from collections import Counter
from typing import List, Sequence

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.api_types import BaseUrl
from Core.errors import ExtractionError
from Core.url_tools import NormalizedUrl, has_param_marker, normalize_url
from UI.console_handler import log_debug, log_info, log_warning

# ---------------------------------------------------------------
# Base URL inference: longest common prefix of the URLs classified as
# API calls, computed on whole path segments.
# ---------------------------------------------------------------


def _common_segments(urls: Sequence[NormalizedUrl]) -> List[str]:
    prefix = list(urls[0].segments)
    for url in urls[1:]:
        length = 0
        for mine, theirs in zip(prefix, url.segments):
            if mine != theirs:
                break
            length += 1
        prefix = prefix[:length]
    return prefix


def _majority(values: List[str], preferred: str = None) -> str:
    counts = Counter(values)
    best = max(counts.values())
    winners = sorted(v for v, c in counts.items() if c == best)
    if preferred in winners:
        return preferred
    return winners[0]


def infer_base_url(api_urls: Sequence[str]) -> BaseUrl:
    """
    Infers scheme, host and base path from the positively classified URLs.

    The majority host wins when hosts are mixed (ties broken
    lexicographically). Query strings and fragments are ignored. A single
    distinct URL collapses to scheme and host only.
    """
    normalized = []
    for url in api_urls:
        parsed = normalize_url(url)
        if parsed is None:
            log_warning("[BASE_URL]", f"Ignoring non-http(s) URL {url}")
            continue
        normalized.append(parsed)
    if not normalized:
        raise ExtractionError("no API URLs classified")

    host = _majority([u.netloc for u in normalized])
    if len({u.netloc for u in normalized}) > 1:
        log_warning("[BASE_URL]", f"API URLs span several hosts; using majority host {host}")

    # Deduplicate on the URL without query string and fragment
    distinct = {}
    for url in normalized:
        if url.netloc == host:
            distinct.setdefault(url.without_query, url)
    same_host = [distinct[key] for key in sorted(distinct)]
    scheme = _majority([u.scheme for u in same_host], preferred="https")

    if len(same_host) == 1:
        base = BaseUrl(scheme, host)
        log_info("[BASE_URL]", f"Single distinct API URL; base URL {base.full}")
        return base

    base_segments = []
    for segment in _common_segments(same_host):
        # The base path never carries a parameter
        if has_param_marker(segment):
            break
        base_segments.append(segment)

    base_path = "/" + "/".join(base_segments) if base_segments else ""
    base = BaseUrl(scheme, host, base_path)
    log_debug("[BASE_URL]", f"Common prefix of {len(same_host)} distinct URLs: {base.full}")
    log_info("[BASE_URL]", f"Base URL {base.full}")
    return base
