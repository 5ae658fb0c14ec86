import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Optional

import requests

# Add the parent directory to sys.path to allow importing configuration
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.url_tools import has_param_marker, split_path, strip_query
from UI.console_handler import log_debug, log_info

# ---------------------------------------------------------------
# Live probing of candidate URLs (opt-in with --probe): one GET per
# URL, answer categorized as JSON body, authentication error, other.
# ---------------------------------------------------------------


class ProbeCategory(Enum):
    JSON_BODY = "JsonBody"
    AUTH_ERROR = "AuthError"
    OTHER = "Other"
    NOT_PROBED = "NotProbed"


@dataclass(frozen=True)
class ProbeResult:
    category: ProbeCategory = ProbeCategory.NOT_PROBED


NOT_PROBED = ProbeResult(ProbeCategory.NOT_PROBED)


def _has_markers(url: str) -> bool:
    path = strip_query(url.split("://", 1)[-1])
    return any(has_param_marker(s) for s in split_path(path)[1:])


def categorize(status_code: int, body: str) -> ProbeResult:
    """Maps an HTTP answer to its probe category."""
    if status_code in cfg.AUTH_STATUS_CODES or cfg.AUTH_ERROR_MARKER in body:
        return ProbeResult(ProbeCategory.AUTH_ERROR)
    try:
        json.loads(body)
        return ProbeResult(ProbeCategory.JSON_BODY)
    except ValueError:
        return ProbeResult(ProbeCategory.OTHER)


def probe(
    url: str, enabled: bool, session: Optional[requests.Session] = None
) -> ProbeResult:
    """
    Issues one GET to url and categorizes the answer. Templated URLs and
    disabled probing yield NotProbed; network failures yield Other.
    """
    if not enabled or _has_markers(url):
        return NOT_PROBED
    getter = session or requests
    try:
        response = getter.get(
            url,
            timeout=cfg.PROBE_TIMEOUT,
            headers={"User-Agent": cfg.get_user_agent()},
        )
    except requests.RequestException as e:
        log_debug("[PROBE]", f"{url}: {e}")
        return ProbeResult(ProbeCategory.OTHER)
    result = categorize(response.status_code, response.text)
    log_debug("[PROBE]", f"{url}: HTTP {response.status_code} -> {result.category.value}")
    return result


def probe_all(urls: Iterable[str], enabled: bool) -> Dict[str, ProbeResult]:
    """Probes distinct URLs with a bounded worker pool; results keyed by URL."""
    distinct = sorted(set(urls))
    if not enabled:
        return {url: NOT_PROBED for url in distinct}
    log_info("[PROBE]", f"Probing {len(distinct)} candidate URLs")
    with requests.Session() as session:
        with ThreadPoolExecutor(max_workers=max(1, cfg.PROBE_WORKERS)) as executor:
            results = executor.map(lambda u: probe(u, True, session), distinct)
            return dict(zip(distinct, results))
