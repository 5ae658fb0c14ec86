import os
import re
import sys
from dataclasses import astuple, dataclass
from typing import Tuple
from urllib.parse import urlsplit

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.url_tools import has_param_marker, host_of, split_path, strip_query
from Harvest.candidates import CandidateUrl
from Harvest.prober import ProbeCategory, ProbeResult

# Version conventions anchored to a whole path segment: v2, v1.1, version3
_VERSION_SEGMENT_RE = re.compile(r"^(?:v|version)[0-9.]+$", re.IGNORECASE)


@dataclass(frozen=True)
class FeatureVector:
    """Numeric encoding of one candidate URL, in config.FEATURE_ORDER."""

    clickable: int = 0
    code_tag: int = 0
    within_json: int = 0
    same_domain_with_doc_link: int = 0
    query_parameter: int = 0
    api_convention: int = 0
    path_template: int = 0
    probe_json: int = 0
    probe_auth: int = 0
    probe_other: int = 0

    def as_tuple(self) -> Tuple[int, ...]:
        return astuple(self)


def _path_of(url: str) -> str:
    try:
        return urlsplit(url).path
    except ValueError:
        return ""


def has_query_parameter(url: str) -> bool:
    """
    True when the URL has a "?" delimiter or its query part holds "=".
    An "=" inside a path segment does not count.
    """
    try:
        parts = urlsplit(url)
    except ValueError:
        return "?" in url
    return "?" in url or "=" in parts.query


def api_convention(url: str) -> int:
    """
    Number of API naming conventions the URL follows: contains "rest",
    contains "api", has a version path segment.
    """
    lowered = url.lower()
    count = 0
    if "rest" in lowered:
        count += 1
    if "api" in lowered:
        count += 1
    if any(_VERSION_SEGMENT_RE.match(s) for s in split_path(_path_of(strip_query(url)))):
        count += 1
    return count


def has_path_template(url: str) -> bool:
    return any(has_param_marker(s) for s in split_path(_path_of(strip_query(url))))


def featurize(candidate: CandidateUrl, probe: ProbeResult) -> FeatureVector:
    """Computes the feature vector of a candidate URL."""
    candidate_host = host_of(candidate.raw)
    return FeatureVector(
        clickable=int(candidate.clickable),
        code_tag=int(candidate.in_code_tag),
        within_json=int(candidate.within_json),
        same_domain_with_doc_link=int(
            bool(candidate_host) and candidate_host == host_of(candidate.page_url)
        ),
        query_parameter=int(has_query_parameter(candidate.raw)),
        api_convention=api_convention(candidate.raw),
        path_template=int(has_path_template(candidate.raw)),
        probe_json=int(probe.category is ProbeCategory.JSON_BODY),
        probe_auth=int(probe.category is ProbeCategory.AUTH_ERROR),
        probe_other=int(probe.category is ProbeCategory.OTHER),
    )
