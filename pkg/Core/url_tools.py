import os
import re
import sys
from typing import List, NamedTuple, Optional, Tuple
from urllib.parse import urlsplit

# Add the parent directory to sys.path to allow importing configuration
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.api_types import PathSegment, literal, parameter

# ---------------------------------------------------------------
# URL grammar used on rendered documentation text, plus the URL
# normalization shared by base-URL inference, path truncation and
# template matching.
# ---------------------------------------------------------------

# Characters legal in URLs plus the parameter markers {} [] () <>
_URL_CHARS = r"A-Za-z0-9\-._~:/?#\[\]@!$&'()*+,;=%{}<>"
# Characters a relative path segment may contain (no query/fragment)
_SEGMENT_CHARS = r"A-Za-z0-9\-._~%:@!$&*+,;={}\[\]<>()"

ABSOLUTE_URL_RE = re.compile(
    r"https?://[A-Za-z0-9.\-]+(?::\d+)?(?:[/?#][" + _URL_CHARS + r"]*)?",
    re.IGNORECASE,
)

# A leading "/" that does not continue a host name, a word, or another path
RELATIVE_PATH_RE = re.compile(
    r"(?<![A-Za-z0-9\-._~%:/@}\]>)\\])/[" + _SEGMENT_CHARS + r"]+(?:/[" + _SEGMENT_CHARS + r"]+)*/?"
)

_TRAILING_PUNCTUATION = ".,;:!?\"'"
_CLOSERS = {close: open_ for open_, close in cfg.PARAM_MARKERS.items()}

_DEFAULT_PORTS = {"http": 80, "https": 443}


class UrlToken(NamedTuple):
    start: int
    end: int
    text: str


class NormalizedUrl(NamedTuple):
    scheme: str
    netloc: str
    segments: Tuple[str, ...]
    query: str

    @property
    def without_query(self) -> str:
        path = "/" + "/".join(self.segments) if self.segments else ""
        return f"{self.scheme}://{self.netloc}{path}"


def trim_token(token: str) -> str:
    """
    Strips trailing sentence punctuation and closing brackets that do not
    close a bracket opened inside the token.
    """
    while token:
        last = token[-1]
        if last in _TRAILING_PUNCTUATION:
            token = token[:-1]
        elif last in _CLOSERS and token.count(_CLOSERS[last]) < token.count(last):
            token = token[:-1]
        else:
            break
    return token


def find_absolute_urls(text: str) -> List[UrlToken]:
    """Returns every maximal http(s) URL token in text, in order."""
    tokens = []
    for match in ABSOLUTE_URL_RE.finditer(text):
        token = trim_token(match.group(0))
        host = urlsplit(token).netloc if "://" in token else ""
        if not host or host.startswith(".") or ".." in host:
            continue
        tokens.append(UrlToken(match.start(), match.start() + len(token), token))
    return tokens


def find_relative_paths(text: str) -> List[UrlToken]:
    """
    Returns relative-path tokens ("/users/{id}") that are not part of an
    absolute URL. Every segment must carry an alphanumeric character.
    """
    tokens = []
    for match in RELATIVE_PATH_RE.finditer(text):
        token = trim_token(match.group(0))
        segments = split_path(token)
        if not segments:
            continue
        if not all(re.search(r"[A-Za-z0-9]", s) for s in segments):
            continue
        tokens.append(UrlToken(match.start(), match.start() + len(token), token))
    return tokens


def split_path(path: str) -> List[str]:
    """Splits a path into nonempty segments (trailing slash dropped)."""
    return [segment for segment in path.split("/") if segment]


def strip_query(text: str) -> str:
    return re.split(r"[?#]", text, maxsplit=1)[0]


def has_param_marker(segment: str) -> bool:
    """True if the segment is ':'-prefixed or encloses a marker pair."""
    if segment.startswith(":") and len(segment) > 1:
        return True
    for open_, close in cfg.PARAM_MARKERS.items():
        start = segment.find(open_)
        if start != -1 and segment.find(close, start + 1) > start + 1:
            return True
    return False


def parse_segment(raw: str, position: int) -> PathSegment:
    """
    Turns one documented path segment into a PathSegment. Marker-enclosed
    and ':'-prefixed segments become parameters keeping their documented name.
    """
    if not has_param_marker(raw):
        return literal(raw)
    if raw.startswith(":"):
        name = raw[1:]
    else:
        name = "".join(
            ch for ch in raw if ch not in cfg.PARAM_MARKERS and ch not in _CLOSERS
        )
    if not name:
        return parameter(f"param{position}", named=False)
    return parameter(name)


def parse_segments(raw_segments) -> Tuple[PathSegment, ...]:
    return tuple(parse_segment(raw, i) for i, raw in enumerate(raw_segments))


def normalize_url(url: str) -> Optional[NormalizedUrl]:
    """
    Lowercases scheme and host, strips default ports, trailing slashes and
    empty segments. Returns None for anything that is not an absolute
    http(s) URL.
    """
    try:
        parts = urlsplit(url.strip())
        port = parts.port
    except ValueError:
        return None
    scheme = parts.scheme.lower()
    if scheme not in _DEFAULT_PORTS or not parts.hostname:
        return None
    netloc = parts.hostname.lower()
    if port is not None and port != _DEFAULT_PORTS[scheme]:
        netloc = f"{netloc}:{port}"
    return NormalizedUrl(scheme, netloc, tuple(split_path(parts.path)), parts.query)


def host_of(url: str) -> str:
    """Lowercase network location of url ("" when it has none)."""
    normalized = normalize_url(url)
    if normalized is not None:
        return normalized.netloc
    try:
        return urlsplit(url).netloc.lower()
    except ValueError:
        return ""
