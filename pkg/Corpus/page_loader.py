import codecs
import os
import re
import sys
from dataclasses import dataclass
from typing import List, Optional

# Add the parent directory to sys.path to allow importing configuration
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.errors import CorpusError
from UI.console_handler import log_info, log_warning

# ---------------------------------------------------------------
# Documentation pages and the offline corpus loader.
# ---------------------------------------------------------------

# <meta charset="..."> or <meta http-equiv=... content="...; charset=...">
_META_CHARSET_RE = re.compile(
    rb"""<meta[^>]+charset\s*=\s*["']?\s*([A-Za-z0-9_\-:.]+)""", re.IGNORECASE
)


@dataclass(frozen=True)
class Page:
    url: str
    html: str
    fetch_order: int


def declared_charset(raw: bytes) -> Optional[str]:
    """
    Returns the charset named by a <meta> tag near the top of the document,
    or None when absent or unknown to Python.
    """
    match = _META_CHARSET_RE.search(raw[:4096])
    if not match:
        return None
    name = match.group(1).decode("ascii", errors="ignore")
    try:
        return codecs.lookup(name).name
    except LookupError:
        return None


def decode_html(raw: bytes, lossy: bool = True) -> str:
    """
    Decodes page bytes with the declared meta charset, else UTF-8.
    lossy=True replaces bad bytes; lossy=False raises UnicodeDecodeError.
    """
    encoding = declared_charset(raw) or "utf-8"
    return raw.decode(encoding, errors="replace" if lossy else "strict")


def file_url(relative_path: str) -> str:
    """Synthetic file: URL for a page loaded from disk."""
    return "file:///" + relative_path.replace(os.sep, "/")


def load_dir(path: str) -> List[Page]:
    """
    Loads every .html/.htm file under path (recursively), sorted by relative
    path, with fetch_order assigned in that order.
    """
    if not os.path.isdir(path):
        raise CorpusError(f"Input directory not found: {path}")

    relative_paths = []
    for root, dirs, files in os.walk(path):
        # Ignore hidden folders
        dirs[:] = [d for d in dirs if not d.startswith(".")]
        for filename in files:
            if filename.lower().endswith(cfg.HTML_EXTENSIONS):
                full = os.path.join(root, filename)
                relative_paths.append(os.path.relpath(full, path).replace(os.sep, "/"))

    # Byte-lexicographic order of the relative path
    relative_paths.sort(key=lambda p: p.encode("utf-8"))
    if not relative_paths:
        raise CorpusError(f"No .html or .htm files in {path}")

    pages = []
    for relative_path in relative_paths:
        with open(os.path.join(path, relative_path), "rb") as f:
            raw = f.read()
        try:
            html = decode_html(raw, lossy=False)
        except UnicodeDecodeError as e:
            log_warning("[CORPUS]", f"Skipping undecodable file {relative_path}: {e}")
            continue
        pages.append(Page(file_url(relative_path), html, len(pages)))

    if not pages:
        raise CorpusError(f"No decodable documentation pages in {path}")
    log_info("[CORPUS]", f"Loaded {len(pages)} pages from {path}")
    return pages
