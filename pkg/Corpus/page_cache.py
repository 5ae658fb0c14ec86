import hashlib
import os
import sys
from typing import Optional

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from UI.console_handler import log_debug, log_warning

# On-disk cache of crawled pages (--cache-dir). Files are named by the
# SHA-256 of the URL so the same URL always maps to the same file.


def cache_path(cache_dir: str, url: str) -> str:
    digest = hashlib.sha256(url.encode("utf-8")).hexdigest()
    return os.path.join(cache_dir, f"{digest}.html")


def read_cached(cache_dir: Optional[str], url: str) -> Optional[bytes]:
    """Returns the cached bytes for url, or None."""
    if not cache_dir:
        return None
    path = cache_path(cache_dir, url)
    if not os.path.exists(path):
        return None
    with open(path, "rb") as f:
        log_debug("[CRAWLER]", f"Cache hit for {url}")
        return f.read()


def write_cached(cache_dir: Optional[str], url: str, raw: bytes):
    """Stores raw page bytes; a failing cache never stops the crawl."""
    if not cache_dir:
        return
    try:
        os.makedirs(cache_dir, exist_ok=True)
        with open(cache_path(cache_dir, url), "wb") as f:
            f.write(raw)
    except OSError as e:
        log_warning("[CRAWLER]", f"Could not cache {url}: {e}")
