import os
import sys
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional
from urllib.parse import urldefrag, urljoin

import requests

# Add the parent directory to sys.path to allow importing configuration
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.errors import CorpusError
from Core.html_text import parse_html
from Core.url_tools import host_of, normalize_url
from Corpus.page_cache import read_cached, write_cached
from Corpus.page_loader import Page, decode_html
from UI.console_handler import log_debug, log_info, log_warning

"""
crawler.py

Breadth-first crawler for online documentation. Starting from a seed page it
follows <a href> links in document order, restricted to the seed's host, and
returns the pages in the order a sequential crawl would have fetched them.
Pages are fetched in small concurrent batches; JavaScript is never executed.
"""


class NotHtmlError(Exception):
    """The response is not an HTML document."""


@dataclass(frozen=True)
class CrawlConfig:
    seed: str
    max_pages: int = cfg.DEFAULT_MAX_PAGES
    max_depth: int = cfg.DEFAULT_MAX_DEPTH
    delay_ms: int = cfg.DEFAULT_DELAY_MS
    same_host_only: bool = field(default=True, init=False)

    def __post_init__(self):
        if normalize_url(self.seed) is None:
            raise CorpusError(f"Seed is not an absolute http(s) URL: {self.seed}")
        if self.max_pages < 1:
            raise CorpusError("max_pages must be at least 1")
        if self.max_depth < 0:
            raise CorpusError("max_depth must not be negative")
        if self.delay_ms < 0:
            raise CorpusError("delay_ms must not be negative")


def new_session() -> requests.Session:
    session = requests.Session()
    session.headers.update({"User-Agent": cfg.get_user_agent()})
    return session


def fetch_page(
    url: str,
    session: requests.Session,
    delay_ms: int = 0,
    cache_dir: Optional[str] = None,
) -> bytes:
    """
    Fetches one page (or reads it from the cache). Raises on network errors,
    HTTP error statuses and non-HTML responses.
    """
    cached = read_cached(cache_dir, url)
    if cached is not None:
        return cached
    if delay_ms:
        time.sleep(delay_ms / 1000.0)
    response = session.get(url, timeout=cfg.CRAWL_TIMEOUT, allow_redirects=True)
    response.raise_for_status()
    content_type = response.headers.get("Content-Type", "")
    if content_type and "html" not in content_type.lower():
        raise NotHtmlError(f"content type {content_type}")
    write_cached(cache_dir, url, response.content)
    return response.content


def extract_links(page_url: str, html: str) -> List[str]:
    """
    Returns absolute http(s) link targets of a page in document order,
    fragments removed, duplicates dropped.
    """
    links = []
    seen = set()
    for anchor in parse_html(html).find_all("a", href=True):
        target, _ = urldefrag(urljoin(page_url, anchor["href"].strip()))
        if normalize_url(target) is None or target in seen:
            continue
        seen.add(target)
        links.append(target)
    return links


def crawl(
    config: CrawlConfig,
    cache_dir: Optional[str] = None,
    session: Optional[requests.Session] = None,
) -> List[Page]:
    """
    Crawls same-host documentation pages breadth-first from config.seed.
    An unreachable seed raises CorpusError; failing sub-pages are skipped
    with a warning.
    """
    session = session or new_session()
    seed, _ = urldefrag(config.seed)
    seed_host = host_of(seed)

    log_info("[CRAWLER]", f"Crawling {seed} (max {config.max_pages} pages, depth {config.max_depth})")
    try:
        raw = fetch_page(seed, session, 0, cache_dir)
    except (requests.RequestException, NotHtmlError) as e:
        raise CorpusError(f"Seed page unreachable: {seed} ({e})") from e

    pages: List[Page] = []
    frontier = deque()
    seen = {seed}

    def accept(url, depth, raw_bytes):
        html = decode_html(raw_bytes, lossy=True)
        pages.append(Page(url, html, len(pages)))
        if depth >= config.max_depth:
            return
        for link in extract_links(url, html):
            if config.same_host_only and host_of(link) != seed_host:
                continue
            if link not in seen:
                seen.add(link)
                frontier.append((link, depth + 1))

    accept(seed, 0, raw)

    with ThreadPoolExecutor(max_workers=max(1, cfg.CRAWL_WORKERS)) as executor:
        while frontier and len(pages) < config.max_pages:
            # Never fetch more than could still be accepted
            batch_size = min(cfg.CRAWL_WORKERS, config.max_pages - len(pages), len(frontier))
            batch = [frontier.popleft() for _ in range(batch_size)]

            def fetch(item):
                url = item[0]
                try:
                    return fetch_page(url, session, config.delay_ms, cache_dir), None
                except (requests.RequestException, NotHtmlError) as e:
                    return None, e

            # map() keeps batch order, so acceptance order is sequential order
            for (url, depth), (content, error) in zip(batch, executor.map(fetch, batch)):
                if error is not None:
                    log_warning("[CRAWLER]", f"Skipping {url}: {error}")
                    continue
                log_debug("[CRAWLER]", f"Fetched {url} (depth {depth})")
                accept(url, depth, content)

    log_info("[CRAWLER]", f"Crawl finished with {len(pages)} pages")
    return pages
