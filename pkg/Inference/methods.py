import os
import re
import sys
from bisect import bisect_right
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.api_types import BaseUrl, Endpoint, PathTemplate
from Core.url_tools import find_absolute_urls, find_relative_paths, split_path, strip_query
from Corpus.page_loader import Page
from Inference.dom_tree import DomNode, build_dom
from Inference.paths import residual_segments
from UI.console_handler import log_debug, log_info

"""
methods.py

HTTP method extraction. Every template occurrence in a page marks the deepest
element containing it (a "gray node"). The description block of a gray node
grows over its siblings, closest first on the left then on the right, and
finally takes in its parent, stopping where it would reach another gray node.
Method names are read from the combined blocks of a template; GET when none.
"""

METHOD_RE = re.compile(r"\b(" + "|".join(cfg.HTTP_METHODS) + r")\b")


@dataclass(frozen=True)
class DescriptionBlock:
    template: PathTemplate
    text: str
    source_pages: FrozenSet[str]


def _segments_match(raw_segments: Sequence[str], template: PathTemplate) -> bool:
    if len(raw_segments) != len(template.segments):
        return False
    for raw, segment in zip(raw_segments, template.segments):
        if not raw:
            return False
        if not segment.is_parameter and raw != segment.text:
            return False
    return True


def template_matches(text_token: str, template: PathTemplate, base: BaseUrl) -> bool:
    """
    True if the token denotes the template: absolute URLs after base-URL
    truncation, relative paths as written or without a leading base path.
    Parameter positions accept any nonempty segment.
    """
    if "://" in text_token:
        residual = residual_segments(text_token, base)
        return residual is not None and _segments_match(residual, template)

    raw_segments = split_path(strip_query(text_token))
    if _segments_match(raw_segments, template):
        return True
    prefix = list(base.path_segments)
    if prefix and raw_segments[: len(prefix)] == prefix:
        return _segments_match(raw_segments[len(prefix):], template)
    return False


def _tokens(text: str) -> List[str]:
    return [t.text for t in find_absolute_urls(text)] + [t.text for t in find_relative_paths(text)]


def _gray_nodes(
    root: DomNode, templates: Sequence[PathTemplate], base: BaseUrl
) -> Dict[int, Tuple[DomNode, Set[int]]]:
    """
    node_id -> (node, indices of the templates it is gray for). A node is
    gray for a template when its text holds a matching token and no
    descendant's text does.
    """
    token_cache: Dict[str, Set[int]] = {}

    def matched(node: DomNode) -> Set[int]:
        hits = set()
        for token in _tokens(node.rendered_text):
            if token not in token_cache:
                token_cache[token] = {
                    k for k, t in enumerate(templates) if template_matches(token, t, base)
                }
            hits |= token_cache[token]
        return hits

    nodes = list(root.walk())
    hits_by_node = [matched(node) for node in nodes]
    # Preorder ids of the nodes matching each template, ascending
    matching_ids: Dict[int, List[int]] = {}
    for node, hits in zip(nodes, hits_by_node):
        for k in hits:
            matching_ids.setdefault(k, []).append(node.node_id)

    gray: Dict[int, Tuple[DomNode, Set[int]]] = {}
    for node, hits in zip(nodes, hits_by_node):
        deepest = set()
        for k in hits:
            ids = matching_ids[k]
            nxt = bisect_right(ids, node.node_id)
            if nxt == len(ids) or ids[nxt] > node.last_id:
                deepest.add(k)
        if deepest:
            gray[node.node_id] = (node, deepest)
    return gray


def _expand(
    gray_node: DomNode, others: List[DomNode], claimed: Set[int]
) -> List[DomNode]:
    """Nodes of one gray node's description block, in document order."""
    included = [gray_node]
    parent = gray_node.parent
    if parent is None:
        return included

    def blocks_others(node: DomNode) -> bool:
        return any(node.contains(o) for o in others)

    siblings = parent.children
    n = gray_node.index_in_parent()
    order = list(range(n - 1, -1, -1)) + list(range(n + 1, len(siblings)))
    blocked_left = blocked_right = False
    for k in order:
        sibling = siblings[k]
        if (k < n and blocked_left) or (k > n and blocked_right):
            continue
        if blocks_others(sibling):
            # Abort: reaching another gray node ends the whole expansion
            return sorted(included, key=lambda d: d.node_id)
        if sibling.node_id in claimed:
            if k < n:
                blocked_left = True
            else:
                blocked_right = True
            continue
        included.append(sibling)

    if not any(parent.is_ancestor_of(o) for o in others) and parent.node_id not in claimed:
        return [parent]
    return sorted(included, key=lambda d: d.node_id)


def locate_blocks(
    page_dom: DomNode, templates: Sequence[PathTemplate], base: BaseUrl
) -> Dict[PathTemplate, List[str]]:
    """
    Description-block texts of every template on one page, in document
    order. Blocks of distinct gray nodes never share a node.
    """
    gray = _gray_nodes(page_dom, templates, base)
    gray_nodes = [gray[k][0] for k in sorted(gray)]
    claimed: Set[int] = set()
    texts: Dict[PathTemplate, List[str]] = {}

    for node in gray_nodes:
        others = [o for o in gray_nodes if o is not node]
        block = _expand(node, others, claimed)
        claimed.update(d.node_id for d in block)
        text = "\n".join(d.rendered_text for d in block)
        for k in sorted(gray[node.node_id][1]):
            texts.setdefault(templates[k], []).append(text)
    return texts


def locate_description_block(
    page_dom: DomNode,
    template: PathTemplate,
    base: BaseUrl,
    all_templates: Optional[Sequence[PathTemplate]] = None,
    page_url: str = "",
) -> Optional[DescriptionBlock]:
    """
    Description block of template on one page, or None when the template
    occurs nowhere on it. all_templates, when given, are the templates whose
    occurrences bound the expansion.
    """
    templates = list(all_templates) if all_templates else [template]
    if template not in templates:
        templates.append(template)
    texts = locate_blocks(page_dom, templates, base).get(template)
    if not texts:
        return None
    return DescriptionBlock(template, "\n".join(texts), frozenset({page_url}) if page_url else frozenset())


def extract_methods(block: Optional[DescriptionBlock]) -> FrozenSet[str]:
    """Uppercase method names in the block text; {GET} when there are none."""
    if block is None:
        return frozenset({cfg.DEFAULT_METHOD})
    found = frozenset(METHOD_RE.findall(block.text))
    return found or frozenset({cfg.DEFAULT_METHOD})


def collect_blocks(
    pages: Sequence[Page], templates: Sequence[PathTemplate], base: BaseUrl
) -> Dict[PathTemplate, DescriptionBlock]:
    """Blocks of each template combined over all pages, in fetch_order."""
    texts: Dict[PathTemplate, List[str]] = {}
    sources: Dict[PathTemplate, Set[str]] = {}
    for page in sorted(pages, key=lambda p: p.fetch_order):
        for template, page_texts in locate_blocks(build_dom(page.html), templates, base).items():
            texts.setdefault(template, []).extend(page_texts)
            sources.setdefault(template, set()).add(page.url)
    return {
        t: DescriptionBlock(t, "\n".join(texts[t]), frozenset(sources[t])) for t in texts
    }


def derive_endpoints(
    pages: Sequence[Page], templates: Sequence[PathTemplate], base: BaseUrl
) -> List[Endpoint]:
    """One endpoint per template with the methods its description names."""
    blocks = collect_blocks(pages, templates, base)
    endpoints = []
    for template in templates:
        block = blocks.get(template)
        methods = extract_methods(block)
        if block is None:
            log_debug("[METHODS]", f"{template.render()} has no description block; using GET")
        else:
            log_debug("[METHODS]", f"{template.render()}: {sorted(methods)}")
        endpoints.append(Endpoint(template, methods))
    log_info("[METHODS]", f"{sum(len(e.methods) for e in endpoints)} endpoints from {len(templates)} templates")
    return endpoints
