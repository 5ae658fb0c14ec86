from bisect import bisect_right
from dataclasses import dataclass, field
from typing import List, Tuple

from bs4 import BeautifulSoup
from bs4.element import (
    CData,
    Comment,
    Declaration,
    Doctype,
    NavigableString,
    ProcessingInstruction,
    Tag,
)

# ---------------------------------------------------------------
# "Rendered text" of a documentation page: the text a reader sees,
# with <script>/<style> subtrees removed. Block-level elements are
# separated by a newline so that tokens never run across paragraphs,
# while inline markup (<a>, <code>, <b>, ...) joins seamlessly.
# ---------------------------------------------------------------

SKIPPED_TAGS = {"script", "style", "template", "head"}

INLINE_TAGS = {
    "a", "abbr", "b", "bdi", "bdo", "cite", "code", "data", "dfn", "em", "i",
    "kbd", "mark", "q", "s", "samp", "small", "span", "strong", "sub", "sup",
    "time", "tt", "u", "var", "wbr", "font",
}

_NON_TEXT = (Comment, Declaration, Doctype, ProcessingInstruction, CData)


def parse_html(html: str) -> BeautifulSoup:
    """Parses HTML with the standard (error-repairing) tree construction."""
    return BeautifulSoup(html, "html5lib")


def is_skipped(tag: Tag) -> bool:
    return tag.name in SKIPPED_TAGS


def is_text(node) -> bool:
    return isinstance(node, NavigableString) and not isinstance(node, _NON_TEXT)


@dataclass
class RenderedText:
    """Rendered text plus, for every text node, the span it occupies."""

    text: str = ""
    spans: List[Tuple[int, int, NavigableString]] = field(default_factory=list)

    def node_at(self, offset: int):
        """Text node covering offset (None if offset falls on a separator)."""
        index = bisect_right([span[0] for span in self.spans], offset) - 1
        if index >= 0 and offset < self.spans[index][1]:
            return self.spans[index][2]
        return None


def render_with_spans(root) -> RenderedText:
    """Renders root and remembers which text node produced each character."""
    pieces = []
    spans = []
    length = 0

    def emit(text, node=None):
        nonlocal length
        if not text:
            return
        if node is not None:
            spans.append((length, length + len(text), node))
        pieces.append(text)
        length += len(text)

    def walk(node):
        for child in node.children:
            if is_text(child):
                emit(str(child), child)
            elif isinstance(child, Tag):
                if is_skipped(child):
                    continue
                if child.name == "br":
                    emit("\n")
                    continue
                block = child.name not in INLINE_TAGS
                if block:
                    emit("\n")
                walk(child)
                if block:
                    emit("\n")

    walk(root)
    return RenderedText("".join(pieces), spans)


def element_text(element: Tag) -> str:
    """Rendered text of a single element."""
    return render_with_spans(element).text
