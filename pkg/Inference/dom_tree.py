import os
import sys
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

from bs4.element import Tag

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.html_text import element_text, is_skipped, parse_html

# Element tree of a documentation page. Text nodes belong to their element;
# <script>/<style> subtrees are left out. node_id is the preorder position
# and last_id the largest node_id inside the subtree, so ancestry is a
# range check.


@dataclass(eq=False)
class DomNode:
    tag: str
    node_id: int
    rendered_text: str = ""
    children: List["DomNode"] = field(default_factory=list)
    parent: Optional["DomNode"] = field(default=None, repr=False)
    last_id: int = 0

    def is_ancestor_of(self, other: "DomNode") -> bool:
        """Proper ancestor test."""
        return self.node_id < other.node_id <= self.last_id

    def contains(self, other: "DomNode") -> bool:
        """Ancestor-or-self test."""
        return self.node_id <= other.node_id <= self.last_id

    def index_in_parent(self) -> int:
        if self.parent is None:
            return 0
        return next(i for i, c in enumerate(self.parent.children) if c is self)

    def walk(self) -> Iterator["DomNode"]:
        """Preorder traversal."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


def build_dom(html: str) -> DomNode:
    """Parses a page into a DomNode tree rooted at the document node."""
    soup = parse_html(html)
    counter = [0]

    def build(element: Tag, parent: Optional[DomNode]) -> DomNode:
        node = DomNode(element.name, counter[0], element_text(element), parent=parent)
        counter[0] += 1
        for child in element.children:
            if isinstance(child, Tag) and not is_skipped(child):
                node.children.append(build(child, node))
        node.last_id = counter[0] - 1
        return node

    return build(soup, None)
