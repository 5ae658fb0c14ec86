from Core.api_types import BaseUrl, PathTemplate
from Core.url_tools import parse_segments, split_path
from Corpus.page_loader import Page
from Inference.dom_tree import build_dom
from Inference.methods import (
    DescriptionBlock,
    derive_endpoints,
    extract_methods,
    locate_blocks,
    locate_description_block,
    template_matches,
)

GITHUB = BaseUrl("https", "api.github.com")
SHELF = BaseUrl("https", "api.shelf.example", "/v1")


def _template(text):
    return PathTemplate(parse_segments(split_path(text)))


def _html(body):
    return f"<html><head><title>t</title></head><body>{body}</body></html>"


def _block(text):
    return DescriptionBlock(_template("/x"), text, frozenset())


def test_template_matches_absolute_and_relative_tokens():
    repos = _template("/users/{username}/repos")

    assert template_matches("https://api.github.com/users/alice/repos", repos, GITHUB)
    assert template_matches("https://api.github.com/users/{user}/repos?page=2", repos, GITHUB)
    assert template_matches("/users/alice/repos", repos, GITHUB)
    assert not template_matches("https://api.github.com/users/alice", repos, GITHUB)
    assert not template_matches("https://example.com/users/alice/repos", repos, GITHUB)
    assert not template_matches("/users/alice/gists", repos, GITHUB)


def test_template_matches_under_a_base_path():
    book = _template("/books/{bookId}")

    assert template_matches("https://api.shelf.example/v1/books/7", book, SHELF)
    assert template_matches("/v1/books/7", book, SHELF)
    assert template_matches("/books/7", book, SHELF)
    assert not template_matches("https://api.shelf.example/v2/books/7", book, SHELF)


def test_dom_tree_leaves_out_scripts_and_numbers_in_preorder():
    root = build_dom(_html("<div><p>a</p><script>x()</script><p>b</p></div>"))

    tags = [n.tag for n in root.walk()]
    assert "script" not in tags and "head" not in tags
    assert [n.node_id for n in root.walk()] == list(range(len(tags)))
    div = next(n for n in root.walk() if n.tag == "div")
    assert [c.tag for c in div.children] == ["p", "p"]
    assert div.contains(div.children[1]) and not div.children[0].contains(div)
    assert div.last_id == div.children[1].node_id


def test_block_takes_siblings_and_parent():
    book = _template("/books/{bookId}")
    dom = build_dom(
        _html(
            "<section><h2>Books</h2></section>"
            "<div><p>Fetch with GET.</p>"
            "<code>https://api.shelf.example/v1/books/7</code>"
            "<p>Remove with DELETE.</p></div>"
        )
    )

    block = locate_description_block(dom, book, SHELF, page_url="file:///books.html")

    assert "Fetch with GET." in block.text
    assert "Remove with DELETE." in block.text
    assert "Books" not in block.text
    assert block.source_pages == frozenset({"file:///books.html"})
    assert extract_methods(block) == {"GET", "DELETE"}


def test_neighbouring_gray_nodes_bound_each_other():
    listing = _template("/books")
    single = _template("/books/{bookId}")
    dom = build_dom(
        _html(
            "<div>"
            "<p>List with GET.</p>"
            "<code>/books</code>"
            "<p>Create with POST.</p>"
            "<code>/books/{bookId}</code>"
            "<p>Replace with PUT.</p>"
            "</div>"
        )
    )

    blocks = locate_blocks(dom, [listing, single], SHELF)

    assert blocks[listing] == ["List with GET.\n/books\nCreate with POST."]
    assert blocks[single] == ["/books/{bookId}\nReplace with PUT."]
    assert extract_methods(_block(blocks[listing][0])) == {"GET", "POST"}
    assert extract_methods(_block(blocks[single][0])) == {"PUT"}


def test_absent_template_has_no_block():
    dom = build_dom(_html("<p>nothing to see</p>"))

    assert locate_description_block(dom, _template("/books"), SHELF) is None
    assert extract_methods(None) == {"GET"}


def test_method_names_are_case_sensitive_words():
    assert extract_methods(_block("get the book, then post it")) == {"GET"}
    assert extract_methods(_block("GETTER and POSTAL codes")) == {"GET"}
    assert extract_methods(_block("Send POST or PUT.")) == {"POST", "PUT"}
    assert extract_methods(_block("PATCH, HEAD and OPTIONS")) == {"PATCH", "HEAD", "OPTIONS"}


def test_derive_endpoints_combines_pages():
    listing = _template("/books")
    single = _template("/books/{bookId}")
    orphan = _template("/shelves")
    pages = [
        Page("file:///b.html", _html("<div><p>POST creates a book.</p><code>/books</code></div>"), 1),
        Page("file:///a.html", _html("<div><p>GET lists books.</p><code>/v1/books</code></div>"), 0),
        Page("file:///c.html", _html("<div><pre>/books/{id}</pre><p>see above</p></div>"), 2),
    ]

    endpoints = derive_endpoints(pages, [listing, single, orphan], SHELF)

    assert [(e.template.render(), set(e.methods)) for e in endpoints] == [
        ("/books", {"GET", "POST"}),
        ("/books/{bookId}", {"GET"}),
        ("/shelves", {"GET"}),
    ]
