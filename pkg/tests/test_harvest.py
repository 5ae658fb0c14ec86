from Corpus.page_loader import Page
from Harvest.candidates import CandidateUrl, extract_all, extract_candidates
from Harvest.features import (
    FeatureVector,
    api_convention,
    featurize,
    has_path_template,
    has_query_parameter,
)
from Harvest.prober import NOT_PROBED, ProbeCategory, ProbeResult, categorize, probe, probe_all


def _page(body, url="https://docs.example/guide.html", order=0):
    return Page(url, f"<html><body>{body}</body></html>", order)


def test_candidates_carry_context_flags():
    page = _page(
        '<p>See <a href="https://github.com/x/sdk">https://github.com/x/sdk</a>.</p>'
        "<pre><code>curl https://api.example.com/v1/items</code></pre>"
        '<pre>{"next": "https://api.example.com/v1/items?page=2"}</pre>'
        "<p>Status page: https://status.example.com today.</p>"
    )

    candidates = extract_candidates(page)

    assert candidates == [
        CandidateUrl("https://github.com/x/sdk", page.url, clickable=True),
        CandidateUrl("https://api.example.com/v1/items", page.url, in_code_tag=True),
        CandidateUrl("https://api.example.com/v1/items?page=2", page.url, within_json=True),
        CandidateUrl("https://status.example.com", page.url),
    ]


def test_only_a_code_ancestor_sets_the_code_flag():
    page = _page(
        "<pre>curl https://api.example.com/v1/pre</pre>"
        "<p>Type <kbd>https://api.example.com/v1/kbd</kbd> here.</p>"
        "<p>Call <code>https://api.example.com/v1/code</code> now.</p>"
    )

    flags = {c.raw: c.in_code_tag for c in extract_candidates(page)}

    assert flags == {
        "https://api.example.com/v1/pre": False,
        "https://api.example.com/v1/kbd": False,
        "https://api.example.com/v1/code": True,
    }


def test_hrefs_and_scripts_do_not_produce_candidates():
    page = _page(
        '<a href="https://hidden.example.com/x">read more</a>'
        '<script>fetch("https://api.example.com/v1/secret")</script>'
        "<style>body { background: url(https://cdn.example.com/bg.png); }</style>"
    )

    assert extract_candidates(page) == []


def test_same_url_in_same_context_is_reported_once():
    page = _page(
        "<p><code>https://api.example.com/v1/a</code></p>"
        "<p><code>https://api.example.com/v1/a</code></p>"
        "<p>https://api.example.com/v1/a</p>"
    )

    candidates = extract_candidates(page)

    assert [(c.raw, c.in_code_tag) for c in candidates] == [
        ("https://api.example.com/v1/a", True),
        ("https://api.example.com/v1/a", False),
    ]


def test_extract_all_follows_fetch_order():
    second = _page("<p>https://b.example.com/x</p>", "https://docs.example/b", 1)
    first = _page("<p>https://a.example.com/x</p>", "https://docs.example/a", 0)

    assert [c.raw for c in extract_all([second, first])] == [
        "https://a.example.com/x",
        "https://b.example.com/x",
    ]


def test_api_convention_counts():
    assert api_convention("https://api.example.com/v2/users") == 2
    assert api_convention("https://rest.example.com/api/version3/users") == 3
    assert api_convention("https://example.com/users/venus") == 0


def test_query_feature_reads_only_the_query_part():
    assert has_query_parameter("https://x.com/users?page=2")
    assert has_query_parameter("https://x.com/users?")
    assert not has_query_parameter("https://x.com/items/a=b")
    assert not has_query_parameter("https://x.com/users#page=2")

    candidate = CandidateUrl("https://api.x.com/items/a=b", "https://docs.x.com/")
    assert featurize(candidate, NOT_PROBED).query_parameter == 0


def test_path_template_markers():
    assert has_path_template("https://x.com/users/{id}")
    assert has_path_template("https://x.com/users/:id/posts")
    assert has_path_template("https://x.com/forecast/<city>")
    assert not has_path_template("https://x.com/users/alice")
    assert not has_path_template("https://x.com/users/{}")


def test_featurize_encodes_every_dimension():
    candidate = CandidateUrl(
        "https://docs.example/api/v1/users/{id}?verbose=1",
        "https://docs.example/index.html",
        clickable=True,
        in_code_tag=True,
        within_json=False,
    )

    features = featurize(candidate, ProbeResult(ProbeCategory.AUTH_ERROR))

    assert features == FeatureVector(
        clickable=1,
        code_tag=1,
        within_json=0,
        same_domain_with_doc_link=1,
        query_parameter=1,
        api_convention=2,
        path_template=1,
        probe_json=0,
        probe_auth=1,
        probe_other=0,
    )


def test_offline_pages_never_share_a_domain():
    candidate = CandidateUrl("https://api.example.com/v1", "file:///index.html")

    assert featurize(candidate, NOT_PROBED).same_domain_with_doc_link == 0


def test_probe_categories():
    assert categorize(200, '{"ok": true}').category is ProbeCategory.JSON_BODY
    assert categorize(401, "").category is ProbeCategory.AUTH_ERROR
    assert categorize(407, '{"error": 1}').category is ProbeCategory.AUTH_ERROR
    assert categorize(403, "Invalid certificate supplied").category is ProbeCategory.AUTH_ERROR
    assert categorize(200, "<html></html>").category is ProbeCategory.OTHER


def test_probe_is_opt_in_and_skips_templates(local_site):
    local_site.add("/v1/items", '{"items": []}', content_type="application/json")

    assert probe(local_site.url("/v1/items"), enabled=False) == NOT_PROBED
    assert probe(local_site.url("/v1/items/{id}"), enabled=True) == NOT_PROBED
    assert local_site.requests == []


def test_probe_all_against_live_server(local_site):
    local_site.add("/v1/items", '{"items": []}', content_type="application/json")
    local_site.add("/v1/private", "denied", content_type="text/plain", status=401)
    local_site.add("/about", "<p>about</p>")

    results = probe_all(
        [local_site.url("/v1/items"), local_site.url("/v1/private"), local_site.url("/about")],
        enabled=True,
    )

    assert results[local_site.url("/v1/items")].category is ProbeCategory.JSON_BODY
    assert results[local_site.url("/v1/private")].category is ProbeCategory.AUTH_ERROR
    assert results[local_site.url("/about")].category is ProbeCategory.OTHER


def test_unreachable_url_probes_as_other():
    assert probe("http://127.0.0.1:9/nothing", enabled=True).category is ProbeCategory.OTHER
