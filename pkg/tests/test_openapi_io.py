import json
import random

import pytest

from conftest import fixture_path
from Config import config as cfg
from Core.api_types import ApiSpec, BaseUrl, Endpoint, PathTemplate, literal, parameter
from Core.errors import SpecFormatError
from Core.url_tools import parse_segments, split_path
from SpecIO.openapi_io import emit, parse, read_spec, to_document, write_spec
from UI.console_handler import get_warnings

GITHUB = BaseUrl("https", "api.github.com")


def _endpoint(path, *methods):
    return Endpoint(PathTemplate(parse_segments(split_path(path))), frozenset(methods))


def test_emit_single_endpoint():
    spec = ApiSpec(GITHUB, (_endpoint("/users/{username}/orgs", "GET"),), "api.github.com docs")

    document = json.loads(emit(spec))

    assert document == {
        "swagger": "2.0",
        "info": {"title": "api.github.com docs", "version": "extracted"},
        "schemes": ["https"],
        "host": "api.github.com",
        "basePath": "/",
        "paths": {
            "/users/{username}/orgs": {
                "get": {
                    "parameters": [
                        {"in": "path", "name": "username", "required": True, "type": "string"}
                    ]
                }
            }
        },
    }


def test_emit_layout_is_sorted_and_indented():
    spec = ApiSpec(
        BaseUrl("https", "api.shelf.example", "/v1"),
        (_endpoint("/books", "POST", "GET"), _endpoint("/authors", "GET")),
    )

    text = emit(spec)

    assert text.endswith("}\n")
    assert text.startswith('{\n  "basePath": "/v1",\n  "host": "api.shelf.example",\n')
    assert text.index('"/authors"') < text.index('"/books"')
    assert text.index('"get"') < text.index('"post"')
    assert emit(spec) == text


def test_emit_empty_endpoint_set():
    assert to_document(ApiSpec(GITHUB))["paths"] == {}


def test_parse_apis_guru_style_document():
    spec = parse(
        json.dumps(
            {
                "swagger": "2.0",
                "schemes": ["https"],
                "host": "api.instagram.com",
                "basePath": "/v1",
                "info": {"title": "Instagram", "x-logo": {"url": "x"}},
                "paths": {"/media/{media-id}": {"get": {}, "parameters": []}},
            }
        )
    )

    assert spec.base.full == "https://api.instagram.com/v1"
    assert spec.endpoint_map() == {"/media/{media-id}": {"GET"}}
    assert spec.source == "Instagram"


def test_parse_defaults():
    spec = parse('{"host": "API.Example.com", "paths": {"/items/:id": {}, "/": {"get": {}}}}')

    assert spec.base == BaseUrl("https", "api.example.com", "")
    assert spec.endpoint_map() == {"/items/{id}": {cfg.DEFAULT_METHOD}}
    assert any("root path" in w for w in get_warnings("[SPEC_IO]"))


def test_parse_slack_fixture():
    spec = read_spec(fixture_path("slack_existing.json"))

    assert spec.base.full == "https://slack.com/api"
    assert spec.endpoint_map() == {"/users.list": {"GET"}}


def test_parse_merges_marker_spellings():
    spec = parse(
        '{"host": "x.com", "basePath": "/", '
        '"paths": {"/a/{id}": {"get": {}}, "/a/<id>": {"delete": {}, "x-extra": 1}}}'
    )

    assert spec.base.base_path == ""
    assert spec.endpoint_map() == {"/a/{id}": {"GET", "DELETE"}}


def test_parse_errors_carry_position():
    with pytest.raises(SpecFormatError) as missing_host:
        parse('{"paths": {}}')
    with pytest.raises(SpecFormatError) as broken:
        parse('{\n  "host": "x.com",\n  oops\n}')
    with pytest.raises(SpecFormatError):
        parse('{"host": "x.com"}')

    assert (missing_host.value.line, missing_host.value.column) == (1, 1)
    assert broken.value.line == 3
    assert broken.value.column == 3


def test_write_and_read_file(tmp_path):
    spec = ApiSpec(GITHUB, (_endpoint("/users/{username}/orgs", "GET", "POST"),), "docs")
    path = str(tmp_path / "spec.json")

    write_spec(spec, path)

    with open(path, "rb") as f:
        assert f.read() == emit(spec).encode("utf-8")
    assert read_spec(path) == spec


def _random_spec(rng):
    words = ["users", "repos", "items", "v2", "users.list", "a-b", "x_y", "42"]
    base = BaseUrl(
        rng.choice(["http", "https"]),
        rng.choice(["api.a.com", "b.io", "svc.c.net:8080"]),
        rng.choice(["", "/v1", "/api/v2"]),
    )
    endpoints = {}
    for _ in range(rng.randint(0, 6)):
        segments = tuple(
            parameter(rng.choice(["id", "name", "owner"])) if rng.random() < 0.3 else literal(rng.choice(words))
            for _ in range(rng.randint(1, 4))
        )
        methods = frozenset(rng.sample(cfg.HTTP_METHODS, rng.randint(1, 3)))
        template = PathTemplate(segments)
        endpoints.setdefault(template.render(), Endpoint(template, methods))
    ordered = tuple(endpoints[k] for k in sorted(endpoints))
    return ApiSpec(base, ordered, rng.choice(["", "docs", "Ünïcode docs"]))


def test_parse_inverts_emit_on_random_specs():
    rng = random.Random(5)
    for _ in range(200):
        spec = _random_spec(rng)

        parsed = parse(emit(spec))

        assert parsed.base == spec.base
        assert parsed.endpoint_map() == spec.endpoint_map()
        assert emit(parsed) == emit(spec)
