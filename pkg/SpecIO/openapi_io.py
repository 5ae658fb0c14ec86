import json
import os
import sys
from typing import Dict, Set

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.api_types import ApiSpec, BaseUrl, Endpoint, PathTemplate
from Core.errors import SpecFormatError
from Core.url_tools import normalize_url, parse_segments, split_path, strip_query
from UI.console_handler import log_debug, log_warning

# ---------------------------------------------------------------
# OpenAPI 2.0 shaped documents: swagger, schemes, host, basePath, info
# and paths. Operations are stubs carrying only path-parameter
# declarations.
# ---------------------------------------------------------------

SWAGGER_VERSION = "2.0"
INFO_VERSION = "extracted"


def _path_parameters(template: PathTemplate):
    return [
        {"in": "path", "name": name, "required": True, "type": "string"}
        for name in template.parameter_names()
    ]


def to_document(spec: ApiSpec) -> Dict:
    paths = {}
    for endpoint in spec.endpoints:
        parameters = _path_parameters(endpoint.template)
        operation = {"parameters": parameters} if parameters else {}
        paths[endpoint.template.render()] = {
            method.lower(): dict(operation) for method in endpoint.methods
        }
    return {
        "swagger": SWAGGER_VERSION,
        "info": {"title": spec.source, "version": INFO_VERSION},
        "schemes": [spec.base.scheme],
        "host": spec.base.host,
        "basePath": spec.base.base_path or "/",
        "paths": paths,
    }


def emit(spec: ApiSpec) -> str:
    """Serializes spec as sorted, two-space indented JSON with a trailing newline."""
    return json.dumps(to_document(spec), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _base_from_document(document: Dict) -> BaseUrl:
    host = document.get("host")
    if not isinstance(host, str) or not host.strip():
        raise SpecFormatError("document has no host", 1, 1)

    schemes = document.get("schemes") or ["https"]
    scheme = str(schemes[0]).lower() if isinstance(schemes, list) else "https"
    normalized = normalize_url(f"{scheme}://{host.strip()}")
    if normalized is None:
        raise SpecFormatError(f"unusable scheme/host {scheme}://{host}", 1, 1)

    base_segments = split_path(str(document.get("basePath") or ""))
    base_path = "/" + "/".join(base_segments) if base_segments else ""
    return BaseUrl(normalized.scheme, normalized.netloc, base_path)


def parse(text: str) -> ApiSpec:
    """
    Reads an OpenAPI 2.0 style document. Unknown keys are ignored; path
    parameters in any marker syntax become {name}; a path without method
    keys gets GET.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(document, dict):
        raise SpecFormatError("document is not a JSON object", 1, 1)

    base = _base_from_document(document)
    paths = document.get("paths")
    if paths is None:
        raise SpecFormatError("document has no paths", 1, 1)
    if not isinstance(paths, dict):
        raise SpecFormatError("paths is not an object", 1, 1)

    templates: Dict[str, PathTemplate] = {}
    methods: Dict[str, Set[str]] = {}
    for raw_path, operations in paths.items():
        raw_segments = split_path(strip_query(raw_path))
        if not raw_segments:
            log_warning("[SPEC_IO]", f"Skipping root path {raw_path!r}")
            continue
        template = PathTemplate(parse_segments(raw_segments))
        rendering = template.render()
        templates.setdefault(rendering, template)

        found = set()
        if isinstance(operations, dict):
            found = {key.upper() for key in operations if key.upper() in cfg.HTTP_METHODS}
        methods.setdefault(rendering, set()).update(found)

    endpoints = tuple(
        Endpoint(templates[r], frozenset(methods[r] or {cfg.DEFAULT_METHOD}))
        for r in sorted(templates)
    )
    info = document.get("info")
    source = info.get("title", "") if isinstance(info, dict) else ""
    log_debug("[SPEC_IO]", f"Parsed {len(endpoints)} path templates for {base.full}")
    return ApiSpec(base, endpoints, str(source or ""))


def read_spec(path: str) -> ApiSpec:
    with open(path, "r", encoding="utf-8") as f:
        return parse(f.read())


def write_spec(spec: ApiSpec, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(emit(spec))
