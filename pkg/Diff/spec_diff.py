import os
import sys
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Core.api_types import ApiSpec, BaseUrl, PathTemplate
from UI.console_handler import log_info


@dataclass(frozen=True)
class MethodMismatch:
    generated: PathTemplate
    existing: PathTemplate
    generated_methods: FrozenSet[str]
    existing_methods: FrozenSet[str]


@dataclass(frozen=True)
class DiffReport:
    """
    Outcome of comparing a generated spec with an existing one. Every
    generated template is either matched or generated_only, every existing
    template either matched or existing_only.
    """

    base_url_match: bool
    generated_base: str
    existing_base: str
    template_matches: Tuple[Tuple[PathTemplate, PathTemplate], ...] = field(default_factory=tuple)
    generated_only: Tuple[PathTemplate, ...] = field(default_factory=tuple)
    existing_only: Tuple[PathTemplate, ...] = field(default_factory=tuple)
    method_mismatches: Tuple[MethodMismatch, ...] = field(default_factory=tuple)
    # Endpoints are (template, method) pairs; matched ones share a matched
    # template pair and the method.
    generated_endpoints: int = 0
    existing_endpoints: int = 0
    matched_endpoints: int = 0

    @property
    def clean(self) -> bool:
        return (
            self.base_url_match
            and not self.generated_only
            and not self.existing_only
            and not self.method_mismatches
        )

    @property
    def template_precision(self) -> float:
        return _ratio(len(self.template_matches), len(self.template_matches) + len(self.generated_only))

    @property
    def template_recall(self) -> float:
        return _ratio(len(self.template_matches), len(self.template_matches) + len(self.existing_only))

    @property
    def endpoint_precision(self) -> float:
        return _ratio(self.matched_endpoints, self.generated_endpoints)

    @property
    def endpoint_recall(self) -> float:
        return _ratio(self.matched_endpoints, self.existing_endpoints)


def _ratio(hits: int, total: int) -> float:
    return hits / total if total else 0.0


def _base_key(base: BaseUrl) -> Tuple[str, str, str]:
    return base.scheme.lower(), base.host.lower(), base.base_path.rstrip("/")


def _by_shape(spec: ApiSpec) -> Dict[tuple, List]:
    groups: Dict[tuple, List] = {}
    for endpoint in sorted(spec.endpoints, key=lambda e: e.template.render()):
        groups.setdefault(endpoint.template.shape(), []).append(endpoint)
    return groups


def diff_specs(generated: ApiSpec, existing: ApiSpec) -> DiffReport:
    """
    Compares two specs. Templates match when they have the same literal
    segments and the same parameter positions; parameter names are ignored.
    Methods are compared for matched pairs only.
    """
    generated_groups = _by_shape(generated)
    existing_groups = _by_shape(existing)

    matches = []
    matched_endpoints = 0
    generated_only = []
    existing_only = []
    mismatches = []
    for shape in sorted(set(generated_groups) | set(existing_groups), key=repr):
        mine = generated_groups.get(shape, [])
        theirs = existing_groups.get(shape, [])
        for g, e in zip(mine, theirs):
            matches.append((g.template, e.template))
            matched_endpoints += len(g.methods & e.methods)
            if g.methods != e.methods:
                mismatches.append(MethodMismatch(g.template, e.template, g.methods, e.methods))
        generated_only.extend(g.template for g in mine[len(theirs):])
        existing_only.extend(e.template for e in theirs[len(mine):])

    def by_render(templates):
        return tuple(sorted(templates, key=lambda t: t.render()))

    report = DiffReport(
        base_url_match=_base_key(generated.base) == _base_key(existing.base),
        generated_base=generated.base.full,
        existing_base=existing.base.full,
        template_matches=tuple(sorted(matches, key=lambda p: (p[0].render(), p[1].render()))),
        generated_only=by_render(generated_only),
        existing_only=by_render(existing_only),
        method_mismatches=tuple(sorted(mismatches, key=lambda m: m.generated.render())),
        generated_endpoints=sum(len(e.methods) for e in generated.endpoints),
        existing_endpoints=sum(len(e.methods) for e in existing.endpoints),
        matched_endpoints=matched_endpoints,
    )
    log_info(
        "[DIFF]",
        f"{len(report.template_matches)} matched, {len(report.generated_only)} generated only, "
        f"{len(report.existing_only)} existing only, {len(report.method_mismatches)} method mismatches",
    )
    return report
