from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Optional, Tuple

# -------------------------------
# Value types shared by inference, serialization and diffing
# -------------------------------


class SegmentKind(Enum):
    LITERAL = "literal"
    PARAMETER = "parameter"


@dataclass(frozen=True)
class PathSegment:
    """
    One path segment: a literal value or a named parameter.
    `named` is False for parameters whose name was synthesized (param<i>).
    """

    kind: SegmentKind
    text: str
    named: bool = True

    def __post_init__(self):
        if not self.text:
            raise ValueError("path segment text must be nonempty")
        if self.kind is SegmentKind.LITERAL and "/" in self.text:
            raise ValueError(f"literal segment contains '/': {self.text!r}")

    @property
    def is_parameter(self) -> bool:
        return self.kind is SegmentKind.PARAMETER

    def render(self) -> str:
        return "{" + self.text + "}" if self.is_parameter else self.text


def literal(text: str) -> PathSegment:
    return PathSegment(SegmentKind.LITERAL, text)


def parameter(name: str, named: bool = True) -> PathSegment:
    return PathSegment(SegmentKind.PARAMETER, name, named)


def render_segments(segments) -> str:
    return "/" + "/".join(segment.render() for segment in segments)


@dataclass(frozen=True)
class PathTemplate:
    segments: Tuple[PathSegment, ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("path template needs at least one segment")

    def render(self) -> str:
        return render_segments(self.segments)

    def shape(self) -> Tuple[Optional[str], ...]:
        """Literal texts with None at parameter positions (names ignored)."""
        return tuple(None if s.is_parameter else s.text for s in self.segments)

    def parameter_names(self) -> Tuple[str, ...]:
        return tuple(s.text for s in self.segments if s.is_parameter)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class BaseUrl:
    scheme: str
    host: str
    base_path: str = ""

    def __post_init__(self):
        if self.base_path and (
            not self.base_path.startswith("/") or self.base_path.endswith("/")
        ):
            raise ValueError(f"malformed base path: {self.base_path!r}")

    @property
    def full(self) -> str:
        return f"{self.scheme}://{self.host}{self.base_path}"

    @property
    def path_segments(self) -> Tuple[str, ...]:
        return tuple(s for s in self.base_path.split("/") if s)

    def __str__(self):
        return self.full


@dataclass(frozen=True)
class Endpoint:
    template: PathTemplate
    methods: FrozenSet[str]

    def __post_init__(self):
        if not self.methods:
            raise ValueError(f"endpoint {self.template} has no methods")


@dataclass(frozen=True)
class ApiSpec:
    base: BaseUrl
    endpoints: Tuple[Endpoint, ...] = field(default_factory=tuple)
    source: str = ""

    def __post_init__(self):
        seen = set()
        for endpoint in self.endpoints:
            rendering = endpoint.template.render()
            if rendering in seen:
                raise ValueError(f"duplicate path template {rendering}")
            seen.add(rendering)

    def endpoint_map(self):
        """Canonical template rendering -> set of methods."""
        return {e.template.render(): set(e.methods) for e in self.endpoints}
