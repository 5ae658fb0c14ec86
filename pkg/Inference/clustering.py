import math
import os
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.api_types import PathSegment, PathTemplate, parameter
from Inference.paths import Path
from UI.console_handler import log_debug, log_info

"""
clustering.py

Path template inference. Paths invoking the same endpoint are grouped by
single-linkage agglomerative clustering with a strict distance threshold;
literal values found at parameter positions inside a cluster become known
parameter values, every occurrence of a known value is re-read as that
parameter, and clustering repeats until no new value appears.
"""


@dataclass(frozen=True)
class ClusteringConfig:
    threshold_T: float = cfg.CLUSTER_THRESHOLD
    param_discount: float = cfg.PARAM_DISCOUNT

    def __post_init__(self):
        if not self.threshold_T > 0:
            raise ValueError("threshold_T must be positive")
        if not 0 < self.param_discount < 1:
            raise ValueError("param_discount must lie in (0, 1)")


@dataclass(frozen=True)
class Cluster:
    members: Tuple[Path, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("cluster needs at least one member")
        if len({len(m.segments) for m in self.members}) != 1:
            raise ValueError("cluster members must have equal segment counts")

    def renderings(self) -> List[str]:
        return sorted(m.render() for m in self.members)


def dist_singles(
    s1: Sequence[PathSegment],
    s2: Sequence[PathSegment],
    param_discount: float = cfg.PARAM_DISCOUNT,
) -> float:
    """
    Distance between two segment lists: the segment count minus one point per
    equal literal position and param_discount per position where either side
    is a parameter. Lists of different lengths are infinitely far apart.
    """
    if len(s1) != len(s2):
        return math.inf
    equal_literals = 0
    parameters = 0
    for a, b in zip(s1, s2):
        if a.is_parameter or b.is_parameter:
            parameters += 1
        elif a.text == b.text:
            equal_literals += 1
    return len(s1) - (equal_literals + param_discount * parameters)


def cluster_dist(
    c1: Cluster, c2: Cluster, param_discount: float = cfg.PARAM_DISCOUNT
) -> float:
    """Single linkage: the smallest member-to-member distance."""
    return min(
        dist_singles(p1.segments, p2.segments, param_discount)
        for p1 in c1.members
        for p2 in c2.members
    )


def _dedup(paths: Sequence[Path]) -> List[Path]:
    by_rendering: Dict[str, Path] = {}
    for path in paths:
        by_rendering.setdefault(path.render(), path)
    return [by_rendering[key] for key in sorted(by_rendering)]


def hierarchical_clustering(
    paths: Sequence[Path], config: ClusteringConfig = ClusteringConfig()
) -> List[Cluster]:
    """
    Agglomerative single-linkage clustering. Starting from singletons, the
    closest pair of clusters is merged while its distance is strictly below
    config.threshold_T; equal distances are broken by the lexicographically
    smallest concatenation of member renderings.

    Only paths of equal length can ever merge, so every length group is
    clustered on its own.
    """
    by_length: Dict[int, List[Path]] = {}
    for path in _dedup(paths):
        by_length.setdefault(len(path.segments), []).append(path)

    clusters: List[Cluster] = []
    for length in sorted(by_length):
        clusters.extend(_cluster_group(by_length[length], config))
    clusters.sort(key=lambda c: c.renderings())
    log_debug("[TEMPLATES]", f"{len(paths)} paths grouped into {len(clusters)} clusters")
    return clusters


def _cluster_group(paths: List[Path], config: ClusteringConfig) -> List[Cluster]:
    groups: Dict[int, List[Path]] = {k: [p] for k, p in enumerate(paths)}
    # Cluster-to-cluster single-linkage distances, keyed by (smaller id, larger id)
    linkage: Dict[Tuple[int, int], float] = {}
    for i, j in combinations(range(len(paths)), 2):
        linkage[(i, j)] = dist_singles(paths[i].segments, paths[j].segments, config.param_discount)

    def key_of(k: int) -> str:
        return "".join(sorted(p.render() for p in groups[k]))

    def tie_key(pair: Tuple[int, int]) -> str:
        return "".join(sorted((key_of(pair[0]), key_of(pair[1]))))

    while len(groups) > 1:
        qualifying = [(d, pair) for pair, d in linkage.items() if d < config.threshold_T]
        if not qualifying:
            break
        best_distance = min(d for d, _ in qualifying)
        i, j = min((pair for d, pair in qualifying if d == best_distance), key=tie_key)
        log_debug(
            "[TEMPLATES]",
            f"Merging at distance {best_distance:.2f}: {groups[i][0].render()} + {groups[j][0].render()}",
        )

        groups[i] = groups[i] + groups.pop(j)
        for k in groups:
            if k == i:
                continue
            a = linkage.pop((min(j, k), max(j, k)))
            b = linkage[(min(i, k), max(i, k))]
            linkage[(min(i, k), max(i, k))] = min(a, b)
        del linkage[(i, j)]

    return [Cluster(tuple(sorted(g, key=lambda p: p.render()))) for g in groups.values()]


def infer_parameter_value(cluster: Cluster) -> Set[str]:
    """
    Literal texts found, within one cluster, at a position where another
    member has a parameter.
    """
    return set(parameter_bindings(cluster))


def parameter_bindings(cluster: Cluster) -> Dict[str, Optional[str]]:
    """
    Like infer_parameter_value, mapping each value to the documented name
    of the parameter it instantiates (None if only synthesized names).
    Conflicting documented names resolve to the smallest.
    """
    bindings: Dict[str, Optional[str]] = {}
    for path_param in cluster.members:
        for i, segment in enumerate(path_param.segments):
            if not segment.is_parameter:
                continue
            name = segment.text if segment.named else None
            for path in cluster.members:
                other = path.segments[i]
                if other.is_parameter:
                    continue
                known = bindings.get(other.text)
                if name is not None and (known is None or name < known):
                    bindings[other.text] = name
                else:
                    bindings.setdefault(other.text, known)
    return bindings


def annotate(path: Path, values: Dict[str, Optional[str]]) -> Path:
    """Re-reads every literal segment holding a known value as a parameter."""
    segments = []
    changed = False
    for i, segment in enumerate(path.segments):
        if not segment.is_parameter and segment.text in values:
            name = values[segment.text]
            segments.append(parameter(name or f"param{i}", named=name is not None))
            changed = True
        else:
            segments.append(segment)
    if not changed:
        return path
    return Path(tuple(segments), path.origin_page, path.origin_raw)


def merge_cluster(cluster: Cluster) -> PathTemplate:
    """
    Position-wise merge of a cluster into one template. A position is a
    parameter if any member has a parameter there; its name comes from the
    first member (in rendering order) that documents one, else param<i>.
    """
    members = sorted(cluster.members, key=lambda p: p.render())
    segments = []
    for i in range(len(members[0].segments)):
        column = [m.segments[i] for m in members]
        params = [s for s in column if s.is_parameter]
        if not params:
            segments.append(column[0])
            continue
        named = [s.text for s in params if s.named]
        if named:
            segments.append(parameter(named[0]))
        else:
            segments.append(parameter(f"param{i}", named=False))
    return PathTemplate(tuple(segments))


def iterate_templates(
    paths: Sequence[Path], config: ClusteringConfig = ClusteringConfig()
) -> List[PathTemplate]:
    """
    Infers path templates: annotate known values, cluster, learn new values,
    and repeat while the set of known values grows. One template per final
    cluster, deduplicated and sorted by rendering.
    """
    if not paths:
        raise ValueError("iterate_templates needs at least one path")

    values: Dict[str, Optional[str]] = {}
    rounds = 0
    while True:
        rounds += 1
        annotated = [annotate(p, values) for p in paths]
        clusters = hierarchical_clustering(annotated, config)

        learned: Dict[str, Optional[str]] = {}
        for cluster in clusters:
            for value, name in parameter_bindings(cluster).items():
                previous = learned.get(value)
                if value not in learned or (name is not None and (previous is None or name < previous)):
                    learned[value] = name
        new_values = set(learned) - set(values)
        if not new_values:
            break
        for value in sorted(new_values):
            values[value] = learned[value]
        log_debug("[TEMPLATES]", f"Round {rounds}: learned values {sorted(new_values)}")

    templates = {}
    for cluster in clusters:
        template = merge_cluster(cluster)
        templates.setdefault(template.render(), template)
    result = [templates[key] for key in sorted(templates)]
    log_info("[TEMPLATES]", f"{len(result)} path templates after {rounds} rounds")
    return result
