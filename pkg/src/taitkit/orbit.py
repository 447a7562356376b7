"""Canonical codes and flype-orbit search.

The canonical code of a diagram is the minimum, over all rooted
traversals, of a breadth-first relabeling code of the combinatorial map
together with per-crossing overstrand bits.  Two diagrams get equal codes
exactly when they are isomorphic as sphere maps with over/under data
under orientation-preserving isomorphism; mirror images are distinct
unless reflection is explicitly requested.

``flype_orbit`` closes a diagram under all flypes by breadth-first search
with node and depth limits, deduplicating by canonical code and checking
the invariant vector on every member.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum

from .diagram import (
    Diagram,
    mirror_diagram,
    writhe,
)
from .flype import FlypeSite, _require_preconditions, apply_flype, find_flype_sites
from .goeritz import chessboard_summaries


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Relabeling-invariant code of a diagram; ordered lexicographically."""

    bytes: tuple[int, ...]

    def to_json(self) -> list[int]:
        return list(self.bytes)

    def short(self) -> str:
        digest = hashlib.sha1(",".join(map(str, self.bytes)).encode())
        return "c" + digest.hexdigest()[:10]


def _rooted_code(d: Diagram, root: int) -> tuple[int, ...]:
    """Traversal code with the root dart's crossing first and its slot as
    the reference direction."""
    order: list[int] = [root >> 2]
    label = {root >> 2: 0}
    ref = {root >> 2: root & 3}
    code: list[int] = []
    i = 0
    while i < len(order):
        c = order[i]
        i += 1
        code.append(1 if d.is_over_dart(d.dart(c, ref[c])) else 0)
        for k in range(4):
            p = d.partner[d.dart(c, ref[c] + k)]
            c2, s2 = p >> 2, p & 3
            if c2 not in label:
                label[c2] = len(order)
                ref[c2] = s2
                order.append(c2)
            code.append(label[c2] * 4 + ((s2 - ref[c2]) % 4))
    return tuple(code)


def canonical_code(d: Diagram, include_reflection: bool = False) -> CanonicalCode:
    """Minimal rooted code over all starting darts; with
    ``include_reflection`` the mirror's codes compete too."""
    diagrams = [d]
    if include_reflection:
        diagrams.append(mirror_diagram(d))
    best: tuple[int, ...] | None = None
    for dd in diagrams:
        for root in range(dd.num_darts):
            code = _rooted_code(dd, root)
            if best is None or code < best:
                best = code
    assert best is not None
    return CanonicalCode(best)


def invariant_vector(d: Diagram) -> dict[str, int]:
    """The flype-invariant tuple shared by all members of an orbit."""
    b, w = chessboard_summaries(d)
    return {
        "crossing_number": d.n,
        "writhe": writhe(d),
        "slope_B": b.slope,
        "slope_W": w.slope,
        "beta1_B": b.beta1,
        "beta1_W": w.beta1,
        "determinant": abs(b.form.determinant()),
    }


@dataclass(frozen=True)
class OrbitReport:
    seeds: tuple[CanonicalCode, ...]
    members: tuple[CanonicalCode, ...]
    edges: tuple[tuple[CanonicalCode, CanonicalCode, FlypeSite], ...]
    invariants: dict[str, int]
    truncated: bool
    max_nodes: int
    max_depth: int

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "seeds": [c.to_json() for c in self.seeds],
            "members": [c.to_json() for c in self.members],
            "edges": [
                {"from": a.to_json(), "to": b.to_json(), "site": s.to_json()}
                for a, b, s in self.edges
            ],
            "invariants": self.invariants,
            "truncated": self.truncated,
            "limits": {"max_nodes": self.max_nodes, "max_depth": self.max_depth},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_dot(self) -> str:
        lines = ["graph flype_orbit {"]
        for code in self.members:
            lines.append(f'  "{code.short()}";')
        seen = set()
        for a, b, site in self.edges:
            key = tuple(sorted((a.short(), b.short()))) + (site.cut_edges,)
            if key in seen or a == b:
                continue
            seen.add(key)
            lines.append(
                f'  "{a.short()}" -- "{b.short()}"'
                f' [label="c{site.crossing}:{site.cut_edges[0]},{site.cut_edges[1]}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def flype_orbit(d: Diagram, max_nodes: int = 1000, max_depth: int = 100,
                include_reflection: bool = False) -> OrbitReport:
    """Breadth-first closure of the diagram under all flypes.

    ``include_reflection`` merges mirror-image members (exploratory only;
    the default keeps mirror images distinct).
    """

    def code_of(diagram: Diagram) -> CanonicalCode:
        return canonical_code(diagram, include_reflection=include_reflection)

    seed_code = code_of(d)
    invariants = invariant_vector(d)
    members: dict[CanonicalCode, Diagram] = {seed_code: d}
    edges: set[tuple[CanonicalCode, CanonicalCode, FlypeSite]] = set()
    frontier = [(seed_code, d)]
    depth = 0
    truncated = False
    while frontier and not truncated:
        if depth >= max_depth:
            truncated = True
            break
        next_frontier = []
        for code, diagram in frontier:
            for site in find_flype_sites(diagram):
                child = apply_flype(diagram, site)
                child_code = code_of(child)
                edges.add((code, child_code, site))
                if child_code in members:
                    continue
                if len(members) >= max_nodes:
                    truncated = True
                    continue
                child_inv = invariant_vector(child)
                if child_inv != invariants:
                    raise RuntimeError(
                        f"flype broke invariants: {invariants} -> {child_inv}")
                members[child_code] = child
                next_frontier.append((child_code, child))
        frontier = next_frontier
        depth += 1
    return OrbitReport(
        seeds=(seed_code,),
        members=tuple(sorted(members)),
        edges=tuple(sorted(edges, key=lambda e: (e[0], e[1], e[2].crossing,
                                                 e[2].cut_edges, e[2].side))),
        invariants=invariants,
        truncated=truncated,
        max_nodes=max_nodes,
        max_depth=max_depth,
    )


class Relation(Enum):
    RELATED = "related"
    NOT_RELATED_WITHIN = "not_related_within"
    DISTINGUISHED = "distinguished_by_invariant"


@dataclass(frozen=True)
class FlypeRelation:
    verdict: Relation
    invariant: str | None = None
    truncated: bool = False
    explored: int = 0

    @property
    def conclusive(self) -> bool:
        return self.verdict is not Relation.NOT_RELATED_WITHIN or not self.truncated

    def describe(self) -> str:
        if self.verdict is Relation.RELATED:
            return "Related"
        if self.verdict is Relation.DISTINGUISHED:
            return f"DistinguishedByInvariant({self.invariant})"
        scope = "truncated" if self.truncated else "exhaustive"
        return f"NotRelatedWithin({self.explored} diagrams, {scope})"


def is_flype_related(
    d1: Diagram, d2: Diagram, max_nodes: int = 10_000, max_depth: int = 1000
) -> FlypeRelation:
    """Decide flype-relatedness: invariant fast rejection, then orbit BFS.

    ``NOT_RELATED_WITHIN`` is definitive only when the orbit search
    completed without truncation.
    """
    _require_preconditions(d1)
    _require_preconditions(d2)
    inv1, inv2 = invariant_vector(d1), invariant_vector(d2)
    for key in inv1:
        if inv1[key] != inv2[key]:
            return FlypeRelation(Relation.DISTINGUISHED, invariant=key)
    target = canonical_code(d2)
    if canonical_code(d1) == target:
        return FlypeRelation(Relation.RELATED)
    report = flype_orbit(d1, max_nodes=max_nodes, max_depth=max_depth)
    if target in set(report.members):
        return FlypeRelation(Relation.RELATED)
    return FlypeRelation(Relation.NOT_RELATED_WITHIN, truncated=report.truncated,
                         explored=report.size)
