"""Crossing resolution: rewrite a matching as a sum of cup diagrams.

A crossing pair (a, c), (b, d) with a < b < c < d can be replaced either
by (a, b), (c, d) — the VV move — or by (a, d), (b, c) — the nested move.
Repeatedly resolving crossings produces a binary tree of matchings whose
leaves are crossing-free; the leaf multiset expands the root over the cup
diagram basis, and is independent of which crossing gets picked at each
node.  Both moves strictly decrease the number of crossings, so every
expansion terminates.

``witness_path`` constructs, for tableaux T and S with the top row of S
dominating the top row of T componentwise, one specific move sequence
taking the column matching of T to the cup diagram of S.  It peels cups
off from the right: with a the rightmost top entry of the current
T-fragment and b the rightmost top entry of the current S-fragment, the
arc (a, 2n) first absorbs VV moves against the arcs ending in (a, b]
(increasing), then nested moves against the arcs ending strictly between
b and 2n (decreasing).  That leaves the cup (b, b') isolated, where b' is
the next live dot after b; the cup is set aside and the procedure recurses
on the remaining dots.  A validated script certifies that the cup diagram
of S appears as a leaf for the column matching of T.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .diagrams import (
    CupDiagram,
    Crossing,
    Matching,
    column_matching,
    crossings,
    cup_of_tableau,
)
from .errors import DominanceError, SizeLimitError
from .young import StandardTableau

DEFAULT_NODE_BUDGET = 10**6


class MoveKind(enum.Enum):
    """The two smoothings of a crossing; ``label`` is the export name."""

    VV = "VV"
    NESTED = "V"

    @property
    def label(self) -> str:
        return self.value


@dataclass(frozen=True)
class Move:
    crossing: Crossing
    kind: MoveKind

    def to_json(self) -> dict:
        return {
            "left": list(self.crossing.left),
            "right": list(self.crossing.right),
            "kind": self.kind.label,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Move":
        kind = MoveKind(data["kind"])
        return cls(Crossing(tuple(data["left"]), tuple(data["right"])), kind)


Strategy = Union[str, Sequence[int], Callable[[Matching, list[Crossing]], Crossing]]


def resolve_step(m: Matching, crossing: Crossing, kind: MoveKind) -> Matching:
    """Replace the two arcs of ``crossing`` by the chosen smoothing."""
    arcset = set(m.arcs)
    if crossing.left not in arcset or crossing.right not in arcset:
        raise ValueError(f"{crossing} is not a crossing of {m!r}")
    a, b, c, d = crossing.dots()
    rest = [arc for arc in m.arcs if arc != crossing.left and arc != crossing.right]
    if kind is MoveKind.VV:
        rest += [(a, b), (c, d)]
    else:
        rest += [(a, d), (b, c)]
    return Matching(rest)


def _pick(strategy: Strategy, m: Matching, found: list[Crossing],
          counter: int) -> Crossing:
    if strategy == "first":
        return found[0]
    if callable(strategy):
        choice = strategy(m, found)
        if choice not in found:
            raise ValueError("strategy returned a non-crossing")
        return choice
    if isinstance(strategy, str) or not strategy:
        raise ValueError(f"unknown strategy {strategy!r}")
    return found[strategy[counter % len(strategy)] % len(found)]


@dataclass
class ResolutionGraph:
    """The full expansion tree of one matching.

    Nodes are occurrences, not deduplicated matchings: the same matching
    may appear several times, and leaf multiplicity is what carries the
    expansion coefficients.  Node 0 is the root; every internal node has
    exactly one VV edge and one nested edge resolving the same crossing.
    """

    root: Matching
    nodes: list[Matching]
    edges: list[tuple[int, Move, int]]

    def sink_indices(self) -> list[int]:
        internal = {src for src, _, _ in self.edges}
        return [k for k in range(len(self.nodes)) if k not in internal]

    def sink_multiset(self) -> dict[CupDiagram, int]:
        counts: dict[CupDiagram, int] = {}
        for k in self.sink_indices():
            w = CupDiagram(self.nodes[k].arcs)
            counts[w] = counts.get(w, 0) + 1
        return counts


def build_resolution_graph(
    m: Matching,
    strategy: Strategy = "first",
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ResolutionGraph:
    """Expand ``m`` by both moves on one strategy-chosen crossing per node."""
    nodes = [m]
    edges: list[tuple[int, Move, int]] = []
    queue = deque([0])
    expansions = 0
    while queue:
        k = queue.popleft()
        found = crossings(nodes[k])
        if not found:
            continue
        chosen = _pick(strategy, nodes[k], found, expansions)
        expansions += 1
        for kind in (MoveKind.VV, MoveKind.NESTED):
            child = resolve_step(nodes[k], chosen, kind)
            if len(nodes) >= node_budget:
                raise SizeLimitError(
                    f"resolution graph exceeded {node_budget} nodes"
                )
            nodes.append(child)
            edges.append((k, Move(chosen, kind), len(nodes) - 1))
            queue.append(len(nodes) - 1)
    return ResolutionGraph(m, nodes, edges)


_FIRST_CACHE: dict[tuple, tuple[tuple[tuple, int], ...]] = {}


def _resolve_first(m: Matching, budget: list[int]) -> tuple[tuple[tuple, int], ...]:
    # Leaf counts for the deterministic leftmost-crossing strategy.  The
    # choice depends only on the matching, so results can be shared across
    # occurrences instead of walking the whole occurrence tree.
    cached = _FIRST_CACHE.get(m.arcs)
    if cached is not None:
        return cached
    found = crossings(m)
    if not found:
        result: tuple = ((m.arcs, 1),)
    else:
        budget[0] -= 1
        if budget[0] < 0:
            raise SizeLimitError("resolution exceeded its node budget")
        counts: dict[tuple, int] = {}
        for kind in (MoveKind.VV, MoveKind.NESTED):
            child = resolve_step(m, found[0], kind)
            for arcs, mult in _resolve_first(child, budget):
                counts[arcs] = counts.get(arcs, 0) + mult
        result = tuple(sorted(counts.items()))
    _FIRST_CACHE[m.arcs] = result
    return result


def resolve_full(
    m: Matching,
    strategy: Strategy = "first",
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict[CupDiagram, int]:
    """Expansion of ``m`` over cup diagrams: sink -> multiplicity."""
    if strategy == "first":
        return {
            CupDiagram(arcs): mult
            for arcs, mult in _resolve_first(m, [node_budget])
        }
    return build_resolution_graph(m, strategy, node_budget).sink_multiset()


def witness_path(t: StandardTableau, s: StandardTableau) -> list[Move]:
    """A move script from the column matching of ``t`` to the cup diagram of ``s``.

    Requires the top row of ``s`` to dominate the top row of ``t``
    componentwise.  Every move in the script resolves a genuine crossing
    of the current matching, and folding the script with ``resolve_step``
    ends exactly at ``cup_of_tableau(s)``.
    """
    if t.n != s.n:
        raise ValueError("tableaux must have the same n")
    for j, (a, b) in enumerate(zip(s.top, t.top)):
        if a < b:
            raise DominanceError(
                j + 1,
                f"top row of S must dominate top row of T; "
                f"column {j + 1} has {a} < {b}",
            )
    target = cup_of_tableau(s)
    cur: Matching = column_matching(t.columns())
    active = set(range(1, 2 * t.n + 1))
    moves: list[Move] = []
    level = 0
    while active:
        level += 1
        top_dot = max(active)
        live_lefts = [x for x, y in cur.arcs if x in active and y in active]
        a = max(live_lefts)
        if cur.partner(top_dot) != a:
            raise RuntimeError(
                f"witness construction failed at level {level}: "
                f"dot {top_dot} is not matched to the rightmost left endpoint {a}"
            )
        b = max(x for x, y in target.arcs if x in active and y in active)
        # Phase 1: VV against the arcs ending in (a, b], nearest first.
        for r in sorted(d for d in active if a < d <= b):
            left_arc = (cur.partner(r), r)
            long_arc = (cur.partner(top_dot), top_dot)
            move = Move(Crossing(left_arc, long_arc), MoveKind.VV)
            cur = resolve_step(cur, move.crossing, move.kind)
            moves.append(move)
        # Phase 2: nested against the arcs ending strictly after b, farthest first.
        for r in sorted((d for d in active if b < d < top_dot), reverse=True):
            left_arc = (cur.partner(r), r)
            long_arc = (b, cur.partner(b))
            move = Move(Crossing(left_arc, long_arc), MoveKind.NESTED)
            cur = resolve_step(cur, move.crossing, move.kind)
            moves.append(move)
        b_next = min(d for d in active if d > b)
        if cur.partner(b) != b_next or target.partner(b) != b_next:
            raise RuntimeError(
                f"witness construction failed at level {level}: "
                f"cup ({b},{b_next}) did not isolate"
            )
        active -= {b, b_next}
    if cur != Matching(target.arcs):
        raise RuntimeError("witness script did not end at the target diagram")
    return moves


def check_witness(
    t: StandardTableau, s: StandardTableau, script: Sequence[Move]
) -> bool:
    """True iff the script is step-by-step valid and lands on the cup of ``s``."""
    try:
        cur: Matching = column_matching(t.columns())
        for move in script:
            cur = resolve_step(cur, move.crossing, move.kind)
        return cur == Matching(cup_of_tableau(s).arcs)
    except ValueError:
        return False


def resolution_graph_dot(graph: ResolutionGraph) -> str:
    """DOT text for a resolution tree; nodes carry arc lists."""
    lines = ["digraph resolution {", "  rankdir=TB;"]
    for k, node in enumerate(graph.nodes):
        label = "".join(f"({a},{b})" for a, b in node.arcs)
        lines.append(f'  n{k} [label="{label}"];')
    for src, move, dst in graph.edges:
        lines.append(f'  n{src} -> n{dst} [label="{move.kind.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sinks_to_json(n2: int, sinks: dict[CupDiagram, int]) -> dict:
    return {
        "n2": n2,
        "sinks": [
            {"arcs": [list(arc) for arc in w.arcs], "multiplicity": mult}
            for w, mult in sorted(sinks.items(), key=lambda kv: kv[0].arcs)
        ],
    }
