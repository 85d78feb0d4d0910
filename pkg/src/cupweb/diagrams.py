"""Perfect matchings of 2n dots on a line, with arcs drawn below the axis.

A matching is stored as its canonical arc list: pairs (left, right) sorted
by left endpoint.  Two arcs (a, c) and (b, d) cross when a < b < c < d;
a cup diagram is a matching with no crossings.  Dots are numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .young import StandardTableau


class Matching:
    """An involution on {1..2n} without fixed points, kept in arc-list form."""

    __slots__ = ("arcs", "_partner")

    def __init__(self, arcs: Iterable[Sequence[int]]):
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in arcs))
        dots = [d for arc in canon for d in arc]
        n2 = 2 * len(canon)
        if sorted(dots) != list(range(1, n2 + 1)):
            raise ValueError("arcs must cover each dot 1..2n exactly once")
        object.__setattr__(self, "arcs", canon)
        object.__setattr__(self, "_partner", None)

    @property
    def n2(self) -> int:
        return 2 * len(self.arcs)

    def partner(self, dot: int) -> int:
        table = self._partner
        if table is None:
            table = {}
            for a, b in self.arcs:
                table[a] = b
                table[b] = a
            object.__setattr__(self, "_partner", table)
        return table[dot]

    def left_endpoints(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.arcs)

    def has_arc(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in set(self.arcs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matching) and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash(self.arcs)

    def __repr__(self) -> str:
        body = "".join(f"({a},{b})" for a, b in self.arcs)
        return f"{type(self).__name__}[{body}]"

    def to_json(self) -> dict:
        return {"n2": self.n2, "arcs": [list(arc) for arc in self.arcs]}

    @classmethod
    def from_json(cls, data: dict) -> "Matching":
        m = cls(data["arcs"])
        if "n2" in data and data["n2"] != m.n2:
            raise ValueError("n2 field disagrees with the arc list")
        return m


class CupDiagram(Matching):
    """A matching without crossings."""

    __slots__ = ()

    def __init__(self, arcs: Iterable[Sequence[int]]):
        super().__init__(arcs)
        if not is_noncrossing(self):
            raise ValueError(f"{self.arcs} has a crossing")


@dataclass(frozen=True)
class Crossing:
    """An ordered pair of crossing arcs: (a, c) and (b, d) with a < b < c < d."""

    left: tuple[int, int]
    right: tuple[int, int]

    def __post_init__(self):
        a, c = self.left
        b, d = self.right
        if not a < b < c < d:
            raise ValueError(f"arcs {self.left}, {self.right} do not cross")

    def dots(self) -> tuple[int, int, int, int]:
        return (self.left[0], self.right[0], self.left[1], self.right[1])


def crossings(m: Matching) -> list[Crossing]:
    """All crossing arc pairs, sorted by (left arc, right arc)."""
    found = []
    for i, (a, c) in enumerate(m.arcs):
        for b, d in m.arcs[i + 1:]:
            if a < b < c < d:
                found.append(Crossing((a, c), (b, d)))
    return found


def is_noncrossing(m: Matching) -> bool:
    for i, (a, c) in enumerate(m.arcs):
        for b, d in m.arcs[i + 1:]:
            if a < b < c < d:
                return False
    return True


def cup_of_tableau(tableau: StandardTableau) -> CupDiagram:
    """The unique cup diagram whose left endpoints are the top row.

    Scans dots left to right: a top-row entry opens an arc, a bottom-row
    entry closes the most recently opened one.
    """
    top = set(tableau.top)
    stack: list[int] = []
    arcs = []
    for d in range(1, 2 * tableau.n + 1):
        if d in top:
            stack.append(d)
        else:
            arcs.append((stack.pop(), d))
    return CupDiagram(arcs)


def tableau_of_cup(w: Matching) -> StandardTableau:
    """Inverse of ``cup_of_tableau``; rejects matchings with crossings."""
    if not is_noncrossing(w):
        raise ValueError("matching has a crossing; no tableau corresponds to it")
    return StandardTableau(
        tuple(sorted(a for a, _ in w.arcs)), tuple(sorted(b for _, b in w.arcs))
    )


def column_matching(columns: Iterable[Sequence[int]]) -> Matching:
    """The matching joining the two entries of each column.

    Accepts the column list of any two-row filling whose entries are a
    permutation of 1..2n; for a standard tableau pass ``t.columns()``.
    """
    return Matching(columns)


def swap_dots(m: Matching, i: int) -> Matching:
    """Exchange the dots i and i+1.  They must not be joined to each other."""
    if not 1 <= i <= m.n2 - 1:
        raise ValueError(f"dot index {i} out of range for n2={m.n2}")
    if m.partner(i) == i + 1:
        raise ValueError(f"dots {i} and {i + 1} are joined by one arc")
    swap = {i: i + 1, i + 1: i}
    return Matching((swap.get(a, a), swap.get(b, b)) for a, b in m.arcs)


_CELL = 3  # characters per dot column in ASCII renderings


def _dot_column(dot: int) -> int:
    return (dot - 1) * _CELL


def render_ascii(m: Matching) -> str:
    """Multi-line picture; arcs that would overlap go on deeper lines."""
    header = "".join(str(d).ljust(_CELL) for d in range(1, m.n2 + 1)).rstrip()
    rows: list[list[tuple[int, int]]] = []
    for arc in sorted(m.arcs, key=lambda p: (p[1] - p[0], p[0])):
        for placed in rows:
            if all(arc[1] < other[0] or other[1] < arc[0] for other in placed):
                placed.append(arc)
                break
        else:
            rows.append([arc])
    lines = [header]
    width = _dot_column(m.n2) + 1
    for placed in rows:
        chars = [" "] * width
        for a, b in placed:
            ca, cb = _dot_column(a), _dot_column(b)
            chars[ca] = "\\"
            chars[cb] = "/"
            for k in range(ca + 1, cb):
                chars[k] = "_"
        lines.append("".join(chars).rstrip())
    return "\n".join(lines) + "\n"


def render_tikz(m: Matching) -> str:
    """A standalone TikZ document drawing the dots and arcs below an axis."""
    out = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[yscale=0.8]",
        rf"\draw[dotted] (0.5,0) -- ({m.n2}.5,0);",
    ]
    for d in range(1, m.n2 + 1):
        out.append(rf"\fill ({d},0) circle (1.5pt);")
        out.append(rf"\node[above] at ({d},0.05) {{{d}}};")
    for a, b in m.arcs:
        depth = 0.45 + 0.3 * (b - a)
        out.append(
            rf"\draw ({a},0) .. controls ({a},-{depth:.2f}) and ({b},-{depth:.2f}) .. ({b},0);"
        )
    out.append(r"\end{tikzpicture}")
    out.append(r"\end{document}")
    return "\n".join(out) + "\n"
