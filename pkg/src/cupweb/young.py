"""Standard Young tableaux with two equal rows, their directed graph, and the
induced partial order.

A tableau here always has shape (n, n) and entries 1..2n, increasing along
rows and columns.  The distinguished tableau ``t0(n)`` places 1..2n down
successive columns.  Swapping i and i+1 when i sits in the bottom row and
i+1 in the top row yields another standard tableau; these swaps are the
edges of the tableau graph, and reachability is the partial order.  All
values are immutable and all functions are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeLimitError

#: Enumeration and graph construction refuse larger n unless told otherwise.
DEFAULT_MAX_N = 8


class EntryCase(enum.Enum):
    """Relative placement of i and i+1 inside a standard tableau.

    BELOW means i is in the bottom row and i+1 in the top row.  SAME_ROW
    also covers the mirror of BELOW (i in the top row, i+1 in the bottom
    row, different columns): there, as for a literal same-row pair,
    swapping the entries is resolved by straightening, which is a plain
    relabelling when the swapped filling happens to be standard.
    """

    SAME_ROW = "same-row"
    SAME_COLUMN = "same-column"
    BELOW = "below"


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of two rows of n boxes with 1..2n."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        n = len(self.top)
        if n < 1 or len(self.bottom) != n:
            raise ValueError("rows must be nonempty and of equal length")
        if sorted(self.top + self.bottom) != list(range(1, 2 * n + 1)):
            raise ValueError("entries must be a permutation of 1..2n")
        for row in (self.top, self.bottom):
            if any(row[j] >= row[j + 1] for j in range(n - 1)):
                raise ValueError(f"row {row} is not strictly increasing")
        for j in range(n):
            if self.top[j] >= self.bottom[j]:
                raise ValueError(f"column {j + 1} is not increasing")

    @property
    def n(self) -> int:
        return len(self.top)

    def columns(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.top, self.bottom))

    def row_word(self) -> str:
        """Compact one-line form, e.g. ``"1 2 4 7 / 3 5 6 8"``."""
        return "{} / {}".format(
            " ".join(map(str, self.top)), " ".join(map(str, self.bottom))
        )

    def row_of(self, entry: int) -> int:
        """0 for the top row, 1 for the bottom row."""
        if entry in self.top:
            return 0
        if entry in self.bottom:
            return 1
        raise ValueError(f"entry {entry} not in tableau")

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, data: dict) -> "StandardTableau":
        return cls(tuple(data["top"]), tuple(data["bottom"]))

    def __repr__(self) -> str:
        return f"StandardTableau({self.row_word()!r})"


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n2}, stored as the image tuple of 1, 2, ..."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images must be a bijection on 1..n2")

    @property
    def n2(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(x) = p(q(x)); q acts first.
        if self.n2 != other.n2:
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(k)) for k in range(1, self.n2 + 1)))

    @classmethod
    def identity(cls, n2: int) -> "Permutation":
        return cls(tuple(range(1, n2 + 1)))

    @classmethod
    def transposition(cls, n2: int, i: int) -> "Permutation":
        """The adjacent transposition swapping i and i+1."""
        if not 1 <= i <= n2 - 1:
            raise ValueError(f"generator index {i} out of range for n2={n2}")
        images = list(range(1, n2 + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    def is_identity(self) -> bool:
        return all(self(k) == k for k in range(1, self.n2 + 1))


def coxeter_length(w: Permutation) -> int:
    """Length of w as a product of adjacent transpositions = inversion count."""
    im = w.images
    return sum(
        1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j]
    )


def t0(n: int) -> StandardTableau:
    """The minimum tableau: 1..2n written down successive columns."""
    if n < 1:
        raise ValueError("n must be positive")
    return StandardTableau(
        tuple(range(1, 2 * n, 2)), tuple(range(2, 2 * n + 1, 2))
    )


def perm_between(a: StandardTableau, b: StandardTableau) -> Permutation:
    """The permutation w with w.a = b, matching entries box by box."""
    if a.n != b.n:
        raise ValueError("tableaux must have the same n")
    images = [0] * (2 * a.n)
    for src_row, dst_row in ((a.top, b.top), (a.bottom, b.bottom)):
        for s, d in zip(src_row, dst_row):
            images[s - 1] = d
    return Permutation(tuple(images))


def _check_limit(n: int, max_n: int) -> None:
    if n < 1:
        raise SizeLimitError("n must be a positive integer")
    if n > max_n:
        raise SizeLimitError(
            f"n={n} exceeds the configured limit {max_n}; raise the limit to proceed"
        )


@lru_cache(maxsize=None)
def enumerate_syt(n: int, max_n: int = DEFAULT_MAX_N) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape (n, n), in the canonical order.

    The order sorts by rank (graph distance from ``t0``, computed as the
    inversion count of the connecting permutation) and breaks ties by the
    lexicographic top row.  The count is the n-th Catalan number.
    """
    _check_limit(n, max_n)
    tableaux: list[StandardTableau] = []

    def grow(top: list[int], bottom: list[int], nxt: int) -> None:
        if nxt > 2 * n:
            tableaux.append(StandardTableau(tuple(top), tuple(bottom)))
            return
        if len(top) < n:
            top.append(nxt)
            grow(top, bottom, nxt + 1)
            top.pop()
        if len(bottom) < len(top):
            bottom.append(nxt)
            grow(top, bottom, nxt + 1)
            bottom.pop()

    grow([], [], 1)
    base = t0(n)
    tableaux.sort(key=lambda s: (coxeter_length(perm_between(base, s)), s.top))
    return tuple(tableaux)


def classify(tableau: StandardTableau, i: int) -> EntryCase:
    """Which of the three action cases applies to i and i+1 in ``tableau``."""
    if not 1 <= i <= 2 * tableau.n - 1:
        raise ValueError(f"generator index {i} out of range for n={tableau.n}")
    row_i = tableau.row_of(i)
    row_j = tableau.row_of(i + 1)
    if row_i == row_j:
        return EntryCase.SAME_ROW
    if row_i == 0 and tableau.bottom[tableau.top.index(i)] == i + 1:
        return EntryCase.SAME_COLUMN
    if row_i == 1:
        return EntryCase.BELOW
    # i in the top row, i+1 in the bottom row of an earlier column: the
    # swapped filling is standard again, so it behaves like the row case.
    return EntryCase.SAME_ROW


def swap_entries(tableau: StandardTableau, i: int) -> StandardTableau:
    """Exchange the entries i and i+1.  Raises unless the result is standard."""
    top = tuple(i + 1 if x == i else i if x == i + 1 else x for x in tableau.top)
    bottom = tuple(
        i + 1 if x == i else i if x == i + 1 else x for x in tableau.bottom
    )
    return StandardTableau(top, bottom)


class TableauGraph:
    """Directed graph on the tableaux of a fixed n.

    An edge ``(s, t, i)`` says vertex ``t`` equals vertex ``s`` with i and
    i+1 exchanged, where i was in the bottom row of ``s`` and i+1 in its
    top row.  The graph is acyclic with ``t0`` as its unique source, and
    reachability defines the partial order used throughout the package.
    """

    def __init__(self, n: int, vertices: tuple[StandardTableau, ...],
                 edges: tuple[tuple[int, int, int], ...]):
        self.n = n
        self.vertices = vertices
        self.edges = edges
        self._position = {v: k for k, v in enumerate(vertices)}
        self._successors: list[list[int]] = [[] for _ in vertices]
        for src, dst, _ in edges:
            self._successors[src].append(dst)
        self._ranks = self._compute_ranks()
        self._descendants = self._compute_descendants()

    def _compute_ranks(self) -> tuple[int, ...]:
        base = t0(self.n)
        return tuple(
            coxeter_length(perm_between(base, v)) for v in self.vertices
        )

    def _compute_descendants(self) -> list[int]:
        # Bitset per vertex; filled in decreasing rank order so every
        # successor is complete before its predecessors are processed.
        desc = [0] * len(self.vertices)
        for v in sorted(range(len(self.vertices)),
                        key=lambda k: -self._ranks[k]):
            mask = 1 << v
            for s in self._successors[v]:
                mask |= desc[s]
            desc[v] = mask
        return desc

    def position(self, tableau: StandardTableau) -> int:
        try:
            return self._position[tableau]
        except KeyError:
            raise ValueError(f"{tableau!r} is not a vertex of this graph") from None

    def rank_of(self, tableau: StandardTableau) -> int:
        return self._ranks[self.position(tableau)]

    def reachable(self, src: StandardTableau, dst: StandardTableau) -> bool:
        return bool(self._descendants[self.position(src)] >> self.position(dst) & 1)


@lru_cache(maxsize=None)
def build_tableau_graph(n: int, max_n: int = DEFAULT_MAX_N) -> TableauGraph:
    """Construct the tableau graph on ``enumerate_syt(n)``."""
    vertices = enumerate_syt(n, max_n)
    position = {v: k for k, v in enumerate(vertices)}
    edges = []
    for src, tab in enumerate(vertices):
        for i in range(1, 2 * n):
            if classify(tab, i) is EntryCase.BELOW:
                edges.append((src, position[swap_entries(tab, i)], i))
    return TableauGraph(n, vertices, tuple(edges))


def leq(s: StandardTableau, t: StandardTableau, graph: TableauGraph) -> bool:
    """True iff there is a directed path from s to t (reflexively)."""
    return graph.reachable(s, t)


def rank(tableau: StandardTableau, graph: TableauGraph) -> int:
    """Number of edges on any directed path from ``t0`` to ``tableau``."""
    return graph.rank_of(tableau)


def first_row_dominates(s: StandardTableau, t: StandardTableau) -> bool:
    """Componentwise ``s.top[j] >= t.top[j]``."""
    if s.n != t.n:
        raise ValueError("tableaux must have the same n")
    return all(a >= b for a, b in zip(s.top, t.top))


def paths_between(graph: TableauGraph, src: StandardTableau,
                  dst: StandardTableau, limit: int | None = None
                  ) -> list[list[int]]:
    """Edge-label sequences of directed paths src -> dst, in DFS order.

    Stops after ``limit`` paths when given.  Labels are listed in the
    order the edges are traversed.
    """
    start, goal = graph.position(src), graph.position(dst)
    out_edges: list[list[tuple[int, int]]] = [[] for _ in graph.vertices]
    for a, b, i in graph.edges:
        out_edges[a].append((b, i))
    found: list[list[int]] = []

    def walk(v: int, labels: list[int]) -> bool:
        if v == goal:
            found.append(list(labels))
            return limit is not None and len(found) >= limit
        for b, i in out_edges[v]:
            if not graph.reachable(graph.vertices[b], graph.vertices[goal]):
                continue
            labels.append(i)
            if walk(b, labels):
                return True
            labels.pop()
        return False

    walk(start, [])
    return found
