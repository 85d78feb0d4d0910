"""Signed permutation actions on tableaux, matchings, and cup diagrams,
plus straightening of arbitrary two-row fillings into the standard basis.

Coefficient arithmetic is plain Python integers throughout, so every
computation is exact.  Column fillings are kept in a signed normal form:
each column lists its smaller entry first (a swap costs a sign) and
columns are sorted by top entry (free).  The three-term straightening
rule rewrites a filling whose bottom row has a descent:

    with columns (a/b), (c/x) where a < c < x < b,
    v = v[(a/x), (c/b)] - v[(a/c), (x/b)]

applied until every bottom row is increasing.  Only the two named columns
change in a rewrite; all others are carried along untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .diagrams import Matching, column_matching, is_noncrossing, swap_dots
from .errors import BudgetExceededError
from .resolution import resolve_full
from .young import EntryCase, StandardTableau, classify, swap_entries, t0

DEFAULT_STEP_BUDGET = 10**6


@dataclass(frozen=True)
class TwoRowTableau:
    """A two-row filling in signed normal form, stored column by column.

    Entries are a permutation of 1..2n, each column has its smaller entry
    on top, and columns are sorted by top entry.  The filling need not be
    standard: the bottom row may fail to increase.
    """

    columns: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = [e for col in self.columns for e in col]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be a permutation of 1..2n")
        for a, b in self.columns:
            if a >= b:
                raise ValueError(f"column ({a},{b}) is not sorted")
        tops = [a for a, _ in self.columns]
        if tops != sorted(tops):
            raise ValueError("columns must be sorted by top entry")

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.columns)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.columns)

    def is_standard(self) -> bool:
        return all(
            self.bottom[j] < self.bottom[j + 1] for j in range(self.n - 1)
        )

    def to_standard(self) -> StandardTableau:
        return StandardTableau(self.top, self.bottom)

    @classmethod
    def from_standard(cls, tableau: StandardTableau) -> "TwoRowTableau":
        return cls(tableau.columns())

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    def __repr__(self) -> str:
        top = " ".join(map(str, self.top))
        bottom = " ".join(map(str, self.bottom))
        return f"TwoRowTableau({top!r} / {bottom!r})"


def canonicalize_columns(
    columns: Iterable[Sequence[int]],
) -> tuple[TwoRowTableau, int]:
    """Sort a raw column list into normal form, returning the sign picked up."""
    sign = 1
    fixed = []
    for a, b in columns:
        if a > b:
            a, b = b, a
            sign = -sign
        fixed.append((a, b))
    fixed.sort()
    return TwoRowTableau(tuple(fixed)), sign


class _SparseVector:
    """Shared integer-combination plumbing for the two vector types."""

    __slots__ = ("size", "terms")

    def __init__(self, size: int, terms: Mapping | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self._check_key(key, size)
                    clean[key] = coeff
        self.size = size
        self.terms = clean

    def _check_key(self, key, size) -> None:
        raise NotImplementedError

    def _same(self, other) -> None:
        if type(other) is not type(self) or other.size != self.size:
            raise ValueError("operands do not live in the same space")

    def __add__(self, other):
        self._same(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return type(self)(self.size, merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.size, {k: -c for k, c in self.terms.items()})

    def __rmul__(self, scalar: int):
        return type(self)(self.size, {k: scalar * c for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and other.size == self.size
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.size, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"{type(self).__name__}(0)"
        bits = " + ".join(f"{c}*{k!r}" for k, c in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0])))
        return f"{type(self).__name__}({bits})"


class TabloidVector(_SparseVector):
    """Integer combination of two-row fillings in normal form; ``size`` is n."""

    __slots__ = ()

    def _check_key(self, key, size) -> None:
        if not isinstance(key, TwoRowTableau) or key.n != size:
            raise ValueError(f"bad key {key!r} for n={size}")

    @property
    def n(self) -> int:
        return self.size

    @classmethod
    def unit(cls, tableau: TwoRowTableau, coeff: int = 1) -> "TabloidVector":
        return cls(tableau.n, {tableau: coeff})

    def to_json(self) -> list[dict]:
        out = []
        for key in sorted(self.terms, key=lambda k: k.columns):
            rec = key.to_json()
            rec["coeff"] = str(self.terms[key])
            out.append(rec)
        return out

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> "TabloidVector":
        terms = {}
        for rec in data:
            key, sign = canonicalize_columns(
                tuple(zip(rec["top"], rec["bottom"]))
            )
            terms[key] = terms.get(key, 0) + sign * int(rec["coeff"])
        return cls(n, terms)


class DiagramVector(_SparseVector):
    """Integer combination of matchings; ``size`` is the dot count 2n."""

    __slots__ = ()

    def _check_key(self, key, size) -> None:
        if not isinstance(key, Matching) or key.n2 != size:
            raise ValueError(f"bad key {key!r} for n2={size}")

    @property
    def n2(self) -> int:
        return self.size

    @classmethod
    def unit(cls, m: Matching, coeff: int = 1) -> "DiagramVector":
        return cls(m.n2, {m: coeff})

    def to_json(self) -> list[dict]:
        out = []
        for key in sorted(self.terms, key=lambda k: k.arcs):
            rec = key.to_json()
            rec["coeff"] = str(self.terms[key])
            out.append(rec)
        return out

    @classmethod
    def from_json(cls, n2: int, data: list[dict]) -> "DiagramVector":
        terms = {}
        for rec in data:
            key = Matching(rec["arcs"])
            terms[key] = terms.get(key, 0) + int(rec["coeff"])
        return cls(n2, terms)


def act_matching(i: int, v: DiagramVector) -> DiagramVector:
    """Generator i on matchings: minus on an (i, i+1) arc, dot swap otherwise."""
    if not 1 <= i <= v.n2 - 1:
        raise ValueError(f"generator index {i} out of range for n2={v.n2}")
    out: dict[Matching, int] = {}
    for m, coeff in v.terms.items():
        if m.partner(i) == i + 1:
            out[m] = out.get(m, 0) - coeff
        else:
            key = swap_dots(m, i)
            out[key] = out.get(key, 0) + coeff
    return DiagramVector(v.n2, out)


def act_web(i: int, v: DiagramVector) -> DiagramVector:
    """Generator i on cup diagrams, re-expressed in the noncrossing basis.

    Swapping the dots of a cup diagram creates at most one crossing, which
    is resolved away; the support of the result stays noncrossing.
    """
    if not 1 <= i <= v.n2 - 1:
        raise ValueError(f"generator index {i} out of range for n2={v.n2}")
    out: dict[Matching, int] = {}
    for w, coeff in v.terms.items():
        if not is_noncrossing(w):
            raise ValueError(f"support must be noncrossing, got {w!r}")
        if w.partner(i) == i + 1:
            out[w] = out.get(w, 0) - coeff
            continue
        for sink, mult in resolve_full(swap_dots(w, i)).items():
            out[sink] = out.get(sink, 0) + coeff * mult
    return DiagramVector(v.n2, out)


def _first_descent(columns: tuple[tuple[int, int], ...]) -> int | None:
    for j in range(len(columns) - 1):
        if columns[j][1] > columns[j + 1][1]:
            return j
    return None


_STRAIGHTEN_CACHE: dict[TwoRowTableau, tuple[tuple[TwoRowTableau, int], ...]] = {}


def _straighten_key(
    key: TwoRowTableau, step_budget: int
) -> tuple[tuple[TwoRowTableau, int], ...]:
    cached = _STRAIGHTEN_CACHE.get(key)
    if cached is not None:
        return cached
    pending: dict[TwoRowTableau, int] = {key: 1}
    done: dict[TwoRowTableau, int] = {}
    steps = 0
    while pending:
        tab, coeff = pending.popitem()
        if coeff == 0:
            continue
        j = _first_descent(tab.columns)
        if j is None:
            done[tab] = done.get(tab, 0) + coeff
            continue
        steps += 1
        if steps > step_budget:
            raise BudgetExceededError(
                f"straightening exceeded {step_budget} rewrite steps"
            )
        cols = tab.columns
        a, b = cols[j]
        c, x = cols[j + 1]
        # normal form guarantees a < c < x < b here
        keep_order = cols[:j] + ((a, x), (c, b)) + cols[j + 2:]
        resorted = tuple(sorted(cols[:j] + ((a, c), (x, b)) + cols[j + 2:]))
        for child_cols, sign in ((keep_order, 1), (resorted, -1)):
            child = TwoRowTableau(child_cols)
            pending[child] = pending.get(child, 0) + sign * coeff
    result = tuple(kv for kv in done.items() if kv[1] != 0)
    _STRAIGHTEN_CACHE[key] = result
    return result


def garnir_straighten(
    x: Union[TwoRowTableau, TabloidVector],
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> TabloidVector:
    """Expand a filling (or combination of fillings) over standard keys."""
    vec = TabloidVector.unit(x) if isinstance(x, TwoRowTableau) else x
    out: dict[TwoRowTableau, int] = {}
    for key, coeff in vec.terms.items():
        for skey, scoeff in _straighten_key(key, step_budget):
            out[skey] = out.get(skey, 0) + coeff * scoeff
    return TabloidVector(vec.n, out)


def act_polytabloid(i: int, v: TabloidVector) -> TabloidVector:
    """Generator i on standard-basis vectors, straightened back to standard keys."""
    out: dict[TwoRowTableau, int] = {}
    for key, coeff in v.terms.items():
        if not key.is_standard():
            raise ValueError(f"key {key!r} is not standard")
        st = key.to_standard()
        case = classify(st, i)
        if case is EntryCase.SAME_COLUMN:
            out[key] = out.get(key, 0) - coeff
        elif case is EntryCase.BELOW:
            moved = TwoRowTableau.from_standard(swap_entries(st, i))
            out[moved] = out.get(moved, 0) + coeff
        else:
            swapped = [
                tuple(i + 1 if e == i else i if e == i + 1 else e for e in col)
                for col in key.columns
            ]
            tab, sign = canonicalize_columns(swapped)
            for skey, scoeff in _straighten_key(tab, DEFAULT_STEP_BUDGET):
                out[skey] = out.get(skey, 0) + sign * coeff * scoeff
    return TabloidVector(v.n, out)


def cup_polytabloid(
    w: Matching, step_budget: int = DEFAULT_STEP_BUDGET
) -> tuple[TwoRowTableau, TabloidVector]:
    """The filling whose columns are the arcs of ``w``, and its straightening.

    The filling's column set determines it up to normal form, and for a
    cup diagram the arc list is already in normal form.
    """
    if not is_noncrossing(w):
        raise ValueError("input must be a cup diagram (no crossings)")
    tab = TwoRowTableau(w.arcs)
    return tab, garnir_straighten(tab, step_budget)


def shifted_product(n: int, word: Sequence[int]) -> TabloidVector:
    """Apply the product of (generator - 1) factors to the base vector.

    ``word`` lists the factors as written in the product, so the last
    letter acts first.  A word obtained from a directed path out of the
    minimum tableau should therefore be reversed by the caller.
    """
    v = TabloidVector.unit(TwoRowTableau.from_standard(t0(n)))
    for i in reversed(tuple(word)):
        v = act_polytabloid(i, v) - v
    return v


def column_matching_vector(v: TabloidVector) -> DiagramVector:
    """Replace each filling by the matching pairing its column entries."""
    out: dict[Matching, int] = {}
    for key, coeff in v.terms.items():
        m = column_matching(key.columns)
        out[m] = out.get(m, 0) + coeff
    return DiagramVector(2 * v.n, out)


def to_web_basis(v: DiagramVector) -> DiagramVector:
    """Rewrite an arbitrary matching combination over noncrossing keys."""
    out: dict[Matching, int] = {}
    for m, coeff in v.terms.items():
        for sink, mult in resolve_full(m).items():
            out[sink] = out.get(sink, 0) + coeff * mult
    return DiagramVector(v.n2, out)
