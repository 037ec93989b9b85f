"""The three-valued Lukasiewicz algebra of rough sets of an approximation space.

A rough set is the pair (lower(X), upper(X)) for some subset X. Pairs are
ordered componentwise. The operations are

    meet         (l1 & l2, u1 & u2)
    join         (l1 | l2, u1 | u2)
    negation     (~u, ~l)
    possibility  (u, u)
    necessity    (l, l)

and the Heyting implication is ``~poss(a) | b | (poss(~a) & poss(b))``.

Arbitrary pairs of closed sets with first <= second (Moisil pairs) form a
larger, centered algebra with the same operations. A Moisil pair is a rough
set exactly when every block inside ``second - first`` has at least two
objects. That characterization is derived here rather than taken from the
literature, so ``verify_realizability`` checks it against brute-force
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, TypeVar

import numpy as np

from .approximation import (
    DEFAULT_MAX_UNIVERSE,
    ObjectSet,
    UniverseMismatch,
    closed_masks,
    lower,
    lower_table,
    require_bound,
    upper,
    upper_mask,
    upper_table,
)
from .info_table import Partition
from .report import Report


class NotRealizable(ValueError):
    """A pair of closed sets that is not (L X, M X) for any X."""


@dataclass(frozen=True)
class _Pair:
    lower: ObjectSet
    upper: ObjectSet
    space: Partition = field(compare=False, repr=False)

    def __post_init__(self):
        u = self.space.universe
        if self.lower.universe != u or self.upper.universe != u:
            raise UniverseMismatch("pair components are not over the space's universe")
        if not self.lower <= self.upper:
            raise ValueError(f"lower {self.lower!r} is not contained in upper {self.upper!r}")
        for comp in (self.lower, self.upper):
            if upper_mask(self.space, comp.mask) != comp.mask:
                raise ValueError(f"component {comp!r} is not a union of blocks")

    @property
    def key(self) -> tuple[int, int]:
        return self.lower.mask, self.upper.mask

    def __le__(self, other: _Pair) -> bool:
        return self.lower <= other.lower and self.upper <= other.upper

    def __ge__(self, other: _Pair) -> bool:
        return other <= self

    def name(self) -> str:
        return f"({','.join(self.lower)};{','.join(self.upper)})"

    def to_json(self) -> dict:
        return {"lower": self.lower.members(), "upper": self.upper.members()}

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.name()}"


@dataclass(frozen=True, repr=False)
class MoisilPair(_Pair):
    """Pair of closed sets, first contained in second."""

    @property
    def first(self) -> ObjectSet:
        return self.lower

    @property
    def second(self) -> ObjectSet:
        return self.upper


@dataclass(frozen=True, repr=False)
class RoughSet(_Pair):
    def __post_init__(self):
        super().__post_init__()
        if not realizable_masks(self.space, self.lower.mask, self.upper.mask):
            raise NotRealizable(f"{self.name()} is not the approximation pair of any subset")


P = TypeVar("P", bound=_Pair)


def realizable_masks(p: Partition, lo: int, hi: int) -> bool:
    """True iff no singleton block lies in ``hi`` but outside ``lo``."""
    boundary = hi & ~lo
    return all(not (b & boundary) or b & (b - 1) for b in p.block_masks)


def in_b_star(pair: _Pair) -> bool:
    return realizable_masks(pair.space, pair.lower.mask, pair.upper.mask)


def _make(proto: P, lo: int, hi: int) -> P:
    u = proto.space.universe
    return type(proto)(ObjectSet(u, lo), ObjectSet(u, hi), proto.space)


def _same(a: _Pair, b: _Pair) -> None:
    if a.space != b.space:
        raise UniverseMismatch("rough sets belong to different approximation spaces")


def rough_of(p: Partition, x: ObjectSet) -> RoughSet:
    return RoughSet(lower(p, x), upper(p, x), p)


def zero(p: Partition) -> RoughSet:
    return RoughSet(ObjectSet.empty(p.universe), ObjectSet.empty(p.universe), p)


def one(p: Partition) -> RoughSet:
    return RoughSet(ObjectSet.full(p.universe), ObjectSet.full(p.universe), p)


def center(p: Partition) -> RoughSet | None:
    """The pair (empty, universe) when it is a rough set, else None."""
    lo, hi = 0, p.full_mask
    if not realizable_masks(p, lo, hi):
        return None
    return RoughSet(ObjectSet(p.universe, lo), ObjectSet(p.universe, hi), p)


def moisil_center(p: Partition) -> MoisilPair:
    return MoisilPair(ObjectSet.empty(p.universe), ObjectSet.full(p.universe), p)


def meet(a: P, b: P) -> P:
    _same(a, b)
    return _make(a, a.lower.mask & b.lower.mask, a.upper.mask & b.upper.mask)


def join(a: P, b: P) -> P:
    _same(a, b)
    return _make(a, a.lower.mask | b.lower.mask, a.upper.mask | b.upper.mask)


def negation(a: P) -> P:
    full = a.space.full_mask
    return _make(a, full & ~a.upper.mask, full & ~a.lower.mask)


def possibility(a: P) -> P:
    return _make(a, a.upper.mask, a.upper.mask)


def necessity(a: P) -> P:
    return _make(a, a.lower.mask, a.lower.mask)


def heyting_implication(a: P, b: P) -> P:
    _same(a, b)
    return join(join(negation(possibility(a)), b), meet(possibility(negation(a)), possibility(b)))


def enumerate_b_star(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> list[RoughSet]:
    """All rough sets of ``p``, in order of first occurrence over subset bitmasks."""
    return [RoughSet(ObjectSet(p.universe, lo), ObjectSet(p.universe, hi), p)
            for lo, hi in b_star_keys(p, max_universe)]


def b_star_keys(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> list[tuple[int, int]]:
    require_bound(p.size, max_universe)
    lows, ups = lower_table(p), upper_table(p)
    seen: dict[tuple[int, int], None] = {}
    for lo, hi in zip(lows.tolist(), ups.tolist()):
        seen.setdefault((lo, hi), None)
    return list(seen)


def moisil_pairs(p: Partition) -> list[MoisilPair]:
    closed = closed_masks(p)
    u = p.universe
    return [MoisilPair(ObjectSet(u, lo), ObjectSet(u, hi), p)
            for lo in closed for hi in closed if lo & ~hi == 0]


# Exhaustive checks. Elements become indices into operation tables so that the
# quantified laws can be evaluated as whole-array comparisons.

@dataclass
class _Tables:
    elements: list
    meet: np.ndarray
    join: np.ndarray
    neg: np.ndarray
    nabla: np.ndarray
    delta: np.ndarray
    imp: np.ndarray
    leq: np.ndarray


def _tables(elements: Sequence[P]) -> _Tables:
    index = {e.key: i for i, e in enumerate(elements)}
    n = len(elements)

    def look(x: _Pair) -> int:
        try:
            return index[x.key]
        except KeyError:
            raise ValueError(f"{x!r} falls outside the element list") from None

    meet_t = np.array([[look(meet(a, b)) for b in elements] for a in elements], dtype=np.intp).reshape(n, n)
    join_t = np.array([[look(join(a, b)) for b in elements] for a in elements], dtype=np.intp).reshape(n, n)
    imp_t = np.array([[look(heyting_implication(a, b)) for b in elements] for a in elements],
                     dtype=np.intp).reshape(n, n)
    leq = np.array([[a <= b for b in elements] for a in elements], dtype=bool).reshape(n, n)
    return _Tables(
        list(elements),
        meet_t,
        join_t,
        np.array([look(negation(a)) for a in elements], dtype=np.intp),
        np.array([look(possibility(a)) for a in elements], dtype=np.intp),
        np.array([look(necessity(a)) for a in elements], dtype=np.intp),
        imp_t,
        leq,
    )


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return None if hits.size == 0 else tuple(int(i) for i in hits[0])


def _cex(t: _Tables, names: Sequence[str], idx: tuple[int, ...] | None) -> dict | None:
    if idx is None:
        return None
    return {k: t.elements[i].name() for k, i in zip(names, idx)}


def verify_determination(p: Partition, elements: Iterable[_Pair] | None = None) -> Report:
    """Pairs with equal possibility and equal necessity must be equal."""
    elems = list(enumerate_b_star(p) if elements is None else elements)
    seen: dict[tuple[int, int], _Pair] = {}
    cex = None
    for e in elems:
        key = (possibility(e).key, necessity(e).key)
        other = seen.setdefault(key, e)
        if other != e:
            cex = {"a": other.name(), "b": e.name()}
            break
    report = Report("determination principle")
    report.add("poss(a)=poss(b) and nec(a)=nec(b) implies a=b", cex, len(elems) ** 2)
    return report


def verify_b_star(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """Closure, Kleene law, residuation and necessity duality on B*."""
    elems = enumerate_b_star(p, max_universe)
    report = Report("rough set algebra")
    index = {e.key: i for i, e in enumerate(elems)}
    cex = None
    for a in elems:
        for b in elems:
            for op, r in (("meet", meet(a, b)), ("join", join(a, b)), ("heyting", heyting_implication(a, b))):
                if r.key not in index:
                    cex = {"op": op, "a": a.name(), "b": b.name()}
                    break
            if cex:
                break
        if cex is None:
            for op, r in (("negation", negation(a)), ("possibility", possibility(a))):
                if not in_b_star(r):
                    cex = {"op": op, "a": a.name()}
        if cex:
            break
    report.add("B* closed under meet, join, negation, possibility, implication", cex, len(elems) ** 2)
    if cex:
        return report

    t = _tables(elems)
    n = len(elems)
    ar = np.arange(n)
    report.extend(verify_determination(p, elems))
    kleene = t.leq[t.meet[ar, t.neg][:, None], t.join[ar, t.neg][None, :]]
    report.add("Kleene: a & ~a <= b | ~b", _cex(t, "ab", _first(~kleene)), n * n)
    lhs = t.leq[t.meet[:, None, :], ar[None, :, None]]
    rhs = t.leq[ar[None, None, :], t.imp[:, :, None]]
    report.add("residuation: a & c <= b iff c <= (a => b)", _cex(t, "abc", _first(lhs != rhs)), n ** 3)
    dual = t.neg[t.nabla[t.neg]]
    report.add("necessity = ~poss~", _cex(t, "a", _first(dual != t.delta)), n)
    report.add("negation = (L~X, M~X)", _negation_cross_check(p, max_universe), 1 << p.size)
    return report


def _negation_cross_check(p: Partition, max_universe: int) -> dict | None:
    require_bound(p.size, max_universe)
    for m in range(1 << p.size):
        x = ObjectSet(p.universe, m)
        r = rough_of(p, x)
        if negation(r) != rough_of(p, ~x):
            return {"X": x.members()}
    return None


def verify_moisil(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """Checks on the centered algebra of all Moisil pairs of ``p``."""
    pairs = moisil_pairs(p)
    t = _tables(pairs)
    n = len(pairs)
    report = Report("Moisil pair algebra")
    c = moisil_center(p)
    ci = next(i for i, e in enumerate(pairs) if e == c)
    report.add("center is fixed by negation", None if t.neg[ci] == ci else {"c": c.name()}, 1)
    recon = t.meet[t.join[t.delta, ci], t.nabla]
    report.add("center law: x = (nec x | c) & poss x", _cex(t, "x", _first(recon != np.arange(n))), n)
    report.extend(verify_determination(p, pairs))
    b_star = {e.key for e in enumerate_b_star(p, max_universe)}
    pair_keys = {e.key for e in pairs}
    missing = next((k for k in b_star if k not in pair_keys), None)
    report.add("B* is a subset of the Moisil pairs",
               None if missing is None else {"pair": list(missing)}, len(b_star))
    report.extend(verify_realizability(p, max_universe))
    return report


def verify_realizability(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """The block-size characterization agrees with brute-force enumeration of B*."""
    brute = set(b_star_keys(p, max_universe))
    cex = None
    pairs = moisil_pairs(p)
    for pair in pairs:
        if in_b_star(pair) != (pair.key in brute):
            cex = {"pair": pair.name(), "characterization": in_b_star(pair), "brute_force": pair.key in brute}
            break
    report = Report("realizability")
    report.add("Moisil pair in B* iff boundary blocks have >= 2 objects", cex, len(pairs))
    return report
