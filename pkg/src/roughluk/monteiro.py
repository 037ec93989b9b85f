"""Subset operations whose quotient by equal approximations is the rough-set algebra.

On the powerset of the universe define

    cap_dot(A, B) = MA & B & (A | M~B)
    uplus(A, B)   = LA | B | (A & L~B)

and call A, B congruent when LA = LB and MA = MB. Congruence classes are
identified by their (L, M) signature. The three-valued membership grade of
x in A is 1 on LA, 1/2 on MA - LA, and 0 elsewhere.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import rough_algebra as ra
from .approximation import (
    DEFAULT_MAX_UNIVERSE,
    ObjectSet,
    UniverseMismatch,
    complement,
    lower,
    lower_mask,
    require_bound,
    upper,
    upper_mask,
)
from .finite_lukasiewicz import FiniteAlgebra
from .info_table import Partition
from .report import Report


class WellDefinednessError(RuntimeError):
    """An operation on classes depended on the chosen representatives."""


@functools.total_ordering
class ThreeValue(enum.Enum):
    ZERO = Fraction(0)
    HALF = Fraction(1, 2)
    ONE = Fraction(1)

    def __lt__(self, other):
        if not isinstance(other, ThreeValue):
            return NotImplemented
        return self.value < other.value

    def __str__(self) -> str:
        return str(self.value)

    def complement(self) -> ThreeValue:
        return ThreeValue(1 - self.value)

    @classmethod
    def parse(cls, text: str) -> ThreeValue:
        return cls(Fraction(text))


@dataclass(frozen=True)
class CongruenceClass:
    representative: ObjectSet
    lower: ObjectSet
    upper: ObjectSet

    @property
    def signature(self) -> tuple[int, int]:
        return self.lower.mask, self.upper.mask

    def __eq__(self, other):
        if not isinstance(other, CongruenceClass):
            return NotImplemented
        return self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)


def _check(p: Partition, *sets: ObjectSet) -> None:
    for s in sets:
        if s.universe != p.universe:
            raise UniverseMismatch("set is not over the partition's universe")


def _cap_dot(p: Partition, a: int, b: int) -> int:
    full = p.full_mask
    return upper_mask(p, a) & b & (a | upper_mask(p, full & ~b))


def _uplus(p: Partition, a: int, b: int) -> int:
    full = p.full_mask
    return lower_mask(p, a) | b | (a & lower_mask(p, full & ~b))


def cap_dot(p: Partition, a: ObjectSet, b: ObjectSet) -> ObjectSet:
    _check(p, a, b)
    return upper(p, a) & b & (a | upper(p, complement(b)))


def uplus(p: Partition, a: ObjectSet, b: ObjectSet) -> ObjectSet:
    _check(p, a, b)
    return lower(p, a) | b | (a & lower(p, complement(b)))


def congruent(p: Partition, a: ObjectSet, b: ObjectSet) -> bool:
    _check(p, a, b)
    return lower(p, a) == lower(p, b) and upper(p, a) == upper(p, b)


def _sig(p: Partition, m: int) -> tuple[int, int]:
    return lower_mask(p, m), upper_mask(p, m)


def congruence_classes(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> list[CongruenceClass]:
    """Classes in order of their first member over subset bitmasks; that
    member is the stored representative."""
    require_bound(p.size, max_universe)
    seen: dict[tuple[int, int], int] = {}
    for m in range(1 << p.size):
        seen.setdefault(_sig(p, m), m)
    u = p.universe
    return [CongruenceClass(ObjectSet(u, m), ObjectSet(u, lo), ObjectSet(u, hi)) for (lo, hi), m in seen.items()]


def _class_name(lo: ObjectSet, hi: ObjectSet) -> str:
    return f"({','.join(lo)};{','.join(hi)})"


def quotient_algebra(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> FiniteAlgebra:
    """The quotient of the subset algebra under congruence.

    Operation tables are filled from every pair of subsets, not only from
    representatives, and a disagreement raises ``WellDefinednessError``.
    Elements are named like rough sets, ``(lower;upper)``.
    """
    classes = congruence_classes(p, max_universe)
    index = {c.signature: i for i, c in enumerate(classes)}
    cls_of = [index[_sig(p, m)] for m in range(1 << p.size)]
    k = len(classes)
    meet: list[list[int | None]] = [[None] * k for _ in range(k)]
    join: list[list[int | None]] = [[None] * k for _ in range(k)]
    neg: list[int | None] = [None] * k
    nabla: list[int | None] = [None] * k

    def put(table, i, value, what):
        if table[i] is None:
            table[i] = value
        elif table[i] != value:
            raise WellDefinednessError(f"{what} is not well defined on classes")

    full = p.full_mask
    for a in range(1 << p.size):
        ca = cls_of[a]
        put(neg, ca, cls_of[full & ~a], "negation")
        put(nabla, ca, cls_of[upper_mask(p, a)], "possibility")
        for b in range(1 << p.size):
            cb = cls_of[b]
            put(meet[ca], cb, cls_of[_cap_dot(p, a, b)], "cap_dot")
            put(join[ca], cb, cls_of[_uplus(p, a, b)], "uplus")
    return FiniteAlgebra.build(
        [_class_name(c.lower, c.upper) for c in classes], meet, join, neg, nabla, cls_of[full])


def verify_congruence(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """Congruent arguments give congruent results for cap_dot, uplus, ~ and M.

    For each operation the result class of the first argument tuple seen in
    a class tuple is remembered; every other tuple is compared against it.
    """
    require_bound(p.size, max_universe)
    n = 1 << p.size
    full = p.full_mask
    sig = [_sig(p, m) for m in range(n)]
    r = Report("congruence")
    u = p.universe

    def names(m):
        return ObjectSet(u, m).members()

    sets = [ObjectSet(u, m) for m in range(n)]
    cex = None
    for a in range(n):
        if not congruent(p, sets[a], sets[a]):
            cex = {"A": names(a)}
            break
        bad = next((b for b in range(a) if congruent(p, sets[a], sets[b]) != congruent(p, sets[b], sets[a])), None)
        if bad is not None:
            cex = {"A": names(a), "B": names(bad)}
            break
    r.add("≡ reflexive and symmetric", cex, n * n)

    for label, op in (("~", lambda a: full & ~a), ("M", lambda a: upper_mask(p, a))):
        seen: dict = {}
        cex = None
        for a in range(n):
            first = seen.setdefault(sig[a], a)
            if sig[op(first)] != sig[op(a)]:
                cex = {"A": names(first), "A'": names(a)}
                break
        r.add(f"A≡A' implies {label}A≡{label}A'", cex, n)

    for label, op in (("∩̇", _cap_dot), ("⊎", _uplus)):
        seen = {}
        cex = None
        for a in range(n):
            for b in range(n):
                fa, fb = seen.setdefault((sig[a], sig[b]), (a, b))
                if sig[op(p, fa, fb)] != sig[op(p, a, b)]:
                    cex = {"A": names(fa), "B": names(fb), "A'": names(a), "B'": names(b)}
                    break
            if cex:
                break
        r.add(f"A≡A', B≡B' imply A{label}B≡A'{label}B'", cex, n * n)
    return r


def verify_distribution_identities(
    p: Partition,
    meet_op: Callable[[Partition, int, int], int] = _cap_dot,
    join_op: Callable[[Partition, int, int], int] = _uplus,
    max_universe: int = DEFAULT_MAX_UNIVERSE,
) -> Report:
    """M and L turn cap_dot/uplus into intersection/union of approximations.

    ``meet_op`` and ``join_op`` act on bitmasks and can be swapped out for
    negative controls.
    """
    require_bound(p.size, max_universe)
    n = 1 << p.size
    u = p.universe
    L = [lower_mask(p, m) for m in range(n)]
    M = [upper_mask(p, m) for m in range(n)]
    r = Report("distribution identities")
    laws = (
        ("M(A∩̇B)=MA∩MB", meet_op, upper_mask, lambda a, b: M[a] & M[b]),
        ("M(A⊎B)=MA∪MB", join_op, upper_mask, lambda a, b: M[a] | M[b]),
        ("L(A∩̇B)=LA∩LB", meet_op, lower_mask, lambda a, b: L[a] & L[b]),
        ("L(A⊎B)=LA∪LB", join_op, lower_mask, lambda a, b: L[a] | L[b]),
    )
    for name, op, approx, expect in laws:
        cex = None
        for a in range(n):
            for b in range(n):
                if approx(p, op(p, a, b)) != expect(a, b):
                    cex = {"A": ObjectSet(u, a).members(), "B": ObjectSet(u, b).members()}
                    break
            if cex:
                break
        r.add(name, cex, n * n)
    return r


def quotient_iso_b_star(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """The signature map from classes to rough sets is a bijection onto B*
    that carries every quotient operation to the rough-set operation."""
    q = quotient_algebra(p, max_universe)
    classes = congruence_classes(p, max_universe)
    image = [ra.RoughSet(c.lower, c.upper, p) for c in classes]
    b_star = ra.enumerate_b_star(p, max_universe)
    r = Report("quotient isomorphic to B*")
    img_keys = [x.key for x in image]
    onto = set(img_keys) == {x.key for x in b_star} and len(set(img_keys)) == len(img_keys)
    r.add("signature map is a bijection onto B*",
          None if onto else {"classes": len(classes), "rough sets": len(b_star)}, len(classes))
    k = len(q)
    cex = None
    for i in range(k):
        if image[q.neg[i]] != ra.negation(image[i]):
            cex = {"op": "negation", "a": q.elements[i]}
        elif image[q.nabla[i]] != ra.possibility(image[i]):
            cex = {"op": "possibility", "a": q.elements[i]}
        if cex:
            break
        for j in range(k):
            if image[q.meet[i][j]] != ra.meet(image[i], image[j]):
                cex = {"op": "meet", "a": q.elements[i], "b": q.elements[j]}
            elif image[q.join[i][j]] != ra.join(image[i], image[j]):
                cex = {"op": "join", "a": q.elements[i], "b": q.elements[j]}
            if cex:
                break
        if cex:
            break
    if cex is None and image[q.one] != ra.one(p):
        cex = {"op": "one", "a": q.elements[q.one]}
    r.add("operations agree", cex, k * k)
    return r


def verify_end_notes(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """Rough-set meet/join are the approximations of cap_dot/uplus, and the
    two written forms of each operation agree."""
    require_bound(p.size, max_universe)
    n = 1 << p.size
    u = p.universe
    full = p.full_mask
    M = lambda m: upper_mask(p, m)  # noqa: E731
    L = lambda m: lower_mask(p, m)  # noqa: E731
    rough = [ra.rough_of(p, ObjectSet(u, m)) for m in range(n)]
    r = Report("end-note identities")
    checks = (
        ("rough(X∩̇Y)=rough(X)∧rough(Y)",
         lambda x, y: ra.rough_of(p, ObjectSet(u, _cap_dot(p, x, y))) == ra.meet(rough[x], rough[y])),
        ("rough(X⊎Y)=rough(X)∨rough(Y)",
         lambda x, y: ra.rough_of(p, ObjectSet(u, _uplus(p, x, y))) == ra.join(rough[x], rough[y])),
        ("MX∩Y∩(X∪M¬Y)=(X∩Y)∪(MX∩Y∩M¬Y)",
         lambda x, y: _cap_dot(p, x, y) == (x & y) | (M(x) & y & M(full & ~y))),
        ("(X∪Y)∩(LX∪Y∪L¬Y)=LX∪Y∪(X∩L¬Y)",
         lambda x, y: (x | y) & (L(x) | y | L(full & ~y)) == _uplus(p, x, y)),
    )
    for name, test in checks:
        cex = None
        for x in range(n):
            bad = next((y for y in range(n) if not test(x, y)), None)
            if bad is not None:
                cex = {"X": ObjectSet(u, x).members(), "Y": ObjectSet(u, bad).members()}
                break
        r.add(name, cex, n * n)
    return r


def membership(p: Partition, a: ObjectSet, x: str) -> ThreeValue:
    _check(p, a)
    if x not in p.class_of:
        raise KeyError(f"unknown object {x}")
    return _grade(p, a.mask, p.universe.index(x))


def _grade(p: Partition, mask: int, i: int) -> ThreeValue:
    if lower_mask(p, mask) >> i & 1:
        return ThreeValue.ONE
    if upper_mask(p, mask) >> i & 1:
        return ThreeValue.HALF
    return ThreeValue.ZERO


def membership_function(p: Partition, a: ObjectSet) -> dict[str, ThreeValue]:
    _check(p, a)
    return {x: _grade(p, a.mask, i) for i, x in enumerate(p.universe)}


def membership_json(grades: dict[str, ThreeValue]) -> list[dict[str, str]]:
    return [{"object": x, "grade": str(g)} for x, g in grades.items()]


def verify_membership_extension(p: Partition, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Report:
    """Grades of uplus, cap_dot and complement follow max, min and 1 - g.

    Only the max law for uplus has a published proof; min and 1 - g are the
    natural companions and are certified here, per space, rather than assumed.
    """
    require_bound(p.size, max_universe)
    size = p.size
    n = 1 << size
    u = p.universe
    full = p.full_mask
    grades = [[_grade(p, m, i) for i in range(size)] for m in range(n)]
    r = Report("membership extension")

    def pairwise(op, combine):
        for a in range(n):
            for b in range(n):
                got = grades[op(p, a, b)]
                for i in range(size):
                    if got[i] != combine(grades[a][i], grades[b][i]):
                        return {"A": ObjectSet(u, a).members(), "B": ObjectSet(u, b).members(), "x": u[i],
                                "got": str(got[i])}
        return None

    r.add("μ(A⊎B)=max(μA, μB)", pairwise(_uplus, max), n * n * size)
    r.add("μ(A∩̇B)=min(μA, μB)", pairwise(_cap_dot, min), n * n * size)
    cex = None
    for a in range(n):
        got = grades[full & ~a]
        bad = next((i for i in range(size) if got[i] != grades[a][i].complement()), None)
        if bad is not None:
            cex = {"A": ObjectSet(u, a).members(), "x": u[bad], "got": str(got[bad])}
            break
    r.add("μ(¬A)=1-μA", cex, n * size)
    return r
