"""Finite three-valued Lukasiewicz algebras given by operation tables.

Besides the axiom checker this module carries the prime-filter machinery
behind the representation of such an algebra as rough sets: the Stone map
``s(x) = {P : x in P}``, the involution ``g(P) = complement of ~P`` and the
partition of prime filters into chains, whose upper/lower approximations give
``h(x) = (L s(x), M s(x))``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from . import rough_algebra as ra
from .approximation import ObjectSet, lower, require_bound, upper
from .info_table import Partition
from .report import Report

DEFAULT_MAX_ELEMENTS = 16
IMPORT_MAX_UNIVERSE = 6


class MalformedAlgebra(ValueError):
    pass


class AxiomError(ValueError):
    """The algebra does not satisfy the Lukasiewicz axioms."""


@dataclass(frozen=True)
class FiniteAlgebra:
    elements: tuple[str, ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    nabla: tuple[int, ...]
    one: int

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise MalformedAlgebra("algebra has no elements")
        if len(set(self.elements)) != n:
            raise MalformedAlgebra("element names are not distinct")
        for name in ("meet", "join"):
            table = getattr(self, name)
            if len(table) != n or any(len(row) != n for row in table):
                raise MalformedAlgebra(f"{name} table is not {n}x{n}")
            if any(not (isinstance(v, int) and 0 <= v < n) for row in table for v in row):
                raise MalformedAlgebra(f"{name} table has an entry outside 0..{n - 1}")
        for name in ("neg", "nabla"):
            table = getattr(self, name)
            if len(table) != n:
                raise MalformedAlgebra(f"{name} table has {len(table)} entries, expected {n}")
            if any(not (isinstance(v, int) and 0 <= v < n) for v in table):
                raise MalformedAlgebra(f"{name} table has an entry outside 0..{n - 1}")
        if not (isinstance(self.one, int) and 0 <= self.one < n):
            raise MalformedAlgebra(f"one={self.one} is not an element index")

    @classmethod
    def build(cls, elements, meet, join, neg, nabla, one) -> FiniteAlgebra:
        return cls(
            tuple(str(e) for e in elements),
            tuple(tuple(int(v) for v in row) for row in meet),
            tuple(tuple(int(v) for v in row) for row in join),
            tuple(int(v) for v in neg),
            tuple(int(v) for v in nabla),
            int(one),
        )

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> FiniteAlgebra:
        keys = ("elements", "meet", "join", "neg", "nabla", "one")
        missing = [k for k in keys if k not in doc]
        if missing:
            raise MalformedAlgebra(f"missing keys: {missing}")
        try:
            return cls.build(*(doc[k] for k in keys))
        except (TypeError, ValueError) as e:
            if isinstance(e, MalformedAlgebra):
                raise
            raise MalformedAlgebra(str(e)) from None

    @classmethod
    def loads(cls, text: str) -> FiniteAlgebra:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedAlgebra(f"invalid JSON: {e}") from None
        if not isinstance(doc, dict):
            raise MalformedAlgebra("algebra document must be a JSON object")
        return cls.from_json(doc)

    def to_json(self) -> dict[str, Any]:
        return {
            "elements": list(self.elements),
            "meet": [list(r) for r in self.meet],
            "join": [list(r) for r in self.join],
            "neg": list(self.neg),
            "nabla": list(self.nabla),
            "one": self.one,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> int:
        return self.neg[self.one]

    def delta(self, x: int) -> int:
        return self.neg[self.nabla[self.neg[x]]]

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x

    def index(self, x: int | str) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < len(self.elements):
                return x
            raise KeyError(f"unknown element index {x}")
        try:
            return self.elements.index(x)
        except ValueError:
            raise KeyError(f"unknown element {x}") from None

    # numpy views used by the exhaustive checks
    @cached_property
    def M(self) -> np.ndarray:
        return np.array(self.meet, dtype=np.intp)

    @cached_property
    def J(self) -> np.ndarray:
        return np.array(self.join, dtype=np.intp)

    @cached_property
    def N(self) -> np.ndarray:
        return np.array(self.neg, dtype=np.intp)

    @cached_property
    def V(self) -> np.ndarray:
        return np.array(self.nabla, dtype=np.intp)

    @cached_property
    def D(self) -> np.ndarray:
        return self.N[self.V[self.N]]

    @cached_property
    def LEQ(self) -> np.ndarray:
        return self.M == np.arange(len(self))[:, None]


def chain2() -> FiniteAlgebra:
    return FiniteAlgebra.build(
        ["0", "1"], [[0, 0], [0, 1]], [[0, 1], [1, 1]], [1, 0], [0, 1], 1)


def chain3() -> FiniteAlgebra:
    """The chain 0 < c < 1 with ~c = c and nabla c = 1."""
    meet = [[min(i, j) for j in range(3)] for i in range(3)]
    join = [[max(i, j) for j in range(3)] for i in range(3)]
    return FiniteAlgebra.build(["0", "c", "1"], meet, join, [2, 1, 0], [0, 2, 2], 2)


def corrupted_chain3() -> FiniteAlgebra:
    """The 3-chain with nabla c = c; violates ~x | nabla x = 1 at c."""
    a = chain3()
    return FiniteAlgebra.build(a.elements, a.meet, a.join, a.neg, [0, 1, 2], a.one)


def product(a: FiniteAlgebra, b: FiniteAlgebra) -> FiniteAlgebra:
    pairs = list(itertools.product(range(len(a)), range(len(b))))
    idx = {p: i for i, p in enumerate(pairs)}
    names = [f"({a.elements[i]},{b.elements[j]})" for i, j in pairs]

    def binop(ta, tb):
        return [[idx[ta[x][u], tb[y][v]] for u, v in pairs] for x, y in pairs]

    return FiniteAlgebra.build(
        names,
        binop(a.meet, b.meet),
        binop(a.join, b.join),
        [idx[a.neg[x], b.neg[y]] for x, y in pairs],
        [idx[a.nabla[x], b.nabla[y]] for x, y in pairs],
        idx[a.one, b.one],
    )


def _first(bad: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(bad)
    return None if hits.size == 0 else tuple(int(i) for i in hits[0])


def _named(a: FiniteAlgebra, idx: tuple[int, ...] | None, keys: str = "xyz") -> dict | None:
    if idx is None:
        return None
    return {k: a.elements[i] for k, i in zip(keys, idx)}


def check_axioms(a: FiniteAlgebra) -> Report:
    """Exhaustively check the bounded distributive lattice, De Morgan and
    Lukasiewicz axioms. Each failing law records its first counterexample."""
    n = len(a)
    M, J, N, V = a.M, a.J, a.N, a.V
    ar = np.arange(n)
    x3, y3, z3 = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    x2, y2 = ar[:, None], ar[None, :]
    one, zero = a.one, a.zero
    r = Report("three-valued Lukasiewicz axioms")

    def law(name, bad, arity):
        r.add(name, _named(a, _first(bad)), n ** arity)

    law("x∧x=x", M[ar, ar] != ar, 1)
    law("x∨x=x", J[ar, ar] != ar, 1)
    law("x∧y=y∧x", M != M.T, 2)
    law("x∨y=y∨x", J != J.T, 2)
    law("(x∧y)∧z=x∧(y∧z)", M[M[x3, y3], z3] != M[x3, M[y3, z3]], 3)
    law("(x∨y)∨z=x∨(y∨z)", J[J[x3, y3], z3] != J[x3, J[y3, z3]], 3)
    law("x∧(x∨y)=x", M[x2, J[x2, y2]] != x2, 2)
    law("x∨(x∧y)=x", J[x2, M[x2, y2]] != x2, 2)
    law("x∧1=x", M[ar, one] != ar, 1)
    law("x∨0=x", J[ar, zero] != ar, 1)
    law("x∧(y∨z)=(x∧y)∨(x∧z)", M[x3, J[y3, z3]] != J[M[x3, y3], M[x3, z3]], 3)
    law("x∨(y∧z)=(x∨y)∧(x∨z)", J[x3, M[y3, z3]] != M[J[x3, y3], J[x3, z3]], 3)
    law("∼∼x=x", N[N] != ar, 1)
    law("∼(x∧y)=∼x∨∼y", N[M[x2, y2]] != J[N[x2], N[y2]], 2)
    law("∼x∨∇x=1", J[N, V] != one, 1)
    law("x∧∼x=∼x∧∇x", M[ar, N] != M[N, V], 1)
    law("∇(x∧y)=∇x∧∇y", V[M[x2, y2]] != M[V[x2], V[y2]], 2)
    return r


def complemented(a: FiniteAlgebra) -> list[int]:
    """Elements with a lattice complement, found by exhaustive search."""
    return [x for x in range(len(a))
            if any(a.meet[x][y] == a.zero and a.join[x][y] == a.one for y in range(len(a)))]


def derived_operator_checks(a: FiniteAlgebra) -> Report:
    n = len(a)
    J, V = a.J, a.V
    ar = np.arange(n)
    x2, y2 = ar[:, None], ar[None, :]
    r = Report("possibility operator")
    r.add("∇(x∨y)=∇x∨∇y", _named(a, _first(V[J[x2, y2]] != J[V[x2], V[y2]])), n * n)
    r.add("x≤∇x", _named(a, _first(~a.LEQ[ar, V])), n)
    r.add("∇∇x=∇x", _named(a, _first(V[V] != V)), n)
    invariant = [x for x in range(n) if a.nabla[x] == x]
    comp = complemented(a)
    cex = None
    if invariant != comp:
        cex = {"invariant": [a.elements[x] for x in invariant], "complemented": [a.elements[x] for x in comp]}
    r.add("{x : ∇x=x} = complemented elements", cex, n * n)
    return r


def heyting_implication(a: FiniteAlgebra, x: int, y: int) -> int:
    j, m, ng, nb = a.join, a.meet, a.neg, a.nabla
    return j[j[ng[nb[x]]][y]][m[nb[ng[x]]][nb[y]]]


def check_heyting_kleene(a: FiniteAlgebra) -> Report:
    """Determination principle, Kleene law and residuation of the implication."""
    n = len(a)
    ar = np.arange(n)
    M, J, N, V, D, LEQ = a.M, a.J, a.N, a.V, a.D, a.LEQ
    r = Report("derived structure")
    same = (V[:, None] == V[None, :]) & (D[:, None] == D[None, :]) & (ar[:, None] != ar[None, :])
    r.add("∇x=∇y and △x=△y implies x=y", _named(a, _first(same)), n * n)
    kleene = LEQ[M[ar, N][:, None], J[ar, N][None, :]]
    r.add("x∧∼x≤y∨∼y", _named(a, _first(~kleene)), n * n)
    imp = J[J[N[V][:, None], ar[None, :]], M[V[N][:, None], V[None, :]]]
    lhs = LEQ[M[:, None, :], ar[None, :, None]]
    rhs = LEQ[ar[None, None, :], imp[:, :, None]]
    r.add("x∧z≤y iff z≤(x⇒y)", _named(a, _first(lhs != rhs)), n ** 3)
    return r


# Prime filters

@dataclass(frozen=True)
class PrimeFilter:
    members: frozenset[int]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __le__(self, other: PrimeFilter) -> bool:
        return self.members <= other.members

    def __lt__(self, other: PrimeFilter) -> bool:
        return self.members < other.members

    def names(self, a: FiniteAlgebra) -> list[str]:
        return [a.elements[i] for i in sorted(self.members)]


def is_prime_filter(a: FiniteAlgebra, members: frozenset[int] | set[int]) -> bool:
    n = len(a)
    if a.one not in members or a.zero in members:
        return False
    for x in members:
        if any(a.leq(x, y) and y not in members for y in range(n)):
            return False
        if any(a.meet[x][y] not in members for y in members):
            return False
    return all(x in members or y in members
               for x in range(n) for y in range(n) if a.join[x][y] in members)


def _canonical(filters) -> list[PrimeFilter]:
    return sorted(filters, key=lambda f: (len(f.members), sorted(f.members)))


def prime_filters(a: FiniteAlgebra) -> list[PrimeFilter]:
    """All prime filters, ordered by size then by sorted member indices.

    A filter of a finite lattice contains the meet of its members, so it is
    the principal filter of that meet; only principal filters are tested.
    """
    found = set()
    for g in range(len(a)):
        members = frozenset(y for y in range(len(a)) if a.leq(g, y))
        if is_prime_filter(a, members):
            found.add(members)
    return _canonical(PrimeFilter(m) for m in found)


def prime_filters_exhaustive(a: FiniteAlgebra, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[PrimeFilter]:
    """Brute-force enumeration over every subset; an oracle for ``prime_filters``."""
    n = len(a)
    require_bound(n, max_elements, "algebra")
    up = [sum(1 << y for y in range(n) if a.leq(x, y)) for x in range(n)]
    found = []
    for mask in range(1 << n):
        if not (mask >> a.one & 1) or mask >> a.zero & 1:
            continue
        if any(mask >> x & 1 and up[x] & ~mask for x in range(n)):
            continue
        members = frozenset(x for x in range(n) if mask >> x & 1)
        if is_prime_filter(a, members):
            found.append(PrimeFilter(members))
    return _canonical(found)


def filter_names(filters: Sequence[PrimeFilter]) -> list[str]:
    return [f"P{i}" for i in range(1, len(filters) + 1)]


def involution_g(a: FiniteAlgebra, p: PrimeFilter) -> PrimeFilter:
    """Set complement of ``{~x : x in p}``."""
    if not is_prime_filter(a, p.members):
        raise ValueError("input is not a prime filter")
    negated = {a.neg[x] for x in p.members}
    return PrimeFilter(frozenset(range(len(a))) - negated)


def comparability_relation(a: FiniteAlgebra, filters: Sequence[PrimeFilter] | None = None) -> Partition:
    """Partition of the prime filters (named P1, P2, ...) into comparable groups."""
    filters = prime_filters(a) if filters is None else list(filters)
    names = filter_names(filters)
    label = list(range(len(filters)))

    def find(i):
        while label[i] != i:
            i = label[i]
        return i

    for i, j in itertools.combinations(range(len(filters)), 2):
        if filters[i] <= filters[j] or filters[j] <= filters[i]:
            label[find(j)] = find(i)
    return Partition.from_labels(names, [find(i) for i in range(len(filters))])


def stone_map(a: FiniteAlgebra, x: int | str, filters: Sequence[PrimeFilter] | None = None) -> ObjectSet:
    filters = prime_filters(a) if filters is None else list(filters)
    i = a.index(x)
    names = filter_names(filters)
    return ObjectSet.of(names, (nm for nm, f in zip(names, filters) if i in f))


@dataclass
class Representation:
    algebra: FiniteAlgebra
    filters: list[PrimeFilter]
    space: Partition
    stone: list[ObjectSet]
    h: list[ra.RoughSet] = field(repr=False)

    @property
    def names(self) -> list[str]:
        return list(self.space.universe)

    def g(self, i: int) -> int:
        return self.filters.index(involution_g(self.algebra, self.filters[i]))

    def to_json(self) -> dict[str, Any]:
        a = self.algebra
        return {
            "filters": [{"name": nm, "members": f.names(a)} for nm, f in zip(self.names, self.filters)],
            "chains": [list(b) for b in self.space.blocks],
            "g": {nm: self.names[self.g(i)] for i, nm in enumerate(self.names)},
            "h": [{"element": e, **r.to_json()} for e, r in zip(a.elements, self.h)],
        }

    def verify(self) -> Report:
        """h is an injective homomorphism for meet, join, negation, possibility and 1."""
        a, h = self.algebra, self.h
        n = len(a)
        r = Report("representation homomorphism")

        def over(pairs, test):
            for t in pairs:
                if not test(*t):
                    return {k: a.elements[v] for k, v in zip("xy", t)}
            return None

        units = [(x,) for x in range(n)]
        pairs = list(itertools.product(range(n), repeat=2))
        r.add("h(x∧y)=h(x)∧h(y)", over(pairs, lambda x, y: h[a.meet[x][y]] == ra.meet(h[x], h[y])), n * n)
        r.add("h(x∨y)=h(x)∨h(y)", over(pairs, lambda x, y: h[a.join[x][y]] == ra.join(h[x], h[y])), n * n)
        r.add("h(∼x)=∼h(x)", over(units, lambda x: h[a.neg[x]] == ra.negation(h[x])), n)
        r.add("h(∇x)=∇h(x)", over(units, lambda x: h[a.nabla[x]] == ra.possibility(h[x])), n)
        one = ra.one(self.space)
        r.add("h(1)=(Ob,Ob)", None if h[a.one] == one else {"h(1)": h[a.one].name()}, 1)
        r.add("h injective", over(pairs, lambda x, y: x == y or h[x] != h[y]), n * n)
        # injectivity again through s(△x), s(∇x) and the determination principle
        s = self.stone
        r.add("s injective (determination route)", over(pairs, lambda x, y: x == y or s[x] != s[y]), n * n)
        r.add("h(x)=(s(△x), s(∇x))",
              over(units, lambda x: (h[x].lower, h[x].upper) == (s[a.delta(x)], s[a.nabla[x]])), n)
        r.checks.append(check_heyting_kleene(a)["∇x=∇y and △x=△y implies x=y"])
        return r


def represent(a: FiniteAlgebra) -> Representation:
    axioms = check_axioms(a)
    if not axioms.passed:
        bad = axioms.first_failure()
        raise AxiomError(f"not a three-valued Lukasiewicz algebra: {bad.name} fails at {bad.counterexample}")
    filters = prime_filters(a)
    space = comparability_relation(a, filters)
    stone = [stone_map(a, x, filters) for x in range(len(a))]
    h = [ra.RoughSet(lower(space, s), upper(space, s), space) for s in stone]
    return Representation(a, filters, space, stone, h)


def verify_prime_spectrum(a: FiniteAlgebra, rep: Representation | None = None) -> Report:
    rep = represent(a) if rep is None else rep
    fs, space = rep.filters, rep.space
    k = len(fs)
    r = Report("prime filter spectrum")
    g = [involution_g(a, f) for f in fs]
    r.add("g(P) is a prime filter",
          next(({"P": rep.names[i]} for i, q in enumerate(g) if q not in fs), None), k)
    if not r.passed:
        return r
    gi = [fs.index(q) for q in g]
    r.add("g(g(P))=P", next(({"P": rep.names[i]} for i in range(k) if gi[gi[i]] != i), None), k)
    r.add("P⊆Q implies g(Q)⊆g(P)",
          next(({"P": rep.names[i], "Q": rep.names[j]} for i in range(k) for j in range(k)
                if fs[i] <= fs[j] and not g[j] <= g[i]), None), k * k)
    r.add("chains have one or two elements",
          next(({"chain": list(b)} for b in space.blocks if len(b) > 2), None), len(space.blocks))
    cls = [space.class_of[nm] for nm in rep.names]
    r.add("blocks are chains",
          next(({"P": rep.names[i], "Q": rep.names[j]} for i in range(k) for j in range(k)
                if cls[i] == cls[j] and not (fs[i] <= fs[j] or fs[j] <= fs[i])), None), k * k)
    r.add("P and g(P) comparable",
          next(({"P": rep.names[i]} for i in range(k) if not (fs[i] <= g[i] or g[i] <= fs[i])), None), k)
    r.add("P R Q implies g(P) R g(Q)",
          next(({"P": rep.names[i], "Q": rep.names[j]} for i in range(k) for j in range(k)
                if cls[i] == cls[j] and cls[gi[i]] != cls[gi[j]]), None), k * k)
    return r


def verify_stone_map(a: FiniteAlgebra, rep: Representation | None = None) -> Report:
    rep = represent(a) if rep is None else rep
    s = rep.stone
    n = len(a)
    pairs = list(itertools.product(range(n), repeat=2))
    r = Report("Stone map")

    def over(test):
        return next(({"x": a.elements[x], "y": a.elements[y]} for x, y in pairs if not test(x, y)), None)

    r.add("s(x∧y)=s(x)∩s(y)", over(lambda x, y: s[a.meet[x][y]] == s[x] & s[y]), n * n)
    r.add("s(x∨y)=s(x)∪s(y)", over(lambda x, y: s[a.join[x][y]] == s[x] | s[y]), n * n)
    r.add("s(0)=∅", None if not s[a.zero] else {"s(0)": s[a.zero].members()}, 1)
    r.add("s(1)=Ob", None if len(s[a.one]) == len(rep.filters) else {"s(1)": s[a.one].members()}, 1)
    r.add("s injective", over(lambda x, y: x == y or s[x] != s[y]), n * n)
    return r


def verify_representation_identities(a: FiniteAlgebra, rep: Representation | None = None) -> Report:
    """Identities relating s, L, M, ∇ and △ for every element, and the two
    prime-filter lemmas for every filter and element."""
    rep = represent(a) if rep is None else rep
    sp, s = rep.space, rep.stone
    n = len(a)
    D = [a.delta(x) for x in range(n)]
    V, N = a.nabla, a.neg
    L = lambda X: lower(sp, X)  # noqa: E731
    M = lambda X: upper(sp, X)  # noqa: E731
    r = Report("representation identities")

    def each(test):
        return next(({"x": a.elements[x]} for x in range(n) if not test(x)), None)

    r.add("(1) Ms(∇x)=s(∇x)", each(lambda x: M(s[V[x]]) == s[V[x]]), n)
    r.add("(2) Ms(x)=s(∇x)", each(lambda x: M(s[x]) == s[V[x]]), n)
    r.add("(3) Ls(△x)=s(△x)", each(lambda x: L(s[D[x]]) == s[D[x]]), n)
    r.add("(4) Ls(x)=s(△x)", each(lambda x: L(s[x]) == s[D[x]]), n)
    r.add("(5) s(∼∇x)=¬Ms(x)", each(lambda x: s[N[V[x]]] == ~M(s[x])), n)
    r.add("(6) s(∼△x)=¬Ls(x)", each(lambda x: s[N[D[x]]] == ~L(s[x])), n)

    fs = rep.filters
    g = [involution_g(a, f) for f in fs]
    cex = None
    for i, (P, gP) in enumerate(zip(fs, g)):
        if gP <= P:
            bad = next((x for x in range(n) if V[x] in P and x not in P), None)
            if bad is not None:
                cex = {"P": rep.names[i], "x": a.elements[bad]}
                break
    r.add("lemma: g(P)⊆P and ∇x∈P imply x∈P", cex, n * len(fs))
    cex = None
    for i, (P, gP) in enumerate(zip(fs, g)):
        if gP <= P:
            bad = next((x for x in range(n) if x in gP and D[x] not in gP), None)
            if bad is not None:
                cex = {"P": rep.names[i], "x": a.elements[bad]}
                break
    r.add("lemma: g(P)⊆P and x∈g(P) imply △x∈g(P)", cex, n * len(fs))
    return r


def verify_representation(a: FiniteAlgebra, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Report:
    """Everything the representation pipeline asserts, in one report.

    Algebras of at most ``max_elements`` elements also get their prime
    filters cross-checked against brute-force subset enumeration.
    """
    rep = represent(a)
    r = Report("representation")
    if len(a) <= max_elements:
        brute = prime_filters_exhaustive(a, max_elements)
        r.add("prime filters match exhaustive enumeration",
              None if brute == rep.filters else {"principal": len(rep.filters), "exhaustive": len(brute)},
              1 << len(a))
    r.extend(verify_prime_spectrum(a, rep))
    r.extend(verify_stone_map(a, rep))
    r.extend(verify_representation_identities(a, rep))
    r.extend(rep.verify())
    return r


def import_rough_algebra(p: Partition, max_universe: int = IMPORT_MAX_UNIVERSE) -> FiniteAlgebra:
    """Tabulate the rough-set algebra of ``p``; elements are named by their pairs."""
    elems = ra.enumerate_b_star(p, max_universe)
    return tabulate(elems)


def tabulate(elems: Sequence[ra.RoughSet]) -> FiniteAlgebra:
    index = {e.key: i for i, e in enumerate(elems)}
    one = ra.one(elems[0].space)
    return FiniteAlgebra.build(
        [e.name() for e in elems],
        [[index[ra.meet(x, y).key] for y in elems] for x in elems],
        [[index[ra.join(x, y).key] for y in elems] for x in elems],
        [index[ra.negation(x).key] for x in elems],
        [index[ra.possibility(x).key] for x in elems],
        index[one.key],
    )


def verify_round_trip(a: FiniteAlgebra, max_universe: int = IMPORT_MAX_UNIVERSE) -> Report:
    """The rough-set algebra of the representation space contains h(A) as a
    copy of A: every h(x) is an element and the tables agree on the image."""
    rep = represent(a)
    b = import_rough_algebra(rep.space, max_universe)
    names = [hx.name() for hx in rep.h]
    r = Report("round trip")
    missing = next((nm for nm in names if nm not in b.elements), None)
    r.add("h(A) inside imported algebra", None if missing is None else {"h(x)": missing}, len(a))
    if missing is not None:
        return r
    img = [b.index(nm) for nm in names]
    n = len(a)
    cex = None
    for x, y in itertools.product(range(n), repeat=2):
        if (b.meet[img[x]][img[y]] != img[a.meet[x][y]] or b.join[img[x]][img[y]] != img[a.join[x][y]]):
            cex = {"x": a.elements[x], "y": a.elements[y]}
            break
    if cex is None:
        cex = next(({"x": a.elements[x]} for x in range(n)
                    if b.neg[img[x]] != img[a.neg[x]] or b.nabla[img[x]] != img[a.nabla[x]]), None)
    r.add("tables agree on the image", cex, n * n)
    r.add("h injective", None if len(set(img)) == n else {"image size": len(set(img))}, n)
    return r
