"""Numerical semigroups, value ideals and the bridge to artinian algebras.

A semigroup ring ``k[[S]]`` is modelled by integer value sets: a fractional
monomial ideal is a set of integers closed under adding elements of ``S`` and
containing every integer from some point on.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from functools import cached_property, reduce
from math import gcd

import numpy as np

from .algebra import ArtinianAlgebra
from .classify import trace_ideal_and_residue, wag_search
from .fields import Field
from .linalg import Subspace


class SemigroupError(ValueError):
    pass


class NumericalSemigroup:
    """The numerical semigroup generated by coprime positive integers."""

    def __init__(self, gens):
        gens = sorted({int(g) for g in gens})
        if not gens or gens[0] <= 0:
            raise SemigroupError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise SemigroupError(f"generators {gens} are not coprime")
        self.input_generators = gens
        self.multiplicity = gens[0]
        self._apery = self._apery_of(gens)
        self.generators = [g for g in gens if not self._in_without(g, gens)]

    def _apery_of(self, gens):
        """Smallest element of S in each residue class modulo e (Dijkstra on residues)."""
        e = gens[0]
        dist = [None] * e
        dist[0] = 0
        heap = [(0, 0)]
        done = [False] * e
        while heap:
            d, r = heapq.heappop(heap)
            if done[r]:
                continue
            done[r] = True
            for g in gens[1:]:
                nd, nr = d + g, (r + g) % e
                if dist[nr] is None or nd < dist[nr]:
                    dist[nr] = nd
                    heapq.heappush(heap, (nd, nr))
        return dist

    def _in_without(self, g, gens):
        """Whether ``g`` is a sum of at least two generators."""
        others = [h for h in gens if h < g]
        reach = [False] * (g + 1)
        reach[0] = True
        for v in range(1, g + 1):
            reach[v] = any(v >= h and reach[v - h] for h in others)
        return reach[g]

    def __repr__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(tuple(self.generators))

    def __contains__(self, s) -> bool:
        s = int(s)
        if s < 0:
            return False
        return s >= self._apery[s % self.multiplicity]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def frobenius(self) -> int:
        return max(self._apery) - self.multiplicity

    @cached_property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def gaps(self) -> list:
        return [x for x in range(1, self.frobenius + 1) if x not in self]

    @cached_property
    def pseudo_frobenius(self) -> list:
        return [x for x in self.gaps + ([-1] if self.frobenius == -1 else [])
                if x not in self and all((x + g) in self for g in self.generators)]

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    @property
    def is_symmetric(self) -> bool:
        return self.type == 1

    def apery(self, m: int) -> list:
        """``Ap(S, m) = {s in S : s - m not in S}`` in increasing order."""
        if m not in self or m <= 0:
            raise SemigroupError(f"{m} is not a nonzero element of {self}")
        return [s for s in range(0, self.frobenius + m + 1) if s in self and (s - m) not in self]

    def elements_below(self, bound: int) -> list:
        return [s for s in range(0, bound) if s in self]


def semigroup_invariants(gens) -> NumericalSemigroup:
    return NumericalSemigroup(gens)


class ValueIdeal:
    """A relative ideal of ``S`` given by its value set.

    ``start`` is the smallest member, ``tail_start`` the smallest ``c`` with
    ``[c, oo)`` inside the set and ``head`` the members below ``tail_start``.
    """

    def __init__(self, parent: NumericalSemigroup, members, tail_start: int):
        tail_start = int(tail_start)
        head = {int(z) for z in members if z < tail_start}
        while (tail_start - 1) in head:
            tail_start -= 1
            head.discard(tail_start)
        self.parent = parent
        self.tail_start = tail_start
        self.head = tuple(sorted(head))
        for z in self.head:
            for g in parent.generators:
                if (z + g) not in self:
                    raise SemigroupError(f"value set is not stable: {z} + {g} missing")

    @property
    def start(self) -> int:
        return self.head[0] if self.head else self.tail_start

    def __contains__(self, z) -> bool:
        return z >= self.tail_start or z in self.head

    def __eq__(self, other):
        return (isinstance(other, ValueIdeal) and self.parent == other.parent
                and self.tail_start == other.tail_start and self.head == other.head)

    def __hash__(self):
        return hash((self.tail_start, self.head))

    def __repr__(self):
        return f"ValueIdeal(head={list(self.head)}, tail_start={self.tail_start})"

    def members_below(self, bound: int) -> list:
        return [z for z in range(self.start, bound) if z in self]

    def issubset(self, other: "ValueIdeal") -> bool:
        if self.tail_start < other.tail_start and any(
                z not in other for z in range(self.tail_start, other.tail_start)):
            return False
        return all(z in other for z in self.head)

    def shift(self, a: int) -> "ValueIdeal":
        return ValueIdeal(self.parent, [z + a for z in self.head], self.tail_start + a)

    def generators(self) -> list:
        """Minimal generators: members ``z`` with ``z - g`` outside for every generator ``g``."""
        return [z for z in range(self.start, self.tail_start + self.parent.multiplicity)
                if z in self and all((z - g) not in self for g in self.parent.generators)]

    def difference_count(self, sub: "ValueIdeal") -> int:
        """``#(self minus sub)`` for ``sub`` contained in ``self``."""
        if not sub.issubset(self):
            raise SemigroupError("difference_count needs a subset")
        return sum(1 for z in range(self.start, sub.tail_start) if z in self and z not in sub)


def semigroup_ideal(s: NumericalSemigroup) -> ValueIdeal:
    return ValueIdeal(s, s.elements_below(s.conductor), s.conductor)


def maximal_value_ideal(s: NumericalSemigroup) -> ValueIdeal:
    """``M = S minus {0}``."""
    return ValueIdeal(s, [x for x in s.elements_below(s.conductor) if x > 0], max(s.conductor, 1))


def canonical_value_ideal(s: NumericalSemigroup) -> ValueIdeal:
    """``K = {z : f - z not in S}``."""
    f = s.frobenius
    return ValueIdeal(s, [z for z in range(0, f + 1) if (f - z) not in s], f + 1)


def product(i: ValueIdeal, j: ValueIdeal) -> ValueIdeal:
    """Minkowski sum of value sets."""
    _same_parent(i, j)
    lo = i.start + j.start
    tail = min(i.tail_start + j.start, j.tail_start + i.start)
    members = []
    for z in range(lo, tail):
        if any((z - a) in j for a in range(i.start, z - j.start + 1) if a in i):
            members.append(z)
    return ValueIdeal(i.parent, members, tail)


def colon(i: ValueIdeal, j: ValueIdeal) -> ValueIdeal:
    """``I : J = {z : z + J inside I}``."""
    _same_parent(i, j)
    lo = i.start - j.start
    tail = i.tail_start - j.start
    members = []
    for z in range(lo, tail):
        if all((z + b) in i for b in range(j.start, i.tail_start - z) if b in j):
            members.append(z)
    return ValueIdeal(i.parent, members, tail)


def value_ideal_arith(kind: str, i: ValueIdeal, j: ValueIdeal) -> ValueIdeal:
    if kind == "product":
        return product(i, j)
    if kind == "colon":
        return colon(i, j)
    raise ValueError(f"unknown value ideal operation {kind!r}")


def _same_parent(i: ValueIdeal, j: ValueIdeal):
    if i.parent != j.parent:
        raise SemigroupError("value ideals over different semigroups")


def trace_and_residue_ns(s: NumericalSemigroup) -> tuple[ValueIdeal, int]:
    k = canonical_value_ideal(s)
    sv = semigroup_ideal(s)
    tr = product(k, colon(sv, k))
    return tr, sv.difference_count(tr)


def ag_oracle(s: NumericalSemigroup) -> bool:
    """``M + K`` inside ``S``."""
    return product(maximal_value_ideal(s), canonical_value_ideal(s)).issubset(semigroup_ideal(s))


@dataclass
class Ext1Type2:
    ext1_values: list
    m_kills: bool
    k_prime: ValueIdeal | None = None


def ext1_canonical_type2(s: NumericalSemigroup) -> Ext1Type2:
    """``Ext^1(omega, R)`` as ``K' / K`` with ``K' = S : (S : K)`` (type at most two)."""
    if s.type == 1:
        return Ext1Type2([], True, canonical_value_ideal(s))
    if s.type > 2:
        raise SemigroupError(f"Ext^1(omega, R) is only supported for type <= 2 (type is {s.type})")
    k = canonical_value_ideal(s)
    sv = semigroup_ideal(s)
    kp = colon(sv, colon(sv, k))
    values = [z for z in range(kp.start, k.tail_start) if z in kp and z not in k]
    m_kills = product(maximal_value_ideal(s), kp).issubset(k)
    return Ext1Type2(values, m_kills, kp)


def artinian_reduction(s: NumericalSemigroup, c: int, field: Field) -> ArtinianAlgebra:
    """``k[[S]] / (t^c)`` on the basis ``t^a`` for ``a`` in ``Ap(S, c)``."""
    if c <= 0 or c not in s:
        raise SemigroupError(f"{c} is not a nonzero element of {s}")
    ap = s.apery(c)
    index = {a: i for i, a in enumerate(ap)}
    n = len(ap)
    mult = field.zeros((n, n, n))
    for i, a in enumerate(ap):
        for j, b in enumerate(ap):
            k = index.get(a + b)
            if k is not None:
                mult[i, j, k] = field.one
    labels = ["1" if a == 0 else f"t^{a}" for a in ap]
    return ArtinianAlgebra(field, mult, labels, 0, value_labels=ap, check=False)


def value_image(alg: ArtinianAlgebra, ideal: ValueIdeal):
    """Image of a monomial ideal in a reduction, as a subspace on value labels."""
    f = alg.field
    rows = [alg.basis_vector(i) for i, a in enumerate(alg.value_labels) if a in ideal]
    return Subspace(f, alg.dim, np.stack(rows)) if rows else Subspace.zero(f, alg.dim)


def project_reduction(big: ArtinianAlgebra, small: ArtinianAlgebra, sub):
    """Push a subspace of ``R/(t^{c'})`` to ``R/(t^c)`` for ``c`` dividing into ``c'``.

    Basis values of the smaller reduction form a subset of those of the larger,
    and the natural surjection keeps those coordinates and drops the rest.
    """
    pos = {a: i for i, a in enumerate(big.value_labels)}
    cols = [pos[a] for a in small.value_labels]
    if sub.dim == 0:
        return Subspace.zero(small.field, small.dim)
    return Subspace(small.field, small.dim, sub.basis[:, cols])


@dataclass
class NsRecord:
    semigroup: NumericalSemigroup
    gorenstein: bool
    nearly_gorenstein: bool
    almost_gorenstein: bool
    residue: int
    trace: ValueIdeal
    crosschecks: dict = dc_field(default_factory=dict)


def classify_ns(s: NumericalSemigroup, field: Field | None = None, *, reduction_route: bool = True) -> NsRecord:
    """Gorenstein, nearly and almost Gorenstein verdicts, with the reduction cross-check."""
    tr, res = trace_and_residue_ns(s)
    ag = ag_oracle(s)
    rec = NsRecord(s, s.type == 1, res <= 1, ag, res, tr)
    if reduction_route:
        field = field or Field(2)
        red = artinian_reduction(s, 2 * s.multiplicity, field)
        wag = wag_search(red)
        _, red_res = trace_ideal_and_residue(red)
        rec.crosschecks = {
            "reduction_element": 2 * s.multiplicity,
            "reduction_wag": wag.verdict,
            "reduction_nearly_gorenstein": red_res <= 1,
            "ag_routes_agree": (wag.verdict == "yes") == ag if wag.verdict != "unknown" else None,
            "ng_routes_agree": (red_res <= 1) == (res <= 1),
        }
    return rec
