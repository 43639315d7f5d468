"""Finite-dimensional commutative local algebras given by structure constants.

An algebra has a basis ``e_0, ..., e_{n-1}`` with ``e_i e_j = sum_k c[i, j, k] e_k``.
One basis element is the unit and the remaining ones span the maximal ideal,
so every non-unit basis element is nilpotent.  Ideals are represented by
:class:`~gorlab.linalg.Subspace` objects in the regular representation.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property

import numpy as np

from .fields import Field
from .linalg import CapacityError, Subspace, kernel, reversed_span


class AlgebraError(ValueError):
    pass


class ArtinianAlgebra:
    """A commutative artinian local algebra over an exact field.

    ``mult[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.  The maximal
    ideal is spanned by the basis elements other than ``e_unit``.
    """

    def __init__(self, field: Field, mult, labels=None, unit_index: int = 0, *,
                 value_labels=None, monomials=None, varnames=None, relations=None,
                 check: bool = True):
        self.field = field
        mult = field.array(mult)
        if mult.ndim != 3 or len(set(mult.shape)) != 1:
            raise AlgebraError("structure constants must have shape (n, n, n)")
        self.mult = mult
        self.dim = mult.shape[0]
        if self.dim == 0:
            raise AlgebraError("the zero ring is not local")
        self.unit_index = int(unit_index)
        if not 0 <= self.unit_index < self.dim:
            raise AlgebraError("unit index out of range")
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise AlgebraError("one label per basis element is required")
        self.value_labels = list(value_labels) if value_labels is not None else None
        self.monomials = [tuple(m) for m in monomials] if monomials is not None else None
        self.varnames = list(varnames) if varnames is not None else None
        self.relations = [tuple(m) for m in relations] if relations is not None else None
        if check:
            self.validate()

    def __repr__(self):
        return f"ArtinianAlgebra(dim={self.dim}, field={self.field})"

    # -- validation ------------------------------------------------------------
    def validate(self):
        f, c, n, u = self.field, self.mult, self.dim, self.unit_index
        if not np.array_equal(c, c.transpose(1, 0, 2)):
            raise AlgebraError("multiplication is not commutative")
        if not np.array_equal(c[u], f.eye(n)):
            raise AlgebraError(f"basis element {self.labels[u]} is not a unit")
        # (e_i e_j) e_l versus e_i (e_j e_l)
        left = f.matmul(c.reshape(n * n, n), c.reshape(n, n * n)).reshape(n, n, n, n)
        inner = c.reshape(n * n, n)
        right = np.stack([f.matmul(inner, c[i]) for i in range(n)]).reshape(n, n, n, n)
        if not np.array_equal(left, right):
            raise AlgebraError("multiplication is not associative")
        others = [i for i in range(n) if i != u]
        if others and np.any(c[np.ix_(others, others, [u])] != 0):
            raise AlgebraError("non-unit basis elements do not span an ideal")
        # the span of non-unit basis elements must be nilpotent
        if len(self.m_powers) == 0 or self.m_powers[-1].dim != 0:
            raise AlgebraError("the maximal ideal is not nilpotent; algebra is not local")

    # -- basic structure -----------------------------------------------------------
    @cached_property
    def left_mult(self) -> np.ndarray:
        """``left_mult[i]`` is the matrix of multiplication by ``e_i`` (acts on columns)."""
        return np.ascontiguousarray(self.mult.transpose(0, 2, 1))

    def mult_by(self, a) -> np.ndarray:
        """Matrix of multiplication by the element with coordinates ``a``."""
        return self.field.lincomb(np.asarray(a), self.left_mult)

    def product(self, a, b) -> np.ndarray:
        return self.field.matmul(self.mult_by(a), np.asarray(b))

    def unit_vector(self) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[self.unit_index] = self.field.one
        return v

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    @cached_property
    def maximal_ideal(self) -> Subspace:
        rows = [self.basis_vector(i) for i in range(self.dim) if i != self.unit_index]
        if not rows:
            return Subspace.zero(self.field, self.dim)
        return Subspace(self.field, self.dim, np.stack(rows))

    @cached_property
    def m_powers(self) -> list:
        """``[m, m^2, ..., m^t]`` ending with the first zero power (empty list never)."""
        out = [self.maximal_ideal]
        nonunit = [i for i in range(self.dim) if i != self.unit_index]
        for _ in range(self.dim + 1):
            cur = out[-1]
            if cur.dim == 0:
                return out
            vecs = [self.field.matmul(cur.basis, self.left_mult[i].T) for i in nonunit]
            out.append(Subspace(self.field, self.dim, np.concatenate(vecs)))
        return out

    @cached_property
    def generator_indices(self) -> list:
        """Lowest-index basis elements whose classes form a basis of m/m^2."""
        m2 = self.m_powers[1] if len(self.m_powers) > 1 else Subspace.zero(self.field, self.dim)
        vecs = np.concatenate([m2.basis, self.unit_vector()[None, :]])
        return reversed_span(self.field, self.dim, vecs).complement_indices()

    @property
    def edim(self) -> int:
        return len(self.generator_indices)

    @cached_property
    def generator_mult(self) -> np.ndarray:
        return self.left_mult[self.generator_indices]

    @cached_property
    def loewy_length(self) -> int:
        """Smallest t with m^t = 0."""
        return len(self.m_powers)

    def same_as(self, other: "ArtinianAlgebra") -> bool:
        return self is other or (
            self.field == other.field
            and self.unit_index == other.unit_index
            and np.array_equal(self.mult, other.mult)
        )

    # -- ideals ----------------------------------------------------------------------
    def ideal(self, vecs) -> Subspace:
        """Ideal generated by the rows of ``vecs``."""
        vecs = self.field.array(vecs)
        if vecs.ndim == 1:
            vecs = vecs[None, :]
        if vecs.shape[0] == 0:
            return Subspace.zero(self.field, self.dim)
        stacked = [self.field.matmul(vecs, self.left_mult[i].T) for i in range(self.dim)]
        return Subspace(self.field, self.dim, np.concatenate(stacked))

    def is_ideal(self, sub: Subspace) -> bool:
        if sub.dim == 0:
            return True
        return all(sub.contains(Subspace(self.field, self.dim, self.field.matmul(sub.basis, g.T)))
                   for g in self.generator_mult)

    def zero_ideal(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def unit_ideal(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def ideal_mul(self, a: Subspace, b: Subspace) -> Subspace:
        if a.dim == 0 or b.dim == 0:
            return self.zero_ideal()
        rows = [self.field.matmul(self.mult_by(u), b.basis.T).T for u in a.basis]
        return Subspace(self.field, self.dim, np.concatenate(rows))

    def colon(self, i_ideal: Subspace, j_ideal: Subspace) -> Subspace:
        """``I : J = {a : a J subset of I}``."""
        if j_ideal.dim == 0:
            return self.unit_ideal()
        comp = i_ideal.complement_indices()
        if not comp:
            return self.unit_ideal()
        blocks = []
        for v in j_ideal.basis:
            # column i holds e_i * v
            mv = self.field.matmul(self.left_mult.reshape(self.dim * self.dim, self.dim), v)
            mv = mv.reshape(self.dim, self.dim).T
            red = i_ideal.reduce(mv.T).T
            blocks.append(red[comp, :])
        return kernel(self.field, np.concatenate(blocks))

    def annihilator_of(self, j_ideal: Subspace) -> Subspace:
        return self.colon(self.zero_ideal(), j_ideal)

    @cached_property
    def socle(self) -> Subspace:
        """``0 : m`` inside the regular representation."""
        if not self.generator_indices:
            return Subspace.full(self.field, self.dim)
        return kernel(self.field, np.concatenate(list(self.generator_mult)))

    @property
    def type(self) -> int:
        return self.socle.dim

    @property
    def is_gorenstein(self) -> bool:
        return self.socle.dim == 1

    # -- base change -------------------------------------------------------------------
    def over(self, field: Field) -> "ArtinianAlgebra":
        """Same structure constants over another field of the same characteristic."""
        if field == self.field:
            return self
        if field.char != self.field.char:
            raise AlgebraError(f"cannot move an algebra over {self.field} to {field}")
        if self.field.char and self.field.degree > 1:
            if self.mult.size and self.mult.max() >= self.field.char:
                raise AlgebraError("structure constants outside the prime field")
        return ArtinianAlgebra(field, field.embed(self.mult, Field(self.field.char)) if self.field.char
                               else self.mult, self.labels, self.unit_index,
                               value_labels=self.value_labels, monomials=self.monomials,
                               varnames=self.varnames, relations=self.relations, check=False)


# -- monomial quotients --------------------------------------------------------------------
def parse_monomial(text: str, varnames) -> tuple:
    """Exponent vector of a monomial such as ``x^2*y`` or ``x1^3 x2``."""
    s = str(text).strip()
    exps = [0] * len(varnames)
    if s == "1":
        return tuple(exps)
    index = {v: i for i, v in enumerate(varnames)}
    # longest variable names first so "x10" is not read as "x1" then "0"
    names = sorted(varnames, key=len, reverse=True)
    pat = re.compile(r"\s*\*?\s*(" + "|".join(re.escape(v) for v in names) + r")(?:\s*\^\s*([0-9]+))?")
    pos = 0
    if not s:
        raise AlgebraError("empty monomial")
    while pos < len(s):
        m = pat.match(s, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse monomial {text!r} at column {pos + 1}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        exps[index[m.group(1)]] += e
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return tuple(exps)


def format_monomial(exps, varnames) -> str:
    parts = []
    for v, e in zip(varnames, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize_monomials(gens) -> list:
    gens = sorted(set(tuple(g) for g in gens), key=lambda e: (sum(e), tuple(-x for x in e)))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def graded_lex_key(exps):
    return (sum(exps), tuple(-e for e in exps))


def standard_monomials(nvars: int, gens) -> list:
    """Monomials outside the ideal generated by ``gens``, in graded-lex order."""
    bounds = []
    for v in range(nvars):
        pure = [g[v] for g in gens if g[v] > 0 and sum(g) == g[v]]
        if not pure:
            raise AlgebraError(f"variable {v} has no pure power in the ideal; quotient is not artinian")
        bounds.append(min(pure))
    size = 1
    for b in bounds:
        size *= b
    if size > 2_000_000:
        raise CapacityError(f"monomial box of size {size} is too large")
    out = [e for e in itertools.product(*(range(b) for b in bounds))
           if not any(_divides(g, e) for g in gens)]
    out.sort(key=graded_lex_key)
    return out


def algebra_from_monomial_quotient(varnames, gens, field: Field) -> ArtinianAlgebra:
    """``k[vars] / (gens)`` for an ideal that contains a pure power of every variable."""
    varnames = [str(v).strip() for v in varnames]
    if len(set(varnames)) != len(varnames) or not all(varnames):
        raise AlgebraError("variable names must be distinct and non-empty")
    for v in varnames:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_]*[0-9]*", v):
            raise AlgebraError(f"invalid variable name {v!r}")
    exps = [g if isinstance(g, tuple) else parse_monomial(g, varnames) for g in gens]
    if any(sum(e) == 0 for e in exps):
        raise AlgebraError("the unit ideal does not give a local ring")
    exps = minimalize_monomials(exps)
    basis = standard_monomials(len(varnames), exps)
    index = {e: i for i, e in enumerate(basis)}
    n = len(basis)
    mult = np.zeros((n, n, n), dtype=np.int64)
    for i, a in enumerate(basis):
        for j in range(i, n):
            s = tuple(x + y for x, y in zip(a, basis[j]))
            k = index.get(s)
            if k is not None:
                mult[i, j, k] = 1
                mult[j, i, k] = 1
    labels = [format_monomial(e, varnames) for e in basis]
    if field.char == 0:
        mult = mult.astype(object)
    return ArtinianAlgebra(field, mult, labels, 0, monomials=basis, varnames=varnames,
                           relations=exps, check=False)


def quotient_algebra(alg: ArtinianAlgebra, ideal: Subspace) -> ArtinianAlgebra:
    """``R / I`` with the lowest-index basis elements as coset representatives."""
    f, n = alg.field, alg.dim
    if ideal.dim == n:
        raise AlgebraError("quotient by the unit ideal")
    rev = reversed_span(f, n, ideal.basis) if ideal.dim else Subspace.zero(f, n)
    keep = rev.complement_indices()
    # product of representatives, reduced modulo I, read on kept coordinates
    c = alg.mult[np.ix_(keep, keep)].reshape(len(keep) * len(keep), n)
    red = rev.reduce(c)[:, keep].reshape(len(keep), len(keep), len(keep))
    unit = keep.index(alg.unit_index)
    pick = lambda seq: [seq[i] for i in keep] if seq is not None else None  # noqa: E731
    return ArtinianAlgebra(f, red, [alg.labels[i] for i in keep], unit,
                           value_labels=pick(alg.value_labels), monomials=pick(alg.monomials),
                           varnames=alg.varnames, check=False)


def algebra_from_table(field: Field, table, labels=None, unit_index=0, value_labels=None):
    """Validated algebra from explicit structure constants."""
    return ArtinianAlgebra(field, table, labels, unit_index, value_labels=value_labels, check=True)
