"""Finite-dimensional modules over an :class:`~gorlab.algebra.ArtinianAlgebra`.

A module is a vector space ``k^d`` with one ``d x d`` action matrix per algebra
basis element.  Free modules ``R^s`` use the coordinate layout ``j * n + k`` for
the ``k``-th basis element in the ``j``-th summand.  Hom, Ext and Tor are built
from minimal presentations, so their sizes stay close to the optimum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import ArtinianAlgebra
from .linalg import CapacityError, Limits, Subspace, kernel


class ModuleError(ValueError):
    pass


class ModuleLimits:
    """Upper bound on the dimension of any constructed module."""

    max_module_dim = 4000


class ModuleRep:
    """A module given by action matrices ``action[i]`` for each algebra basis element."""

    def __init__(self, algebra: ArtinianAlgebra, action, *, value_labels=None, check: bool = False):
        self.algebra = algebra
        self.field = algebra.field
        action = np.asarray(action)
        if action.ndim != 3 or action.shape[0] != algebra.dim or action.shape[1] != action.shape[2]:
            raise ModuleError("action must have shape (dim R, d, d)")
        self.action = action
        self.dim = action.shape[1]
        if self.dim > ModuleLimits.max_module_dim:
            raise CapacityError(
                f"module of dimension {self.dim} exceeds max_module_dim={ModuleLimits.max_module_dim}")
        self.value_labels = value_labels
        if check:
            self.validate()

    def __repr__(self):
        return f"ModuleRep(dim={self.dim}, over {self.algebra!r})"

    def validate(self):
        f, alg = self.field, self.algebra
        if not np.array_equal(self.action[alg.unit_index], f.eye(self.dim)):
            raise ModuleError("the unit does not act as the identity")
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                lhs = f.matmul(self.action[i], self.action[j])
                rhs = f.lincomb(alg.mult[i, j], self.action)
                if not np.array_equal(lhs, rhs):
                    raise ModuleError(f"module axiom fails for {alg.labels[i]}*{alg.labels[j]}")

    @cached_property
    def gen_action(self) -> np.ndarray:
        """Action matrices of the minimal generators of the maximal ideal."""
        return self.action[self.algebra.generator_indices]

    def act(self, a, v) -> np.ndarray:
        """``a * v`` for an algebra element ``a`` (coordinates) and module vector ``v``."""
        return self.field.matmul(self.field.lincomb(np.asarray(a), self.action), np.asarray(v))

    def zero_sub(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def full_sub(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def span_module(self, vecs) -> Subspace:
        """Submodule generated by the rows of ``vecs``."""
        vecs = np.asarray(vecs)
        if vecs.ndim == 1:
            vecs = vecs[None, :]
        if vecs.shape[0] == 0:
            return self.zero_sub()
        blocks = [self.field.matmul(vecs, a.T) for a in self.action]
        return Subspace(self.field, self.dim, np.concatenate(blocks))

    def m_times(self, sub: Subspace) -> Subspace:
        """``m * U`` for a submodule ``U``."""
        if sub.dim == 0 or len(self.gen_action) == 0:
            return self.zero_sub()
        blocks = [self.field.matmul(sub.basis, g.T) for g in self.gen_action]
        return Subspace(self.field, self.dim, np.concatenate(blocks))

    @cached_property
    def radical(self) -> Subspace:
        return self.m_times(self.full_sub())

    @property
    def num_generators(self) -> int:
        return self.dim - self.radical.dim

    @cached_property
    def socle(self) -> Subspace:
        if self.dim == 0:
            return self.zero_sub()
        if len(self.gen_action) == 0:
            return self.full_sub()
        return kernel(self.field, np.concatenate(list(self.gen_action)))

    @cached_property
    def loewy_dims(self) -> tuple:
        """Dimensions of ``m^i M`` for ``i = 0, 1, ...`` down to zero."""
        cur = self.full_sub()
        out = [cur.dim]
        while cur.dim:
            cur = self.m_times(cur)
            out.append(cur.dim)
        return tuple(out)

    def is_submodule(self, sub: Subspace) -> bool:
        if sub.dim == 0:
            return True
        return all(sub.contains(Subspace(self.field, self.dim, self.field.matmul(sub.basis, g.T)))
                   for g in self.gen_action)


# -- constructions ----------------------------------------------------------------------
def regular_module(alg: ArtinianAlgebra) -> ModuleRep:
    return ModuleRep(alg, alg.left_mult)


def free_module(alg: ArtinianAlgebra, rank: int) -> ModuleRep:
    if rank == 0:
        return ModuleRep(alg, alg.field.zeros((alg.dim, 0, 0)))
    n = alg.dim
    Limits.check(rank * n, rank * n, "free module")
    act = alg.field.zeros((n, rank * n, rank * n))
    for j in range(rank):
        act[:, j * n:(j + 1) * n, j * n:(j + 1) * n] = alg.left_mult
    return ModuleRep(alg, act)


def residue_field_module(alg: ArtinianAlgebra) -> ModuleRep:
    act = alg.field.zeros((alg.dim, 1, 1))
    act[alg.unit_index, 0, 0] = alg.field.one
    return ModuleRep(alg, act)


def canonical_module(alg: ArtinianAlgebra) -> ModuleRep:
    """The dual space of ``R`` with ``(a f)(b) = f(a b)``."""
    return ModuleRep(alg, np.ascontiguousarray(alg.left_mult.transpose(0, 2, 1)),
                     value_labels=alg.value_labels)


def dual_module(mod: ModuleRep) -> ModuleRep:
    """Vector-space dual with the contragredient action (``Hom(M, omega)``)."""
    return ModuleRep(mod.algebra, np.ascontiguousarray(mod.action.transpose(0, 2, 1)))


def submodule(mod: ModuleRep, sub: Subspace) -> ModuleRep:
    """The submodule ``sub`` in the coordinates of its RREF basis."""
    f = mod.field
    if sub.dim == 0:
        return ModuleRep(mod.algebra, f.zeros((mod.algebra.dim, 0, 0)))
    piv = list(sub.pivots)
    bt = sub.basis.T
    act = np.stack([f.matmul(a, bt)[piv, :] for a in mod.action])
    return ModuleRep(mod.algebra, act)


def quotient_module(mod: ModuleRep, sub: Subspace) -> ModuleRep:
    """``M / U`` on the complement basis given by the non-pivot coordinates of ``U``."""
    f = mod.field
    comp = sub.complement_indices()
    if not comp:
        return ModuleRep(mod.algebra, f.zeros((mod.algebra.dim, 0, 0)))
    act = []
    for a in mod.action:
        cols = a[:, comp]
        act.append(sub.reduce(cols.T)[:, comp].T)
    return ModuleRep(mod.algebra, np.stack(act))


def quotient_projection(sub: Subspace) -> np.ndarray:
    """Matrix of ``k^d -> k^d / U`` in the complement coordinates."""
    f = sub.field
    comp = sub.complement_indices()
    return np.ascontiguousarray(sub.reduce(f.eye(sub.ambient))[:, comp].T)


def direct_sum(*mods: ModuleRep) -> ModuleRep:
    alg = mods[0].algebra
    d = sum(m.dim for m in mods)
    act = alg.field.zeros((alg.dim, d, d))
    pos = 0
    for m in mods:
        act[:, pos:pos + m.dim, pos:pos + m.dim] = m.action
        pos += m.dim
    return ModuleRep(alg, act)


def _same_algebra(m: ModuleRep, n: ModuleRep):
    if not m.algebra.same_as(n.algebra):
        raise ModuleError("modules live over different algebras")


# -- presentations ------------------------------------------------------------------------
@dataclass
class Presentation:
    """Minimal presentation ``R^t --A--> R^s --pi--> M --> 0``.

    ``generators`` are the vectors of ``M`` hit by the free basis of ``R^s``;
    ``cover`` is the matrix of ``pi``; ``section`` is a right inverse of it;
    ``syzygy_space`` is ``ker pi`` inside ``R^s``; ``relations`` are minimal
    generators of that kernel (rows, as vectors of ``R^s``), so the presentation
    matrix has entry ``(j, l)`` equal to block ``j`` of ``relations[l]``.
    """

    module: ModuleRep
    generators: np.ndarray
    cover: np.ndarray
    section: np.ndarray
    syzygy_space: Subspace
    relations: np.ndarray

    @property
    def rank(self) -> int:
        return self.generators.shape[0]

    @property
    def num_relations(self) -> int:
        return self.relations.shape[0]

    def matrix(self) -> np.ndarray:
        """Presentation matrix as an ``(s, t, dim R)`` array of ring elements."""
        n = self.module.algebra.dim
        s, t = self.rank, self.num_relations
        return np.ascontiguousarray(self.relations.reshape(t, s, n).transpose(1, 0, 2))

    @cached_property
    def syzygy(self) -> ModuleRep:
        return submodule(free_module(self.module.algebra, self.rank), self.syzygy_space)


def minimal_generators(mod: ModuleRep, sub: Subspace | None = None) -> np.ndarray:
    """Vectors of a submodule (default: all of ``M``) whose classes mod ``m U`` form a basis."""
    f = mod.field
    if sub is None:
        rad = mod.radical
        return f.eye(mod.dim)[rad.complement_indices()]
    if sub.dim == 0:
        return f.zeros((0, mod.dim))
    rad = mod.m_times(sub)
    q = rad.quotient_coordinates(sub.basis)
    _, piv = f.rref(q.T)
    return sub.basis[list(piv)]


def _cover_matrix(mod: ModuleRep, gens: np.ndarray) -> np.ndarray:
    f = mod.field
    n = mod.algebra.dim
    s = gens.shape[0]
    cols = f.zeros((mod.dim, s * n))
    for j in range(s):
        # column j*n + k is e_k * g_j
        cols[:, j * n:(j + 1) * n] = np.stack([f.matmul(a, gens[j]) for a in mod.action], axis=1)
    return cols


def _right_inverse(f, m: np.ndarray) -> np.ndarray:
    """A right inverse of a surjective matrix."""
    rows, cols = m.shape
    if rows == 0:
        return f.zeros((cols, 0))
    _, piv = f.rref(m)
    if len(piv) != rows:
        raise ModuleError("cover map is not surjective")
    sq = m[:, list(piv)]
    r, _ = f.rref(np.concatenate([sq, f.eye(rows)], axis=1))
    inv = r[:, rows:]
    out = f.zeros((cols, rows))
    out[list(piv), :] = inv
    return out


def minimal_presentation(mod: ModuleRep) -> Presentation:
    alg = mod.algebra
    f = mod.field
    gens = minimal_generators(mod)
    s = gens.shape[0]
    free = free_module(alg, s)
    if s == 0:
        empty = f.zeros((0, 0))
        return Presentation(mod, gens, f.zeros((mod.dim, 0)), empty, Subspace.zero(f, 0), empty)
    cover = _cover_matrix(mod, gens)
    section = _right_inverse(f, cover)
    syz = kernel(f, cover)
    rels = minimal_generators(free, syz)
    return Presentation(mod, gens, cover, section, syz, rels)


def syzygy(mod: ModuleRep, times: int = 1) -> ModuleRep:
    for _ in range(times):
        mod = minimal_presentation(mod).syzygy
    return mod


def transpose_module(mod: ModuleRep, pres: Presentation | None = None) -> ModuleRep:
    """``Tr M``: cokernel of the dual of the presentation map ``R^t -> R^s``."""
    pres = pres or minimal_presentation(mod)
    alg = mod.algebra
    s, t = pres.rank, pres.num_relations
    free_t = free_module(alg, t)
    if t == 0:
        return free_t
    mat = pres.matrix()  # (s, t, n)
    # image of the j-th basis vector of R^s under the transposed map
    gens = np.ascontiguousarray(mat.reshape(s, t * alg.dim))
    return quotient_module(free_t, free_t.span_module(gens))


# -- Hom ------------------------------------------------------------------------------------
class HomModule:
    """``Hom_R(M, N)`` realised as tuples ``(f(g_1), ..., f(g_s))`` in ``N^s``.

    ``module`` is the Hom module itself (post-composition action) and
    ``space`` its embedding into ``N^s``.
    """

    def __init__(self, source: ModuleRep, target: ModuleRep, pres: Presentation | None = None):
        _same_algebra(source, target)
        self.source = source
        self.target = target
        self.pres = pres or minimal_presentation(source)
        f = source.field
        s, dn = self.pres.rank, target.dim
        self.ambient = free_like(target, s)
        if s == 0 or dn == 0:
            self.space = Subspace.zero(f, s * dn)
        elif self.pres.num_relations == 0:
            self.space = Subspace.full(f, s * dn)
        else:
            self.space = kernel(f, relation_operator(target, self.pres.relations, s))
        self.module = submodule(self.ambient, self.space)

    @property
    def dim(self) -> int:
        return self.space.dim

    def element(self, coords) -> np.ndarray:
        """Vector in ``N^s`` for Hom coordinates ``coords``."""
        return self.field_matmul(np.asarray(coords), self.space.basis)

    def field_matmul(self, a, b):
        return self.source.field.matmul(a, b)

    def matrix_of(self, vec) -> np.ndarray:
        """The ``dim N x dim M`` matrix of the homomorphism with ``N^s`` vector ``vec``."""
        f = self.source.field
        n = self.source.algebra.dim
        s, dn = self.pres.rank, self.target.dim
        if s == 0:
            return f.zeros((dn, self.source.dim))
        vals = np.asarray(vec).reshape(s, dn)
        # column (j, k) of the evaluation matrix is e_k * f(g_j)
        ev = f.zeros((dn, s * n))
        for j in range(s):
            ev[:, j * n:(j + 1) * n] = f.matmul(self.target.action.reshape(n * dn, dn), vals[j]).reshape(n, dn).T
        return f.matmul(ev, self.pres.section)

    def evaluate(self, vec, v) -> np.ndarray:
        return self.source.field.matmul(self.matrix_of(vec), np.asarray(v))

    def basis_matrices(self) -> list:
        return [self.matrix_of(b) for b in self.space.basis]


def free_like(target: ModuleRep, s: int) -> ModuleRep:
    """``N^s`` with block-diagonal action."""
    return direct_sum(*([target] * s)) if s else ModuleRep(target.algebra, target.field.zeros((target.algebra.dim, 0, 0)))


def relation_operator(target: ModuleRep, relations: np.ndarray, s: int) -> np.ndarray:
    """Matrix of ``N^s -> N^t``, ``(n_j) -> (sum_j r_{jl} n_j)_l`` for relations ``r_l`` in ``R^s``."""
    f = target.field
    n = target.algebra.dim
    dn = target.dim
    t = relations.shape[0]
    Limits.check(t * dn, s * dn, "Hom system")
    out = f.zeros((t * dn, s * dn))
    flat = target.action.reshape(n, dn * dn)
    for l in range(t):
        r = relations[l].reshape(s, n)
        for j in range(s):
            if np.any(r[j] != 0):
                out[l * dn:(l + 1) * dn, j * dn:(j + 1) * dn] = f.matmul(r[j][None, :], flat)[0].reshape(dn, dn)
    return out


def hom_module(source: ModuleRep, target: ModuleRep) -> HomModule:
    return HomModule(source, target)


def hom_direct_dim(source: ModuleRep, target: ModuleRep) -> int:
    """Dimension of Hom by solving ``F A_i = B_i F`` directly (slow reference)."""
    f = source.field
    dm, dn = source.dim, target.dim
    if dm == 0 or dn == 0:
        return 0
    blocks = []
    eye_m, eye_n = f.eye(dm), f.eye(dn)
    for a, b in zip(source.gen_action, target.gen_action):
        # vec(F A) - vec(B F) with row-major vec(F)
        blocks.append(f.subm(np.kron(eye_n, a.T), np.kron(b, eye_m)))
    if not blocks:
        return dm * dn
    return kernel(f, np.concatenate(blocks)).dim


# -- Ext and Tor ------------------------------------------------------------------------------
def _restriction_operator(target: ModuleRep, gens_in_free: np.ndarray, s: int) -> np.ndarray:
    """``N^s -> N^{s'}``: restrict ``phi: R^s -> N`` to the given elements of ``R^s``."""
    return relation_operator(target, gens_in_free, s)


def ext1(source: ModuleRep, target: ModuleRep, pres: Presentation | None = None) -> ModuleRep:
    """``Ext^1(M, N) = Hom(Omega M, N) / im(Hom(F_0, N))``."""
    _same_algebra(source, target)
    pres = pres or minimal_presentation(source)
    f = source.field
    s = pres.rank
    omega = pres.syzygy
    if omega.dim == 0 or target.dim == 0:
        return ModuleRep(source.algebra, f.zeros((source.algebra.dim, 0, 0)))
    # Hom(Omega M, N) through a presentation of Omega M whose generators are pres.relations
    h_gens = pres.syzygy_space.coordinates(pres.relations)
    opres = _presentation_with_generators(omega, h_gens)
    hom = HomModule(omega, target, opres)
    res = _restriction_operator(target, pres.relations, s)
    img = Subspace(f, hom.space.ambient, res.T) if res.size else Subspace.zero(f, hom.space.ambient)
    return quotient_module(hom.module, Subspace(f, hom.dim, hom.space.coordinates(img.basis)))


def _presentation_with_generators(mod: ModuleRep, gens: np.ndarray) -> Presentation:
    """Presentation of ``mod`` whose cover sends the free basis to ``gens``."""
    f = mod.field
    s = gens.shape[0]
    cover = _cover_matrix(mod, gens)
    section = _right_inverse(f, cover)
    syz = kernel(f, cover)
    rels = minimal_generators(free_module(mod.algebra, s), syz)
    return Presentation(mod, gens, cover, section, syz, rels)


def ext(i: int, source: ModuleRep, target: ModuleRep) -> ModuleRep:
    if i < 1:
        raise ValueError("ext index must be at least 1")
    return ext1(syzygy(source, i - 1), target)


def tor1(source: ModuleRep, target: ModuleRep) -> ModuleRep:
    """``Tor_1(M, N) = ker(F_1 (x) N -> F_0 (x) N) / im(F_2 (x) N -> F_1 (x) N)``."""
    _same_algebra(source, target)
    f = source.field
    pres = minimal_presentation(source)
    s, t = pres.rank, pres.num_relations
    dn = target.dim
    if t == 0 or dn == 0:
        return ModuleRep(source.algebra, f.zeros((source.algebra.dim, 0, 0)))
    omega = pres.syzygy
    h_gens = pres.syzygy_space.coordinates(pres.relations)
    opres = _presentation_with_generators(omega, h_gens)
    # d1: N^t -> N^s, (n_l) -> sum_l h_l n_l
    d1 = relation_operator(target, pres.relations, s)
    d1 = _transpose_blocks(d1, t, s, dn)
    ker = kernel(f, d1)
    # d2: N^{t2} -> N^t from the relations of Omega M
    t2 = opres.num_relations
    ambient = free_like(target, t)
    if t2:
        d2 = _transpose_blocks(relation_operator(target, opres.relations, t), t2, t, dn)
        img = Subspace(f, t * dn, d2.T)
    else:
        img = Subspace.zero(f, t * dn)
    kmod = submodule(ambient, ker)
    return quotient_module(kmod, Subspace(f, ker.dim, ker.coordinates(img.basis)))


def _transpose_blocks(op: np.ndarray, t: int, s: int, dn: int) -> np.ndarray:
    """Swap the roles of source and target block indices of a block operator.

    ``relation_operator`` builds blocks ``(l, j) = r_{jl}`` acting on ``N``; the
    transposed presentation uses block ``(j, l)`` with the same entry.
    """
    blocks = op.reshape(t, dn, s, dn)
    return np.ascontiguousarray(blocks.transpose(2, 1, 0, 3).reshape(s * dn, t * dn))


# -- annihilators --------------------------------------------------------------------------
def annihilator(mod: ModuleRep) -> Subspace:
    """Ideal of ring elements acting as zero on ``mod``."""
    alg = mod.algebra
    if mod.dim == 0:
        return alg.unit_ideal()
    Limits.check(mod.dim * mod.dim, alg.dim, "annihilator system")
    return kernel(alg.field, mod.action.reshape(alg.dim, mod.dim * mod.dim).T)


def annihilates(mod: ModuleRep, ideal: Subspace) -> bool:
    if ideal.dim == 0 or mod.dim == 0:
        return True
    f = mod.field
    flat = mod.action.reshape(mod.algebra.dim, -1)
    return not np.any(f.matmul(ideal.basis, flat) != 0)


# -- isomorphism -------------------------------------------------------------------------------
@dataclass
class IsoResult:
    verdict: str  # "yes", "no" or "unknown"
    iso: np.ndarray | None = None
    reason: str = ""


def module_invariants(mod: ModuleRep) -> dict:
    return {
        "dim": mod.dim,
        "loewy": mod.loewy_dims,
        "socle": mod.socle.dim,
        "generators": mod.num_generators,
    }


def module_isomorphic(m: ModuleRep, n: ModuleRep, *, trials: int = 64, seed: int = 0,
                      exhaustive_cap: int = 1 << 16) -> IsoResult:
    """Search for an isomorphism ``M -> N``; ``no`` only with proof."""
    _same_algebra(m, n)
    im, inv = module_invariants(m), module_invariants(n)
    for key in im:
        if im[key] != inv[key]:
            return IsoResult("no", reason=f"{key}: {im[key]} != {inv[key]}")
    if m.dim == 0:
        return IsoResult("yes", m.field.zeros((0, 0)))
    f = m.field
    hom = HomModule(m, n)
    if hom.dim == 0:
        return IsoResult("no", reason="Hom(M, N) = 0")
    rng = random.Random(seed)
    mats = np.stack(hom.basis_matrices())

    def full_rank(coeffs):
        mat = f.lincomb(np.asarray(coeffs), mats)
        return mat if len(f.rref(mat)[1]) == m.dim else None

    for _ in range(trials):
        coeffs = f.zeros(hom.dim)
        for i in range(hom.dim):
            coeffs[i] = f.random_scalar(rng)
        mat = full_rank(coeffs)
        if mat is not None:
            return IsoResult("yes", mat)
    if f.is_finite and f.q ** hom.dim <= exhaustive_cap:
        for idx in range(f.q ** hom.dim):
            coeffs = np.zeros(hom.dim, dtype=np.int64)
            x = idx
            for i in range(hom.dim):
                coeffs[i] = x % f.q
                x //= f.q
            mat = full_rank(coeffs)
            if mat is not None:
                return IsoResult("yes", mat)
        return IsoResult("no", reason="exhaustive search over Hom(M, N) found no isomorphism")
    return IsoResult("unknown", reason="invariants agree and no isomorphism was found")
