"""Trace ideals, residues and Gorenstein-type classification of artinian algebras."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import ArtinianAlgebra, minimalize_monomials, quotient_algebra
from .fields import Field
from .linalg import CapacityError, Subspace, kernel, solve
from .modules import (
    HomModule,
    ModuleRep,
    _cover_matrix,
    canonical_module,
    dual_module,
    free_module,
    minimal_generators,
    minimal_presentation,
    module_isomorphic,
    quotient_module,
    regular_module,
    submodule,
)


class SearchLimits:
    wag_cap = 1 << 20
    wag_trials = 200
    sv_layer_cap = 1 << 12
    sv_max_ideals = 20000


# -- ideal helpers -----------------------------------------------------------------------------
def colon_max(alg: ArtinianAlgebra, ideal: Subspace) -> Subspace:
    """``I : m``."""
    comp = ideal.complement_indices()
    if not comp or not alg.generator_indices:
        return alg.unit_ideal()
    blocks = [ideal.reduce(g.T).T[comp, :] for g in alg.generator_mult]
    return kernel(alg.field, np.concatenate(blocks))


def socle_dim_of_quotient(alg: ArtinianAlgebra, ideal: Subspace) -> int:
    """``dim soc(R/I) = dim (I : m) - dim I``."""
    return colon_max(alg, ideal).dim - ideal.dim


def omega_annihilated_by(alg: ArtinianAlgebra, ideal: Subspace) -> Subspace:
    """``0 :_omega I`` inside the canonical module."""
    if ideal.dim == 0:
        return Subspace.full(alg.field, alg.dim)
    mats = [alg.mult_by(a).T for a in ideal.basis]
    return kernel(alg.field, np.concatenate(mats))


def cyclic_submodule(mod: ModuleRep, w) -> Subspace:
    return mod.span_module(np.asarray(w)[None, :])


# -- trace and residue --------------------------------------------------------------------------
def trace_ideal(mod: ModuleRep) -> Subspace:
    """Sum of the images of all homomorphisms ``M -> R``."""
    alg = mod.algebra
    hom = HomModule(mod, regular_module(alg))
    if hom.dim == 0:
        return alg.zero_ideal()
    vals = hom.space.basis.reshape(hom.dim * hom.pres.rank, alg.dim)
    return alg.ideal(vals)


def trace_ideal_and_residue(alg: ArtinianAlgebra) -> tuple[Subspace, int]:
    tr = trace_ideal(canonical_module(alg))
    return tr, alg.dim - tr.dim


# -- weakly almost Gorenstein ---------------------------------------------------------------------
@dataclass
class WagResult:
    verdict: str  # "yes", "no", "unknown"
    ideal: Subspace | None = None
    w: np.ndarray | None = None
    exhaustive: bool = False
    tested: int = 0
    field: Field | None = None


def is_wag_certificate(alg: ArtinianAlgebra, w, omega: ModuleRep | None = None) -> bool:
    """``R w`` contains ``m omega``."""
    omega = omega or canonical_module(alg)
    return cyclic_submodule(omega, w).contains(omega.radical)


def _projective_points(f: Field, r: int):
    """Nonzero vectors of ``f^r`` whose first nonzero entry is one."""
    q = f.q
    for lead in range(r):
        for tail in itertools.product(range(q), repeat=r - lead - 1):
            v = np.zeros(r, dtype=np.int64)
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def _certificate_from_ideal(alg: ArtinianAlgebra, omega: ModuleRep, ideal: Subspace):
    sub = omega_annihilated_by(alg, ideal)
    gens = minimal_generators(omega, sub)
    return gens[0]


def wag_search(alg: ArtinianAlgebra, *, cap: int | None = None, trials: int | None = None,
               seed: int = 0) -> WagResult:
    """Look for an ideal ``I`` inside the socle with ``R/I`` Gorenstein.

    Over finite fields every candidate is tested: only hyperplanes of the socle
    and the socle itself can work because ``soc R / I`` embeds in ``soc(R/I)``.
    Over the rationals random elements ``w`` of the canonical module are tried.
    """
    cap = SearchLimits.wag_cap if cap is None else cap
    trials = SearchLimits.wag_trials if trials is None else trials
    f = alg.field
    omega = canonical_module(alg)
    soc = alg.socle
    r = soc.dim
    if r == 1:
        zero = alg.zero_ideal()
        return WagResult("yes", zero, _certificate_from_ideal(alg, omega, zero), True, 1, f)
    if not f.is_finite:
        rng = random.Random(seed)
        for t in range(trials):
            w = f.random_array(rng, alg.dim, bound=10)
            if is_wag_certificate(alg, w, omega):
                ann = _ann_matrix(omega, w)
                return WagResult("yes", ann, w, False, t + 1, f)
        return WagResult("unknown", None, None, False, trials, f)
    if f.q ** r > cap:
        raise CapacityError(f"wag_search: {f.q}^{r} socle vectors exceed the cap {cap}")
    tested = 0
    candidates = []
    for lam in _projective_points(f, r):
        # hyperplane {c : lam . c = 0} of socle coordinates
        hyper = kernel(f, lam[None, :])
        candidates.append(Subspace(f, alg.dim, f.matmul(hyper.basis, soc.basis)) if hyper.dim else alg.zero_ideal())
    candidates.append(soc)
    for ideal in candidates:
        tested += 1
        if socle_dim_of_quotient(alg, ideal) == 1:
            w = _certificate_from_ideal(alg, omega, ideal)
            return WagResult("yes", ideal, w, True, tested, f)
    return WagResult("no", None, None, True, tested, f)


def _ann_matrix(omega: ModuleRep, w) -> Subspace:
    """``ann(w) = {a : a w = 0}``."""
    f = omega.field
    cols = np.stack([f.matmul(a, w) for a in omega.action], axis=1)
    return kernel(f, cols)


def element_annihilator(omega: ModuleRep, w) -> Subspace:
    return _ann_matrix(omega, w)


def wag_bruteforce(alg: ArtinianAlgebra, limit: int = 1 << 16):
    """Reference search over coset representatives of ``omega / m omega``."""
    f = alg.field
    omega = canonical_module(alg)
    reps = omega.radical.complement_indices()
    if f.q ** len(reps) > limit:
        raise CapacityError("brute-force WAG search is too large")
    target = omega.radical
    for coeffs in itertools.product(range(f.q), repeat=len(reps)):
        w = f.zeros(alg.dim)
        w[reps] = coeffs
        if cyclic_submodule(omega, w).contains(target):
            return w
    return None


def wag_over_extensions(alg: ArtinianAlgebra, degrees=(1,), **kw) -> dict:
    """Per-field WAG verdicts after base change to ``GF(q^s)``."""
    out = {}
    f = alg.field
    for s in degrees:
        if not f.is_finite:
            if s == 1:
                out[str(f)] = wag_search(alg, **kw)
            continue
        ext = f if s == 1 else f.extension(s)
        out[str(ext)] = wag_search(alg.over(ext), **kw)
    return out


# -- cyclic covers of omega ---------------------------------------------------------------------------
def cyclic_cover_numbers(alg: ArtinianAlgebra, w) -> dict:
    """Dimensions of ``omega / Rw`` and of ``ann(w)``, and whether ``ann(w)`` lies in the socle."""
    omega = canonical_module(alg)
    rw = cyclic_submodule(omega, w)
    ann = _ann_matrix(omega, w)
    return {
        "type": alg.socle.dim,
        "coker_dim": alg.dim - rw.dim,
        "kernel_dim": ann.dim,
        "kernel_in_socle": alg.socle.contains(ann),
    }


def block_presentation_shape(alg: ArtinianAlgebra, w) -> dict:
    """Build the block presentation of ``omega`` attached to a certificate ``w``.

    Generators are ``w_1, ..., w_{r-1}, w_r = w``; relations are
    ``x_i e_j - y_{j+1,i} e_r`` and ``z_l e_r`` with ``z_l`` spanning ``ann(w)``.
    Returns counts and whether the relations generate the full syzygy.
    """
    f = alg.field
    omega = canonical_module(alg)
    n = alg.dim
    r = alg.socle.dim
    edim = alg.edim
    w = np.asarray(w)
    rad = omega.radical
    span_w = Subspace(f, n, np.concatenate([rad.basis, w[None, :]]))
    others = [e for e in span_w.complement_indices()]
    gens = np.concatenate([f.eye(n)[others], w[None, :]]) if others else w[None, :]
    if gens.shape[0] != r:
        return {"ok": False, "reason": "certificate does not extend to minimal generators"}
    rw_mat = np.stack([f.matmul(a, w) for a in omega.action], axis=1)  # column k = e_k w
    rels = []
    for j in range(r - 1):
        for gi in alg.generator_indices:
            xw = f.matmul(omega.action[gi], gens[j])
            y = solve(f, rw_mat, xw)
            if y is None:
                return {"ok": False, "reason": "m omega is not inside R w"}
            v = f.zeros(r * n)
            v[j * n + gi] = f.one
            v[(r - 1) * n:] = f.negm(y)
            rels.append(v)
    ann = _ann_matrix(omega, w)
    for z in ann.basis:
        v = f.zeros(r * n)
        v[(r - 1) * n:] = z
        rels.append(v)
    q = len(rels)
    m = max(r - 1, 0)
    pres = minimal_presentation(omega)
    cover = _cover_matrix(omega, gens)
    syz = kernel(f, cover)
    free = free_module(alg, r)
    generated = free.span_module(np.stack(rels)) if rels else Subspace.zero(f, r * n)
    return {
        "ok": generated == syz and q == (r - 1) * edim + m,
        "q": q,
        "expected_q": (r - 1) * edim + m,
        "m": m,
        "cover_rank": pres.rank,
        "relations_generate": generated == syz,
    }


# -- SV almost Gorenstein --------------------------------------------------------------------------
@dataclass
class SvResult:
    verdict: str  # "yes", "no", "skipped"
    ideals: int = 0
    witness: Subspace | None = None
    reason: str = ""


def enumerate_ideals(alg: ArtinianAlgebra, layer_cap: int | None = None, max_ideals: int | None = None):
    """All ideals of a finite-field algebra, layer by layer (by dimension)."""
    layer_cap = SearchLimits.sv_layer_cap if layer_cap is None else layer_cap
    max_ideals = SearchLimits.sv_max_ideals if max_ideals is None else max_ideals
    f = alg.field
    if not f.is_finite:
        raise CapacityError("ideal enumeration needs a finite field")
    layer = {alg.zero_ideal().key: alg.zero_ideal()}
    total = 0
    while layer:
        if len(layer) > layer_cap:
            raise CapacityError(f"ideal layer with {len(layer)} members exceeds the cap {layer_cap}")
        nxt = {}
        for ideal in layer.values():
            total += 1
            if total > max_ideals:
                raise CapacityError(f"more than {max_ideals} ideals")
            yield ideal
            top = colon_max(alg, ideal)
            coords = ideal.quotient_coordinates(top.basis)
            _, piv = f.rref(coords.T)
            reps = top.basis[list(piv)]
            u = reps.shape[0]
            if u == 0:
                continue
            if f.q ** u > layer_cap:
                raise CapacityError(f"{f.q}^{u} socle points above an ideal exceed the cap {layer_cap}")
            for lam in _projective_points(f, u):
                v = f.matmul(lam, reps)
                child = ideal.sum(Subspace(f, alg.dim, v))
                nxt.setdefault(child.key, child)
        layer = nxt


def sv_almost_gorenstein(alg: ArtinianAlgebra, **kw) -> SvResult:
    """Check ``0:(0:I)`` inside ``I:m`` for every ideal ``I``."""
    if not alg.field.is_finite:
        return SvResult("skipped", reason="ideal enumeration needs a finite field")
    count = 0
    try:
        for ideal in enumerate_ideals(alg, **kw):
            count += 1
            double = alg.annihilator_of(alg.annihilator_of(ideal))
            if not colon_max(alg, ideal).contains(double):
                return SvResult("no", count, ideal)
    except CapacityError as exc:
        return SvResult("skipped", count, reason=str(exc))
    return SvResult("yes", count)


# -- socle quotient and self-duality ------------------------------------------------------------------
def socle_quotient_gorenstein(alg: ArtinianAlgebra) -> bool:
    if alg.socle.dim == alg.dim:
        return False  # R is the field; R/soc R is the zero ring
    quo = quotient_algebra(alg, alg.socle)
    return quo.socle.dim == 1


def max_ideal_mod_socle(alg: ArtinianAlgebra) -> ModuleRep:
    reg = regular_module(alg)
    m = submodule(reg, alg.maximal_ideal)
    soc = alg.socle
    if soc.dim == alg.dim:
        return m
    inside = Subspace(alg.field, m.dim, alg.maximal_ideal.coordinates(soc.basis))
    return quotient_module(m, inside)


def max_ideal_self_dual(alg: ArtinianAlgebra, seed: int = 0) -> str:
    x = max_ideal_mod_socle(alg)
    return module_isomorphic(x, dual_module(x), seed=seed).verdict


# -- the classification record ------------------------------------------------------------------------
@dataclass
class ClassificationRecord:
    dim: int
    edim: int
    type: int
    residue: int
    gorenstein: bool
    nearly_gorenstein: bool
    weakly_almost_gorenstein: str
    sv_almost_gorenstein: str
    soc_quotient_gorenstein: bool
    max_ideal_self_dual: str
    trace_ideal: Subspace
    wag_ideal: Subspace | None = None
    wag_element_w: np.ndarray | None = None
    wag_by_field: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)


def classify(alg: ArtinianAlgebra, *, extension_degrees=(1,), seed: int = 0, sv: bool = True,
             wag_cap: int | None = None) -> ClassificationRecord:
    tr, res = trace_ideal_and_residue(alg)
    notes = []
    try:
        per_field = wag_over_extensions(alg, extension_degrees, cap=wag_cap, seed=seed)
    except CapacityError as exc:
        raise CapacityError(f"classify/wag_search: {exc}") from exc
    base = per_field[str(alg.field)] if str(alg.field) in per_field else wag_search(alg, cap=wag_cap, seed=seed)
    if sv:
        svr = sv_almost_gorenstein(alg)
        if svr.verdict == "skipped":
            notes.append(f"sv_almost_gorenstein skipped: {svr.reason}")
        sv_flag = svr.verdict
    else:
        sv_flag = "skipped"
        notes.append("sv_almost_gorenstein skipped: disabled")
    return ClassificationRecord(
        dim=alg.dim,
        edim=alg.edim,
        type=alg.socle.dim,
        residue=res,
        gorenstein=alg.socle.dim == 1,
        nearly_gorenstein=res <= 1,
        weakly_almost_gorenstein=base.verdict,
        sv_almost_gorenstein=sv_flag,
        soc_quotient_gorenstein=socle_quotient_gorenstein(alg),
        max_ideal_self_dual=max_ideal_self_dual(alg, seed=seed),
        trace_ideal=tr,
        wag_ideal=base.ideal,
        wag_element_w=base.w,
        wag_by_field={k: v.verdict for k, v in per_field.items()},
        notes=notes,
    )


# -- monomial rings with Gorenstein socle quotient -----------------------------------------------------
def l57_shape(alg: ArtinianAlgebra):
    """Exponent ``p`` when the defining ideal is ``(x_1^p) + n(x_2, ..., x_n)``, else ``None``."""
    if alg.relations is None or alg.varnames is None:
        return None
    nv = len(alg.varnames)
    rel = set(alg.relations)
    pure = [g for g in rel if g[0] == sum(g) and g[0] > 0]
    if len(pure) != 1:
        return None
    p = pure[0][0]
    expected = {pure[0]}
    for j in range(1, nv):
        for i in range(nv):
            e = [0] * nv
            e[i] += 1
            e[j] += 1
            expected.add(tuple(e))
    if set(minimalize_monomials(expected)) != rel or p < 2:
        return None
    return p


def l57_family_check(alg: ArtinianAlgebra) -> dict:
    p = l57_shape(alg)
    out = {
        "type": alg.socle.dim,
        "soc_quotient_gorenstein": socle_quotient_gorenstein(alg),
        "l57_shape": p is not None,
    }
    if p is not None:
        n = len(alg.varnames)
        out["p"] = p
        out["n"] = n
        out["ok"] = out["type"] == n and out["soc_quotient_gorenstein"]
    else:
        out["ok"] = True
    return out
