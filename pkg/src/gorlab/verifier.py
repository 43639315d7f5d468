"""Catalog of theorem checks run against algebra and semigroup instances."""

from __future__ import annotations

import itertools
import random
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import families
from .algebra import ArtinianAlgebra, quotient_algebra
from .classify import (
    colon_max,
    is_wag_certificate,
    l57_shape,
    cyclic_cover_numbers,
    block_presentation_shape,
    max_ideal_self_dual,
    socle_quotient_gorenstein,
    sv_almost_gorenstein,
    trace_ideal_and_residue,
    wag_search,
)
from .fields import Field
from .linalg import CapacityError, Subspace
from .modules import (
    HomModule,
    annihilator,
    annihilates,
    canonical_module,
    ext,
    ext1,
    free_module,
    minimal_presentation,
    quotient_module,
    regular_module,
    residue_field_module,
    submodule,
    syzygy,
    tor1,
    transpose_module,
)
from .numsgp import (
    NumericalSemigroup,
    ag_oracle,
    canonical_value_ideal,
    artinian_reduction,
    ext1_canonical_type2,
    project_reduction,
    trace_and_residue_ns,
    value_image,
)
from .specio import AlgebraSpec

ARTINIAN_CHECKS = ("THM_M_EQ", "COR_C14", "LEM_4_D0", "PROP_1_D0", "THM_5", "THM_511", "LEM_57",
                   "LEM_58", "COR_C5", "HV_NG_SVAG")
SEMIGROUP_CHECKS = ("LEM_L22", "THM_B", "THM_26", "SEC4_TYPE2", "THM_C", "HHS_AG_NG")
CHECK_IDS = ARTINIAN_CHECKS + SEMIGROUP_CHECKS
VERDICTS = ("pass", "fail", "skipped", "hypothesis_not_met")


@dataclass
class Instance:
    instance_id: str
    spec: AlgebraSpec
    seed: int = 0

    @property
    def is_semigroup(self) -> bool:
        return self.spec.kind == "numerical_semigroup"


@dataclass
class CheckResult:
    check_id: str
    instance_id: str
    verdict: str
    reason: str = ""
    payload: dict = dc_field(default_factory=dict)
    wall_time: float = 0.0


@dataclass
class SuiteConfig:
    seed: int = 0
    fields: tuple = (2, 3)
    random_count: int = 60
    random_nvars: tuple = (1, 2, 3)
    random_maxdeg: int = 4
    max_dim: int = 30
    homological_max_dim: int = 12
    semigroup_count: int = 50
    semigroup_max_embdim: int = 4
    semigroup_max_gen: int = 13
    reduction_max_dim: int = 36
    extension_degrees: tuple = (1, 2)
    sv_max_dim: int = 6
    witness_random: int = 5
    checks: tuple = CHECK_IDS
    suites: tuple = ("all",)

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in self.__dict__.items()}


@dataclass
class SuiteReport:
    config: dict
    results: list

    @property
    def summary(self) -> dict:
        total = {v: 0 for v in VERDICTS}
        per_check = {}
        for r in self.results:
            total[r.verdict] += 1
            per_check.setdefault(r.check_id, {v: 0 for v in VERDICTS})[r.verdict] += 1
        return {"total": total, "by_check": {k: per_check[k] for k in CHECK_IDS if k in per_check}}

    @property
    def failed(self) -> list:
        return [r for r in self.results if r.verdict == "fail"]


class CheckFailure(Exception):
    def __init__(self, reason: str, payload: dict | None = None):
        super().__init__(reason)
        self.payload = payload or {}


class HypothesisNotMet(Exception):
    pass


class Skip(Exception):
    pass


def _require(cond: bool, reason: str, **payload):
    if not cond:
        raise CheckFailure(reason, payload)


def _labels(alg: ArtinianAlgebra, sub: Subspace) -> list:
    """Readable basis of a subspace: one dict of label -> coefficient per row."""
    f = alg.field
    return [{alg.labels[i]: f.format_scalar(v[i]) for i in range(alg.dim) if v[i] != 0} for v in sub.basis]


# -- artinian context ---------------------------------------------------------------------------------
class ArtinianContext:
    def __init__(self, alg: ArtinianAlgebra, inst: Instance, cfg: SuiteConfig):
        self.alg = alg
        self.inst = inst
        self.cfg = cfg

    @cached_property
    def omega(self):
        return canonical_module(self.alg)

    @cached_property
    def regular(self):
        return regular_module(self.alg)

    @cached_property
    def trace(self):
        return trace_ideal_and_residue(self.alg)

    @cached_property
    def omega_pres(self):
        return minimal_presentation(self.omega)

    @cached_property
    def tr_omega(self):
        return transpose_module(self.omega, self.omega_pres)

    @cached_property
    def wag(self):
        return wag_search(self.alg, seed=self.inst.seed)

    @cached_property
    def wag_fields(self):
        out = {}
        f = self.alg.field
        for s in self.cfg.extension_degrees:
            if not f.is_finite:
                continue
            ext_field = f if s == 1 else f.extension(s)
            if ext_field.q > 1024:
                continue
            out[str(ext_field)] = wag_search(self.alg.over(ext_field), seed=self.inst.seed).verdict
        return out

    @cached_property
    def witnesses(self) -> list:
        """Named witness modules: fixed ones plus seeded random modules."""
        alg = self.alg
        out = [("k", residue_field_module(alg)),
               ("m", submodule(self.regular, alg.maximal_ideal)),
               ("omega", self.omega),
               ("Tr omega", self.tr_omega),
               ("Omega k", syzygy(residue_field_module(alg))),
               ("Omega omega", self.omega_pres.syzygy)]
        rng = random.Random(self.inst.seed * 7919 + 17)
        f = alg.field
        for t in range(self.cfg.witness_random):
            kind = t % 3
            if kind == 0:
                # cyclic module R / (random element)
                vec = f.random_array(rng, alg.dim, bound=3)
                vec[alg.unit_index] = f.zero
                out.append((f"R/(a{t})", quotient_module(self.regular, alg.ideal(vec))))
            elif kind == 1:
                # R^2 modulo a random element
                free2 = free_module(alg, 2)
                vec = f.random_array(rng, free2.dim, bound=3)
                out.append((f"R^2/(v{t})", quotient_module(free2, free2.span_module(vec))))
            else:
                # omega modulo a random element
                vec = f.random_array(rng, alg.dim, bound=3)
                out.append((f"omega/(w{t})", quotient_module(self.omega, self.omega.span_module(vec))))
        return out


def _homological_guard(ctx: ArtinianContext):
    if ctx.alg.dim > ctx.cfg.homological_max_dim:
        raise Skip(f"dim {ctx.alg.dim} exceeds homological_max_dim {ctx.cfg.homological_max_dim}")


def check_thm_m_eq(ctx: ArtinianContext):
    _homological_guard(ctx)
    tr, _ = ctx.trace
    alg = ctx.alg
    a1 = annihilator(ext1(ctx.omega, ctx.omega_pres.syzygy, ctx.omega_pres))
    _require(a1 == tr, "tr omega != ann Ext^1(omega, Omega omega)", trace=_labels(alg, tr), ann=_labels(alg, a1))
    a2 = annihilator(tor1(ctx.tr_omega, ctx.omega))
    _require(a2 == tr, "tr omega != ann Tor_1(Tr omega, omega)", trace=_labels(alg, tr), ann=_labels(alg, a2))
    for name, mod in ctx.witnesses:
        e = ext1(mod, ctx.regular)
        _require(annihilates(e, tr), f"tr omega does not annihilate Ext^1({name}, R)", witness=name)
    return {"trace_dim": tr.dim, "witnesses": len(ctx.witnesses)}


def check_prop_1_d0(ctx: ArtinianContext):
    _homological_guard(ctx)
    tr, _ = ctx.trace
    a3 = annihilator(ext1(ctx.tr_omega, ctx.regular))
    _require(a3 == tr, "tr omega != ann Ext^1(Tr omega, R)", trace=_labels(ctx.alg, tr), ann=_labels(ctx.alg, a3))
    return {"trace_dim": tr.dim}


def check_cor_c14(ctx: ArtinianContext):
    _homological_guard(ctx)
    tr, _ = ctx.trace
    done = []
    for i in (1, 2, 3):
        e = ext(i, ctx.omega, ctx.regular)
        _require(annihilates(e, tr), f"tr omega not inside ann Ext^{i}(omega, R)", i=i)
        done.append({"i": i, "ext_dim": e.dim})
    return {"ext": done}


def check_lem_4_d0(ctx: ArtinianContext):
    _homological_guard(ctx)
    dims = []
    for name, mod in ctx.witnesses:
        a = annihilator(mod)
        b = annihilator(HomModule(mod, ctx.omega).module)
        _require(a == b, f"ann M != ann Hom(M, omega) for {name}", witness=name)
        dims.append(mod.dim)
    return {"witness_dims": dims}


def check_thm_5(ctx: ArtinianContext):
    if ctx.alg.socle.dim != 2:
        raise HypothesisNotMet("type is not 2")
    w = ctx.wag
    if w.verdict == "unknown":
        raise Skip("WAG search inconclusive")
    if w.verdict != "yes":
        raise HypothesisNotMet("not weakly almost Gorenstein")
    _, res = ctx.trace
    _require(res <= 1, "type 2 and WAG but not nearly Gorenstein", residue=res)
    return {"residue": res}


def check_thm_511(ctx: ArtinianContext):
    alg = ctx.alg
    w = ctx.wag
    if w.verdict == "unknown":
        raise Skip("WAG search inconclusive")
    sd = max_ideal_self_dual(alg, seed=ctx.inst.seed)
    if w.verdict == "yes":
        ideal = w.ideal
        _require(alg.socle.contains(ideal), "certificate ideal is not inside the socle")
        quo = quotient_algebra(alg, ideal)
        _require(quo.socle.dim == 1, "R/I is not Gorenstein for the certificate ideal")
        _require(is_wag_certificate(alg, w.w, ctx.omega), "certificate w does not satisfy R w >= m omega")
        _require(sd != "no", "WAG but maximal ideal mod socle is not self-dual", self_dual=sd)
        return {"wag": "yes", "self_dual": sd, "certificate_ideal": _labels(alg, ideal)}
    per_field = ctx.wag_fields
    # only (1) => (4) is a theorem; a self-dual m/soc R with WAG "no" everywhere is recorded, not failed
    converse_gap = sd == "yes" and all(v == "no" for v in per_field.values())
    return {"wag": "no", "self_dual": sd, "wag_by_field": per_field, "self_dual_without_wag": converse_gap}


def check_lem_57(ctx: ArtinianContext):
    alg = ctx.alg
    p = l57_shape(alg)
    sq = socle_quotient_gorenstein(alg)
    if p is None and not sq:
        raise HypothesisNotMet("neither the monomial shape nor a Gorenstein socle quotient")
    if p is not None:
        n = len(alg.varnames)
        _require(alg.socle.dim == n, "type differs from the number of variables", type=alg.socle.dim, n=n)
        _require(sq, "R/soc R is not Gorenstein for the monomial shape")
    if sq:
        _require(alg.socle.dim == alg.edim, "R/soc R Gorenstein but type != edim",
                 type=alg.socle.dim, edim=alg.edim)
    return {"type": alg.socle.dim, "edim": alg.edim, "shape_p": p}


def check_lem_58(ctx: ArtinianContext):
    w = ctx.wag
    if w.verdict == "unknown":
        raise Skip("WAG search inconclusive")
    if w.verdict != "yes":
        raise HypothesisNotMet("not weakly almost Gorenstein")
    nums = cyclic_cover_numbers(ctx.alg, w.w)
    r = nums["type"]
    _require(nums["coker_dim"] == r - 1, "dim omega/Rw != r - 1", **nums)
    _require(nums["kernel_dim"] == max(r - 1, 0), "dim ann(w) != max(r - 1, 0)", **nums)
    _require(nums["kernel_in_socle"], "ann(w) is not inside the socle", **nums)
    out = dict(nums)
    if r >= 2:
        shape = block_presentation_shape(ctx.alg, w.w)
        _require(shape["ok"], "block presentation has the wrong shape", **shape)
        out["presentation_q"] = shape["q"]
    return out


def _c5_witness(alg: ArtinianAlgebra):
    """Exponents ``a`` with ``n I`` inside ``J`` inside ``I = (x_i^{a_i})`` for the defining ideal ``J``."""
    if alg.relations is None:
        return None
    rel = alg.relations
    n = len(alg.varnames)
    pure = []
    for i in range(n):
        ps = [g[i] for g in rel if g[i] == sum(g)]
        pure.append(min(ps))

    def in_ideal(m, gens):
        return any(all(x <= y for x, y in zip(g, m)) for g in gens)

    for choice in itertools.product(*[(p, p - 1) for p in pure]):
        if min(choice) < 2:
            continue
        gens_i = [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(choice)]
        n_i = [tuple(x + (1 if j == k else 0) for j, x in enumerate(g)) for g in gens_i for k in range(n)]
        if all(in_ideal(m, rel) for m in n_i) and all(in_ideal(g, gens_i) for g in rel):
            return list(choice)
    return None


def check_cor_c5(ctx: ArtinianContext):
    a = _c5_witness(ctx.alg)
    if a is None:
        raise HypothesisNotMet("defining ideal is not between n I and I for a monomial complete intersection I")
    w = ctx.wag
    if w.verdict == "unknown":
        raise Skip("WAG search inconclusive")
    _require(w.verdict == "yes", "intermediate ideal quotient is not weakly almost Gorenstein", ci=a)
    return {"ci_exponents": a}


def check_hv_ng_svag(ctx: ArtinianContext):
    _, res = ctx.trace
    if res > 1:
        raise HypothesisNotMet("not nearly Gorenstein")
    if ctx.alg.dim > ctx.cfg.sv_max_dim:
        raise Skip(f"dim {ctx.alg.dim} exceeds sv_max_dim {ctx.cfg.sv_max_dim}")
    sv = sv_almost_gorenstein(ctx.alg)
    if sv.verdict == "skipped":
        raise Skip(sv.reason)
    if sv.verdict != "yes":
        raise CheckFailure("nearly Gorenstein but not SV almost Gorenstein",
                           {"witness": _labels(ctx.alg, sv.witness)})
    return {"ideals": sv.ideals}


# -- semigroup context -----------------------------------------------------------------------------------
class SemigroupContext:
    def __init__(self, sg: NumericalSemigroup, inst: Instance, cfg: SuiteConfig):
        self.sg = sg
        self.inst = inst
        self.cfg = cfg
        self.field = inst.spec.field if inst.spec.field.char else Field(2)

    @cached_property
    def trace(self):
        return trace_and_residue_ns(self.sg)

    def reduction(self, c: int):
        return self._reductions(c)

    @cached_property
    def _cache(self):
        return {}

    def _reductions(self, c):
        if c not in self._cache:
            if c > self.cfg.reduction_max_dim:
                raise Skip(f"reduction at {c} exceeds reduction_max_dim {self.cfg.reduction_max_dim}")
            alg = artinian_reduction(self.sg, c, self.field)
            tr, res = trace_ideal_and_residue(alg)
            self._cache[c] = (alg, tr, res)
        return self._cache[c]


def check_lem_l22(ctx: SemigroupContext):
    s = ctx.sg
    tr_ns, res_ns = ctx.trace
    cs = sorted({*s.generators, 2 * s.multiplicity} | ({s.conductor} if s.conductor > 0 else set()))
    cs = [c for c in cs if c <= ctx.cfg.reduction_max_dim]
    if not cs:
        raise Skip("no reduction element within the dimension cap")
    rows = []
    for c in cs:
        alg, tr, res = ctx.reduction(c)
        img = value_image(alg, tr_ns)
        _require(tr.contains(img), f"image of tr not inside the trace of R/(t^{c})", c=c)
        _require(res_ns >= res, f"res(S) < res(R/(t^{c}))", c=c, res=res_ns, res_reduction=res)
        rows.append({"c": c, "residue": res, "image_equals_trace": img == tr, "residue_drop": res_ns - res})
    return {"residue": res_ns, "reductions": rows}


def check_thm_b(ctx: SemigroupContext):
    s = ctx.sg
    _, res = ctx.trace
    _, _, rres = ctx.reduction(2 * s.multiplicity)
    _require((res <= 1) == (rres <= 1), "NG(S) differs from NG of the reduction at 2e", residue=res,
             reduction_residue=rres)
    return {"nearly_gorenstein": res <= 1, "reduction_residue": rres}


def _ext_annihilated(s: NumericalSemigroup, a: int, tr_ns) -> bool:
    """Whether ``t^a`` kills ``Ext^1(omega, R)``; for type at least 3 only the sufficient test ``a in tr``."""
    if s.type <= 2:
        e = ext1_canonical_type2(s)
        k = canonical_value_ideal(s)
        return all((a + z) in k for z in e.ext1_values)
    return a in tr_ns


def check_thm_26(ctx: SemigroupContext):
    s = ctx.sg
    tr_ns, res_ns = ctx.trace
    cands = sorted({*s.generators, 2 * s.multiplicity})
    ran = []
    for a in cands:
        if not _ext_annihilated(s, a, tr_ns):
            continue
        for u in (1, 2):
            if a * (u + 1) > ctx.cfg.reduction_max_dim:
                continue
            big, tr_big, res_big = ctx.reduction(a * (u + 1))
            small = artinian_reduction(s, a * u, ctx.field)
            lhs = value_image(small, tr_ns)
            rhs = project_reduction(big, small, tr_big)
            _require(lhs == rhs, "tr_R R'' != tr_R' R''", a=a, u=u)
            entry = {"a": a, "u": u, "claim2": a * u in tr_ns}
            if a * u in tr_ns:
                _require(res_ns == res_big, "res(R) != res(R')", a=a, u=u, res=res_ns, res_reduction=res_big)
            ran.append(entry)
    if not ran:
        raise HypothesisNotMet("no tested element annihilates Ext^1(omega, R) within the dimension cap")
    return {"cases": ran}


def check_sec4_type2(ctx: SemigroupContext):
    s = ctx.sg
    if s.type > 2:
        raise HypothesisNotMet("type exceeds 2")
    _, res = ctx.trace
    e = ext1_canonical_type2(s)
    _require(e.m_kills == (res <= 1), "m Ext^1(omega, R) = 0 differs from nearly Gorenstein",
             m_kills=e.m_kills, residue=res, ext1_values=e.ext1_values)
    return {"ext1_values": e.ext1_values, "m_kills": e.m_kills, "three_generated": len(s.generators) == 3}


def check_thm_c(ctx: SemigroupContext):
    s = ctx.sg
    alg, _, _ = ctx.reduction(2 * s.multiplicity)
    w = wag_search(alg, seed=ctx.inst.seed)
    if w.verdict == "unknown":
        raise Skip("WAG search inconclusive")
    ag = ag_oracle(s)
    _require((w.verdict == "yes") == ag, "AG oracle differs from WAG of the reduction at 2e",
             ag=ag, wag=w.verdict)
    return {"almost_gorenstein": ag}


def check_hhs_ag_ng(ctx: SemigroupContext):
    s = ctx.sg
    if not ag_oracle(s):
        raise HypothesisNotMet("not almost Gorenstein")
    _, res = ctx.trace
    _require(res <= 1, "almost Gorenstein but not nearly Gorenstein", residue=res)
    return {"residue": res}


CHECKS = {
    "THM_M_EQ": check_thm_m_eq,
    "COR_C14": check_cor_c14,
    "LEM_4_D0": check_lem_4_d0,
    "PROP_1_D0": check_prop_1_d0,
    "THM_5": check_thm_5,
    "THM_511": check_thm_511,
    "LEM_57": check_lem_57,
    "LEM_58": check_lem_58,
    "COR_C5": check_cor_c5,
    "HV_NG_SVAG": check_hv_ng_svag,
    "LEM_L22": check_lem_l22,
    "THM_B": check_thm_b,
    "THM_26": check_thm_26,
    "SEC4_TYPE2": check_sec4_type2,
    "THM_C": check_thm_c,
    "HHS_AG_NG": check_hhs_ag_ng,
}


# -- running ------------------------------------------------------------------------------------------------
def make_context(inst: Instance, cfg: SuiteConfig):
    obj = inst.spec.build()
    if isinstance(obj, NumericalSemigroup):
        return SemigroupContext(obj, inst, cfg)
    return ArtinianContext(obj, inst, cfg)


def run_check(check_id: str, inst: Instance, cfg: SuiteConfig | None = None, ctx=None) -> CheckResult:
    cfg = cfg or SuiteConfig()
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id}")
    start = time.perf_counter()
    semigroup_check = check_id in SEMIGROUP_CHECKS
    if semigroup_check != inst.is_semigroup:
        return CheckResult(check_id, inst.instance_id, "hypothesis_not_met",
                           "instance kind does not match the check", wall_time=time.perf_counter() - start)
    try:
        ctx = ctx or make_context(inst, cfg)
        if not inst.is_semigroup and ctx.alg.dim > cfg.max_dim:
            raise Skip(f"dim {ctx.alg.dim} exceeds max_dim {cfg.max_dim}")
        info = CHECKS[check_id](ctx) or {}
        res = CheckResult(check_id, inst.instance_id, "pass", payload=info)
    except HypothesisNotMet as exc:
        res = CheckResult(check_id, inst.instance_id, "hypothesis_not_met", str(exc))
    except Skip as exc:
        res = CheckResult(check_id, inst.instance_id, "skipped", str(exc))
    except CapacityError as exc:
        res = CheckResult(check_id, inst.instance_id, "skipped", f"capacity: {exc}")
    except CheckFailure as exc:
        res = CheckResult(check_id, inst.instance_id, "fail", str(exc), payload=dict(exc.payload))
    except Exception as exc:  # an engine error on a valid instance is a failure
        res = CheckResult(check_id, inst.instance_id, "fail", f"error: {exc!r}",
                          payload={"traceback": traceback.format_exc(limit=5)})
    if res.verdict == "fail":
        res.payload["replay"] = replay_payload(check_id, inst, cfg)
    res.wall_time = time.perf_counter() - start
    return res


def replay_payload(check_id: str, inst: Instance, cfg: SuiteConfig) -> dict:
    return {"check_id": check_id, "instance_id": inst.instance_id, "seed": inst.seed,
            "spec": inst.spec.to_dict(), "config": cfg.to_dict()}


def run_instance(inst: Instance, cfg: SuiteConfig) -> list:
    checks = [c for c in cfg.checks if (c in SEMIGROUP_CHECKS) == inst.is_semigroup]
    try:
        ctx = make_context(inst, cfg)
    except Exception:
        ctx = None
    return [run_check(c, inst, cfg, ctx) for c in checks]


def _run_instance_packed(args):
    return run_instance(*args)


def pinned_instances(fields=(2, 3), seed: int = 0) -> list:
    """Fixed instances that always run."""
    out = []
    from .specio import spec_from_algebra
    for p in fields:
        f = Field(p)
        out.append(Instance(f"pinned/x,y^3/GF{p}", families.gen_c5(["x", "y"], [2, 2], 0, 1, f)[0], seed))
        out.append(Instance(f"pinned/x,y^2/GF{p}", AlgebraSpec(
            "monomial_quotient", f, ["x", "y"], ["x^2", "x*y", "y^2"], label="(x,y)^2"), seed))
        out.append(Instance(f"pinned/x^3/GF{p}", AlgebraSpec(
            "monomial_quotient", f, ["x"], ["x^3"], label="k[x]/(x^3)"), seed))
        out.append(Instance(f"pinned/x^5/GF{p}", AlgebraSpec(
            "monomial_quotient", f, ["x"], ["x^5"], label="k[x]/(x^5)"), seed))
        out.append(Instance(f"pinned/ci22/GF{p}", families.gen_ci(["x", "y"], [2, 2], f), seed))
        out.append(Instance(f"pinned/x2,xy,y3/GF{p}", AlgebraSpec(
            "monomial_quotient", f, ["x", "y"], ["x^2", "x*y", "y^3"], label="(x^2,xy,y^3)"), seed))
        red = artinian_reduction(NumericalSemigroup([3, 7, 8]), 3, f)
        out.append(Instance(f"pinned/<3,7,8>/(t^3)/GF{p}", spec_from_algebra(
            red, "k[[t^3,t^7,t^8]]/(t^3)", {"semigroup": [3, 7, 8], "c": 3}), seed))
        out.append(Instance(f"pinned/l57(2,3)/GF{p}", families.gen_l57(2, 3, f), seed))
        out.append(Instance(f"pinned/l57(3,2)/GF{p}", families.gen_l57(3, 2, f), seed))
        for form in "abc":
            out.append(Instance(f"pinned/e51{form}(2,2,2)/GF{p}", families.gen_e51(2, 2, 2, form, f), seed))
    out.append(Instance("pinned/x,y^4/GF3", AlgebraSpec(
        "monomial_quotient", Field(3), ["x", "y"], ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"],
        label="(x,y)^4"), seed))
    for g in families.PINNED_SEMIGROUPS + ([2, 3],):
        out.append(Instance(f"pinned/<{','.join(map(str, g))}>", AlgebraSpec(
            "numerical_semigroup", Field(fields[0]), generators=list(g)), seed))
    return out


def generated_instances(cfg: SuiteConfig) -> list:
    out = []
    rng = random.Random(cfg.seed)
    for t in range(cfg.random_count):
        p = cfg.fields[t % len(cfg.fields)]
        nvars = cfg.random_nvars[t % len(cfg.random_nvars)]
        s = rng.getrandbits(32)
        spec = families.gen_random_monomial(s, nvars, cfg.random_maxdeg, Field(p),
                                            max_dim=min(cfg.homological_max_dim, cfg.max_dim))
        out.append(Instance(f"random/{t}/GF{p}", spec, s))
    for p in cfg.fields:
        f = Field(p)
        for vars_, exps in ((["x", "y"], [2, 3]), (["x", "y"], [3, 3]), (["x", "y", "z"], [2, 2, 2])):
            for k, spec in enumerate(families.gen_c5(vars_, exps, cfg.seed, 4, f)):
                out.append(Instance(f"c5/{''.join(vars_)}/{','.join(map(str, exps))}/{k}/GF{p}", spec, cfg.seed))
        for a, b, c in itertools.product((2, 3), repeat=3):
            if (a, b, c) == (2, 2, 2):
                continue
            form = "abc"[(a + b + c) % 3]
            out.append(Instance(f"e51{form}({a},{b},{c})/GF{p}", families.gen_e51(a, b, c, form, f), cfg.seed))
        for n, q in ((1, 2), (1, 4), (2, 2), (3, 3), (4, 2)):
            out.append(Instance(f"l57({n},{q})/GF{p}", families.gen_l57(n, q, f), cfg.seed))
    sgs = families.gen_random_semigroup(cfg.seed, cfg.semigroup_max_embdim, cfg.semigroup_max_gen,
                                        cfg.semigroup_count)
    for g in sgs:
        if list(g) in [list(x) for x in families.PINNED_SEMIGROUPS]:
            continue
        out.append(Instance(f"semigroup/<{','.join(map(str, g))}>", AlgebraSpec(
            "numerical_semigroup", Field(cfg.fields[0]), generators=list(g)), cfg.seed))
    return out


def suite_instances(cfg: SuiteConfig) -> list:
    suites = set(cfg.suites)
    out = []
    if suites & {"all", "pinned"}:
        out += pinned_instances(cfg.fields, cfg.seed)
    if suites & {"all", "generated"}:
        out += generated_instances(cfg)
    if "artinian" in suites:
        out += [i for i in pinned_instances(cfg.fields, cfg.seed) + generated_instances(cfg) if not i.is_semigroup]
    if "semigroup" in suites:
        out += [i for i in pinned_instances(cfg.fields, cfg.seed) + generated_instances(cfg) if i.is_semigroup]
    seen, uniq = set(), []
    for i in out:
        if i.instance_id not in seen:
            seen.add(i.instance_id)
            uniq.append(i)
    return uniq


def run_suite(cfg: SuiteConfig, jobs: int = 1, instances: list | None = None) -> SuiteReport:
    instances = instances if instances is not None else suite_instances(cfg)
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_instance_packed, [(i, cfg) for i in instances]))
    else:
        chunks = [run_instance(i, cfg) for i in instances]
    results = [r for chunk in chunks for r in chunk]
    return SuiteReport(cfg.to_dict(), results)


def config_from_dict(d: dict) -> SuiteConfig:
    cfg = SuiteConfig()
    for k, v in d.items():
        if hasattr(cfg, k):
            setattr(cfg, k, tuple(v) if isinstance(v, list) else v)
    return cfg


def replay(payload: dict) -> CheckResult:
    from .specio import parse_spec, dump_document
    spec = parse_spec(dump_document(payload["spec"]))
    cfg = config_from_dict(payload.get("config", {}))
    inst = Instance(payload["instance_id"], spec, int(payload.get("seed", 0)))
    return run_check(payload["check_id"], inst, cfg)


def report_to_dict(report: SuiteReport, timings: bool = False) -> dict:
    rows = []
    for r in report.results:
        row = {"check_id": r.check_id, "instance_id": r.instance_id, "verdict": r.verdict}
        if r.reason:
            row["reason"] = r.reason
        if r.payload:
            row["payload"] = _plain(r.payload)
        if timings:
            row["wall_time"] = round(r.wall_time, 4)
        rows.append(row)
    return {"schema": "gorlab/1", "kind": "suite_report", "config": _plain(report.config),
            "summary": report.summary, "results": rows}


def _plain(x):
    """Recursively convert numpy scalars and tuples to plain YAML-friendly values."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    return x
