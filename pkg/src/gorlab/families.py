"""Seeded generators of algebra and semigroup corpora."""

from __future__ import annotations

import itertools
import random
from functools import reduce
from math import gcd

from .algebra import format_monomial, minimalize_monomials, standard_monomials
from .fields import Field
from .numsgp import NumericalSemigroup
from .specio import AlgebraSpec

FAMILY_KINDS = ("ci", "c5", "e51a", "e51b", "e51c", "l57", "random_monomial", "random_semigroup")
PINNED_SEMIGROUPS = ([3, 7, 8], [3, 4, 5])


class FamilyError(ValueError):
    pass


def default_vars(n: int) -> list:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _spec(varnames, exps, field: Field, label: str, provenance: dict) -> AlgebraSpec:
    gens = [format_monomial(e, varnames) for e in minimalize_monomials(exps)]
    return AlgebraSpec("monomial_quotient", field, list(varnames), gens, label=label, provenance=provenance)


def _unit(n: int, i: int, e: int = 1) -> tuple:
    v = [0] * n
    v[i] = e
    return tuple(v)


def _add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def gen_ci(varnames, exponents, field: Field) -> AlgebraSpec:
    """Monomial complete intersection ``(x_1^{a_1}, ..., x_n^{a_n})``."""
    n = len(varnames)
    if len(exponents) != n or any(a < 1 for a in exponents):
        raise FamilyError("one positive exponent per variable is required")
    exps = [_unit(n, i, a) for i, a in enumerate(exponents)]
    return _spec(varnames, exps, field, f"ci {','.join(map(str, exponents))}",
                 {"family": "ci", "exponents": list(exponents)})


def gen_c5(varnames, ci_exponents, selection_seed: int, count: int, field: Field) -> list:
    """Monomial ideals ``J`` with ``n I`` inside ``J`` inside ``I`` for ``I = (x_i^{a_i})``.

    The only monomials of ``I`` outside ``n I`` are the pure powers, so each
    ``J`` is ``n I`` plus a subset of them.  The first output is ``J = n I``.
    """
    n = len(varnames)
    if len(ci_exponents) != n:
        raise FamilyError("one exponent per variable is required")
    if any(a < 2 for a in ci_exponents):
        raise FamilyError("I must lie in the square of the maximal ideal (all exponents >= 2)")
    pure = [_unit(n, i, a) for i, a in enumerate(ci_exponents)]
    n_i = [_add(p, _unit(n, j)) for p in pure for j in range(n)]
    subsets = [()]
    rng = random.Random(selection_seed)
    all_subsets = [s for r in range(1, n + 1) for s in itertools.combinations(range(n), r)]
    rng.shuffle(all_subsets)
    subsets += all_subsets
    out = []
    for sub in subsets[:max(count, 0)]:
        exps = n_i + [pure[i] for i in sub]
        added = [format_monomial(pure[i], varnames) for i in sub]
        out.append(_spec(varnames, exps, field,
                         f"c5 I=({','.join(format_monomial(p, varnames) for p in pure)}) + [{','.join(added)}]",
                         {"family": "c5", "ci_exponents": list(ci_exponents), "added_pure_powers": added,
                          "selection_seed": selection_seed}))
    return out


def gen_e51(a: int, b: int, c: int, form: str, field: Field) -> AlgebraSpec:
    """The three intermediate ideals between ``n I`` and ``I = (x^a, y^b, z^c)``."""
    if min(a, b, c) < 2:
        raise FamilyError("exponents must be at least 2")
    x, y, z = (lambda e: (e, 0, 0)), (lambda e: (0, e, 0)), (lambda e: (0, 0, e))
    xa, yb, zc = x(a), y(b), z(c)
    nz = [_add(zc, x(1)), _add(zc, y(1)), _add(zc, z(1))]
    ny = [_add(yb, x(1)), _add(yb, y(1)), _add(yb, z(1))]
    nx = [_add(xa, x(1)), _add(xa, y(1)), _add(xa, z(1))]
    if form == "a":
        exps = [xa, yb] + nz
    elif form == "b":
        exps = [xa] + ny + nz
    elif form == "c":
        exps = nx + ny + nz
    else:
        raise FamilyError("form must be a, b or c")
    return _spec(["x", "y", "z"], exps, field, f"e51{form} ({a},{b},{c})",
                 {"family": f"e51{form}", "a": a, "b": b, "c": c})


def gen_l57(n: int, p: int, field: Field) -> AlgebraSpec:
    """``(x_1^p) + n (x_2, ..., x_n)``."""
    if n < 1:
        raise FamilyError("n must be positive")
    if p < 2:
        raise FamilyError("p must be at least 2")
    exps = [_unit(n, 0, p)]
    for j in range(1, n):
        for i in range(n):
            exps.append(_add(_unit(n, i), _unit(n, j)))
    return _spec(default_vars(n), exps, field, f"l57 n={n} p={p}", {"family": "l57", "n": n, "p": p})


def gen_random_monomial(seed: int, nvars: int, maxdeg: int, field: Field, max_dim: int = 12) -> AlgebraSpec:
    """Artinian monomial quotient with pure powers of every variable; at most ``max_dim``."""
    if not 1 <= nvars <= 4:
        raise FamilyError("nvars must be between 1 and 4")
    if maxdeg < 1:
        raise FamilyError("maxdeg must be positive")
    rng = random.Random(seed)
    varnames = default_vars(nvars)
    deg = maxdeg
    while True:
        for _ in range(8):
            lo = 2 if deg >= 2 else 1
            powers = [rng.randint(lo, max(deg, lo)) for _ in range(nvars)]
            exps = [_unit(nvars, i, a) for i, a in enumerate(powers)]
            box = [e for e in itertools.product(*(range(a) for a in powers)) if sum(e) >= 2]
            extra = rng.randint(0, min(len(box), 3))
            exps += rng.sample(box, extra) if extra else []
            exps = minimalize_monomials(exps)
            dim = len(standard_monomials(nvars, exps))
            if dim <= max_dim:
                return _spec(varnames, exps, field, f"random seed={seed} n={nvars} d={maxdeg}",
                             {"family": "random_monomial", "seed": seed, "nvars": nvars,
                              "maxdeg": maxdeg, "max_dim": max_dim})
        if deg <= 1:
            raise FamilyError(f"cannot stay within dimension {max_dim} with {nvars} variables")
        deg -= 1


def gen_random_semigroup(seed: int, max_embdim: int, max_gen: int, count: int) -> list:
    """Distinct numerical semigroups (minimal generator lists); pinned examples first."""
    if max_embdim > 4 or max_embdim < 1:
        raise FamilyError("max_embdim must be between 1 and 4")
    rng = random.Random(seed)
    seen = []
    keys = set()
    for g in PINNED_SEMIGROUPS:
        s = NumericalSemigroup(g)
        if tuple(s.generators) not in keys:
            keys.add(tuple(s.generators))
            seen.append(list(s.generators))
    attempts = 0
    while len(seen) < count and attempts < 200 * max(count, 1):
        attempts += 1
        k = rng.randint(2, max(2, max_embdim))
        gens = sorted(rng.sample(range(2, max_gen + 1), min(k, max_gen - 1)))
        if reduce(gcd, gens) != 1:
            continue
        s = NumericalSemigroup(gens)
        key = tuple(s.generators)
        if key in keys or len(key) > max_embdim:
            continue
        keys.add(key)
        seen.append(list(key))
    return seen[:max(count, len(PINNED_SEMIGROUPS))]
