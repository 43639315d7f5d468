"""The ``gorlab/1`` text format for algebra specs and reports.

Documents are YAML mappings with ``schema: gorlab/1``.  Reports may carry one
leading ``# generated: ...`` comment line; everything else is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np
import yaml

from .algebra import (
    AlgebraError,
    ArtinianAlgebra,
    algebra_from_monomial_quotient,
    format_monomial,
    minimalize_monomials,
    parse_monomial,
)
from .fields import Field, FieldError
from .numsgp import NumericalSemigroup, SemigroupError

SCHEMA = "gorlab/1"
KINDS = ("monomial_quotient", "structure_constants", "numerical_semigroup")


class SpecError(ValueError):
    """A spec document is malformed; carries a 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass
class AlgebraSpec:
    kind: str
    field: Field
    vars: list | None = None
    generators: list | None = None
    basis: list | None = None
    unit: int = 0
    value_labels: list | None = None
    products: list | None = None  # sorted [i, j, k, coefficient] with i <= j
    label: str | None = None
    provenance: dict = dc_field(default_factory=dict)

    def normalized(self) -> "AlgebraSpec":
        if self.kind == "monomial_quotient":
            exps = [parse_monomial(g, self.vars) for g in self.generators]
            gens = [format_monomial(e, self.vars) for e in minimalize_monomials(exps)]
            return AlgebraSpec(self.kind, self.field, list(self.vars), gens, label=self.label,
                               provenance=dict(self.provenance))
        if self.kind == "numerical_semigroup":
            s = NumericalSemigroup(self.generators)
            return AlgebraSpec(self.kind, self.field, generators=list(s.generators), label=self.label,
                               provenance=dict(self.provenance))
        prods = sorted([int(i), int(j), int(k), _coef_out(self.field, c)]
                       for i, j, k, c in self.products if _coef_out(self.field, c) != 0)
        return AlgebraSpec(self.kind, self.field, basis=list(self.basis), unit=self.unit,
                           value_labels=list(self.value_labels) if self.value_labels is not None else None,
                           products=prods, label=self.label, provenance=dict(self.provenance))

    def build(self):
        """Engine input: an :class:`ArtinianAlgebra` or a :class:`NumericalSemigroup`."""
        if self.kind == "monomial_quotient":
            return algebra_from_monomial_quotient(self.vars, self.generators, self.field)
        if self.kind == "numerical_semigroup":
            return NumericalSemigroup(self.generators)
        n = len(self.basis)
        f = self.field
        mult = f.zeros((n, n, n))
        for i, j, k, c in self.products:
            for a, b in ((i, j), (j, i)):
                mult[a, b, k] = f.scalar(c) if f.char == 0 or f.degree == 1 else int(c)
        return ArtinianAlgebra(f, mult, self.basis, self.unit, value_labels=self.value_labels, check=True)

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA, "kind": self.kind}
        if self.label is not None:
            out["label"] = self.label
        out["field"] = field_to_dict(self.field)
        if self.kind == "monomial_quotient":
            out["vars"] = list(self.vars)
            out["generators"] = list(self.generators)
        elif self.kind == "numerical_semigroup":
            out["generators"] = [int(g) for g in self.generators]
        else:
            out["basis"] = list(self.basis)
            out["unit"] = int(self.unit)
            if self.value_labels is not None:
                out["value_labels"] = [int(v) for v in self.value_labels]
            out["products"] = [list(p) for p in self.products]
        if self.provenance:
            out["provenance"] = self.provenance
        return out


def _coef_out(f: Field, c):
    if f.char == 0:
        c = Fraction(c)
        return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return int(f.scalar(c)) if f.degree == 1 else int(c)


def field_to_dict(f: Field) -> dict:
    return {"char": f.char} if f.degree == 1 else {"char": f.char, "degree": f.degree}


def spec_from_algebra(alg: ArtinianAlgebra, label: str | None = None, provenance=None) -> AlgebraSpec:
    """Structure-constant spec of an algebra (used for reductions)."""
    f = alg.field
    prods = []
    n = alg.dim
    nz = np.argwhere(alg.mult != 0)
    for i, j, k in nz:
        if i <= j:
            prods.append([int(i), int(j), int(k), _coef_out(f, alg.mult[i, j, k])])
    prods.sort()
    return AlgebraSpec("structure_constants", f, basis=list(alg.labels), unit=alg.unit_index,
                       value_labels=list(alg.value_labels) if alg.value_labels is not None else None,
                       products=prods, label=label, provenance=dict(provenance or {}))


# -- parsing -----------------------------------------------------------------------------------
def _mark(node):
    return node.start_mark.line + 1, node.start_mark.column + 1


def _load_with_marks(text: str):
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        raise SpecError(str(exc.problem or exc), mark.line + 1 if mark else None,
                        mark.column + 1 if mark else None) from None
    marks = {}
    if isinstance(node, yaml.MappingNode):
        for k, v in node.value:
            marks[k.value] = _mark(v)
    return data, marks


def parse_spec(text: str) -> AlgebraSpec:
    data, marks = _load_with_marks(text)
    if not isinstance(data, dict):
        raise SpecError("a spec must be a mapping", 1, 1)

    def fail(key, msg):
        line, col = marks.get(key, (None, None))
        raise SpecError(msg, line, col)

    if data.get("schema") != SCHEMA:
        fail("schema", f"schema must be {SCHEMA!r}")
    kind = data.get("kind")
    if kind not in KINDS:
        fail("kind", f"kind must be one of {', '.join(KINDS)}")
    fd = data.get("field", {"char": 0} if kind == "numerical_semigroup" else None)
    if not isinstance(fd, dict) or "char" not in fd:
        fail("field", "field must be a mapping with a 'char' entry")
    try:
        fld = Field(int(fd["char"]), int(fd.get("degree", 1)))
    except (FieldError, ValueError, TypeError) as exc:
        fail("field", str(exc))
    label = data.get("label")
    prov = data.get("provenance") or {}
    try:
        if kind == "monomial_quotient":
            vars_ = data.get("vars")
            if isinstance(vars_, str):
                vars_ = [v.strip() for v in vars_.split(",")]
            if not isinstance(vars_, list) or not vars_:
                fail("vars", "vars must be a non-empty list")
            gens = data.get("generators")
            if not isinstance(gens, list) or not gens:
                fail("generators", "generators must be a non-empty list of monomials")
            spec = AlgebraSpec(kind, fld, [str(v) for v in vars_], [str(g) for g in gens],
                               label=label, provenance=prov)
            try:
                spec.build()
            except AlgebraError as exc:
                fail("generators", str(exc))
            return spec
        if kind == "numerical_semigroup":
            gens = data.get("generators")
            if isinstance(gens, str):
                gens = [g for g in gens.split(",") if g.strip()]
            if not isinstance(gens, list) or not gens:
                fail("generators", "generators must be a list of positive integers")
            try:
                gens = [int(g) for g in gens]
                NumericalSemigroup(gens)
            except (SemigroupError, ValueError) as exc:
                fail("generators", str(exc))
            return AlgebraSpec(kind, fld, generators=gens, label=label, provenance=prov)
        basis = data.get("basis")
        if not isinstance(basis, list) or not basis:
            fail("basis", "basis must be a non-empty list of labels")
        prods = data.get("products") or []
        n = len(basis)
        clean = []
        for p in prods:
            if not isinstance(p, list) or len(p) != 4:
                fail("products", "each product entry is [i, j, k, coefficient]")
            i, j, k = (int(x) for x in p[:3])
            if not all(0 <= x < n for x in (i, j, k)):
                fail("products", f"product entry {p} has an index out of range")
            clean.append([min(i, j), max(i, j), k, p[3]])
        spec = AlgebraSpec(kind, fld, basis=[str(b) for b in basis], unit=int(data.get("unit", 0)),
                           value_labels=data.get("value_labels"), products=clean, label=label,
                           provenance=prov)
        try:
            spec.build()
        except (AlgebraError, FieldError) as exc:
            fail("products", str(exc))
        return spec
    except SpecError:
        raise
    except (TypeError, ValueError) as exc:
        raise SpecError(str(exc)) from None


def dump_document(data: dict, header: str | None = None) -> str:
    body = yaml.safe_dump(data, sort_keys=False, allow_unicode=True, default_flow_style=None, width=100)
    return (f"# {header}\n" if header else "") + body


def print_spec(spec: AlgebraSpec) -> str:
    return dump_document(spec.to_dict())


def read_spec(path) -> AlgebraSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def write_text(path, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
