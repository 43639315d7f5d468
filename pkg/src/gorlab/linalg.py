"""Matrices and subspaces over exact fields.

Matrices are plain numpy arrays paired with a :class:`~gorlab.fields.Field`.
Vectors are rows when stored in a :class:`Subspace` basis and columns when a
matrix acts on them (``A @ v``).
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .fields import Field


class CapacityError(RuntimeError):
    """A computation would exceed a configured size limit."""


class Limits:
    """Process-wide size limits for linear systems (entries = rows * cols)."""

    max_system_entries = 25_000_000

    @classmethod
    def check(cls, rows: int, cols: int, what: str = "linear system"):
        if rows * cols > cls.max_system_entries:
            raise CapacityError(
                f"{what} of size {rows}x{cols} exceeds max_system_entries={cls.max_system_entries}"
            )


def rref(field: Field, m) -> tuple[np.ndarray, tuple]:
    """Unique reduced row echelon form of ``m`` and its pivot columns."""
    return field.rref(m)


def rank(field: Field, m) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(field.rref(m)[1])


def kernel(field: Field, m) -> "Subspace":
    """Right kernel ``{v : m v = 0}`` as a subspace of ``field^cols``."""
    m = np.asarray(m)
    rows, cols = m.shape
    if rows == 0 or m.size == 0:
        return Subspace.full(field, cols)
    Limits.check(rows, cols)
    r, pivots = field.rref(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return Subspace.zero(field, cols)
    basis = field.zeros((len(free), cols))
    piv = np.array(pivots, dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = field.one
        if len(pivots):
            basis[t, piv] = field.negm(r[: len(pivots), f])
    return Subspace(field, cols, basis)


def image(field: Field, m) -> "Subspace":
    """Column space of ``m``."""
    m = np.asarray(m)
    return Subspace(field, m.shape[0], m.T)


def kernel_image(field: Field, m) -> tuple["Subspace", "Subspace"]:
    return kernel(field, m), image(field, m)


def solve(field: Field, m, b):
    """One solution ``x`` of ``m x = b`` or ``None`` when inconsistent."""
    m = np.asarray(m)
    b = np.asarray(b)
    rows, cols = m.shape
    aug = np.concatenate([m, b.reshape(rows, 1)], axis=1) if rows else field.zeros((0, cols + 1))
    r, pivots = field.rref(aug)
    if cols in pivots:
        return None
    x = field.zeros(cols)
    for i, c in enumerate(pivots):
        x[c] = r[i, cols]
    return x


class Subspace:
    """A subspace of ``field^ambient`` with a basis in reduced row echelon form.

    The RREF basis makes coordinates free: a vector ``v`` in the subspace equals
    ``sum(v[pivots[i]] * basis[i])``.
    """

    __slots__ = ("field", "ambient", "basis", "pivots", "__dict__")

    def __init__(self, field: Field, ambient: int, vectors=None, *, _reduced=None):
        self.field = field
        self.ambient = int(ambient)
        if _reduced is not None:
            self.basis, self.pivots = _reduced
            return
        if vectors is None:
            vectors = field.zeros((0, ambient))
        vectors = np.asarray(vectors)
        if vectors.ndim == 1:
            vectors = vectors.reshape(1, -1)
        if vectors.shape[0] == 0:
            self.basis = field.zeros((0, self.ambient))
            self.pivots = ()
            return
        if vectors.shape[1] != self.ambient:
            raise ValueError(f"vectors have length {vectors.shape[1]}, expected {self.ambient}")
        Limits.check(vectors.shape[0], vectors.shape[1], "span")
        r, pivots = field.rref(vectors)
        self.basis = r[: len(pivots)]
        self.pivots = pivots

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, _reduced=(field.zeros((0, n)), ()))

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, _reduced=(field.eye(n), tuple(range(n))))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.pivots, self.key))

    @cached_property
    def key(self) -> bytes:
        """Canonical byte string identifying the subspace."""
        if self.field.char == 0:
            return repr(self.field.to_python(self.basis)).encode()
        return self.basis.astype(np.int64).tobytes()

    def _check(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    # -- vectors --------------------------------------------------------------
    def reduce(self, vecs) -> np.ndarray:
        """Residues of the rows of ``vecs`` after eliminating pivot coordinates."""
        vecs = np.asarray(vecs)
        single = vecs.ndim == 1
        if single:
            vecs = vecs.reshape(1, -1)
        if self.dim == 0 or vecs.shape[0] == 0:
            out = vecs.copy()
        else:
            coeff = vecs[:, list(self.pivots)]
            out = self.field.subm(vecs, self.field.matmul(coeff, self.basis))
        return out[0] if single else out

    def contains_vector(self, v) -> bool:
        return not np.any(self.reduce(v) != 0)

    def coordinates(self, vecs) -> np.ndarray:
        """Coordinates of vectors known to lie in the subspace (rows in, rows out)."""
        vecs = np.asarray(vecs)
        if vecs.ndim == 1:
            return vecs[list(self.pivots)]
        return vecs[:, list(self.pivots)]

    def complement_indices(self) -> list:
        """Standard basis indices spanning a complement (the non-pivot columns)."""
        piv = set(self.pivots)
        return [c for c in range(self.ambient) if c not in piv]

    def quotient_coordinates(self, vecs) -> np.ndarray:
        """Coordinates of rows of ``vecs`` in ``field^ambient / self`` (complement basis)."""
        red = self.reduce(vecs)
        idx = self.complement_indices()
        return red[..., idx]

    # -- subspace algebra -------------------------------------------------------
    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace(self.field, self.ambient, np.concatenate([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        stacked = np.concatenate([self.basis, self.field.negm(other.basis)]).T
        ker = kernel(self.field, stacked)
        if ker.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        combos = ker.basis[:, : self.dim]
        return Subspace(self.field, self.ambient, self.field.matmul(combos, self.basis))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        if other.dim == 0:
            return True
        return not np.any(self.reduce(other.basis) != 0)

    def quotient_dim(self, sub: "Subspace") -> int:
        if not self.contains(sub):
            raise ValueError("quotient_dim needs the second subspace inside the first")
        return self.dim - sub.dim

    def image_under(self, m) -> "Subspace":
        """``m(self)`` for a matrix ``m`` with ``ambient`` columns."""
        m = np.asarray(m)
        if self.dim == 0:
            return Subspace.zero(self.field, m.shape[0])
        return Subspace(self.field, m.shape[0], self.field.matmul(m, self.basis.T).T)

    def preimage_under(self, m) -> "Subspace":
        """``{v : m v in self}`` for a matrix ``m`` with ``ambient`` rows."""
        m = np.asarray(m)
        if self.dim == self.ambient:
            return Subspace.full(self.field, m.shape[1])
        comp = self.complement_indices()
        # v maps into self iff the residue of m v vanishes
        red = self.reduce(m.T).T
        return kernel(self.field, red[comp, :])


def subspace_ops(kind: str, a: Subspace, b: Subspace):
    """Dispatch helper: ``sum``, ``intersect``, ``contains`` or ``quotient_dim``."""
    if a.field != b.field or a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    if kind == "sum":
        return a.sum(b)
    if kind == "intersect":
        return a.intersect(b)
    if kind == "contains":
        return a.contains(b)
    if kind == "quotient_dim":
        return a.quotient_dim(b)
    raise ValueError(f"unknown subspace operation {kind!r}")


def reversed_span(field: Field, n: int, vectors) -> Subspace:
    """Span with pivots pushed to the highest indices.

    The non-pivot (complement) indices are then the lowest-index basis vectors,
    which is how coset representatives are chosen.
    """
    vectors = np.asarray(vectors)
    if vectors.ndim == 1:
        vectors = vectors.reshape(1, -1)
    if vectors.shape[0] == 0:
        return Subspace.zero(field, n)
    r, pivots = field.rref(vectors[:, ::-1])
    basis = r[: len(pivots), ::-1]
    piv = tuple(n - 1 - c for c in pivots)
    return Subspace(field, n, _reduced=(np.ascontiguousarray(basis), piv))
