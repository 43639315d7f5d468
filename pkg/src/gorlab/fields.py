"""Exact scalar fields: prime fields, small extension fields and the rationals.

Finite field elements are stored as ``int64`` numpy entries.  Elements of
GF(p^s) are encoded as integers in ``[0, p^s)`` whose base-p digits are the
coefficients of a polynomial modulo a fixed irreducible (lowest digit is the
constant term, so GF(p) sits inside GF(p^s) as ``0..p-1``).  Rationals are
``fractions.Fraction`` objects in ``object`` arrays.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import kernels

MAX_PRIME = 1 << 16
MAX_EXTENSION_ORDER = 1024


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_mulmod(a, b, modulus, p):
    # coefficient lists, lowest degree first; modulus is monic
    s = len(modulus) - 1
    prod = [0] * (2 * s - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, s - 1, -1):
        c = prod[d]
        if c:
            for k in range(s + 1):
                prod[d - s + k] = (prod[d - s + k] - c * modulus[k]) % p
    return prod[:s]


def _find_primitive(p: int, s: int):
    """First monic degree-s polynomial over GF(p) whose root generates GF(p^s)*."""
    q = p ** s
    one = [1] + [0] * (s - 1)
    x = [0, 1] + [0] * (s - 2)
    for tail in itertools.product(range(p), repeat=s):
        modulus = list(tail) + [1]
        if modulus[0] == 0:
            continue
        cur = one
        for k in range(1, q):
            cur = _poly_mulmod(cur, x, modulus, p)
            if cur == one:
                break
        if k == q - 1 and cur == one:
            return modulus
    raise FieldError(f"no primitive polynomial of degree {s} over GF({p})")


class Field:
    """An exact field: GF(p), GF(p^s) or QQ (``char == 0``).

    Instances are immutable and compare by (char, degree).
    """

    __slots__ = ("char", "degree", "__dict__")

    def __init__(self, char: int, degree: int = 1):
        char = int(char)
        degree = int(degree)
        if char == 0:
            if degree != 1:
                raise FieldError("the rationals have no extension degree here")
        elif not _is_prime(char):
            raise FieldError(f"characteristic {char} is not prime")
        elif char >= MAX_PRIME:
            raise FieldError(f"prime {char} exceeds the supported bound 2^16")
        elif degree < 1:
            raise FieldError("extension degree must be positive")
        elif degree > 1 and char ** degree > MAX_EXTENSION_ORDER:
            raise FieldError(f"GF({char}^{degree}) is too large for table arithmetic")
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        if name in ("char", "degree"):
            raise AttributeError("Field is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Field) and (self.char, self.degree) == (other.char, other.degree)

    def __hash__(self):
        return hash((self.char, self.degree))

    def __repr__(self):
        if self.char == 0:
            return "QQ"
        if self.degree == 1:
            return f"GF({self.char})"
        return f"GF({self.char}^{self.degree})"

    def __reduce__(self):
        return (Field, (self.char, self.degree))

    # -- basic properties ------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self.char != 0

    @property
    def is_prime(self) -> bool:
        return self.char != 0 and self.degree == 1

    @property
    def q(self):
        return None if self.char == 0 else self.char ** self.degree

    @property
    def dtype(self):
        return object if self.char == 0 else np.int64

    def extension(self, degree: int) -> "Field":
        if self.char == 0:
            raise FieldError("the rationals are not extended here")
        return Field(self.char, self.degree * degree)

    # -- extension field tables -------------------------------------------
    @cached_property
    def _tables(self):
        p, s = self.char, self.degree
        q = p ** s
        modulus = _find_primitive(p, s)
        digits = np.array([[(x // p ** k) % p for k in range(s)] for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(s, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        # multiplication through discrete logarithms of the primitive root x
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = [1] + [0] * (s - 1)
        gen = [0, 1] + [0] * (s - 2)
        for k in range(q - 1):
            val = sum(c * p ** i for i, c in enumerate(cur))
            exp[k] = val
            log[val] = k
            cur = _poly_mulmod(cur, gen, modulus, p)
        mul = np.zeros((q, q), dtype=np.int64)
        nz = np.arange(1, q)
        mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[nz]) % (q - 1)]
        return {"add": add, "neg": neg, "mul": mul, "inv": inv, "modulus": modulus}

    # -- conversions -------------------------------------------------------
    def scalar(self, x):
        """Coerce a Python number (or 'a/b' string) into a field element."""
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                num = self.scalar(x.numerator)
                den = self.scalar(x.denominator)
                if den == 0:
                    raise FieldError(f"{x} has no image in {self}")
                return self.mul_scalar(num, self.inv(den))
            x = x.numerator
        x = int(x)
        if self.degree == 1:
            return x % self.char
        # an integer maps through the prime subfield
        return x % self.char

    def array(self, data) -> np.ndarray:
        """Canonical ndarray for ``data`` (always a copy).

        Over GF(p^s) integer entries are taken as encoded field elements.
        """
        if self.char == 0:
            arr = np.array(data, dtype=object)
            flat = arr.reshape(-1)
            for i in range(flat.size):
                flat[i] = Fraction(flat[i])
            return arr
        arr = np.asarray(data)
        if arr.dtype.kind in "iub":
            arr = arr.astype(np.int64)
            if self.degree == 1:
                return np.mod(arr, self.char)
        else:
            out = np.empty(arr.shape, dtype=np.int64)
            of = out.reshape(-1)
            for i, v in enumerate(arr.reshape(-1)):
                of[i] = self.scalar(v) if isinstance(v, (Fraction, str, float)) else int(v)
            arr = out if self.degree > 1 else np.mod(out, self.char)
            if self.degree == 1:
                return arr
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise FieldError(f"entries outside the encoding range of {self}")
        return arr.copy()

    def embed(self, arr: np.ndarray, sub: "Field") -> np.ndarray:
        """Map an array over the subfield ``sub`` of the same characteristic."""
        if sub == self:
            return arr.copy()
        if sub.char != self.char or not sub.is_prime:
            raise FieldError(f"cannot embed {sub} into {self}")
        return np.asarray(arr, dtype=np.int64).copy()

    def zeros(self, shape) -> np.ndarray:
        if self.char == 0:
            arr = np.empty(shape, dtype=object)
            arr.fill(Fraction(0))
            return arr
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        if self.char == 0:
            return a + b
        if self.degree == 1:
            return (a + b) % self.char
        return self._tables["add"][a, b]

    def neg(self, a):
        if self.char == 0:
            return -a
        if self.degree == 1:
            return (-a) % self.char
        return self._tables["neg"][a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        """Elementwise product (broadcasting)."""
        if self.char == 0:
            return a * b
        if self.degree == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.char
        return self._tables["mul"][a, b]

    def mul_scalar(self, a, b):
        out = self.mul(a, b)
        return out if self.char == 0 else int(out)

    def inv(self, a):
        if self.char == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.degree == 1:
            return pow(a, -1, self.char)
        return int(self._tables["inv"][a])

    def matmul(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if self.char == 0:
            if a.shape[-1] == 0:
                return self.zeros(a.shape[:-1] + b.shape[1:])
            return np.dot(a, b)
        if self.degree == 1:
            k = a.shape[-1]
            if k == 0:
                return self.zeros(a.shape[:-1] + b.shape[1:])
            # float64 products are exact for p < 2^16 and inner dimension < 2^21
            if k < (1 << 21):
                prod = a.astype(np.float64) @ b.astype(np.float64)
                return np.mod(prod, self.char).astype(np.int64)
            return (a @ b) % self.char
        t = self._tables
        squeeze_b = b.ndim == 1
        if squeeze_b:
            b = b[:, None]
        squeeze_a = a.ndim == 1
        if squeeze_a:
            a = a[None, :]
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = t["add"][out, t["mul"][a[:, k][:, None], b[k][None, :]]]
        if squeeze_b:
            out = out[:, 0]
        if squeeze_a:
            out = out[0]
        return out

    def lincomb(self, coeffs, mats) -> np.ndarray:
        """Sum of ``coeffs[i] * mats[i]`` over the leading axis of ``mats``."""
        mats = np.asarray(mats)
        coeffs = np.asarray(coeffs)
        if mats.shape[0] == 0:
            return self.zeros(mats.shape[1:])
        flat = mats.reshape(mats.shape[0], -1)
        return self.matmul(coeffs[None, :], flat)[0].reshape(mats.shape[1:])

    def addm(self, a, b):
        """Elementwise sum of arrays."""
        return self.add(np.asarray(a), np.asarray(b))

    def subm(self, a, b):
        return self.sub(np.asarray(a), np.asarray(b))

    def negm(self, a):
        return self.neg(np.asarray(a))

    # -- elimination ---------------------------------------------------------
    def rref(self, a) -> tuple[np.ndarray, tuple]:
        """Reduced row echelon form of ``a`` (a copy) and its pivot columns."""
        a = np.array(a, dtype=self.dtype, copy=True)
        if a.ndim != 2:
            raise ValueError("rref expects a 2-d array")
        if self.char == 0:
            pivots = _rref_fraction(a)
        elif self.degree == 1:
            a = np.ascontiguousarray(a)
            pivots = kernels.rref_modp(a, self.char)
        else:
            pivots = _rref_table(a, self._tables)
        return a, tuple(int(c) for c in pivots)

    # -- enumeration and sampling -----------------------------------------------
    def elements(self):
        if self.char == 0:
            raise FieldError("cannot enumerate the rationals")
        return range(self.q)

    def random_scalar(self, rng, nonzero=False, bound=10):
        """Uniform element (finite) or integer in [-bound, bound] (rationals)."""
        while True:
            if self.char == 0:
                x = Fraction(rng.randint(-bound, bound))
            else:
                x = rng.randrange(self.q)
            if not nonzero or x != 0:
                return x

    def random_array(self, rng, shape, bound=10) -> np.ndarray:
        out = self.zeros(shape)
        flat = out.reshape(-1)
        for i in range(flat.size):
            flat[i] = self.random_scalar(rng, bound=bound)
        return out

    def format_scalar(self, x) -> str:
        if self.char == 0:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x))

    def to_python(self, arr):
        """Nested lists of ints (finite) or strings/ints (rationals) for serialization."""
        arr = np.asarray(arr)
        if self.char == 0:
            def conv(x):
                x = Fraction(x)
                return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
            return np.vectorize(conv, otypes=[object])(arr).tolist() if arr.size else arr.tolist()
        return arr.astype(np.int64).tolist()


QQ = Field(0)


def GF(p: int, degree: int = 1) -> Field:
    return Field(p, degree)


def _rref_fraction(a) -> list:
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r >= m:
            break
        piv = None
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = 1 / a[r, c]
        row = a[r]
        nz = [j for j in range(c, n) if row[j] != 0]
        for j in nz:
            row[j] = row[j] * inv
        for i in range(m):
            if i == r:
                continue
            f = a[i, c]
            if f != 0:
                ai = a[i]
                for j in nz:
                    ai[j] = ai[j] - f * row[j]
        pivots.append(c)
        r += 1
    return pivots


def _rref_table(a, t) -> list:
    add, mul, neg, inv = t["add"], t["mul"], t["neg"], t["inv"]
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r >= m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        col = a[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            a[rows] = add[a[rows], mul[neg[col[rows]][:, None], a[r][None, :]]]
        pivots.append(c)
        r += 1
    return pivots
