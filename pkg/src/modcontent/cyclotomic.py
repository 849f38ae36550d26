"""Exact integer polynomials and cyclotomic integers.

``IntPolynomial`` stores big-integer coefficients from the constant term up.
``CyclotomicInteger`` is an element of Z[q]/Phi_m(q) in the power basis
1, q, ..., q^(phi(m)-1); every constructor reduces, so equality is structural.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

__all__ = ["IntPolynomial", "cyclotomic", "euler_phi", "q_pochhammer", "resultant",
           "CyclotomicInteger"]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @staticmethod
    def _lift(other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "IntPolynomial"):
        """Division by a polynomial with leading coefficient +-1 (stays over Z)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.leading
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(0, len(rem) - dq)
        oc = other.coeffs
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * lead  # lead is its own inverse
            if c:
                quot[k - dq] = c
                for j in range(dq + 1):
                    rem[k - dq + j] -= c * oc[j]
        return IntPolynomial(quot), IntPolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def euler_phi(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """Phi_n by exact division of q^n - 1 by Phi_d for the proper divisors d."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    poly = IntPolynomial.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic(d))
    return poly


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> IntPolynomial:
    """(q;q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n == 0:
        return IntPolynomial((1,))
    return q_pochhammer(n - 1) * (1 - IntPolynomial.monomial(n))


def _prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    rem = list(a.coeffs)
    db = b.degree
    lb = b.leading
    e = a.degree - db + 1
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        rem = [x * lb for x in rem]
        if c:
            for j in range(db + 1):
                rem[k - db + j] -= c * b.coeffs[j]
        e -= 1
    rem = [x * lb ** e for x in rem] if e > 0 else rem
    return IntPolynomial(rem[:db] if db > 0 else [])


def resultant(a: IntPolynomial, b: IntPolynomial) -> int:
    """Resultant over Z by the subresultant pseudo-remainder sequence."""
    if not a or not b:
        return 0
    ca, cb = a.content(), b.content()
    a = IntPolynomial(x // ca for x in a.coeffs)
    b = IntPolynomial(x // cb for x in b.coeffs)
    t = ca ** b.degree * cb ** a.degree
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    if b.degree == 0:
        return s * t * b.leading ** a.degree
    g = h = 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = _prem(a, b)
        a = b
        div = g * h ** delta
        b = IntPolynomial(x // div for x in r.coeffs)
        g = a.leading
        h = g ** delta // h ** (delta - 1) if delta >= 1 else h
        if not b:
            return 0
        if b.degree == 0:
            break
    h = b.leading ** a.degree // h ** (a.degree - 1) if a.degree >= 1 else h
    return s * t * h


@lru_cache(maxsize=None)
def _reduction_matrix(m: int) -> np.ndarray:
    """Row k holds q^k mod Phi_m in the power basis, for 0 <= k < m."""
    phi = cyclotomic(m)
    deg = phi.degree
    low = np.array(phi.coeffs[:deg], dtype=object)
    rows = np.zeros((m, deg), dtype=object)
    v = np.zeros(deg, dtype=object)
    v[0] = 1
    for k in range(m):
        rows[k] = v
        top = v[-1]
        v = np.concatenate(([0], v[:-1]))
        if top:
            v = v - top * low
    small = max((abs(int(x)) for x in rows.ravel()), default=0)
    return rows.astype(np.int64) if small < 2 ** 20 else rows


def _reduce(m: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    if len(coeffs) == 0:
        return ()
    try:
        arr = np.asarray(coeffs, dtype=np.int64)
    except OverflowError:
        arr = np.asarray([int(c) for c in coeffs], dtype=object)
    pad = -len(arr) % m
    if pad:
        arr = np.concatenate([arr, np.zeros(pad, dtype=arr.dtype)])
    mat = _reduction_matrix(m)
    if arr.dtype == np.int64 and int(np.abs(arr).max()) * len(arr) < 2 ** 40:
        folded = arr.reshape(-1, m).sum(axis=0)
        # reduction rows are bounded by 2**20 when stored as int64
        if mat.dtype == np.int64 and int(np.abs(folded).max()) * m < 2 ** 42:
            rows = np.nonzero(folded)[0]
            return tuple((folded[rows] @ mat[rows]).tolist())
    else:
        folded = arr.astype(object).reshape(-1, m).sum(axis=0)
    rows = np.nonzero(folded)[0]
    return tuple(int(x) for x in folded[rows].astype(object) @ mat[rows].astype(object))


class CyclotomicInteger:
    """Element of Z[zeta_m] written in the basis 1, zeta, ..., zeta^(phi(m)-1)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[int] = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = _reduce(conductor, coeffs)

    @classmethod
    def from_int(cls, conductor: int, a: int) -> "CyclotomicInteger":
        return cls(conductor, (a,))

    @classmethod
    def root_of_unity(cls, conductor: int, k: int = 1) -> "CyclotomicInteger":
        """zeta_m^k with zeta_m = exp(2 pi i / m)."""
        return cls(conductor, (0,) * (k % conductor) + (1,))

    @classmethod
    def from_exponents(cls, conductor: int, mult: dict[int, int]) -> "CyclotomicInteger":
        """Sum of mult[k] * zeta_m^k."""
        vec = [0] * conductor
        for k, c in mult.items():
            vec[k % conductor] += c
        return cls(conductor, vec)

    def embed(self, conductor: int) -> "CyclotomicInteger":
        """Same number viewed in Z[zeta_M] for a multiple M of the conductor."""
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        step = conductor // self.conductor
        vec = [0] * (step * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            vec[k * step] = c
        return CyclotomicInteger(conductor, vec)

    def _coerce(self, other):
        if isinstance(other, int):
            return self, CyclotomicInteger.from_int(self.conductor, other)
        if isinstance(other, CyclotomicInteger):
            if other.conductor == self.conductor:
                return self, other
            m = math.lcm(self.conductor, other.conductor)
            return self.embed(m), other.embed(m)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = max(len(a.coeffs), len(b.coeffs))
        return CyclotomicInteger(a.conductor, [(a.coeffs[i] if i < len(a.coeffs) else 0)
                                               + (b.coeffs[i] if i < len(b.coeffs) else 0)
                                               for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.conductor, [c * other for c in self.coeffs])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if not a.coeffs or not b.coeffs:
            return CyclotomicInteger(a.conductor)
        big = max(map(abs, a.coeffs)) * max(map(abs, b.coeffs)) * len(a.coeffs)
        dtype = np.int64 if big < 2 ** 60 else object
        prod = np.convolve(np.asarray(a.coeffs, dtype=dtype), np.asarray(b.coeffs, dtype=dtype))
        return CyclotomicInteger(a.conductor, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = CyclotomicInteger.from_int(self.conductor, 1)
        for _ in range(k):
            result = result * self
        return result

    def conjugate(self) -> "CyclotomicInteger":
        m = self.conductor
        vec = [0] * m
        for k, c in enumerate(self.coeffs):
            vec[(-k) % m] += c
        return CyclotomicInteger(m, vec)

    def galois(self, j: int) -> "CyclotomicInteger":
        """Image under zeta -> zeta^j (j coprime to the conductor)."""
        m = self.conductor
        vec = [0] * m
        for k, c in enumerate(self.coeffs):
            vec[(k * j) % m] += c
        return CyclotomicInteger(m, vec)

    def exact_div(self, n: int) -> "CyclotomicInteger":
        if any(c % n for c in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {n}")
        return CyclotomicInteger(self.conductor, [c // n for c in self.coeffs])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __int__(self):
        return self.rational_value()

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return complex(sum(c * z ** k for k, c in enumerate(self.coeffs)))

    def __eq__(self, other):
        pair = self._coerce(other) if isinstance(other, (int, CyclotomicInteger)) else None
        if pair is None:
            return NotImplemented
        a, b = pair
        return _trim(a.coeffs) == _trim(b.coeffs)

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.conductor, _trim(self.coeffs)))

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": list(self.coeffs)}

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0] if self.coeffs else 0)
        return str(IntPolynomial(self.coeffs)).replace("q", f"z{self.conductor}")

    def __repr__(self):
        return f"CyclotomicInteger({self.conductor}, {list(self.coeffs)})"


def to_fraction(x: CyclotomicInteger, denominator: int) -> Fraction:
    return Fraction(x.rational_value(), denominator)
