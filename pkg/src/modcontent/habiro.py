"""Cyclotomic comaximality, clique components of N, and Habiro-ring elements.

Habiro elements are stored as compatible residue sequences
``r_n in Z[q] / (q;q)_n`` with ``(q;q)_n = (1-q)(1-q^2)...(1-q^n)``.  The
series form ``sum a_n(q) (q;q)_n`` is an input/output format only.  Series
written with ``(q^n-1)...(q-1)`` differ by the sign ``(-1)^n``; use
:func:`from_descending_series` for those.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CyclotomicInteger, IntPolynomial, cyclotomic, q_pochhammer, resultant
from .errors import DomainError, InsufficientTruncation, NonConvergence, NotSubset, ValidationError

__all__ = [
    "prime_power_base", "comaximal", "cyclotomic_resultant", "CliqueGraph", "clique_graph",
    "hits_every_component", "is_saturated", "HabiroElement", "habiro_from_series",
    "from_descending_series", "kontsevich", "evaluate_at_root", "canonical_series",
    "chi12", "zagier_radial_sum", "ZagierReport", "zagier_radial_check",
]


def prime_power_base(r: int) -> int | None:
    """p if r = p^k with p prime and k >= 1, else None."""
    if r < 2:
        return None
    p = 2
    while p * p <= r:
        if r % p == 0:
            while r % p == 0:
                r //= p
            return p if r == 1 else None
        p += 1
    return r


def comaximal(m: int, n: int) -> bool:
    """Whether (Phi_m) and (Phi_n) are comaximal in Z[q]."""
    if m < 1 or n < 1:
        raise DomainError("indices must be positive")
    if m == n:
        raise DomainError("comaximality is defined for distinct indices")
    hi, lo = max(m, n), min(m, n)
    if hi % lo:
        return True
    return prime_power_base(hi // lo) is None


def cyclotomic_resultant(m: int, n: int) -> int:
    if m == n:
        raise DomainError("resultant of a cyclotomic polynomial with itself is 0")
    return resultant(cyclotomic(m), cyclotomic(n))


@dataclass(frozen=True)
class CliqueGraph:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    def component_of(self, n: int) -> tuple[int, ...]:
        for comp in self.components:
            if n in comp:
                return comp
        raise KeyError(n)


def _linked(a: int, b: int) -> bool:
    hi, lo = max(a, b), min(a, b)
    return hi % lo == 0 and prime_power_base(hi // lo) is not None


def clique_graph(S: Iterable[int]) -> CliqueGraph:
    nodes = tuple(sorted(set(S)))
    if not nodes:
        raise DomainError("clique graph needs a non-empty set")
    if nodes[0] < 1:
        raise DomainError("clique graph is defined on positive integers")
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if _linked(a, b):
                edges.append((a, b))
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    comps: dict[int, list[int]] = {}
    for n in nodes:
        comps.setdefault(find(n), []).append(n)
    return CliqueGraph(nodes, tuple(edges), tuple(tuple(c) for c in comps.values()))


def hits_every_component(S_prime: Iterable[int], S: Iterable[int]) -> bool:
    """Hypothesis of Habiro's inclusion Z[q]^S -> Z[q]^S' for S' inside S."""
    sp, s = set(S_prime), set(S)
    if not sp <= s:
        raise NotSubset(f"{sorted(sp - s)} not contained in S")
    return all(sp.intersection(c) for c in clique_graph(s).components)


def is_saturated(S: Iterable[int]) -> bool:
    s = set(S)
    return all(d in s for n in s for d in range(1, n + 1) if n % d == 0)


@dataclass(frozen=True)
class HabiroElement:
    """Truncation at level N: residues r_0..r_N, r_n reduced mod (q;q)_n."""

    residues: tuple[IntPolynomial, ...]

    def __post_init__(self):
        res = tuple(r % q_pochhammer(n) for n, r in enumerate(self.residues))
        object.__setattr__(self, "residues", res)
        for n in range(len(res) - 1):
            if res[n + 1] % q_pochhammer(n) != res[n]:
                raise ValidationError(f"residues at levels {n} and {n + 1} are incompatible")

    @property
    def level(self) -> int:
        return len(self.residues) - 1

    def truncate(self, level: int) -> "HabiroElement":
        return HabiroElement(self.residues[:level + 1])

    def _zip(self, other):
        if not isinstance(other, HabiroElement):
            other = habiro_from_series([IntPolynomial.constant(int(other))], self.level)
        k = min(self.level, other.level)
        return zip(range(k + 1), self.residues, other.residues)

    def __add__(self, other):
        return HabiroElement(tuple(a + b for _, a, b in self._zip(other)))

    __radd__ = __add__

    def __neg__(self):
        return HabiroElement(tuple(-r for r in self.residues))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return HabiroElement(tuple(a * b for _, a, b in self._zip(other)))

    __rmul__ = __mul__


def habiro_from_series(coeffs: Sequence[IntPolynomial | int], level: int | None = None
                       ) -> HabiroElement:
    """Element sum a_n(q) (q;q)_n truncated at ``level`` (default len(coeffs))."""
    a = [c if isinstance(c, IntPolynomial) else IntPolynomial.constant(int(c)) for c in coeffs]
    N = len(a) if level is None else level
    residues = []
    partial = IntPolynomial()
    for n in range(N + 1):
        residues.append(partial % q_pochhammer(n))
        if n < len(a):
            partial = partial + a[n] * q_pochhammer(n)
    return HabiroElement(tuple(residues))


def from_descending_series(coeffs: Sequence[IntPolynomial | int], level: int | None = None
                           ) -> HabiroElement:
    """Element sum a_n(q) (q^n-1)...(q-1), converted to the (q;q)_n basis."""
    signed = [c * (-1) ** n if isinstance(c, IntPolynomial) else int(c) * (-1) ** n
              for n, c in enumerate(coeffs)]
    return habiro_from_series(signed, level)


def kontsevich(level: int) -> HabiroElement:
    """Truncation of sum_n (1-q)(1-q^2)...(1-q^n)."""
    return habiro_from_series([1] * level, level)


def canonical_series(h: HabiroElement) -> list[IntPolynomial]:
    """Coefficients a_0..a_{N-1} with deg(a_n) <= n reproducing the residues."""
    out = []
    for n in range(h.level):
        out.append((h.residues[n + 1] - h.residues[n]).exact_div(q_pochhammer(n)))
    return out


def evaluate_at_root(h: HabiroElement, m: int) -> CyclotomicInteger:
    """Exact value at a primitive m-th root of unity, as an element of Z[q]/Phi_m."""
    if m < 1:
        raise DomainError("m must be positive")
    if h.level < m:
        raise InsufficientTruncation(
            f"value at a primitive {m}-th root needs level >= {m}, have {h.level}")
    return CyclotomicInteger(m, h.residues[-1].coeffs)


def chi12(n: int) -> int:
    """The primitive quadratic character of conductor 12."""
    return {1: 1, 11: 1, 5: -1, 7: -1}.get(n % 12, 0)


def zagier_radial_sum(r: float, m: int, k: int = 1, tol: float = 1e-15,
                      cap: int = 10 ** 7) -> complex:
    """-1/2 sum n chi12(n) q^((n^2-1)/24) at q = r * exp(2 pi i k / m)."""
    if not 0 < r < 1:
        raise DomainError("radius must lie in (0, 1)")
    log_r = math.log(r)
    # n r^((n^2-1)/24) is decreasing past its peak; find where it drops below tol
    peak = math.sqrt(12 / -log_r)
    n_max = max(16, int(peak) + 1)
    while n_max * math.exp((n_max * n_max - 1) / 24 * log_r) >= tol:
        n_max *= 2
        if n_max > cap:
            raise NonConvergence(f"series tail at r={r} not below {tol} within {cap} terms")
    n = np.arange(1, n_max + 1, dtype=np.int64)
    res = n % 12
    chi = np.select([(res == 1) | (res == 11), (res == 5) | (res == 7)], [1, -1], 0)
    keep = chi != 0
    n, chi = n[keep], chi[keep]
    e = (n * n - 1) // 24
    phase = np.exp(2j * np.pi * ((k * e) % m) / m)
    terms = n * chi * np.exp(e * log_r) * phase
    return complex(-0.5 * terms.sum())


def _neville(xs: Sequence[float], ys: Sequence[complex], x0: float = 0.0) -> complex:
    p = list(ys)
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = ((x0 - xs[i + k]) * p[i] + (xs[i] - x0) * p[i + 1]) / (xs[i] - xs[i + k])
    return p[0]


@dataclass(frozen=True)
class ZagierReport:
    m: int
    exact: CyclotomicInteger
    exact_value: complex
    radii: tuple[float, ...]
    radial_values: tuple[complex, ...]
    extrapolated: complex
    difference: float
    tolerance: float
    passed: bool = field(default=False)


def zagier_radial_check(m: int, radii: Sequence[float] | None = None,
                        tolerance: float = 0.05) -> ZagierReport:
    """Compare the exact root-of-unity value of the Kontsevich series with the
    radial limit of the conductor-12 theta series at exp(2 pi i / m).

    The limit is taken by polynomial extrapolation in t = -log(r) to t = 0.
    """
    if m < 1:
        raise DomainError("m must be positive")
    if radii is None:
        radii = [1 - 10.0 ** -k for k in range(1, 5)]
    radii = tuple(radii)
    if list(radii) != sorted(radii) or len(set(radii)) != len(radii):
        raise DomainError("radii must be strictly increasing toward 1")
    exact = evaluate_at_root(kontsevich(m), m)
    exact_value = complex(exact)
    values = tuple(zagier_radial_sum(r, m) for r in radii)
    limit = _neville([-math.log(r) for r in radii], values)
    diff = abs(limit - exact_value)
    return ZagierReport(m, exact, exact_value, radii, values, limit, diff, tolerance,
                        passed=diff < tolerance)
