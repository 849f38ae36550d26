"""Characters of permutation groups.

The character table is computed with the Burnside-Dixon-Schneider method:
class-multiplication matrices are diagonalized simultaneously over F_p with
p = 1 mod exponent(G) and p > 2 sqrt|G|, and every value is lifted to an
exact cyclotomic integer through its eigenvalue multiplicities.  The result is
checked against both orthogonality relations before it is returned.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclotomic import CyclotomicInteger
from .errors import LiftFailure, SizeBoundExceeded, ValidationError
from .permgroup import CLASS_ENUM_BOUND, ConjugacyClasses, Permutation, PermutationGroup, _inv, _mul

__all__ = ["ClassFunction", "CharacterTable", "Part", "Decomposition", "permutation_character",
           "character_table", "inner_product", "decompose_permutation", "tqft_count_brute",
           "tqft_count_characters", "tqft_partition_function", "dixon_prime", "MAX_CLASSES",
           "BRUTE_BOUND"]

MAX_CLASSES = 40
BRUTE_BOUND = 10 ** 8


@dataclass(frozen=True, eq=False)
class ClassFunction:
    group: PermutationGroup
    values: tuple[CyclotomicInteger, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    @property
    def degree(self) -> int:
        return self.values[0].rational_value()

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))


def _exponent(classes: ConjugacyClasses) -> int:
    return math.lcm(*(r.order() for r in classes.representatives))


def permutation_character(G: PermutationGroup, classes: ConjugacyClasses | None = None
                          ) -> ClassFunction:
    """Fixed-point counts of the class representatives."""
    classes = classes or G.conjugacy_classes()
    e = _exponent(classes)
    return ClassFunction(G, tuple(CyclotomicInteger.from_int(e, r.fixed_points())
                                  for r in classes.representatives))


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.group is not g.group:
        raise ValidationError("class functions live on different groups")
    sizes = f.group.conjugacy_classes().sizes
    total = sum((a * b.conjugate() * s for a, b, s in zip(f.values, g.values, sizes)),
                CyclotomicInteger.from_int(1, 0))
    if not total.is_rational():
        raise LiftFailure("inner product is not rational")
    return Fraction(total.rational_value(), f.group.order())


# -- linear algebra over F_p -----------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    k = 17
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order)."""
    p = 1 + exponent * int(2 * math.sqrt(order) // exponent)
    while p <= 2 * math.sqrt(order) or not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    n = p - 1
    factors = []
    m, f = n, 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2


def _rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    M = M.copy() % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        M[[r, k]] = M[[k, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
        others = np.nonzero(M[:, c])[0]
        for i in others:
            if i != r:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _left_nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of {y : y M = 0} over F_p."""
    A = M.T % p
    R, pivots = _rref(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, pc in enumerate(pivots):
            basis[t, pc] = (-R[row, f]) % p
    return basis


def _charpoly(C: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial (highest coefficient first) via Hessenberg reduction.

    Works in every characteristic, unlike trace-based recurrences that divide by k.
    """
    H = C.copy() % p
    n = len(H)
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if len(nz) == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), -1, p)
        for j in range(m + 1, n):
            u = int(H[j, m - 1]) * inv % p
            if u:
                H[j] = (H[j] - u * H[m]) % p
                H[:, m] = (H[:, m] + u * H[:, j]) % p
    # p_k is the characteristic polynomial of the leading k x k block (low degree first)
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[-1]
        cur = [0] + prev  # x * p_{m-1}
        h = int(H[m - 1, m - 1])
        for k, c in enumerate(prev):
            cur[k] = (cur[k] - h * c) % p
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * int(H[i, i - 1]) % p
            coef = int(H[i - 1, m - 1]) * prod % p
            if coef:
                for k, c in enumerate(polys[i - 1]):
                    cur[k] = (cur[k] - coef * c) % p
        polys.append(cur)
    return polys[-1][::-1]


def _roots(coeffs: Sequence[int], p: int) -> list[int]:
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        acc = (acc * x + c) % p
    return np.nonzero(acc == 0)[0].tolist()


def _split(spaces: list[np.ndarray], T: np.ndarray, p: int) -> list[np.ndarray]:
    out = []
    for V in spaces:
        if V.shape[0] == 1:
            out.append(V)
            continue
        V, pivots = _rref(V, p)
        C = (V @ T % p)[:, pivots]
        pieces = []
        for lam in _roots(_charpoly(C, p), p):
            Y = _left_nullspace((C - lam * np.eye(len(C), dtype=np.int64)) % p, p)
            pieces.append(Y @ V % p)
        if sum(len(Y) for Y in pieces) != V.shape[0]:
            raise LiftFailure("class matrix is not diagonalizable over F_p")
        out.extend(pieces)
    return out


# -- character table --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: PermutationGroup
    classes: ConjugacyClasses
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]
    exponent: int
    prime: int
    power_maps: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "order": self.group.order(),
            "exponent": self.exponent,
            "prime": self.prime,
            "classes": [{"size": s, "order": r.order(), "cycle_type": r.cycle_type(),
                         "representative": r.to_images()}
                        for r, s in zip(self.classes.representatives, self.classes.sizes)],
            "degrees": list(self.degrees),
            "conductor": self.exponent,
            "values": [[list(v.coeffs) for v in chi.values] for chi in self.irreducibles],
        }


def _class_constants(G: PermutationGroup) -> np.ndarray:
    """a[j, i, k] = #{x in C_j : x^-1 z_k in C_i} for a fixed z_k in C_k."""
    cd = G.class_data()
    X = cd.all.astype(np.intp)
    n, d = X.shape
    r = len(cd.members)
    Xinv = np.empty_like(X)
    np.put_along_axis(Xinv, X, np.broadcast_to(np.arange(d), X.shape), axis=1)
    a = np.zeros((r, r, r), dtype=np.int64)
    for k, z in enumerate(cd.classes.representatives):
        y_ids = cd.lookup(np.asarray(z, dtype=np.intp)[Xinv])
        counts = np.bincount(cd.class_ids * r + y_ids, minlength=r * r)
        a[:, :, k] = counts.reshape(r, r)
    return a


def _power_maps(G: PermutationGroup, classes: ConjugacyClasses) -> tuple[tuple[int, ...], ...]:
    """power_maps[k][l] = class of (representative k)^l for 0 <= l < order."""
    out = []
    for rep in classes.representatives:
        o = rep.order()
        powers = [tuple(rep ** l) for l in range(o)]
        out.append(tuple(int(c) for c in G.class_data().lookup(np.asarray(powers))))
    return tuple(out)


def character_table(G: PermutationGroup, bound: int = CLASS_ENUM_BOUND,
                    max_classes: int = MAX_CLASSES) -> CharacterTable:
    cd = G.class_data(bound)
    classes = cd.classes
    r = len(classes)
    if r > max_classes:
        raise SizeBoundExceeded(f"{r} conjugacy classes exceed the table bound {max_classes}")
    order = G.order()
    e = _exponent(classes)
    p = dixon_prime(order, e)
    sizes = classes.sizes
    power = _power_maps(G, classes)
    inverse = [pm[-1] if len(pm) > 1 else 0 for pm in power]

    a = _class_constants(G)
    spaces = [np.eye(r, dtype=np.int64)]
    for j in range(1, r):
        if len(spaces) == r:
            break
        spaces = _split(spaces, a[j].T % p, p)
    if len(spaces) != r:
        raise LiftFailure(f"found {len(spaces)} common eigenvectors, expected {r}")

    zeta = pow(_primitive_root(p), (p - 1) // e, p)
    irreducibles = []
    for V in spaces:
        w = V[0] * pow(int(V[0, 0]), -1, p) % p
        z = sum(int(w[k]) * int(w[inverse[k]]) * pow(sizes[k], -1, p) for k in range(r)) % p
        target = order * pow(z, -1, p) % p
        f = next((f for f in range(1, math.isqrt(order) + 1)
                  if f * f % p == target and order % f == 0), None)
        if f is None:
            raise LiftFailure("no admissible character degree")
        chi_p = [int(w[k]) * f * pow(sizes[k], -1, p) % p for k in range(r)]
        values = []
        for k in range(r):
            o = len(power[k])
            step = e // o
            mult = {}
            for s in range(o):
                m = sum(chi_p[power[k][l]] * pow(zeta, (-step * s * l) % e, p)
                        for l in range(o)) * pow(o, -1, p) % p
                if m > f:
                    raise LiftFailure(f"eigenvalue multiplicity {m} exceeds degree {f}")
                if m:
                    mult[step * s] = m
            if sum(mult.values()) != f:
                raise LiftFailure("eigenvalue multiplicities do not sum to the degree")
            values.append(CyclotomicInteger.from_exponents(e, mult))
        irreducibles.append(ClassFunction(G, tuple(values)))

    # trivial character first, then by degree
    irreducibles.sort(key=lambda chi: (chi.degree, any(v != 1 for v in chi.values),
                                       [tuple(v.coeffs) for v in chi.values]))
    table = CharacterTable(G, classes, tuple(irreducibles),
                           tuple(chi.degree for chi in irreducibles), e, p, power)
    _verify(table)
    return table


def _verify(table: CharacterTable) -> None:
    order = table.group.order()
    if sum(f * f for f in table.degrees) != order:
        raise LiftFailure("sum of squared degrees differs from the group order")
    irr = table.irreducibles
    for i, chi in enumerate(irr):
        for j in range(i, len(irr)):
            if inner_product(chi, irr[j]) != (i == j):
                raise LiftFailure(f"row orthogonality fails for characters {i}, {j}")
    cent = table.classes.centralizer_orders
    r = len(cent)
    for k in range(r):
        for l in range(k, r):
            s = sum((chi.values[k] * chi.values[l].conjugate() for chi in irr),
                    CyclotomicInteger.from_int(1, 0))
            if s != (cent[k] if k == l else 0):
                raise LiftFailure(f"column orthogonality fails for classes {k}, {l}")


# -- decomposition ------------------------------------------------------------

@dataclass(frozen=True)
class Part:
    label: str
    index: int
    multiplicity: int
    degree: int
    at_sigma0: CyclotomicInteger
    at_sigma0_sq: CyclotomicInteger
    at_sigma1: CyclotomicInteger


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[Part, ...]
    method: str
    degree: int

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(p.multiplicity for p in self.parts)


def decompose_permutation(G: PermutationGroup, D, shortcut: bool = True,
                          bound: int = CLASS_ENUM_BOUND) -> Decomposition:
    """Split the permutation module of a dessin into irreducibles.

    2-transitive groups use trivial + (permutation character - 1) directly;
    everything else goes through the character table.
    """
    d = D.degree
    s0, s1 = D.sigma0, D.sigma1
    s0sq = s0 * s0
    if shortcut and G.is_transitive() and G.is_2transitive():
        one = CyclotomicInteger.from_int(1, 1)
        fix = [CyclotomicInteger.from_int(1, p.fixed_points() - 1) for p in (s0, s0sq, s1)]
        parts = (Part("trivial", 0, 1, 1, one, one, one),
                 Part("standard", 1, 1, d - 1, *fix))
        return Decomposition(parts, "2-transitive", d)

    if G.order() > bound:
        raise SizeBoundExceeded(
            f"group of order {G.order()} is not 2-transitive and exceeds the class bound {bound}")
    table = character_table(G, bound)
    chi = permutation_character(G, table.classes)
    at = [G.class_of(p) for p in (s0, s0sq, s1)]
    parts = []
    for i, irr in enumerate(table.irreducibles):
        m = inner_product(chi, irr)
        if m.denominator != 1 or m < 0:
            raise LiftFailure(f"multiplicity {m} is not a non-negative integer")
        if m:
            parts.append(Part("trivial" if i == 0 else f"chi{i}", i, int(m), irr.degree,
                              irr.values[at[0]], irr.values[at[1]], irr.values[at[2]]))
    if sum(p.multiplicity * p.degree for p in parts) != d:
        raise LiftFailure("multiplicities do not add up to the permutation degree")
    return Decomposition(tuple(parts), "character-table", d)


# -- 2d TQFT counts -----------------------------------------------------------

def tqft_count_brute(genus: int, G: PermutationGroup, bound: int = BRUTE_BOUND) -> int:
    """#{(a_1..a_g, b_1..b_g) in G^2g : prod a_i b_i a_i^-1 b_i^-1 = 1} by enumeration."""
    if genus < 1:
        raise ValidationError("genus must be at least 1")
    n = G.order()
    if n ** (2 * genus) > bound:
        raise SizeBoundExceeded(f"|G|^(2g) = {n ** (2 * genus)} exceeds the brute bound {bound}")
    elems = [tuple(x) for x in G.elements()]
    inv = {x: _inv(x) for x in elems}
    ident = tuple(range(G.degree))
    count = 0
    for tup in itertools.product(elems, repeat=2 * genus):
        acc = ident
        for a, b in zip(tup[:genus], tup[genus:]):
            acc = _mul(_mul(_mul(_mul(acc, a), b), inv[a]), inv[b])
        count += acc == ident
    return count


def tqft_count_characters(genus: int, G: PermutationGroup, bound: int = CLASS_ENUM_BOUND) -> int:
    """|G| * sum over irreducibles of (|G| / dim)^(2g - 2): the homomorphism count."""
    if genus < 1:
        raise ValidationError("genus must be at least 1")
    n = G.order()
    degrees = character_table(G, bound).degrees
    return n * sum((n // f) ** (2 * genus - 2) for f in degrees)


def tqft_partition_function(genus: int, G: PermutationGroup) -> Fraction:
    """Z_G = sum over irreducibles of (|G| / dim)^(2g - 2) = homomorphisms / |G|."""
    return Fraction(tqft_count_characters(genus, G), G.order())
