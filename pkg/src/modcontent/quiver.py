"""The modular quiver, its Euler form, and local quivers of representations.

A representation of PSL2(Z) = C2 * C3 of dimension d is recorded by the
eigenspace multiplicities (a1, a2; b1, b2, b3): a1, a2 for sigma1 acting by
+1, -1 and b1, b2, b3 for sigma0 acting by 1, rho, rho^2, rho = exp(2 pi i/3).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CyclotomicInteger
from .errors import DomainError, NegativeArrowCount, NotIntegral, ValidationError

__all__ = ["DimensionVector5", "Weight5", "QuiverPresentation", "EULER_MATRIX", "euler_form",
           "dimvec_from_character", "part_dimension_vectors", "content_quiver", "modular_content",
           "family_dimension", "weight_pairing", "one_quiver_generators", "one_quiver_modular",
           "surface_local_quiver"]

EULER_MATRIX = tuple(
    tuple((1 if i == j else 0) - (1 if i < 2 <= j else 0) for j in range(5)) for i in range(5))


@dataclass(frozen=True)
class DimensionVector5:
    a1: int
    a2: int
    b1: int
    b2: int
    b3: int

    def __post_init__(self):
        if any(x < 0 for x in self):
            raise ValidationError(f"dimension vector {tuple(self)} has a negative entry")

    def __iter__(self):
        return iter((self.a1, self.a2, self.b1, self.b2, self.b3))

    def __add__(self, other: "DimensionVector5") -> "DimensionVector5":
        return DimensionVector5(*(x + y for x, y in zip(self, other)))

    def scaled(self, k: int) -> "DimensionVector5":
        return DimensionVector5(*(k * x for x in self))

    @property
    def is_balanced(self) -> bool:
        return self.a1 + self.a2 == self.b1 + self.b2 + self.b3

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self):
        return f"({self.a1},{self.a2};{self.b1},{self.b2},{self.b3})"


@dataclass(frozen=True)
class Weight5:
    values: tuple[int, ...] = (-1, -1, 1, 1, 1)

    def __post_init__(self):
        if len(self.values) != 5:
            raise ValidationError("a weight has five components")


def euler_form(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """alpha^T M beta for the 5x5 Euler matrix of the modular quiver."""
    a, b = list(alpha), list(beta)
    return sum(a[i] * EULER_MATRIX[i][j] * b[j] for i in range(5) for j in range(5))


def family_dimension(alpha: Sequence[int]) -> int:
    return 1 - euler_form(alpha, alpha)


def weight_pairing(theta: Weight5, alpha: Sequence[int]) -> int:
    return sum(t * x for t, x in zip(theta.values, alpha))


def _as_cyclotomic(x) -> CyclotomicInteger:
    if isinstance(x, CyclotomicInteger):
        return x
    return CyclotomicInteger.from_int(1, int(x))


def dimvec_from_character(d: int, chi_s1: int | CyclotomicInteger, chi_s0, chi_s0sq
                          ) -> DimensionVector5:
    """Eigenspace multiplicities from the character values at sigma1, sigma0, sigma0^2."""
    s1 = _as_cyclotomic(chi_s1)
    if not s1.is_rational():
        raise NotIntegral(f"value {s1} at an involution is not rational")
    c1 = s1.rational_value()
    if (d + c1) % 2:
        raise NotIntegral(f"(d + chi(sigma1)) / 2 = ({d} + {c1}) / 2 is not an integer")
    a1, a2 = (d + c1) // 2, (d - c1) // 2
    s0, s0sq = _as_cyclotomic(chi_s0), _as_cyclotomic(chi_s0sq)
    m = math.lcm(s0.conductor, s0sq.conductor, 3)
    rho_inv = CyclotomicInteger.root_of_unity(m, -(m // 3))
    b = []
    for j in range(3):
        total = d + rho_inv ** j * s0 + rho_inv ** (2 * j) * s0sq
        if not total.is_rational() or total.rational_value() % 3:
            raise NotIntegral(f"sigma0 eigenspace {j} has non-integral multiplicity {total}/3")
        b.append(total.rational_value() // 3)
    if min(a1, a2, *b) < 0:
        raise NotIntegral("negative eigenspace multiplicity")
    return DimensionVector5(a1, a2, *b)


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[int, ...], ...]
    alpha: tuple[int, ...] | None = None

    def __post_init__(self):
        k = len(self.vertices)
        if len(self.arrows) != k or any(len(row) != k for row in self.arrows):
            raise ValidationError("arrow matrix must be square with one row per vertex")
        if any(x < 0 for row in self.arrows for x in row):
            raise NegativeArrowCount("arrow counts must be non-negative")

    def loops(self, i: int) -> int:
        return self.arrows[i][i]

    def to_json(self) -> dict:
        out = {"vertices": list(self.vertices), "arrows": [list(r) for r in self.arrows]}
        if self.alpha is not None:
            out["alpha"] = list(self.alpha)
        return out

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for i, v in enumerate(self.vertices):
            extra = f"\\nalpha={self.alpha[i]}" if self.alpha is not None else ""
            lines.append(f'  v{i} [label="{v}{extra}"];')
        for i, row in enumerate(self.arrows):
            for j, n in enumerate(row):
                if n == 0:
                    continue
                label = f"{n} loop{'s' if n != 1 else ''}" if i == j else str(n)
                lines.append(f'  v{i} -> v{j} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def content_quiver(labels: Sequence[str], dimvecs: Sequence[DimensionVector5],
                   alpha: Sequence[int] | None = None) -> QuiverPresentation:
    """Local quiver with delta_ij - chi(alpha_i, alpha_j) arrows from i to j."""
    k = len(dimvecs)
    arrows = []
    for i in range(k):
        row = []
        for j in range(k):
            n = (i == j) - euler_form(dimvecs[i], dimvecs[j])
            if n < 0:
                raise NegativeArrowCount(
                    f"{n} arrows from {labels[i]} to {labels[j]}: inconsistent dimension vectors")
            row.append(n)
        arrows.append(tuple(row))
    return QuiverPresentation(tuple(labels), tuple(arrows),
                              None if alpha is None else tuple(alpha))


def part_dimension_vectors(decomposition) -> list[DimensionVector5]:
    return [dimvec_from_character(p.degree, p.at_sigma1, p.at_sigma0, p.at_sigma0_sq)
            for p in decomposition.parts]


def modular_content(decomposition) -> QuiverPresentation:
    """Local quiver of a decomposed permutation representation, with multiplicities."""
    dims = part_dimension_vectors(decomposition)
    return content_quiver([p.label for p in decomposition.parts], dims,
                          [p.multiplicity for p in decomposition.parts])


ONE_QUIVER_LABELS = {"a": (1, 1), "b": (2, 2), "c": (3, 1), "d": (1, 2), "e": (2, 1), "f": (3, 2)}


def one_quiver_generators() -> dict[str, DimensionVector5]:
    """g_ij: sigma1 acts by the j-th eigenvalue, sigma0 by the i-th, on a line."""
    out = {}
    for name, (i, j) in ONE_QUIVER_LABELS.items():
        a = [int(j == 1), int(j == 2)]
        b = [int(i == 1), int(i == 2), int(i == 3)]
        out[name] = DimensionVector5(*a, *b)
    return out


def one_quiver_modular() -> QuiverPresentation:
    gens = one_quiver_generators()
    return content_quiver(list(gens), list(gens.values()))


def surface_local_quiver(genus: int, dims: Sequence[int]) -> QuiverPresentation:
    """Local quiver at a semisimple representation of a surface group."""
    if genus < 1:
        raise DomainError("genus must be at least 1")
    if not dims or any(n < 1 for n in dims):
        raise DomainError("dimensions must be a non-empty list of positive integers")
    k = len(dims)
    arrows = tuple(tuple(2 * (genus - 1) * dims[i] ** 2 + 2 if i == j
                         else 2 * dims[i] * dims[j] * (genus - 1) for j in range(k))
                   for i in range(k))
    return QuiverPresentation(tuple(f"v{i + 1}" for i in range(k)), arrows)
