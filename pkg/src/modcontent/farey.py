"""Generalized Farey symbols: parsing, validation, generation and triangulation.

A symbol is written as whitespace separated tokens::

    inf PAIR frac (PAIR frac)* PAIR inf

where ``frac`` is ``p/q`` or an integer and ``PAIR`` is ``o`` (even side),
``b`` (odd side) or a positive integer label shared by exactly two free sides.
"""
from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, Sequence

from .errors import DegenerateSymbol, DomainError, NoMediant, SymbolSyntaxError, ValidationError

__all__ = [
    "ExtendedRational", "INF", "Pairing", "EVEN", "ODD", "free",
    "FareySymbol", "Triangulation", "parse_symbol", "format_symbol",
    "symbol_to_json", "symbol_from_json", "farey_sequence", "iguanodon_symbol",
    "triangulate", "random_symbol",
]


@total_ordering
@dataclass(frozen=True)
class ExtendedRational:
    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator < 0:
            raise ValidationError(f"negative denominator in {self.numerator}/{self.denominator}")
        if self.denominator == 0 and self.numerator != 1:
            raise ValidationError("infinity must be stored as 1/0")
        if math.gcd(abs(self.numerator), self.denominator) != 1:
            raise ValidationError(f"fraction {self.numerator}/{self.denominator} is not reduced")

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    def __lt__(self, other):
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        if other.is_infinite:
            return not self.is_infinite
        if self.is_infinite:
            return False
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    __repr__ = __str__


INF = ExtendedRational(1, 0)


@dataclass(frozen=True)
class Pairing:
    kind: str  # "even" | "odd" | "free"
    label: int | None = None

    def __post_init__(self):
        if self.kind not in ("even", "odd", "free"):
            raise ValueError(f"unknown pairing kind {self.kind!r}")
        if (self.kind == "free") != (self.label is not None):
            raise ValueError("only free pairings carry a label")
        if self.label is not None and self.label < 1:
            raise ValidationError("free labels must be positive integers")

    @property
    def token(self) -> str:
        if self.kind == "even":
            return "o"
        if self.kind == "odd":
            return "b"
        return str(self.label)

    def __str__(self):
        return self.token

    __repr__ = __str__


EVEN = Pairing("even")
ODD = Pairing("odd")


def free(label: int) -> Pairing:
    return Pairing("free", label)


@dataclass(frozen=True)
class FareySymbol:
    """Validated symbol. ``pairings[i]`` labels the side between consecutive
    entries of ``vertices``, i.e. (inf, x_0), (x_0, x_1), ..., (x_n, inf)."""

    fractions: tuple[ExtendedRational, ...]
    pairings: tuple[Pairing, ...]

    def __post_init__(self):
        object.__setattr__(self, "fractions", tuple(self.fractions))
        object.__setattr__(self, "pairings", tuple(self.pairings))
        _validate(self.fractions, self.pairings)

    @property
    def vertices(self) -> tuple[ExtendedRational, ...]:
        return (INF,) + self.fractions

    def sides(self) -> list[tuple[ExtendedRational, ExtendedRational]]:
        """Boundary sides in symbol order, each as a pair (left, right)."""
        pts = (INF,) + self.fractions + (INF,)
        return [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]

    def count(self, kind: str) -> int:
        return sum(1 for p in self.pairings if p.kind == kind)

    def __str__(self):
        return format_symbol(self)


def _validate(fractions: Sequence[ExtendedRational], pairings: Sequence[Pairing]) -> None:
    if not fractions:
        raise ValidationError("symbol needs at least one finite fraction")
    if len(pairings) != len(fractions) + 1:
        raise ValidationError(
            f"expected {len(fractions) + 1} side pairings, got {len(pairings)}")
    if any(x.is_infinite for x in fractions):
        raise ValidationError("inf may only appear at the two ends")
    if not fractions[0].is_integer or not fractions[-1].is_integer:
        raise ValidationError("first and last fractions must be integers")
    if not any(x.numerator == 0 for x in fractions):
        raise ValidationError("symbol must contain 0")
    for x, y in zip(fractions, fractions[1:]):
        if not x < y:
            raise ValidationError(f"fractions not strictly increasing at {x}, {y}")
        det = x.numerator * y.denominator - x.denominator * y.numerator
        if abs(det) != 1:
            raise ValidationError(
                f"determinant condition violated between {x} and {y}: "
                f"|{x.numerator}*{y.denominator} - {x.denominator}*{y.numerator}| = {abs(det)}")
    labels = Counter(p.label for p in pairings if p.kind == "free")
    bad = sorted(label for label, c in labels.items() if c != 2)
    if bad:
        raise ValidationError(f"free labels must occur exactly twice: {bad}")


_FRAC_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def _parse_fraction(tok: str) -> ExtendedRational:
    m = _FRAC_RE.match(tok)
    if not m:
        raise SymbolSyntaxError(f"expected a fraction, got {tok!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise ValidationError(f"zero denominator in {tok!r}")
    return ExtendedRational(p, q)


def _parse_pairing(tok: str) -> Pairing:
    if tok == "o":
        return EVEN
    if tok == "b":
        return ODD
    if tok.isdigit() and int(tok) > 0:
        return free(int(tok))
    raise SymbolSyntaxError(f"expected a side pairing (o, b or positive integer), got {tok!r}")


def parse_symbol(text: str) -> FareySymbol:
    tokens = text.split()
    if len(tokens) < 5 or len(tokens) % 2 == 0:
        raise SymbolSyntaxError(f"wrong number of tokens ({len(tokens)}) in {text!r}")
    if tokens[0] != "inf" or tokens[-1] != "inf":
        raise SymbolSyntaxError("symbol must start and end with 'inf'")
    body = tokens[1:-1]
    pairings = [_parse_pairing(t) for t in body[0::2]]
    fractions = [_parse_fraction(t) for t in body[1::2]]
    return FareySymbol(tuple(fractions), tuple(pairings))


def format_symbol(s: FareySymbol) -> str:
    out = ["inf"]
    for p, x in zip(s.pairings, s.fractions):
        out += [p.token, str(x)]
    out += [s.pairings[-1].token, "inf"]
    return " ".join(out)


def symbol_to_json(s: FareySymbol) -> dict:
    return {
        "fractions": [[x.numerator, x.denominator] for x in s.fractions],
        "pairings": [f"free:{p.label}" if p.kind == "free" else p.token for p in s.pairings],
    }


def symbol_from_json(obj: dict) -> FareySymbol:
    try:
        fractions = [ExtendedRational(int(p), int(q)) for p, q in obj["fractions"]]
        pairings = []
        for tok in obj["pairings"]:
            if isinstance(tok, str) and tok.startswith("free:"):
                pairings.append(free(int(tok[5:])))
            else:
                pairings.append(_parse_pairing(str(tok)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise SymbolSyntaxError(f"malformed JSON symbol: {exc}") from exc
    return FareySymbol(tuple(fractions), tuple(pairings))


def farey_sequence(n: int) -> Iterator[ExtendedRational]:
    """Classical Farey sequence F(n) on [0, 1] in increasing order."""
    a, b, c, d = 0, 1, 1, n
    yield ExtendedRational(a, b)
    while c <= n:
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        yield ExtendedRational(a, b)


def iguanodon_symbol(n: int) -> FareySymbol:
    if n < 2:
        raise DomainError(f"Iguanodon symbols need n >= 2, got {n}")
    half = ExtendedRational(1, 2)
    fracs = [x for x in farey_sequence(n) if not half < x]
    fracs.append(ExtendedRational(1))
    pairings = [free(1)] + [ODD] * (len(fracs) - 1) + [free(1)]
    return FareySymbol(tuple(fracs), tuple(pairings))


Side = tuple  # (ExtendedRational, ExtendedRational), sorted


def side_key(u: ExtendedRational, v: ExtendedRational) -> Side:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Triangulation:
    vertices: tuple[ExtendedRational, ...]
    triangles: tuple[tuple[ExtendedRational, ExtendedRational, ExtendedRational], ...]
    side_to_triangles: dict

    def boundary_sides(self) -> list[Side]:
        return [s for s, ts in self.side_to_triangles.items() if len(ts) == 1]

    def diagonals(self) -> list[Side]:
        return [s for s, ts in self.side_to_triangles.items() if len(ts) == 2]


def _is_mediant(u: tuple[int, int], v: ExtendedRational, w: tuple[int, int]) -> bool:
    return (v.denominator == u[1] + w[1]) and (v.numerator == u[0] + w[0])


def triangulate(s: FareySymbol) -> Triangulation:
    """Cut the polygon into Farey triangles by peeling off mediants.

    Infinity enters a mediant as -1/0 on the left of x_0 and +1/0 on the
    right of x_n, so only finite vertices are ever removed.
    """
    if len(s.vertices) < 3:
        raise DegenerateSymbol(f"symbol {format_symbol(s)} has fewer than 3 distinct vertices")
    ring = list(s.vertices)
    triangles = []
    while len(ring) > 3:
        k = len(ring)
        for i in range(1, k):
            left, v, right = ring[i - 1], ring[i], ring[(i + 1) % k]
            u = (-1, 0) if left.is_infinite else (left.numerator, left.denominator)
            w = (1, 0) if right.is_infinite else (right.numerator, right.denominator)
            if _is_mediant(u, v, w):
                triangles.append(tuple(sorted((left, v, right))))
                del ring[i]
                break
        else:
            raise NoMediant(f"no contractible vertex among {ring}")
    triangles.append(tuple(sorted(ring)))

    incidence: dict = {}
    for t, (a, b, c) in enumerate(triangles):
        for side in ((a, b), (b, c), (a, c)):
            incidence.setdefault(side, []).append(t)
    incidence = {k: tuple(v) for k, v in incidence.items()}
    return Triangulation(tuple(s.vertices), tuple(triangles), incidence)


def random_symbol(rng: random.Random, max_inserts: int = 8, max_span: int = 3,
                  even: bool = True) -> FareySymbol:
    """Random valid symbol with at least three vertices (for property tests)."""
    lo = -rng.randint(0, max_span)
    hi = rng.randint(0, max_span)
    if hi == lo:
        hi += 1
    fracs = [(k, 1) for k in range(lo, hi + 1)]
    for _ in range(rng.randint(0, max_inserts)):
        i = rng.randrange(len(fracs) - 1)
        (a, b), (c, d) = fracs[i], fracs[i + 1]
        fracs.insert(i + 1, (a + c, b + d))
    n_sides = len(fracs) + 1
    n_free = rng.randrange(0, n_sides + 1, 2) if n_sides > 1 else 0
    sides = list(range(n_sides))
    rng.shuffle(sides)
    pairings: list[Pairing] = [ODD] * n_sides
    for label, j in enumerate(range(0, n_free, 2), start=1):
        pairings[sides[j]] = pairings[sides[j + 1]] = free(label)
    for j in sides[n_free:]:
        pairings[j] = rng.choice((EVEN, ODD) if even else (ODD,))
    return FareySymbol(tuple(ExtendedRational(a, b) for a, b in fracs), tuple(pairings))
