"""Finite permutation groups.

Permutations are tuples of 0-based images and act on the right:
``(p * q)[i] == q[p[i]]``, i.e. apply ``p`` first.  Cycle notation and JSON
image arrays at the package boundary are 1-based.

The stabilizer chain is built by a randomized Schreier-Sims pass followed by
a deterministic pass that sifts every Schreier generator, so the resulting
base and strong generating set are always complete.
"""
from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import NotTransitive, SizeBoundExceeded, ValidationError

__all__ = ["Permutation", "PermutationGroup", "ConjugacyClasses", "cycle_type",
           "fixed_points", "group_from_dessin", "CLASS_ENUM_BOUND"]

CLASS_ENUM_BOUND = 10 ** 7


def _mul(a, b):
    return tuple([b[i] for i in a])


def _inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


class Permutation(tuple):
    """Immutable permutation of {0..d-1}; prints in 1-based cycle notation."""

    def __new__(cls, images: Iterable[int] = ()):
        self = super().__new__(cls, images)
        if sorted(self) != list(range(len(self))):
            raise ValidationError(f"not a permutation: {tuple(self)}")
        return self

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """From a 1-based image array: ``images[i-1]`` is the image of point i."""
        return cls(x - 1 for x in images)

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``."""
        stripped = text.replace(",", " ").strip()
        if not re.fullmatch(r"(\(\s*(\d+\s*)*\)\s*)*", stripped):
            raise ValidationError(f"cannot parse cycle notation {text!r}")
        cycles = [[int(x) for x in c.split()] for c in re.findall(r"\(([^)]*)\)", stripped)]
        points = [x for c in cycles for x in c]
        if any(x < 1 for x in points):
            raise ValidationError("cycle notation is 1-based")
        if len(points) != len(set(points)):
            raise ValidationError(f"cycles in {text!r} are not disjoint")
        n = max(points, default=0)
        if degree is None:
            degree = n
        elif degree < n:
            raise ValidationError(f"point {n} exceeds degree {degree}")
        images = list(range(degree))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        return Permutation(_mul(self, other))

    def __invert__(self):
        return Permutation(_inv(self))

    inverse = __invert__

    def __pow__(self, k: int):
        if k < 0:
            return (~self) ** (-k)
        result = tuple(range(len(self)))
        base = tuple(self)
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation(result)

    # tuple's ``*`` means repetition; keep ``__rmul__`` from doing that silently
    __rmul__ = None

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """0-based cycles, each starting at its smallest point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> list[int]:
        return sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)

    def fixed_points(self) -> int:
        return sum(1 for i, x in enumerate(self) if i == x)

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if len(self) else 1

    def to_images(self) -> list[int]:
        return [x + 1 for x in self]

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, degree={len(self)})"

    __str__ = cycle_string


def cycle_type(p: Sequence[int]) -> list[int]:
    return Permutation(p).cycle_type()


def fixed_points(p: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(p) if i == x)


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)  # point -> perm taking `point` there
    inverses: dict = field(default_factory=dict)

    def rebuild(self, identity):
        u = {self.point: identity}
        frontier = [self.point]
        for p in frontier:
            up = u[p]
            for s in self.gens:
                q = s[p]
                if q not in u:
                    u[q] = _mul(up, s)
                    frontier.append(q)
        self.transversal = u
        self.inverses = {q: _inv(g) for q, g in u.items()}


@dataclass(frozen=True)
class ConjugacyClasses:
    representatives: tuple[Permutation, ...]
    sizes: tuple[int, ...]
    centralizer_orders: tuple[int, ...]

    def __len__(self):
        return len(self.sizes)


class PermutationGroup:
    """Group generated by permutations of a common degree."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None,
                 seed: int = 0):
        gens = [Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = max(len(g) for g in gens)
        if any(len(g) > degree for g in gens):
            raise ValidationError(f"generator moves points beyond degree {degree}")
        # shorter generators fix the extra points
        gens = [g if len(g) == degree else Permutation(tuple(g) + tuple(range(len(g), degree)))
                for g in gens]
        self.degree = degree
        self.generators = tuple(gens)
        self.seed = seed
        self._identity = tuple(range(degree))
        self._levels: list[_Level] | None = None
        self._classes = None

    def __repr__(self):
        gens = ", ".join(g.cycle_string() for g in self.generators)
        return f"PermutationGroup([{gens}], degree={self.degree})"

    # -- stabilizer chain ------------------------------------------------

    @property
    def levels(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._schreier_sims()
        return self._levels

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def _sift(self, g, levels, start=0):
        for i in range(start, len(levels)):
            lv = levels[i]
            beta = g[lv.point]
            inv = lv.inverses.get(beta)
            if inv is None:
                return g, i
            g = _mul(g, inv)
        return g, len(levels)

    def _add_strong(self, levels, h, depth):
        """Add ``h`` (fixing the first ``depth`` base points) as a strong generator."""
        if depth == len(levels):
            moved = next(i for i, x in enumerate(h) if i != x)
            levels.append(_Level(moved))
        for lv in levels[:depth + 1]:
            lv.gens.append(h)
            lv.rebuild(self._identity)

    def _schreier_sims(self) -> list[_Level]:
        ident = self._identity
        gens = [tuple(g) for g in self.generators if not g.is_identity]
        levels: list[_Level] = []
        if not gens:
            return levels
        for g in gens:
            h, depth = self._sift(g, levels)
            if h != ident:
                self._add_strong(levels, h, depth)

        rng = random.Random(self.seed)
        state = gens * max(1, -(-10 // len(gens)))
        acc = ident

        def product_replacement():
            nonlocal acc
            i, j = rng.sample(range(len(state)), 2) if len(state) > 1 else (0, 0)
            if rng.random() < 0.5:
                state[i] = _mul(state[i], state[j] if i != j else state[i])
            else:
                state[i] = _mul(state[j] if i != j else state[i], state[i])
            acc = _mul(acc, state[i])
            return acc

        for _ in range(50):
            product_replacement()
        streak = 0
        while streak < 24:
            h, depth = self._sift(product_replacement(), levels)
            if h == ident:
                streak += 1
            else:
                streak = 0
                self._add_strong(levels, h, depth)

        # deterministic completion: sift every Schreier generator, deepest level first
        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            restart = None
            for p, up in list(lv.transversal.items()):
                for s in list(lv.gens):
                    q = s[p]
                    sg = _mul(_mul(up, s), lv.inverses[q])
                    if sg == ident:
                        continue
                    h, depth = self._sift(sg, levels, i + 1)
                    if h != ident:
                        self._add_strong(levels, h, depth)
                        restart = depth
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = min(restart, len(levels) - 1)
            else:
                i -= 1
        return levels

    # -- basic queries ---------------------------------------------------

    def order(self) -> int:
        return math.prod(len(lv.transversal) for lv in self.levels)

    def contains(self, p: Sequence[int]) -> bool:
        if len(p) != self.degree:
            return False
        h, _ = self._sift(tuple(p), self.levels)
        return h == self._identity

    __contains__ = contains

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted lists of 1-based points, ordered by smallest point."""
        return [[x + 1 for x in orb] for orb in _orbits(self.generators, self.degree)]

    def is_transitive(self) -> bool:
        return len(_orbits(self.generators, self.degree)) == 1

    def is_2transitive(self) -> bool:
        """Point stabilizer of the first base point has exactly two orbits."""
        if not self.is_transitive():
            raise NotTransitive("2-transitivity needs a transitive group")
        levels = self.levels
        if not levels:
            return False  # trivial group: transitive only for degree 1
        stab = levels[1].gens if len(levels) > 1 else []
        return len(_orbits(stab, self.degree)) == 2

    def is_alternating_or_symmetric(self) -> str:
        full = math.factorial(self.degree)
        n = self.order()
        if n == full:
            return "Sym"
        if 2 * n == full:
            return "Alt"
        return "Other"

    def random_element(self, rng: random.Random) -> Permutation:
        g = self._identity
        for lv in reversed(self.levels):
            g = _mul(g, lv.transversal[rng.choice(list(lv.transversal))])
        return Permutation(g)

    def elements(self) -> Iterator[Permutation]:
        """Every group element exactly once (deterministic order)."""
        reps = [list(lv.transversal.values()) for lv in reversed(self.levels)]

        def rec(k, g):
            if k == len(reps):
                yield Permutation(g)
                return
            for u in reps[k]:
                yield from rec(k + 1, _mul(g, u))

        yield from rec(0, self._identity)

    def exponent(self) -> int:
        cc = self.conjugacy_classes()
        return math.lcm(*(r.order() for r in cc.representatives))

    # -- conjugacy classes -----------------------------------------------

    def conjugacy_classes(self, bound: int = CLASS_ENUM_BOUND) -> ConjugacyClasses:
        return self.class_data(bound).classes

    def class_data(self, bound: int = CLASS_ENUM_BOUND) -> "ClassData":
        if self._classes is None:
            n = self.order()
            if n > bound:
                raise SizeBoundExceeded(
                    f"group order {n} exceeds the class enumeration bound {bound}")
            self._classes = _enumerate_classes(self)
        return self._classes

    def class_of(self, p: Sequence[int]) -> int:
        """Index of the conjugacy class containing ``p`` (must be a member)."""
        return self.class_data().lookup(np.asarray([p]))[0]


def _orbits(gens, degree) -> list[list[int]]:
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        for x in orb:
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
        out.append(sorted(orb))
    return out


def group_from_dessin(D, seed: int = 0) -> PermutationGroup:
    return PermutationGroup([D.sigma0, D.sigma1], degree=D.degree, seed=seed)


# -- class enumeration -----------------------------------------------------

def _keys(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    return arr.view(np.dtype((np.void, arr.dtype.itemsize * arr.shape[1]))).ravel()


class ClassData:
    """All group elements, grouped by conjugacy class, with a sorted lookup index."""

    def __init__(self, members: list[np.ndarray], dtype):
        self.members = members
        self.dtype = dtype
        self.all = np.concatenate(members)
        self.class_ids = np.repeat(np.arange(len(members)), [len(m) for m in members])
        keys = _keys(self.all)
        self._order = np.argsort(keys, kind="stable")
        self._sorted = keys[self._order]
        reps = tuple(Permutation(int(x) for x in m[0]) for m in members)
        n = len(self.all)
        sizes = tuple(len(m) for m in members)
        self.classes = ConjugacyClasses(reps, sizes, tuple(n // s for s in sizes))

    def lookup(self, perms: np.ndarray) -> np.ndarray:
        keys = _keys(np.asarray(perms, dtype=self.dtype))
        pos = np.searchsorted(self._sorted, keys)
        pos = np.minimum(pos, len(self._sorted) - 1)
        if not np.all(self._sorted[pos] == keys):
            raise ValidationError("permutation is not an element of the group")
        return self.class_ids[self._order[pos]]


def _member(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    if len(sorted_keys) == 0:
        return np.zeros(len(keys), dtype=bool)
    pos = np.minimum(np.searchsorted(sorted_keys, keys), len(sorted_keys) - 1)
    return sorted_keys[pos] == keys


def _conjugacy_orbit(x: np.ndarray, gens: list[np.ndarray]) -> np.ndarray:
    cls = x[None, :]
    cls_keys = _keys(cls)
    frontier = cls
    while len(frontier):
        parts = []
        for g in gens:
            y = np.empty_like(frontier)
            y[:, g] = g[frontier]  # g^-1 x g
            parts.append(y)
        cand = np.concatenate(parts)
        ck, idx = np.unique(_keys(cand), return_index=True)
        fresh = ~_member(cls_keys, ck)
        frontier = cand[idx[fresh]]
        cls = np.concatenate([cls, frontier])
        cls_keys = np.sort(np.concatenate([cls_keys, ck[fresh]]))
    return cls


def _enumerate_classes(G: PermutationGroup) -> ClassData:
    n = G.order()
    d = G.degree
    dtype = np.uint8 if d <= 256 else np.uint16
    gens = [np.asarray(g, dtype=np.intp) for g in G.generators if not g.is_identity]
    members = [np.arange(d, dtype=dtype)[None, :]]
    known = _keys(members[0])
    total = 1
    rng = random.Random(G.seed)
    queue = [tuple(g) for g in G.generators]
    while total < n:
        if queue:
            g = queue.pop()
        else:
            g = tuple(G.random_element(rng))
        arr = np.asarray(g, dtype=dtype)
        if _member(known, _keys(arr[None, :]))[0]:
            continue
        cls = _conjugacy_orbit(arr, gens).astype(dtype)
        members.append(cls)
        known = np.sort(np.concatenate([known, _keys(cls)]))
        total += len(cls)
        # powers of a new representative are cheap candidates for further classes
        p = Permutation(g)
        for k in range(2, p.order()):
            queue.append(tuple(p ** k))
        queue.extend(_mul(g, tuple(s)) for s in G.generators)
    if total != n:
        raise ValidationError(f"class sizes sum to {total}, group order is {n}")
    # identity first, then by element order and class size
    first, rest = members[0], members[1:]
    rest.sort(key=lambda m: (Permutation(int(x) for x in m[0]).order(), len(m),
                             _keys(m[:1])[0].tobytes()))
    return ClassData([first] + rest, dtype)
