"""Modular dessins (bipartite cuboid graphs) built from Farey symbols.

Edges are numbered 1..d in the public interface; internally permutations are
0-based image tuples.  A dessin is the pair (sigma0, sigma1) with
sigma0**3 == sigma1**2 == 1 acting transitively on the edges.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ValidationError
from .farey import FareySymbol, side_key, triangulate
from .permgroup import Permutation

__all__ = ["Dessin", "SurfaceInvariants", "build_dessin", "surface_invariants",
           "export_dessin", "dessin_from_json"]


@dataclass(frozen=True)
class Dessin:
    sigma0: Permutation
    sigma1: Permutation
    provenance: FareySymbol | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma0", Permutation(self.sigma0))
        object.__setattr__(self, "sigma1", Permutation(self.sigma1))
        d = self.degree
        if d < 1 or len(self.sigma1) != d:
            raise ValidationError("sigma0 and sigma1 must act on the same 1..d, d >= 1")
        if not (self.sigma0 ** 3).is_identity or not (self.sigma1 ** 2).is_identity:
            raise ValidationError("need sigma0^3 = sigma1^2 = identity")
        if not _transitive(self.sigma0, self.sigma1):
            raise ValidationError("<sigma0, sigma1> is not transitive")

    @property
    def degree(self) -> int:
        return len(self.sigma0)


def _transitive(*perms) -> bool:
    d = len(perms[0])
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == d


@dataclass(frozen=True)
class SurfaceInvariants:
    genus: int
    cusps: int
    e2: int
    e3: int
    index: int


def build_dessin(s: FareySymbol) -> Dessin:
    """Dessin of the subgroup encoded by ``s``.

    Edge numbering: the three center-to-side edges of each triangle, in
    contraction order and counterclockwise side order (u,v),(v,w),(w,u) for
    u < v < w; then one extra leaf edge per odd side, in symbol order.
    """
    tri = triangulate(s)
    incidence: dict = {}  # (triangle index, side) -> edge
    sigma0 = []
    for t, (u, v, w) in enumerate(tri.triangles):
        base = 3 * t
        for k, side in enumerate(((u, v), (v, w), (u, w))):
            incidence[(t, side)] = base + k
        sigma0 += [base + 1, base + 2, base]

    d = 3 * len(tri.triangles) + s.count("odd")
    sigma0 += list(range(len(sigma0), d))
    sigma1 = list(range(d))

    def swap(a, b):
        sigma1[a], sigma1[b] = b, a

    for side, ts in tri.side_to_triangles.items():
        if len(ts) == 2:
            swap(incidence[(ts[0], side)], incidence[(ts[1], side)])

    def edge_at(side):
        key = side_key(*side)
        (t,) = tri.side_to_triangles[key]
        return incidence[(t, key)]

    leaf = 3 * len(tri.triangles)
    partner: dict = {}
    for side, p in zip(s.sides(), s.pairings):
        e = edge_at(side)
        if p.kind == "odd":
            swap(e, leaf)
            leaf += 1
        elif p.kind == "free":
            if p.label in partner:
                swap(partner.pop(p.label), e)
            else:
                partner[p.label] = e
    return Dessin(Permutation(sigma0), Permutation(sigma1), provenance=s)


def surface_invariants(D: Dessin) -> SurfaceInvariants:
    d = D.degree
    c0 = len(D.sigma0.cycles(include_fixed=True))
    c1 = len(D.sigma1.cycles(include_fixed=True))
    cusps = len((D.sigma0 * D.sigma1).cycles(include_fixed=True))
    chi = c0 + c1 + cusps - d
    if chi % 2 or chi > 2:
        raise ValidationError(f"Euler characteristic {chi} is not that of a closed orientable surface")
    return SurfaceInvariants(genus=(2 - chi) // 2, cusps=cusps,
                             e2=D.sigma1.fixed_points(), e3=D.sigma0.fixed_points(), index=d)


def export_dessin(D: Dessin, format: str = "json") -> str:
    if format == "json":
        return json.dumps({"degree": D.degree,
                           "sigma0": D.sigma0.to_images(),
                           "sigma1": D.sigma1.to_images()})
    if format == "dot":
        return _to_dot(D)
    raise ValueError(f"unknown export format {format!r}")


def dessin_from_json(text: str) -> Dessin:
    obj = json.loads(text)
    d = obj["degree"]
    s0 = Permutation.from_images(obj["sigma0"])
    s1 = Permutation.from_images(obj["sigma1"])
    if len(s0) != d:
        raise ValidationError("degree does not match permutation length")
    return Dessin(s0, s1)


def _to_dot(D: Dessin) -> str:
    # white nodes are sigma0 cycles (including fixed points), black nodes sigma1 cycles
    white = {}
    for k, cyc in enumerate(D.sigma0.cycles(include_fixed=True)):
        for e in cyc:
            white[e] = k
    black = {}
    for k, cyc in enumerate(D.sigma1.cycles(include_fixed=True)):
        for e in cyc:
            black[e] = k
    lines = ["graph dessin {"]
    for k in range(max(white.values()) + 1):
        lines.append(f'  w{k} [shape=circle, style=solid, label=""];')
    for k in range(max(black.values()) + 1):
        lines.append(f'  b{k} [shape=circle, style=filled, fillcolor=black, label=""];')
    for e in range(D.degree):
        lines.append(f'  w{white[e]} -- b{black[e]} [label="{e + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
