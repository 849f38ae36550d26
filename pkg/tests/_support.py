"""Shared fixtures: cached Iguanodon objects and small reference groups."""
from __future__ import annotations

from functools import lru_cache

from modcontent.dessin import build_dessin
from modcontent.farey import iguanodon_symbol
from modcontent.permgroup import Permutation, PermutationGroup, group_from_dessin
from modcontent.reptheory import character_table


@lru_cache(maxsize=None)
def iguanodon_dessin(n: int):
    return build_dessin(iguanodon_symbol(n))


@lru_cache(maxsize=None)
def iguanodon_group(n: int):
    return group_from_dessin(iguanodon_dessin(n))


@lru_cache(maxsize=None)
def table_of(name: str):
    group = iguanodon_group(int(name[3:])) if name.startswith("igu") else small_group(name)
    return character_table(group)


def perm(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)


SMALL_GROUPS = {
    # name: (generators in cycle notation, degree)
    "C1": ([], 1),
    "C2": (["(1 2)"], 2),
    "C3": (["(1 2 3)"], 3),
    "C4": (["(1 2 3 4)"], 4),
    "V4": (["(1 2)(3 4)", "(1 3)(2 4)"], 4),
    "C5": (["(1 2 3 4 5)"], 5),
    "C6": (["(1 2 3 4 5 6)"], 6),
    "S3": (["(1 2 3)", "(1 2)"], 3),
    "C7": (["(1 2 3 4 5 6 7)"], 7),
    "C8": (["(1 2 3 4 5 6 7 8)"], 8),
    "C4xC2": (["(1 2 3 4)", "(5 6)"], 6),
    "C2^3": (["(1 2)", "(3 4)", "(5 6)"], 6),
    "D4": (["(1 2 3 4)", "(1 3)"], 4),
    # regular representation of the quaternion group
    "Q8": (["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"], 8),
    "A4": (["(1 2 3)", "(1 2)(3 4)"], 4),
    "S4": (["(1 2 3 4)", "(1 2)"], 4),
    "A5": (["(1 2 3 4 5)", "(1 2 3)"], 5),
}

SMALL_ORDERS = {"C1": 1, "C2": 2, "C3": 3, "C4": 4, "V4": 4, "C5": 5, "C6": 6, "S3": 6, "C7": 7,
                "C8": 8, "C4xC2": 8, "C2^3": 8, "D4": 8, "Q8": 8, "A4": 12, "S4": 24, "A5": 60}


@lru_cache(maxsize=None)
def small_group(name: str) -> PermutationGroup:
    gens, degree = SMALL_GROUPS[name]
    if not gens:
        return PermutationGroup([Permutation.identity(degree)], degree=degree)
    return PermutationGroup([perm(g, degree) for g in gens], degree=degree)
