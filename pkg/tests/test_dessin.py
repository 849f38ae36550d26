import json
import random
import re

import pytest
from hypothesis import given, settings, strategies as st

from _support import iguanodon_dessin
from modcontent.dessin import (Dessin, build_dessin, dessin_from_json, export_dessin,
                               surface_invariants)
from modcontent.errors import ValidationError
from modcontent.farey import iguanodon_symbol, parse_symbol, random_symbol, triangulate
from modcontent.permgroup import Permutation

TABULATED_DEGREES = {2: 8, 3: 12, 4: 16, 5: 24, 6: 28, 7: 40, 8: 48, 9: 60}


def cycle_count(images):
    """Cycles of a 0-based image list, counted independently of the package."""
    seen, count = set(), 0
    for start in range(len(images)):
        if start not in seen:
            count += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = images[x]
    return count


def check_structure(D, s):
    d = D.degree
    s0, s1 = list(D.sigma0), list(D.sigma1)
    assert all(s0[s0[s0[i]]] == i for i in range(d))
    assert all(s1[s1[i]] == i for i in range(d))
    tri = triangulate(s)
    T = len(tri.triangles)
    assert d == 3 * T + s.count("odd")
    assert sorted(D.sigma0.cycle_type()).count(3) == T
    assert D.sigma0.fixed_points() == s.count("odd")
    assert D.sigma1.fixed_points() == s.count("even")
    prod = [s1[s0[i]] for i in range(d)]
    chi = cycle_count(s0) + cycle_count(s1) + cycle_count(prod) - d
    assert chi % 2 == 0 and chi <= 2
    inv = surface_invariants(D)
    assert inv.genus == (2 - chi) // 2 >= 0
    assert inv.cusps == cycle_count(prod)


class TestBuild:
    def test_iguanodon_three(self):
        D = iguanodon_dessin(3)
        assert D.degree == 12
        assert sorted(D.sigma0.cycle_type()) == [1, 1, 1, 3, 3, 3]
        assert sorted(D.sigma1.cycle_type()) == [2] * 6

    @pytest.mark.parametrize("n,d", sorted(TABULATED_DEGREES.items()))
    def test_tabulated_degrees(self, n, d):
        assert iguanodon_dessin(n).degree == d

    def test_iguanodon_two_fixed_points(self):
        D = iguanodon_dessin(2)
        assert D.sigma1.fixed_points() == 0 and D.sigma0.fixed_points() == 2

    @pytest.mark.parametrize("n", range(2, 13))
    def test_iguanodon_structure(self, n):
        check_structure(iguanodon_dessin(n), iguanodon_symbol(n))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2 ** 32))
    def test_random_symbol_structure(self, seed):
        s = random_symbol(random.Random(seed))
        check_structure(build_dessin(s), s)

    def test_even_side_is_a_sigma1_fixed_point(self):
        D = build_dessin(parse_symbol("inf o 0 o 1 o inf"))
        assert D.degree == 3
        assert D.sigma1.fixed_points() == 3

    def test_free_pair_within_one_triangle(self):
        D = build_dessin(parse_symbol("inf 1 0 1 1 o inf"))
        assert D.degree == 3
        assert D.sigma1.fixed_points() == 1


class TestValidation:
    def test_rejects_wrong_orders(self):
        with pytest.raises(ValidationError):
            Dessin(Permutation.from_cycles("(1 2)", 2), Permutation.identity(2))
        with pytest.raises(ValidationError):
            Dessin(Permutation.identity(3), Permutation.from_cycles("(1 2 3)", 3))

    def test_rejects_intransitive(self):
        with pytest.raises(ValidationError):
            Dessin(Permutation.from_cycles("(1 2 3)", 4), Permutation.identity(4))


class TestSurfaceInvariants:
    def test_hand_count(self):
        # sigma0 sigma1 = (1)(2 3): cycles 1 + 2 + 2 - 3 = 2, so genus 0 with 2 cusps
        D = Dessin(Permutation.from_cycles("(1 2 3)", 3), Permutation.from_cycles("(1 2)", 3))
        inv = surface_invariants(D)
        assert (inv.genus, inv.cusps, inv.e2, inv.e3, inv.index) == (0, 2, 1, 0, 3)

    def test_one_edge(self):
        inv = surface_invariants(Dessin(Permutation.identity(1), Permutation.identity(1)))
        assert (inv.genus, inv.cusps, inv.e2, inv.e3) == (0, 1, 1, 1)

    def test_iguanodon_three(self):
        inv = surface_invariants(iguanodon_dessin(3))
        assert (inv.e2, inv.e3) == (0, 3)

    def test_positive_genus(self):
        # sigma0 = (1 2 3)(4 5 6), sigma1 = (1 4)(2 5)(3 6): a torus
        D = Dessin(Permutation.from_cycles("(1 2 3)(4 5 6)", 6),
                   Permutation.from_cycles("(1 4)(2 5)(3 6)", 6))
        assert surface_invariants(D).genus == 1


class TestExport:
    def test_one_edge_json(self):
        D = Dessin(Permutation.identity(1), Permutation.identity(1))
        assert json.loads(export_dessin(D, "json")) == {"degree": 1, "sigma0": [1], "sigma1": [1]}

    def test_iguanodon_json_round_trip(self):
        D = iguanodon_dessin(2)
        text = export_dessin(D, "json")
        assert json.loads(text)["degree"] == 8
        assert dessin_from_json(text) == D

    @pytest.mark.parametrize("n", [2, 3, 4, 7])
    def test_dot_edge_lines(self, n):
        D = iguanodon_dessin(n)
        dot = export_dessin(D, "dot")
        edges = re.findall(r'^\s*w\d+ -- b\d+ \[label="(\d+)"\];$', dot, re.M)
        assert sorted(map(int, edges)) == list(range(1, D.degree + 1))
        assert dot.startswith("graph dessin {") and dot.rstrip().endswith("}")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export_dessin(iguanodon_dessin(2), "svg")

    def test_json_degree_mismatch(self):
        with pytest.raises(ValidationError):
            dessin_from_json('{"degree": 2, "sigma0": [1], "sigma1": [1]}')
