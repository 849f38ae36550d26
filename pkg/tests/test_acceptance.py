"""Acceptance suite: one test per criterion, each tagged ``criterion(k, title)``.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""
import itertools
import math
import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest
import sympy

sys.path.insert(0, str(Path(__file__).parent))

from _support import SMALL_GROUPS, small_group  # noqa: E402
from modcontent.cyclotomic import euler_phi  # noqa: E402
from modcontent.dessin import build_dessin, surface_invariants  # noqa: E402
from modcontent.farey import iguanodon_symbol, random_symbol, triangulate  # noqa: E402
from modcontent.habiro import (comaximal, cyclotomic_resultant, evaluate_at_root,  # noqa: E402
                               kontsevich, zagier_radial_check)
from modcontent.permgroup import group_from_dessin  # noqa: E402
from modcontent.quiver import (DimensionVector5, dimvec_from_character, euler_form,  # noqa: E402
                               modular_content, one_quiver_modular, part_dimension_vectors)
from modcontent.reptheory import (character_table, decompose_permutation,  # noqa: E402
                                  tqft_count_brute, tqft_count_characters)

# 5x5 Euler matrix written out independently of the package
EULER = np.array([[1, 0, -1, -1, -1],
                  [0, 1, -1, -1, -1],
                  [0, 0, 1, 0, 0],
                  [0, 0, 0, 1, 0],
                  [0, 0, 0, 0, 1]], dtype=object)


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def fresh(n):
    """Iguanodon dessin and group built from scratch (no cache), for timed criteria."""
    D = build_dessin(iguanodon_symbol(n))
    return D, group_from_dessin(D)


@criterion(1, "dessin degrees for Iguanodon n = 2..9")
def test_degree_table():
    start = time.perf_counter()
    degrees = [build_dessin(iguanodon_symbol(n)).degree for n in range(2, 10)]
    elapsed = time.perf_counter() - start
    assert degrees == [8, 12, 16, 24, 28, 40, 48, 60]
    assert elapsed < 1.0, f"{elapsed:.2f}s"


@criterion(2, "monodromy group orders and classification for n = 2..6")
def test_monodromy_orders():
    expected = {2: 168, 3: 95040, 4: math.factorial(16) // 2, 5: 244823040,
                6: math.factorial(28) // 2}
    tags = {2: "Other", 3: "Other", 4: "Alt", 5: "Other", 6: "Alt"}
    start = time.perf_counter()
    for n in range(2, 7):
        _, G = fresh(n)
        assert G.order() == expected[n]
        assert G.is_alternating_or_symmetric() == tags[n]
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"{elapsed:.2f}s"


@criterion(3, "2-transitivity and multiplicities (1,1) for n = 2..6")
def test_two_transitive():
    for n in range(2, 7):
        D, G = fresh(n)
        assert G.is_2transitive()
        assert decompose_permutation(G, D).multiplicities == (1, 1)


@criterion(4, "permutation and trivial dimension vectors for n = 2,3,4")
def test_dimension_vectors():
    for n in (2, 3, 4):
        D, G = fresh(n)
        whole = dimvec_from_character(D.degree, D.sigma1.fixed_points(), D.sigma0.fixed_points(),
                                      (D.sigma0 * D.sigma0).fixed_points())
        assert whole == DimensionVector5(2 * n, 2 * n, 2 * n, n, n)
        trivial = part_dimension_vectors(decompose_permutation(G, D))[0]
        assert trivial == DimensionVector5(1, 0, 1, 0, 0)


@criterion(5, "modular content arrows for n = 2,3,4, loops(S) = 2n^2")
def test_modular_content():
    for n in (2, 3, 4):
        D, G = fresh(n)
        dec = decompose_permutation(G, D)
        q = modular_content(dec)
        dims = [np.array(v.to_list(), dtype=object) for v in part_dimension_vectors(dec)]
        oracle = [[int(i == j) - int(dims[i] @ EULER @ dims[j]) for j in range(2)] for i in range(2)]
        assert [list(r) for r in q.arrows] == oracle == [[0, 1], [1, 2 * n * n]]


@criterion(6, "one-quiver is the hexagon a-b-c-d-e-f")
def test_one_quiver():
    q = one_quiver_modular()
    assert q.vertices == ("a", "b", "c", "d", "e", "f")
    for i, j in itertools.product(range(6), repeat=2):
        adjacent = (i - j) % 6 in (1, 5)
        assert q.arrows[i][j] == int(adjacent), (q.vertices[i], q.vertices[j])


@criterion(7, "Euler form regression for n = 1..10")
def test_euler_regression():
    t = sympy.Symbol("n")
    S_sym = sympy.Matrix([2 * t - 1, 2 * t, 2 * t - 1, t, t])
    assert sympy.expand((S_sym.T * sympy.Matrix(EULER.tolist()) * S_sym)[0]) == 1 - 2 * t ** 2
    T = DimensionVector5(1, 0, 1, 0, 0)
    assert euler_form(T, T) == 1
    for n in range(1, 11):
        S = DimensionVector5(2 * n - 1, 2 * n, 2 * n - 1, n, n)
        assert euler_form(T, S) == euler_form(S, T) == -1
        assert euler_form(S, S) == 1 - 2 * n * n


@criterion(8, "cyclotomic comaximality for 1 <= n < m <= 30")
def test_comaximality():
    start = time.perf_counter()
    for m in range(2, 31):
        for n in range(1, m):
            res = abs(cyclotomic_resultant(m, n))
            assert comaximal(m, n) == (res == 1)
            if res != 1:
                factors = sympy.factorint(res)
                assert len(factors) == 1
                (p, k), = factors.items()
                assert k == euler_phi(n), (m, n, res)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"{elapsed:.2f}s"


@criterion(9, "Kontsevich values at roots of unity")
def test_kontsevich():
    assert evaluate_at_root(kontsevich(1), 1) == 1
    assert evaluate_at_root(kontsevich(2), 2) == 3
    assert evaluate_at_root(kontsevich(3), 3).coeffs == (5, -1)
    for m in range(1, 9):
        values = {evaluate_at_root(kontsevich(level), m) for level in range(m, 2 * m + 3)}
        assert len(values) == 1


@criterion(10, "radial limit agrees with the exact value for m = 1, 2")
def test_zagier():
    start = time.perf_counter()
    for m in (1, 2):
        report = zagier_radial_check(m, radii=[1 - 10.0 ** -k for k in range(1, 5)])
        assert report.difference < 0.05, (m, report.difference)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"{elapsed:.2f}s"


@criterion(11, "TQFT brute force equals the character formula")
def test_tqft():
    start = time.perf_counter()
    for name in ("C2", "C3", "S3", "D4"):
        G = small_group(name)
        for genus in (1, 2):
            assert tqft_count_brute(genus, G) == tqft_count_characters(genus, G)
    assert tqft_count_brute(1, small_group("C2")) == 4
    assert tqft_count_brute(1, small_group("S3")) == 18
    assert tqft_count_brute(2, small_group("S3")) == 486
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"{elapsed:.2f}s"


@criterion(12, "character tables verified exactly; shortcut agrees with full table")
def test_character_tables():
    groups = [small_group(name) for name in SMALL_GROUPS] + [fresh(2)[1], fresh(3)[1]]
    for G in groups:
        table = character_table(G)
        if len(table.classes) > 20:
            continue
        order = G.order()
        sizes = table.classes.sizes
        assert sum(f * f for f in table.degrees) == order
        chars = table.irreducibles
        for a, b in itertools.combinations_with_replacement(range(len(chars)), 2):
            total = sum(s * x * y.conjugate()
                        for s, x, y in zip(sizes, chars[a].values, chars[b].values))
            assert total == (order if a == b else 0)
        for k, l in itertools.combinations_with_replacement(range(len(sizes)), 2):
            total = sum(chi.values[k] * chi.values[l].conjugate() for chi in chars)
            assert total == (order // sizes[k] if k == l else 0)
    for n in (2, 3):
        D, G = fresh(n)
        fast = decompose_permutation(G, D)
        full = decompose_permutation(G, D, shortcut=False)
        assert [(p.multiplicity, p.degree, p.at_sigma0, p.at_sigma0_sq, p.at_sigma1)
                for p in fast.parts] == \
               [(p.multiplicity, p.degree, p.at_sigma0, p.at_sigma0_sq, p.at_sigma1)
                for p in full.parts]


def _check_structure(s):
    D = build_dessin(s)
    d = D.degree
    s0, s1 = list(D.sigma0), list(D.sigma1)
    assert all(s0[s0[s0[i]]] == i for i in range(d))
    assert all(s1[s1[i]] == i for i in range(d))
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in (s0[x], s1[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    assert len(seen) == d
    assert surface_invariants(D).genus >= 0
    assert d == 3 * len(triangulate(s).triangles) + s.count("odd")


@criterion(13, "structural properties on 200 random symbols and Iguanodon n <= 12")
def test_structure():
    rng = random.Random(20240613)
    for _ in range(200):
        _check_structure(random_symbol(rng))
    for n in range(2, 13):
        _check_structure(iguanodon_symbol(n))


def _run_standalone() -> int:
    tests = sorted((obj for obj in globals().values() if hasattr(obj, "pytestmark")),
                   key=lambda f: f.pytestmark[0].args[0])
    failures = 0
    for func in tests:
        number, title = func.pytestmark[0].args
        try:
            func()
            status = "PASS"
        except Exception as exc:  # report and keep going
            status = f"FAIL ({type(exc).__name__}: {exc})"
            failures += 1
        print(f"criterion {number:2d}: {status}  {title}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(_run_standalone())
