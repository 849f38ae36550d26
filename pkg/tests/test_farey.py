import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from modcontent.errors import (DegenerateSymbol, DomainError, SymbolSyntaxError,
                               ValidationError)
from modcontent.farey import (EVEN, INF, ODD, ExtendedRational, FareySymbol, farey_sequence, free,
                              format_symbol, iguanodon_symbol, parse_symbol, random_symbol,
                              symbol_from_json, symbol_to_json, triangulate)


def R(p, q=1):
    return ExtendedRational(p, q)


def farey_oracle(n):
    """F(n) on [0, 1] by brute force over all fractions."""
    return sorted({Fraction(p, q) for q in range(1, n + 1) for p in range(0, q + 1)})


class TestExtendedRational:
    def test_ordering_puts_infinity_last(self):
        assert R(-5) < R(1, 3) < R(1, 2) < R(7) < INF
        assert not INF < INF

    @pytest.mark.parametrize("p,q", [(2, 4), (0, 2), (3, -1), (2, 0)])
    def test_rejects_unreduced_or_bad_denominators(self, p, q):
        with pytest.raises(ValidationError):
            ExtendedRational(p, q)

    def test_str(self):
        assert str(R(1, 3)) == "1/3" and str(R(-2)) == "-2" and str(INF) == "inf"


class TestParse:
    def test_three_point_symbol(self):
        s = parse_symbol("inf 1 0 b 1/3 b 1/2 b 1 1 inf")
        assert s.fractions == (R(0), R(1, 3), R(1, 2), R(1))
        assert s.pairings == (free(1), ODD, ODD, ODD, free(1))

    def test_iguanodon_two_is_valid(self):
        assert parse_symbol("inf 1 0 b 1/2 b 1 1 inf") == iguanodon_symbol(2)

    def test_determinant_violation(self):
        with pytest.raises(ValidationError, match=r"\|1\*1 - 3\*1\| = 2"):
            parse_symbol("inf 1 0 b 1/3 b 1 1 inf")

    @pytest.mark.parametrize("text,reason", [
        ("inf o 0 o 2/4 o 1 o inf", "not reduced"),
        ("inf o 1 o 2 o inf", "must contain 0"),
        ("inf 1 0 o 1 o inf", "exactly twice"),
        ("inf 1 0 1 1 1 inf", "exactly twice"),
        ("inf o 1/2 o 1 o inf", "integers"),
        ("inf o 0 o -1 o inf", "strictly increasing"),
        ("inf o 0 o 0 o inf", "strictly increasing"),
    ])
    def test_validation_reasons(self, text, reason):
        with pytest.raises(ValidationError, match=reason):
            parse_symbol(text)

    @pytest.mark.parametrize("text", ["", "inf o 0 o", "0 o 1 o inf o 2", "inf x 0 o inf",
                                      "inf o a o inf", "inf o 0 o 1 o 2", "inf 0 0 o inf"])
    def test_syntax_errors(self, text):
        with pytest.raises(SymbolSyntaxError):
            parse_symbol(text)

    def test_even_token_round_trip(self):
        s = parse_symbol("inf o 0 b 1 o inf")
        assert s.pairings == (EVEN, ODD, EVEN)
        assert format_symbol(s) == "inf o 0 b 1 o inf"


class TestFormatAndJson:
    def test_iguanodon_text(self):
        assert format_symbol(iguanodon_symbol(3)) == "inf 1 0 b 1/3 b 1/2 b 1 1 inf"
        assert format_symbol(iguanodon_symbol(2)) == "inf 1 0 b 1/2 b 1 1 inf"

    def test_json_form(self):
        obj = symbol_to_json(iguanodon_symbol(3))
        assert obj == {"fractions": [[0, 1], [1, 3], [1, 2], [1, 1]],
                       "pairings": ["free:1", "b", "b", "b", "free:1"]}
        assert symbol_from_json(obj) == iguanodon_symbol(3)

    def test_malformed_json(self):
        with pytest.raises(SymbolSyntaxError):
            symbol_from_json({"fractions": [[0]], "pairings": ["o", "o"]})

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2 ** 32))
    def test_round_trips_on_random_symbols(self, seed):
        s = random_symbol(random.Random(seed))
        assert parse_symbol(format_symbol(s)) == s
        assert symbol_from_json(symbol_to_json(s)) == s


class TestFareySequence:
    @pytest.mark.parametrize("n", range(1, 12))
    def test_matches_brute_force(self, n):
        assert [Fraction(x.numerator, x.denominator) for x in farey_sequence(n)] == farey_oracle(n)


class TestIguanodon:
    def test_small_cases(self):
        assert iguanodon_symbol(3).fractions == (R(0), R(1, 3), R(1, 2), R(1))
        assert iguanodon_symbol(2).fractions == (R(0), R(1, 2), R(1))
        assert iguanodon_symbol(5).fractions == (R(0), R(1, 5), R(1, 4), R(1, 3), R(2, 5),
                                                 R(1, 2), R(1))

    @pytest.mark.parametrize("n", range(2, 21))
    def test_structure_and_determinants(self, n):
        s = iguanodon_symbol(n)
        expected = [f for f in farey_oracle(n) if f <= Fraction(1, 2)] + [Fraction(1)]
        assert [Fraction(x.numerator, x.denominator) for x in s.fractions] == expected
        assert s.pairings[0] == s.pairings[-1] == free(1)
        assert all(p == ODD for p in s.pairings[1:-1])
        for x, y in zip(s.fractions, s.fractions[1:]):
            assert abs(x.numerator * y.denominator - x.denominator * y.numerator) == 1

    @pytest.mark.parametrize("n", [-1, 0, 1])
    def test_domain(self, n):
        with pytest.raises(DomainError):
            iguanodon_symbol(n)


class TestTriangulate:
    def test_iguanodon_three(self):
        tri = triangulate(iguanodon_symbol(3))
        assert set(tri.triangles) == {(R(0), R(1, 3), R(1, 2)), (R(0), R(1, 2), R(1)),
                                      (R(0), R(1), INF)}

    def test_iguanodon_two(self):
        assert len(triangulate(iguanodon_symbol(2)).triangles) == 2

    def test_degenerate(self):
        with pytest.raises(DegenerateSymbol):
            triangulate(FareySymbol((R(0),), (EVEN, EVEN)))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2 ** 32))
    def test_triangle_count_and_incidence(self, seed):
        s = random_symbol(random.Random(seed))
        tri = triangulate(s)
        assert len(tri.triangles) == len(s.vertices) - 2
        boundary = {tuple(sorted(side)) for side in s.sides()}
        for side, ts in tri.side_to_triangles.items():
            assert len(ts) == (1 if side in boundary else 2)
        assert boundary == set(tri.boundary_sides())
