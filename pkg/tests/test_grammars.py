from itertools import product

import pytest

from fgzeta.errors import ParseError, ValidationError
from fgzeta.grammars import (ProperSystem, is_lukasiewicz_word, iterates,
                             parse_system, solve_truncated)
from fgzeta.series import generating_series


BRACKET_SYSTEM = "xi1 = a xi1 xi1 + b"


class TestPredicate:
    def test_single_b(self):
        assert is_lukasiewicz_word("b")

    def test_membership_examples(self):
        assert is_lukasiewicz_word("abb")
        assert not is_lukasiewicz_word("ba")

    def test_empty_word(self):
        assert not is_lukasiewicz_word("")

    def test_prefix_condition(self):
        assert not is_lukasiewicz_word("abba")  # prefix abb already closes
        assert is_lukasiewicz_word("aabbb")


class TestParse:
    def test_round_trip_structure(self):
        system = parse_system(BRACKET_SYSTEM)
        assert system.var_count == 1
        assert system.letters == ["a", "b"]
        assert system.equations[0] == [
            (1, (("let", "a"), ("var", 1), ("var", 1))),
            (1, (("let", "b"),)),
        ]

    def test_integer_prefix(self):
        system = parse_system("xi1 = 2 a xi1 + -1 b")
        assert system.equations[0][0][0] == 2
        assert system.equations[0][1][0] == -1

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            parse_system("")
        with pytest.raises(ParseError):
            parse_system("y = a")
        with pytest.raises(ParseError):
            parse_system("xi1 = a\nxi1 = b")
        with pytest.raises(ParseError):
            parse_system("xi2 = a b")  # gap: no xi1

    def test_properness_violations_name_the_monomial(self):
        with pytest.raises(ValidationError, match="bare variable"):
            parse_system("xi1 = a xi1 + xi1")
        with pytest.raises(ValidationError, match="unknown variable"):
            parse_system("xi1 = a xi2")


class TestSolve:
    def test_bracket_language_to_length_five(self):
        system = parse_system(BRACKET_SYSTEM)
        sol = solve_truncated(system, 5)[0]
        assert sol.terms == {
            ("b",): 1,
            ("a", "b", "b"): 1,
            ("a", "a", "b", "b", "b"): 1,
            ("a", "b", "a", "b", "b"): 1,
        }

    def test_constant_monomial_rhs(self):
        system = parse_system("xi1 = a b")
        for max_len in (2, 4):
            sol = solve_truncated(system, max_len)[0]
            assert sol.terms == {("a", "b"): 1}

    def test_decoupled_copies_agree(self):
        system = parse_system("xi1 = a xi1 xi1 + b\nxi2 = a xi2 xi2 + b")
        s1, s2 = solve_truncated(system, 6)
        assert s1.terms == s2.terms

    def test_coupled_system(self):
        # substituting xi2 into xi1 recovers the bracket language with
        # doubled inner letters: xi1 = a c xi1 xi1 + b
        system = parse_system("xi1 = a xi2 + b\nxi2 = c xi1 xi1")
        s1, s2 = solve_truncated(system, 7)
        direct = solve_truncated(parse_system("xi1 = a c xi1 xi1 + b"), 7)[0]
        assert s1.terms == direct.terms
        for w, c in s2.terms.items():
            assert w[0] == "c" and c == 1

    def test_solution_is_a_fixed_point(self):
        # substituting the solution into the right side reproduces it
        system = parse_system(BRACKET_SYSTEM)
        max_len = 6
        sol = solve_truncated(system, max_len)[0].terms
        by_concat = {}
        for w1, c1 in sol.items():
            for w2, c2 in sol.items():
                w = ("a",) + w1 + w2
                if len(w) <= max_len:
                    by_concat[w] = by_concat.get(w, 0) + c1 * c2
        by_concat[("b",)] = by_concat.get(("b",), 0) + 1
        assert by_concat == sol

    def test_characteristic_series_matches_predicate(self):
        system = parse_system(BRACKET_SYSTEM)
        for max_len in range(1, 10):
            sol = solve_truncated(system, max_len)[0]
            expected = set()
            for n in range(1, max_len + 1):
                for w in product("ab", repeat=n):
                    if is_lukasiewicz_word(w):
                        expected.add(w)
            assert set(sol.terms) == expected
            assert all(c == 1 for c in sol.terms.values())

    def test_generating_series_bridge(self):
        # lengths of the solution words satisfy g = t g^2 + t
        max_len = 9
        sol = solve_truncated(parse_system(BRACKET_SYSTEM), max_len)[0]
        counts = [0] * max_len
        for w, c in sol.terms.items():
            counts[len(w) - 1] += c
        g = generating_series(counts)
        gg = g * g
        for k in range(max_len + 1):
            rhs = (gg[k - 1] if k >= 1 else 0) + (1 if k == 1 else 0)
            assert g[k] == rhs

    def test_stabilization_ladder(self):
        system = parse_system(BRACKET_SYSTEM)
        max_len = 7
        steps = iterates(system, max_len)
        approximations = [next(steps) for _ in range(max_len + 2)]
        for k in range(max_len + 1):
            now = approximations[k][0]
            nxt = approximations[k + 1][0]
            short_now = {w: c for w, c in now.items() if len(w) <= k}
            short_nxt = {w: c for w, c in nxt.items() if len(w) <= k}
            assert short_now == short_nxt

    def test_max_len_validated(self):
        with pytest.raises(ValidationError):
            solve_truncated(parse_system(BRACKET_SYSTEM), 0)

    def test_unparsed_system_is_validated_too(self):
        bad = ProperSystem(["a"], [[(1, ())]])
        with pytest.raises(ValidationError, match="constant"):
            solve_truncated(bad, 3)
