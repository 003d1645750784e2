import pytest
from hypothesis import given

from trs_iso import App, Var, convertible_bounded, identity_iso, match_term, one_step_violations, parse_term, \
    rewrite_step_all, rewrite_steps, sample_terms, substitute, terminates_bounded
from trs_iso import ProbeStatus, iter_preorder
from trs_iso._utility._classes import PermissiveTrsError

from strategies import small_trss

x, y = Var("x"), Var("y")
a, b = App("a"), App("b")


def f(*args):
    return App("f", args)


def g(*args):
    return App("g", args)


class TestMatching:
    def test_match(self):
        assert match_term(f(x, g(y)), f(a, g(b))) == {"x": a, "y": b}

    def test_non_linear(self):
        assert match_term(f(x, x), f(a, a)) == {"x": a}
        assert match_term(f(x, x), f(a, b)) is None

    def test_clash(self):
        assert match_term(f(x, g(y)), f(a, b)) is None
        assert match_term(g(x), x) is None

    @given(small_trss)
    def test_lhs_matches_its_instances(self, trs):
        for rule in trs.rules:
            sigma = {name: a for name in trs.vars}
            instance = substitute(rule.lhs, sigma)
            found = match_term(rule.lhs, instance)
            assert found is not None and substitute(rule.lhs, found) == instance


class TestOneStep:
    def test_steps_report_positions(self, trs):
        system = trs("(VAR x) (RULES f(x) -> x)")
        steps = rewrite_steps(system, f(f(a)))
        assert [(step.rule_index, step.position) for step in steps] == [(0, ()), (0, (1,))]
        assert steps[0].substitution == {"x": f(a)}
        assert rewrite_step_all(system, f(f(a))) == {f(a)}

    def test_normal_form_has_no_successor(self, fixture_trs):
        assert rewrite_step_all(fixture_trs("trs-2"), App("c")) == set()

    def test_permissive_refused(self, fixture_trs):
        system = fixture_trs("permissive", permissive=True)
        with pytest.raises(PermissiveTrsError):
            rewrite_step_all(system, f(a))
        with pytest.raises(PermissiveTrsError):
            terminates_bounded(system, f(a), 10)


class TestProbes:
    def test_termination_proven_and_refuted(self, fixture_trs):
        left, right = fixture_trs("incompatible-iii-left"), fixture_trs("incompatible-iii-right")
        start = parse_term("f(a)", left)
        assert terminates_bounded(left, start, 100).status is ProbeStatus.PROVEN
        verdict = terminates_bounded(right, start, 100)
        assert verdict.refuted
        assert verdict.path[0] == verdict.path[-1] and len(verdict.path) >= 2

    def test_termination_runs_out_of_fuel(self, trs):
        system = trs("(VAR x) (SIG (a 0)) (RULES f(x) -> f(s(x)))")
        verdict = terminates_bounded(system, parse_term("f(a)", system), 50)
        assert verdict.unknown and verdict.explored == 50

    def test_self_loop(self, fixture_trs):
        system = fixture_trs("trs-20")
        verdict = terminates_bounded(system, parse_term("f(c,c)", system), 10)
        assert verdict.refuted and len(verdict.path) == 2

    def test_negative_fuel(self, fixture_trs):
        with pytest.raises(ValueError):
            terminates_bounded(fixture_trs("trs-2"), App("c"), -1)

    def test_conversion_forward(self, fixture_trs):
        system = fixture_trs("trs-16")
        s = parse_term("add(suc(zero),zero)", system)
        t = parse_term("suc(zero)", system)
        verdict = convertible_bounded(system, s, t, 10)
        assert verdict.proven
        assert verdict.path[0] == s and verdict.path[-1] == t and len(verdict.path) == 3

    def test_conversion_through_backward_steps(self, fixture_trs):
        system = fixture_trs("trs-16")
        s = parse_term("suc(add(zero,zero))", system)
        t = parse_term("add(suc(zero),zero)", system)
        assert convertible_bounded(system, s, t, 4).proven

    def test_conversion_never_refuted(self, fixture_trs):
        system = fixture_trs("trs-16")
        verdict = convertible_bounded(system, parse_term("zero", system), parse_term("suc(zero)", system), 6)
        assert verdict.unknown

    def test_identical_terms(self, fixture_trs):
        system = fixture_trs("trs-2")
        assert convertible_bounded(system, App("c"), App("c"), 0).path == (App("c"),)


class TestSemantics:
    def test_local_renaming_changes_successors(self, fixture_trs):
        left, right = fixture_trs("incompatible-i-left"), fixture_trs("incompatible-i-right")
        term = parse_term("f(x)", left)
        violations = one_step_violations(left, right, identity_iso(left), [term])
        assert len(violations) == 1
        assert violations[0].missing == (parse_term("h(x,x,x)", left),)
        assert violations[0].extra == ()

    def test_identity_has_no_violation(self, fixture_trs):
        system = fixture_trs("ski")
        assert one_step_violations(system, system, identity_iso(system), sample_terms(system, seed=1)) == []

    def test_samples_are_seeded(self, fixture_trs):
        system = fixture_trs("trs-15")
        assert sample_terms(system, seed=7) == sample_terms(system, seed=7)
        terms = sample_terms(system, seed=7, count=20, depth=3)
        assert 0 < len(terms) <= 20
        symbols = set(system.sig) | set(system.vars)
        for term in terms:
            assert all((node.head if isinstance(node, App) else node.name) in symbols
                       for node in iter_preorder(term))
