import pytest
from hypothesis import given

from trs_iso import Kind, f_template, full_template, maximal_normal_form, parse_trs, print_trs, rule_equivalent, \
    free_stem, standardized_sets, template, template_pair, v_template
from trs_iso import is_normal_form

from strategies import small_trss


def _rules(result):
    return [str(rule) for rule in result.rules]


class TestPrintedTemplates:
    def test_v_template(self, fixture_trs):
        assert _rules(v_template(fixture_trs("template-example"))) == ["f(g(x1),x2) -> h(x1)"]

    def test_f_template(self, fixture_trs):
        assert _rules(f_template(fixture_trs("template-example"))) == ["f_1_2(f_1_1(x),y) -> f_2_1(x)"]

    def test_full_template(self, fixture_trs):
        assert _rules(full_template(fixture_trs("template-example"))) == ["f_1_2(f_1_1(x1),x2) -> f_2_1(x1)"]

    def test_f_template_counts_per_rule(self, trs):
        system = trs("(VAR x y) (RULES g(f(x,y)) -> c f(x,y) -> g(x))")
        assert _rules(f_template(system)) == ["f_1_1(f_1_2(x,y)) -> f_1_0", "f_1_2(x,y) -> f_1_1(x)"]

    def test_v_template_order(self, trs):
        system = trs("(VAR x y) (RULES f(y,x) -> y)")
        assert _rules(v_template(system)) == ["f(x1,x2) -> x1"]

    def test_fixed_point(self, trs):
        system = trs("(VAR x1 x2) (RULES f(x1,x2) -> x1)")
        assert v_template(system).rules == system.rules

    def test_templated_trs_reparses(self, fixture_trs):
        result = full_template(fixture_trs("trs-1"))
        assert parse_trs(print_trs(result.templated)) == result.templated


class TestStandardizedSets:
    def test_example_signature(self, fixture_trs):
        sets = standardized_sets(fixture_trs("standardized-sets"))
        assert sets.vstd == ("x1", "x2")
        assert sets.fstd == (("f_1_0", 0), ("f_1_1", 1), ("f_2_1", 1), ("f_1_2", 2))

    def test_template_signatures(self, fixture_trs):
        system = fixture_trs("standardized-sets")
        assert v_template(system).templated.sig == system.sig
        assert f_template(system).templated.vars == ("x", "y")
        assert full_template(system).templated.sig.names == ("f_1_0", "f_1_1", "f_2_1", "f_1_2")


class TestNameClashes:
    def test_constant_named_like_variable(self, trs):
        result = v_template(trs("(VAR y) (RULES f(y) -> x1)"))
        assert _rules(result) == ["f(xx1) -> x1"]
        assert result.templated.vars == ("xx1",)
        assert result.sets.vstd == ("xx1",)

    def test_variable_named_like_symbol(self, trs):
        result = f_template(trs("(VAR f_1_0) (RULES g(f_1_0) -> c)"))
        assert _rules(result) == ["ff_1_1(f_1_0) -> ff_1_0"]
        assert result.templated.sig.names == ("ff_1_0", "ff_1_1")

    def test_full_template_keeps_default_names(self, trs):
        result = full_template(trs("(VAR f_1_0) (RULES x1(f_1_0) -> c)"))
        assert _rules(result) == ["f_1_1(x1) -> f_1_0"]

    def test_normal_form_with_clashing_names(self, trs):
        system = trs("(VAR y z) (RULES f(y) -> x1 f(z) -> x1)")
        normal, partition = maximal_normal_form(system, Kind.V)
        assert [str(rule) for rule in normal.rules] == ["f(y) -> x1"]
        assert partition == [[0, 1]]

    def test_pair_shares_stem(self, trs):
        a, b = trs("(VAR y) (RULES f(y) -> c)"), trs("(VAR z) (RULES g(z) -> x1)")
        template_a, template_b = template_pair(a, b, Kind.V)
        assert _rules(template_a) == ["f(xx1) -> c"]
        assert template_a.sets == template_b.sets

    @pytest.mark.parametrize("base, taken, suffix, expected", [("x", [], r"\d+", "x"),
                                                               ("x", ["x", "x_1"], r"\d+", "x"),
                                                               ("x", ["x1"], r"\d+", "xx"),
                                                               ("x", ["x1", "xx20"], r"\d+", "xxx"),
                                                               ("f", ["f_1"], r"_\d+_\d+", "f"),
                                                               ("f", ["f_2_3"], r"_\d+_\d+", "ff")])
    def test_free_stem(self, base, taken, suffix, expected):
        assert free_stem(base, taken, suffix) == expected


class TestFamily:
    @pytest.mark.parametrize("kind", list(Kind))
    def test_family_maps_rules(self, kind, fixture_trs):
        system = fixture_trs("trs-1")
        result = template(system, kind)
        assert len(result.family) == len(system.rules)
        for iso, rule, templated in zip(result.family, system.rules, result.rules):
            assert iso.apply_rule(rule) == templated
        if kind is Kind.V:
            assert all(iso.is_f_invariant() for iso in result.family)
        if kind is Kind.F:
            assert all(iso.is_v_invariant() for iso in result.family)

    @given(small_trss)
    def test_full_template_idempotent(self, system):
        once = full_template(system).templated
        assert full_template(once).templated.rule_set() == once.rule_set()

    @given(small_trss)
    def test_equal_templates_iff_equivalent(self, system):
        for kind in Kind:
            result = template(system, kind)
            for i, a in enumerate(system.rules):
                for j, b in enumerate(system.rules):
                    equivalent = rule_equivalent(a, b, kind, system.sig, system.vars) is not None
                    assert equivalent == (result.rules[i] == result.rules[j])


class TestNormalForm:
    def test_v_duplicates(self, fixture_trs):
        normal, partition = maximal_normal_form(fixture_trs("v-duplicates"), Kind.V)
        assert [str(rule) for rule in normal.rules] == ["f(x) -> c", "g(x) -> c"]
        assert partition == [[0, 1], [2]]
        assert normal.sig == fixture_trs("v-duplicates").sig

    def test_template_dedupe(self, fixture_trs):
        result = v_template(fixture_trs("v-duplicates"))
        assert len(result.rules) == 3
        assert len(result.templated.rules) == 2

    @given(small_trss)
    def test_result_is_normal_form(self, system):
        for kind in Kind:
            normal, partition = maximal_normal_form(system, kind)
            assert is_normal_form(normal, kind)
            assert sorted(index for members in partition for index in members) == list(range(len(system.rules)))
            # adding back any dropped rule breaks the normal form
            for members in partition:
                for index in members[1:]:
                    extended = normal.with_rules(normal.rules + (system.rules[index],))
                    assert not is_normal_form(extended, kind)
