import numpy as np
import pytest

from trs_iso import Decision, FamilyWitness, GENERALISED, GlobalWitness, Relation, TermIso, UNGENERALISED, Verdict, \
    brute_force_decide, check_semantic_compatibility, decide_any, decide_generalised, decide_global, decide_local, \
    decide_standard, prepare_generalised, survey, verify_witness, witness_from_json, witness_to_json
from trs_iso._utility._classes import CompatibilityPreconditionError, NormalFormViolation, SizeGuardExceeded, \
    WitnessShapeError


class TestRelation:
    @pytest.mark.parametrize("text, expected", [("gve", Relation.GVE), ("GFE", Relation.GFE),
                                                ("se*", Relation.SE_G), ("SEg", Relation.SE_G),
                                                ("lfeg", Relation.LFE_G), (Relation.LE, Relation.LE)])
    def test_parse(self, text, expected):
        assert Relation.parse(text) is expected

    def test_unknown(self):
        with pytest.raises(ValueError):
            Relation.parse("gex")
        with pytest.raises(ValueError):
            Relation.parse("geg")

    def test_groups(self):
        assert len(UNGENERALISED) == 8 and len(GENERALISED) == 5
        assert Relation.SVE_G.base is Relation.SVE and Relation.SVE_G.is_generalised
        assert [r for r in Relation if r.is_global] == [Relation.GE, Relation.GVE, Relation.GFE]
        assert Relation.LVE.normal_form.value == "v" and Relation.SVE.normal_form.value == "f"
        assert Relation.LE.normal_form.value == "full" and Relation.GE.normal_form is None

    def test_dispatch_guards(self, fixture_trs):
        a = fixture_trs("trs-2")
        with pytest.raises(ValueError):
            decide_local(a, a, "ge")
        with pytest.raises(ValueError):
            decide_global(a, a, "se")
        with pytest.raises(ValueError):
            decide_standard(a, a, "lve")
        with pytest.raises(ValueError):
            prepare_generalised(a, a, "le")


class TestGlobal:
    def test_variable_renaming(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-2"), fixture_trs("trs-3"), "gve")
        assert decision.is_iso and isinstance(decision.witness, GlobalWitness)
        assert decision.witness.iso.vmap == {"x": "z1", "y": "z2"}
        assert decision.witness.iso.is_f_invariant()

    def test_function_renaming(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-2"), fixture_trs("trs-4"), Relation.GFE)
        assert decision.witness.iso.fmap == {"f": "g", "c": "c", "g": "f"}

    def test_not_iso_has_reason(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-2"), fixture_trs("trs-3"), "gfe")
        assert decision.verdict is Verdict.NOT_ISO and decision.witness is None
        assert "identical variable sets" in decision.trail[-1]

    def test_unused_symbols_paired_by_arity(self, fixture_trs, trs):
        a = fixture_trs("trs-7")
        b = trs("(VAR u v) (SIG (d2 0) (k 2) (c2 0) (m 1)) (RULES k(u,v) -> c2 m(u) -> c2)")
        decision = decide_any(a, b, "ge")
        assert decision.is_iso
        assert decision.witness.iso.fmap == {"f": "k", "g": "m", "c": "c2", "d": "d2"}

    def test_no_normal_form_needed(self, fixture_trs):
        a = fixture_trs("v-duplicates")
        assert decide_any(a, a, "ge").is_iso


class TestLocalAndStandard:
    def test_normal_form_violation(self, fixture_trs):
        a = fixture_trs("v-duplicates")
        with pytest.raises(NormalFormViolation) as info:
            decide_any(a, a, "lve")
        assert info.value.rule_pair == (0, 1)
        assert info.value.witness.apply_rule(a.rules[0]) == a.rules[1]
        with pytest.raises(NormalFormViolation):
            decide_any(a, a, "se")

    def test_local_family(self, fixture_trs):
        a, b = fixture_trs("trs-9"), fixture_trs("trs-11")
        decision = decide_any(a, b, "lve")
        assert isinstance(decision.witness, FamilyWitness)
        assert decision.witness.rule_matching == (0, 1)
        for iso, rule, j in zip(decision.witness.members, a.rules, decision.witness.rule_matching):
            assert iso.apply_rule(rule) == b.rules[j]

    def test_standard_shares_function_renaming(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-15"), fixture_trs("trs-16"), "se")
        members = decision.witness.members
        assert members[0].fmap == members[1].fmap == {"c": "zero", "s": "suc", "f": "add"}

    def test_standard_shares_variable_renaming(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-7"), fixture_trs("trs-8"), "sve")
        assert decision.is_iso
        assert len({tuple(sorted(iso.vmap.items())) for iso in decision.witness.members}) == 1

    def test_trail_includes_template_step(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-15"), fixture_trs("trs-16"), "se")
        assert any(message.startswith("templates: ") for message in decision.trail)


class TestGeneralised:
    def test_padding(self, fixture_trs):
        padded_a, padded_b = prepare_generalised(fixture_trs("trs-18"), fixture_trs("trs-19"), "lfe*")
        assert padded_a.sig.profile() == padded_b.sig.profile()
        assert "_pad_1_1" in padded_a.sig
        assert padded_a.rules == fixture_trs("trs-18").rules

    def test_normal_form_drops_duplicates(self, fixture_trs):
        padded_a, _ = prepare_generalised(fixture_trs("trs-13"), fixture_trs("trs-14"), "lfe*")
        assert len(padded_a.rules) == 2

    def test_decision_keeps_padded_pair(self, fixture_trs):
        decision = decide_generalised(fixture_trs("trs-18"), fixture_trs("trs-19"), Relation.LFE_G)
        assert decision.is_iso and decision.relation is Relation.LFE_G
        assert decision.padded is not None
        assert verify_witness(fixture_trs("trs-18"), fixture_trs("trs-19"), "lfe*", decision.witness)

    def test_minimization_drops_unused_variables(self, fixture_trs):
        padded_a, padded_b = prepare_generalised(fixture_trs("trs-2"), fixture_trs("trs-2p"), "se*")
        assert padded_a.vars == ("x", "y") and padded_b.vars == ("x", "y")
        assert decide_any(fixture_trs("trs-2"), fixture_trs("trs-2p"), "se*").is_iso
        assert not decide_any(fixture_trs("trs-2"), fixture_trs("trs-2p"), "se").is_iso

    def test_generalised_accepts_any_input(self, fixture_trs):
        a = fixture_trs("v-duplicates")
        assert decide_any(a, a, "lve*").is_iso


class TestWitness:
    def test_shape_mismatch(self, fixture_trs):
        a, b = fixture_trs("trs-2"), fixture_trs("trs-3")
        with pytest.raises(WitnessShapeError):
            verify_witness(a, b, "lve", decide_any(a, b, "gve").witness)
        with pytest.raises(WitnessShapeError):
            FamilyWitness((TermIso({}, {}),), (0, 1))

    def test_tampered_witness(self, fixture_trs):
        a, b = fixture_trs("trs-2"), fixture_trs("trs-3")
        witness = decide_any(a, b, "gve").witness
        swapped = GlobalWitness(TermIso(witness.iso.fmap, {"x": "z2", "y": "z1"}))
        assert verify_witness(a, b, "gve", witness)
        assert not verify_witness(a, b, "gve", swapped)
        assert not verify_witness(a, b, "gfe", witness)

    def test_standard_needs_common_part(self, fixture_trs):
        a, b = fixture_trs("trs-15"), fixture_trs("trs-16")
        witness = decide_any(a, b, "se").witness
        assert verify_witness(a, b, "le", witness)
        other = fixture_trs("trs-9")
        decision = decide_any(other, fixture_trs("trs-10"), "le")
        assert decision.is_iso
        assert not verify_witness(other, fixture_trs("trs-10"), "se", decision.witness)

    def test_json(self, fixture_trs):
        decision = decide_any(fixture_trs("trs-15"), fixture_trs("trs-16"), "se")
        data = witness_to_json(decision)
        assert data["relation"] == "se" and data["verdict"] == "iso" and data["witness"]["kind"] == "family"
        assert witness_from_json(data) == decision.witness
        assert witness_from_json(decide_any(fixture_trs("trs-2"), fixture_trs("trs-3"), "gve").to_json()).iso.vmap \
            == {"x": "z1", "y": "z2"}
        assert witness_from_json(Decision(Relation.GE, Verdict.NOT_ISO).to_json()) is None
        with pytest.raises(WitnessShapeError):
            witness_from_json({"kind": "other"})


class TestBruteForce:
    def test_size_guard(self, trs):
        wide = trs("(RULES f(a1,a2,a3,a4,a5,a6) -> a1)")
        with pytest.raises(SizeGuardExceeded):
            brute_force_decide(wide, wide, "ge")

    def test_normal_form_gate(self, fixture_trs):
        a = fixture_trs("v-duplicates")
        with pytest.raises(NormalFormViolation):
            brute_force_decide(a, a, "lve")
        assert brute_force_decide(a, a, "lve*")

    @pytest.mark.parametrize("left, right", [("trs-2", "trs-3"), ("trs-2", "trs-5"), ("trs-9", "trs-10"),
                                             ("trs-7", "trs-8"), ("trs-15", "trs-16")])
    def test_agrees_on_examples(self, left, right, fixture_trs):
        a, b = fixture_trs(left), fixture_trs(right)
        for relation in UNGENERALISED:
            try:
                expected = brute_force_decide(a, b, relation)
            except NormalFormViolation:
                with pytest.raises(NormalFormViolation):
                    decide_any(a, b, relation)
                continue
            assert decide_any(a, b, relation).is_iso == expected


class TestSymbolsNamedLikeTemplates:
    @pytest.mark.parametrize("left, right", [("(VAR y) (RULES f(y) -> x1)", "(VAR z) (RULES g(z) -> x1)"),
                                             ("(VAR f_1_0) (RULES g(f_1_0) -> c)", "(VAR f_1_0) (RULES h(f_1_0) -> d)"),
                                             ("(VAR y) (RULES f(y) -> x1)", "(VAR x1) (RULES f(x1) -> c)")])
    def test_agrees_with_brute_force(self, left, right, trs):
        a, b = trs(left), trs(right)
        for relation in Relation:
            decision = decide_any(a, b, relation)
            assert decision.is_iso == brute_force_decide(a, b, relation), relation
            if decision.is_iso:
                assert verify_witness(a, b, relation, decision.witness)

    def test_standard_verdict(self, trs):
        a, b = trs("(VAR y) (RULES f(y) -> x1)"), trs("(VAR z) (RULES g(z) -> x1)")
        decision = decide_standard(a, b, Relation.SE)
        assert decision.is_iso
        assert [str(iso(a.rules[0].lhs)) for iso in decision.witness.members] == ["g(z)"]

class TestEmptyRules:
    def test_empty_pair(self, fixture_trs):
        a = fixture_trs("empty")
        assert all(decide_any(a, a, relation).is_iso for relation in Relation)

    def test_incompatible_symbols(self, fixture_trs):
        a, b = fixture_trs("empty"), fixture_trs("empty-sig")
        for relation in UNGENERALISED:
            assert not decide_any(a, b, relation).is_iso
            assert not brute_force_decide(a, b, relation)
        # minimization removes every symbol of a rule-free TRS
        for relation in GENERALISED:
            assert decide_any(a, b, relation).is_iso
            assert brute_force_decide(a, b, relation)


class TestSemanticCompatibility:
    def test_global_witness_is_compatible(self, fixture_trs):
        a, b = fixture_trs("ski"), fixture_trs("ski-renamed")
        decision = decide_any(a, b, "ge")
        report = check_semantic_compatibility(a, b, "ge", decision.witness, seed=3)
        assert report.ok and report.samples > 0

    def test_precondition(self, fixture_trs):
        a, b = fixture_trs("incompatible-i-left"), fixture_trs("incompatible-i-right")
        decision = decide_any(a, b, "lfe")
        with pytest.raises(CompatibilityPreconditionError):
            check_semantic_compatibility(a, b, "lfe", decision.witness)
        with pytest.raises(CompatibilityPreconditionError):
            check_semantic_compatibility(fixture_trs("trs-2"), fixture_trs("trs-3"), "gve",
                                         GlobalWitness(TermIso({"f": "f", "c": "c", "g": "g"},
                                                               {"x": "z2", "y": "z1"})))


class TestSurvey:
    def test_table(self, fixture_trs):
        table = survey(fixture_trs("trs-2"), fixture_trs("trs-3"))
        assert list(table.columns) == ["relation", "verdict", "detail"]
        assert len(table) == 13
        verdicts = dict(zip(table["relation"], table["verdict"]))
        assert verdicts["gve"] == "iso" and verdicts["gfe"] == "not-iso"

    def test_normal_form_rows(self, fixture_trs):
        a = fixture_trs("v-duplicates")
        table = survey(a, a, relations=["lve", "ge", "lve*"])
        assert list(table["verdict"]) == ["nf-violation", "iso", "iso"]

    def test_seeded_pairs(self):
        from trs_iso._utility.random_utility import random_pair
        rng = np.random.default_rng(11)
        for _ in range(10):
            a, b = random_pair(rng)
            assert set(survey(a, b)["verdict"]) <= {"iso", "not-iso", "nf-violation"}
