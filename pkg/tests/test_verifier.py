"""Cross-check verdicts and the analysis report."""

from fractions import Fraction

import pytest

from minpair.algext import AlgebraicElement
from minpair.basefield import make_base
from minpair.exactpoly import Poly
from minpair.gaussval import GaussValuation
from minpair.ordvals import OrderedValue
from minpair.pairs import MinimalPair, check_minimality
from minpair.verifier import (
    VERDICT_NAMES,
    AnalysisReport,
    analyze,
    build_partner_pairs,
    classify_implicit_constants,
    verify_equivalence_transfer,
    verify_product_formula,
    verify_subfield_sandwich,
    verify_value_lift,
)


def _qp_pair(p, coeffs, gamma, mode="assert", candidates=()):
    base = make_base("Qp", p)
    Q = Poly(base.domain, [Fraction(c) for c in coeffs])
    elem = AlgebraicElement(base, Q)
    cert = check_minimality(elem, gamma, mode=mode, candidates=candidates)
    return MinimalPair(elem, gamma, cert)


def _poly(base, coeffs):
    return Poly(base.domain, [Fraction(c) for c in coeffs])


def _val(q):
    return OrderedValue.of(Fraction(q))


class TestClassification:
    def test_top(self):
        assert classify_implicit_constants(2, 2)["kind"] == (
            "EqualsHenselizationOfK"
        )

    def test_bottom(self):
        assert classify_implicit_constants(1, 4)["kind"] == (
            "EqualsKaHenselization"
        )

    def test_middle(self):
        cls = classify_implicit_constants(3, 6)
        assert cls["kind"] == "Intermediate"
        assert cls["degree_over_ground"] == 2

    def test_degenerate_degree_one(self):
        assert classify_implicit_constants(1, 1)["kind"] == (
            "EqualsHenselizationOfK"
        )

    def test_non_divisor(self):
        assert classify_implicit_constants(2, 3)["kind"] == "Undetermined"


class TestProductFormula:
    def test_sqrt2(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        v = verify_product_formula(GaussValuation(pair))
        assert v.passed
        assert "residue degree 2" in v.detail

    def test_sextic(self):
        pair = _qp_pair(3, [-3, 0, 0, 0, 0, 0, 1], _val(Fraction(1, 2)))
        v = verify_product_formula(GaussValuation(pair))
        assert v.passed
        assert "j = 3" in v.detail


class TestEquivalenceTransfer:
    def test_translated_partner_shares_j(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        base = pair.elem.base
        partners, skipped = build_partner_pairs(
            pair,
            [_poly(base, [2, -4, 1]), _poly(base, [14, -8, 1])],
        )
        assert not skipped
        verdict, stats = verify_equivalence_transfer(pair, partners)
        assert verdict.passed
        assert stats["couples"] == 2

    def test_distant_partner_is_not_a_couple(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(2), mode="krasner")
        base = pair.elem.base
        partners, _ = build_partner_pairs(pair, [_poly(base, [2, -4, 1])])
        verdict, stats = verify_equivalence_transfer(pair, partners)
        assert verdict.passed
        assert stats["couples"] == 0

    def test_sensitive_couple_counted(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(2), mode="krasner")
        base = pair.elem.base
        partners, _ = build_partner_pairs(pair, [_poly(base, [14, -8, 1])])
        verdict, stats = verify_equivalence_transfer(pair, partners)
        assert verdict.passed
        assert stats["couples"] == 1
        assert stats["sensitive"] == 1

    def test_no_partners_is_skipped(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        verdict, stats = verify_equivalence_transfer(pair, [])
        assert verdict.status == "skipped"


class TestValueLift:
    def test_rank_one_lifts(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(2), mode="krasner")
        v = verify_value_lift(pair, GaussValuation(pair))
        assert v.passed
        assert '["7/2", "-1"]' in v.detail

    def test_sextic_lift_moves_j_into_the_index(self):
        pair = _qp_pair(3, [-3, 0, 0, 0, 0, 0, 1], _val(Fraction(1, 2)))
        v = verify_value_lift(pair, GaussValuation(pair))
        assert v.passed

    def test_rank_two_skipped(self):
        gamma = OrderedValue.of(Fraction(1), Fraction(-1))
        pair = _qp_pair(2, [-2, 0, 1], gamma)
        v = verify_value_lift(pair, GaussValuation(pair))
        assert v.status == "skipped"


class TestSubfieldSandwich:
    def test_trivial_subfield(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        base = pair.elem.base
        b_expr = _poly(base, [0])
        Qb = _poly(base, [0, 1])
        verdict, block = verify_subfield_sandwich(pair, b_expr, Qb)
        assert verdict.passed
        assert block["j_rel"] == 2
        assert block["relative_degree"] == 2
        assert block["cor_6_1_applies"]

    def test_cube_inside_sextic(self):
        pair = _qp_pair(3, [-3, 0, 0, 0, 0, 0, 1], _val(Fraction(1, 2)))
        base = pair.elem.base
        b_expr = _poly(base, [0, 0, 0, 1])
        Qb = _poly(base, [-3, 0, 1])
        verdict, block = verify_subfield_sandwich(pair, b_expr, Qb)
        assert verdict.passed
        assert block["m_degree"] == 3
        assert block["j_rel"] == 3
        assert block["cor_6_1_applies"]

    def test_boundary_pair_fails_honestly(self):
        pair = _qp_pair(3, [-3, 0, 1], _val(Fraction(1, 2)))
        base = pair.elem.base
        b_expr = _poly(base, [0, 1])
        Qb = _poly(base, [-3, 0, 1])
        verdict, block = verify_subfield_sandwich(pair, b_expr, Qb)
        assert verdict.status == "fail"
        assert block["j_rel"] == 1
        assert "does not divide" in verdict.detail

    def test_wild_subfield_skipped(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        base = pair.elem.base
        b_expr = _poly(base, [0, 1])
        Qb = _poly(base, [-2, 0, 1])
        verdict, block = verify_subfield_sandwich(pair, b_expr, Qb)
        assert verdict.status == "skipped"
        assert "divides e(K(b)/K)" in verdict.detail

    def test_wrong_qb_raises(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        base = pair.elem.base
        b_expr = _poly(base, [0, 1])
        Qb = _poly(base, [-3, 0, 1])
        with pytest.raises(ValueError):
            verify_subfield_sandwich(pair, b_expr, Qb)


class TestAnalyze:
    def test_full_report(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(1))
        base = pair.elem.base
        report = analyze(
            pair,
            partner_polys=[_poly(base, [2, -4, 1])],
            subfield=(_poly(base, [0]), _poly(base, [0, 1])),
        )
        assert {v["name"] for v in report.verdicts} == set(VERDICT_NAMES)
        assert all(v["status"] == "pass" for v in report.verdicts)
        inv = report.invariants
        assert inv["j"] == 2
        assert inv["vQ"] == "2"
        assert inv["alpha"] == "0"
        assert inv["e"] == 1 and inv["E"] == 1 and inv["lambda"] == 1
        assert inv["residue_degree"] == 2
        assert inv["s_as_function_of_t"] == "t^2"
        assert report.implicit_constants["kind"] == "EqualsHenselizationOfK"
        assert report.equivalence["couples"] == 1

    def test_verdict_lookup_and_missing(self):
        pair = _qp_pair(5, [-5, 1], _val(1), mode="krasner")
        report = analyze(pair)
        assert report.verdict("thm_1_1")["status"] == "pass"
        assert report.verdict("thm_1_2")["status"] == "skipped"
        with pytest.raises(KeyError):
            report.verdict("no_such_check")

    def test_json_round_trip_is_deterministic(self):
        pair = _qp_pair(2, [-2, 0, 1], _val(Fraction(4, 3)))
        report = analyze(pair)
        text = report.to_json()
        again = AnalysisReport.from_json(text)
        assert again == report
        assert again.to_json() == text

    def test_boundary_scenario_fails_only_the_sandwich(self):
        pair = _qp_pair(3, [-3, 0, 1], _val(Fraction(1, 2)))
        base = pair.elem.base
        report = analyze(
            pair,
            subfield=(_poly(base, [0, 1]), _poly(base, [-3, 0, 1])),
        )
        statuses = {v["name"]: v["status"] for v in report.verdicts}
        assert statuses["thm_1_3_sandwich"] == "fail"
        del statuses["thm_1_3_sandwich"]
        assert set(statuses.values()) <= {"pass", "skipped"}

    def test_value_transcendental_report(self):
        gamma = OrderedValue.of(Fraction(1), Fraction(-1))
        pair = _qp_pair(2, [-2, 0, 1], gamma)
        report = analyze(pair)
        inv = report.invariants
        assert inv["kind"] == "value-transcendental"
        assert inv["vQ"] == ["2", "-2"]
        assert inv["e"] is None and inv["E"] is None
        assert inv["lambda"] == 2
        assert inv["residue_degree"] == 1
        assert report.verdict("lemma_4_1")["status"] == "skipped"
        assert report.verdict("thm_1_1")["status"] == "pass"