"""Scenario report engine: rule coverage and frozen statement sets."""

import json
from importlib import resources

import pytest

from holring.citations import REGISTRY
from holring.groups import (affine, cyclic, dihedral, inversion, metacyclic,
                            quaternion, symmetric)
from holring.reports import ConjectureReport, Scenario, conjecture_report

GOLDEN = resources.files("holring").joinpath("data/golden_reports")


def report(group, **kw) -> ConjectureReport:
    return conjecture_report(Scenario(group=group, **kw))


def texts(rep):
    return [s.text for s in rep.statements]


def check_golden(name, rep):
    got = [s.to_jsonable() for s in rep.statements]
    want = json.loads((GOLDEN / f"{name}.json").read_text())
    assert got == want


# -- frozen scenario outputs ------------------------------------------------


def test_golden_affine8_base_rationals():
    check_golden("affine8_r0", report(affine(8), base_field="rationals"))


def test_golden_s4_any_base():
    check_golden("s4_r0", report(symmetric(4)))


def test_golden_d10_split_prime():
    rep = report(dihedral(5), p=5, base_field="rationals",
                 quadratic_subfield_imaginary=True,
                 p_splits_in_quadratic_subfield=True,
                 p_coprime_to_class_number=True)
    check_golden("d10_p5_r0", rep)


def test_golden_metacyclic_negative():
    rep = report(metacyclic(7, 3), r=-1, totally_real=True,
                 base_field="rationals")
    check_golden("metacyclic73_neg", rep)


def test_golden_affine8_negative():
    rep = report(affine(8), r=-1, totally_real=True,
                 base_field="rationals")
    check_golden("affine8_neg", rep)


# -- rules at r = 0 ---------------------------------------------------------


def test_order_six_unconditional():
    rep = report(symmetric(3))
    assert texts(rep) == [
        "SSC(L/K) holds.",
        "ETNC_p(L/K, 0) holds for every prime p other than 3.",
    ]
    assert all(s.hypotheses == () for s in rep.statements)


def test_order_six_structural_match():
    # a dihedral presentation of the same group takes the same rule
    assert texts(report(dihedral(3))) == texts(report(symmetric(3)))


def test_order_twelve_needs_abelian_layer():
    rep = report(dihedral(6), base_field="rationals")
    assert texts(rep) == [
        "SSC(L/K) holds.",
        "ETNC_p(L/K, 0) holds for every prime p other than 3.",
    ]
    assert all(len(s.hypotheses) == 1 for s in rep.statements)
    # without the abelian layer only the generic fallback applies
    fallback = report(dihedral(6))
    assert texts(fallback) == [
        "SSC(L/K) holds.",
        "ETNC_p(L/K, 0) holds for every prime p not dividing 12.",
    ]
    asserted = report(dihedral(6), fixed_field_abelian=True)
    assert texts(asserted) == texts(rep)
    assert all("user-asserted" in s.hypotheses[0]
               for s in asserted.statements)


def test_s4_reduction_statement_mentions_quotient_degree():
    rep = report(symmetric(4))
    assert "degree-6 subextension" in rep.statements[1].text
    assert "hybrid-criterion" in rep.statements[1].citations


def test_dihedral_rule_gates_on_asserted_hypotheses():
    base = dict(p=5, base_field="rationals",
                quadratic_subfield_imaginary=True,
                p_coprime_to_class_number=True)
    # 5 divides n = 5, so the split assertion is required
    assert report(dihedral(5), **base).statements == ()
    full = report(dihedral(5), p_splits_in_quadratic_subfield=True, **base)
    assert texts(full) == ["ETNC_5(L/Q, 0) holds."]
    assert len(full.statements[0].hypotheses) == 3


def test_dihedral_rule_skips_split_when_p_coprime_to_n():
    rep = report(dihedral(5), p=2, base_field="rationals",
                 quadratic_subfield_imaginary=True,
                 p_coprime_to_class_number=True)
    assert texts(rep) == ["ETNC_2(L/Q, 0) holds."]
    assert len(rep.statements[0].hypotheses) == 2


def test_dihedral_rule_requires_rational_base_and_odd_n():
    kw = dict(p=5, quadratic_subfield_imaginary=True,
              p_splits_in_quadratic_subfield=True,
              p_coprime_to_class_number=True)
    assert report(dihedral(5), base_field="any", **kw).statements == ()
    # even n never matches; the all-rational fallback may still speak
    even = report(dihedral(4), base_field="rationals", **kw)
    assert "ETNC_5(L/Q, 0) holds." not in texts(even)


def test_generic_rational_characters():
    rep = report(quaternion())
    assert texts(rep) == [
        "SSC(L/K) holds.",
        "ETNC_p(L/K, 0) holds for every prime p not dividing 8.",
    ]
    assert all(s.hypotheses == () for s in rep.statements)


def test_generic_abelian_kernel_needs_rational_base_or_assertion():
    assert report(cyclic(5)).statements == ()
    rep = report(cyclic(5), base_field="rationals")
    assert "SSC(L/K) holds." in texts(rep)
    assert all(len(s.hypotheses) == 1 for s in rep.statements)


def test_generic_weak_hybrid_at_pinned_prime():
    # the order-9 kernel is coprime to 2, so the 2-adic ring splits
    # at the commutator subgroup and settles the pinned bad prime
    rep = report(inversion([3, 3]), base_field="rationals", p=2)
    assert "ETNC_2(L/K, 0) holds." in texts(rep)
    pinned = rep.statements[-1]
    assert len(pinned.hypotheses) == 1
    # over an arbitrary base field the abelian layer is not known
    loose = report(inversion([3, 3]), p=2)
    assert "ETNC_2(L/K, 0) holds." not in texts(loose)


def test_generic_no_statement_for_unknown_weak_hybrid():
    # DT of the 2-adic quaternion ring stays unknown, so p = 2 is
    # only covered by the quantified good-primes statement
    rep = report(quaternion(), base_field="rationals", p=2)
    assert texts(rep) == [
        "SSC(L/K) holds.",
        "ETNC_p(L/K, 0) holds for every prime p not dividing 8.",
    ]


def test_affine_rule_without_abelian_layer_emits_nothing():
    assert report(affine(8)).statements == ()


# -- rules at r < 0 ---------------------------------------------------------


def test_frobenius_negative_dihedral_instance():
    rep = report(dihedral(5), r=-3, totally_real=True,
                 base_field="rationals")
    assert texts(rep) == [
        "ETNC_p(L/K, r) holds for every odd r < 0 and every prime p "
        "not dividing 10.",
        "ETNC(L/K, r) holds outside its 2-part for every odd r < 0.",
    ]


def test_frobenius_negative_requires_totally_real_and_odd_r():
    assert report(affine(8), r=-1, base_field="rationals").statements == ()
    assert report(affine(8), r=-2, totally_real=True,
                  base_field="rationals").statements == ()


def test_frobenius_negative_asserted_abelian_layer():
    rep = report(metacyclic(7, 3), r=-1, totally_real=True,
                 fixed_field_abelian=True)
    assert len(rep.statements) == 2
    assert any("user-asserted: the field fixed by the Frobenius kernel"
               in h for h in rep.statements[0].hypotheses)


def test_hybrid_negative_at_pinned_prime():
    rep = report(symmetric(4), r=-1, p=5, totally_real=True,
                 base_field="rationals")
    assert texts(rep) == [
        "ETNC_5(L/K, r) holds for every odd r < 0.",
    ]
    assert "etnc-max-totally-real-negative" in rep.statements[0].citations


def test_hybrid_negative_needs_odd_p_and_weak_hybrid():
    common = dict(r=-1, totally_real=True, base_field="rationals")
    assert report(symmetric(4), p=2, **common).statements == ()
    # Z_3[S_4] is not weakly hybrid at the commutator subgroup
    assert report(symmetric(4), p=3, **common).statements == ()


# -- epsilon constant conjectures -------------------------------------------


def test_local_epsilon_trivial_denominator():
    rep = report(inversion([9]), conjecture="local-epsilon", p=2)
    assert texts(rep) == [
        "The local epsilon constant conjecture holds for L/K.",
    ]
    assert "local-epsilon-element-in-dt" in rep.statements[0].citations


def test_local_epsilon_weak_hybrid_reduction():
    rep = report(symmetric(4), conjecture="local-epsilon", p=3)
    assert texts(rep) == [
        "The local epsilon constant conjecture holds for L/K if and "
        "only if it holds for the degree-6 subextension fixed by a "
        "normal subgroup of order 4.",
    ]


def test_global_epsilon_weak_hybrid_reduction():
    rep = report(dihedral(6), conjecture="global-epsilon", p=2)
    assert texts(rep) == [
        "The 2-part of the global epsilon constant conjecture holds "
        "for L/K if and only if it holds for the degree-4 "
        "subextension fixed by a normal subgroup of order 3.",
    ]


def test_epsilon_no_reduction_available():
    assert report(quaternion(), conjecture="local-epsilon",
                  p=2).statements == ()


# -- grammar and bookkeeping -------------------------------------------------


def test_unsupported_grammar_raises():
    g = cyclic(3)
    for kw in (dict(r=1), dict(conjecture="bsd"),
               dict(conjecture="local-epsilon"), dict(p=6),
               dict(base_field="reals"),
               dict(conjecture="global-epsilon", p=2, r=-1)):
        with pytest.raises(ValueError, match="unsupported scenario grammar"):
            conjecture_report(Scenario(group=g, **kw))


def test_citations_all_registered():
    for scn in (Scenario(group=symmetric(4)),
                Scenario(group=affine(8), base_field="rationals"),
                Scenario(group=dihedral(5), p=5, base_field="rationals",
                         quadratic_subfield_imaginary=True,
                         p_splits_in_quadratic_subfield=True,
                         p_coprime_to_class_number=True),
                Scenario(group=affine(8), r=-1, totally_real=True,
                         base_field="rationals"),
                Scenario(group=symmetric(4), conjecture="local-epsilon",
                         p=3)):
        for s in conjecture_report(scn).statements:
            for label in s.citations:
                assert label in REGISTRY


def test_every_statement_logged_in_derivation():
    for scn in (Scenario(group=symmetric(3)),
                Scenario(group=dihedral(6), base_field="rationals"),
                Scenario(group=affine(8), base_field="rationals"),
                Scenario(group=metacyclic(7, 3), r=-1, totally_real=True,
                         base_field="rationals"),
                Scenario(group=dihedral(6), conjecture="global-epsilon",
                         p=2)):
        rep = conjecture_report(scn)
        produced = {t for d in rep.derivation for t in d.produced}
        assert rep.statements
        for s in rep.statements:
            assert s.text in produced


def test_report_serializes_to_json():
    rep = report(affine(8), base_field="rationals")
    blob = json.dumps(rep.to_jsonable())
    parsed = json.loads(blob)
    assert parsed["scenario"]["group"]["family"] == "affine"
    assert parsed["scenario"]["base_field"] == "rationals"
    assert len(parsed["statements"]) == 2
    assert parsed["derivation"][0]["rule"] == "affine-family"
