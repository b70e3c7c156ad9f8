"""Finite truncations and symbolic verdicts of the example families."""

import pytest

from graphalg import (
    CapExceededError,
    Cardinal,
    Cofinality,
    Family,
    FamilyDescriptor,
    TriState,
    UnsupportedFamilyError,
    classify,
    consistency_check,
    generate_finite,
    is_omega,
    maximal_ideal_cardinality,
    parse_param,
    symbolic_classify,
    truncation,
)
from graphalg.families import format_param

ALL_KINDS = tuple(Family)


def test_parse_param_tokens():
    assert parse_param(Family.EA, "3") == 3
    assert parse_param(Family.EA, "aleph0") is Cardinal.ALEPH0
    assert parse_param(Family.EK, "uncountable") is Cardinal.UNCOUNTABLE
    assert parse_param(Family.EL, "continuum+") is Cardinal.AT_LEAST_CONTINUUM
    assert parse_param(Family.EKAPPA, "cofinal-omega") is Cofinality.COUNTABLE
    assert parse_param(Family.EKAPPA, "non-cofinal-omega") is Cofinality.UNCOUNTABLE
    assert parse_param(Family.EKAPPA, "4") == 4
    for kind, token in [
        (Family.EA, "cofinal-omega"),
        (Family.EKAPPA, "uncountable"),
        (Family.EA, "0"),
        (Family.EA, "-2"),
        (Family.EA, "large"),
    ]:
        with pytest.raises(UnsupportedFamilyError):
            parse_param(kind, token)


def test_format_param_round_trips():
    for token in ("aleph0", "uncountable", "continuum+"):
        assert format_param(parse_param(Family.EA, token)) == token
    for token in ("cofinal-omega", "non-cofinal-omega"):
        assert format_param(parse_param(Family.EKAPPA, token)) == token
    assert format_param(parse_param(Family.EP, "6")) == "6"


def test_descriptor_validation():
    with pytest.raises(UnsupportedFamilyError):
        FamilyDescriptor(Family.EA, Cofinality.COUNTABLE)
    with pytest.raises(UnsupportedFamilyError):
        FamilyDescriptor(Family.EKAPPA, Cardinal.ALEPH0)
    with pytest.raises(UnsupportedFamilyError):
        FamilyDescriptor(Family.EA, 0)
    assert FamilyDescriptor(Family.EA, 3).is_finite
    assert not FamilyDescriptor(Family.EA, Cardinal.ALEPH0).is_finite


def test_generated_shapes():
    ea = truncation(Family.EA, 2)
    assert [v.label for v in ea.vertices] == ["{1}", "{2}", "{1,2}"]
    assert [
        (grp.source.label, grp.target.label) for grp in ea.edge_groups()
    ] == [("{1}", "{1,2}"), ("{2}", "{1,2}")]

    ep = truncation(Family.EP, 2)
    assert [v.label for v in ep.vertices] == ["{}", "{1}", "{2}", "{1,2}"]
    assert len(ep.edge_groups()) == 5

    el = truncation(Family.EL, 2)
    assert el.multiplicity(0, 0) == 1
    assert el.multiplicity(2, 2) == 1

    ek = truncation(Family.EK, 2)
    assert ek.multiplicity(0, 0) == 2
    assert ek.multiplicity(2, 2) == 2

    kappa = truncation(Family.EKAPPA, 4)
    assert [v.label for v in kappa.vertices] == ["0", "1", "2", "3"]
    assert [
        (grp.source.index, grp.target.index) for grp in kappa.edge_groups()
    ] == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_vertex_counts_grow_exponentially():
    assert truncation(Family.EA, 4, max_vertices=20).vertex_count == 15
    assert truncation(Family.EP, 4, max_vertices=20).vertex_count == 16
    assert truncation(Family.EL, 3, max_vertices=20).vertex_count == 7
    assert truncation(Family.EKAPPA, 7).vertex_count == 7


def test_generation_cap():
    with pytest.raises(CapExceededError):
        truncation(Family.EA, 10)
    with pytest.raises(CapExceededError):
        truncation(Family.EKAPPA, 25)
    big = truncation(Family.EA, 5, max_vertices=31)
    assert big.vertex_count == 31


def test_generate_finite_requires_integer():
    with pytest.raises(UnsupportedFamilyError):
        generate_finite(FamilyDescriptor(Family.EA, Cardinal.ALEPH0))


def test_symbolic_countable_subset_families_are_primitive():
    for kind in (Family.EA, Family.EL, Family.EK):
        r = symbolic_classify(FamilyDescriptor(kind, Cardinal.ALEPH0))
        assert r.cstar_primitive
        assert r.lpa_primitive
        assert r.csp
        assert r.downward_directed
        assert not r.cofinal


def test_symbolic_uncountable_subset_families_lose_csp():
    for kind, param in (
        (Family.EA, Cardinal.UNCOUNTABLE),
        (Family.EK, Cardinal.UNCOUNTABLE),
        (Family.EL, Cardinal.AT_LEAST_CONTINUUM),
    ):
        r = symbolic_classify(FamilyDescriptor(kind, param))
        assert r.cstar_prime
        assert not r.csp
        assert not r.cstar_primitive
        assert not r.lpa_primitive
        assert r.lpa_prime


def test_symbolic_field_details():
    ea = symbolic_classify(FamilyDescriptor(Family.EA, Cardinal.UNCOUNTABLE))
    assert ea.acyclic and ea.condition_k and ea.condition_l
    assert ea.af is TriState.YES
    assert ea.real_rank_zero is TriState.YES

    el = symbolic_classify(FamilyDescriptor(Family.EL, Cardinal.ALEPH0))
    assert el.condition_l
    assert not el.condition_k
    assert not el.acyclic
    assert el.af is TriState.UNKNOWN
    assert el.real_rank_zero is TriState.UNKNOWN
    assert not el.all_ideals_gauge_invariant

    ek = symbolic_classify(FamilyDescriptor(Family.EK, Cardinal.UNCOUNTABLE))
    assert ek.condition_k and ek.condition_l and not ek.acyclic
    assert ek.all_ideals_gauge_invariant
    assert ek.real_rank_zero is TriState.YES

    ep = symbolic_classify(FamilyDescriptor(Family.EP, Cardinal.UNCOUNTABLE))
    assert ep.csp and ep.cstar_primitive
    assert ep.af is TriState.YES
    assert not ep.cofinal


def test_symbolic_ekappa_depends_on_cofinality():
    countable = symbolic_classify(
        FamilyDescriptor(Family.EKAPPA, Cofinality.COUNTABLE)
    )
    assert countable.csp and countable.cstar_primitive
    uncountable = symbolic_classify(
        FamilyDescriptor(Family.EKAPPA, Cofinality.UNCOUNTABLE)
    )
    assert uncountable.cstar_prime
    assert not uncountable.csp
    assert not uncountable.cstar_primitive
    assert uncountable.af is TriState.YES
    for r in (countable, uncountable):
        assert r.acyclic and not r.cofinal


def test_symbolic_finite_loop_families():
    one = symbolic_classify(FamilyDescriptor(Family.EL, 1))
    assert not one.condition_l
    assert one.cofinal
    two = symbolic_classify(FamilyDescriptor(Family.EL, 2))
    assert not two.cofinal
    ek_one = symbolic_classify(FamilyDescriptor(Family.EK, 1))
    assert ek_one.cofinal and ek_one.cstar_simple


def test_maximal_ideal_cardinality():
    assert (
        maximal_ideal_cardinality(FamilyDescriptor(Family.EA, Cardinal.ALEPH0))
        is Cardinal.ALEPH0
    )
    assert (
        maximal_ideal_cardinality(FamilyDescriptor(Family.EA, Cardinal.UNCOUNTABLE))
        is Cardinal.UNCOUNTABLE
    )
    assert (
        maximal_ideal_cardinality(FamilyDescriptor(Family.EK, Cardinal.UNCOUNTABLE))
        is Cardinal.UNCOUNTABLE
    )
    assert (
        maximal_ideal_cardinality(
            FamilyDescriptor(Family.EL, Cardinal.AT_LEAST_CONTINUUM)
        )
        is Cardinal.AT_LEAST_CONTINUUM
    )
    for desc in (
        FamilyDescriptor(Family.EL, Cardinal.ALEPH0),
        FamilyDescriptor(Family.EA, 3),
        FamilyDescriptor(Family.EP, Cardinal.UNCOUNTABLE),
        FamilyDescriptor(Family.EKAPPA, Cofinality.COUNTABLE),
    ):
        with pytest.raises(UnsupportedFamilyError):
            maximal_ideal_cardinality(desc)


def test_consistency_with_matching_finite_param():
    for kind in ALL_KINDS:
        for n in (1, 2, 3):
            result = consistency_check(FamilyDescriptor(kind, n), n)
            assert result.consistent
            assert result.expected_divergences == []


def test_consistency_against_infinite_tables():
    for kind in (Family.EA, Family.EL, Family.EK, Family.EP):
        for param in (Cardinal.ALEPH0, Cardinal.UNCOUNTABLE):
            for n in (1, 2, 3, 4):
                assert consistency_check(
                    FamilyDescriptor(kind, param), n
                ).consistent
    for param in (Cofinality.COUNTABLE, Cofinality.UNCOUNTABLE):
        for n in (1, 2, 3, 4):
            assert consistency_check(
                FamilyDescriptor(Family.EKAPPA, param), n
            ).consistent


def test_consistency_reports_expected_divergences():
    result = consistency_check(FamilyDescriptor(Family.EL, Cardinal.ALEPH0), 2)
    assert result.consistent
    fields = [line.split(":")[0] for line in result.expected_divergences]
    assert "condition_l" in fields


def test_truncations_classify_like_their_size(ea2):
    from graphalg.classify import BOOLEAN_FIELDS, TRISTATE_FIELDS

    report = classify(ea2)
    table = symbolic_classify(FamilyDescriptor(Family.EA, 2))
    for name in BOOLEAN_FIELDS + TRISTATE_FIELDS:
        assert getattr(report, name) == getattr(table, name)


def test_loops_marked_by_omega_free_multiplicities():
    g = truncation(Family.EK, 1)
    assert not is_omega(g.multiplicity(0, 0))
