import pytest

from checks import (
    CHECKS,
    EXPECTED_PROPER_SUBGROUP_TYPES,
    CheckContext,
    CheckDefinition,
    CheckStatus,
    Evidence,
    check_ids,
    run_check,
)
from errors import InputError
from graph_core import heawood_standard, rewire_edge

ALL_IDS = [f"K{i}" for i in range(1, 17)]


def test_catalog_has_sixteen_checks_in_order():
    assert check_ids() == ALL_IDS
    for definition in CHECKS.values():
        assert definition.statement and definition.claim and definition.title and definition.paper_ref


@pytest.mark.parametrize("check_id", ALL_IDS)
def test_every_check_verifies_on_heawood(context, check_id):
    result = run_check(check_id, context)
    assert result.status is CheckStatus.VERIFIED, result.counterexamples
    assert result.failed_assertions == 0
    assert result.counterexamples == []


def test_cycle_census_witnesses(context):
    result = run_check("K1", context)
    counts = result.witnesses["cycle_counts"]
    assert (counts["6"], counts["12"], counts["14"]) == (28, 56, 24)
    assert (counts["3"], counts["4"], counts["5"]) == (0, 0, 0)
    assert result.witnesses["girth"] == 6


def test_spectrum_witnesses(context):
    witnesses = run_check("K3", context).witnesses
    assert witnesses["order"] == 336
    assert sorted(int(k) for k in witnesses["spectrum"]) == [1, 2, 3, 4, 6, 7, 8]


def test_distance_three_witnesses(context):
    witnesses = run_check("K5", context).witnesses
    assert witnesses["distance_3_pairs"] == 28
    assert witnesses["avoiding_counts"] == {"2": 28}


def test_order_seven_and_three_witnesses(context):
    assert run_check("K6", context).witnesses["order_7_elements"] == 48
    assert set(run_check("K6", context).witnesses["rotation_steps"]) <= {2, 4, 6, 8, 10, 12}
    assert run_check("K7", context).witnesses["rotation_steps"] == [4, 8]


def test_involution_witnesses(context):
    k8 = run_check("K8", context).witnesses
    assert k8["involutions"] == 49
    assert sum(p["count"] for p in k8["involution_profiles"]) == 49
    assert k8["chord_splits"] == {"4-8": 24 * 7}
    k9 = run_check("K9", context).witnesses
    assert all(int(n) % 2 == 1 for n in k9["fixed_edge_counts"])


def test_order_four_and_eight_witnesses(context):
    witnesses = run_check("K10", context).witnesses
    assert witnesses["order_4_elements"] == 42
    assert witnesses["order_8_elements"] == 84
    assert witnesses["even_orders_with_invariant_14_cycle"] == [2]


def test_subgroup_census_witnesses(context):
    witnesses = run_check("K11", context).witnesses
    assert set(witnesses["proper_types"]) == EXPECTED_PROPER_SUBGROUP_TYPES
    assert len(witnesses["proper_types"]) == 17
    assert witnesses["classes_confirmed_by_isomorphism"] > 0


def test_burnside_witness(context):
    witnesses = run_check("K12", context).witnesses
    assert witnesses["orbit_count"] == "30/12"
    assert witnesses["fixed_counts_by_order"] == {"1": 14, "2": 0, "3": 2}


def test_dihedral_witnesses(context):
    assert run_check("K14", context).witnesses["odd_m_checked"] == [1, 3, 5, 7, 9, 11, 13, 15]
    assert run_check("K15", context).witnesses["overgroups"] == ["D7", "D14"]


def test_explicit_automorphism_witnesses(context):
    witnesses = run_check("K16", context).witnesses
    assert witnesses["printed_rotation"]["order"] == 42
    assert witnesses["printed_rotation"]["is_automorphism"] is False
    assert witnesses["generated_type"] == "D7"
    assert witnesses["glide_labelings"] > 0
    assert witnesses["realizable_orders"] == [2, 3, 6, 7]


def test_order_seven_check_fails_on_mutated_graph(mutated_context):
    result = run_check("K6", mutated_context)
    assert result.status is CheckStatus.FAILED
    assert result.counterexamples
    assert result.counterexamples[0]["assertion"]


@pytest.mark.parametrize("remove, add", [
    ((0, 1), (0, 7)),
    ((0, 5), (0, 2)),
    ((3, 4), (1, 4)),
])
def test_single_edge_mutation_fails_an_early_check(remove, add):
    context = CheckContext(rewire_edge(heawood_standard(), remove, add))
    statuses = [run_check(f"K{i}", context).status for i in range(1, 9)]
    assert CheckStatus.FAILED in statuses


def test_petersen_fails_cycle_census(petersen_context):
    result = run_check("K1", petersen_context)
    assert result.status is CheckStatus.FAILED
    assertions = {c["assertion"] for c in result.counterexamples}
    assert "graph has 14 vertices" in assertions


def test_unknown_check_id():
    with pytest.raises(InputError):
        run_check("K99")


def test_raising_check_becomes_failed_result(monkeypatch, context):
    def explode(ctx, ev):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(CHECKS, "K17", CheckDefinition("K17", "explodes", "never holds", "none", explode))
    result = run_check("K17", context)
    assert result.status is CheckStatus.FAILED
    assert "ZeroDivisionError" in result.counterexamples[0]["error"]


def test_evidence_collects_failures():
    ev = Evidence()
    assert ev.require(True, "holds")
    assert not ev.require(False, "fails", value=3)
    ev.record("count", 1)
    assert not ev.passed
    assert ev.failures == [{"assertion": "fails", "value": 3}]
    assert ev.witnesses == {"count": 1}
