import orjson
import pytest

from certificates import (
    AXIOM_IDS,
    EXPECTED_CLASSIFICATION,
    AxiomKind,
    Certifier,
    ReportStatus,
    StepOutcome,
    render_machine,
    render_text,
)
from checks import CHECKS, CheckStatus
from config import config
from errors import InputError
from perm_core import A4, FROBENIUS_21, FROBENIUS_42, PGL27, PSL27, S4

SPECTRUM_PRUNED = ["trivial", "Z2", "Z3", "Z6", "Z7", "D2", "D3", "D6", "D7", A4, FROBENIUS_21, FROBENIUS_42]


def step_for(report, *groups):
    return next(s for s in report.derivation if set(groups) <= set(s.groups))


def test_classification_is_complete(certificate):
    assert certificate.status is ReportStatus.COMPLETE
    assert certificate.verified_count == 16
    assert certificate.final_groups == list(EXPECTED_CLASSIFICATION)


def test_spectrum_pruning_leaves_twelve_candidates(certificate):
    pruning = certificate.derivation[1]
    assert set(pruning.groups) == {"Z4", "Z8", "D4", "D8", S4, PSL27, PGL27}
    assert pruning.outcome is StepOutcome.ELIMINATED
    assert pruning.candidates == SPECTRUM_PRUNED


def test_elimination_sequence(certificate):
    outcomes = [(s.action, s.outcome) for s in certificate.derivation]
    assert outcomes == [
        ("record", StepOutcome.RECORDED),
        ("eliminate", StepOutcome.ELIMINATED),
        ("eliminate", StepOutcome.ELIMINATED),
        ("eliminate", StepOutcome.ELIMINATED),
        ("eliminate", StepOutcome.ELIMINATED),
        ("retain", StepOutcome.RETAINED),
    ]
    assert step_for(certificate, "D2", "D6").candidates == [c for c in SPECTRUM_PRUNED if c not in ("D2", "D6")]
    assert step_for(certificate, A4).axioms == ["A2", "A3"]
    assert step_for(certificate, FROBENIUS_21, FROBENIUS_42).axioms == ["A5"]


def test_justifications_reference_known_ids(certificate):
    for step in certificate.derivation:
        assert set(step.checks) <= set(CHECKS)
        assert set(step.axioms) <= set(AXIOM_IDS)
        if step.action == "eliminate":
            assert any(certificate.result(c).status is CheckStatus.VERIFIED for c in step.checks)
        if step.action == "retain":
            assert {"A4", "A6"} <= set(step.axioms)


def test_axioms_are_inputs_not_verified(certificate):
    assert [a.id for a in certificate.axioms] == ["A1", "A2", "A3", "A4", "A5", "A6"]
    kinds = {a.id: a.kind for a in certificate.axioms}
    assert kinds["A6"] is AxiomKind.CONSTRUCTION
    assert all(kinds[a] is AxiomKind.AXIOM for a in ("A1", "A2", "A3", "A4", "A5"))


def test_withheld_arf_axiom_leaves_steps_incomplete(context):
    report = Certifier(withheld_axioms=["A3"], context=context).classify()
    assert report.status is ReportStatus.INCOMPLETE
    assert report.final_groups == []
    assert report.derivation[1].outcome is StepOutcome.AXIOM_MISSING
    assert step_for(report, "D2", "D6").outcome is StepOutcome.AXIOM_MISSING
    assert "not eliminated (axiom missing)" in render_text(report)
    assert next(a for a in report.axioms if a.id == "A3").withheld


def test_withheld_geometrization_axiom_keeps_frobenius_groups(context):
    report = Certifier(withheld_axioms=["A5"], context=context).classify()
    frobenius = step_for(report, FROBENIUS_21, FROBENIUS_42)
    assert frobenius.outcome is StepOutcome.AXIOM_MISSING
    assert {FROBENIUS_21, FROBENIUS_42} <= set(report.derivation[-1].candidates)
    assert report.status is ReportStatus.INCOMPLETE


def test_unknown_axiom_is_rejected(context):
    with pytest.raises(InputError):
        Certifier(withheld_axioms=["A9"], context=context)


def test_machine_report_layout(certificate):
    data = orjson.loads(render_machine(certificate))
    assert {"schema_version", "graph_digest", "checks", "axioms", "derivation", "final_groups"} <= set(data)
    assert data["schema_version"] == config.REPORT_SCHEMA_VERSION
    assert [c["id"] for c in data["checks"]] == [f"K{i}" for i in range(1, 17)]
    assert data["final_groups"] == list(EXPECTED_CLASSIFICATION)
    assert all(c["paper_ref"] for c in data["checks"])
    assert all(a["source"] for a in data["axioms"])


def test_checks_and_axioms_carry_anchor_quotes(certificate):
    assert '"As this is not an integer"' in certificate.result("K12").paper_ref
    assert "=\\frac{30}{12}" in certificate.result("K12").paper_ref
    assert "must pointwise fix $e$" in certificate.result("K13").paper_ref
    sources = {a.id: a.source for a in certificate.axioms}
    assert "the fixed point set of $h^p$ is either the empty set or $S^1$" in sources["A2"]
    assert "every subgroup of $G$ is positively realizable" in sources["A4"]
    assert "source: " in render_text(certificate)


def test_reports_are_byte_identical(context, certificate):
    again = Certifier(context=context).classify()
    assert render_machine(again) == render_machine(certificate)
    assert render_text(again) == render_text(certificate)


def test_sequential_run_matches_concurrent_run(monkeypatch, context, certificate):
    monkeypatch.setattr(config, "RUN_CHECKS_CONCURRENTLY", False)
    report = Certifier(context=context).run_all()
    assert [r.status for r in report.checks] == [r.status for r in certificate.checks]


def test_text_report_separates_verified_from_cited(certificate):
    text = render_text(certificate)
    assert "CHECKS (machine verified): 16/16 verified" in text
    assert "[AXIOM] A2" in text
    assert "[ASSERTED CONSTRUCTION] A6" in text
    assert "FINAL: trivial, Z2, Z3, Z6, Z7, D3, D7" in text
    assert text.rstrip().endswith("STATUS: COMPLETE")


def test_run_all_does_not_classify(context):
    report = Certifier(context=context).run_all()
    assert report.status is ReportStatus.UNCLASSIFIED
    assert report.derivation == []
    assert report.all_verified


def test_petersen_graph_is_refused(petersen_context):
    report = Certifier(context=petersen_context).classify()
    assert report.result("K1").status is CheckStatus.FAILED
    assert report.status is ReportStatus.REFUSED
    assert report.final_groups == []
