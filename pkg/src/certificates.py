"""Runs the check catalog, records the cited topological inputs as axioms and
replays the elimination argument that leaves seven realizable groups."""
from __future__ import annotations

import asyncio
import logging
from enum import Enum
from typing import Any, Iterable, Optional

import orjson
from pydantic import BaseModel, Field

from checks import CHECKS, CheckContext, CheckResult, CheckStatus, check_ids
from checks import run_check as evaluate_check
from config import config
from errors import InputError
from graph_core import SimpleGraph, graph_digest
from perm_core import A4, FROBENIUS_21, FROBENIUS_42, element_order, isotype_sort_key

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

EXPECTED_CLASSIFICATION = ("trivial", "Z2", "Z3", "Z6", "Z7", "D3", "D7")
REALIZABLE_ORDERS = (2, 3, 6, 7)
MACHINE_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


class AxiomKind(str, Enum):
    AXIOM = "AXIOM"
    CONSTRUCTION = "ASSERTED CONSTRUCTION"


class AxiomRecord(BaseModel):
    id: str
    statement: str
    source: str
    kind: AxiomKind = AxiomKind.AXIOM
    withheld: bool = False


AXIOMS: tuple[AxiomRecord, ...] = (
    AxiomRecord(
        id="A1",
        statement="No embedding of C14 in S^3 has an orientation reversing homeomorphism, so every "
                  "realizable group is positively realizable.",
        source=r'§1, "no embedding of $C_{14}$ in $S^3$ has an orientation reversing homeomorphism"',
    ),
    AxiomRecord(
        id="A2",
        statement="A realizable automorphism h of a 3-connected graph is induced by an orientation "
                  "preserving homeomorphism of finite order, and the fixed point set of each power "
                  "of h is either empty or a circle.",
        source=r'Lemma 3.1(1), "the fixed point set of $h^p$ is either the empty set or $S^1$"',
    ),
    AxiomRecord(
        id="A3",
        statement="In every embedding the mod 2 sum of the arf invariants of all 12-cycles and "
                  "14-cycles is 1, so a realizable automorphism whose order is a power of 2 leaves "
                  "at least two 14-cycles or at least two 12-cycles setwise invariant.",
        source=r'Lemma 3.1(2), "leaves at least two $14$-cycles or at least two $12$-cycles setwise invariant"',
    ),
    AxiomRecord(
        id="A4",
        statement="Every subgroup of a positively realizable group of a 3-connected graph is "
                  "itself positively realizable.",
        source=r'Theorem 4.1, "every subgroup of $G$ is positively realizable"',
    ),
    AxiomRecord(
        id="A5",
        statement="A positively realizable group is induced by a finite group of orientation "
                  "preserving isometries of S^3 and is therefore cyclic, dihedral, or a subgroup "
                  "of Dm × Dm for odd m.",
        source=r'Theorem 4.6, "cyclic, dihedral, or a subgroup of $D_m\times D_m$"',
    ),
    AxiomRecord(
        id="A6",
        statement="Explicit embeddings with knotted edges have topological symmetry groups D7, D3, "
                  "Z6 and Z3.",
        source="Theorem 4.2 proof, Figures 3-6",
        kind=AxiomKind.CONSTRUCTION,
    ),
)
AXIOM_IDS = tuple(a.id for a in AXIOMS)


class StepOutcome(str, Enum):
    RECORDED = "RECORDED"
    ELIMINATED = "ELIMINATED"
    RETAINED = "RETAINED"
    AXIOM_MISSING = "AXIOM_MISSING"
    CHECK_FAILED = "CHECK_FAILED"


class DerivationStep(BaseModel):
    step: int
    action: str
    groups: list[str]
    checks: list[str]
    axioms: list[str]
    outcome: StepOutcome
    note: str
    candidates: list[str] = Field(default_factory=list)


class ReportStatus(str, Enum):
    UNCLASSIFIED = "UNCLASSIFIED"
    COMPLETE = "COMPLETE"
    INCOMPLETE = "INCOMPLETE"
    REFUSED = "REFUSED"


class CertificateReport(BaseModel):
    schema_version: str
    graph_digest: str
    status: ReportStatus
    checks: list[CheckResult]
    axioms: list[AxiomRecord]
    derivation: list[DerivationStep] = Field(default_factory=list)
    final_groups: list[str] = Field(default_factory=list)

    @property
    def verified_count(self) -> int:
        return sum(1 for r in self.checks if r.status is CheckStatus.VERIFIED)

    @property
    def all_verified(self) -> bool:
        return self.verified_count == len(self.checks)

    def result(self, check_id: str) -> CheckResult:
        for r in self.checks:
            if r.id == check_id:
                return r
        raise InputError(f"report has no result for {check_id}")


def _crashed_result(check_id: str, error: BaseException) -> CheckResult:
    definition = CHECKS[check_id]
    return CheckResult(
        id=check_id,
        title=definition.title,
        statement=definition.statement,
        claim=definition.claim,
        paper_ref=definition.paper_ref,
        status=CheckStatus.FAILED,
        counterexamples=[{"assertion": "check completed without raising", "error": f"{type(error).__name__}: {error}"}],
        failed_assertions=1,
    )


class Certifier:
    """Runs checks for one graph and builds certificate reports from them."""

    def __init__(
        self,
        graph: Optional[SimpleGraph] = None,
        withheld_axioms: Iterable[str] = (),
        context: Optional[CheckContext] = None,
    ):
        self.context = context if context is not None else CheckContext(graph)
        withheld = frozenset(withheld_axioms)
        unknown = withheld - set(AXIOM_IDS)
        if unknown:
            raise InputError(f"unknown axiom ids: {', '.join(sorted(unknown))}")
        self.withheld_axioms = withheld
        self._results: Optional[list[CheckResult]] = None

    def run_check(self, check_id: str) -> CheckResult:
        return evaluate_check(check_id, self.context)

    async def _run_checks(self) -> list[CheckResult]:
        try:
            await asyncio.to_thread(self.context.warm)
        except Exception as e:
            logger.error(f"Failed to prepare shared inputs: {e}")

        ids = check_ids()
        if config.RUN_CHECKS_CONCURRENTLY:
            outcomes = await asyncio.gather(
                *(asyncio.to_thread(evaluate_check, check_id, self.context) for check_id in ids),
                return_exceptions=True,
            )
        else:
            outcomes = [evaluate_check(check_id, self.context) for check_id in ids]

        results = []
        for check_id, outcome in zip(ids, outcomes):
            if isinstance(outcome, BaseException):
                logger.error(f"{check_id} task failed: {outcome}")
                outcome = _crashed_result(check_id, outcome)
            results.append(outcome)
        return results

    def results(self) -> list[CheckResult]:
        if self._results is None:
            logger.info(f"Running {len(CHECKS)} checks")
            self._results = asyncio.run(self._run_checks())
            verified = sum(1 for r in self._results if r.status is CheckStatus.VERIFIED)
            logger.info(f"{verified}/{len(self._results)} checks verified")
        return self._results

    def _axioms(self) -> list[AxiomRecord]:
        return [a.model_copy(update={"withheld": a.id in self.withheld_axioms}) for a in AXIOMS]

    def run_all(self) -> CertificateReport:
        return CertificateReport(
            schema_version=config.REPORT_SCHEMA_VERSION,
            graph_digest=graph_digest(self.context.graph),
            status=ReportStatus.UNCLASSIFIED,
            checks=self.results(),
            axioms=self._axioms(),
        )

    def classify(self) -> CertificateReport:
        report = self.run_all()
        statuses = {r.id: r.status for r in report.checks}
        try:
            derivation = _replay_derivation(self.context, statuses, self.withheld_axioms)
        except Exception as e:
            logger.error(f"Derivation replay failed: {e}")
            derivation = []

        if not derivation or not report.all_verified or any(s.outcome is StepOutcome.CHECK_FAILED for s in derivation):
            status = ReportStatus.REFUSED
        elif any(s.outcome is StepOutcome.AXIOM_MISSING for s in derivation):
            status = ReportStatus.INCOMPLETE
        else:
            status = ReportStatus.COMPLETE

        final_groups = derivation[-1].candidates if status is ReportStatus.COMPLETE else []
        if status is ReportStatus.COMPLETE and tuple(final_groups) != EXPECTED_CLASSIFICATION:
            logger.warning(f"Classification {final_groups} differs from {list(EXPECTED_CLASSIFICATION)}")
        logger.info(f"Classification status {status.value}: {', '.join(final_groups) or 'no final list'}")
        return report.model_copy(update={"status": status, "derivation": derivation, "final_groups": final_groups})


class _Replay:
    """Bookkeeping for one elimination replay."""

    def __init__(self, statuses: dict[str, CheckStatus], withheld: frozenset[str]):
        self.statuses = statuses
        self.withheld = withheld
        self.candidates: list[str] = []
        self.steps: list[DerivationStep] = []

    def _outcome(self, checks: list[str], axioms: list[str], success: StepOutcome) -> StepOutcome:
        for check_id in checks:
            if check_id not in CHECKS:
                raise InputError(f"derivation cites unknown check {check_id}")
        for axiom_id in axioms:
            if axiom_id not in AXIOM_IDS:
                raise InputError(f"derivation cites unknown axiom {axiom_id}")
        if any(self.statuses.get(c) is not CheckStatus.VERIFIED for c in checks):
            return StepOutcome.CHECK_FAILED
        if any(a in self.withheld for a in axioms):
            return StepOutcome.AXIOM_MISSING
        return success

    def step(self, action: str, groups: list[str], checks: list[str], axioms: list[str], note: str) -> DerivationStep:
        success = {"record": StepOutcome.RECORDED, "eliminate": StepOutcome.ELIMINATED, "retain": StepOutcome.RETAINED}[action]
        outcome = self._outcome(checks, axioms, success)
        if outcome is StepOutcome.ELIMINATED:
            self.candidates = [c for c in self.candidates if c not in groups]
        elif outcome is StepOutcome.AXIOM_MISSING:
            logger.warning(f"Step {len(self.steps) + 1}: {', '.join(groups) or action} not settled (axiom missing)")
        step = DerivationStep(
            step=len(self.steps) + 1,
            action=action,
            groups=groups,
            checks=checks,
            axioms=axioms,
            outcome=outcome,
            note=note,
            candidates=list(self.candidates),
        )
        self.steps.append(step)
        return step


def _replay_derivation(context: CheckContext, statuses: dict[str, CheckStatus], withheld: frozenset[str]) -> list[DerivationStep]:
    census = context.census
    representative = {}
    for record in census:
        representative.setdefault(record.iso_type, record)
    replay = _Replay(statuses, withheld)
    replay.candidates = sorted(representative, key=isotype_sort_key)

    replay.step(
        "record", [], ["K2", "K3", "K10", "K16"], ["A2", "A3", "A6"],
        f"non-trivial automorphisms induced by homeomorphisms have order in {list(REALIZABLE_ORDERS)}; "
        f"candidates start from the {len(replay.candidates)} subgroup types of Aut(C14)",
    )

    with_order_4_or_8 = [
        label for label in replay.candidates
        if any(element_order(p) in (4, 8) for p in representative[label].elements)
    ]
    replay.step(
        "eliminate", with_order_4_or_8, ["K3", "K10", "K11"], ["A2", "A3"],
        "these groups contain an element of order 4 or 8, which would have to leave a 12- or "
        "14-cycle invariant",
    )

    klein_types = [label for label in ("D2", "D6") if label in replay.candidates]
    replay.step(
        "eliminate", klein_types, ["K1", "K4", "K5", "K8", "K9", "K13"], ["A2", "A3"],
        "a realizable D2 would need an involution that fixes a vertex while leaving a 12- or "
        "14-cycle invariant; D6 contains D2",
    )

    alternating = [label for label in (A4,) if label in replay.candidates]
    replay.step(
        "eliminate", alternating, ["K6", "K7", "K12"], ["A2", "A3"],
        "the realizable fixed-vertex counts give 30/12 vertex orbits, which is not an integer",
    )

    frobenius = [label for label in (FROBENIUS_21, FROBENIUS_42) if label in replay.candidates]
    replay.step(
        "eliminate", frobenius, ["K3", "K14"], ["A5"],
        "neither group is cyclic, dihedral, or a subgroup of Dm × Dm for odd m",
    )

    replay.step(
        "retain", list(replay.candidates), ["K15", "K16"], ["A4", "A6"],
        "D7 and D3 are realized by constructed embeddings and their subgroups follow by "
        "subgroup transfer; Z6 and Z3 are realized directly",
    )
    return replay.steps


def run_check(check_id: str, graph: Optional[SimpleGraph] = None, context: Optional[CheckContext] = None) -> CheckResult:
    if check_id not in CHECKS:
        raise InputError(f"unknown check id {check_id!r}")
    return Certifier(graph, context=context).run_check(check_id)


def run_all(graph: Optional[SimpleGraph] = None, withheld_axioms: Iterable[str] = (), context: Optional[CheckContext] = None) -> CertificateReport:
    return Certifier(graph, withheld_axioms, context).run_all()


def classify(graph: Optional[SimpleGraph] = None, withheld_axioms: Iterable[str] = (), context: Optional[CheckContext] = None) -> CertificateReport:
    return Certifier(graph, withheld_axioms, context).classify()


def render_machine(payload: BaseModel) -> bytes:
    return orjson.dumps(payload.model_dump(mode="json"), option=MACHINE_OPTIONS) + b"\n"


def _compact(value: Any) -> str:
    if isinstance(value, str):
        return value
    return orjson.dumps(value, option=orjson.OPT_SORT_KEYS).decode("utf-8")


def render_check_text(result: CheckResult) -> str:
    lines = [f"[{result.status.value}] {result.id}  {result.title}"]
    lines.append(f"    claim: {result.claim}")
    if result.paper_ref:
        lines.append(f"    source: {result.paper_ref}")
    lines.append(f"    statement: {result.statement}")
    for key, value in result.witnesses.items():
        lines.append(f"    {key}: {_compact(value)}")
    if result.failed_assertions:
        lines.append(f"    failed assertions: {result.failed_assertions}")
        for counterexample in result.counterexamples:
            lines.append(f"    counterexample: {_compact(counterexample)}")
    return "\n".join(lines) + "\n"


def render_text(report: CertificateReport) -> str:
    lines = [
        "Heawood graph symmetry certificate",
        f"schema version: {report.schema_version}",
        f"graph digest: {report.graph_digest}",
        "",
        f"CHECKS (machine verified): {report.verified_count}/{len(report.checks)} verified",
    ]
    for result in report.checks:
        lines.append(render_check_text(result).rstrip("\n"))
    lines.append("")
    lines.append("AXIOMS (cited, not verified)")
    for axiom in report.axioms:
        tag = axiom.kind.value + (", WITHHELD" if axiom.withheld else "")
        lines.append(f"[{tag}] {axiom.id}  {axiom.statement}")
        lines.append(f"    source: {axiom.source}")
    if report.derivation:
        lines.append("")
        lines.append("DERIVATION")
        for step in report.derivation:
            groups = ", ".join(step.groups) if step.groups else "-"
            lines.append(f"{step.step}. {step.action} {groups}  [{_describe_outcome(step)}]")
            lines.append(f"    checks: {', '.join(step.checks)}; axioms: {', '.join(step.axioms)}")
            lines.append(f"    {step.note}")
            lines.append(f"    candidates: {', '.join(step.candidates)}")
    lines.append("")
    if report.final_groups:
        lines.append(f"FINAL: {', '.join(report.final_groups)}")
    lines.append(f"STATUS: {report.status.value}")
    return "\n".join(lines) + "\n"


def _describe_outcome(step: DerivationStep) -> str:
    if step.outcome is StepOutcome.AXIOM_MISSING:
        return "not eliminated (axiom missing)" if step.action == "eliminate" else "incomplete (axiom missing)"
    if step.outcome is StepOutcome.CHECK_FAILED:
        return "not eliminated (check failed)" if step.action == "eliminate" else "blocked (check failed)"
    return step.outcome.value
