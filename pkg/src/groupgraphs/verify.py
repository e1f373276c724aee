"""Machine-checked claim reports for the lemma, theorem and remark families.

Every check is exhaustive over the group or graph in question.  Reports
are plain data; rendering lives in the CLI.
"""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from sympy import primefactors

from . import graphs as G
from .groups import Family, FiniteGroup, GroupElement, dicyclic, dihedral, generalized_quaternion
from .iso import (
    DEFAULT_NODE_BUDGET,
    SearchBudgetExceeded,
    check_witness,
    explicit_paper_map,
    find_isomorphism,
)


class Status(enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    NOT_APPLICABLE = "not_applicable"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    status: Status
    evidence: dict[str, Any] = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {"claim": self.claim, "status": self.status.value, "evidence": self.evidence}


def _report(claim: str, ok: bool, evidence: dict, counterexample: Any = None) -> ClaimReport:
    if ok:
        return ClaimReport(claim, Status.VERIFIED, evidence)
    return ClaimReport(claim, Status.REFUTED, {**evidence, "counterexample": counterexample})


def _not_applicable(claim: str, hypothesis: str, **evidence) -> ClaimReport:
    return ClaimReport(claim, Status.NOT_APPLICABLE, {"hypothesis": hypothesis, **evidence})


def has_odd_prime_factor(m: int) -> bool:
    return any(p % 2 for p in primefactors(m))


def is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def _labels(group: FiniteGroup, elems) -> list[str]:
    return sorted(group.label(s) for s in elems)


# -- lemmas ------------------------------------------------------------------


def _coverage(group: FiniteGroup, claim: str) -> ClaimReport:
    gens = (GroupElement(1, 0), GroupElement(0, 1))
    generated = group.closure(gens)
    listed = set(group.element_list)
    missing = sorted(generated ^ listed)
    return _report(
        claim,
        generated == listed and len(listed) == group.order,
        {"group": str(group), "order": group.order, "generated": len(generated)},
        _labels(group, missing[:1]),
    )


def _first_failure(items, predicate: Callable) -> Any:
    return next((s for s in items if not predicate(s)), None)


def _dicyclic_items(group: FiniteGroup, prefix: str) -> list[ClaimReport]:
    m = group.parameter
    r = group.rotation_order
    flips = [GroupElement(i, 1) for i in range(r)]
    central = GroupElement(m, 0)
    reports = [_coverage(group, f"{prefix}.i")]

    def flip_ok(s):
        inv = GroupElement((s.rotation_index + m) % r, 1)
        return group.element_order(s) == 4 and group.inverse(s) == inv and group.multiply(s, inv) == group.identity

    bad = _first_failure(flips, flip_ok)
    reports.append(_report(
        f"{prefix}.ii",
        bad is None,
        {"group": str(group), "flip_elements": len(flips), "order": 4, "inverse_shift": m},
        bad and group.label(bad),
    ))

    involutions = [s for s in group.element_list if group.element_order(s) == 2]
    x_squared = group.multiply(GroupElement(0, 1), GroupElement(0, 1))
    reports.append(_report(
        f"{prefix}.iii",
        involutions == [central] and x_squared == central,
        {"group": str(group), "involutions": _labels(group, involutions), "x^2": group.label(x_squared)},
        _labels(group, involutions),
    ))

    center = group.center()
    if m < 2:
        reports.append(_not_applicable(
            f"{prefix}.iv", "m >= 2 (Q_4 is cyclic, so its center is the whole group)",
            group=str(group), center=_labels(group, center),
        ))
    else:
        reports.append(_report(
            f"{prefix}.iv",
            center == {group.identity, central},
            {"group": str(group), "center": _labels(group, center)},
            _labels(group, center),
        ))
    return reports


def _dihedral_items(group: FiniteGroup) -> list[ClaimReport]:
    m = group.parameter
    r = group.rotation_order
    e = group.identity
    rotations = frozenset(GroupElement(i, 0) for i in range(r))
    reflections = frozenset(GroupElement(i, 1) for i in range(r))
    rot_sub = group.cyclic_subgroup(GroupElement(1, 0))
    reports = [_report(
        "Lemma2.3.i",
        rot_sub == rotations,
        {"group": str(group), "rotation_subgroup": len(rot_sub)},
        _labels(group, rot_sub ^ rotations)[:1],
    )]

    outside = frozenset(group.element_list) - rot_sub
    bad = _first_failure(sorted(outside), lambda s: group.element_order(s) == 2)
    reports.append(_report(
        "Lemma2.3.ii",
        outside == reflections and bad is None,
        {"group": str(group), "reflections": len(outside)},
        bad and group.label(bad),
    ))

    center = group.center()
    if m < 2:
        reports.append(_not_applicable(
            "Lemma2.3.iii", "m >= 2 (D_4 is the Klein group, which is abelian)",
            group=str(group), center=_labels(group, center),
        ))
    else:
        reports.append(_report(
            "Lemma2.3.iii",
            center == {e, GroupElement(m, 0)},
            {"group": str(group), "center": _labels(group, center)},
            _labels(group, center),
        ))

    # i = 0 is excluded: the identity is centralised by everything
    non_central = [GroupElement(i, 0) for i in range(1, r) if i != m]
    bad = _first_failure(non_central, lambda s: group.centralizer(s) == rot_sub)
    reports.append(_report(
        "Lemma2.3.iv",
        bad is None,
        {"group": str(group), "rotations_checked": len(non_central), "centralizer_size": len(rot_sub)},
        bad and group.label(bad),
    ))

    def reflection_ok(s):
        i = s.rotation_index
        expected = {e, s, GroupElement(m % r, 0), GroupElement((i + m) % r, 1)}
        cent = group.centralizer(s)
        return cent == expected and len(cent) == 4

    bad = _first_failure(sorted(reflections), reflection_ok)
    reports.append(_report(
        "Lemma2.3.v",
        bad is None,
        {"group": str(group), "reflections_checked": len(reflections), "centralizer_size": 4},
        bad and group.label(bad),
    ))
    return reports


def verify_lemmas(group: FiniteGroup) -> list[ClaimReport]:
    if group.family is Family.CYCLIC:
        return [_not_applicable("Lemmas", "group is dihedral or dicyclic", group=str(group))]
    if group.family is Family.DIHEDRAL:
        return _dihedral_items(group)
    reports = []
    if group.is_generalized_quaternion:
        reports += _dicyclic_items(group, "Lemma2.1")
    return reports + _dicyclic_items(group, "Lemma2.2")


# -- theorems ----------------------------------------------------------------


def _iso_report(claim: str, g1, g2, node_budget: int, expect_iso: bool) -> ClaimReport:
    try:
        outcome = find_isomorphism(g1, g2, node_budget)
    except SearchBudgetExceeded as exc:
        return ClaimReport(claim, Status.UNDECIDED, {"nodes": exc.nodes, "node_budget": node_budget})
    if outcome.is_isomorphic:
        sound = check_witness(g1, g2, outcome.witness)
        return _report(
            claim, expect_iso and sound,
            {"result": "witness", "witness_checked": sound, "nodes": outcome.nodes},
            "witness found for graphs claimed non-isomorphic" if sound else "unsound witness",
        )
    evidence = {"result": "non_isomorphic", "certificate": outcome.certificate.value, "detail": outcome.detail}
    return _report(claim, not expect_iso, evidence, outcome.to_json_obj())


def _structure_report(claim: str, graph, which: G.Structure, parameter: int) -> ClaimReport:
    expr = G.structure_expr_for(which, parameter)
    built = G.evaluate(expr)
    same = set(built.vertices) == set(graph.vertices) and G.are_edge_identical(graph, built)
    missing = sorted(set(map(tuple, map(sorted, graph.edge_set ^ built.edge_set))))[:1] if not same else None
    return _report(claim, same, {"structure": G.render_expr(expr), "edges": graph.edge_count}, missing)


def verify_theorem1(n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> list[ClaimReport]:
    if n < 1:
        raise ValueError("n must be >= 1")
    q = generalized_quaternion(n)
    d = dihedral(q.parameter)
    pow_q = G.power_graph(q)
    com_d = G.commuting_graph(d)
    prefix = f"Theorem1.n={n}"

    reports = [
        _structure_report(f"{prefix}.structure_pow", pow_q, G.Structure.POW_GEN_QUATERNION, n),
        _structure_report(f"{prefix}.structure_com", com_d, G.Structure.COM_DIHEDRAL, q.parameter),
    ]
    f = explicit_paper_map(q, d)
    mapped = check_witness(pow_q, com_d, f)
    evidence = {"groups": [str(q), str(d)], "map": "h^i*x^j -> a^i*b^j"}
    if n == 1:
        evidence["degenerate"] = "Q_4 is cyclic and D_4 is abelian; both graphs are K_4"
    bad = None
    if not mapped:
        bad = next(u for u in pow_q.vertices if {f[w] for w in pow_q.neighbors(u)} != com_d.neighbors(f[u]))
    reports.append(_report(f"{prefix}.explicit_map", mapped, evidence, bad))
    reports.append(_iso_report(f"{prefix}.iso_search", pow_q, com_d, node_budget, expect_iso=True))
    return reports


def verify_theorem2(m: int, node_budget: int = DEFAULT_NODE_BUDGET) -> list[ClaimReport]:
    prefix = f"Theorem2.m={m}"
    if m < 2:
        return [_not_applicable(prefix, "m >= 2", m=m)]
    q, d = dicyclic(m), dihedral(m)
    pow_q = G.power_graph(q)
    epow_q = G.enhanced_power_graph(q)
    com_d = G.commuting_graph(d)
    expected = G.dihedral_commuting_edge_count(m)
    odd = has_odd_prime_factor(m)

    reports = [_report(
        f"{prefix}.a_edge_count",
        com_d.edge_count == expected,
        {"group": str(d), "edges": com_d.edge_count, "formula": "m(2m-1)+5m", "expected": expected},
        com_d.edge_count,
    )]
    reports.append(_structure_report(f"{prefix}.b_structure_epow", epow_q, G.Structure.EPOW_DICYCLIC, m))
    reports.append(_structure_report(f"{prefix}.b_structure_com", com_d, G.Structure.COM_DIHEDRAL, m))
    reports.append(_structure_report(f"{prefix}.b_structure_pow", pow_q, G.Structure.POW_DICYCLIC, m))

    mapped = check_witness(epow_q, com_d, explicit_paper_map(q, d))
    reports.append(_report(f"{prefix}.c_explicit_map", mapped, {"groups": [str(q), str(d)]}, "map not edge-preserving"))
    reports.append(_iso_report(f"{prefix}.c_iso_search", epow_q, com_d, node_budget, expect_iso=True))

    if odd:
        deficit = pow_q.edge_count < expected
        iso = _iso_report(f"{prefix}.d_pow_not_iso", pow_q, com_d, node_budget, expect_iso=False)
        if iso.status is Status.UNDECIDED:
            reports.append(iso)
        else:
            evidence = {**iso.evidence, "pow_edges": pow_q.edge_count, "com_edges": com_d.edge_count}
            ok = deficit and iso.status is Status.VERIFIED
            reports.append(_report(f"{prefix}.d_pow_not_iso", ok, evidence, [pow_q.edge_count, expected]))
    else:
        reports.append(_not_applicable(
            f"{prefix}.d_pow_not_iso", "an odd prime divides m",
            pow_edges=pow_q.edge_count, com_edges=com_d.edge_count,
        ))

    if is_power_of_two(m):
        same = G.are_edge_identical(pow_q, epow_q)
        reports.append(_report(
            f"{prefix}.e_pow_eq_epow", same,
            {"group": str(q), "reduces_to": f"Theorem1.n={m.bit_length()}"},
            "Pow and EPow differ",
        ))
    else:
        reports.append(_not_applicable(f"{prefix}.e_pow_eq_epow", "m is a power of 2"))
    return reports


# -- remarks -----------------------------------------------------------------


def verify_remarks(group: FiniteGroup) -> list[ClaimReport]:
    pow_g = G.power_graph(group)
    epow_g = G.enhanced_power_graph(group)
    com_g = G.commuting_graph(group)
    pow_eq_epow = G.are_edge_identical(pow_g, epow_g)
    epow_eq_com = G.are_edge_identical(epow_g, com_g)
    no_pq = not group.has_cyclic_pq_subgroup()
    no_pp = not group.has_elementary_p_squared_subgroup()
    facts = {"group": str(group), "pow_eq_epow": pow_eq_epow, "epow_eq_com": epow_eq_com}
    edges = [pow_g.edge_count, epow_g.edge_count, com_g.edge_count]

    reports = [
        _report(
            "Intro.containment",
            G.is_edge_subset(pow_g, epow_g) and G.is_edge_subset(epow_g, com_g),
            {"group": str(group), "edges_pow_epow_com": edges},
            edges,
        ),
        _report(
            "Remark1.pow_eq_epow_iff_no_CpxCq",
            pow_eq_epow == no_pq,
            {**facts, "no_cyclic_pq_subgroup": no_pq},
            {"pow_eq_epow": pow_eq_epow, "no_cyclic_pq_subgroup": no_pq},
        ),
        _report(
            "Remark1.epow_eq_com_iff_no_CpxCp",
            epow_eq_com == no_pp,
            {**facts, "no_elementary_p_squared_subgroup": no_pp},
            {"epow_eq_com": epow_eq_com, "no_elementary_p_squared_subgroup": no_pp},
        ),
    ]

    m = group.parameter
    if group.family is Family.CYCLIC:
        complete = com_g.edge_count == G.complete_edge_count(group.order)
        reports.append(_report("Cyclic.epow_eq_com_complete", epow_eq_com and complete, facts, edges))
    elif group.family is Family.DICYCLIC:
        claim = "Remark1.gen_quaternion.pow_eq_epow_eq_com"
        if group.is_generalized_quaternion:
            reports.append(_report(claim, pow_eq_epow and epow_eq_com, facts, facts))
        else:
            reports.append(_not_applicable(claim, "order is a power of 2", **facts))
        claim = "Remark2.dicyclic.pow_ne_epow_eq_com"
        if has_odd_prime_factor(m):
            reports.append(_report(claim, not pow_eq_epow and epow_eq_com, facts, facts))
        else:
            reports.append(_not_applicable(claim, "an odd prime divides m", **facts))
    else:
        # Remark 1 and Remark 2 disagree on Pow(D) vs EPow(D); each is scoped
        # to the groups its argument covers and the computed truth is recorded.
        claim = "Remark1.dihedral.pow_eq_epow_ne_com"
        if is_power_of_two(m):
            reports.append(_report(claim, pow_eq_epow and not epow_eq_com, facts, facts))
        else:
            reports.append(_not_applicable(claim, "order is a power of 2", **facts))
        claim = "Remark2.dihedral.pow_ne_epow_ne_com"
        if has_odd_prime_factor(m):
            reports.append(_report(claim, not pow_eq_epow and not epow_eq_com, facts, facts))
        else:
            reports.append(_not_applicable(claim, "an odd prime divides m", **facts))
    return reports


# -- survey ------------------------------------------------------------------


@dataclass
class SurveyRow:
    kind: str
    parameter: int
    reports: list[ClaimReport]
    seconds: float = 0.0

    @property
    def status(self) -> Status:
        statuses = {r.status for r in self.reports}
        for s in (Status.REFUTED, Status.UNDECIDED, Status.VERIFIED):
            if s in statuses:
                return s
        return Status.NOT_APPLICABLE

    def to_obj(self, timings: bool = False) -> dict:
        obj = {
            "kind": self.kind,
            "parameter": self.parameter,
            "status": self.status.value,
            "claims": [r.to_obj() for r in self.reports],
        }
        if timings:
            obj["seconds"] = round(self.seconds, 4)
        return obj


def survey(n_max: int, m_max: int, node_budget: int = DEFAULT_NODE_BUDGET) -> list[SurveyRow]:
    """Theorem 1 rows for n = 1..n_max, Theorem 2 rows for m = 1..m_max.

    Each row also carries the remark checks for the two groups involved.
    """
    if n_max < 1 or m_max < 1:
        raise ValueError("survey bounds must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        q = generalized_quaternion(n)
        reports = verify_theorem1(n, node_budget)
        reports += verify_remarks(q) + verify_remarks(dihedral(q.parameter))
        rows.append(SurveyRow("theorem1", n, reports, time.perf_counter() - start))
    for m in range(1, m_max + 1):
        start = time.perf_counter()
        reports = verify_theorem2(m, node_budget)
        reports += verify_remarks(dicyclic(m)) + verify_remarks(dihedral(m))
        rows.append(SurveyRow("theorem2", m, reports, time.perf_counter() - start))
    return rows


def overall_status(reports) -> Status:
    statuses = {r.status for r in reports}
    if Status.REFUTED in statuses:
        return Status.REFUTED
    if Status.UNDECIDED in statuses:
        return Status.UNDECIDED
    return Status.VERIFIED


def reports_to_json(reports: list[ClaimReport]) -> str:
    return json.dumps([r.to_obj() for r in reports], sort_keys=True, indent=1) + "\n"


def survey_to_json(rows: list[SurveyRow], timings: bool = False) -> str:
    return json.dumps([row.to_obj(timings) for row in rows], sort_keys=True, indent=1) + "\n"
