"""Mechanical checks of the duplication results on concrete instances.

Each ``check_*`` function takes an :class:`Instance` and returns a
:class:`Verdict`. Hypotheses and conclusions are evaluated independently
(graph statements by building both graphs, never through the ring-level
coincidence criterion), and a verdict is consistent when the statement
holds on the instance: for an implication ``not hypotheses or
conclusion``, for a biconditional agreement of both sides.

A checker whose standing hypotheses exclude the instance returns a skipped
verdict; that is reported separately from consistent/inconsistent.

Conditions of the form ``x^(n_x - 1) y^(n_y - 1) = 0`` quantify over the
nonzero zero divisors: with ``x = 0`` the exponent ``n_0 - 1`` is zero and
the condition would fail in every ring with a unit.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from zdlab.amalgam import build_amalgamation, componentwise_nilradical, t_partition
from zdlab.idealalg import (
    annihilator_of_set,
    coincidence_criterion,
    ideal_generate,
    is_ideal,
    nilradical,
    nonzero_zero_divisors,
    zero_divisor_mask,
    zero_divisor_set,
)
from zdlab.ringkernel import (
    DEFAULT_SIZE_CAP,
    SizeCapError,
    is_integral_domain,
    is_z2xz2,
    pow_trajectory,
)
from zdlab.ringspec import (
    IdealSpecError,
    InfiniteRingError,
    SpecSyntaxError,
    parse_ideal_spec,
    ring_from_spec,
)
from zdlab.zdgraph import (
    classic_graph,
    diameter,
    extended_graph,
    extra_edges,
    girth,
    graphs_equal,
    has_condition_a,
    is_complete,
)

QUANTIFIER_NOTE = "x, y range over the nonzero zero divisors"


class Instance:
    """A ring R, an ideal I of R, and lazily built derived objects."""

    def __init__(self, ring, ideal, spec=None, size_cap=DEFAULT_SIZE_CAP):
        if ideal.ring is not ring:
            raise ValueError("ideal belongs to a different ring")
        self.ring = ring
        self.ideal = ideal
        self.spec = spec
        self.size_cap = size_cap

    @classmethod
    def from_specs(cls, ring_text, ideal_text, size_cap=DEFAULT_SIZE_CAP):
        ring = ring_from_spec(ring_text, size_cap=size_cap)
        ideal = ideal_generate(ring, parse_ideal_spec(ideal_text, ring))
        inst = cls(ring, ideal, f"{ring_text.strip()} ; {ideal_text.strip()}", size_cap)
        if size_cap is not None and ring.size * len(ideal) > size_cap:
            raise SizeCapError(ring.size * len(ideal), size_cap)
        return inst

    @cached_property
    def amalgam(self):
        return build_amalgamation(self.ring, self.ideal, size_cap=self.size_cap)

    @cached_property
    def gamma_r(self):
        return classic_graph(self.ring)

    @cached_property
    def gammabar_r(self):
        return extended_graph(self.ring)

    @cached_property
    def gamma_s(self):
        return classic_graph(self.amalgam)

    @cached_property
    def gammabar_s(self):
        return extended_graph(self.amalgam)

    @cached_property
    def nil_r(self):
        return nilradical(self.ring)

    @cached_property
    def zd_mask_r(self):
        return zero_divisor_mask(self.ring)

    @property
    def ideal_is_zero(self):
        return self.ideal.is_zero

    def ideal_in_zero_divisors(self):
        return bool(self.zd_mask_r[list(self.ideal.elements)].all())

    def ideal_in_nil(self):
        return self.ideal.issubset(self.nil_r)


@dataclass
class Verdict:
    statement_id: str
    hypotheses_hold: bool
    conclusion_holds: bool | None
    consistent: bool
    skipped: str | None = None
    witnesses: dict = field(default_factory=dict)
    note: str | None = None

    def to_dict(self):
        out = {
            "statement_id": self.statement_id,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "consistent": self.consistent,
            "skipped": self.skipped,
            "witnesses": _jsonable(self.witnesses),
        }
        if self.note:
            out["note"] = self.note
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _skip(statement_id, reason, **witnesses):
    return Verdict(statement_id, False, None, True, skipped=reason, witnesses=witnesses)


def _implication(statement_id, hyp, concl, **kw):
    return Verdict(statement_id, hyp, concl, (not hyp) or concl, **kw)


def _iff(statement_id, left, right, **kw):
    witnesses = kw.pop("witnesses", {})
    witnesses = {"left": left, "right": right, **witnesses}
    return Verdict(statement_id, True, left == right, left == right, witnesses=witnesses, **kw)


def _first_extra_edge(inst, sub, sup):
    extra = extra_edges(sub, sup)
    if not extra:
        return None
    u, v = extra[0]
    return {"pair": sup.ring.labels((u, v)), "exponents": list(sup.witness(u, v))}


def _first_non_edge(g):
    rows, cols = np.nonzero(~g.adjacency)
    for i, j in zip(rows, cols):
        if i < j:
            return g.ring.labels((g.vertices[i], g.vertices[j]))
    return None


def top_powers_vanish(ring, elements):
    """``x^(n_x - 1) y^(n_y - 1) = 0`` for all ``x, y`` in ``elements``
    (all nilpotent and nonzero); returns ``(holds, offending pair or None)``."""
    tops = {}
    for x in elements:
        traj = pow_trajectory(ring, x)
        if not traj.nilpotent:
            return False, (x, x)
        tops.setdefault(traj.powers[-1], x)
    values = np.asarray(sorted(tops), dtype=np.int64)
    for t in values:
        ok = ring.zero_product_mask(int(t))[values]
        if not ok.all():
            s = int(values[np.argmin(ok)])
            return False, (tops[int(t)], tops[s])
    return True, None


def complete_condition_r(inst):
    """Z(R) = Nil(R), I in Z(R), and the top-power condition on Z(R)*."""
    R = inst.ring
    z_eq_nil = bool(np.array_equal(inst.zd_mask_r, inst.nil_r.mask))
    i_in_z = inst.ideal_in_zero_divisors()
    tops = z_eq_nil and top_powers_vanish(R, nonzero_zero_divisors(R))[0]
    return {"Z_eq_Nil": z_eq_nil, "I_in_Z": i_in_z, "top_powers_vanish": tops}


def check_lemma_coincide(inst):
    sid = "lemma.coincide"
    R, I, nil = inst.ring, inst.ideal, inst.nil_r
    i_in_z = inst.ideal_in_zero_divisors()
    graphs_coincide = graphs_equal(inst.gamma_r, inst.gammabar_r)

    checked = 0
    failure = None
    non_nil_zd = np.flatnonzero(inst.zd_mask_r & ~nil.mask)
    non_nil_ideal = [i for i in I if i not in nil]
    for r in non_nil_zd:
        r = int(r)
        ann_r = R.zero_product_mask(r)
        for i in non_nil_ideal:
            if R.add(r, i) in nil:
                checked += 1
                if failure is None and not np.all(R.zero_product_mask(i)[ann_r]):
                    failure = R.labels((r, i))
    conclusion = failure is None
    witnesses = {"I_in_Z": i_in_z, "graphs_coincide_R": graphs_coincide, "pairs_checked": checked}
    if failure:
        witnesses["violating_pair"] = failure
    if not (i_in_z and graphs_coincide):
        # a hypothesis fails: record whether the conclusion holds anyway
        witnesses["conclusion_without_hypotheses"] = conclusion
        return _skip(sid, "hypotheses: I in Z(R) and Gamma(R) = Gammabar(R)", **witnesses)
    return _implication(sid, True, conclusion, witnesses=witnesses)


def check_coincidence_theorem(inst):
    sid = "theorem.coincidence"
    if inst.ideal_in_nil():
        return _skip(sid, "standing hypothesis: I \\ Nil(R) nonempty")
    cond1 = graphs_equal(inst.gamma_r, inst.gammabar_r)
    ann_nil = annihilator_of_set(inst.ring, inst.nil_r.elements)
    cond2 = inst.ideal.issubset(ann_nil)
    coincide = graphs_equal(inst.gamma_s, inst.gammabar_s)
    witnesses = {"graphs_coincide_R": cond1, "I_in_Ann_Nil": cond2, "graphs_coincide_S": coincide}
    if not coincide:
        witnesses["extra_edge_S"] = _first_extra_edge(inst, inst.gamma_s, inst.gammabar_s)
    return _iff(sid, coincide, cond1 and cond2, witnesses=witnesses)


def check_coincide_nil_theorem(inst):
    sid = "theorem.coincide_nil"
    if not inst.ideal_in_nil():
        return _skip(sid, "standing hypothesis: I in Nil(R)")
    left = graphs_equal(inst.gamma_s, inst.gammabar_s)
    right = graphs_equal(inst.gamma_r, inst.gammabar_r)
    witnesses = {}
    if not left:
        witnesses["extra_edge_S"] = _first_extra_edge(inst, inst.gamma_s, inst.gammabar_s)
    if not right:
        witnesses["extra_edge_R"] = _first_extra_edge(inst, inst.gamma_r, inst.gammabar_r)
    return _iff(sid, left, right, witnesses=witnesses)


def check_lemma_complete(inst):
    sid = "lemma.complete"
    if inst.ideal_is_zero:
        return _skip(sid, "standing hypothesis: I nonzero")
    S = inst.amalgam
    z_s = zero_divisor_mask(S)
    nil_s = nilradical(S).mask
    s_eq = bool(np.array_equal(z_s, nil_s))
    tops_s = s_eq and top_powers_vanish(S, nonzero_zero_divisors(S))[0]
    left = s_eq and tops_s
    cond = complete_condition_r(inst)
    right = all(cond.values())
    witnesses = {"Z_eq_Nil_S": s_eq, "top_powers_vanish_S": tops_s, **cond}
    return _iff(sid, left, right, witnesses=witnesses, note=QUANTIFIER_NOTE)


def check_completeness_theorem(inst):
    sid = "theorem.complete"
    if inst.ideal_is_zero:
        return _skip(sid, "standing hypothesis: I nonzero")
    if is_integral_domain(inst.ring):
        return _skip(sid, "standing hypothesis: R not an integral domain")
    complete = is_complete(inst.gammabar_s)
    cond = complete_condition_r(inst)
    witnesses = {**cond, "vertices_S": len(inst.gammabar_s), "edges_S": inst.gammabar_s.edge_count}
    if not complete:
        witnesses["non_adjacent_pair"] = _first_non_edge(inst.gammabar_s)
    return _iff(sid, complete, all(cond.values()), witnesses=witnesses, note=QUANTIFIER_NOTE)


def check_completeness_corollary(inst):
    sid = "corollary.complete"
    if inst.ideal_is_zero:
        return _skip(sid, "standing hypothesis: I nonzero")
    if is_integral_domain(inst.ring):
        return _skip(sid, "standing hypothesis: R not an integral domain")
    if is_z2xz2(inst.ring):
        return _skip(sid, "standing hypothesis: R not isomorphic to Z2 x Z2")
    left = is_complete(inst.gammabar_s)
    r_complete = is_complete(inst.gammabar_r)
    i_in_z = inst.ideal_in_zero_divisors()
    witnesses = {"Gammabar_R_complete": r_complete, "I_in_Z": i_in_z}
    return _iff(sid, left, r_complete and i_in_z, witnesses=witnesses)


def check_diameter3_lift(inst):
    sid = "proposition.diameter3"
    d_r = diameter(inst.gammabar_r)
    d_s = diameter(inst.gammabar_s)
    witnesses = {"diam_R": d_r, "diam_S": d_s}
    if d_s == 3 and d_r != 3:
        witnesses["converse_fails_here"] = True
    return _implication(sid, d_r == 3, d_s == 3, witnesses=witnesses)


def check_diameter2(inst):
    sid = "proposition.diameter2"
    R = inst.ring
    if not inst.ideal_in_zero_divisors():
        return _skip(sid, "standing hypothesis: I in Z(R)")
    if not is_ideal(R, sorted(zero_divisor_set(R))):
        return _skip(sid, "standing hypothesis: Z(R) is an ideal")
    d_r = diameter(inst.gammabar_r)
    cond_a = has_condition_a(inst.gammabar_r)
    d_s = diameter(inst.gammabar_s)
    witnesses = {"diam_R": d_r, "condition_A_R": cond_a, "diam_S": d_s}
    return _implication(sid, d_r == 2 and cond_a, d_s == 2, witnesses=witnesses)


def expected_girth(inst):
    if not is_integral_domain(inst.ring):
        return 3
    return 4 if len(inst.ideal) >= 3 else math.inf


def check_girth_classification(inst):
    sid = "theorem.girth"
    if inst.ideal_is_zero:
        return _skip(sid, "standing hypothesis: I nonzero")
    expected = expected_girth(inst)
    computed = girth(inst.gammabar_s)
    witnesses = {"domain": is_integral_domain(inst.ring), "ideal_size": len(inst.ideal),
                 "expected": expected, "girth_S": computed}
    return _implication(sid, True, computed == expected, witnesses=witnesses)


def check_partition_identity(inst):
    sid = "identity.t_partition"
    parts = t_partition(inst.amalgam)
    brute = zero_divisor_set(inst.amalgam)
    union = parts.union
    witnesses = {**parts.sizes(), "union": len(union), "Z_S": len(brute)}
    if union != brute:
        witnesses["symmetric_difference"] = inst.amalgam.labels(sorted(union ^ brute))
    return _implication(sid, True, union == brute, witnesses=witnesses)


def check_nilradical_identity(inst):
    sid = "identity.nilradical"
    by_powers = frozenset(nilradical(inst.amalgam).elements)
    by_components = componentwise_nilradical(inst.amalgam)
    return _implication(sid, True, by_powers == by_components,
                        witnesses={"Nil_S": len(by_powers)})


def check_diameter_bound(inst):
    sid = "bound.diameter"
    out = {}
    ok = True
    for name, g in (("R", inst.gammabar_r), ("S", inst.gammabar_s)):
        d = diameter(g)
        out[f"diam_{name}"] = d
        if len(g) >= 2:
            ok = ok and d <= 3
    return _implication(sid, True, ok, witnesses=out)


def check_criterion_oracle(inst):
    sid = "oracle.coincidence_criterion"
    out = {}
    ok = True
    for name, ring, g, gb in (("R", inst.ring, inst.gamma_r, inst.gammabar_r),
                              ("S", inst.amalgam, inst.gamma_s, inst.gammabar_s)):
        crit = coincidence_criterion(ring)
        direct = graphs_equal(g, gb)
        out[f"criterion_{name}"] = crit
        out[f"graphs_equal_{name}"] = direct
        ok = ok and crit == direct
    return _implication(sid, True, ok, witnesses=out)


CHECKERS = (
    check_partition_identity,
    check_nilradical_identity,
    check_criterion_oracle,
    check_diameter_bound,
    check_lemma_coincide,
    check_coincidence_theorem,
    check_coincide_nil_theorem,
    check_lemma_complete,
    check_completeness_theorem,
    check_completeness_corollary,
    check_diameter3_lift,
    check_diameter2,
    check_girth_classification,
)


def check_instance(inst):
    return [check(inst) for check in CHECKERS]


@dataclass(frozen=True)
class CorpusEntry:
    line: int
    text: str


def parse_corpus(text):
    """Non-blank, non-comment lines of a corpus file."""
    entries = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append(CorpusEntry(k, line))
    return entries


def run_entry(entry, size_cap=DEFAULT_SIZE_CAP):
    record = {"line": entry.line, "spec": entry.text}
    try:
        if entry.text.count(";") != 1:
            raise SpecSyntaxError(entry.text, len(entry.text), {";"},
                                  "expected exactly one ';' between ring and ideal")
        ring_text, ideal_text = entry.text.split(";")
        inst = Instance.from_specs(ring_text, ideal_text, size_cap=size_cap)
    except (SpecSyntaxError, InfiniteRingError, IdealSpecError) as exc:
        record.update(status="error:parse", error=str(exc))
        return record
    except SizeCapError as exc:
        record.update(status="skipped:size-cap", error=str(exc))
        return record
    record["status"] = "ok"
    record["sizes"] = {"R": inst.ring.size, "I": len(inst.ideal), "S": inst.amalgam.size}
    record["verdicts"] = [v.to_dict() for v in check_instance(inst)]
    return record


def run_corpus(corpus, size_cap=DEFAULT_SIZE_CAP, jobs=1):
    """Run every checker on every corpus line and aggregate a report.

    ``corpus`` is corpus text or a list of :class:`CorpusEntry`. Results
    are ordered by corpus position whatever ``jobs`` is.
    """
    entries = parse_corpus(corpus) if isinstance(corpus, str) else list(corpus)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_entry, entries, [size_cap] * len(entries)))
    else:
        records = [run_entry(e, size_cap) for e in entries]

    summary = {"instances": len(records), "checked": 0, "skipped": 0, "inconsistent": 0,
               "parse_errors": 0, "size_capped": 0}
    for rec in records:
        if rec["status"] == "error:parse":
            summary["parse_errors"] += 1
            continue
        if rec["status"] == "skipped:size-cap":
            summary["size_capped"] += 1
            continue
        for v in rec["verdicts"]:
            if v["skipped"]:
                summary["skipped"] += 1
            else:
                summary["checked"] += 1
            if not v["consistent"]:
                summary["inconsistent"] += 1
    return {"instances": records, "summary": summary}


def report_exit_code(report):
    s = report["summary"]
    if s["inconsistent"]:
        return 1
    if s["parse_errors"]:
        return 2
    return 0
