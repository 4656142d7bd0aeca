"""Task execution: dispatch parsed tasks to the checkers and collect reports.

Tasks run independently; with a worker pool they are scheduled in waves
that respect construction dependencies, and the report order always
follows the document order.  A task whose preconditions fail (bad
hypotheses, non-bijective structure maps, missing dependencies) is
reported as "inapplicable", which counts as non-passing.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import (
    InapplicableError,
    NotInvertibleError,
    PreconditionError,
    ShapeError,
    SpecFileError,
)
from .linmap import LinearMap
from .modules import (
    check_comodule,
    check_module,
    tensor_comodules,
    tensor_modules,
)
from .quasitri import (
    check_cqt,
    check_cqt_tensor_coincide,
    check_qt,
    check_qt_tensor_coincide,
    check_r_invariance,
    check_sigma_invariance,
    cqt_B,
    cqt_braiding,
    qt_B,
    qt_braiding,
    yd_from_comodule,
    yd_from_module,
)
from .reports import CheckReport, compare_maps
from .specfile import SpecDocument, Task
from .structures import (
    ClassicalAlgebra,
    ClassicalBialgebra,
    ClassicalCoalgebra,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
    twist_algebra,
    twist_bialgebra,
    twist_coalgebra,
)
from .yd import (
    ClassicalYD,
    b_from_c,
    braiding_B,
    braiding_c,
    check_braid_implies_hybe,
    check_braid_relation_for,
    check_classical_yd,
    check_hexagons,
    check_hybe_for,
    check_pentagon,
    hat_tensor,
    tilde_tensor,
    twist_yd,
    yd_suite,
)

INAPPLICABLE_ERRORS = (
    InapplicableError,
    PreconditionError,
    NotInvertibleError,
    ShapeError,
    ZeroDivisionError,
    KeyError,
)


@dataclass
class TaskResult:
    name: str
    kind: str
    status: str  # "pass" | "fail" | "inapplicable"
    report: CheckReport | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class ReportBundle:
    field_descriptor: str
    results: list

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def exit_code(self) -> int:
        return 0 if self.all_passed else 1


def _classicalize(obj, what):
    """Interpret a Hom-structure with identity map as a classical one."""
    alpha = obj.alpha
    if not alpha.is_identity():
        raise InapplicableError(f"{what} requires an identity structure map")
    if hasattr(obj, "mu") and hasattr(obj, "delta"):
        return ClassicalBialgebra(obj.mu, obj.delta)
    if hasattr(obj, "mu"):
        return ClassicalAlgebra(obj.mu)
    return ClassicalCoalgebra(obj.delta)


def _matrix_arg(field, raw, dim, what):
    rows = [[field.parse(x) if isinstance(x, str) else _bad(what) for x in row] for row in raw]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ShapeError(f"{what} must be a {dim}x{dim} matrix of scalar strings")
    return LinearMap.from_rows(field, (dim,), (dim,), rows)


def _bad(what):
    raise ShapeError(f"{what} entries must be scalar strings")


def _run_check(spec, ns, field):
    value = spec["check"]
    if value == "hom_algebra":
        target = ns[spec["target"]]
        return check_hom_algebra(target if not hasattr(target, "delta") else target.algebra)
    if value == "hom_coalgebra":
        target = ns[spec["target"]]
        return check_hom_coalgebra(target if not hasattr(target, "mu") else target.coalgebra)
    if value == "hom_bialgebra":
        return check_hom_bialgebra(ns[spec["target"]])
    if value == "module":
        target = ns[spec["target"]]
        return check_module(target.module if hasattr(target, "coact") else target)
    if value == "comodule":
        target = ns[spec["target"]]
        return check_comodule(target.comodule if hasattr(target, "act") else target)
    if value == "yd":
        target = ns[spec["target"]]
        return yd_suite(target)
    if value == "classical_yd":
        target = ns[spec["target"]]
        classical_base = _classicalize(target.over, "classical Yetter-Drinfeld check")
        if not target.alpha.is_identity():
            raise InapplicableError(
                "classical Yetter-Drinfeld check requires an identity carrier map"
            )
        return check_classical_yd(ClassicalYD(classical_base, target.act, target.coact))
    if value == "qt":
        return check_qt(ns[spec["target"]])
    if value == "r_invariance":
        return check_r_invariance(ns[spec["target"]])
    if value == "cqt":
        return check_cqt(ns[spec["target"]])
    if value == "sigma_invariance":
        return check_sigma_invariance(ns[spec["target"]])

    if value == "hybe":
        m, n, p = (ns[x] for x in spec["modules"])
        return check_hybe_for(m, n, p)
    if value == "braid_relation":
        m, n, p = (ns[x] for x in spec["modules"])
        return check_braid_relation_for(m, n, p)
    if value == "hexagons":
        m, n, p = (ns[x] for x in spec["modules"])
        return check_hexagons(m, n, p, spec.get("flavor", "hat"))
    if value == "pentagon":
        m, n, p, q = (ns[x] for x in spec["modules"])
        return check_pentagon(m, n, p, q, spec.get("flavor", "hat"))
    if value == "bridge":
        m, n = (ns[x] for x in spec["modules"])
        c = braiding_c(m, n)
        report = compare_maps(
            "bridge_b_equals_alpha_pair_after_c", braiding_B(m, n), b_from_c(c, m.alpha, n.alpha)
        )
        note = "c matrix invertible: " + ("yes" if c.is_invertible() else "no")
        return CheckReport.combine("bridge", [report]).with_notes(note)
    if value == "braid_implies_hybe":
        m, n, p = (ns[x] for x in spec["modules"])
        return check_braid_implies_hybe(
            braiding_c(m, n), braiding_c(m, p), braiding_c(n, p),
            m.alpha, n.alpha, p.alpha,
        )
    if value == "qt_hybe":
        m, n, p = (ns[x] for x in spec["modules"])
        r = ns[spec["r"]]
        from .yd import check_hybe

        return check_hybe(
            qt_B(m, n, r), qt_B(m, p, r), qt_B(n, p, r), m.alpha, n.alpha, p.alpha
        )
    if value == "qt_braiding_matches":
        m, n = (ns[x] for x in spec["modules"])
        r = ns[spec["r"]]
        reports = [
            compare_maps(
                "qt_braiding_equals_induced_c",
                qt_braiding(m, n, r),
                braiding_c(yd_from_module(m, r), yd_from_module(n, r)),
            ),
            compare_maps(
                "qt_b_equals_induced_b",
                qt_B(m, n, r),
                braiding_B(yd_from_module(m, r), yd_from_module(n, r)),
            ),
        ]
        return CheckReport.combine("qt_braiding_matches", reports)
    if value == "cqt_hybe":
        m, n, p = (ns[x] for x in spec["comodules"])
        s = ns[spec["sigma"]]
        from .yd import check_hybe

        return check_hybe(
            cqt_B(m, n, s), cqt_B(m, p, s), cqt_B(n, p, s), m.alpha, n.alpha, p.alpha
        )
    if value == "cqt_braiding_matches":
        m, n = (ns[x] for x in spec["comodules"])
        s = ns[spec["sigma"]]
        reports = [
            compare_maps(
                "cqt_braiding_equals_induced_c",
                cqt_braiding(m, n, s),
                braiding_c(yd_from_comodule(m, s), yd_from_comodule(n, s)),
            ),
            compare_maps(
                "cqt_b_equals_induced_b",
                cqt_B(m, n, s),
                braiding_B(yd_from_comodule(m, s), yd_from_comodule(n, s)),
            ),
        ]
        return CheckReport.combine("cqt_braiding_matches", reports)
    raise SpecFileError(f"unhandled check {value!r}")


def _run_twist(spec, ns, field):
    value = spec["twist"]
    source = ns[spec["source"]]
    if value == "yd":
        alpha_h = _matrix_arg(field, spec["alpha_h"], source.over.dim, "alpha_h")
        alpha_m = _matrix_arg(field, spec["alpha_m"], source.dim, "alpha_m")
        base = _classicalize(source.over, "Yetter-Drinfeld twisting")
        if not source.alpha.is_identity():
            raise InapplicableError("Yetter-Drinfeld twisting starts from a classical pair")
        out = twist_yd(ClassicalYD(base, source.act, source.coact), alpha_h, alpha_m)
        return out, yd_suite(out)
    alpha = _matrix_arg(field, spec["alpha"], source.dim, "alpha")
    classical = _classicalize(source, "twisting")
    if value == "algebra":
        out = twist_algebra(classical, alpha)
        return out, check_hom_algebra(out)
    if value == "coalgebra":
        out = twist_coalgebra(classical, alpha)
        return out, check_hom_coalgebra(out)
    out = twist_bialgebra(classical, alpha)
    return out, check_hom_bialgebra(out)


def _run_tensor(spec, ns):
    value = spec["tensor"]
    a, b = (ns[x] for x in spec["operands"])
    if value == "modules":
        out = tensor_modules(a, b)
        return out, check_module(out)
    if value == "comodules":
        out = tensor_comodules(a, b)
        return out, check_comodule(out)
    if value == "hat":
        out = hat_tensor(a, b)
    else:
        out = tilde_tensor(a, b)
    gate = out.over.alpha.is_invertible() and out.alpha.is_invertible()
    return out, yd_suite(out, gate=gate)


def _run_coincide(spec, ns):
    value = spec["coincide"]
    a, b = (ns[x] for x in spec["operands"])
    if value == "qt":
        return check_qt_tensor_coincide(a, b, ns[spec["r"]])
    return check_cqt_tensor_coincide(a, b, ns[spec["sigma"]])


def execute_task(task: Task, ns: dict, field) -> tuple[TaskResult, dict]:
    spec = task.spec
    registrations = {}
    try:
        if "check" in spec:
            report = _run_check(spec, ns, field)
        elif "twist" in spec:
            obj, report = _run_twist(spec, ns, field)
            if spec.get("result"):
                registrations[spec["result"]] = obj
        elif "tensor" in spec:
            obj, report = _run_tensor(spec, ns)
            if spec.get("result"):
                registrations[spec["result"]] = obj
        else:
            report = _run_coincide(spec, ns)
    except INAPPLICABLE_ERRORS as exc:
        detail = str(exc) if not isinstance(exc, KeyError) else f"missing dependency {exc}"
        return (
            TaskResult(task.name, task.kind, "inapplicable", None, f"inapplicable: {detail}"),
            registrations,
        )
    status = "pass" if report.passed else "fail"
    return TaskResult(task.name, task.kind, status, report), registrations


def run_tasks(doc: SpecDocument, parallel: int = 1, max_dim: int = 16) -> ReportBundle:
    """Execute every task in document order; constructions register their
    results for later tasks.  ``max_dim`` guards declared structure sizes."""
    for name, obj in doc.structures.items():
        dim = getattr(obj, "dim", None)
        if dim is None:
            dim = obj.over.dim
        if dim > max_dim:
            raise SpecFileError(
                f"structure {name!r} has dimension {dim}, "
                f"which exceeds the guard --max-dim={max_dim}"
            )
    ns = dict(doc.structures)
    results: list[TaskResult | None] = [None] * len(doc.tasks)
    if parallel <= 1:
        for i, task in enumerate(doc.tasks):
            results[i], registrations = execute_task(task, ns, doc.field)
            ns.update(registrations)
    else:
        pending = list(enumerate(doc.tasks))
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            while pending:
                wave, blocked = [], []
                for i, task in pending:
                    refs = _references(task.spec)
                    (wave if all(r in ns for r in refs) else blocked).append((i, task))
                if not wave:
                    # unresolvable names: report the remainder as inapplicable
                    for i, task in blocked:
                        results[i] = TaskResult(
                            task.name, task.kind, "inapplicable", None,
                            "inapplicable: unresolved dependency",
                        )
                    break
                futures = [
                    (i, pool.submit(execute_task, task, dict(ns), doc.field))
                    for i, task in wave
                ]
                for i, fut in futures:
                    results[i], registrations = fut.result()
                    ns.update(registrations)
                pending = blocked
    return ReportBundle(doc.field.descriptor, [r for r in results if r is not None])


def _references(spec) -> list[str]:
    refs = []
    for key in ("target", "source", "r", "sigma"):
        if isinstance(spec.get(key), str):
            refs.append(spec[key])
    for key in ("modules", "comodules", "operands"):
        if isinstance(spec.get(key), list):
            refs.extend(x for x in spec[key] if isinstance(x, str))
    return refs


# -- rendering ---------------------------------------------------------------

def bundle_to_json(bundle: ReportBundle, field) -> dict:
    tasks = []
    for r in bundle.results:
        entry = {"name": r.name, "kind": r.kind, "status": r.status}
        if r.reason:
            entry["reason"] = r.reason
        if r.report is not None:
            entry["law"] = r.report.law
            entry["notes"] = list(r.report.notes)
            entry["failures"] = [
                {
                    "law": f.law,
                    "index": list(f.index),
                    "lhs": [field.format(x) for x in f.lhs],
                    "rhs": [field.format(x) for x in f.rhs],
                }
                for f in r.report.failures
            ]
        tasks.append(entry)
    return {
        "field": bundle.field_descriptor,
        "all_passed": bundle.all_passed,
        "tasks": tasks,
    }


def bundle_to_table(bundle: ReportBundle) -> str:
    rows = [("task", "kind", "status", "detail")]
    for r in bundle.results:
        if r.status == "pass":
            detail = "all laws hold"
        elif r.status == "fail":
            first = r.report.failures[0]
            detail = (
                f"{len(r.report.failures)} failure(s); first: {first.law} "
                f"at {first.index}"
            )
        else:
            detail = r.reason or "inapplicable"
        rows.append((r.name, r.kind, r.status.upper(), detail))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = []
    for idx, row in enumerate(rows):
        lines.append(
            f"{row[0]:<{widths[0]}}  {row[1]:<{widths[1]}}  "
            f"{row[2]:<{widths[2]}}  {row[3]}"
        )
        if idx == 0:
            lines.append("-" * (sum(widths) + 6 + len(rows[0][3])))
    verdict = "ALL TASKS PASS" if bundle.all_passed else "TASKS FAILED"
    lines.append(verdict)
    return "\n".join(lines)
