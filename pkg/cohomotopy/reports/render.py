# cohomotopy\cohomotopy\reports\render.py

from typing import List

from ..cochain import ValidationReport
from ..engines import ParametricGroup, SESReport


def _group(g) -> str:
    return "undetermined" if g is None else g.render()


def render_validation(report: ValidationReport) -> str:
    if report.ok:
        return f"{report.datum}: all relations hold ({len(report.checked)} checks, {len(report.skipped)} skipped)"
    lines = [f"{report.datum}: {len(report.violations)} violation(s)"]
    for v in report.violations:
        where = "" if v.degree is None else f" in degree {v.degree}"
        witness = "" if v.witness is None else f", witness {list(v.witness)}"
        lines.append(f"  [{v.code}] {v.relation}{where}{witness}: {v.message}")
    return "\n".join(lines)


def render_parametric(name: str, group: ParametricGroup) -> str:
    if group.is_determined:
        return f"{name} = {group.group.render()}"
    lines = [f"{name}:"]
    for branch in group.branches:
        label = ", ".join(f"{k}={v}" for k, v in sorted(branch.assumptions.items())) or "always"
        shown = _group(branch.group)
        if branch.group is None and branch.bounds:
            shown += f" (between {' and '.join(b.render() for b in branch.bounds)})"
        lines.append(f"  [{label}] {shown}  {branch.status.value}")
    return "\n".join(lines)


def render_report(report: SESReport) -> str:
    lines: List[str] = [report.name]
    for p in report.parameters:
        value = "?" if p.value is None else p.value
        lines.append(f"  {p.name} = {value} ({p.provenance.value}{': ' + p.reason if p.reason else ''})")
    if not report.branches:
        lines.append("  no branches")
    for branch in report.branches:
        lines.append(f"  [{branch.label()}] 0 -> {_group(branch.left)} -> {_group(branch.middle)} -> "
                     f"{_group(branch.right)} -> 0  {branch.verdict.value}")
        if branch.middle is None and branch.bounds:
            lines.append(f"    bounds: {', '.join(b.render() for b in branch.bounds)}")
        if branch.candidates:
            lines.append(f"    candidates: {', '.join(c.render() for c in branch.candidates)}")
        if branch.note:
            lines.append(f"    note: {branch.note}")
    for key, value in sorted(report.checks.items()):
        lines.append(f"  check {key}: {value}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)
