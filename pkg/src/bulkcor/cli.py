"""Command line front end.

    bulkcor verify hopf HOPF
    bulkcor verify frobenius HOPF FROB
    bulkcor bulk HOPF FROB
    bulkcor partition HOPF FROB [--pims all|i,j,..]
    bulkcor classfn HOPF FROB [--genus0 r]
    bulkcor report HOPF FROB [--pims ..]

Every input file is parsed and checked against its schema before any
computation starts (exit 2 on violations).  Exit 1 when a hard check fails,
0 otherwise.  ``--threads`` (default ``$BULKCOR_THREADS`` or 1) sets the size
of the worker pool for the partition grid; reports do not depend on it.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import correlator as cor
from .frobenius import (FrobeniusError, FrobeniusObject, handle_element, partial_trace_identity,
                        verify_frobenius, verify_special)
from .hopf import HopfData, HopfError, is_factorizable, verify_hopf, verify_quasitriangular_ribbon_pivotal
from .io import DataError, load_frobenius, load_hopf, matrix_to_json, report_to_json
from .linalg import Matrix
from .rep import RepError, dual, hom_basis, pims
from .report import Check, Report
from .scalar import ScalarError, encode

EXIT_OK, EXIT_FAIL, EXIT_DATA = 0, 1, 2


@dataclass
class JobSpec:
    command: str
    inputs: list[str]
    options: dict = field(default_factory=dict)


@dataclass
class Outcome:
    report: Report
    lines: list[str]
    results: dict

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.report.ok else EXIT_FAIL


# formatting -----------------------------------------------------------------------------

def _plain(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return str(x)


def _plain_report(rep: Report) -> Report:
    return Report([Check(c.check_id, c.status, _plain(c.witness)) for c in rep.checks])


def _table(names: list[str], rows: list[list]) -> list[str]:
    cells = [[str(v) for v in r] for r in rows]
    width = max([len(n) for n in names] + [len(c) for r in cells for c in r])
    head = " " * width + "  " + "  ".join(n.rjust(width) for n in names)
    return [head] + [names[i].ljust(width) + "  " + "  ".join(c.rjust(width) for c in r)
                     for i, r in enumerate(cells)]


def _matrix_lines(m: Matrix) -> list[str]:
    return ["  " + "  ".join(str(x) for x in row) for row in m.to_rows()]


def _nonzero_lines(row: Matrix, dim: int, slots: int) -> list[str]:
    out = []
    for flat, x in enumerate(row.entries()):
        if x.is_zero():
            continue
        idx, rest = [], flat
        for _ in range(slots):
            rest, k = divmod(rest, dim)
            idx.append(k)
        out.append(f"  ({', '.join(f'b{k}' for k in reversed(idx))}) -> {x}")
    return out


# suites ---------------------------------------------------------------------------------

def _guard(rep: Report, check_id: str, fn):
    """Run fn; a correlator-level failure becomes a failed check instead of a crash."""
    try:
        return fn()
    except (cor.CorrelatorError, FrobeniusError, RepError) as exc:
        rep.add(check_id, False, str(exc))
        return None


def _is_unit_object(f: FrobeniusObject) -> bool:
    h = f.hopf
    return f.dim == 1 and all(f.object.act(i) == h.counit.select_columns([i]) for i in range(h.dim))


def suite_hopf(h: HopfData) -> Outcome:
    rep = verify_hopf(h)
    rep.extend(verify_quasitriangular_ribbon_pivotal(h))
    if h.r_summands:
        rep.add("factorizable", is_factorizable(h), "monodromy map H* -> H is singular")
    lines = [f"Hopf algebra {h.name}: dim {h.dim} over Q(zeta_{h.field_order})"]
    return Outcome(rep, lines, {"dim": h.dim, "field_order": h.field_order})


def suite_frobenius(f: FrobeniusObject) -> Outcome:
    rep = verify_frobenius(f)
    rep.extend(verify_special(f))
    special = verify_special(f).ok
    if special:
        for n in range(1, 5):
            rep.add(f"partial_trace_identity[{n}]", partial_trace_identity(f, n))
    _, unit_handle = handle_element(f)
    rep.add("handle_element_iff_special", unit_handle == special,
            f"handle element {'equals' if unit_handle else 'differs from'} the unit")
    lines = [f"Frobenius object {f.name}: dim {f.dim}, special {'yes' if special else 'no'}"]
    return Outcome(rep, lines, {"dim": f.dim, "special": special})


def suite_bulk(f: FrobeniusObject) -> Outcome:
    rep = Report()
    end = cor.end_object(f)
    lines = [f"dim end = {end.dim}"]
    results = {"dim_end": end.dim}
    b = _guard(rep, "cylinder_idempotent", lambda: cor.bulk_object(f, end))
    if b is None:
        return Outcome(rep, lines, results)
    rep.extend(cor.verify_bulk(b))
    rep.add("b2_on_bulk_by_diagram", cor.b2_defect(end, b.inclusion).is_zero())
    rep.add("bulk_equals_free_module_end", cor.free_module_internal_end(f, end).equals(b.subspace))
    hh = cor.hh0_check(f, b)
    rep.extend(hh)
    inv = hh["dim_bulk_invariants"].witness
    lines += [f"dim bulk = {b.dim}", f"dim bulk-invariants = {inv}"]
    results.update({"dim_bulk": b.dim, "dim_bulk_invariants": inv,
                    "dim_center_free_module_endomorphisms": hh["dim_center_free_module_endomorphisms"].witness})
    return Outcome(rep, lines, results)


def _select_pims(h: HopfData, spec: str):
    ps = pims(h)
    if spec == "all":
        return ps
    try:
        idx = [int(s) for s in spec.split(",") if s.strip()]
    except ValueError:
        raise DataError(f"--pims expects 'all' or comma separated indices, got {spec!r}") from None
    bad = [i for i in idx if not 0 <= i < len(ps)]
    if bad or not idx:
        raise DataError(f"--pims indices must lie in 0..{len(ps) - 1}")
    return [ps[i] for i in idx]


def suite_partition(f: FrobeniusObject, spec: str = "all", threads: int = 1) -> Outcome:
    rep = Report()
    ps = _select_pims(f.hopf, spec)
    mods = [p.module for p in ps]
    table = _guard(rep, "partition_table", lambda: cor.partition_table(f, mods, threads))
    if table is None:
        return Outcome(rep, [], {})
    rep.extend(table.report)
    lines = [f"Z-table for F = {f.name}"] + _table(table.names, table.matrix)
    results = {"pims": table.names, "table": table.matrix}
    if _is_unit_object(f):
        cartan = [[hom_basis(dual(p), q).dim for q in mods] for p in mods]
        same = cartan == table.matrix
        rep.add("cardy_equals_cartan", same, None if same else f"Cartan table {cartan}")
        lines.append(f"Cardy case: Z {'equals' if same else 'differs from'} the table dim hom(P^, Q)")
        results["cartan"] = cartan
    return Outcome(rep, lines, results)


def suite_modular(f: FrobeniusObject) -> Outcome:
    rep = Report()
    mods = [p.module for p in pims(f.hopf)]
    _guard(rep, "modular_invariance", lambda: rep.extend(cor.modular_invariance_check(f, mods)))
    return Outcome(rep, [], {})


def suite_classfn(f: FrobeniusObject, genus0: int | None = None) -> Outcome:
    h = f.hopf
    rep = Report()
    if genus0 is None:
        zeta = cor.elliptic_class_function(f)
        rep.extend(cor.verify_elliptic(f, zeta))
        lines = [f"elliptic class function zeta(b_a, b_b), rows a, columns b ({h.dim} x {h.dim})"]
        lines += _matrix_lines(zeta)
        return Outcome(rep, lines, {"zeta": matrix_to_json(zeta)})
    form = _guard(rep, "genus_zero", lambda: cor.genus_zero_class_function(f, genus0))
    if form is None:
        return Outcome(rep, [], {})
    slots = genus0 - 1
    rep.add(f"genus_zero_adjoint_invariant[{genus0}]", cor.is_adjoint_invariant(h, form, slots))
    lines = [f"genus zero class function, r = {genus0}, nonzero values on basis tuples"]
    lines += _nonzero_lines(form, h.dim, slots)
    return Outcome(rep, lines, {"zeta_genus0": [encode(x) for x in form.entries()]})


def _merge(parts: list[tuple[str, Outcome]]) -> Outcome:
    rep, lines, results = Report(), [], {}
    for title, out in parts:
        rep.extend(out.report)
        lines += [f"== {title}"] + out.lines
        results[title] = out.results
    return Outcome(rep, lines, results)


# job execution --------------------------------------------------------------------------

def _load(job: JobSpec):
    order = job.options.get("field_order")
    inputs = job.inputs
    try:
        h = load_hopf(inputs[0], order)
        f = load_frobenius(inputs[1], h, inputs[0]) if len(inputs) > 1 else None
    except (HopfError, FrobeniusError, RepError, ScalarError) as exc:
        raise DataError(str(exc)) from None
    return h, f


def run(job: JobSpec) -> Outcome:
    """Load all inputs, then run the suite named by the job."""
    h, f = _load(job)
    opts = job.options
    if job.command == "verify":
        return suite_hopf(h) if f is None else suite_frobenius(f)
    if job.command == "bulk":
        return suite_bulk(f)
    if job.command == "partition":
        return suite_partition(f, opts.get("pims", "all"), opts.get("threads", 1))
    if job.command == "classfn":
        return suite_classfn(f, opts.get("genus0"))
    if job.command == "report":
        return _merge([
            ("hopf", suite_hopf(h)),
            ("frobenius", suite_frobenius(f)),
            ("bulk", suite_bulk(f)),
            ("partition", suite_partition(f, opts.get("pims", "all"), opts.get("threads", 1))),
            ("classfn", suite_classfn(f)),
            ("modular", suite_modular(f)),
        ])
    raise DataError(f"unknown command {job.command!r}")


def render(job: JobSpec, out: Outcome, fmt: str) -> str:
    rep = _plain_report(out.report)
    if fmt == "json":
        obj = report_to_json(job.command, job.inputs, rep, out.results)
        return json.dumps(obj, indent=2, sort_keys=True)
    status = "all hard checks pass" if rep.ok else f"{len(rep.failures())} hard check(s) fail"
    return "\n".join(out.lines + ([rep.to_text()] if rep.checks else []) + [f"status: {status}"])


def _threads_default() -> int:
    raw = os.environ.get("BULKCOR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=_threads_default(),
                        help="worker threads (default $BULKCOR_THREADS or 1)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--field-order", type=int, default=None,
                        help="work over Q(zeta_n) for this n instead of the declared field")

    p = argparse.ArgumentParser(prog="bulkcor", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run the axiom checks of a data file")
    vsub = verify.add_subparsers(dest="what", required=True)
    vh = vsub.add_parser("hopf", parents=[common])
    vh.add_argument("hopf")
    vf = vsub.add_parser("frobenius", parents=[common])
    vf.add_argument("hopf")
    vf.add_argument("frob")
    for name, help_ in [("bulk", "end, bulk object and hh0 comparison"),
                        ("partition", "torus partition function coefficients"),
                        ("classfn", "elliptic or genus zero class function"),
                        ("report", "every suite for one Hopf algebra and Frobenius object")]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("hopf")
        sp.add_argument("frob")
        if name in ("partition", "report"):
            sp.add_argument("--pims", default="all", help="'all' or comma separated PIM indices")
        if name == "classfn":
            sp.add_argument("--genus0", type=int, default=None, metavar="R")
    return p


def job_from_args(args: argparse.Namespace) -> JobSpec:
    inputs = [args.hopf] + ([args.frob] if getattr(args, "frob", None) else [])
    options = {"threads": max(1, args.threads), "format": args.format, "field_order": args.field_order}
    for key in ("pims", "genus0"):
        if getattr(args, key, None) is not None:
            options[key] = getattr(args, key)
    return JobSpec(args.command, inputs, options)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    job = job_from_args(args)
    try:
        out = run(job)
    except DataError as exc:
        print(f"bulkcor: {exc}", file=sys.stderr)
        return EXIT_DATA
    print(render(job, out, job.options["format"]))
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
