"""Command-line front end.

    ssw construct --q 3^1 --k 3 --punctures 2
    ssw swd       --q 2^1 --k 6 --punctures 2,3 --output csv
    ssw lift      --q 3^1 --k 3 --punctures 2 --l 2
    ssw hierarchy --q 3^1 --k 4 --basis-file ex3.txt --projective
    ssw simplex   --q 3^1 --k 3
    ssw verify    --q 2^1 --k 3 --punctures 1,1 --l 2

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import difflib
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import closedform as cf
from . import oracle
from .construct import (
    CodeInstance,
    SolomonStifflerSpec,
    default_punctures,
    read_basis_file,
    simplex_generator,
    ss_generator,
)
from .errors import InvalidDims, SSWError
from .field import FieldSpec, parse_field
from .matrix import Subspace
from .render import Report, render, render_csv

COMMANDS = ("construct", "swd", "lift", "hierarchy", "verify", "simplex")
METHODS = ("closed", "oracle-subspace", "oracle-subcode", "oracle-direct")
OUTPUTS = ("table", "csv", "json")


@dataclass(frozen=True)
class JobSpec:
    command: str
    field: str
    k: int | None = None
    punctures: tuple[int, ...] = ()
    basis_file: str | None = None
    projective: bool = False
    ell: int = 1
    method: str = "closed"
    output: str = "table"
    limit: int | None = None
    strict_ss: bool = False
    block_layout: bool = False

    def to_argv(self) -> list[str]:
        """Canonical flag list; parse_job(job.to_argv()) == job."""
        argv = [self.command, "--q", self.field]
        if self.k is not None:
            argv += ["--k", str(self.k)]
        if self.punctures:
            argv += ["--punctures", ",".join(map(str, self.punctures))]
        if self.basis_file is not None:
            argv += ["--basis-file", self.basis_file]
        if self.projective:
            argv.append("--projective")
        argv += ["--l", str(self.ell), "--method", self.method, "--output", self.output]
        if self.limit is not None:
            argv += ["--limit", str(self.limit)]
        if self.strict_ss:
            argv.append("--strict-ss")
        if self.block_layout:
            argv.append("--block-layout")
        return argv


def _dims(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _field_label(text: str) -> str:
    try:
        return parse_field(text).label
    except SSWError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", "--field", dest="field", type=_field_label, required=True, help="field as p^m")
    common.add_argument("--k", type=int, help="code dimension")
    common.add_argument("--punctures", type=_dims, default=(), help="puncture dimensions, e.g. 2,3")
    common.add_argument("--basis-file", help="puncture bases in matrix text format, blank-line separated")
    common.add_argument("--projective", action="store_true", help="use the projective code")
    common.add_argument("--l", "--lift", dest="ell", type=int, default=1, help="lift degree")
    common.add_argument("--method", choices=METHODS, default="closed")
    common.add_argument("--output", choices=OUTPUTS, default="table")
    common.add_argument("--limit", type=int, help="enumeration limit (default from SSW_ENUM_LIMIT)")
    common.add_argument("--strict-ss", action="store_true", help="require distinct puncture dimensions")
    common.add_argument("--block-layout", action="store_true", help="order columns as [SS, aSS, ...]")

    parser = argparse.ArgumentParser(prog="ssw", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_job(argv: Sequence[str]) -> JobSpec:
    ns = build_parser().parse_args(list(argv))
    return JobSpec(
        command=ns.command,
        field=ns.field,
        k=ns.k,
        punctures=tuple(ns.punctures),
        basis_file=ns.basis_file,
        projective=ns.projective,
        ell=ns.ell,
        method=ns.method,
        output=ns.output,
        limit=ns.limit,
        strict_ss=ns.strict_ss,
        block_layout=ns.block_layout,
    )


@dataclass
class Problem:
    """A resolved job: the field, the code, and enough to evaluate closed forms."""

    field: FieldSpec
    k: int
    code: CodeInstance
    dims: tuple[int, ...]
    simplex: bool
    projective: bool
    spec: SolomonStifflerSpec | None = None


def resolve(job: JobSpec) -> Problem:
    f = parse_field(job.field)
    if job.ell < 1:
        raise InvalidDims(f"lift degree must be >= 1, got {job.ell}")
    if job.command == "simplex":
        if job.k is None:
            raise InvalidDims("--k is required")
        return Problem(f, job.k, simplex_generator(f, job.k), (), True, True)
    if job.basis_file is not None:
        bases = read_basis_file(Path(job.basis_file).read_text())
        k = job.k if job.k is not None else (bases[0].ncols if bases else None)
        if k is None:
            raise InvalidDims("--k is required")
        for b in bases:
            if b.field != f or b.ncols != k:
                raise InvalidDims(f"basis block {b} does not live in GF({f.q})^{k}")
        punctures = [Subspace(f, k, b) for b in bases]
        if job.punctures and tuple(p.dim for p in punctures) != job.punctures:
            raise InvalidDims("--punctures disagrees with the dimensions in --basis-file")
    else:
        if job.k is None:
            raise InvalidDims("--k is required")
        k = job.k
        punctures = default_punctures(f, k, job.punctures)
    spec = SolomonStifflerSpec(f, k, punctures, job.projective, job.strict_ss, job.block_layout)
    return Problem(f, k, ss_generator(spec), spec.dims, False, job.projective, spec)


def closed_swd(p: Problem) -> cf.SupportWeightDistribution:
    q = p.field.q
    if p.simplex:
        return cf.swd_simplex(q, p.k)
    full = cf.swd_closed(q, p.k, p.dims)
    return full.projective() if p.projective else full


def closed_hierarchy(p: Problem) -> cf.WeightHierarchy:
    q = p.field.q
    if p.simplex:
        return cf.hierarchy_simplex(q, p.k)
    h = cf.hierarchy_closed(q, p.k, p.dims)
    return h.divided(q - 1) if p.projective else h


def closed_enumerator(p: Problem, ell: int) -> cf.WeightEnumerator:
    q = p.field.q
    if p.simplex:
        return cf.lifted_weight_enumerator(cf.swd_simplex(q, p.k), ell)
    full = cf.lifted_weight_enumerator(cf.swd_closed(q, p.k, p.dims), ell)
    return cf.projective_transform(full, q) if p.projective else full


def _oracle_swd(p: Problem, method: str, limit: int | None) -> cf.SupportWeightDistribution:
    g = p.code.generator
    if method == "oracle-subspace":
        return oracle.swd_by_subspace_counting(g, limit)
    if method == "oracle-subcode":
        return oracle.swd_by_subcode_enumeration(g, limit)
    raise InvalidDims(f"method {method} does not produce a support weight distribution")


def _report(p: Problem, **kw) -> Report:
    return Report(p.field.q, p.k, p.code.n, **kw)


def run(job: JobSpec, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    p = resolve(job)
    if job.command == "construct":
        out.write(p.code.generator.to_text())
        return 0
    if job.command == "verify":
        return verify(p, job, out, err)

    swd = hier = enum = None
    if job.command in ("swd", "simplex", "hierarchy"):
        swd = closed_swd(p) if job.method == "closed" else _oracle_swd(p, job.method, job.limit)
        hier = closed_hierarchy(p) if job.method == "closed" else swd.hierarchy()
    if job.command == "lift" or (job.command == "simplex" and job.ell > 1):
        if job.method == "closed":
            enum = closed_enumerator(p, job.ell)
        elif job.method == "oracle-direct":
            enum = oracle.direct_lifted_distribution(p.code.generator, job.ell, job.limit)
        else:
            enum = cf.lifted_weight_enumerator(_oracle_swd(p, job.method, job.limit), job.ell)
    if job.command == "swd":
        hier = None
    if job.command == "hierarchy":
        swd = None
    out.write(render(_report(p, swd=swd, hierarchy=hier, enumerator=enum), job.output))
    return 0


class _Verifier:
    def __init__(self, out, err):
        self.out, self.err = out, err
        self.failures = 0

    def compare(self, label: str, expected, actual, as_text) -> None:
        if expected == actual:
            self.out.write(f"PASS {label}\n")
            return
        self.failures += 1
        self.out.write(f"FAIL {label}\n")
        a = as_text(expected).splitlines(keepends=True)
        b = as_text(actual).splitlines(keepends=True)
        self.err.writelines(difflib.unified_diff(a, b, fromfile="expected", tofile="actual"))

    def info(self, text: str) -> None:
        self.out.write(f"INFO {text}\n")


def verify(p: Problem, job: JobSpec, out, err) -> int:
    v = _Verifier(out, err)
    g, q, k, n = p.code.generator, p.field.q, p.k, p.code.n

    def swd_text(s):
        return render_csv(Report(q, k, n, swd=s))

    def enum_text(e):
        return render_csv(Report(q, k, n, enumerator=e))

    reports = {}
    for method in ("subspace_count", "subcode_enum"):
        rep = oracle.run_oracle(method, g, limit=job.limit)
        err.write(f"{method}: {rep.work_items} subspaces in {rep.elapsed:.3f}s\n")
        reports[method] = rep.result
    rep = oracle.run_oracle("direct_lift", g, ell=job.ell, limit=job.limit)
    err.write(f"direct_lift: {rep.work_items} codewords in {rep.elapsed:.3f}s\n")
    direct = rep.result
    sub = reports["subspace_count"]

    v.compare("swd oracle-subspace vs oracle-subcode", sub, reports["subcode_enum"], swd_text)
    v.compare(f"lift l={job.ell} oracle-subspace vs oracle-direct", cf.lifted_weight_enumerator(sub, job.ell), direct, enum_text)

    closed_ok = p.simplex or len(p.dims) <= 2
    if closed_ok:
        v.compare("swd closed vs oracle-subspace", closed_swd(p), sub, swd_text)
        v.compare("hierarchy closed vs oracle", closed_hierarchy(p), sub.hierarchy(), str)
        v.compare(f"lift l={job.ell} closed vs oracle-direct", closed_enumerator(p, job.ell), direct, enum_text)
        if len(p.dims) == 2:
            wd = cf.wd_l1_p2(q, k, *p.dims)
            if p.projective:
                wd = cf.projective_transform(wd, q)
            v.compare("weight distribution closed (l=1) vs lifted closed", wd, closed_enumerator(p, 1), enum_text)
            if p.dims[0] == 1 or p.dims[1] == 1:
                u = p.dims[1] if p.dims[0] == 1 else p.dims[0]
                alt = cf.swd_p2_u1eq1(q, k, u)
                v.compare("swd one-dimensional-puncture formula vs general", cf.swd_p2(q, k, *p.dims), alt, swd_text)
    else:
        v.info(f"no closed form for {len(p.dims)} punctures; oracle comparisons only")

    d = oracle.min_distance(g, job.limit)
    if p.code.min_distance is not None:
        v.compare("minimum distance", p.code.min_distance, d, str)
    gr = oracle.griesmer_check(n, k, d, q)
    if p.simplex or len(set(p.dims)) == len(p.dims):
        v.compare("griesmer slack", 0, gr.slack, str)
    else:
        v.info(f"griesmer slack {gr.slack} (repeated puncture dimensions)")
    return 1 if v.failures else 0


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    job = parse_job(argv)
    try:
        return run(job)
    except (SSWError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
