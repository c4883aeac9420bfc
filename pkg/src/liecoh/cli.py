"""Command-line entry point.

Exit codes: 0 success, 2 Jacobi or validation failure, 3 mismatch under
``reproduce``, 4 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import FAMILIES, CatalogError, CatalogSpec, build
from .cochains import cohomology, derivation_space
from .equivariance import hochschild_serre_check, invariant_cohomology
from .lie import (
    LeviData,
    LieAlgebra,
    LieValidationError,
    Representation,
    adjoint_rep,
    check_levi,
    lie_algebra_from_json,
    lie_algebra_to_json,
    trivial_rep,
)
from .linalg import SubspaceBasis
from .report import diff_table, reproduce_table

__all__ = ["RunConfig", "UsageError", "main", "run"]

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH, EXIT_USAGE = 0, 2, 3, 4
COMMANDS = ("build", "cohomology", "invariants", "hs-check", "derivations", "reproduce")


class UsageError(Exception):
    """Malformed command line or incompatible options."""


@dataclass
class RunConfig:
    command: str
    algebra_spec: CatalogSpec | Path | None = None
    coefficients: str = "adjoint"
    degrees: tuple[int, ...] = (2,)
    output_format: str = "json"
    fast_rank: bool = False
    emit_bases: bool = False
    validate: bool = True
    semisimple: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command == "reproduce":
            self.fast_rank = False
        if self.output_format not in ("json", "table"):
            raise UsageError("--format must be json or table")
        _coefficient_dim(self.coefficients)
        if any(n < 0 for n in self.degrees):
            raise UsageError("degrees must be nonnegative")


def _coefficient_dim(text: str) -> int | None:
    """``None`` for adjoint, ``k`` for ``trivial:k``."""
    if text == "adjoint":
        return None
    kind, _, k = text.partition(":")
    if kind == "trivial" and k.isdigit() and int(k) >= 1:
        return int(k)
    raise UsageError(f"coefficients must be 'adjoint' or 'trivial:k' with k >= 1, got {text!r}")


# ---------------------------------------------------------------- loading


def _load(cfg: RunConfig) -> tuple[LieAlgebra, LeviData | None, str]:
    spec = cfg.algebra_spec
    if spec is None:
        raise UsageError("an algebra is required: give --family or --file")
    if isinstance(spec, CatalogSpec):
        L, levi = build(spec)
        return L, levi, spec.label
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LieValidationError(f"{spec} is not valid JSON: {exc}") from exc
    L = lie_algebra_from_json(data, validate=cfg.validate)
    levi = None
    if cfg.semisimple is not None:
        s = tuple(sorted(_resolve(L, name) for name in cfg.semisimple))
        levi = LeviData(s, tuple(i for i in range(L.dim) if i not in s))
        report = check_levi(L, levi, trusted=True)
        if not report.valid:
            raise LieValidationError("bad Levi data: " + "; ".join(report.problems))
    return L, levi, f"file:{Path(spec).name}"


def _resolve(L: LieAlgebra, name: str) -> int:
    if name.isdigit() and int(name) < L.dim:
        return int(name)
    try:
        return L.index(name)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"unknown basis element {name!r}") from exc


def _module(L: LieAlgebra, coefficients: str) -> Representation:
    k = _coefficient_dim(coefficients)
    return adjoint_rep(L) if k is None else trivial_rep(L, k)


def _basis_json(b: SubspaceBasis) -> list[list[list]]:
    return [
        [[i, f"{v.numerator}/{v.denominator}"] for i, v in sorted(vec.items())]
        for vec in b.sparse_vectors()
    ]


def _need_levi(levi: LeviData | None) -> LeviData:
    if levi is None:
        raise UsageError("this command needs Levi data: use a catalog family or --semisimple")
    return levi


# ---------------------------------------------------------------- commands


def _cmd_build(cfg, L, levi, label):
    return lie_algebra_to_json(L)


def _cmd_cohomology(cfg, L, levi, label):
    if any(n > L.dim for n in cfg.degrees):
        raise UsageError(f"degrees must lie in 0..{L.dim}")
    R = _module(L, cfg.coefficients)
    rep = cohomology(L, R, cfg.degrees, bases=cfg.emit_bases, fast=cfg.fast_rank)
    degrees = {}
    for n in sorted(rep.degrees):
        entry = rep[n].as_dict()
        if cfg.emit_bases:
            entry["cocycle_basis"] = _basis_json(rep[n].cocycle_basis)
            entry["coboundary_basis"] = _basis_json(rep[n].coboundary_basis)
        degrees[str(n)] = entry
    return {"algebra": label, "coefficients": cfg.coefficients, "degrees": degrees}


def _cmd_invariants(cfg, L, levi, label):
    levi = _need_levi(levi)
    R = _module(L, cfg.coefficients)
    out = {}
    for q in sorted(cfg.degrees):
        if q > len(levi.radical):
            raise UsageError(f"degree {q} exceeds the radical dimension {len(levi.radical)}")
        rep = invariant_cohomology(L, levi, R, q, basis=cfg.emit_bases)
        entry = rep.as_dict()
        if cfg.emit_bases:
            entry["invariant_cocycle_basis"] = _basis_json(rep.invariant_cocycle_basis)
        out[str(q)] = entry
    return {"algebra": label, "coefficients": cfg.coefficients, "degrees": out}


def _cmd_hs_check(cfg, L, levi, label):
    levi = _need_levi(levi)
    R = _module(L, cfg.coefficients)
    out = {}
    for p in sorted(cfg.degrees):
        if p > L.dim:
            raise UsageError(f"degrees must lie in 0..{L.dim}")
        out[str(p)] = hochschild_serre_check(L, levi, R, p, fast=cfg.fast_rank).as_dict()
    return {"algebra": label, "coefficients": cfg.coefficients, "degrees": out}


def _cmd_derivations(cfg, L, levi, label):
    der = derivation_space(L)
    out = {"algebra": label, "dim_Der": der.dim}
    if cfg.emit_bases:
        out["basis"] = _basis_json(der)
    return out


def _table_lines(command: str, report: dict) -> list[str]:
    if command == "build":
        lines = [f"dim {report['dim']}", "labels " + " ".join(report["labels"])]
        for b in report["brackets"]:
            terms = " + ".join(f"({t['num']}/{t['den']}) e{t['k']}" for t in b["terms"])
            lines.append(f"[e{b['i']}, e{b['j']}] = {terms}")
        return lines
    if command == "derivations":
        return [f"{report['algebra']}: dim Der = {report['dim_Der']}"]
    lines = [f"{report['algebra']}  coefficients={report['coefficients']}"]
    for n, entry in report["degrees"].items():
        flat = {k: v for k, v in entry.items() if not isinstance(v, (list, dict))}
        lines.append(f"  degree {n}: " + "  ".join(f"{k}={v}" for k, v in flat.items()))
    return lines


_COMMANDS = {
    "build": _cmd_build,
    "cohomology": _cmd_cohomology,
    "invariants": _cmd_invariants,
    "hs-check": _cmd_hs_check,
    "derivations": _cmd_derivations,
}


def _run_reproduce(cfg: RunConfig, out, err) -> int:
    rows = reproduce_table()
    for two_ell, row, secs in rows:
        print(f"row two_ell={two_ell}: {secs:.2f}s", file=err)
    if cfg.output_format == "table":
        names = ("dim_g", "dim_Der", "dim_B2", "dim_Z2", "dim_H2")
        print(f"{'algebra':<26}" + "".join(f"{n:>9}" for n in names), file=out)
        for _, row, _ in rows:
            print(f"{row.algebra:<26}" + "".join(f"{v:>9}" for v in row.values()), file=out)
    else:
        payload = [
            dict(zip(("algebra", "dim_g", "dim_Der", "dim_B2", "dim_Z2", "dim_H2"),
                     (row.algebra, *row.values())))
            for _, row, _ in rows
        ]
        print(json.dumps({"rows": payload}, indent=2), file=out)
    diff = diff_table(rows)
    for line in diff:
        print("MISMATCH " + line, file=err)
    return EXIT_MISMATCH if diff else EXIT_OK


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute one configured command, writing the report to ``out``."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if cfg.command == "reproduce":
            return _run_reproduce(cfg, out, err)
        L, levi, label = _load(cfg)
        report = _COMMANDS[cfg.command](cfg, L, levi, label)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except CatalogError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except LieValidationError as exc:
        print(f"invalid algebra: {exc}", file=err)
        return EXIT_INVALID
    if cfg.output_format == "table":
        print("\n".join(_table_lines(cfg.command, report)), file=out)
    else:
        print(json.dumps(report, indent=2), file=out)
    return EXIT_OK


# ---------------------------------------------------------------- argv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parser() -> _Parser:
    p = _Parser(prog="liecoh", description="Exact Lie algebra cohomology.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--format", choices=("json", "table"), default="json")
        if name == "reproduce":
            continue
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--family", choices=FAMILIES)
        src.add_argument("--file", type=Path, help="structure-constant JSON file")
        sp.add_argument("--d", type=int, default=1)
        sp.add_argument("--two-ell", type=int, default=0)
        sp.add_argument("--n", type=int, default=0)
        sp.add_argument("--no-validate", action="store_true", help="skip the Jacobi check for --file")
        sp.add_argument(
            "--semisimple",
            help="comma-separated labels or indices of the Levi factor (with --file)",
        )
        if name in ("cohomology", "invariants", "hs-check"):
            sp.add_argument("--coefficients", default="adjoint")
            sp.add_argument("--degrees", "--degree", type=_int_list, action="extend", dest="degrees")
        if name in ("cohomology", "hs-check"):
            sp.add_argument("--fast-rank", action="store_true")
        if name in ("cohomology", "invariants", "derivations"):
            sp.add_argument("--emit-bases", action="store_true")
    return p


def parse_args(argv) -> RunConfig:
    ns = _parser().parse_args(argv)
    if ns.command == "reproduce":
        return RunConfig("reproduce", output_format=ns.format)
    if ns.family is not None:
        spec = CatalogSpec(ns.family, d=ns.d, two_ell=ns.two_ell, n=ns.n)
    else:
        spec = ns.file
    return RunConfig(
        ns.command,
        algebra_spec=spec,
        coefficients=getattr(ns, "coefficients", "adjoint"),
        degrees=tuple(sorted(set(getattr(ns, "degrees", None) or [2]))),
        output_format=ns.format,
        fast_rank=getattr(ns, "fast_rank", False),
        emit_bases=getattr(ns, "emit_bases", False),
        validate=not ns.no_validate,
        semisimple=tuple(x.strip() for x in ns.semisimple.split(",")) if ns.semisimple else None,
    )


def main(argv=None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except (UsageError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
