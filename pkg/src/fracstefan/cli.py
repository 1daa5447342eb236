"""Command-line front end.

Usage::

    fracstefan solve --input problem.json [--case N] [--output report.json]
    fracstefan sweep --input problem.json --alpha-grid 0.9,0.99,0.999 [--tol 0.01]
    fracstefan field --input problem.json --format csv [--t-grid 0.5,1,2] [--nx 50]
    fracstefan roundtrip --alpha 0.5
    fracstefan limit --input problem.json [--alpha-grid ...]

Exit codes: 0 success, 1 a requested check failed, 2 bad input, 3 data
violate the case condition, 4 numerical domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from .classical import convergence_probe, fixed_family, solve_classical
from .errors import (
    BracketError,
    DomainError,
    FracStefanError,
    InadmissibleError,
    MissingCoefficientError,
    NonConvergenceError,
    ProbeError,
    RangeError,
    ResidualCheckError,
)
from .field import FieldSpec, moving_boundary, temperature_grid
from .inverse import solve_case, synthesize_data
from .problem import COEFFICIENT_NAMES, CaseId, ProblemData

__all__ = ["main", "load_config", "SchemaError"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_SCHEMA = 2
EXIT_INADMISSIBLE = 3
EXIT_NUMERIC = 4

_TOP_KEYS = {"alpha", "mu", "nu", "T_m", "T_0", "q_0", "sigma", "known", "case"}
_REQUIRED = ("alpha", "T_m", "T_0", "q_0", "sigma")
_TRUTH = {"k": 1.5, "rho": 0.8, "c": 2.0, "l": 1.2}
_DEFAULT_GRID = (0.9, 0.99, 0.999)


class SchemaError(ValueError):
    pass


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where} must be a number, got {value!r}")
    return float(value)


def load_config(text: str) -> tuple[ProblemData, CaseId | None]:
    """Parse the strict JSON problem schema; unknown keys are errors."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError("top level must be an object")
    unknown = sorted(set(raw) - _TOP_KEYS)
    if unknown:
        raise SchemaError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in _REQUIRED if k not in raw]
    if missing:
        raise SchemaError(f"missing keys: {', '.join(missing)}")
    known = raw.get("known", {})
    if not isinstance(known, dict):
        raise SchemaError("'known' must be an object")
    bad = sorted(set(known) - set(COEFFICIENT_NAMES))
    if bad:
        raise SchemaError(f"unknown coefficient names in 'known': {', '.join(bad)}")
    fields = {k: _number(raw[k], k) for k in ("alpha", "mu", "nu", "T_m", "T_0", "q_0", "sigma") if k in raw}
    fields.update({k: _number(v, f"known.{k}") for k, v in known.items()})
    case = None
    if "case" in raw:
        if isinstance(raw["case"], bool) or not isinstance(raw["case"], int) or not 1 <= raw["case"] <= 6:
            raise SchemaError(f"case must be an integer 1-6, got {raw['case']!r}")
        case = CaseId(raw["case"])
    try:
        data = ProblemData(**fields)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return data, case


def _grid(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise SchemaError(f"bad grid {text!r}") from exc
    if not values:
        raise SchemaError("empty grid")
    return values


def _alpha_grid(text: str | None) -> list[float]:
    values = list(_DEFAULT_GRID) if text is None else _grid(text)
    for a in values:
        if not 0.0 < a <= 1.0:
            raise SchemaError(f"alpha value {a!r} outside (0, 1]")
    return values


def _dump_json(obj) -> str:
    # json writes floats with repr(), the shortest round-trip form
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _flat(record: dict) -> tuple[list[str], list[list]]:
    header = [k for k, v in record.items() if not isinstance(v, (list, dict))]
    return header, [[record[k] for k in header]]


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _read_config(args) -> tuple[ProblemData, CaseId | None]:
    if args.input is None:
        raise SchemaError(f"'{args.command}' needs --input")
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {args.input}: {exc}") from exc
    data, case = load_config(text)
    if args.case is not None:
        case = CaseId(args.case)
    return data, case


def _need_case(case: CaseId | None) -> CaseId:
    if case is None:
        raise SchemaError("no case given (config key 'case' or --case)")
    return case


def _solve(data: ProblemData, case: CaseId):
    if data.alpha == 1.0:
        return solve_classical(case, data)
    return solve_case(case, data)


def _cmd_solve(args) -> tuple[dict, list[str], list[list]]:
    data, case = _read_config(args)
    record = _solve(data, _need_case(case)).as_dict()
    return (record, *_flat(record))


def _probe_rows(table) -> tuple[list[str], list[list], list[dict]]:
    names = list(table.case.unknowns)
    header = ["alpha", "xi", "xi_deviation", "xi_relative_deviation", *[f"dev_{n}" for n in names]]
    rows, records = [], []
    for r in table.rows:
        row = [r.alpha, r.xi, r.xi_deviation, r.xi_relative_deviation, *[r.coefficient_deviations[n] for n in names]]
        rows.append(row)
        records.append(dict(zip(header, row)))
    return header, rows, records


def _cmd_sweep(args) -> tuple[dict, list[str], list[list]]:
    data, case = _read_config(args)
    case = _need_case(case)
    table = convergence_probe(case, fixed_family(data), _alpha_grid(args.alpha_grid), tolerance=args.tol)
    header, rows, records = _probe_rows(table)
    record = {
        "case": int(case),
        "xi_star": table.classical.xi_star,
        "xi_target": table.xi_target,
        "rows": records,
        "monotone_decrease": table.monotone_decrease,
        "passed": table.passed,
    }
    return record, header, rows


def _cmd_limit(args) -> tuple[dict, list[str], list[list]]:
    data, case = _read_config(args)
    case = _need_case(case)
    classical = solve_classical(case, data.replace(alpha=1.0).for_case(case))
    table = convergence_probe(case, fixed_family(data), _alpha_grid(args.alpha_grid), tolerance=args.tol)
    header, rows, records = _probe_rows(table)
    record = {"classical": classical.as_dict(), "deviations": records, "passed": table.passed}
    return record, header, rows


def _cmd_field(args) -> tuple[dict, list[str], list[list]]:
    data, case = _read_config(args)
    solution = _solve(data, _need_case(case))
    t_grid = _grid(args.t_grid) if args.t_grid else [0.5, 1.0, 2.0]
    if args.nx < 1:
        raise SchemaError("--nx must be positive")
    front = moving_boundary(min(t_grid), data.sigma, data.alpha)
    x_grid = [front * i / args.nx for i in range(1, args.nx + 1)]
    try:
        spec = FieldSpec(solution, x_grid, t_grid)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    rows = [list(r) for r in temperature_grid(spec)]
    record = {"case": int(solution.case), "columns": ["x", "t", "T"], "rows": rows}
    return record, ["x", "t", "T"], rows


def _cmd_roundtrip(args) -> tuple[dict, list[str], list[list]]:
    alpha = 0.5 if args.alpha is None else args.alpha
    if not 0.0 < alpha < 1.0:
        raise SchemaError(f"--alpha must lie in (0, 1), got {alpha!r}")
    tol = 1e-6 if args.tol is None else args.tol
    full = synthesize_data(**_TRUTH, alpha=alpha)
    cases, rows = [], []
    for case in CaseId:
        report = solve_case(case, full.for_case(case))
        err = max(abs(getattr(report.coefficients, n) - _TRUTH[n]) / _TRUTH[n] for n in case.unknowns)
        ok = err <= tol and max(report.residual_eq1, report.residual_eq2) <= 1e-8
        entry = {
            "case": int(case),
            "max_relative_error": err,
            "residual_eq1": report.residual_eq1,
            "residual_eq2": report.residual_eq2,
            "pass": ok,
        }
        cases.append(entry)
        rows.append(list(entry.values()))
    record = {
        "alpha": alpha,
        "truth": dict(_TRUTH),
        "sigma": full.sigma,
        "q_0": full.q_0,
        "cases": cases,
        "passed": all(c["pass"] for c in cases),
    }
    return record, ["case", "max_relative_error", "residual_eq1", "residual_eq2", "pass"], rows


_COMMANDS = {
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "field": _cmd_field,
    "roundtrip": _cmd_roundtrip,
    "limit": _cmd_limit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracstefan", description="Inverse fractional Stefan problem solver")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--case", type=int, choices=range(1, 7))
    parser.add_argument("--input")
    parser.add_argument("--output")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--alpha-grid", dest="alpha_grid")
    parser.add_argument("--alpha", type=float, help="fractional order for roundtrip")
    parser.add_argument("--tol", type=float)
    parser.add_argument("--t-grid", dest="t_grid", help="times for the field command")
    parser.add_argument("--nx", type=int, default=50, help="points in x for the field command")
    return parser


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, ProbeError):
        return _exit_code_for(exc.cause)
    if isinstance(exc, (InadmissibleError, RangeError)):
        return EXIT_INADMISSIBLE
    if isinstance(exc, (SchemaError, MissingCoefficientError)):
        return EXIT_SCHEMA
    if isinstance(exc, (DomainError, NonConvergenceError, BracketError, ResidualCheckError)):
        return EXIT_NUMERIC
    return EXIT_NUMERIC


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.tol is not None and not (math.isfinite(args.tol) and args.tol > 0):
        print("error: --tol must be a positive number", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        record, header, rows = _COMMANDS[args.command](args)
    except (SchemaError, FracStefanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, (SchemaError, FracStefanError)):
            return _exit_code_for(exc)
        return EXIT_SCHEMA
    text = _dump_json(record) if args.format == "json" else _dump_csv(header, rows)
    _emit(text, args.output)
    if record.get("passed") is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
