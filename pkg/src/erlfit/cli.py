"""Batch command-line interface.

Subcommands: fit, compare, gof, sample, curves, moments.  Input files
hold one numeric value per line (or a single-column CSV whose optional
header line is skipped).  Reports are JSON (full float precision) or
CSV (6 significant digits).  Exit codes: 0 success, 1 input error,
2 at least one requested fit failed to converge, 3 internal numerical
error.  With a fixed --seed every command is byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import (
    ErlParams,
    erl_cdf,
    erl_central_moments,
    erl_cv,
    erl_hazard,
    erl_kurtosis,
    erl_pdf,
    erl_quantile,
    erl_raw_moment,
    erl_sample,
    erl_skewness,
    erl_survival,
)
from .errors import InputError, NumericalError
from .estimation import Dataset, FitConfig, FitResult, fit_mle, nll, standard_errors
from .gof import gof_report, info_criteria, sample_kurtosis, sample_skewness
from .submodels import DEFAULT_COMPARE, PARAM_LABELS, ModelSpec, get_model

PARAM_FLAG_ORDER = ("a", "b", "theta", "lambda", "beta")

# documented shape of fit/compare reports (JSON Schema draft 2020-12)
REPORT_SCHEMA = {
    "type": "object",
    "required": ["data_summary", "models", "selected"],
    "properties": {
        "data_summary": {
            "type": "object",
            "required": ["n", "min", "max", "skewness", "kurtosis"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "min": {"type": "number"},
                "max": {"type": "number"},
                "skewness": {"type": ["number", "null"]},
                "kurtosis": {"type": ["number", "null"]},
            },
        },
        "models": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": [
                    "name", "estimates", "fixed", "se",
                    "nll", "aic", "caic", "hqic", "bic", "converged",
                ],
                "properties": {
                    "name": {"type": "string"},
                    "estimates": {
                        "type": "object",
                        "additionalProperties": {"type": "number"},
                    },
                    "fixed": {
                        "type": "object",
                        "additionalProperties": {"type": "number"},
                    },
                    "se": {
                        "type": "object",
                        "additionalProperties": {"type": ["number", "null"]},
                    },
                    "nll": {"type": "number"},
                    "aic": {"type": "number"},
                    "caic": {"type": ["number", "null"]},
                    "hqic": {"type": "number"},
                    "bic": {"type": "number"},
                    "converged": {"type": "boolean"},
                },
            },
        },
        "selected": {"type": "string"},
    },
}


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs, parsed and validated."""

    command: str
    input_path: Optional[str] = None
    models: tuple[str, ...] = ()
    params: Optional[ErlParams] = None
    seed: int = 0
    n: int = 1000
    output_path: Optional[str] = None
    format: str = "json"


def ingest(path: str) -> Dataset:
    """Read one numeric value per line; a single leading non-numeric
    line is treated as a CSV header and skipped."""
    try:
        with open(path, "r", encoding="utf-8-sig") as fh:
            raw_lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read input file {path!r}: {exc}") from exc
    values: list[float] = []
    problems: list[str] = []
    seen_data = False
    for lineno, line in enumerate(raw_lines, start=1):
        text = line.strip()
        if not text:
            continue
        if "," in text:
            fields = [f for f in text.split(",") if f.strip()]
            if len(fields) != 1:
                problems.append(f"line {lineno}: expected a single column, got {line!r}")
                continue
            text = fields[0].strip()
        try:
            value = float(text)
        except ValueError:
            if not seen_data and lineno == _first_content_line(raw_lines):
                continue  # header
            problems.append(f"line {lineno}: {text!r} is not numeric")
            continue
        if not math.isfinite(value):
            problems.append(f"line {lineno}: non-finite value {text!r}")
            continue
        seen_data = True
        values.append(value)
    if problems:
        raise InputError("; ".join(problems))
    if not values:
        raise InputError(f"no numeric data found in {path!r}")
    return Dataset(np.asarray(values))


def _first_content_line(raw_lines: Sequence[str]) -> int:
    for lineno, line in enumerate(raw_lines, start=1):
        if line.strip():
            return lineno
    return -1


def _data_summary(data: Dataset) -> dict:
    return {
        "n": data.n,
        "min": float(data.values[0]),
        "max": float(data.values[-1]),
        "skewness": sample_skewness(data),
        "kurtosis": sample_kurtosis(data),
    }


def _model_record(fit: FitResult) -> dict:
    spec = fit.spec
    crit = info_criteria(fit.nll, fit.k, fit.n)
    estimates = {
        PARAM_LABELS[name]: value
        for name, value in zip(spec.free_names, spec.extract(fit.params))
    }
    se_values = fit.se if fit.se is not None else (None,) * fit.k
    se = {PARAM_LABELS[name]: err for name, err in zip(spec.free_names, se_values)}
    return {
        "name": spec.name,
        "estimates": estimates,
        "fixed": {PARAM_LABELS[name]: value for name, value in spec.fixed},
        "se": se,
        "nll": fit.nll,
        "aic": crit.aic,
        "caic": crit.caic,
        "hqic": crit.hqic,
        "bic": crit.bic,
        "converged": fit.converged,
    }


def _fit_models(data: Dataset, specs: Sequence[ModelSpec], cfg: FitConfig) -> list[FitResult]:
    """Fit each spec, most constrained first, warm-starting later (less
    constrained) specs from every compatible earlier optimum."""
    ordered = sorted(specs, key=lambda s: (s.free_count, s.name))
    fits: list[FitResult] = []
    for spec in ordered:
        fit = fit_mle(spec, data, cfg, extra_starts=[f.params for f in fits])
        if fit.converged:
            fit = standard_errors(fit, data)
        fits.append(fit)
    return fits


def run_compare(data: Dataset, specs: Sequence[ModelSpec], cfg: FitConfig) -> dict:
    """Fit every requested spec and build the comparison report,
    sorted ascending by AIC with the minimal-AIC model selected."""
    fits = _fit_models(data, specs, cfg)
    records = [_model_record(f) for f in fits]
    records.sort(key=lambda r: r["aic"])
    return {
        "data_summary": _data_summary(data),
        "models": records,
        "selected": records[0]["name"],
    }


def run_gof(data: Dataset, params: ErlParams, model_name: str, fitted_nll: float) -> dict:
    report = gof_report(data, lambda x: erl_cdf(x, params))
    return {
        "data_summary": _data_summary(data),
        "model": {
            "name": model_name,
            "params": _params_dict(params),
            "nll": fitted_nll,
        },
        "gof": {
            "n": report.n,
            "ks": report.ks,
            "ks_pvalue": report.ks_pvalue,
            "cvm": report.cvm,
            "ad": report.ad,
        },
    }


def run_curves(params: ErlParams, rows: int = 512) -> dict:
    """Distribution curves on a quantile-adaptive grid from the 0.001
    to the 0.999 quantile."""
    probs = np.linspace(0.001, 0.999, rows)
    x = np.asarray(erl_quantile(probs, params))
    return {
        "params": _params_dict(params),
        "x": x.tolist(),
        "pdf": np.asarray(erl_pdf(x, params)).tolist(),
        "cdf": np.asarray(erl_cdf(x, params)).tolist(),
        "survival": np.asarray(erl_survival(x, params)).tolist(),
        "hazard": np.asarray(erl_hazard(x, params)).tolist(),
    }


def run_moments(params: ErlParams) -> dict:
    mean, mu2, mu3, mu4 = erl_central_moments(params)
    return {
        "params": _params_dict(params),
        "raw": {str(r): erl_raw_moment(r, params) for r in (1, 2, 3, 4)},
        "mean": mean,
        "variance": mu2,
        "mu3": mu3,
        "mu4": mu4,
        "skewness": erl_skewness(params),
        "kurtosis_excess": erl_kurtosis(params),
        "cv": erl_cv(params),
    }


def run_sample(params: ErlParams, n: int, seed: int) -> dict:
    draws = erl_sample(n, params, seed)
    return {
        "params": _params_dict(params),
        "seed": seed,
        "n": n,
        "values": draws.tolist(),
    }


def _params_dict(params: ErlParams) -> dict:
    a, b, theta, lam, beta = params.values()
    return {"a": a, "b": b, "theta": theta, "lambda": lam, "beta": beta}


def _sanitize(obj):
    """Replace non-finite floats with None so the JSON stays strict."""
    if isinstance(obj, dict):
        return {key: _sanitize(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(item) for item in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


def _format_number(value) -> str:
    if value is None or (isinstance(value, float) and not math.isfinite(value)):
        return "NA"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _report_csv(report: dict) -> str:
    param_cols = ",".join(f"{label},se_{label}" for label in PARAM_FLAG_ORDER)
    lines = [f"model,{param_cols},nll,aic,caic,hqic,bic,converged"]
    for record in report["models"]:
        cells = [record["name"]]
        for label in PARAM_FLAG_ORDER:
            if label in record["estimates"]:
                cells.append(_format_number(record["estimates"][label]))
                cells.append(_format_number(record["se"][label]))
            elif label in record["fixed"]:
                cells.append(_format_number(record["fixed"][label]))
                cells.append("")
            else:
                cells.append("")
                cells.append("")
        for key in ("nll", "aic", "caic", "hqic", "bic"):
            cells.append(_format_number(record[key]))
        cells.append(_format_number(record["converged"]))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _curves_csv(report: dict) -> str:
    lines = ["x,pdf,cdf,survival,hazard"]
    for i in range(len(report["x"])):
        lines.append(",".join(
            _format_number(report[col][i]) for col in ("x", "pdf", "cdf", "survival", "hazard")
        ))
    return "\n".join(lines) + "\n"


def _pairs_csv(report: dict, skip=("params",)) -> str:
    lines = ["quantity,value"]

    def walk(prefix: str, obj):
        if isinstance(obj, dict):
            for key, value in obj.items():
                walk(f"{prefix}{key}." if isinstance(value, dict) else f"{prefix}{key}", value)
        else:
            lines.append(f"{prefix},{_format_number(obj)}")

    for key, value in report.items():
        if key in skip:
            continue
        walk(f"{key}." if isinstance(value, dict) else key, value)
    return "\n".join(lines) + "\n"


def _sample_csv(report: dict) -> str:
    return "\n".join(f"{v!r}" for v in report["values"]) + "\n"


def _to_text(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_sanitize(report), indent=2, allow_nan=False) + "\n"
    if command in ("fit", "compare"):
        return _report_csv(report)
    if command == "curves":
        return _curves_csv(report)
    if command == "sample":
        return _sample_csv(report)
    return _pairs_csv(report)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems by default; 2 means
    # "convergence failure" here, so remap usage errors to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _parse_params(text: str) -> ErlParams:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise InputError("--params expects five comma-separated values: a,b,theta,lambda,beta")
    try:
        a, b, theta, lam, beta = (float(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"--params values must be numeric: {exc}") from exc
    try:
        return ErlParams.from_values(a=a, b=b, theta=theta, lam=lam, beta=beta)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="erlfit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, data: bool, models: bool, params: bool, n: bool):
        cmd = sub.add_parser(name, help=help_text)
        if data:
            cmd.add_argument("--input", required=True, help="data file, one value per line")
        if models:
            cmd.add_argument(
                "--models",
                default=None,
                help="comma-separated model names (default: the seven standard models "
                "for compare, ERLD otherwise)",
            )
        if params:
            cmd.add_argument("--params", default=None, help="a,b,theta,lambda,beta")
        if n:
            cmd.add_argument("--n", type=int, default=1000, help="number of draws")
        cmd.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        cmd.add_argument("--output", default=None, help="write the report here instead of stdout")
        cmd.add_argument("--format", choices=("json", "csv"), default="json")
        return cmd

    add("fit", "fit one model by maximum likelihood", data=True, models=True, params=False, n=False)
    add("compare", "fit several models and rank them by AIC", data=True, models=True, params=False, n=False)
    add("gof", "goodness-of-fit statistics for a fitted or fixed model", data=True, models=True, params=True, n=False)
    add("sample", "draw from the family", data=False, models=False, params=True, n=True)
    add("curves", "pdf/cdf/survival/hazard table over the working range", data=False, models=False, params=True, n=False)
    add("moments", "moments and shape summaries of the family", data=False, models=False, params=True, n=False)
    return parser


def _resolve_models(text: Optional[str], command: str) -> tuple[ModelSpec, ...]:
    if text is None:
        names = DEFAULT_COMPARE if command == "compare" else ("ERLD",)
    else:
        names = tuple(t for t in (s.strip() for s in text.split(",")) if t)
        if not names:
            raise InputError("--models must name at least one model")
    try:
        specs = tuple(get_model(name) for name in names)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if command == "fit" and len(specs) != 1:
        raise InputError("fit takes exactly one model; use compare for several")
    return specs


def _dispatch(args: argparse.Namespace) -> tuple[dict, bool]:
    """Returns (report, all_converged)."""
    cfg = FitConfig(seed=args.seed)
    if args.command in ("fit", "compare"):
        data = ingest(args.input)
        specs = _resolve_models(args.models, args.command)
        report = run_compare(data, specs, cfg)
        ok = all(record["converged"] for record in report["models"])
        return report, ok
    if args.command == "gof":
        data = ingest(args.input)
        if args.params is not None:
            params = _parse_params(args.params)
            return run_gof(data, params, "fixed", nll(params, data)), True
        (spec,) = _resolve_models(args.models, "fit")
        fit = fit_mle(spec, data, cfg)
        return run_gof(data, fit.params, spec.name, fit.nll), fit.converged
    if args.params is None:
        raise InputError(f"{args.command} requires --params")
    params = _parse_params(args.params)
    if args.command == "sample":
        if args.n < 1:
            raise InputError("--n must be a positive integer")
        return run_sample(params, args.n, args.seed), True
    if args.command == "curves":
        return run_curves(params), True
    return run_moments(params), True


def _emit(text: str, path: Optional[str]):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, ok = _dispatch(args)
        _emit(_to_text(args.command, report, args.format), args.output)
        return 0 if ok else 2
    except InputError as exc:
        print(f"erlfit: input error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"erlfit: numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
