"""Command-line entry point: ``symtrans <command> [flags]``.

Every command emits a JSON object with ``command``, ``inputs``, ``result``,
``diagnostics`` and ``meta`` keys, or CSV (``alpha,curve_name,value`` for
figure data, ``field,value`` otherwise).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import coherent2qubit as c2q
from . import info, oracle, scissors, solver
from .errors import SymTransError
from .linalg import PSD_TOL, CirculantGram, as_spectrum
from .states import CoherentEnsemble, QubitEnsemble, coherent_gram_row, qubit_gram_row

COMMANDS = ("optimize", "uds", "c2q", "scissors", "figures", "entropy", "verify")
SOURCES = ("coherent", "qubit-xy", "orthogonal", "spectrum")
SIG_DIGITS = 12


class ConfigError(ValueError):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


@dataclass
class RunConfig:
    command: str
    alpha: float | None = None
    n_states: int | None = None
    output_format: str = "json"
    output_path: str | None = None
    tol: float = PSD_TOL
    source: str = "coherent"
    target: str = "qubit-xy"
    target_alpha: float | None = None
    source_spectrum: list[float] | None = None
    target_spectrum: list[float] | None = None
    splits: int | None = None
    figure: int = 1
    alpha_max: float | None = None
    alpha_step: float = 0.01
    ns: list[int] = field(default_factory=lambda: [4, 8])
    ms: list[int] = field(default_factory=lambda: list(range(1, 11)))
    oracle_check: bool = False


# -- serialization -----------------------------------------------------------


def _clean(obj: Any) -> Any:
    """Convert numpy values and round floats to 12 significant digits."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise SymTransError(f"non-finite value {x} in report")
        x = float(f"{x:.{SIG_DIGITS}g}")
        return 0.0 if x == 0 else x
    return obj


def dump_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _csv_text(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _flatten(prefix: str, obj: Any):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(f"{prefix}.{k}" if prefix else k, v)
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(f"{prefix}[{i}]", v)
    else:
        yield prefix, obj


def _fmt(x: Any) -> str:
    return repr(x) if isinstance(x, float) else str(x).lower() if isinstance(x, bool) else str(x)


# -- validation ----------------------------------------------------------------


def _require(cfg: RunConfig, name: str, flag: str):
    value = getattr(cfg, name)
    if value is None:
        raise ConfigError(flag, f"is required for '{cfg.command}'")
    return value


def _positive_alpha(cfg: RunConfig, flag: str = "--alpha") -> float:
    a = _require(cfg, "alpha", flag)
    if not (math.isfinite(a) and a > 0):
        raise ConfigError(flag, f"must be a positive number, got {a}")
    return a


def _n(cfg: RunConfig, minimum: int = 2) -> int:
    n = _require(cfg, "n_states", "--n")
    if n < minimum:
        raise ConfigError("--n", f"must be >= {minimum}, got {n}")
    return n


def _spectrum_for(cfg: RunConfig, kind: str, role: str) -> np.ndarray:
    flag = f"--{role}"
    if kind == "spectrum":
        values = getattr(cfg, f"{role}_spectrum")
        if values is None:
            raise ConfigError(f"--{role}-spectrum", f"is required with {flag} spectrum")
        try:
            return as_spectrum(values, cfg.tol)
        except SymTransError as exc:
            raise ConfigError(f"--{role}-spectrum", str(exc)) from exc
    n = _n(cfg)
    if kind == "coherent":
        alpha = cfg.alpha if role == "source" else cfg.target_alpha
        aflag = "--alpha" if role == "source" else "--target-alpha"
        if alpha is None or not alpha > 0:
            raise ConfigError(aflag, f"a positive amplitude is required with {flag} coherent")
        return coherent_gram_row(CoherentEnsemble(alpha, n)).spectrum()
    if kind == "qubit-xy":
        return qubit_gram_row(QubitEnsemble(n)).spectrum()
    if kind == "orthogonal":
        return np.ones(n)
    raise ConfigError(flag, f"unknown kind '{kind}'")


# -- commands ------------------------------------------------------------------


def _solution_payload(sol: solver.TransformSolution) -> tuple[dict, dict]:
    ent = info.report(sol)
    result = {
        "p_success": sol.p_success,
        "leak_spectrum": sol.leak_spectrum,
        "redundancy_spectrum": sol.redundancy_spectrum,
        "residual": sol.residual(),
    }
    diagnostics = dict(sol.flags())
    diagnostics["leak_bits"] = ent.leak_bits
    diagnostics["redundancy_bits"] = ent.redundancy_bits
    return result, diagnostics


def _cmd_optimize(cfg: RunConfig):
    lam_a = _spectrum_for(cfg, cfg.source, "source")
    lam_b = _spectrum_for(cfg, cfg.target, "target")
    if lam_a.size != lam_b.size:
        raise ConfigError("--target-spectrum", "source and target must have equal length")
    sol = solver.optimize_uniform(lam_a, lam_b, cfg.tol)
    result, diagnostics = _solution_payload(sol)
    result["source_spectrum"] = lam_a
    result["target_spectrum"] = lam_b
    if cfg.source == "coherent" and cfg.target == "qubit-xy":
        result["closed_form_p"] = c2q.optimal_probability(cfg.alpha)
    return result, diagnostics


def _cmd_uds(cfg: RunConfig):
    lam_a = _spectrum_for(cfg, cfg.source, "source")
    return {"p_uds": solver.uds_probability(lam_a), "source_spectrum": lam_a}, {
        "linearly_independent": bool(lam_a.min() > cfg.tol)
    }


def _cmd_c2q(cfg: RunConfig):
    alpha = _positive_alpha(cfg)
    n = _n(cfg)
    result: dict[str, Any] = {"p_optimal": c2q.optimal_probability(alpha)}
    diagnostics: dict[str, Any] = {}
    if n % 2:
        p, conjectural = c2q.odd_n_probability(alpha, n)
        lam_a = coherent_gram_row(CoherentEnsemble(alpha, n)).spectrum()
        lam_b = qubit_gram_row(QubitEnsemble(n)).spectrum()
        result["p_interlaced"] = p
        result["p_lp"] = solver.optimize_uniform(lam_a, lam_b, cfg.tol).p_success
        diagnostics["conjectural"] = conjectural
        return result, diagnostics
    beta, m = c2q.beamsplit_plan(alpha)
    result["beamsplit"] = {"beta": beta, "modes": m}
    if alpha <= 1 + c2q.ALPHA_SLACK:
        pv = c2q.probability_vector(alpha, n)
        Pi_s = c2q.leak_gram(pv, n)
        result["probability_vector"] = pv.probs
        result["p0"] = pv.p0
        result["leak_spectrum"] = Pi_s.spectrum()
        diagnostics["leak_bits"] = info.entropy_bound(Pi_s.spectrum())
        diagnostics["redundancy_free"] = True
        diagnostics["min_probability"] = float(pv.probs.min())
    else:
        result["p_composed"] = c2q.split_composition_probability(alpha, n)
    return result, diagnostics


def _cmd_scissors(cfg: RunConfig):
    alpha = _positive_alpha(cfg)
    m = cfg.splits if cfg.splits is not None else 1
    if m < 1:
        raise ConfigError("--splits", f"must be >= 1, got {m}")
    if alpha / math.sqrt(m) > 1 + scissors.ALPHA_SLACK:
        raise ConfigError("--splits", f"alpha/sqrt(M) must be <= 1, got {alpha / math.sqrt(m):.6g}")
    beam = alpha / math.sqrt(m)
    ev = scissors.evaluate(beam)
    result = {
        "p_overall_split": scissors.overall_with_splits(alpha, m),
        "p_optimal": c2q.optimal_probability(alpha),
        "per_beam": {k: v for k, v in asdict(ev).items()},
    }
    return result, {"gap": result["p_optimal"] - result["p_overall_split"]}


def _cmd_figures(cfg: RunConfig):
    if cfg.figure not in (1, 6):
        raise ConfigError("--figure", f"must be 1 or 6, got {cfg.figure}")
    alpha_max = cfg.alpha_max if cfg.alpha_max is not None else (1.5 if cfg.figure == 1 else 1.0)
    if not (alpha_max > 0 and cfg.alpha_step > 0):
        raise ConfigError("--alpha-max", "grid bounds must be positive")
    grid = scissors.default_grid(alpha_max, cfg.alpha_step)
    if cfg.figure == 1:
        if any(n < 2 for n in cfg.ns):
            raise ConfigError("--ns", "every N must be >= 2")
        table = scissors.figure1_data(grid, cfg.ns)
    else:
        if any(m < 1 for m in cfg.ms):
            raise ConfigError("--ms", "every M must be >= 1")
        if alpha_max / math.sqrt(min(cfg.ms)) > 1 + scissors.ALPHA_SLACK:
            raise ConfigError("--alpha-max", "alpha/sqrt(min M) must stay <= 1")
        table = scissors.figure6_data(grid, cfg.ms)
    return table, {}


def _cmd_entropy(cfg: RunConfig):
    lam = _spectrum_for(cfg, cfg.source, "source")
    return {"bits": info.entropy_bound(lam), "max_bits": math.log2(lam.size)}, {}


def _cmd_verify(cfg: RunConfig):
    lam_a = _spectrum_for(cfg, cfg.source, "source")
    lam_b = _spectrum_for(cfg, cfg.target, "target")
    if lam_a.size != lam_b.size:
        raise ConfigError("--target-spectrum", "source and target must have equal length")
    sol = solver.optimize_uniform(lam_a, lam_b, cfg.tol)
    G_A = CirculantGram.from_spectrum(lam_a).matrix()
    G_B = CirculantGram.from_spectrum(lam_b).matrix()
    w = solver.uniform_witness(sol)
    ok = solver.verify_general(G_A, G_B, w, max(cfg.tol, 1e-9))
    result, diagnostics = _solution_payload(sol)
    result["dense_criterion_holds"] = ok
    result["dense_residual"] = float(
        np.max(np.abs(G_A - sol.p_success * w.leak_gram * G_B - (1 - sol.p_success) * w.redundancy_gram))
    )
    if cfg.oracle_check:
        grid = oracle.grid_search_optimal(lam_a, lam_b)
        result["oracle"] = {"best_p": grid.best_p, "grid_step": grid.grid_step}
    return result, diagnostics


_DISPATCH = {
    "optimize": _cmd_optimize,
    "uds": _cmd_uds,
    "c2q": _cmd_c2q,
    "scissors": _cmd_scissors,
    "figures": _cmd_figures,
    "entropy": _cmd_entropy,
    "verify": _cmd_verify,
}


_ENSEMBLE = ["source", "alpha", "n_states", "source_spectrum"]
_TARGET = ["target", "target_alpha", "target_spectrum"]
_ECHO = {
    "optimize": _ENSEMBLE + _TARGET,
    "uds": _ENSEMBLE,
    "c2q": ["alpha", "n_states"],
    "scissors": ["alpha", "splits"],
    "figures": ["figure", "alpha_max", "alpha_step", "ns", "ms"],
    "entropy": _ENSEMBLE,
    "verify": _ENSEMBLE + _TARGET + ["oracle_check"],
}


def _inputs_echo(cfg: RunConfig) -> dict:
    d = asdict(cfg)
    echo = {"command": cfg.command}
    echo.update({k: d[k] for k in _ECHO[cfg.command]})
    echo["output_format"] = cfg.output_format
    echo["tol"] = cfg.tol
    return echo


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a command; returns ``(exit_code, text)``.

    Exit codes: 0 success, 2 invalid configuration, 3 numeric failure.
    """
    if cfg.command not in _DISPATCH:
        return 2, f"error: command: unknown command '{cfg.command}'\n"
    if cfg.output_format not in ("json", "csv"):
        return 2, f"error: --format: must be json or csv, got '{cfg.output_format}'\n"
    if not cfg.tol > 0:
        return 2, f"error: --tol: must be positive, got {cfg.tol}\n"
    try:
        result, diagnostics = _DISPATCH[cfg.command](cfg)
        if isinstance(result, scissors.FigureTable):
            if cfg.output_format == "csv":
                rows = [(_fmt(_clean(a)), name, _fmt(_clean(v))) for a, name, v in result.rows()]
                return 0, _csv_text(["alpha", "curve_name", "value"], rows)
            result = {"alpha": result.alpha, "curves": result.curves}
        report = _clean(
            {
                "command": cfg.command,
                "inputs": _inputs_echo(cfg),
                "result": result,
                "diagnostics": diagnostics,
                "meta": {"tol": cfg.tol, "diag_tol": solver.DIAG_TOL, "sig_digits": SIG_DIGITS},
            }
        )
    except ConfigError as exc:
        return 2, f"error: {exc}\n"
    except SymTransError as exc:
        return 3, f"error: {type(exc).__name__}: {exc}\n"
    except ValueError as exc:
        return 2, f"error: {exc}\n"
    if cfg.output_format == "csv":
        rows = [(k, _fmt(v)) for k, v in _flatten("", report["result"])]
        rows += [(f"diagnostics.{k}", _fmt(v)) for k, v in _flatten("", report["diagnostics"])]
        return 0, _csv_text(["field", "value"], rows)
    return 0, dump_json(report)


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.replace(";", ",").split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtrans",
        description="Optimal uniform transforms between symmetric sets of pure states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", dest="output_format", choices=["json", "csv"], default="json")
        p.add_argument("--out", dest="output_path", default=None, help="write report here instead of stdout")
        p.add_argument("--tol", type=float, default=PSD_TOL, help="feasibility tolerance")

    def ensemble(p, with_target: bool):
        p.add_argument("--source", choices=SOURCES, default="coherent")
        p.add_argument("--alpha", type=float, default=None)
        p.add_argument("--n", dest="n_states", type=int, default=None)
        p.add_argument("--source-spectrum", type=_float_list, default=None)
        if with_target:
            p.add_argument("--target", choices=SOURCES, default="qubit-xy")
            p.add_argument("--target-alpha", type=float, default=None)
            p.add_argument("--target-spectrum", type=_float_list, default=None)

    p = sub.add_parser("optimize", help="solve the spectral LP for an optimal uniform transform")
    ensemble(p, True)
    common(p)

    p = sub.add_parser("uds", help="optimal unambiguous discrimination probability")
    ensemble(p, False)
    common(p)

    p = sub.add_parser("c2q", help="constructive coherent-to-qubit transform")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--n", dest="n_states", type=int, default=None)
    common(p)

    p = sub.add_parser("scissors", help="quantum-scissors realization, optionally beam-split")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--splits", type=int, default=1)
    common(p)

    p = sub.add_parser("figures", help="curve data for the comparison figures")
    p.add_argument("--figure", type=int, choices=[1, 6], default=1)
    p.add_argument("--alpha-max", type=float, default=None)
    p.add_argument("--alpha-step", type=float, default=0.01)
    p.add_argument("--ns", type=_int_list, default=[4, 8])
    p.add_argument("--ms", type=_int_list, default=list(range(1, 11)))
    common(p)

    p = sub.add_parser("entropy", help="Holevo bound (bits) of a symmetric ensemble")
    ensemble(p, False)
    common(p)

    p = sub.add_parser("verify", help="solve, then check the dense Gram criterion")
    ensemble(p, True)
    p.add_argument("--oracle", dest="oracle_check", action="store_true", help="also run the lattice oracle (N <= 5)")
    common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    known = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in known})


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    code, text = run(cfg)
    if code != 0:
        sys.stderr.write(text)
        return code
    if cfg.output_path:
        Path(cfg.output_path).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
