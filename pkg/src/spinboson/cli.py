"""Command-line surface: figure-series CSV generation and verification.

Scenarios:

* figure1      population inversion W(t') for an upper-level start
* figure2      |rho12| exact vs closed form, plus-pointer start
* figure3      |rho12| exact vs closed form, lower-state start, short times
* sweep        selected quantities on an (nbar, phi) grid at one time
* verify       run the acceptance gate, print one line per criterion
* pointer-demo pointer components, q(t'), and coincidence times

Flag precedence: command line > SPINBOSON_* environment variables >
defaults. All numeric CSV cells use 17 significant digits and every file
starts with a comment line recording the full parameter set, so identical
invocations are byte-identical. Exit codes: 0 success, 1 usage error,
2 numerical guard tripped (or verify found failures).

The model frequencies are fixed at delta0 = omega = 1 rad/time; --g sets
the coupling in those units, and times are always dimensionless t' = g t.
For the analytic resonance solution g drops out entirely; it only shapes
the counter-rotating oscillations of --no-rwa runs, which integrate the
full generator numerically instead (slow for long spans by design).
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .closedform import rho12_closed
from .diagnostics import purity, q_from_rho
from .dynamics import LOWER, UPPER, JointState, QubitState, evolve_product, reduce
from .errors import DegenerateBranchError, SpinBosonError
from .fock import SimConfig, coherent
from .oracle import OracleConfig, integrate
from .pointer import (PointerSign, coincidence_times, initial_pointer_states,
                      pointer_state_at, to_pointer_basis)

SCENARIOS = ("figure1", "figure2", "figure3", "sweep", "verify", "pointer-demo")
INITIALS = ("upper", "lower", "plus-pointer", "minus-pointer", "custom")
SWEEP_COLUMNS = ("nbar", "phi", "t_prime", "w", "abs_rho12_exact",
                 "abs_rho12_closed", "q_abs", "purity")

# per-scenario (tmax_prime, steps, initial) defaults
_FIGURE_DEFAULTS = {
    "figure1": (400.0, 4000, "upper"),
    "figure2": (200.0, 2000, "plus-pointer"),
    "figure3": (10.0, 2000, "lower"),
}


@dataclass(frozen=True)
class RunSpec:
    scenario: str
    config: SimConfig
    initial: str
    alpha: complex | None
    beta: complex | None
    tmax_prime: float
    steps: int
    rwa: bool
    output_path: str
    nbars: tuple[float, ...] = ()
    phis: tuple[float, ...] = ()
    t_point: float = 5.0
    columns: tuple[str, ...] = ()
    k_max: int = 2
    nmax_flag: int | None = None  # raw --nmax; sweep re-derives cutoffs when unset


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 instead of argparse's 2
        raise _UsageError(message)


def _env(name: str, fallback: str) -> str:
    return os.environ.get("SPINBOSON_" + name, fallback)


def _env_bool(name: str, fallback: bool) -> bool:
    raw = _env(name, "1" if fallback else "0").strip().lower()
    if raw in ("1", "true", "yes", "on"):
        return True
    if raw in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"SPINBOSON_{name} must be a boolean, got {raw!r}")


def _build_parser() -> _Parser:
    p = _Parser(prog="spinboson", description=__doc__.splitlines()[0],
                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("scenario", choices=SCENARIOS)
    p.add_argument("--nbar", type=float, default=float(_env("NBAR", "50")),
                   help="mean photon number of the coherent field")
    p.add_argument("--phi", type=float,
                   default=float(_env("PHI", repr(math.pi / 6))),
                   help="coherent-field phase (radians)")
    p.add_argument("--g", type=float, default=float(_env("G", "1")),
                   help="coupling in units of the resonance frequency; "
                        "t' = g t, counter-rotating frequency 1/g")
    p.add_argument("--nmax", type=int,
                   default=(int(_env("NMAX", "0")) or None),
                   help="Fock cutoff (default: nbar + 10 sqrt(nbar) + 10)")
    p.add_argument("--tmax-prime", type=float, dest="tmax_prime",
                   default=(float(_env("TMAX_PRIME", "nan"))
                            if _env("TMAX_PRIME", "") else None),
                   help="end of the t' grid (default per scenario)")
    p.add_argument("--steps", type=int,
                   default=(int(_env("STEPS", "0")) or None),
                   help="number of grid intervals (default per scenario)")
    p.add_argument("--initial", choices=INITIALS,
                   default=_env("INITIAL", "") or None,
                   help="initial qubit state (default per scenario)")
    p.add_argument("--alpha", default=_env("ALPHA", "") or None,
                   help="upper amplitude for --initial custom, e.g. '0.6+0.3j'")
    p.add_argument("--beta", default=_env("BETA", "") or None,
                   help="lower amplitude for --initial custom")
    p.add_argument("--rwa", action=argparse.BooleanOptionalAction,
                   default=_env_bool("RWA", True),
                   help="use the analytic resonance solution; --no-rwa "
                        "integrates the full generator (figure scenarios)")
    p.add_argument("--output", default=_env("OUTPUT", "") or None,
                   help="CSV path (default <scenario>.csv)")
    p.add_argument("--nbars", default=_env("NBARS", "25,50,100"),
                   help="sweep: comma-separated nbar values")
    p.add_argument("--phis", default=_env("PHIS", repr(math.pi / 6)),
                   help="sweep: comma-separated phi values")
    p.add_argument("--tprime", type=float, default=float(_env("TPRIME", "5")),
                   help="sweep: evaluation time t'")
    p.add_argument("--columns",
                   default=_env("COLUMNS", "nbar,phi,abs_rho12_exact,q_abs,purity"),
                   help=f"sweep: columns from {{{','.join(SWEEP_COLUMNS)}}}")
    p.add_argument("--kmax", type=int, default=int(_env("KMAX", "2")),
                   help="pointer-demo: number of coincidence times listed")
    return p


def _parse_list(raw: str, what: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise _UsageError(f"bad {what} list: {raw!r}")
    if not vals:
        raise _UsageError(f"empty {what} list")
    return vals


def _make_spec(args: argparse.Namespace) -> RunSpec:
    scen = args.scenario
    tmax, steps, initial = _FIGURE_DEFAULTS.get(scen, (None, None, "plus-pointer"))
    if args.initial is not None:
        initial = args.initial
    if args.tmax_prime is not None:
        if math.isnan(args.tmax_prime):
            raise _UsageError("SPINBOSON_TMAX_PRIME is not a number")
        tmax = args.tmax_prime
    elif scen == "pointer-demo":
        tmax = float(math.ceil(3.2 * math.pi * math.sqrt(args.nbar)))
    elif tmax is None:
        tmax = 10.0
    if args.steps is not None:
        steps = args.steps
    elif steps is None:
        steps = max(100, int(round(10 * tmax)))
    if steps < 1:
        raise _UsageError("--steps must be >= 1")

    alpha = beta = None
    if initial == "custom":
        if args.alpha is None or args.beta is None:
            raise _UsageError("--initial custom needs --alpha and --beta")
        try:
            alpha = complex(args.alpha.strip())
            beta = complex(args.beta.strip())
        except ValueError:
            raise _UsageError(f"bad amplitudes: {args.alpha!r}, {args.beta!r}")
    if not args.rwa and scen not in _FIGURE_DEFAULTS:
        raise _UsageError("--no-rwa applies to figure scenarios only")

    columns = tuple(c.strip() for c in args.columns.split(",") if c.strip())
    bad = [c for c in columns if c not in SWEEP_COLUMNS]
    if scen == "sweep" and bad:
        raise _UsageError(f"unknown sweep columns: {', '.join(bad)}")

    config = SimConfig(nbar=args.nbar, phi=args.phi, g=args.g, n_max=args.nmax)
    return RunSpec(scenario=scen, config=config, initial=initial,
                   alpha=alpha, beta=beta, tmax_prime=tmax, steps=steps,
                   rwa=args.rwa, output_path=args.output or f"{scen}.csv",
                   nbars=_parse_list(args.nbars, "nbar"),
                   phis=_parse_list(args.phis, "phi"),
                   t_point=args.tprime, columns=columns, k_max=args.kmax,
                   nmax_flag=args.nmax)


def _initial_state(name: str, phi: float, alpha: complex | None,
                   beta: complex | None) -> QubitState:
    if name == "upper":
        return UPPER
    if name == "lower":
        return LOWER
    plus, minus = initial_pointer_states(phi)
    if name == "plus-pointer":
        return plus
    if name == "minus-pointer":
        return minus
    return QubitState.normalized(alpha, beta)


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _write_csv(path: str, comment_lines: list[str], header: tuple[str, ...],
               rows: list[tuple]) -> None:
    with open(path, "w", newline="\n") as f:
        for line in comment_lines:
            f.write("# " + line + "\n")
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def _params_comment(spec: RunSpec) -> str:
    cfg = spec.config
    parts = [f"scenario={spec.scenario}", f"nbar={_fmt(cfg.nbar)}",
             f"phi={_fmt(cfg.phi)}", f"g={_fmt(cfg.g)}", f"nmax={cfg.n_max}",
             f"tmax_prime={_fmt(spec.tmax_prime)}", f"steps={spec.steps}",
             f"initial={spec.initial}", f"rwa={spec.rwa}"]
    if spec.initial == "custom":
        parts.append(f"alpha={spec.alpha}")
        parts.append(f"beta={spec.beta}")
    if spec.scenario == "sweep":
        parts.append("nbars=" + ",".join(_fmt(v) for v in spec.nbars))
        parts.append("phis=" + ",".join(_fmt(v) for v in spec.phis))
        parts.append(f"tprime={_fmt(spec.t_point)}")
        parts.append("columns=" + ",".join(spec.columns))
    if spec.scenario == "pointer-demo":
        parts.append(f"kmax={spec.k_max}")
    return " ".join(parts)


def _grid(spec: RunSpec) -> np.ndarray:
    return np.linspace(0.0, spec.tmax_prime, spec.steps + 1)


def _oracle_states(spec: RunSpec, q0: QubitState, field) -> list[JointState]:
    ocfg = OracleConfig(g=spec.config.g, delta0=1.0, omega=1.0, rwa=False)
    return list(integrate(ocfg, q0, field, [float(t) for t in _grid(spec)]).states)


def _run_figure1(spec: RunSpec) -> list[tuple]:
    cfg = spec.config
    q0 = _initial_state(spec.initial, cfg.phi, spec.alpha, spec.beta)
    field = coherent(cfg.nbar, cfg.phi, cfg.n_max)
    rows = []
    if spec.rwa:
        for tp in _grid(spec):
            joint = evolve_product(q0, field, float(tp))
            na, nb = joint.A.norm_sq(), joint.B.norm_sq()
            rows.append((float(tp), (na - nb) / (na + nb)))
    else:
        for joint in _oracle_states(spec, q0, field):
            na, nb = joint.A.norm_sq(), joint.B.norm_sq()
            rows.append((joint.t_prime, (na - nb) / (na + nb)))
    return rows


def _run_figure23(spec: RunSpec) -> list[tuple]:
    cfg = spec.config
    q0 = _initial_state(spec.initial, cfg.phi, spec.alpha, spec.beta)
    field = coherent(cfg.nbar, cfg.phi, cfg.n_max)
    ap, bp = to_pointer_basis(q0, cfg.phi)
    if spec.rwa:
        joints = (evolve_product(q0, field, float(tp)) for tp in _grid(spec))
    else:
        joints = iter(_oracle_states(spec, q0, field))
    rows = []
    for joint in joints:
        tp = joint.t_prime
        rows.append((tp, abs(reduce(joint).rho12),
                     abs(rho12_closed(ap, bp, cfg.phi, cfg.nbar, tp))))
    return rows


def _run_sweep(spec: RunSpec) -> list[tuple]:
    rows = []
    tp = spec.t_point
    for nb in spec.nbars:
        for ph in spec.phis:
            cfg = SimConfig(nbar=nb, phi=ph, g=spec.config.g, n_max=spec.nmax_flag)
            field = coherent(cfg.nbar, cfg.phi, cfg.n_max)
            q0 = _initial_state(spec.initial, ph, spec.alpha, spec.beta)
            joint = evolve_product(q0, field, tp)
            rho = reduce(joint)
            na, nb2 = joint.A.norm_sq(), joint.B.norm_sq()
            ap, bp = to_pointer_basis(q0, ph)
            cells = {
                "nbar": nb, "phi": ph, "t_prime": tp,
                "w": (na - nb2) / (na + nb2),
                "abs_rho12_exact": abs(rho.rho12),
                "abs_rho12_closed": abs(rho12_closed(ap, bp, ph, nb, tp)),
                "purity": purity(rho),
            }
            if "q_abs" in spec.columns:
                try:
                    cells["q_abs"] = q_from_rho(rho)
                except DegenerateBranchError:
                    cells["q_abs"] = math.nan
            rows.append(tuple(cells[c] for c in spec.columns))
    return rows


def _run_pointer_demo(spec: RunSpec) -> tuple[list[str], list[tuple]]:
    cfg = spec.config
    q0 = _initial_state(spec.initial, cfg.phi, spec.alpha, spec.beta)
    field = coherent(cfg.nbar, cfg.phi, cfg.n_max)
    extra = []
    for tp, state in coincidence_times(cfg.nbar, cfg.phi, spec.k_max):
        extra.append(
            f"coincidence t_prime={_fmt(tp)} "
            f"alpha={_fmt(state.alpha.real)}{state.alpha.imag:+.17g}j "
            f"beta={_fmt(state.beta.real)}{state.beta.imag:+.17g}j")
    rows = []
    for tp in _grid(spec):
        tp = float(tp)
        plus = pointer_state_at(cfg.phi, cfg.nbar, tp, PointerSign.PLUS)
        minus = pointer_state_at(cfg.phi, cfg.nbar, tp, PointerSign.MINUS)
        try:
            q = q_from_rho(reduce(evolve_product(q0, field, tp)))
        except DegenerateBranchError:
            q = math.nan
        rows.append((tp,
                     plus.alpha.real, plus.alpha.imag,
                     plus.beta.real, plus.beta.imag,
                     minus.alpha.real, minus.alpha.imag,
                     minus.beta.real, minus.beta.imag, q))
    return extra, rows


def _run_verify(spec: RunSpec) -> int:
    from .acceptance import run_all  # deferred: acceptance drives this CLI

    results = run_all()
    for r in results:
        print(r.line())
    rows = [(r.number, r.name.replace(",", ";"), int(r.passed),
             r.measured, r.threshold) for r in results]
    _write_csv(spec.output_path, [_params_comment(spec)],
               ("criterion", "name", "passed", "measured", "threshold"), rows)
    n_fail = sum(1 for r in results if not r.passed)
    print(f"{len(results) - n_fail}/{len(results)} criteria passed; "
          f"report written to {spec.output_path}")
    return 0 if n_fail == 0 else 2


def run(spec: RunSpec) -> int:
    """Execute one scenario; returns the process exit code."""
    if spec.scenario == "verify":
        return _run_verify(spec)
    if spec.scenario == "figure1":
        header = ("t_prime", "w")
        comments = [_params_comment(spec)]
        rows = _run_figure1(spec)
    elif spec.scenario in ("figure2", "figure3"):
        header = ("t_prime", "abs_rho12_exact", "abs_rho12_closed")
        comments = [_params_comment(spec)]
        rows = _run_figure23(spec)
    elif spec.scenario == "sweep":
        header = spec.columns
        comments = [_params_comment(spec)]
        rows = _run_sweep(spec)
    else:  # pointer-demo
        header = ("t_prime",
                  "plus_alpha_re", "plus_alpha_im", "plus_beta_re", "plus_beta_im",
                  "minus_alpha_re", "minus_alpha_im", "minus_beta_re", "minus_beta_im",
                  "q_abs")
        extra, rows = _run_pointer_demo(spec)
        comments = [_params_comment(spec)] + extra
    _write_csv(spec.output_path, comments, header, rows)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        spec = _make_spec(args)
        return run(spec)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SpinBosonError as exc:
        print(f"numerical guard: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
