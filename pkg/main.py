"""
BSD 3-Clause License

Copyright (c) 2026, the ose-solver authors

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the following conditions are met:

1. Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.

2. Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

3. Neither the name of the copyright holder nor the names of its
   contributors may be used to endorse or promote products derived from
   this software without specific prior written permission.

THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""

"""
Command-line front end.

    ose solve  [scenario] [--out PATH]
    ose zones  [scenario] [--x-axis A --x-step 0.02 --y-axis gamma1 --y-step 0.01]
               [--solver table|oracle] [--format csv|json] [--out PATH]
    ose verify [scenario] [--grid-pe 1e-3 --grid-pi 2e-3 --grid-w 2e-3] [--format table|json]

A scenario is given either as a JSON file (--scenario) or with inline flags;
gamma2, w0 and K default to the study values 0.5, 0.05 and 0.

Exit status: 0 on success, 1 when a verification check fails, 2 on invalid
input (bad flags, unreadable or malformed scenario, domain violations,
oversized grids, unwritable output).
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import demand
import encoding
import global_params as gp
import oracle
import strategy
from data_models import DemandBundle
from scenario import REQUIRED_FIELDS, DomainError, baselines, validate_params

SCENARIO_FLAGS = (
    ("--theta", "theta"),
    ("--A", "A"),
    ("--gamma1", "gamma1"),
    ("--gamma2", "gamma2"),
    ("--m-i", "m_i"),
    ("--m-e", "m_e"),
    ("--w0", "w0"),
    ("--K", "K"),
)
STUDY_DEFAULTS = {"gamma2": gp.GAMMA2_DEFAULT, "w0": gp.W0_DEFAULT, "K": gp.K_DEFAULT}


def _add_scenario_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("scenario")
    group.add_argument("--scenario", metavar="FILE", help="scenario JSON file (excludes inline flags)")
    for flag, dest in SCENARIO_FLAGS:
        group.add_argument(flag, dest=dest, type=float, default=None)


def _add_grid_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("oracle grid")
    group.add_argument("--grid-pe", type=float, default=gp.STEP_PE, help="p_e step (default %(default)g)")
    group.add_argument("--grid-pi", type=float, default=gp.STEP_PI, help="p_i step (default %(default)g)")
    group.add_argument("--grid-w", type=float, default=gp.STEP_W, help="w step (default %(default)g)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ose",
        description="Open/close component-supply equilibrium solver.",
    )
    parser.add_argument("--quiet", action="store_true", help="no summary or diagnostics on stderr")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    solve = commands.add_parser("solve", help="solve one scenario")
    _add_scenario_options(solve)
    solve.add_argument("--format", choices=("json",), default="json")
    solve.add_argument("--out", metavar="PATH")
    solve.set_defaults(handler=run_solve)

    zones = commands.add_parser("zones", help="supply-strategy zone map over two parameter axes")
    _add_scenario_options(zones)
    _add_grid_options(zones)
    zones.add_argument("--x-axis", default="A", choices=strategy.SWEEP_AXES)
    zones.add_argument("--y-axis", default="gamma1", choices=strategy.SWEEP_AXES)
    zones.add_argument("--x-step", type=float, default=0.02)
    zones.add_argument("--y-step", type=float, default=0.01)
    zones.add_argument("--x-min", type=float, default=None)
    zones.add_argument("--x-max", type=float, default=None)
    zones.add_argument("--y-min", type=float, default=None)
    zones.add_argument("--y-max", type=float, default=None)
    zones.add_argument("--solver", choices=strategy.SOLVERS, default="table")
    zones.add_argument("--format", choices=("csv", "json"), default="csv")
    zones.add_argument("--out", metavar="PATH")
    zones.set_defaults(handler=run_zones)

    verify = commands.add_parser("verify", help="check closed forms against the brute-force oracle")
    _add_scenario_options(verify)
    _add_grid_options(verify)
    verify.add_argument("--format", choices=("table", "json"), default="table")
    verify.add_argument("--out", metavar="PATH")
    # negative control for the test-suite: perturbs the demand closed form
    verify.add_argument("--corrupt-fixture", action="store_true", help=argparse.SUPPRESS)
    verify.set_defaults(handler=run_verify)
    return parser


def scenario_fields(args: argparse.Namespace) -> Dict[str, Any]:
    """
    Raw scenario mapping from --scenario or the inline flags.

    Raises
    ------
    ValueError
        If both a scenario file and inline flags are given.
    """
    inline = {dest: getattr(args, dest) for _, dest in SCENARIO_FLAGS if getattr(args, dest) is not None}
    if args.scenario:
        if inline:
            raise ValueError(
                "--scenario cannot be combined with inline flags: " + ", ".join(sorted(inline))
            )
        return encoding.read_scenario(args.scenario)
    raw = dict(STUDY_DEFAULTS)
    raw.update(inline)
    return raw


def _grid(args: argparse.Namespace) -> oracle.GridSpec:
    return oracle.GridSpec(step_pe=args.grid_pe, step_pi=args.grid_pi, step_w=args.grid_w)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _note(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def run_solve(args: argparse.Namespace) -> int:
    params = validate_params(scenario_fields(args))
    outcome = strategy.stage1_decide(params)
    record = encoding.solve_record(params, baselines(params), outcome)
    _emit(encoding.dumps(record), args.out)
    for line in record["diagnostics"]:
        _note(args, f"diagnostic: {line}")
    return 0


def run_zones(args: argparse.Namespace) -> int:
    fixed = scenario_fields(args)
    axes = (args.x_axis, args.y_axis)
    missing = [key for key in REQUIRED_FIELDS if key not in axes and fixed.get(key) is None]
    if missing:
        raise DomainError([f"missing field '{key}'" for key in missing])
    fixed = {key: value for key, value in fixed.items() if key not in axes}
    x_values = strategy.axis_values(args.x_axis, args.x_step, fixed, args.x_min, args.x_max)
    y_values = strategy.axis_values(args.y_axis, args.y_step, fixed, args.y_min, args.y_max)
    grid = _grid(args) if args.solver == "oracle" else None
    zone_map = strategy.pareto_sweep(
        fixed,
        x_values,
        y_values,
        x_axis=args.x_axis,
        y_axis=args.y_axis,
        solver=args.solver,
        grid=grid,
    )
    if args.format == "json":
        _emit(encoding.dumps(encoding.zone_record(zone_map)), args.out)
    elif args.out:
        encoding.write_zone_csv(zone_map, args.out)
    else:
        encoding.write_zone_csv(zone_map, sys.stdout)
    _note(
        args,
        f"zones: {len(x_values)}x{len(y_values)} cells, open={zone_map.open_count} "
        f"closed={zone_map.closed_count} masked={zone_map.masked_count}",
    )
    return 0


def _corrupted(original):
    def corrupted(prices, params):
        bundle = original(prices, params)
        q_i = bundle.Q_i * 1.05 + 1e-3
        return DemandBundle(Q_i=q_i, Q_e=bundle.Q_e, Q_s=q_i + bundle.Q_e)
    return corrupted


def run_verify(args: argparse.Namespace) -> int:
    params = validate_params(scenario_fields(args))
    grid = _grid(args)
    closed_form = _corrupted(demand.demand) if args.corrupt_fixture else demand.demand
    report = oracle.verify_scenario(params, grid, closed_form=closed_form)
    if args.format == "json":
        _emit(encoding.dumps(encoding.report_record(report)), args.out)
    else:
        _emit(report.format_table() + "\n", args.out)
    if not report.passed:
        _note(args, "verify: " + ", ".join(row.name for row in report.failures) + " failed")
        return 1
    return 0


def main(argv=None) -> int:
    """
    Entry point.

    Parameters
    ----------
    argv : list of str or None, optional
        Command-line arguments. If None, uses sys.argv.

    Returns
    -------
    int
        Exit status (0 ok, 1 verification failure, 2 invalid input).
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        for violation in exc.violations:
            print(f"error: {violation}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        # covers missing files, malformed JSON, oversized grids and bad steps
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
