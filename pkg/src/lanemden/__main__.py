"""Command-line entry point (`lanemden` or `python -m lanemden`)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__


def _add_constant(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-C", "--constant",
        dest="C",
        type=float,
        required=True,
        help="Integration constant C of the autonomous form.",
    )


def _add_solution(p: argparse.ArgumentParser) -> None:
    _add_constant(p)
    p.add_argument("-B", "--scale", dest="B", type=float, default=1.0,
                   help="Scale constant B > 0 (default: 1).")
    p.add_argument("--branch", type=int, choices=(1, -1), default=1,
                   help="Overall sign of the solution (default: +1).")


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", dest="json_output", action="store_true",
                   help="Emit JSON instead of Rich output.")


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--xi-min", type=float, default=None, help="Smallest ξ (default from config).")
    p.add_argument("--xi-max", type=float, default=None, help="Largest ξ (default from config).")
    p.add_argument("-n", "--points", type=int, default=None, help="Number of ξ values.")
    p.add_argument("-o", "--output", type=Path, default=None,
                   help="Write CSV to this file instead of stdout.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lanemden",
        description="Evaluate and verify closed-form solutions of the n=5 Lane–Emden equation.",
    )
    parser.add_argument(
        "-V", "--version",
        action="version",
        version=f"lanemden {__version__}",
    )
    parser.add_argument(
        "--init-config",
        action="store_true",
        help="Create a default config file and exit.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("classify", help="Show the regime and factorization for C.")
    _add_constant(p)
    _add_json(p)

    p = sub.add_parser("roots", help="Compare factorization roots with bisection roots.")
    _add_constant(p)
    _add_json(p)

    p = sub.add_parser("eval", help="Evaluate θ and dθ/dξ at one ξ.")
    _add_solution(p)
    p.add_argument("--xi", type=float, required=True, help="Radius ξ.")
    _add_json(p)

    p = sub.add_parser("sample", help="Tabulate a solution as CSV.")
    _add_solution(p)
    _add_range(p)
    spacing = p.add_mutually_exclusive_group()
    spacing.add_argument("--log", dest="log_spacing", action="store_const", const=True,
                         default=None, help="Log-spaced ξ values.")
    spacing.add_argument("--linear", dest="log_spacing", action="store_const", const=False,
                         help="Evenly spaced ξ values.")

    p = sub.add_parser("figure", help="Emit the multi-curve CSV for figure 1 or 2.")
    p.add_argument("id", type=int, choices=(1, 2), help="Figure number.")
    _add_range(p)

    p = sub.add_parser("verify", help="Run the acceptance checks; exit 1 on any failure.")
    p.add_argument(
        "-C", "--constant",
        dest="grid",
        type=float,
        nargs="+",
        default=None,
        help="Constants to check (default: the configured grid).",
    )
    _add_json(p)

    p = sub.add_parser("lambda", help="Discrete scaling factor λ(C, m) and its fixed-point error.")
    _add_constant(p)
    p.add_argument("-m", type=int, default=1, help="Scaling order m (default: 1).")
    _add_json(p)

    return parser


def main(argv: list[str] | None = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.init_config:
        from .config import init_config
        init_config()
        return

    if args.command is None:
        parser.print_help(sys.stderr)
        sys.exit(2)

    from .config import load_config
    from .errors import LaneEmdenError

    config = load_config()

    try:
        code = _dispatch(args, config)
    except LaneEmdenError as e:
        print(f"lanemden: {e}", file=sys.stderr)
        sys.exit(1)
    except OSError as e:
        print(f"lanemden: {e}", file=sys.stderr)
        sys.exit(1)
    if code:
        sys.exit(code)


def _dispatch(args: argparse.Namespace, config) -> int:
    from .models import SolutionParams

    cmd = args.command

    if cmd == "classify":
        from .cli.inspect import cmd_classify
        cmd_classify(args.C, json_output=args.json_output)
        return 0

    if cmd == "roots":
        from .cli.inspect import cmd_roots
        cmd_roots(args.C, json_output=args.json_output)
        return 0

    if cmd == "eval":
        from .cli.sample import cmd_eval
        params = SolutionParams.for_constant(args.C, B=args.B, branch=args.branch)
        cmd_eval(params, args.xi, json_output=args.json_output)
        return 0

    sample_cfg = config.sample
    if cmd in ("sample", "figure"):
        xi_min = args.xi_min if args.xi_min is not None else sample_cfg.xi_min
        xi_max = args.xi_max if args.xi_max is not None else sample_cfg.xi_max
        n = args.points if args.points is not None else sample_cfg.points

    if cmd == "sample":
        from .cli.sample import cmd_sample
        params = SolutionParams.for_constant(args.C, B=args.B, branch=args.branch)
        log_spacing = args.log_spacing if args.log_spacing is not None else sample_cfg.log_spacing
        cmd_sample(params, xi_min, xi_max, n, log_spacing, output=args.output)
        return 0

    if cmd == "figure":
        from .cli.sample import cmd_figure
        cmd_figure(args.id, xi_min, xi_max, n, output=args.output)
        return 0

    verify_cfg = config.verify.with_env_overrides()

    if cmd == "verify":
        from .cli.verify import cmd_verify
        return cmd_verify(verify_cfg, grid=args.grid, json_output=args.json_output)

    if cmd == "lambda":
        from .cli.verify import cmd_lambda
        cmd_lambda(args.C, args.m, verify_cfg, json_output=args.json_output)
        return 0

    raise AssertionError(f"unhandled command {cmd!r}")


if __name__ == "__main__":
    main()
