"""
Command-line front end

    hypermatch <command> [options]

Reports go to stdout as JSON, logs and error dumps to stderr.
"""
import argparse
import json
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from hypermatch.cli import reports
from hypermatch.cli.codec import (
    decode_decomposition,
    decode_instance,
    encode_decomposition,
    encode_instance,
)
from hypermatch.core.instances import (
    BMatchInstance,
    DemandInstance,
    FractionalSolution,
    is_feasible,
    is_fractionally_feasible,
    validate,
)
from hypermatch.core.parameters import effective_k
from hypermatch.core.report import SolveReport
from hypermatch.local_ratio.hdm import hdm
from hypermatch.lp.program import build_lp
from hypermatch.lp.simplex import solve_to_vertex
from hypermatch.oracle.brute_force import brute_force
from hypermatch.oracle.gap import generate, integrality_gap
from hypermatch.oracle.suite import run_suite
from hypermatch.packing.combination import best_term, expected_value
from hypermatch.packing.context import recomposition_ok
from hypermatch.packing.hbm import decompose
from hypermatch.reductions.auction import AuctionInput, auction_to_bipartite, sample_allocation
from hypermatch.reductions.bounded_color import (
    ColoredInstance,
    bounded_color_to_bipartite,
    solve_bounded_color,
)
from hypermatch.shared.communication import Document
from hypermatch.shared.config import Config
from hypermatch.shared.constants import Algorithm, ExitCode, GeneratorFamily, InstanceKind
from hypermatch.shared.errors import (
    BudgetExceededError,
    HypermatchError,
    InvariantViolation,
    ParseError,
    ValidationError,
)

logger = logging.getLogger(__name__)

EXIT_CODES = [
    (ParseError, ExitCode.PARSE),
    (ValidationError, ExitCode.VALIDATION),
    (BudgetExceededError, ExitCode.BUDGET),
    (InvariantViolation, ExitCode.INTERNAL),
]

SUITES = ('lp-relative', 'bipartite', 'demand', 'bounded-color', 'auction')


def exit_code_for(exc: BaseException) -> ExitCode:
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return ExitCode.INTERNAL


def load_document(path: str, kind: Optional[InstanceKind] = None) -> Document:
    """Read a document; files without a kind field default to kind"""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"Cannot read {path}: {exc}") from exc
    return Document.from_text(text, default_kind=kind or InstanceKind.BMATCH)


def _apply_bipartite_flag(instance: BMatchInstance, args) -> BMatchInstance:
    """Use the embedded witness only when --bipartite is given"""
    if not args.bipartite:
        return replace(instance, bipartite_witness=None)
    if instance.bipartite_witness is None:
        raise ValidationError("--bipartite given but the instance has no bipartite_u witness")
    return instance


def _expect(instance, cls, command: str):
    if not isinstance(instance, cls):
        raise ValidationError(f"{command} needs a {cls.__name__}, got {type(instance).__name__}")
    return instance


def _timed(args, body: Dict[str, Any], started: float) -> Dict[str, Any]:
    if not args.no_timing:
        body['wall_time'] = round(time.perf_counter() - started, 6)
    return body


def cmd_solve_lp(instance, args) -> Dict[str, Any]:
    if isinstance(instance, (ColoredInstance, AuctionInput)):
        raise ValidationError("solve-lp takes b-matching or demand instances")
    instance = validate(instance)
    return reports.lp_report(solve_to_vertex(build_lp(instance)))


def cmd_decompose(instance, args) -> Dict[str, Any]:
    instance = _apply_bipartite_flag(_expect(instance, BMatchInstance, 'decompose'), args)
    lp_result, comb = decompose(instance, prune=args.prune)
    best, best_value = best_term(comb, instance.w)
    ilp_value = brute_force(instance, args.budget)[0] if args.oracle else None
    report = SolveReport(Algorithm.HBM, lp_result.value, comb.alpha, len(comb), best_value,
                         comb.alpha, best, ilp_value)
    body = reports.solve_report(report)
    body['expected_value'] = reports.rational(expected_value(comb, instance.w))
    body['terms'] = [[reports.rational(t.weight), t.solution.edges()] for t in comb]
    body['recomposition'] = recomposition_ok(comb, lp_result.solution.values)
    if args.output:
        document = encode_decomposition(validate(instance), lp_result.solution.values, comb)
        Path(args.output).write_text(document.to_text())
    return body


def cmd_demand_match(instance, args) -> Dict[str, Any]:
    instance = validate(_expect(instance, DemandInstance, 'demand-match'))
    lp_value = solve_to_vertex(build_lp(instance)).value
    solution, trace = hdm(instance)
    value = solution.weight(instance.w)
    ilp_value = brute_force(instance, args.budget)[0] if args.oracle else None
    bound = 2 * effective_k(instance.hypergraph, False)
    report = SolveReport(Algorithm.HDM, lp_value, None, len(trace), value, bound,
                         solution, ilp_value)
    body = reports.solve_report(report)
    if args.trace:
        body['trace'] = trace.to_dict()
    return body


def cmd_bounded_color(instance, args) -> Dict[str, Any]:
    ci = _expect(instance, ColoredInstance, 'bounded-color')
    report = solve_bounded_color(ci, prune=args.prune)
    if args.oracle:
        reduced, _ = bounded_color_to_bipartite(ci)
        report = replace(report, ilp_value=brute_force(reduced, args.budget)[0])
    return reports.solve_report(report)


def cmd_auction(instance, args) -> Dict[str, Any]:
    a = _expect(instance, AuctionInput, 'auction')
    allocation = sample_allocation(a, seed=args.seed, prune=args.prune)
    body = reports.allocation_report(allocation, args.seed)
    if args.oracle:
        reduced, _ = auction_to_bipartite(a)
        body['ilp_value'] = reports.rational(brute_force(reduced, args.budget)[0])
    return body


def cmd_gap(instance, args) -> Dict[str, Any]:
    if isinstance(instance, BMatchInstance):
        instance = _apply_bipartite_flag(instance, args)
    elif not isinstance(instance, DemandInstance):
        raise ValidationError("gap takes b-matching or demand instances")
    return reports.gap_report(integrality_gap(instance, args.budget))


INSTANCE_COMMANDS: Dict[str, Callable] = {
    'solve-lp': cmd_solve_lp,
    'decompose': cmd_decompose,
    'demand-match': cmd_demand_match,
    'bounded-color': cmd_bounded_color,
    'auction': cmd_auction,
    'gap': cmd_gap,
}

DEFAULT_KINDS = {
    'demand-match': InstanceKind.DEMAND,
    'bounded-color': InstanceKind.COLORED,
    'auction': InstanceKind.AUCTION,
}


def verify_decomposition(path: str) -> Dict[str, Any]:
    """Re-check a saved decomposition: sum lambda, recomposition, feasibility"""
    instance, x, comb = decode_decomposition(load_document(path, InstanceKind.DECOMPOSITION))
    instance = validate(instance)
    problems: List[str] = comb.check()
    if comb.alpha < 1:
        problems.append(f"alpha {comb.alpha} below 1")
    if len(x) != instance.hypergraph.num_edges:
        problems.append("x length differs from the edge count")
    else:
        if not is_fractionally_feasible(instance, FractionalSolution(tuple(x))):
            problems.append("x is not LP-feasible")
        if not recomposition_ok(comb, x):
            problems.append("sum lambda_i x^i differs from x")
        for index, term in enumerate(comb.terms):
            if not is_feasible(instance, term.solution):
                problems.append(f"term {index} is infeasible")
    return {
        'decomposition': path,
        'alpha': reports.rational(comb.alpha),
        'term_count': len(comb),
        'verified': not problems,
        'problems': problems,
    }


def _run_one(command: str, path: str, args) -> Dict[str, Any]:
    started = time.perf_counter()
    instance = decode_instance(load_document(path, DEFAULT_KINDS.get(command)))
    body = {'instance': path, 'command': command}
    body.update(INSTANCE_COMMANDS[command](instance, args))
    return _timed(args, body, started)


def _report_error(exc: BaseException, path: Optional[str]):
    where = f"{path}: " if path else ""
    print(f"error: {where}{exc}", file=sys.stderr)
    if isinstance(exc, InvariantViolation):
        print(json.dumps(exc.state, indent=2, default=str), file=sys.stderr)


def _emit(bodies: List[Dict[str, Any]]):
    payload: Any = bodies[0] if len(bodies) == 1 else bodies
    print(json.dumps(payload, indent=2))


def run_instances(args) -> int:
    """Run an instance command over every --instance, preserving input order"""
    if not args.instance:
        raise ValidationError(f"{args.command} needs at least one --instance")
    if getattr(args, 'output', None) and len(args.instance) > 1:
        raise ValidationError("--output needs exactly one --instance")

    def attempt(path):
        try:
            return _run_one(args.command, path, args), None
        except HypermatchError as exc:
            return None, exc

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        outcomes = list(pool.map(attempt, args.instance))

    bodies, code = [], ExitCode.OK
    for path, (body, exc) in zip(args.instance, outcomes):
        if exc is None:
            bodies.append(body)
            continue
        _report_error(exc, path)
        if code == ExitCode.OK:
            code = exit_code_for(exc)
    if bodies:
        _emit(bodies)
    return int(code)


def run_gen(args) -> int:
    instance = generate(GeneratorFamily(args.family), args.q)
    text = encode_instance(instance).to_text()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return int(ExitCode.OK)


def run_verify(args) -> int:
    body = verify_decomposition(args.decomposition)
    _emit([body])
    return int(ExitCode.OK if body['verified'] else ExitCode.VALIDATION)


def run_suite_command(args) -> int:
    summary = run_suite(args.name, seed=args.seed, count=args.count, log_dir=args.log_dir,
                        oracle=args.oracle, budget=args.budget)
    _emit([summary])
    return int(ExitCode.OK if summary['failures'] == 0 else ExitCode.INTERNAL)


def build_parser(config: Config) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--instance', action='append', default=[],
                        help='instance file (repeatable)')
    common.add_argument('--jobs', type=int, default=1, help='parallel workers across instance files')
    common.add_argument('--bipartite', action='store_true',
                        help='use the embedded bipartite_u witness')
    common.add_argument('--oracle', action='store_true', help='also compute the brute-force optimum')
    common.add_argument('--seed', type=int, default=config.DEFAULT_SEED)
    common.add_argument('--no-timing', action='store_true', help='omit wall_time from reports')
    common.add_argument('--budget', type=int, default=config.ORACLE_BUDGET,
                        help='brute-force search-space bound')
    common.add_argument('--log-level', type=str.upper, default=config.LOG_LEVEL,
                        choices=config.LOG_LEVELS)

    parser = argparse.ArgumentParser(
        prog='hypermatch',
        description='Exact LP-relative approximations for hypergraph b-matching and demand matching')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('solve-lp', parents=[common], help='exact LP optimum at a vertex')
    decompose_cmd = commands.add_parser('decompose', parents=[common],
                                        help='rho-convex combination of the LP vertex')
    decompose_cmd.add_argument('--output', help='save the decomposition for verify')
    decompose_cmd.add_argument('--prune', action='store_true', help='Caratheodory-prune the terms')
    demand_cmd = commands.add_parser('demand-match', parents=[common], help='local-ratio demand matching')
    demand_cmd.add_argument('--trace', action='store_true', help='include the weight decomposition')
    color_cmd = commands.add_parser('bounded-color', parents=[common], help='color-budgeted b-matching')
    color_cmd.add_argument('--prune', action='store_true')
    auction_cmd = commands.add_parser('auction', parents=[common], help='sample an allocation')
    auction_cmd.add_argument('--prune', action='store_true')
    commands.add_parser('gap', parents=[common], help='exact integrality gap')

    gen_cmd = commands.add_parser('gen', parents=[common], help='generate a tight-gap instance')
    gen_cmd.add_argument('--family', choices=[f.value for f in GeneratorFamily], required=True)
    gen_cmd.add_argument('--q', type=int, required=True)
    gen_cmd.add_argument('--output')

    verify_cmd = commands.add_parser('verify', parents=[common], help='audit a saved decomposition')
    verify_cmd.add_argument('--decomposition', required=True)

    suite_cmd = commands.add_parser('suite', parents=[common], help='run a random verification suite')
    suite_cmd.add_argument('--name', choices=SUITES, required=True)
    suite_cmd.add_argument('--count', type=int)
    suite_cmd.add_argument('--log-dir', default=config.REPORT_DIR,
                           help='CSV and metadata output directory')
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch, and return the process exit code"""
    config = Config.from_env()
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(ExitCode.PARSE) if exc.code else int(ExitCode.OK)
    logging.basicConfig(level=args.log_level.upper(), format=config.LOG_FORMAT, stream=sys.stderr)

    try:
        if args.command == 'gen':
            return run_gen(args)
        if args.command == 'verify':
            return run_verify(args)
        if args.command == 'suite':
            return run_suite_command(args)
        return run_instances(args)
    except HypermatchError as exc:
        _report_error(exc, None)
        return int(exit_code_for(exc))


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
