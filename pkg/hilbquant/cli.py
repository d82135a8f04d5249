"""Command-line surface: matrix, verify, two-point."""
import argparse
import json
import sys
from multiprocessing import Pool

from .errors import HilbQuantError
from .export import FORMATS
from .logger import get_logger
from .pipeline import BASES, QuantumPipeline, verify
from .suites import SUITE_ALIASES, SUITES

logger = get_logger(__name__)


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog='hilbquant', description='Quantum multiplication by divisors on Hilb(A_n).')
    commands = parser.add_subparsers(dest='command', required=True)

    matrix = commands.add_parser('matrix', help='closed-form matrix of a divisor operator')
    matrix.add_argument('--m', type=int, required=True, help='number of points')
    matrix.add_argument('--n', type=int, required=True, help='rank of the A_n surface')
    matrix.add_argument('--divisor', default='D', help='D or omega:<i>')
    matrix.add_argument('--labels', default='e', help='label basis: e, omega, fixed or ew')
    matrix.add_argument('--format', choices=FORMATS, default='text')

    check = commands.add_parser('verify', help='run verification suites')
    check.add_argument('suites', nargs='*', metavar='suite', help=f'one of: {", ".join(SUITES)}')
    check.add_argument('--suite', action='append', default=[], help='same as the positional suite names')
    check.add_argument('--m', type=int)
    check.add_argument('--n', type=int)
    check.add_argument('--i', type=int)
    check.add_argument('--j', type=int)
    check.add_argument('--max-seconds', type=int, default=None, help='wall-clock budget per suite')
    check.add_argument('--jobs', type=int, default=1, help='suites run in parallel')

    pair = commands.add_parser('two-point', help='theta <mu|Omega|nu>')
    pair.add_argument('mu')
    pair.add_argument('nu')
    pair.add_argument('--n', type=int, required=True)
    pair.add_argument('--labels', default='omega', help='label basis of mu and nu in the nakajima basis')
    pair.add_argument('--basis', choices=BASES, default='nakajima')
    pair.add_argument('--format', choices=FORMATS, default='text')
    return parser.parse_args(argv)


def _run_one(job):
    suite, max_seconds, params = job
    return verify(suite, max_seconds, **params).to_dict()


def cmd_matrix(args) -> int:
    print(QuantumPipeline(args.n, args.labels).matrix(args.m, args.divisor, args.format))
    return 0


def cmd_verify(args) -> int:
    suites = list(args.suites) + list(args.suite) or list(SUITES)
    unknown = [s for s in suites if s not in SUITES and s not in SUITE_ALIASES]
    if unknown:
        print(f'[error] unknown suite(s) {unknown}; expected one of {", ".join(SUITES)}', file=sys.stderr)
        return 2
    params = {k: getattr(args, k) for k in ('m', 'n', 'i', 'j') if getattr(args, k) is not None}
    jobs = [(suite, args.max_seconds, params) for suite in suites]
    if args.jobs > 1 and len(jobs) > 1:
        with Pool(min(args.jobs, len(jobs))) as pool:
            reports = pool.map(_run_one, jobs)
    else:
        reports = [_run_one(job) for job in jobs]
    print(json.dumps({'reports': reports}, indent=2, default=str))
    failed = [r['suite'] for r in reports if not r['passed']]
    for report in reports:
        status = 'OK' if report['passed'] else 'FAIL'
        print(f"[verify] {status} {report['suite']} {report['counts']}", file=sys.stderr)
    return 1 if failed else 0


def cmd_two_point(args) -> int:
    pipeline = QuantumPipeline(args.n, args.labels)
    print(pipeline.render_two_point(args.mu, args.nu, args.basis, args.format))
    return 0


COMMANDS = {
    'matrix': cmd_matrix,
    'verify': cmd_verify,
    'two-point': cmd_two_point,
}


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except HilbQuantError as exc:
        logger.debug('command %s failed', args.command, exc_info=True)
        print(f'[error] {exc.message}', file=sys.stderr)
        return exc.exit_code


if __name__ == '__main__':
    sys.exit(main())
