"""Command-line front end.

Exit status: 0 on success, 1 when a requested check fails, 2 on usage,
bounds or file-format errors.  Everything printed on stdout is
machine-parseable; summaries and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import create_app
from .basisfile import canonical_json, dumps_basis, load_basis, loads_basis, save_basis
from .branching import (
    Mode,
    VerificationReport,
    branch_basis,
    closed_form_dim,
    count_check,
    kernel_dim_oracle,
    normalize_basis,
    parse_chain,
    verify_basis,
)
from .cache import BasisCache
from .clifford_core import MAX_DIM, parse_rational
from .config import Config
from .errors import BasisFormatError, BoundsError, ChainError, MBasisError
from .jacobi import jacobi_poly
from .poly_engine import fischer_gram


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    mode: Mode
    m: int
    n: int
    chain: Tuple[int, ...]
    out: Optional[str] = None
    verify: bool = False
    oracle: bool = False
    normalize: bool = False
    jobs: int = 1
    cache: bool = False


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_chain_arg(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.replace(' ', '').split(',') if part]
    except ValueError as exc:
        raise ChainError(f'chain must be comma separated integers: {text!r}') from exc


def _check_degree(n: int, config) -> None:
    if n < 0:
        raise BoundsError(f'degree must be non-negative, got {n}')
    limit = config['MAX_DEGREE']
    if n > limit:
        raise BoundsError(f'degree {n} exceeds the limit {limit} (set MBASIS_MAX_DEGREE to raise it)')


def _check_dim(m: int) -> None:
    if not 1 <= m <= MAX_DIM:
        raise BoundsError(f'dimension must lie in 1..{MAX_DIM}, got {m}')


def _check_oracle_dim(mode: Mode, m: int, config) -> None:
    limit = config['ORACLE_MAX_DIM_HARMONIC'] if mode is Mode.HARMONIC else config['ORACLE_MAX_DIM_MONOGENIC']
    if m > limit:
        raise BoundsError(f'oracle limited to m <= {limit} in {mode.value} mode, got {m}')


def run_config_from_args(args, config) -> RunConfig:
    mode = Mode.parse(args.mode)
    _check_dim(args.m)
    _check_degree(args.n, config)
    chain = parse_chain(args.m, _parse_chain_arg(args.chain))
    jobs = config['JOBS'] if args.jobs is None else args.jobs
    if jobs < 1:
        raise BoundsError(f'--jobs must be at least 1, got {jobs}')
    if args.oracle:
        _check_oracle_dim(mode, args.m, config)
    return RunConfig(mode, args.m, args.n, chain, args.out, args.verify, args.oracle, args.normalize, jobs, args.cache)


def _build(cfg: RunConfig):
    if not cfg.cache:
        return branch_basis(cfg.mode, cfg.m, cfg.n, cfg.chain, jobs=cfg.jobs)
    cache = BasisCache()
    cached = cache.get(cfg.mode, cfg.m, cfg.n, cfg.chain)
    if cached is not None:
        return loads_basis(cached).elements
    elements = branch_basis(cfg.mode, cfg.m, cfg.n, cfg.chain, jobs=cfg.jobs)
    cache.put(cfg.mode, cfg.m, cfg.n, cfg.chain, dumps_basis(cfg.mode, cfg.m, cfg.n, cfg.chain, elements), len(elements))
    return elements


def cmd_gen(args, config) -> int:
    cfg = run_config_from_args(args, config)
    elements = _build(cfg)
    report = None
    if cfg.verify:
        report = verify_basis(elements, cfg.mode, cfg.m, cfg.chain, oracle=cfg.oracle, n=cfg.n)
    elif cfg.oracle:
        report = VerificationReport(cfg.mode.value, cfg.m, cfg.n, cfg.chain, len(elements),
                                    [count_check(len(elements), cfg.mode, cfg.m, cfg.n)])
    normalization = None
    if cfg.normalize:
        normalization = [{'exact': item.exact, 'scale': item.scale} for item in normalize_basis(elements)]
    report_json = report.to_json() if report is not None else None
    if cfg.out:
        save_basis(cfg.out, cfg.mode, cfg.m, cfg.n, cfg.chain, elements, report_json, normalization)
    else:
        sys.stdout.write(dumps_basis(cfg.mode, cfg.m, cfg.n, cfg.chain, elements, report_json, normalization))
    _err(f'{len(elements)} elements ({cfg.mode.value}, m={cfg.m}, n={cfg.n}, chain={",".join(map(str, cfg.chain))})')
    if report is not None:
        _summarise(report)
        return EXIT_OK if report.passed else EXIT_FAILED
    return EXIT_OK


def _summarise(report: VerificationReport) -> None:
    for check in report.checks:
        status = 'skipped' if check.skipped else ('ok' if check.passed else f'FAILED ({len(check.failures)})')
        _err(f'  {check.name}: {status}')
        for failure in check.failures[:5]:
            _err(f'    {failure}')


def cmd_gram(args, config) -> int:
    basis = load_basis(args.path)
    gram = fischer_gram([el.poly for el in basis.elements])
    out = [f'size {gram.size}']
    out.extend(f'{i} {j} {value.format()}' for i, j, value in gram.nonzero())
    sys.stdout.write('\n'.join(out) + '\n')
    if gram.is_diagonal():
        return EXIT_OK
    _err(f'Gram matrix has {len(gram.off_diagonal())} off-diagonal entries')
    return EXIT_FAILED


def cmd_verify(args, config) -> int:
    basis = load_basis(args.path)
    if args.oracle:
        _check_oracle_dim(basis.mode, basis.m, config)
    report = verify_basis(basis.elements, basis.mode, basis.m, basis.chain, oracle=args.oracle, n=basis.n)
    sys.stdout.write(canonical_json(report.to_json()))
    _summarise(report)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_dims(args, config) -> int:
    mode = Mode.parse(args.mode)
    _check_dim(args.m)
    _check_degree(args.n, config)
    _check_oracle_dim(mode, args.m, config)
    dim = kernel_dim_oracle(mode, args.m, args.n)
    print(dim)
    _err(f'closed form: {closed_form_dim(mode, args.m, args.n)}')
    return EXIT_OK


def cmd_jacobi(args, config) -> int:
    _check_degree(args.n, config)
    alpha = parse_rational(args.alpha)
    beta = parse_rational(args.beta)
    poly = jacobi_poly(args.n, alpha, beta)
    for power, coeff in enumerate(poly.coefficient_list(args.n)):
        print(f'{power}: {coeff}')
    return EXIT_OK


def _mode_arg(text: str) -> str:
    try:
        return Mode.parse(text).value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='mbasis', description='Exact orthogonal bases of spherical harmonics and monogenics')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for progress, -vv for debug output')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='generate a basis file')
    gen.add_argument('--mode', type=_mode_arg, required=True, help='har/harmonic or mon/monogenic')
    gen.add_argument('--m', type=int, required=True, help='dimension of the ambient space')
    gen.add_argument('--n', type=int, required=True, help='degree')
    gen.add_argument('--chain', default=None, help='head dimensions per level, e.g. 2,2,1')
    gen.add_argument('--out', default=None, help='output path (default: stdout)')
    gen.add_argument('--verify', action='store_true', help='run all exact checks and embed the report')
    gen.add_argument('--oracle', action='store_true', help='compare the element count with the nullspace oracle')
    gen.add_argument('--normalize', action='store_true', help='add floating unit-norm scale factors')
    gen.add_argument('--jobs', type=int, default=None, help='worker processes for the top-level labels')
    gen.add_argument('--cache', action='store_true', help='reuse and store bases in the cache database')
    gen.set_defaults(handler=cmd_gen)

    gram = sub.add_parser('gram', help='print the exact Gram matrix of a basis file')
    gram.add_argument('path')
    gram.set_defaults(handler=cmd_gram)

    verify = sub.add_parser('verify', help='re-verify a basis file')
    verify.add_argument('path')
    verify.add_argument('--oracle', action='store_true')
    verify.set_defaults(handler=cmd_verify)

    dims = sub.add_parser('dims', help='dimension from the nullspace oracle')
    dims.add_argument('--mode', type=_mode_arg, required=True)
    dims.add_argument('--m', type=int, required=True)
    dims.add_argument('--n', type=int, required=True)
    dims.set_defaults(handler=cmd_dims)

    jac = sub.add_parser('jacobi', help='exact coefficients of a Jacobi polynomial')
    jac.add_argument('--n', type=int, required=True)
    jac.add_argument('--alpha', required=True, help='rational such as 1/2')
    jac.add_argument('--beta', required=True, help='rational such as 3/2')
    jac.set_defaults(handler=cmd_jacobi)
    return parser


def main(argv: Optional[Sequence[str]] = None, config_class=Config) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    app = create_app(config_class)
    if args.verbose:
        app.logger.setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)
    with app.app_context():
        try:
            return args.handler(args, app.config)
        except (BoundsError, ChainError, BasisFormatError) as exc:
            _err(f'error: {exc}')
            return EXIT_USAGE
        except MBasisError as exc:
            app.logger.exception('command failed')
            _err(f'error: {exc}')
            return EXIT_FAILED

