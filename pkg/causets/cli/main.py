"""
Command-line front end: python -m causets.cli <command> [flags]

Exit status is 0 on success, 1 when a check fails, 2 on a usage or config
error and 3 when a domain error stops the run
"""
import argparse
import logging
import sys

from causets.cli.commands import COMMANDS, PROPERTIES, run_command
from causets.cli.config import (FORMATS, RunConfig, load_config, merge_config,
                                parse_params, parse_value)
from causets.cli.output import emit, write_output
from causets.exceptions import CausetError, UsageError

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageParser(argparse.ArgumentParser):
    """
    Raises UsageError instead of exiting, so run() decides the exit status
    """

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(prog='causets',
                         description='Order-invariant measures on causal sets')
    parser.add_argument('command', nargs='?', choices=sorted(COMMANDS),
                        help='what to run')
    parser.add_argument('--config', help='JSON file of RunConfig fields')
    parser.add_argument('--family', help='family preset')
    parser.add_argument('--family-param', action='append', metavar='KEY=VALUE',
                        help='family preset parameter, repeatable')
    parser.add_argument('--measure', help='measure preset')
    parser.add_argument('--measure-param', action='append', metavar='KEY=VALUE',
                        help='measure preset parameter, repeatable')
    parser.add_argument('--stem', nargs='+', help='ordered stem by element names')
    parser.add_argument('--given', nargs='+',
                        help='stem deleted from the measure before evaluating')
    parser.add_argument('--element', help='element name')
    parser.add_argument('--poset', help='poset file')
    parser.add_argument('--shape', help='tree preset or grid row lengths')
    parser.add_argument('--property', dest='prop', choices=sorted(PROPERTIES),
                        help='property for the check command')
    parser.add_argument('--mode', choices=('full', 'adjacent'),
                        help='order-invariance mode')
    parser.add_argument('--exhaustion', help='exhaustion rule')
    parser.add_argument('--n', type=int, help='size, horizon or exhaustion index')
    parser.add_argument('--j', type=int, help='position for the absence bound')
    parser.add_argument('--k', type=int, help='bound on minimal elements or |I(x)|')
    parser.add_argument('--bound', type=parse_value, help='first-place bound, e.g. 1/2')
    parser.add_argument('--depth', type=int, help='check depth')
    parser.add_argument('--n-min', type=int, help='first exhaustion index')
    parser.add_argument('--n-max', type=int, help='last exhaustion index')
    parser.add_argument('--tol', type=float, help='tolerance')
    parser.add_argument('--steps', type=int, help='simulation steps')
    parser.add_argument('--replicas', type=int, help='Monte-Carlo replicas')
    parser.add_argument('--k-grid', help='comma-separated prefix lengths')
    parser.add_argument('--budget', type=int, help='stem or state budget')
    parser.add_argument('--seed', type=int, help='seed; defaults to $CAUSETS_SEED')
    parser.add_argument('--workers', type=int, help='threads for replicas')
    parser.add_argument('--format', choices=FORMATS, help='output format')
    parser.add_argument('--out', help='output path instead of stdout')
    parser.add_argument('--verbose', action='store_true', default=None,
                        help='log at INFO')
    return parser


def parse_config(argv) -> RunConfig:
    """
    Reads the flags and the optional config file into a RunConfig
    :param argv: argument list without the program name
    :raises UsageError: bad flags, config or parameter values
    """
    args = build_parser().parse_args(argv)
    flags = vars(args)
    path = flags.pop('config')
    file_values = load_config(path) if path else {}
    for field in ('family_param', 'measure_param'):
        pairs = flags.pop(field)
        flags[field + 's'] = parse_params(pairs) if pairs else None
    return merge_config(file_values, flags)


def configure_logging(verbose: bool):
    """
    Module loggers sit at INFO, so the level that decides what is printed is
    the one on the root handlers
    """
    level = logging.INFO if verbose else logging.CRITICAL
    logging.basicConfig(level=level)
    for handler in logging.getLogger().handlers:
        handler.setLevel(level)


def exit_status(report) -> int:
    passed = getattr(report, 'passed', None)
    return EXIT_CHECK_FAILED if passed is False else EXIT_OK


def execute(config: RunConfig, stream=None) -> int:
    """
    Runs one config and writes its report
    :param config: validated RunConfig
    :param stream: text stream for output when config.out is unset
    :return: exit status
    """
    report = run_command(config)
    write_output(emit(report, config.format), config.out, stream or sys.stdout)
    return exit_status(report)


def run(argv=None, stream=None) -> int:
    """
    Entry point shared by the console and the batch driver
    :param argv: arguments; sys.argv[1:] by default
    :param stream: output stream; stdout by default
    :return: exit status
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_config(argv)
        configure_logging(config.verbose)
        return execute(config, stream)
    except UsageError as e:
        print(f'causets: {e}', file=sys.stderr)
        return EXIT_USAGE
    except CausetError as e:
        print(f'causets: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
