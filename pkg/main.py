# File: main.py

"""
TsadLab/main.py

Main entry point for the TsadLab command line.
Parses the subcommand, loads configuration and logging, and maps library
errors to exit statuses.
"""

import argparse
import logging
import sys

from config.configManager import detectOS, loadOrCreateConfig
from core.errors import TsadLabError
from cli.commands import (
    EXIT_INPUT_ERROR, cmdCatalog, cmdClassify, cmdPropcheck, cmdRank, cmdScore,
)
from cli.sequenceFiles import FORMATS
from rankings.synthetic import BATTERIES

# Spacer for readability
# ------------------------------------------------------------------------------

def setupLoggingModule(config):
    """
    Initializes the logging module with rolling file handlers, using the
    'logging' section of the configuration.
    """
    import loggingSetup

    settings = config.get('logging', {})
    loggingSetup.setupLogging(settings.get('logDir', 'log/'), settings.get('level', 'INFO'))
    logging.info("Logging setup complete.")

# Spacer for readability
# ------------------------------------------------------------------------------

def buildParser():
    """
    Builds the argument parser with one subparser per command.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    parser = argparse.ArgumentParser(
        prog='tsadlab',
        description='Evaluation metrics for time-series anomaly detection: scoring, '
                    'property checks and ranking comparisons.',
    )
    parser.add_argument('--config-dir', default=None, help='Directory holding config.json')

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--format', choices=('json', 'csv'), default='json', help='Output format (default json)')
    output.add_argument('--out', default=None, help='Output file (score, classify, catalog) or directory '
                                                    '(propcheck, rank); stdout when omitted')

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument('--input-format', choices=FORMATS, default=None,
                        help='Sequence file format; detected from the extension when omitted')

    metricParams = argparse.ArgumentParser(add_help=False)
    metricParams.add_argument('--params', nargs='*', default=[], metavar='NAME=VALUE',
                              help='Metric parameter overrides such as k=2 or d=9/10')

    workers = argparse.ArgumentParser(add_help=False)
    workers.add_argument('--workers', default=None,
                         help='Worker processes (default: TSADLAB_WORKERS, then the config file)')

    subparsers = parser.add_subparsers(dest='command', required=True)

    score = subparsers.add_parser('score', parents=[output, inputs, metricParams],
                                  help='Score one prediction against a ground truth')
    score.add_argument('--metric', required=True, help='Catalog metric id')
    score.add_argument('--gt', required=True, help='Ground truth file')
    score.add_argument('--pred', required=True, help='Prediction file')
    score.set_defaults(handler=cmdScore)

    classify = subparsers.add_parser('classify', parents=[output, inputs],
                                     help='Show detected, true false, early and late alarms')
    classify.add_argument('--gt', required=True, help='Ground truth file')
    classify.add_argument('--pred', required=True, help='Prediction file')
    classify.set_defaults(handler=cmdClassify)

    propcheck = subparsers.add_parser('propcheck', parents=[output, metricParams, workers],
                                      help='Check metrics against the properties by exhaustive enumeration')
    propcheck.add_argument('--metric', '--metrics', dest='metric', default='all',
                           help="Metric id, comma list or 'all' (default)")
    propcheck.add_argument('--properties', default='all',
                           help="'all', 'simple', 'advanced' or a comma list such as P1,P5,A2")
    propcheck.add_argument('--max-len', type=int, default=None, help='Largest sequence length enumerated')
    propcheck.add_argument('--fixtures', action='store_true', help='Also evaluate the reference fixtures')
    propcheck.set_defaults(handler=cmdPropcheck)

    rank = subparsers.add_parser('rank', parents=[output, inputs, metricParams, workers],
                                 help='Rank predictions under several metrics and compare the rankings')
    rank.add_argument('--metrics', '--metric', dest='metrics', required=True,
                      help="Comma list of metric ids or 'all'")
    rank.add_argument('--gt', required=True, help='Ground truth file')
    source = rank.add_mutually_exclusive_group(required=True)
    source.add_argument('--preds', default=None, help='Directory of prediction files')
    source.add_argument('--battery', choices=sorted(BATTERIES), default=None,
                        help='Generate a synthetic prediction battery')
    rank.add_argument('--seed', type=int, default=None, help='Battery seed (default from the config file)')
    rank.set_defaults(handler=cmdRank)

    catalog = subparsers.add_parser('catalog', parents=[output], help='List the metric catalog')
    catalog.set_defaults(handler=cmdCatalog)

    return parser

# Spacer for readability
# ------------------------------------------------------------------------------

def main(argv=None):
    """
    Runs one TsadLab command.

    Args:
        argv (list): Arguments without the program name; sys.argv[1:] when None.

    Returns:
        int: Exit status: 0 success, 1 internal error, 2 input or usage error,
        3 undefined score, 4 property matrix mismatch.
    """
    args = buildParser().parse_args(argv)

    osFlags = detectOS()
    config = loadOrCreateConfig(osFlags, args.config_dir)
    setupLoggingModule(config)
    logging.info(f"Running command '{args.command}'")

    try:
        return args.handler(args, config)
    except (TsadLabError, OSError) as e:
        print(f"🚫 {e}", file=sys.stderr)
        logging.error(f"Command '{args.command}' failed: {e}")
        return EXIT_INPUT_ERROR
    except Exception as e:
        print(f"🚫 An unexpected error occurred: {e}", file=sys.stderr)
        logging.exception(f"Unexpected failure in command '{args.command}'")
        return 1

# Spacer for readability
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    sys.exit(main())
