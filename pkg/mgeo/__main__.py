"""
Entry point of ``python -m mgeo``: parse the command line, configure logging, then run.
"""

import os
import sys
import logging
import logging.handlers

from .main import parse_arguments, run_args, EXIT_USAGE

FILE_FORMAT = '%(asctime)s [%(levelname)s](%(name)s:%(funcName)s:%(lineno)d): %(message)s'
CONSOLE_FORMAT = '[%(levelname)s](%(name)s): %(message)s'

def configure_logging(verbose, log_file):
    """
    Attach a file handler and, unless quiet, a console handler to the root logger.

    ``verbose`` counts the ``-v`` flags: none logs INFO to the file only, one to three log WARNING, INFO or DEBUG to
    both.
    """

    quiet = verbose == 0
    level = logging.INFO if quiet else max(4 - verbose, 1) * 10

    root = logging.getLogger()
    root.setLevel(level)

    if os.path.isfile(log_file):
        os.remove(log_file)
    file_handler = logging.handlers.RotatingFileHandler(log_file)
    file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
    file_handler.setLevel(level)
    root.addHandler(file_handler)

    if not quiet:
        console_handler = logging.StreamHandler() # sys.stderr
        console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        console_handler.setLevel(level)
        root.addHandler(console_handler)

try:
    args = parse_arguments()
except ValueError as error:
    sys.stderr.write("mgeo: error: {}\n".format(error))
    sys.exit(EXIT_USAGE)

configure_logging(args.verbose, args.logFile)
logging.info("Input args: {}".format(args))
logging.info("JIT compilation: {}".format(args.jit))

sys.exit(run_args(args))
