"""
Handles the primary functions

Run a calculation from the command line, e.g. ``python -m mgeo check-orth --space linf --x 1,1 --y -1,0``, or from a
.json calculation file with ``python -m mgeo -i input.json``.

"""

import sys
import logging
import argparse

from .input_output import read_input
from .input_output import write_output
from .spaces import jit_stat
from .calculations import calc

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting, so ``main`` can map usage errors to an exit code."""

    def error(self, message):
        raise ValueError(message)

def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", required=True, help="Builtin name (l1, l2, linf, stadium, quartic_cubic, star, circle), 'lp:<p>[,dim=<n>]', 'builtin:<name>', or a .json space-definition file")
    common.add_argument("--tol", type=float, help="Value tolerance, the default depends on the command")
    common.add_argument("--arg-tol", dest="arg_tol", type=float, help="Width below which a minimizer set is a point")
    common.add_argument("--grid", type=int, help="Grid size, the meaning depends on the command")
    common.add_argument("--seed", type=int, default=0, help="Seed of all random choices, default 0")
    common.add_argument("--json", dest="json_file", help="Write the JSON report to this file instead of standard output")
    common.add_argument("--svg", dest="svg_file", help="Write the SVG drawing to this file")
    return common

def commandline_parser():
    ## Define parser functions and arguments
    parser = _Parser(prog="mgeo", description="mgeo: Birkhoff-James orthogonality, strict convexity, strongly orthonormal bases and conjugate diameters in finite-dimensional real normed spaces.")
    parser.add_argument("-i", "--input", dest="input", help="Input .json file with a space and a calculation_type, instead of a command")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Verbose level: repeat up to three times for Warning, Info, or Debug levels.")
    parser.add_argument("--log", nargs='?', dest="logFile", default="mgeo.log", help="Output a log file. The default name is mgeo.log.")
    parser.add_argument("-p", "--path", default=".", help="Directory against which relative space files of an input file are resolved")
    parser.add_argument("--jit", action='store_true', default=False, help="Turn on Numba's JIT compilation for p-norm and polyhedral kernels")

    common = _common_options()
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    for name in ["check-orth", "strong-check"]:
        sub = subparsers.add_parser(name, parents=[common], help="Classify x against y" if name == "check-orth" else "Test strong B-orthogonality of x to y")
        sub.add_argument("--x", required=True, help="Vector x, comma separated")
        sub.add_argument("--y", required=True, help="Vector y, comma separated")

    sub = subparsers.add_parser("basis", parents=[common], help="Strong orthonormality of a basis")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--vectors", help="Basis vectors, e.g. '1,0;0.7,0.7'")
    group.add_argument("--standard", action="store_true", help="Use the standard basis, normalized")
    sub.add_argument("--normalize", action="store_true", help="Scale the given vectors to unit length")

    sub = subparsers.add_parser("bounds", parents=[common], help="Survey of the 1/3 and 1/2 floors")
    sub.add_argument("--jsonl", dest="jsonl_file", help="Write one JSON line per surveyed pair")

    subparsers.add_parser("conjugate", parents=[common], help="Conjugate diameters of a plane")
    sub = subparsers.add_parser("radon", parents=[common], help="Radon curve test of a plane")
    sub.add_argument("--crosscheck", action="store_true", help="Also compare strongly conjugate pairs with strongly orthonormal bases")
    sub = subparsers.add_parser("scan-pairs", parents=[common], help="Exhaustive scan for strongly conjugate pairs")
    sub.add_argument("--resolution", type=float, default=0.25, help="Grid step in degrees, default 0.25")
    sub = subparsers.add_parser("sphere", parents=[common], help="SVG drawing of a planar unit sphere")
    sub.add_argument("--overlay", action="append", choices=["conjugate", "flat", "companion"], help="Drawing overlay, may be repeated")
    subparsers.add_parser("report", parents=[common], help="Consolidated JSON report")

    return parser

VECTOR_OPTIONS = ["--x", "--y", "--vectors"]

def _attach_vector_values(argv):
    """
    Join vector options with values that start with a minus sign, so that ``--y -1,0`` reads as ``--y=-1,0``.
    """

    argv, joined = list(argv), []
    while argv:
        token = argv.pop(0)
        if token in VECTOR_OPTIONS and argv and argv[0][:1] == "-" and argv[0][1:2] in "0123456789.":
            token = "{}={}".format(token, argv.pop(0))
        joined.append(token)
    return joined

def parse_arguments(argv=None):
    """
    Parse command-line arguments, raising ValueError on usage errors.
    """
    if argv is None:
        argv = sys.argv[1:]
    return commandline_parser().parse_args(_attach_vector_values(argv))

def calc_dict_from_args(args):
    """
    Build the calculation dictionary of a subcommand, the same dictionary an input file provides.
    """

    calc_dict = {"calculation_type": args.command, "seed": args.seed}
    for key in ["tol", "arg_tol", "grid", "x", "y", "vectors", "resolution", "overlay"]:
        value = getattr(args, key, None)
        if value is not None:
            calc_dict[key] = value
    for key in ["standard", "normalize", "crosscheck"]:
        if getattr(args, key, False):
            calc_dict[key] = True
    return calc_dict

def run(filename=None, path=".", jit=False, space_spec=None, calc_dict=None, json_file=None, svg_file=None,
        jsonl_file=None):

    """
    Main function for running mgeo calculations, either from a .json input file or from a space and calculation
    dictionary.

    Parameters
    ----------
    filename : str, Optional
        Input .json file with "space", "calculation_type" and options
    path : str, Optional, default: "."
        Directory against which relative space files are resolved
    jit : bool, Optional, default: False
        Use Numba kernels
    space_spec : str or dict, Optional
        Space string or definition, used when no filename is given
    calc_dict : dict, Optional
        Calculation dictionary, used when no filename is given
    json_file, svg_file, jsonl_file : str, Optional
        Output files. Without json_file the report is printed.

    Returns
    -------
    output_dict : dict
        Result of the calculation
    """

    jit_stat.disable_jit = not jit

    if filename is not None:
        logger.info("Begin processing input file: {}".format(filename))
        space_spec, calc_dict = read_input.extract_calc_data(filename, path)
        json_file = calc_dict.pop("output_file", json_file)
        svg_file = calc_dict.pop("svg_file", svg_file)
        jsonl_file = calc_dict.pop("jsonl_file", jsonl_file)
        logger.info("Finish processing input file: {}".format(filename))
    elif space_spec is None or calc_dict is None:
        raise ValueError("Provide an input file or both a space and a calculation")

    logger.debug("Calculation dict: {}".format(calc_dict))
    space, space_basis = read_input.make_space(space_spec, path)
    if space_basis is not None and "basis" not in calc_dict:
        calc_dict = dict(calc_dict, basis=space_basis)

    logger.info("Initializing calculation")
    output_dict = calc(space, calc_dict)
    logger.info("Finished calculation")

    svg = output_dict.pop("svg", None)
    if svg is not None:
        if svg_file:
            write_output.write_svg(svg, svg_file)
        else:
            output_dict["svg"] = svg
    if jsonl_file and "survey" in output_dict:
        write_output.write_bounds_jsonl(output_dict["survey"], jsonl_file)

    if json_file:
        write_output.write_json(output_dict, json_file)
    else:
        sys.stdout.write(write_output.dumps_json(output_dict) + "\n")

    return output_dict

def run_args(args):
    """
    Run the calculation selected by parsed arguments and return the exit code.

    Exit codes are 0 when the computation finished, whatever the verdict, 1 when the space is not a norm or the
    computation failed, and 2 for usage errors.
    """

    try:
        if args.input:
            output_dict = run(filename=args.input, path=args.path, jit=args.jit)
        elif getattr(args, "command", None):
            output_dict = run(path=args.path, jit=args.jit, space_spec=args.space, calc_dict=calc_dict_from_args(args),
                              json_file=args.json_file, svg_file=args.svg_file,
                              jsonl_file=getattr(args, "jsonl_file", None))
        else:
            raise ValueError("Provide a command or an input file with -i")
    except (ValueError, TypeError, ImportError) as error:
        logger.error(str(error))
        sys.stderr.write("mgeo: error: {}\n".format(error))
        return EXIT_USAGE
    except (ArithmeticError, RuntimeError) as error:
        logger.error(str(error))
        sys.stderr.write("mgeo: computation failed: {}\n".format(error))
        return EXIT_INVALID

    if output_dict.get("valid") is False:
        return EXIT_INVALID
    return EXIT_OK

def main(argv=None):
    """
    Parse ``argv`` and run, without touching the logging configuration. Returns the exit code.
    """

    try:
        args = parse_arguments(argv)
    except ValueError as error:
        sys.stderr.write("mgeo: error: {}\n".format(error))
        return EXIT_USAGE
    return run_args(args)

def console_main():
    """
    Entry point of the ``mgeo`` console script, equivalent to ``python -m mgeo``.
    """
    import runpy
    runpy.run_module("mgeo", run_name="__main__", alter_sys=True)
