#! /usr/bin/env python
# Based on Rémy Greinhofer (rgreinho) tutorial on subcommands in docopt
# https://github.com/rgreinho/docopt-subcommands-example
"""
Bound states of a particle with a Hermitian or PT-symmetric step momentum in
an infinite square well.

usage:
    stepmom [-hvd] <command> [<args>...]

options:
    -h, --help                  shows the help
    -v, --version               shows the version
    -d, --debug                 shows debug messages

The subcommands are:
    spectrum        Energy levels E_n/E0 for one or more step heights.
    density         Normalized eigenfunction and density of one state.
    curve           Characteristic function samples (figure data).
    critical        PT step height above which no real energy state exists.
    reproduce       Reference tables and figure datasets, with a report.
    znojil          Parameter map to the non-Hermitian square well.

Exit codes: 0 on success, 1 when a computation fails or a state is
missing, 2 on invalid usage or parameters.
"""

import sys
from docopt import docopt
from docopt import DocoptExit
import stepmom.commands as commands
from stepmom.core import DomainError, MissingStateError, RootFindingError
from stepmom.log import logger, set_verbosity
from stepmom.version import __version__

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def main(argv=None):
    try:
        args = docopt(__doc__, argv=argv, version=__version__, options_first=True)
    except DocoptExit as err:
        logger.error(str(err))
        return EXIT_USAGE
    if args.pop("--debug"):
        set_verbosity("DEBUG")
    # Retrieve the command to execute.
    command_name = args.pop("<command>").capitalize()

    # Retrieve the command arguments.
    command_args = args.pop("<args>")
    if command_args is None:
        command_args = []

    # Retrieve the class from the 'commands' module.
    command_class = getattr(commands, command_name, None)
    if command_class is None or command_name == "Abstractcommand":
        logger.error("Unknown command: %s", command_name.lower())
        return EXIT_USAGE
    try:
        # Create an instance of the command.
        command = command_class(command_args, args)
        # Execute the command.
        code = command.execute()
    except DocoptExit as err:
        logger.error(str(err))
        return EXIT_USAGE
    except DomainError as err:
        logger.error(str(err))
        return EXIT_USAGE
    except (
        RootFindingError,
        MissingStateError,
        ArithmeticError,
        ValueError,
        IOError,
    ) as err:
        logger.error(str(err))
        return EXIT_FAILURE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
