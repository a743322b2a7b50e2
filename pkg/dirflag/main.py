# main.py
# ---------------------------------------------------------
# This module is part of the dirflag distribution
# Command line: homology, barcode, homotopy, experiment
# ---------------------------------------------------------

import argparse
import logging
import os
import sys

from .dataStructures import *
from . import importUtils
from . import exportUtils
from .chains import bettiNumbers, omegaComplex
from .complexes import allowedPathComplex, directedFlagComplex
from .digraph import classifyDigraphMap
from .experiments import EXPERIMENTS, runExperiment
from .homotopy import minimumMapClass, multiStepSearch
from .linearAlgebra import CField, parseField
from .persistence import groundedPersistentH1, persistentDflHomology, shortestPathFiltration

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "settings",
                                "settings.ini")


class UsageError(DirflagError):
    pass


class CArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def buildParser():
    parser = CArgumentParser(prog="dirflag", description="Directed flag complex homology, homotopy and persistence")
    common = CArgumentParser(add_help=False)
    common.add_argument("--settings", help="settings .ini file")
    common.add_argument("--output", help="write the result to a .csv or .json file")
    common.add_argument("--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command")

    homology = commands.add_parser("homology", parents=[common], help="Betti numbers of a digraph")
    homology.add_argument("input")
    homology.add_argument("--complex", choices=[COMPLEX_DFL, COMPLEX_ALLOWED], default=COMPLEX_DFL)
    homology.add_argument("--max-dim", type=int, dest="maxDim")
    homology.add_argument("--field")

    barcode = commands.add_parser("barcode", parents=[common], help="barcode of a weighted digraph")
    barcode.add_argument("input")
    barcode.add_argument("--pipeline", choices=["sp-dfl", "grounded-h1"], default="sp-dfl")
    barcode.add_argument("--max-degree", type=int, dest="maxDegree")
    barcode.add_argument("--field")

    homotopy = commands.add_parser("homotopy", parents=[common], help="search for a homotopy between two maps")
    homotopy.add_argument("source", help="digraph G")
    homotopy.add_argument("target", nargs="?", help="digraph H (default: G)")
    homotopy.add_argument("--map-f", dest="mapF", required=True)
    homotopy.add_argument("--map-g", dest="mapG", required=True)
    homotopy.add_argument("--system", choices=[SYSTEM_NAMES[SYSTEM_A], SYSTEM_NAMES[SYSTEM_DFL]])
    homotopy.add_argument("--budget", type=int)

    experiment = commands.add_parser("experiment", parents=[common], help="run an experiment")
    experiment.add_argument("name", choices=list(EXPERIMENTS))
    experiment.add_argument("--seed", type=int)
    experiment.add_argument("--trials", type=int)
    return parser


def readSettings(args):
    logger.info("Read settings...")
    if args.settings is not None:
        if not importUtils.readDirflagParameters(args.settings):
            raise UsageError("wrong settings file: " + args.settings)
    elif os.path.isfile(DEFAULT_SETTINGS):
        if not importUtils.readDirflagParameters(DEFAULT_SETTINGS):
            raise UsageError("wrong settings file: " + DEFAULT_SETTINGS)


def commandHomology(args):
    maxDim = CDirflagParameters.maxDim if args.maxDim is None else args.maxDim
    field = CField(CDirflagParameters.field) if args.field is None else parseField(args.field)
    if maxDim < 0:
        raise UsageError("--max-dim must be nonnegative")
    logger.info("Read digraph...")
    W, _ = importUtils.readGraph(args.input)
    if args.complex == COMPLEX_DFL:
        P = directedFlagComplex(W.graph, maxDim + 1)
    else:
        P = allowedPathComplex(W.graph, maxDim + 1)
    logger.info("Compute homology over %s...", field.name)
    betti = bettiNumbers(omegaComplex(P, maxDim, field), maxDim)
    if args.output is not None:
        exportUtils.writeBettiTable(betti, args.output)
    return " ".join(str(b) for b in betti) + "\n", EXIT_OK


def commandBarcode(args):
    maxDegree = CDirflagParameters.maxDegree if args.maxDegree is None else args.maxDegree
    field = CField(CDirflagParameters.persistenceField) if args.field is None else parseField(args.field)
    logger.info("Read weighted digraph...")
    W, _ = importUtils.readGraph(args.input)
    logger.info("Compute barcode over %s...", field.name)
    if args.pipeline == "sp-dfl":
        barcode = persistentDflHomology(shortestPathFiltration(W), maxDegree, field)
    else:
        barcode = groundedPersistentH1(W, field)
    if args.output is not None:
        exportUtils.writeBarcode(barcode, args.output)
    return exportUtils.barcodeToDataFrame(barcode).to_csv(index=False), EXIT_OK


def commandHomotopy(args):
    system = CDirflagParameters.system
    if args.system is not None:
        system = importUtils._systemFromName(args.system)
    budget = CDirflagParameters.budget if args.budget is None else args.budget
    logger.info("Read digraphs and maps...")
    G, _ = importUtils.readGraph(args.source)
    H = G if args.target is None else importUtils.readGraph(args.target)[0]
    f, g = importUtils.parseMap(args.mapF), importUtils.parseMap(args.mapG)
    for name, m in (("f", f), ("g", g)):
        mapClass = classifyDigraphMap(m, G.graph, H.graph)
        logger.info("%s is %s", name, MAP_CLASS_NAMES[mapClass])
        if mapClass < minimumMapClass(system):
            raise MorphismError(name + " = " + str(tuple(m)) + " is " + MAP_CLASS_NAMES[mapClass]
                                + ", not valid for system " + SYSTEM_NAMES[system])
    if f == g:
        return "equal\n", EXIT_OK

    result = multiStepSearch(f, g, G.graph, H.graph, system, budget)
    if result.status == SEARCH_FOUND:
        text = "found " + str(len(result.witness)) + " steps\n" + \
               exportUtils.toJson(exportUtils.witnessToDict(result.witness))
        if args.output is not None:
            exportUtils.writeText(exportUtils.toJson(exportUtils.witnessToDict(result.witness)), args.output)
        return text, EXIT_OK
    if result.status == SEARCH_ABSENT:
        return "absent (exhausted after " + str(result.explored) + " maps)\n", EXIT_OK
    return "inconclusive (budget of " + str(budget) + " maps exhausted)\n", EXIT_BUDGET


def commandExperiment(args):
    logger.info("Run experiment %s...", args.name)
    report = runExperiment(args.name, args.seed, args.trials)
    text = exportUtils.toJson(report)
    if args.output is not None:
        exportUtils.writeText(text, args.output)
    return text, EXIT_OK


COMMANDS = {"homology": commandHomology, "barcode": commandBarcode,
            "homotopy": commandHomotopy, "experiment": commandExperiment}


def main(argv=None):
    try:
        args = buildParser().parse_args(argv)
    except UsageError as error:
        sys.stderr.write("dirflag: " + str(error) + "\n")
        return EXIT_USAGE
    if args.command is None:
        sys.stderr.write("dirflag: a command is required: " + ", ".join(COMMANDS) + "\n")
        return EXIT_USAGE

    logging.basicConfig(format="%(asctime)s %(levelname)-8s %(message)s",
                        level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        readSettings(args)
        text, exitCode = COMMANDS[args.command](args)
    except ParseError as error:
        sys.stderr.write("dirflag: " + str(error) + "\n")
        return EXIT_PARSE
    except (DirflagError, ValueError) as error:
        sys.stderr.write("dirflag: " + str(error) + "\n")
        return EXIT_USAGE
    sys.stdout.write(text)
    return exitCode


if __name__ == "__main__":
    sys.exit(main())
