"""Console entry point ``nodegames``.

Sub-commands:

classify MATRIX
    prints the classification of a payoff matrix literal
simulate
    runs the dynamics once on a sampled or loaded graph
census
    runs one of the structure censuses on a graph
ensemble CONFIG
    runs a Monte Carlo ensemble described by a config file
sweep CONFIG
    estimates u_hat along the unanimity threshold

Exit codes are 0 on success, 1 for usage and parse errors and 2 for
configuration and runtime errors.

"""

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np
import pandas as pd

from nodegames.census.census_utils import (
    balanced_census, enc_census, find_blocking_stars, good_census, low_degree_structure_report)
from nodegames.dynamics.dynamics_utils import default_max_steps, detect_unanimity, run
from nodegames.dynamics.strategy_state import StrategyState, random_state
from nodegames.experiments.experiment_config import MAX_SEED, load_experiment_config
from nodegames.experiments.experiment_utils import run_ensemble, threshold_sweep
from nodegames.games.game_class import classify
from nodegames.games.payoff_matrix import parse_matrix_literal
from nodegames.graphs.graph_utils import graph_from_json, read_edge_list, sample_gnp
from nodegames.tools.exceptions import ConfigError, ParameterError, ParseError, UnsupportedError
from nodegames.tools.log_config import configure_logging
from nodegames.tools.seeding import trial_generators

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

# census kind -> (argument name, converter) pairs
CENSUS_KINDS = {
    "stars": (("ell", int), ("k", int)),
    "lowdeg": (("C", int), ("ell", int)),
    "balanced": (("delta", float),),
    "enc": (),
    "good": (("gamma", float),),
}
STATE_CENSUS_KINDS = ("balanced", "enc", "good")
SIMULATE_COLUMNS = ["t", "ones", "zeros", "eta"]


def _seed(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer, got {!r}".format(text))
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must lie in 0..2^64-1")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got {!r}".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {}".format(value))
    return value


def _add_output_arguments(parser):
    parser.add_argument("--seed", type=_seed, help="64-bit seed, decimal or 0x hex")
    parser.add_argument("--out", type=Path, help="write the results to this path")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_graph_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--gnp", nargs=2, metavar=("N", "P"), help="sample G(N, P)")
    source.add_argument("--edges", type=Path, metavar="FILE", help="read an edge list file")
    source.add_argument("--json", type=Path, metavar="FILE", help="read a JSON graph file")
    parser.add_argument("--state", default="random",
                        help="'random' for S_1/2 or a state literal n:hex")


def build_parser():
    """Builds the argument parser of the ``nodegames`` command"""
    parser = argparse.ArgumentParser(prog="nodegames", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log info messages, twice for debug messages")
    subparsers = parser.add_subparsers(dest="command", required=True)

    classify_parser = subparsers.add_parser("classify", help="classify a payoff matrix")
    classify_parser.add_argument("matrix", help="matrix literal 'q00,q01;q10,q11', given after -- when it starts with a minus")

    simulate_parser = subparsers.add_parser("simulate", help="run the dynamics once")
    _add_graph_arguments(simulate_parser)
    simulate_parser.add_argument("--matrix", required=True, help="matrix literal 'q00,q01;q10,q11'")
    simulate_parser.add_argument("--max-steps", type=_positive_int)
    _add_output_arguments(simulate_parser)

    census_parser = subparsers.add_parser("census", help="run a structure census")
    _add_graph_arguments(census_parser)
    census_parser.add_argument("--kind", nargs="+", required=True, metavar="ARG",
                               help="stars ELL K | lowdeg C ELL | balanced DELTA | enc | good GAMMA")
    census_parser.add_argument("--expected-degree", type=float,
                               help="d used by the balanced and good censuses, default 2m/n")
    _add_output_arguments(census_parser)

    for name, text in (("ensemble", "run a Monte Carlo ensemble"),
                       ("sweep", "sweep the density correction omega")):
        experiment_parser = subparsers.add_parser(name, help=text)
        experiment_parser.add_argument("config", type=Path, help="experiment config file")
        experiment_parser.add_argument("--workers", type=_positive_int)
        experiment_parser.add_argument("--progress", action="store_true", help="show a progress bar")
        _add_output_arguments(experiment_parser)
    subparsers.choices["sweep"].add_argument("--omega", type=float, nargs="+",
                                             help="omega grid, overrides omega_grid of the config")
    return parser


def _check_arguments(parser, args):
    """Finishes the validation argparse cannot express"""
    if args.command == "census":
        name, values = args.kind[0], args.kind[1:]
        if name not in CENSUS_KINDS:
            parser.error("unknown census kind {!r}".format(name))
        names = CENSUS_KINDS[name]
        if len(values) != len(names):
            parser.error("census kind {} takes {} argument(s)".format(name, len(names)))
        try:
            args.kind_arguments = {key: convert(value) for (key, convert), value in zip(names, values)}
        except ValueError:
            parser.error("bad argument for census kind {}: {}".format(name, " ".join(values)))
        args.kind_name = name
    if args.command in ("simulate", "census"):
        if args.gnp is not None:
            try:
                args.gnp = (int(args.gnp[0]), float(args.gnp[1]))
            except ValueError:
                parser.error("--gnp expects an integer N and a probability P")
        stochastic = args.gnp is not None or (
            args.state == "random" and (args.command == "simulate" or args.kind_name in STATE_CENSUS_KINDS))
        if stochastic and args.seed is None:
            parser.error("--seed is required when the graph or the state is random")


def _source_header(args):
    if args.gnp is not None:
        return {"gnp": list(args.gnp)}
    if args.edges is not None:
        return {"edges": str(args.edges)}
    return {"json": str(args.json)}


def _load_graph(args):
    """Returns the graph and the generator for random initial states"""
    graph_rng, state_rng = trial_generators(0 if args.seed is None else args.seed)
    if args.gnp is not None:
        n, p = args.gnp
        return sample_gnp(n, p, graph_rng), state_rng
    if args.edges is not None:
        return read_edge_list(args.edges.read_text()), state_rng
    return graph_from_json(args.json.read_text()), state_rng


def _initial_state(args, n, rng):
    if args.state == "random":
        return random_state(n, rng)
    state = StrategyState.from_literal(args.state)
    if state.get_length() != n:
        raise ParameterError("state literal has {} vertices but the graph has {}"
                             .format(state.get_length(), n))
    return state


def _header_line(header):
    return "# " + json.dumps(header, sort_keys=True)


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        logger.info("wrote %s", out)


def cmd_classify(args):
    """Prints the class of the matrix literal"""
    print(classify(parse_matrix_literal(args.matrix)).describe())
    return EXIT_OK


def cmd_simulate(args):
    """Runs the dynamics on one graph and writes the trace

    Parameters
    ----------
    args: argparse.Namespace
        The parsed ``simulate`` arguments

    Returns
    -------
    int
        The exit code

    """
    q = parse_matrix_literal(args.matrix)
    game_class = classify(q)
    g, state_rng = _load_graph(args)
    n = g.get_vertex_count()
    s0 = _initial_state(args, n, state_rng)
    max_steps = args.max_steps if args.max_steps is not None else default_max_steps(n)
    header = {"command": "simulate", "source": _source_header(args), "matrix": args.matrix,
              "game": game_class.describe(), "state": args.state, "seed": args.seed,
              "max_steps": max_steps}
    keep_states = args.out is not None and args.format == "json"
    trace = run(g, s0, q if game_class.is_degenerate() else game_class, max_steps=max_steps,
                record="all" if keep_states else "stats_only")
    verdict = detect_unanimity(trace)
    if trace.has_cycle():
        summary = "{}, period {}".format(verdict.describe(), trace.get_period())
    else:
        summary = "inconclusive, no cycle within {} steps".format(max_steps)
    table = trace.step_statistics()
    print(_header_line(header))
    sys.stdout.write(table[SIMULATE_COLUMNS].to_csv(index=False, lineterminator="\n"))
    print(summary)
    if args.out is not None:
        if args.format == "json":
            document = {"config": header, "trace": trace.to_dict(include_states=True), "verdict": summary}
            _emit(json.dumps(document, indent=2, sort_keys=True) + "\n", args.out)
        else:
            _emit(table.to_csv(index=False, lineterminator="\n"), args.out)
    return EXIT_OK


def _census_report(args, g, state_rng):
    """Runs the selected census, returning a JSON friendly dict and a
    table for the CSV format"""
    name, values = args.kind_name, args.kind_arguments
    if name == "stars":
        stars = find_blocking_stars(g, values["ell"], values["k"])
        rows = [star.to_dict() for star in stars]
        table = pd.DataFrame({
            "center": [row["center"] for row in rows],
            "leaves": [" ".join(map(str, row["leaves"])) for row in rows],
            "connectors": [" ".join(map(str, row["connectors"])) for row in rows]},
            columns=["center", "leaves", "connectors"])
        return {"count": len(rows), "stars": rows}, table
    if name == "lowdeg":
        report = low_degree_structure_report(g, values["C"], values["ell"]).to_dict()
        return report, pd.DataFrame([report])
    n = g.get_vertex_count()
    s = _initial_state(args, n, state_rng)
    if name == "enc":
        enc, eq = enc_census(g, s)
        table = pd.DataFrame({"vertex": np.arange(n), "enc": np.isin(np.arange(n), enc).astype(int), "eq": eq})
        return {"enc": enc.tolist(), "eq": eq.tolist()}, table
    d = args.expected_degree
    if d is None:
        d = 2 * g.get_edge_count() / n
    if name == "balanced":
        vertices = balanced_census(g, s, values["delta"], d)
        key = "unbalanced"
    else:
        vertices = good_census(g, s, values["gamma"], d)
        key = "good"
    return {key: vertices.tolist(), "count": int(vertices.size), "d": d}, pd.DataFrame({"vertex": vertices})


def cmd_census(args):
    """Runs one census on a loaded or sampled graph and writes its report"""
    g, state_rng = _load_graph(args)
    report, table = _census_report(args, g, state_rng)
    header = {"command": "census", "source": _source_header(args), "kind": args.kind,
              "state": args.state, "seed": args.seed, "expected_degree": args.expected_degree}
    print(_header_line(header))
    if args.format == "json":
        text = json.dumps({"config": header, "census": report}, indent=2, sort_keys=True) + "\n"
    else:
        text = table.to_csv(index=False, lineterminator="\n")
    _emit(text, args.out)
    return EXIT_OK


def _experiment_config(args):
    """Loads the config file with the command line values applied
    before validation"""
    overrides = {}
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    if getattr(args, "omega", None):
        overrides["omega_grid"] = tuple(args.omega)
    return load_experiment_config(args.config, overrides)


def cmd_ensemble(args):
    """Runs the ensemble of a config file

    The per trial table goes to CSV or JSON and the aggregate follows
    it, or goes next to ``--out`` as ``.aggregate.json``

    Parameters
    ----------
    args: argparse.Namespace
        The parsed ``ensemble`` arguments

    Returns
    -------
    int
        The exit code

    """
    result = run_ensemble(_experiment_config(args), progress=args.progress)
    print(_header_line(result.get_config()))
    if args.format == "json":
        document = {"config": result.get_config(), "aggregate": result.aggregate(),
                    "trials": json.loads(result.to_frame().to_json(orient="records"))}
        _emit(json.dumps(document, indent=2, sort_keys=True) + "\n", args.out)
    elif args.out is not None:
        result.to_csv(args.out)
        aggregate_path = args.out.with_suffix(".aggregate.json")
        aggregate_path.write_text(result.aggregate_json() + "\n")
        logger.info("wrote %s and %s", args.out, aggregate_path)
        print("# aggregate: " + json.dumps(result.aggregate(), sort_keys=True))
    else:
        sys.stdout.write(result.to_csv())
        print("# aggregate: " + json.dumps(result.aggregate(), sort_keys=True))
    return EXIT_OK


def cmd_sweep(args):
    """Runs a threshold sweep over the omega grid and writes one row per
    omega"""
    config = _experiment_config(args)
    table = threshold_sweep(config, progress=args.progress)
    header = dict(config.to_dict(), omega_grid=table["omega"].tolist())
    print(_header_line(header))
    if args.format == "json":
        document = {"config": header, "sweep": json.loads(table.to_json(orient="records"))}
        text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    else:
        text = table.to_csv(index=False, lineterminator="\n")
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "simulate": cmd_simulate,
    "census": cmd_census,
    "ensemble": cmd_ensemble,
    "sweep": cmd_sweep,
}


def main(argv=None):
    """Runs the ``nodegames`` command

    Parameters
    ----------
    argv: list
        The arguments without the program name, sys.argv[1:] when None

    Returns
    -------
    int
        The exit code

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_arguments(parser, args)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except ParseError as err:
        print("nodegames: error: {}".format(err), file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, ParameterError, UnsupportedError, OSError) as err:
        print("nodegames: error: {}".format(err), file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
