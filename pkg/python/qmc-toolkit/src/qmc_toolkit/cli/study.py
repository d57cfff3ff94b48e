"""``qmc-toolkit-study``: experiment front end writing tab-separated tables."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from ..errors import QmcToolkitError
from ..experiments import (
    AnovaPsi,
    ProdLinear,
    TestIntegrand,
    fom_quantile_study,
    histogram_table,
    quantile_table,
    search_sobol_spec,
    searched_definitions,
    sobol_comparison_study,
    t_value_histogram,
    variance_study,
    variance_table,
)
from ..pointsets import SobolNet, default_sobol_spec
from ..weights import ProductWeights
from .formats import parse_net_file, parse_sobol_file
from .main import configure_logging, write_atomic
from .parsing import parse_exploration, parse_floats, parse_fom, parse_norm, parse_weights
from .types import EXIT_OK, EXIT_SEARCH_FAILED, EXIT_USAGE, CliError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmc-toolkit-study", description="Reproducible QMC studies.")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int)
    parser.add_argument("-o", "--output", type=Path, help="table file (default: standard output)")
    parser.add_argument("--log-level")
    commands = parser.add_subparsers(dest="command", required=True)

    quantiles = commands.add_parser("quantiles", help="figure-of-merit quantiles over random draws")
    quantiles.add_argument("--family", choices=["plr", "sobol", "explicit"], required=True)
    quantiles.add_argument("-f", "--figure", default="P2tilde")
    quantiles.add_argument("-q", "--norm", default="2")
    quantiles.add_argument("-w", "--weights", default="product:0.7")
    quantiles.add_argument("-d", "--dimension", type=int, default=6)
    quantiles.add_argument("--k-min", type=int, default=6)
    quantiles.add_argument("--k-max", type=int, default=12)
    quantiles.add_argument("--samples", type=int, default=100)
    quantiles.add_argument("--levels", default="0.1,0.5,0.9")
    quantiles.add_argument("--reference", action="store_true", help="add the fast-CBC PLR merit")

    variance = commands.add_parser("variance", help="RQMC variance against n")
    variance.add_argument(
        "--family", choices=["iid", "sobol", "plr", "lattice", "interlaced"], required=True
    )
    variance.add_argument(
        "--randomization",
        choices=["none", "shiftMod1", "digitalShift", "lmsPlusShift", "nus"],
        default="lmsPlusShift",
    )
    variance.add_argument("--integrand", choices=["prodLinear", "anovaPsi"], default="prodLinear")
    variance.add_argument("--c", default="0.7,0.2,0.5", help="prodLinear coefficients")
    variance.add_argument("-w", "--weights", help="search weights (default: product weights c_j)")
    variance.add_argument("-i", "--interlacing", type=int, default=2)
    variance.add_argument("-m", "--replicates", type=int, default=200)
    variance.add_argument("--k-min", type=int, default=6)
    variance.add_argument("--k-max", type=int, default=13)

    histogram = commands.add_parser("histogram", help="projection t-values of a net file")
    histogram.add_argument("net_file", type=Path)
    histogram.add_argument("--orders", default="2,3")

    compare = commands.add_parser("sobol-compare", help="tabulated against searched Sobol' points")
    compare.add_argument("--reference-file", type=Path, help="direction numbers (default: built in)")
    compare.add_argument("-d", "--dimension", type=int, default=15)
    compare.add_argument("-k", type=int, default=12)
    compare.add_argument("-e", "--exploration", default="random-CBC:100")
    compare.add_argument("-m", "--replicates", type=int, default=100)
    return parser


def _integrand(args: argparse.Namespace) -> TestIntegrand:
    if args.integrand == "anovaPsi":
        return AnovaPsi()
    return ProdLinear(c=parse_floats(args.c, "--c"))


def run_study(args: argparse.Namespace) -> str:
    """Run the selected study and return its table."""
    match args.command:
        case "quantiles":
            weights = parse_weights(args.weights, args.dimension)
            fom = parse_fom(args.figure, q=parse_norm(args.norm), weights=weights, lattice=False)
            rows = fom_quantile_study(
                family=args.family,
                fom=fom,
                k_grid=range(args.k_min, args.k_max + 1),
                sample_size=args.samples,
                s=args.dimension,
                quantiles=parse_floats(args.levels, "--levels"),
                seed=args.seed,
                reference=args.reference,
                workers=args.workers,
            )
            return quantile_table(rows)
        case "variance":
            integrand = _integrand(args)
            if args.weights:
                weights = parse_weights(args.weights, integrand.s)
            elif isinstance(integrand, ProdLinear):
                weights = ProductWeights(gammas=integrand.c)
            else:
                weights = parse_weights("product:1", integrand.s)
            definitions = searched_definitions(
                args.family, s=integrand.s, weights=weights, interlacing=args.interlacing, seed=args.seed
            )
            report = variance_study(
                definitions,
                range(args.k_min, args.k_max + 1),
                kind=args.randomization,
                integrand=integrand,
                m=args.replicates,
                seed=args.seed,
                workers=args.workers,
            )
            return variance_table(report)
        case "histogram":
            net = parse_net_file(args.net_file.read_text(encoding="utf-8"))
            orders = tuple(int(x) for x in parse_floats(args.orders, "--orders"))
            return histogram_table(t_value_histogram(net, orders))
        case "sobol-compare":
            s = args.dimension
            reference = (
                parse_sobol_file(args.reference_file.read_text(encoding="utf-8"))
                if args.reference_file
                else default_sobol_spec(s)
            )
            custom = search_sobol_spec(
                k=args.k,
                s=s,
                method=parse_exploration(args.exploration),
                reference=reference,
                seed=args.seed,
            )
            comparison = sobol_comparison_study(
                reference=reference,
                custom=custom,
                k=args.k,
                s=s,
                m=args.replicates,
                seed=args.seed,
                workers=args.workers or 1,
            )
            reference_t = t_value_histogram(SobolNet(spec=reference, s=s, k=args.k))
            custom_t = t_value_histogram(SobolNet(spec=custom, s=s, k=args.k))
            return (
                "set\tvariance\tmax_t2\tmax_t3\n"
                f"reference\t{comparison.reference_variance:.12g}\t"
                f"{max(reference_t.counts[2], default=0)}\t{max(reference_t.counts[3], default=0)}\n"
                f"custom\t{comparison.custom_variance:.12g}\t"
                f"{max(custom_t.counts[2], default=0)}\t{max(custom_t.counts[3], default=0)}\n"
                f"# variance ratio reference/custom = {comparison.ratio:.6g}\n"
            )
    raise CliError(f"unknown study {args.command!r}")


def run_study_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    configure_logging(args.log_level)
    try:
        table = run_study(args)
    except CliError as exc:
        print(f"qmc-toolkit-study: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"qmc-toolkit-study: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except QmcToolkitError as exc:
        print(f"qmc-toolkit-study: {exc}", file=sys.stderr)
        return EXIT_SEARCH_FAILED
    if args.output:
        write_atomic(args.output, table)
    else:
        print(table, end="")
    return EXIT_OK


def main() -> None:
    sys.exit(run_study_cli())
