"""Command-line entry point wiring all modules together.

Structured results go to stdout as JSON or CSV; diagnostics go to
stderr.  Exit codes: 0 success (and all checks passed for the verify
subcommands), 1 check failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics, bijections, core, exact, montecarlo, runs, series
from .config import Config, load_config


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cayley-runs",
        description="Ascending runs in Cayley trees and mappings: "
                    "count, transform, verify, sample.",
    )
    p.add_argument("--config", help="JSON config file (flags override it)")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("runs", help="run starts and count of a mapping or tree")
    q.add_argument("--input", required=True, help="mapping/tree file (text or JSON)")
    q.add_argument("--tree", action="store_true", help="treat input as a tree")

    q = sub.add_parser("phi", help="map a marked tree to its mapping")
    q.add_argument("--tree", required=True, help="tree file")
    q.add_argument("--mark", required=True, type=int, help="marked node")

    q = sub.add_parser("phi-inv", help="map a mapping back to its marked tree")
    q.add_argument("--mapping", required=True, help="mapping file")

    q = sub.add_parser("partition", help="run-partition encoding of a mapping")
    psub = q.add_subparsers(dest="direction", required=True)
    enc = psub.add_parser("encode")
    enc.add_argument("--mapping", required=True)
    dec = psub.add_parser("decode")
    dec.add_argument("--input", required=True,
                     help='JSON {"blocks": [[...], ...], "links": [...]}')

    q = sub.add_parser("table", help="run-count table as CSV n,m,count")
    q.add_argument("--kind", required=True, choices=["tree", "mapping", "connected"])
    q.add_argument("--n", required=True, type=int)
    q.add_argument("--oracle", action="store_true",
                   help="force exhaustive enumeration instead of formulas")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--max-size", type=int, default=None,
                   help="override the exhaustive bound")

    q = sub.add_parser("series", help="series coefficients as CSV n,m,numerator,denominator")
    q.add_argument("--which", required=True, choices=["H", "F", "R", "C"])
    q.add_argument("--order", type=int, default=None)

    q = sub.add_parser("verify-series", help="check the series identities exactly")
    q.add_argument("--order", type=int, default=None)

    q = sub.add_parser("asymptotics", help="singularity data and limit-law constants")
    q.add_argument("--v", type=float, default=1.0)
    q.add_argument("--constants", action="store_true")

    q = sub.add_parser("mc", help="Monte Carlo run statistics as JSON")
    q.add_argument("--n", required=True, type=int)
    q.add_argument("--samples", required=True, type=int)
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("--trees", action="store_true", help="sample trees instead of mappings")
    q.add_argument("--workers", type=int, default=1)

    q = sub.add_parser("verify-all", help="exhaustive small-size verification suite")
    q.add_argument("--n-max", type=int, default=6)

    return p


def _cmd_runs(args, _cfg: Config) -> int:
    text = _read(args.input)
    if args.tree:
        profile = runs.run_starts_tree(core.load_tree(text))
    else:
        profile = runs.run_starts_mapping(core.load_mapping(text))
    print(json.dumps({"count": profile.count, "starts": sorted(profile.starts)}))
    return 0


def _cmd_phi(args, _cfg: Config) -> int:
    tree = core.load_tree(_read(args.tree))
    mapping = bijections.tree_to_mapping(bijections.MarkedTree(tree, args.mark))
    print(mapping.to_text())
    return 0


def _cmd_phi_inv(args, _cfg: Config) -> int:
    mapping = core.load_mapping(_read(args.mapping))
    mt = bijections.mapping_to_tree(mapping)
    print(json.dumps({"n": mt.tree.n, "parent": list(mt.tree.parent), "mark": mt.mark}))
    return 0


def _cmd_partition(args, _cfg: Config) -> int:
    if args.direction == "encode":
        mapping = core.load_mapping(_read(args.mapping))
        partition, links = bijections.encode_partition(mapping)
        print(json.dumps({
            "blocks": [sorted(b) for b in partition.blocks],
            "links": list(links),
        }))
    else:
        obj = json.loads(_read(args.input))
        partition = bijections.make_partition(obj["blocks"])
        mapping = bijections.decode_partition(partition, tuple(obj["links"]))
        print(mapping.to_text())
    return 0


def _cmd_table(args, cfg: Config) -> int:
    n = args.n
    bound = args.max_size if args.max_size is not None else cfg.exhaustive_bound
    if args.oracle:
        tree_t, map_t, conn_t = exact.brute_force_tables(n, workers=args.workers,
                                                         max_size=bound)
        table = {"tree": tree_t, "mapping": map_t, "connected": conn_t}[args.kind]
    elif args.kind == "tree":
        table = exact.tree_run_table(n)
    elif args.kind == "mapping":
        table = exact.mapping_run_table(n)
    else:
        # no closed form for connected counts; extract them from the series
        table = series.series_count_table(series.connected_series(n), n)
    for m in sorted(table.values):
        print(f"{n},{m},{table.values[m]}")
    return 0


def _cmd_series(args, cfg: Config) -> int:
    order = args.order if args.order is not None else cfg.series_order
    solver = {
        "H": series.auxiliary_series,
        "F": series.tree_series,
        "R": series.mapping_series,
        "C": series.connected_series,
    }[args.which]
    s = solver(order)
    for n in range(order + 1):
        poly = s.coefficient(n)
        for m in range(poly.degree + 1):
            x = poly[m]
            if x:
                print(f"{n},{m},{x.numerator},{x.denominator}")
    return 0


def _cmd_verify_series(args, cfg: Config) -> int:
    order = args.order if args.order is not None else cfg.series_order
    f = series.tree_series(order)
    checks = {
        "pde-residual-zero": series.pde_residual(f).is_zero(),
        "mapping-equals-1-plus-z-dF": series.check_mapping_from_tree_derivative(order),
        "aux-tree-relation": series.check_aux_tree_relation(order),
        "exp-connected-equals-mapping": series.check_exp_connected_is_mapping(order),
    }
    ok = True
    for name, passed in checks.items():
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    return 0 if ok else 1


def _cmd_asymptotics(args, _cfg: Config) -> int:
    data = asymptotics.singularity_data(args.v)
    out = {"v": args.v, "tau": round(data.tau, 12), "rho": round(data.rho, 12)}
    if args.constants:
        c = asymptotics.clt_constants()
        out.update({
            "mu": round(c.mu, 12),
            "sigma2": round(c.sigma2, 12),
            "v_prime0": round(c.v_prime0, 12),
            "v_doubleprime0": round(c.v_doubleprime0, 12),
        })
    print(json.dumps(out))
    return 0


def _cmd_mc(args, cfg: Config) -> int:
    seed = args.seed if args.seed is not None else cfg.rng_seed
    stats = montecarlo.run_statistics(
        args.n, args.samples, seed, workers=args.workers, use_trees=args.trees)
    report = {
        "n": stats.n,
        "samples": stats.samples,
        "seed": seed,
        "mean": stats.mean,
        "variance": stats.variance,
        "mean_over_n": stats.mean / stats.n,
        "variance_over_n": stats.variance / stats.n,
        "histogram": {str(k): v for k, v in sorted(stats.histogram.items())},
        "note": "tolerances around the limit constants are pre-registered "
                "engineering choices; no finite-n correction is available",
    }
    if stats.variance > 0.0:
        report["ks_statistic"] = montecarlo.normality_check(stats).ks_statistic
    print(json.dumps(report))
    return 0


def _cmd_verify_all(args, cfg: Config) -> int:
    import itertools

    n_max = args.n_max
    ok = True

    def report(name: str, passed: bool) -> None:
        nonlocal ok
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}")

    for n in range(1, n_max + 1):
        good_round = good_runs = good_part = True
        for img in itertools.product(range(1, n + 1), repeat=n):
            m = core.make_mapping(img)
            mt = bijections.mapping_to_tree(m)
            good_round &= bijections.tree_to_mapping(mt) == m
            good_runs &= (runs.run_starts_tree(mt.tree).starts
                          == runs.run_starts_mapping(m).starts)
            partition, links = bijections.encode_partition(m)
            good_part &= bijections.decode_partition(partition, links) == m
        report(f"bijection-round-trip n={n}", good_round)
        report(f"run-preservation n={n}", good_runs)
        report(f"partition-round-trip n={n}", good_part)
        bound = max(cfg.exhaustive_bound, n)
        tree_t, map_t, _ = exact.brute_force_tables(n, max_size=bound)
        report(f"tree-table-matches-formula n={n}",
               tree_t.values == exact.tree_run_table(n).values)
        report(f"mapping-table-matches-formula n={n}",
               map_t.values == exact.mapping_run_table(n).values)
        report(f"valid-pairs-match-mapping-counts n={n}",
               all(bijections.count_valid_pairs(n, m_, max_size=bound)
                   == exact.mapping_runs(n, m_) for m_ in range(1, n + 1)))
    return 0 if ok else 1


_COMMANDS = {
    "runs": _cmd_runs,
    "phi": _cmd_phi,
    "phi-inv": _cmd_phi_inv,
    "partition": _cmd_partition,
    "table": _cmd_table,
    "series": _cmd_series,
    "verify-series": _cmd_verify_series,
    "asymptotics": _cmd_asymptotics,
    "mc": _cmd_mc,
    "verify-all": _cmd_verify_all,
}


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = load_config(args.config)
        return _COMMANDS[args.command](args, cfg)
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
