"""Command-line entry point: reproducible estimator-comparison pipelines.

Subcommands:

* ``table``     -- emit the estimator lookup table as CSV
* ``synth``     -- generate a relation and/or a transaction dataset
* ``eval``      -- count, score, rank and write recall curves for one or
                   more estimator configurations over a dataset
* ``fit-prior`` -- fit a Beta prior to the observed ratio distribution

Every run is fully specified by its flags; all randomness flows from
``--seed``, so identical invocations produce byte-identical outputs.
Exit codes: 0 success, 1 runtime failure, 2 usage error.

Estimator specs use a ``kind:key=val,...`` mini-grammar so one invocation
can produce side-by-side curves, e.g.::

    condprob eval --transactions d.txt --relation r.tsv \\
        --estimator lb:alpha=0.99 --estimator mle:minsup=3 \\
        --estimator pmean:a=0.17,b=1.06 --out-prefix run1-

Kinds: lb (credible lower bound), mle, laplace, pmean (posterior mean),
cp (Clopper-Pearson lower limit).  Keys: alpha, minsup, and the prior
shapes a, b.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from condprob import evaluation, mining, synthdata, tablegen
from condprob.betacore import BetaParams, ConvergenceError
from condprob.estimators import (
    DEFAULT_EXCLUDED_RATIOS,
    EstimatorConfig,
    fit_prior_from_ratios,
)

_SPEC_KINDS = {
    "mle": "mle",
    "laplace": "laplace",
    "pmean": "posterior_mean",
    "lb": "lower_bound",
    "cp": "clopper_pearson",
}


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _open_unit_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"must lie strictly in (0, 1), got {value}")
    return value


def _unit_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _estimator_spec(text: str) -> tuple[EstimatorConfig, str]:
    """Parse ``kind:key=val,...`` into a config and a filename-safe label."""
    kind_part, _, params_part = text.partition(":")
    kind = _SPEC_KINDS.get(kind_part.strip())
    if kind is None:
        raise argparse.ArgumentTypeError(
            f"unknown estimator {kind_part!r}; choose from {sorted(_SPEC_KINDS)}"
        )
    kwargs = {"alpha": 0.99, "minsup": 1, "a": 1.0, "b": 1.0}
    if params_part:
        for assignment in params_part.split(","):
            key, eq, value = assignment.partition("=")
            key = key.strip()
            if not eq or key not in kwargs:
                raise argparse.ArgumentTypeError(
                    f"bad estimator parameter {assignment!r} in {text!r}"
                )
            try:
                kwargs[key] = int(value) if key == "minsup" else float(value)
            except ValueError:
                raise argparse.ArgumentTypeError(
                    f"bad value in estimator parameter {assignment!r}"
                )
    try:
        config = EstimatorConfig(
            kind=kind,
            prior=BetaParams(kwargs["a"], kwargs["b"]),
            alpha=kwargs["alpha"],
            minsup=kwargs["minsup"],
        )
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    label = text.replace(":", "_").replace("=", "").replace(",", "_").replace("/", "-")
    return config, label


def _ratio_value(text: str) -> float:
    text = text.strip()
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def _exclusion_list(text: str) -> tuple[float, ...]:
    if not text:
        return ()
    try:
        return tuple(_ratio_value(tok) for tok in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad exclusion list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condprob",
        description="Conservative conditional-probability estimation toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit the estimator lookup table as CSV")
    p_table.add_argument("--n-max", type=_positive_int, default=6)
    p_table.add_argument("--alpha", type=_open_unit_float, default=0.99)
    p_table.add_argument("--prior-a", type=_positive_float, default=1.0)
    p_table.add_argument("--prior-b", type=_positive_float, default=1.0)
    p_table.add_argument("--out", default="-", help="output path, or - for stdout")

    p_synth = sub.add_parser("synth", help="generate a synthetic transaction dataset")
    p_synth.add_argument("--relation", help="existing relation TSV to sample from")
    p_synth.add_argument("--parents", type=_positive_int, default=200,
                         help="parents to synthesize when no --relation is given")
    p_synth.add_argument("--children-per-parent", type=_positive_int, default=5)
    p_synth.add_argument("--shared-fraction", type=_unit_float, default=0.1,
                         help="fraction of children attached to a second parent")
    p_synth.add_argument("--count", type=_positive_int, default=1000,
                         help="number of transactions")
    p_synth.add_argument("--pairs-per-transaction", type=_positive_int, default=2)
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument("--out", required=True, help="transactions output path")
    p_synth.add_argument("--relation-out",
                         help="where to save a synthesized relation (for later eval)")
    p_synth.add_argument("--stats-out",
                         help="write the key=value stats here as well as stdout")

    p_eval = sub.add_parser("eval", help="score, rank and evaluate estimators")
    p_eval.add_argument("--transactions", required=True)
    p_eval.add_argument("--relation", required=True)
    p_eval.add_argument("--estimator", type=_estimator_spec, action="append",
                        required=True, metavar="SPEC",
                        help="kind:key=val,... (repeatable)")
    p_eval.add_argument("--direction",
                        choices=["typed", "max-both"], default="typed")
    p_eval.add_argument("--denominator",
                        choices=["observed", "relation"], default="observed")
    p_eval.add_argument("--max-rank", type=_positive_int, default=2000,
                        help="k for the auc@k summary column")
    p_eval.add_argument("--out-prefix", required=True)

    p_fit = sub.add_parser("fit-prior",
                           help="fit a Beta prior to observed ratio data")
    p_fit.add_argument("--transactions", required=True)
    p_fit.add_argument("--relation",
                       help="optional relation TSV; restricts ratios to "
                            "parent-given-child queries")
    p_fit.add_argument("--exclude", type=_exclusion_list, default=None,
                       metavar="LIST",
                       help="comma-separated ratios to ignore, fractions "
                            "allowed (default: 0,1/1,1/2,1/3,2/3,1/4,3/4,"
                            "1/5,2/5,3/5,4/5)")
    p_fit.add_argument("--no-exclude", action="store_true",
                       help="keep every ratio")
    return parser


def _cmd_table(args) -> int:
    rows = tablegen.generate_table(
        args.n_max, args.alpha, BetaParams(args.prior_a, args.prior_b)
    )
    if args.out == "-":
        tablegen.write_table_csv(rows, sys.stdout)
    else:
        tablegen.write_table_csv(rows, args.out)
    return 0


def _cmd_synth(args) -> int:
    if args.relation:
        relation = synthdata.read_relation(args.relation)
    else:
        relation = synthdata.synthesize_relation(
            args.parents, args.children_per_parent, args.shared_fraction, args.seed
        )
        if args.relation_out:
            synthdata.write_relation(relation, args.relation_out)
    dataset = synthdata.generate_dataset(
        relation, args.count, args.pairs_per_transaction, args.seed
    )
    synthdata.write_transactions(dataset, args.out)
    stats_text = synthdata.format_stats(synthdata.compute_stats(dataset, relation))
    sys.stdout.write(stats_text)
    if args.stats_out:
        with open(args.stats_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(stats_text)
    return 0


def _cmd_eval(args) -> int:
    dataset = synthdata.read_transactions(args.transactions)
    relation = synthdata.read_relation(args.relation)
    joint, marginal = mining.count_pairs(dataset)
    direction = (
        mining.TYPED_CHILD_CONDITION if args.direction == "typed" else mining.MAX_BOTH
    )
    denominator_mode = (
        evaluation.OBSERVED_RIGHT_KINDS
        if args.denominator == "observed"
        else evaluation.RELATION_SIZE
    )
    observed_kinds = synthdata.compute_stats(dataset, relation).right_pair_kinds

    summary = []
    for config, label in args.estimator:
        rules = mining.score_rules(
            joint, marginal, config, direction, parents=relation.parents
        )
        ranked = evaluation.rank_rules(rules)
        curve = evaluation.recall_curve(
            ranked,
            relation,
            denominator_mode,
            label=label,
            observed_right_kinds=observed_kinds,
        )
        if not curve.points:
            raise ValueError(f"estimator {label} produced no rules to rank")
        _write_rules_csv(ranked, f"{args.out_prefix}{label}.rules.csv")
        evaluation.write_curve_csv(curve, f"{args.out_prefix}{label}.curve.csv")
        summary.append(
            (label, evaluation.curve_auc(curve, args.max_rank), curve.final_recall)
        )
    evaluation.write_summary_csv(summary, f"{args.out_prefix}summary.csv")
    return 0


def _write_rules_csv(rules, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("item_b,item_a,n,x,score\n")
        for r in rules:
            fh.write(f"{r.item_b},{r.item_a},{r.counts.n},{r.counts.x},{r.score!r}\n")


def _cmd_fit_prior(args) -> int:
    dataset = synthdata.read_transactions(args.transactions)
    joint, marginal = mining.count_pairs(dataset)

    ratios = []
    if args.relation:
        parents = synthdata.read_relation(args.relation).parents
        for (u, v), x in joint.items():
            u_is_parent = u in parents
            if u_is_parent == (v in parents):
                continue
            child = v if u_is_parent else u
            ratios.append(x / marginal[child])
    else:
        for (u, v), x in joint.items():
            ratios.append(x / marginal[u])
            ratios.append(x / marginal[v])

    if args.no_exclude:
        excluded: tuple[float, ...] = ()
    elif args.exclude is not None:
        excluded = args.exclude
    else:
        excluded = DEFAULT_EXCLUDED_RATIOS
    prior = fit_prior_from_ratios(ratios, excluded)
    retained = len(ratios) - sum(
        1 for r in ratios if any(abs(r - e) <= 1e-9 for e in excluded)
    )
    sys.stdout.write(f"a={prior.a!r}\nb={prior.b!r}\nretained={retained}\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": _cmd_table,
        "synth": _cmd_synth,
        "eval": _cmd_eval,
        "fit-prior": _cmd_fit_prior,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, ConvergenceError, OSError) as exc:
        print(f"condprob: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
