"""Pair counting and rule scoring over a transaction dataset.

Every unordered item pair that co-occurs in at least one transaction is a
candidate; each candidate gets scored as a conditional-probability rule
"item_a given item_b" by whatever estimator the caller configures.  Two
direction policies are supported:

* ``typed_child_condition`` -- only parent/child pairs are scored, always
  as P(parent | child).  Conditioning on the child is what actually
  measures the hierarchy: one parent has many children, so P(child |
  parent) is small even for true pairs.  Requires knowing which names are
  parents.
* ``max_both`` -- every pair is scored in both conditioning directions and
  keeps the larger value; works on untyped data.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, Optional

from condprob.estimators import EstimatorConfig, FrequencyPair, point_estimate
from condprob.synthdata import TransactionDataset

TYPED_CHILD_CONDITION = "typed_child_condition"
MAX_BOTH = "max_both"
DIRECTIONS = (TYPED_CHILD_CONDITION, MAX_BOTH)

PairCounts = dict[tuple[str, str], int]
ItemCounts = dict[str, int]


@dataclass(frozen=True)
class CandidateRule:
    """A scored conditional query: score estimates P(item_a | item_b)."""

    item_a: str
    item_b: str
    counts: FrequencyPair
    score: float

    def __post_init__(self):
        if self.counts.x < 1:
            raise ValueError("a candidate rule requires at least one co-occurrence")


def count_pairs(dataset: TransactionDataset) -> tuple[PairCounts, ItemCounts]:
    """Joint counts per unordered pair and marginal counts per item.

    Transactions are sets, so an item or pair counts at most once per
    transaction.  Pair keys are (min, max) name tuples.
    """
    if not dataset.transactions:
        raise ValueError("cannot count pairs of an empty dataset")
    joint: PairCounts = {}
    marginal: ItemCounts = {}
    for t in dataset.transactions:
        items = sorted(t)
        for item in items:
            marginal[item] = marginal.get(item, 0) + 1
        for u, v in combinations(items, 2):
            joint[(u, v)] = joint.get((u, v), 0) + 1
    return joint, marginal


def score_rules(
    joint: PairCounts,
    marginal: ItemCounts,
    config: EstimatorConfig,
    direction: str = MAX_BOTH,
    parents: Optional[AbstractSet[str]] = None,
) -> list[CandidateRule]:
    """Turn co-occurrence counts into scored rules.

    Pairs whose conditioning marginal falls below ``config.minsup`` are
    dropped entirely (no rule emitted), not given score zero.  In
    ``max_both`` mode a pair survives if either direction passes the
    threshold.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}; choose from {DIRECTIONS}")
    if direction == TYPED_CHILD_CONDITION and parents is None:
        raise ValueError("typed_child_condition scoring requires the parent name set")

    rules = []
    for (u, v), x in joint.items():
        if direction == TYPED_CHILD_CONDITION:
            u_is_parent = u in parents
            v_is_parent = v in parents
            if u_is_parent == v_is_parent:
                continue  # same-type pair: not a hierarchy candidate
            parent, child = (u, v) if u_is_parent else (v, u)
            n = marginal[child]
            if n < config.minsup:
                continue
            f = FrequencyPair(n, x)
            rules.append(CandidateRule(parent, child, f, point_estimate(f, config)))
        else:
            best = None
            for cond, cons in ((u, v), (v, u)):
                n = marginal[cond]
                if n < config.minsup:
                    continue
                f = FrequencyPair(n, x)
                scored = (point_estimate(f, config), cons, cond, f)
                if best is None or scored[0] > best[0]:
                    best = scored
            if best is not None:
                score, item_a, item_b, f = best
                rules.append(CandidateRule(item_a, item_b, f, score))
    return rules
