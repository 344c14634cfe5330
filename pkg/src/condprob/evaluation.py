"""Ranking and recall/precision-by-rank evaluation of scored rules.

Rules are ranked best score first and walked in order; at each rank the
pair either is in the ground-truth relation (a hit) or is not.  Recall at
rank i is hits/denominator, precision is hits/i -- so in a recall-by-rank
plot the precision at any point is the slope of the line through the
origin, and a better estimator draws a higher curve.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, TextIO, Union

from condprob.mining import CandidateRule
from condprob.synthdata import HierarchicalRelation

RELATION_SIZE = "relation_size"
OBSERVED_RIGHT_KINDS = "observed_right_kinds"
DENOMINATOR_MODES = (RELATION_SIZE, OBSERVED_RIGHT_KINDS)

CURVE_CSV_HEADER = "rank,hits,recall,precision"
SUMMARY_CSV_HEADER = "label,auc@k,final_recall"


class CurvePoint(NamedTuple):
    rank: int
    hits: int
    recall: float
    precision: float


@dataclass
class RecallCurve:
    points: list[CurvePoint]
    denominator: int
    label: str = ""

    @property
    def final_recall(self) -> float:
        return self.points[-1].recall if self.points else 0.0


def rank_rules(rules: Sequence[CandidateRule]) -> list[CandidateRule]:
    """Descending by score; ties broken by higher joint count, then by
    (item_b, item_a) lexicographic order, giving a deterministic total
    order.

    The tie rule matters: at low counts many pairs share the same score
    (every 1/1 pair earns the same MLE), and an unstable order would make
    curve comparisons irreproducible.
    """
    return sorted(rules, key=lambda r: (-r.score, -r.counts.x, r.item_b, r.item_a))


def recall_curve(
    ranked: Sequence[CandidateRule],
    relation: HierarchicalRelation,
    denominator_mode: str = OBSERVED_RIGHT_KINDS,
    label: str = "",
    observed_right_kinds: Optional[int] = None,
) -> RecallCurve:
    """Walk the ranking, matching pairs against the relation.

    The recall denominator is the relation size, or the number of distinct
    relation pairs actually present in the dataset (pairs never sampled
    into any transaction are unreachable by every ranking, so the observed
    mode is the default).  A ranking produced with minimum-support
    filtering no longer contains every observed right pair, so callers
    should pass the dataset-level count via ``observed_right_kinds`` --
    typically DatasetStats.right_pair_kinds; without it the count is taken
    from the ranking itself.
    """
    if denominator_mode not in DENOMINATOR_MODES:
        raise ValueError(
            f"unknown denominator mode {denominator_mode!r}; "
            f"choose from {DENOMINATOR_MODES}"
        )
    if denominator_mode == RELATION_SIZE:
        denominator = len(relation)
    elif observed_right_kinds is not None:
        denominator = observed_right_kinds
    else:
        denominator = len(
            {
                tuple(sorted((r.item_a, r.item_b)))
                for r in ranked
                if relation.has_pair(r.item_a, r.item_b)
            }
        )

    points = []
    hits = 0
    for rank, rule in enumerate(ranked, start=1):
        if relation.has_pair(rule.item_a, rule.item_b):
            hits += 1
        recall = hits / denominator if denominator else 0.0
        points.append(CurvePoint(rank, hits, recall, hits / rank))
    return RecallCurve(points=points, denominator=denominator, label=label)


def curve_auc(curve: RecallCurve, max_rank: int) -> float:
    """Mean recall over ranks 1..max_rank.

    Rankings cut short by minimum-support filtering end before max_rank;
    past the last point the recall is taken as constant at its final
    value, so curves of different lengths stay comparable at a common k.
    """
    if max_rank < 1:
        raise ValueError(f"max_rank must be >= 1, got {max_rank}")
    if not curve.points:
        raise ValueError("cannot compute the AUC of an empty curve")
    total = 0.0
    last = len(curve.points)
    for i in range(1, max_rank + 1):
        total += curve.points[min(i, last) - 1].recall
    return total / max_rank


def write_curve_csv(curve: RecallCurve, out: Union[str, TextIO]) -> None:
    if isinstance(out, (str, bytes)):
        with io.open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_curve_csv(curve, fh)
        return
    out.write(CURVE_CSV_HEADER + "\n")
    for p in curve.points:
        out.write(f"{p.rank},{p.hits},{p.recall!r},{p.precision!r}\n")


def write_summary_csv(
    entries: Sequence[tuple[str, float, float]], out: Union[str, TextIO]
) -> None:
    """Rows of (label, auc@k, final_recall), one per evaluated estimator."""
    if isinstance(out, (str, bytes)):
        with io.open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_summary_csv(entries, fh)
        return
    out.write(SUMMARY_CSV_HEADER + "\n")
    for label, auc, final in entries:
        out.write(f"{label},{auc!r},{final!r}\n")
