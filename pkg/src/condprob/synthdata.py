"""Synthetic benchmark data: a two-level name hierarchy mixed into transactions.

The ground truth is a parent/child relation (think regions and their
cities).  Each synthetic transaction is the set union of two pairs drawn
uniformly at random from the relation, so parent names from one pair
routinely co-occur with child names from the other -- the task of telling
true relationships from such co-occurrence noise is what the estimators
are benchmarked on.

File formats (UTF-8, LF endings everywhere):

* relation:     two-column TSV, ``parent<TAB>child``
* transactions: one transaction per line, items space-separated in
                lexicographic order
* stats:        ``key=value`` lines, one per statistic
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, TextIO, Union


class HierarchicalRelation:
    """Set of (parent, child) name pairs; the ground truth R.

    Parent and child name spaces must be disjoint.  A child may belong to
    several parents (shared cities); duplicate pairs are rejected.
    """

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        pairs = tuple((str(p), str(c)) for p, c in pairs)
        pair_set = frozenset(pairs)
        if len(pair_set) != len(pairs):
            raise ValueError("relation contains duplicate pairs")
        parents = frozenset(p for p, _ in pairs)
        children = frozenset(c for _, c in pairs)
        overlap = parents & children
        if overlap:
            raise ValueError(
                f"parent and child name spaces must be disjoint, both contain: "
                f"{sorted(overlap)[:5]}"
            )
        self.pairs = pairs
        self.pair_set = pair_set
        self.parents = parents
        self.children = children

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def has_pair(self, u: str, v: str) -> bool:
        """Order-insensitive membership: is {u, v} a relation pair?"""
        return (u, v) in self.pair_set or (v, u) in self.pair_set


@dataclass
class TransactionDataset:
    """Ordered list of item-set transactions plus the seed that made them.

    seed is None for datasets loaded from disk rather than generated.
    """

    transactions: list[frozenset[str]]
    seed: Optional[int] = None


@dataclass(frozen=True)
class DatasetStats:
    """Co-occurrence statistics of a dataset against a relation.

    Candidate pairs are all unordered item pairs within a transaction
    (including parent-parent and child-child); right pairs are candidates
    that belong to the relation.  Occurrences count once per transaction,
    kinds count distinct pairs over the whole dataset.
    """

    transaction_count: int
    candidate_pair_kinds: int
    candidate_pair_occurrences: int
    right_pair_kinds: int
    right_pair_occurrences: int


def generate_dataset(
    relation: HierarchicalRelation,
    transaction_count: int,
    pairs_per_transaction: int = 2,
    seed: int = 0,
) -> TransactionDataset:
    """Draw transactions as unions of random relation pairs.

    Each transaction is the union of ``pairs_per_transaction`` pairs drawn
    uniformly with replacement from the relation.  Fully determined by the
    seed.
    """
    if len(relation) == 0:
        raise ValueError("cannot generate transactions from an empty relation")
    if transaction_count < 1:
        raise ValueError(f"transaction_count must be >= 1, got {transaction_count}")
    if pairs_per_transaction < 1:
        raise ValueError(
            f"pairs_per_transaction must be >= 1, got {pairs_per_transaction}"
        )
    rng = random.Random(seed)
    pairs = relation.pairs
    npairs = len(pairs)
    transactions = []
    for _ in range(transaction_count):
        items = set()
        for _ in range(pairs_per_transaction):
            parent, child = pairs[rng.randrange(npairs)]
            items.add(parent)
            items.add(child)
        transactions.append(frozenset(items))
    return TransactionDataset(transactions=transactions, seed=seed)


def synthesize_relation(
    parent_count: int,
    children_per_parent: int,
    shared_child_fraction: float = 0.0,
    seed: int = 0,
) -> HierarchicalRelation:
    """Make a stand-in hierarchy when no real name relation is at hand.

    Parents P0..P{k-1} each get ``children_per_parent`` dedicated children;
    afterwards each child, with probability ``shared_child_fraction``, also
    attaches to a second random parent (children belonging to two parents
    exist in real hierarchies and keep the ranking task honest).
    Deterministic per seed.
    """
    if parent_count < 1 or children_per_parent < 1:
        raise ValueError("parent_count and children_per_parent must be >= 1")
    if not 0.0 <= shared_child_fraction <= 1.0:
        raise ValueError(
            f"shared_child_fraction must lie in [0, 1], got {shared_child_fraction}"
        )
    rng = random.Random(seed)
    pairs = []
    for p in range(parent_count):
        for j in range(children_per_parent):
            pairs.append((f"P{p}", f"C{p * children_per_parent + j}"))
    if parent_count >= 2 and shared_child_fraction > 0.0:
        total_children = parent_count * children_per_parent
        for c in range(total_children):
            if rng.random() < shared_child_fraction:
                own = c // children_per_parent
                other = rng.randrange(parent_count - 1)
                if other >= own:
                    other += 1
                pairs.append((f"P{other}", f"C{c}"))
    return HierarchicalRelation(pairs)


def compute_stats(
    dataset: TransactionDataset, relation: HierarchicalRelation
) -> DatasetStats:
    """Count candidate and right pairs; see DatasetStats for definitions."""
    kinds = set()
    right_kinds = set()
    occurrences = 0
    right_occurrences = 0
    for t in dataset.transactions:
        for u, v in combinations(sorted(t), 2):
            occurrences += 1
            kinds.add((u, v))
            if relation.has_pair(u, v):
                right_occurrences += 1
                right_kinds.add((u, v))
    return DatasetStats(
        transaction_count=len(dataset.transactions),
        candidate_pair_kinds=len(kinds),
        candidate_pair_occurrences=occurrences,
        right_pair_kinds=len(right_kinds),
        right_pair_occurrences=right_occurrences,
    )


def format_stats(stats: DatasetStats) -> str:
    return (
        f"transactions={stats.transaction_count}\n"
        f"candidate_pair_kinds={stats.candidate_pair_kinds}\n"
        f"candidate_pair_occurrences={stats.candidate_pair_occurrences}\n"
        f"right_pair_kinds={stats.right_pair_kinds}\n"
        f"right_pair_occurrences={stats.right_pair_occurrences}\n"
    )


def write_relation(relation: HierarchicalRelation, out: Union[str, TextIO]) -> None:
    if isinstance(out, (str, bytes)):
        with io.open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_relation(relation, fh)
        return
    for parent, child in relation.pairs:
        out.write(f"{parent}\t{child}\n")


def read_relation(source: Union[str, TextIO]) -> HierarchicalRelation:
    if isinstance(source, (str, bytes)):
        with io.open(source, "r", encoding="utf-8") as fh:
            return read_relation(fh)
    pairs = []
    for lineno, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"relation line {lineno} is not two tab-separated names")
        pairs.append((fields[0], fields[1]))
    return HierarchicalRelation(pairs)


def write_transactions(dataset: TransactionDataset, out: Union[str, TextIO]) -> None:
    """One transaction per line, items space-separated, lexicographic order."""
    if isinstance(out, (str, bytes)):
        with io.open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_transactions(dataset, fh)
        return
    for t in dataset.transactions:
        out.write(" ".join(sorted(t)) + "\n")


def read_transactions(source: Union[str, TextIO]) -> TransactionDataset:
    if isinstance(source, (str, bytes)):
        with io.open(source, "r", encoding="utf-8") as fh:
            return read_transactions(fh)
    transactions = []
    for line in source:
        items = line.split()
        if items:
            transactions.append(frozenset(items))
    return TransactionDataset(transactions=transactions, seed=None)
