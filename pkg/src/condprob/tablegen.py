"""Reference tables of the estimators over a grid of (n, x) counts.

Reproduces the published lookup table: one row per count pair with the
maximum likelihood estimate, the additive-smoothing mean, and the credible
lower bound, so the conservative estimator can be read off without any
computation at query time.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional, TextIO, Union

from condprob.betacore import UNIFORM, BetaParams
from condprob.estimators import FrequencyPair, laplace_mean, mle, theta_lower_bound

CSV_HEADER = "n,x,mle,laplace,theta_lb"


@dataclass(frozen=True)
class EstimatorTableRow:
    """One (n, x) grid cell; values are unrounded floats.

    mle is None only for n = 0 (where x/n is undefined); generated tables
    start at n = 1, so in practice it is always set.
    """

    n: int
    x: int
    mle: Optional[float]
    laplace: float
    lower_bound: float


def generate_table(
    n_max: int, alpha: float = 0.99, prior: BetaParams = UNIFORM
) -> list[EstimatorTableRow]:
    """All rows (n, x) with 1 <= n <= n_max, 0 <= x <= n, ascending.

    Row values are full precision; rounding to the published 5 decimal
    places happens only on CSV output.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        for x in range(n + 1):
            f = FrequencyPair(n, x)
            rows.append(
                EstimatorTableRow(
                    n=n,
                    x=x,
                    mle=mle(f),
                    laplace=laplace_mean(f),
                    lower_bound=theta_lower_bound(f, prior, alpha),
                )
            )
    return rows


def format_value(v: Optional[float]) -> str:
    """Fixed-point with 5 decimals, rounding half-up; NA when undefined."""
    if v is None:
        return "NA"
    return str(Decimal(repr(v)).quantize(Decimal("0.00001"), rounding=ROUND_HALF_UP))


def write_table_csv(rows: list[EstimatorTableRow], out: Union[str, TextIO]) -> None:
    """Emit the table as CSV (LF line endings, 5-decimal fixed point)."""
    if isinstance(out, (str, bytes)):
        with io.open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_table_csv(rows, fh)
        return
    out.write(CSV_HEADER + "\n")
    for r in rows:
        out.write(
            f"{r.n},{r.x},{format_value(r.mle)},"
            f"{format_value(r.laplace)},{format_value(r.lower_bound)}\n"
        )
