from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
import argparse
import sys

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class ColumnTransitions:
    """Strategy flips along the first axis at one value of the second axis."""
    y: float
    flips: tuple[tuple[float, str, str], ...]


def load_zones(path: Path) -> pd.DataFrame:
    frame = pd.read_csv(path)
    if frame.shape[1] < 4 or "strategy" not in frame.columns:
        raise ValueError(f"{path}: not a zone CSV (missing strategy column)")
    return frame


def column_transitions(frame: pd.DataFrame) -> list[ColumnTransitions]:
    x_col, y_col = frame.columns[0], frame.columns[1]
    columns = []
    for y, column in frame.sort_values([y_col, x_col]).groupby(y_col, sort=True):
        states = column["strategy"].to_numpy(dtype=str)
        xs = column[x_col].to_numpy(dtype=float)
        change = np.flatnonzero(states[1:] != states[:-1]) + 1
        flips = tuple((float(xs[k]), str(states[k - 1]), str(states[k])) for k in change)
        columns.append(ColumnTransitions(y=float(y), flips=flips))
    return columns


def cell_width(frame: pd.DataFrame) -> float:
    xs = np.unique(frame[frame.columns[0]].to_numpy(dtype=float))
    return float(np.diff(xs).min()) if xs.size > 1 else 0.0


def boundary_mismatches(
    left: list[ColumnTransitions],
    right: list[ColumnTransitions],
    tolerance: float,
) -> list[float]:
    """Second-axis values whose flip sequence differs, positions compared to within tolerance."""
    right_by_y = {round(col.y, 9): col for col in right}
    left_keys = {round(col.y, 9) for col in left}
    bad = [col.y for col in right if round(col.y, 9) not in left_keys]
    for col in left:
        other = right_by_y.get(round(col.y, 9))
        if other is None or len(other.flips) != len(col.flips):
            bad.append(col.y)
            continue
        for (xa, fa, ta), (xb, fb, tb) in zip(col.flips, other.flips):
            if (fa, ta) != (fb, tb) or abs(xa - xb) > tolerance + 1e-9:
                bad.append(col.y)
                break
    return sorted(bad)


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Summarize supply-strategy switches in a zone CSV."
    )
    parser.add_argument("csv", type=Path, help="Zone CSV written by `ose zones`.")
    parser.add_argument(
        "--against",
        type=Path,
        default=None,
        help="Second zone CSV (e.g. the oracle sweep); boundaries must agree to one cell.",
    )
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    frame = load_zones(args.csv)
    columns = column_transitions(frame)
    x_col, y_col = frame.columns[0], frame.columns[1]
    counts = frame["strategy"].value_counts()
    print(f"{args.csv}: open={int(counts.get('open', 0))} closed={int(counts.get('closed', 0))}")
    for col in columns:
        where = ", ".join(f"{x_col}={x:.6g} {a}->{b}" for x, a, b in col.flips) or "none"
        print(f"  {y_col}={col.y:.6g}: {where}")

    if args.against is None:
        return 0
    other = load_zones(args.against)
    bad = boundary_mismatches(columns, column_transitions(other), cell_width(frame))
    if bad:
        print(
            f"boundary mismatch against {args.against} at {y_col} = "
            + ", ".join(f"{y:.6g}" for y in bad),
            file=sys.stderr,
        )
        return 1
    print(f"boundaries agree with {args.against}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
