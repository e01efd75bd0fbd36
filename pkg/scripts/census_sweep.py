"""Brute-force orbit censuses over small prime fields, compared with the class catalog.

    python3 scripts/census_sweep.py --max-size 4 --fields 2 3
"""

from __future__ import annotations

import argparse
import itertools
import json
import time
from dataclasses import asdict, dataclass, field

from colored_quiver.oracle import BudgetExceeded, brute_force_orbits


@dataclass
class SweepConfig:
    max_size: int = 3
    max_n: int = 3
    fields: list[int] = field(default_factory=lambda: [2])
    budget: int = 5_000_000


def signatures(max_size: int, n: int):
    for size in range(max_size + 1):
        for xi in itertools.product(range(size + 1), repeat=n):
            if sum(xi) == size:
                yield xi


def sweep(cfg: SweepConfig):
    for q in cfg.fields:
        for n in range(1, cfg.max_n + 1):
            for xi in signatures(cfg.max_size, n):
                start = time.perf_counter()
                try:
                    census = brute_force_orbits(xi, n, q, budget=cfg.budget)
                except BudgetExceeded as exc:
                    yield {"q": q, "signature": list(xi), "skipped": exc.needed}
                    continue
                yield {
                    "q": q,
                    "signature": list(xi),
                    "orbits": census.orbits,
                    "classes": census.classes,
                    "match": census.match,
                    "seconds": round(time.perf_counter() - start, 3),
                }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=SweepConfig.max_size)
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    parser.add_argument("--fields", type=int, nargs="+", default=[2])
    parser.add_argument("--budget", type=int, default=SweepConfig.budget)
    args = parser.parse_args()
    cfg = SweepConfig(args.max_size, args.max_n, args.fields, args.budget)
    print(json.dumps({"config": asdict(cfg)}))
    mismatches = 0
    for row in sweep(cfg):
        mismatches += row.get("match") is False
        print(json.dumps(row))
    print(json.dumps({"mismatches": mismatches}))


if __name__ == "__main__":
    main()
