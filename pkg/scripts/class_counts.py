"""Count orbit labels per signature and check the zero-class merge identity.

The number of enhanced orbit classes should equal
sum_m |cqbs(xi, m)| - (n - 1) * |colored partitions(xi)|.

    python3 scripts/class_counts.py --n 2 --max-size 8
"""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass

from colored_quiver.catalog import (
    enumerate_colored_partitions,
    enumerate_cqbs,
    enumerate_orbit_classes,
)


@dataclass
class CountConfig:
    n: int = 2
    max_size: int = 6


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=CountConfig.n)
    parser.add_argument("--max-size", type=int, default=CountConfig.max_size)
    args = parser.parse_args()
    cfg = CountConfig(args.n, args.max_size)
    print(f"{'signature':>16} {'P':>6} {'Q(m) per m':>24} {'classes':>8} {'ok':>3} {'sec':>6}")
    for size in range(cfg.max_size + 1):
        for xi in itertools.product(range(size + 1), repeat=cfg.n):
            if sum(xi) != size:
                continue
            start = time.perf_counter()
            plain = len(enumerate_colored_partitions(xi, cfg.n))
            per_m = [len(enumerate_cqbs(xi, cfg.n, m)) for m in range(cfg.n)]
            classes = len(enumerate_orbit_classes(xi, cfg.n))
            ok = classes == sum(per_m) - (cfg.n - 1) * plain
            elapsed = time.perf_counter() - start
            print(f"{str(xi):>16} {plain:>6} {str(per_m):>24} {classes:>8} "
                  f"{'yes' if ok else 'NO':>3} {elapsed:6.2f}")


if __name__ == "__main__":
    main()
