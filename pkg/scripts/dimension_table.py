"""Orbit dimension tables for one signature, optionally checked against stabilizers.

    python3 scripts/dimension_table.py --signature 2 2 --class-color 0 --oracle
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from colored_quiver.catalog import cqb_records, enumerate_orbit_classes, nilpotent_orbit_records
from colored_quiver.cli import render
from colored_quiver.oracle import build_representative, orbit_dimension_oracle


@dataclass
class TableConfig:
    signature: tuple[int, ...] = (2, 2)
    class_color: Optional[int] = None
    oracle: bool = False
    draw: bool = False


def run(cfg: TableConfig) -> None:
    xi = cfg.signature
    if cfg.class_color is None:
        records = enumerate_orbit_classes(xi)
    else:
        records = cqb_records(xi, len(xi), cfg.class_color)
    print(f"signature {xi}: {len(records)} labels, "
          f"{len(nilpotent_orbit_records(xi))} nilpotent orbits")
    for rec in sorted(records, key=lambda r: (r.dim, r.label.sort_key())):
        marked = rec.label.to_marked()
        line = f"dim {rec.dim:3d}  lambda={marked.shape} eps={marked.colors} mu={marked.marks}"
        if cfg.oracle:
            v, x, _ = build_representative(rec.label.representative(cfg.class_color))
            check = orbit_dimension_oracle(v, x)
            line += f"  oracle {check}" + ("" if check == rec.dim else "  MISMATCH")
        print(line)
        if cfg.draw:
            print("\n".join("      " + row for row in render(marked).splitlines()))
    counts = Counter(r.dim for r in records)
    print("dimension histogram:", dict(sorted(counts.items())))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--signature", type=int, nargs="+", default=[2, 2])
    parser.add_argument("--class-color", type=int)
    parser.add_argument("--oracle", action="store_true")
    parser.add_argument("--draw", action="store_true")
    args = parser.parse_args()
    run(TableConfig(tuple(args.signature), args.class_color, args.oracle, args.draw))


if __name__ == "__main__":
    main()
