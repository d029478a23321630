#!/usr/bin/env python3
"""
Print the γ^(b) triangles, the Motzkin returns triangle and their row sums.
Usage: python scripts/print_triangles.py [ROWS]
"""
import sys
from pathlib import Path

# Add backend to path
backend_path = Path(__file__).parent.parent / "backend"
sys.path.insert(0, str(backend_path))


def print_triangle(title, rows, first_row):
    print(f"📊 {title}")
    for index, row in enumerate(rows, start=first_row):
        print(f"  {index:>2}: " + " ".join(f"{v:>6}" for v in row))
    print()


def main():
    from ncinvert.combinatorics import trees
    from ncinvert.exceptions import NcInvertException

    rows = int(sys.argv[1]) if len(sys.argv) > 1 else 7

    try:
        for b in (0, 1, 2, 3):
            print_triangle(f"γ^({b}): trees with p internal nodes", trees.gamma_triangle(b, rows), 1)
            print(f"  row sums: {trees.row_sum_series(b, rows)}\n")
        print_triangle("Motzkin paths by returns to the axis", trees.motzkin_returns_triangle(rows), 0)
    except NcInvertException as e:
        print(f"❌ {e.message}")
        return 1

    print("✅ Done")
    return 0


if __name__ == "__main__":
    sys.exit(main())
