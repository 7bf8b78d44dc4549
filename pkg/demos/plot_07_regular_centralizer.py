"""
Centralizer of a regular permutation group
==========================================

A group of order d acting on itself by left translation sits inside S_d;
the permutations commuting with all those translations are exactly the
right translations, so there are d of them.
"""

from ffcurves.census import (
    cyclic_group,
    klein_four_group,
    regular_stabilizer_size,
    symmetric_group_table,
)

groups = {f"C{d}": cyclic_group(d) for d in range(1, 7)}
groups["V4"] = klein_four_group()
groups["S3"] = symmetric_group_table(3)

for name, table in groups.items():
    print(f"{name:3s} order {len(table)}  centralizer {regular_stabilizer_size(table)}")
