"""
Compact {0,1,2,a,b}-valued rows and cardinality polynomials
===========================================================

For singleton-premise implications a row can absorb a whole implication
into a premise/conclusion wildcard: a position a1 in a member set forces
all b1 positions in.  All ideals of a poset then fit into far fewer rows
than the {0,1,2} alphabet needs, and per-cardinality counts come from a
small product polynomial per row -- no enumeration at all.
"""

from wildrows import (
    Poset,
    cardinality_poly,
    ab_enumerate,
    parse_row,
    render_row,
    rowab_count,
    whitney,
)

# One row, read by eye: positions 3,4 forced in, 1,2 forced out, 5,6,7 free,
# and three premise/conclusion bundles.
row = parse_row("0 0 1 1 2 2 2 a1 b1 b1 a2 b2 b2 b2 a3 b3")
print("row:", render_row(row))
print("members:", rowab_count(row))

poly = cardinality_poly(row)
print("members by cardinality:")
for k, count in enumerate(poly.coefficients):
    if count:
        print(f"  k={k:2d}: {count}")
print("check: polynomial at 1 =", poly.evaluate(1))

# All ideals of a fence poset, compactly:
fence = Poset(7, [(1, 2), (3, 2), (3, 4), (5, 4), (5, 6), (7, 6)])
rows = ab_enumerate(fence)
print(f"\nideals of a 7-element fence in {len(rows)} rows:")
for r in rows:
    print(f"  {render_row(r)}   -> {rowab_count(r)} ideals")
print("total:", sum(rowab_count(r) for r in rows))

# Summing the row polynomials gives the per-cardinality ideal counts
# (the Whitney numbers of the ideal lattice):
print("whitney numbers:", whitney(fence).padded(fence.w))
