"""
Whitney numbers two ways, and a benchmark
=========================================

The per-cardinality ideal counts of a poset can be computed by summing row
polynomials of the compact enumeration, or by a pivot recursion that never
looks at rows: split on an element, ideals avoiding it live in the poset
minus its filter, ideals containing it in the poset minus its down-set.
The two methods share no code, so their agreement is a strong correctness
check -- and their relative speed depends on the poset's shape.
"""

from wildrows import (
    LayeredSpec,
    gen_layered_poset,
    pick_pivot,
    rank_poly_recursive,
    run_bench,
    whitney,
)

# a random layered poset: 4 levels of width 3, two lower covers each
poset = gen_layered_poset(LayeredSpec(m=3, l=4, t=2, seed=11))
print("poset:", poset)
print("pivot chosen by the recursion:", pick_pivot(poset))

by_rows = whitney(poset)
by_recursion, leaf_count = rank_poly_recursive(poset)
print("whitney numbers (rows):     ", by_rows.padded(poset.w))
print("whitney numbers (recursion):", by_recursion.padded(poset.w))
print("agree:", by_rows == by_recursion, "| antichain leaves:", leaf_count)

# The harness runs both methods across generated instances and reports
# N (ideals), R (compact rows), nsum (recursion leaves) and timings:
report = run_bench([
    LayeredSpec(5, 6, 2, seed=1),
    LayeredSpec(3, 9, 1, seed=2),
    LayeredSpec(8, 3, 4, seed=3),
    LayeredSpec(10, 2, 2, seed=4),
])
print()
print(report.table())
