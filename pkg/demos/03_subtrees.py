"""
Fixed-cardinality subtrees of a tree
====================================

A subtree here is a connected set of vertices (the empty set and singletons
count).  Connectivity is an implicational matter: any two non-adjacent
vertices force the interior of their unique path.  The feasibility oracle
is a single sweep of the forest left after deleting forbidden vertices.
"""

from wildrows import (
    Tree,
    enumerate_k_subtrees,
    gen_random_tree,
    steiner_closure,
    subtree_count,
    tree_base,
)

#      1 - 2 - 3 - 4
#          |
#          5 - 6
tree = Tree(6, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])

print("path implications (longest paths first):")
for imp in tree_base(tree):
    print("  ", imp)

print("\nminimal subtree spanning {1, 4, 6}:", sorted(steiner_closure(tree, {1, 4, 6})))

total = 0
for k in range(tree.w + 1):
    stack = enumerate_k_subtrees(tree, k)
    subtrees = [sorted(s) for s in stack.sets(k)]
    total += len(subtrees)
    print(f"k={k}: {len(subtrees):2d} subtrees  {subtrees}")

print("\nsum over k:", total)
print("independent count by dynamic programming:", subtree_count(tree))

# works the same on a random tree, reproducibly from a seed
random_tree = gen_random_tree(9, seed=2)
print("\nrandom 9-vertex tree:", random_tree)
print("5-vertex subtrees:",
      sum(1 for _ in enumerate_k_subtrees(random_tree, 5).sets(5)))
