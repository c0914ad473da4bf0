"""Hereditarily finite sets live in a hash-consed universe.

Every set is stored once: building the same set twice, by any route,
returns the same handle. Equality of handles simply is equality of sets.
"""

from hfkit import PointedGraph, SetUniverse, bisimilar, canon, export_slice

u = SetUniverse()
empty = u.empty()
one = u.mk_set([empty])

print("The empty set prints as", canon(empty))
print("Its singleton prints as", canon(one))

# duplicates and order vanish at construction time
a = u.mk_set([empty, one, empty])
b = u.mk_set([one, empty])
print("\n{0,1,0} and {1,0} are literally the same handle:", a == b)

# membership and inclusion are decided on the canonical forms
print("{} is a member of {{}}:", u.mem(empty, one))
print("{} is a member of {{{}}}:", u.mem(empty, u.mk_set([one])))
print("{{}} is a subset of {{},{{}}}:", u.subset(one, a))

# the von Neumann numerals: each number is the set of its predecessors
for n in range(5):
    print(f"numeral {n} =", canon(u.von_neumann(n)))

print("\nrank of numeral 4:", u.rank_nat(u.von_neumann(4)))

# a raw pointed graph is a possibly redundant drawing of a set; collapsing
# it removes every redundancy. Both drawings below present {{}}.
tidy = PointedGraph.make([[1], []], root=0)
messy = PointedGraph.make([[1, 2, 1], [], []], root=0)
print("\ncollapse(tidy) == collapse(messy):", u.from_graph(tidy) == u.from_graph(messy))
print("the bisimulation oracle agrees:", bisimilar(tidy, messy))

# universes serialize as topologically sorted node arrays
print("\nJSON slice of numeral 2:", export_slice(u.von_neumann(2)))
