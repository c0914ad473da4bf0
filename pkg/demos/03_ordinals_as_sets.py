"""Ordinals and hereditarily transitive sets are the same thing.

One direction sends an ordinal to the set of (the images of) its initial
segments; the other computes the rank of a set. On hereditarily
transitive sets the two are exactly inverse, and they carry the order
with them: strict order becomes membership, weak order becomes inclusion.
"""

from hfkit import (
    SetUniverse,
    bounded_sim,
    canon,
    chain,
    elements_ordinal,
    order_type,
    rank_ordinal,
    rank_quotient,
    set_of_ordinal,
    simulation,
)

u = SetUniverse()

for n in range(5):
    h = set_of_ordinal(chain(n), u)
    print(f"chain {n} becomes", canon(h), "(the numeral)", "ordinal?", u.is_st_ordinal(h))

h2, h3 = set_of_ordinal(chain(2), u), set_of_ordinal(chain(3), u)
print("\n2 < 3 as ordinals:", bounded_sim(chain(2), chain(3)) is not None)
print("image of 2 is a member of image of 3:", u.mem(h2, h3))
print("2 <= 3 as ordinals:", simulation(chain(2), chain(3)) is not None)
print("image of 2 is a subset of image of 3:", u.subset(h2, h3))

# the rank works on every set, not only on ordinals
messy = u.mk_set([u.mk_set([u.empty()])])  # {{0}}, not transitive
print("\nrank of {{0}}:", order_type(rank_ordinal(messy)))

# for ordinals the rank has two non-recursive descriptions: group a raw
# presentation by the set each entry denotes, or order the members by
# membership. Both agree with the recursion.
two = u.von_neumann(2)
pres = [u.empty(), u.von_neumann(1), u.empty()]  # redundant on purpose
q = rank_quotient(two, pres)
print("\npresentation indices grouped by denotation:", q.classes)
print(
    "quotient order type:", order_type(q.ordinal),
    "| element order type:", order_type(elements_ordinal(two)),
    "| recursive rank:", order_type(rank_ordinal(two)),
)
