# Cyclic parking functions and the component bijection.
#
# A classical parking function is cyclic when the final arrangement is an
# increasing rotation i, i+1, ..., n, 1, ..., i-1. Cyclic preferences are
# in bijection with permutation components: realise the displacement vector
# as the inversion sequence of a permutation, then take the component
# containing the car that parked in spot 1. Displacements become inversion
# numbers.

import itertools

from parkfun import (
    Permutation,
    classical_park,
    components,
    cyclic_total_count,
    enumerate_cyclic_pf,
    inv_seq,
    is_cyclic_pf,
    make_preference,
    perm_from_inv_seq,
    psi,
    psi_inverse,
)
from parkfun.notation import format_blocks
from parkfun.verify import n3_reference_rows

# Inversion sequences encode permutations: entry i counts the smaller values
# appearing after i. The encoding round-trips.
a = (0, 0, 1, 3, 2)
pi = perm_from_inv_seq(a)
print("inversion sequence", a, "-> permutation", pi.word)
print("and back:", inv_seq(pi).entries)

# A ten-car cyclic preference:
p = make_preference((4, 4, 6, 6, 7, 9, 7, 1, 2, 1))
print("\nclassical outcome:", classical_park(p).outcome.word)
print("rotation start:", is_cyclic_pf(p))

c = psi(p)
blocks = [(b.start, b.end) for b in components(c.underlying)]
print("displacement:", classical_park(p).displacement)
print("host permutation:", format_blocks(c.underlying.word, blocks, mark_start=c.start))
print("image component:", c.word)

# The other direction rebuilds the preference from a marked component:
host = Permutation((3, 4, 1, 2, 7, 8, 6, 5, 9))
block = next(b for b in components(host) if b.start == 5)
print("\ncomponent", block.word, "of", host.word, "->", psi_inverse(block).entries)

# For three cars the whole bijection fits on a screen:
print("\nall cyclic preferences of length 3:")
print(f"{'outcome':>9} {'preference':>12} {'displacement':>14}  host/component")
for outcome, pref, disp, host_word, mark in n3_reference_rows():
    comps = [(b.start, b.end) for b in components(Permutation(host_word))]
    marked = format_blocks(host_word, comps, mark_start=mark)
    print(f"{str(outcome):>9} {str(pref):>12} {str(disp):>14}  {marked}")

# Counting both sides agree: totals 1, 3, 10, 40, 192, ...
print("\ncyclic totals:", [cyclic_total_count(k) for k in range(1, 7)])
print("components of all permutations of [4]:",
      sum(len(components(Permutation(w)))
          for w in itertools.permutations(range(1, 5))))
print("cyclic preferences of length 4:", sum(1 for _ in enumerate_cyclic_pf(4)))
