# Closed forms on the cycle graph.
#
# The Hamiltonian paths of the n-cycle are exactly the 2n rotations: read
# forwards (increasing) or backwards (decreasing) from any starting value.
# Each rotation's fibre size has a closed form, and the total count follows.

from parkfun import (
    CyclicOutcome,
    Direction,
    count_fpf_brute,
    cycle_fibre_size,
    cycle_total_count,
    cyclic_outcomes,
    expand_cyclic,
    fibre_size,
    graph_generator,
)

n = 5
c5 = graph_generator("cycle", n)

print(f"rotation outcomes of the {n}-cycle and their fibre sizes:")
for c in cyclic_outcomes(n):
    word = expand_cyclic(c).word
    closed = cycle_fibre_size(c)
    general = fibre_size(expand_cyclic(c), c5)
    tag = "inc" if c.direction is Direction.INCREASING else "dec"
    print(f"  {tag} from {c.start}: {word}  closed form {closed}, product {general}")

total = cycle_total_count(n)
print(f"\nclosed-form total: {total}")

# The honest way to trust a formula: simulate all n^n preference vectors.
brute = count_fpf_brute(c5)
print(f"brute-force total over {n}^{n} simulations: {brute}")
assert total == brute

# The first few totals:
print("\ntotals for n = 3..8:", [cycle_total_count(k) for k in range(3, 9)])

# Three vertices are special: on the 3-cycle everyone is friends with
# everyone, so one factor drops out of the backwards-rotation product.
c = CyclicOutcome(Direction.DECREASING, start=1, n=3)
print("backwards rotation 132 on the 3-cycle has fibre size", cycle_fibre_size(c))
