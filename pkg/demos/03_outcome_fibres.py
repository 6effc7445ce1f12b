# Which preferences produce a given final arrangement?
#
# A successful friendship outcome is always a Hamiltonian path of the
# friendship graph (consecutive cars must be friends). For a fixed
# Hamiltonian path, the preferences mapping onto it form a box: car i may
# prefer exactly the spots covered by the maximal run of its "blockers"
# ending at its own spot.

from parkfun import (
    Permutation,
    blocking_sequence,
    enumerate_fibre,
    fibre_characterisation,
    fibre_size,
    fig4_graph,
    friendship_park,
    hamiltonian_paths,
    is_blocker,
    total_fpf_count,
)

graph = fig4_graph()  # built-in 8-vertex example
pi = Permutation((8, 7, 1, 5, 2, 4, 6, 3))

print("Hamiltonian paths of the example graph:", sum(1 for _ in hamiltonian_paths(graph)))

# A value j > i still blocks i when j sits next to a smaller non-friend
# of i; such a spot is permanently guarded against car i.
print("\nblockers of 4 in", pi.word)
for j in range(1, 9):
    print(f"  {j}: {is_blocker(j, 4, pi, graph)}")

run = blocking_sequence(4, pi, graph)
print("blocking run ending at 4:", run.elements, "length", run.length)

# The runs give per-car spot intervals, and the fibre is their product.
chi = fibre_characterisation(pi, graph)
for car, (lo, hi) in enumerate(chi.spot_sets, start=1):
    print(f"  car {car} may prefer spots {lo}..{hi}")
print("fibre size:", fibre_size(pi, graph))

# Cross-check one member of the box by simulation:
sample = next(enumerate_fibre(pi, graph))
print("\nfirst fibre member:", sample.entries)
print("its outcome:", friendship_park(sample, graph).outcome.word)

# Summing fibre sizes over all Hamiltonian paths counts every friendship
# parking function of the graph:
print("\ntotal friendship parking functions here:", total_fpf_count(graph))
