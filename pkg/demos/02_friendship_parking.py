# Friendship parking: the same process, but a car may only park next to
# its friends. Friendship is adjacency in a graph on the car labels.

from parkfun import (
    LotState,
    classical_park,
    enumerate_fpf,
    friendship_park,
    graph_generator,
    is_available,
    make_preference,
)

# Friends sit around a cycle: 1-2-3-4-1.
c4 = graph_generator("cycle", 4)
print("4-cycle edges:", sorted(c4.edges))

# Availability is queried per spot: the spot must be free, and each occupied
# neighbouring spot must hold a friend. The street ends count as free.
state = LotState.with_cars(4, {2: 1, 1: 2})  # car 1 in spot 2, car 2 in spot 1
print("\ncar 3 may take spot 3?", is_available(state, c4, car=3, spot=3))
# No: spot 2 holds car 1, and 1 and 3 are not friends on the cycle.

state = state.place(4, 3)
print("car 4 may take spot 3?", is_available(state, c4, car=4, spot=3))
# Yes: its neighbours now hold cars 1 and 3, both friends of 4.

# Running the full process:
good = make_preference((2, 1, 2, 2))
print("\n(2,1,2,2) on the 4-cycle:", friendship_park(good, c4))

bad = make_preference((4, 2, 2, 1))
print("(4,2,2,1) on the 4-cycle:", friendship_park(bad, c4))
# Car 3 has no reachable spot: spot 3 is free but guarded by car 1 in spot 4.
# The same preference parks fine classically:
print("(4,2,2,1) classically:   ", classical_park(bad))

# Every friendship parking function for a graph, in lexicographic order:
c3 = graph_generator("cycle", 3)
stream = list(enumerate_fpf(c3))
print(f"\nthe 3-cycle admits {len(stream)} friendship parking functions:")
print([p.entries for p in stream])
