# Classical parking, step by step.
#
# n cars enter a one-way street of n spots. Car i drives to its preferred
# spot and parks in the first free spot at or after it; if it reaches the
# end without parking, the whole preference vector fails.

from parkfun import (
    classical_park,
    is_parking_function,
    make_preference,
    total_displacement,
)

# Four cars, with cars 2 and 3 both wanting spot 1.
p = make_preference((3, 1, 1, 2))
result = classical_park(p)

print("preference:", p.entries)
print("outcome:   ", result.outcome.word)  # spot -> car
print("per-car displacement:", result.displacement)
print("total displacement:  ", total_displacement(result))

# Car 3 wanted spot 1, found it taken by car 2, and rolled forward to
# spot 2 (displacement 1). Car 4 rolled from 2 all the way to 4.

# Not every preference parks. If everyone wants the last spot:
bad = make_preference((4, 4, 4, 4))
print("\nall cars want spot 4:", classical_park(bad))

# Membership can be decided without simulating: sort the preferences and
# check the k-th smallest is at most k.
print("\nmembership by the rearrangement test:")
for entries in [(3, 1, 1, 2), (4, 4, 4, 4), (2, 2, 1, 3)]:
    print(f"  {entries}: {is_parking_function(make_preference(entries))}")

# The two routes always agree; the test suite checks this exhaustively for
# every preference vector up to n = 6.
