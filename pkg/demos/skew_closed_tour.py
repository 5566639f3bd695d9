"""Check a Heyting chain, corrupt it, derive its tensor and compare the two axiom sets."""
from skewcat.bridge import check_correspondence, find_left_adjoints, monoidal_from_closed
from skewcat.corpus import heyting_chain, right_projection
from skewcat.skewcore import (blames, check_skew_closed, check_skew_monoidal, corrupt_closed,
                              monoidal_invertibility, summarize)

H = heyting_chain(3)
print("Heyting 3-chain:", summarize(check_skew_closed(H)))

bad, table, key = corrupt_closed(H, seed=7)
print(f"changed {table}{key}; blamed by:")
for r in blames(check_skew_closed(bad), key)[:5]:
    print("   ", r)

br = find_left_adjoints(H.base, H.hom)
M = monoidal_from_closed(br, H)
print("derived tensor A(x)B:", {(A, B): M.t(A, B) for A in range(3) for B in range(3)})
for r in check_correspondence(br, H, M):
    print("   ", r.axiom, r.status)

R = right_projection(2)
print("right projection:", summarize(check_skew_monoidal(R)))
print("non-invertible constraints:", monoidal_invertibility(R))
