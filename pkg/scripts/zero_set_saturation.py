"""Zero-set rank of disjoint and intersecting pairs as the sampling bound grows.

On the closed genus-two surface the sampled rank of a disjoint pair can sit
below D-2 at small bounds, and an intersecting pair can exceed D-3 once
curves of a complementary one-holed torus enter the sample.  This script
tabulates both counts per bound.
"""
import argparse
import itertools
import time

from lamina.dtcoord import enumerate_curves
from lamina.isect import is_disjoint
from lamina.rigidity import zero_set_rank
from lamina.surface import make_surface, standard_pants_decomposition

ap = argparse.ArgumentParser()
ap.add_argument("-g", type=int, default=2)
ap.add_argument("-r", type=int, default=0)
ap.add_argument("--pool-bound", type=int, default=3)
ap.add_argument("--max-bound", type=int, default=6)
args = ap.parse_args()

pd = standard_pants_decomposition(make_surface(args.g, args.r))
D = pd.surface.ml_dimension
pool = enumerate_curves(pd, args.pool_bound)
pairs = list(itertools.combinations(pool, 2))
flags = [is_disjoint(a, b) for a, b in pairs]
print(f"S_{args.g},{args.r}: D={D}, {len(pool)} classes, {len(pairs)} pairs")
print("bound  disjoint<D-2  intersecting>D-3  seconds")
for bound in range(args.pool_bound, args.max_bound + 1):
    t = time.time()
    under = over = 0
    for (a, b), disj in zip(pairs, flags):
        rank = zero_set_rank([a, b], bound).rank
        if disj and rank < D - 2:
            under += 1
        if not disj and rank > D - 3:
            over += 1
    print(f"{bound:5d}  {under:12d}  {over:16d}  {time.time() - t:7.1f}")
