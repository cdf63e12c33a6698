"""Write the Σ₁,₁ slope picture (Farey neighbours joined) as SVG."""
import argparse

from lamina.dtcoord import enumerate_curves
from lamina.surface import make_surface, standard_pants_decomposition
from lamina.torus import farey_svg, pair_of_vector

ap = argparse.ArgumentParser()
ap.add_argument("--bound", type=int, default=4)
ap.add_argument("--out", default="farey.svg")
args = ap.parse_args()

pd = standard_pants_decomposition(make_surface(1, 1))
pairs = [pair_of_vector(c) for c in enumerate_curves(pd, args.bound)]
with open(args.out, "w") as f:
    f.write(farey_svg(pairs))
print(f"{len(pairs)} slopes -> {args.out}")
