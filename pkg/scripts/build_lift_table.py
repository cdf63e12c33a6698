"""Regenerate the serialized Σ₀,₅ -> Σ₁,₂ lift table."""
import argparse
import time

from lamina.cover import TABLE_PATH, build_lift_table, save_lift_table

ap = argparse.ArgumentParser()
ap.add_argument("--bound", type=int, default=8)
ap.add_argument("--anchor-norm", type=int, default=5)
ap.add_argument("--out", default=str(TABLE_PATH))
args = ap.parse_args()

t = time.time()
table = build_lift_table(args.bound, args.anchor_norm)
save_lift_table(table, type(TABLE_PATH)(args.out))
print(f"{len(table['entries'])} entries in {time.time() - t:.1f}s -> {args.out}")
