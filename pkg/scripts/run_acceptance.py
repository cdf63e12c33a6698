"""Run the acceptance checks and write a JSON report."""
import argparse
import json
import sys
import time

from lamina.acceptance import run_all

ap = argparse.ArgumentParser()
ap.add_argument("--only", type=int, nargs="*", help="criterion numbers")
ap.add_argument("--out", default=None)
args = ap.parse_args()

t = time.time()
results = run_all(set(args.only) if args.only else None)
for r in results:
    print(r.line())
print(f"elapsed {time.time() - t:.1f}s")
if args.out:
    with open(args.out, "w") as f:
        json.dump([r.to_json() for r in results], f, indent=1, sort_keys=True, default=str)
sys.exit(0 if all(r.passed for r in results) else 1)
