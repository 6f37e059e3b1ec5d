"""Torus bifurcation and canard quantification.

Locates the torus (Neimark-Sacker) bifurcation of the spiking orbit by
bisection on the return-map multiplier moduli, certifies the supercritical
square-root amplitude scaling, and quantifies the torus canards at the
mixed-regime drive: dwell times on the repelling cycle branch and the
burst-vs-AM exit statistics.

This is the most expensive demo (several minutes).

Run:  python demos/03_torus_and_canards.py [outdir]
"""

import json
import sys
from pathlib import Path

import numpy as np

from burstlab import apex_event, integrate, load_bundled, rest_state
from burstlab.cli import compute_fastbif
from burstlab.torus import canard_metrics, locate_torus_bifurcation

J_STAR = -32.93815

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_out")
outdir.mkdir(parents=True, exist_ok=True)

spec = load_bundled()

print("locating the torus bifurcation in J over [-33.0, -32.9] ...")
loc = locate_torus_bifurcation(spec, (-33.0, -32.90))
print(f"  J_TB = {loc.J_TB:.4f}, crossing pair modulus {loc.modulus:.6f}, "
      f"rotation number {loc.rotation_number:.4f}")
print(f"  invariant-circle radius ~ sqrt(J - J_TB): R^2 = {loc.scaling_r2:.3f} "
      f"({'supercritical' if loc.supercritical else 'inconclusive'})")
(outdir / "torus.json").write_text(json.dumps(loc.to_dict(), indent=2))

print("simulating 12 s at the mixed-regime drive ...")
traj = integrate(spec.bound(J=J_STAR), rest_state(spec, -65.0), (0.0, 12000.0),
                 rtol=1e-8, atol=1e-10, events=[apex_event(0)])
m = traj.y[:, 4]
fast, eqbs, cyb = compute_fastbif(
    spec, J_STAR, (max(0.0, float(m.min()) - 0.02), float(m.max()) + 0.02),
    max_cycle_points=300)
rep = canard_metrics(traj, cyb)
n_fp = sum(1 for p in rep.passages if p.exit_class == "to_attracting_fp")
n_lc = sum(1 for p in rep.passages if p.exit_class == "to_attracting_lc")
dwells = [p.dwell for p in rep.passages if p.dwell > 0]
print(f"  fold of cycles at M = {rep.fold_m:.5f}; spike period "
      f"{rep.spike_period:.2f} ms")
print(f"  {len(rep.passages)} passages past the fold: dwell "
      f"{np.min(dwells):.0f}-{np.max(dwells):.0f} ms on the repelling branch")
print(f"  exits: {n_fp} to the quiescent (fixed-point) branch, "
      f"{n_lc} to the attracting cycles (AM)")
(outdir / "canard.json").write_text(json.dumps(rep.to_dict(), indent=2))
print(f"wrote {outdir / 'torus.json'} and {outdir / 'canard.json'}")
