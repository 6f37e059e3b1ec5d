"""Fast-subsystem bifurcation diagram with the full dynamics overlaid.

Freezes the slow M gate, continues the equilibrium branches (the knee where
attracting and saddle points merge) and the limit-cycle branch (through the
fold of cycles onto the repelling side), then simulates the full system at
the mixed-regime drive and overlays the trajectory in the (M, V) plane:
the torus-canard picture.

Run:  python demos/02_fast_subsystem_diagram.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from burstlab import apex_event, integrate, load_bundled, rest_state
from burstlab.cli import compute_fastbif

J_STAR = -32.93815

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_out")
outdir.mkdir(parents=True, exist_ok=True)

spec = load_bundled()
print("simulating the full system at the mixed-regime drive...")
traj = integrate(spec.bound(J=J_STAR), rest_state(spec, -65.0), (0.0, 3000.0),
                 rtol=1e-8, atol=1e-10, events=[apex_event(0)])
m = traj.y[:, 4]
window = (max(0.0, float(m.min()) - 0.02), float(m.max()) + 0.02)
print(f"continuing the fast subsystem over M in [{window[0]:.3f}, {window[1]:.3f}]...")
fast, eq_branches, cyc_branch = compute_fastbif(spec, J_STAR, window,
                                                max_cycle_points=250)

for br in eq_branches:
    kinds = [(b.kind, round(b.param, 4)) for b in br.bifurcations]
    print(f"equilibrium branch: {len(br.points)} points, bifurcations: {kinds}")
for b in cyc_branch.bifurcations:
    print(f"cycle branch: {b.kind} at M = {b.param:.5f}"
          + (f", multiplier {b.multiplier:.6f}" if b.multiplier is not None else ""))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, ax = plt.subplots(figsize=(8, 6))
sel = traj.t >= 500.0
ax.plot(traj.y[sel, 4], traj.y[sel, 0], lw=0.3, color="0.75", zorder=1,
        label="full dynamics")
for br in eq_branches:
    M = br.params
    V = br.states[:, 0]
    stab = np.array([p.stability == "attracting" for p in br.points])
    ax.plot(M[stab], V[stab], "b.", ms=2, zorder=3)
    ax.plot(M[~stab], V[~stab], "r.", ms=2, zorder=3)
Mc = cyc_branch.params
vmin = np.array([c.v_extent[0] for c in cyc_branch.cycles])
vmax = np.array([c.v_extent[1] for c in cyc_branch.cycles])
i_turn = int(np.argmax(Mc))
ax.plot(Mc[:i_turn + 1], vmax[:i_turn + 1], "g-", lw=2, label="attracting cycles")
ax.plot(Mc[:i_turn + 1], vmin[:i_turn + 1], "g-", lw=2)
ax.plot(Mc[i_turn + 1:], vmax[i_turn + 1:], "m--", lw=2, label="repelling cycles")
ax.plot(Mc[i_turn + 1:], vmin[i_turn + 1:], "m--", lw=2)
for b in cyc_branch.bifurcations:
    if b.kind == "fold_lc" and b.cycle is not None:
        ax.plot([b.param] * 2, list(b.cycle.v_extent), "yo", ms=8, zorder=4)
ax.set_xlabel("M")
ax.set_ylabel("V (mV)")
ax.legend(loc="lower left", fontsize=8)
fig.tight_layout()
fig.savefig(outdir / "fast_subsystem_diagram.png", dpi=150)
print(f"wrote {outdir / 'fast_subsystem_diagram.png'}")
