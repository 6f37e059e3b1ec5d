"""Voltage-trace gallery across the drive landmarks.

Simulates the bundled Purkinje model at five drive values spanning the
transition from quiescence through bursting and amplitude-modulated spiking
to uniform rapid spiking, classifies each trace, and prints the burst/AM
statistics.  With matplotlib available, the traces are stacked into
regime_gallery.png.

Run:  python demos/01_regime_gallery.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from burstlab import apex_event, integrate, load_bundled, rest_state
from burstlab.traces import classify_regime

DRIVES = [-22.0, -23.0, -32.93815, -32.94, -33.0]
T_END = 6000.0

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_out")
outdir.mkdir(parents=True, exist_ok=True)

spec = load_bundled()
results = []
for J in DRIVES:
    traj = integrate(spec.bound(J=J), rest_state(spec, -65.0), (0.0, T_END),
                     rtol=1e-8, atol=1e-10, events=[apex_event(0)])
    report = classify_regime(traj)
    results.append((J, traj, report))
    gaps = report.interburst_intervals
    print(f"J = {J:10.5f}: {report.label:16s} "
          f"spikes={report.n_spikes:5d} bursts={len(report.bursts):3d} "
          f"mean gap={np.mean(gaps):6.1f} ms" if len(gaps) else
          f"J = {J:10.5f}: {report.label:16s} spikes={report.n_spikes:5d}")
    if report.am_counts and sum(report.am_counts):
        print(f"{'':14s}AM cycles per active phase: {report.am_counts}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping the figure")
    sys.exit(0)

fig, axes = plt.subplots(len(results), 1, figsize=(9, 9), sharex=True)
for ax, (J, traj, report) in zip(axes, results):
    sel = traj.t >= 1000.0
    ax.plot(traj.t[sel] / 1000.0, traj.y[sel, 0], lw=0.4, color="0.4")
    ax.set_ylabel("V (mV)")
    ax.set_title(f"J = {J:g}  ({report.label})", fontsize=9, loc="left")
axes[-1].set_xlabel("time (s)")
fig.tight_layout()
fig.savefig(outdir / "regime_gallery.png", dpi=150)
print(f"wrote {outdir / 'regime_gallery.png'}")
