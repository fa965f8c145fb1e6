"""
Choosing the initial qubit state
=================================

For the two-qubit single-edge system, sweep the initial state
alpha0 = sqrt(t), alpha1 = sqrt(1 - t) and track three figures of merit for
qubit 0's reduced state: the total entanglement distance E, the von Neumann
entropy S (nats), and the Hilbert-Schmidt distance D_HS from the maximally
mixed state. All three single out the balanced choice t = 1/2, i.e.
|alpha0| = |alpha1| = 1/sqrt(2).
"""

import math

from digraph_ed import GateParams, alpha_sweep

sweep = alpha_sweep(GateParams(math.pi / 2, 0.0), grid=21)

print("t       E           S (nats)    D_HS")
for t, e, s, d in sweep.samples:
    bar = "#" * int(round(40 * e))
    print(f"{t:0.2f}  {e:10.6f}  {s:10.6f}  {d:8.6f}  {bar}")

print(f"\nargmax E    = {sweep.argmax_E}")
print(f"argmax S    = {sweep.argmax_S}")
print(f"argmin D_HS = {sweep.argmin_DHS}")
print(f"ln 2        = {math.log(2):.6f} (entropy ceiling, reached at t = 1/2)")

# A gentler gate angle lowers the peak but not its location.
soft = alpha_sweep(GateParams(math.pi / 5, 0.0), grid=21)
print(f"\ntheta = pi/5: peak E = {max(s[1] for s in soft.samples):.6f} at t = {soft.argmax_E}")

# With theta = 0 the gate is the identity: the sweep degenerates.
flat = alpha_sweep(GateParams(0.0, 0.0), grid=21)
print(f"theta = 0:    degenerate = {flat.degenerate} (no entanglement at any t)")
