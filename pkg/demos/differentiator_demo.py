"""Exercise the sliding-mode differentiator the protocol analysis leans on.

A chain of m+1 states driven by signum powers recovers a signal and its
derivatives despite a bounded disturbance on the last channel. Here the
disturbance is sin(t) with bound L = 1; after convergence each state
stays inside the step-size accuracy envelope.
"""
from __future__ import annotations

import numpy as np

from edcho import default_levant_lambdas, levant_accuracy_bound, simulate_levant

M = 3
L = 1.0
DT = 1e-4
T_END = 10.0
SIGMA0 = np.array([1.0, 0.5, -0.5])

lambdas = default_levant_lambdas(M, L)
print(f"gain ladder for m={M}, L={L}: {lambdas}")

times, states = simulate_levant(
    SIGMA0,
    lambdas,
    L,
    M,
    dt=DT,
    t_end=T_END,
    record_stride=100,
    disturbance_fn=np.sin,
)

tail = times >= 0.9 * T_END
for mu in range(M):
    worst = np.abs(states[tail, mu]).max()
    bound = levant_accuracy_bound(M, mu + 1, DT, L)
    verdict = "inside" if worst < bound else "OUTSIDE"
    print(f"channel {mu}: terminal |sigma| = {worst:.3e}  envelope {bound:.3e}  ({verdict})")
