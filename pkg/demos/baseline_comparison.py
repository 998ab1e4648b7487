"""Proposed loop versus the two literature baselines, same plants.

Pairings follow the published comparison:

* mass-spring at omega = 3.2: the integrated-dither law converges
  (slowly; its own small parameter eps_b does the averaging work).
  The proposed loop at that same frequency does not settle, because
  3.2 rad/s sits below the spring resonance sqrt(20) = 4.47 rad/s and
  single-dither averaging needs the dither faster than the plant.
* pendulum at omega = 50: both settle; the proposed loop holds the
  target with roughly a tenth of the two-dither law's steady ripple.
"""

import numpy as np

from vibresc import scenario_defaults, simulate
from vibresc.analysis import convergence_report
from vibresc.benchmarks import proposed_counterpart
from vibresc.scenario import build_rhs


def report(s, tf=None):
    traj = simulate(build_rhs(s), np.asarray(s.x0, dtype=float),
                    s.integration.t0, tf or s.integration.tf,
                    s.effective_dt)
    return convergence_report(traj, s.objective.target,
                              period=s.dither_period)


def row(label, rep):
    settle = ("never" if rep.settling_time is None
              else f"{rep.settling_time:7.2f}")
    print(f"  {label:34s} settle {settle:>7s}   "
          f"mean {rep.steady_state_mean[0]:8.4f}   "
          f"ptp {rep.steady_state_oscillation[0]:8.4f}")


def main():
    print("mass-spring, omega = 3.2 (below the spring resonance):")
    row("integrated-dither baseline", report(
        scenario_defaults("comparison_grushkovskaya")))
    row("proposed loop, same frequency", report(
        proposed_counterpart("comparison_grushkovskaya")))
    row("  ... with cubic damping", report(
        proposed_counterpart("comparison_grushkovskaya", "cubic")))

    print("\npendulum, omega = 50:")
    row("two-dither baseline", report(
        scenario_defaults("comparison_suttner")))
    row("proposed loop, same frequency", report(
        proposed_counterpart("comparison_suttner")))

    print("\nthe integrated-dither law centers on the target only after")
    print("~150 s, and its 3.2 rad/s carrier ripple keeps crossing the")
    print("strict 5% band (hence the late settle time). The proposed")
    print("pendulum loop holds the target with about a tenth of the")
    print("two-dither steady oscillation. The non-settling mass-spring")
    print("rows show the proposed law's frequency-separation requirement,")
    print("not a tuning accident.")


if __name__ == "__main__":
    main()
