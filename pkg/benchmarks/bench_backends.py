#!/usr/bin/env python3
"""Timing comparison of the compiled and pure-Python fitting kernels.

Runs the per-replicate fitting battery (both MLE fits plus both AD statistics
and log-likelihoods) and its parts on synthetic Inverse Weibull samples,
printing per-call times and the compiled-over-Python speedup.

Usage: python benchmarks/bench_backends.py [--reps 300]
"""

import argparse
import time

import numpy as np

from iwsurv import kernels
from iwsurv.distributions import IWParams, iw_quantile_vec
from iwsurv.gof import selection_study
from iwsurv.rng import DOMAIN_STUDY, substream


def _samples(n, reps):
    p = IWParams(1.0, 2.1)
    out = []
    for rep in range(reps):
        rng = substream(7, DOMAIN_STUDY, 0, rep)
        out.append(np.sort(iw_quantile_vec(p, rng.random(n))))
    return out


def _time(fn, samples):
    start = time.perf_counter()
    for t in samples:
        fn(t)
    return (time.perf_counter() - start) / len(samples)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--reps", type=int, default=300)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; showing python only")

    cases = [
        ("fit_iw", lambda k: k.fit_iw),
        ("fit_ll", lambda k: k.fit_ll),
        ("ad_iw(1,2.1)", lambda k: (lambda t: k.ad_iw(t, 1.0, 2.1))),
        ("loglik_ll(1,2.1)", lambda k: (lambda t: k.loglik_ll(t, 1.0, 2.1))),
        ("replicate_battery", lambda k: k.replicate_battery),
    ]
    for n in (10, 50):
        samples = _samples(n, args.reps)
        print(f"\nn = {n}  ({args.reps} replicates)")
        print(f"{'kernel':<20}" + "".join(f"{b:>14}" for b in backends)
              + ("   speedup" if len(backends) == 2 else ""))
        for name, get in cases:
            times = [_time(get(kernels.get_backend(b)), samples)
                     for b in backends]
            row = f"{name:<20}" + "".join(f"{t * 1e6:>11.1f} us" for t in times)
            if len(times) == 2:
                row += f"   {times[0] / times[1]:7.1f}x" if backends[0] == "python" \
                    else f"   {times[1] / times[0]:7.1f}x"
            print(row)

    print("\nselection_study smoke grid (1 cell x 3 sizes x 200 reps):")
    for b in backends:
        start = time.perf_counter()
        # selection_study picks the process-wide backend; time it per backend
        # by swapping the kernel functions directly
        saved = {name: getattr(kernels, name)
                 for name in ("fit_iw", "fit_ll", "ad_iw", "ad_ll",
                              "loglik_iw", "loglik_ll", "replicate_battery")}
        mod = kernels.get_backend(b)
        for name in saved:
            setattr(kernels, name, getattr(mod, name))
        try:
            selection_study(a_list=(1.0,), b_list=(2.1,), n_list=(10, 30, 50),
                            reps=200, seed=7)
            print(f"  {b:<10} {time.perf_counter() - start:8.2f} s")
        finally:
            for name, fn in saved.items():
                setattr(kernels, name, fn)


if __name__ == "__main__":
    main()
