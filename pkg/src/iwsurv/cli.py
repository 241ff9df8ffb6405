"""Command-line interface.

Subcommands: ``fit``, ``select``, ``study``, ``simulate``, ``chart``, and
``repro``. Human-readable output goes to stdout by default; ``--json``
switches stdout to one canonical machine-readable document (byte-identical
across repeated invocations with the same seed). Exit status: 0 on success,
1 on numeric/internal failure, 2 on usage or domain errors.
"""

import argparse
import math
import os
import sys

import numpy as np

from . import repro as repro_mod
from .distributions import (IWParams, Model, iw_gamma23, ll_gamma23,
                            lognormal_gamma23)
from .errors import DomainError, IwsurvError
from .estimation import Sample, fit_model, loglik, rho_sq_hr, sample_gamma23
from .fixtures import FIXTURES, get_fixture
from .gof import ad_for_model, ad_pvalue_mc, select_model, selection_study
from .mechanisms import (AD_CRIT_1PCT, DefensiveConfig, DeteriorationConfig,
                         StressStrengthConfig, defensive_cdf,
                         defensive_cdf_empirical, defensive_iw,
                         deterioration_iw, max_stability_check,
                         simulate_deterioration, simulate_stress_strength,
                         stress_strength_iw)
from .report import (canonical_json, fit_report_to_dict, fmt6, params_to_dict,
                     render_kv, render_table)
from .rng import default_rng, substream, DOMAIN_BOOTSTRAP

_MODEL_CHOICES = {m.value: m for m in Model}


def _default_seed():
    env = os.environ.get("IWSURV_SEED")
    return int(env) if env else 1


def load_sample(path):
    """Newline-delimited decimal literals; '#' starts a comment; sorted on load."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}")
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            values.append(float(body))
        except ValueError:
            raise DomainError(f"{path}:{lineno}: not a number: {body!r}")
    if len(values) < 3:
        raise DomainError("sample too small")
    if any(v <= 0 for v in values):
        raise DomainError("sample values must be strictly positive")
    return Sample.from_values(values, name=os.path.basename(path))


def _resolve_sample(args):
    if args.fixture:
        return get_fixture(args.fixture), f"fixture:{args.fixture.upper()}"
    return load_sample(args.input), args.input


def write_sample(path, values):
    with open(path, "w") as fh:
        fh.write("# one observation per line\n")
        for v in values:
            fh.write(fmt6(float(v)) + "\n")


def _emit(args, doc, text):
    if getattr(args, "json", False):
        sys.stdout.write(canonical_json(doc))
    else:
        sys.stdout.write(text + "\n")


def _parse_range(spec):
    lo, _, hi = spec.partition(":")
    try:
        lo, hi = float(lo), float(hi)
    except ValueError:
        raise DomainError(f"range must look like 'lo:hi', got {spec!r}")
    if not lo < hi:
        raise DomainError(f"range needs lo < hi, got {spec!r}")
    return lo, hi


def _parse_list(spec, cast):
    try:
        return tuple(cast(tok) for tok in spec.split(",") if tok.strip())
    except ValueError:
        raise DomainError(f"bad list {spec!r}")


# ---------------------------------------------------------------- commands ---

def cmd_fit(args):
    sample, origin = _resolve_sample(args)
    model = _MODEL_CHOICES[args.model]
    params = fit_model(model, sample)
    p_value = None
    if args.reps > 0:
        p_value = ad_pvalue_mc(sample, model, args.reps,
                               substream(args.seed, DOMAIN_BOOTSTRAP, 1)).pvalue
    doc = {
        "command": "fit",
        "input": origin,
        "n": sample.n,
        "seed": args.seed,
        "model": model.value,
        "params": params_to_dict(model, params),
        "mll": loglik(model, params, sample),
        "ad_stat": ad_for_model(sample, model, params),
        "p_value": p_value,
        "rho_sq": rho_sq_hr(model, params, sample),
    }
    pairs = [("input", origin), ("n", sample.n), ("model", model.value)]
    pairs += [(k, v) for k, v in doc["params"].items()]
    pairs += [("mll", doc["mll"]), ("ad_stat", doc["ad_stat"]),
              ("rho_sq", doc["rho_sq"])]
    if p_value is not None:
        pairs.append(("p_value", p_value))
    _emit(args, doc, render_kv(pairs))
    return 0


def cmd_select(args):
    sample, origin = _resolve_sample(args)
    verdict = select_model(sample, reps_for_pvalues=args.reps, seed=args.seed)
    doc = {
        "command": "select",
        "input": origin,
        "n": sample.n,
        "seed": args.seed,
        "reps": args.reps,
        "iw": fit_report_to_dict(verdict.iw),
        "ll": fit_report_to_dict(verdict.ll),
        "winner_ad": verdict.winner_ad.value,
        "winner_mll": verdict.winner_mll.value,
        "agree": verdict.agree,
    }
    lines = [f"input {origin}  n {sample.n}  seed {args.seed}", ""]
    rows = []
    for rep in (verdict.iw, verdict.ll):
        d = fit_report_to_dict(rep)
        rows.append([rep.model.value,
                     ", ".join(f"{k}={fmt6(v)}" for k, v in d["params"].items()),
                     d["mll"], d["ad_stat"],
                     "-" if d["p_value"] is None else d["p_value"]])
    lines.append(render_table(["model", "params", "mll", "ad_stat", "p_value"], rows))
    lines.append("")
    lines.append(render_kv([("winner_ad", verdict.winner_ad.value),
                            ("winner_mll", verdict.winner_mll.value),
                            ("agree", verdict.agree)]))
    _emit(args, doc, "\n".join(lines))
    return 0


def _study_csv(study):
    lines = ["kind,a,b,n,p_ad,p_mll,p_both,reps"]
    for c in study.grid:
        lines.append(f"cell,{fmt6(c.a)},{fmt6(c.b)},{c.n},{fmt6(c.p_ad)},"
                     f"{fmt6(c.p_mll)},{fmt6(c.p_both)},{c.reps}")
    for n, (p_ad, p_mll, p_both) in sorted(study.averages.items()):
        lines.append(f"average,,,{n},{fmt6(p_ad)},{fmt6(p_mll)},{fmt6(p_both)},"
                     f"{study.reps}")
    return "\n".join(lines) + "\n"


def cmd_study(args):
    if args.reps < 100:
        print("warning: fewer than 100 replicates per cell gives very wide "
              "confidence bands", file=sys.stderr)
    a_list = _parse_list(args.a_list, float)
    b_list = _parse_list(args.b_list, float)
    n_list = _parse_list(args.n_list, int)
    study = selection_study(a_list, b_list, n_list, reps=args.reps,
                            seed=args.seed, workers=args.workers)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(_study_csv(study))
    doc = {
        "command": "study",
        "seed": study.seed,
        "reps": study.reps,
        "grid": [{"a": c.a, "b": c.b, "n": c.n, "p_ad": c.p_ad,
                  "p_mll": c.p_mll, "p_both": c.p_both} for c in study.grid],
        "averages": {str(n): {"p_ad": v[0], "p_mll": v[1], "p_both": v[2]}
                     for n, v in sorted(study.averages.items())},
    }
    rows = [[n, v[0], v[1], v[2]] for n, v in sorted(study.averages.items())]
    text = (f"seed {study.seed}  reps/cell {study.reps}  cells {len(study.grid)}\n\n"
            + render_table(["n", "P-AD", "P-MLL", "P-AD&MLL"], rows))
    if args.out:
        text += f"\n\nfull grid written to {args.out}"
    _emit(args, doc, text)
    return 0


def cmd_simulate(args):
    rng = default_rng(args.seed)
    if args.mechanism == "deterioration":
        config = DeteriorationConfig(k=args.k, h=args.h, v=args.v, d=args.d)
        mapped = deterioration_iw(config)
        sample = simulate_deterioration(config, args.n, rng)
    elif args.mechanism == "stress-strength":
        config = StressStrengthConfig(u=args.u, v=args.v, k=args.k, h=args.h)
        mapped = stress_strength_iw(config)
        sample = simulate_stress_strength(config, args.n, rng)
    elif args.mechanism == "defensive":
        return _simulate_defensive(args, rng)
    else:
        return _simulate_max_stability(args, rng)

    stat = ad_for_model(sample, Model.IW, mapped)
    passed = stat < AD_CRIT_1PCT
    if args.out:
        write_sample(args.out, sample.values)
    doc = {
        "command": "simulate", "mechanism": args.mechanism, "seed": args.seed,
        "n": args.n, "mapped_params": params_to_dict(Model.IW, mapped),
        "ad_stat": stat, "ad_critical_1pct": AD_CRIT_1PCT, "ad_pass": passed,
        "out": args.out,
    }
    pairs = [("mechanism", args.mechanism), ("n", args.n), ("seed", args.seed),
             ("mapped a", mapped.a), ("mapped b", mapped.b),
             ("ad_stat", stat), ("ad_critical_1pct", AD_CRIT_1PCT),
             ("ad_pass", passed)]
    if args.out:
        pairs.append(("out", args.out))
    _emit(args, doc, render_kv(pairs))
    return 0


def _simulate_defensive(args, rng):
    config = DefensiveConfig(beta=args.beta, k=args.k, h=args.h)
    rows = []
    for t in args.t:
        empirical = defensive_cdf_empirical(config, t, args.n, rng)
        closed = defensive_cdf(config, t)
        se = math.sqrt(max(closed * (1.0 - closed), 1e-12) / args.n)
        rows.append({"t": t, "empirical": empirical, "closed_form": closed,
                     "abs_diff": abs(empirical - closed), "se": se,
                     "within_3se": abs(empirical - closed) <= 3.0 * se})
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("t,empirical,closed_form,abs_diff,se,within_3se\n")
            for r in rows:
                fh.write(",".join(fmt6(r[k]) for k in
                                  ("t", "empirical", "closed_form", "abs_diff",
                                   "se")) + f",{r['within_3se']}\n")
    doc = {"command": "simulate", "mechanism": "defensive", "seed": args.seed,
           "n": args.n,
           "mapped_params": params_to_dict(Model.IW, defensive_iw(config)),
           "table": rows, "out": args.out}
    text = render_table(["t", "empirical", "closed_form", "abs_diff", "se",
                         "within_3se"],
                        [[r["t"], r["empirical"], r["closed_form"],
                          r["abs_diff"], r["se"], r["within_3se"]] for r in rows])
    _emit(args, doc, text)
    return 0


def _simulate_max_stability(args, rng):
    params = IWParams(a=args.a, b=args.b)
    rep = max_stability_check(params, args.n_max, args.reps, rng)
    doc = {"command": "simulate", "mechanism": "max-stability",
           "seed": args.seed, "n_max": rep.n_max, "reps": rep.reps,
           "target_params": params_to_dict(Model.IW, rep.target),
           "ad_stat": rep.stat, "ad_critical_1pct": rep.critical,
           "ad_pass": rep.passed, "sample_median": rep.sample_median,
           "target_median": rep.target_median}
    _emit(args, doc, render_kv([
        ("mechanism", "max-stability"), ("n_max", rep.n_max),
        ("reps", rep.reps), ("target a", rep.target.a), ("target b", rep.target.b),
        ("ad_stat", rep.stat), ("ad_critical_1pct", rep.critical),
        ("ad_pass", rep.passed), ("sample_median", rep.sample_median),
        ("target_median", rep.target_median)]))
    return 0


def cmd_chart(args):
    b_lo, b_hi = _parse_range(args.b_range)
    g_lo, g_hi = _parse_range(args.gamma_range)
    s_lo, s_hi = _parse_range(args.shape_range)
    notes = []
    if b_lo <= 3.0:
        notes.append("IW shape range clipped to >3 (skewness exists only there)")
        b_lo = 3.0 + 1e-6
    if g_lo <= 3.0:
        notes.append("Log-Logistic shape range clipped to >3")
        g_lo = 3.0 + 1e-6
    rows = []
    for shape in np.linspace(b_lo, b_hi, args.steps):
        g2, g3 = iw_gamma23(float(shape))
        rows.append(("iw", float(shape), g2, g3))
    for shape in np.linspace(g_lo, g_hi, args.steps):
        g2, g3 = ll_gamma23(float(shape))
        rows.append(("ll", float(shape), g2, g3))
    for shape in np.linspace(s_lo, s_hi, args.steps):
        g2, g3 = lognormal_gamma23(float(shape))
        rows.append(("lognormal", float(shape), g2, g3))
    if args.fixture_points:
        for name, sample in FIXTURES.items():
            g2, g3 = sample_gamma23(sample)
            rows.append((f"sample:{name}", float(sample.n), g2, g3))
    for path in args.points:
        sample = load_sample(path)
        g2, g3 = sample_gamma23(sample)
        rows.append((f"sample:{sample.name}", float(sample.n), g2, g3))
    lines = ["model,shape,gamma2,gamma3"]
    for model, shape, g2, g3 in rows:
        lines.append(f"{model},{fmt6(shape)},{fmt6(g2)},{fmt6(g3)}")
    payload = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(payload)
    for note in notes:
        print(f"note: {note}", file=sys.stderr)
    return 0


def cmd_repro(args):
    sections = repro_mod.SECTIONS if args.section == "all" else (args.section,)
    rows, study = repro_mod.run_sections(sections, seed=args.seed,
                                         reps=args.reps, workers=args.workers,
                                         fast=args.fast)
    doc = {
        "command": "repro",
        "sections": list(sections),
        "seed": args.seed,
        "reps": args.reps,
        "checks": [{
            "section": r.section, "name": r.name, "computed": r.computed,
            "expected": r.expected, "tol": r.tol, "kind": r.kind,
            "passed": r.passed, "note": r.note} for r in rows],
        "passed": sum(r.passed for r in rows),
        "total": len(rows),
    }
    if study is not None:
        doc["study_averages"] = {
            str(n): {"p_ad": v[0], "p_mll": v[1], "p_both": v[2]}
            for n, v in sorted(study.averages.items())}
    table = render_table(
        ["section", "check", "computed", "expected", "tol", "status"],
        [[r.section, r.name, r.computed, r.expected,
          f"{r.kind} {fmt6(r.tol)}" if r.kind != "exact" else "exact",
          "PASS" if r.passed else "FAIL"] for r in rows])
    summary = f"\n{doc['passed']}/{doc['total']} checks passed (seed {args.seed})"
    noted = [r for r in rows if r.note and not r.passed]
    for r in noted:
        summary += f"\nnote [{r.section}/{r.name}]: {r.note}"
    _emit(args, doc, table + summary)
    if args.strict and doc["passed"] != doc["total"]:
        return 1
    return 0


# ------------------------------------------------------------------ parser ---

def build_parser():
    parser = argparse.ArgumentParser(
        prog="iwsurv",
        description="Inverse Weibull survival analysis: fitting, goodness of "
                    "fit, model selection, and mechanism simulators.")
    sub = parser.add_subparsers(dest="command", required=True)
    seed_default = _default_seed()

    def add_sample_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--fixture", choices=sorted(FIXTURES),
                         help="bundled dataset")
        src.add_argument("--input", help="path to a newline-delimited sample")

    p = sub.add_parser("fit", help="fit one model to a sample")
    add_sample_source(p)
    p.add_argument("--model", required=True, choices=sorted(_MODEL_CHOICES))
    p.add_argument("--reps", type=int, default=0,
                   help="bootstrap replicates for the AD p-value (0 = skip)")
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("select", help="IW vs Log-Logistic selection verdict")
    add_sample_source(p)
    p.add_argument("--reps", type=int, default=0)
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("study", help="Monte Carlo probability of correct selection")
    p.add_argument("--a-list", default="1,2,3")
    p.add_argument("--b-list", default="1.1,2.1,3.1,4.1,5.1")
    p.add_argument("--n-list", default="10,30,50")
    p.add_argument("--reps", type=int, default=1000)
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the full grid as CSV")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_study)

    p = sub.add_parser("simulate", help="generative-mechanism simulators")
    mech = p.add_subparsers(dest="mechanism", required=True)

    q = mech.add_parser("deterioration",
                        help="power-law damage growth against a threshold")
    q.add_argument("--k", type=float, required=True)
    q.add_argument("--h", type=float, required=True)
    q.add_argument("--v", type=float, required=True)
    q.add_argument("--d", type=float, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int, default=seed_default)
    q.add_argument("--out", help="write the sample to this path")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_simulate)

    q = mech.add_parser("stress-strength",
                        help="random stress against decaying strength")
    q.add_argument("--u", type=float, required=True)
    q.add_argument("--v", type=float, required=True)
    q.add_argument("--k", type=float, required=True)
    q.add_argument("--h", type=float, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int, default=seed_default)
    q.add_argument("--out", help="write the sample to this path")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_simulate)

    q = mech.add_parser("defensive",
                        help="Poisson defensive attempts with waning success")
    q.add_argument("--beta", type=float, required=True)
    q.add_argument("--k", type=float, required=True)
    q.add_argument("--h", type=float, required=True)
    q.add_argument("--t", type=float, nargs="+", required=True,
                   help="evaluation time(s)")
    q.add_argument("--n", type=int, default=1_000_000)
    q.add_argument("--seed", type=int, default=seed_default)
    q.add_argument("--out", help="write the empirical-Cdf table as CSV")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_simulate)

    q = mech.add_parser("max-stability",
                        help="maxima of i.i.d. IW variates against the rescaled law")
    q.add_argument("--a", type=float, required=True)
    q.add_argument("--b", type=float, required=True)
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--reps", type=int, required=True)
    q.add_argument("--seed", type=int, default=seed_default)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_simulate)

    p = sub.add_parser("chart",
                       help="coefficient-of-variation vs skewness loci as CSV")
    p.add_argument("--b-range", default="3.2:20")
    p.add_argument("--gamma-range", default="3.2:20")
    p.add_argument("--shape-range", default="0.05:1.2",
                   help="Log-Normal log-sd sweep")
    p.add_argument("--steps", type=int, default=60)
    p.add_argument("--points", nargs="*", default=[],
                   help="sample files to add as points")
    p.add_argument("--fixture-points", action="store_true",
                   help="add the bundled datasets as sample points")
    p.add_argument("--out")
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("repro",
                       help="recompute the reference results and check them")
    p.add_argument("section", choices=list(repro_mod.SECTIONS) + ["all"])
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--reps", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--fast", action="store_true",
                   help="reduced study grid (3 cells x 200 reps) for table2")
    p.add_argument("--strict", action="store_true",
                   help="exit nonzero if any check fails")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IwsurvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
