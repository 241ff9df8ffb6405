"""Rendering helpers for CLI output.

Machine-readable output is one canonical JSON document per invocation:
sorted keys, every float rounded to 6 significant digits, no locale or
platform dependence, so identical invocations are byte-identical.
"""

import json
import math

from .distributions import Model

SIG_DIGITS = 6


def fmt6(x):
    """Format a number with 6 significant digits."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{SIG_DIGITS}g}"


def _canonize(obj):
    if isinstance(obj, dict):
        return {str(k): _canonize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonize(v) for v in obj]
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return fmt6(obj)
        return float(f"{obj:.{SIG_DIGITS}g}")
    if isinstance(obj, Model):
        return obj.value
    if hasattr(obj, "item") and callable(obj.item):  # numpy scalars
        return _canonize(obj.item())
    return obj


def canonical_json(doc):
    """Deterministic JSON rendering of a report document."""
    return json.dumps(_canonize(doc), sort_keys=True, indent=2) + "\n"


def params_to_dict(model: Model, params):
    if model is Model.IW:
        return {"a": params.a, "b": params.b}
    if model is Model.LL:
        return {"sigma": params.sigma, "gamma": params.gamma}
    if model is Model.POLY:
        return {"c1": params.c1, "c2": params.c2, "c3": params.c3,
                "t_max": params.t_max}
    if model is Model.WEIBULL:
        return {"u": params.u, "v": params.v}
    raise ValueError(f"unknown model {model}")


def fit_report_to_dict(report):
    return {
        "model": report.model.value,
        "params": params_to_dict(report.model, report.params),
        "mll": report.mll,
        "ad_stat": report.ad_stat,
        "p_value": report.ad_pvalue,
        "rho_sq": report.rho_sq,
    }


def render_kv(pairs, indent=""):
    """Aligned key/value lines for the human-readable rendering."""
    if not pairs:
        return ""
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{indent}{k:<{width}}  {fmt6(v)}" for k, v in pairs)


def render_table(header, rows):
    """Fixed-width text table; every cell goes through :func:`fmt6`."""
    cells = [[fmt6(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)
