"""Versioned text cache for computed constants.

Line format (exact decimal strings, no binary floats):

    name, params, value, error_bound

where params is "key=value" pairs joined by ";".
"""

from __future__ import annotations

import os

from mpmath import mp, mpf

from .products import ConstantResult

HEADER = "# expdiv-constants v1"


def _params_key(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def load_cache(path: str) -> dict[tuple[str, str], ConstantResult]:
    out: dict[tuple[str, str], ConstantResult] = {}
    if not os.path.exists(path):
        return out
    with open(path) as fh:
        first = fh.readline().strip()
        if first != HEADER:
            raise ValueError(f"unrecognized cache header in {path}")
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, params, value, err = (f.strip() for f in line.split(",", 3))
            pd = dict(kv.split("=", 1) for kv in params.split(";") if kv)
            with mp.workdps(60):
                out[(name, params)] = ConstantResult(mpf(value), mpf(err), pd)
    return out


def store(path: str, name: str, result: ConstantResult) -> None:
    cache = load_cache(path) if os.path.exists(path) else {}
    key = (name, _params_key(result.parameters))
    cache[key] = result
    with open(path, "w") as fh:
        fh.write(HEADER + "\n")
        for (nm, params), res in sorted(cache.items()):
            with mp.workdps(60):
                fh.write(
                    f"{nm}, {params}, {mp.nstr(res.value, 40)}, "
                    f"{mp.nstr(res.error_bound, 8)}\n"
                )


def lookup(path: str, name: str, params: dict) -> ConstantResult | None:
    return load_cache(path).get((name, _params_key({**params})))
