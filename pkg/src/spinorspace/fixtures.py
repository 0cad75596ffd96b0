"""Golden fixture records: generation, serialization and replay.

A record freezes one constructor evaluation: the input coordinates, the
resulting spinor and quadruple, and the projection back to 3-space. Files
are UTF-8 newline-delimited JSON, one record per line, with every float
written at 17 significant digits so doubles survive a round trip and equal
seeds produce byte-identical files.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .core import Spinor, quadruple_from_spinor, wrap_4pi
from .gauge_fixing import psi_from_direction
from .spinor_maps import (
    ParabolicPoint,
    SphericalPoint,
    eta_from_cartesian,
    eta_from_parabolic,
    eta_from_spherical,
    project_eta,
    project_xi,
    xi_from_cartesian,
    xi_from_parabolic,
    xi_from_spherical,
)

FIXTURE_VERSION = "0.1.0"

SYSTEMS = ("cartesian", "spherical", "parabolic", "direction")
MODELS = ("xi", "eta", "psi")


def _cover_shift(phi: float, sheet: int) -> float:
    # The sheet flag is the phi + 2pi lift for the angle-bearing systems.
    return wrap_4pi(phi + 2.0 * math.pi) if sheet == -1 else phi


def construct(system: str, values, model: str, sheet: int = 1) -> Spinor:
    """Build the spinor a record describes; validation mirrors the constructors."""
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}; valid: {', '.join(SYSTEMS)}")
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; valid: {', '.join(MODELS)}")
    vals = [float(v) for v in values]
    if system == "direction":
        if model != "psi":
            raise ValueError("the direction system carries the psi model only")
        if len(vals) != 4:
            raise ValueError("direction values are (n1, n2, n3, gamma)")
        return psi_from_direction(vals[:3], vals[3])
    if model == "psi":
        raise ValueError("the psi model requires the direction system")
    if len(vals) != 3:
        raise ValueError(f"{system} values are three reals")
    if system == "cartesian":
        maker = xi_from_cartesian if model == "xi" else eta_from_cartesian
        return maker(vals, sheet)
    if system == "spherical":
        point = SphericalPoint(vals[0], vals[1], _cover_shift(vals[2], sheet))
        return xi_from_spherical(point) if model == "xi" else eta_from_spherical(point)
    point = ParabolicPoint(vals[0], vals[1], _cover_shift(vals[2], sheet))
    return xi_from_parabolic(point) if model == "xi" else eta_from_parabolic(point)


def fixture_record(system: str, values, model: str = "xi", sheet: int = 1,
                   seed: int = 0, tolerance: float = 1e-12) -> dict:
    """One self-consistent record of a constructor evaluation."""
    spinor = construct(system, values, model, sheet)
    q = quadruple_from_spinor(spinor)
    projection = {"r": 0.5 * spinor.norm_sq}
    if model == "eta":
        p = project_eta(spinor)
        projection["x"] = [float(v) for v in p.x]
        projection["a"] = [float(v) for v in p.a]
    else:
        _, x = project_xi(spinor)
        projection["x"] = [float(v) for v in x]
    return {
        "system": system,
        "values": [float(v) for v in values],
        "sheet": int(sheet),
        "model": model,
        "spinor": [[spinor.c1.real, spinor.c1.imag], [spinor.c2.real, spinor.c2.imag]],
        "quadruple": list(q.as_tuple()),
        "projection": projection,
        "meta": {"seed": int(seed), "tolerance": float(tolerance),
                 "version": FIXTURE_VERSION},
    }


def replay_residual(record: dict) -> float:
    """Worst scaled disagreement between a record and its fresh recomputation."""
    fresh = fixture_record(record["system"], record["values"], record["model"],
                           record.get("sheet", 1),
                           record["meta"]["seed"], record["meta"]["tolerance"])
    stored = ([v for pair in record["spinor"] for v in pair]
              + list(record["quadruple"])
              + [record["projection"]["r"]]
              + list(record["projection"]["x"])
              + list(record["projection"].get("a", [])))
    recomputed = ([v for pair in fresh["spinor"] for v in pair]
                  + list(fresh["quadruple"])
                  + [fresh["projection"]["r"]]
                  + list(fresh["projection"]["x"])
                  + list(fresh["projection"].get("a", [])))
    if len(stored) != len(recomputed):
        raise ValueError("record field shapes do not match the recomputation")
    worst = 0.0
    for s, f in zip(stored, recomputed):
        s, f = float(s), float(f)
        worst = max(worst, abs(s - f) / max(1.0, abs(s), abs(f)))
    return worst


def generate_fixtures(count: int, seed: int = 1, tolerance: float = 1e-12) -> list:
    """Seeded batch of records cycling through systems and models."""
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = np.random.default_rng(seed)
    records = []
    for index in range(count):
        kind = index % 7
        if kind in (0, 1):
            values = [float(v) for v in rng.uniform(-2.0, 2.0, size=3)]
            sheet = 1 if rng.integers(0, 2) == 0 else -1
            records.append(fixture_record("cartesian", values,
                                          "xi" if kind == 0 else "eta",
                                          sheet, seed, tolerance))
        elif kind in (2, 3):
            values = [float(rng.uniform(0.0, 3.0)), float(rng.uniform(0.0, math.pi)),
                      wrap_4pi(float(rng.uniform(-2.0 * math.pi, 2.0 * math.pi)))]
            records.append(fixture_record("spherical", values,
                                          "xi" if kind == 2 else "eta",
                                          1, seed, tolerance))
        elif kind in (4, 5):
            values = [float(rng.uniform(0.0, 2.0)), float(rng.uniform(0.0, 2.0)),
                      wrap_4pi(float(rng.uniform(-2.0 * math.pi, 2.0 * math.pi)))]
            records.append(fixture_record("parabolic", values,
                                          "xi" if kind == 4 else "eta",
                                          1, seed, tolerance))
        else:
            n = rng.normal(size=3)
            n /= np.linalg.norm(n)
            values = [float(n[0]), float(n[1]), float(n[2]),
                      wrap_4pi(float(rng.uniform(-2.0 * math.pi, 2.0 * math.pi)))]
            records.append(fixture_record("direction", values, "psi",
                                          1, seed, tolerance))
    return records


def _encode(value) -> str:
    # Hand-rolled emitter: the stdlib serializer offers no float-format hook,
    # and byte determinism needs one fixed 17-significant-digit rendering.
    if isinstance(value, bool):
        raise TypeError("fixture records carry no booleans")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError("fixture floats must be finite")
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_encode(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_encode(v)}"
                              for k, v in value.items()) + "}"
    raise TypeError(f"cannot encode {type(value).__name__}")


def dumps_record(record: dict) -> str:
    return _encode(record)


def write_fixtures(records, path) -> int:
    """Write records as newline-delimited JSON; returns the record count."""
    text = "".join(_encode(r) + "\n" for r in records)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return len(records)


def load_fixtures(path) -> list:
    """Parse a newline-delimited fixture file back into record dicts."""
    records = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


__all__ = [
    "FIXTURE_VERSION", "SYSTEMS", "MODELS",
    "construct", "fixture_record", "replay_residual",
    "generate_fixtures", "dumps_record", "write_fixtures", "load_fixtures",
]
