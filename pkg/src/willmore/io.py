"""Surface files, the bundled corpus and JSON reports.

A surface file (JSON or TOML) looks like::

    {
      "name": "catenoid",
      "g": {"num": [0, 1]},
      "f": {"num": [1], "den": [0, 0, 1]},
      "chart": null,
      "center": [0, 0, 0],
      "ends": {"genus": 0, "end_multiplicities": [1, 1]},
      "energy": {"expected_pi": 8}
    }

Coefficients are listed in ascending powers; each may be an integer, a
``"p/q"`` string or a ``[re, im]`` pair.  ``chart`` is a Moebius map
``[a, b, c, d]`` used to move the point of interest to ``z = 0``.
``center`` is the centre of the inversion; the energy integral uses the
global data without the chart.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .branch import EndStructure
from .rational import parse_coeff
from .surface import WeierstrassData, invert_immersion, weierstrass_immersion

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

CORPUS_ENV = "WILLMORE_CORPUS"


class ConfigError(Exception):
    """Unreadable or malformed input."""


@dataclass(frozen=True)
class SurfaceSpec:
    data: WeierstrassData
    center: tuple = (0, 0, 0)
    ends: EndStructure | None = None
    expected_energy_pi: int | None = None
    source: str = ""

    @property
    def name(self):
        return self.data.name

    def global_data(self):
        """The Weierstrass data without the chart, for closed-form evaluation."""
        return replace(self.data, chart=None)

    def model(self, order=12, exact=True):
        return weierstrass_immersion(self.data, order, exact)

    def inverted(self, order=12, exact=True):
        m = self.model(order, exact)
        vec = [parse_coeff(c).real for c in self.center]
        if any(vec):
            m = m.translated([-v if exact else -float(v) for v in vec])
        return invert_immersion(m)

    def center_floats(self):
        return [float(parse_coeff(c).real) for c in self.center]


def corpus_dir():
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "corpus"


def corpus_names():
    return sorted(p.stem for p in corpus_dir().glob("*.json"))


def resolve(path):
    """A file path, or the name of a corpus surface (with or without extension)."""
    p = Path(path)
    if p.is_file():
        return p
    for cand in (corpus_dir() / p.name, corpus_dir() / f"{p.name}.json", corpus_dir() / f"{p.name}.toml"):
        if cand.is_file():
            return cand
    raise ConfigError(f"no such surface file: {path}")


def _read(p):
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise ConfigError(str(exc)) from exc
    try:
        if p.suffix == ".toml":
            return tomllib.loads(raw.decode())
        return json.loads(raw)
    except (ValueError, UnicodeDecodeError) as exc:
        raise ConfigError(f"{p}: {exc}") from exc


def _coeffs(obj, key, default):
    if obj is None:
        return default
    val = obj.get(key, default)
    if not isinstance(val, (list, tuple)) or not val:
        raise ConfigError(f"{key} must be a nonempty list of coefficients")
    return tuple(tuple(c) if isinstance(c, list) else c for c in val)


def parse_surface(obj, source=""):
    if not isinstance(obj, dict):
        raise ConfigError("a surface description must be a mapping")
    try:
        g, f = obj.get("g"), obj.get("f")
        data = WeierstrassData(
            g_num=_coeffs(g, "num", (0,)),
            g_den=_coeffs(g, "den", (1,)),
            f_num=_coeffs(f, "num", (1,)),
            f_den=_coeffs(f, "den", (1,)),
            chart=tuple(obj["chart"]) if obj.get("chart") else None,
            ambient=int(obj.get("ambient", 3)),
            name=str(obj.get("name", Path(source).stem)),
        )
        for part in (data.g_num, data.g_den, data.f_num, data.f_den, data.chart or ()):
            for c in part:
                parse_coeff(c)
        ends = None
        if "ends" in obj:
            e = obj["ends"]
            ends = EndStructure(
                int(e.get("genus", 0)),
                tuple(int(m) for m in e["end_multiplicities"]),
                tuple(int(t) for t in e.get("interior_branch_orders", ())),
            )
        center = tuple(obj.get("center", (0,) * data.ambient))
        if len(center) != data.ambient:
            raise ConfigError("center must have one entry per ambient dimension")
        energy = obj.get("energy") or {}
        expected = energy.get("expected_pi")
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{source}: malformed surface description ({exc})") from exc
    return SurfaceSpec(data, center, ends, expected, source)


def load_surface(path):
    p = resolve(path)
    return parse_surface(_read(p), str(p))


def load_corpus():
    return {name: load_surface(name) for name in corpus_names()}


def dump_report(report, path=None):
    text = json.dumps(report, indent=2, default=_default)
    if path is None:
        print(text)
    else:
        try:
            Path(path).write_text(text + "\n")
        except OSError as exc:
            raise ConfigError(str(exc)) from exc
    return text


def _default(x):
    try:
        c = complex(x)
    except (TypeError, ValueError):
        return str(x)
    return c.real if c.imag == 0 else [c.real, c.imag]


__all__ = [
    "CORPUS_ENV",
    "ConfigError",
    "SurfaceSpec",
    "corpus_dir",
    "corpus_names",
    "dump_report",
    "load_corpus",
    "load_surface",
    "parse_surface",
    "resolve",
]
