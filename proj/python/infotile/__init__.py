"""Wang tiles to information inequalities."""

import json

from . import _infotile
from ._infotile import WitnessRefusal, elemental_count, entropy, pick_log_bounds, run

__all__ = [
    "WitnessRefusal",
    "compile_tileset",
    "elemental_count",
    "entropy",
    "find_tiling",
    "pick_alpha",
    "pick_log_bounds",
    "refute",
    "run",
    "verify",
]


def compile_tileset(tileset):
    return json.loads(_infotile.compile(json.dumps(tileset)))


def find_tiling(tileset, max_period):
    t = _infotile.find_tiling(json.dumps(tileset), max_period)
    return None if t is None else json.loads(t)


def pick_alpha(k):
    from fractions import Fraction

    return Fraction(_infotile.pick_alpha(k))


def refute(sas, vars=None):
    return json.loads(_infotile.refute(json.dumps(sas), vars))


def verify(joint_text, system, tol=1e-6):
    return json.loads(_infotile.verify(joint_text, json.dumps(system), tol))
