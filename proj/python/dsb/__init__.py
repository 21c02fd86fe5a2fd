"""Branching of discrete series to symmetric subgroups."""

import json
import os
from pathlib import Path

_here = Path(__file__).resolve().parent
if "DSB_CATALOG" not in os.environ and (_here / "catalog.json").exists():
    os.environ["DSB_CATALOG"] = str(_here / "catalog.json")

from . import _dsb  # noqa: E402
from ._dsb import ConsistencyError, PreconditionError  # noqa: E402

__all__ = ["list_pairs", "admissible", "systems", "branch", "compare", "tensor",
           "PreconditionError", "ConsistencyError"]


def _w(x):
    return x if isinstance(x, str) else ",".join(str(c) for c in x)


def list_pairs(table="", g=""):
    return json.loads(_dsb.list_pairs(table, g))


def admissible(pair, psi):
    return json.loads(_dsb.admissible(pair, psi))


def systems(pair, lam):
    return json.loads(_dsb.systems(pair, _w(lam)))


def branch(pair, lam, cutoff=20, method="theorem1"):
    return json.loads(_dsb.branch(pair, _w(lam), str(cutoff), method))


def compare(pair, lam, methods=("rh", "theorem1"), cutoff=20):
    return json.loads(_dsb.compare(pair, _w(lam), methods[0], methods[1], str(cutoff)))


def tensor(lam, phi, g0="su", ranks=(1, 1), cutoff=20, check=False):
    return json.loads(_dsb.tensor(g0, list(ranks), _w(lam), _w(phi), str(cutoff), check))
