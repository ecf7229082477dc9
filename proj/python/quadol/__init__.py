"""Approximate merging of LUT pairs into dual-output LUTs."""

import json as _json

from ._quadol import (
    BlifError,
    IoError,
    Network,
    NetworkError,
    maximum_matching,
    normalize_support,
    parse_blif,
    read_blif,
    shared6_hd,
    write_blif,
)
from . import _quadol

__all__ = [
    "BlifError",
    "IoError",
    "Network",
    "NetworkError",
    "evaluate",
    "maximum_matching",
    "normalize_support",
    "pairs",
    "parse_blif",
    "read_blif",
    "run_quadol",
    "run_quadol_plus",
    "shared6_hd",
    "write_blif",
]


def evaluate(exact, approx, **kwargs):
    """ER and MRED of `approx` against `exact` as a dict."""
    return _json.loads(_quadol.evaluate(exact, approx, **kwargs))


def pairs(net):
    """Mergable pairs of `net` with their best LUT6_2 programming."""
    return _json.loads(_quadol.pairs(net))


def run_quadol(exact, base=None, **kwargs):
    """Returns (approximate network, report dict)."""
    net, report = _quadol.run_quadol(exact, base, **kwargs)
    return net, _json.loads(report)


def run_quadol_plus(exact, intermediates, **kwargs):
    """`intermediates` is a list of (name, network); returns (best network or None, report dict)."""
    net, report = _quadol.run_quadol_plus(exact, list(intermediates), **kwargs)
    return net, _json.loads(report)
