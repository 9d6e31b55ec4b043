"""Symbolic weight specs such as ``omega3``, ``2omega1``, ``sigma`` or ``1,0,2``."""

from __future__ import annotations

import re

from .errors import GLPError
from .exactspace import Vec
from .rootsys import RootSystem

_TERM = re.compile(r"^(\d*)\s*(omega|w|ω)_?(\d+)$")
_SPIN = re.compile(r"^(\d*)\s*(sigma|σ)(?:_?(\d+|m))?$")


def parse_weight_coeffs(spec: str, family: str, rank: int) -> tuple[int, ...]:
    """Coefficients on the fundamental weights.

    ``sigma`` (optionally ``sigma_m`` or ``sigma<rank>``) is the spin weight:
    the last fundamental weight of B or D.
    """
    text = spec.strip().replace(" ", "")
    if re.fullmatch(r"-?\d+(,-?\d+)*", text):
        coeffs = tuple(int(x) for x in text.split(","))
        if len(coeffs) != rank:
            raise GLPError(f"weight {spec!r} needs {rank} coefficients")
        return coeffs
    out = [0] * rank
    if text == "0":
        return tuple(out)
    for term in text.split("+"):
        m = _TERM.match(term)
        if m:
            k = int(m.group(3))
            if not 1 <= k <= rank:
                raise GLPError(f"fundamental weight index {k} out of range 1..{rank}")
            out[k - 1] += int(m.group(1) or 1)
            continue
        m = _SPIN.match(term)
        if m:
            if family not in ("B", "D"):
                raise GLPError("sigma denotes a spin weight and needs family B or D")
            idx = m.group(3)
            if idx not in (None, "m") and int(idx) != rank:
                raise GLPError(f"sigma_{idx} does not match rank {rank}")
            out[rank - 1] += int(m.group(1) or 1)
            continue
        raise GLPError(f"cannot parse weight term {term!r}")
    return tuple(out)


def parse_weight(spec: str, rs: RootSystem, family: str) -> Vec:
    return rs.weight(parse_weight_coeffs(spec, family, rs.rank))
