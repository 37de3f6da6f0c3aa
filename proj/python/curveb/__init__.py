"""Fundamental second-kind forms on plane curves, computed from the Newton polygon."""

import json
from dataclasses import dataclass, field

from . import _curveb
from ._curveb import CurvebError, InputError, IoError, IrregularCurve, PrecisionExhausted, canonical

__all__ = [
    "Result",
    "info",
    "kernel",
    "verify",
    "basis",
    "render",
    "canonical",
    "quad_terms",
    "CurvebError",
    "InputError",
    "IrregularCurve",
    "PrecisionExhausted",
    "IoError",
]


@dataclass
class Result:
    exit_code: int
    text: str
    report: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def quad_terms(text: str) -> list:
    """Canonical term list of a polynomial in x, y, x', y'."""
    return json.loads(_curveb.quad_terms(text))


def _wrap(fn):
    def call(poly: str, **options) -> Result:
        code, text, report = fn(poly, **options)
        return Result(code, text, json.loads(report))

    call.__name__ = fn.__name__
    call.__doc__ = f"Run the '{fn.__name__}' command; options mirror the CLI flags."
    return call


info = _wrap(_curveb.info)
kernel = _wrap(_curveb.kernel)
verify = _wrap(_curveb.verify)
basis = _wrap(_curveb.basis)
render = _wrap(_curveb.render)
