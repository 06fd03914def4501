"""Python bindings for the lpadic library.

Each function mirrors a subcommand of the ``lpadic`` tool and returns the
same JSON document, decoded into Python objects.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from ._lpadic import LpadicError
from ._lpadic import bernoulli as _bernoulli
from ._lpadic import run as _run

__all__ = [
    "LpadicError",
    "bernoulli",
    "genbernoulli",
    "char_info",
    "measure_check",
    "lp_eval",
    "verify",
    "suite",
    "run",
]


def run(args: list[str]) -> tuple[int, dict[str, Any]]:
    """Runs a command line (without the program name); returns (exit code, result)."""
    code, text = _run([str(a) for a in args])
    return code, json.loads(text)


def _result(args: list[str], prec: Optional[int] = None, seed: Optional[int] = None) -> dict[str, Any]:
    head: list[str] = []
    if prec is not None:
        head += ["--prec", str(prec)]
    if seed is not None:
        head += ["--seed", str(seed)]
    return run(head + args)[1]


def bernoulli(n: int) -> Fraction:
    return Fraction(_bernoulli(n))


def genbernoulli(p: int, char: str, n: int, *, prec: int = 8) -> dict[str, Any]:
    return _result(["genbernoulli", "--p", p, "--char", char, "--n", n], prec)


def char_info(p: int, char: str, *, prec: int = 8) -> dict[str, Any]:
    return _result(["char-info", "--p", p, "--char", char], prec)


def measure_check(p: int, *, d: int = 1, c: int = 2, max_level: int = 3, samples: int = 200,
                  variant: str = "integer", prec: int = 8, seed: int = 0) -> dict[str, Any]:
    return _result(["measure-check", "--p", p, "--d", d, "--c", c, "--max-level", max_level,
                    "--samples", samples, "--variant", variant], prec, seed)


def _lp_args(p, char, d, m, c, jmin, jmax, target):
    return ["--p", p, "--char", char, "--d", d, "--m", m, "--c", c, "--jmin", jmin, "--jmax", jmax,
            "--target", target]


def lp_eval(p: int, char: str, k: int, *, d: int = 1, m: int = 1, c: int = 2, jmin: int = 0, jmax: int = 7,
            target: int = 4, prec: int = 8) -> dict[str, Any]:
    return _result(["lp-eval", *_lp_args(p, char, d, m, c, jmin, jmax, target), "--weight-k", k], prec)


def verify(p: int, char: str, n: int, *, d: int = 1, m: int = 1, c: int = 2, jmin: int = 0, jmax: int = 7,
           target: int = 4, sign: Optional[str] = None, prec: int = 8) -> dict[str, Any]:
    args = ["verify", *_lp_args(p, char, d, m, c, jmin, jmax, target), "--n", n]
    if sign is not None:
        args += ["--sign", sign]
    return _result(args, prec)


def suite(profile: str = "fast", *, seed: int = 0) -> dict[str, Any]:
    return _result(["suite", "--profile", profile], seed=seed)
