"""Parsing of distribution / energy files and TSV formatting helpers."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import numpy as np

from .catalog import Distribution, DistributionError


class InputFormatError(ValueError):
    """Malformed input file or literal; carries the offending location."""


def _parse_number(token: str) -> float:
    token = token.strip()
    if "/" in token:
        return float(Fraction(token))
    return float(token)


def parse_distribution(text: str) -> Distribution:
    """A distribution from the 'uniform:W' shorthand or a file path."""
    if text.startswith("uniform:"):
        try:
            W = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise InputFormatError(f"bad uniform shorthand {text!r}") from exc
        return Distribution.uniform(W)
    return read_distribution_file(text)


def read_distribution_file(path: str) -> Distribution:
    """One probability per line, decimal or p/q; '#' starts a comment."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputFormatError(f"cannot read distribution file {path!r}") from exc
    values = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(_parse_number(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(
                f"{path}:{lineno}: malformed probability {line!r}"
            ) from exc
    try:
        return Distribution(values)
    except DistributionError as exc:
        raise InputFormatError(f"{path}: {exc}") from exc


def write_distribution_file(path: str, dist: Distribution) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in dist.p:
            fh.write(format_float(p) + "\n")


def read_energy_file(path: str) -> list[float]:
    """One real energy level per line; '#' starts a comment."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputFormatError(f"cannot read energy file {path!r}") from exc
    values = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError as exc:
            raise InputFormatError(
                f"{path}:{lineno}: malformed energy {line!r}"
            ) from exc
    if not values:
        raise InputFormatError(f"{path}: no energy levels found")
    return values


_DIGITS = 17


def format_float(x: float, digits: int = _DIGITS) -> str:
    """Stable decimal rendering with a given number of significant digits.

    Round-trips bit-for-bit at the default 17 digits.
    """
    if isinstance(x, float) and (np.isnan(x) or np.isinf(x)):
        return str(x)
    return f"{float(x):.{digits - 1}e}" if digits <= 17 else repr(float(x))


def format_value(x, digits: int = _DIGITS) -> str:
    """Rationals exactly as p/q, everything else through format_float."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (bool, int, str)):
        return str(x)
    return format_float(x, digits)


def tsv_line(*fields, digits: int = _DIGITS) -> str:
    return "\t".join(format_value(f, digits) for f in fields)
