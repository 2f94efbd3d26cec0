"""Text formats: Satake TSV and coefficient TSV.

    # satake v1 degree=<d>
    p<TAB>re1,im1;re2,im2;...

    # lcoef v1 degree=<d>
    n<TAB>re<TAB>im

Floats are written with 17 significant digits so doubles round-trip.
Keys must be strictly increasing.  Blank lines and later ``#`` lines are
ignored.
"""

from __future__ import annotations

import contextlib
import io
import re
import sys
from collections.abc import Mapping
from pathlib import Path
from typing import TextIO

from .errors import DataError, ParseError
from .euler import CoefficientTable, SatakeLocal
from .primes import is_prime

DENSE_CAP = 10**7

_HEADER = re.compile(r"^#\s*(satake|lcoef)\s+v1\s+degree=(\d+)\s*$")


def fmt(x: float) -> str:
    return f"{x:.17g}"


def fmt_complex(z: complex) -> str:
    return f"{fmt(z.real)},{fmt(z.imag)}"


def _open_text(src):
    if isinstance(src, io.TextIOBase):
        return contextlib.nullcontext(src), getattr(src, "name", "<stream>")
    return open(src), str(src)


def _lines(src, kind: str):
    """Check the header, then collect (lineno, key, fields) rows."""
    ctx, name = _open_text(src)
    with ctx as fh:
        first = fh.readline()
        m = _HEADER.match(first.rstrip("\n"))
        if not m:
            raise ParseError(f"missing or malformed '# {kind} v1 degree=<d>' header", 1, name)
        if m.group(1) != kind:
            raise ParseError(f"expected a {kind} file, found {m.group(1)}", 1, name)
        degree = int(m.group(2))
        if degree < 1:
            raise ParseError("degree must be >= 1", 1, name)
        rows = []
        last = 0
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            try:
                key = int(fields[0])
            except ValueError:
                raise ParseError(f"bad key {fields[0]!r}", lineno, name) from None
            if key < 1:
                raise ParseError(f"key must be >= 1, got {key}", lineno, name)
            if key <= last:
                kind_ = "duplicate" if key == last else "decreasing"
                raise ParseError(f"{kind_} key {key}", lineno, name)
            last = key
            rows.append((lineno, key, fields[1:]))
    return degree, rows, name


def _parse_complex(text: str, lineno: int, name: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) != 2:
            raise ValueError
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise ParseError(f"bad complex value {text!r} (want re,im)", lineno, name) from None


def read_satake(src) -> tuple[int, dict[int, SatakeLocal]]:
    degree, rows, name = _lines(src, "satake")
    out = {}
    for lineno, p, fields in rows:
        if len(fields) != 1:
            raise ParseError(f"expected 2 tab-separated fields, got {len(fields) + 1}", lineno, name)
        if not is_prime(p):
            raise ParseError(f"{p} is not prime", lineno, name)
        text = fields[0].strip()
        alphas = [_parse_complex(t, lineno, name) for t in text.split(";")] if text else []
        try:
            out[p] = SatakeLocal(p, tuple(alphas), degree)
        except DataError as exc:
            raise ParseError(str(exc), lineno, name) from None
    return degree, out


def write_satake(satake: Mapping[int, SatakeLocal], degree: int, dst: TextIO | str | Path | None = None):
    lines = [f"# satake v1 degree={degree}"]
    for p in sorted(satake):
        lines.append(f"{p}\t" + ";".join(fmt_complex(a) for a in satake[p].alphas))
    _emit(lines, dst)


def read_lcoef(src) -> CoefficientTable:
    """Parse a coefficient file.  Multiplicativity is not assumed (flag off)."""
    degree, rows, name = _lines(src, "lcoef")
    values = {}
    for lineno, n, fields in rows:
        if len(fields) != 2:
            raise ParseError(f"expected 3 tab-separated fields, got {len(fields) + 1}", lineno, name)
        try:
            values[n] = complex(float(fields[0]), float(fields[1]))
        except ValueError:
            raise ParseError(f"bad number in {fields!r}", lineno, name) from None
    if not values:
        raise ParseError("no coefficient rows", None, name)
    small = [n for n in values if n <= DENSE_CAP]
    limit = max(small) if small else 1
    return CoefficientTable.from_mapping(values, degree, limit=limit, multiplicative=False)


def write_lcoef(table: CoefficientTable, dst: TextIO | str | Path | None = None):
    lines = [f"# lcoef v1 degree={table.degree_d}"]
    for n, v in table.items():
        lines.append(f"{n}\t{fmt(v.real)}\t{fmt(v.imag)}")
    _emit(lines, dst)


def _emit(lines: list[str], dst):
    text = "\n".join(lines) + "\n"
    if dst is None:
        sys.stdout.write(text)
    elif isinstance(dst, (str, Path)):
        Path(dst).write_text(text)
    else:
        dst.write(text)
