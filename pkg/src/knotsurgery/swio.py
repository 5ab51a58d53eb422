"""Reading and writing SW data files.

Format (UTF-8, one record per line)::

    rank 2
    torus 1 0
    form
    0 1
    1 0
    class -1 0 coeff 1
    class 1 0 coeff 1

``torus`` and ``form`` are optional; ``form`` is followed by ``rank`` rows.
Terms are written sorted by class vector.  Blank lines and ``#`` comments are
ignored on input.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import DimensionMismatchError, SchemaError
from .swcalc import SWInvariant, TorusClass


@dataclass(frozen=True)
class SWData:
    sw: SWInvariant
    torus: Optional[TorusClass] = None
    form: Optional[tuple[tuple[int, ...], ...]] = None

    def with_sw(self, sw: SWInvariant) -> SWData:
        return SWData(sw, self.torus, self.form)

    def require_torus(self) -> TorusClass:
        if self.torus is None:
            raise SchemaError("SW data file has no 'torus' line")
        return self.torus


def _ints(tokens: list[str], lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in tokens)
    except ValueError:
        raise SchemaError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def loads(text: str) -> SWData:
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(n, toks) for n, toks in lines if toks and not toks[0].startswith("#")]
    if not lines or lines[0][1][0] != "rank" or len(lines[0][1]) != 2:
        raise SchemaError("first record must be 'rank <b>'")
    (rank,) = _ints(lines[0][1][1:], lines[0][0])
    if rank < 0:
        raise SchemaError("rank must be nonnegative")

    torus_vec = None
    form = None
    terms: dict[tuple[int, ...], int] = {}
    pos = 1
    while pos < len(lines):
        lineno, toks = lines[pos]
        pos += 1
        key = toks[0]
        if key == "torus":
            if torus_vec is not None or terms:
                raise SchemaError(f"line {lineno}: unexpected 'torus' record")
            torus_vec = _ints(toks[1:], lineno)
            if len(torus_vec) != rank:
                raise DimensionMismatchError(
                    f"line {lineno}: torus has {len(torus_vec)} entries, rank is {rank}")
        elif key == "form":
            if form is not None or terms or len(toks) != 1:
                raise SchemaError(f"line {lineno}: unexpected 'form' record")
            rows = []
            for _ in range(rank):
                if pos >= len(lines):
                    raise SchemaError("truncated intersection form")
                rn, rtoks = lines[pos]
                pos += 1
                row = _ints(rtoks, rn)
                if len(row) != rank:
                    raise DimensionMismatchError(f"line {rn}: form row has {len(row)} entries, rank is {rank}")
                rows.append(row)
            form = tuple(rows)
        elif key == "class":
            if len(toks) < 3 or toks[-2] != "coeff":
                raise SchemaError(f"line {lineno}: expected 'class <ints> coeff <int>'")
            vec = _ints(toks[1:-2], lineno)
            (coeff,) = _ints(toks[-1:], lineno)
            if len(vec) != rank:
                raise DimensionMismatchError(
                    f"line {lineno}: class has {len(vec)} entries, rank is {rank}")
            if coeff == 0:
                raise SchemaError(f"line {lineno}: coefficients must be nonzero")
            if vec in terms:
                raise SchemaError(f"line {lineno}: duplicate class {vec}")
            terms[vec] = coeff
        else:
            raise SchemaError(f"line {lineno}: unknown record {key!r}")

    torus = None
    if torus_vec is not None:
        torus = TorusClass(torus_vec, form)
    return SWData(SWInvariant(rank, terms), torus, form)


def dumps(data: SWData) -> str:
    sw = data.sw
    out = [f"rank {sw.rank}"]
    if data.torus is not None:
        out.append(" ".join(["torus", *map(str, data.torus.vector)]))
    if data.form is not None:
        out.append("form")
        out.extend(" ".join(map(str, row)) for row in data.form)
    for vec in sorted(sw.terms):
        out.append(" ".join(["class", *map(str, vec), "coeff", str(sw.terms[vec])]))
    return "\n".join(out) + "\n"


def load(path: str | Path) -> SWData:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(data: SWData, path: str | Path) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")
