"""Nearly pentadiagonal matrices in packed band storage.

An n by n nearly pentadiagonal matrix (n >= 5) has five contiguous bands
plus two corner entries, one at (1, 4) and one at (n, n-3), positions
1-based. It packs into 5n-4 scalars:

    d        main diagonal          d_1 .. d_n        (length n)
    a        first superdiagonal    a_1 .. a_{n-1}    (length n-1)
    a_tilde  second superdiagonal   a~_1 .. a~_{n-2}  (length n-2)
    b        first subdiagonal      b_2 .. b_n        (length n-1)
    b_tilde  second subdiagonal     b~_3 .. b~_n      (length n-2)
    s        corner entry (1, 4)
    t        corner entry (n, n-3)

Band vectors are documented with 1-based entry names; storage is 0-based,
so d_k sits at d[k-1], b_k at b[k-2] and b~_k at b_tilde[k-3]. That
mapping is applied here and in the factorization module only.

Scalars in one matrix are homogeneous: a matrix carries the field its
entries live in (exact rationals by default, float64 for numeric work).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputFormatError, NotNearlyPentadiagonal, TooSmall
from .oracle import dense_det
from .scalars import FLOAT, RATIONAL, ScalarField

__all__ = [
    "NearlyPentaMatrix",
    "gen_laplacian",
    "gen_random",
    "to_json_dict",
    "system_from_json",
    "load_system",
    "save_system",
]

_BAND_LENGTHS = {"d": 0, "a": -1, "a_tilde": -2, "b": -1, "b_tilde": -2}


@dataclass(frozen=True)
class NearlyPentaMatrix:
    """Packed nearly pentadiagonal matrix; see the module docstring for layout.

    Instances are immutable; build them with `from_bands`, `from_dense`,
    the generators, or the JSON loaders, which coerce entries into the
    target field.
    """

    n: int
    d: Sequence
    a: Sequence
    a_tilde: Sequence
    b: Sequence
    b_tilde: Sequence
    s: object
    t: object
    field: ScalarField = RATIONAL

    def __post_init__(self):
        if self.n < 5:
            raise TooSmall(self.n)
        for name, offset in _BAND_LENGTHS.items():
            want = self.n + offset
            if len(getattr(self, name)) != want:
                raise InputFormatError(
                    f"band {name!r} must have length {want} for n={self.n}"
                )

    @classmethod
    def from_bands(cls, d, a, a_tilde, b, b_tilde, s, t,
                   field: ScalarField = RATIONAL) -> "NearlyPentaMatrix":
        """Build from the five band vectors and the two corner entries."""
        dv = field.make_vector(d)
        return cls(
            n=len(dv),
            d=dv,
            a=field.make_vector(a),
            a_tilde=field.make_vector(a_tilde),
            b=field.make_vector(b),
            b_tilde=field.make_vector(b_tilde),
            s=field.coerce(s),
            t=field.coerce(t),
            field=field,
        )

    @classmethod
    def from_dense(cls, rows, field: ScalarField = RATIONAL) -> "NearlyPentaMatrix":
        """Pack a dense matrix; every entry outside the pattern must be zero.

        Raises NotNearlyPentadiagonal at the first offending coordinate
        (row-major scan, 1-based) and TooSmall for n < 5.
        """
        grid = [[field.coerce(v) for v in row] for row in rows]
        n = len(grid)
        if n < 5:
            raise TooSmall(n)
        if any(len(row) != n for row in grid):
            raise InputFormatError("dense matrix must be square")
        for i in range(n):
            for j in range(n):
                if abs(i - j) <= 2:
                    continue
                if (i, j) in ((0, 3), (n - 1, n - 4)):
                    continue
                if not field.is_zero(grid[i][j]):
                    raise NotNearlyPentadiagonal(i + 1, j + 1)
        return cls.from_bands(
            d=[grid[k][k] for k in range(n)],
            a=[grid[k][k + 1] for k in range(n - 1)],
            a_tilde=[grid[k][k + 2] for k in range(n - 2)],
            b=[grid[k + 1][k] for k in range(n - 1)],
            b_tilde=[grid[k + 2][k] for k in range(n - 2)],
            s=grid[0][3],
            t=grid[n - 1][n - 4],
            field=field,
        )

    def to_dense(self):
        """Dense n by n matrix as a list of rows; inverse of from_dense."""
        n = self.n
        zero = self.field.zero
        rows = [[zero] * n for _ in range(n)]
        for k in range(n):
            rows[k][k] = self.d[k]
        for k in range(n - 1):
            rows[k][k + 1] = self.a[k]
            rows[k + 1][k] = self.b[k]
        for k in range(n - 2):
            rows[k][k + 2] = self.a_tilde[k]
            rows[k + 2][k] = self.b_tilde[k]
        rows[0][3] = self.s
        rows[n - 1][n - 4] = self.t
        return rows

    def to_float(self) -> "NearlyPentaMatrix":
        """Copy of this matrix with float64 entries."""
        if self.field is FLOAT:
            return self
        return NearlyPentaMatrix.from_bands(
            self.d, self.a, self.a_tilde, self.b, self.b_tilde,
            self.s, self.t, field=FLOAT,
        )

    @property
    def packed_size(self) -> int:
        """Number of stored scalars: always 5n-4."""
        return (len(self.d) + len(self.a) + len(self.a_tilde)
                + len(self.b) + len(self.b_tilde) + 2)


def gen_laplacian(n: int, field: ScalarField = RATIONAL) -> NearlyPentaMatrix:
    """Pentadiagonal difference-stencil matrix: -4 on the diagonal, 1 on
    all four off-diagonals, no corner entries."""
    if n < 5:
        raise TooSmall(n)
    return NearlyPentaMatrix.from_bands(
        d=[-4] * n,
        a=[1] * (n - 1),
        a_tilde=[1] * (n - 2),
        b=[1] * (n - 1),
        b_tilde=[1] * (n - 2),
        s=0,
        t=0,
        field=field,
    )


def gen_random(n: int, seed: int, ensure_nonsingular: bool = False,
               field: ScalarField = RATIONAL) -> NearlyPentaMatrix:
    """Random integer entries in [-9, 9], deterministic for a given seed.

    With ensure_nonsingular the draw repeats until the dense reference
    determinant is nonzero; that check is O(n^3) in exact arithmetic, so
    it is meant for test-scale n.
    """
    if n < 5:
        raise TooSmall(n)
    rng = random.Random(seed)
    while True:
        draws = {name: [rng.randint(-9, 9) for _ in range(n + offset)]
                 for name, offset in _BAND_LENGTHS.items()}
        s = rng.randint(-9, 9)
        t = rng.randint(-9, 9)
        m = NearlyPentaMatrix.from_bands(
            draws["d"], draws["a"], draws["a_tilde"], draws["b"],
            draws["b_tilde"], s, t, field=field,
        )
        if not ensure_nonsingular:
            return m
        exact = m if m.field.is_exact else NearlyPentaMatrix.from_bands(
            draws["d"], draws["a"], draws["a_tilde"], draws["b"],
            draws["b_tilde"], s, t, field=RATIONAL,
        )
        if dense_det(exact.to_dense()) != 0:
            return m


_JSON_KEYS = ("n", "d", "a", "a_tilde", "b", "b_tilde", "s", "t")


def to_json_dict(m: NearlyPentaMatrix, y=None) -> dict:
    """JSON document for a matrix and an optional right-hand side.

    Key order is fixed so serialized output is stable.
    """
    out = {"n": m.n}
    for name in ("d", "a", "a_tilde", "b", "b_tilde"):
        out[name] = [m.field.to_json(v) for v in getattr(m, name)]
    out["s"] = m.field.to_json(m.s)
    out["t"] = m.field.to_json(m.t)
    if y is not None:
        out["y"] = [m.field.to_json(m.field.coerce(v)) for v in y]
    return out


def system_from_json(obj, field: ScalarField = RATIONAL):
    """Parse the JSON document format; returns (matrix, y_or_None)."""
    if not isinstance(obj, dict):
        raise InputFormatError("top-level JSON value must be an object")
    missing = [k for k in _JSON_KEYS if k not in obj]
    if missing:
        raise InputFormatError(f"missing keys: {', '.join(missing)}")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputFormatError('"n" must be an integer')
    for name in ("d", "a", "a_tilde", "b", "b_tilde"):
        if not isinstance(obj[name], list):
            raise InputFormatError(f'"{name}" must be an array')
    m = NearlyPentaMatrix.from_bands(
        obj["d"], obj["a"], obj["a_tilde"], obj["b"], obj["b_tilde"],
        obj["s"], obj["t"], field=field,
    )
    if m.n != n:
        raise InputFormatError(f'"n" is {n} but "d" has length {m.n}')
    y = None
    if obj.get("y") is not None:
        if not isinstance(obj["y"], list):
            raise InputFormatError('"y" must be an array')
        y = field.make_vector(obj["y"])
        if len(y) != m.n:
            raise InputFormatError(f'"y" must have length {m.n}')
    return m, y


def load_system(path, field: ScalarField = RATIONAL):
    """Read a system from a JSON file; returns (matrix, y_or_None)."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc
    return system_from_json(obj, field=field)


def save_system(path, m: NearlyPentaMatrix, y=None):
    """Write a matrix (and optional right-hand side) as a JSON file."""
    with open(path, "w") as fh:
        json.dump(to_json_dict(m, y=y), fh)
        fh.write("\n")
