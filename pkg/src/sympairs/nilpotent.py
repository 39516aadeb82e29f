"""Complex nilpotent orbits, their weighted Dynkin diagrams, and signed Young diagrams."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Optional, Union

from .rootcore import DynkinType, RootDataError, WeightedDynkinDiagram
from .satake import SatakeDiagram, matches


class OrbitDataError(ValueError):
    """Invalid partition, unsupported type, or missing orbit data."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or min(parts) < 1:
            raise OrbitDataError(f"partition parts must be positive: {self.parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise OrbitDataError(f"partition must be weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accepts ``[4,1^2]``, ``4,1,1`` and similar."""
        parts = []
        for tok in text.strip().strip("[]").split(","):
            tok = tok.strip()
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise OrbitDataError(f"cannot parse partition {text!r}")
            parts += [int(m[1])] * int(m[2] or 1)
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self):
        out = []
        for d, k in sorted(self.multiplicities().items(), reverse=True):
            out.append(str(d) if k == 1 else f"{d}^{k}")
        return "[" + ",".join(out) + "]"


def partitions(n: int, max_part: Optional[int] = None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class NilpotentOrbit:
    """A complex nilpotent orbit; ``tag`` separates the two very even D_n orbits."""

    dtype: DynkinType
    label: Union[Partition, str]
    wdd: WeightedDynkinDiagram
    tag: Optional[str] = None

    def __post_init__(self):
        if any(w not in (0, 1, 2) for w in self.wdd.weights):
            raise OrbitDataError(f"nilpotent weights must lie in {{0,1,2}}: {self.wdd}")

    @property
    def name(self) -> str:
        base = str(self.label)
        return f"{base}{self.tag}" if self.tag else base


def _series_ok(series: str, p: Partition) -> bool:
    mult = p.multiplicities()
    if series in ("B", "D"):
        return all(k % 2 == 0 for d, k in mult.items() if d % 2 == 0)
    if series == "C":
        return all(k % 2 == 0 for d, k in mult.items() if d % 2 == 1)
    return True


def _matrix_size(dtype: DynkinType) -> int:
    n = dtype.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[dtype.series]


def _require_classical(dtype: DynkinType):
    if dtype.series not in "ABCD":
        raise OrbitDataError(f"{dtype} is not a classical type")


def _check_partition(dtype: DynkinType, p: Partition):
    _require_classical(dtype)
    if p.total != _matrix_size(dtype):
        raise OrbitDataError(f"{p} is not a partition of {_matrix_size(dtype)}")
    if not _series_ok(dtype.series, p):
        raise OrbitDataError(f"{p} violates the parity rule for type {dtype.series}")


def is_very_even(dtype: DynkinType, p: Partition) -> bool:
    return dtype.series == "D" and all(d % 2 == 0 for d in p.parts)


def h_sequence(p: Partition) -> list[int]:
    """Eigenvalues of the neutral element, sorted in decreasing order."""
    h = []
    for d in p.parts:
        h += range(d - 1, -d, -2)
    return sorted(h, reverse=True)


def wdd_from_partition(dtype: DynkinType, p: Partition) -> WeightedDynkinDiagram:
    """Dominant weighted Dynkin diagram of the orbit with Jordan type ``p``.

    For a very even D_n partition this is the orbit tagged I; the orbit tagged II
    has the two fork weights exchanged.
    """
    _check_partition(dtype, p)
    h = h_sequence(p)
    n = dtype.rank
    a = [h[i] - h[i + 1] for i in range(n - 1)]
    if dtype.series == "A":
        a.append(h[n - 1] - h[n])
    elif dtype.series == "B":
        a.append(h[n - 1])
    elif dtype.series == "C":
        a.append(2 * h[n - 1])
    else:
        a.append(h[n - 2] + h[n - 1])
    return WeightedDynkinDiagram(dtype, tuple(a))


def classical_orbits(dtype: DynkinType) -> list[NilpotentOrbit]:
    _require_classical(dtype)
    out = []
    for parts in partitions(_matrix_size(dtype)):
        p = Partition(parts)
        if not _series_ok(dtype.series, p):
            continue
        w = wdd_from_partition(dtype, p)
        if is_very_even(dtype, p):
            n = dtype.rank
            swapped = list(w.weights)
            swapped[n - 2], swapped[n - 1] = swapped[n - 1], swapped[n - 2]
            out.append(NilpotentOrbit(dtype, p, w, "I"))
            out.append(NilpotentOrbit(dtype, p, WeightedDynkinDiagram(dtype, tuple(swapped)), "II"))
        else:
            out.append(NilpotentOrbit(dtype, p, w))
    return out


@lru_cache(maxsize=None)
def _exceptional_table() -> dict[str, tuple[NilpotentOrbit, ...]]:
    text = resources.files("sympairs").joinpath("data/exceptional_orbits.txt").read_text()
    table: dict[str, list[NilpotentOrbit]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 5:
            raise OrbitDataError(f"malformed orbit record: {line!r}")
        dt = DynkinType.parse(cols[0])
        weights = tuple(int(x) for x in cols[2].split())
        orbit = NilpotentOrbit(dt, cols[1], WeightedDynkinDiagram(dt, weights))
        table.setdefault(str(dt), []).append(orbit)
    return {k: tuple(v) for k, v in table.items()}


def exceptional_orbits(dtype: DynkinType) -> list[NilpotentOrbit]:
    if dtype.series not in "EFG":
        raise OrbitDataError(f"{dtype} is not an exceptional type")
    table = _exceptional_table()
    if str(dtype) not in table:
        raise OrbitDataError(f"no orbit data for {dtype}")
    return list(table[str(dtype)])


def all_orbits(dtype: DynkinType) -> list[NilpotentOrbit]:
    if dtype.series in "ABCD":
        return classical_orbits(dtype)
    return exceptional_orbits(dtype)


def orbits_meeting(dtype: DynkinType, s: SatakeDiagram) -> list[NilpotentOrbit]:
    """Orbits whose diagram matches ``s``, i.e. those meeting the real form."""
    if s.dtype != dtype:
        raise RootDataError(f"Satake diagram of {s.dtype} used with {dtype}")
    return [o for o in all_orbits(dtype) if matches(o.wdd, s)]


# signed Young diagrams for su(p,q)


@dataclass(frozen=True, order=True)
class SignedYoungDiagram:
    """Rows of alternating signs, each given as (length, leading sign +1/-1)."""

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(l), int(s)) for l, s in self.rows)
        for l, s in rows:
            if l < 1 or s not in (1, -1):
                raise OrbitDataError(f"bad row ({l},{s})")
        canon = tuple(sorted(rows, key=lambda r: (-r[0], -r[1])))
        object.__setattr__(self, "rows", canon)

    @property
    def signature(self) -> tuple[int, int]:
        plus = minus = 0
        for l, s in self.rows:
            big, small = (l + 1) // 2, l // 2
            if s > 0:
                plus, minus = plus + big, minus + small
            else:
                plus, minus = plus + small, minus + big
        return plus, minus

    @property
    def shape(self) -> Partition:
        return Partition(tuple(l for l, _ in self.rows))

    def row_strings(self) -> list[str]:
        out = []
        for l, s in self.rows:
            out.append("".join("+" if (s > 0) == (k % 2 == 0) else "-" for k in range(l)))
        return out

    def __str__(self):
        return " ".join(self.row_strings())


def signed_young_diagrams(p: int, q: int, shape: Partition) -> list[SignedYoungDiagram]:
    if p < 0 or q < 0 or p + q != shape.total:
        raise OrbitDataError(f"signature ({p},{q}) does not fit a diagram with {shape.total} boxes")
    # choose, for each distinct length, how many of its rows lead with +
    groups = sorted(shape.multiplicities().items(), reverse=True)
    out = []
    for choice in product(*[range(k + 1) for _, k in groups]):
        rows = []
        for (l, k), plus_lead in zip(groups, choice):
            rows += [(l, 1)] * plus_lead + [(l, -1)] * (k - plus_lead)
        d = SignedYoungDiagram(tuple(rows))
        if d.signature == (p, q):
            out.append(d)
    return sorted(set(out), key=lambda d: [(-l, -s) for l, s in d.rows])


# independent check of the last-node rules through a matrix realization


def _form_matrix(series: str, size: int) -> list[list[int]]:
    j = [[0] * size for _ in range(size)]
    for i in range(size):
        sign = 1
        if series == "C" and i >= size // 2:
            sign = -1
        j[i][size - 1 - i] = sign
    return j


def _matmul(x, y):
    n = len(x)
    return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _in_algebra(series: str, x, jm) -> bool:
    """X lies in sl (type A) or preserves the bilinear form J (types B, C, D)."""
    n = len(x)
    if series == "A":
        return sum(x[i][i] for i in range(n)) == 0
    xt = [[x[j][i] for j in range(n)] for i in range(n)]
    a = _matmul(xt, jm)
    b = _matmul(jm, x)
    return all(a[i][k] + b[i][k] == 0 for i in range(n) for k in range(n))


def _root_vector(series: str, size: int, a: int, b: int, jm):
    """E_ab, corrected by the mirrored entry so the matrix preserves the form."""
    def unit(r, c):
        m = [[0] * size for _ in range(size)]
        m[r][c] = 1
        return m

    x = unit(a, b)
    if series == "A" or _in_algebra(series, x, jm):
        return x
    mirror = unit(size - 1 - b, size - 1 - a)
    for s in (1, -1):
        y = [[x[i][k] + s * mirror[i][k] for k in range(size)] for i in range(size)]
        if _in_algebra(series, y, jm):
            return y
    raise OrbitDataError("no root vector found")


def _bracket_eigenvalue(hm, x) -> Fraction:
    n = len(x)
    hx = _matmul(hm, x)
    xh = _matmul(x, hm)
    br = [[hx[i][k] - xh[i][k] for k in range(n)] for i in range(n)]
    r, c = next((i, k) for i in range(n) for k in range(n) if x[i][k] != 0)
    lam = Fraction(br[r][c], x[r][c])
    if any(br[i][k] != lam * x[i][k] for i in range(n) for k in range(n)):
        raise OrbitDataError("root vector is not an eigenvector of the neutral element")
    return lam


def validate_wdd_oracle(dtype: DynkinType, p: Partition) -> bool:
    """Recompute the diagram by bracketing the neutral element with simple root vectors."""
    _check_partition(dtype, p)
    series = dtype.series
    size = _matrix_size(dtype)
    n = dtype.rank
    h = h_sequence(p)
    hm = [[h[i] if i == k else 0 for k in range(size)] for i in range(size)]
    jm = _form_matrix(series, size)
    if not _in_algebra(series, hm, jm):
        return False
    pairs = [(i, i + 1) for i in range(n - 1)]
    if series == "A":
        pairs.append((n - 1, n))
    elif series in ("B", "C"):
        pairs.append((n - 1, n))
    else:
        pairs.append((n - 2, n))
    weights = []
    for a, b in pairs:
        x = _root_vector(series, size, a, b, jm)
        weights.append(_bracket_eigenvalue(hm, x))
    return tuple(weights) == wdd_from_partition(dtype, p).weights
