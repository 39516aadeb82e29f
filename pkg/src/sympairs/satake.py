"""Real forms, their Satake diagrams, and the subspaces they cut out.

Classical real forms are generated from closed rules; exceptional ones are
read from ``data/satake_exceptional.txt``.  Every diagram uses Bourbaki
numbering of the complexified Dynkin diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from .rootcore import (
    DynkinType,
    NodePermutation,
    RationalSubspace,
    RootDataError,
    WeightedDynkinDiagram,
    all_types,
    diagram_automorphisms,
    involution_fixed_space,
    subspace_from_constraints,
)


class RealFormError(ValueError):
    """Unknown or malformed real form name."""


EXCEPTIONAL_INDICES = {
    "e6": (6, 2, -14, -26),
    "e7": (7, -5, -25),
    "e8": (8, -24),
    "f4": (4, -20),
    "g2": (2,),
}
_EXCEPTIONAL_RANKS = {
    ("e6", 6): 6, ("e6", 2): 4, ("e6", -14): 2, ("e6", -26): 2,
    ("e7", 7): 7, ("e7", -5): 4, ("e7", -25): 3,
    ("e8", 8): 8, ("e8", -24): 4,
    ("f4", 4): 4, ("f4", -20): 1,
    ("g2", 2): 2,
}
COMPLEX_FAMILIES = ("slC", "soC", "spC", "e6C", "e7C", "e8C", "f4C", "g2C")
TWO_PARAM = ("su", "so", "sp")

# node relabelings for low-rank coincidences
_D3_TO_A3 = {1: 2, 2: 1, 3: 3}


@dataclass(frozen=True, order=True)
class RealFormName:
    """A real Lie algebra named by family and integer parameters.

    Families: slR(n), su(p,q), sustar(n), so(p,q), sostar(n), spR(n), sp(p,q),
    e6/e7/e8/f4/g2 with a character index (no index for the compact form),
    complex algebras viewed as real (slC, soC, spC, e6C, ...), and the
    one-dimensional abelian algebras R and C.
    """

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        fam = self.family
        params = tuple(int(x) for x in self.params)
        if fam in TWO_PARAM:
            if len(params) == 1:
                params = (params[0], 0)
            if len(params) != 2 or min(params) < 0 or sum(params) < 1:
                raise RealFormError(f"{fam} needs two nonnegative parameters, got {self.params}")
            params = (max(params), min(params))
        elif fam in ("slR", "spR", "slC", "soC", "spC"):
            if len(params) != 1 or params[0] < 1:
                raise RealFormError(f"{fam} needs one positive parameter, got {self.params}")
        elif fam in ("sustar", "sostar"):
            if len(params) != 1 or params[0] < 2 or params[0] % 2:
                raise RealFormError(f"{fam} needs one positive even parameter, got {self.params}")
        elif fam in EXCEPTIONAL_INDICES:
            if params and (len(params) != 1 or params[0] not in EXCEPTIONAL_INDICES[fam]):
                raise RealFormError(f"{fam} has no real form with index {self.params}")
        elif fam in COMPLEX_FAMILIES or fam in ("R", "C"):
            if params:
                raise RealFormError(f"{fam} takes no parameters")
        else:
            raise RealFormError(f"unknown real form family {fam!r}")
        object.__setattr__(self, "params", params)

    def __str__(self):
        return format_name(self)

    @property
    def is_complex(self) -> bool:
        return self.family in COMPLEX_FAMILIES

    @property
    def is_compact(self) -> bool:
        if self.family in TWO_PARAM:
            return self.params[1] == 0
        if self.family in EXCEPTIONAL_INDICES:
            return not self.params
        return False

    @property
    def real_rank(self) -> int:
        """Real rank from the closed formula for the family."""
        f, p = self.family, self.params
        if f in TWO_PARAM:
            return p[1]
        if f == "slR":
            return p[0] - 1
        if f == "spR":
            return p[0]
        if f == "sustar":
            return p[0] // 2 - 1
        if f == "sostar":
            return p[0] // 4
        if f in EXCEPTIONAL_INDICES:
            if not p:
                return 0
            return _EXCEPTIONAL_RANKS[(f, p[0])]
        if f in ("R", "C"):
            return 1
        if f == "slC":
            return p[0] - 1
        if f == "soC":
            return p[0] // 2
        if f == "spC":
            return p[0]
        return {"e6C": 6, "e7C": 7, "e8C": 8, "f4C": 4, "g2C": 2}[f]

    def structure(self) -> str:
        """One of 'simple', 'abelian', 'trivial', 'split-sum' (semisimple, not simple)."""
        f, p = self.family, self.params
        if f in ("R", "C"):
            return "abelian"
        if f in ("slR", "slC"):
            return "trivial" if p[0] == 1 else "simple"
        if f in ("spR", "spC"):
            return "simple"
        if f == "su" or f == "sp":
            return "trivial" if f == "su" and sum(p) == 1 else "simple"
        if f == "sustar":
            return "simple"
        if f in ("so", "soC"):
            n = sum(p) if f == "so" else p[0]
            if n == 1:
                return "trivial"
            if n == 2:
                return "abelian"
            return "split-sum" if n == 4 else "simple"
        if f == "sostar":
            return {2: "abelian", 4: "split-sum"}.get(p[0], "simple")
        return "simple"

    @property
    def dtype(self) -> DynkinType:
        """Dynkin type of the complexification (of the algebra itself if complex)."""
        if self.structure() != "simple":
            raise RealFormError(f"{self} is not simple")
        return _native(self)[0]


def _native(name: RealFormName) -> tuple[DynkinType, str, int]:
    """(dtype, native series, native rank) before low-rank relabeling."""
    f, p = name.family, name.params
    if f in ("slR", "slC"):
        n = p[0] - 1
        return DynkinType("A", n), "A", n
    if f == "su":
        n = sum(p) - 1
        return DynkinType("A", n), "A", n
    if f == "sustar":
        return DynkinType("A", p[0] - 1), "A", p[0] - 1
    if f in ("so", "soC", "sostar"):
        n = sum(p) if f == "so" else p[0]
        if f == "sostar":
            n = p[0]
        half = n // 2
        if n % 2:
            if half == 1:
                return DynkinType("A", 1), "B", 1
            return DynkinType("B", half), "B", half
        return DynkinType("D", half), "D", half
    if f in ("spR", "spC"):
        n = p[0]
        return (DynkinType("A", 1) if n == 1 else DynkinType("C", n)), "C", n
    if f == "sp":
        n = sum(p)
        return (DynkinType("A", 1) if n == 1 else DynkinType("C", n)), "C", n
    base = f[:2]
    dt = DynkinType.parse(base.upper())
    return dt, dt.series, dt.rank


_NAME_RES = [
    (re.compile(r"^sl\((\d+),R\)$"), lambda m: RealFormName("slR", (int(m[1]),))),
    (re.compile(r"^sl\((\d+),C\)$"), lambda m: RealFormName("slC", (int(m[1]),))),
    (re.compile(r"^slC\((\d+)\)$"), lambda m: RealFormName("slC", (int(m[1]),))),
    (re.compile(r"^so\((\d+),C\)$"), lambda m: RealFormName("soC", (int(m[1]),))),
    (re.compile(r"^soC\((\d+)\)$"), lambda m: RealFormName("soC", (int(m[1]),))),
    (re.compile(r"^sp\((\d+),R\)$"), lambda m: RealFormName("spR", (int(m[1]),))),
    (re.compile(r"^sp\((\d+),C\)$"), lambda m: RealFormName("spC", (int(m[1]),))),
    (re.compile(r"^spC\((\d+)\)$"), lambda m: RealFormName("spC", (int(m[1]),))),
    (re.compile(r"^(su|so|sp)\((\d+),(\d+)\)$"), lambda m: RealFormName(m[1], (int(m[2]), int(m[3])))),
    (re.compile(r"^(su|so|sp)\((\d+)\)$"), lambda m: RealFormName(m[1], (int(m[2]), 0))),
    (re.compile(r"^(su|so)(?:\*|star)\((\d+)\)$"), lambda m: RealFormName(m[1] + "star", (int(m[2]),))),
    (re.compile(r"^(e6|e7|e8|f4|g2)\((-?\d+)\)$"), lambda m: RealFormName(m[1], (int(m[2]),))),
    (re.compile(r"^(e6|e7|e8|f4|g2)$"), lambda m: RealFormName(m[1])),
    (re.compile(r"^(e6|e7|e8|f4|g2)(?:C|\(C\)|,C)$"), lambda m: RealFormName(m[1] + "C")),
    (re.compile(r"^(R|C)$"), lambda m: RealFormName(m[1])),
]


def parse_name(text: str) -> RealFormName:
    """Parse an ASCII real form name such as ``su(4,2)``, ``su*(6)`` or ``e6(-26)``."""
    s = text.strip().replace(" ", "")
    for rx, build in _NAME_RES:
        m = rx.match(s)
        if m:
            return build(m)
    raise RealFormError(f"cannot parse real form name {text!r}")


def format_name(name: RealFormName) -> str:
    f, p = name.family, name.params
    if f in TWO_PARAM:
        return f"{f}({p[0]})" if p[1] == 0 else f"{f}({p[0]},{p[1]})"
    if f in ("slR", "spR"):
        return f"{f[:2]}({p[0]},R)"
    if f in ("slC", "soC", "spC", "sustar", "sostar"):
        return f"{f}({p[0]})"
    if f in EXCEPTIONAL_INDICES:
        return f"{f}({p[0]})" if p else f
    return f


@dataclass(frozen=True)
class SatakeDiagram:
    """Dynkin type with black nodes and an arrow pairing of white nodes.

    ``complex_form`` marks a complex simple algebra viewed as real; such a
    diagram carries no decoration and imposes no constraint on weights.
    """

    dtype: DynkinType
    black_nodes: frozenset = frozenset()
    arrows: frozenset = frozenset()
    complex_form: bool = False
    synthetic: bool = field(default=False, compare=False)

    def __post_init__(self):
        black = frozenset(int(i) for i in self.black_nodes)
        arrows = frozenset(tuple(sorted((int(a), int(b)))) for a, b in self.arrows)
        nodes = set(self.dtype.nodes)
        if not black <= nodes:
            raise RootDataError(f"black nodes {sorted(black - nodes)} outside {self.dtype}")
        seen: set[int] = set()
        for a, b in arrows:
            if a == b or a not in nodes or b not in nodes:
                raise RootDataError(f"bad arrow ({a},{b}) for {self.dtype}")
            if a in black or b in black:
                raise RootDataError(f"arrow ({a},{b}) touches a black node")
            if a in seen or b in seen:
                raise RootDataError(f"node appears in two arrows: ({a},{b})")
            seen.update((a, b))
        if self.complex_form and (black or arrows):
            raise RootDataError("a complex form carries no black nodes or arrows")
        object.__setattr__(self, "black_nodes", black)
        object.__setattr__(self, "arrows", arrows)
        if not self.synthetic and not _in_catalog(self):
            raise RootDataError(f"diagram {self} is not a real form of {self.dtype}")

    def __str__(self):
        if self.complex_form:
            return f"{self.dtype}[complex]"
        b = ",".join(str(i) for i in sorted(self.black_nodes)) or "-"
        a = " ".join(f"{x}-{y}" for x, y in sorted(self.arrows)) or "-"
        return f"{self.dtype}[black {b}; arrows {a}]"

    def permuted(self, perm: NodePermutation) -> "SatakeDiagram":
        """The diagram transported along a Dynkin diagram automorphism."""
        if perm.dtype != self.dtype:
            raise RootDataError("permutation acts on a different diagram")
        return SatakeDiagram(
            self.dtype,
            frozenset(perm(i) for i in self.black_nodes),
            frozenset((perm(a), perm(b)) for a, b in self.arrows),
            self.complex_form,
            self.synthetic,
        )

    def white_classes(self) -> list[tuple[int, ...]]:
        partner = {}
        for a, b in self.arrows:
            partner[a], partner[b] = b, a
        out = []
        for i in self.dtype.nodes:
            if i in self.black_nodes:
                continue
            j = partner.get(i, i)
            if j >= i:
                out.append((i, j) if j != i else (i,))
        return out

    def is_split(self) -> bool:
        return not self.black_nodes and not self.arrows

    def is_compact(self) -> bool:
        return not self.complex_form and len(self.black_nodes) == self.dtype.rank

    def decoration_key(self) -> tuple:
        return (
            self.complex_form,
            tuple(sorted(self.black_nodes)),
            tuple(sorted(self.arrows)),
        )


def _relabel(series: str, rank: int, black, arrows) -> tuple:
    if series == "D" and rank == 3:
        black = {_D3_TO_A3[i] for i in black}
        arrows = {(_D3_TO_A3[a], _D3_TO_A3[b]) for a, b in arrows}
    return black, arrows


def _classical_decoration(name: RealFormName) -> tuple[set, set]:
    f, p = name.family, name.params
    _, series, n = _native(name)
    if f in ("slR", "spR"):
        return set(), set()
    if f == "su":
        big, small = p
        total = big + small
        arrows = {(i, total - i) for i in range(1, small + 1) if i < total - i}
        return set(range(small + 1, big)), arrows
    if f == "sustar":
        return set(range(1, p[0], 2)), set()
    if f == "sp":
        white = set(range(2, 2 * p[1] + 1, 2))
        return set(range(1, n + 1)) - white, set()
    if f == "so":
        q = p[1]
        if series == "B":
            return set(range(q + 1, n + 1)), set()
        if q <= n - 2:
            return set(range(q + 1, n + 1)), set()
        if q == n - 1:
            return set(), {(n - 1, n)}
        return set(), set()
    if f == "sostar":
        if n % 2 == 0:
            return set(range(1, n - 2, 2)) | {n - 1}, set()
        return set(range(1, n - 1, 2)), {(n - 1, n)}
    raise RealFormError(f"{name} is not a classical real form")


def satake_of(name: RealFormName) -> SatakeDiagram:
    """Satake diagram of a real form of a simple complex Lie algebra."""
    if isinstance(name, str):
        name = parse_name(name)
    return _satake_cached(name)


@lru_cache(maxsize=None)
def _satake_cached(name: RealFormName) -> SatakeDiagram:
    if name.structure() != "simple":
        raise RealFormError(f"{name} is not a real form of a simple complex Lie algebra")
    dtype, series, n = _native(name)
    if name.is_complex:
        return SatakeDiagram(dtype, complex_form=True, synthetic=True)
    if name.family in EXCEPTIONAL_INDICES:
        rec = exceptional_records().get(format_name(name))
        if rec is None:
            raise RealFormError(f"no catalog record for {name}")
        return rec[0]
    if series in ("B", "C") and n == 1:
        # so(2,1), sp(1,R) are split A1; so(3), sp(1) are compact A1
        black = set() if name.real_rank else {1}
        return SatakeDiagram(dtype, frozenset(black), synthetic=True)
    black, arrows = _classical_decoration(name)
    black, arrows = _relabel(series, n, black, arrows)
    return SatakeDiagram(dtype, frozenset(black), frozenset(arrows), synthetic=True)


def _parse_nodes(text: str) -> list[int]:
    text = text.strip()
    return [] if text == "-" else [int(x) for x in text.split()]


@lru_cache(maxsize=None)
def exceptional_records() -> dict[str, tuple[SatakeDiagram, int, str]]:
    """name -> (diagram, stored real rank, citation) from the bundled data file."""
    text = resources.files("sympairs").joinpath("data/satake_exceptional.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 6:
            raise RootDataError(f"malformed Satake record: {line!r}")
        name, dt, black, arrows, rank, cite = cols
        arrow_pairs = []
        if arrows != "-":
            for tok in arrows.split():
                a, b = tok.split("-")
                arrow_pairs.append((int(a), int(b)))
        d = SatakeDiagram(
            DynkinType.parse(dt), frozenset(_parse_nodes(black)), frozenset(arrow_pairs), synthetic=True
        )
        out[format_name(parse_name(name))] = (d, int(rank), cite)
    return out


def citation(name: RealFormName) -> str:
    if name.family in EXCEPTIONAL_INDICES:
        return exceptional_records()[format_name(name)][2]
    if name.is_complex:
        return "complex simple algebra viewed as real"
    return "Araki 1962 classical tables; Helgason 1978 Ch. X Table VI"


def real_forms(dtype: DynkinType, include_complex: bool = True) -> list[RealFormName]:
    """Catalog names of the real forms of the complex simple algebra of this type.

    Low-rank coincidences are listed once, under the series of ``dtype``.
    """
    s, n = dtype.series, dtype.rank
    out: list[RealFormName] = []
    if s == "A":
        m = n + 1
        if m >= 3 or m == 2:
            out.append(RealFormName("slR", (m,)))
        out += [RealFormName("su", (m - q, q)) for q in range(0, m // 2 + 1)]
        if m % 2 == 0 and m >= 4:
            out.append(RealFormName("sustar", (m,)))
        if include_complex:
            out.append(RealFormName("slC", (m,)))
    elif s == "B":
        out += [RealFormName("so", (2 * n + 1 - q, q)) for q in range(0, n + 1)]
        if include_complex:
            out.append(RealFormName("soC", (2 * n + 1,)))
    elif s == "C":
        out.append(RealFormName("spR", (n,)))
        out += [RealFormName("sp", (n - q, q)) for q in range(0, n // 2 + 1)]
        if include_complex:
            out.append(RealFormName("spC", (n,)))
    elif s == "D":
        out += [RealFormName("so", (2 * n - q, q)) for q in range(0, n + 1)]
        out.append(RealFormName("sostar", (2 * n,)))
        if include_complex:
            out.append(RealFormName("soC", (2 * n,)))
    else:
        fam = f"{s.lower()}{n}"
        out += [RealFormName(fam, (i,)) for i in EXCEPTIONAL_INDICES[fam]]
        out.append(RealFormName(fam))
        if include_complex:
            out.append(RealFormName(fam + "C"))
    return out


@lru_cache(maxsize=None)
def _catalog_keys(dtype: DynkinType) -> frozenset:
    keys = set()
    for name in real_forms(dtype, include_complex=False):
        d = _satake_cached(name)
        for perm in diagram_automorphisms(dtype):
            keys.add(_perm_key(d, perm))
    return frozenset(keys)


def _perm_key(d: SatakeDiagram, perm: NodePermutation) -> tuple:
    return (
        tuple(sorted(perm(i) for i in d.black_nodes)),
        tuple(sorted(tuple(sorted((perm(a), perm(b)))) for a, b in d.arrows)),
    )


def _in_catalog(d: SatakeDiagram) -> bool:
    if d.complex_form:
        return True
    ident = (tuple(sorted(d.black_nodes)), tuple(sorted(d.arrows)))
    return ident in _catalog_keys(d.dtype)


def matches(w: WeightedDynkinDiagram, s: SatakeDiagram) -> bool:
    """Weights vanish on black nodes and agree across every arrow."""
    if w.dtype != s.dtype:
        raise RootDataError(f"weights of {w.dtype} against a diagram of {s.dtype}")
    if any(w[i] != 0 for i in s.black_nodes):
        return False
    return all(w[a] == w[b] for a, b in s.arrows)


@lru_cache(maxsize=None)
def match_subspace(s: SatakeDiagram) -> RationalSubspace:
    return subspace_from_constraints(s.dtype.rank, s.black_nodes, s.arrows)


def real_rank(s: SatakeDiagram) -> int:
    """Number of white node classes under the arrow pairing."""
    if s.complex_form:
        return s.dtype.rank
    return len(s.white_classes())


@lru_cache(maxsize=None)
def b_subspace(s: SatakeDiagram) -> RationalSubspace:
    """Match subspace intersected with the fixed space of the opposition involution."""
    return match_subspace(s).intersection(involution_fixed_space(s.dtype))


# isomorphism keys


def _canonical_decoration(d: SatakeDiagram) -> tuple[DynkinType, tuple]:
    dtype, black, arrows = d.dtype, d.black_nodes, d.arrows
    if dtype == DynkinType("B", 2):
        swap = {1: 2, 2: 1}
        dtype = DynkinType("C", 2)
        black = frozenset(swap[i] for i in black)
        arrows = frozenset((swap[a], swap[b]) for a, b in arrows)
    if d.complex_form:
        return dtype, (True, (), ())
    best = None
    for perm in diagram_automorphisms(dtype):
        k = (False,) + _perm_key(SatakeDiagram(dtype, black, arrows, synthetic=True), perm)
        if best is None or k < best:
            best = k
    return dtype, best


@lru_cache(maxsize=None)
def simple_key(name: RealFormName) -> tuple:
    """Isomorphism invariant of a simple real form."""
    dtype, deco = _canonical_decoration(satake_of(name))
    return (str(dtype),) + deco


def summand_keys(name: RealFormName) -> list[tuple]:
    """Isomorphism invariants of the simple and abelian pieces of ``name``."""
    st = name.structure()
    f, p = name.family, name.params
    if st == "trivial":
        return []
    if st == "abelian":
        if f == "R" or (f == "so" and p == (1, 1)):
            return [("R",)]
        if f in ("C", "soC", "spC"):
            return [("C",)]
        return [("T",)]
    if st == "split-sum":
        a1 = lambda nm: simple_key(parse_name(nm))
        if f == "so":
            return {
                (4, 0): [a1("su(2)"), a1("su(2)")],
                (3, 1): [a1("slC(2)")],
                (2, 2): [a1("sl(2,R)"), a1("sl(2,R)")],
            }[p]
        if f == "soC":
            return [a1("slC(2)"), a1("slC(2)")]
        return [a1("su(2)"), a1("sl(2,R)")]
    return [simple_key(name)]


def all_real_forms(max_rank: int, include_complex: bool = True) -> list[RealFormName]:
    out = []
    for dt in all_types(max_rank):
        out += real_forms(dt, include_complex)
    return out
