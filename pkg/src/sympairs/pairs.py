"""Symmetric pairs, their c-duals, and the A/B/C classification.

A pair is placed in C when rank g = rank h (no infinite discontinuous group),
in A when some antipodal hyperbolic orbit meets g but not g^c (proper
SL(2,R)-actions exist), and in B otherwise.
"""

from __future__ import annotations

import ast
import operator
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence, Union

from .nilpotent import (
    NilpotentOrbit,
    OrbitDataError,
    SignedYoungDiagram,
    all_orbits,
    signed_young_diagrams,
)
from .rootcore import DynkinType, RationalSubspace, fork_swap, subspace_contains
from .satake import (
    RealFormError,
    RealFormName,
    SatakeDiagram,
    b_subspace,
    match_subspace,
    matches,
    parse_name,
    real_rank,
    satake_of,
    simple_key,
    summand_keys,
)


class PairError(ValueError):
    """Unknown pair or malformed catalog entry."""


class ConsistencyError(RuntimeError):
    """Two conditions that must agree were found to disagree."""


@dataclass(frozen=True, order=True)
class RealAlgebra:
    """Direct sum of real forms, written ``a+b+c``."""

    summands: tuple[RealFormName, ...]

    @classmethod
    def parse(cls, text: str) -> "RealAlgebra":
        if isinstance(text, RealFormName):
            return cls((text,))
        if isinstance(text, RealAlgebra):
            return text
        parts = [p for p in re.split(r"\+(?![^()]*\))", text.replace(" ", "")) if p]
        if not parts:
            raise PairError(f"empty algebra {text!r}")
        return cls(tuple(parse_name(p) for p in parts))

    @property
    def real_rank(self) -> int:
        return sum(s.real_rank for s in self.summands if s.structure() != "trivial")

    def iso_key(self) -> tuple:
        keys = []
        for s in self.summands:
            keys += summand_keys(s)
        return tuple(sorted(keys))

    def simple(self) -> RealFormName:
        if len(self.summands) != 1:
            raise PairError(f"{self} is not a single real form")
        return self.summands[0]

    def __str__(self):
        return "+".join(str(s) for s in self.summands)


@dataclass(frozen=True)
class SymmetricPair:
    """Catalog entry (g, h) with c-dual g_c; both Satake diagrams share one node labeling.

    For complex g, ``satake_g`` is the undecorated complex diagram and
    ``satake_gc`` is the partner real form's diagram.
    """

    g: RealFormName
    h: RealAlgebra
    g_c: RealAlgebra
    satake_g: SatakeDiagram
    satake_gc: SatakeDiagram
    rank_h: int
    citation: str
    family: str = ""
    params: tuple = ()
    partner: Optional[RealFormName] = field(default=None, compare=False)

    def __post_init__(self):
        if self.satake_g.dtype != self.satake_gc.dtype:
            raise PairError(f"{self}: diagrams of different types")
        if self.rank_h > real_rank(self.satake_g) or self.rank_h > real_rank(self.satake_gc):
            raise PairError(f"{self}: rank of h exceeds a real rank")

    def __str__(self):
        return f"({self.g}, {self.h})"

    def key(self) -> tuple:
        """Isomorphism invariant of the triple (g, h, g_c)."""
        return (simple_key(self.g), self.h.iso_key(), self.g_c.iso_key())


# safe evaluation of the integer expressions used by catalog templates

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}
_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}
_FUNCS = {"min": min, "max": max}


def evaluate(expr: str, env: dict):
    """Evaluate an integer/boolean expression over ``env`` without ``eval``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise PairError(f"unknown variable {node.id!r} in {expr!r}")
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            return not ev(node.operand)
        if isinstance(node, ast.BoolOp):
            vals = (ev(v) for v in node.values)
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        if isinstance(node, ast.Compare):
            left = ev(node.left)
            for op, right in zip(node.ops, node.comparators):
                r = ev(right)
                if type(op) not in _CMPOPS or not _CMPOPS[type(op)](left, r):
                    return False
                left = r
            return True
        if (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id in _FUNCS
            and not node.keywords
        ):
            return _FUNCS[node.func.id](*(ev(a) for a in node.args))
        raise PairError(f"unsupported expression {expr!r}")

    return ev(ast.parse(expr.strip(), mode="eval"))


def fill(template: str, env: dict) -> str:
    return re.sub(r"\{([^{}]+)\}", lambda m: str(evaluate(m[1], env)), template)


@dataclass(frozen=True)
class Family:
    """One catalog line: a symbolic family of symmetric pairs."""

    ident: str
    g: str
    h: str
    g_c: str
    partner: str
    align: str
    params: tuple[tuple[str, str, str], ...]
    where: str
    rank_h: str
    source: str

    def assignments(self, rank_bound: int):
        env0 = {"R": rank_bound}

        def rec(k, env):
            if k == len(self.params):
                yield dict(env)
                return
            name, lo, hi = self.params[k]
            for v in range(evaluate(lo, env), evaluate(hi, env) + 1):
                env[name] = v
                yield from rec(k + 1, env)
            env.pop(name, None)

        yield from rec(0, env0)

    def instantiate(self, env: dict) -> Optional[SymmetricPair]:
        if self.where != "-" and not evaluate(self.where, env):
            return None
        g = parse_name(fill(self.g, env))
        if g.structure() != "simple" or g.is_compact:
            return None
        if g.dtype.rank > env["R"]:
            return None
        h = RealAlgebra.parse(fill(self.h, env))
        g_c = RealAlgebra.parse(fill(self.g_c, env))
        partner = g_c.simple() if self.partner == "=" else parse_name(fill(self.partner, env))
        s_g = satake_of(g)
        s_c = satake_of(partner)
        if self.align != "-" and evaluate(self.align, env):
            s_c = s_c.permuted(fork_swap(s_c.dtype))
        rank_h = h.real_rank if self.rank_h == "sum" else evaluate(self.rank_h, env)
        params = tuple((k, v) for k, v in env.items() if k != "R")
        return SymmetricPair(g, h, g_c, s_g, s_c, rank_h, self.source, self.ident, params, partner)


@lru_cache(maxsize=None)
def catalog_families() -> tuple[Family, ...]:
    text = resources.files("sympairs").joinpath("data/pairs_catalog.txt").read_text()
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 10:
            raise PairError(f"malformed catalog line: {line!r}")
        ident, g, h, gc, partner, align, params, where, rank_h, source = cols
        specs = []
        if params != "-":
            for item in params.split(";"):
                m = re.fullmatch(r"\s*(\w+)\s*=\s*(.+?)\.\.(.+?)\s*", item)
                if not m:
                    raise PairError(f"bad parameter range {item!r} in {ident}")
                specs.append((m[1], m[2], m[3]))
        out.append(Family(ident, g, h, gc, partner, align, tuple(specs), where, rank_h, source))
    return tuple(out)


@lru_cache(maxsize=None)
def catalog(rank_bound: int = 8) -> tuple[SymmetricPair, ...]:
    """Every catalog pair with rank g <= rank_bound, one per isomorphism class."""
    seen = set()
    out = []
    for fam in catalog_families():
        for env in fam.assignments(rank_bound):
            pair = fam.instantiate(env)
            if pair is None:
                continue
            k = pair.key()
            if k in seen:
                continue
            seen.add(k)
            out.append(pair)
    return tuple(out)


@lru_cache(maxsize=None)
def _index(rank_bound: int) -> dict:
    out: dict = {}
    for p in catalog(rank_bound):
        out.setdefault((simple_key(p.g), p.h.iso_key()), []).append(p)
    return out


def _as_name(x) -> RealFormName:
    return parse_name(x) if isinstance(x, str) else x


def lookup(g: Union[str, RealFormName], h: Union[str, RealAlgebra]) -> SymmetricPair:
    """The catalog pair isomorphic to (g, h)."""
    g = _as_name(g)
    h = RealAlgebra.parse(h) if not isinstance(h, RealAlgebra) else h
    keys = summand_keys(g)
    # so(3,1) is simple over R even though its complexification splits
    if len(keys) != 1 or len(keys[0]) == 1:
        raise PairError(f"{g} is not simple")
    gk, hk = keys[0], h.iso_key()
    rank = DynkinType.parse(gk[0]).rank
    found = _index(max(2, rank)).get((gk, hk), [])
    if not found:
        raise PairError(f"({g}, {h}) is not a symmetric pair in the catalog")
    duals = {p.g_c.iso_key() for p in found}
    if len(duals) > 1:
        names = ", ".join(str(p.g_c) for p in found)
        raise PairError(f"({g}, {h}) is ambiguous: c-duals {names}")
    return found[0]


def c_dual(g, h) -> RealAlgebra:
    return lookup(g, h).g_c


# the conditions


def calabi_markus(pair: SymmetricPair) -> bool:
    """True when rank g equals rank h."""
    return real_rank(pair.satake_g) == pair.rank_h


def _gc_space(pair: SymmetricPair) -> RationalSubspace:
    return match_subspace(pair.satake_gc)


def condition_hyperbolic(pair: SymmetricPair) -> bool:
    """Some hyperbolic orbit meets g but not g^c."""
    return not subspace_contains(_gc_space(pair), match_subspace(pair.satake_g))


def antipodal_certificate(pair: SymmetricPair) -> Optional[tuple[Fraction, ...]]:
    """A dominant, involution-fixed weight matching g but not g^c, or None."""
    b = b_subspace(pair.satake_g)
    gc = _gc_space(pair)
    v = gc.complement_vector(b)
    if v is None:
        return None
    interior = [sum(col) for col in zip(*b.basis)]
    for t in range(0, 2 * len(v) + 2):
        cand = tuple(x + t * y for x, y in zip(v, interior))
        if min(cand) >= 0 and not gc.contains_vector(cand):
            return cand
    # no dominant point found; the subspace itself is the certificate
    return v


def condition_antipodal(pair: SymmetricPair) -> bool:
    """Some antipodal hyperbolic orbit meets g but not g^c."""
    return not subspace_contains(_gc_space(pair), b_subspace(pair.satake_g))


def nilpotent_witnesses(pair: SymmetricPair) -> list[NilpotentOrbit]:
    """Complex nilpotent orbits meeting g but not g^c."""
    dtype = pair.satake_g.dtype
    return [
        o
        for o in all_orbits(dtype)
        if matches(o.wdd, pair.satake_g) and not matches(o.wdd, pair.satake_gc)
    ]


def condition_nilpotent(pair: SymmetricPair) -> Optional[NilpotentOrbit]:
    found = nilpotent_witnesses(pair)
    return found[0] if found else None


def alignment_consistent(pair: SymmetricPair) -> bool:
    """The shared split torus of g and g^c has dimension rank h."""
    both = match_subspace(pair.satake_g).intersection(_gc_space(pair))
    return both.dimension == pair.rank_h


@dataclass(frozen=True)
class Classification:
    set_label: str
    calabi_markus: bool
    cond5: bool
    cond6: Optional[bool]
    cond7: bool
    cond8: bool
    witness_orbit: Optional[NilpotentOrbit] = None
    certificate: Optional[tuple[Fraction, ...]] = None

    @property
    def no_compact_quotient(self) -> bool:
        """Members of B admit no compact Clifford-Klein form."""
        return self.set_label == "B"


def classify(pair: SymmetricPair, cross_validate: bool = True) -> Classification:
    cm = calabi_markus(pair)
    cond7 = condition_hyperbolic(pair)
    cond8 = condition_antipodal(pair)
    if cond7 == cm:
        raise ConsistencyError(f"{pair}: rank condition and hyperbolic condition disagree")
    if cond8 and not cond7:
        raise ConsistencyError(f"{pair}: antipodal condition without hyperbolic condition")
    witness = None
    cond6 = None
    try:
        witness = condition_nilpotent(pair)
        cond6 = witness is not None
    except OrbitDataError:
        if cross_validate:
            raise
    if cross_validate:
        if cond6 != cond8:
            raise ConsistencyError(f"{pair}: nilpotent and antipodal conditions disagree")
        if not alignment_consistent(pair):
            raise ConsistencyError(f"{pair}: diagrams of g and g^c are misaligned")
    label = "C" if cm else ("A" if cond8 else "B")
    cert = antipodal_certificate(pair) if cond8 else None
    return Classification(label, cm, not cm, cond6, cond7, cond8, witness, cert)


@dataclass(frozen=True)
class WitnessReport:
    """Proper SL(2,R) witnesses: signed Young diagrams for su(p,q), else complex orbits."""

    real_level: bool
    signed: tuple[tuple[NilpotentOrbit, tuple[SignedYoungDiagram, ...]], ...] = ()
    orbits: tuple[NilpotentOrbit, ...] = ()

    def count(self) -> int:
        if self.real_level:
            return sum(len(ds) for _, ds in self.signed)
        return len(self.orbits)


def proper_sl2_witnesses(pair: SymmetricPair) -> WitnessReport:
    orbits = tuple(nilpotent_witnesses(pair))
    if pair.g.family != "su":
        return WitnessReport(False, (), orbits)
    p, q = pair.g.params
    signed = []
    for o in orbits:
        ds = signed_young_diagrams(p, q, o.label)
        if ds:
            signed.append((o, tuple(ds)))
    return WitnessReport(True, tuple(signed), orbits)


TABLES = {"table1": "B", "table4": "A"}


def generate_table(
    which: str,
    rank_bound: int = 8,
    workers: Optional[int] = None,
    pairs: Optional[Sequence[SymmetricPair]] = None,
) -> list[tuple[SymmetricPair, Classification]]:
    """Catalog pairs of rank <= rank_bound in B (``table1``) or A (``table4``), in catalog order."""
    if which not in TABLES:
        raise PairError(f"unknown table {which!r}; expected one of {sorted(TABLES)}")
    if rank_bound < 2:
        raise PairError("rank_bound must be at least 2")
    pool = list(catalog(rank_bound) if pairs is None else pairs)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(classify, pool))
    else:
        results = [classify(p) for p in pool]
    want = TABLES[which]
    return [(p, c) for p, c in zip(pool, results) if c.set_label == want]
