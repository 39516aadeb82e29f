"""Nilpotent orbits, weighted Dynkin diagrams and signed Young diagrams."""

from collections import Counter

import pytest

from gen_exceptional_orbits import enumerate_orbits
from sympairs.nilpotent import (
    OrbitDataError,
    Partition,
    SignedYoungDiagram,
    all_orbits,
    classical_orbits,
    exceptional_orbits,
    orbits_meeting,
    partitions,
    signed_young_diagrams,
    validate_wdd_oracle,
    wdd_from_partition,
)
from sympairs.rootcore import DynkinType, all_types, is_antipodal
from sympairs.satake import parse_name, real_forms, satake_of

from oracles import A5_TABLE, SU42_TABLE

A5 = DynkinType("A", 5)

def count_partitions(n, largest=None):
    """Plain recursive partition counter."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def brute_partitions(n):
    out = []

    def rec(rest, largest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rest, largest), 0, -1):
            rec(rest - k, k, acc + [k])

    rec(n, n, [])
    return out


def classical_count(series, n):
    """Orbit count from the parity rules, very even partitions counted twice."""
    size = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[series]
    total = 0
    for p in brute_partitions(size):
        mult = Counter(p)
        if series in "BD" and any(mult[k] % 2 for k in mult if k % 2 == 0):
            continue
        if series == "C" and any(mult[k] % 2 for k in mult if k % 2 == 1):
            continue
        very_even = series == "D" and all(k % 2 == 0 for k in p)
        total += 2 if very_even else 1
    return total


def test_a5_table():
    orbits = classical_orbits(A5)
    assert len(orbits) == 11
    assert [(o.name, tuple(o.wdd.weights)) for o in orbits] == A5_TABLE


@pytest.mark.parametrize("label, wdd", A5_TABLE)
def test_a5_rows_via_partition(label, wdd):
    assert tuple(wdd_from_partition(A5, Partition.parse(label)).weights) == wdd


def test_small_cases():
    a1 = classical_orbits(DynkinType("A", 1))
    assert sorted(o.name for o in a1) == ["[1^2]", "[2]"]
    c2 = classical_orbits(DynkinType("C", 2))
    assert sorted(o.name for o in c2) == sorted(["[4]", "[2^2]", "[2,1^2]", "[1^4]"])
    assert validate_wdd_oracle(DynkinType("C", 2), Partition.parse("[2,2]"))
    assert validate_wdd_oracle(DynkinType("A", 1), Partition.parse("[2]"))
    assert tuple(wdd_from_partition(DynkinType("A", 1), Partition.parse("[2]")).weights) == (2,)


def test_su42_meeting():
    got = {o.name for o in orbits_meeting(A5, satake_of(parse_name("su(4,2)")))}
    assert got == {"[5,1]", "[4,1^2]", "[3^2]", "[3,2,1]", "[3,1^3]", "[2^2,1^2]", "[2,1^4]", "[1^6]"}


@pytest.mark.parametrize("dtype", [DynkinType.parse(t) for t in ("A4", "B3", "C4", "D5", "E6", "F4", "G2")], ids=str)
def test_split_meets_all_compact_meets_zero(dtype):
    forms = real_forms(dtype, include_complex=False)
    orbits = all_orbits(dtype)
    for f in forms:
        s = satake_of(f)
        met = orbits_meeting(dtype, s)
        if s.is_split():
            assert met == orbits
        if f.is_compact:
            assert [o.name for o in met] == ["0"] or [tuple(o.wdd.weights) for o in met] == [(0,) * dtype.rank]


def test_partitions_enumeration():
    for n in range(1, 13):
        got = [tuple(p) for p in partitions(n)]
        assert got == brute_partitions(n)
        assert len(got) == count_partitions(n)


@pytest.mark.parametrize("dtype", [t for t in all_types(8) if t.series in "ABCD"], ids=str)
def test_classical_counts(dtype):
    assert len(classical_orbits(dtype)) == classical_count(dtype.series, dtype.rank)


def test_published_d_counts():
    counts = {n: len(classical_orbits(DynkinType("D", n))) for n in (4, 5, 6)}
    assert counts == {4: 12, 5: 16, 6: 31}


def test_very_even_pair_differs_by_fork_swap():
    d4 = {o.name: tuple(o.wdd.weights) for o in classical_orbits(DynkinType("D", 4))}
    assert d4["[4^2]I"][:2] == d4["[4^2]II"][:2]
    assert d4["[4^2]I"][2:] == d4["[4^2]II"][2:][::-1]
    assert d4["[4^2]I"] != d4["[4^2]II"]


def test_invalid_partition():
    with pytest.raises(OrbitDataError):
        wdd_from_partition(DynkinType("C", 2), Partition.parse("[3,1]"))
    with pytest.raises(OrbitDataError):
        wdd_from_partition(A5, Partition.parse("[5]"))


@pytest.mark.parametrize("dtype", [t for t in all_types(8) if t.series in "ABCD"], ids=str)
def test_bala_carter_reproduces_partition_table(dtype):
    ours = {tuple(o.wdd.weights) for o in classical_orbits(dtype)}
    theirs = {tuple(w) for _, w, _ in enumerate_orbits(dtype)}
    assert ours == theirs


def test_exceptional_counts():
    counts = {t: len(exceptional_orbits(DynkinType.parse(t))) for t in ("G2", "F4", "E6", "E7", "E8")}
    assert counts == {"G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}


@pytest.mark.parametrize("t, label, wdd", [
    ("G2", "A1", (0, 1)),
    ("G2", "A~1", (1, 0)),
    ("G2", "G2(a1)", (0, 2)),
    ("F4", "A1", (1, 0, 0, 0)),
    ("F4", "A~1", (0, 0, 0, 1)),
    ("F4", "F4(a3)", (0, 2, 0, 0)),
    ("E6", "A1", (0, 1, 0, 0, 0, 0)),
    ("E6", "D4(a1)", (0, 0, 0, 2, 0, 0)),
    ("E6", "E6", (2, 2, 2, 2, 2, 2)),
    ("E7", "A1", (1, 0, 0, 0, 0, 0, 0)),
    ("E7", "(3A1)''", (0, 0, 0, 0, 0, 0, 2)),
    ("E8", "A1", (0, 0, 0, 0, 0, 0, 0, 1)),
    ("E8", "E8(a1)", (2, 2, 2, 0, 2, 2, 2, 2)),
])
def test_exceptional_spot_values(t, label, wdd):
    found = {o.label: tuple(o.wdd.weights) for o in exceptional_orbits(DynkinType.parse(t))}
    assert found[label] == wdd


def test_exceptional_label_sets():
    e8 = {o.label for o in exceptional_orbits(DynkinType("E", 8))}
    assert {"E8(b4)", "E8(b5)", "E8(b6)", "D7(a2)", "E6(a3)+A1", "A4+A3"} <= e8
    e7 = {o.label for o in exceptional_orbits(DynkinType("E", 7))}
    assert {"A5'", "A5''", "(A3+A1)'", "(A3+A1)''", "(3A1)'", "(3A1)''"} <= e7


@pytest.mark.parametrize("t", ["G2", "F4", "E6", "E7", "E8"])
def test_exceptional_file_matches_generator(t):
    dtype = DynkinType.parse(t)
    stored = [(o.label, tuple(o.wdd.weights)) for o in exceptional_orbits(dtype)]
    fresh = [(label, tuple(w)) for label, w, _ in enumerate_orbits(dtype)]
    assert stored == fresh


def test_weights_and_antipodality():
    types = [t for t in all_types(8)] + [DynkinType("E", 6)]
    for dtype in types:
        for o in all_orbits(dtype):
            assert set(o.wdd.weights) <= {0, 1, 2}
            assert is_antipodal(o.wdd)


# signed Young diagrams

def _rows_as_multiset(rows):
    return tuple(sorted(rows))


@pytest.mark.parametrize("shape", sorted(SU42_TABLE))
def test_su42_signed_table(shape):
    got = {_rows_as_multiset(d.row_strings()) for d in signed_young_diagrams(4, 2, Partition.parse(shape))}
    assert got == {_rows_as_multiset(r) for r in SU42_TABLE[shape]}


def test_signed_small():
    ds = signed_young_diagrams(1, 1, Partition.parse("[2]"))
    assert sorted(str(d) for d in ds) == ["+-", "-+"]
    assert [str(d) for d in signed_young_diagrams(4, 2, Partition.parse("[5,1]"))] == ["+-+-+ +"]
    assert SignedYoungDiagram(((2, 1), (1, -1))).signature == (1, 2)


def test_signed_nonempty_iff_meets_su():
    for n in range(2, 9):
        dtype = DynkinType("A", n - 1)
        for q in range(0, n // 2 + 1):
            p = n - q
            s = satake_of(parse_name(f"su({p},{q})" if q else f"su({p})"))
            met = {o.name for o in orbits_meeting(dtype, s)}
            for parts in partitions(n):
                shape = Partition(parts)
                assert bool(signed_young_diagrams(p, q, shape)) == (str(shape) in met), (p, q, shape)


def test_signed_counts_total_real_orbits():
    # the number of signed diagrams of signature (p,q) with p+q=n
    for p, q in [(2, 1), (3, 2), (4, 2), (3, 3)]:
        total = sum(len(signed_young_diagrams(p, q, Partition(s))) for s in partitions(p + q))
        assert total == brute_signed_count(p, q)


def brute_signed_count(p, q):
    """Multisets of alternating rows with total signature (p,q)."""
    rows = []
    for length in range(1, p + q + 1):
        for start in (1, -1):
            plus = sum(1 for k in range(length) if (k % 2 == 0) == (start == 1))
            rows.append((length, start, plus, length - plus))
    # odd-length and even-length rows; even rows of either start are distinct kinds
    kinds = sorted(set(rows))
    count = 0

    def rec(i, pp, qq):
        nonlocal count
        if pp == 0 and qq == 0:
            count += 1
            return
        if i == len(kinds):
            return
        length, start, a, b = kinds[i]
        k = 0
        while k * a <= pp and k * b <= qq:
            rec(i + 1, pp - k * a, qq - k * b)
            k += 1

    rec(0, p, q)
    return count


@pytest.mark.parametrize("n", range(1, 13))
def test_oracle_on_all_classical_partitions(n):
    for series in "ABCD":
        if series == "A":
            dtype = DynkinType("A", n - 1) if n >= 2 else None
        elif series == "B":
            dtype = DynkinType("B", (n - 1) // 2) if n % 2 == 1 and n >= 5 else None
        elif series == "C":
            dtype = DynkinType("C", n // 2) if n % 2 == 0 and n >= 4 else None
        else:
            dtype = DynkinType("D", n // 2) if n % 2 == 0 and n >= 8 else None
        if dtype is None:
            continue
        for o in classical_orbits(dtype):
            assert validate_wdd_oracle(dtype, o.label), (dtype, o.name)
