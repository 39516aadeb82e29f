"""Enumerate nilpotent orbits of a simple Lie algebra by Bala-Carter theory.

Each orbit comes from a Levi subalgebra (a subset J of simple roots) and a
distinguished parabolic of [l,l], i.e. an even weighting of J whose degree-0
and degree-2 pieces have equal dimension on every simple factor.  The neutral
element h is solved from the weighting, moved into the dominant chamber and
read off as a weighted Dynkin diagram.

    python tools/gen_exceptional_orbits.py > src/sympairs/data/exceptional_orbits.txt
"""

from __future__ import annotations

import sys
from collections import defaultdict
from fractions import Fraction
from itertools import combinations, product

from sympairs.rootcore import DynkinType, cartan_matrix

CITATION = "Bala-Carter enumeration by tools/gen_exceptional_orbits.py; cf. Collingwood-McGovern 1993 Sec. 8.4"


def positive_roots(a):
    """Positive roots in simple-root coordinates, closed under simple reflections."""
    n = len(a)
    simple = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pair = sum(beta[j] * a[i][j] for j in range(n))
                img = list(beta)
                img[i] -= pair
                img = tuple(img)
                if img not in roots and any(img) and min(img) >= 0:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(roots)


def root_lengths(a):
    """Squared lengths of simple roots up to a common scale."""
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                # d_i a_ij = d_j a_ji for a symmetrizable matrix
                if i != j and a[i][j] and d[i] is not None and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    changed = True
    top = max(d)
    return [x / top for x in d]


def components(j_nodes, a):
    left = set(j_nodes)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in list(left):
                if y not in comp and a[x][y]:
                    comp.add(y)
                    stack.append(y)
        left -= comp
        out.append(sorted(comp))
    return out


def grade_dims(roots, weights, support):
    """dim of degree-0 and degree-2 pieces of the algebra spanned by ``support``."""
    d0 = len(support)
    d2 = 0
    for beta in roots:
        if any(beta[k] for k in range(len(beta)) if k not in support):
            continue
        deg = sum(beta[k] * weights.get(k, 0) for k in support)
        if deg == 0:
            d0 += 2
        elif deg == 2:
            d2 += 1
    return d0, d2


def component_type(comp, a, lengths):
    """(letter, rank, short_flag) of a connected sub-diagram."""
    r = len(comp)
    sub = [[a[i][j] for j in comp] for i in comp]
    degrees = [sum(1 for j in range(r) if j != i and sub[i][j]) for i in range(r)]
    multiple = any(sub[i][j] < -1 for i in range(r) for j in range(r))
    ls = [lengths[i] for i in comp]
    if any(sub[i][j] == -3 for i in range(r) for j in range(r)):
        return "G", 2, False
    if multiple:
        n_long = sum(1 for x in ls if x == 1)
        n_short = r - n_long
        if r == 4:
            return "F", 4, False
        if r == 2 or n_long > n_short:
            return "B", r, False
        return "C", r, False
    short = all(x < 1 for x in ls)
    if max(degrees, default=0) <= 2:
        return "A", r, short
    if r in (6, 7, 8) and _is_e(sub):
        return "E", r, False
    return "D", r, False


def _is_e(sub):
    r = len(sub)
    deg = [sum(1 for j in range(r) if j != i and sub[i][j]) for i in range(r)]
    branch = deg.index(3)
    arms = []
    for nb in [j for j in range(r) if j != branch and sub[branch][j]]:
        length, prev, cur = 1, branch, nb
        while True:
            nxt = [k for k in range(r) if k not in (prev, cur) and sub[cur][k]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)[:2] == [1, 2]


def orbit_dim(roots, wdd, rank):
    dim_g = rank + 2 * len(roots)
    g0 = rank
    g1 = 0
    for beta in roots:
        deg = sum(b * w for b, w in zip(beta, wdd))
        if deg == 0:
            g0 += 2
        elif deg == 1:
            g1 += 1
    return dim_g - g0 - g1


def dominant_wdd(a, j_nodes, weights):
    """WDD of h = sum x_j alpha_j^vee with alpha_k(h) = weights[k] for k in J."""
    n = len(a)
    js = sorted(j_nodes)
    m = len(js)
    # solve sum_j x_j a[j][k] = w_k for k in J
    aug = [[Fraction(a[js[c]][js[r]]) for c in range(m)] + [Fraction(weights[js[r]])] for r in range(m)]
    for c in range(m):
        piv = next(r for r in range(c, m) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(m):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    x = {js[r]: aug[r][m] for r in range(m)}
    vals = [sum(x[j] * a[j][i] for j in js) for i in range(n)]
    while True:
        neg = next((i for i in range(n) if vals[i] < 0), None)
        if neg is None:
            break
        c = vals[neg]
        vals = [vals[k] - c * a[neg][k] for k in range(n)]
    return tuple(int(v) for v in vals)


def _comp_label(letter, rank, short, zeros, suffix_letter):
    base = f"{letter}{rank}" if letter != "A" or not short else f"{letter}~{rank}"
    if zeros:
        base += f"({suffix_letter}{zeros})"
    return base


def enumerate_orbits(dtype: DynkinType):
    a = cartan_matrix(dtype)
    n = dtype.rank
    roots = positive_roots(a)
    lengths = root_lengths(a)
    # distinguished weightings of each connected sub-diagram, with orbit dimension in it
    dist_cache = {}

    def distinguished(comp):
        key = tuple(comp)
        if key in dist_cache:
            return dist_cache[key]
        found = []
        for ws in product((0, 2), repeat=len(comp)):
            w = dict(zip(comp, ws))
            d0, d2 = grade_dims(roots, w, set(comp))
            if d0 == d2:
                sub_roots = [b for b in roots if not any(b[k] for k in range(n) if k not in comp)]
                dim_l = len(comp) + 2 * len(sub_roots)
                found.append((w, dim_l - d0, ws.count(0)))
        # equal zero counts: larger orbit gets 'a', smaller 'b'
        by_zero = defaultdict(list)
        for w, dim, z in found:
            by_zero[z].append((dim, w))
        tagged = []
        for z, items in by_zero.items():
            items.sort(key=lambda t: -t[0])
            for k, (dim, w) in enumerate(items):
                tagged.append((w, z, "ab"[k]))
        dist_cache[key] = tagged
        return tagged

    letter_order = {"E": 0, "F": 1, "G": 2, "D": 3, "C": 4, "B": 5, "A": 6}
    seen = {}
    for size in range(0, n + 1):
        for j_nodes in combinations(range(n), size):
            comps = components(j_nodes, a)
            choices = [distinguished(c) for c in comps]
            for pick in product(*choices):
                weights = {}
                parts = []
                for comp, (w, z, tag) in zip(comps, pick):
                    weights.update(w)
                    letter, rank, short = component_type(comp, a, lengths)
                    parts.append(((letter_order[letter], -rank, short, z), _comp_label(letter, rank, short, z, tag)))
                wdd = dominant_wdd(a, j_nodes, weights) if j_nodes else (0,) * n
                if wdd in seen:
                    continue
                parts.sort()
                labels = [p[1] for p in parts]
                grouped = []
                for lab in labels:
                    if grouped and grouped[-1][0] == lab:
                        grouped[-1][1] += 1
                    else:
                        grouped.append([lab, 1])
                label = "+".join(l if k == 1 else f"{k}{l}" for l, k in grouped) or "0"
                seen[wdd] = label
    # same label, different orbit: larger orbit gets ', smaller ''
    by_label = defaultdict(list)
    for wdd, label in seen.items():
        by_label[label].append(wdd)
    out = []
    for label, wdds in by_label.items():
        wdds.sort(key=lambda w: -orbit_dim(roots, w, n))
        for k, w in enumerate(wdds):
            lab = label
            if len(wdds) > 1:
                if "+" in lab or lab[0].isdigit():
                    lab = f"({lab})"
                lab += "'" * (k + 1)
            out.append((lab, w, orbit_dim(roots, w, n)))
    out.sort(key=lambda t: (t[2], t[1]))
    return out


def main(argv):
    types = [DynkinType.parse(t) for t in (argv or ["G2", "F4", "E6", "E7", "E8"])]
    print("# Nilpotent orbits of exceptional complex simple Lie algebras, Bourbaki numbering.")
    print("# format-version: 1")
    print("# fields: type | Bala-Carter label | weighted Dynkin diagram | orbit dimension | citation")
    print("# A short-root A_k component is written A~k.")
    for dt in types:
        for label, wdd, dim in enumerate_orbits(dt):
            print(f"{dt} | {label} | {' '.join(map(str, wdd))} | {dim} | {CITATION}")


if __name__ == "__main__":
    main(sys.argv[1:])
