"""Independent oracles used by the test suite.

These deliberately avoid the library's own computation paths: brute-force
enumeration, naive closure loops, complex-float diagonalization, and a
word-tracking construction of abelian duals.
"""

from __future__ import annotations

from itertools import product
from math import isqrt

import numpy as np

from chartab import PermGroup, Permutation, construct_cached
from chartab.chartable import class_matrix, compute_table


def table_of(expr: str):
    return compute_table(construct_cached(expr))


# -- brute-force group theory ---------------------------------------------------

def brute_conjugacy_sizes(group: PermGroup) -> list[int]:
    """Class sizes by pairwise conjugation over the full element list."""
    elems = list(group.elements())
    remaining = set(elems)
    sizes = []
    while remaining:
        x = next(iter(remaining))
        orbit = {g.inverse() * x * g for g in elems}
        assert orbit <= remaining
        remaining -= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


def brute_mulclose(gens) -> frozenset:
    if not gens:
        return frozenset()
    ident = Permutation.identity(next(iter(gens)).degree)
    out = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def brute_normal_closure(group: PermGroup, seeds) -> frozenset:
    """Close under products and conjugation by all group elements."""
    elems = group.elements()
    current = brute_mulclose(set(seeds)) or frozenset({group.identity()})
    while True:
        conj = {g.inverse() * s * g for s in current for g in elems}
        if conj <= current:
            return current
        current = brute_mulclose(current | conj)


def normal_subgroup_orders(group: PermGroup) -> set[int]:
    """Orders of all normal subgroups, via joins of class closures.

    Every normal subgroup is a union of classes, hence the join of the
    normal closures of the single class representatives it contains; the
    join-closure of those atoms is therefore the full normal lattice.
    """
    cd = group.conjugacy_classes()
    atoms = []
    seen_keys = set()
    for rep in cd.reps:
        sub = group.normal_closure([rep])
        key = _subgroup_key(sub)
        if key not in seen_keys:
            seen_keys.add(key)
            atoms.append(sub)
    lattice = {(_subgroup_key(a)): a for a in atoms}
    work = list(atoms)
    while work:
        cur = work.pop()
        for other in list(lattice.values()):
            join = group.subgroup(cur.generators + other.generators)
            key = _subgroup_key(join)
            if key not in lattice:
                lattice[key] = join
                work.append(join)
    return {sub.order() for sub in lattice.values()} | {1}


def _subgroup_key(sub: PermGroup) -> tuple:
    # order + membership fingerprint of a fixed sample is not enough for
    # exact dedup; use order plus sorted orbit of generator images
    if sub.order() <= 4096:
        return ("elts", tuple(sorted(x.images for x in sub.elements())))
    return ("gens", sub.order(), tuple(sorted(g.images for g in sub.generators)))


def brute_has_normal_p_complement(group: PermGroup, p: int) -> bool:
    order = group.order()
    target = order
    while target % p == 0:
        target //= p
    return target in normal_subgroup_orders(group)


# -- SL(2,5) by matrices ---------------------------------------------------------

def sl25_matrix_order() -> int:
    count = 0
    for a, b, c, d in product(range(5), repeat=4):
        if (a * d - b * c) % 5 == 1:
            count += 1
    return count


def central_product_coset_count(m: int) -> int:
    """|SL(2,5) x C_{2m}| / 2 by explicitly enumerating diagonal cosets."""
    sl = construct_cached("SL(2,5)")
    cyc = construct_cached(f"C({2 * m})")
    from chartab import direct_product
    prod = direct_product(sl, cyc)
    pts = [(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    neg = tuple(idx[((-a) % 5, (-b) % 5)] for a, b in pts)
    half = tuple((i + m) % (2 * m) + 24 for i in range(2 * m))
    z = Permutation(neg + half)
    cosets = set()
    for x in prod.elements():
        cosets.add(frozenset({x, z * x}))
    return len(cosets)


# -- number theory ---------------------------------------------------------------

def search_working_prime(exponent: int, order: int) -> int:
    """Re-derive the working prime by direct search."""

    def is_prime(n):
        return n > 1 and all(n % d for d in range(2, isqrt(n) + 1))

    q = 2
    while True:
        if is_prime(q) and (q - 1) % exponent == 0 and q > 2 * isqrt(order):
            return q
        q += 1


# -- numeric character values (floats allowed here only) --------------------------

def numeric_character_rows(group: PermGroup, seed: int = 5) -> list[list[complex]]:
    """Character values from a complex diagonalization of the class algebra."""
    cd = group.conjugacy_classes()
    k = len(cd.reps)
    rng = np.random.default_rng(seed)
    combo = np.zeros((k, k))
    for i in range(1, k):
        combo += rng.uniform(0.5, 1.5) * class_matrix(cd, i).astype(float)
    _, vecs = np.linalg.eig(combo)
    inv = [cd.inverse_class(j) for j in range(k)]
    order = group.order()
    rows = []
    for t in range(k):
        u = vecs[:, t]
        u = u / u[0]
        norm = sum(u[j] * np.conj(u[j]) / cd.sizes[j] for j in range(k))
        d = (order / norm.real) ** 0.5
        rows.append([d * u[j] / cd.sizes[j] for j in range(k)])
    return rows


def lifted_complex_rows(table) -> list[list[complex]]:
    from chartab.cyclotomic import eval_complex
    e = table.q_field.exponent
    return [[eval_complex(v, e) for v in row] for row in table.lifted]


def match_rows_numeric(rows_a, rows_b, tol: float = 1e-6) -> bool:
    """Multiset equality of complex row vectors up to tol."""
    used = [False] * len(rows_b)
    for ra in rows_a:
        hit = None
        for i, rb in enumerate(rows_b):
            if used[i]:
                continue
            if all(abs(x - y) <= tol for x, y in zip(ra, rb)):
                hit = i
                break
        if hit is None:
            return False
        used[hit] = True
    return all(used)


# -- abelian dual-group construction ----------------------------------------------

def abelian_dual_rows(group: PermGroup, exponent: int) -> set[tuple[int, ...]]:
    """All homomorphisms G -> <zeta_e> as exponent vectors over elements.

    Built independently of the character-table engine: elements get words
    in the generators, candidate characters assign a root of unity to each
    generator, and candidates are kept iff the induced value map is a
    homomorphism on all of G x G.
    """
    gens = group.generators
    for a in gens:
        for b in gens:
            assert a * b == b * a, "dual construction needs an abelian group"
    ident = group.identity()
    words = {ident: (0,) * len(gens)}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = x * g
                if y not in words:
                    w = list(words[x])
                    w[i] += 1
                    words[y] = tuple(w)
                    nxt.append(y)
        frontier = nxt
    elems = sorted(words)
    orders = [g.order() for g in gens]
    rows = set()
    for assignment in product(*(range(o) for o in orders)):
        val = {}
        for x in elems:
            w = words[x]
            val[x] = sum(assignment[i] * w[i] * (exponent // orders[i])
                         for i in range(len(gens))) % exponent
        if all(val[x * y] == (val[x] + val[y]) % exponent
               for x in elems for y in elems):
            rows.add(tuple(val[x] for x in elems))
    return rows
