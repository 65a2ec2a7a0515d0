"""Exact sums of roots of unity.

A value in Z[zeta_e] is stored sparsely as a tuple of (exponent,
multiplicity) pairs, sorted by exponent — the eigenvalue multiplicities of
a representation matrix, which makes equality of stored values canonical
tuple equality.  Equality of *derived* sums against an integer goes
through reduction modulo the e-th cyclotomic polynomial, in exact integer
arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

RootSum = tuple[tuple[int, int], ...]


def make_rootsum(pairs) -> RootSum:
    acc: dict[int, int] = {}
    for l, m in pairs:
        if m:
            acc[l] = acc.get(l, 0) + m
    return tuple(sorted((l, m) for l, m in acc.items() if m))


def conjugate(v: RootSum, e: int) -> RootSum:
    return make_rootsum(((-l) % e, m) for l, m in v)


def total(v: RootSum) -> int:
    return sum(m for _, m in v)


def eval_mod(v: RootSum, w: int, q: int) -> int:
    """Value of the sum under zeta_e -> w in F_q."""
    return sum(m * pow(w, l, q) for l, m in v) % q


def eval_complex(v: RootSum, e: int) -> complex:
    import cmath
    return sum(m * cmath.exp(2j * cmath.pi * l / e) for l, m in v)


def render(v: RootSum) -> str:
    """Human form "m*z^l + ...", with z a primitive e-th root of unity."""
    if not v:
        return "0"
    terms = []
    for l, m in v:
        if l == 0:
            terms.append(str(m))
        elif m == 1:
            terms.append(f"z^{l}")
        else:
            terms.append(f"{m}*z^{l}")
    return " + ".join(terms)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        assert coeff % den[-1] == 0
        c = coeff // den[-1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert all(x == 0 for x in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, ascending; computed from x^e - 1 by division."""
    if e == 1:
        return (-1, 1)
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    for d in range(1, e):
        if e % d == 0:
            num = _poly_divide_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def reduction_table(e: int) -> np.ndarray:
    """Row l = coefficients of x^l mod Phi_e, shape (e, phi(e))."""
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    # x^deg = -(phi[0] + phi[1] x + ... + phi[deg-1] x^{deg-1})
    top = np.array([-c for c in phi[:deg]], dtype=np.int64)
    table = np.zeros((e, deg), dtype=np.int64)
    row = np.zeros(deg, dtype=np.int64)
    row[0] = 1
    for l in range(e):
        table[l] = row
        lead = row[deg - 1]
        row = np.roll(row, 1)
        row[0] = 0
        if lead:
            row = row + lead * top
    return table


def reduce_to_integer(acc: dict[int, int], e: int) -> int | None:
    """If sum acc[l] * zeta_e^l is a rational integer, return it, else None."""
    table = reduction_table(e)
    deg = table.shape[1]
    vec = np.zeros(deg, dtype=np.int64)
    for l, c in acc.items():
        if c:
            vec = vec + c * table[l % e]
    if np.any(vec[1:]):
        return None
    return int(vec[0])
