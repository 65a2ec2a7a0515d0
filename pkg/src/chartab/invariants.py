"""Exact counting and averaging of character degrees.

Every average is a fractions.Fraction: the theorems compare against
3/2, 4/3, 11/4, 16/5 with strict inequalities, so floating point would
corrupt exactly-attained boundary cases (A4 sits exactly at 3/2).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import CharTable
from .fields import FieldSpec, field_rows
from .permgroup import PermGroup

ExactRational = Fraction


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def selected_rows(table: CharTable, p: int | None, spec: FieldSpec) -> tuple[int, ...]:
    """Rows with p'-degree (no filter when p is None) and values in the field."""
    if p is not None:
        _check_prime(p)
    rows = field_rows(table, spec)
    if p is None:
        return rows
    return tuple(r for r in rows if table.degrees[r] % p != 0)


def irr_pprime(table: CharTable, p: int, spec: FieldSpec = FieldSpec.all()) -> tuple[int, ...]:
    """Rows of degree not divisible by p, restricted to the field."""
    rows = selected_rows(table, p, spec)
    assert rows and rows[0] == 0  # the trivial character always qualifies
    return rows

def degree_counts(table: CharTable, rows=None) -> dict[int, int]:
    """n_d: number of selected rows of each degree d."""
    if rows is None:
        rows = range(table.n_classes)
    return dict(sorted(Counter(table.degrees[r] for r in rows).items()))


def average_degree(table: CharTable, p: int | None, spec: FieldSpec) -> Fraction:
    rows = selected_rows(table, p, spec)
    return Fraction(sum(table.degrees[r] for r in rows), len(rows))


def acd_pprime(table: CharTable, p: int, spec: FieldSpec = FieldSpec.all()) -> Fraction:
    """Average of p'-degrees of the field-restricted irreducible characters."""
    return average_degree(table, p, spec)


@dataclass
class DegreeProfile:
    """Per-(field, prime) cache of row selections and degree statistics."""

    table: CharTable
    _cache: dict = field(default_factory=dict)

    def rows(self, p: int | None = None, spec: FieldSpec = FieldSpec.all()):
        key = (p, spec)
        if key not in self._cache:
            rows = selected_rows(self.table, p, spec)
            degs = sorted(self.table.degrees[r] for r in rows)
            self._cache[key] = (
                rows,
                degs,
                dict(sorted(Counter(degs).items())),
                Fraction(sum(degs), len(degs)),
            )
        return self._cache[key]

    def degrees(self, p=None, spec=FieldSpec.all()):
        return self.rows(p, spec)[1]

    def counts(self, p=None, spec=FieldSpec.all()) -> dict[int, int]:
        return self.rows(p, spec)[2]

    def acd(self, p=None, spec=FieldSpec.all()) -> Fraction:
        return self.rows(p, spec)[3]


# -- relative counts n_d(G|N) -------------------------------------------------

def _classes_meeting(table: CharTable, n: PermGroup) -> list[int]:
    cd = table.class_data
    return sorted({cd.class_of[x] for x in n.elements()})


def kernel_contains(table: CharTable, row: int, n: PermGroup) -> bool:
    """Is N inside Ker(chi_row)?  chi(x) = chi(1) iff x is in the kernel.

    The mod-q equality is screened first; a passing class is confirmed with
    the exact lifted value (multiplicity vector concentrated at exponent 0).
    """
    deg = table.degrees[row]
    q = table.q_field.q
    for j in _classes_meeting(table, n):
        if int(table.values_mod_q[row][j]) != deg % q:
            return False
        if table.lifted[row][j] != ((0, deg),):
            return False
    return True


def relative_rows(table: CharTable, n: PermGroup) -> tuple[int, ...]:
    """Irr(G|N): rows whose kernel does not contain N."""
    table.group.check_normal(n)
    return tuple(r for r in range(table.n_classes)
                 if not kernel_contains(table, r, n))


def n_d_relative(table: CharTable, n: PermGroup, d: int) -> int:
    return sum(1 for r in relative_rows(table, n) if table.degrees[r] == d)


# -- averages over a fixed central character -----------------------------------

def central_linear_characters(table: CharTable, z: PermGroup) -> list[dict]:
    """All linear characters of a cyclic central subgroup Z.

    Each character is a map element -> exponent l, meaning the value
    zeta_e^l with e the ambient exponent.
    """
    if not table.group.is_central_subgroup(z):
        raise ValueError("subgroup is not central")
    elems = z.elements()
    m = len(elems)
    gen = next((x for x in sorted(elems) if x.order() == m), None)
    if gen is None:
        raise ValueError("central subgroup is not cyclic")
    e = table.q_field.exponent
    assert e % m == 0
    out = []
    for c in range(m):
        lam = {}
        x = table.group.identity()
        for k in range(m):
            lam[x] = (c * k * (e // m)) % e
            x = x * gen
        out.append(lam)
    return out


def _check_homomorphism(lam: dict, z_elems, e: int) -> None:
    for a in z_elems:
        for b in z_elems:
            if (lam[a] + lam[b]) % e != lam[a * b] % e:
                raise ValueError("value pattern is not a homomorphism")


def acd_pprime_over_central(table: CharTable, z: PermGroup, lam: dict,
                            p: int) -> Fraction:
    """Average p'-degree over rows restricting to Z as degree * lambda.

    lam maps each element of Z to the exponent of its value as a power of
    zeta_e.  Z must be central; lam must be a homomorphism.
    """
    _check_prime(p)
    if not table.group.is_central_subgroup(z):
        raise ValueError("subgroup is not central")
    elems = z.elements()
    e = table.q_field.exponent
    if set(lam) != set(elems):
        raise ValueError("value pattern must cover exactly the elements of Z")
    _check_homomorphism(lam, elems, e)
    cd = table.class_data
    matching = []
    for r in range(table.n_classes):
        deg = table.degrees[r]
        ok = True
        for x in elems:
            j = cd.class_of[x]
            assert cd.sizes[j] == 1  # central elements sit in singleton classes
            want = ((lam[x] % e, deg),) if lam[x] % e else ((0, deg),)
            if table.lifted[r][j] != want:
                ok = False
                break
        if ok and deg % p != 0:
            matching.append(deg)
    if not matching:
        raise ValueError("no p'-degree rows lie over the given central character")
    return Fraction(sum(matching), len(matching))
