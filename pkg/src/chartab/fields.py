"""Fields of character values via the Galois action on table rows.

For k coprime to the exponent e, sigma_k sends chi to the character
g -> chi(g^k); a row has values in Q iff it is fixed by every sigma_k, in
R iff fixed by sigma_{e-1}, and in Q_p = Q(zeta_p) iff fixed by every
sigma_k with k = 1 (mod p) when p | e (when p does not divide e this
degenerates to the rational test, since Q(zeta_p) meets Q(zeta_e) in Q).

Row comparisons happen mod q, which is sound because the mod-q table is
nonsingular, so distinct rows stay distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .chartable import CharTable


@dataclass(frozen=True)
class FieldSpec:
    kind: str                  # "all" | "rational" | "real" | "cyclotomic"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("all", "rational", "real", "cyclotomic"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "cyclotomic":
            if self.p is None or self.p < 2:
                raise ValueError("CyclotomicP needs a prime p")
        elif self.p is not None:
            raise ValueError(f"field kind {self.kind!r} takes no prime")

    @staticmethod
    def all() -> "FieldSpec":
        return FieldSpec("all")

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec("rational")

    @staticmethod
    def real() -> "FieldSpec":
        return FieldSpec("real")

    @staticmethod
    def cyclotomic(p: int) -> "FieldSpec":
        return FieldSpec("cyclotomic", p)

    def label(self) -> str:
        return {"all": "C", "rational": "Q", "real": "R",
                "cyclotomic": f"Q{self.p}"}[self.kind]


def field_from_label(label: str, p: int | None = None) -> FieldSpec:
    """CLI names: C (all), Q, R, Qp (needs --prime)."""
    if label == "C":
        return FieldSpec.all()
    if label == "Q":
        return FieldSpec.rational()
    if label == "R":
        return FieldSpec.real()
    if label == "Qp":
        if p is None:
            raise ValueError("field Qp needs a prime")
        return FieldSpec.cyclotomic(p)
    raise ValueError(f"unknown field label {label!r} (expected Q, Qp, R or C)")


def _power_index(table: CharTable, k: int) -> list[int]:
    cd = table.class_data
    return [cd.class_power(j, k) for j in range(len(cd.reps))]


def _fixed_rows(table: CharTable, k: int) -> np.ndarray:
    """Boolean mask of rows fixed by sigma_k (cached per table)."""
    cache = getattr(table, "_galois_fixed_cache", None)
    if cache is None:
        cache = {}
        table._galois_fixed_cache = cache
    k = k % table.q_field.exponent
    mask = cache.get(k)
    if mask is None:
        idx = _power_index(table, k)
        mask = np.all(table.values_mod_q[:, idx] == table.values_mod_q, axis=1)
        cache[k] = mask
    return mask


def galois_image_row(table: CharTable, row: int, k: int) -> int:
    """Index of the row sigma_k(chi_row); k must be coprime to the exponent."""
    e = table.q_field.exponent
    if gcd(k, e) != 1:
        raise ValueError(f"k={k} is not coprime to the exponent {e}")
    idx = _power_index(table, k)
    target = table.values_mod_q[row][idx]
    image = table.row_index(target)
    if image is None:
        raise RuntimeError("Galois action did not permute the rows: "
                           "inconsistent table")
    return image


def _coprime_residues(e: int) -> list[int]:
    return [k for k in range(1, e + 1) if gcd(k, e) == 1]


def in_field(table: CharTable, row: int, spec: FieldSpec) -> bool:
    """Do all values of the row lie in the given field?"""
    kind = spec.kind
    if kind == "all":
        return True
    e = table.q_field.exponent
    if kind == "rational":
        return all(bool(_fixed_rows(table, k)[row]) for k in _coprime_residues(e))
    if kind == "real":
        return bool(_fixed_rows(table, (e - 1) % e if e > 1 else 0)[row])
    # cyclotomic
    p = spec.p
    if e % p != 0:
        return in_field(table, row, FieldSpec.rational())
    ks = [k for k in _coprime_residues(e) if k % p == 1]
    return all(bool(_fixed_rows(table, k)[row]) for k in ks)


def field_rows(table: CharTable, spec: FieldSpec) -> tuple[int, ...]:
    """Row indices whose values lie in the field; always contains row 0."""
    kind = spec.kind
    k = table.n_classes
    if kind == "all":
        return tuple(range(k))
    e = table.q_field.exponent
    if kind == "rational":
        ks = _coprime_residues(e)
    elif kind == "real":
        ks = [(e - 1) % e if e > 1 else 1]
    else:
        if e % spec.p != 0:
            return field_rows(table, FieldSpec.rational())
        ks = [kk for kk in _coprime_residues(e) if kk % spec.p == 1]
    mask = np.ones(k, dtype=bool)
    for kk in ks:
        mask &= _fixed_rows(table, kk)
    rows = tuple(int(r) for r in np.nonzero(mask)[0])
    assert 0 in rows
    return rows


def minimal_field_label(table: CharTable, row: int, primes) -> str:
    """Smallest detected membership among Q, R, Qp (given primes), C."""
    if in_field(table, row, FieldSpec.rational()):
        return "Q"
    labels = []
    if in_field(table, row, FieldSpec.real()):
        labels.append("R")
    for p in primes:
        if in_field(table, row, FieldSpec.cyclotomic(p)):
            labels.append(f"Q{p}")
    return ",".join(labels) if labels else "C"
