"""Exact irreducible character tables via Burnside-Dixon-Schneider.

The class-sum structure constants a_ijk act on F_q^k (k = number of
classes, q a prime with q = 1 mod exponent(G) and q > 2*floor(sqrt|G|)).
Their simultaneous eigenvectors, one per irreducible character, carry the
values omega(K_j) = |C_j| chi(g_j) / chi(1) mod q.  Degrees are recovered
from the first orthogonality relation (the q > 2*sqrt|G| bound makes the
square root unique), mod-q values follow, and exact cyclotomic values are
lifted by an inverse DFT over each class representative's power map.

Everything in this module is exact: F_q arithmetic on int64 numpy arrays
and integer multiplicity vectors.  No floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import cyclotomic
from .cyclotomic import RootSum
from .fplinalg import eig_split_rows, inv_mod, mat_mul, rref
from .perm import Permutation
from .permgroup import ClassData, PermGroup


@dataclass(frozen=True)
class WorkingField:
    """Prime field used for the exact table computation."""

    q: int
    w: int          # element of multiplicative order = exponent
    exponent: int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _element_of_order(q: int, e: int) -> int:
    """Element of exact multiplicative order e in F_q (needs e | q-1)."""
    factors = []
    n, d = e, 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for cand in range(2, q):
        w = pow(cand, (q - 1) // e, q)
        if w == 1 and e > 1:
            continue
        if all(pow(w, e // f, q) != 1 for f in factors):
            return w
    if e == 1:
        return 1
    raise RuntimeError(f"no element of order {e} in F_{q}")


def select_prime(exponent: int, order: int, offset: int = 0) -> WorkingField:
    """Smallest prime q = 1 (mod exponent) with q > 2*floor(sqrt(order)).

    offset=m skips to the (m+1)-th admissible prime, for the
    prime-independence cross-check.
    """
    bound = 2 * isqrt(order)
    q = exponent + 1 if exponent > 1 else 2
    skipped = 0
    while True:
        if q > bound and _is_prime(q):
            if skipped == offset:
                assert order % q != 0  # automatic: q = 1 mod exp and q prime
                return WorkingField(q=q, w=_element_of_order(q, exponent),
                                    exponent=exponent)
            skipped += 1
        q += exponent if exponent > 1 else 1


@dataclass
class CharTable:
    """Rows are irreducible characters, columns are conjugacy classes.

    lifted[r][j] is the multiplicity vector of chi_r(g_j) over e-th roots
    of unity, stored sparsely as ((exponent, multiplicity), ...).
    """

    group: PermGroup
    class_data: ClassData
    q_field: WorkingField
    degrees: tuple[int, ...]
    values_mod_q: np.ndarray
    lifted: tuple[tuple[RootSum, ...], ...]
    _row_lookup: dict[bytes, int] = field(default_factory=dict, repr=False)
    _orthogonality_failures: list[str] | None = field(default=None, repr=False)

    @property
    def n_classes(self) -> int:
        return len(self.class_data.reps)

    def row_index(self, values: np.ndarray) -> int | None:
        if not self._row_lookup:
            for r in range(self.n_classes):
                self._row_lookup[self.values_mod_q[r].tobytes()] = r
        return self._row_lookup.get(np.ascontiguousarray(values).tobytes())

    def inverse_classes(self) -> list[int]:
        cd = self.class_data
        return [cd.inverse_class(j) for j in range(len(cd.reps))]


def class_matrix(cd: ClassData, i: int) -> np.ndarray:
    """Structure-constant matrix M[j,k] = #{x in C_i : x^-1 rep_k in C_j}."""
    k = len(cd.reps)
    m = np.zeros((k, k), dtype=np.int64)
    inv_arrays = np.array([x.inverse().images for x in cd.members[i]], dtype=np.intp)
    class_of = cd.class_of
    for kk, rep in enumerate(cd.reps):
        rep_arr = np.asarray(rep.images, dtype=np.intp)
        # (x^-1 * rep)[p] = rep[x^-1[p]] under left-to-right composition
        products = rep_arr[inv_arrays]
        for row in products:
            j = class_of[Permutation(tuple(int(v) for v in row), _checked=True)]
            m[j, kk] += 1
    return m


def _split_spaces(matrices, k: int, q: int) -> list[np.ndarray]:
    """Common eigenspace refinement; matrices yielded lazily in fixed order."""
    spaces = [np.eye(k, dtype=np.int64)]
    for mat in matrices:
        if all(s.shape[0] == 1 for s in spaces):
            break
        action = mat % q
        new_spaces: list[np.ndarray] = []
        for basis in spaces:
            if basis.shape[0] == 1:
                new_spaces.append(basis)
                continue
            transformed = mat_mul(basis, action.T, q)
            _, pivots = rref(basis, q)
            coords = transformed[:, pivots] % q
            pieces = eig_split_rows(coords, q)
            dims = sum(b.shape[0] for _, b in pieces)
            assert dims == basis.shape[0], "restricted action must be diagonalizable"
            for _, coeff in pieces:
                sub = mat_mul(coeff, basis, q)
                sub, _ = rref(sub, q)
                new_spaces.append(sub)
        spaces = new_spaces
    return spaces


def _matrix_order(cd: ClassData) -> list[int]:
    # increasing class size, identity class (never splits anything) skipped
    order = sorted(range(1, len(cd.reps)), key=lambda i: (cd.sizes[i], i))
    return order


def compute_table(group: PermGroup, prime_offset: int = 0) -> CharTable:
    """Full exact character table of a dense-mode group."""
    cached = group._tables.get(prime_offset)
    if cached is not None:
        return cached
    cd = group.conjugacy_classes()
    order = group.order()
    k = len(cd.reps)
    wf = select_prime(cd.exponent, order, offset=prime_offset)
    q = wf.q

    cmat_cache: dict[int, np.ndarray] = {}

    def get_cmat(i: int) -> np.ndarray:
        if i not in cmat_cache:
            cmat_cache[i] = class_matrix(cd, i)
        return cmat_cache[i]

    def matrix_stream():
        for i in _matrix_order(cd):
            yield get_cmat(i)
        # deterministic pseudo-random combinations as a guarded fallback
        rng = random.Random(order * 1_000_003 + q)
        for _ in range(8):
            coeffs = [rng.randrange(q) for _ in range(k)]
            combo = np.zeros((k, k), dtype=np.int64)
            for i in range(1, k):
                if coeffs[i]:
                    combo = (combo + coeffs[i] * get_cmat(i)) % q
            yield combo

    spaces = _split_spaces(matrix_stream(), k, q)
    assert all(s.shape[0] == 1 for s in spaces), "eigenspace splitting incomplete"

    inv_classes = [cd.inverse_class(j) for j in range(k)]
    size_invs = np.array([inv_mod(s % q, q) for s in cd.sizes], dtype=np.int64)
    sqrt_lookup = {(d * d) % q: d for d in range(1, isqrt(order) + 1)}

    degrees: list[int] = []
    rows: list[np.ndarray] = []
    for space in spaces:
        u = space[0] % q
        assert u[0] != 0, "identity-class coordinate must be nonzero"
        u = (u * inv_mod(int(u[0]), q)) % q
        s = int(np.sum(u * u[inv_classes] % q * size_invs % q) % q)
        assert s != 0
        d_sq = (order % q) * inv_mod(s, q) % q
        d = sqrt_lookup.get(d_sq)
        assert d is not None, "degree square root not found"
        row = (d * u % q) * size_invs % q
        degrees.append(d)
        rows.append(row)

    assert sum(d * d for d in degrees) == order, "sum of squared degrees must be |G|"
    values = np.stack(rows) % q

    lifted_rows = _lift_all(values, degrees, cd, wf)

    # deterministic row order: by degree, then by the exact lifted values
    perm = sorted(range(k), key=lambda r: (degrees[r], lifted_rows[r]))
    degrees = [degrees[r] for r in perm]
    values = values[perm]
    lifted_rows = [lifted_rows[r] for r in perm]

    assert degrees[0] == 1 and all(v == 1 for v in values[0]), "row 0 must be trivial"
    assert [int(v) for v in values[:, 0]] == degrees, "identity column must list degrees"
    assert all(order % d == 0 for d in degrees), "degrees must divide |G|"

    table = CharTable(
        group=group,
        class_data=cd,
        q_field=wf,
        degrees=tuple(degrees),
        values_mod_q=values,
        lifted=tuple(tuple(r) for r in lifted_rows),
    )
    group._tables[prime_offset] = table
    return table


def _lift_all(values: np.ndarray, degrees: list[int], cd: ClassData,
              wf: WorkingField) -> list[list[RootSum]]:
    """Exact character values for every row and class (inverse DFT mod q)."""
    q, w, e = wf.q, wf.w, wf.exponent
    k = values.shape[0]
    dft_cache: dict[int, np.ndarray] = {}
    out: list[list[RootSum]] = [[] for _ in range(k)]
    for j in range(len(cd.reps)):
        m = cd.element_orders[j]
        zm = dft_cache.get(m)
        if zm is None:
            z_inv = inv_mod(pow(w, e // m, q), q)
            pows = np.array([pow(z_inv, t, q) for t in range(m)], dtype=np.int64)
            idx = (np.arange(m)[:, None] * np.arange(m)[None, :]) % m
            zm = pows[idx]           # zm[kk, t] = z^(-kk*t)
            dft_cache[m] = zm
        power_classes = list(cd.power_map[j])
        col_block = values[:, power_classes]            # chi(g^kk), rows x m
        mults = mat_mul(col_block, zm, q) * inv_mod(m % q, q) % q
        step = e // m
        for r in range(k):
            row_m = mults[r]
            deg = degrees[r]
            bad = row_m[row_m > deg]
            if bad.size:
                raise RuntimeError(
                    f"lifted multiplicity {int(bad[0])} exceeds degree {deg} "
                    f"(row {r}, class {j}): inconsistent table")
            if int(row_m.sum()) != deg:
                raise RuntimeError(
                    f"lifted multiplicities sum to {int(row_m.sum())} != degree "
                    f"{deg} (row {r}, class {j}): inconsistent table")
            ts = np.nonzero(row_m)[0]
            # t*step < e for t < m, so exponents are distinct and ascending
            out[r].append(tuple((int(t) * step, int(row_m[t])) for t in ts))
    return out


def lift_values(table: CharTable, row: int, class_index: int) -> RootSum:
    """Multiplicity vector of chi_row(g_class) over e-th roots of unity."""
    return table.lifted[row][class_index]


def verify_orthogonality(table: CharTable) -> bool:
    """First and second orthogonality mod q, plus exact first orthogonality
    over the lifted cyclotomic values.  False leaves a located failure
    report in orthogonality_failures()."""
    if table._orthogonality_failures is None:
        table._orthogonality_failures = _orthogonality_failures(table)
    return not table._orthogonality_failures


def orthogonality_failures(table: CharTable) -> list[str]:
    verify_orthogonality(table)
    return list(table._orthogonality_failures or [])


def _orthogonality_failures(table: CharTable) -> list[str]:
    cd = table.class_data
    q = table.q_field.q
    e = table.q_field.exponent
    order = table.group.order()
    k = table.n_classes
    v = table.values_mod_q
    inv_classes = table.inverse_classes()
    sizes = np.array(cd.sizes, dtype=np.int64) % q
    failures: list[str] = []

    w = v[:, inv_classes]
    gram = mat_mul(v * sizes[None, :] % q, w.T, q)
    want = (np.eye(k, dtype=np.int64) * (order % q)) % q
    for r, s in zip(*np.nonzero(gram != want)):
        failures.append(f"first orthogonality mod q fails at rows ({r},{s})")

    col = mat_mul(w.T, v, q)
    cent = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        cent[j, j] = (order // cd.sizes[j]) % q
    for j, kk in zip(*np.nonzero(col != cent)):
        failures.append(f"second orthogonality mod q fails at classes ({j},{kk})")

    if failures:
        return failures

    # exact first orthogonality over the lifted values
    lifted = table.lifted
    single_term = all(len(val) == 1 for row in lifted for val in row)
    red_table = cyclotomic.reduction_table(e)
    if single_term:
        # common fast case (all linear characters): vectorize per row pair
        exps = np.array([[val[0][0] for val in row] for row in lifted],
                        dtype=np.int64)
        mults = np.array([[val[0][1] for val in row] for row in lifted],
                         dtype=np.int64)
        sizes_full = np.array(cd.sizes, dtype=np.int64)
        for r in range(k):
            weights_r = sizes_full * mults[r]
            for s in range(r, k):
                diff = (exps[r] - exps[s]) % e
                acc_vec = np.zeros(e, dtype=np.int64)
                np.add.at(acc_vec, diff, weights_r * mults[s])
                reduced = acc_vec @ red_table
                target = order if r == s else 0
                reduced[0] -= target
                if np.any(reduced):
                    failures.append(
                        f"exact first orthogonality fails at rows ({r},{s})")
        return failures
    for r in range(k):
        for s in range(r, k):
            acc: dict[int, int] = {}
            for j in range(k):
                size = cd.sizes[j]
                right = lifted[s][j]
                for l1, m1 in lifted[r][j]:
                    for l2, m2 in right:
                        key = (l1 - l2) % e
                        acc[key] = acc.get(key, 0) + size * m1 * m2
            target = order if r == s else 0
            value = cyclotomic.reduce_to_integer(acc, e)
            if value != target:
                failures.append(
                    f"exact first orthogonality fails at rows ({r},{s}): "
                    f"got {value}, want {target}")
    return failures


# -- export ---------------------------------------------------------------

def table_document(table: CharTable) -> dict:
    """Machine-readable table export (JSON-serializable, deterministic)."""
    from .fields import minimal_field_label
    cd = table.class_data
    e = table.q_field.exponent
    primes = []
    n, d = e, 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return {
        "order": table.group.order(),
        "degree": table.group.degree,
        "num_classes": table.n_classes,
        "exponent": table.q_field.exponent,
        "q": table.q_field.q,
        "w": table.q_field.w,
        "classes": [
            {
                "rep": cd.reps[j].cycle_string(),
                "size": cd.sizes[j],
                "element_order": cd.element_orders[j],
            }
            for j in range(table.n_classes)
        ],
        "degrees": list(table.degrees),
        "row_fields": [minimal_field_label(table, r, primes)
                       for r in range(table.n_classes)],
        "values_mod_q": table.values_mod_q.tolist(),
        "lifted": [[cyclotomic.render(vv) for vv in row] for row in table.lifted],
    }


def format_table(table: CharTable) -> str:
    """Plain-text rendering with exact values (z = primitive e-th root)."""
    doc = table_document(table)
    lines = [
        f"|G| = {doc['order']}   classes = {doc['num_classes']}   "
        f"exponent = {doc['exponent']}   q = {doc['q']}  (z = primitive "
        f"{doc['exponent']}-th root of unity)",
    ]
    headers = ["chi"] + [c["rep"] for c in doc["classes"]]
    lines.append("class sizes:   " + " ".join(str(c["size"]) for c in doc["classes"]))
    lines.append("element orders:" + " " + " ".join(
        str(c["element_order"]) for c in doc["classes"]))
    widths = [max(len(h), 10) for h in headers]
    rows = []
    for r in range(doc["num_classes"]):
        row = [f"X{r} (deg {table.degrees[r]})"] + doc["lifted"][r]
        rows.append(row)
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines.append(" | ".join(h.ljust(w) for h, w in zip(headers, widths)))
    for row in rows:
        lines.append(" | ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)
