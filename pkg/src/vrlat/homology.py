"""Reduced simplicial homology from sparse boundary matrices.

Betti numbers over Z/2 come from left-to-right column reduction with the
clearing optimization (dimensions processed top down, so each reduced
matrix's pivot rows identify columns of the next matrix that reduce to
zero and can be skipped).  Columns are carried as Python int bitsets; the
public matrix type keeps the sorted row-index form.

Integer homology goes through the Smith normal form: unit (+-1) pivots are
eliminated sparsely first, which is unimodular and usually consumes the
whole matrix; whatever residual remains is handed to sympy's exact SNF.
Torsion of the k-th reduced group is read off the invariant factors of the
(k+1)-boundary.
"""

import heapq
from dataclasses import dataclass

from .complexes import Complex


class MatrixTooLarge(RuntimeError):
    """Raised when an exact SNF request exceeds the size guard."""

    def __init__(self, dim: int, n_rows: int, n_cols: int, limit: int):
        self.dim = dim
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.limit = limit
        super().__init__(
            f"boundary matrix for dimension {dim} is {n_rows} x {n_cols}; "
            f"exact integer reduction is guarded to {limit} rows/columns"
        )


class TruncatedComplex(ValueError):
    """Raised when a computation needs dimensions beyond what was built."""


@dataclass(frozen=True)
class SparseBoundaryMatrix:
    """Columns of the dim-th boundary operator as sorted face-index tuples."""

    dim: int
    cols: tuple[tuple[int, ...], ...]
    n_rows: int


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers b0..b_complete_through.

    Entries above complete_through are unknowable from the built complex
    and are absent rather than zero.
    """

    coeff: str
    values: tuple[int, ...]
    complete_through: int

    def __post_init__(self):
        if self.coeff not in ("z2", "int"):
            raise ValueError(f"unknown coefficient tag {self.coeff!r}")
        if len(self.values) != self.complete_through + 1:
            raise ValueError("values must cover exactly dimensions 0..complete_through")


@dataclass(frozen=True)
class SNFDiagonal:
    """Nonzero Smith normal form diagonal of a boundary operator."""

    dim: int
    diag: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.diag, self.diag[1:]):
            if a == 0 or b % a != 0:
                raise ValueError("diagonal must form a divisibility chain")


def boundary_matrix(k: Complex, dim: int) -> SparseBoundaryMatrix:
    """Face indices of every dim-simplex, in canonical column order."""
    if dim < 1:
        raise ValueError("boundary_matrix is defined for dimension >= 1")
    if dim > k.max_dim:
        raise TruncatedComplex(f"dimension {dim} not built (max_dim={k.max_dim})")
    cols = []
    for s in k.simplices[dim]:
        faces = [k.index_of(dim - 1, s[:i] + s[i + 1:]) for i in range(dim + 1)]
        cols.append(tuple(sorted(faces)))
    return SparseBoundaryMatrix(dim, tuple(cols), len(k.simplices[dim - 1]))


# above this many rows, a column held as one big int costs rows/8 bytes
# no matter how sparse it is, so the reducer switches to sorted index lists
_DENSE_ROW_LIMIT = 40000


def _face_positions(k: Complex, dim: int) -> dict:
    return {s: i for i, s in enumerate(k.simplices[dim - 1])}


def _gf2_columns_dense(k: Complex, dim: int):
    # generator: raw columns are consumed one at a time, so only the
    # reduced pivot columns stay resident
    pos = _face_positions(k, dim)
    for s in k.simplices[dim]:
        bits = 0
        for i in range(dim + 1):
            bits |= 1 << pos[s[:i] + s[i + 1:]]
        yield bits


def _gf2_columns_sparse(k: Complex, dim: int):
    pos = _face_positions(k, dim)
    for s in k.simplices[dim]:
        yield sorted(pos[s[:i] + s[i + 1:]] for i in range(dim + 1))


def _xor_sorted(a: list[int], b: list[int]) -> list[int]:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif x > y:
            out.append(y)
            j += 1
        else:
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def _reduce_gf2_dense(columns, cleared: set[int]) -> set[int]:
    """Left-to-right reduction over int-bitset columns; returns pivot rows."""
    lows: dict[int, int] = {}
    for j, col in enumerate(columns):
        if j in cleared:
            continue
        c = col
        while c:
            low = c.bit_length() - 1
            settled = lows.get(low)
            if settled is None:
                lows[low] = c
                break
            c ^= settled
    return set(lows)


def _reduce_gf2_sparse(columns, cleared: set[int]) -> set[int]:
    """Same reduction over sorted-index-list columns (merge-XOR addition)."""
    lows: dict[int, list[int]] = {}
    for j, col in enumerate(columns):
        if j in cleared:
            continue
        c = col
        while c:
            low = c[-1]
            settled = lows.get(low)
            if settled is None:
                lows[low] = c
                break
            c = _xor_sorted(c, settled)
    return set(lows)


def _reduce_rank_and_pivots(k: Complex, dim: int, cleared: set[int]) -> tuple[int, set[int]]:
    if len(k.simplices[dim - 1]) > _DENSE_ROW_LIMIT:
        pivots = _reduce_gf2_sparse(_gf2_columns_sparse(k, dim), cleared)
    else:
        pivots = _reduce_gf2_dense(_gf2_columns_dense(k, dim), cleared)
    return len(pivots), pivots


def betti_z2(k: Complex, through: int) -> BettiVector:
    """Reduced Z/2 Betti numbers b0..b_through.

    b_d = f_d - rank d_d - rank d_{d+1}.  Dimensions whose upper boundary
    was not built are dropped from the result (complete_through marks the
    last reliable entry); a complete complex supports any through.
    """
    if through < 0:
        raise ValueError("through must be nonnegative")
    ct = through if k.complete else min(through, k.max_dim - 1)
    top = min(ct + 1, k.max_dim)
    ranks = {0: 1 if k.f_vector[0] else 0}
    cleared: set[int] = set()
    for d in range(top, 0, -1):
        ranks[d], cleared = _reduce_rank_and_pivots(k, d, cleared)
    values = []
    for d in range(ct + 1):
        f_d = k.f_vector[d] if d <= k.max_dim else 0
        values.append(f_d - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return BettiVector(coeff="z2", values=tuple(values), complete_through=ct)


def _integer_columns(k: Complex, dim: int):
    # generator over sparse signed columns; the face-position dict is local
    # so nothing outlives the consumer
    pos = _face_positions(k, dim)
    for s in k.simplices[dim]:
        yield {
            pos[s[:i] + s[i + 1:]]: (-1 if i % 2 else 1) for i in range(dim + 1)
        }


def _snf_residual(cols: dict[int, dict[int, int]]) -> list[int]:
    """Exact SNF diagonal of a matrix with no unit entries left."""
    if not cols:
        return []
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form

    row_ids = sorted({r for col in cols.values() for r in col})
    row_pos = {r: i for i, r in enumerate(row_ids)}
    dense = [[0] * len(cols) for _ in row_ids]
    for j, col_id in enumerate(sorted(cols)):
        for r, v in cols[col_id].items():
            dense[row_pos[r]][j] = v
    snf = smith_normal_form(Matrix(dense))
    out = []
    for i in range(min(snf.rows, snf.cols)):
        v = abs(int(snf[i, i]))
        if v:
            out.append(v)
    return sorted(out)


# the non-unit residual is densified for sympy, so refuse absurd leftovers
# instead of hanging
_RESIDUAL_LIMIT = 5000


def smith_diagonal(columns, dim: int = 0) -> SNFDiagonal:
    """Invariant factors of an integer matrix given as sparse columns.

    Accepts any iterable of {row: value} columns.  Unit pivots are
    eliminated first (cheapest fill by Markowitz cost, ties by row then
    column), each contributing an invariant factor 1; the residual, if
    any, goes through sympy's exact Smith normal form.

    The heap holds roughly one candidate entry per live column: popping a
    dead or demoted candidate rescans just that column, so the heap stays
    small even when elimination churns millions of entries.
    """
    cols: dict[int, dict[int, int]] = {
        j: dict(col) for j, col in enumerate(columns) if col
    }
    rows: dict[int, set[int]] = {}
    for j, col in cols.items():
        for r in col:
            rows.setdefault(r, set()).add(j)

    heap: list[tuple[int, int, int]] = []
    cand: dict[int, int] = {}  # cheapest cost currently pushed per column

    def push_candidate(j: int) -> None:
        col = cols[j]
        best = None
        for r, v in col.items():
            if v in (1, -1):
                key = (len(rows[r]), r)
                if best is None or key < best:
                    best = key
        if best is None:
            cand.pop(j, None)
        else:
            cost = (best[0] - 1) * (len(col) - 1)
            cand[j] = cost
            heapq.heappush(heap, (cost, best[1], j))

    for j in sorted(cols):
        push_candidate(j)

    units = 0
    while heap:
        cost, r, j = heapq.heappop(heap)
        col = cols.get(j)
        if col is None:
            continue
        if col.get(r) not in (1, -1):
            push_candidate(j)  # candidate died; rescan the column
            continue
        current = (len(rows[r]) - 1) * (len(col) - 1)
        if current > cost:
            cand[j] = current
            heapq.heappush(heap, (current, r, j))  # stale, reinsert at true cost
            continue
        pivot_col = cols.pop(j)
        cand.pop(j, None)
        p = pivot_col[r]
        for r2 in pivot_col:
            rows[r2].discard(j)
        # column ops clear row r; the implicit row op clearing column j
        # touches nothing else because row r is then zero outside j
        for j2 in list(rows.get(r, ())):
            target = cols[j2]
            factor = target[r] * p
            for r2, v in pivot_col.items():
                new = target.get(r2, 0) - factor * v
                if new:
                    if r2 not in target:
                        rows[r2].add(j2)
                    target[r2] = new
                    if new in (1, -1):
                        unit_cost = (len(rows[r2]) - 1) * (len(target) - 1)
                        if cand.get(j2, unit_cost + 1) > unit_cost:
                            cand[j2] = unit_cost
                            heapq.heappush(heap, (unit_cost, r2, j2))
                else:
                    target.pop(r2, None)
                    rows[r2].discard(j2)
            if not target:
                del cols[j2]
                cand.pop(j2, None)
        rows.pop(r, None)
        units += 1
    if len(cols) > _RESIDUAL_LIMIT:
        raise MatrixTooLarge(dim, len(rows), len(cols), _RESIDUAL_LIMIT)
    diag = [1] * units + _snf_residual(cols)
    return SNFDiagonal(dim, tuple(diag))


def homology_integer(
    k: Complex, dim: int, max_cols: int = 20000
) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion coefficients of the dim-th reduced group.

    Needs exact Smith normal forms of the dim and dim+1 boundaries, so the
    complex must be built through dim+1 (or be complete).  Guarded against
    matrices above max_cols rows or columns.
    """
    if dim < 0:
        raise ValueError("dimension must be nonnegative")
    if dim > k.max_dim:
        if k.complete:
            return (0, ())
        raise TruncatedComplex(f"dimension {dim} not built (max_dim={k.max_dim})")
    if dim == k.max_dim and not k.complete:
        raise TruncatedComplex(
            f"dimension {dim+1} boundary unavailable (max_dim={k.max_dim}, truncated)"
        )
    f = k.f_vector

    def checked_rank_and_diag(d):
        if d < 1 or d > k.max_dim or f[d] == 0:
            return 0, SNFDiagonal(d, ())
        if f[d] > max_cols or f[d - 1] > max_cols:
            raise MatrixTooLarge(d, f[d - 1], f[d], max_cols)
        snf = smith_diagonal(_integer_columns(k, d), d)
        return len(snf.diag), snf

    rank_lower, _ = checked_rank_and_diag(dim)
    if dim == 0:
        rank_lower = 1 if f[0] else 0
    rank_upper, snf_upper = checked_rank_and_diag(dim + 1)
    torsion = tuple(v for v in snf_upper.diag if v > 1)
    return (f[dim] - rank_lower - rank_upper, torsion)


def euler_characteristic(k: Complex) -> int:
    """Alternating sum of the f-vector; demands a complete complex."""
    if not k.complete:
        raise TruncatedComplex("Euler characteristic requires a complete complex")
    return sum((-1) ** d * n for d, n in enumerate(k.f_vector))
