"""Exact sparse linear algebra over a field object from ``fields``.

Vectors are sparse dicts ``{index: scalar}`` with no explicit zeros.
Matrices are column-major tuples of such dicts.  Everything is exact; the
elimination keeps a fully reduced row-echelon basis, so results depend only
on insertion order, which callers fix deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ImageNotInKernel


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major sparse matrix: cols[j] maps row index -> scalar."""

    nrows: int
    ncols: int
    cols: tuple

    def __post_init__(self):
        assert len(self.cols) == self.ncols
        # indices in range, no stored zeros (cheap spot check, full scan is fine
        # at the sizes this package sees)
        for col in self.cols:
            for r in col:
                assert 0 <= r < self.nrows

    def column(self, j: int) -> dict:
        return dict(self.cols[j])


class RowBasis:
    """Incremental reduced row-echelon span of sparse vectors.

    Rows are kept fully reduced against one another: each stored row has a
    pivot (its leftmost nonzero index) and every other stored row is zero at
    that pivot.  With ``track=True`` each row also carries its expression in
    terms of the original inserted vectors, which is what kernel extraction
    and membership certificates need.
    """

    QUERY = object()  # tag used by express() for the queried vector

    def __init__(self, field, track: bool = False):
        self.field = field
        self.track = track
        self.rows = []  # list of [pivot, vec, coeffs|None]
        self._by_pivot = {}  # pivot index -> position in rows
        self.n_inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, coeffs):
        """Fully reduce vec against the basis; mutates and returns (vec, coeffs)."""
        f = self.field
        while True:
            piv_cols = [c for c in vec if c in self._by_pivot]
            if not piv_cols:
                return vec, coeffs
            # smallest pivot first: eliminations only introduce entries to
            # the right, so this terminates after at most rank rounds
            c = min(piv_cols)
            _, rvec, rcoeffs = self.rows[self._by_pivot[c]]
            factor = f.div(vec[c], rvec[c])
            for col, val in rvec.items():
                cur = f.sub(vec.get(col, f.zero), f.mul(factor, val))
                if f.is_zero(cur):
                    vec.pop(col, None)
                else:
                    vec[col] = cur
            if coeffs is not None and rcoeffs is not None:
                for tag, val in rcoeffs.items():
                    cur = f.sub(coeffs.get(tag, f.zero), f.mul(factor, val))
                    if f.is_zero(cur):
                        coeffs.pop(tag, None)
                    else:
                        coeffs[tag] = cur
        # not reached

    def _scale(self, vec: dict, coeffs):
        """Canonical scaling of (vec, coeffs) via the field's row normalizer."""
        f = self.field
        scaled = f.normalize_row(vec)
        if coeffs:
            pivot = min(vec)
            factor = f.div(scaled[pivot], vec[pivot])
            coeffs = {t: f.mul(factor, v) for t, v in coeffs.items()}
        return scaled, coeffs

    def insert(self, vec: dict, tag=None):
        """Insert a vector. Returns (added, dependency).

        added is True when the rank grew; dependency is None in that case.
        When the vector is dependent, dependency maps tags of previously
        inserted vectors (plus this vector's own tag) to scalars λ with
        Σ λ_t · original_t = 0 — a kernel certificate.
        """
        f = self.field
        if tag is None:
            tag = self.n_inserted
        self.n_inserted += 1
        coeffs = {tag: f.one} if self.track else None
        vec, coeffs = self._reduce(dict(vec), coeffs)
        if not vec:
            return False, (coeffs if self.track else {})
        vec, coeffs = self._scale(vec, coeffs)
        pivot = min(vec)
        # back-substitute so older rows are zero at the new pivot
        for row in self.rows:
            rvec = row[1]
            if pivot not in rvec:
                continue
            factor = f.div(rvec[pivot], vec[pivot])
            for col, val in vec.items():
                cur = f.sub(rvec.get(col, f.zero), f.mul(factor, val))
                if f.is_zero(cur):
                    rvec.pop(col, None)
                else:
                    rvec[col] = cur
            if self.track and row[2] is not None and coeffs is not None:
                rcoeffs = row[2]
                for t, val in coeffs.items():
                    cur = f.sub(rcoeffs.get(t, f.zero), f.mul(factor, val))
                    if f.is_zero(cur):
                        rcoeffs.pop(t, None)
                    else:
                        rcoeffs[t] = cur
        self._by_pivot[pivot] = len(self.rows)
        self.rows.append([pivot, vec, coeffs])
        return True, None

    def contains(self, vec: dict) -> bool:
        red, _ = self._reduce(dict(vec), None)
        return not red

    def express(self, vec: dict):
        """Write vec as a combination of the inserted vectors.

        Returns {tag: scalar} with vec = Σ scalar_t · original_t, or None
        when vec is outside the span.  Requires track=True.
        """
        assert self.track, "express() needs coefficient tracking"
        f = self.field
        coeffs = {self.QUERY: f.one}
        red, coeffs = self._reduce(dict(vec), coeffs)
        if red:
            return None
        # 0 = vec + Σ coeffs[t]·orig_t  (coeffs[QUERY] stayed 1)
        return {t: f.neg(v) for t, v in coeffs.items() if t is not self.QUERY}

    def reduce_mod(self, vec: dict) -> dict:
        """The canonical representative of vec modulo the span."""
        red, _ = self._reduce(dict(vec), None)
        return red


def rank(field, matrix: SparseMatrix) -> int:
    basis = RowBasis(field)
    for col in matrix.cols:
        basis.insert(col)
    return basis.rank


def kernel_basis(field, matrix: SparseMatrix):
    """Kernel vectors (in column coordinates), deterministic order.

    Satisfies rank + len(kernel) = ncols by construction; asserted.
    """
    basis = RowBasis(field, track=True)
    out = []
    for j, col in enumerate(matrix.cols):
        added, dep = basis.insert(col, tag=j)
        if not added:
            out.append(field.normalize_row(dep))
    assert basis.rank + len(out) == matrix.ncols
    return out


def image_membership(field, matrix: SparseMatrix, vec: dict):
    """Coefficients expressing vec over the matrix columns, or None."""
    basis = RowBasis(field, track=True)
    for j, col in enumerate(matrix.cols):
        basis.insert(col, tag=j)
    return basis.express(vec)


def quotient_basis(field, kernel_vecs, image_vecs):
    """Representatives of span(kernel)/span(image); requires im ⊆ ker.

    Returns the reduced-echelon completion of the image basis inside the
    kernel span: deterministic given the input orders.
    """
    ker_span = RowBasis(field)
    for v in kernel_vecs:
        ker_span.insert(v)
    combined = RowBasis(field)
    for v in image_vecs:
        if not ker_span.contains(v):
            raise ImageNotInKernel("image vector outside the kernel span")
        combined.insert(v)
    rep_rows = []
    for v in kernel_vecs:
        before = combined.rank
        combined.insert(v)
        if combined.rank > before:
            rep_rows.append(combined.rank - 1)
    # snapshot after all insertions: rows are then fully back-substituted,
    # i.e. the reduced-echelon completion of the image basis
    return [dict(combined.rows[i][1]) for i in rep_rows]
