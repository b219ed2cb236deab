"""Hochschild cochains on parallel pairs, their differentials, and cohomology.

A degree-m cochain assigns scalars to pairs (p, b) with p an ambiguity of
degree m-1 and b a parallel basis path.  The differential against an output
ambiguity q branches on the parity of q's degree, mirroring the resolution
differential; `differential_via_resolution` computes the same map by
composing with the resolution's d and is kept as an independent route.
"""

from dataclasses import dataclass, field as dc_field

from .ambiguities import AmbiguityTable
from .errors import NotACocycle, NotTriangular, WrongDegree
from .linalg import RowBasis, SparseMatrix, kernel_basis, quotient_basis
from .quivers import divisor_occurrences
from .resolution import differential, generator


def pair_basis(table, degree):
    """Ordered (ambiguity, parallel basis path) pairs spanning degree-m cochains."""
    assert degree >= 0
    alg = table.algebra
    out = []
    for amb in table.degree(degree - 1):
        p = amb.path
        for b in alg.basis:
            if b.source == p.source and b.target == p.target:
                out.append((amb, b))
    out.sort(key=lambda pair: (pair[0].path.sort_key(), pair[1].sort_key()))
    return out


class Cochain:
    __slots__ = ("table", "degree", "coeffs")

    def __init__(self, table, degree, coeffs=None):
        self.table = table
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for (amb, b), c in coeffs.items():
                self.add_pair(amb, b, c)

    def add_pair(self, amb, b, coeff):
        assert amb.degree == self.degree - 1
        assert amb.path.source == b.source and amb.path.target == b.target
        assert self.table.algebra.is_basis(b)
        field = self.table.algebra.field
        if field.is_zero(coeff):
            return
        key = (amb, b)
        c = field.add(self.coeffs.get(key, field.zero), coeff)
        if field.is_zero(c):
            self.coeffs.pop(key, None)
        else:
            self.coeffs[key] = c

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        assert self.degree == other.degree and self.table is other.table
        out = Cochain(self.table, self.degree, self.coeffs)
        for (amb, b), c in other.coeffs.items():
            out.add_pair(amb, b, c)
        return out

    def __sub__(self, other):
        assert self.degree == other.degree and self.table is other.table
        field = self.table.algebra.field
        out = Cochain(self.table, self.degree, self.coeffs)
        for (amb, b), c in other.coeffs.items():
            out.add_pair(amb, b, field.neg(c))
        return out

    def scale(self, scalar):
        field = self.table.algebra.field
        out = Cochain(self.table, self.degree)
        for (amb, b), c in self.coeffs.items():
            out.add_pair(amb, b, field.mul(scalar, c))
        return out

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("Cochain is mutable")

    def terms_sorted(self):
        return sorted(
            self.coeffs.items(),
            key=lambda kv: (kv[0][0].path.sort_key(), kv[0][1].sort_key()),
        )

    def display(self):
        if not self.coeffs:
            return "0"
        bits = []
        for (amb, b), c in self.terms_sorted():
            bits.append("%s [%s || %s]" % (c, amb.path.word() or amb.path.display(), b.word() or b.display()))
        return " + ".join(bits)

    def __repr__(self):
        return "Cochain(%d, %s)" % (self.degree, self.display())


def pair_cochain(table, amb, b, coeff=1):
    field = table.algebra.field
    return Cochain(table, amb.degree + 1, {(amb, b): field.from_int(coeff) if isinstance(coeff, int) else coeff})


def unit_cochain(table):
    """The sum of all vertex pairs; a cocycle representing the unit class."""
    q = table.algebra.quiver
    out = Cochain(table, 0)
    one = table.algebra.field.one
    for amb in table.degree(-1):
        out.add_pair(amb, amb.path, one)
    return out


def _pair_differential_terms(table, amb, b):
    """Direct evaluation of the differential of the basis pair (amb, b)."""
    alg = table.algebra
    m = amb.degree + 1  # degree of the output ambiguities
    p = amb.path
    out = {}

    def bump(q, value, sign):
        if value is None:
            return
        key = (q, value)
        out[key] = out.get(key, 0) + sign

    if m % 2 == 0:
        for q in table.degree(m):
            qp = q.path
            head_amb = table.amb_prefix(q, m - 1)
            if head_amb.path == p:
                tail = qp.segment(len(p), len(qp))
                bump(q, alg.reduce_concat(b, tail), 1)
            tail_amb = table.amb_suffix(q, m - 1)
            if tail_amb.path == p:
                head = qp.segment(0, len(qp) - len(p))
                bump(q, alg.reduce_concat(head, b), -1)
    else:
        for q in table.degree(m):
            for occ in divisor_occurrences(p, q.path):
                bump(q, alg.reduce_concat(occ.prefix, b, occ.suffix), 1)
    return {k: c for k, c in out.items() if c}


def cochain_differential(table, x):
    field = table.algebra.field
    out = Cochain(table, x.degree + 1)
    for (amb, b), c in x.coeffs.items():
        for (q, value), n in _pair_differential_terms(table, amb, b).items():
            out.add_pair(q, value, field.mul(c, field.from_int(n)))
    return out


def differential_via_resolution(table, x):
    """The same differential as Hom(d, A); independent of the direct formula."""
    alg = table.algebra
    field = alg.field
    m = x.degree
    out = Cochain(table, m + 1)
    for q in table.degree(m):
        dq = differential(table, generator(table, m, q))
        for (pre, r, post), n in dq.terms.items():
            for (amb, b), c in x.coeffs.items():
                if amb != r:
                    continue
                value = alg.reduce_concat(pre, b, post)
                if value is None:
                    continue
                out.add_pair(q, value, field.mul(c, field.from_int(n)))
    return out


def differential_matrix(table, m):
    """Columns: degree-m pairs; rows: degree-(m+1) pairs."""
    field = table.algebra.field
    cols_pairs = pair_basis(table, m)
    rows_pairs = pair_basis(table, m + 1)
    row_index = {pair: i for i, pair in enumerate(rows_pairs)}
    cols = []
    for amb, b in cols_pairs:
        col = {}
        for key, n in _pair_differential_terms(table, amb, b).items():
            col[row_index[key]] = field.from_int(n)
        cols.append({i: c for i, c in col.items() if not field.is_zero(c)})
    return SparseMatrix(len(rows_pairs), len(cols_pairs), tuple(cols))


@dataclass
class CohomologySpace:
    degree: int
    pairs: tuple
    cocycles: list
    coboundaries: list
    representatives: list
    dimension: int
    _solver: object = dc_field(default=None, repr=False, compare=False)

    def rep_cochains(self, table):
        return [vector_to_cochain(table, self.degree, self.pairs, v) for v in self.representatives]


def cochain_to_vector(pairs, x):
    index = {pair: i for i, pair in enumerate(pairs)}
    out = {}
    for key, c in x.coeffs.items():
        out[index[key]] = c
    return out


def vector_to_cochain(table, degree, pairs, vec):
    out = Cochain(table, degree)
    for i, c in vec.items():
        amb, b = pairs[i]
        out.add_pair(amb, b, c)
    return out


def hochschild_cohomology(table, max_degree):
    """CohomologySpace per degree 0..max_degree, with canonical representatives."""
    assert max_degree >= 0
    field = table.algebra.field
    mats = [differential_matrix(table, m) for m in range(max_degree + 1)]
    spaces = []
    for m in range(max_degree + 1):
        kernel = kernel_basis(field, mats[m])
        if m == 0:
            image = []
        else:
            prev = mats[m - 1]
            image = []
            seen = RowBasis(field)
            for j in range(prev.ncols):
                col = prev.column(j)
                if col and seen.insert(col)[0]:
                    image.append(col)
        reps = quotient_basis(field, kernel, image)
        spaces.append(
            CohomologySpace(
                degree=m,
                pairs=tuple(pair_basis(table, m)),
                cocycles=kernel,
                coboundaries=image,
                representatives=reps,
                dimension=len(reps),
            )
        )
    return spaces


def is_cocycle(table, x):
    return cochain_differential(table, x).is_zero()


def class_vector(space, table, x):
    """Coefficients of x's class over space.representatives; NotACocycle if not one."""
    if x.degree != space.degree:
        raise WrongDegree("cochain degree %d vs space degree %d" % (x.degree, space.degree))
    if not is_cocycle(table, x):
        raise NotACocycle("not killed by the differential: %r" % x)
    field = table.algebra.field
    if space._solver is None:
        solver = RowBasis(field, track=True)
        for i, v in enumerate(space.coboundaries):
            added, _ = solver.insert(v, ("b", i))
            assert added
        for i, v in enumerate(space.representatives):
            added, _ = solver.insert(v, ("r", i))
            assert added
        space._solver = solver
    vec = cochain_to_vector(space.pairs, x)
    sol = space._solver.express(vec)
    assert sol is not None, "cocycle outside the kernel span"
    out = {}
    for (kind, i), c in sol.items():
        if kind == "r" and not field.is_zero(c):
            out[i] = c
    return out


def check_partial_squared(table, max_degree):
    for m in range(0, max_degree + 1):
        for amb, b in pair_basis(table, m):
            x = pair_cochain(table, amb, b)
            dd = cochain_differential(table, cochain_differential(table, x))
            assert dd.is_zero(), "partial^2 != 0 at %r" % x


def check_differential_routes_agree(table, max_degree):
    for m in range(0, max_degree + 1):
        for amb, b in pair_basis(table, m):
            x = pair_cochain(table, amb, b)
            assert cochain_differential(table, x) == differential_via_resolution(table, x)


def check_triangular_structure(table, max_degree):
    """Odd outputs: unique positions; even outputs: no self-overlapping ends."""
    from .quivers import is_triangular

    if not is_triangular(table.algebra):
        raise NotTriangular("structure lemmas need an acyclic quiver")
    for m in range(1, max_degree + 1):
        if m % 2 == 1:
            for q in table.degree(m):
                for p_amb in table.degree(m - 1):
                    assert len(divisor_occurrences(p_amb.path, q.path)) <= 1
        else:
            for q in table.degree(m):
                assert table.amb_prefix(q, m - 1).path != table.amb_suffix(q, m - 1).path
