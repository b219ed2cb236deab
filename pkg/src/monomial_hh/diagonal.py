"""Diagonal approximation on the resolution, with its chain-map certificate.

A term of the tensor square is a quintuple (pre, first, mid, second, post)
composing in traversal order; `first` is the traversal-earlier ambiguity
factor and `second` the later one.  In the written form c (x) q2 (x) b
(x) q1 (x) a the slots are a = pre, q1 = first, b = mid, q2 = second,
c = post, so the homological degree of the written-left factor is
second.degree + 1.  That degree drives the Koszul sign.
"""

from .quivers import concat, divisor_occurrences
from .resolution import _d_terms, differential, generator


class TensorElement:
    """Sparse combination of quintuples at a fixed total degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        if terms:
            for key, c in terms.items():
                self.add_term(*key, c)

    def add_term(self, pre, first, mid, second, post, coeff):
        assert first.degree + second.degree + 1 == self.degree
        assert pre.target == first.path.source
        assert first.path.target == mid.source
        assert mid.target == second.path.source
        assert second.path.target == post.source
        if not coeff:
            return
        key = (pre, first, mid, second, post)
        c = self.terms.get(key, 0) + coeff
        if c:
            self.terms[key] = c
        else:
            del self.terms[key]

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.degree == other.degree
        out = TensorElement(self.degree, self.terms)
        for key, c in other.terms.items():
            out.add_term(*key, c)
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        raise TypeError("TensorElement is mutable")

    def __repr__(self):
        n = len(self.terms)
        return "TensorElement(%d, %d terms)" % (self.degree, n)


def _decompositions(table, amb, i, j):
    """Positioned (q1 at k1) then (q2 at k2 >= k1+len) splits of amb.path."""
    alg = table.algebra
    p = amb.path
    out = []
    for q1 in table.degree(i):
        for occ1 in divisor_occurrences(q1.path, p):
            k1 = occ1.position
            end1 = k1 + len(q1.path)
            for q2 in table.degree(j):
                for occ2 in divisor_occurrences(q2.path, p):
                    k2 = occ2.position
                    if k2 < end1:
                        continue
                    pre = p.segment(0, k1)
                    mid = p.segment(end1, k2)
                    post = p.segment(k2 + len(q2.path), len(p))
                    if not (alg.is_basis(pre) and alg.is_basis(mid) and alg.is_basis(post)):
                        continue
                    out.append((pre, q1, mid, q2, post))
    return out


def diagonal(table, amb):
    n = amb.degree
    out = TensorElement(n)
    for i in range(-1, n + 1):
        j = n - 1 - i
        for key in _decompositions(table, amb, i, j):
            out.add_term(*key, 1)
    return out


def diagonal_of_element(table, x):
    """Bilinear extension of the diagonal over outer multiplication."""
    alg = table.algebra
    out = TensorElement(x.degree)
    for (pre_t, amb, post_t), c in x.terms.items():
        for (pre, f, m, s, post), c2 in diagonal(table, amb).terms.items():
            new_pre = alg.reduce_concat(pre_t, pre)
            if new_pre is None:
                continue
            new_post = alg.reduce_concat(post, post_t)
            if new_post is None:
                continue
            out.add_term(new_pre, f, m, s, new_post, c * c2)
    return out


def tensor_differential(table, x):
    """(d (x) id)x + (-1)^(left homological degree) (id (x) d)x."""
    alg = table.algebra
    out = TensorElement(x.degree - 1)
    for (pre, f, m, s, post), c in x.terms.items():
        if s.degree >= 0:
            for dpre, r, dpost, sign in _d_terms(table, s):
                new_mid = alg.reduce_concat(m, dpre)
                if new_mid is None:
                    continue
                new_post = alg.reduce_concat(dpost, post)
                if new_post is None:
                    continue
                out.add_term(pre, f, new_mid, r, new_post, sign * c)
        if f.degree >= 0:
            koszul = -1 if (s.degree + 1) % 2 else 1
            for dpre, r, dpost, sign in _d_terms(table, f):
                new_pre = alg.reduce_concat(pre, dpre)
                if new_pre is None:
                    continue
                new_mid = alg.reduce_concat(dpost, m)
                if new_mid is None:
                    continue
                out.add_term(new_pre, r, new_mid, s, post, koszul * sign * c)
    return out


def counit(x):
    """mu (eps (x) eps): keeps quintuples with both factors at degree -1."""
    out = {}
    for (pre, f, m, s, post), c in x.terms.items():
        if f.degree != -1 or s.degree != -1:
            continue
        # both ambiguity slots are vertices, so the word is pre*mid*post
        word = concat(pre, m, post)
        out[word] = out.get(word, 0) + c
    return {p: c for p, c in out.items() if c}


def check_chain_map(table, max_degree):
    for n in range(0, max_degree + 1):
        for amb in table.degree(n):
            lhs = diagonal_of_element(table, differential(table, generator(table, n, amb)))
            rhs = tensor_differential(table, diagonal(table, amb))
            assert lhs == rhs, "diagonal chain-map identity fails at %s" % amb.path.display()


def check_counit(table, max_degree):
    alg = table.algebra
    for n in range(-1, max_degree + 1):
        for amb in table.degree(n):
            lhs = {p: c for p, c in counit(diagonal(table, amb)).items() if alg.is_basis(p)}
            rhs = {amb.path: 1} if n == -1 else {}
            assert lhs == rhs, "counit fails at %s" % amb.path.display()


def check_decomposition_lemmas(table, max_degree):
    """No decomposition above the antidiagonal; odd factors pin their ends."""
    for n in range(0, max_degree + 1):
        for amb in table.degree(n):
            for i in range(-1, n + 1):
                for j in range(-1, n + 1):
                    if i + j <= n - 1:
                        continue
                    assert _decompositions(table, amb, i, j) == []
            for (pre, q1, mid, q2, post), _ in diagonal(table, amb).terms.items():
                if q1.degree % 2 == 1:
                    assert pre.is_trivial
                if q2.degree % 2 == 1:
                    assert post.is_trivial


def check_quadratic(table, max_degree):
    """Quadratic algebras: one decomposition per bidegree, all outer slots trivial."""
    assert table.algebra.is_quadratic
    for n in range(0, max_degree + 1):
        for amb in table.degree(n):
            seen = {}
            for (pre, q1, mid, q2, post), c in diagonal(table, amb).terms.items():
                assert pre.is_trivial and mid.is_trivial and post.is_trivial
                bideg = (q2.degree + 1, q1.degree + 1)
                assert bideg not in seen
                seen[bideg] = c
                assert c == 1
