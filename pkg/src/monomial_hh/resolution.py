"""Minimal bimodule resolution built on the ambiguity chains.

Elements of the degree-n term are sparse integer combinations of triples
(pre, amb, post) with amb an ambiguity of degree n and pre, post basis
paths, composing traversal-first to traversal-last as pre * amb * post.
The homological index of that term is n + 1; the bottom term (n = -1) is
spanned by (pre, e_v, post) triples and augments onto the algebra.

The differential splits on the parity of n: odd degrees sum over all
positioned divisors one degree down, even degrees take the two boundary
truncations with opposite signs.  All maps here are defined over the
integers; coefficients only meet the base field later, in the cochain
matrices.
"""

from .ambiguities import Ambiguity, AmbiguityTable
from .errors import WrongDegree
from .quivers import Path, concat


class BimoduleElement:
    """Sparse combination of composable (pre, amb, post) triples."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        if terms:
            for (pre, amb, post), c in terms.items():
                self.add_term(pre, amb, post, c)

    def add_term(self, pre, amb, post, coeff):
        assert isinstance(amb, Ambiguity) and amb.degree == self.degree
        assert pre.target == amb.path.source
        assert amb.path.target == post.source
        if not coeff:
            return
        key = (pre, amb, post)
        c = self.terms.get(key, 0) + coeff
        if c:
            self.terms[key] = c
        else:
            del self.terms[key]

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.degree == other.degree
        out = BimoduleElement(self.degree, self.terms)
        for (pre, amb, post), c in other.terms.items():
            out.add_term(pre, amb, post, c)
        return out

    def __sub__(self, other):
        assert self.degree == other.degree
        out = BimoduleElement(self.degree, self.terms)
        for (pre, amb, post), c in other.terms.items():
            out.add_term(pre, amb, post, -c)
        return out

    def __eq__(self, other):
        if not isinstance(other, BimoduleElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        raise TypeError("BimoduleElement is mutable")

    def __repr__(self):
        if not self.terms:
            return "BimoduleElement(%d, 0)" % self.degree
        bits = []
        for (pre, amb, post), c in sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][1].path.sort_key(), kv[0][0].sort_key(), kv[0][2].sort_key()),
        ):
            bits.append("%+d (%s | %s | %s)" % (c, pre.display(), amb.path.display(), post.display()))
        return "BimoduleElement(%d, %s)" % (self.degree, " ".join(bits))


def generator(table, degree, path):
    """1 (x) p (x) 1 for the ambiguity with the given path."""
    amb = path if isinstance(path, Ambiguity) else table.by_path(degree, path)
    assert amb is not None
    q = table.algebra.quiver
    pre = q.trivial_path_at(amb.path.source)
    post = q.trivial_path_at(amb.path.target)
    return BimoduleElement(amb.degree, {(pre, amb, post): 1})


def _d_terms(table, amb):
    # differential of 1 (x) amb (x) 1, as (pre, sub_amb, post, sign)
    n = amb.degree
    assert n >= 0
    alg = table.algebra
    out = []
    if n % 2 == 1:
        for q, occ in table.sub(amb):
            if alg.is_basis(occ.prefix) and alg.is_basis(occ.suffix):
                out.append((occ.prefix, q, occ.suffix, 1))
    else:
        p = amb.path
        head_amb = table.amb_prefix(amb, n - 1)
        tail = p.segment(len(head_amb.path), len(p))
        if alg.is_basis(tail):
            out.append((alg.quiver.trivial_path_at(p.source), head_amb, tail, 1))
        tail_amb = table.amb_suffix(amb, n - 1)
        head = p.segment(0, len(p) - len(tail_amb.path))
        if alg.is_basis(head):
            out.append((head, tail_amb, alg.quiver.trivial_path_at(p.target), -1))
    return out


def differential(table, x):
    if x.degree < 0:
        raise WrongDegree("no differential below degree 0; use augmentation")
    alg = table.algebra
    out = BimoduleElement(x.degree - 1)
    for (pre, amb, post), c in x.terms.items():
        for dpre, q, dpost, sign in _d_terms(table, amb):
            new_pre = alg.reduce_concat(pre, dpre)
            if new_pre is None:
                continue
            new_post = alg.reduce_concat(dpost, post)
            if new_post is None:
                continue
            out.add_term(new_pre, q, new_post, sign * c)
    return out


def augmentation(table, x):
    """Collapse the bottom term onto the algebra: (pre, e, post) -> pre*post.

    The product happens in the algebra, so a composite that runs through a
    relation contributes nothing.
    """
    if x.degree != -1:
        raise WrongDegree("augmentation needs degree -1 keys, got %d" % x.degree)
    out = {}
    for (pre, amb, post), c in x.terms.items():
        alg_path = table.algebra.reduce_concat(pre, post)
        if alg_path is None:
            continue
        out[alg_path] = out.get(alg_path, 0) + c
    return {p: c for p, c in out.items() if c}


def iota(table, a):
    """Section of the augmentation: b goes to the tensor keyed (b, e_t(b), trivial)."""
    out = BimoduleElement(-1)
    q = table.algebra.quiver
    for path, c in a.items():
        assert table.algebra.is_basis(path)
        e = q.trivial_path_at(path.target)
        out.add_term(path, table.by_path(-1, e), e, c)
    return out


def homotopy_sigma(table, x):
    """Contracting homotopy; right-linear, scans the unreduced word amb*post."""
    alg = table.algebra
    higher = table.degree(x.degree + 1)
    out = BimoduleElement(x.degree + 1)
    for (pre, amb, post), c in x.terms.items():
        if len(amb.path) + len(post) == 0:
            continue
        word = concat(amb.path, post)  # may contain relations on purpose
        arrows = word.arrows
        for q in higher:
            qa = q.path.arrows
            for k in range(len(arrows) - len(qa) + 1):
                if arrows[k : k + len(qa)] != qa:
                    continue
                new_pre = alg.reduce_concat(pre, word.segment(0, k))
                if new_pre is None:
                    continue
                tail = word.segment(k + len(qa), len(arrows))
                if not alg.is_basis(tail):
                    continue
                out.add_term(new_pre, q, tail, c)
    return out


def right_spanning_set(table, degree):
    """Generators b (x) p (x) 1 of the degree-n term as a right module."""
    alg = table.algebra
    out = []
    for amb in table.degree(degree):
        triv = alg.quiver.trivial_path_at(amb.path.source)
        for b in alg.basis:
            if b.source == amb.path.target:
                out.append(BimoduleElement(degree, {(triv, amb, b): 1}))
    return out


def check_d_squared(table, max_degree):
    for n in range(1, max_degree + 1):
        for amb in table.degree(n):
            dd = differential(table, differential(table, generator(table, n, amb)))
            assert dd.is_zero(), "d^2 != 0 at %s" % amb.path.display()


def check_augmented(table):
    for amb in table.degree(0):
        d1 = differential(table, generator(table, 0, amb))
        assert augmentation(table, d1) == {}, "eps d != 0 at %s" % amb.path.display()


def check_homotopy(table, max_degree):
    """d sigma + sigma d = id - iota eps, on right-module spanning sets.

    Below degree 0 the differential is the augmentation and the identity
    reads d(sigma(x)) + iota(eps(x)) = x.
    """
    for n in range(-1, max_degree + 1):
        for x in right_spanning_set(table, n):
            lhs = differential(table, homotopy_sigma(table, x))
            if n >= 0:
                lhs = lhs + homotopy_sigma(table, differential(table, x))
            else:
                lhs = lhs + iota(table, augmentation(table, x))
            assert lhs == x, "homotopy identity fails at %r" % x


def check_minimal(table, max_degree):
    # every differential coefficient lies in the radical
    for n in range(0, max_degree + 1):
        for amb in table.degree(n):
            for dpre, _, dpost, _ in _d_terms(table, amb):
                assert len(dpre) + len(dpost) >= 1
