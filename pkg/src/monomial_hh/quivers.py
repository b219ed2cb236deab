"""Quivers, paths, and finite-dimensional monomial path algebras.

Orientation convention
----------------------
Paths are stored in traversal order: ``arrows[0]`` is traversed first.
Mathematical writing usually composes right-to-left like functions, so a
written word names the *reverse* of its traversal sequence.  The helper
``path_from_word`` is the single place in this package where the written
convention is converted; everything else speaks traversal order.  Under
this dictionary, a written product ``q·p`` is ``concat(p, q)`` here, a
written "prefix" divisor is a traversal-initial segment and a written
"suffix" is a traversal-final segment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateArrowId,
    InfiniteDimensional,
    NonComposableRelation,
)
from .fields import QQ


class Quiver:
    """A finite directed multigraph with string-named vertices and arrows.

    Names are user-facing; internally everything is dense integer indices
    in declaration order, which also fixes all deterministic orderings.
    """

    def __init__(self, vertices, arrows):
        self.vertex_names = tuple(str(v) for v in vertices)
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise DuplicateArrowId("duplicate vertex id")
        self.vertex_index = {v: i for i, v in enumerate(self.vertex_names)}
        names = []
        src = []
        tgt = []
        for name, s, t in arrows:
            name = str(name)
            if name in self.vertex_index or name in names:
                raise DuplicateArrowId(f"duplicate id {name!r}")
            if str(s) not in self.vertex_index or str(t) not in self.vertex_index:
                raise ValueError(f"arrow {name!r} uses an undeclared vertex")
            names.append(name)
            src.append(self.vertex_index[str(s)])
            tgt.append(self.vertex_index[str(t)])
        self.arrow_names = tuple(names)
        self.arrow_index = {a: i for i, a in enumerate(self.arrow_names)}
        self.arrow_source = tuple(src)
        self.arrow_target = tuple(tgt)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def n_arrows(self) -> int:
        return len(self.arrow_names)

    def trivial_path(self, vertex) -> "Path":
        return Path(self, self.vertex_index[str(vertex)], ())

    def trivial_path_at(self, vertex_idx: int) -> "Path":
        return Path(self, vertex_idx, ())

    def arrow_path(self, name) -> "Path":
        i = self.arrow_index[str(name)]
        return Path(self, self.arrow_source[i], (i,))

    def path(self, arrow_names) -> "Path":
        """Build a path from arrow names in traversal order."""
        if isinstance(arrow_names, str):
            arrow_names = arrow_names.split()
        idxs = []
        for a in arrow_names:
            if a not in self.arrow_index:
                raise NonComposableRelation(f"unknown arrow {a!r}")
            idxs.append(self.arrow_index[a])
        if not idxs:
            raise ValueError("empty arrow list; use trivial_path for vertices")
        for k in range(len(idxs) - 1):
            if self.arrow_target[idxs[k]] != self.arrow_source[idxs[k + 1]]:
                raise NonComposableRelation(
                    f"arrows {arrow_names[k]!r} and {arrow_names[k+1]!r} do not compose"
                )
        return Path(self, self.arrow_source[idxs[0]], tuple(idxs))

    def path_from_arrows(self, idxs: tuple) -> "Path":
        """Internal: trusted arrow index tuple, already composable."""
        return Path(self, self.arrow_source[idxs[0]], idxs)

    def is_acyclic(self) -> bool:
        """True iff the digraph has no oriented cycle (triangular quiver)."""
        out = [[] for _ in range(self.n_vertices)]
        for i in range(self.n_arrows):
            out[self.arrow_source[i]].append(self.arrow_target[i])
        color = [0] * self.n_vertices  # 0 new, 1 on stack, 2 done
        for start in range(self.n_vertices):
            if color[start]:
                continue
            stack = [(start, iter(out[start]))]
            color[start] = 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if color[w] == 1:
                        return False
                    if color[w] == 0:
                        color[w] = 1
                        stack.append((w, iter(out[w])))
                        advanced = True
                        break
                if not advanced:
                    color[v] = 2
                    stack.pop()
        return True

    def __repr__(self):
        return f"Quiver({self.n_vertices} vertices, {self.n_arrows} arrows)"


class Path:
    """An oriented path; immutable, hashable, ordered deterministically.

    ``arrows`` holds arrow indices in traversal order; a trivial path has
    an empty tuple and remembers its vertex in ``source``.
    """

    __slots__ = ("quiver", "source", "arrows", "_hash")

    def __init__(self, quiver: Quiver, source: int, arrows: tuple):
        self.quiver = quiver
        self.source = source
        self.arrows = arrows
        self._hash = hash((source, arrows))

    @property
    def target(self) -> int:
        if self.arrows:
            return self.quiver.arrow_target[self.arrows[-1]]
        return self.source

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def vertex_at(self, k: int) -> int:
        """Vertex index after traversing k arrows (0 ≤ k ≤ len)."""
        if k == 0:
            return self.source
        return self.quiver.arrow_target[self.arrows[k - 1]]

    def segment(self, i: int, j: int) -> "Path":
        """Sub-path spanning traversal positions [i, j)."""
        assert 0 <= i <= j <= len(self.arrows)
        return Path(self.quiver, self.vertex_at(i), self.arrows[i:j])

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.source == other.source
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def display(self) -> str:
        """Traversal-order rendering, e.g. ``alpha*zeta``; ``e(v)`` if trivial."""
        if not self.arrows:
            return f"e({self.quiver.vertex_names[self.source]})"
        return "*".join(self.quiver.arrow_names[a] for a in self.arrows)

    def word(self) -> str:
        """Written (right-to-left) rendering: last-traversed arrow first."""
        if not self.arrows:
            return f"e({self.quiver.vertex_names[self.source]})"
        return "".join(self.quiver.arrow_names[a] for a in reversed(self.arrows))

    def __repr__(self):
        return f"Path({self.display()})"


def concat(*paths: Path) -> Path:
    """Concatenate in traversal order; raises when endpoints do not meet."""
    assert paths
    first = paths[0]
    arrows = list(first.arrows)
    cur = first.target
    for p in paths[1:]:
        if p.source != cur:
            raise NonComposableRelation("paths do not compose")
        arrows.extend(p.arrows)
        cur = p.target
    return Path(first.quiver, first.source, tuple(arrows))


def path_from_word(quiver: Quiver, word) -> Path:
    """Build a path from arrow names in *written* order (right-to-left).

    This is the only conversion point between the written convention and
    traversal order: ``path_from_word(q, "beta zeta")`` traverses ``zeta``
    first.  Accepts a space-separated string or an iterable of names.
    """
    if isinstance(word, str):
        word = word.split()
    return quiver.path(list(reversed(list(word))))


@dataclass(frozen=True)
class DivisorOccurrence:
    """One positioned occurrence of a divisor: host = prefix · divisor · suffix

    (traversal order).  ``position`` is the traversal offset of the divisor,
    i.e. len(prefix); for trivial divisors it is the vertex slot.
    """

    prefix: Path
    divisor: Path
    suffix: Path
    position: int


def divisor_occurrences(q: Path, p: Path):
    """All positioned occurrences of q in p, by increasing prefix length."""
    out = []
    lq = len(q.arrows)
    if lq == 0:
        for k in range(len(p.arrows) + 1):
            if p.vertex_at(k) == q.source:
                out.append(
                    DivisorOccurrence(p.segment(0, k), q, p.segment(k, len(p.arrows)), k)
                )
        return out
    for k in range(len(p.arrows) - lq + 1):
        if p.arrows[k : k + lq] == q.arrows:
            out.append(
                DivisorOccurrence(
                    p.segment(0, k), p.segment(k, k + lq), p.segment(k + lq, len(p.arrows)), k
                )
            )
    return out


class MonomialAlgebra:
    """kQ/I for a monomial ideal I, with the relation-free path basis B.

    Immutable after construction.  ``basis`` is sorted by (length, arrow
    indices, source); ``relations`` is the minimized generating set, sorted
    the same way.  Construction certifies finite-dimensionality first (see
    ``_assert_finite``), then enumerates B.
    """

    def __init__(self, quiver: Quiver, relations, field=QQ):
        self.quiver = quiver
        self.field = field
        rels = []
        for r in relations:
            if not isinstance(r, Path):
                r = quiver.path(r)
            if len(r.arrows) < 2:
                raise ValueError(f"relation {r!r} has length < 2")
            rels.append(r)
        self.relations = tuple(sorted(_minimize(rels), key=Path.sort_key))
        self._rel_arrows = tuple(r.arrows for r in self.relations)
        self._rel_set = frozenset(self._rel_arrows)
        self.max_relation_length = max((len(r) for r in self.relations), default=0)
        self._assert_finite()
        self.basis = tuple(self._enumerate_basis())
        self.basis_set = frozenset(self.basis)
        self.dim = len(self.basis)
        self.nontrivial_basis = tuple(p for p in self.basis if p.arrows)

    # -- construction helpers -------------------------------------------------

    def contains_relation(self, arrows: tuple) -> bool:
        """Does the arrow word contain some relation as a factor?"""
        n = len(arrows)
        for rel in self._rel_arrows:
            lr = len(rel)
            if lr > n:
                continue
            for k in range(n - lr + 1):
                if arrows[k : k + lr] == rel:
                    return True
        return False

    def _tail_hits_relation(self, arrows: tuple) -> bool:
        """Does some relation end exactly at the last arrow? (incremental test)"""
        n = len(arrows)
        for rel in self._rel_arrows:
            lr = len(rel)
            if lr <= n and arrows[n - lr :] == rel:
                return True
        return False

    def _assert_finite(self):
        """Ufnarovski-style cycle test on relation-free paths of length L−1."""
        ell = max(self.max_relation_length - 1, 0)
        q = self.quiver
        # nodes: relation-free words of length ell, keyed with their target
        # vertex so trivial words at different vertices stay distinct
        level = [((), v) for v in range(q.n_vertices)]
        for _ in range(ell):
            nxt = []
            for arrows, at in level:
                for a in range(q.n_arrows):
                    if q.arrow_source[a] != at:
                        continue
                    ext = arrows + (a,)
                    if not self._tail_hits_relation(ext):
                        nxt.append((ext, q.arrow_target[a]))
            level = nxt
        node_ids = {key: i for i, key in enumerate(level)}
        edges = [[] for _ in level]
        for key, i in node_ids.items():
            arrows, at = key
            for a in range(q.n_arrows):
                if q.arrow_source[a] != at:
                    continue
                ext = arrows + (a,)
                if self._tail_hits_relation(ext):
                    continue
                succ = (ext[1:], q.arrow_target[a]) if ell else ((), q.arrow_target[a])
                j = node_ids.get(succ)
                if j is not None:
                    edges[i].append(j)
        # directed cycle <=> infinite-dimensional
        color = [0] * len(level)
        for start in range(len(level)):
            if color[start]:
                continue
            stack = [(start, iter(edges[start]))]
            color[start] = 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if color[w] == 1:
                        raise InfiniteDimensional(
                            "arbitrarily long relation-free paths exist"
                        )
                    if color[w] == 0:
                        color[w] = 1
                        stack.append((w, iter(edges[w])))
                        advanced = True
                        break
                if not advanced:
                    color[v] = 2
                    stack.pop()

    def _enumerate_basis(self):
        q = self.quiver
        out = [q.trivial_path_at(v) for v in range(q.n_vertices)]
        frontier = out[:]
        while frontier:
            nxt = []
            for p in frontier:
                at = p.target
                for a in range(q.n_arrows):
                    if q.arrow_source[a] != at:
                        continue
                    ext = p.arrows + (a,)
                    if self._tail_hits_relation(ext):
                        continue
                    nxt.append(Path(q, p.source, ext))
            out.extend(nxt)
            frontier = nxt
        out.sort(key=Path.sort_key)
        return out

    # -- queries ---------------------------------------------------------------

    def is_basis(self, p: Path) -> bool:
        return p in self.basis_set

    def reduce_arrows(self, source: int, arrows: tuple):
        """The basis path for an arrow word, or None when it dies in A."""
        p = Path(self.quiver, source, arrows)
        return p if p in self.basis_set else None

    def reduce_concat(self, *paths: Path):
        """Concatenate (traversal order) and reduce in A; None when zero."""
        p = concat(*paths)
        return p if p in self.basis_set else None

    @property
    def is_quadratic(self) -> bool:
        return all(len(r) == 2 for r in self.relations)

    def __repr__(self):
        return (
            f"MonomialAlgebra(dim {self.dim}, {len(self.relations)} relations, "
            f"field {self.field.name})"
        )


def _minimize(relations):
    """Drop duplicates and any relation containing another as a factor."""
    uniq = []
    seen = set()
    for r in relations:
        if r.arrows not in seen:
            seen.add(r.arrows)
            uniq.append(r)
    out = []
    for r in uniq:
        redundant = False
        for s in uniq:
            if s.arrows == r.arrows or len(s.arrows) > len(r.arrows):
                continue
            ls = len(s.arrows)
            if any(
                r.arrows[k : k + ls] == s.arrows
                for k in range(len(r.arrows) - ls + 1)
            ):
                redundant = True
                break
        if not redundant:
            out.append(r)
    return out


def build_algebra(quiver: Quiver, relations, field=QQ) -> MonomialAlgebra:
    return MonomialAlgebra(quiver, relations, field)


def is_triangular(algebra: MonomialAlgebra) -> bool:
    return algebra.quiver.is_acyclic()
