"""Seeded random monomial algebras, plus greedy shrinking.

The property suites quantify over "all finite-dimensional monomial algebras";
bounded random instances stand in for that.  Everything is driven by a
``random.Random`` seeded explicitly, so a trial index reproduces its algebra
exactly.  Trial i of a suite uses seed ``base_seed + i``.
"""

import random
from dataclasses import dataclass, field as dc_field

from .errors import InfiniteDimensional
from .fields import QQ
from .quivers import Quiver, build_algebra

MAX_ATTEMPTS = 5000


@dataclass(frozen=True)
class RandomAlgebraConfig:
    max_vertices: int = 6
    max_arrows: int = 10
    max_relations: int = 5
    min_relation_length: int = 2
    max_relation_length: int = 4
    triangular: bool = False
    field: object = dc_field(default=QQ)


def _sample_walk(rng, quiver, length):
    # a random composable arrow word, traversal order; shorter if the walk dies
    out_by_vertex = [[] for _ in range(quiver.n_vertices)]
    for i in range(quiver.n_arrows):
        out_by_vertex[quiver.arrow_source[i]].append(i)
    first = rng.randrange(quiver.n_arrows)
    word = [first]
    cur = quiver.arrow_target[first]
    while len(word) < length:
        step = out_by_vertex[cur]
        if not step:
            break
        a = rng.choice(step)
        word.append(a)
        cur = quiver.arrow_target[a]
    return word


def _sample_relation(rng, quiver, length):
    word = _sample_walk(rng, quiver, length)
    if len(word) < length:
        return None
    return quiver.path_from_arrows(tuple(word))


def _window_relations(rng, quiver, config, walk, count):
    """Windows carved from one walk; overlaps are what feed deep ambiguity chains."""
    rels = []
    top = min(config.max_relation_length, len(walk))
    if top < config.min_relation_length:
        return rels
    if rng.random() < 0.5:
        # dense mode: same-length windows at consecutive starts chain the
        # deepest (every window overlaps the next in all but one arrow);
        # short windows chain deeper, so favor them
        if rng.random() < 0.6:
            length = config.min_relation_length
        else:
            length = rng.randint(config.min_relation_length, top)
        for start in range(min(count, len(walk) - length + 1)):
            rels.append(quiver.path_from_arrows(tuple(walk[start : start + length])))
        return rels
    for _ in range(count):
        length = rng.randint(config.min_relation_length, top)
        start = rng.randrange(len(walk) - length + 1)
        rels.append(quiver.path_from_arrows(tuple(walk[start : start + length])))
    return rels


def _try_sample(rng, config):
    if config.triangular and rng.random() < 0.4:
        # deep DAG instances need room for a long chain
        nv = config.max_vertices
    else:
        nv = rng.randint(1, config.max_vertices)
    vertices = [str(i + 1) for i in range(nv)]
    arrows = []  # (name, src_idx, tgt_idx)
    spine = []  # arrow indices forming a composable walk
    if nv >= 2:
        if config.triangular:
            # a strictly increasing vertex chain keeps the quiver a DAG;
            # long chains get extra weight, they carry the deep instances
            hops = nv - 1 if rng.random() < 0.5 else rng.randint(0, nv - 1)
            stops = sorted(rng.sample(range(nv), hops + 1))
            steps = list(zip(stops, stops[1:]))
        else:
            steps = []
            cur = rng.randrange(nv)
            for _ in range(rng.randint(0, 2 * config.max_relation_length)):
                nxt = rng.randrange(nv)
                steps.append((cur, nxt))
                cur = nxt
        for s, t in steps:
            spine.append(len(arrows))
            arrows.append(("a%d" % (len(arrows) + 1), s, t))
    for _ in range(rng.randint(0, max(0, config.max_arrows - len(arrows)))):
        if config.triangular:
            if nv < 2:
                break
            s = rng.randrange(nv - 1)
            t = rng.randrange(s + 1, nv)
        else:
            s = rng.randrange(nv)
            t = rng.randrange(nv)
        arrows.append(("a%d" % (len(arrows) + 1), s, t))
    if len(arrows) > config.max_arrows:
        return None
    quiver = Quiver(vertices, [(n, vertices[s], vertices[t]) for n, s, t in arrows])
    relations = []
    if arrows:
        # max of two draws: biased toward several relations, zero still possible
        nr = max(rng.randint(0, config.max_relations), rng.randint(0, config.max_relations))
        if nr and spine and rng.random() < 0.7:
            relations = _window_relations(rng, quiver, config, spine, nr)
        if nr and not relations:
            for _ in range(nr):
                length = rng.randint(config.min_relation_length, config.max_relation_length)
                rel = _sample_relation(rng, quiver, length)
                if rel is not None:
                    relations.append(rel)
    try:
        return build_algebra(quiver, relations, config.field)
    except InfiniteDimensional:
        return None


def random_algebra(config, seed):
    """Deterministic in (config, seed); rejection-samples until finite-dim."""
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        alg = _try_sample(rng, config)
        if alg is not None:
            return alg
    raise RuntimeError("rejection sampling did not terminate; bounds too tight?")


def _rebuild_without_arrow(algebra, idx):
    q = algebra.quiver
    keep = [j for j in range(q.n_arrows) if j != idx]
    arrows = [
        (q.arrow_names[j], q.vertex_names[q.arrow_source[j]], q.vertex_names[q.arrow_target[j]])
        for j in keep
    ]
    new_q = Quiver(q.vertex_names, arrows)
    rel_words = []
    for r in algebra.relations:
        if idx in r.arrows:
            continue
        rel_words.append([q.arrow_names[a] for a in r.arrows])
    return build_algebra(new_q, [new_q.path(w) for w in rel_words], algebra.field)


def shrink_algebra(algebra, predicate):
    """Greedy minimization keeping predicate true: relations first, then arrows."""
    assert predicate(algebra), "predicate must hold on the input"
    current = algebra
    changed = True
    while changed:
        changed = False
        rels = list(current.relations)
        for i in range(len(rels)):
            try:
                cand = build_algebra(
                    current.quiver, rels[:i] + rels[i + 1 :], current.field
                )
            except InfiniteDimensional:
                continue
            if predicate(cand):
                current = cand
                changed = True
                break
        if changed:
            continue
        for i in range(current.quiver.n_arrows):
            try:
                cand = _rebuild_without_arrow(current, i)
            except InfiniteDimensional:
                continue
            if predicate(cand):
                current = cand
                changed = True
                break
    return current
