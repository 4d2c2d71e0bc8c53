"""Seeded generators shared by the randomized tests."""

from fractions import Fraction

from phenkf.resistance_engine import ResistanceNetwork


def random_weight(rng) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.randint(1, 12))


def random_network(rng, max_vertices: int = 12) -> ResistanceNetwork:
    """Connected weighted multigraph: a tree spine plus chords and parallels.

    Chords create cycles (so delta-wye sites exist) and duplicated edges
    create parallel-reduction sites; the spine keeps everything connected.
    """
    n = rng.randint(2, max_vertices)
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v, random_weight(rng)))
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, random_weight(rng)))
    for _ in range(rng.randint(0, 2)):
        u, v, _ = edges[rng.randrange(len(edges))]
        edges.append((u, v, random_weight(rng)))
    return ResistanceNetwork(edges)


def path_network(labels, weight=Fraction(1)) -> ResistanceNetwork:
    pairs = zip(labels, labels[1:])
    return ResistanceNetwork([(u, v, weight) for u, v in pairs])
