import itertools
from typing import Dict, Iterator, List, Tuple

from gw_zero import GW_LOGGER
from gw_zero.localization.FixedGraph import FixedGraph

Shape = Tuple[Tuple[int, int], ...]


def _shape_code(adjacency: List[List[int]], root: int, parent: int) -> Tuple:
    return tuple(sorted(_shape_code(adjacency, w, root) for w in adjacency[root] if w != parent))


def _min_shape_code(edges: Shape, n: int) -> Tuple:
    adjacency: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return min(_shape_code(adjacency, root, -1) for root in range(n))


def tree_shapes(n: int) -> List[Shape]:
    """
    One edge list per unlabeled tree on n vertices, grown a leaf at a time from
    the single vertex and deduplicated by minimal rooted code.
    """
    if n < 1:
        raise ValueError(f'A tree needs at least one vertex, got {n}')
    level: Dict[Tuple, Shape] = {(): ()}
    for size in range(1, n):
        grown: Dict[Tuple, Shape] = {}
        for edges in level.values():
            for v in range(size):
                candidate = edges + ((v, size),)
                code = _min_shape_code(candidate, size + 1)
                grown.setdefault(code, candidate)
        level = grown
    return [level[code] for code in sorted(level)]


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of `parts` positive integers summing to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def enumerate_graphs(r: int, d: int, marks: int = 0) -> List[FixedGraph]:
    """
    All isomorphism classes of torus-fixed graphs of degree-d genus-0 stable maps
    to P^r with `marks` (0 or 1) marked points, each carrying its automorphism order.

    :param r: dimension of the ambient projective space
    :param d: the degree, at least 1
    :param marks: 0 or 1

    :return: canonical FixedGraphs in a deterministic order
    """
    if r < 1:
        raise ValueError(f'Ambient dimension r must be at least 1, got {r}')
    if d < 1:
        raise ValueError(f'Fixed-point graphs need degree d >= 1, got {d}')
    if marks not in (0, 1):
        raise ValueError(f'Only 0 or 1 marked points are supported, got {marks}')

    found: Dict[Tuple, FixedGraph] = {}
    for n in range(2, d + 2):
        for shape in tree_shapes(n):
            for labels in itertools.product(range(r + 1), repeat=n):
                if any(labels[u] == labels[v] for u, v in shape):
                    continue
                for degrees in compositions(d, n - 1):
                    edges = [(u, v, deg) for (u, v), deg in zip(shape, degrees)]
                    for mark in ([None] if marks == 0 else range(n)):
                        graph = FixedGraph.canonical(labels, edges, mark)
                        key = (graph.labels, graph.edges, graph.mark)
                        found.setdefault(key, graph)

    graphs = [found[key] for key in sorted(found, key=_sort_key)]
    GW_LOGGER.info(f'Enumerated {len(graphs)} fixed-point graphs for r={r}, d={d}, marks={marks}')
    return graphs


def _sort_key(key: Tuple) -> Tuple:
    labels, edges, mark = key
    return (len(labels), labels, edges, -1 if mark is None else mark)
