from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

Edge = Tuple[int, int, int]  # (vertex, vertex, degree)


def tree_centers(adjacency: Sequence[Sequence[int]]) -> List[int]:
    """The one or two vertices left after repeatedly stripping leaves"""
    n = len(adjacency)
    if n <= 2:
        return list(range(n))
    degree = [len(adjacency[v]) for v in range(n)]
    leaves = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        new_leaves = []
        for u in leaves:
            degree[u] = 0
            for v in adjacency[u]:
                if degree[v] > 0:
                    degree[v] -= 1
                    if degree[v] == 1:
                        new_leaves.append(v)
        leaves = new_leaves
    return sorted(leaves)


class FixedGraph:
    """
    A decorated tree indexing a torus-fixed locus of genus-0 stable maps to P^r.

    Vertices carry fixed-point labels in 0..r (adjacent labels differ), each edge
    is a degree-d_e cover of the coordinate line joining its endpoint labels, and
    `mark` is the vertex holding the marked point, if any.

    Construct through `FixedGraph.canonical`, which relabels vertices into a
    canonical order and fills in `automorphism_order`.
    """

    __slots__ = ('labels', 'edges', 'mark', 'automorphism_order', '_adjacency')

    def __init__(
        self,
        labels: Sequence[int],
        edges: Sequence[Edge],
        mark: Optional[int] = None,
        automorphism_order: int = 1,
    ):
        self.labels = tuple(int(x) for x in labels)
        self.edges = tuple((int(u), int(v), int(deg)) for u, v, deg in edges)
        self.mark = None if mark is None else int(mark)
        self.automorphism_order = int(automorphism_order)

        adjacency: List[List[Tuple[int, int]]] = [[] for _ in self.labels]
        for u, v, deg in self.edges:
            if self.labels[u] == self.labels[v]:
                raise ValueError(f'Adjacent vertices {u}, {v} share label {self.labels[u]}')
            if deg < 1:
                raise ValueError(f'Edge degrees must be positive, got {deg}')
            adjacency[u].append((v, deg))
            adjacency[v].append((u, deg))
        if len(self.edges) != len(self.labels) - 1:
            raise ValueError('A fixed-point graph must be a tree')
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    @property
    def degree(self) -> int:
        return sum(deg for _, _, deg in self.edges)

    @property
    def marks(self) -> int:
        return 0 if self.mark is None else 1

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def neighbors(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """(neighbor, edge degree) pairs at vertex v"""
        return self._adjacency[v]

    def valence(self, v: int) -> int:
        return len(self._adjacency[v])

    def _rooted_code(self, root: int, parent: int) -> Tuple:
        children = sorted(
            (deg, self._rooted_code(w, root)) for w, deg in self._adjacency[root] if w != parent
        )
        return (self.labels[root], int(root == self.mark), tuple(children))

    def _rooted_automorphisms(self, root: int, parent: int) -> int:
        groups: Dict[Tuple, List[int]] = {}
        for w, deg in self._adjacency[root]:
            if w != parent:
                groups.setdefault((deg, self._rooted_code(w, root)), []).append(w)
        count = 1
        for members in groups.values():
            count *= factorial(len(members))
            for w in members:
                count *= self._rooted_automorphisms(w, root)
        return count

    def code(self) -> Tuple:
        """Isomorphism invariant: the smallest rooted code over the tree's centers"""
        centers = tree_centers([[w for w, _ in nbrs] for nbrs in self._adjacency])
        return min(self._rooted_code(c, -1) for c in centers)

    @classmethod
    def canonical(
        cls, labels: Sequence[int], edges: Sequence[Edge], mark: Optional[int] = None
    ) -> 'FixedGraph':
        """
        Build the canonical representative of the isomorphism class of a decorated tree,
        with vertices renumbered breadth-first from the minimal center and
        automorphism_order = |orbit of that center| * |its stabilizer|.
        """
        raw = cls(labels, edges, mark)
        centers = tree_centers([[w for w, _ in nbrs] for nbrs in raw._adjacency])
        codes = {c: raw._rooted_code(c, -1) for c in centers}
        best = min(codes.values())
        root = min(c for c in centers if codes[c] == best)
        orbit = sum(1 for c in centers if codes[c] == best)
        automorphisms = orbit * raw._rooted_automorphisms(root, -1)

        order = [root]
        parents = {root: -1}
        position = 0
        while position < len(order):
            u = order[position]
            position += 1
            children = [(deg, raw._rooted_code(w, u), w) for w, deg in raw._adjacency[u]
                        if w != parents[u]]
            for _, _, w in sorted(children, key=lambda item: (item[0], item[1])):
                parents[w] = u
                order.append(w)

        new_index = {old: new for new, old in enumerate(order)}
        new_labels = [raw.labels[old] for old in order]
        new_edges = sorted(
            (min(new_index[u], new_index[v]), max(new_index[u], new_index[v]), deg)
            for u, v, deg in raw.edges
        )
        new_mark = None if mark is None else new_index[raw.mark]
        return cls(new_labels, new_edges, new_mark, automorphisms)

    def to_dict(self) -> Dict:
        return {
            'labels': list(self.labels),
            'edges': [list(edge) for edge in self.edges],
            'mark': self.mark,
            'automorphism_order': self.automorphism_order,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'FixedGraph':
        return cls(
            data['labels'],
            [tuple(edge) for edge in data['edges']],
            data.get('mark'),
            data.get('automorphism_order', 1),
        )

    def __eq__(self, other):
        if not isinstance(other, FixedGraph):
            return NotImplemented
        return (self.labels, self.edges, self.mark, self.automorphism_order) == (
            other.labels,
            other.edges,
            other.mark,
            other.automorphism_order,
        )

    def __hash__(self):
        return hash((self.labels, self.edges, self.mark))

    def __getstate__(self):
        return self.to_dict()

    def __setstate__(self, state):
        restored = FixedGraph.from_dict(state)
        for name in FixedGraph.__slots__:
            object.__setattr__(self, name, getattr(restored, name))

    def __repr__(self):
        return (
            f'FixedGraph(labels={list(self.labels)}, edges={[list(e) for e in self.edges]}, '
            f'mark={self.mark}, automorphism_order={self.automorphism_order})'
        )
