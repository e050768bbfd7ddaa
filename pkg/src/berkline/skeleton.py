"""Finite-tree skeletons of the unit disc spanned by a set of centers.

The tree for a finite center set A has the radius-1 Gauss point as root, one
leaf per center (at a chosen leaf depth, classical points by default), and a
branch vertex at every pairwise meet.  Degree-2 subdivision points are not
materialized; they live implicitly on edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateCenters
from .logvalue import INFINITY, ZERO, LogValue
from .points import DiscPoint, _dist


@dataclass(frozen=True)
class Skeleton:
    vertices: tuple       # DiscPoint per vertex, sorted by (s, center string)
    edges: tuple          # (child_index, parent_index), child is the smaller disc
    root: int
    leaves: tuple

    @property
    def edge_lengths(self):
        return tuple(
            self.vertices[c].s - self.vertices[p].s for c, p in self.edges
        )

    def children(self, v: int):
        return tuple(c for c, p in self.edges if p == v)

    def is_tree(self) -> bool:
        n = len(self.vertices)
        if len(self.edges) != n - 1:
            return False
        seen = {self.root}
        frontier = [self.root]
        adj = {}
        for c, p in self.edges:
            adj.setdefault(p, []).append(c)
            adj.setdefault(c, []).append(p)
        while frontier:
            v = frontier.pop()
            for w in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == n

    def host_tree(self):
        """(vertex ids, edges, root) triple consumed by the sheaf module."""
        return tuple(range(len(self.vertices))), self.edges, self.root

    def to_dot(self) -> str:
        lines = ["digraph skeleton {"]
        for i, v in enumerate(self.vertices):
            lines.append(
                f'  v{i} [label="a={v.center.canonical_str()}, s={v.s}"];'
            )
        for (c, p), length in zip(self.edges, self.edge_lengths):
            lines.append(f'  v{c} -> v{p} [label="{length}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _sort_key(pt: DiscPoint):
    s = pt.s
    if s.is_infinite:
        return (1, 0, 0, pt.center.canonical_str())
    return (0, s.q, s.e, pt.center.canonical_str())


def build_skeleton(A, s_floor=INFINITY) -> Skeleton:
    """Skeleton spanned by the centers A, leaves truncated at s_floor.

    Centers must stay distinct at the leaf depth: v(a - b) < s_floor for all
    pairs, else the leaf discs coincide as points.
    """
    A = list(A)
    if not A:
        raise DuplicateCenters("need at least one center")
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            d = _dist(A[i], A[j])
            if d >= s_floor:
                raise DuplicateCenters(
                    f"centers {A[i]!r} and {A[j]!r} coincide at depth {s_floor}",
                    witness=[i, j],
                )

    verts = []
    edges = []

    def canonical(group):
        return min(group, key=lambda a: a.canonical_str())

    def add_vertex(pt):
        verts.append(pt)
        return len(verts) - 1

    def partition(group, level: LogValue):
        """Classes of the relation v(a-b) > level."""
        classes = []
        for a in group:
            for cls in classes:
                if _dist(a, cls[0]) > level:
                    cls.append(a)
                    break
            else:
                classes.append([a])
        return classes

    def attach(group, parent_idx):
        # invariant: all pairwise distances in group exceed s(parent)
        if len(group) == 1:
            leaf = add_vertex(DiscPoint(group[0], s_floor))
            edges.append((leaf, parent_idx))
            return
        m = min(
            _dist(group[i], group[j])
            for i in range(len(group))
            for j in range(i + 1, len(group))
        )
        node = add_vertex(DiscPoint(canonical(group), m))
        edges.append((node, parent_idx))
        for cls in partition(group, m):
            attach(cls, node)

    root = add_vertex(DiscPoint(canonical(A), ZERO))
    for cls in partition(A, ZERO):
        attach(cls, root)

    # stable renumbering: sort by (s, serialized center)
    order = sorted(range(len(verts)), key=lambda i: _sort_key(verts[i]))
    renum = {old: new for new, old in enumerate(order)}
    vertices = tuple(verts[i] for i in order)
    new_edges = tuple(sorted((renum[c], renum[p]) for c, p in edges))
    new_root = renum[root]
    degree = {}
    for c, p in new_edges:
        degree[c] = degree.get(c, 0) + 1
        degree[p] = degree.get(p, 0) + 1
    leaves = tuple(
        i for i in range(len(vertices))
        if degree.get(i, 0) == 1 and i != new_root
    )
    return Skeleton(vertices, new_edges, new_root, leaves)
