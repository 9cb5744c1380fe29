from collections.abc import Iterable, Sequence


class UnionFind:
    """Disjoint sets over 0..n-1."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, element: int) -> int:
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False
        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
        return True

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for element in range(len(self.parent)):
            groups.setdefault(self.find(element), []).append(element)
        return normalize_blocks(groups.values())


def normalize_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Sort members inside each block and blocks by their least member."""
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


def components_of_matrix(matrix: Sequence[Sequence], members: Sequence[int] | None = None):
    """Connected components of the graph with edge (i, j) whenever matrix[i][j] is nonzero."""
    nodes = list(range(len(matrix))) if members is None else list(members)
    position = {node: k for k, node in enumerate(nodes)}
    forest = UnionFind(len(nodes))
    for i in nodes:
        for j in nodes:
            if matrix[i][j]:
                forest.unite(position[i], position[j])
    return normalize_blocks(
        [nodes[k] for k in block] for block in forest.blocks()
    )


def is_equivalence(matrix: Sequence[Sequence], members: Sequence[int] | None = None) -> bool:
    nodes = list(range(len(matrix))) if members is None else list(members)
    for i in nodes:
        if not matrix[i][i]:
            return False
        for j in nodes:
            if bool(matrix[i][j]) != bool(matrix[j][i]):
                return False
            if matrix[i][j]:
                for k in nodes:
                    if matrix[j][k] and not matrix[i][k]:
                        return False
    return True


def block_index(blocks: Sequence[Sequence[int]]) -> dict[int, int]:
    return {member: position for position, block in enumerate(blocks) for member in block}
