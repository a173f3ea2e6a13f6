"""
Materialised balls of the tree, explored breadth first
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.tree import Vertex, neighbors
from src.utils.errors import OutOfBall


@dataclass(frozen=True)
class TreeBall:
    center: Vertex
    radius: int
    adjacency: Dict[Vertex, Tuple[Vertex, ...]]
    order: Tuple[Vertex, ...]

    def __contains__(self, v: Vertex) -> bool:
        return v in self.adjacency

    def __len__(self) -> int:
        return len(self.order)

    def interior(self) -> List[Vertex]:
        """Vertices strictly inside the ball, whose whole neighbourhood is materialised"""
        return [v for v in self.order if bfs_distance(self, self.center, v) < self.radius]


def bfs_ball(center: Vertex, radius: int) -> TreeBall:
    depth = {center: 0}
    order = [center]
    frontier = deque([center])
    while frontier:
        v = frontier.popleft()
        if depth[v] == radius:
            continue
        for w in neighbors(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                order.append(w)
                frontier.append(w)
    adjacency = {v: tuple(w for w in neighbors(v) if w in depth) for v in order}
    return TreeBall(center, radius, adjacency, tuple(order))


def bfs_distance(ball: TreeBall, v: Vertex, w: Vertex) -> int:
    for x in (v, w):
        if x not in ball:
            raise OutOfBall(f"{x} is outside the ball of radius {ball.radius} around {ball.center}")
    seen = {v: 0}
    frontier = deque([v])
    while frontier:
        x = frontier.popleft()
        if x == w:
            return seen[x]
        for y in ball.adjacency[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                frontier.append(y)
    raise OutOfBall(f"{w} is not reachable from {v} inside the ball")
