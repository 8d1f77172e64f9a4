"""Dinic's blocking-flow maximum flow on integer capacities."""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        # parallel arrays indexed by arc id; arc ^ 1 is the reverse arc
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("capacity must be nonnegative")
        arc = len(self.to)
        self.to += [v, u]
        self.cap += [capacity, 0]
        self.head[u].append(arc)
        self.head[v].append(arc + 1)
        return arc

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.head[u]:
                v = self.to[arc]
                if self.cap[arc] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        if s == t:
            raise ValueError("source and sink coincide")
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._augment(s, t, level, it)
                if not pushed:
                    break
                total += pushed

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        """Find one augmenting path in the level graph (iterative DFS) and push along it."""
        path: list[int] = []
        u = s
        while True:
            if u == t:
                push = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= push
                    self.cap[a ^ 1] += push
                return push
            arcs = self.head[u]
            advanced = False
            while it[u] < len(arcs):
                arc = arcs[it[u]]
                v = self.to[arc]
                if self.cap[arc] > 0 and level[v] == level[u] + 1:
                    path.append(arc)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if u == s:
                    return 0
                level[u] = -1
                arc = path.pop()
                u = self.to[arc ^ 1]
                it[u] += 1

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the residual network (the min-cut source side)."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.head[u]:
                v = self.to[arc]
                if self.cap[arc] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen
