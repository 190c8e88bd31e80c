"""Unit-capacity max-flow (Dinic) on residual arc arrays.

Arcs are stored in pairs ``(a, a ^ 1)``; an undirected unit edge is a pair of
arcs that each start with capacity 1, a directed arc pairs with a 0-capacity
reverse.  Every capacity is 0 or 1, so each augmenting path carries one unit.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class UnitFlowNetwork:
    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[int] = []
        self.base_cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n_nodes)]
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, undirected: bool = False) -> None:
        a = len(self.head)
        self.head += [v, u]
        self.base_cap += [1, 1 if undirected else 0]
        self.out[u].append(a)
        self.out[v].append(a + 1)

    def max_flow(self, sources: Iterable[int], sinks: Iterable[int], cutoff: int | None = None) -> int:
        """Flow value from the source set to the sink set.

        With ``cutoff`` given, stops as soon as the value exceeds it; the
        residual state is then partial and only the value is meaningful.
        """
        sources = list(dict.fromkeys(sources))
        is_sink = [False] * self.n
        for t in sinks:
            is_sink[t] = True
        head, out = self.head, self.out
        cap = self.cap = list(self.base_cap)
        flow = 0
        while True:
            level = [-1] * self.n
            for s in sources:
                level[s] = 0
            queue = deque(sources)
            reached = False
            while queue:
                u = queue.popleft()
                for a in out[u]:
                    v = head[a]
                    if cap[a] and level[v] < 0:
                        level[v] = level[u] + 1
                        if is_sink[v]:
                            reached = True
                        else:
                            queue.append(v)
            if not reached:
                return flow

            it = [0] * self.n
            for s in sources:
                while True:
                    path: list[int] = []
                    u = s
                    while not is_sink[u]:
                        arcs = out[u]
                        i = it[u]
                        while i < len(arcs):
                            a = arcs[i]
                            if cap[a] and level[head[a]] == level[u] + 1:
                                break
                            i += 1
                        it[u] = i
                        if i < len(arcs):
                            path.append(arcs[i])
                            u = head[arcs[i]]
                            continue
                        if not path:
                            break
                        # dead end: retreat and skip the arc that led here
                        level[u] = -1
                        a = path.pop()
                        u = head[a ^ 1]
                        it[u] += 1
                    if not is_sink[u]:
                        break
                    for a in path:
                        cap[a] -= 1
                        cap[a ^ 1] += 1
                    flow += 1
                    if cutoff is not None and flow > cutoff:
                        return flow

    def residual_reachable(self, sources: Iterable[int]) -> set[int]:
        """Nodes reachable from the sources in the residual network of the last flow."""
        seen = set(sources)
        queue = deque(seen)
        head, cap = self.head, self.cap
        while queue:
            u = queue.popleft()
            for a in self.out[u]:
                v = head[a]
                if cap[a] and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen
