"""Truncated power-series solving of a generating-function system.

Starting from the zero series, right-hand sides are substituted repeatedly
until every series stabilizes. Labels are processed leaves-first (reverse
discovery order from the root) so chains of sums propagate within a pass; a
well-founded system stabilizes within max_n + 2 passes, and anything slower
is reported as non-convergent.
"""

from __future__ import annotations

from collections import deque

from combseek.transfer.gfsystem import GFSystem, Geom, Node, Prod, SeriesNode, Sum, Var, XPow


class NonConvergent(RuntimeError):
    """The fixed-point iteration failed to stabilize: ill-founded system."""


def _eval(node: Node, env: dict[int, list[int]], limit: int) -> list[int]:
    if isinstance(node, Var):
        return env[node.label][: limit + 1]
    if isinstance(node, XPow):
        out = [0] * (limit + 1)
        if node.k <= limit:
            out[node.k] = 1
        return out
    if isinstance(node, Geom):
        return [1 if n >= node.k else 0 for n in range(limit + 1)]
    if isinstance(node, SeriesNode):
        coeffs = list(node.coeffs[: limit + 1])
        return coeffs + [0] * (limit + 1 - len(coeffs))
    if isinstance(node, Sum):
        out = [0] * (limit + 1)
        for arg in node.args:
            for i, c in enumerate(_eval(arg, env, limit)):
                out[i] += c
        return out
    if isinstance(node, Prod):
        acc = [1] + [0] * limit
        for arg in node.args:
            nxt = _eval(arg, env, limit)
            out = [0] * (limit + 1)
            for i, a in enumerate(acc):
                if a == 0:
                    continue
                for j in range(limit + 1 - i):
                    if nxt[j]:
                        out[i + j] += a * nxt[j]
            acc = out
        return acc
    raise TypeError(f"cannot evaluate node {node!r}")


def _vars_of(node: Node) -> list[int]:
    if isinstance(node, Var):
        return [node.label]
    if isinstance(node, (Sum, Prod)):
        out = []
        for arg in node.args:
            out.extend(_vars_of(arg))
        return out
    return []


def _update_order(system: GFSystem) -> list[int]:
    """Labels in reverse breadth-first discovery order from the root."""
    rhs = dict(system.equations)
    order = []
    seen = {system.root}
    queue = deque([system.root])
    while queue:
        label = queue.popleft()
        order.append(label)
        for v in _vars_of(rhs[label]):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    for label, _ in system.equations:  # unreachable labels, if any
        if label not in seen:
            order.append(label)
    return list(reversed(order))


def solve_series(system: GFSystem, max_n: int) -> dict[int, list[int]]:
    """Coefficients 0..max_n of every series in the system."""
    rhs = dict(system.equations)
    order = _update_order(system)
    env: dict[int, list[int]] = {label: [0] * (max_n + 1) for label in rhs}
    for _ in range(max_n + 2):
        stable = True
        for label in order:
            new = _eval(rhs[label], env, max_n)
            if new != env[label]:
                env[label] = new
                stable = False
        if stable:
            return env
    raise NonConvergent(
        f"series not stable after {max_n + 2} iterations; the system does not "
        "determine its solution"
    )
