"""Dynkin diagrams: identification from Cartan matrices and ASCII drawing.

Convention: ``A[i][j] = 2 (a_i|a_j) / (a_j|a_j)``, so ``|A[i][j]| > |A[j][i]|``
means ``a_i`` is the longer of the two.
"""

from __future__ import annotations

from math import factorial
from typing import Sequence

WEYL_ORDERS_EXCEPTIONAL = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def components(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Connected components of the Dynkin graph, each sorted, in order of first node."""
    n = len(a)
    seen: set[int] = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and (a[i][j] or a[j][i]):
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _connected_type(a: Sequence[Sequence[int]], nodes: list[int]) -> str | None:
    r = len(nodes)
    if r == 1:
        return "A1"
    adj: dict[int, list[int]] = {i: [] for i in nodes}
    bonds = {}
    for x in nodes:
        for y in nodes:
            if x < y and (a[x][y] or a[y][x]):
                m = a[x][y] * a[y][x]
                if m not in (1, 2, 3):
                    return None
                adj[x].append(y)
                adj[y].append(x)
                bonds[(x, y)] = m
    if len(bonds) != r - 1:
        return None  # a cycle, hence not of finite type
    mults = list(bonds.values())
    if 3 in mults:
        return "G2" if r == 2 else None
    degs = {i: len(adj[i]) for i in nodes}
    if mults.count(2) > 1:
        return None
    if 2 in mults:
        if max(degs.values()) > 2:
            return None
        if r == 2:
            return "B2"
        (x, y), = [k for k, m in bonds.items() if m == 2]
        if r == 4 and degs[x] == 2 and degs[y] == 2:
            return "F4"
        if not (degs[x] == 1 or degs[y] == 1):
            return None
        # count short nodes: propagate lengths from the double bond
        long_node, short_node = (x, y) if abs(a[x][y]) > abs(a[y][x]) else (y, x)
        short = _side(adj, short_node, long_node)
        return f"B{r}" if len(short) == 1 else (f"C{r}" if len(short) == r - 1 else None)
    branch = [i for i in nodes if degs[i] >= 3]
    if not branch:
        return f"A{r}"
    if len(branch) > 1 or degs[branch[0]] != 3:
        return None
    c = branch[0]
    arms = sorted(len(_side(adj, nb, c)) for nb in adj[c])
    if arms[0] == 1 and arms[1] == 1:
        return f"D{r}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{r}"
    return None


def _side(adj: dict[int, list[int]], start: int, avoid: int) -> set[int]:
    """Nodes reachable from ``start`` without passing through ``avoid``."""
    seen = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j != avoid and j not in seen:
                seen.add(j)
                stack.append(j)
    return seen


def _sort_key(label: str) -> tuple[str, int]:
    return label[0], int(label[1:])


def cartan_type(a: Sequence[Sequence[int]]) -> str | None:
    """Type label such as ``"E8"`` or ``"A1+B3"``; None if not of finite shape."""
    labels = []
    for comp in components(a):
        t = _connected_type(a, comp)
        if t is None:
            return None
        labels.append(t)
    return "+".join(sorted(labels, key=_sort_key))


def component_types(a: Sequence[Sequence[int]]) -> list[tuple[list[int], str | None]]:
    return [(comp, _connected_type(a, comp)) for comp in components(a)]


def weyl_group_order(label: str) -> int:
    """Order of the Weyl group of a (possibly reducible) finite type."""
    total = 1
    for part in label.split("+"):
        x, n = part[0], int(part[1:])
        if x == "A":
            total *= factorial(n + 1)
        elif x in "BC":
            total *= 2**n * factorial(n)
        elif x == "D":
            total *= 2 ** (n - 1) * factorial(n)
        else:
            total *= WEYL_ORDERS_EXCEPTIONAL[part]
    return total


def algebra_dim(label: str) -> int:
    """Dimension of the complex semisimple Lie algebra of the given type."""
    total = 0
    for part in label.split("+"):
        x, n = part[0], int(part[1:])
        total += {
            "A": n * (n + 2),
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(n, 0),
            "F": 52,
            "G": 14,
        }[x]
    return total


_BOND = {1: "---", 2: "===", 3: "###"}


def ascii_diagram(a: Sequence[Sequence[int]], crossed: Sequence[int] = (), labels: Sequence[str] | None = None) -> str:
    """Draw the diagram with ``x`` under crossed nodes.

    The longest simple path is drawn horizontally; remaining nodes hang below
    the node they attach to.  Multiple bonds carry ``>``/``<`` pointing to the
    shorter root.
    """
    n = len(a)
    labels = list(labels) if labels is not None else [str(i + 1) for i in range(n)]
    crossed = set(crossed)
    blocks = []
    for comp in components(a):
        blocks.append(_draw_component(a, comp, crossed, labels))
    return "\n\n".join(blocks)


def _draw_component(a, comp, crossed, labels) -> str:
    adj = {i: [j for j in comp if j != i and (a[i][j] or a[j][i])] for i in comp}
    path = _longest_path(adj, comp)
    width = 6
    top = ""
    line = ""
    marks = ""
    col = {}
    for k, i in enumerate(path):
        col[i] = k * width
        top += labels[i].ljust(width)
        line += "o"
        marks += ("x" if i in crossed else " ")
        if k + 1 < len(path):
            j = path[k + 1]
            m = a[i][j] * a[j][i]
            bond = _BOND[m] if m in _BOND else "-?-"
            if m > 1:
                arrow = ">" if abs(a[i][j]) > abs(a[j][i]) else "<"
                bond = bond[0] + arrow + bond[2]
            line += "-" + bond + "-"
            marks += " " * 5
    rows = [top.rstrip(), line, marks.rstrip()]
    hanging = [i for i in comp if i not in col]
    for i in sorted(hanging):
        anchor = next((j for j in adj[i] if j in col), None)
        c = col.get(anchor, 0)
        rows.append(" " * c + "|")
        rows.append(" " * c + "o " + labels[i] + (" x" if i in crossed else ""))
    return "\n".join(r for r in rows if r.strip())


def _longest_path(adj: dict[int, list[int]], comp: list[int]) -> list[int]:
    best: list[int] = [comp[0]]

    def walk(path: list[int]) -> None:
        nonlocal best
        if len(path) > len(best) or (len(path) == len(best) and path < best):
            best = list(path)
        for j in adj[path[-1]]:
            if j not in path:
                path.append(j)
                walk(path)
                path.pop()

    for s in comp:
        walk([s])
    return best
