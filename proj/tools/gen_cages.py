#!/usr/bin/env python3
"""Generate the cage catalog shipped in data/cages/.

Every graph is built from a finite-geometry construction and then checked
for regularity and girth before it is written. Output format is the edge
list used by the library: a header line "n m" followed by m lines "u v"
with 0-indexed vertices and u < v, sorted.
"""

import itertools
import sys
from collections import deque
from pathlib import Path


def projective_points(dim, q):
    """Normalized representatives of PG(dim-1, q): first nonzero entry is 1."""
    pts = []
    for vec in itertools.product(range(q), repeat=dim):
        nz = [x for x in vec if x]
        if nz and nz[0] == 1:
            pts.append(vec)
    return pts


def normalize(vec, q):
    for x in vec:
        if x:
            inv = pow(x, q - 2, q)
            return tuple((y * inv) % q for y in vec)
    raise ValueError("zero vector")


def span_points(a, b, q):
    pts = {normalize(b, q)}
    for t in range(q):
        pts.add(normalize(tuple((x + t * y) % q for x, y in zip(a, b)), q))
    return frozenset(pts)


def incidence_graph(points, lines):
    index = {p: i for i, p in enumerate(points)}
    n = len(points) + len(lines)
    edges = []
    for j, line in enumerate(lines):
        for p in line:
            edges.append((index[p], len(points) + j))
    return n, sorted(edges)


def pg2(q):
    pts = projective_points(3, q)
    lines = []
    for coeffs in projective_points(3, q):
        lines.append(frozenset(p for p in pts if sum(c * x for c, x in zip(coeffs, p)) % q == 0))
    return incidence_graph(pts, lines)


def symplectic_gq(q):
    """W(q): points of PG(3,q), lines totally isotropic for x0y1-x1y0+x2y3-x3y2."""
    pts = projective_points(4, q)

    def form(x, y):
        return (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % q

    lines = set()
    for a, b in itertools.combinations(pts, 2):
        if form(a, b) == 0:
            lines.add(span_points(a, b, q))
    return incidence_graph(pts, sorted(lines, key=sorted))


def split_cayley_hexagon(q):
    """H(q): points of Q(6,q): x0x4+x1x5+x2x6 = x3^2, lines of Q(6,q) whose
    Grassmann coordinates satisfy p12=p34, p54=p32, p20=p35, p65=p30,
    p01=p36, p46=p31."""
    def quad(x):
        return (x[0] * x[4] + x[1] * x[5] + x[2] * x[6] - x[3] * x[3]) % q

    def bil(x, y):
        return (x[0] * y[4] + x[4] * y[0] + x[1] * y[5] + x[5] * y[1]
                + x[2] * y[6] + x[6] * y[2] - 2 * x[3] * y[3]) % q

    pts = [p for p in projective_points(7, q) if quad(p) == 0]

    def p(x, y, i, j):
        return (x[i] * y[j] - x[j] * y[i]) % q

    conditions = [((1, 2), (3, 4)), ((5, 4), (3, 2)), ((2, 0), (3, 5)),
                  ((6, 5), (3, 0)), ((0, 1), (3, 6)), ((4, 6), (3, 1))]
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        if bil(a, b) != 0:
            continue
        if all(p(a, b, *lhs) == p(a, b, *rhs) for lhs, rhs in conditions):
            lines.add(span_points(a, b, q))
    return incidence_graph(pts, sorted(lines, key=sorted))


def petersen():
    verts = list(itertools.combinations(range(5), 2))
    edges = []
    for i, a in enumerate(verts):
        for j, b in enumerate(verts):
            if i < j and not set(a) & set(b):
                edges.append((i, j))
    return len(verts), sorted(edges)


def girth(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    best = None
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def degrees(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return set(deg)


CATALOG = {
    "cage_3_5.txt": (3, 5, petersen),
    "cage_4_6.txt": (4, 6, lambda: pg2(3)),
    "cage_3_8.txt": (3, 8, lambda: symplectic_gq(2)),
    "cage_4_8.txt": (4, 8, lambda: symplectic_gq(3)),
    "cage_6_8.txt": (6, 8, lambda: symplectic_gq(5)),
    "cage_4_12.txt": (4, 12, lambda: split_cayley_hexagon(3)),
}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "cages"
    out.mkdir(parents=True, exist_ok=True)
    for name, (delta, g, build) in CATALOG.items():
        n, edges = build()
        deg = degrees(n, edges)
        gi = girth(n, edges)
        if deg != {delta} or gi != g:
            raise SystemExit(f"{name}: degrees {deg}, girth {gi}, expected ({delta},{g})")
        with open(out / name, "w") as fh:
            fh.write(f"{n} {len(edges)}\n")
            for u, v in edges:
                fh.write(f"{u} {v}\n")
        print(f"{name}: n={n} m={len(edges)} delta={delta} girth={gi}")


if __name__ == "__main__":
    main()
