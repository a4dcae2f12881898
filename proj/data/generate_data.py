"""Regenerates the bundled graph6 streams and the signed-graph catalog.

Graph streams come from the networkx graph atlas (all graphs on up to
seven vertices). Catalog polynomials are computed with sympy, so the C++
loader checks them against an independent route.
"""
import pathlib

import networkx as nx
import sympy

DATA = pathlib.Path(__file__).resolve().parent


def write_graph_streams():
    by_order = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0:
            continue
        by_order.setdefault(n, []).append(nx.to_graph6_bytes(g, header=False).decode().strip())
    for n, lines in sorted(by_order.items()):
        (DATA / "graphs" / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
    (DATA / "petersen.g6").write_text(
        nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode())


def toroidal(k):
    edges = []
    for i in range(k):
        a0, a1 = i, (i + 1) % k
        b0, b1 = k + i, k + (i + 1) % k
        edges += [(a0, a1, 1), (b0, b1, -1), (a0, b1, 1), (a1, b0, -1)]
    return 2 * k, edges


def s14():
    d = [[0, 0, 0, 1, 1, 1, 1],
         [0, 1, 1, 0, 0, 1, -1],
         [0, 1, -1, 1, -1, 0, 0],
         [1, 0, 1, 0, -1, 0, 1],
         [1, 0, -1, -1, 0, 1, 0],
         [1, 1, 0, 0, 1, -1, 0],
         [1, -1, 0, 1, 0, 0, -1]]
    return 14, [(i, 7 + j, d[i][j]) for i in range(7) for j in range(7) if d[i][j]]


def huang(d):
    a = sympy.Matrix([[0, 1], [1, 0]])
    for _ in range(1, d):
        m = a.shape[0]
        eye = sympy.eye(m)
        a = sympy.Matrix(sympy.BlockMatrix([[a, eye], [eye, -a]]))
    n = a.shape[0]
    return n, [(i, j, int(a[i, j])) for i in range(n) for j in range(i + 1, n) if a[i, j]]


def a1_seidel():
    # Fig. 2 coordinates: 0=(0,0) 1=(10,15) 2=(0,30) 3=(20,0) 4=(20,30) 5=(30,15) 6=(40,0) 7=(40,30)
    graph = {(0, 1), (1, 4), (5, 6), (4, 5), (0, 3), (3, 6), (1, 5), (1, 3), (3, 5)}
    return 8, [(i, j, -1 if (i, j) in graph else 1) for i in range(8) for j in range(i + 1, 8)]


def c6():
    return 6, [(i, (i + 1) % 6, 1) if i < 5 else (0, 5, 1) for i in range(6)]


def p2_q4tilde():
    # P2 on {0,1}; Q4~ on a=2, b=3, c=4, d=5.
    return 6, [(0, 1, 1), (2, 3, 1), (2, 4, -1), (2, 5, 1), (3, 5, 1), (4, 5, 1)]


def charpoly(n, edges):
    a = sympy.zeros(n, n)
    for u, v, s in edges:
        a[u, v] = a[v, u] = s
    x = sympy.Symbol("x")
    coeffs = sympy.Poly(a.charpoly(x).as_expr(), x).all_coeffs()
    return [int(c) for c in reversed(coeffs)]


def write_catalog():
    entries = [(f"T{2 * k}", toroidal(k), f"toroidal tessellation T_{2 * k}, maximal cyclotomic")
               for k in range(3, 9)]
    entries += [
        ("S14", s14(), "14-vertex maximal cyclotomic signed graph (Fano non-incidence weighing matrix)"),
        ("S16", huang(4), "16-vertex signed hypercube, maximal cyclotomic"),
        ("A1", a1_seidel(), "Seidel signing of the 8-vertex graph A_1; symmetric spectrum"),
        ("C6", c6(), "all-positive hexagon"),
        ("P2_Q4tilde", p2_q4tilde(), "K2 disjoint union Q4~; cospectral with C6"),
    ]
    out = ["# Bundled signed-graph catalog. Regenerate with generate_data.py.",
           "# Block: name, n, edge lines 'u v s', optional charpoly c0..cn, optional provenance.", ""]
    for name, (n, edges), prov in entries:
        out.append(name)
        out.append(str(n))
        for u, v, s in edges:
            u, v = min(u, v), max(u, v)
            out.append(f"{u} {v} {'+' if s > 0 else '-'}")
        out.append("charpoly " + " ".join(str(c) for c in charpoly(n, edges)))
        out.append("provenance " + prov)
        out.append("")
    (DATA / "catalog.txt").write_text("\n".join(out))


if __name__ == "__main__":
    write_graph_streams()
    write_catalog()
