#!/usr/bin/env python3
"""Derive the Farkas multipliers showing that case II with M0 = X_k and a
fixed surface at level 0 is infeasible for k = 2..8.

Writes src/certificate_data.inc. Each certificate is rebuilt here as exact
rational rows over (a, x, b_1..b_k, y_1..y_k) and checked before emitting.

Recipes:
  k <= 6: sum (3) and (5) over all pairs with weight 1/(k-1), which leaves
          (3 - k/2) x >= 1 after adding (1); x <= 0 comes from
          (2)[1] + (2)[2] + (3)[1,2] (a >= 0) and (4)[1] + (4)[2] + (5)[1,2]
          (a + x <= 0), taken with weight 3 - k/2.
  k = 7:  average the cubic pairs (c-)[i] + (c+)[i] over i, then cancel the
          leftover y-sum with (2)[i] + (4)[i].
  k = 8:  average the cubic pairs over all ordered pairs (i, j), with the
          cubic class 3u - 2E_i - sum of the six others.
"""
from fractions import Fraction as F
from itertools import combinations, permutations
import pathlib
import sys


def idx(k):
    a, x = 0, 1
    b = lambda i: 1 + i          # i is 1-based
    y = lambda i: 1 + k + i
    return a, x, b, y


def pos_row(k, level, d, cs):
    """Row of pair(omega_level, d u + sum cs_i E_i) >= 1 as (row, bound)."""
    a, x, b, y = idx(k)
    n = 2 + 2 * k
    row = [0] * n
    # omega_-1 = c1 + e, omega_1 = c1 - e - Z; pair(u,u)=1, pair(E,E)=-1
    sign = 1 if level == -1 else -1
    row[a] += sign * d
    for i, c in enumerate(cs, start=1):
        row[b(i)] += sign * (-c)
    if level == 1:
        row[x] += -d
        for i, c in enumerate(cs, start=1):
            row[y(i)] += c
    c1_dot = 3 * d + sum(cs)
    return row, 1 - c1_dot


def row_for(k, cid):
    a, x, b, y = idx(k)
    n = 2 + 2 * k
    if cid == "(1)":
        row = [0] * n
        row[x] = 3
        for i in range(1, k + 1):
            row[y(i)] = 1
        return row, 1
    tag, rest = cid.split("[", 1)
    rest = rest.rstrip("]")
    if tag in ("(2)", "(4)"):
        i = int(rest)
        cs = [0] * k
        cs[i - 1] = 1
        return pos_row(k, -1 if tag == "(2)" else 1, 0, cs)
    if tag in ("(3)", "(5)"):
        i, j = map(int, rest.split(","))
        cs = [0] * k
        cs[i - 1] = cs[j - 1] = -1
        return pos_row(k, -1 if tag == "(3)" else 1, 1, cs)
    if tag in ("(c-)", "(c+)"):
        i, others = rest.split(";")
        cs = [0] * k
        cs[int(i) - 1] = -2
        for j in others.split(","):
            cs[int(j) - 1] = -1
        return pos_row(k, -1 if tag == "(c-)" else 1, 3, cs)
    raise ValueError(cid)


def recipe(k):
    m = {}
    def add(cid, w):
        if w:
            m[cid] = m.get(cid, F(0)) + F(w)
    add("(1)", 1)
    if k <= 6:
        lam = F(3) - F(k, 2)
        mu = F(1, k - 1)
        for i, j in combinations(range(1, k + 1), 2):
            add(f"(3)[{i},{j}]", mu)
            add(f"(5)[{i},{j}]", mu)
        add("(3)[1,2]", lam)
        add("(5)[1,2]", lam)
        for i in (1, 2):
            add(f"(2)[{i}]", lam)
            add(f"(4)[{i}]", lam)
    elif k == 7:
        for i in range(1, 8):
            others = ",".join(str(j) for j in range(1, 8) if j != i)
            add(f"(c-)[{i};{others}]", F(1, 7))
            add(f"(c+)[{i};{others}]", F(1, 7))
            add(f"(2)[{i}]", F(1, 7))
            add(f"(4)[{i}]", F(1, 7))
    else:
        for i, j in permutations(range(1, 9), 2):
            others = ",".join(str(l) for l in range(1, 9) if l not in (i, j))
            add(f"(c-)[{i};{others}]", F(1, 56))
            add(f"(c+)[{i};{others}]", F(1, 56))
    return m


def check(k, m):
    n = 2 + 2 * k
    tot = [F(0)] * n
    bsum = F(0)
    for cid, w in m.items():
        assert w >= 0
        row, bound = row_for(k, cid)
        for t in range(n):
            tot[t] += w * row[t]
        bsum += w * bound
    return all(v == 0 for v in tot) and bsum >= 1


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                       pathlib.Path(__file__).resolve().parent.parent / "src" / "certificate_data.inc")
    lines = ["// Generated by tools/derive_certificates.py. Do not edit.",
             "// {k, constraint id, multiplier}"]
    for k in range(2, 9):
        m = recipe(k)
        if not check(k, m):
            sys.exit(f"recipe for k={k} does not close")
        for cid, w in sorted(m.items()):
            lines.append(f'{{{k}, "{cid}", "{w.numerator}/{w.denominator}"}},')
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
