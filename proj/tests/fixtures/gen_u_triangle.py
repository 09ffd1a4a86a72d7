#!/usr/bin/env python3
"""Write the b-file of the Chebyshev U coefficient triangle, rows 0..19.

Uses only U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}; row n lists the
coefficients of x^0..x^n.
"""
import sys

rows = [[1], [0, 2]]
while len(rows) < 20:
    a, b = rows[-1], rows[-2]
    nxt = [0] * (len(a) + 1)
    for k, c in enumerate(a):
        nxt[k + 1] += 2 * c
    for k, c in enumerate(b):
        nxt[k] -= c
    rows.append(nxt)

out = open(sys.argv[1], "w") if len(sys.argv) > 1 else sys.stdout
idx = 1
for row in rows:
    for c in row:
        out.write(f"{idx} {c}\n")
        idx += 1
