"""Scratch validation: independent brute-force invariants vs linalg primitives."""
import sys, time
sys.path.insert(0, "/root/pkg/src")
from fractions import Fraction
from syzplane.poly import parse, monomial_basis, monomial_index, basis_dimension
from syzplane import linalg


def mu_matrix_rows(f, r):
    """Integer rows of the map S_r^3 -> S_{r+d-1}, (a,b,c) |-> a fx + b fy + c fz."""
    d = f.degree
    fi = f.primitive()
    parts = [fi.partial(v).integer_coefficients() for v in "xyz"]
    rows_basis = monomial_basis(r + d - 1)
    rows_idx = monomial_index(r + d - 1)
    cols_basis = monomial_basis(r)
    ncols = 3 * len(cols_basis)
    rows = [[0] * ncols for _ in rows_basis]
    col = 0
    for block in range(3):
        part = parts[block]
        for m in cols_basis:
            for q, cf in part.items():
                tgt = (m[0] + q[0], m[1] + q[1], m[2] + q[2])
                rows[rows_idx[tgt]][col] += cf
            col += 1
    return rows, len(rows_basis), ncols


def naive_fraction_rank(rows, ncols):
    """Entirely independent Gaussian elimination over Fraction."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        inv = 1 / pr[c]
        mat[rank] = [v * inv for v in pr]
        pr = mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        rank += 1
    return rank


PENCIL2 = parse("(x^2+y^2-z^2)*(2*x^2+y^2-z^2)*(x^2+2*y^2-z^2)")
print("== pencil l=2, d =", PENCIL2.degree)

# AR dims r=0..5 via naive oracle vs linalg nullspace
t0 = time.time()
ar = []
for r in range(6):
    rows, nr, nc = mu_matrix_rows(PENCIL2, r)
    dim_naive = nc - naive_fraction_rank(rows, nc)
    ns = linalg.nullspace_int_rows(rows, nc)
    assert ns.dimension == dim_naive, (r, ns.dimension, dim_naive)
    ar.append(ns.dimension)
print("ar dims:", ar, "expected [0, 0, 0, 2, 6, 13]", "%.2fs" % (time.time() - t0))

# milnor dims k=0..14
t0 = time.time()
d = 6
mil = []
for k in range(0, 3 * d - 3):
    r = k - d + 1
    if r < 0:
        rk = 0
    else:
        rows, nr, nc = mu_matrix_rows(PENCIL2, r)
        rk = linalg.rank_int_rows(rows, nc)
    mil.append(basis_dimension(k) - rk)
print("milnor:", mil, "%.2fs" % (time.time() - t0))
print("tau:", mil[3 * d - 4], "expected 16")
