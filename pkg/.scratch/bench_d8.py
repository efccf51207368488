"""Timing probe: degree-8 megyesi r=2, exact kernels and big-matrix ranks."""
import sys, time
sys.path.insert(0, "/root/pkg/src")
from syzplane.poly import parse, monomial_basis, monomial_index, basis_dimension
from syzplane import linalg
from oracle_check import mu_matrix_rows

MEG2 = parse("(x^2+y^2-z^2)*(x^2+(2)^2*y^2-(2)^2*z^2)*(x^2+y^2-(2)^2*z^2)*((2)^2*x^2+y^2-(2)^2*z^2)")
print("degree", MEG2.degree)
d = 8

ar = []
kern = {}
for r in range(0, d):
    t0 = time.time()
    rows, nr, nc = mu_matrix_rows(MEG2, r)
    ns = linalg.nullspace_int_rows(rows, nc)
    kern[r] = ns
    ar.append(ns.dimension)
    print("r=%d  %dx%d  dim=%d  %.2fs" % (r, nr, nc, ns.dimension, time.time() - t0))
print("ar:", ar, "expected [0,0,0,0,1,6,13,22]")

# exact rank of the big matrices (k = 15..20 -> r = 8..13) via full Bareiss: how slow?
for r in (8, 11, 13):
    rows, nr, nc = mu_matrix_rows(MEG2, r)
    t0 = time.time()
    p = linalg.screen_primes()[0]
    rm = linalg.rank_mod(rows, nc, p)
    tmod = time.time() - t0
    t0 = time.time()
    rk, _ = linalg.bareiss_echelon(rows, nc)
    tex = time.time() - t0
    k = r + d - 1
    print("r=%d (k=%d) %dx%d rank_mod=%d (%.3fs) bareiss=%d (%.2fs) -> dimM=%d"
          % (r, k, nr, nc, rm, tmod, rk, tex, basis_dimension(k) - rk))
