"""Independent cross-check helpers for the test suite.

Everything here is deliberately naive: plain Fraction Gaussian
elimination, matrices assembled through polynomial multiplication, and
closed-form dimension counts.  The library must agree with these on
every fixture; the slow path is the referee, not the implementation.
"""

from fractions import Fraction

from hypothesis import strategies as st

from syzplane import poly


def naive_rank(rows):
    """Row rank by fraction Gaussian elimination, no pivoting tricks."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [x / inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def naive_nullity(rows):
    ncols = len(rows[0]) if rows else 0
    return ncols - naive_rank(rows)


def jacobian_matrix_by_multiplication(f, r):
    """Columns of the syzygy map in degree r, built with poly.multiply.

    Each column is m * f_v for a monomial m of degree r and a partial
    f_v, expressed in the degree r + deg(f) - 1 monomial basis.  Rows
    are returned (target basis element by column) so the kernel of the
    column space matches the graded syzygy space.
    """
    partials = [poly.partial(f, v) for v in ("x", "y", "z")]
    src = poly.monomial_basis(r)
    tgt = poly.monomial_index(r + f.degree - 1)
    columns = []
    for p in partials:
        for m in src:
            shifted = poly.multiply(
                poly.HomogeneousPolynomial(r, {m: Fraction(1)}), p
            )
            col = [Fraction(0)] * len(tgt)
            for mono, c in shifted.terms.items():
                col[tgt[mono]] = c
            columns.append(col)
    return [list(row) for row in zip(*columns)]


def _dim(n):
    return (n + 2) * (n + 1) // 2 if n >= 0 else 0


def resolution_milnor_dim(d, generator_degrees, second_syzygy_degrees, k):
    """dim of the Jacobian algebra in degree k from the resolution shape.

    Uses the graded four-term exact sequence tying the algebra to the
    syzygy module: with r = k - d + 1, the dimension is
    dim S_k - 3*dim S_r + sum_i dim S_{r - d_i} - sum_j dim S_{r - (e_j - d + 1)}.
    """
    r = k - d + 1
    total = _dim(k) - 3 * _dim(r)
    for di in generator_degrees:
        total += _dim(r - di)
    for ej in second_syzygy_degrees:
        total -= _dim(r - (ej - d + 1))
    return total


def syzygy_holds(f, triple, r):
    """Check a*f_x + b*f_y + c*f_z == 0 with polynomial arithmetic.

    triple is a flat coefficient vector over the degree-r basis, blocked
    (a, b, c) the way kernel vectors come out of the engine.
    """
    basis = poly.monomial_basis(r)
    n = len(basis)
    acc = poly.zero_polynomial(r + f.degree - 1)
    for slot, var in enumerate(("x", "y", "z")):
        terms = {}
        for m, c in zip(basis, triple[slot * n : (slot + 1) * n]):
            c = Fraction(c)
            if c != 0:
                terms[m] = c
        component = poly.HomogeneousPolynomial(r, terms)
        acc = acc + poly.multiply(component, poly.partial(f, var))
    return acc.is_zero


# --- hypothesis strategies ------------------------------------------------

nonzero_fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9).filter(bool),
    st.integers(min_value=1, max_value=4),
)


@st.composite
def homogeneous_polynomials(draw, min_degree=1, max_degree=4):
    degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    basis = poly.monomial_basis(degree)
    picked = draw(
        st.lists(
            st.sampled_from(basis),
            min_size=1,
            max_size=min(len(basis), 6),
            unique=True,
        )
    )
    terms = {m: draw(nonzero_fractions) for m in picked}
    return poly.HomogeneousPolynomial(degree, terms)


small_int_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda ncols: st.lists(
        st.lists(
            st.integers(min_value=-12, max_value=12),
            min_size=ncols,
            max_size=ncols,
        ),
        min_size=1,
        max_size=5,
    )
)
