"""Independent matrix oracles over exact rationals (type A models).

Everything here works inside sl_n realized as trace-zero n x n matrices,
with the trace form tr(xy) in place of the Killing form. The two differ
by the positive scalar 2n, which cannot change any rank, kernel, or
radical computed here; the scaling property test in the suite guards
that claim.

These oracles are deliberately independent of the combinatorial
formulas they validate: dimensions come from ranks of ad maps, Richardson
partitions from Jordan types of random nilradical elements, Springer
degrees from exact flag counting. All randomness is seeded and the seed
strings are derivable by callers for reporting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContactresError,
    NonFiniteFiber,
    NonGenericSample,
    SizeCapExceeded,
    ZeroElement,
)
from .ratlinalg import independent_columns, nullspace, rank, rref, solve

ADDIM_SIZE_CAP = 8   # ad_e acts on an (n^2-1)-dim space; keep desk scale
FIBER_SIZE_CAP = 4
GENERIC_TRIALS = 3

Matrix = tuple[tuple[Fraction, ...], ...]


def _zeros(n) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _freeze(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = _zeros(n)
    for i in range(n):
        for k in range(n):
            aik = a[i][k]
            if aik:
                for j in range(n):
                    if b[k][j]:
                        out[i][j] += aik * b[k][j]
    return _freeze(out)


def bracket(a: Matrix, b: Matrix) -> Matrix:
    ab, ba = mat_mul(a, b), mat_mul(b, a)
    return _freeze([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)])


def trace_product(a: Matrix, b: Matrix) -> Fraction:
    """tr(ab): the invariant form used in place of the Killing form."""
    return sum(a[i][j] * b[j][i] for i in range(len(a)) for j in range(len(a)))


def _vec(m: Matrix) -> tuple[Fraction, ...]:
    return tuple(x for row in m for x in row)


def _is_nilpotent(e: Matrix) -> bool:
    power = e
    for _ in range(len(e)):
        if all(x == 0 for row in power for x in row):
            return True
        power = mat_mul(power, e)
    return all(x == 0 for row in power for x in row)


def sl_basis(n: int) -> tuple[Matrix, ...]:
    """Ordered basis of trace-zero matrices: E_ij (i != j), then
    H_i = E_ii - E_{i+1,i+1}."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = _zeros(n)
                m[i][j] = Fraction(1)
                basis.append(_freeze(m))
    for i in range(n - 1):
        m = _zeros(n)
        m[i][i] = Fraction(1)
        m[i + 1][i + 1] = Fraction(-1)
        basis.append(_freeze(m))
    return tuple(basis)


@dataclass(frozen=True)
class MatrixModel:
    """A nilpotent element of sl_n together with the ambient basis."""

    n: int
    e: Matrix
    basis_g: tuple[Matrix, ...]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.e for x in row)


def matrix_model(e, size_cap: int = ADDIM_SIZE_CAP) -> MatrixModel:
    """Wrap an explicit rational matrix, verifying nilpotency."""
    e = _freeze(e)
    n = len(e)
    if any(len(row) != n for row in e):
        raise ContactresError("matrix model requires a square matrix")
    if n > size_cap:
        raise SizeCapExceeded(f"size {n} exceeds cap {size_cap}")
    if not _is_nilpotent(e):
        raise ContactresError("matrix is not nilpotent")
    return MatrixModel(n=n, e=e, basis_g=sl_basis(n))


def jordan_nilpotent(part, size_cap: int = ADDIM_SIZE_CAP) -> MatrixModel:
    """Block Jordan nilpotent of type ``part`` with rational entries."""
    part = tuple(int(p) for p in part)
    n = sum(part)
    if n > size_cap:
        raise SizeCapExceeded(f"partition of {n} exceeds cap {size_cap}")
    rows = _zeros(n)
    offset = 0
    for block in part:
        for i in range(block - 1):
            rows[offset + i][offset + i + 1] = Fraction(1)
        offset += block
    return matrix_model(rows, size_cap=size_cap)


def _ad_images(m: MatrixModel):
    return [_vec(bracket(m.e, b)) for b in m.basis_g]


def addim(m: MatrixModel) -> int:
    """dim O = rank of ad_e on the trace-zero matrices."""
    return rank(_ad_images(m))


def jordan_type(e: Matrix) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix from ranks of its powers."""
    n = len(e)
    ranks = [n]
    power = e
    for _ in range(n):
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = mat_mul(power, e)
    if ranks[-1] != 0:
        raise ContactresError("matrix is not nilpotent")
    # ranks[k-1] - ranks[k] counts Jordan blocks of size >= k, i.e. the
    # k-th part of the dual partition; transpose it back.
    dual = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    part = tuple(sum(1 for d in dual if d >= j) for j in range(1, dual[0] + 1))
    assert sum(part) == n
    return part


def kks_rank(m: MatrixModel) -> int:
    """Rank of the skew form (x, y) -> tr(e [x, y]) on trace-zero matrices.

    Its radical is the centralizer of e, so the rank recomputes dim O by a
    route independent of ad-rank.
    """
    brackets = [bracket(m.e, b) for b in m.basis_g]
    k = len(m.basis_g)
    form = [[trace_product(brackets[a], m.basis_g[b]) for b in range(k)]
            for a in range(k)]
    return rank(form)


@dataclass(frozen=True)
class ContactCheckResult:
    """Pointwise linearization of the contact-nondegeneracy condition."""

    dim_orbit: int
    theta_kernel_dim: int
    omega_rank_on_kernel: int
    radical_is_euler_line: bool

    @property
    def is_contact(self) -> bool:
        return (self.omega_rank_on_kernel == self.dim_orbit - 2
                and self.theta_kernel_dim == self.dim_orbit - 1
                and self.radical_is_euler_line)


def contact_check(m: MatrixModel) -> ContactCheckResult:
    """Check the linear-algebra shadow of contact nondegeneracy at e.

    The tangent space T_e O is the image of ad_e. The one-form sends
    [e, x] to tr(e x); this is well defined because tr(e z) vanishes on
    the centralizer z of e (verified, not assumed). On its kernel F the
    KKS form ([e,x],[e,y]) -> tr(e [x,y]) must have rank dim O - 2 with
    radical exactly the line through e, the direction collapsed by
    projectivisation; e itself is tangent since e = [h/2, e] for any
    sl_2-triple through e.
    """
    if m.is_zero:
        raise ZeroElement("contact check needs a nonzero nilpotent")
    images = _ad_images(m)
    cols = list(zip(*images))
    pivots = independent_columns(cols)
    d = len(pivots)

    # well-definedness: the trace functional kills the centralizer
    for z in nullspace(cols):
        zmat = _combine(m.basis_g, z)
        assert trace_product(m.e, zmat) == 0, \
            "trace form fails to vanish on the centralizer"

    tangent = [images[j] for j in pivots]
    preimages = [m.basis_g[j] for j in pivots]
    theta = [trace_product(m.e, x) for x in preimages]
    kernel = nullspace([theta])  # coords in the tangent basis
    k = len(kernel)

    reps = [_combine(preimages, f) for f in kernel]
    brackets = [bracket(m.e, x) for x in reps]
    omega = [[trace_product(brackets[a], reps[b]) for b in range(k)]
             for a in range(k)]
    omega_rank = rank(omega)

    radical = nullspace(omega)
    euler = solve(list(zip(*tangent)), _vec(m.e))
    assert euler is not None, "e must lie in the image of ad_e"
    assert sum(t * c for t, c in zip(theta, euler)) == 0, \
        "theta must vanish on the Euler direction"
    euler_in_kernel = solve(list(zip(*kernel)), euler)
    radical_is_euler = (
        len(radical) == 1
        and euler_in_kernel is not None
        and _parallel(radical[0], euler_in_kernel))

    return ContactCheckResult(
        dim_orbit=d,
        theta_kernel_dim=k,
        omega_rank_on_kernel=omega_rank,
        radical_is_euler_line=radical_is_euler,
    )


def _combine(mats, coeffs) -> Matrix:
    n = len(mats[0])
    out = _zeros(n)
    for c, mat in zip(coeffs, mats):
        if c:
            for i in range(n):
                for j in range(n):
                    out[i][j] += c * mat[i][j]
    return _freeze(out)


def _parallel(u, v) -> bool:
    if all(x == 0 for x in u) or all(x == 0 for x in v):
        return False
    pivot = next(i for i, x in enumerate(u) if x != 0)
    if v[pivot] == 0:
        return False
    s = v[pivot] / u[pivot]
    return all(s * x == y for x, y in zip(u, v))


# --- Richardson / Springer oracles -------------------------------------------

def nilradical_positions(comp) -> list[tuple[int, int]]:
    """Matrix positions of the block strictly-upper nilradical for block
    sizes ``comp``."""
    comp = tuple(int(c) for c in comp)
    block = []
    for b, size in enumerate(comp):
        block += [b] * size
    n = len(block)
    return [(i, j) for i in range(n) for j in range(n) if block[i] < block[j]]


def trial_seeds(seed: int, trials: int = GENERIC_TRIALS) -> list[str]:
    """Seed strings used by the generic-sampling oracles, for reporting."""
    return [f"{seed}:{t}" for t in range(trials)]


def _sample_nilradical(comp, seed_string: str) -> Matrix:
    rng = random.Random(seed_string)
    n = sum(comp)
    rows = _zeros(n)
    for i, j in nilradical_positions(comp):
        rows[i][j] = Fraction(rng.randint(-9, 9))
    return _freeze(rows)


def _dominates(lam, mu) -> bool:
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def generic_jordan_type(comp, seed: int = 0,
                        size_cap: int = ADDIM_SIZE_CAP) -> tuple[int, ...]:
    """Jordan type of a generic element of the block nilradical.

    Samples with the trial seeds derived from ``seed`` and returns the
    dominance-maximal type observed; sub-generic samples are dominated by
    the generic one, so this guards against unlucky coefficients. Raises
    :class:`NonGenericSample` when no observed type dominates the others.
    """
    comp = tuple(int(c) for c in comp)
    if sum(comp) > size_cap:
        raise SizeCapExceeded(f"composition of {sum(comp)} exceeds cap "
                              f"{size_cap}")
    observed = []
    for s in trial_seeds(seed):
        e = _sample_nilradical(comp, s)
        observed.append(jordan_type(e))
    for cand in observed:
        if all(_dominates(cand, other) for other in observed):
            return cand
    raise NonGenericSample(
        f"no dominance-maximal Jordan type among {observed}; "
        f"reseed and retry")


# --- Springer fiber counting ---------------------------------------------------

# Subspaces are canonical RREF row bases (tuples of rational tuples).

def _span(rows, n) -> tuple:
    red, _ = rref([list(r) for r in rows]) if rows else ([], [])
    return tuple(tuple(r) for r in red) if red else ()


def _full(n) -> tuple:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n))
                 for i in range(n))


def _dim(space) -> int:
    return len(space)


def _sum_spaces(a, b, n):
    return _span(list(a) + list(b), n)


def _apply(e: Matrix, space, n):
    rows = [tuple(sum(e[i][k] * v[k] for k in range(n)) for i in range(n))
            for v in space]
    return _span(rows, n)


def _annihilator(space, n):
    if not space:
        return _full(n)
    return _span(nullspace([list(r) for r in space]), n)


def _intersect(a, b, n):
    constraints = list(_annihilator(a, n)) + list(_annihilator(b, n))
    if not constraints:
        return _full(n)
    return _span(nullspace([list(r) for r in constraints]), n)


def _preimage(e: Matrix, space, n):
    ann = _annihilator(space, n)
    if not ann:
        return _full(n)
    rows = [tuple(sum(y[i] * e[i][j] for i in range(n)) for j in range(n))
            for y in ann]
    return _span(nullspace([list(r) for r in rows]), n)


def _contains(big, small, n) -> bool:
    return _dim(_sum_spaces(big, small, n)) == _dim(big)


def generic_fiber_count(comp, seed: int = 0,
                        size_cap: int = FIBER_SIZE_CAP) -> int:
    """Cardinality of the Springer fiber over a generic Richardson element.

    Counts flags 0 = V_0 < V_1 < ... < V_k = C^n of type ``comp`` with
    e V_i inside V_{i-1}, by exact constraint propagation: each V_i is
    squeezed between a growing lower bound (images of later steps) and a
    shrinking upper bound (preimages of earlier steps) until every step
    is forced. A step left unforced at the fixpoint signals a
    positive-dimensional solution set, i.e. a non-generic sample.
    """
    comp = tuple(int(c) for c in comp)
    n = sum(comp)
    if n > size_cap:
        raise SizeCapExceeded(f"composition of {n} exceeds cap {size_cap}")
    if len(comp) == 1:
        return 1  # V_1 = C^n and the nilradical is zero

    target = tuple(sorted(comp, reverse=True))
    richardson = dual_of(target)
    e = None
    for s in trial_seeds(seed):
        cand = _sample_nilradical(comp, s)
        if jordan_type(cand) == richardson:
            e = cand
            break
    if e is None:
        raise NonGenericSample(
            f"no sample of Richardson type {richardson} for {comp}")

    k = len(comp)
    dims = [0]
    for c in comp:
        dims.append(dims[-1] + c)
    lower = [() for _ in range(k + 1)]
    upper = [_full(n) for _ in range(k + 1)]
    lower[k] = _full(n)
    upper[0] = ()
    fixed = [i in (0, k) for i in range(k + 1)]

    def propagate() -> bool:
        changed = False
        for i in range(1, k):
            new_low = _sum_spaces(
                _sum_spaces(lower[i], lower[i - 1], n),
                _apply(e, lower[i + 1], n), n)
            if _dim(new_low) != _dim(lower[i]):
                lower[i] = new_low
                changed = True
            new_up = _intersect(
                _intersect(upper[i], upper[i + 1], n),
                _preimage(e, upper[i - 1], n), n)
            if _dim(new_up) != _dim(upper[i]):
                upper[i] = new_up
                changed = True
        return changed

    while True:
        while propagate():
            pass
        progressed = False
        for i in range(1, k):
            if fixed[i]:
                continue
            if _dim(lower[i]) > dims[i] or _dim(upper[i]) < dims[i]:
                return 0
            if _dim(lower[i]) == dims[i]:
                upper[i] = lower[i]
                fixed[i] = True
                progressed = True
            elif _dim(upper[i]) == dims[i]:
                lower[i] = upper[i]
                fixed[i] = True
                progressed = True
        if not progressed:
            break

    if not all(fixed):
        raise NonFiniteFiber(
            f"solution set for {comp} not forced to a point; "
            f"non-generic sample suspected")

    flag = [lower[i] for i in range(k + 1)]
    for i in range(1, k + 1):
        assert _dim(flag[i]) == dims[i]
        assert _contains(flag[i], flag[i - 1], n)
        assert _contains(flag[i - 1], _apply(e, flag[i], n), n)
    return 1


def dual_of(part) -> tuple[int, ...]:
    part = tuple(part)
    if not part:
        return ()
    return tuple(sum(1 for p in part if p >= j) for j in range(1, part[0] + 1))


# --- seeded model transforms ---------------------------------------------------

def random_conjugate(m: MatrixModel, seed: int) -> MatrixModel:
    """Conjugate e by a seeded random invertible rational matrix."""
    from .ratlinalg import inverse
    rng = random.Random(f"{seed}:conj")
    n = m.n
    while True:
        g = [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
             for _ in range(n)]
        ginv = inverse(g)
        if ginv is not None:
            break
    conj = mat_mul(mat_mul(_freeze(g), m.e), _freeze(ginv))
    return matrix_model(conj)


def scale_model(m: MatrixModel, t) -> MatrixModel:
    t = Fraction(t)
    scaled = _freeze([[t * x for x in row] for row in m.e])
    return matrix_model(scaled)
