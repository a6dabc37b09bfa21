"""Verifiers for the identity toolbox behind the enumeration formulas.

Most statements here are identities of rational functions in several
variables. Clearing denominators symbolically is exponentially large, so
the verifiers certify them the standard way instead: evaluate both sides
exactly (Fraction arithmetic, extended by the sixth-root-of-unity ring
where a root of unity is involved) at deterministically seeded sample
points, re-drawing any point that lands on a pole. Degrees are small and
bounded, so agreement on enough independent points is a sound polynomial
identity test. The constant-term statement is checked by the Laurent
engine on both sides, and the coincidence-limit determinant reductions
are carried out symbolically through exact Vandermonde division.
"""

import itertools
import math
from fractions import Fraction
from random import Random

from ..errors import NonUnitError, PreconditionError, ResourceBudgetError
from ..laurent import CTBuilder, LaurentPoly, det, divexact_vandermonde
from ..polyring import Eisenstein, gen_binom

__all__ = [
    "asm_determinants",
    "asm_number",
    "verify_antisymmetrizer_identities",
    "verify_behrend_limits",
    "verify_lemma_zeilberger",
    "verify_summation_identity",
    "verify_symmetrizer_mt",
    "verify_theorem_zeil",
]


# ---------------------------------------------------------------- sampling

def _rational_stream(seed):
    """Endless deterministic stream of smallish rationals."""
    rng = Random(seed)
    while True:
        yield Fraction(rng.randint(-30, 30), rng.randint(1, 10))


def _draw_distinct(stream, count, avoid=()):
    out = []
    for v in stream:
        if v in avoid or v in out:
            continue
        out.append(v)
        if len(out) == count:
            return out


def _sgn(perm):
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def _as_value(f, pts):
    """Antisymmetrization of the callable f over orderings of pts."""
    total = Fraction(0)
    for perm in itertools.permutations(range(len(pts))):
        total += _sgn(perm) * f([pts[p] for p in perm])
    return total


# ------------------------------------------------- the suffix-product lemma

def verify_lemma_zeilberger(r, seed=0):
    """Signed symmetrization of prod_i y_i^(i-1)/(1 - y_i...y_r) equals
    prod_i (1-y_i)^(-1) prod_{i<j} (y_j-y_i)/(1-y_i y_j).

    Certified by exact evaluation at r+2 seeded rational points; a draw
    is discarded when any subset of the coordinates multiplies to 1
    (those are exactly the poles the permuted suffix products can hit).
    """
    if not 1 <= r <= 5:
        raise PreconditionError("r must be in 1..5")
    stream = _rational_stream(seed * 977 + r)
    for _ in range(r + 2):
        y = _draw_suffix_safe(stream, r)
        lhs = Fraction(0)
        for perm in itertools.permutations(range(r)):
            z = [y[p] for p in perm]
            term = Fraction(1)
            for i in range(r):
                term *= z[i] ** i / (1 - math.prod(z[i:], start=Fraction(1)))
            lhs += _sgn(perm) * term
        rhs = Fraction(1)
        for i in range(r):
            rhs /= 1 - y[i]
            for j in range(i + 1, r):
                rhs *= (y[j] - y[i]) / (1 - y[i] * y[j])
        if lhs != rhs:
            return False
    return True


def _draw_suffix_safe(stream, r):
    for _ in range(500):
        pts = _draw_distinct(stream, r)
        clean = all(
            math.prod(combo, start=Fraction(1)) != 1
            for size in range(1, r + 1)
            for combo in itertools.combinations(pts, size)
        )
        if clean:
            return pts
    raise ResourceBudgetError("could not draw pole-free points", budget=500)


# ------------------------------------------ summed monomial determinants

def verify_summation_identity(r, base, degree_cap):
    """Sum of det(x_i^(b_j)) over base <= b_1 < ... < b_r against the
    closed product, compared as truncated power series.

    The closed side is prod_i x_i^base (1-x_i)^(-1) times
    prod_{i<j} (x_j-x_i)/(1-x_i x_j). Every monomial of a determinant
    for the tuple b has total degree sum(b), so restricting the sum to
    tuples with sum(b) <= degree_cap gives the exact truncation.
    """
    if r < 1:
        raise PreconditionError("r must be >= 1")
    if base < 0:
        raise PreconditionError("base must be >= 0")
    lhs = LaurentPoly.zero(r)
    for tup in _increasing_tuples(r, base, degree_cap):
        mat = [[LaurentPoly.monomial(r, {i: b}) for b in tup] for i in range(r)]
        lhs = lhs + det(mat)
    rhs = LaurentPoly.monomial(r, {i: base for i in range(r)})
    for i in range(r):
        rhs = (rhs * _trunc_geom(r, {i: 1}, degree_cap)).truncate_total(degree_cap)
    for i in range(r):
        for j in range(i + 1, r):
            diff = LaurentPoly.monomial(r, {j: 1}) - LaurentPoly.monomial(r, {i: 1})
            rhs = rhs * diff * _trunc_geom(r, {i: 1, j: 1}, degree_cap)
            rhs = rhs.truncate_total(degree_cap)
    return lhs.truncate_total(degree_cap) == rhs


def _increasing_tuples(r, lo, cap):
    def rec(k, lo, left):
        if k == 0:
            yield ()
            return
        b = lo
        while k * b + k * (k - 1) // 2 <= left:
            for rest in rec(k - 1, b + 1, left - b):
                yield (b,) + rest
            b += 1

    return rec(r, lo, cap)


def _trunc_geom(n, exps, cap):
    """1/(1 - x^exps) expanded up to total degree cap."""
    step = sum(exps.values())
    out = LaurentPoly.zero(n)
    for d in range(cap // step + 1):
        out = out + LaurentPoly.monomial(n, {c: d * e for c, e in exps.items()})
    return out


# ----------------------------------------- the constant-term swap theorem

def verify_theorem_zeil(n, sym="1", t=None, **budget):
    """The two constant-term expressions built from a symmetric factor S:

        S prod x_i^(-2i+1) prod_{i<j} (x_j-x_i)(1 + t x_j + x_i x_j)

    against

        S prod (1+t x_i)^(i-1) x_i^(-2i+1)/(1-x_i^2)
          prod_{i<j} (x_j-x_i)/(1-x_i x_j)

    with S one of 1, e1, e2 and t either a rational or None for a fully
    symbolic parameter. Both sides go through the Laurent engine.
    """
    if not 1 <= n <= 3:
        raise PreconditionError("n must be in 1..3")
    params = () if t is not None else ("aux",)

    left = CTBuilder(n, params)
    tv = left.const(t) if t is not None else left.param("aux")
    one = left.const(1)
    for i in range(1, n + 1):
        left.add_mono({i: -2 * i + 1})
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            left.add((left.x(j) - left.x(i)) * (one + tv * left.x(j) + left.x(i) * left.x(j)))
    _add_sym_factor(left, sym)

    right = CTBuilder(n, params)
    tv = right.const(t) if t is not None else right.param("aux")
    for i in range(1, n + 1):
        right.add_binom_power(i, i - 1, lin=tv)
        right.add_mono({i: -2 * i + 1})
        right.add_geometric({i: 2})
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            right.add(right.x(j) - right.x(i))
            right.add_geometric({i: 1, j: 1})
    _add_sym_factor(right, sym)

    return left.constant_term(**budget) == right.constant_term(**budget)


def _add_sym_factor(cb, sym):
    name = str(sym)
    if name == "1":
        return
    k = {"e1": 1, "e2": 2}.get(name)
    if k is None:
        raise PreconditionError("sym must be one of 1, e1, e2")
    total = cb.const(0)
    for combo in itertools.combinations(range(1, cb.nx + 1), k):
        m = cb.const(1)
        for i in combo:
            m = m * cb.x(i)
        total = total + m
    cb.add(total)


# ------------------------------------- antisymmetrizer kernel identities

def verify_antisymmetrizer_identities(n, variant="quadratic", seed=0):
    """Closed determinant form of the antisymmetrizer of

        prod_{i<j} (q w_i - q^(-1) w_j)
        / (prod_{i<=j} h1(w_j,y_i) prod_{j<=i} hq(w_j,y_i))

    where hq(w,y) is (qw - y/q)(qwy - 1/q) for the quadratic variant and
    qw - y/q for the linear one (h1 is hq at q=1). The quadratic closed
    form carries q^C(n,2) and 1/(1-q^2 w_i w_j) factors that the linear
    variant drops. Certified at seeded rational (w, y, q) points; a draw
    hitting any pole is discarded and re-drawn.
    """
    if variant not in ("quadratic", "linear"):
        raise PreconditionError("variant must be 'quadratic' or 'linear'")
    if not 1 <= n <= 3:
        raise PreconditionError("n must be in 1..3")

    if variant == "quadratic":
        def hq(w, y, qv):
            return (qv * w - y / qv) * (qv * w * y - 1 / qv)
    else:
        def hq(w, y, qv):
            return qv * w - y / qv

    def h1(w, y):
        return hq(w, y, Fraction(1))

    stream = _rational_stream(seed * 977 + 31 * n + (variant == "linear"))
    done = attempts = 0
    while done < n + 3:
        attempts += 1
        if attempts > 500:
            raise ResourceBudgetError("could not draw pole-free points", budget=500)
        pts = _draw_distinct(stream, 2 * n + 1, avoid=(Fraction(0), Fraction(1), Fraction(-1)))
        w, y, q = pts[:n], pts[n : 2 * n], pts[2 * n]
        try:
            def expr(wv):
                num = Fraction(1)
                for i in range(n):
                    for j in range(i + 1, n):
                        num *= q * wv[i] - wv[j] / q
                den = Fraction(1)
                for i in range(n):
                    for j in range(i, n):
                        den *= h1(wv[j], y[i])
                    for j in range(i + 1):
                        den *= hq(wv[j], y[i], q)
                return num / den

            lhs = _as_value(expr, w)
            mat = [
                [1 / (h1(w[i], y[j]) * hq(w[i], y[j], q)) for j in range(n)]
                for i in range(n)
            ]
            rhs = det(mat) if n > 1 else mat[0][0]
            if variant == "quadratic":
                rhs *= q ** math.comb(n, 2)
                for i in range(n):
                    for j in range(i + 1, n):
                        rhs /= h1(y[i], y[j]) * (1 - q * q * w[i] * w[j])
            else:
                for i in range(n):
                    for j in range(i + 1, n):
                        rhs /= h1(y[j], y[i])
        except ZeroDivisionError:
            continue
        if lhs != rhs:
            return False
        done += 1
    return True


# --------------------------------------- coincidence limits of determinants

def verify_behrend_limits(n, f=None, f_list=None):
    """Determinant coincidence limits against coefficient-matrix forms.

    Bivariate direction (pass f as {(dx, dy): coeff}):

        lim det(f(x_i, y_j)) / prod (x_j-x_i)(y_j-y_i)
            = det_{0<=i,j<=n-1} ([u^i v^j] f(x+u, y+v))

    with both coincidence limits taken symbolically: the determinant is
    divided exactly by the two Vandermondes and the surviving polynomial
    is collapsed onto single x and y variables. Univariate direction
    (pass f_list, one {deg: coeff} or coefficient list per column):

        lim det(f_j(x_i)) / prod (x_j-x_i) = det([u^i] f_j(x+u)).

    A nonzero remainder in the exact division raises ExactDivisionError.
    """
    if (f is None) == (f_list is None):
        raise PreconditionError("provide exactly one of f, f_list")
    if n < 1:
        raise PreconditionError("n must be >= 1")

    if f is not None:
        nv = 2 * n
        mat = [
            [_poly_at(f, nv, (i, n + j)) for j in range(n)]
            for i in range(n)
        ]
        d = det(mat) if n > 1 else mat[0][0]
        d = divexact_vandermonde(d, list(range(n - 1, -1, -1)))
        d = divexact_vandermonde(d, list(range(2 * n - 1, n - 1, -1)))
        left = _collapse(d, [list(range(n)), list(range(n, 2 * n))])
        rmat = [[_taylor_coeff(f, (i, j)) for j in range(n)] for i in range(n)]
        right = det(rmat) if n > 1 else rmat[0][0]
        return left == right

    cols = [_univar_coeffs(fj) for fj in f_list]
    if len(cols) != n:
        raise PreconditionError("f_list must have n entries")
    mat = [[_poly_at(cols[j], n, (i,)) for j in range(n)] for i in range(n)]
    d = det(mat) if n > 1 else mat[0][0]
    d = divexact_vandermonde(d, list(range(n - 1, -1, -1)))
    left = _collapse(d, [list(range(n))])
    rmat = [[_taylor_coeff(cols[j], (i,)) for j in range(n)] for i in range(n)]
    right = det(rmat) if n > 1 else rmat[0][0]
    return left == right


def _univar_coeffs(fj):
    if isinstance(fj, dict):
        return {(k if isinstance(k, tuple) else (k,)): v for k, v in fj.items()}
    return {(d,): c for d, c in enumerate(fj) if c}


def _poly_at(f, nv, cols):
    """Instantiate the coefficient dict f at the given variable columns."""
    out = LaurentPoly.zero(nv)
    for degs, c in f.items():
        degs = degs if isinstance(degs, tuple) else (degs,)
        out = out + LaurentPoly.monomial(nv, dict(zip(cols, degs)), c)
    return out


def _taylor_coeff(f, shift):
    """Coefficient of u^shift in f evaluated at (x+u, ...), one fresh
    variable per coordinate; returns a polynomial in the base point."""
    k = len(shift)
    out = LaurentPoly.zero(k)
    for degs, c in f.items():
        degs = degs if isinstance(degs, tuple) else (degs,)
        coeff = c
        rest = {}
        for t in range(k):
            coeff *= gen_binom(degs[t], shift[t])
            rest[t] = degs[t] - shift[t]
        if coeff and all(e >= 0 for e in rest.values()):
            out = out + LaurentPoly.monomial(k, rest, coeff)
    return out


def _collapse(p, groups):
    """Merge each listed column group onto one variable."""
    out = {}
    for e, c in p.terms.items():
        key = tuple(sum(e[v] for v in g) for g in groups)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return LaurentPoly(len(groups), out)


# -------------------------------------- root-of-unity determinant checks

def asm_number(n):
    """prod_{i=0}^{n-1} (3i+1)!/(n+i)!; 1, 2, 7, 42, 429, 7436, ..."""
    acc = Fraction(1)
    for i in range(n):
        acc *= Fraction(math.factorial(3 * i + 1), math.factorial(n + i))
    return int(acc)


def _unit_pow(u, e):
    """u^e for u a sixth root of unity; stays in the integer ring."""
    if u ** 6 != 1:
        raise NonUnitError("expected a sixth root of unity")
    return u ** (e % 6)


def asm_determinants(n, x_shift=0, conjugate=False):
    """The two binomial determinants over the sixth-root ring, plus the
    verdicts tying them to the alternating sign matrix numbers.

    With q the primitive cube root (its conjugate when `conjugate`),
    x = x_shift, and 0-based indices, the first determinant has entries
    binom(x+i+j, j)(1-(-q)^(j+1-i))/(1+q) and the second is the shifted
    binomial determinant binom(x+i+j, j) + q on the diagonal. Verdicts:

      det_is_asm_number      first determinant at x = 0 equals asm_number(n)
                             (None when x_shift is nonzero)
      quotient_matches       first = second * (-q)^n. The exponent is +n for
                             both root choices: conjugating every entry
                             conjugates both determinants, so the conjugate
                             root's quotient is forced to be the conjugate
                             unit, which is (-q)^n again in terms of its own
                             q (equivalently (-omega)^(-n) in terms of the
                             principal cube root omega).
      reduction_matches      det(-q binom(i+j,i) - q^2 delta) equals
                             (-q)^n times the second determinant at x = 0
      raw_det_is_asm_number  the 2^n-Cauchy pipeline determinant, scaled by
                             (1+q)^(-n)(-q)^(-C(n,2)), equals asm_number(n)

    Every division is by a unit; anything else raises NonUnitError.
    """
    if not 1 <= n <= 6:
        raise PreconditionError("n must be in 1..6")
    q = Eisenstein.omega().conj() if conjugate else Eisenstein.omega()
    mq = -q
    inv_1q = (Eisenstein(1) + q).inv()
    m1q = -(Eisenstein(1) + q)
    x = x_shift

    d1 = det([
        [gen_binom(x + i + j, j) * (1 - _unit_pow(mq, j + 1 - i)) * inv_1q
         for j in range(n)]
        for i in range(n)
    ])
    d2 = det([
        [Eisenstein.coerce(gen_binom(x + i + j, j)) + (q if i == j else 0)
         for j in range(n)]
        for i in range(n)
    ])
    d2_zero = d2 if x == 0 else det([
        [Eisenstein.coerce(gen_binom(i + j, j)) + (q if i == j else 0)
         for j in range(n)]
        for i in range(n)
    ])
    d3 = det([
        [mq * gen_binom(i + j, i) - (q * q if i == j else 0)
         for j in range(n)]
        for i in range(n)
    ])
    raw = det([
        [gen_binom(j, i) * (-1) ** j * _unit_pow(q, j + 1)
         + sum(
             (gen_binom(k + i, j) * gen_binom(j, k) * _unit_pow(m1q, k + i - j)
              for k in range(n)),
             start=Eisenstein(0),
         )
         for j in range(n)]
        for i in range(n)
    ])
    raw_value = raw * _unit_pow(Eisenstein(1) + q, -n) * _unit_pow(mq, -math.comb(n, 2))

    verdicts = {
        "det_is_asm_number": (d1 == asm_number(n)) if x == 0 else None,
        "quotient_matches": d1 == d2 * _unit_pow(mq, n),
        "reduction_matches": d3 == _unit_pow(mq, n) * d2_zero,
        "raw_det_is_asm_number": raw_value == asm_number(n),
    }
    return d1, d2, verdicts


# ------------------------------------ closed antisymmetrizations, b_i = i

def verify_symmetrizer_mt(n, source="standard", seed=0):
    """Closed determinant forms for the antisymmetrizations that arise
    from the three triangle constant-term expressions at bottom row
    (1, 2, ..., n).

    source picks the antisymmetrized product and the root of unity q:

      standard     AS[prod_{i<j}(1+x_j+x_i x_j) prod (1+x_i)^i x_i^(1-n)],
                   q the primitive cube root; two closed forms, one with
                   entries (x_i+1+q)^(j-1)(1-(-1-x_i)^(-j) q^(-j)), one
                   with x_i^(j-1)-(-1-x_i)^(-j)/q, both behind the factor
                   prod (1+x_i)^(n+1) x_i^(1-n)/(x_i+1+1/q)
      alternative  AS[prod_{i<j}(1-x_j+x_i x_j) prod (1-x_i)^(-n) x_i^(1-n-i)],
                   q the primitive sixth root; closed forms with entries
                   (1-x_i q)^(j-1)(q^(-j)-x_i^(-j)) and
                   -x_i^(-j)+(1-x_i)^(j-1)/q behind
                   prod (1-x_i)^(-n) x_i^(1-n)/(x_i/q-1)
      antisym      AS[prod_{i<j}(1+x_j+x_i x_j) prod (1+x_i)^i], q the cube
                   root; closed form prod (1+x_i)^(n+1)/(x_i+1+1/q) times
                   det(x_i^(j-1)-(-1-x_i)^(-j)/q)

    All forms are certified by exact evaluation at seeded rational points
    over the sixth-root ring; the rational left side must equal every
    closed form.
    """
    if source not in ("standard", "alternative", "antisym"):
        raise PreconditionError("source must be standard, alternative or antisym")
    if not 1 <= n <= 3:
        raise PreconditionError("n must be in 1..3")
    q = Eisenstein.zeta() if source == "alternative" else Eisenstein.omega()
    qi = q.inv()
    stream = _rational_stream(seed * 977 + 101 * n + len(source))

    for _ in range(n + 2):
        x = _draw_distinct(stream, n, avoid=(Fraction(0), Fraction(1), Fraction(-1)))

        if source == "standard":
            def f(z):
                val = Fraction(1)
                for i in range(n):
                    val *= (1 + z[i]) ** (i + 1) * z[i] ** (1 - n)
                    for j in range(i + 1, n):
                        val *= 1 + z[j] + z[i] * z[j]
                return val

            pref = Eisenstein(1)
            for i in range(n):
                pref *= (1 + x[i]) ** (n + 1) * x[i] ** (1 - n)
                pref /= x[i] + 1 + qi
            forms = [
                pref * det([
                    [(x[i] + 1 + q) ** j * (1 - Fraction(-1 - x[i]) ** (-j - 1) * qi ** (j + 1))
                     for j in range(n)]
                    for i in range(n)
                ]),
                pref * det([
                    [x[i] ** j - Fraction(-1 - x[i]) ** (-j - 1) * qi
                     for j in range(n)]
                    for i in range(n)
                ]),
            ]
        elif source == "alternative":
            def f(z):
                val = Fraction(1)
                for i in range(n):
                    val *= (1 - z[i]) ** (-n) * z[i] ** (-n - i)
                    for j in range(i + 1, n):
                        val *= 1 - z[j] + z[i] * z[j]
                return val

            pref = Eisenstein(1)
            for i in range(n):
                pref *= Fraction(1 - x[i]) ** (-n) * x[i] ** (1 - n)
                pref /= qi * x[i] - 1
            forms = [
                pref * det([
                    [(1 - x[i] * q) ** j * (qi ** (j + 1) - Fraction(x[i]) ** (-j - 1))
                     for j in range(n)]
                    for i in range(n)
                ]),
                pref * det([
                    [(1 - x[i]) ** j * qi - Fraction(x[i]) ** (-j - 1)
                     for j in range(n)]
                    for i in range(n)
                ]),
            ]
        else:
            def f(z):
                val = Fraction(1)
                for i in range(n):
                    val *= (1 + z[i]) ** (i + 1)
                    for j in range(i + 1, n):
                        val *= 1 + z[j] + z[i] * z[j]
                return val

            pref = Eisenstein(1)
            for i in range(n):
                pref *= (1 + x[i]) ** (n + 1)
                pref /= x[i] + 1 + qi
            forms = [
                pref * det([
                    [x[i] ** j - Fraction(-1 - x[i]) ** (-j - 1) * qi
                     for j in range(n)]
                    for i in range(n)
                ]),
            ]

        lhs = Eisenstein.coerce(_as_value(f, x))
        if any(form != lhs for form in forms):
            return False
    return True
