"""Pure-Python hot kernels.

Reference implementation of everything in ``_core.pyx``.  Both versions
perform the same floating-point operations in the same order, so they
agree bit-for-bit on platforms where libm ``exp``/``pow`` are shared.
"""
import math

BACKEND = "python"

# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467768686551,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def horner(coeffs, u):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def _weighted(coeffs, t):
    return math.exp(-2.0 * t) * horner(coeffs, t)


def gk15(coeffs, a, b):
    """Integrate exp(-2t) P(t) over [a, b] with one 15-point Kronrod panel.

    Returns ``(kronrod, |kronrod - gauss|, integral of |f|)``.
    """
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = _weighted(coeffs, centre)
    res_k = fc * WGK[7]
    res_g = fc * WG[3]
    res_abs = abs(res_k)
    for j in range(7):
        dx = half * XGK[j]
        f1 = _weighted(coeffs, centre - dx)
        f2 = _weighted(coeffs, centre + dx)
        res_k += WGK[j] * (f1 + f2)
        res_abs += WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            res_g += WG[j // 2] * (f1 + f2)
    return res_k * half, abs((res_k - res_g) * half), res_abs * abs(half)


def _neumaier(s, c, v):
    t = s + v
    if abs(s) >= abs(v):
        c += (s - t) + v
    else:
        c += (v - t) + s
    return t, c


def matsubara_sum(coeffs, y, rel_tol, u_min, min_terms, max_terms):
    """Sum_{n>=1} exp(-2ny) Q(ny) with compensated accumulation.

    Stops once ``n >= min_terms``, ``n*y > u_min`` and the current term is
    below ``rel_tol`` of the running sum, provided the geometric tail
    majorant has ratio below one and is itself below a tenth of
    ``rel_tol`` relative to the running sum.  The tail bound uses the coefficient
    majorant sum |q_k| u^k, which grows at most like u^degree.

    Returns ``(value, terms_used, tail_bound, converged)``.
    """
    deg = len(coeffs) - 1
    majorant = [abs(c) for c in coeffs]
    s = 0.0
    comp = 0.0
    n = 0
    while n < max_terms:
        n += 1
        u = n * y
        e = math.exp(-2.0 * n * y)
        term = e * horner(coeffs, u)
        s, comp = _neumaier(s, comp, term)
        if n >= min_terms and u > u_min and abs(term) <= rel_tol * abs(s + comp):
            rho = math.exp(-2.0 * y) * math.pow(1.0 + 1.0 / n, deg)
            if rho < 1.0:
                tail = e * horner(majorant, u) * rho / (1.0 - rho)
                if tail <= 0.1 * rel_tol * abs(s + comp):
                    return s + comp, n, tail, True
    return s + comp, n, math.inf, False


def power_sum(k, x, rel_tol, min_terms, max_terms):
    """Sum_{n>=0} n^k x^n by direct compensated summation.

    Returns ``(value, terms_used, tail_bound, converged)``; ``terms_used``
    counts the n = 0 term.
    """
    if x == 0.0:
        return (1.0 if k == 0 else 0.0), 1, 0.0, True
    peak = k / -math.log(x)
    s = 1.0 if k == 0 else 0.0
    comp = 0.0
    n = 0
    while n < max_terms:
        n += 1
        term = math.pow(x, n) * math.pow(n, k)
        s, comp = _neumaier(s, comp, term)
        if n >= min_terms and n > peak and term <= rel_tol * abs(s + comp):
            rho = x * math.pow(1.0 + 1.0 / n, k)
            if rho < 1.0 and term * rho / (1.0 - rho) <= 0.1 * rel_tol * abs(s + comp):
                return s + comp, n + 1, term * rho / (1.0 - rho), True
    return s + comp, n + 1, math.inf, False
