# cython: language_level=3
"""Compiled hot kernels; mirrors ``_pycore`` operation for operation."""
from libc.math cimport exp, pow, log, fabs, INFINITY

BACKEND = "cython"

cdef enum:
    MAXC = 16

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]
XGK[:] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
WGK[:] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
WG[:] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467768686551,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]


cdef int _load(coeffs, double* out) except -1:
    cdef int n = len(coeffs)
    cdef int i
    if n < 1 or n > MAXC:
        raise ValueError("kernel must have between 1 and %d coefficients" % MAXC)
    for i in range(n):
        out[i] = <double>coeffs[i]
    return n


cdef inline double _horner(const double* c, int n, double u) nogil:
    cdef double acc = 0.0
    cdef int i
    for i in range(n - 1, -1, -1):
        acc = acc * u + c[i]
    return acc


cdef inline double _weighted(const double* c, int n, double t) nogil:
    return exp(-2.0 * t) * _horner(c, n, t)


def horner(coeffs, double u):
    cdef double c[MAXC]
    cdef int n = _load(coeffs, c)
    return _horner(c, n, u)


def gk15(coeffs, double a, double b):
    cdef double c[MAXC]
    cdef int n = _load(coeffs, c)
    cdef double centre = 0.5 * (a + b)
    cdef double half = 0.5 * (b - a)
    cdef double fc = _weighted(c, n, centre)
    cdef double res_k = fc * WGK[7]
    cdef double res_g = fc * WG[3]
    cdef double res_abs = fabs(res_k)
    cdef double dx, f1, f2
    cdef int j
    for j in range(7):
        dx = half * XGK[j]
        f1 = _weighted(c, n, centre - dx)
        f2 = _weighted(c, n, centre + dx)
        res_k += WGK[j] * (f1 + f2)
        res_abs += WGK[j] * (fabs(f1) + fabs(f2))
        if j % 2 == 1:
            res_g += WG[j // 2] * (f1 + f2)
    return res_k * half, fabs((res_k - res_g) * half), res_abs * fabs(half)


def matsubara_sum(coeffs, double y, double rel_tol, double u_min,
                  long min_terms, long max_terms):
    cdef double c[MAXC]
    cdef double m[MAXC]
    cdef int nc = _load(coeffs, c)
    cdef int deg = nc - 1
    cdef int i
    for i in range(nc):
        m[i] = fabs(c[i])
    cdef double s = 0.0, comp = 0.0, t, u, e, term, rho, tail = INFINITY
    cdef long n = 0
    cdef bint done = False
    with nogil:
        while n < max_terms:
            n += 1
            u = n * y
            e = exp(-2.0 * n * y)
            term = e * _horner(c, nc, u)
            t = s + term
            if fabs(s) >= fabs(term):
                comp += (s - t) + term
            else:
                comp += (term - t) + s
            s = t
            if n >= min_terms and u > u_min and fabs(term) <= rel_tol * fabs(s + comp):
                rho = exp(-2.0 * y) * pow(1.0 + 1.0 / n, deg)
                if rho < 1.0:
                    tail = e * _horner(m, nc, u) * rho / (1.0 - rho)
                    if tail <= 0.1 * rel_tol * fabs(s + comp):
                        done = True
                        break
    return s + comp, n, tail, bool(done)


def power_sum(int k, double x, double rel_tol, long min_terms, long max_terms):
    if x == 0.0:
        return (1.0 if k == 0 else 0.0), 1, 0.0, True
    cdef double peak = k / -log(x)
    cdef double s = 1.0 if k == 0 else 0.0
    cdef double comp = 0.0, t, term, rho = 2.0
    cdef long n = 0
    cdef bint done = False
    with nogil:
        while n < max_terms:
            n += 1
            term = pow(x, <double>n) * pow(<double>n, <double>k)
            t = s + term
            if fabs(s) >= fabs(term):
                comp += (s - t) + term
            else:
                comp += (term - t) + s
            s = t
            if n >= min_terms and n > peak and term <= rel_tol * fabs(s + comp):
                rho = x * pow(1.0 + 1.0 / n, k)
                if rho < 1.0 and term * rho / (1.0 - rho) <= 0.1 * rel_tol * fabs(s + comp):
                    done = True
                    break
    if done:
        return s + comp, n + 1, term * rho / (1.0 - rho), True
    return s + comp, n + 1, INFINITY, False
