# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the inner loops in ``_kernels_py``.

Coordinates live in C ``long long`` buffers; multiplicities and the
accumulators stay Python integers so nothing can overflow.
"""

from libc.stdlib cimport free, malloc, realloc


cdef long long* _matrix(rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef long long* out = <long long*>malloc(max(nrows * ncols, 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            out[i * ncols + j] = row[j]
    return out


cdef tuple _to_tuple(long long* x, Py_ssize_t n):
    cdef Py_ssize_t i
    return tuple([x[i] for i in range(n)])


cdef int _reflect(long long* C, long long* x, Py_ssize_t n) nogil:
    """Reflect x into the dominant chamber in place; returns the sign."""
    cdef int sign = 1
    cdef Py_ssize_t i, j
    cdef long long c
    cdef bint moved = True
    while moved:
        moved = False
        for i in range(n):
            c = x[i]
            if c < 0:
                for j in range(n):
                    x[j] -= c * C[i * n + j]
                sign = -sign
                moved = True
                break
    return sign


def reflect_to_dominant(cartan, x):
    cdef Py_ssize_t n = len(x), i
    cdef long long* C = _matrix(cartan, n, n)
    cdef long long* buf = <long long*>malloc(max(n, 1) * sizeof(long long))
    cdef int sign
    cdef bint wall = False
    try:
        for i in range(n):
            buf[i] = x[i]
        sign = _reflect(C, buf, n)
        for i in range(n):
            if buf[i] == 0:
                wall = True
                break
        return _to_tuple(buf, n), sign, wall
    finally:
        free(C)
        free(buf)


cdef long long* _grow(long long* stack, Py_ssize_t* cap, Py_ssize_t need) except NULL:
    cdef Py_ssize_t new_cap
    cdef long long* tmp
    if need <= cap[0]:
        return stack
    new_cap = cap[0] * 2
    while new_cap < need:
        new_cap *= 2
    tmp = <long long*>realloc(stack, new_cap * sizeof(long long))
    if tmp == NULL:
        free(stack)
        raise MemoryError()
    cap[0] = new_cap
    return tmp


def orbit(cartan, dom):
    cdef Py_ssize_t n = len(dom), i, j, k, top
    cdef long long* C = _matrix(cartan, n, n)
    cdef Py_ssize_t cap = 64 * max(n, 1)
    cdef long long* stack = <long long*>malloc(cap * sizeof(long long))
    cdef long long* lam
    cdef long long* child
    cdef long long lk
    cdef bint ok
    out = []
    try:
        for i in range(n):
            stack[i] = dom[i]
        top = 1
        while top:
            top -= 1
            # move the popped frame past the children that may be pushed
            stack = _grow(stack, &cap, (top + 2 + n) * n)
            lam = stack + (top + 1 + n) * n
            for j in range(n):
                lam[j] = stack[top * n + j]
            out.append(_to_tuple(lam, n))
            for k in range(n):
                lk = lam[k]
                if lk <= 0:
                    continue
                ok = True
                for j in range(k):
                    if lam[j] - lk * C[k * n + j] < 0:
                        ok = False
                        break
                if not ok:
                    continue
                child = stack + top * n
                for j in range(n):
                    child[j] = lam[j] - lk * C[k * n + j]
                top += 1
        return out
    finally:
        free(C)
        free(stack)


def orbit_project(cartan, dom, rdom, ralpha, keep, mult, acc):
    cdef Py_ssize_t n = len(dom), m = len(rdom), nkeep = len(keep)
    cdef Py_ssize_t w = n + m
    cdef Py_ssize_t i, j, k, top
    cdef long long* C = _matrix(cartan, n, n)
    cdef long long* RA = _matrix(ralpha, n, m)
    cdef long long* K = <long long*>malloc(max(nkeep, 1) * sizeof(long long))
    cdef Py_ssize_t cap = 64 * max(w, 1)
    cdef long long* stack = <long long*>malloc(cap * sizeof(long long))
    cdef long long* fr
    cdef long long* child
    cdef long long lk
    cdef bint ok, good
    try:
        for i in range(nkeep):
            K[i] = keep[i]
        for i in range(n):
            stack[i] = dom[i]
        for i in range(m):
            stack[n + i] = rdom[i]
        top = 1
        while top:
            top -= 1
            # copy the popped frame to the end so children can overwrite its slot
            stack = _grow(stack, &cap, (top + 2 + n) * w)
            fr = stack + (top + 1 + n) * w
            for j in range(w):
                fr[j] = stack[top * w + j]
            good = True
            for i in range(nkeep):
                if fr[n + K[i]] < 0:
                    good = False
                    break
            if good:
                key = _to_tuple(fr + n, m)
                acc[key] = acc.get(key, 0) + mult
            for k in range(n):
                lk = fr[k]
                if lk <= 0:
                    continue
                ok = True
                for j in range(k):
                    if fr[j] - lk * C[k * n + j] < 0:
                        ok = False
                        break
                if not ok:
                    continue
                child = stack + top * w
                for j in range(n):
                    child[j] = fr[j] - lk * C[k * n + j]
                for j in range(m):
                    child[n + j] = fr[n + j] - lk * RA[k * m + j]
                top += 1
        return acc
    finally:
        free(C)
        free(RA)
        free(K)
        free(stack)


def alternating_accumulate(cartan, weights, shift, scale, acc):
    cdef Py_ssize_t n = len(shift), i
    cdef long long* C = _matrix(cartan, n, n)
    cdef long long* S = _matrix((shift,), 1, n)
    cdef long long* x = <long long*>malloc(max(n, 1) * sizeof(long long))
    cdef long long sc = scale
    cdef int sign
    cdef bint wall
    try:
        for nu, mult in weights:
            for i in range(n):
                x[i] = sc * <long long>nu[i] + S[i]
            sign = _reflect(C, x, n)
            wall = False
            for i in range(n):
                if x[i] == 0:
                    wall = True
                    break
            if wall:
                continue
            for i in range(n):
                x[i] -= 1
            key = _to_tuple(x, n)
            acc[key] = acc.get(key, 0) + sign * mult
        return acc
    finally:
        free(C)
        free(S)
        free(x)


cdef object _norm_shift(long long* G, mu, long long* s, Py_ssize_t n):
    """(mu + rho, mu + rho) in the scaled form."""
    cdef Py_ssize_t p, q
    cdef long long row
    total = 0
    for p in range(n):
        s[p] = <long long>mu[p] + 1
    for p in range(n):
        row = 0
        for q in range(n):
            row += G[p * n + q] * s[q]
        total += s[p] * row
    return total


def freudenthal(cartan, lam, dominant, pos_roots, root_pair, root_sq, gram):
    cdef Py_ssize_t n = len(lam), npos = len(pos_roots)
    cdef Py_ssize_t i, j, a, idx
    cdef long long* C = _matrix(cartan, n, n)
    cdef long long* A = _matrix(pos_roots, npos, n)
    cdef long long* RP = _matrix(root_pair, npos, n)
    cdef long long* G = _matrix(gram, n, n)
    cdef long long* nu = <long long*>malloc(max(n, 1) * sizeof(long long))
    cdef long long* x = <long long*>malloc(max(n, 1) * sizeof(long long))
    cdef long long base, rsq, k

    try:
        top = _norm_shift(G, lam, x, n)
        index = {mu: i for i, mu in enumerate(dominant)}
        mults = [0] * len(dominant)
        mults[0] = 1
        for idx in range(1, len(dominant)):
            mu = dominant[idx]
            total = 0
            for a in range(npos):
                base = 0
                for i in range(n):
                    base += <long long>mu[i] * RP[a * n + i]
                rsq = root_sq[a]
                k = 1
                for i in range(n):
                    nu[i] = mu[i]
                while True:
                    for i in range(n):
                        nu[i] += A[a * n + i]
                        x[i] = nu[i]
                    _reflect(C, x, n)
                    j_obj = index.get(_to_tuple(x, n))
                    if j_obj is None:
                        break
                    total += mults[<Py_ssize_t>j_obj] * (base + k * rsq)
                    k += 1
            den = top - _norm_shift(G, mu, x, n)
            num = 2 * total
            if num % den:
                raise ArithmeticError("Freudenthal recursion produced a non-integer")
            mults[idx] = num // den
        return mults
    finally:
        free(C)
        free(A)
        free(RP)
        free(G)
        free(nu)
        free(x)
