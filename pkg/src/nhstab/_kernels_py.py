"""Pure-Python versions of the inner loops.

The compiled module ``_kernels`` exposes the same functions with the same
signatures; ``kernels`` picks one at import time. Weights are integer
tuples in fundamental-weight coordinates; ``cartan`` is a tuple of rows.
"""

from __future__ import annotations


def reflect_to_dominant(cartan, x):
    """Return (dominant representative, sign of the Weyl element, on_wall)."""
    x = list(x)
    n = len(x)
    sign = 1
    while True:
        for i in range(n):
            c = x[i]
            if c < 0:
                row = cartan[i]
                for j in range(n):
                    x[j] -= c * row[j]
                sign = -sign
                break
        else:
            break
    on_wall = False
    for c in x:
        if c == 0:
            on_wall = True
            break
    return tuple(x), sign, on_wall


def orbit(cartan, dom):
    n = len(dom)
    out = []
    stack = [tuple(dom)]
    while stack:
        lam = stack.pop()
        out.append(lam)
        for k in range(n):
            lk = lam[k]
            if lk <= 0:
                continue
            row = cartan[k]
            ok = True
            for j in range(k):
                if lam[j] - lk * row[j] < 0:
                    ok = False
                    break
            if ok:
                stack.append(tuple([x - lk * c for x, c in zip(lam, row)]))
    return out


def orbit_project(cartan, dom, rdom, ralpha, keep, mult, acc):
    """Walk the Weyl orbit of ``dom`` carrying the projected image.

    ``rdom`` is the image of ``dom``; ``ralpha[k]`` the image of the k-th simple
    root. Images whose coordinates listed in ``keep`` are all nonnegative get
    ``mult`` added to ``acc``.
    """
    n = len(dom)
    stack = [(tuple(dom), tuple(rdom))]
    while stack:
        lam, img = stack.pop()
        good = True
        for i in keep:
            if img[i] < 0:
                good = False
                break
        if good:
            acc[img] = acc.get(img, 0) + mult
        for k in range(n):
            lk = lam[k]
            if lk <= 0:
                continue
            row = cartan[k]
            ok = True
            for j in range(k):
                if lam[j] - lk * row[j] < 0:
                    ok = False
                    break
            if ok:
                ra = ralpha[k]
                stack.append((tuple([x - lk * c for x, c in zip(lam, row)]),
                              tuple([y - lk * a for y, a in zip(img, ra)])))
    return acc


def alternating_accumulate(cartan, weights, shift, scale, acc):
    """Brauer-Klimyk accumulation.

    For every (nu, m) in ``weights`` reflect ``scale*nu + shift`` into the
    dominant chamber; off the walls add ``sign*m`` at the result minus rho.
    """
    n = len(shift)
    for nu, m in weights:
        x = [scale * a + b for a, b in zip(nu, shift)]
        sign = 1
        while True:
            for i in range(n):
                c = x[i]
                if c < 0:
                    row = cartan[i]
                    for j in range(n):
                        x[j] -= c * row[j]
                    sign = -sign
                    break
            else:
                break
        wall = False
        for c in x:
            if c == 0:
                wall = True
                break
        if wall:
            continue
        key = tuple([c - 1 for c in x])
        acc[key] = acc.get(key, 0) + sign * m
    return acc


def freudenthal(cartan, lam, dominant, pos_roots, root_pair, root_sq, gram):
    """Multiplicities of the dominant weights of V_lam.

    ``dominant`` lists the dominant weights of V_lam sorted so that each one
    comes after every weight above it (lam first). ``root_pair[a]`` is the
    integer vector with (mu, alpha) = mu . root_pair[a] in the scaled form
    ``gram``; ``root_sq[a]`` is (alpha, alpha) in the same scale.
    """
    n = len(lam)

    def norm_shift(mu):
        s = [x + 1 for x in mu]
        return sum(s[i] * sum(gram[i][j] * s[j] for j in range(n)) for i in range(n))

    top = norm_shift(lam)
    index = {mu: i for i, mu in enumerate(dominant)}
    mults = [0] * len(dominant)
    mults[0] = 1
    for idx in range(1, len(dominant)):
        mu = dominant[idx]
        total = 0
        for a, alpha in enumerate(pos_roots):
            rp = root_pair[a]
            base = 0
            for i in range(n):
                base += mu[i] * rp[i]
            rsq = root_sq[a]
            k = 1
            nu = list(mu)
            while True:
                for i in range(n):
                    nu[i] += alpha[i]
                # dominant representative of nu
                x = list(nu)
                while True:
                    for i in range(n):
                        c = x[i]
                        if c < 0:
                            row = cartan[i]
                            for j in range(n):
                                x[j] -= c * row[j]
                            break
                    else:
                        break
                j = index.get(tuple(x))
                if j is None:
                    break
                total += mults[j] * (base + k * rsq)
                k += 1
        den = top - norm_shift(mu)
        num = 2 * total
        if num % den:
            raise ArithmeticError("Freudenthal recursion produced a non-integer")
        mults[idx] = num // den
    return mults
