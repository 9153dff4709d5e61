"""Pure-Python hot loops. ``_ckernels.pyx`` mirrors these signatures exactly."""


def symmetrize_dn(terms, n, perms, perm_signs, sign_masks):
    """Sum ``sgn(perm) * act((perm, eps), f)`` over all ``perm`` and all ``eps``.

    ``terms`` maps exponent tuples to coefficients. ``sign_masks`` encodes
    each sign vector as the bitmask of its ``-1`` positions. The action sends
    ``z_i`` to ``eps_i * z_{perm[i]}``; its sign on a monomial only depends on
    the odd exponents, so the inner sum over ``eps`` is a popcount loop.
    Zero coefficients are dropped from the result.
    """
    out: dict = {}
    get = out.get
    for m, c in terms.items():
        odd = 0
        for i, e in enumerate(m):
            if e & 1:
                odd |= 1 << i
        eps_sum = 0
        for mask in sign_masks:
            eps_sum += -1 if bin(mask & odd).count("1") & 1 else 1
        if not eps_sum:
            continue
        coef = c * eps_sum
        for perm, sgn in zip(perms, perm_signs):
            b = [0] * n
            for i, e in enumerate(m):
                b[perm[i]] = e
            key = tuple(b)
            out[key] = get(key, 0) + sgn * coef
    return {m: c for m, c in out.items() if c}


def linear_fold_multilinear(factors, n):
    """Square-free part of ``prod(1 + sum(f[i] * z_i))`` as a dense list.

    Index ``mask`` holds the coefficient of ``prod(z_i for i in mask)``.
    """
    cur = [0] * (1 << n)
    cur[0] = 1
    bits = [1 << i for i in range(n)]
    for f in factors:
        nxt = cur[:]
        active = [(bits[i], c) for i, c in enumerate(f) if c]
        for mask, v in enumerate(cur):
            if not v:
                continue
            for bit, c in active:
                if not mask & bit:
                    nxt[mask | bit] += c * v
        cur = nxt
    return cur


def packing_width(factors, n):
    """Bits per packed field: enough for the largest possible exponent."""
    return max(len(factors), 1).bit_length()


def unpack(key, n, b):
    mask = (1 << b) - 1
    return tuple((key >> (b * (i + 1))) & mask for i in range(n))


def linear_product(factors, n, max_degree=-1):
    """Expand ``prod(1 + sum(f[i] * z_i))`` as ``{exponent tuple: coefficient}``.

    Monomials are packed into one int: the low field holds the total
    degree, field ``i + 1`` the exponent of ``z_i``. Terms of degree above
    ``max_degree`` are dropped when ``max_degree >= 0``.
    """
    b = packing_width(factors, n)
    degmask = (1 << b) - 1
    cap = max_degree if max_degree >= 0 else len(factors)
    cur = {0: 1}
    for f in factors:
        active = [((1 << (b * (i + 1))) | 1, c) for i, c in enumerate(f) if c]
        if not active:
            continue
        nxt = dict(cur)
        get = nxt.get
        for key, v in cur.items():
            if key & degmask >= cap:
                continue
            for shift, c in active:
                k = key + shift
                nxt[k] = get(k, 0) + c * v
        cur = {k: v for k, v in nxt.items() if v}
    return {unpack(k, n, b): v for k, v in cur.items()}
