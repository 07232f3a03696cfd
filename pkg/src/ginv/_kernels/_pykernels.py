"""Pure-Python table kernels.

Mirror of ``_ckernels.pyx``; both must return identical results.  Tables are
plain nested lists here (numpy scalar indexing is slower than list indexing).
"""

INNER, ONE_THREE, ONE_FOUR, MP, GROUP, DRAZIN, CORE, DUAL_CORE = range(8)
RIGHT_CORE, LEFT_CORE, PSEUDO_CORE, RIGHT_PSEUDO_CORE = range(8, 12)
RIGHT_INVERSE, LEFT_INVERSE, EP, BC, LEFT_BC, RIGHT_BC = range(12, 18)


def _power(mul, one, a, k):
    acc = one
    for _ in range(k):
        acc = mul[acc][a]
    return acc


def search(code, a, k, b, c, mul, star, one, first):
    """Indices x satisfying the equations of ``code`` for input ``a``."""
    n = len(mul)
    out = []
    ak = _power(mul, one, a, k)
    ak1 = mul[ak][a]
    a2 = mul[a][a]
    mul_a = mul[a]
    in_set = None
    if code == LEFT_BC:
        in_set = bytearray(n)
        for s in range(n):
            in_set[mul[s][c]] = 1
    elif code == RIGHT_BC:
        in_set = bytearray(n)
        for s in mul[b]:
            in_set[s] = 1
    for x in range(n):
        ax = mul_a[x]
        xa = mul[x][a]
        if code == INNER:
            ok = mul[ax][a] == a
        elif code == ONE_THREE:
            ok = mul[ax][a] == a and star[ax] == ax
        elif code == ONE_FOUR:
            ok = mul[ax][a] == a and star[xa] == xa
        elif code == MP:
            ok = (mul[ax][a] == a and mul[xa][x] == x
                  and star[ax] == ax and star[xa] == xa)
        elif code == EP:
            ok = (ax == xa and mul[ax][a] == a and mul[xa][x] == x
                  and star[ax] == ax)
        elif code == GROUP:
            ok = ax == xa and mul[ax][a] == a and mul[xa][x] == x
        elif code == DRAZIN:
            ok = ax == xa and mul[xa][x] == x and mul[ak1][x] == ak
        elif code == CORE:
            ok = mul[x][a2] == a and mul[ax][x] == x and star[ax] == ax
        elif code == DUAL_CORE:
            ok = mul[a2][x] == a and mul[x][xa] == x and star[xa] == xa
        elif code == RIGHT_CORE:
            ok = mul[ax][a] == a and mul[ax][x] == x and star[ax] == ax
        elif code == LEFT_CORE:
            ok = mul[ax][a] == a and mul[x][xa] == x and star[xa] == xa
        elif code == PSEUDO_CORE:
            ok = mul[x][ak1] == ak and mul[ax][x] == x and star[ax] == ax
        elif code == RIGHT_PSEUDO_CORE:
            ok = mul[ax][ak] == ak and mul[ax][x] == x and star[ax] == ax
        elif code == RIGHT_INVERSE:
            ok = ax == one
        elif code == LEFT_INVERSE:
            ok = xa == one
        elif code == LEFT_BC:
            ok = in_set[x] and mul[xa][b] == b
        elif code == RIGHT_BC:
            ok = in_set[x] and mul[c][ax] == c
        elif code == BC:
            ok = mul[xa][b] == b and mul[c][ax] == c
            if ok:
                mul_b = mul[b]
                ok = any(mul[mul_b[s]][x] == x for s in range(n))
            if ok:
                mul_x = mul[x]
                ok = any(mul[mul_x[s]][c] == x for s in range(n))
        else:
            raise ValueError(f"unknown kind code {code}")
        if ok:
            out.append(x)
            if first:
                break
    return out


def solve_terms(lefts, rights, rhs, mul, add, zero, first):
    """Indices x with sum(mul[mul[l][x]][r]) == rhs."""
    n = len(mul)
    pairs = list(zip(lefts, rights))
    out = []
    for x in range(n):
        acc = zero
        for l, r in pairs:
            acc = add[acc][mul[mul[l][x]][r]]
        if acc == rhs:
            out.append(x)
            if first:
                break
    return out


def one_sided_inverses(mul, one, right):
    """For each u the first x with ux = 1 (right) or xu = 1, else -1."""
    n = len(mul)
    out = [-1] * n
    for u in range(n):
        for x in range(n):
            if (mul[u][x] if right else mul[x][u]) == one:
                out[u] = x
                break
    return out
