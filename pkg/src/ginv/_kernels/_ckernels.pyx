# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; see ``_pykernels.py`` for the reference semantics."""

DEF INNER = 0
DEF ONE_THREE = 1
DEF ONE_FOUR = 2
DEF MP = 3
DEF GROUP = 4
DEF DRAZIN = 5
DEF CORE = 6
DEF DUAL_CORE = 7
DEF RIGHT_CORE = 8
DEF LEFT_CORE = 9
DEF PSEUDO_CORE = 10
DEF RIGHT_PSEUDO_CORE = 11
DEF RIGHT_INVERSE = 12
DEF LEFT_INVERSE = 13
DEF EP = 14
DEF BC = 15
DEF LEFT_BC = 16
DEF RIGHT_BC = 17


cdef inline int _power(const int[:, ::1] mul, int one, int a, int k) nogil:
    cdef int acc = one
    cdef int i
    for i in range(k):
        acc = mul[acc, a]
    return acc


def search(int code, int a, int k, int b, int c, const int[:, ::1] mul,
           const int[::1] star, int one, bint first):
    cdef int n = mul.shape[0]
    cdef int x, s, ax, xa, ak, ak1, a2
    cdef bint ok
    cdef bytearray in_set_buf = bytearray(n)
    cdef unsigned char[::1] in_set = in_set_buf
    if code < 0 or code > RIGHT_BC:
        raise ValueError(f"unknown kind code {code}")
    out = []
    ak = _power(mul, one, a, k)
    ak1 = mul[ak, a]
    a2 = mul[a, a]
    if code == LEFT_BC:
        for s in range(n):
            in_set[mul[s, c]] = 1
    elif code == RIGHT_BC:
        for s in range(n):
            in_set[mul[b, s]] = 1
    for x in range(n):
        ax = mul[a, x]
        xa = mul[x, a]
        if code == INNER:
            ok = mul[ax, a] == a
        elif code == ONE_THREE:
            ok = mul[ax, a] == a and star[ax] == ax
        elif code == ONE_FOUR:
            ok = mul[ax, a] == a and star[xa] == xa
        elif code == MP:
            ok = (mul[ax, a] == a and mul[xa, x] == x
                  and star[ax] == ax and star[xa] == xa)
        elif code == EP:
            ok = (ax == xa and mul[ax, a] == a and mul[xa, x] == x
                  and star[ax] == ax)
        elif code == GROUP:
            ok = ax == xa and mul[ax, a] == a and mul[xa, x] == x
        elif code == DRAZIN:
            ok = ax == xa and mul[xa, x] == x and mul[ak1, x] == ak
        elif code == CORE:
            ok = mul[x, a2] == a and mul[ax, x] == x and star[ax] == ax
        elif code == DUAL_CORE:
            ok = mul[a2, x] == a and mul[x, xa] == x and star[xa] == xa
        elif code == RIGHT_CORE:
            ok = mul[ax, a] == a and mul[ax, x] == x and star[ax] == ax
        elif code == LEFT_CORE:
            ok = mul[ax, a] == a and mul[x, xa] == x and star[xa] == xa
        elif code == PSEUDO_CORE:
            ok = mul[x, ak1] == ak and mul[ax, x] == x and star[ax] == ax
        elif code == RIGHT_PSEUDO_CORE:
            ok = mul[ax, ak] == ak and mul[ax, x] == x and star[ax] == ax
        elif code == RIGHT_INVERSE:
            ok = ax == one
        elif code == LEFT_INVERSE:
            ok = xa == one
        elif code == LEFT_BC:
            ok = in_set[x] != 0 and mul[xa, b] == b
        elif code == RIGHT_BC:
            ok = in_set[x] != 0 and mul[c, ax] == c
        else:  # BC
            ok = mul[xa, b] == b and mul[c, ax] == c
            if ok:
                ok = False
                for s in range(n):
                    if mul[mul[b, s], x] == x:
                        ok = True
                        break
            if ok:
                ok = False
                for s in range(n):
                    if mul[mul[x, s], c] == x:
                        ok = True
                        break
        if ok:
            out.append(x)
            if first:
                break
    return out


def solve_terms(const int[::1] lefts, const int[::1] rights, int rhs,
                const int[:, ::1] mul, const int[:, ::1] add, int zero, bint first):
    cdef int n = mul.shape[0]
    cdef int m = lefts.shape[0]
    cdef int x, i, acc
    out = []
    for x in range(n):
        acc = zero
        for i in range(m):
            acc = add[acc, mul[mul[lefts[i], x], rights[i]]]
        if acc == rhs:
            out.append(x)
            if first:
                break
    return out


def one_sided_inverses(const int[:, ::1] mul, int one, bint right):
    cdef int n = mul.shape[0]
    cdef int u, x, v
    out = [-1] * n
    for u in range(n):
        for x in range(n):
            v = mul[u, x] if right else mul[x, u]
            if v == one:
                out[u] = x
                break
    return out
