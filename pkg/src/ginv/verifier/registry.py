"""The claim registry: one executable equivalence per numbered statement.

Condition keys are the condition formulas in plain-text notation, with
``a_r^#`` for a right core inverse, ``a^#`` for the group inverse, ``a^D``
for the Drazin inverse and ``a^(D)`` / ``a_r^(D)`` for (right) pseudo core
inverses.  Universally quantified n, k range over ``QUANT``; existentially
quantified ones over ``1..k_max`` of the ring.
"""
from __future__ import annotations

from typing import Callable

from ginv.kinds import InverseKind
from ginv.ring import Element
from ginv.verifier.claims import (AllEquivalent, Claim, Condition, Implications,
                                  SubjectKind, equivalences)
from ginv.verifier.context import ENUM, POWERS, QUANT, SOLVE, EvalContext

K = InverseKind
E, P = SubjectKind.ELEMENT, SubjectKind.PAIR


def cond(text: str, fn: Callable, *requires: str) -> Condition:
    return Condition(text, fn, frozenset(requires or (ENUM,)))


def k_range(ctx: EvalContext) -> range:
    return range(1, ctx.k_max + 1)


# -- plain equation checks -------------------------------------------------------

def rc_eqs(a: Element, x: Element) -> bool:
    ax = a * x
    return ax * a == a and ax * x == x and ax.star == ax


def core_eqs(a: Element, x: Element) -> bool:
    ax = a * x
    return x * a * a == a and ax * x == x and ax.star == ax


def group_eqs(a: Element, x: Element) -> bool:
    ax, xa = a * x, x * a
    return ax * a == a and xa * x == x and ax == xa


def drazin_eqs(a: Element, x: Element, k: int) -> bool:
    ax, xa = a * x, x * a
    ak = a ** k
    return xa * x == x and ax == xa and ak == ak * a * x


def pc_eqs(a: Element, x: Element, k: int) -> bool:
    ax = a * x
    ak = a ** k
    return x * ak * a == ak and ax * x == x and ax.star == ax


def rpc_eqs(a: Element, x: Element, k: int) -> bool:
    ax = a * x
    ak = a ** k
    return ax * ak == ak and ax * x == x and ax.star == ax


def one_three_eqs(a: Element, x: Element) -> bool:
    ax = a * x
    return ax * a == a and ax.star == ax


def sym(e: Element) -> bool:
    return e.star == e


def rc_exists(a: Element, ctx: EvalContext) -> bool:
    return ctx.has(K.RIGHT_CORE, a)


RC_TEXT = "a is right core invertible"


def _rc_condition() -> Condition:
    return cond(RC_TEXT, rc_exists)


# -- section 2 -----------------------------------------------------------------

def lemma_2_1() -> Claim:
    def by_definition(a, ctx):
        return ctx.has(K.RIGHT_BC, a, aux=(a, a.star))

    def three_equations(a, ctx):
        return ctx.find(lambda x: rc_eqs(a, x)) is not None

    def ideal_form(a, ctx):
        return ctx.in_right(a.star, a.star * a * a)

    def member_form(a, ctx):
        asa = a.star * a
        return ctx.find(lambda x: asa * x == a.star and ctx.in_right(x, a)) is not None

    return Claim("Lemma2.1", "right core invertibility by three equations", E, (
        cond("a is right (a,a^*)-invertible", by_definition),
        cond("there exists x such that axa=a, x=ax^2 and (ax)^*=ax", three_equations),
        cond("a^* in a^*a^2R", ideal_form, SOLVE),
        cond("there exists x in aR such that a^*ax=a^*", member_form),
    ), AllEquivalent())


def remark_2_2() -> Claim:
    def invariant(a, ctx):
        products = {(a * x).value for x in ctx.witnesses(K.RIGHT_CORE, a)}
        return len(products) == 1

    def spectral(a, ctx):
        ws = ctx.witnesses(K.RIGHT_CORE, a)
        one = ctx.ring.one
        for x in ws:
            p = one - a * x
            if not (p * p == p and sym(p) and (p * a).is_zero()):
                return False
        return bool(ws)

    return Claim("Remark2.2", "a a_r^# does not depend on the witness", E, (
        _rc_condition(),
        cond("aa_r^# is invariant on the choice of a_r^#", invariant),
        cond("a^pi=1-aa_r^# is a projection with a^pi a=0", spectral),
    ), AllEquivalent())


def cor_2_3() -> Claim:
    def commuting(a, ctx):
        return any(a * x == x * a for x in ctx.witnesses(K.RIGHT_CORE, a))

    def is_ep(a, ctx):
        return ctx.has(K.EP, a)

    def coincide(a, ctx):
        group = set(ctx.witnesses(K.GROUP, a))
        mp = set(ctx.witnesses(K.MP, a))
        return any(a * x == x * a and x in group and x in mp
                   for x in ctx.witnesses(K.RIGHT_CORE, a))

    t0 = "aa_r^#=a_r^#a for some right core inverse"
    t1 = "a is EP"
    t2 = "a_r^#=a^#=a^dagger"
    return Claim("Cor2.3", "commuting right core inverse forces EP", E, (
        cond(t0, commuting), cond(t1, is_ep), cond(t2, coincide),
    ), Implications(((t0, t1), (t0, t2))))


def cor_2_4() -> Claim:
    def system(a, x, k):
        m = a ** (k + 1) * x ** (k + 1)
        return m * a == a and a * x * x == x and sym(m)

    def for_any(a, ctx):
        return ctx.find(lambda x: all(system(a, x, k) for k in QUANT)) is not None

    def for_some(a, ctx):
        return any(ctx.find(lambda x: system(a, x, k)) is not None for k in QUANT)

    return Claim("Cor2.4", "power form of the three equations", E, (
        _rc_condition(),
        cond("a^{k+1}x^{k+1}a=a, x=ax^2 and (a^{k+1}x^{k+1})^*=a^{k+1}x^{k+1}, for any k>=1",
             for_any),
        cond("a^{k+1}x^{k+1}a=a, x=ax^2 and (a^{k+1}x^{k+1})^*=a^{k+1}x^{k+1}, for some k>=1",
             for_some),
    ), AllEquivalent())


def _qualifying(a, ctx, n: int, form: str) -> list[Element]:
    """Projections p with pa = 0 and the unit form right invertible."""
    one = ctx.ring.one
    an = a ** n
    out = []
    for p in ctx.projections:
        if not (p * a).is_zero():
            continue
        u = p + an if form == "u" else an * (one - p) + p
        if ctx.right_invertible(u):
            out.append(p)
    return out


def _unit_formula(a, ctx, n: int) -> bool:
    one = ctx.ring.one
    ps = [p for p in _qualifying(a, ctx, n, "u") if p in _qualifying(a, ctx, n, "w")]
    if not ps:
        return False
    an1 = a ** (n - 1)
    for p in ps:
        q = one - p
        rs = ctx.right_inverses(p + a ** n)
        ws = ctx.right_inverses(a ** n * q + p)
        xs = [(r * q if n == 1 else an1 * r) for r in rs] + [an1 * q * s for s in ws]
        if not xs or not all(rc_eqs(a, x) for x in xs):
            return False
    return True


def thm_2_5() -> Claim:
    return Claim("Thm2.5", "projection plus unit characterization", E, (
        _rc_condition(),
        cond("there exists a unique projection p such that pa=0 and u=p+a in R_r^{-1}",
             lambda a, ctx: len(_qualifying(a, ctx, 1, "u")) == 1),
        cond("there exists a unique projection p such that pa=0 and w=a(1-p)+p in R_r^{-1}",
             lambda a, ctx: len(_qualifying(a, ctx, 1, "w")) == 1),
        cond("a_r^#=u_r^{-1}(1-p)=(1-p)w_r^{-1}", lambda a, ctx: _unit_formula(a, ctx, 1)),
    ), AllEquivalent())


def lemma_2_6() -> Claim:
    def right_inv(first: bool):
        def f(s, ctx):
            a, b = s
            u = ctx.ring.one + (a * b if first else b * a)
            return ctx.right_invertible(u)
        return f

    return Claim("Lemma2.6", "Jacobson lemma for right invertibility", P, (
        cond("1+ab is right invertible", right_inv(True), SOLVE),
        cond("1+ba is right invertible", right_inv(False), SOLVE),
    ), AllEquivalent())


def thm_2_7() -> Claim:
    conds = [_rc_condition()]
    for n in POWERS:
        conds.append(cond(
            f"there exists a unique projection p such that pa=0 and u=p+a^n in R_r^{{-1}} [n={n}]",
            lambda a, ctx, n=n: len(_qualifying(a, ctx, n, "u")) == 1))
        conds.append(cond(
            f"there exists a unique projection p such that pa=0 and w=a^n(1-p)+p in "
            f"R_r^{{-1}} [n={n}]",
            lambda a, ctx, n=n: len(_qualifying(a, ctx, n, "w")) == 1))
        conds.append(cond(
            f"x=a^{{n-1}}(p+a^n)_r^{{-1}} and x=a^{{n-1}}(1-p)w_r^{{-1}} [n={n}]",
            lambda a, ctx, n=n: _unit_formula(a, ctx, n)))
    return Claim("Thm2.7", "projection plus unit with powers", E, tuple(conds),
                 AllEquivalent())


def _pair_domain() -> Condition:
    return cond("a, b in R_r^#", lambda s, ctx: rc_exists(s[0], ctx) and rc_exists(s[1], ctx))


def _reverse_order(s, ctx) -> bool:
    a, b = s
    ab = a * b
    return all(rc_eqs(ab, xb * xa)
               for xa in ctx.witnesses(K.RIGHT_CORE, a)
               for xb in ctx.witnesses(K.RIGHT_CORE, b))


REVERSE_TEXT = "b_r^# a_r^# is a right core inverse of ab"


def prop_2_8() -> Claim:
    def first(e, ctx):
        return ctx.witnesses(K.RIGHT_CORE, e)[0]

    def same_projection(s, ctx):
        a, b = s
        return a * first(a, ctx) == b * first(b, ctx)

    def same_ideal(s, ctx):
        a, b = s
        return ctx.right_ideals_equal(a, b)

    def pi_unit(plain: bool):
        def f(s, ctx):
            a, b = s
            one = ctx.ring.one
            pi = one - a * first(a, ctx)
            if not (pi * b).is_zero():
                return False
            u = pi + b if plain else pi + b * (one - pi)
            return ctx.right_invertible(u)
        return f

    t = ("aa_r^#=bb_r^#", "aR=bR", "a^pi b=0 and a^pi+b in R_r^{-1}",
         "a^pi b=0 and a^pi+b(1-a^pi) in R_r^{-1}")
    return Claim("Prop2.8", "equal spectral idempotents", P, (
        cond(t[0], same_projection), cond(t[1], same_ideal, SOLVE),
        cond(t[2], pi_unit(True)), cond(t[3], pi_unit(False)),
        cond(REVERSE_TEXT, _reverse_order),
    ), Implications(equivalences(*t) + ((t[0], REVERSE_TEXT),)), domain=_pair_domain())


def prop_2_9() -> Claim:
    def absorbs(s, ctx):
        a, b = s
        xa = ctx.witnesses(K.RIGHT_CORE, a)[0]
        xb = ctx.witnesses(K.RIGHT_CORE, b)[0]
        return a == a * b * xb and b == a * xa * b

    def chain(s, ctx):
        a, b = s
        return ctx.in_right(a.star, b) and ctx.in_right(b, a)

    t0 = "a=abb_r^# and b=aa_r^#b"
    t1 = "a^*R subset bR subset aR"
    return Claim("Prop2.9", "reverse order law under nested ranges", P, (
        cond(t0, absorbs), cond(t1, chain, SOLVE), cond(REVERSE_TEXT, _reverse_order),
    ), Implications(equivalences(t0, t1) + ((t0, REVERSE_TEXT),)), domain=_pair_domain())


def thm_2_10() -> Claim:
    def upper(s, ctx):
        a, x = s
        one = ctx.ring.one
        for q in ctx.projections:
            nq = one - q
            if not ((nq * a).is_zero() and (nq * x).is_zero()):
                continue
            a1, x1, x2 = q * a * q, q * x * q, q * x * nq
            if a1 * x1 == q and (a1 * x2).is_zero():
                return True
        return False

    def lower(s, ctx):
        a, x = s
        one = ctx.ring.one
        for p in ctx.projections:
            if not ((p * a).is_zero() and (p * x).is_zero()):
                continue
            np_ = one - p
            a2, x1, x2 = np_ * a * np_, np_ * x * p, np_ * x * np_
            if a2 * x2 == np_ and (a2 * x1).is_zero():
                return True
        return False

    return Claim("Thm2.10", "block representation of a and a_r^#", P, (
        cond("a is right core invertible and x is a right core inverse of a",
             lambda s, ctx: rc_eqs(*s)),
        cond("a=[[a_1,a_2],[0,0]]_q, x=[[x_1,x_2],[0,0]]_q, x_1=(a_1)_r^{-1} in qRq, a_1x_2=0",
             upper),
        cond("a=[[0,0],[a_1,a_2]]_p, x=[[0,0],[x_1,x_2]]_p, x_2=(a_2)_r^{-1} in (1-p)R(1-p), "
             "a_2x_1=0", lower),
    ), AllEquivalent())


def thm_2_11() -> Claim:
    def each(check):
        def f(a, ctx):
            ws = ctx.witnesses(K.RIGHT_CORE, a)
            one = ctx.ring.one
            return bool(ws) and all(check(a, x, a * a * x, a * (one - a * x), ctx) for x in ws)
        return f

    t = ("a_1 is right core invertible", "a_2^2=0", "a_1a_2^*=0=a_2a_1", "a=a_1+a_2",
         "a_r^# a a_r^# is a right core inverse of a^2a_r^#",
         "a_r^# is a right core inverse of a^2a_r^#")
    conds = (
        _rc_condition(),
        cond(t[0], each(lambda a, x, a1, a2, ctx: ctx.has(K.RIGHT_CORE, a1))),
        cond(t[1], each(lambda a, x, a1, a2, ctx: (a2 * a2).is_zero())),
        cond(t[2], each(lambda a, x, a1, a2, ctx: (a1 * a2.star).is_zero()
                        and (a2 * a1).is_zero())),
        cond(t[3], each(lambda a, x, a1, a2, ctx: a1 + a2 == a)),
        cond(t[4], each(lambda a, x, a1, a2, ctx: rc_eqs(a1, x * a * x))),
        cond(t[5], each(lambda a, x, a1, a2, ctx: rc_eqs(a1, x))),
    )
    return Claim("Thm2.11", "core-nilpotent style decomposition", E, conds,
                 Implications(tuple((RC_TEXT, s) for s in t)))


# -- section 3 -----------------------------------------------------------------

def thm_3_1() -> Claim:
    def r13(e, ctx):
        return ctx.has(K.ONE_THREE, e)

    def ii(a, ctx):
        return r13(a, ctx) and ctx.right_ideals_equal(a, a * a)

    def iii(a, ctx):
        return r13(a, ctx) and all(ctx.right_ideals_equal(a, a ** n) for n in POWERS)

    def iv(a, ctx):
        return r13(a, ctx) and any(ctx.right_ideals_equal(a, a ** n) for n in POWERS)

    def v(a, ctx):
        return all(ctx.has(K.RIGHT_CORE, a ** n) and ctx.right_ideals_equal(a, a ** n)
                   for n in POWERS)

    def vi(a, ctx):
        return any(ctx.has(K.RIGHT_CORE, a ** n) and ctx.right_ideals_equal(a, a ** n)
                   for n in POWERS)

    pairs = [(n, k) for n in POWERS for k in QUANT if k > n]

    def vii(a, ctx):
        return all(r13(a ** n, ctx) and ctx.right_ideals_equal(a, a ** k) for n, k in pairs)

    def viii(a, ctx):
        return any(r13(a ** n, ctx) and ctx.right_ideals_equal(a, a ** k) for n, k in pairs)

    def power_formula(a, ctx):
        ws = ctx.witnesses(K.RIGHT_CORE, a)
        return bool(ws) and all(rc_eqs(a ** n, x ** n) for x in ws for n in (2, 3))

    def root_formula(a, ctx):
        for n in (2, 3):
            ys = ctx.witnesses(K.RIGHT_CORE, a ** n)
            if not ys or not all(rc_eqs(a, a ** (n - 1) * y) for y in ys):
                return False
        return True

    return Claim("Thm3.1", "right core invertibility by {1,3} and right ideals", E, (
        _rc_condition(),
        cond("a in R^{1,3} and aR=a^2R", ii),
        cond("a in R^{1,3} and aR=a^nR for any n>=2", iii),
        cond("a in R^{1,3} and aR=a^nR for some n>=2", iv),
        cond("a^n is right core invertible and aR=a^nR for any n>=2", v),
        cond("a^n is right core invertible and aR=a^nR for some n>=2", vi),
        cond("a^n in R^{1,3} and aR=a^kR for any n>=2 and k>n", vii),
        cond("a^n in R^{1,3} and aR=a^kR for some n>=2 and k>n", viii),
        cond("(a^n)_r^#=(a_r^#)^n", power_formula),
        cond("a_r^#=a^{n-1}(a^n)_r^#", root_formula),
    ), AllEquivalent())


def remark_3_2() -> Claim:
    def adjoint_solutions(a, ctx):
        ts = ctx.solutions([(ctx.ring.one, a.star * a)], a)
        return bool(ts) and all(one_three_eqs(a, t.star) for t in ts)

    return Claim("Remark3.2", "{1,3}-invertibility by a left ideal", E, (
        cond("a in R^{1,3}", lambda a, ctx: ctx.has(K.ONE_THREE, a)),
        cond("Ra=Ra^*a", lambda a, ctx: ctx.left_ideals_equal(a, a.star * a), SOLVE),
        cond("t^* is a {1,3}-inverse of a whenever a=ta^*a", adjoint_solutions),
    ), AllEquivalent())


def cor_3_3() -> Claim:
    conds = [_rc_condition()]
    for n in POWERS:
        conds.append(cond(
            f"Ra=Ra^*a and aR=a^nR [n={n}]",
            lambda a, ctx, n=n: ctx.left_ideals_equal(a, a.star * a)
            and ctx.right_ideals_equal(a, a ** n), SOLVE))
        conds.append(cond(
            f"Ra=R(a^*)^na [n={n}]",
            lambda a, ctx, n=n: ctx.left_ideals_equal(a, a.star ** n * a), SOLVE))
        conds.append(cond(
            f"Ra^n=R(a^*)^na^n and aR=a^kR for k>n [n={n}, k in {{{n + 1},{n + 2}}}]",
            lambda a, ctx, n=n: ctx.left_ideals_equal(a ** n, a.star ** n * a ** n)
            and all(ctx.right_ideals_equal(a, a ** k) for k in (n + 1, n + 2)), SOLVE))
    return Claim("Cor3.3", "left and right ideal characterizations", E, tuple(conds),
                 AllEquivalent())


def cor_3_4() -> Claim:
    return Claim("Cor3.4", "right (a,a^*) versus left (a,a^*) of a^*", E, (
        cond("a is right (a,a^*)-invertible",
             lambda a, ctx: ctx.has(K.RIGHT_BC, a, aux=(a, a.star))),
        cond("a^* is left (a,a^*)-invertible",
             lambda a, ctx: ctx.has(K.LEFT_BC, a.star, aux=(a, a.star))),
    ), AllEquivalent())


def remark_3_5() -> Claim:
    conds = [cond("a is right (a,a^*)-invertible",
                  lambda a, ctx: ctx.has(K.RIGHT_BC, a, aux=(a, a.star))),
             cond("a^* is left (a,a^*)-invertible",
                  lambda a, ctx: ctx.has(K.LEFT_BC, a.star, aux=(a, a.star)))]
    for n in POWERS:
        conds.append(cond(f"a^n is right (a,a^*)-invertible [n={n}]",
                          lambda a, ctx, n=n: ctx.has(K.RIGHT_BC, a ** n, aux=(a, a.star))))
        conds.append(cond(f"(a^*)^n is left (a,a^*)-invertible [n={n}]",
                          lambda a, ctx, n=n: ctx.has(K.LEFT_BC, a.star ** n,
                                                      aux=(a, a.star))))
    return Claim("Remark3.5", "one-sided (a,a^*) invertibility of powers", E, tuple(conds),
                 AllEquivalent())


# -- section 4 -----------------------------------------------------------------

def thm_4_1() -> Claim:
    def sys_ii(a, x, k):
        xk = x ** k
        m = a ** k * xk
        return x * a * a == a and xk == a * xk * x and sym(m)

    def sys_iii(a, x, k):
        xk = x ** k
        return x * a * a == a and xk == a * xk * x and sym(a * x)

    conds = [cond("a is core invertible", lambda a, ctx: ctx.has(K.CORE, a))]
    for k in QUANT:
        conds.append(cond(f"xa^2=a, x^k=ax^{{k+1}} and (a^kx^k)^*=a^kx^k [k={k}]",
                          lambda a, ctx, k=k: ctx.find(lambda x: sys_ii(a, x, k)) is not None))
        conds.append(cond(f"xa^2=a, x^k=ax^{{k+1}} and (ax)^*=ax [k={k}]",
                          lambda a, ctx, k=k: ctx.find(lambda x: sys_iii(a, x, k)) is not None))

        def z_power(a, ctx, k=k):
            xs = ctx.find_all(lambda x: sys_ii(a, x, k))
            return bool(xs) and all(core_eqs(a, a ** (k - 1) * x ** k) for x in xs)

        def z_sandwich(a, ctx, k=k):
            xs = ctx.find_all(lambda x: sys_iii(a, x, k))
            return bool(xs) and all(core_eqs(a, x * a * x) for x in xs)

        conds.append(cond(f"a^#(core)=z=a^{{k-1}}x^k [k={k}]", z_power))
        conds.append(cond(f"a^#(core)=z=xax [k={k}]", z_sandwich))
    return Claim("Thm4.1", "core invertibility by weakened systems", E, tuple(conds),
                 AllEquivalent())


def prop_4_2() -> Claim:
    conds = [cond("x is the core inverse of a", lambda s, ctx: core_eqs(*s))]
    for k in QUANT:
        def ii(s, ctx, k=k):
            a, x = s
            ax = a * x
            xk = x ** k
            return x * a * a == a and x * ax == x and sym(ax) and xk == a * xk * x

        def iii(s, ctx, k=k):
            a, x = s
            xk = x ** k
            ak1 = a ** (k + 1)
            m = xk * ak1 * x
            return (x * a * a == a and x * m == x and sym(m)
                    and xk == xk * ak1 * xk * x)

        conds.append(cond(f"xa^2=a, xax=x, (ax)^*=ax and x^k=ax^{{k+1}} [k={k}]", ii))
        conds.append(cond(f"xa^2=a, x^{{k+1}}a^{{k+1}}x=x, (x^ka^{{k+1}}x)^*=x^ka^{{k+1}}x and "
                          f"x^k=x^ka^{{k+1}}x^{{k+1}} [k={k}]", iii))
    return Claim("Prop4.2", "witness systems for the core inverse", P, tuple(conds),
                 AllEquivalent())


def thm_4_3() -> Claim:
    def sys_ii(a, x, k):
        xk = x ** k
        return x * a * a == a and sym(x * a) and xk == a * xk * x

    def sys_iii(a, x, k):
        xk = x ** k
        ak1 = a ** (k + 1)
        return x * a * a == a and sym(x ** (k + 1) * ak1) and xk == xk * ak1 * xk * x

    conds = [cond("a is EP", lambda a, ctx: ctx.has(K.EP, a))]
    for k in QUANT:
        conds.append(cond(f"xa^2=a, (xa)^*=xa and x^k=ax^{{k+1}} [k={k}]",
                          lambda a, ctx, k=k: ctx.find(lambda x: sys_ii(a, x, k)) is not None))
        conds.append(cond(f"xa^2=a, (x^{{k+1}}a^{{k+1}})^*=x^{{k+1}}a^{{k+1}} and "
                          f"x^k=x^ka^{{k+1}}x^{{k+1}} [k={k}]",
                          lambda a, ctx, k=k: ctx.find(lambda x: sys_iii(a, x, k)) is not None))

        def square(a, ctx, k=k):
            xs = ctx.find_all(lambda x: sys_ii(a, x, k))
            return bool(xs) and all(group_eqs(a, x * x * a) for x in xs)

        conds.append(cond(f"a^#=x^2a [k={k}]", square))
    return Claim("Thm4.3", "EP elements by weakened systems", E, tuple(conds), AllEquivalent())


def lemma_4_6() -> Claim:
    def pc_index(a, ctx):
        return ctx.least_index(K.PSEUDO_CORE, a)

    def drazin(a, ctx):
        for x, k in ctx.indexed_witnesses(K.DRAZIN, a):
            return x, k
        return None

    conds, pairs = [], []
    for k in QUANT:
        t_i = f"a is pseudo core invertible with pseudo core index k [k={k}]"
        t_ii = f"a^k in R^{{1,3}} and a in R^D with index k [k={k}]"
        t_f = f"a^(D)=a^Da^k(a^k)^(1,3) [k={k}]"

        def ii(a, ctx, k=k):
            d = drazin(a, ctx)
            return (d is not None and max(d[1], 1) == k
                    and ctx.has(K.ONE_THREE, a ** k))

        def formula(a, ctx, k=k):
            if pc_index(a, ctx) != k:
                return False
            pc = ctx.witnesses(K.PSEUDO_CORE, a, k)[0]
            d = drazin(a, ctx)
            ak = a ** k
            ms = ctx.witnesses(K.ONE_THREE, ak)
            return d is not None and bool(ms) and all(d[0] * ak * m == pc for m in ms)

        conds += [cond(t_i, lambda a, ctx, k=k: pc_index(a, ctx) == k), cond(t_ii, ii),
                  cond(t_f, formula)]
        pairs += list(equivalences(t_i, t_ii, t_f))
    return Claim("Lemma4.6", "pseudo core inverse from Drazin and {1,3}", E, tuple(conds),
                 Implications(tuple(pairs)))


def thm_4_7() -> Claim:
    def sys_ii(a, x, k):
        xk = x ** k
        ak = a ** k
        return x * ak * a == ak and a * xk * x == xk and sym(ak * xk)

    def sys_iii(a, x, k):
        ak = a ** k
        ak1 = ak * a
        return (ak * x ** (k + 1) * ak1 == ak and a * x * x == x
                and sym(ak1 * x ** (k + 1)))

    def ii(a, ctx):
        return any(ctx.find(lambda x: sys_ii(a, x, k)) is not None for k in k_range(ctx))

    def iii(a, ctx):
        return any(ctx.find(lambda x: sys_iii(a, x, k)) is not None for k in k_range(ctx))

    def formulas(a, ctx):
        found = False
        for k in k_range(ctx):
            for x in ctx.find_all(lambda x: sys_ii(a, x, k)):
                found = True
                if not (drazin_eqs(a, x ** (k + 1) * a ** k, k)
                        and pc_eqs(a, a ** (k - 1) * x ** k, k)):
                    return False
        return found

    return Claim("Thm4.7", "pseudo core invertibility by power systems", E, (
        cond("a is pseudo core invertible",
             lambda a, ctx: ctx.least_index(K.PSEUDO_CORE, a) is not None),
        cond("xa^{k+1}=a^k, ax^{k+1}=x^k and (a^kx^k)^*=a^kx^k", ii),
        cond("a^kx^{k+1}a^{k+1}=a^k, ax^2=x and (a^{k+1}x^{k+1})^*=a^{k+1}x^{k+1}", iii),
        cond("a^D=x^{k+1}a^k and a^(D)=a^{k-1}x^k", formulas),
    ), AllEquivalent())


def _rpc_exists(a, ctx) -> bool:
    return ctx.least_index(K.RIGHT_PSEUDO_CORE, a) is not None


RPC_TEXT = "a is right pseudo core invertible"


def thm_4_8() -> Claim:
    def power_rc(a, ctx):
        return any(ctx.has(K.RIGHT_CORE, a ** k) for k in k_range(ctx))

    def powers_of_witness(a, ctx):
        ws = ctx.indexed_witnesses(K.RIGHT_PSEUDO_CORE, a)
        return bool(ws) and all(rc_eqs(a ** k, x ** k) for x, k in ws)

    def from_power(a, ctx):
        found = False
        for k in k_range(ctx):
            for y in ctx.witnesses(K.RIGHT_CORE, a ** k):
                found = True
                if not rpc_eqs(a, a ** (k - 1) * y, k):
                    return False
        return found

    return Claim("Thm4.8", "right pseudo core versus right core of a power", E, (
        cond(RPC_TEXT, _rpc_exists),
        cond("a^k is right core invertible for some positive integer k", power_rc),
        cond("(a_r^(D))^k is a right core inverse of a^k", powers_of_witness),
        cond("a^{k-1}(a^k)_r^# is a right pseudo core inverse of a", from_power),
    ), AllEquivalent())


def thm_4_9() -> Claim:
    def ii(a, ctx):
        for k in k_range(ctx):
            ak = a ** k
            ak1 = ak * a
            if ctx.find(lambda y: ak1 * y * ak == ak and sym(ak1 * y)) is not None:
                return True
        return False

    def iii_at(a, ctx, k):
        ak = a ** k
        return ctx.has(K.ONE_THREE, ak) and ctx.right_ideals_equal(ak, ak * a)

    def iii(a, ctx):
        return any(iii_at(a, ctx, k) for k in k_range(ctx))

    def iv(a, ctx):
        for k in k_range(ctx):
            ak = a ** k
            ak1 = ak * a

            def ok(x):
                m = ak1 * x ** (k + 1)
                return m * ak == ak and a * x * x == x and sym(m)
            if ctx.find(ok) is not None:
                return True
        return False

    def formula(a, ctx):
        found = False
        for k in k_range(ctx):
            if not iii_at(a, ctx, k):
                continue
            ak = a ** k
            for z in ctx.solutions([(ak * a, ctx.ring.one)], ak):
                for m in ctx.witnesses(K.ONE_THREE, ak):
                    found = True
                    if not rpc_eqs(a, ak * z * m, k):
                        return False
        return found

    return Claim("Thm4.9", "right pseudo core invertibility characterizations", E, (
        cond(RPC_TEXT, _rpc_exists),
        cond("a^{k+1}ya^k=a^k and (a^{k+1}y)^*=a^{k+1}y for some y and k", ii),
        cond("a^k in R^{1,3} and a^kR=a^{k+1}R for some k", iii),
        cond("a^{k+1}x^{k+1}a^k=a^k, ax^2=x and (a^{k+1}x^{k+1})^*=a^{k+1}x^{k+1} "
             "for some x and k", iv),
        cond("x=a^kz(a^k)^(1,3) is a right pseudo core inverse", formula),
    ), AllEquivalent())


def thm_4_10() -> Claim:
    def ii(a, ctx):
        for k in k_range(ctx):
            ak = a ** k
            if ctx.left_ideals_equal(ak, ak.star * ak) and ctx.right_ideals_equal(ak, ak * a):
                return True
        return False

    def iii(a, ctx):
        return any(ctx.left_ideals_equal(a ** k, a.star ** (k + 1) * a ** k)
                   for k in k_range(ctx))

    return Claim("Thm4.10", "right pseudo core invertibility by ideals", E, (
        cond(RPC_TEXT, _rpc_exists),
        cond("Ra^k=R(a^k)^*a^k and a^kR=a^{k+1}R for some k", ii, SOLVE),
        cond("Ra^k=R(a^*)^{k+1}a^k for some k", iii, SOLVE),
    ), AllEquivalent())


def thm_4_11() -> Claim:
    def is_rpc(s, ctx):
        a, x = s
        return any(rpc_eqs(a, x, k) for k in k_range(ctx))

    def blocks(s, ctx):
        a, x = s
        one = ctx.ring.one
        for q in ctx.projections:
            nq = one - q
            if not (nq * x).is_zero():
                continue
            a1, a3 = q * a * q, nq * a * q
            x1, x2 = q * x * q, q * x * nq
            if not (a1 * x1 == q and (a1 * x2).is_zero() and (a3 * x1).is_zero()
                    and (a3 * x2).is_zero()):
                continue
            if any(q * a ** k == a ** k for k in k_range(ctx)):
                return True
        return False

    return Claim("Thm4.11", "block representation of right pseudo core inverses", P, (
        cond("x is a right pseudo core inverse of a", is_rpc),
        cond("a=[[a_1,a_2],[a_3,a_4]]_q, x=[[x_1,x_2],[0,0]]_q, x_1=(a_1)_r^{-1}, a_1x_2=0, "
             "a_3x_1=0, a_3x_2=0 and qa^k=a^k", blocks),
    ), AllEquivalent())


_BUILDERS = (lemma_2_1, remark_2_2, cor_2_3, cor_2_4, thm_2_5, lemma_2_6, thm_2_7,
             prop_2_8, prop_2_9, thm_2_10, thm_2_11, thm_3_1, remark_3_2, cor_3_3,
             cor_3_4, remark_3_5, thm_4_1, prop_4_2, thm_4_3, lemma_4_6, thm_4_7,
             thm_4_8, thm_4_9, thm_4_10, thm_4_11)

CLAIM_IDS = ("Lemma2.1", "Remark2.2", "Cor2.3", "Cor2.4", "Thm2.5", "Lemma2.6", "Thm2.7",
             "Prop2.8", "Prop2.9", "Thm2.10", "Thm2.11", "Thm3.1", "Remark3.2", "Cor3.3",
             "Cor3.4", "Remark3.5", "Thm4.1", "Prop4.2", "Thm4.3", "Lemma4.6", "Thm4.7",
             "Thm4.8", "Thm4.9", "Thm4.10", "Thm4.11")


def registry() -> dict[str, Claim]:
    claims = [b() for b in _BUILDERS]
    return {c.claim_id: c for c in claims}


def get_claim(claim_id: str) -> Claim:
    reg = registry()
    try:
        return reg[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(CLAIM_IDS)}") from None
