import pytest

from ginv.certificate import verify
from ginv.errors import HypothesisNotMet, InternalInconsistency, PreconditionFailed
from ginv.finite import oracle_search
from ginv.gen_inverse import (Status, WitnessMode, compute, core_from_witness, core_inverse,
                              decompose_core_nilpotent, dual_core_inverse, ep_check,
                              one_sided_bc_inverse, one_sided_obstruction, pseudo_core_inverse,
                              representation_blocks, reverse_order_check, right_core_inverse,
                              right_core_via_complement, right_core_via_projection,
                              right_pseudo_core_inverse, spectral_idempotent)
from ginv.kinds import InverseKind as K
from ginv.ring import Side

from conftest import six_rings

NIL = [[0, 1], [0, 0]]
IDEM = [[1, 1], [0, 0]]
E11 = [[1, 0], [0, 0]]


# -- right core -------------------------------------------------------------------

def test_right_core_z6(z6):
    c = right_core_inverse(z6.element(2))
    assert c.witness == z6.element(2)
    assert c.witness == oracle_search(z6.element(2), K.RIGHT_CORE).witness


def test_right_core_backward_shift(tz):
    a = tz.S_star
    c = right_core_inverse(a)
    assert c is not None and verify(c)
    assert c.witness == tz.S
    assert a * c.witness == tz.one
    assert spectral_idempotent(c).element.is_zero()


def test_right_core_nilpotent_none(qi2):
    assert right_core_inverse(qi2.element(NIL)) is None


def test_right_core_idempotent(qi2):
    c = right_core_inverse(qi2.element(IDEM))
    assert c.witness == qi2.element(E11)


def test_right_core_of_shift_unknown(tz):
    out = compute(K.RIGHT_CORE, tz.S)
    assert out.status is Status.UNKNOWN
    assert "bounded" in out.reason


def test_zero_certified(z6, qi2):
    for ring in (z6, qi2):
        for kind in (K.CORE, K.RIGHT_CORE, K.PSEUDO_CORE):
            c = compute(kind, ring.zero).certificate
            assert c.witness.is_zero() and c.index_k == 1


# -- via projection ------------------------------------------------------------------

def test_via_projection_unit(z6):
    c = right_core_via_projection(z6.element(5), z6.zero, 1)
    assert c.witness == z6.element(5)


@pytest.mark.parametrize("n", [1, 2])
def test_via_projection_z6(z6, n):
    c = right_core_via_projection(z6.element(2), z6.element(3), n)
    assert c.witness == z6.element(2)


def test_via_projection_checks_pa(z6):
    with pytest.raises(PreconditionFailed):
        right_core_via_projection(z6.element(2), z6.element(4), 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_via_complement_agrees(z6, n):
    a, p = z6.element(2), z6.element(3)
    c = right_core_via_complement(a, p, n)
    assert a * c.witness == a * right_core_inverse(a).witness


# -- spectral idempotent --------------------------------------------------------------

def test_spectral_idempotent(z6):
    assert spectral_idempotent(right_core_inverse(z6.element(5))).element.is_zero()
    assert spectral_idempotent(right_core_inverse(z6.element(2))).element == z6.element(3)


def test_spectral_idempotent_wrong_kind(z8):
    c = compute(K.PSEUDO_CORE, z8.element(2)).certificate
    with pytest.raises(ValueError):
        spectral_idempotent(c)


# -- core and dual core ---------------------------------------------------------------

def test_core_examples(qi2, z6):
    assert core_inverse(qi2.element(IDEM)).witness == qi2.element(E11)
    assert core_inverse(z6.element(5)).witness == z6.element(5)
    assert core_inverse(qi2.element(NIL)) is None


def test_core_nilpotent_reason(qi2):
    out = compute(K.CORE, qi2.element(NIL))
    assert out.status is Status.NOT_FOUND
    assert "group" in out.reason


def test_dual_core_examples(qi2, z6):
    p = qi2.element(E11)
    assert dual_core_inverse(p).witness == p
    assert dual_core_inverse(z6.element(5)).witness == z6.element(5)
    # a^dagger a a# with a# = a, a^dagger = [[1/2,0],[1/2,0]]
    half = "1/2"
    assert dual_core_inverse(qi2.element(IDEM)).witness == \
        qi2.element([[half, half], [half, half]])


# -- witness systems -------------------------------------------------------------------

@pytest.mark.parametrize("mode", list(WitnessMode))
def test_core_from_witness_unit(qi2, mode):
    a = qi2.element([[2, 1], [0, 1]])
    inv = compute(K.MP, a).certificate.witness
    assert core_from_witness(a, inv, 1, mode).witness == inv


def test_core_from_witness_idempotent(qi2):
    a, x = qi2.element(IDEM), qi2.element(E11)
    assert core_from_witness(a, x, 1, WitnessMode.SYMMETRIC_AX).witness == x
    assert core_from_witness(a, x, 2, "SymmetricPower").witness == x


def test_core_from_witness_reports_equation(qi2):
    with pytest.raises(HypothesisNotMet) as exc:
        core_from_witness(qi2.element(NIL), qi2.zero, 1, WitnessMode.SYMMETRIC_AX)
    assert exc.value.equation == "xa^2=a"


# -- EP ---------------------------------------------------------------------------------

def test_ep_symmetric_unit(qi2):
    a = qi2.element([[2, 1], [1, 1]])
    c = ep_check(a)
    assert c is not None
    assert a * c.witness == qi2.one


def test_ep_idempotent_not_ep(qi2):
    assert ep_check(qi2.element(IDEM)) is None


def test_every_z6_element_ep(z6):
    assert all(ep_check(a) is not None for a in z6.elements())


def test_ep_from_witness(qi2):
    a = qi2.element([[2, 0], [0, 0]])
    x = qi2.element([["1/2", 0], [0, 0]])
    c = ep_check(a, x, 1)
    assert c.witness == x


# -- pseudo core ------------------------------------------------------------------------

def test_pseudo_core_nilpotent(qi2):
    c = pseudo_core_inverse(qi2.element(NIL))
    assert c.witness.is_zero() and c.index_k == 2


def test_pseudo_core_z8(z8):
    c = pseudo_core_inverse(z8.element(2))
    assert c.witness.is_zero() and c.index_k == 3
    o = oracle_search(z8.element(2), K.PSEUDO_CORE)
    assert (o.witness, o.index_k) == (c.witness, c.index_k)


def test_pseudo_core_block(qi3):
    a = qi3.element([[0, 1, 0], [0, 0, 0], [0, 0, 1]])
    c = pseudo_core_inverse(a)
    assert c.witness == qi3.element([[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert c.index_k == 2


def test_right_pseudo_core_examples(tz, z8, z6):
    c = right_pseudo_core_inverse(tz.S_star)
    assert c.witness == tz.S and c.index_k == 1
    c = right_pseudo_core_inverse(z8.element(2))
    assert c.witness.is_zero() and c.index_k == 3
    c = right_pseudo_core_inverse(z6.element(5))
    assert c.witness == z6.element(5) and c.index_k == 1


# -- one-sided (b,c) --------------------------------------------------------------------

def test_bc_unit(z6):
    u = z6.element(5)
    assert one_sided_bc_inverse(u, u, u, Side.RIGHT).witness == u


def test_bc_z6_matches_right_core(z6):
    a = z6.element(2)
    c = one_sided_bc_inverse(a, a, a.star, Side.RIGHT)
    assert c.witness == right_core_inverse(a).witness


def test_bc_shift_none(tz):
    S = tz.S
    assert one_sided_bc_inverse(S, S, S.star, Side.RIGHT) is None


# -- decompositions ----------------------------------------------------------------------

def test_core_nilpotent_unit(z6):
    a = z6.element(5)
    parts = decompose_core_nilpotent(a, right_core_inverse(a))
    assert parts.a1 == a and parts.a2.is_zero()


def test_core_nilpotent_z6(z6):
    a = z6.element(2)
    parts = decompose_core_nilpotent(a, right_core_inverse(a))
    assert parts.a1 == z6.element(2) and parts.a2.is_zero()


def test_core_nilpotent_matrix(qi2):
    a = qi2.element(IDEM)
    parts = decompose_core_nilpotent(a, right_core_inverse(a))
    assert parts.a1 + parts.a2 == a
    assert (parts.a2 * parts.a2).is_zero()
    assert verify(parts.a1_certificate)


def test_core_nilpotent_rejects_other_kind(z6):
    a = z6.element(2)
    with pytest.raises(ValueError):
        decompose_core_nilpotent(a, core_inverse(a))


def test_representation_blocks(qi2, z8, z6):
    a = z6.element(5)
    pa, px = representation_blocks(a, right_core_inverse(a))
    a = qi2.element(IDEM)
    representation_blocks(a, right_core_inverse(a))
    a = z8.element(2)
    c = right_pseudo_core_inverse(a)
    pa, _ = representation_blocks(a, c)
    assert (a * c.witness).is_zero()


def test_representation_blocks_detects_bad_certificate(qi2):
    from ginv.certificate import InverseCertificate
    a = qi2.element(NIL)
    fake = InverseCertificate(K.RIGHT_CORE, a, qi2.element([[0, 0], [1, 0]]), 1, (), "forged")
    with pytest.raises(InternalInconsistency):
        representation_blocks(a, fake)


# -- reverse order -----------------------------------------------------------------------

def test_reverse_order_units(z6):
    u = z6.element(5)
    c = reverse_order_check(u, u)
    assert c.witness == u * u


def test_reverse_order_z6(z6):
    a = z6.element(2)
    c = reverse_order_check(a, a)
    assert c.input == z6.element(4) and c.witness == z6.element(4)


def test_reverse_order_hypotheses_fail(qi2):
    assert reverse_order_check(qi2.element(IDEM), qi2.element(NIL)) is None


# -- obstruction and compute -------------------------------------------------------------

def test_one_sided_obstruction(tz, z6):
    assert one_sided_obstruction(tz.S_star) == "right"
    assert one_sided_obstruction(tz.S) == "left"
    assert one_sided_obstruction(z6.element(5)) is None


def test_compute_needs_aux(z6):
    with pytest.raises(ValueError):
        compute(K.BC, z6.element(2))


def test_compute_oracle_fallback_route(z8):
    # whatever route is taken, a found certificate always re-verifies
    for a in z8.elements():
        out = compute(K.RIGHT_PSEUDO_CORE, a, oracle_fallback=True)
        if out.certificate is not None:
            assert verify(out.certificate)


@pytest.mark.parametrize("ring", six_rings(), ids=lambda r: r.ring_id)
@pytest.mark.parametrize("kind", [K.RIGHT_CORE, K.CORE, K.PSEUDO_CORE])
def test_existence_agrees_with_oracle(ring, kind):
    for a in ring.elements():
        found = compute(kind, a).certificate
        oracle = oracle_search(a, kind)
        assert (found is None) == (oracle is None), str(a)
        if found is not None:
            assert verify(found)
            assert found.index_k == oracle.index_k
            if kind is K.RIGHT_CORE:
                # only ax is invariant
                assert a * found.witness == a * oracle.witness
