"""Constructor stages: hollow conjugation, base case, lift, recursion."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polywit.construct import (
    BRANCH_PI,
    BRANCH_REWRITE,
    base_case_witness,
    construct_witness,
    hollow_similarity,
    lift_witness,
    reduce_step,
    scalar_case_basis,
    shift_bracket_closed_form,
    size_bound,
    witness_for_multilinear,
)
from polywit.errors import (
    EmptyPolynomialError,
    PreconditionError,
)
from polywit.matrices import (
    Matrix,
    cyclic_shift,
    embed,
    inverse,
    iterated_commutator,
)
from polywit.polynomials import (
    AdmissiblePoly,
    MultilinearPoly,
    evaluate,
    from_multilinear,
    merge_position_index,
)
from polywit.randgen import (
    random_commuting_assignment,
    random_marked,
    random_multilinear,
    random_trace_zero,
)
from polywit.harness import verify

# ----------------------------------------------------------- hollow form


def test_hollow_nilpotent_hand_trace():
    a = Matrix.unit(2, 1, 2)
    p, h = hollow_similarity(a)
    assert p == Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert h == Matrix.unit(3, 2, 1)
    assert h == p * embed(a, 3) * inverse(p)


def test_hollow_diagonal_hand_trace():
    a = Matrix.diagonal([1, -1])
    p, h = hollow_similarity(a)
    assert h == Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert h.has_zero_diagonal()


def test_hollow_zero_matrix():
    for d in (1, 2, 3):
        p, h = hollow_similarity(Matrix.zeros(d))
        assert p == Matrix.identity(d + 1)
        assert h.is_zero()


def test_hollow_rejects_nonzero_trace():
    with pytest.raises(PreconditionError) as err:
        hollow_similarity(Matrix([[Fraction(5, 3)]]))
    assert "5/3" in str(err.value)


def test_scalar_case_basis_invertible():
    for d in (1, 2, 4):
        q = scalar_case_basis(d)
        inverse(q)
        for i in range(1, d + 1):
            assert q[i, i] == 1 and q[d + 1, i] == 1
            assert q[i, d + 1] == -1
        assert q[d + 1, d + 1] == 1


@settings(deadline=None, max_examples=40)
@given(st.integers(1, 6), st.integers(0, 10 ** 6))
def test_hollow_property(d, seed):
    a = random_trace_zero(d, seed)
    p, h = hollow_similarity(a)
    assert h.has_zero_diagonal()
    assert h == p * embed(a, d + 1) * inverse(p)


# --------------------------------------------------------------- base case


def test_base_case_plain_variable():
    a = random_trace_zero(3, seed=5)
    w = base_case_witness(Fraction(2), (), a)
    assert w.size == 3
    assert w.x(1) == a.scale(Fraction(1, 2))
    assert w.u_assign == {}


def test_base_case_with_brackets():
    a = random_trace_zero(2, seed=9)
    lam = Fraction(-3, 2)
    for omegas in ((5,), (4, 7)):
        w = base_case_witness(lam, omegas, a)
        assert w.size == 3
        f = AdmissiblePoly(1, omegas, {((1,), (omegas,)): lam})
        assert evaluate(f, w) == embed(a, 3)
        us = [w.u(o) for o in omegas]
        assert all(u == us[0] for u in us)


def test_base_case_rejects_bad_inputs():
    a = random_trace_zero(2, seed=1)
    with pytest.raises(PreconditionError):
        base_case_witness(Fraction(0), (), a)
    with pytest.raises(PreconditionError) as err:
        base_case_witness(Fraction(1), (), Matrix([[1, 0], [0, 1]]))
    assert "2" in str(err.value)


# -------------------------------------------------------------- closed form


def test_shift_bracket_matches_brute_force():
    for k in range(5):
        v = cyclic_shift(k, 1)
        corner = Matrix.unit(k + 1, k + 1, 1)
        for j in range(k + 1):
            assert shift_bracket_closed_form(k, j) == iterated_commutator(
                [v] * j, corner
            )


def test_shift_bracket_block_form():
    from polywit.matrices import block_unit

    b = 2
    for k in (1, 2):
        v = cyclic_shift(k, b)
        corner = block_unit(k + 1, k + 1, 1, Matrix.identity(b))
        for j in range(k + 1):
            assert shift_bracket_closed_form(k, j, block=b) == iterated_commutator(
                [v] * j, corner
            )


def test_shift_bracket_rejects_bad_range():
    with pytest.raises(PreconditionError):
        shift_bracket_closed_form(2, 3)


# --------------------------------------------------------------------- lift


def _lift_case(n, omega, omegabar, seed, extras=()):
    g = random_marked(n, omega, omegabar, density=0.6, seed=seed)
    rest = tuple(w for w in omega if w not in omegabar)
    gw = random_commuting_assignment(
        range(1, n), rest + (n,), size=2, seed=seed + 1
    )
    k = len(omegabar)
    parent_coeffs = dict(
        merge_position_index(n, omega, dict(g.coeffs)).coeffs
    )
    for key, lam in extras:
        parent_coeffs[key] = parent_coeffs.get(key, Fraction(0)) + lam
    parent = AdmissiblePoly(n, omega, parent_coeffs)
    lifted = lift_witness(gw, k, omegabar, omega, n)
    assert lifted.size == (k + 1) * gw.size
    assert evaluate(parent, lifted) == embed(
        evaluate(g, gw), (k + 1) * gw.size
    )


def test_lift_equality_plain():
    for seed in range(4):
        _lift_case(2, (3,), (3,), seed)
        _lift_case(2, (3, 4), (4,), seed)
        _lift_case(3, (4,), (), seed)


def test_lift_kills_terms_with_other_slots():
    # Terms whose top-variable slot leaves the selected set must vanish.
    extras = [
        (((1, 2), ((3,), (4,))), Fraction(7)),
        (((2, 1), ((), (3, 4))), Fraction(-2)),
    ]
    for seed in range(4):
        _lift_case(2, (3, 4), (3,), seed, extras=extras)


def test_lift_validates_omegabar():
    gw = random_commuting_assignment((1,), (2,), size=2, seed=0)
    with pytest.raises(PreconditionError):
        lift_witness(gw, 1, (5,), (3,), 2)


# ---------------------------------------------------------------- reduction


def test_reduce_step_pi_branch():
    f = from_multilinear(MultilinearPoly(2, {(1, 2): 1}))
    step = reduce_step(f)
    assert step.branch == BRANCH_PI
    assert step.k == 0 and step.omegabar == ()
    assert step.pi_part == AdmissiblePoly(1, (), {((1,), ((),)): 1})
    assert step.rewritten is None


def test_reduce_step_rewrite_branch():
    f = from_multilinear(MultilinearPoly(2, {(1, 2): 1, (2, 1): -1}))
    step = reduce_step(f)
    assert step.branch == BRANCH_REWRITE
    assert step.pi_part.is_zero()
    assert step.rewritten == AdmissiblePoly(1, (2,), {((1,), ((2,),)): -1})


def test_reduce_step_rejects_degenerate_inputs():
    with pytest.raises(EmptyPolynomialError):
        reduce_step(AdmissiblePoly(2, (), {}))
    with pytest.raises(PreconditionError):
        reduce_step(from_multilinear(MultilinearPoly(1, {(1,): 1})))


# ---------------------------------------------------------------- recursion


def test_construct_commutator_hand_trace():
    f = MultilinearPoly(2, {(1, 2): 1, (2, 1): -1})
    a = Matrix.unit(2, 1, 2)
    s, w = witness_for_multilinear(f, a)
    assert s == 3
    assert w.trace == [{"k": 0, "omegabar": [], "branch": "rewrite"}]
    assert w.x(1) == Matrix.unit(3, 1, 2).scale(-1)
    assert w.x(2) == Matrix.diagonal([1, 0, 2])
    assert verify(f, w, a)


def test_construct_product_uses_pi_branch():
    f = MultilinearPoly(2, {(1, 2): 1})
    a = random_trace_zero(2, seed=3)
    s, w = witness_for_multilinear(f, a)
    assert s == 2
    assert w.trace == [{"k": 0, "omegabar": [], "branch": "pi"}]
    assert w.x(2) == Matrix.identity(2)
    assert verify(f, w, a)


def test_construct_alternating_cubic():
    f = MultilinearPoly(
        3,
        {
            (1, 2, 3): 1, (1, 3, 2): -1, (3, 1, 2): 1,
            (2, 1, 3): -1, (2, 3, 1): 1, (3, 2, 1): -1,
        },
    )
    a = random_trace_zero(3, seed=11)
    s, w = witness_for_multilinear(f, a)
    assert [t["branch"] for t in w.trace] == [BRANCH_PI, BRANCH_REWRITE]
    assert s == 4
    assert verify(f, w, a)


def test_construct_rejects_nonzero_trace():
    f = MultilinearPoly(1, {(1,): 1})
    with pytest.raises(PreconditionError) as err:
        construct_witness(from_multilinear(f), Matrix([[2, 0], [0, 1]]))
    assert "3" in str(err.value)


def test_construct_rejects_zero_polynomial():
    with pytest.raises(EmptyPolynomialError):
        witness_for_multilinear(MultilinearPoly(2, {}), Matrix.zeros(2))


def test_size_bound():
    assert size_bound(2, []) == 3
    assert size_bound(2, [{"k": 1}, {"k": 0}]) == 6


@settings(deadline=None, max_examples=40)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_construct_random_property(n, d, seed):
    f = random_multilinear(n, density=0.6, seed=seed)
    a = random_trace_zero(d, seed=seed + 1)
    s, w = witness_for_multilinear(f, a)
    assert verify(f, w, a)
    assert s <= size_bound(d, w.trace)
