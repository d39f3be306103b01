from fractions import Fraction

import pytest

from isoschub._sparse import add_term, as_int, drop_zeros
from isoschub.giambelli import GiambelliPolynomial, giambelli_og, raising_expand
from isoschub.partitions import IG, OG, SpaceContext, enumerate_p
from isoschub.rings import (
    StableRingHandle,
    evaluate_classical,
    evaluate_quantum,
    pi_image,
    pi_tilde_image,
    qh_multiply,
    quantum_product,
    recursion_expand,
    schubert_quantum,
    stable_relation_check,
)

IG21 = SpaceContext(IG, 2, 1)
IG31 = SpaceContext(IG, 3, 1)
OG21 = SpaceContext(OG, 2, 1)
OG31 = SpaceContext(OG, 3, 1)


def test_evaluate_classical_examples():
    assert evaluate_classical(IG31, raising_expand((2, 1), 1)) == {(2, 1): 1}
    unit = GiambelliPolynomial("sigma", {((), 0): 1})
    assert evaluate_classical(IG31, unit) == {(): 1}
    assert evaluate_classical(OG31, giambelli_og((2, 1), 1)[1]) == {(2, 1): 1}
    # outside the rectangle the quotient map kills the class
    assert evaluate_classical(IG21, raising_expand((2, 1), 1)) == {}
    assert evaluate_classical(OG21, giambelli_og((2, 1), 1)[1]) == {}


def test_evaluate_classical_validation():
    with pytest.raises(ValueError):
        evaluate_classical(IG31, giambelli_og((2, 1), 1)[0])  # c form, not tau
    with pytest.raises(ValueError):
        evaluate_classical(OG31, raising_expand((2, 1), 1))
    withq = GiambelliPolynomial("sigma", {((2,), 1): 1})
    with pytest.raises(ValueError):
        evaluate_classical(IG31, withq)


def test_evaluate_quantum_examples():
    poly = GiambelliPolynomial("sigma", {((4, 3), 0): 1, ((2,), 1): -1})
    assert evaluate_quantum(IG31, poly) == {((4, 3), 0): 1}
    fourth = GiambelliPolynomial("sigma", {((1, 1, 1, 1), 0): 1})
    assert evaluate_quantum(IG21, fourth) == {((), 1): 1}
    unit = GiambelliPolynomial("sigma", {((), 0): 1})
    assert evaluate_quantum(IG21, unit) == {((), 0): 1}


@pytest.mark.parametrize("ctx", [IG21, IG31, OG21, OG31])
def test_schubert_quantum_small_grids(ctx):
    for lam in enumerate_p(ctx.k, ctx.n):
        assert schubert_quantum(lam, ctx) == {(lam, 0): 1}


def test_qh_multiply_examples():
    assert qh_multiply(IG21, (3,), (1,)) == {((), 1): 1}
    assert qh_multiply(OG21, (3,), (3,)) == {((), 2): 1}
    for ctx, lam in ((IG21, (2,)), (OG31, (3, 1))):
        assert qh_multiply(ctx, lam, ()) == {(lam, 0): 1}


@pytest.mark.parametrize("ctx", [IG31, OG31])
def test_qh_multiply_by_special_is_quantum_pieri(ctx):
    from isoschub.pieri import quantum_pieri

    for lam in enumerate_p(ctx.k, ctx.n):
        for p in range(1, ctx.max_special + 1):
            assert qh_multiply(ctx, lam, (p,)) == quantum_pieri(ctx, p, lam)


def _classical_multiply(ctx, lam, mu):
    from isoschub.pieri import classical_pieri

    poly = raising_expand(mu, ctx.k) if ctx.family == IG else giambelli_og(mu, ctx.k)[1]
    total = {}
    for (degs, _), coeff in poly.terms.items():
        if degs and degs[0] > ctx.max_special:
            continue
        combo = {lam: 1}
        for d in degs:
            step = {}
            for nu, c in combo.items():
                for target, c2 in classical_pieri(ctx, d, nu).items():
                    add_term(step, target, c * c2)
            combo = step
        for nu, c in combo.items():
            add_term(total, nu, coeff * c)
    return {key: as_int(val) for key, val in drop_zeros(total).items()}


@pytest.mark.parametrize("ctx", [IG21, IG31, OG21, OG31])
def test_q0_layer_of_quantum_product_is_classical(ctx):
    members = enumerate_p(ctx.k, ctx.n)
    for lam in members:
        for mu in members:
            quantum = qh_multiply(ctx, lam, mu)
            q0 = {nu: c for (nu, q), c in quantum.items() if q == 0}
            assert q0 == _classical_multiply(ctx, lam, mu), (lam, mu)


def test_quantum_product_of_combinations():
    combo = {((1,), 0): 1}
    out = quantum_product(IG21, combo, combo)
    assert out == {((2,), 0): 1}
    half = {((1,), 0): Fraction(1, 2)}
    assert quantum_product(IG21, half, half) == {((2,), 0): Fraction(1, 4)}


def test_pi_image_values():
    assert pi_image(IG31, 4) == {((4,), 0): 1}
    assert pi_image(IG31, 5) == {((), 1): Fraction(1, 2)}
    assert pi_image(IG31, 7) == {}
    assert pi_image(IG31, 9) == {}
    assert pi_image(IG31, 10) == {((), 2): Fraction(1, 8)}
    with pytest.raises(ValueError):
        pi_image(OG31, 5)
    with pytest.raises(ValueError):
        pi_image(IG31, 0)


def test_pi_tilde_values():
    assert pi_tilde_image(OG21, 3) == {((3,), 0): 1}
    assert pi_tilde_image(OG21, 4) == {}
    assert pi_tilde_image(OG21, 5) == {}
    assert pi_tilde_image(OG21, 6) == {((), 2): 1}
    with pytest.raises(ValueError):
        pi_tilde_image(IG21, 3)


def _substitution(ctx):
    return pi_image if ctx.family == IG else pi_tilde_image


@pytest.mark.parametrize("ctx", [IG21, IG31, OG21, SpaceContext(OG, 3, 2)])
def test_substitution_kills_stable_relations(ctx):
    # the defining property of the forced values, exercised through degree
    # 2n+2k+4 so the recursively solved images participate
    image = _substitution(ctx)
    for r in range(ctx.k + 1, ctx.n + ctx.k + 3):
        total = dict(quantum_product(ctx, image(ctx, r), image(ctx, r)))
        for i in range(1, r + 1):
            if ctx.family == IG:
                scale = 2 if i % 2 == 0 else -2
            else:
                delta = 2 if r - i > ctx.k else 1
                scale = delta if i % 2 == 0 else -delta
            if i == r:
                prod = image(ctx, 2 * r)
            else:
                prod = quantum_product(ctx, image(ctx, r + i), image(ctx, r - i))
            for key, val in prod.items():
                add_term(total, key, scale * val)
        assert not drop_zeros(total), (ctx, r)


@pytest.mark.parametrize("ctx", [IG21, IG31, OG21, OG31])
def test_substitution_reproduces_schubert_classes(ctx):
    # applying the substitution homomorphism to the stable Giambelli
    # polynomial, generator by generator, lands back on the class
    image = _substitution(ctx)
    for lam in enumerate_p(ctx.k, ctx.n):
        if ctx.family == IG:
            poly = raising_expand(lam, ctx.k)
        else:
            poly = giambelli_og(lam, ctx.k)[1]
        total = {}
        for (degs, q), coeff in poly.terms.items():
            combo = {((), 0): 1}
            for d in degs:
                combo = quantum_product(ctx, combo, image(ctx, d))
            for (nu, qq), c in combo.items():
                add_term(total, (nu, qq + q), coeff * c)
        total = {key: as_int(val) for key, val in drop_zeros(total).items()}
        assert total == {(lam, 0): 1}, lam


def test_recursion_expand_examples():
    handle = StableRingHandle(IG, 0)
    assert recursion_expand(handle, (2, 1)) == {(2, (1,)): 1, (3, ()): -2}
    for k, p in ((0, 2), (1, 3), (2, 1)):
        assert recursion_expand(StableRingHandle(IG, k), (p,)) == {(p, ()): 1}
    with pytest.raises(ValueError):
        recursion_expand(handle, ())
    with pytest.raises(ValueError):
        recursion_expand(handle, (2, 1), degree_cap=2)


@pytest.mark.parametrize("family", [IG, OG])
@pytest.mark.parametrize("k, n", [(0, 3), (1, 3), (2, 4)])
def test_recursion_substitutes_back(family, k, n):
    from isoschub.pieri import stable_pieri

    handle = StableRingHandle(family, k)
    for lam in enumerate_p(k, n):
        if not lam:
            continue
        expansion = recursion_expand(handle, lam)
        total = {}
        for (p, mu), coeff in expansion.items():
            assert lam[0] <= p <= sum(lam)
            assert len(mu) <= len(lam) - 1
            assert all(mu[i] <= lam[i + 1] for i in range(len(mu)))
            if mu:
                for nu, c in stable_pieri(k, p, mu, family).items():
                    add_term(total, nu, coeff * c)
            else:
                add_term(total, (p,), coeff)
        assert total == {lam: 1}, lam


def test_lg24_q3_ring_isomorphism():
    # LG(2,4) and the 3-dimensional quadric are the same variety; the two
    # rule families must produce isomorphic quantum rings (classes matched
    # by codimension, q to q)
    lg, q3 = SpaceContext(IG, 2, 0), SpaceContext(OG, 2, 1)
    iso = {(): (), (1,): (1,), (2,): (2,), (2, 1): (3,)}
    for lam in iso:
        for mu in iso:
            left = qh_multiply(lg, lam, mu)
            mapped = {(iso[nu], q): c for (nu, q), c in left.items()}
            assert mapped == qh_multiply(q3, iso[lam], iso[mu]), (lam, mu)


def _power_of_h(ctx, exp):
    combo = {((), 0): 1}
    for _ in range(exp):
        combo = quantum_product(ctx, combo, {((1,), 0): 1})
    return combo


def test_quadric_quantum_presentation():
    # odd quadrics satisfy h^(m+1) = 4 q h; OG(1,5), OG(1,7), and LG(2,4)
    # (the last is isomorphic to the 3-dimensional quadric) all comply
    q3 = SpaceContext(OG, 2, 1)
    assert _power_of_h(q3, 3) == {((3,), 0): 2, ((), 1): 2}
    assert _power_of_h(q3, 4) == {((1,), 1): 4}
    assert _power_of_h(q3, 6) == {((3,), 1): 8, ((), 2): 8}  # 4q * h^3

    q5 = SpaceContext(OG, 3, 2)
    assert _power_of_h(q5, 5) == {((5,), 0): 2, ((), 1): 2}
    assert _power_of_h(q5, 6) == {((1,), 1): 4}

    lg24 = SpaceContext(IG, 2, 0)
    assert _power_of_h(lg24, 3) == {((2, 1), 0): 2, ((), 1): 2}
    assert _power_of_h(lg24, 4) == {((1,), 1): 4}


def test_stable_relation_examples():
    assert stable_relation_check(StableRingHandle(IG, 0), 1)
    assert stable_relation_check(StableRingHandle(IG, 2), 3)
    assert stable_relation_check(StableRingHandle(OG, 1), 2)
    with pytest.raises(ValueError):
        stable_relation_check(StableRingHandle(IG, 2), 2)


def test_concurrent_use_is_consistent():
    # memo tables must tolerate concurrent readers/writers
    import threading

    ctx = SpaceContext(IG, 3, 1)
    members = enumerate_p(1, 3)
    expected = {(lam, mu): qh_multiply(ctx, lam, mu)
                for lam in members for mu in members[:6]}
    errors = []

    def worker():
        try:
            for (lam, mu), want in expected.items():
                if qh_multiply(ctx, lam, mu) != want:
                    errors.append((lam, mu))
        except Exception as exc:  # noqa: BLE001
            errors.append(exc)

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors


def test_truncation_weight_guard():
    tight = StableRingHandle(IG, 1, truncation_weight=3)
    with pytest.raises(ValueError):
        stable_relation_check(tight, 2)
    loose = StableRingHandle(IG, 1, truncation_weight=4)
    assert stable_relation_check(loose, 2)
    with pytest.raises(ValueError):
        evaluate_classical(
            StableRingHandle(IG, 1, truncation_weight=2),
            raising_expand((2, 1), 1),
        )
