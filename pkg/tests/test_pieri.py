import pytest

from isoschub.partitions import IG, OG, SpaceContext, ell_k, enumerate_p, weight
from isoschub.pieri import arrow_targets, classical_pieri, quantum_pieri, stable_pieri

IG21 = SpaceContext(IG, 2, 1)
IG31 = SpaceContext(IG, 3, 1)
OG21 = SpaceContext(OG, 2, 1)
OG31 = SpaceContext(OG, 3, 1)


def test_arrow_targets_examples():
    by_target = {w.target: w for w in arrow_targets((1,), 1, 0)}
    assert set(by_target) == {(2,)}
    assert by_target[(2,)].components_avoiding_col_kp1 == 1

    by_target = {w.target: w for w in arrow_targets((2,), 1, 1)}
    assert set(by_target) == {(3,), (2, 1)}
    three = by_target[(3,)]
    assert three.set_a == frozenset()  # [1,3] is k-related to the bottom box [1,1]
    assert three.components_avoiding_col_kp1 == 0
    assert by_target[(2, 1)].components_avoiding_col_kp1 == 0

    for p0, k in ((3, 1), (2, 4)):
        witnesses = arrow_targets((), p0, k)
        assert [w.target for w in witnesses] == [(p0,)]
        expected = frozenset((1, c) for c in range(k + 1, p0 + 1))
        assert witnesses[0].set_a == expected

    with pytest.raises(ValueError):
        arrow_targets((3, 3), 1, 1)


def test_classical_pieri_examples():
    assert classical_pieri(IG31, 2, (1,)) == {(3,): 1, (2, 1): 1}
    # k = 0 is the Lagrangian Grassmannian; the Schur Q identity Q_1^2 = 2 Q_2
    assert classical_pieri(SpaceContext(IG, 2, 0), 1, (1,)) == {(2,): 2}
    assert classical_pieri(OG21, 1, (1,)) == {(2,): 2}
    assert classical_pieri(OG21, 1, (2,)) == {(3,): 1}
    with pytest.raises(ValueError):
        classical_pieri(IG31, 5, (1,))
    with pytest.raises(ValueError):
        classical_pieri(IG31, 1, (5,))


def test_stable_pieri_examples():
    assert stable_pieri(0, 1, (1,)) == {(2,): 2}
    assert stable_pieri(2, 1, (1,)) == {(2,): 1, (1, 1): 1}
    assert stable_pieri(0, 2, (1,)) == {(3,): 2, (2, 1): 1}
    for k, p in ((0, 3), (2, 2), (1, 4)):
        result = stable_pieri(k, p, ())
        assert result == {(p,): 1}


def test_quantum_pieri_ig_examples():
    assert quantum_pieri(IG21, 1, (3,)) == {((), 1): 1}
    assert quantum_pieri(IG21, 1, (1,)) == {((2,), 0): 1}
    # degree obstruction: no q part while |lam| + p < n + k + 1
    for lam in ((), (1,), (2,)):
        if weight(lam) + 1 < 5:
            terms = quantum_pieri(IG31, 1, lam)
            assert all(q == 0 for _, q in terms)


def test_quantum_pieri_og_examples():
    assert quantum_pieri(OG21, 1, (3,)) == {((1,), 1): 1}
    assert quantum_pieri(OG21, 3, (3,)) == {((), 2): 1}
    assert quantum_pieri(OG21, 2, (3,)) == {((2,), 1): 1}
    # the q-target (2,1) keeps only its first column after stripping the
    # first row, so the surviving class is the unit
    assert quantum_pieri(OG21, 1, (2,)) == {((3,), 0): 1, ((), 1): 1}
    assert quantum_pieri(OG21, 2, (2,)) == {((1,), 1): 1}


@pytest.mark.parametrize("ctx", [IG21, IG31, OG21, OG31,
                                 SpaceContext(IG, 3, 2), SpaceContext(OG, 3, 2)])
def test_quantum_grading_and_classical_layer(ctx):
    for lam in enumerate_p(ctx.k, ctx.n):
        for p in range(1, ctx.max_special + 1):
            quantum = quantum_pieri(ctx, p, lam)
            classical = classical_pieri(ctx, p, lam)
            assert {mu: c for (mu, q), c in quantum.items() if q == 0} == classical
            for (mu, q), coeff in quantum.items():
                assert weight(mu) + q * ctx.q_degree == weight(lam) + p
                assert coeff > 0 and coeff & (coeff - 1) == 0  # a power of two


@pytest.mark.parametrize("k, family", [(0, IG), (1, IG), (2, IG),
                                       (0, OG), (1, OG), (2, OG)])
def test_pieri_products_commute(k, family):
    for lam in enumerate_p(k, k + 2):
        for p1 in (1, 2, 3):
            for p2 in (1, 2):
                one = {}
                for mu, c in stable_pieri(k, p1, lam, family).items():
                    for nu, d in stable_pieri(k, p2, mu, family).items():
                        one[nu] = one.get(nu, 0) + c * d
                two = {}
                for mu, c in stable_pieri(k, p2, lam, family).items():
                    for nu, d in stable_pieri(k, p1, mu, family).items():
                        two[nu] = two.get(nu, 0) + c * d
                assert one == two


def test_family_exponent_correspondence_small():
    # N + ell_k(mu) = N' + ell_k(lam) + [p > k] on a small stable sweep
    from isoschub._pierikernel import pieri_targets

    for k in (0, 1, 2):
        for lam in enumerate_p(k, k + 2):
            for p in range(1, 5):
                for mu, comps, comps_off in pieri_targets(lam, p, k, -1, -1):
                    n_ig = comps_off
                    n_og = comps - (1 if p > k else 0)
                    assert n_og >= 0
                    assert n_ig + ell_k(mu, k) == n_og + ell_k(lam, k) + (1 if p > k else 0)


def test_outputs_are_fresh_copies():
    first = classical_pieri(IG31, 1, (1,))
    first[(9, 9)] = 99
    assert (9, 9) not in classical_pieri(IG31, 1, (1,))
    q_first = quantum_pieri(IG21, 1, (3,))
    q_first["junk"] = 1
    assert "junk" not in quantum_pieri(IG21, 1, (3,))
