import random

import pytest
from hypothesis import given, strategies as st

from khecke.symfunc import (SymFunc, TensorSym, conjugate, convert,
                            coproduct_h, dominates, hall_pair, kostka,
                            make_partition, multiply, partitions_of, truncate)


def rand_symfunc(basis, rng, degree):
    return SymFunc(basis, {lam: rng.randint(-3, 3)
                           for lam in partitions_of(degree)})


class TestPartitions:
    def test_make_partition_sorts(self):
        assert make_partition([1, 3, 2]) == (3, 2, 1)
        assert make_partition([]) == ()
        with pytest.raises(ValueError):
            make_partition([2, -1])

    def test_partitions_of(self):
        assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert partitions_of(4, 2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_dominance(self):
        assert dominates((3, 1), (2, 2))
        assert not dominates((2, 2), (3, 1))
        assert dominates((2, 1), (2, 1))

    def test_conjugate(self):
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()


class TestKostka:
    @pytest.mark.parametrize("lam,mu,val", [
        ((2, 1), (1, 1, 1), 2),
        ((3,), (1, 1, 1), 1),
        ((1, 1, 1), (1, 1, 1), 1),
        ((2, 2), (2, 1, 1), 1),
        ((2, 2), (1, 1, 1, 1), 2),
        ((2, 1), (2, 2), 0),
    ])
    def test_values(self, lam, mu, val):
        assert kostka(lam, mu) == val

    def test_unitriangular(self):
        for d in range(1, 7):
            for lam in partitions_of(d):
                assert kostka(lam, lam) == 1
                for mu in partitions_of(d):
                    if kostka(lam, mu):
                        assert dominates(lam, mu)


class TestConvert:
    def test_h2_to_s(self):
        assert convert(SymFunc.gen("h", (2,)), "s") == SymFunc.gen("s", (2,))

    def test_jacobi_trudi_s21(self):
        assert convert(SymFunc.gen("s", (2, 1)), "h") == \
            SymFunc("h", {(2, 1): 1, (3,): -1})

    def test_h1_cubed(self):
        got = convert(SymFunc.gen("h", (1, 1, 1)), "s")
        assert got == SymFunc("s", {(3,): 1, (2, 1): 2, (1, 1, 1): 1})

    def test_roundtrips(self):
        rng = random.Random(0)
        for _ in range(25):
            f = rand_symfunc("m", rng, rng.randint(0, 7))
            for b in ("h", "s"):
                assert convert(convert(f, b), "m") == f
            fs = convert(f, "s")
            assert convert(convert(fs, "h"), "s") == fs

    def test_basis_mismatch_is_explicit(self):
        with pytest.raises(ValueError):
            SymFunc.gen("h", (1,)) + SymFunc.gen("m", (1,))
        with pytest.raises(ValueError):
            hall_pair(SymFunc.gen("m", (1,)), SymFunc.gen("m", (1,)))


class TestHallPairing:
    def test_duality(self):
        assert hall_pair(SymFunc.gen("h", (2, 1)), SymFunc.gen("m", (2, 1))) == 1
        assert hall_pair(SymFunc.gen("h", (2, 1)), SymFunc.gen("m", (1, 1, 1))) == 0

    def test_h11_monomial_coefficient(self):
        # h_1^2 = m_2 + 2 m_11; the pairing itself is the h/m duality
        h11 = multiply(SymFunc.gen("h", (1,)), SymFunc.gen("h", (1,)))
        assert convert(h11, "m") == SymFunc("m", {(2,): 1, (1, 1): 2})
        assert convert(h11, "m").terms[(1, 1)] == 2
        assert hall_pair(h11, SymFunc.gen("m", (1, 1))) == 1

    def test_bilinearity(self):
        rng = random.Random(1)
        for _ in range(20):
            d = rng.randint(1, 5)
            f1, f2 = rand_symfunc("h", rng, d), rand_symfunc("h", rng, d)
            g = rand_symfunc("m", rng, d)
            assert hall_pair(f1 + f2, g) == hall_pair(f1, g) + hall_pair(f2, g)


class TestMultiplyTruncate:
    def test_h_concat(self):
        assert multiply(SymFunc.gen("h", (1,)), SymFunc.gen("h", (1,))) == \
            SymFunc.gen("h", (1, 1))

    def test_truncate(self):
        f = SymFunc("m", {(2,): 1, (1, 1): 1})
        assert truncate(f, 2) == SymFunc("m", {(1, 1): 1}, 2)

    def test_commutative_associative(self):
        rng = random.Random(2)
        for _ in range(8):
            f = rand_symfunc("m", rng, 2)
            g = rand_symfunc("m", rng, 3)
            h = rand_symfunc("m", rng, 3)
            assert multiply(f, g) == multiply(g, f)
            assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))

    @given(st.integers(1, 4), st.integers(1, 4))
    def test_h_product_degree(self, a, b):
        prod = multiply(SymFunc.gen("h", (a,)), SymFunc.gen("h", (b,)))
        assert prod == SymFunc.gen("h", make_partition((a, b)))


class TestCoproduct:
    def test_h2(self):
        D = coproduct_h(SymFunc.gen("h", (2,)))
        assert D == TensorSym(("h", "h"), {((2,), ()): 1, ((1,), (1,)): 1,
                                           ((), (2,)): 1})

    def test_multiplicativity(self):
        # Delta(h_21) = Delta(h_2) * Delta(h_1) expanded
        D = coproduct_h(SymFunc.gen("h", (2, 1)))
        assert D.terms[((2, 1), ())] == 1
        assert D.terms[((1,), (2,))] == 1
        assert D.terms[((1, 1), (1,))] == 1
        assert D.terms[((2,), (1,))] == 1
        total = sum(abs(c) for c in D.terms.values())
        assert total == 3 * 2  # (h2+h1 h1+1 h2-side) x (h1 split)

    def test_counitality(self):
        rng = random.Random(3)
        for _ in range(10):
            f = rand_symfunc("h", rng, 4)
            D = coproduct_h(f)
            left = SymFunc("h", {mu: c for (lam, mu), c in D.terms.items()
                                 if lam == ()})
            assert left == f


class TestCauchy:
    def test_degree_zero(self, e2):
        assert e2.cauchy_check(0)

    def test_n2_degree3(self, e2):
        assert e2.cauchy_check(3)

    def test_n3_degree4(self, e3):
        assert e3.cauchy_check(4)
