"""Field arithmetic, deterministic moduli, Frobenius structure."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ascart import GF, Field, embedding
from ascart.errors import NotPrime
from ascart.finite_field import _poly_rem, is_prime


def brute_force_smallest_modulus(p, k):
    """Oracle: first monic degree-k poly with no monic divisor of degree
    1..k-1, scanning counter order; trial division only."""

    def divides(d, m):
        return not _poly_rem(list(m), list(d), p)

    def all_monics(deg):
        for n in range(p**deg):
            digits, v = [], n
            for _ in range(deg):
                digits.append(v % p)
                v //= p
            yield digits + [1]

    for n in range(p**k):
        digits, v = [], n
        for _ in range(k):
            digits.append(v % p)
            v //= p
        m = digits + [1]
        if not any(
            divides(d, m) for deg in range(1, k) for d in all_monics(deg)
        ):
            return tuple(m)
    raise AssertionError


class TestModulusSelection:
    def test_prime_field_uses_t(self):
        assert GF(3).modulus == (0, 1)

    @pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (3, 3), (7, 2), (2, 4)])
    def test_matches_exhaustive_oracle(self, p, k):
        assert Field(p, k).modulus == brute_force_smallest_modulus(p, k)

    def test_frozen_examples(self):
        # oracle-derived: t^2+1 over GF(3), t^2+2 over GF(5)
        assert GF(3, 2).modulus == (1, 0, 1)
        assert GF(5, 2).modulus == (2, 0, 1)

    def test_deterministic(self):
        assert Field(3, 4).modulus == Field(3, 4).modulus
        assert Field(13, 2) == Field(13, 2)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            Field(6)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            Field(101, 4)

    def test_is_prime(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
        ]


class TestArithmetic:
    def test_gf7_product(self):
        F = GF(7)
        assert F(3) * F(5) == F(1)

    def test_gf9_generator_square(self):
        F = GF(3, 2)
        assert F.gen * F.gen == F(2)  # t^2 = -1 = 2

    def test_additive_identity(self, rng):
        F = GF(5, 2)
        for _ in range(50):
            a = F.random_element(rng)
            assert a + F.zero == a

    def test_division(self):
        F = GF(7)
        assert F(3) / F(5) == F(3) * F(5).inverse()
        with pytest.raises(ZeroDivisionError):
            F(1) / F(0)
        with pytest.raises(ZeroDivisionError):
            F(0).inverse()

    def test_cross_field_rejected(self):
        with pytest.raises(ValueError):
            GF(3).one + GF(5).one

    def test_field_axioms_bulk(self):
        # >= 10^4 random triples across three fields
        for field in (GF(7), GF(3, 2), GF(5, 2)):
            r = random.Random(field.order)
            for _ in range(3500):
                a = field.random_element(r)
                b = field.random_element(r)
                c = field.random_element(r)
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a + (-a) == field.zero
                if not b.is_zero():
                    assert (a / b) * b == a

    @settings(max_examples=200, deadline=None)
    @given(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
    )
    def test_commutativity_gf9(self, da, db):
        F = GF(3, 2)
        a, b = F(list(da)), F(list(db))
        assert a + b == b + a
        assert a * b == b * a

    def test_pow(self):
        F = GF(3, 2)
        t = F.gen
        assert t**8 == F.one  # multiplicative order divides 8
        assert t**0 == F.one
        assert t**-1 == t.inverse()


class TestFrobenius:
    def test_prime_field_identity(self):
        assert GF(3)(2).pth_root() == GF(3)(2)

    def test_gf9_example(self):
        F = GF(3, 2)
        t = F.gen
        r = t.pth_root()
        assert r == F([0, 2])  # 2t
        assert r**3 == t

    @pytest.mark.parametrize(
        "field",
        [GF(3), GF(13), GF(3, 2), GF(3, 4), GF(5, 2), GF(7, 2), GF(2, 5)],
    )
    def test_pth_root_exhaustive(self, field):
        p = field.p
        for a in field.elements():
            assert a.pth_root() ** p == a
            assert (a**p).pth_root() == a

    def test_trace_examples(self):
        assert GF(3)(1).trace_to_prime() == 1
        F = GF(3, 2)
        assert F.gen.trace_to_prime() == 0  # t + t^3 = t + 2t
        assert F.one.trace_to_prime() == 2

    @pytest.mark.parametrize("field", [GF(3, 2), GF(5, 2), GF(3, 3)])
    def test_trace_frobenius_invariant(self, field):
        for a in field.elements():
            assert (a**field.p).trace_to_prime() == a.trace_to_prime()

    def test_trace_additive(self, rng):
        F = GF(3, 3)
        for _ in range(100):
            a, b = F.random_element(rng), F.random_element(rng)
            assert (a + b).trace_to_prime() == (
                a.trace_to_prime() + b.trace_to_prime()
            ) % 3


class TestEnumerationAndSerialization:
    def test_counter_roundtrip(self):
        F = GF(3, 2)
        elems = list(F.elements())
        assert len(elems) == 9
        assert len(set(elems)) == 9
        for i, e in enumerate(elems):
            assert e.counter() == i
            assert F.from_counter(i) == e

    def test_json(self):
        F = GF(5, 2)
        assert F.to_json() == {"p": 5, "k": 2, "modulus": [2, 0, 1]}
        assert Field.from_json(F.to_json()) == F
        a = F([3, 4])
        assert a.to_json() == [3, 4]
        assert F(a.to_json()) == a

    def test_coercion(self):
        F = GF(7)
        assert F(-1) == F(6)
        assert F(10) == F(3)


class TestEmbedding:
    def test_prime_into_extension(self):
        phi = embedding(GF(3), GF(3, 2))
        assert phi(GF(3)(2)) == GF(3, 2)(2)

    def test_homomorphism(self, rng):
        src, dst = GF(3, 2), GF(3, 4)
        phi = embedding(src, dst)
        for _ in range(100):
            a, b = src.random_element(rng), src.random_element(rng)
            assert phi(a + b) == phi(a) + phi(b)
            assert phi(a * b) == phi(a) * phi(b)
        assert phi(src.one) == dst.one

    def test_generator_goes_to_first_root(self):
        src, dst = GF(3, 2), GF(3, 4)
        phi = embedding(src, dst)
        image = phi(src.gen)
        # image is a root of t^2 + 1, and no earlier element is one
        assert image * image + dst.one == dst.zero
        for x in dst.elements():
            if x == image:
                break
            assert not (x * x + dst.one).is_zero()

    def test_incompatible(self):
        with pytest.raises(ValueError):
            embedding(GF(3, 2), GF(3, 3))
        with pytest.raises(ValueError):
            embedding(GF(3), GF(5))
