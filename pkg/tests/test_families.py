from math import factorial

import pytest

from cycleprefix import (
    Params,
    brute_force_automorphisms,
    check_cayley_correspondence,
    complete_to_sn,
    cycle_generator,
    kautz_out_neighbors,
    out_neighbors,
    vertices,
)


class TestCompletion:
    def test_examples(self, gamma33):
        assert complete_to_sn(gamma33, (1, 2, 3)) == (1, 2, 3, 4)
        assert complete_to_sn(gamma33, (4, 3, 1)) == (4, 3, 1, 2)

    def test_bijective_onto_s4(self, gamma33):
        images = {complete_to_sn(gamma33, v) for v in vertices(gamma33)}
        assert len(images) == 24
        assert all(sorted(p) == [1, 2, 3, 4] for p in images)

    def test_requires_square_parameters(self, gamma32):
        with pytest.raises(ValueError):
            complete_to_sn(gamma32, (1, 2))


class TestCayley:
    def test_cycle_generator(self):
        assert cycle_generator(4, 2) == (2, 1, 3, 4)
        assert cycle_generator(4, 4) == (2, 3, 4, 1)
        with pytest.raises(ValueError):
            cycle_generator(4, 1)

    def test_gamma22(self, gamma22):
        assert check_cayley_correspondence(gamma22)

    def test_gamma33(self, gamma33):
        assert check_cayley_correspondence(gamma33)

    def test_requires_square_unrestricted(self, gamma32, gamma44r1):
        with pytest.raises(ValueError):
            check_cayley_correspondence(gamma32)
        with pytest.raises(ValueError):
            check_cayley_correspondence(gamma44r1)

    def test_group_order_matches_automorphism_count(self, gamma33):
        assert len(brute_force_automorphisms(gamma33)) == factorial(gamma33.n)


class TestKautz:
    def test_examples(self, gamma22, gamma32):
        assert kautz_out_neighbors(gamma22, (1, 2)) == [(2, 1), (3, 1)]
        assert kautz_out_neighbors(gamma32, (3, 4)) == [(1, 3), (2, 3), (4, 3)]

    @pytest.mark.parametrize("triple", [(2, 2, 0), (3, 2, 0)])
    def test_identity_with_core_adjacency(self, triple):
        params = Params(*triple)
        for v in vertices(params):
            kautz = set(kautz_out_neighbors(params, v))
            core = {nb for _, nb in out_neighbors(params, v)}
            assert kautz == core

    def test_requires_word_length_two(self, gamma33):
        with pytest.raises(ValueError):
            kautz_out_neighbors(gamma33, (1, 2, 3))

    def test_kautz_group_order(self, gamma32):
        # the d == 2 instance is a Kautz digraph; its group is the full
        # symmetric group on the alphabet
        assert len(brute_force_automorphisms(gamma32)) == factorial(gamma32.n)
