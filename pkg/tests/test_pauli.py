from __future__ import annotations

import itertools

import numpy as np
import pytest

from dfsgates.errors import (
    DimensionTooLargeError,
    LengthMismatchError,
    OddQubitCountError,
    TooFewQubitsError,
)
from dfsgates.pauli import (
    PauliString,
    PauliSum,
    build_decoupling_group,
    commutant_generators,
    commutes,
    group_average,
    pauli_product,
    pauli_to_matrix,
)


def numeric_group_average(h: PauliSum, group) -> np.ndarray:
    """Dense (1/4) sum g† H g, the independent route for the symbolic map."""
    hm = h.to_matrix()
    out = np.zeros_like(hm)
    for g in group.elements:
        gm = pauli_to_matrix(g)
        out += gm.conj().T @ hm @ gm
    return out / 4


class TestProducts:
    def test_z_times_x_is_plus_i_y(self):
        z = PauliString.from_label("+Z")
        x = PauliString.from_label("+X")
        assert (z * x).label == "+iY"

    def test_global_x_squares_to_identity(self):
        x4 = PauliString.uniform(4, "X")
        assert (x4 * x4).label == "+IIII"

    def test_x4_times_z4_phase(self):
        # per qubit XZ = -iY, so the product is (-i)**4 Y...Y = +Y...Y
        x4 = PauliString.uniform(4, "X")
        z4 = PauliString.uniform(4, "Z")
        assert (x4 * z4).label == "+YYYY"

    def test_label_round_trip(self):
        for text in ("+XIZY", "-iYY", "-ZZ", "+iIXIX"):
            assert PauliString.from_label(text).label == text

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            pauli_product(PauliString.uniform(2, "X"), PauliString.uniform(3, "X"))

    def test_homomorphism_exhaustive_two_qubits(self):
        strings = [
            PauliString(2, letters, phase)
            for letters in itertools.product(range(4), repeat=2)
            for phase in range(4)
        ]
        for a in strings[::4]:
            for b in strings[::4]:
                assert np.allclose(
                    pauli_to_matrix(a * b),
                    pauli_to_matrix(a) @ pauli_to_matrix(b),
                    atol=1e-12,
                )

    def test_homomorphism_randomized(self, rng):
        for _ in range(300):
            n = int(rng.integers(1, 7))
            a = PauliString(n, tuple(rng.integers(0, 4, n)), int(rng.integers(0, 4)))
            b = PauliString(n, tuple(rng.integers(0, 4, n)), int(rng.integers(0, 4)))
            assert np.allclose(
                pauli_to_matrix(a * b),
                pauli_to_matrix(a) @ pauli_to_matrix(b),
                atol=1e-12,
            )


class TestMatrices:
    def test_identity(self):
        assert np.allclose(pauli_to_matrix(PauliString.identity(2)), np.eye(4))

    def test_xx_antidiagonal(self):
        m = pauli_to_matrix(PauliString.uniform(2, "X"))
        assert np.allclose(m, np.fliplr(np.eye(4)))

    def test_negative_phase_z1(self):
        m = pauli_to_matrix(PauliString.from_sites(2, {1: "Z"}, phase=2))
        assert np.allclose(m, np.diag([-1, -1, 1, 1]))

    def test_nine_qubits_rejected(self):
        with pytest.raises(DimensionTooLargeError):
            pauli_to_matrix(PauliString.identity(9))


class TestCommutes:
    def test_x1x2_vs_global_x(self):
        a = PauliString.from_sites(4, {1: "X", 2: "X"})
        assert commutes(a, PauliString.uniform(4, "X"))

    def test_x1x2_vs_global_z(self):
        a = PauliString.from_sites(4, {1: "X", 2: "X"})
        assert commutes(a, PauliString.uniform(4, "Z"))

    def test_single_x_vs_global_z(self):
        a = PauliString.from_sites(4, {1: "X"})
        assert not commutes(a, PauliString.uniform(4, "Z"))

    def test_matches_matrix_commutator(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 6))
            a = PauliString(n, tuple(rng.integers(0, 4, n)))
            b = PauliString(n, tuple(rng.integers(0, 4, n)))
            am, bm = pauli_to_matrix(a), pauli_to_matrix(b)
            assert commutes(a, b) == np.allclose(am @ bm, bm @ am, atol=1e-12)


class TestDecouplingGroup:
    def test_n4_elements(self):
        group = build_decoupling_group(4)
        assert [g.label for g in group.elements] == ["+IIII", "+XXXX", "+YYYY", "+ZZZZ"]

    def test_n2_elements(self):
        # (ZX) (x) (ZX) = (i sigma_y)**2 carries phase i**2 = -1
        group = build_decoupling_group(2)
        assert [g.label for g in group.elements] == ["+II", "+XX", "-YY", "+ZZ"]

    def test_odd_n_rejected(self):
        with pytest.raises(OddQubitCountError):
            build_decoupling_group(3)

    def test_projectively_abelian(self):
        group = build_decoupling_group(6)
        for a in group.elements:
            for b in group.elements:
                assert (a * b).letters == (b * a).letters


class TestGroupAverage:
    def test_single_qubit_term_killed(self):
        group = build_decoupling_group(4)
        h = PauliSum.from_terms(4, [(0.7, PauliString.from_sites(4, {1: "X"}))])
        assert group_average(h, group).is_zero()

    def test_commutant_term_unchanged(self):
        group = build_decoupling_group(4)
        h = PauliSum.from_terms(4, [(0.7, PauliString.from_sites(4, {1: "X", 2: "X"}))])
        assert group_average(h, group).isclose(h)

    def test_zero_in_zero_out(self):
        group = build_decoupling_group(4)
        assert group_average(PauliSum.zero(4), group).is_zero()

    def test_idempotent_and_commutes_with_group(self, rng):
        group = build_decoupling_group(4)
        for _ in range(20):
            terms = [
                (rng.normal(), PauliString(4, tuple(rng.integers(0, 4, 4))))
                for _ in range(6)
            ]
            h = PauliSum.from_terms(4, terms)
            avg = group_average(h, group)
            assert avg.isclose(group_average(avg, group))
            for _, string in avg.terms:
                assert all(commutes(string, g) for g in group.elements)

    def test_matches_numeric_conjugation(self, rng):
        group = build_decoupling_group(4)
        for _ in range(10):
            terms = [
                (rng.normal(), PauliString(4, tuple(rng.integers(0, 4, 4))))
                for _ in range(5)
            ]
            h = PauliSum.from_terms(4, terms)
            assert np.allclose(
                group_average(h, group).to_matrix(),
                numeric_group_average(h, group),
                atol=1e-12,
            )

    def test_full_system_bath_coupling_vanishes(self, rng):
        # every single-qubit term anticommutes with exactly two group elements
        for n in (4, 6):
            group = build_decoupling_group(n)
            terms = [
                (rng.normal(), PauliString.from_sites(n, {i + 1: axis}))
                for i in range(n)
                for axis in "XYZ"
            ]
            h = PauliSum.from_terms(n, terms)
            assert group_average(h, group).n_terms == 0


class TestCommutantGenerators:
    def test_n4_set(self):
        labels = {g.label for g in commutant_generators(4)}
        assert labels == {"+XXII", "+XIXI", "+IZIZ", "+IIZZ"}

    def test_all_commute_with_group(self):
        for n in (4, 6):
            group = build_decoupling_group(n)
            for gen in commutant_generators(n):
                assert all(commutes(gen, g) for g in group.elements)

    def test_count(self):
        assert len(commutant_generators(6)) == 8

    def test_preconditions(self):
        with pytest.raises(OddQubitCountError):
            commutant_generators(5)
        with pytest.raises(TooFewQubitsError):
            commutant_generators(2)


class TestPauliSum:
    def test_text_round_trip(self):
        h = PauliSum.from_terms(
            4,
            [
                (0.25, PauliString.from_sites(4, {2: "Z", 4: "Z"})),
                (-1.5, PauliString.from_sites(4, {1: "X", 2: "X"})),
            ],
        )
        assert PauliSum.from_text(4, h.text()).isclose(h)
        assert PauliSum.from_text(4, PauliSum.zero(4).text()).is_zero()

    def test_phase_folded_into_coefficient(self):
        h = PauliSum.from_terms(2, [(2.0, PauliString.from_label("-iXY"))])
        ((coef, string),) = h.terms
        assert string.phase == 0
        assert coef == -2j

    def test_matmul_matches_matrices(self, rng):
        a = PauliSum.from_terms(
            2, [(0.6, PauliString.from_label("+XI")), (0.8, PauliString.from_label("+ZZ"))]
        )
        b = PauliSum.from_terms(
            2, [(1.0, PauliString.from_label("+ZI")), (-0.5, PauliString.from_label("+XY"))]
        )
        assert np.allclose((a @ b).to_matrix(), a.to_matrix() @ b.to_matrix(), atol=1e-12)
