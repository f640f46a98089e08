import numpy as np
import pytest

from gbfpum import spd_solve, sym_eigen
from gbfpum.errors import NotPositiveDefiniteError, NotSymmetricError

from conftest import random_connected_graph


class TestSymEigen:
    def test_scalar_zero(self):
        eig = sym_eigen(np.array([[0.0]]))
        assert eig.values.tolist() == [0.0]
        assert abs(eig.vectors[0, 0]) == pytest.approx(1.0)

    def test_single_edge_laplacian(self):
        eig = sym_eigen(np.array([[1.0, -1.0], [-1.0, 1.0]]))
        assert np.allclose(eig.values, [0.0, 2.0], atol=1e-12)
        expect = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        for k in range(2):
            col = eig.vectors[:, k]
            assert np.allclose(col, expect[:, k], atol=1e-12) or np.allclose(
                col, -expect[:, k], atol=1e-12
            )

    def test_path3_spectrum(self, path3):
        eig = sym_eigen(path3.laplacian())
        assert np.allclose(eig.values, [0.0, 1.0, 3.0], atol=1e-12)

    def test_reconstruction_and_orthonormality(self):
        rng = np.random.default_rng(0)
        M = rng.standard_normal((40, 40))
        M = (M + M.T) / 2
        eig = sym_eigen(M)
        scale = max(1.0, np.abs(M).max())
        assert np.abs(eig.vectors @ np.diag(eig.values) @ eig.vectors.T - M).max() <= 1e-9 * scale
        assert np.abs(eig.vectors.T @ eig.vectors - np.eye(40)).max() <= 1e-10
        assert (np.diff(eig.values) >= 0).all()

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetricError):
            sym_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_laplacian_spectrum_nonnegative(self):
        for seed in range(5):
            g = random_connected_graph(seed, n_max=30)
            eig = sym_eigen(g.laplacian())
            assert abs(eig.values[0]) <= 1e-9
            assert eig.values[-1] >= -1e-9


class TestSpdSolve:
    def test_identity(self):
        b = np.array([3.0, -1.0, 2.0])
        assert np.array_equal(spd_solve(np.eye(3), b), b)

    def test_hand_2x2(self):
        x = spd_solve(np.array([[2.0, -1.0], [-1.0, 2.0]]), np.array([1.0, 1.0]))
        assert np.allclose(x, [1.0, 1.0], atol=1e-12)

    def test_singular_rejected(self):
        with pytest.raises(NotPositiveDefiniteError) as exc:
            spd_solve(np.array([[1.0, -1.0], [-1.0, 1.0]]), np.array([1.0, 0.0]))
        assert exc.value.pivot == 1

    def test_random_spd_roundtrip(self):
        rng = np.random.default_rng(1)
        for order in (5, 50, 200):
            R = rng.standard_normal((order, order))
            M = R.T @ R + np.eye(order)
            x = rng.standard_normal(order)
            got = spd_solve(M, M @ x)
            assert np.linalg.norm(got - x) <= 1e-8 * np.linalg.norm(x)

    def test_residual_contract(self):
        rng = np.random.default_rng(2)
        R = rng.standard_normal((60, 60))
        M = R.T @ R + np.eye(60)
        b = rng.standard_normal(60)
        x = spd_solve(M, b)
        assert np.linalg.norm(M @ x - b) <= 1e-8 * np.linalg.norm(b)

    def test_matrix_rhs(self):
        rng = np.random.default_rng(3)
        R = rng.standard_normal((10, 10))
        M = R.T @ R + np.eye(10)
        B = rng.standard_normal((10, 4))
        X = spd_solve(M, B)
        assert np.abs(M @ X - B).max() <= 1e-8
