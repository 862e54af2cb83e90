"""P1 stiffness assembly weighted by a P0 conductivity on the coarse mesh."""

import numpy as np
from scipy.sparse import csr_matrix

from src.domain.entities import RefinedPair
from src.domain.exceptions import AssemblyException
from src.domain.services.geometry import basis_gradients


class StiffnessAssembler:
    """Assembles A[mu] and the per-coarse-triangle gradient norms of a refined pair.

    The CSR pattern and the local Laplacian matrices are built once; each
    assembly only scales the local contributions by mu and sums them into
    the fixed slots.
    """

    def __init__(self, pair: RefinedPair):
        self.pair = pair
        fine = pair.fine
        self._n = fine.num_nodes
        self._grads = basis_gradients(fine)
        local = fine.areas[:, None, None] * np.einsum("tik,tjk->tij", self._grads, self._grads)
        self._local = local.ravel()

        tri = fine.triangles
        rows = np.broadcast_to(tri[:, :, None], (len(tri), 3, 3)).ravel()
        cols = np.broadcast_to(tri[:, None, :], (len(tri), 3, 3)).ravel()
        keys = rows * np.int64(self._n) + cols
        unique, self._slot = np.unique(keys, return_inverse=True)
        self._slot = self._slot.ravel()
        self._indices = (unique % self._n).astype(np.int32)
        row_counts = np.bincount(unique // self._n, minlength=self._n)
        self._indptr = np.concatenate(([0], np.cumsum(row_counts))).astype(np.int32)
        self._parent_of_entry = np.repeat(pair.parent_of, 9)

    @property
    def nnz(self) -> int:
        return len(self._indices)

    def _check_mu(self, mu) -> np.ndarray:
        mu = np.asarray(mu, dtype=np.float64)
        if mu.shape != (self.pair.coarse.num_triangles,):
            raise AssemblyException(
                f"mu must have one entry per coarse triangle "
                f"({self.pair.coarse.num_triangles}), got shape {mu.shape}"
            )
        if not np.all(np.isfinite(mu)) or np.any(mu <= 0.0):
            raise AssemblyException(
                f"mu must be finite and positive, min is {np.nanmin(mu):.3e}"
            )
        return mu

    def stiffness(self, mu) -> csr_matrix:
        mu = self._check_mu(mu)
        weighted = mu[self._parent_of_entry] * self._local
        data = np.bincount(self._slot, weights=weighted, minlength=self.nnz)
        return csr_matrix(
            (data, self._indices.copy(), self._indptr.copy()), shape=(self._n, self._n)
        )

    def fine_gradients(self, u) -> np.ndarray:
        """Constant gradient of the P1 field u on every fine triangle, shape (T_fine, 2)."""
        u = np.asarray(u, dtype=np.float64)
        if u.shape != (self._n,):
            raise AssemblyException(f"u must have {self._n} entries, got shape {u.shape}")
        return np.einsum("ti,tik->tk", u[self.pair.fine.triangles], self._grads)

    def gradient_norms(self, u) -> np.ndarray:
        """Area-weighted RMS of |grad u| over the four children of each coarse triangle."""
        grad = self.fine_gradients(u)
        weighted = np.einsum("tk,tk->t", grad, grad) * self.pair.fine.areas
        coarse = self.pair.coarse
        sums = np.bincount(self.pair.parent_of, weights=weighted, minlength=coarse.num_triangles)
        return np.sqrt(sums / coarse.areas)

    def dirichlet_energy(self, mu, u) -> float:
        g = self.gradient_norms(u)
        mu = np.asarray(mu, dtype=np.float64)
        return 0.5 * float(np.sum(mu * g**2 * self.pair.coarse.areas))


def assemble_stiffness(pair: RefinedPair, mu) -> csr_matrix:
    return StiffnessAssembler(pair).stiffness(mu)


def gradient_norms(pair: RefinedPair, u) -> np.ndarray:
    return StiffnessAssembler(pair).gradient_norms(u)


def dirichlet_energy(pair: RefinedPair, mu, u) -> float:
    return StiffnessAssembler(pair).dirichlet_energy(mu, u)
