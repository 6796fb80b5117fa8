"""Finite-dimensional quantum channels held as Kraus lists and/or Choi
matrices, with constructors, CPTP validation, JSON (de)serialization and the
random ensembles used by the sampling experiments.

Conventions fixed here and relied on everywhere else:
  * Choi matrices are unnormalized, live on input (x) output, and are built
    column-by-column: J = sum_ij |i><j| (x) ch(|i><j|), so Tr J = d_in.
  * Kraus operators have shape (d_out, d_in).
  * Gibbs states enter as population vectors (or ThermalState, duck-typed);
    populations are strictly positive and sum to one.
"""
from __future__ import annotations

import json

import numpy as np

from . import qmat

# Validation tolerance for CPTP checks (scale-aware).
TOL = 1e-9
# Eigenvalues below this are dropped when extracting Kraus operators.
KRAUS_EIG_CUTOFF = 1e-10


def substream(seed: int, index: int) -> np.random.Generator:
    """Deterministic per-record generator: Philox stream `seed`, jump `index`.

    Substreams for distinct indices never overlap, so record loops can run
    in any order or in parallel and still reproduce byte-identical output.
    """
    return np.random.Generator(np.random.Philox(key=int(seed)).jumped(int(index)))


def _populations(gibbs) -> np.ndarray:
    """Coerce a ThermalState or array-like into a validated population vector."""
    g = np.asarray(getattr(gibbs, "populations", gibbs), dtype=float).ravel()
    if g.size == 0 or np.any(g <= 0):
        raise ValueError("Gibbs populations must be strictly positive")
    if abs(g.sum() - 1.0) > TOL:
        raise ValueError(f"Gibbs populations must sum to 1, got {g.sum()!r}")
    return g


class QuantumChannel:
    """A CPTP map, stored as Kraus operators and/or a Choi matrix.

    Either representation may be given; the other is derived lazily. When
    both are given they must describe the same map.
    """

    def __init__(self, kraus=None, choi=None, d_in: int | None = None,
                 d_out: int | None = None):
        if kraus is None and choi is None:
            raise ValueError("need a Kraus list or a Choi matrix")
        self._kraus = None
        self._choi = None
        if kraus is not None:
            ks = [np.asarray(k, dtype=np.complex128) for k in kraus]
            if not ks or any(k.ndim != 2 or k.shape != ks[0].shape for k in ks):
                raise ValueError("Kraus operators must share one 2-d shape")
            self._kraus = ks
            d_out_k, d_in_k = ks[0].shape
            d_in = d_in_k if d_in is None else d_in
            d_out = d_out_k if d_out is None else d_out
            if (d_in, d_out) != (d_in_k, d_out_k):
                raise ValueError("explicit dimensions disagree with Kraus shape")
        if choi is not None:
            j = qmat.require_hermitian(choi)
            if d_in is None or d_out is None:
                raise ValueError("Choi-only construction needs d_in and d_out")
            if j.shape[0] != d_in * d_out:
                raise ValueError("Choi matrix size does not match d_in*d_out")
            self._choi = j
        self.d_in = int(d_in)
        self.d_out = int(d_out)
        self._validate()

    def _validate(self) -> None:
        if self._kraus is not None:
            s = sum(k.conj().T @ k for k in self._kraus)
            dev = np.abs(s - np.eye(self.d_in)).max()
            if dev > TOL * (1.0 + np.abs(s).max()):
                raise ValueError(f"Kraus completeness violated by {dev:.3e}")
        if self._choi is not None:
            j = self._choi
            scale = 1.0 + np.abs(j).max()
            mineig = float(np.linalg.eigvalsh(j)[0])
            if mineig < -TOL * scale:
                raise ValueError(f"Choi matrix not PSD: min eig {mineig:.3e}")
            tr_out = qmat.partial_trace(j, (self.d_in, self.d_out), keep=(0,))
            dev = np.abs(tr_out - np.eye(self.d_in)).max()
            if dev > TOL * scale:
                raise ValueError(f"Choi trace-preservation violated by {dev:.3e}")
        if self._kraus is not None and self._choi is not None:
            jk = _choi_from_kraus(self._kraus, self.d_in, self.d_out)
            dev = float(np.linalg.norm(jk - self._choi))
            if dev > TOL * (1.0 + np.linalg.norm(self._choi)):
                raise ValueError(f"Kraus and Choi data disagree: ||diff||_F = {dev:.3e}")

    @property
    def kraus(self) -> list[np.ndarray]:
        if self._kraus is None:
            self._kraus = _kraus_from_choi(self._choi, self.d_in, self.d_out)
        return self._kraus

    @property
    def choi(self) -> np.ndarray:
        if self._choi is None:
            self._choi = _choi_from_kraus(self._kraus, self.d_in, self.d_out)
        return self._choi

    def __call__(self, rho) -> np.ndarray:
        return apply(self, rho)

    def __repr__(self) -> str:
        rep = "kraus" if self._kraus is not None else "choi"
        return f"QuantumChannel(d_in={self.d_in}, d_out={self.d_out}, rep={rep})"


def _choi_from_kraus(kraus, d_in: int, d_out: int) -> np.ndarray:
    # |vec(K)> with index (i, b) -> K[b, i]; J = sum_k vec vec^dagger.
    vs = np.stack([k.T.reshape(-1) for k in kraus])
    return np.einsum("ka,kb->ab", vs, vs.conj())


def _kraus_from_choi(choi, d_in: int, d_out: int) -> list[np.ndarray]:
    w, v = qmat.eig_hermitian(choi)
    ks = []
    for lam, col in zip(w[::-1], v.T[::-1]):
        if lam < KRAUS_EIG_CUTOFF:
            break
        ks.append(np.sqrt(lam) * col.reshape(d_in, d_out).T)
    if not ks:
        raise ValueError("Choi matrix has no eigenvalue above the Kraus cutoff")
    return ks


def kraus_to_choi(ch: QuantumChannel) -> np.ndarray:
    """Choi matrix of the channel (from its Kraus form if needed)."""
    return ch.choi


def choi_to_kraus(ch: QuantumChannel) -> list[np.ndarray]:
    """Kraus operators of the channel (from its Choi form if needed)."""
    return ch.kraus


def apply(ch: QuantumChannel, rho) -> np.ndarray:
    """Act with the channel on a matrix (usually a density matrix)."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (ch.d_in, ch.d_in):
        raise ValueError(f"state has shape {rho.shape}, channel expects {ch.d_in}")
    if ch._kraus is not None:
        out = np.zeros((ch.d_out, ch.d_out), dtype=np.complex128)
        for k in ch._kraus:
            out += k @ rho @ k.conj().T
        return out
    lifted = qmat.kron(rho.T, np.eye(ch.d_out)) @ ch.choi
    return qmat.partial_trace(lifted, (ch.d_in, ch.d_out), keep=(1,))


def compose(ch2: QuantumChannel, ch1: QuantumChannel) -> QuantumChannel:
    """Channel ch2 after ch1."""
    if ch1.d_out != ch2.d_in:
        raise ValueError("inner dimensions do not match")
    ks = [k2 @ k1 for k2 in ch2.kraus for k1 in ch1.kraus]
    return QuantumChannel(kraus=ks)


def tensor(ch1: QuantumChannel, ch2: QuantumChannel) -> QuantumChannel:
    """Parallel composition acting on the tensor product, factors in order."""
    ks = [qmat.kron(k1, k2) for k1 in ch1.kraus for k2 in ch2.kraus]
    return QuantumChannel(kraus=ks)


def make_identity(d: int) -> QuantumChannel:
    return QuantumChannel(kraus=[np.eye(d)])


def make_replace(sigma, d_in: int | None = None) -> QuantumChannel:
    """Trace-and-replace channel rho -> Tr(rho) * sigma."""
    sig = qmat.require_hermitian(sigma)
    d_out = sig.shape[0]
    d_in = d_out if d_in is None else int(d_in)
    w, v = np.linalg.eigh(sig)
    ks = []
    for lam, col in zip(w, v.T):
        if lam < KRAUS_EIG_CUTOFF:
            continue
        for i in range(d_in):
            k = np.zeros((d_out, d_in), dtype=np.complex128)
            k[:, i] = np.sqrt(lam) * col
            ks.append(k)
    return QuantumChannel(kraus=ks, d_in=d_in, d_out=d_out)


def make_gamma(gibbs_out) -> QuantumChannel:
    """Completely thermalising channel rho -> Tr(rho) * gamma."""
    g = _populations(gibbs_out)
    return make_replace(np.diag(g).astype(np.complex128), d_in=g.size)


def make_signalling_gpo(gibbs, s: float) -> QuantumChannel:
    """Convex mixture s*Gamma + (1-s)*Identity as an explicit Kraus list.

    Kraus members with zero weight are dropped, so the list has d^2 entries
    at s=1, one entry at s=0 and d^2+1 otherwise. Mixing a thermalising
    channel with the identity keeps the Gibbs state fixed, so the result is
    Gibbs-preserving for any s.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {s}")
    g = _populations(gibbs)
    d = g.size
    ks: list[np.ndarray] = []
    if s > 0.0:
        for j in range(d):
            for i in range(d):
                k = np.zeros((d, d), dtype=np.complex128)
                k[j, i] = np.sqrt(s * g[j])
                ks.append(k)
    if s < 1.0:
        ks.append(np.sqrt(1.0 - s) * np.eye(d))
    return QuantumChannel(kraus=ks)


def is_gibbs_preserving(ch: QuantumChannel, gibbs_in, gibbs_out=None,
                        tol: float = TOL) -> tuple[bool, float]:
    """Whether ch maps the input Gibbs state to the output one; also returns
    the trace-norm residual."""
    g_in = _populations(gibbs_in)
    g_out = _populations(gibbs_out if gibbs_out is not None else gibbs_in)
    if g_in.size != ch.d_in or g_out.size != ch.d_out:
        raise ValueError("Gibbs dimensions do not match the channel")
    residual = qmat.trace_norm(apply(ch, np.diag(g_in)) - np.diag(g_out))
    return residual <= tol, float(residual)


# ---------------------------------------------------------------------------
# Random ensembles


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a Ginibre matrix with phase fixing."""
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(g)
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    return q * ph


def random_pure(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state as a density matrix."""
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_density(d: int, rng: np.random.Generator) -> np.ndarray:
    """Hilbert-Schmidt random density matrix rho = G G^dagger / Tr."""
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_channel_flat(d_in: int, d_out: int, rng: np.random.Generator) -> QuantumChannel:
    """Channel drawn by normalizing a Ginibre-induced random Choi matrix.

    A square Ginibre matrix W on the d_in*d_out space gives rho = W W^dagger;
    conjugating by the inverse square root of the input marginal on the input
    factor makes it a valid Choi matrix. Degenerate marginals are resampled.
    """
    dd = d_in * d_out
    eye_out = np.eye(d_out)
    while True:
        w = rng.normal(size=(dd, dd)) + 1j * rng.normal(size=(dd, dd))
        rho = w @ w.conj().T
        y = qmat.partial_trace(rho, (d_in, d_out), keep=(0,))
        if np.linalg.eigvalsh(y)[0] > 1e-10:
            break
    yinv = qmat.herm_pow(y, -0.5)
    c = qmat.kron(yinv, eye_out)
    return QuantumChannel(choi=qmat.hermitianize(c @ rho @ c),
                          d_in=d_in, d_out=d_out)


def _hermitian_basis(d: int) -> np.ndarray:
    """Stack of d^2 real-orthonormal Hermitian matrices (Tr(B_i B_j) = delta_ij)."""
    bs = []
    for i in range(d):
        b = np.zeros((d, d), dtype=np.complex128)
        b[i, i] = 1.0
        bs.append(b)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(d):
        for j in range(i + 1, d):
            b = np.zeros((d, d), dtype=np.complex128)
            b[i, j] = b[j, i] = inv_sqrt2
            bs.append(b)
            b = np.zeros((d, d), dtype=np.complex128)
            b[i, j] = -1j * inv_sqrt2
            b[j, i] = 1j * inv_sqrt2
            bs.append(b)
    return np.stack(bs)


def random_gpo(gibbs, rng: np.random.Generator, max_sweeps: int = 500) -> QuantumChannel:
    """Random Gibbs-preserving channel at the given (square) Gibbs state.

    Starts from a flat-measure channel and alternates projections between the
    PSD cone and the affine set {trace-preserving, Gibbs-preserving} with
    Dykstra's correction until the Choi matrix satisfies both to high
    precision. Raises if the projections have not met after max_sweeps.
    """
    g = _populations(gibbs)
    d = g.size
    dd = d * d
    basis = _hermitian_basis(dd)          # coordinates for Choi space
    small = _hermitian_basis(d)           # coordinates for constraint space
    gamma = np.diag(g).astype(np.complex128)
    eye_d = np.eye(d)

    # Constraint rows over the real Hermitian coordinates of J:
    #   Tr[(H_m (x) 1) J] = Tr[H_m]          (trace preservation)
    #   Tr[(gamma (x) H_m) J] = Tr[H_m gamma] (Gibbs preservation)
    rows = []
    rhs = []
    for h in small:
        rows.append(np.einsum("kab,ba->k", basis, qmat.kron(h, eye_d)).real)
        rhs.append(np.trace(h).real)
    for h in small:
        rows.append(np.einsum("kab,ba->k", basis, qmat.kron(gamma, h)).real)
        rhs.append(np.trace(h @ gamma).real)
    a = np.stack(rows)
    b = np.asarray(rhs)
    a_pinv = np.linalg.pinv(a)

    def to_coords(j):
        return np.einsum("kab,ba->k", basis, j).real

    def to_matrix(x):
        return np.einsum("k,kab->ab", x, basis)

    def proj_affine(x):
        return x - a_pinv @ (a @ x - b)

    def proj_psd(x):
        w, v = np.linalg.eigh(to_matrix(x))
        return to_coords((v * np.clip(w, 0.0, None)) @ v.conj().T)

    x = proj_affine(to_coords(random_channel_flat(d, d, rng).choi))
    p = np.zeros_like(x)
    for _ in range(max_sweeps):
        y = proj_psd(x + p)
        p = x + p - y
        x = proj_affine(y)
        j = to_matrix(x)
        if np.linalg.eigvalsh(j)[0] >= -5e-12:
            ch = QuantumChannel(choi=j, d_in=d, d_out=d)
            ok, res = is_gibbs_preserving(ch, g, tol=1e-8)
            if not ok:
                raise RuntimeError(f"projected channel misses Gibbs by {res:.3e}")
            return ch
    raise RuntimeError(f"Gibbs projection did not converge in {max_sweeps} sweeps")


# ---------------------------------------------------------------------------
# JSON serialization


def _encode_matrix(m) -> list:
    a = np.asarray(m, dtype=np.complex128)
    return [a.real.tolist(), a.imag.tolist()]


def _decode_matrix(pair) -> np.ndarray:
    re, im = pair
    return np.asarray(re, dtype=float) + 1j * np.asarray(im, dtype=float)


def save_channel(ch: QuantumChannel, path, gibbs_in=None, gibbs_out=None) -> None:
    """Write the channel (Kraus form preferred) and optional Gibbs data as JSON."""
    doc: dict = {"d_in": ch.d_in, "d_out": ch.d_out}
    if gibbs_in is not None:
        doc["gibbs_in"] = _populations(gibbs_in).tolist()
    if gibbs_out is not None:
        doc["gibbs_out"] = _populations(gibbs_out).tolist()
    if ch._kraus is not None:
        doc["kraus"] = [_encode_matrix(k) for k in ch._kraus]
    else:
        doc["choi"] = _encode_matrix(ch.choi)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_channel(path) -> tuple[QuantumChannel, np.ndarray | None, np.ndarray | None]:
    """Read a channel JSON file; returns (channel, gibbs_in, gibbs_out)."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    try:
        d_in = int(doc["d_in"])
        d_out = int(doc["d_out"])
        if "kraus" in doc:
            ch = QuantumChannel(kraus=[_decode_matrix(p) for p in doc["kraus"]],
                                d_in=d_in, d_out=d_out)
        elif "choi" in doc:
            ch = QuantumChannel(choi=_decode_matrix(doc["choi"]),
                                d_in=d_in, d_out=d_out)
        else:
            raise ValueError("channel file has neither 'kraus' nor 'choi'")
        g_in = _populations(doc["gibbs_in"]) if doc.get("gibbs_in") else None
        g_out = _populations(doc["gibbs_out"]) if doc.get("gibbs_out") else None
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed channel file {path}: {exc}") from exc
    return ch, g_in, g_out
