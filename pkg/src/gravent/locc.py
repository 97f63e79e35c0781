"""Classical-channel counterfactual: local operations plus classical communication.

The most general evolution available when the two masses share only
classical information j is

    rho = sum_ijk p(i) p(j) p(k) (A_ij |psi><psi| A_ij^+) x (B_jk |phi><phi| B_jk^+),

a convex mixture of products, hence separable no matter what the local
operators are. This module samples such channels at scale (random local
unitaries with random probability simplexes), builds the two concrete
classical-gravity models (mean-field sourcing and stochastic position
collapse) and verifies by Monte Carlo that none of them produces any
entanglement, in contrast with the coherent evolution of the
interferometer module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entanglement import evolve_density_matrix, negativity, witness_optimized
from .interferometer import ExperimentConfig
from .potentials import PotentialModel, potential_per_unit_mass

PROB_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class LoccChannel:
    """Local operators conditioned on a shared classical label.

    a_ops[i, j] acts on mass A with probability a_probs[i] when the
    classical record is j (probability label_probs[j]); b_ops[j, k]
    likewise on mass B with probability b_probs[k].
    """

    label_probs: np.ndarray  # (n_j,)
    a_probs: np.ndarray      # (n_i,)
    b_probs: np.ndarray      # (n_k,)
    a_ops: np.ndarray        # (n_i, n_j, 2, 2) complex
    b_ops: np.ndarray        # (n_j, n_k, 2, 2) complex

    def __post_init__(self):
        for name, probs in (
            ("label_probs", self.label_probs),
            ("a_probs", self.a_probs),
            ("b_probs", self.b_probs),
        ):
            probs = np.asarray(probs, dtype=float)
            if probs.ndim != 1 or probs.size < 1:
                raise ValueError(f"{name} must be a non-empty 1d array")
            if np.any(probs < -PROB_TOL) or abs(probs.sum() - 1.0) > PROB_TOL:
                raise ValueError(f"{name} is not a probability vector: {probs}")
        n_i, n_j = len(self.a_probs), len(self.label_probs)
        n_k = len(self.b_probs)
        if self.a_ops.shape != (n_i, n_j, 2, 2):
            raise ValueError(f"a_ops shape {self.a_ops.shape} != {(n_i, n_j, 2, 2)}")
        if self.b_ops.shape != (n_j, n_k, 2, 2):
            raise ValueError(f"b_ops shape {self.b_ops.shape} != {(n_j, n_k, 2, 2)}")
        # probability-weighted maps must be trace preserving on average
        eye = np.eye(2)
        for j in range(n_j):
            avg_a = sum(
                p * (op.conj().T @ op) for p, op in zip(self.a_probs, self.a_ops[:, j])
            )
            avg_b = sum(
                p * (op.conj().T @ op) for p, op in zip(self.b_probs, self.b_ops[j, :])
            )
            if np.max(np.abs(avg_a - eye)) > 1e-10 or np.max(np.abs(avg_b - eye)) > 1e-10:
                raise ValueError(f"operators for label {j} are not trace preserving on average")


def identity_channel() -> LoccChannel:
    eye = np.eye(2, dtype=complex)
    one = np.array([1.0])
    return LoccChannel(one, one, one, eye.reshape(1, 1, 2, 2), eye.reshape(1, 1, 2, 2))


def apply_locc(channel: LoccChannel, psi_a: np.ndarray, phi_b: np.ndarray) -> np.ndarray:
    """Output density matrix of the channel on the product input |psi>|phi>."""
    psi_a = _pure_qubit(psi_a, "psi_a")
    phi_b = _pure_qubit(phi_b, "phi_b")
    rho_in_a = np.outer(psi_a, psi_a.conj())
    rho_in_b = np.outer(phi_b, phi_b.conj())
    rho = np.zeros((4, 4), dtype=complex)
    for j, pj in enumerate(channel.label_probs):
        rho_a = np.zeros((2, 2), dtype=complex)
        for i, pi in enumerate(channel.a_probs):
            op = channel.a_ops[i, j]
            rho_a += pi * (op @ rho_in_a @ op.conj().T)
        rho_b = np.zeros((2, 2), dtype=complex)
        for k, pk in enumerate(channel.b_probs):
            op = channel.b_ops[j, k]
            rho_b += pk * (op @ rho_in_b @ op.conj().T)
        rho += pj * np.kron(rho_a, rho_b)
    trace = np.trace(rho).real
    if trace <= 0.0:
        raise ValueError("channel annihilated the input state")
    return rho / trace


def _pure_qubit(state, name: str) -> np.ndarray:
    state = np.asarray(state, dtype=complex).reshape(-1)
    if state.shape != (2,):
        raise ValueError(f"{name} must be a single-qubit state vector")
    norm = math.sqrt(float(np.sum(np.abs(state) ** 2)))
    if norm == 0.0:
        raise ValueError(f"{name} is the zero vector")
    return state / norm


@dataclass(frozen=True)
class ClassicalFieldConfig:
    """One classical field record: a label, its probability, and the
    potential the record assigns at the four branch locations x_l, x_r,
    x_L, x_R (J/kg). The record is a plain number at each point, never an
    operator; superpositions of records are not representable by design.
    """

    label: int
    probability: float
    field_record: tuple[float, float, float, float]


def _arm_positions(config: ExperimentConfig):
    # 1d layout: x_l = 0, x_r = dx, x_L = d, x_R = d + dx
    dx, d = config.delta_x_m, config.d_m
    return (0.0, dx), (d, d + dx)


def _potential_at(x: float, sources, config: ExperimentConfig) -> float:
    return sum(
        weight * potential_per_unit_mass(config.model, abs(x - pos), config.mass_kg, config.constants)
        for weight, pos in sources
    )


def semiclassical_field(config: ExperimentConfig) -> ClassicalFieldConfig:
    """The single mean-field record: each mass sourced at the 50/50 average
    of the other's positions."""
    (x_l, x_r), (x_big_l, x_big_r) = _arm_positions(config)
    b_sources = ((0.5, x_big_l), (0.5, x_big_r))
    a_sources = ((0.5, x_l), (0.5, x_r))
    record = tuple(_potential_at(x, b_sources, config) for x in (x_l, x_r)) + tuple(
        _potential_at(x, a_sources, config) for x in (x_big_l, x_big_r)
    )
    return ClassicalFieldConfig(label=0, probability=1.0, field_record=record)


def collapse_field_ensemble(config: ExperimentConfig) -> list[ClassicalFieldConfig]:
    """The four equally likely records with both source positions collapsed.

    Record (u, v): mass A saw the field of B collapsed at v, mass B the
    field of A collapsed at u.
    """
    (x_l, x_r), (x_big_l, x_big_r) = _arm_positions(config)
    ensemble = []
    for label, (u, v) in enumerate(
        (u, v) for u in (x_l, x_r) for v in (x_big_l, x_big_r)
    ):
        record = tuple(_potential_at(x, ((1.0, v),), config) for x in (x_l, x_r)) + tuple(
            _potential_at(x, ((1.0, u),), config) for x in (x_big_l, x_big_r)
        )
        ensemble.append(ClassicalFieldConfig(label=label, probability=0.25, field_record=record))
    return ensemble


def _product_state_in_field(record: ClassicalFieldConfig, config: ExperimentConfig) -> np.ndarray:
    # each arm accumulates phi = -m Phi tau / hbar from the record's sample
    scale = -config.mass_kg * config.tau_s / config.constants.hbar
    phases = scale * np.asarray(record.field_record)
    psi_a = np.exp(1j * phases[:2]) / math.sqrt(2.0)
    psi_b = np.exp(1j * phases[2:]) / math.sqrt(2.0)
    return np.kron(psi_a, psi_b)


def _mix_field_ensemble(
    ensemble, weights, config: ExperimentConfig
) -> np.ndarray:
    if abs(sum(weights) - 1.0) > PROB_TOL:
        raise ValueError(f"ensemble probabilities sum to {sum(weights)}, not 1")
    rho = np.zeros((4, 4), dtype=complex)
    for weight, record in zip(weights, ensemble):
        if weight:
            joint = _product_state_in_field(record, config)
            rho += weight * np.outer(joint, joint.conj())
    return rho


def semiclassical_evolution(config: ExperimentConfig) -> np.ndarray:
    """Mean-field sourcing: the potential is a function of the averaged
    source positions, so the output stays an exact product state with
    branch-local phases only."""
    record = semiclassical_field(config)
    return _mix_field_ensemble([record], [record.probability], config)


def stochastic_collapse_evolution(
    config: ExperimentConfig, n_samples: int, seed: int
) -> np.ndarray:
    """Average over sampled collapse records; a convex mixture of products.

    Each record collapses both source positions to one arm with
    probability 1/2 per mass; the sampled frequencies weight the four
    corresponding product states.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be at least 1, got {n_samples}")
    ensemble = collapse_field_ensemble(config)
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(n_samples, [record.probability for record in ensemble])
    return _mix_field_ensemble(ensemble, counts / n_samples, config)


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element from a normalized 4-component Gaussian."""
    w, x, y, z = rng.normal(size=4)
    norm = math.sqrt(w * w + x * x + y * y + z * z)
    w, x, y, z = w / norm, x / norm, y / norm, z / norm
    return np.array([[w + 1j * z, y + 1j * x], [-y + 1j * x, w - 1j * z]])


def _channel_from_rng(rng: np.random.Generator, n_labels: int, n_ops: int) -> LoccChannel:
    a_ops = np.array([[random_unitary_2x2(rng) for _ in range(n_labels)] for _ in range(n_ops)])
    b_ops = np.array([[random_unitary_2x2(rng) for _ in range(n_ops)] for _ in range(n_labels)])
    return LoccChannel(
        label_probs=rng.dirichlet(np.ones(n_labels)),
        a_probs=rng.dirichlet(np.ones(n_ops)),
        b_probs=rng.dirichlet(np.ones(n_ops)),
        a_ops=a_ops,
        b_ops=b_ops,
    )


def random_locc_channel(seed: int, n_labels: int = 3, n_ops: int = 2) -> LoccChannel:
    """Seed-deterministic random channel: unitary operators, random simplexes."""
    if n_labels < 1 or n_ops < 1:
        raise ValueError("n_labels and n_ops must be at least 1")
    return _channel_from_rng(np.random.default_rng(seed), n_labels, n_ops)


@dataclass(frozen=True)
class SeparabilityReport:
    """Outcome of the Monte Carlo LOCC run, plus the quantum-channel contrast."""

    n_channels: int
    seed: int
    max_negativity: float
    max_witness: float
    quantum_negativity: float

    NEGATIVITY_BOUND = 1e-12
    WITNESS_BOUND = 1.0 + 1e-9

    @property
    def passed(self) -> bool:
        return (
            self.max_negativity <= self.NEGATIVITY_BOUND
            and self.max_witness <= self.WITNESS_BOUND
        )

    def summary(self) -> str:
        lines = [
            f"locc channels sampled : {self.n_channels}",
            f"max negativity        : {self.max_negativity:.3e} (bound {self.NEGATIVITY_BOUND:.0e})",
            f"max optimized witness : {self.max_witness:.12f} (bound 1 + 1e-9)",
            f"quantum baseline negativity (coherent evolve): {self.quantum_negativity:.6f}",
            f"result                : {'PASS' if self.passed else 'FAIL'}",
        ]
        return "\n".join(lines)


def monte_carlo_separability(
    n_channels: int,
    seed: int,
    n_labels: int = 3,
    n_ops: int = 2,
    config: ExperimentConfig | None = None,
) -> SeparabilityReport:
    """Sample LOCC channels on random product inputs and bound their entanglement.

    Also feeds the semiclassical and stochastic-collapse models (at the
    given configuration and its IDG counterpart) through the same measures,
    and records the coherent-evolution negativity as the quantum contrast.
    """
    if n_channels < 1:
        raise ValueError(f"n_channels must be at least 1, got {n_channels}")
    config = config or ExperimentConfig()
    max_negativity = 0.0
    max_witness = 0.0

    for child in np.random.SeedSequence(seed).spawn(n_channels):
        rng = np.random.default_rng(child)
        channel = _channel_from_rng(rng, n_labels, n_ops)
        psi_a = random_unitary_2x2(rng) @ np.array([1.0, 0.0], dtype=complex)
        phi_b = random_unitary_2x2(rng) @ np.array([1.0, 0.0], dtype=complex)
        rho = apply_locc(channel, psi_a, phi_b)
        max_negativity = max(max_negativity, negativity(rho))
        max_witness = max(max_witness, witness_optimized(rho))

    idg_config = ExperimentConfig(
        mass_kg=config.mass_kg,
        tau_s=config.tau_s,
        d_m=config.d_m,
        delta_x_m=config.delta_x_m,
        model=PotentialModel.idg_from_ev(0.004),
        constants=config.constants,
    )
    for cfg in (config, idg_config):
        for rho in (
            semiclassical_evolution(cfg),
            stochastic_collapse_evolution(cfg, n_samples=10_000, seed=seed),
        ):
            max_negativity = max(max_negativity, negativity(rho))
            max_witness = max(max_witness, witness_optimized(rho))

    quantum = negativity(evolve_density_matrix(config))
    return SeparabilityReport(
        n_channels=n_channels,
        seed=seed,
        max_negativity=max_negativity,
        max_witness=max_witness,
        quantum_negativity=quantum,
    )
