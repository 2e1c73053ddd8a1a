"""Restricted-Fock-space Hamiltonian for relativistic spin-zero bosons in a box.

Hard-wall box modes, free part sum_mu hw_mu n_mu (zero-point energy
dropped), and a quartic self-interaction expanded into the nine
normal-ordered ladder patterns with multiplicities 3, 6, 12, 6, 1, 4, 6, 4,
1.  The interaction coefficients carry one sign-weighted wave-number
conservation factor per Cartesian axis; the sign weight is the product of
the four summation signs, which is what the four-sine Fourier expansion
forces (each sine contributes s/(2i), so a pattern's weight is the product
of its signs).

Everything is reported dimensionless in natural units: energies as hw L,
masses as m c^2 L / (hbar c), box sides in units of L.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, ResourceLimitError

#: Enumerating more Fock states than this is refused.
DIMENSION_GUARD = 10 ** 6


@dataclass(frozen=True)
class BosonConfig:
    """Physical parameters: box, mode counts, mass, coupling, particle cap."""

    box: tuple[float, float, float] = (1.0, 1.0, 1.0)
    modes_per_axis: tuple[int, int, int] = (1, 1, 1)
    mass: float = 0.0
    coupling: float = 0.0
    max_particles: int = 0
    pad_delta: float = 0.0

    def __post_init__(self):
        if any(side <= 0 for side in self.box):
            raise DomainError(f"box sides must be positive, got {self.box}")
        if any(count < 1 for count in self.modes_per_axis):
            raise DomainError(f"mode counts must be >= 1, got {self.modes_per_axis}")
        if self.mass < 0:
            raise DomainError(f"mass must be nonnegative, got {self.mass}")
        if self.max_particles < 0:
            raise DomainError(f"particle cap must be nonnegative, got {self.max_particles}")

    @property
    def volume(self) -> float:
        return self.box[0] * self.box[1] * self.box[2]

    def with_coupling(self, coupling: float) -> "BosonConfig":
        return replace(self, coupling=coupling)


#: Four massless bosons, two modes, 2 x 1 x 1 box; 15 Fock states.
DEMO_CONFIG = BosonConfig(box=(2.0, 1.0, 1.0), modes_per_axis=(2, 1, 1),
                          mass=0.0, coupling=1.0, max_particles=4, pad_delta=100.0)


def modes(cfg: BosonConfig) -> list[tuple[int, int, int]]:
    """All mode vectors, lexicographically ordered."""
    mx, my, mz = cfg.modes_per_axis
    return sorted(itertools.product(range(1, mx + 1), range(1, my + 1), range(1, mz + 1)))


def _check_mode(cfg: BosonConfig, mu) -> tuple[int, int, int]:
    mu = tuple(int(x) for x in mu)
    if len(mu) != 3 or any(not 1 <= mu[a] <= cfg.modes_per_axis[a] for a in range(3)):
        raise DomainError(f"mode {mu} out of range for counts {cfg.modes_per_axis}")
    return mu


def mode_energy(cfg: BosonConfig, mu) -> float:
    """hw L = sqrt(sum_alpha (mu_alpha pi / L_alpha)^2 + mass^2)."""
    mu = _check_mode(cfg, mu)
    wave = sum((mu[a] * math.pi / cfg.box[a]) ** 2 for a in range(3))
    return math.sqrt(wave + cfg.mass ** 2)


def axis_sign_sum(m1: int, m2: int, m3: int, m4: int) -> int:
    """Per-axis conservation factor: sum over sign patterns s in {+-1}^4 of
    (s1 s2 s3 s4) when s1 m1 + s2 m2 + s3 m3 + s4 m4 = 0.

    Equals 16/L times the integral of the four-sine product over the box
    side; zero whenever m1+m2+m3+m4 is odd.
    """
    total = 0
    for signs in itertools.product((1, -1), repeat=4):
        if signs[0] * m1 + signs[1] * m2 + signs[2] * m3 + signs[3] * m4 == 0:
            total += signs[0] * signs[1] * signs[2] * signs[3]
    return total


def interaction_coefficient(cfg: BosonConfig, mu, nu, xi, omicron) -> float:
    """Coupling-scaled V coefficient for one ordered mode 4-tuple.

    Fully symmetric in its four mode arguments; value reported as V L.
    """
    mus = [_check_mode(cfg, m) for m in (mu, nu, xi, omicron)]
    energies = math.sqrt(math.prod(mode_energy(cfg, m) for m in mus))
    factors = math.prod(axis_sign_sum(*(m[a] for m in mus)) for a in range(3))
    return (cfg.coupling / 24.0) / cfg.volume / 64.0 / (4.0 * energies) * factors


@dataclass
class FockBasis:
    """Ordered occupation-number states with a reverse lookup."""

    states: list[tuple[int, ...]]
    position: dict[tuple[int, ...], int]

    def __len__(self) -> int:
        return len(self.states)


def _occupations(num_modes: int, budget: int):
    if num_modes == 1:
        for n in range(budget + 1):
            yield (n,)
        return
    for n in range(budget + 1):
        for rest in _occupations(num_modes - 1, budget - n):
            yield (n,) + rest


def fock_basis(cfg: BosonConfig) -> FockBasis:
    """All occupation tuples with total <= max_particles, lexicographic order."""
    num_modes = len(modes(cfg))
    dim = math.comb(num_modes + cfg.max_particles, cfg.max_particles)
    if dim > DIMENSION_GUARD:
        raise ResourceLimitError(f"Fock dimension {dim} exceeds guard {DIMENSION_GUARD}")
    states = sorted(_occupations(num_modes, cfg.max_particles))
    return FockBasis(states=states, position={s: i for i, s in enumerate(states)})


def _apply_ladder(state, ops):
    """Apply (mode, kind) ladder ops right to left; kind -1 lowers, +1 raises."""
    amp = 1.0
    occ = list(state)
    for mode_idx, kind in reversed(ops):
        if kind < 0:
            if occ[mode_idx] == 0:
                return None, 0.0
            amp *= math.sqrt(occ[mode_idx])
            occ[mode_idx] -= 1
        else:
            amp *= math.sqrt(occ[mode_idx] + 1)
            occ[mode_idx] += 1
    return tuple(occ), amp


def _interaction_tensor(cfg: BosonConfig) -> np.ndarray:
    mode_list = modes(cfg)
    m = len(mode_list)
    v4 = np.zeros((m, m, m, m))
    for a, b, c, d in itertools.product(range(m), repeat=4):
        v4[a, b, c, d] = interaction_coefficient(
            cfg, mode_list[a], mode_list[b], mode_list[c], mode_list[d])
    return v4


def _normal_ordered_terms(v4: np.ndarray):
    """The nine ladder patterns with multiplicities 3, 6, 12, 6, 1, 4, 6, 4, 1.

    Returns (constant, [(coefficient, ops), ...]); the mu = nu contractions
    are folded into the two-operator table v2[x, o] = sum_mu v4[mu, mu, x, o].
    """
    m = v4.shape[0]
    v2 = np.einsum("mmxo->xo", v4)
    constant = 3.0 * float(np.trace(v2))
    terms = []
    for x, o in itertools.product(range(m), repeat=2):
        c = float(v2[x, o])
        if c != 0.0:
            terms.append((6.0 * c, ((x, -1), (o, -1))))
            terms.append((12.0 * c, ((x, +1), (o, -1))))
            terms.append((6.0 * c, ((x, +1), (o, +1))))
    for a, b, x, o in itertools.product(range(m), repeat=4):
        c = float(v4[a, b, x, o])
        if c == 0.0:
            continue
        terms.append((c, ((a, -1), (b, -1), (x, -1), (o, -1))))
        terms.append((4.0 * c, ((a, +1), (b, -1), (x, -1), (o, -1))))
        terms.append((6.0 * c, ((a, +1), (b, +1), (x, -1), (o, -1))))
        terms.append((4.0 * c, ((a, +1), (b, +1), (x, +1), (o, -1))))
        terms.append((c, ((a, +1), (b, +1), (x, +1), (o, +1))))
    return constant, terms


def hamiltonian_parts(cfg: BosonConfig) -> tuple[np.ndarray, np.ndarray]:
    """(free diagonal, unit-coupling interaction matrix); H = diag(h0) + coupling * v1.

    States raised above the particle cap are projected out.  The interaction
    matrix is exactly symmetric: the upper triangle is computed columnwise
    and mirrored (its adjoint-paired terms guarantee the equality; mirroring
    avoids ulp-level asymmetry from float multiplication order).
    """
    basis = fock_basis(cfg)
    energies = np.array([mode_energy(cfg, mu) for mu in modes(cfg)])
    occupations = np.array(basis.states, dtype=np.float64)
    h0 = occupations @ energies

    unit = cfg.with_coupling(1.0)
    constant, terms = _normal_ordered_terms(_interaction_tensor(unit))
    n = len(basis)
    v1 = np.zeros((n, n))
    v1[np.diag_indices(n)] = constant
    for col, state in enumerate(basis.states):
        for coeff, ops in terms:
            target, amp = _apply_ladder(state, ops)
            if target is None:
                continue
            row = basis.position.get(target)
            if row is not None:
                v1[row, col] += coeff * amp
    upper = np.triu(v1)
    v1 = upper + np.triu(v1, 1).T
    return h0, v1


def hamiltonian_matrix(cfg: BosonConfig) -> np.ndarray:
    """Real symmetric Fock-space Hamiltonian at the configured coupling."""
    h0, v1 = hamiltonian_parts(cfg)
    return np.diag(h0) + cfg.coupling * v1


def first_order_energy(cfg: BosonConfig) -> float:
    """Vacuum expectation of the interaction, linear in the coupling.

    (3 coupling / 4!) / (4 volume) * sum over ordered mode pairs of
    prod_alpha (1 + delta/2) / (w_mu w_xi), reported as E L.
    """
    mode_list = modes(cfg)
    energies = {mu: mode_energy(cfg, mu) for mu in mode_list}
    total = 0.0
    for mu in mode_list:
        for xi in mode_list:
            shared = math.prod(1.5 if mu[a] == xi[a] else 1.0 for a in range(3))
            total += shared / (energies[mu] * energies[xi])
    return (3.0 * cfg.coupling / 24.0) / (4.0 * cfg.volume) * total
