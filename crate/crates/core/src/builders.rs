//! Circuit builders for the quantum Fourier transform and Grover search,
//! closed-form gate-count formulas, and the register/complexity model for
//! the quantum parton shower algorithm.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_4, PI};
use core::fmt;

use crate::circuit::{Axis, Circuit, Gate};

/// Widest QFT the builder will construct.
pub const QFT_MAX_WIDTH: usize = 32;
/// Widest Grover instance the builder will construct.
pub const GROVER_MAX_WIDTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuilderError {
    /// QFT width outside 1..=32.
    QftSizeOutOfRange { n: usize },
    /// Grover width outside 1..=12.
    GroverWidthOutOfRange { n: usize },
    /// Marked basis index does not fit in the register.
    MarkedStateOutOfRange { marked: u64, size: u64 },
    /// Parton shower parameters must all be at least 1.
    ZeroShowerParameter { name: &'static str },
    /// The shower cost model needs at least two fermion flavors.
    FermionCountTooSmall { n_f: u64 },
}

impl fmt::Display for BuilderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuilderError::QftSizeOutOfRange { n } => {
                write!(f, "QFT size {} outside supported range 1..={}", n, QFT_MAX_WIDTH)
            }
            BuilderError::GroverWidthOutOfRange { n } => write!(
                f,
                "Grover width {} outside supported range 1..={}",
                n, GROVER_MAX_WIDTH
            ),
            BuilderError::MarkedStateOutOfRange { marked, size } => {
                write!(f, "marked state {} outside search space of size {}", marked, size)
            }
            BuilderError::ZeroShowerParameter { name } => {
                write!(f, "parton shower parameter {} must be at least 1", name)
            }
            BuilderError::FermionCountTooSmall { n_f } => {
                write!(f, "fermion flavor count {} below cost-model domain (>= 2)", n_f)
            }
        }
    }
}

/// Textbook QFT over `n` qubits: for each qubit an H followed by
/// controlled phases `pi/2^k` from each qubit `k` positions later, then
/// `n/2` terminal swaps reversing the qubit order. The resulting unitary
/// is the DFT matrix `F_{2^n}` under the crate's most-significant-first
/// ordering, up to global phase.
pub fn build_qft(n: usize) -> Result<Circuit, BuilderError> {
    if n == 0 || n > QFT_MAX_WIDTH {
        return Err(BuilderError::QftSizeOutOfRange { n });
    }
    let mut c = Circuit::new(n);
    for j in 0..n {
        c.push(Gate::hadamard(j));
        for k in j + 1..n {
            let angle = PI / (1u64 << (k - j)) as f64;
            c.push(Gate::controlled_phase(angle, k, j));
        }
    }
    for i in 0..n / 2 {
        c.push(Gate::swap(i, n - 1 - i));
    }
    Ok(c)
}

/// Closed-form gate counts for [`build_qft`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QftCounts {
    pub hadamard: usize,
    pub controlled_phase: usize,
    pub swap: usize,
    /// CX count after decomposition to the native set:
    /// `n(n-1) + 3*floor(n/2)`.
    pub native_cnot: usize,
}

impl QftCounts {
    /// Total gates before decomposition.
    pub fn logical_total(&self) -> usize {
        self.hadamard + self.controlled_phase + self.swap
    }
}

/// Gate counts of the width-`n` QFT without constructing the circuit.
/// Agrees with `build_qft(n).decompose_to_native().census()` wherever the
/// builder runs.
pub fn qft_counts(n: usize) -> QftCounts {
    QftCounts {
        hadamard: n,
        controlled_phase: n * n.saturating_sub(1) / 2,
        swap: n / 2,
        native_cnot: n * n.saturating_sub(1) + 3 * (n / 2),
    }
}

/// `floor(pi/4 * sqrt(N))`, the iteration count at which Grover search
/// peaks for a search space of `N` items.
pub fn grover_optimal_iterations(search_space: u64) -> u64 {
    libm::floor(FRAC_PI_4 * libm::sqrt(search_space as f64)) as u64
}

/// Grover search over `n_qubits` qubits for one marked basis state:
/// uniform superposition preparation, then `iterations` rounds of phase
/// oracle plus diffusion. The oracle is white-box: a multi-controlled Z
/// conjugated by X on the qubits where the marked index has a 0 bit.
pub fn build_grover(
    n_qubits: usize,
    marked: u64,
    iterations: usize,
) -> Result<Circuit, BuilderError> {
    if n_qubits == 0 || n_qubits > GROVER_MAX_WIDTH {
        return Err(BuilderError::GroverWidthOutOfRange { n: n_qubits });
    }
    let size = 1u64 << n_qubits;
    if marked >= size {
        return Err(BuilderError::MarkedStateOutOfRange { marked, size });
    }

    let mut c = Circuit::new(n_qubits);
    for q in 0..n_qubits {
        c.push(Gate::hadamard(q));
    }
    let zero_bits: Vec<usize> = (0..n_qubits)
        .filter(|&q| (marked >> (n_qubits - 1 - q)) & 1 == 0)
        .collect();
    for _ in 0..iterations {
        // Phase oracle: flip the sign of |marked>.
        for &q in &zero_bits {
            c.push(Gate::pauli_x(q));
        }
        push_multi_controlled_z(&mut c, n_qubits);
        for &q in &zero_bits {
            c.push(Gate::pauli_x(q));
        }
        // Diffusion: reflect about the uniform superposition.
        for q in 0..n_qubits {
            c.push(Gate::hadamard(q));
        }
        for q in 0..n_qubits {
            c.push(Gate::pauli_x(q));
        }
        push_multi_controlled_z(&mut c, n_qubits);
        for q in 0..n_qubits {
            c.push(Gate::pauli_x(q));
        }
        for q in 0..n_qubits {
            c.push(Gate::hadamard(q));
        }
    }
    Ok(c)
}

/// Phase flip of |1..1> over qubits `0..m`, up to global phase.
///
/// Synthesized as a phase polynomial: the AND of m bits expands over
/// subset parities as `AND = sum_S (-1)^(|S|+1) parity_S / 2^(m-1)`, so
/// each nonempty subset contributes a CX parity fold, an Rz, and an
/// unfold. Exponential in m, which is acceptable at oracle scale.
fn push_multi_controlled_z(c: &mut Circuit, m: usize) {
    if m == 1 {
        c.push(Gate::rotation(Axis::Z, PI, 0));
        return;
    }
    let scale = PI / (1u64 << (m - 1)) as f64;
    for mask in 1u32..(1u32 << m) {
        let members: Vec<usize> = (0..m).filter(|&q| (mask >> q) & 1 == 1).collect();
        let angle = if members.len() % 2 == 1 { scale } else { -scale };
        let last = *members.last().expect("mask is nonzero");
        for &q in &members[..members.len() - 1] {
            c.push(Gate::controlled_not(q, last));
        }
        c.push(Gate::rotation(Axis::Z, angle, last));
        for &q in members[..members.len() - 1].iter().rev() {
            c.push(Gate::controlled_not(q, last));
        }
    }
}

/// Size parameters of the quantum parton shower algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartonShowerParams {
    steps: u64,
    initial_particles: u64,
    fermion_flavors: u64,
    mid_circuit_measurement: bool,
}

impl PartonShowerParams {
    pub fn new(
        steps: u64,
        initial_particles: u64,
        fermion_flavors: u64,
        mid_circuit_measurement: bool,
    ) -> Result<Self, BuilderError> {
        for (value, name) in [
            (steps, "steps"),
            (initial_particles, "initial_particles"),
            (fermion_flavors, "fermion_flavors"),
        ] {
            if value == 0 {
                return Err(BuilderError::ZeroShowerParameter { name });
            }
        }
        Ok(PartonShowerParams {
            steps,
            initial_particles,
            fermion_flavors,
            mid_circuit_measurement,
        })
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn initial_particles(&self) -> u64 {
        self.initial_particles
    }

    pub fn fermion_flavors(&self) -> u64 {
        self.fermion_flavors
    }

    pub fn mid_circuit_measurement(&self) -> bool {
        self.mid_circuit_measurement
    }
}

/// Qubit budget of the two dominant shower registers. The smaller
/// bookkeeping registers are excluded from the total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegisterBudget {
    /// Particle state register: `3(N + n_I)` qubits.
    pub particle_state: u64,
    /// Emission history register: `N * ceil(log2(N + n_I))` qubits, or
    /// `ceil(log2(2 n_I + 1))` when mid-circuit measurement resets it.
    pub history: u64,
    pub total_dominant: u64,
}

/// Dominant-register qubit counts for the given shower parameters.
pub fn parton_shower_registers(p: &PartonShowerParams) -> RegisterBudget {
    let particle_state = 3 * (p.steps + p.initial_particles);
    let history = if p.mid_circuit_measurement {
        ceil_log2(2 * p.initial_particles + 1)
    } else {
        p.steps * ceil_log2(p.steps + p.initial_particles)
    };
    RegisterBudget {
        particle_state,
        history,
        total_dominant: particle_state + history,
    }
}

/// Depth-complexity pair for the shower at the given parameters, with
/// unit constant factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShowerCosts {
    /// `N * n_f^2 * ln(n_f)` native gates.
    pub quantum: f64,
    /// `N * 2^(n_f/2)` classical operations.
    pub classical: f64,
}

/// Evaluates the quantum and classical shower cost models. Requires
/// `n_f >= 2` so the logarithm is positive.
pub fn parton_shower_costs(p: &PartonShowerParams) -> Result<ShowerCosts, BuilderError> {
    let n_f = p.fermion_flavors;
    if n_f < 2 {
        return Err(BuilderError::FermionCountTooSmall { n_f });
    }
    let steps = p.steps as f64;
    let flavors = n_f as f64;
    Ok(ShowerCosts {
        quantum: steps * flavors * flavors * libm::log(flavors),
        classical: steps * libm::exp2(flavors / 2.0),
    })
}

/// Smallest number of bits holding values `0..x`, i.e. `ceil(log2(x))`.
fn ceil_log2(x: u64) -> u64 {
    debug_assert!(x >= 1);
    (64 - (x - 1).leading_zeros()) as u64
}
