//! Small dense statevector simulator used as a verification oracle for
//! circuit builders, decomposition, and routing. Capacity is deliberately
//! capped at desk scale; this is a test instrument, not a production
//! simulator.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;
use core::fmt;

use num_complex::Complex64;

use crate::circuit::{Axis, Circuit, Gate, GateKind};

/// Widest circuit `simulate` accepts.
pub const MAX_SIMULATE_WIDTH: usize = 12;
/// Widest circuit `unitary_of` accepts.
pub const MAX_UNITARY_WIDTH: usize = 6;

const NORM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum SimulationError {
    /// Circuit width exceeds the stated capacity cap.
    WidthExceedsCapacity { width: usize, max: usize },
    /// Measurement gates have no statevector semantics here.
    MeasureUnsupported,
    /// Amplitude vector length is not a power of two.
    InvalidLength { len: usize },
    /// Amplitude vector is not normalized.
    NotNormalized { norm: f64 },
}

impl fmt::Display for SimulationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimulationError::WidthExceedsCapacity { width, max } => {
                write!(f, "circuit width {} exceeds simulator capacity {}", width, max)
            }
            SimulationError::MeasureUnsupported => {
                write!(f, "measure gates are not supported by the statevector oracle")
            }
            SimulationError::InvalidLength { len } => {
                write!(f, "amplitude vector length {} is not a power of two", len)
            }
            SimulationError::NotNormalized { norm } => {
                write!(f, "amplitude vector has norm {}, expected 1", norm)
            }
        }
    }
}

/// Normalized complex amplitudes over `2^width` basis states, indexed with
/// qubit 0 as the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zeros basis state `|0..0>`.
    pub fn zero(width: usize) -> Self {
        StateVector::basis(width, 0)
    }

    /// The computational basis state with the given index.
    pub fn basis(width: usize, index: usize) -> Self {
        assert!(index < (1usize << width), "basis index out of range");
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
        amps[index] = Complex64::new(1.0, 0.0);
        StateVector { width, amps }
    }

    /// Wraps an explicit amplitude vector. The length must be a power of
    /// two and the L2 norm must be 1 within 1e-12.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimulationError> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(SimulationError::InvalidLength { len });
        }
        let norm = libm::sqrt(amps.iter().map(|a| a.norm_sqr()).sum::<f64>());
        if libm::fabs(norm - 1.0) > NORM_TOLERANCE {
            return Err(SimulationError::NotNormalized { norm });
        }
        Ok(StateVector {
            width: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// `|amplitude|^2` per basis state.
    pub fn measure_probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Bit position (from the least significant end) of qubit `q`.
    fn bit(&self, q: usize) -> usize {
        self.width - 1 - q
    }
}

/// Applies each gate of `c` in order to `initial` and returns the final
/// state. Rejects circuits wider than [`MAX_SIMULATE_WIDTH`] or containing
/// measure gates.
pub fn simulate(c: &Circuit, initial: &StateVector) -> Result<StateVector, SimulationError> {
    if c.width() > MAX_SIMULATE_WIDTH {
        return Err(SimulationError::WidthExceedsCapacity {
            width: c.width(),
            max: MAX_SIMULATE_WIDTH,
        });
    }
    assert_eq!(
        initial.width,
        c.width(),
        "state width {} does not match circuit width {}",
        initial.width,
        c.width()
    );
    let mut state = initial.clone();
    for gate in c.gates() {
        apply_gate(&mut state, gate)?;
    }
    Ok(state)
}

/// Dense unitary of `c`, built column by column from basis-state
/// simulations. Capped at [`MAX_UNITARY_WIDTH`] qubits.
pub fn unitary_of(c: &Circuit) -> Result<Unitary, SimulationError> {
    if c.width() > MAX_UNITARY_WIDTH {
        return Err(SimulationError::WidthExceedsCapacity {
            width: c.width(),
            max: MAX_UNITARY_WIDTH,
        });
    }
    let dim = 1usize << c.width();
    let mut elems = vec![Complex64::new(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let out = simulate(c, &StateVector::basis(c.width(), col))?;
        for row in 0..dim {
            elems[row * dim + col] = out.amps[row];
        }
    }
    Ok(Unitary { dim, elems })
}

fn apply_gate(state: &mut StateVector, gate: &Gate) -> Result<(), SimulationError> {
    match *gate.kind() {
        GateKind::Hadamard => {
            let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
            apply_single(state, gate.qubits()[0], [[s, s], [s, -s]]);
        }
        GateKind::PauliX => {
            let zero = Complex64::new(0.0, 0.0);
            let one = Complex64::new(1.0, 0.0);
            apply_single(state, gate.qubits()[0], [[zero, one], [one, zero]]);
        }
        GateKind::Rotation(axis, theta) => {
            let half = theta / 2.0;
            let (c, s) = (libm::cos(half), libm::sin(half));
            let zero = Complex64::new(0.0, 0.0);
            let m = match axis {
                Axis::X => [
                    [Complex64::new(c, 0.0), Complex64::new(0.0, -s)],
                    [Complex64::new(0.0, -s), Complex64::new(c, 0.0)],
                ],
                Axis::Y => [
                    [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
                    [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
                ],
                Axis::Z => [
                    [Complex64::new(c, -s), zero],
                    [zero, Complex64::new(c, s)],
                ],
            };
            apply_single(state, gate.qubits()[0], m);
        }
        GateKind::ControlledNot => {
            let cb = state.bit(gate.qubits()[0]);
            let tb = state.bit(gate.qubits()[1]);
            for idx in 0..state.amps.len() {
                if (idx >> cb) & 1 == 1 && (idx >> tb) & 1 == 0 {
                    state.amps.swap(idx, idx | (1 << tb));
                }
            }
        }
        GateKind::ControlledPhase(theta) => {
            let phase = Complex64::new(libm::cos(theta), libm::sin(theta));
            let ab = state.bit(gate.qubits()[0]);
            let bb = state.bit(gate.qubits()[1]);
            let mask = (1 << ab) | (1 << bb);
            for (idx, amp) in state.amps.iter_mut().enumerate() {
                if idx & mask == mask {
                    *amp *= phase;
                }
            }
        }
        GateKind::Swap => {
            let ab = state.bit(gate.qubits()[0]);
            let bb = state.bit(gate.qubits()[1]);
            for idx in 0..state.amps.len() {
                if (idx >> ab) & 1 == 1 && (idx >> bb) & 1 == 0 {
                    state.amps.swap(idx, idx ^ (1 << ab) ^ (1 << bb));
                }
            }
        }
        GateKind::Measure => return Err(SimulationError::MeasureUnsupported),
    }
    Ok(())
}

fn apply_single(state: &mut StateVector, qubit: usize, m: [[Complex64; 2]; 2]) {
    let bit = state.bit(qubit);
    let stride = 1usize << bit;
    for idx in 0..state.amps.len() {
        if idx & stride == 0 {
            let a = state.amps[idx];
            let b = state.amps[idx | stride];
            state.amps[idx] = m[0][0] * a + m[0][1] * b;
            state.amps[idx | stride] = m[1][0] * a + m[1][1] * b;
        }
    }
}

/// Dense row-major complex matrix, as produced by [`unitary_of`].
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    dim: usize,
    elems: Vec<Complex64>,
}

impl Unitary {
    pub fn identity(dim: usize) -> Self {
        let mut u = Unitary {
            dim,
            elems: vec![Complex64::new(0.0, 0.0); dim * dim],
        };
        for i in 0..dim {
            u.elems[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        u
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let dim = rows.len();
        let mut elems = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            elems.extend(row);
        }
        Unitary { dim, elems }
    }

    /// Permutation matrix for a relabeling of qubit positions: bit at
    /// position `p` of the input index moves to position `sigma[p]` of the
    /// output index (positions count qubits from 0 = most significant).
    pub fn from_qubit_permutation(sigma: &[usize]) -> Self {
        let n = sigma.len();
        let dim = 1usize << n;
        let mut u = Unitary {
            dim,
            elems: vec![Complex64::new(0.0, 0.0); dim * dim],
        };
        for x in 0..dim {
            let mut y = 0usize;
            for p in 0..n {
                let bit = (x >> (n - 1 - p)) & 1;
                y |= bit << (n - 1 - sigma[p]);
            }
            u.elems[y * dim + x] = Complex64::new(1.0, 0.0);
        }
        u
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.elems[row * self.dim + col]
    }

    pub fn matmul(&self, rhs: &Unitary) -> Unitary {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let dim = self.dim;
        let mut elems = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = self.elems[r * dim + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..dim {
                    elems[r * dim + c] += a * rhs.elems[k * dim + c];
                }
            }
        }
        Unitary { dim, elems }
    }

    pub fn dagger(&self) -> Unitary {
        let dim = self.dim;
        let mut elems = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                elems[c * dim + r] = self.elems[r * dim + c].conj();
            }
        }
        Unitary { dim, elems }
    }

    /// Largest entrywise absolute difference.
    pub fn max_norm_distance(&self, other: &Unitary) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        self.elems
            .iter()
            .zip(&other.elems)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max-norm distance after removing a global phase. The phase is fixed
    /// at the entry where `other` has the largest magnitude.
    pub fn distance_up_to_phase(&self, other: &Unitary) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let mut pivot = 0;
        let mut best = 0.0;
        for (i, e) in other.elems.iter().enumerate() {
            if e.norm_sqr() > best {
                best = e.norm_sqr();
                pivot = i;
            }
        }
        if best == 0.0 {
            return self.max_norm_distance(other);
        }
        let ratio = self.elems[pivot] / other.elems[pivot];
        let phase = if ratio.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            ratio / ratio.norm()
        };
        self.elems
            .iter()
            .zip(&other.elems)
            .map(|(a, b)| (a - phase * b).norm())
            .fold(0.0, f64::max)
    }

    /// Deviation of `U * U^dagger` from the identity in max-norm.
    pub fn unitarity_defect(&self) -> f64 {
        self.matmul(&self.dagger())
            .max_norm_distance(&Unitary::identity(self.dim))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn pauli_x_flips_zero() {
        let c = Circuit::from_gates(1, [Gate::pauli_x(0)]);
        let out = simulate(&c, &StateVector::zero(1)).unwrap();
        assert!((out.amplitudes()[0].norm()) < 1e-15);
        assert!((out.amplitudes()[1] - re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn bell_state_from_h_cx() {
        let c = Circuit::from_gates(2, [Gate::hadamard(0), Gate::controlled_not(0, 1)]);
        let out = simulate(&c, &StateVector::zero(2)).unwrap();
        let amp = re(FRAC_1_SQRT_2);
        assert!((out.amplitudes()[0] - amp).norm() < 1e-12);
        assert!(out.amplitudes()[1].norm() < 1e-12);
        assert!(out.amplitudes()[2].norm() < 1e-12);
        assert!((out.amplitudes()[3] - amp).norm() < 1e-12);

        let probs = out.measure_probabilities();
        assert!(libm::fabs(probs[0] - 0.5) < 1e-12);
        assert!(libm::fabs(probs[3] - 0.5) < 1e-12);
        assert!(libm::fabs(probs.iter().sum::<f64>() - 1.0) < 1e-10);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let s = StateVector::basis(3, 5);
        let out = simulate(&Circuit::new(3), &s).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn hadamard_unitary() {
        let c = Circuit::from_gates(1, [Gate::hadamard(0)]);
        let u = unitary_of(&c).unwrap();
        let h = Unitary::from_rows(alloc::vec![
            alloc::vec![re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)],
            alloc::vec![re(FRAC_1_SQRT_2), re(-FRAC_1_SQRT_2)],
        ]);
        assert!(u.max_norm_distance(&h) < 1e-15);
        assert!(u.unitarity_defect() < 1e-12);
    }

    #[test]
    fn cx_permutes_upper_block_msb_convention() {
        // Qubit 0 is the most significant bit, so CX(0,1) maps
        // |10> <-> |11> (indices 2 and 3).
        let c = Circuit::from_gates(2, [Gate::controlled_not(0, 1)]);
        let u = unitary_of(&c).unwrap();
        let expected = Unitary::from_rows(alloc::vec![
            alloc::vec![re(1.0), re(0.0), re(0.0), re(0.0)],
            alloc::vec![re(0.0), re(1.0), re(0.0), re(0.0)],
            alloc::vec![re(0.0), re(0.0), re(0.0), re(1.0)],
            alloc::vec![re(0.0), re(0.0), re(1.0), re(0.0)],
        ]);
        assert!(u.max_norm_distance(&expected) < 1e-15);
    }

    #[test]
    fn measure_gate_is_rejected() {
        let c = Circuit::from_gates(1, [Gate::measure(0)]);
        assert_eq!(
            simulate(&c, &StateVector::zero(1)),
            Err(SimulationError::MeasureUnsupported)
        );
    }

    #[test]
    fn width_cap_is_enforced() {
        let c = Circuit::new(13);
        assert!(matches!(
            simulate(&c, &StateVector::zero(13)),
            Err(SimulationError::WidthExceedsCapacity { width: 13, max: 12 })
        ));
        assert!(matches!(
            unitary_of(&Circuit::new(7)),
            Err(SimulationError::WidthExceedsCapacity { width: 7, max: 6 })
        ));
    }

    #[test]
    fn from_amplitudes_validates_norm() {
        let bad = alloc::vec![re(1.0), re(1.0)];
        assert!(matches!(
            StateVector::from_amplitudes(bad),
            Err(SimulationError::NotNormalized { .. })
        ));
        let odd = alloc::vec![re(1.0), re(0.0), re(0.0)];
        assert!(matches!(
            StateVector::from_amplitudes(odd),
            Err(SimulationError::InvalidLength { len: 3 })
        ));
    }
}
