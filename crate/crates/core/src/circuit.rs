//! Gate-level circuit representation with gate census, depth computation,
//! and decomposition to a native gate set.
//!
//! Convention used throughout the crate: qubit 0 is the most significant
//! bit of a computational-basis index. A width-`n` circuit acts on basis
//! states `|q0 q1 .. q(n-1)>` indexed by `q0*2^(n-1) + .. + q(n-1)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Rotation axis for single-qubit rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// The gate alphabet. Angles are in radians and are stored exactly as
/// given; no modular reduction is applied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    Hadamard,
    PauliX,
    /// Two-qubit controlled phase `diag(1, 1, 1, e^{i*angle})`. Symmetric
    /// in its two qubits.
    ControlledPhase(f64),
    ControlledNot,
    Swap,
    Rotation(Axis, f64),
    Measure,
}

impl GateKind {
    /// Number of qubits the gate acts on (1 or 2).
    pub fn arity(&self) -> usize {
        match self {
            GateKind::ControlledPhase(_) | GateKind::ControlledNot | GateKind::Swap => 2,
            _ => 1,
        }
    }

    /// True for the two-qubit members of the alphabet.
    pub fn is_two_qubit(&self) -> bool {
        self.arity() == 2
    }

    /// True for gates left untouched by [`Circuit::decompose_to_native`].
    pub fn is_native(&self) -> bool {
        !matches!(self, GateKind::ControlledPhase(_) | GateKind::Swap)
    }

    /// Parameter-free classification used for census bookkeeping.
    pub fn class(&self) -> GateClass {
        match self {
            GateKind::Hadamard => GateClass::Hadamard,
            GateKind::PauliX => GateClass::PauliX,
            GateKind::ControlledPhase(_) => GateClass::ControlledPhase,
            GateKind::ControlledNot => GateClass::ControlledNot,
            GateKind::Swap => GateClass::Swap,
            GateKind::Rotation(Axis::X, _) => GateClass::RotationX,
            GateKind::Rotation(Axis::Y, _) => GateClass::RotationY,
            GateKind::Rotation(Axis::Z, _) => GateClass::RotationZ,
            GateKind::Measure => GateClass::Measure,
        }
    }
}

/// Gate classification with angles erased, usable as a map key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GateClass {
    Hadamard,
    PauliX,
    ControlledPhase,
    ControlledNot,
    Swap,
    RotationX,
    RotationY,
    RotationZ,
    Measure,
}

impl GateClass {
    pub fn label(&self) -> &'static str {
        match self {
            GateClass::Hadamard => "h",
            GateClass::PauliX => "x",
            GateClass::ControlledPhase => "cp",
            GateClass::ControlledNot => "cx",
            GateClass::Swap => "swap",
            GateClass::RotationX => "rx",
            GateClass::RotationY => "ry",
            GateClass::RotationZ => "rz",
            GateClass::Measure => "measure",
        }
    }
}

/// A gate applied to specific qubits. Constructors check the arity of the
/// kind and that two-qubit gates address distinct qubits; angles must be
/// finite. Violations panic, as they are programming errors rather than
/// data errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gate {
    kind: GateKind,
    qubits: [usize; 2],
}

impl Gate {
    fn single(kind: GateKind, qubit: usize) -> Self {
        debug_assert_eq!(kind.arity(), 1);
        Gate {
            kind,
            qubits: [qubit, usize::MAX],
        }
    }

    fn pair(kind: GateKind, a: usize, b: usize) -> Self {
        debug_assert_eq!(kind.arity(), 2);
        assert!(a != b, "two-qubit gate requires distinct qubits, got {}", a);
        Gate { kind, qubits: [a, b] }
    }

    pub fn hadamard(qubit: usize) -> Self {
        Gate::single(GateKind::Hadamard, qubit)
    }

    pub fn pauli_x(qubit: usize) -> Self {
        Gate::single(GateKind::PauliX, qubit)
    }

    pub fn rotation(axis: Axis, angle: f64, qubit: usize) -> Self {
        assert!(angle.is_finite(), "rotation angle must be finite");
        Gate::single(GateKind::Rotation(axis, angle), qubit)
    }

    pub fn measure(qubit: usize) -> Self {
        Gate::single(GateKind::Measure, qubit)
    }

    pub fn controlled_phase(angle: f64, a: usize, b: usize) -> Self {
        assert!(angle.is_finite(), "controlled-phase angle must be finite");
        Gate::pair(GateKind::ControlledPhase(angle), a, b)
    }

    pub fn controlled_not(control: usize, target: usize) -> Self {
        Gate::pair(GateKind::ControlledNot, control, target)
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::pair(GateKind::Swap, a, b)
    }

    pub fn kind(&self) -> &GateKind {
        &self.kind
    }

    /// The qubits the gate acts on, in gate order (control first for CX).
    pub fn qubits(&self) -> &[usize] {
        &self.qubits[..self.kind.arity()]
    }

    /// Same gate with every qubit index sent through `f`.
    pub fn relabeled(&self, mut f: impl FnMut(usize) -> usize) -> Gate {
        let mut qubits = self.qubits;
        for q in qubits.iter_mut().take(self.kind.arity()) {
            *q = f(*q);
        }
        Gate { kind: self.kind, qubits }
    }
}

/// An ordered gate list over a fixed number of qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Empty circuit over `width` qubits.
    pub fn new(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(width: usize, gates: impl IntoIterator<Item = Gate>) -> Self {
        let mut c = Circuit::new(width);
        for g in gates {
            c.push(g);
        }
        c
    }

    /// Appends a gate. Panics if a qubit index is out of range.
    pub fn push(&mut self, gate: Gate) {
        for &q in gate.qubits() {
            assert!(
                q < self.width,
                "gate qubit {} out of range for width {}",
                q,
                self.width
            );
        }
        self.gates.push(gate);
    }

    /// Appends all gates of `other`, which must not be wider than this
    /// circuit. A narrower `other` is embedded on the low qubit indices.
    pub fn extend_from(&mut self, other: &Circuit) {
        assert!(
            other.width <= self.width,
            "cannot extend from a wider circuit ({} > {})",
            other.width,
            self.width
        );
        self.gates.extend_from_slice(&other.gates);
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Counts gates and computes circuit depth.
    ///
    /// Depth is the number of layers in a greedy as-soon-as-possible
    /// schedule where gates sharing a qubit cannot share a layer. The
    /// empty circuit has depth 0.
    pub fn census(&self) -> GateCensus {
        let mut by_kind = BTreeMap::new();
        let mut two_qubit = 0;
        let mut cnot = 0;
        let mut frontier: Vec<usize> = alloc::vec![0; self.width];
        let mut depth = 0;

        for gate in &self.gates {
            *by_kind.entry(gate.kind().class()).or_insert(0) += 1;
            if gate.kind().is_two_qubit() {
                two_qubit += 1;
            }
            if matches!(gate.kind(), GateKind::ControlledNot) {
                cnot += 1;
            }
            let layer = 1 + gate
                .qubits()
                .iter()
                .map(|&q| frontier[q])
                .max()
                .unwrap_or(0);
            for &q in gate.qubits() {
                frontier[q] = layer;
            }
            depth = depth.max(layer);
        }

        GateCensus {
            total: self.gates.len(),
            two_qubit,
            cnot,
            by_kind,
            depth,
        }
    }

    /// Rewrites the circuit over the native set {rotation, H, X, CX,
    /// measure}. Controlled phases become 2 CX + 3 Rz and swaps become
    /// 3 CX; the unitary is preserved up to global phase.
    pub fn decompose_to_native(&self) -> Circuit {
        let mut out = Circuit::new(self.width);
        for gate in &self.gates {
            match *gate.kind() {
                GateKind::ControlledPhase(theta) => {
                    let (a, b) = (gate.qubits()[0], gate.qubits()[1]);
                    let half = theta / 2.0;
                    out.push(Gate::rotation(Axis::Z, half, a));
                    out.push(Gate::controlled_not(a, b));
                    out.push(Gate::rotation(Axis::Z, -half, b));
                    out.push(Gate::controlled_not(a, b));
                    out.push(Gate::rotation(Axis::Z, half, b));
                }
                GateKind::Swap => {
                    let (a, b) = (gate.qubits()[0], gate.qubits()[1]);
                    out.push(Gate::controlled_not(a, b));
                    out.push(Gate::controlled_not(b, a));
                    out.push(Gate::controlled_not(a, b));
                }
                _ => out.push(*gate),
            }
        }
        out
    }
}

/// Gate counts and depth for one circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateCensus {
    /// Every gate, measurements included.
    pub total: usize,
    /// Controlled-phase + CX + swap count.
    pub two_qubit: usize,
    /// CX count only.
    pub cnot: usize,
    /// Per-class counts; values sum to `total`.
    pub by_kind: BTreeMap<GateClass, usize>,
    /// ASAP layer count.
    pub depth: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_census_is_zero() {
        let census = Circuit::new(3).census();
        assert_eq!(census.total, 0);
        assert_eq!(census.two_qubit, 0);
        assert_eq!(census.cnot, 0);
        assert_eq!(census.depth, 0);
        assert!(census.by_kind.is_empty());
    }

    #[test]
    fn census_counts_and_depth_chain() {
        // H(0) | CX shares q0 | H(1) shares q1: three layers.
        let c = Circuit::from_gates(
            2,
            [
                Gate::hadamard(0),
                Gate::controlled_not(0, 1),
                Gate::hadamard(1),
            ],
        );
        let census = c.census();
        assert_eq!(census.total, 3);
        assert_eq!(census.two_qubit, 1);
        assert_eq!(census.cnot, 1);
        assert_eq!(census.depth, 3);
        assert_eq!(census.by_kind[&GateClass::Hadamard], 2);
    }

    #[test]
    fn disjoint_gates_share_a_layer() {
        let c = Circuit::from_gates(2, [Gate::hadamard(0), Gate::hadamard(1)]);
        let census = c.census();
        assert_eq!(census.depth, 1);
        assert_eq!(census.total, 2);
    }

    #[test]
    fn measure_counts_in_total_not_two_qubit() {
        let c = Circuit::from_gates(2, [Gate::measure(0), Gate::measure(1)]);
        let census = c.census();
        assert_eq!(census.total, 2);
        assert_eq!(census.two_qubit, 0);
        assert_eq!(census.by_kind[&GateClass::Measure], 2);
    }

    #[test]
    fn controlled_phase_decomposes_to_two_cx_three_rz() {
        let c = Circuit::from_gates(
            2,
            [Gate::controlled_phase(core::f64::consts::FRAC_PI_2, 0, 1)],
        );
        let native = c.decompose_to_native();
        assert_eq!(native.len(), 5);
        let census = native.census();
        assert_eq!(census.cnot, 2);
        assert_eq!(census.by_kind[&GateClass::RotationZ], 3);
        assert!(native.gates().iter().all(|g| g.kind().is_native()));
    }

    #[test]
    fn swap_decomposes_to_three_cx() {
        let native = Circuit::from_gates(2, [Gate::swap(0, 1)]).decompose_to_native();
        assert_eq!(native.len(), 3);
        assert_eq!(native.census().cnot, 3);
    }

    #[test]
    fn native_gates_pass_through() {
        let c = Circuit::from_gates(1, [Gate::hadamard(0)]);
        assert_eq!(c.decompose_to_native(), c);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn push_rejects_wide_gate() {
        Circuit::new(1).push(Gate::hadamard(1));
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn two_qubit_gate_rejects_equal_qubits() {
        Gate::controlled_not(3, 3);
    }
}
