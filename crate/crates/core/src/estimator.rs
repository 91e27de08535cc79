//! Feasibility estimation: circuit success probability under calibrated
//! noise, reliable-depth limits, quantum-vs-classical cost crossovers,
//! and years-to-capability projections under a doubling roadmap.

use alloc::boxed::Box;
use alloc::vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::builders::{
    parton_shower_costs, parton_shower_registers, BuilderError, PartonShowerParams,
    RegisterBudget, ShowerCosts,
};
use crate::circuit::{Circuit, GateClass, GateKind};
use crate::device::DeviceModel;
use crate::routing::QubitMapping;

/// Reliability threshold used when the caller does not pick one.
pub const DEFAULT_RELIABILITY_THRESHOLD: f64 = 2.0 / 3.0;
/// Capability doubling period in years used when the caller does not
/// pick one.
pub const DEFAULT_DOUBLING_PERIOD: f64 = 2.0;
/// Problem-size range scanned for a crossover when the caller does not
/// pick one.
pub const DEFAULT_CROSSOVER_RANGE: RangeInclusive<u64> = 2..=64;

#[derive(Debug, Clone, PartialEq)]
pub enum EstimatorError {
    /// Circuit addresses more qubits than the device has.
    CircuitWiderThanDevice { width: usize, nodes: usize },
    /// Mapping does not cover the device's qubits.
    MappingSizeMismatch { mapping: usize, nodes: usize },
    /// Circuit contains a non-native gate; decompose before estimating.
    NotDecomposed { class: GateClass },
    /// No calibrated single-qubit gate on this qubit.
    MissingSingleQubitCal { qubit: u32 },
    /// No calibrated two-qubit gate on this pair.
    MissingTwoQubitCal { a: u32, b: u32 },
    /// Condition numbers are at least 1.
    InvalidConditionNumber { kappa: f64 },
    /// Roadmap capability must be finite and positive.
    InvalidCapability { value: f64 },
    /// Doubling period must be finite and positive.
    InvalidDoublingPeriod { value: f64 },
    /// Crossover scan range has no elements.
    EmptyRange { min: u64, max: u64 },
    /// Crossover scan range starts below the model's domain.
    BelowDomain { min: u64, domain_min: u64 },
    /// A cost function left the representable range.
    NonFiniteCost { n: u64 },
    /// Invalid parton shower parameters.
    Builder(BuilderError),
}

impl From<BuilderError> for EstimatorError {
    fn from(e: BuilderError) -> EstimatorError {
        EstimatorError::Builder(e)
    }
}

impl fmt::Display for EstimatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use EstimatorError::*;
        match self {
            CircuitWiderThanDevice { width, nodes } => {
                write!(f, "circuit width {} exceeds device size {}", width, nodes)
            }
            MappingSizeMismatch { mapping, nodes } => write!(
                f,
                "mapping covers {} qubits but the device has {}",
                mapping, nodes
            ),
            NotDecomposed { class } => {
                write!(f, "gate '{}' is not native; decompose the circuit first", class.label())
            }
            MissingSingleQubitCal { qubit } => {
                write!(f, "no calibrated single-qubit gate on qubit {}", qubit)
            }
            MissingTwoQubitCal { a, b } => {
                write!(f, "no calibrated two-qubit gate on pair ({}, {})", a, b)
            }
            InvalidConditionNumber { kappa } => {
                write!(f, "condition number {} must be finite and at least 1", kappa)
            }
            InvalidCapability { value } => {
                write!(f, "capability {} must be finite and positive", value)
            }
            InvalidDoublingPeriod { value } => {
                write!(f, "doubling period {} must be finite and positive", value)
            }
            EmptyRange { min, max } => write!(f, "empty scan range [{}, {}]", min, max),
            BelowDomain { min, domain_min } => write!(
                f,
                "scan starts at {} but the model is defined from {}",
                min, domain_min
            ),
            NonFiniteCost { n } => write!(f, "cost function overflows at n = {}", n),
            Builder(e) => write!(f, "{}", e),
        }
    }
}

type CostFn = Box<dyn Fn(u64) -> f64 + Send + Sync>;

/// Asymptotic cost pair for one algorithm family, evaluated with unit
/// constant factors.
pub struct ComplexityModel {
    name: &'static str,
    parameter: &'static str,
    domain_min: u64,
    quantum: CostFn,
    classical: CostFn,
}

impl fmt::Debug for ComplexityModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComplexityModel")
            .field("name", &self.name)
            .field("parameter", &self.parameter)
            .field("domain_min", &self.domain_min)
            .finish_non_exhaustive()
    }
}

impl ComplexityModel {
    pub fn new(
        name: &'static str,
        parameter: &'static str,
        domain_min: u64,
        quantum: impl Fn(u64) -> f64 + Send + Sync + 'static,
        classical: impl Fn(u64) -> f64 + Send + Sync + 'static,
    ) -> ComplexityModel {
        ComplexityModel {
            name,
            parameter,
            domain_min,
            quantum: Box::new(quantum),
            classical: Box::new(classical),
        }
    }

    /// Parton shower emitting into `n_f` fermion flavors:
    /// `n_f^2 ln(n_f)` quantum against `2^(n_f/2)` classical. The shared
    /// step-count factor cancels out of the comparison.
    pub fn parton_shower() -> ComplexityModel {
        ComplexityModel::new(
            "shower",
            "n_f",
            2,
            |n| {
                let x = n as f64;
                x * x * libm::log(x)
            },
            |n| libm::exp2(n as f64 / 2.0),
        )
    }

    /// Unstructured search over `n` items: `sqrt(n)` against `n`.
    pub fn grover() -> ComplexityModel {
        ComplexityModel::new("grover", "N", 1, |n| libm::sqrt(n as f64), |n| n as f64)
    }

    /// Linear system solving at fixed condition number `kappa`:
    /// `kappa^2 ln(n)` against `kappa * n`.
    pub fn hhl(kappa: f64) -> Result<ComplexityModel, EstimatorError> {
        if !kappa.is_finite() || kappa < 1.0 {
            return Err(EstimatorError::InvalidConditionNumber { kappa });
        }
        Ok(ComplexityModel::new(
            "hhl",
            "N",
            2,
            move |n| kappa * kappa * libm::log(n as f64),
            move |n| kappa * n as f64,
        ))
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn parameter(&self) -> &'static str {
        self.parameter
    }

    /// Smallest problem size the cost functions are defined for.
    pub fn domain_min(&self) -> u64 {
        self.domain_min
    }

    pub fn quantum_cost(&self, n: u64) -> f64 {
        (self.quantum)(n)
    }

    pub fn classical_cost(&self, n: u64) -> f64 {
        (self.classical)(n)
    }
}

/// Smallest `n` in `range` where the quantum cost is strictly below the
/// classical one, scanning ascending; `None` if the inequality never
/// holds in the range.
pub fn find_crossover(
    model: &ComplexityModel,
    range: RangeInclusive<u64>,
) -> Result<Option<u64>, EstimatorError> {
    let (min, max) = (*range.start(), *range.end());
    if min > max {
        return Err(EstimatorError::EmptyRange { min, max });
    }
    if min < model.domain_min {
        return Err(EstimatorError::BelowDomain { min, domain_min: model.domain_min });
    }
    for n in range {
        let quantum = model.quantum_cost(n);
        let classical = model.classical_cost(n);
        if !quantum.is_finite() || !classical.is_finite() {
            return Err(EstimatorError::NonFiniteCost { n });
        }
        if quantum < classical {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Exponential capability growth: `current_capability` doubles every
/// `doubling_period` years.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoadmapModel {
    current_capability: f64,
    doubling_period: f64,
}

impl RoadmapModel {
    pub fn new(current_capability: f64, doubling_period: f64) -> Result<RoadmapModel, EstimatorError> {
        if !current_capability.is_finite() || current_capability <= 0.0 {
            return Err(EstimatorError::InvalidCapability { value: current_capability });
        }
        if !doubling_period.is_finite() || doubling_period <= 0.0 {
            return Err(EstimatorError::InvalidDoublingPeriod { value: doubling_period });
        }
        Ok(RoadmapModel { current_capability, doubling_period })
    }

    pub fn current_capability(&self) -> f64 {
        self.current_capability
    }

    pub fn doubling_period(&self) -> f64 {
        self.doubling_period
    }

    /// Years until the capability reaches `required`: zero when already
    /// there, otherwise `doubling_period * log2(required / current)`.
    /// `required` must be finite and positive.
    pub fn years_until(&self, required: f64) -> f64 {
        assert!(required.is_finite() && required > 0.0, "required capability must be positive");
        if self.current_capability >= required {
            0.0
        } else {
            self.doubling_period * libm::log2(required / self.current_capability)
        }
    }
}

/// Probability that a routed native circuit runs to completion on the
/// calibrated device.
///
/// The estimate multiplies one minus each gate's calibrated error, one
/// minus the readout error per measurement, and a dephasing factor
/// `exp(-B_q / T2_q)` per qubit, where `B_q` is the wall-clock time from
/// circuit start to the end of the qubit's last gate in an as-soon-as-
/// possible schedule built from calibrated durations. Measurements take
/// no scheduled time. Circuit qubit `q` is looked up on the device
/// through `mapping` and the device's node-to-id table.
pub fn success_probability(
    circuit: &Circuit,
    device: &DeviceModel,
    mapping: &QubitMapping,
) -> Result<f64, EstimatorError> {
    let nodes = device.qubit_count();
    if mapping.len() != nodes {
        return Err(EstimatorError::MappingSizeMismatch { mapping: mapping.len(), nodes });
    }
    if circuit.width() > nodes {
        return Err(EstimatorError::CircuitWiderThanDevice { width: circuit.width(), nodes });
    }

    let id_of = |q: usize| device.id_of(mapping.physical(q));
    let mut probability = 1.0;
    let mut busy_ns = vec![0.0f64; circuit.width()];

    for gate in circuit.gates() {
        match gate.kind() {
            GateKind::Measure => {
                let id = id_of(gate.qubits()[0]);
                let cal = device.qubit(id).expect("device ids are calibrated");
                probability *= 1.0 - cal.readout_err;
            }
            GateKind::ControlledNot => {
                let (a, b) = (gate.qubits()[0], gate.qubits()[1]);
                let (ia, ib) = (id_of(a), id_of(b));
                let cal = device
                    .two_qubit_cal(ia, ib)
                    .ok_or(EstimatorError::MissingTwoQubitCal { a: ia, b: ib })?;
                probability *= 1.0 - cal.error;
                let finish = if busy_ns[a] > busy_ns[b] { busy_ns[a] } else { busy_ns[b] }
                    + cal.duration_ns;
                busy_ns[a] = finish;
                busy_ns[b] = finish;
            }
            GateKind::Hadamard | GateKind::PauliX | GateKind::Rotation(..) => {
                let q = gate.qubits()[0];
                let id = id_of(q);
                let cal = device
                    .single_qubit_cal(id)
                    .ok_or(EstimatorError::MissingSingleQubitCal { qubit: id })?;
                probability *= 1.0 - cal.error;
                busy_ns[q] += cal.duration_ns;
            }
            GateKind::ControlledPhase(_) | GateKind::Swap => {
                return Err(EstimatorError::NotDecomposed { class: gate.kind().class() });
            }
        }
    }

    for (q, &busy) in busy_ns.iter().enumerate() {
        if busy > 0.0 {
            let t2_us = device.qubit(id_of(q)).expect("device ids are calibrated").t2_us;
            probability *= libm::exp(-(busy / 1000.0) / t2_us);
        }
    }

    Ok(probability)
}

/// Number of two-qubit layers a device sustains before the survival
/// estimate drops below a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthLimit {
    /// Per-layer survival is 1 or better, so no depth is ruled out.
    Unlimited,
    Layers(u64),
}

impl fmt::Display for DepthLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthLimit::Unlimited => write!(f, "no limit"),
            DepthLimit::Layers(k) => write!(f, "{}", k),
        }
    }
}

/// Largest `k` with `((1 - e) * exp(-t / T2))^k >= threshold`, where
/// `e` and `t` are the device-average two-qubit error and duration and
/// `T2` the average dephasing time. A device with no two-qubit
/// calibration is treated as lossless. `threshold` must lie strictly
/// between 0 and 1.
pub fn max_reliable_depth(device: &DeviceModel, threshold: f64) -> DepthLimit {
    assert!(
        threshold > 0.0 && threshold < 1.0,
        "threshold must lie strictly between 0 and 1"
    );
    let averages = device.averages();
    let error = averages.two_qubit_error.unwrap_or(0.0);
    let duration_ns = averages.two_qubit_duration_ns.unwrap_or(0.0);
    let survival = (1.0 - error) * libm::exp(-(duration_ns / 1000.0) / averages.t2_us);
    if survival >= 1.0 {
        return DepthLimit::Unlimited;
    }
    DepthLimit::Layers(libm::floor(libm::log(threshold) / libm::log(survival)) as u64)
}

/// Gate counts the estimate is benchmarked against: a hand-simplified
/// four-step shower compiles to 53 native gates, the unsimplified
/// version is of order 1e4 gates, and a fault-tolerant factoring-scale
/// workload needs of order 1e7 logical qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceConstants {
    pub simplified_shower_gates: u64,
    pub full_shower_gates_order: f64,
    pub jlp_logical_qubits_order: f64,
}

pub const REFERENCE_CONSTANTS: ReferenceConstants = ReferenceConstants {
    simplified_shower_gates: 53,
    full_shower_gates_order: 1e4,
    jlp_logical_qubits_order: 1e7,
};

/// Aggregated feasibility estimate for a parton shower instance on a
/// calibrated device. Circuit-level fields stay `None` for the shower,
/// which is sized from its register model rather than a built circuit.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub registers: RegisterBudget,
    pub costs: ShowerCosts,
    /// First flavor count with quantum advantage in the scanned range.
    pub crossover: Option<u64>,
    pub device_qubits: usize,
    /// Years until the roadmap supplies `registers.total_dominant`
    /// qubits; absent when no crossover was found.
    pub projected_years: Option<f64>,
    pub max_reliable_depth: DepthLimit,
    pub logical_census: Option<crate::circuit::GateCensus>,
    pub routed_census: Option<crate::circuit::GateCensus>,
    pub success_probability: Option<f64>,
    pub reference: ReferenceConstants,
}

/// Builds the full shower feasibility picture: register budget, cost
/// curves, crossover scan, depth limit at `threshold`, and the roadmap
/// projection for the dominant register total.
pub fn advantage_report(
    params: &PartonShowerParams,
    device: &DeviceModel,
    roadmap: &RoadmapModel,
    threshold: f64,
    range: RangeInclusive<u64>,
) -> Result<FeasibilityReport, EstimatorError> {
    let registers = parton_shower_registers(params);
    let costs = parton_shower_costs(params)?;
    let crossover = find_crossover(&ComplexityModel::parton_shower(), range)?;
    let projected_years = crossover.map(|_| roadmap.years_until(registers.total_dominant as f64));
    Ok(FeasibilityReport {
        registers,
        costs,
        crossover,
        device_qubits: device.qubit_count(),
        projected_years,
        max_reliable_depth: max_reliable_depth(device, threshold),
        logical_census: None,
        routed_census: None,
        success_probability: None,
        reference: REFERENCE_CONSTANTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Axis, Gate};
    use crate::device::{builtin_johannesburg, parse_calibration};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        libm::fabs(a - b) < tol
    }

    #[test]
    fn shower_crossover_is_21() {
        let m = ComplexityModel::parton_shower();
        assert_eq!(find_crossover(&m, 2..=64), Ok(Some(21)));
        assert!(m.quantum_cost(21) < m.classical_cost(21));
        assert!(m.quantum_cost(20) >= m.classical_cost(20));
    }

    #[test]
    fn grover_crossover_is_2() {
        let m = ComplexityModel::grover();
        assert_eq!(find_crossover(&m, 1..=16), Ok(Some(2)));
        assert_eq!(m.quantum_cost(1), m.classical_cost(1));
    }

    #[test]
    fn hhl_crossover_is_36() {
        let m = ComplexityModel::hhl(10.0).unwrap();
        assert_eq!(find_crossover(&m, 2..=100), Ok(Some(36)));
        assert_eq!(
            ComplexityModel::hhl(0.5).unwrap_err(),
            EstimatorError::InvalidConditionNumber { kappa: 0.5 }
        );
    }

    #[test]
    fn crossover_range_errors() {
        let m = ComplexityModel::parton_shower();
        assert_eq!(
            find_crossover(&m, 10..=2),
            Err(EstimatorError::EmptyRange { min: 10, max: 2 })
        );
        assert_eq!(
            find_crossover(&m, 1..=64),
            Err(EstimatorError::BelowDomain { min: 1, domain_min: 2 })
        );
        let overflowing =
            ComplexityModel::new("blowup", "n", 1, |n| libm::exp2(n as f64), |_| 1.0);
        assert_eq!(
            find_crossover(&overflowing, 2..=2000),
            Err(EstimatorError::NonFiniteCost { n: 1024 })
        );
    }

    #[test]
    fn crossover_none_when_range_stops_short() {
        let m = ComplexityModel::parton_shower();
        assert_eq!(find_crossover(&m, 2..=20), Ok(None));
    }

    #[test]
    fn crossover_scale_invariance() {
        let base = ComplexityModel::parton_shower();
        let scaled = ComplexityModel::new(
            "shower-x4",
            "n_f",
            2,
            |n| 4.0 * ComplexityModel::parton_shower().quantum_cost(n),
            |n| 4.0 * ComplexityModel::parton_shower().classical_cost(n),
        );
        assert_eq!(
            find_crossover(&base, 2..=64),
            find_crossover(&scaled, 2..=64)
        );
    }

    #[test]
    fn roadmap_years() {
        let r = RoadmapModel::new(1e3, 2.0).unwrap();
        assert!(close(r.years_until(1e7), 26.575424759098897, 1e-9));
        let r = RoadmapModel::new(1e2, 1.0).unwrap();
        assert!(close(r.years_until(1e5), 9.965784284662087, 1e-9));
        let r = RoadmapModel::new(5.0, 2.0).unwrap();
        assert!(close(r.years_until(17.0), 3.531069492725954, 1e-9));
    }

    #[test]
    fn roadmap_already_sufficient_is_exactly_zero() {
        let r = RoadmapModel::new(100.0, 2.0).unwrap();
        assert_eq!(r.years_until(100.0), 0.0);
        assert_eq!(r.years_until(17.0), 0.0);
    }

    #[test]
    fn roadmap_validation() {
        assert!(RoadmapModel::new(0.0, 2.0).is_err());
        assert!(RoadmapModel::new(f64::INFINITY, 2.0).is_err());
        assert!(RoadmapModel::new(5.0, 0.0).is_err());
        assert!(RoadmapModel::new(5.0, -1.0).is_err());
    }

    #[test]
    fn empty_circuit_succeeds_certainly() {
        let d = builtin_johannesburg();
        let p = success_probability(&Circuit::new(5), &d, &QubitMapping::identity(5)).unwrap();
        assert_eq!(p, 1.0);
    }

    #[test]
    fn cx_and_measure_pair_on_johannesburg() {
        let d = builtin_johannesburg();
        let mut c = Circuit::new(5);
        // Nodes 3 and 4 are ids 12 and 13.
        c.push(Gate::controlled_not(3, 4));
        c.push(Gate::measure(3));
        c.push(Gate::measure(4));
        let p = success_probability(&c, &d, &QubitMapping::identity(5)).unwrap();
        assert!(close(p, 0.7698648643952007, 1e-12), "got {}", p);
    }

    #[test]
    fn mapping_redirects_calibration_lookup() {
        let d = builtin_johannesburg();
        let mut c = Circuit::new(5);
        c.push(Gate::controlled_not(0, 1));
        // Identity placement puts the pair on uncoupled ids (7, 10).
        assert_eq!(
            success_probability(&c, &d, &QubitMapping::identity(5)),
            Err(EstimatorError::MissingTwoQubitCal { a: 7, b: 10 })
        );
        // Sending 0 -> node 3 and 1 -> node 4 lands on the (12, 13) cx.
        let m = QubitMapping::new(alloc::vec![3, 4, 0, 1, 2]).unwrap();
        let p = success_probability(&c, &d, &m).unwrap();
        let expected = (1.0 - 0.0167)
            * libm::exp(-0.3484444 / 13.577)
            * libm::exp(-0.3484444 / 17.041);
        assert!(close(p, expected, 1e-12), "got {}", p);
    }

    #[test]
    fn total_gate_error_absorbs() {
        let d = parse_calibration(
            "device broken\n\
             qubit 0 t1_us=50 t2_us=50 readout_err=0.1 p01=0.1 p10=0.1\n\
             gate u3 0 err=1 dur_ns=10\n",
        )
        .unwrap();
        let mut c = Circuit::new(1);
        c.push(Gate::hadamard(0));
        let p = success_probability(&c, &d, &QubitMapping::identity(1)).unwrap();
        assert_eq!(p, 0.0);
    }

    #[test]
    fn appending_gates_never_raises_probability() {
        let d = builtin_johannesburg();
        let m = QubitMapping::identity(5);
        let mut c = Circuit::new(5);
        let mut last = 1.0;
        let additions = [
            Gate::hadamard(3),
            Gate::controlled_not(3, 4),
            Gate::rotation(Axis::Z, 0.5, 4),
            Gate::controlled_not(2, 3),
            Gate::measure(4),
            Gate::measure(3),
        ];
        for g in additions {
            c.push(g);
            let p = success_probability(&c, &d, &m).unwrap();
            assert!(p <= last);
            last = p;
        }
        assert!(last > 0.0 && last < 1.0);
    }

    #[test]
    fn schedule_uses_durations_not_gate_counts() {
        // Two parallel single-qubit gates must not dephase twice as
        // long as one.
        let d = parse_calibration(
            "device toy\n\
             qubit 0 t1_us=50 t2_us=10 readout_err=0 p01=0 p10=0\n\
             qubit 1 t1_us=50 t2_us=10 readout_err=0 p01=0 p10=0\n\
             gate u3 0 err=0 dur_ns=1000\n\
             gate u3 1 err=0 dur_ns=1000\n",
        )
        .unwrap();
        let mut parallel = Circuit::new(2);
        parallel.push(Gate::pauli_x(0));
        parallel.push(Gate::pauli_x(1));
        let p = success_probability(&parallel, &d, &QubitMapping::identity(2)).unwrap();
        // Each qubit is busy for 1 us against T2 = 10 us.
        assert!(close(p, libm::exp(-0.2), 1e-12));

        let mut serial = Circuit::new(2);
        serial.push(Gate::pauli_x(0));
        serial.push(Gate::pauli_x(0));
        let q = success_probability(&serial, &d, &QubitMapping::identity(2)).unwrap();
        assert!(close(q, libm::exp(-0.2), 1e-12));
    }

    #[test]
    fn undecomposed_gates_are_rejected() {
        let d = builtin_johannesburg();
        let mut c = Circuit::new(5);
        c.push(Gate::swap(3, 4));
        assert_eq!(
            success_probability(&c, &d, &QubitMapping::identity(5)),
            Err(EstimatorError::NotDecomposed { class: GateClass::Swap })
        );
    }

    #[test]
    fn depth_limit_on_johannesburg() {
        let d = builtin_johannesburg();
        assert_eq!(max_reliable_depth(&d, 2.0 / 3.0), DepthLimit::Layers(7));

        // Verify by direct product of the per-layer survival factor.
        let a = d.averages();
        let survival = (1.0 - a.two_qubit_error.unwrap())
            * libm::exp(-(a.two_qubit_duration_ns.unwrap() / 1000.0) / a.t2_us);
        let mut product = 1.0;
        for _ in 0..7 {
            product *= survival;
        }
        assert!(product >= 2.0 / 3.0);
        assert!(product * survival < 2.0 / 3.0);
    }

    #[test]
    fn depth_limit_edges() {
        let d = builtin_johannesburg();
        assert_eq!(max_reliable_depth(&d, 0.9999999), DepthLimit::Layers(0));
        let lossless = parse_calibration(
            "device ideal\nqubit 0 t1_us=50 t2_us=50 readout_err=0 p01=0 p10=0\n",
        )
        .unwrap();
        assert_eq!(max_reliable_depth(&lossless, 2.0 / 3.0), DepthLimit::Unlimited);
    }

    #[test]
    fn depth_limit_monotone_in_threshold() {
        let d = builtin_johannesburg();
        let mut last = u64::MAX;
        for threshold in [0.01, 0.1, 0.5, 2.0 / 3.0, 0.9, 0.99] {
            match max_reliable_depth(&d, threshold) {
                DepthLimit::Layers(k) => {
                    assert!(k <= last);
                    last = k;
                }
                DepthLimit::Unlimited => panic!("lossy device reported unlimited"),
            }
        }
    }

    #[test]
    fn advantage_report_composition() {
        let p = PartonShowerParams::new(4, 1, 25, true).unwrap();
        let d = builtin_johannesburg();
        let r = RoadmapModel::new(d.qubit_count() as f64, 2.0).unwrap();
        let report = advantage_report(&p, &d, &r, 2.0 / 3.0, 2..=64).unwrap();
        assert_eq!(report.registers.total_dominant, 17);
        assert_eq!(report.crossover, Some(21));
        assert_eq!(report.device_qubits, 5);
        assert!(close(report.projected_years.unwrap(), 3.531069492725954, 1e-9));
        assert_eq!(report.max_reliable_depth, DepthLimit::Layers(7));
        assert_eq!(report.reference.simplified_shower_gates, 53);
        assert_eq!(report.reference.full_shower_gates_order, 1e4);
        assert_eq!(report.reference.jlp_logical_qubits_order, 1e7);
        assert_eq!(report.success_probability, None);
    }

    #[test]
    fn advantage_report_without_crossover_omits_projection() {
        let p = PartonShowerParams::new(4, 1, 25, true).unwrap();
        let d = builtin_johannesburg();
        let r = RoadmapModel::new(5.0, 2.0).unwrap();
        let report = advantage_report(&p, &d, &r, 2.0 / 3.0, 2..=10).unwrap();
        assert_eq!(report.crossover, None);
        assert_eq!(report.projected_years, None);
    }

    #[test]
    fn advantage_report_zero_years_when_device_suffices() {
        let p = PartonShowerParams::new(1, 1, 21, true).unwrap();
        let d = builtin_johannesburg();
        let r = RoadmapModel::new(100.0, 2.0).unwrap();
        let report = advantage_report(&p, &d, &r, 2.0 / 3.0, 2..=64).unwrap();
        assert_eq!(report.projected_years, Some(0.0));
    }
}
