//! Device calibration snapshots: a line-oriented text format, computed
//! averages with comparison against vendor-reported figures, and an
//! embedded snapshot of a five-qubit subset of IBM Q Johannesburg.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::routing::CouplingGraph;

/// Coherence times, readout fidelity, and excitation asymmetry of one
/// physical qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitCal {
    pub t1_us: f64,
    pub t2_us: f64,
    pub readout_err: f64,
    /// P(read 1 | prepared 0).
    pub p01: f64,
    /// P(read 0 | prepared 1).
    pub p10: f64,
}

/// Error rate and duration of one calibrated gate. Two-qubit entries
/// are symmetric: the pair may be looked up in either order.
#[derive(Debug, Clone, PartialEq)]
pub struct GateCal {
    pub name: String,
    pub qubits: Vec<u32>,
    pub error: f64,
    pub duration_ns: f64,
}

/// Parsed calibration snapshot of one device.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviceModel {
    name: String,
    qubits: BTreeMap<u32, QubitCal>,
    gates: Vec<GateCal>,
    ids: Vec<u32>,
    graph: CouplingGraph,
}

impl DeviceModel {
    fn from_parts(
        name: String,
        qubits: BTreeMap<u32, QubitCal>,
        gates: Vec<GateCal>,
    ) -> DeviceModel {
        let ids: Vec<u32> = qubits.keys().copied().collect();
        let mut edges = Vec::new();
        for gate in &gates {
            if let [a, b] = gate.qubits[..] {
                let na = ids.binary_search(&a).expect("gate qubits were checked");
                let nb = ids.binary_search(&b).expect("gate qubits were checked");
                edges.push((na, nb));
            }
        }
        let graph = CouplingGraph::new(ids.len(), &edges);
        DeviceModel { name, qubits, gates, ids, graph }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn qubit_count(&self) -> usize {
        self.ids.len()
    }

    /// Calibrated qubit ids in ascending order. Graph node `i`
    /// corresponds to `qubit_ids()[i]`.
    pub fn qubit_ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn qubit(&self, id: u32) -> Option<&QubitCal> {
        self.qubits.get(&id)
    }

    pub fn gates(&self) -> &[GateCal] {
        &self.gates
    }

    /// Graph node index of a qubit id.
    pub fn node_of(&self, id: u32) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    /// Qubit id sitting at a graph node index.
    pub fn id_of(&self, node: usize) -> u32 {
        self.ids[node]
    }

    /// Connectivity induced by the two-qubit gate entries, over node
    /// indices `0..qubit_count()`.
    pub fn coupling_graph(&self) -> &CouplingGraph {
        &self.graph
    }

    /// Looks up a calibrated gate by name and qubit set; two-qubit
    /// pairs match in either order.
    pub fn gate(&self, name: &str, qubits: &[u32]) -> Option<&GateCal> {
        self.gates.iter().find(|g| {
            g.name == name
                && g.qubits.len() == qubits.len()
                && match g.qubits[..] {
                    [q] => qubits == [q],
                    [a, b] => qubits == [a, b] || qubits == [b, a],
                    _ => false,
                }
        })
    }

    /// First calibrated single-qubit gate on the given qubit.
    pub fn single_qubit_cal(&self, id: u32) -> Option<&GateCal> {
        self.gates.iter().find(|g| g.qubits[..] == [id])
    }

    /// Calibrated two-qubit gate on the given pair, in either order.
    pub fn two_qubit_cal(&self, a: u32, b: u32) -> Option<&GateCal> {
        self.gates
            .iter()
            .find(|g| g.qubits[..] == [a, b] || g.qubits[..] == [b, a])
    }

    /// Unweighted means over all calibrated qubits and gates. Gate
    /// figures are `None` when no gate of that arity is calibrated.
    pub fn averages(&self) -> DeviceAverages {
        let n = self.qubits.len() as f64;
        let mut t1 = 0.0;
        let mut t2 = 0.0;
        let mut readout = 0.0;
        let mut p01 = 0.0;
        let mut p10 = 0.0;
        for q in self.qubits.values() {
            t1 += q.t1_us;
            t2 += q.t2_us;
            readout += q.readout_err;
            p01 += q.p01;
            p10 += q.p10;
        }
        let gate_mean = |arity: usize, value: fn(&GateCal) -> f64| -> Option<f64> {
            let mut sum = 0.0;
            let mut count = 0usize;
            for g in self.gates.iter().filter(|g| g.qubits.len() == arity) {
                sum += value(g);
                count += 1;
            }
            if count == 0 {
                None
            } else {
                Some(sum / count as f64)
            }
        };
        DeviceAverages {
            t1_us: t1 / n,
            t2_us: t2 / n,
            readout_err: readout / n,
            p01: p01 / n,
            p10: p10 / n,
            single_qubit_error: gate_mean(1, |g| g.error),
            single_qubit_duration_ns: gate_mean(1, |g| g.duration_ns),
            two_qubit_error: gate_mean(2, |g| g.error),
            two_qubit_duration_ns: gate_mean(2, |g| g.duration_ns),
        }
    }

    /// Suspicious but syntactically valid calibration entries, in
    /// ascending qubit order.
    pub fn warnings(&self) -> Vec<CalibrationWarning> {
        let mut out = Vec::new();
        for (&id, q) in &self.qubits {
            if q.readout_err > 0.5 {
                out.push(CalibrationWarning::AnomalousReadout {
                    qubit: id,
                    readout_err: q.readout_err,
                });
            }
            if q.t2_us > 2.0 * q.t1_us {
                out.push(CalibrationWarning::CoherenceBound {
                    qubit: id,
                    t1_us: q.t1_us,
                    t2_us: q.t2_us,
                });
            }
        }
        out
    }

    /// Renders the model back into the calibration text format. The
    /// output parses to an equal model.
    pub fn serialize(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "device {}", self.name);
        for (&id, q) in &self.qubits {
            let _ = writeln!(
                out,
                "qubit {} t1_us={} t2_us={} readout_err={} p01={} p10={}",
                id, q.t1_us, q.t2_us, q.readout_err, q.p01, q.p10
            );
        }
        for g in &self.gates {
            let _ = write!(out, "gate {}", g.name);
            for q in &g.qubits {
                let _ = write!(out, " {}", q);
            }
            let _ = writeln!(out, " err={} dur_ns={}", g.error, g.duration_ns);
        }
        out
    }
}

/// Per-device means produced by [`DeviceModel::averages`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceAverages {
    pub t1_us: f64,
    pub t2_us: f64,
    pub readout_err: f64,
    pub p01: f64,
    pub p10: f64,
    pub single_qubit_error: Option<f64>,
    pub single_qubit_duration_ns: Option<f64>,
    pub two_qubit_error: Option<f64>,
    pub two_qubit_duration_ns: Option<f64>,
}

/// Averages as published by the vendor, for cross-checking a parsed
/// snapshot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportedAverages {
    pub t1_us: f64,
    pub t2_us: f64,
    pub readout_err: f64,
    pub p01: f64,
    pub p10: f64,
    pub single_qubit_error: f64,
    pub single_qubit_duration_ns: f64,
    pub two_qubit_error: f64,
    pub two_qubit_duration_ns: f64,
}

/// Vendor-published averages accompanying the embedded Johannesburg
/// snapshot.
pub const JOHANNESBURG_REPORTED: ReportedAverages = ReportedAverages {
    t1_us: 61.303,
    t2_us: 13.106,
    readout_err: 0.418,
    p01: 0.083,
    p10: 0.087,
    single_qubit_error: 0.0017,
    single_qubit_duration_ns: 71.111,
    two_qubit_error: 0.0209,
    two_qubit_duration_ns: 393.9556,
};

/// Computed and reported values disagree by more than the tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AverageDiscrepancy {
    pub field: &'static str,
    pub computed: f64,
    pub reported: f64,
}

/// Largest accepted gap between a computed and a reported average.
pub const AVERAGE_TOLERANCE: f64 = 0.001;

impl DeviceAverages {
    /// Fields whose computed mean differs from the reported one by
    /// strictly more than [`AVERAGE_TOLERANCE`]. Fields with no
    /// computed value are skipped.
    pub fn discrepancies(&self, reported: &ReportedAverages) -> Vec<AverageDiscrepancy> {
        let pairs = [
            ("t1_us", Some(self.t1_us), reported.t1_us),
            ("t2_us", Some(self.t2_us), reported.t2_us),
            ("readout_err", Some(self.readout_err), reported.readout_err),
            ("p01", Some(self.p01), reported.p01),
            ("p10", Some(self.p10), reported.p10),
            (
                "single_qubit_error",
                self.single_qubit_error,
                reported.single_qubit_error,
            ),
            (
                "single_qubit_duration_ns",
                self.single_qubit_duration_ns,
                reported.single_qubit_duration_ns,
            ),
            ("two_qubit_error", self.two_qubit_error, reported.two_qubit_error),
            (
                "two_qubit_duration_ns",
                self.two_qubit_duration_ns,
                reported.two_qubit_duration_ns,
            ),
        ];
        let mut out = Vec::new();
        for (field, computed, reported) in pairs {
            if let Some(computed) = computed {
                if libm::fabs(computed - reported) > AVERAGE_TOLERANCE {
                    out.push(AverageDiscrepancy { field, computed, reported });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CalibrationWarning {
    /// Readout error above one half reads better inverted; almost
    /// certainly a calibration artifact.
    AnomalousReadout { qubit: u32, readout_err: f64 },
    /// T2 exceeds the physical bound of twice T1.
    CoherenceBound { qubit: u32, t1_us: f64, t2_us: f64 },
}

impl fmt::Display for CalibrationWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalibrationWarning::AnomalousReadout { qubit, readout_err } => write!(
                f,
                "qubit {}: readout error {} exceeds 0.5",
                qubit, readout_err
            ),
            CalibrationWarning::CoherenceBound { qubit, t1_us, t2_us } => write!(
                f,
                "qubit {}: t2 {}us exceeds twice t1 {}us",
                qubit, t2_us, t1_us
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationError {
    /// 1-based line number, or 0 for whole-file problems.
    pub line: usize,
    pub kind: CalibrationErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CalibrationErrorKind {
    MissingDeviceHeader,
    DuplicateDeviceHeader,
    MissingDeviceName,
    TrailingTokens,
    UnknownDirective(String),
    MissingQubitId,
    InvalidQubitId(String),
    DuplicateQubit { id: u32 },
    MalformedField(String),
    UnknownField(String),
    DuplicateField(String),
    MissingField(&'static str),
    InvalidNumber(String),
    OutOfRange { field: &'static str, value: f64 },
    MissingGateName,
    GateArity { count: usize },
    SelfLoop { id: u32 },
    DuplicateGate(String),
    UnknownQubit { id: u32 },
    NoQubits,
}

impl fmt::Display for CalibrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.kind)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

impl fmt::Display for CalibrationErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CalibrationErrorKind::*;
        match self {
            MissingDeviceHeader => write!(f, "expected 'device <name>' before other entries"),
            DuplicateDeviceHeader => write!(f, "second 'device' line"),
            MissingDeviceName => write!(f, "'device' needs a name"),
            TrailingTokens => write!(f, "unexpected trailing tokens"),
            UnknownDirective(d) => write!(f, "unknown directive '{}'", d),
            MissingQubitId => write!(f, "'qubit' needs an id"),
            InvalidQubitId(t) => write!(f, "'{}' is not a qubit id", t),
            DuplicateQubit { id } => write!(f, "qubit {} calibrated twice", id),
            MalformedField(t) => write!(f, "expected key=value, found '{}'", t),
            UnknownField(k) => write!(f, "unknown field '{}'", k),
            DuplicateField(k) => write!(f, "field '{}' given twice", k),
            MissingField(k) => write!(f, "missing field '{}'", k),
            InvalidNumber(t) => write!(f, "'{}' is not a number", t),
            OutOfRange { field, value } => {
                write!(f, "field '{}' value {} out of range", field, value)
            }
            MissingGateName => write!(f, "'gate' needs a name"),
            GateArity { count } => write!(f, "gates take 1 or 2 qubits, found {}", count),
            SelfLoop { id } => write!(f, "two-qubit gate with both qubits = {}", id),
            DuplicateGate(name) => write!(f, "gate '{}' calibrated twice on the same qubits", name),
            UnknownQubit { id } => write!(f, "gate references uncalibrated qubit {}", id),
            NoQubits => write!(f, "no qubits calibrated"),
        }
    }
}

fn at(line: usize, kind: CalibrationErrorKind) -> CalibrationError {
    CalibrationError { line, kind }
}

fn check_probability(field: &'static str, value: f64, line: usize) -> Result<(), CalibrationError> {
    if value.is_finite() && (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(at(line, CalibrationErrorKind::OutOfRange { field, value }))
    }
}

fn check_positive(field: &'static str, value: f64, line: usize) -> Result<(), CalibrationError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(at(line, CalibrationErrorKind::OutOfRange { field, value }))
    }
}

fn parse_kv_fields<'a, const N: usize>(
    tokens: impl Iterator<Item = &'a str>,
    keys: [&'static str; N],
    line: usize,
) -> Result<[f64; N], CalibrationError> {
    let mut values = [None; N];
    for token in tokens {
        let (key, raw) = token
            .split_once('=')
            .ok_or_else(|| at(line, CalibrationErrorKind::MalformedField(token.to_string())))?;
        let slot = keys
            .iter()
            .position(|&k| k == key)
            .ok_or_else(|| at(line, CalibrationErrorKind::UnknownField(key.to_string())))?;
        if values[slot].is_some() {
            return Err(at(line, CalibrationErrorKind::DuplicateField(key.to_string())));
        }
        let value: f64 = raw
            .parse()
            .map_err(|_| at(line, CalibrationErrorKind::InvalidNumber(raw.to_string())))?;
        values[slot] = Some(value);
    }
    let mut out = [0.0; N];
    for (i, value) in values.into_iter().enumerate() {
        out[i] = value.ok_or_else(|| at(line, CalibrationErrorKind::MissingField(keys[i])))?;
    }
    Ok(out)
}

/// Parses the calibration text format.
///
/// Lines hold one entry each; `#` starts a comment; blank lines are
/// skipped. The first entry must be `device <name>`, followed in any
/// order by `qubit <id> t1_us= t2_us= readout_err= p01= p10=` and
/// `gate <name> <id> [<id>] err= dur_ns=` entries. Every gate qubit
/// must have a `qubit` entry somewhere in the file.
pub fn parse_calibration(text: &str) -> Result<DeviceModel, CalibrationError> {
    let mut name: Option<String> = None;
    let mut qubits: BTreeMap<u32, QubitCal> = BTreeMap::new();
    let mut gates: Vec<GateCal> = Vec::new();
    let mut gate_lines: Vec<usize> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.find('#').map_or(raw, |i| &raw[..i]).trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let directive = tokens.next().expect("nonempty line");
        match directive {
            "device" => {
                if name.is_some() {
                    return Err(at(line, CalibrationErrorKind::DuplicateDeviceHeader));
                }
                let device_name = tokens
                    .next()
                    .ok_or_else(|| at(line, CalibrationErrorKind::MissingDeviceName))?;
                if tokens.next().is_some() {
                    return Err(at(line, CalibrationErrorKind::TrailingTokens));
                }
                name = Some(device_name.to_string());
            }
            "qubit" => {
                if name.is_none() {
                    return Err(at(line, CalibrationErrorKind::MissingDeviceHeader));
                }
                let id_text = tokens
                    .next()
                    .ok_or_else(|| at(line, CalibrationErrorKind::MissingQubitId))?;
                let id: u32 = id_text.parse().map_err(|_| {
                    at(line, CalibrationErrorKind::InvalidQubitId(id_text.to_string()))
                })?;
                if qubits.contains_key(&id) {
                    return Err(at(line, CalibrationErrorKind::DuplicateQubit { id }));
                }
                let [t1_us, t2_us, readout_err, p01, p10] = parse_kv_fields(
                    tokens,
                    ["t1_us", "t2_us", "readout_err", "p01", "p10"],
                    line,
                )?;
                check_positive("t1_us", t1_us, line)?;
                check_positive("t2_us", t2_us, line)?;
                check_probability("readout_err", readout_err, line)?;
                check_probability("p01", p01, line)?;
                check_probability("p10", p10, line)?;
                qubits.insert(id, QubitCal { t1_us, t2_us, readout_err, p01, p10 });
            }
            "gate" => {
                if name.is_none() {
                    return Err(at(line, CalibrationErrorKind::MissingDeviceHeader));
                }
                let gate_name = tokens
                    .next()
                    .ok_or_else(|| at(line, CalibrationErrorKind::MissingGateName))?;
                let rest: Vec<&str> = tokens.collect();
                let id_count = rest.iter().take_while(|t| !t.contains('=')).count();
                if id_count == 0 || id_count > 2 {
                    return Err(at(line, CalibrationErrorKind::GateArity { count: id_count }));
                }
                let mut ids = Vec::with_capacity(id_count);
                for text in &rest[..id_count] {
                    let id: u32 = text.parse().map_err(|_| {
                        at(line, CalibrationErrorKind::InvalidQubitId(text.to_string()))
                    })?;
                    ids.push(id);
                }
                if ids.len() == 2 && ids[0] == ids[1] {
                    return Err(at(line, CalibrationErrorKind::SelfLoop { id: ids[0] }));
                }
                let [error, duration_ns] =
                    parse_kv_fields(rest[id_count..].iter().copied(), ["err", "dur_ns"], line)?;
                check_probability("err", error, line)?;
                check_positive("dur_ns", duration_ns, line)?;
                let same_qubits = |g: &GateCal| match (&g.qubits[..], &ids[..]) {
                    ([a], [b]) => a == b,
                    ([a, b], [c, d]) => (a, b) == (c, d) || (a, b) == (d, c),
                    _ => false,
                };
                if gates.iter().any(|g| g.name == gate_name && same_qubits(g)) {
                    return Err(at(
                        line,
                        CalibrationErrorKind::DuplicateGate(gate_name.to_string()),
                    ));
                }
                gates.push(GateCal {
                    name: gate_name.to_string(),
                    qubits: ids,
                    error,
                    duration_ns,
                });
                gate_lines.push(line);
            }
            other => {
                return Err(at(
                    line,
                    CalibrationErrorKind::UnknownDirective(other.to_string()),
                ));
            }
        }
    }

    let name = name.ok_or_else(|| at(0, CalibrationErrorKind::MissingDeviceHeader))?;
    if qubits.is_empty() {
        return Err(at(0, CalibrationErrorKind::NoQubits));
    }
    for (gate, &line) in gates.iter().zip(&gate_lines) {
        for &id in &gate.qubits {
            if !qubits.contains_key(&id) {
                return Err(at(line, CalibrationErrorKind::UnknownQubit { id }));
            }
        }
    }

    Ok(DeviceModel::from_parts(name, qubits, gates))
}

const JOHANNESBURG_CAL: &str = include_str!("../data/johannesburg.cal");

/// The embedded Johannesburg snapshot.
pub fn builtin_johannesburg() -> DeviceModel {
    parse_calibration(JOHANNESBURG_CAL).expect("embedded calibration is well formed")
}

/// Looks up an embedded device snapshot by name.
pub fn builtin(name: &str) -> Option<DeviceModel> {
    match name {
        "johannesburg" | "ibmq_johannesburg" => Some(builtin_johannesburg()),
        _ => None,
    }
}

/// Names accepted by [`builtin`], one per device.
pub const BUILTIN_NAMES: &[&str] = &["johannesburg"];
