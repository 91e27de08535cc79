//! Command-line front end: scaling sweeps, search simulation, shower
//! feasibility reports, calibration summaries, crossover scans, and
//! roadmap projections, with CSV output for the sweep-style commands.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use qscale_core::builders::{
    build_grover, build_qft, grover_optimal_iterations, parton_shower_costs,
    parton_shower_registers, qft_counts, PartonShowerParams,
};
use qscale_core::device::{builtin, parse_calibration, DeviceModel, JOHANNESBURG_REPORTED};
use qscale_core::estimator::{
    advantage_report, find_crossover, ComplexityModel, RoadmapModel, DEFAULT_CROSSOVER_RANGE,
    DEFAULT_DOUBLING_PERIOD, DEFAULT_RELIABILITY_THRESHOLD,
};
use qscale_core::routing::route;
use qscale_core::statevector::{simulate, StateVector};

#[derive(Parser)]
#[command(
    name = "qscale",
    version,
    about = "Gate counting, routing, noise estimates, and quantum-vs-classical scaling analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable CSV instead of prose where applicable
    #[arg(long, global = true)]
    csv: bool,

    /// Calibration file to load
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "builtin")]
    device: Option<PathBuf>,

    /// Embedded calibration snapshot to use (e.g. johannesburg)
    #[arg(long, global = true, value_name = "NAME")]
    builtin: Option<String>,

    /// Capability doubling period in years
    #[arg(long, global = true, value_name = "YEARS", default_value_t = DEFAULT_DOUBLING_PERIOD)]
    period: f64,

    /// Reliability threshold for depth estimates, strictly between 0 and 1
    #[arg(long, global = true, value_name = "P", default_value_t = DEFAULT_RELIABILITY_THRESHOLD)]
    threshold: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Emit QFT gate counts over a width range as CSV; with a device,
    /// add a routed CX column
    QftSweep {
        /// Smallest width, at least 1
        min_n: usize,
        /// Largest width, at most 32
        max_n: usize,
    },
    /// Build a Grover search circuit and simulate its success probability
    Grover {
        /// Register width in qubits, 1 to 12
        qubits: usize,
        /// Marked basis state, default 0
        #[arg(long, value_name = "STATE")]
        marked: Option<u64>,
        /// Iteration count, default floor(pi/4 * sqrt(N))
        #[arg(long, value_name = "K")]
        iterations: Option<usize>,
    },
    /// Size a parton shower instance and report quantum advantage
    Shower {
        /// Evolution steps N
        steps: u64,
        /// Initial particles n_I
        initial: u64,
        /// Fermion flavors n_f
        flavors: u64,
        /// Assume mid-circuit measurement and reset of the history register
        #[arg(long)]
        mcm: bool,
    },
    /// Summarize a calibration snapshot and flag suspicious entries
    Device {
        /// Calibration file (alternative to --device/--builtin)
        file: Option<PathBuf>,
    },
    /// Scan for the size where a quantum cost model undercuts the
    /// classical one
    Crossover {
        /// Cost model: shower, grover, or hhl
        model: String,
        /// Smallest size to scan
        min: u64,
        /// Largest size to scan
        max: u64,
        /// Condition number for the hhl model
        #[arg(long, value_name = "KAPPA")]
        param: Option<f64>,
    },
    /// Project years until a capability target under doubling growth
    Project {
        /// Required capability (e.g. qubit count)
        required: f64,
        /// Present capability
        #[arg(long, value_name = "Q", default_value_t = 1000.0)]
        current: f64,
    },
}

enum CliError {
    Usage(String),
    Input(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(&cli) {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            process::exit(1);
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {}", msg);
            process::exit(2);
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if !cli.period.is_finite() || cli.period <= 0.0 {
        return Err(usage(format!("--period must be finite and positive, got {}", cli.period)));
    }
    if !(cli.threshold > 0.0 && cli.threshold < 1.0) {
        return Err(usage(format!(
            "--threshold must lie strictly between 0 and 1, got {}",
            cli.threshold
        )));
    }
    match &cli.command {
        Command::QftSweep { min_n, max_n } => cmd_qft_sweep(cli, *min_n, *max_n),
        Command::Grover { qubits, marked, iterations } => {
            cmd_grover(cli, *qubits, *marked, *iterations)
        }
        Command::Shower { steps, initial, flavors, mcm } => {
            cmd_shower(cli, *steps, *initial, *flavors, *mcm)
        }
        Command::Device { file } => cmd_device(cli, file.as_deref()),
        Command::Crossover { model, min, max, param } => {
            cmd_crossover(cli, model, *min, *max, *param)
        }
        Command::Project { required, current } => cmd_project(cli, *required, *current),
    }
}

/// Loads the device named by `--device` or `--builtin`, if either was
/// given.
fn resolve_device(cli: &Cli) -> Result<Option<DeviceModel>, CliError> {
    if let Some(path) = &cli.device {
        return load_device_file(path).map(Some);
    }
    if let Some(name) = &cli.builtin {
        return builtin(name)
            .map(Some)
            .ok_or_else(|| input(format!("unknown builtin device '{}'", name)));
    }
    Ok(None)
}

fn load_device_file(path: &std::path::Path) -> Result<DeviceModel, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input(format!("{}: {}", path.display(), e)))?;
    parse_calibration(&text).map_err(|e| input(format!("{}: {}", path.display(), e)))
}

fn cmd_qft_sweep(cli: &Cli, min_n: usize, max_n: usize) -> Result<(), CliError> {
    if min_n < 1 || max_n > 32 || min_n > max_n {
        return Err(usage(format!(
            "width range {}..{} is invalid; need 1 <= min <= max <= 32",
            min_n, max_n
        )));
    }
    let device = resolve_device(cli)?;
    if let Some(d) = &device {
        if d.qubit_count() < max_n {
            return Err(input(format!(
                "device {} has {} qubits but the sweep needs {}",
                d.name(),
                d.qubit_count(),
                max_n
            )));
        }
    }

    let mut out = String::new();
    out.push_str("n,total_gates,cnot_gates,depth");
    if device.is_some() {
        out.push_str(",routed_cnot");
    }
    out.push('\n');
    for n in min_n..=max_n {
        let counts = qft_counts(n);
        let native = build_qft(n)
            .map_err(|e| input(e.to_string()))?
            .decompose_to_native();
        let depth = native.census().depth;
        let _ = write!(
            out,
            "{},{},{},{}",
            n,
            counts.logical_total(),
            counts.native_cnot,
            depth
        );
        if let Some(d) = &device {
            let routed = route(&native, d.coupling_graph())
                .map_err(|e| input(format!("routing width {}: {}", n, e)))?;
            let _ = write!(out, ",{}", routed.circuit.census().cnot);
        }
        out.push('\n');
    }
    print!("{}", out);
    Ok(())
}

fn cmd_grover(
    cli: &Cli,
    qubits: usize,
    marked: Option<u64>,
    iterations: Option<usize>,
) -> Result<(), CliError> {
    let marked = marked.unwrap_or(0);
    let states = 1u64.checked_shl(qubits as u32).unwrap_or(0);
    let optimal = if states > 0 { grover_optimal_iterations(states) } else { 0 };
    let iterations = iterations.unwrap_or(optimal as usize);
    let circuit = build_grover(qubits, marked, iterations).map_err(|e| input(e.to_string()))?;
    let census = circuit.census();
    let native = circuit.decompose_to_native();
    let native_census = native.census();
    let final_state = simulate(&circuit, &StateVector::zero(qubits))
        .map_err(|e| input(e.to_string()))?;
    let probability = final_state.measure_probabilities()[marked as usize];

    if cli.csv {
        println!("key,value");
        println!("qubits,{}", qubits);
        println!("states,{}", states);
        println!("marked,{}", marked);
        println!("iterations,{}", iterations);
        println!("optimal_iterations,{}", optimal);
        println!("total_gates,{}", census.total);
        println!("native_gates,{}", native_census.total);
        println!("cnot_gates,{}", native_census.cnot);
        println!("depth,{}", native_census.depth);
        println!("success_probability,{}", probability);
    } else {
        println!(
            "grover search: {} qubits, {} states, marked state {}",
            qubits, states, marked
        );
        println!("iterations: {} (optimal {})", iterations, optimal);
        println!(
            "gates: {} as built, {} native ({} cnot, depth {})",
            census.total, native_census.total, native_census.cnot, native_census.depth
        );
        println!("success probability: {}", probability);
    }
    Ok(())
}

fn cmd_shower(
    cli: &Cli,
    steps: u64,
    initial: u64,
    flavors: u64,
    mcm: bool,
) -> Result<(), CliError> {
    let params = PartonShowerParams::new(steps, initial, flavors, mcm)
        .map_err(|e| input(e.to_string()))?;
    let registers = parton_shower_registers(&params);
    let costs = parton_shower_costs(&params).map_err(|e| input(e.to_string()))?;
    let crossover = find_crossover(&ComplexityModel::parton_shower(), DEFAULT_CROSSOVER_RANGE)
        .map_err(|e| input(e.to_string()))?;
    let device = resolve_device(cli)?;
    let report = match &device {
        Some(d) => {
            let roadmap = RoadmapModel::new(d.qubit_count() as f64, cli.period)
                .map_err(|e| input(e.to_string()))?;
            Some(
                advantage_report(&params, d, &roadmap, cli.threshold, DEFAULT_CROSSOVER_RANGE)
                    .map_err(|e| input(e.to_string()))?,
            )
        }
        None => None,
    };

    let (scan_min, scan_max) = (
        *DEFAULT_CROSSOVER_RANGE.start(),
        *DEFAULT_CROSSOVER_RANGE.end(),
    );
    if cli.csv {
        println!("key,value");
        println!("steps,{}", steps);
        println!("initial_particles,{}", initial);
        println!("fermion_flavors,{}", flavors);
        println!("mid_circuit_measurement,{}", mcm);
        println!("particle_state_qubits,{}", registers.particle_state);
        println!("history_qubits,{}", registers.history);
        println!("total_dominant_qubits,{}", registers.total_dominant);
        println!("quantum_cost,{}", costs.quantum);
        println!("classical_cost,{}", costs.classical);
        match crossover {
            Some(n) => println!("crossover_n_f,{}", n),
            None => println!("crossover_n_f,none"),
        }
        if let Some(r) = &report {
            println!("device_qubits,{}", r.device_qubits);
            println!("max_reliable_depth,{}", r.max_reliable_depth);
            match r.projected_years {
                Some(y) => println!("projected_years,{}", y),
                None => println!("projected_years,none"),
            }
            println!("reference_simplified_gates,{}", r.reference.simplified_shower_gates);
            println!("reference_full_gates_order,{}", r.reference.full_shower_gates_order);
            println!(
                "reference_logical_qubits_order,{}",
                r.reference.jlp_logical_qubits_order
            );
        }
    } else {
        println!(
            "parton shower: N={} steps, n_I={} initial, n_f={} flavors, mid-circuit measurement {}",
            steps,
            initial,
            flavors,
            if mcm { "on" } else { "off" }
        );
        println!("particle state register: {} qubits", registers.particle_state);
        println!("history register: {} qubits", registers.history);
        println!("dominant register total: {} qubits", registers.total_dominant);
        println!("quantum cost: {} gates", costs.quantum);
        println!("classical cost: {} operations", costs.classical);
        match crossover {
            Some(n) => println!(
                "quantum advantage from n_f = {} (scanned {} to {})",
                n, scan_min, scan_max
            ),
            None => println!("no quantum advantage (scanned {} to {})", scan_min, scan_max),
        }
        if let Some(r) = &report {
            let d = device.as_ref().expect("report implies device");
            println!("device: {} with {} qubits", d.name(), r.device_qubits);
            println!(
                "max reliable depth at threshold {}: {} layers",
                cli.threshold, r.max_reliable_depth
            );
            match r.projected_years {
                Some(y) => println!(
                    "projected years until {} qubits (doubling every {} years): {}",
                    r.registers.total_dominant, cli.period, y
                ),
                None => println!("projection omitted: no crossover in the scanned range"),
            }
            println!(
                "reference points: simplified shower {} gates, full shower ~{} gates, fault-tolerant ~{} logical qubits",
                r.reference.simplified_shower_gates,
                r.reference.full_shower_gates_order,
                r.reference.jlp_logical_qubits_order
            );
        }
    }
    Ok(())
}

fn cmd_device(cli: &Cli, file: Option<&std::path::Path>) -> Result<(), CliError> {
    if file.is_some() && (cli.device.is_some() || cli.builtin.is_some()) {
        return Err(usage(
            "give the calibration file either positionally or via --device/--builtin, not both",
        ));
    }
    let model = match file {
        Some(path) => load_device_file(path)?,
        None => resolve_device(cli)?
            .ok_or_else(|| usage("no calibration source; pass a file or --builtin <name>"))?,
    };

    println!(
        "device {}: {} qubits, {} coupled pairs",
        model.name(),
        model.qubit_count(),
        model.coupling_graph().edge_count()
    );
    for &id in model.qubit_ids() {
        let q = model.qubit(id).expect("listed ids are calibrated");
        println!(
            "qubit {}: t1_us {}, t2_us {}, readout_err {}, p01 {}, p10 {}",
            id, q.t1_us, q.t2_us, q.readout_err, q.p01, q.p10
        );
    }
    for gate in model.gates() {
        let mut qubits = String::new();
        for (i, q) in gate.qubits.iter().enumerate() {
            if i > 0 {
                qubits.push(' ');
            }
            let _ = write!(qubits, "{}", q);
        }
        println!(
            "gate {} {}: err {}, dur_ns {}",
            gate.name, qubits, gate.error, gate.duration_ns
        );
    }

    let averages = model.averages();
    println!(
        "computed averages: t1_us {}, t2_us {}, readout_err {}, p01 {}, p10 {}",
        averages.t1_us, averages.t2_us, averages.readout_err, averages.p01, averages.p10
    );
    let mut gate_parts = Vec::new();
    for (label, value) in [
        ("single_qubit_error", averages.single_qubit_error),
        ("single_qubit_duration_ns", averages.single_qubit_duration_ns),
        ("two_qubit_error", averages.two_qubit_error),
        ("two_qubit_duration_ns", averages.two_qubit_duration_ns),
    ] {
        if let Some(v) = value {
            gate_parts.push(format!("{} {}", label, v));
        }
    }
    if !gate_parts.is_empty() {
        println!("computed gate averages: {}", gate_parts.join(", "));
    }

    if model.name() == "ibmq_johannesburg" {
        for d in averages.discrepancies(&JOHANNESBURG_REPORTED) {
            println!(
                "WARN {}: computed {} differs from reported {}",
                d.field, d.computed, d.reported
            );
        }
    }
    for w in model.warnings() {
        println!("WARN {}", w);
    }
    Ok(())
}

fn cmd_crossover(
    cli: &Cli,
    model_name: &str,
    min: u64,
    max: u64,
    param: Option<f64>,
) -> Result<(), CliError> {
    let model = match model_name {
        "shower" | "grover" if param.is_some() => {
            return Err(usage("--param only applies to the hhl model"));
        }
        "shower" => ComplexityModel::parton_shower(),
        "grover" => ComplexityModel::grover(),
        "hhl" => {
            let kappa =
                param.ok_or_else(|| usage("the hhl model needs --param <KAPPA>"))?;
            ComplexityModel::hhl(kappa).map_err(|e| input(e.to_string()))?
        }
        other => {
            return Err(usage(format!(
                "unknown model '{}'; expected shower, grover, or hhl",
                other
            )));
        }
    };
    if min > max {
        return Err(usage(format!("empty scan range {}..{}", min, max)));
    }
    let crossover = find_crossover(&model, min..=max).map_err(|e| input(e.to_string()))?;

    match crossover {
        Some(n) => println!(
            "quantum advantage from {} = {} (scanned {} to {})",
            model.parameter(),
            n,
            min,
            max
        ),
        None => println!("no crossover in range ({} to {})", min, max),
    }
    if cli.csv {
        println!("{},quantum_cost,classical_cost", model.parameter());
        for n in min..=max {
            println!("{},{},{}", n, model.quantum_cost(n), model.classical_cost(n));
        }
    }
    Ok(())
}

fn cmd_project(cli: &Cli, required: f64, current: f64) -> Result<(), CliError> {
    if !required.is_finite() || required <= 0.0 {
        return Err(usage(format!(
            "required capability must be finite and positive, got {}",
            required
        )));
    }
    let roadmap =
        RoadmapModel::new(current, cli.period).map_err(|e| usage(e.to_string()))?;
    let years = roadmap.years_until(required);
    if cli.csv {
        println!("required,current,period_years,years");
        println!("{},{},{},{}", required, current, cli.period, years);
    } else {
        println!(
            "years until {} (current {}, doubling every {} years): {}",
            required, current, cli.period, years
        );
    }
    Ok(())
}
