//! Exit-code contract and output-shape checks for the command-line
//! interface, focusing on the paths the acceptance suite does not hit.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qscale(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qscale"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = qscale(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    qscale(args).status.code().expect("no signal")
}

fn write_cal(name: &str, text: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
    assert_eq!(exit_code(&["qft-sweep", "--help"]), 0);
}

#[test]
fn parse_failures_exit_one() {
    assert_eq!(exit_code(&[]), 1);
    assert_eq!(exit_code(&["qft-sweep", "five", "8"]), 1);
    assert_eq!(exit_code(&["frobnicate"]), 1);
    // --device and --builtin are mutually exclusive.
    assert_eq!(
        exit_code(&["device", "--device", "x.cal", "--builtin", "johannesburg"]),
        1
    );
}

#[test]
fn usage_violations_exit_one() {
    assert_eq!(exit_code(&["qft-sweep", "5", "3"]), 1);
    assert_eq!(exit_code(&["qft-sweep", "0", "3"]), 1);
    assert_eq!(exit_code(&["qft-sweep", "5", "33"]), 1);
    assert_eq!(exit_code(&["crossover", "warp", "2", "64"]), 1);
    assert_eq!(exit_code(&["crossover", "hhl", "2", "64"]), 1);
    assert_eq!(exit_code(&["crossover", "grover", "--param", "3", "2", "64"]), 1);
    assert_eq!(exit_code(&["crossover", "shower", "64", "2"]), 1);
    assert_eq!(exit_code(&["project", "-5"]), 1);
    assert_eq!(exit_code(&["project", "100", "--current", "0"]), 1);
    assert_eq!(exit_code(&["shower", "4", "1", "25", "--period", "0"]), 1);
    assert_eq!(exit_code(&["shower", "4", "1", "25", "--threshold", "1.5"]), 1);
    assert_eq!(exit_code(&["device"]), 1);
}

#[test]
fn input_violations_exit_two() {
    assert_eq!(exit_code(&["device", "does-not-exist.cal"]), 2);
    assert_eq!(exit_code(&["device", "--builtin", "nairobi"]), 2);
    assert_eq!(exit_code(&["shower", "4", "1", "1"]), 2);
    assert_eq!(exit_code(&["shower", "0", "1", "25"]), 2);
    assert_eq!(exit_code(&["grover", "13"]), 2);
    assert_eq!(exit_code(&["grover", "2", "--marked", "4"]), 2);
    assert_eq!(exit_code(&["crossover", "shower", "1", "64"]), 2);
    assert_eq!(exit_code(&["crossover", "hhl", "--param", "0.5", "2", "64"]), 2);

    let bad = write_cal("bad.cal", "device x\nqubit 0 t1_us=1\n");
    assert_eq!(exit_code(&["device", &bad]), 2);

    let small = write_cal(
        "small.cal",
        "device small\nqubit 0 t1_us=1 t2_us=1 readout_err=0 p01=0 p10=0\n",
    );
    assert_eq!(exit_code(&["qft-sweep", "1", "3", "--device", &small]), 2);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let bad = write_cal("bad_line.cal", "device x\nqubit 0 t1_us=1\n");
    let out = qscale(&["device", &bad]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr was: {}", stderr);
}

#[test]
fn sweep_row_shape() {
    let stdout = stdout_of(&["qft-sweep", "1", "1"]);
    assert_eq!(stdout, "n,total_gates,cnot_gates,depth\n1,1,0,1\n");

    let stdout = stdout_of(&["qft-sweep", "5", "5"]);
    assert_eq!(stdout.lines().nth(1), Some("5,17,26,32"));
}

#[test]
fn crossover_reports_absence() {
    let stdout = stdout_of(&["crossover", "shower", "2", "20"]);
    assert_eq!(stdout, "no crossover in range (2 to 20)\n");
}

#[test]
fn crossover_csv_lists_both_cost_columns() {
    let stdout = stdout_of(&["crossover", "grover", "1", "4", "--csv"]);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "quantum advantage from N = 2 (scanned 1 to 4)");
    assert_eq!(lines[1], "N,quantum_cost,classical_cost");
    assert_eq!(lines[2], "1,1,1");
    assert_eq!(lines[3].split(',').next(), Some("2"));
    assert_eq!(lines.len(), 6);
}

#[test]
fn grover_csv_fields() {
    let stdout = stdout_of(&["grover", "2", "--marked", "3", "--csv"]);
    assert!(stdout.starts_with("key,value\n"));
    assert!(stdout.contains("\nstates,4\n"));
    assert!(stdout.contains("\niterations,1\n"));
    assert!(stdout.contains("\ncnot_gates,4\n"));
    let p_line = stdout
        .lines()
        .find(|l| l.starts_with("success_probability,"))
        .expect("probability row present");
    let p: f64 = p_line.split(',').nth(1).unwrap().parse().unwrap();
    assert!((p - 1.0).abs() < 1e-9);
}

#[test]
fn shower_without_device_omits_projection_block() {
    let stdout = stdout_of(&["shower", "1", "1", "2"]);
    assert!(stdout.contains("particle state register: 6 qubits"));
    assert!(stdout.contains("history register: 1 qubits"));
    assert!(!stdout.contains("projected years"));
    assert!(!stdout.contains("device:"));
}

#[test]
fn shower_csv_carries_advantage_fields() {
    let stdout = stdout_of(&[
        "shower", "4", "1", "25", "--mcm", "--builtin", "johannesburg",
    ]);
    assert!(stdout.contains("projected years until 17 qubits (doubling every 2 years): 3.531069492725954"));

    let csv = stdout_of(&[
        "shower", "4", "1", "25", "--mcm", "--builtin", "johannesburg", "--csv",
    ]);
    assert!(csv.contains("\ntotal_dominant_qubits,17\n"));
    assert!(csv.contains("\ncrossover_n_f,21\n"));
    assert!(csv.contains("\ndevice_qubits,5\n"));
    assert!(csv.contains("\nmax_reliable_depth,7\n"));
    assert!(csv.contains("\nprojected_years,3.531069492725954\n"));
    assert!(csv.contains("\nreference_simplified_gates,53\n"));
}

#[test]
fn device_accepts_positional_and_flag_sources() {
    let text = "device tiny\nqubit 4 t1_us=10 t2_us=12 readout_err=0.05 p01=0.04 p10=0.06\n";
    let path = write_cal("tiny.cal", text);
    let positional = stdout_of(&["device", &path]);
    let flagged = stdout_of(&["device", "--device", &path]);
    assert_eq!(positional, flagged);
    assert!(positional.contains("device tiny: 1 qubits, 0 coupled pairs"));
    // A single-qubit custom file averages to its own row and warns
    // about nothing.
    assert!(positional.contains("computed averages: t1_us 10, t2_us 12, readout_err 0.05"));
    assert!(!positional.contains("WARN"));
}

// Mirrors the library example in the README so the snippet cannot
// drift from the real API.
#[test]
fn readme_library_example() {
    use qscale_core::builders::build_qft;
    use qscale_core::device::builtin_johannesburg;
    use qscale_core::estimator::success_probability;
    use qscale_core::routing::{route, QubitMapping};

    let circuit = build_qft(3).unwrap().decompose_to_native();
    let device = builtin_johannesburg();
    let routed = route(&circuit, device.coupling_graph()).unwrap();
    let placement = QubitMapping::identity(device.qubit_count());
    let p = success_probability(&routed.circuit, &device, &placement).unwrap();
    assert!(routed.swaps_inserted > 0);
    assert!(p > 0.0 && p < 1.0);
}

#[test]
fn project_handles_reached_targets() {
    let stdout = stdout_of(&["project", "800", "--current", "1000"]);
    assert!(stdout.ends_with(": 0\n"), "got: {}", stdout);
    let csv = stdout_of(&["project", "1000000", "--csv"]);
    assert_eq!(
        csv,
        "required,current,period_years,years\n1000000,1000,2,19.931568569324174\n"
    );
}
