//! Hardware coupling graphs and a greedy router that rewrites a circuit
//! so every two-qubit gate acts on physically adjacent qubits.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::circuit::{Circuit, Gate, GateClass, GateKind};

/// Undirected connectivity graph over physical qubits `0..nodes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingGraph {
    nodes: usize,
    adjacency: Vec<Vec<usize>>,
    connected: bool,
}

impl CouplingGraph {
    /// Builds a graph from an edge list. Edges are undirected and
    /// deduplicated.
    ///
    /// Panics if `nodes` is zero, an endpoint is out of range, or an
    /// edge is a self-loop.
    pub fn new(nodes: usize, edges: &[(usize, usize)]) -> CouplingGraph {
        assert!(nodes > 0, "coupling graph needs at least one node");
        let mut adjacency = vec![Vec::new(); nodes];
        for &(a, b) in edges {
            assert!(a < nodes && b < nodes, "edge ({}, {}) outside 0..{}", a, b, nodes);
            assert!(a != b, "self-loop on node {}", a);
            if !adjacency[a].contains(&b) {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let connected = check_connected(nodes, &adjacency);
        CouplingGraph { nodes, adjacency, connected }
    }

    /// Path graph `0 - 1 - ... - (n-1)`.
    pub fn line(nodes: usize) -> CouplingGraph {
        let edges: Vec<(usize, usize)> = (1..nodes).map(|i| (i - 1, i)).collect();
        CouplingGraph::new(nodes, &edges)
    }

    /// All-to-all connectivity.
    pub fn complete(nodes: usize) -> CouplingGraph {
        let mut edges = Vec::new();
        for a in 0..nodes {
            for b in a + 1..nodes {
                edges.push((a, b));
            }
        }
        CouplingGraph::new(nodes, &edges)
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Whether every node can reach every other node.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Neighbors of `node` in ascending order.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Shortest path from `from` to `to` inclusive, or `None` if they
    /// are in different components. Breadth-first search expanding
    /// neighbors in ascending order, so among equal-length paths the
    /// lexicographically earliest discovery wins and the result is
    /// deterministic.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        assert!(from < self.nodes && to < self.nodes);
        if from == to {
            return Some(vec![from]);
        }
        let mut parent: Vec<Option<usize>> = vec![None; self.nodes];
        let mut queue = VecDeque::new();
        parent[from] = Some(from);
        queue.push_back(from);
        while let Some(node) = queue.pop_front() {
            for &next in &self.adjacency[node] {
                if parent[next].is_none() {
                    parent[next] = Some(node);
                    if next == to {
                        let mut path = vec![to];
                        let mut cursor = to;
                        while cursor != from {
                            cursor = parent[cursor].expect("walked an unvisited node");
                            path.push(cursor);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(next);
                }
            }
        }
        None
    }
}

fn check_connected(nodes: usize, adjacency: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; nodes];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut count = 1;
    while let Some(node) = queue.pop_front() {
        for &next in &adjacency[node] {
            if !seen[next] {
                seen[next] = true;
                count += 1;
                queue.push_back(next);
            }
        }
    }
    count == nodes
}

/// Bijection between logical qubits and physical nodes, covering the
/// whole device: logical indices past the circuit width ride along as
/// idle placeholders, so the mapping always has one entry per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitMapping {
    logical_to_physical: Vec<usize>,
    physical_to_logical: Vec<usize>,
}

impl QubitMapping {
    /// Logical qubit `q` on physical node `q`.
    pub fn identity(nodes: usize) -> QubitMapping {
        let table: Vec<usize> = (0..nodes).collect();
        QubitMapping {
            logical_to_physical: table.clone(),
            physical_to_logical: table,
        }
    }

    /// Builds a mapping from a logical-to-physical table, which must be
    /// a permutation of `0..len`.
    pub fn new(logical_to_physical: Vec<usize>) -> Option<QubitMapping> {
        let n = logical_to_physical.len();
        let mut inverse = vec![usize::MAX; n];
        for (logical, &physical) in logical_to_physical.iter().enumerate() {
            if physical >= n || inverse[physical] != usize::MAX {
                return None;
            }
            inverse[physical] = logical;
        }
        Some(QubitMapping {
            logical_to_physical,
            physical_to_logical: inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.logical_to_physical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.logical_to_physical.is_empty()
    }

    /// Physical node carrying logical qubit `q`.
    pub fn physical(&self, logical: usize) -> usize {
        self.logical_to_physical[logical]
    }

    /// Logical qubit sitting on physical node `p`.
    pub fn logical(&self, physical: usize) -> usize {
        self.physical_to_logical[physical]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.logical_to_physical
    }

    /// Exchanges the logical occupants of two physical nodes.
    pub fn swap_physical(&mut self, a: usize, b: usize) {
        let la = self.physical_to_logical[a];
        let lb = self.physical_to_logical[b];
        self.physical_to_logical[a] = lb;
        self.physical_to_logical[b] = la;
        self.logical_to_physical[la] = b;
        self.logical_to_physical[lb] = a;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoutingError {
    /// Circuit is wider than the device.
    WidthExceedsDevice { width: usize, nodes: usize },
    /// Circuit still contains a gate outside the native set; decompose
    /// before routing.
    NotDecomposed { class: GateClass },
    /// The two endpoints sit in different components of the graph.
    Disconnected { from: usize, to: usize },
}

impl fmt::Display for RoutingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RoutingError::WidthExceedsDevice { width, nodes } => {
                write!(f, "circuit width {} exceeds device size {}", width, nodes)
            }
            RoutingError::NotDecomposed { class } => {
                write!(f, "gate '{}' is not native; decompose the circuit first", class.label())
            }
            RoutingError::Disconnected { from, to } => {
                write!(f, "no coupling path between physical qubits {} and {}", from, to)
            }
        }
    }
}

/// Output of [`route`]: the rewritten circuit over physical nodes plus
/// the permutation the inserted swaps applied.
#[derive(Debug, Clone, PartialEq)]
pub struct RoutedCircuit {
    /// Physical-space circuit, as wide as the device. Every two-qubit
    /// gate acts on a coupled pair.
    pub circuit: Circuit,
    pub swaps_inserted: usize,
    /// Placement before the first gate.
    pub initial_mapping: QubitMapping,
    /// Placement after the last gate. Together with `initial_mapping`
    /// this determines the qubit permutation the routed circuit applies
    /// on top of the original unitary.
    pub final_mapping: QubitMapping,
}

/// Rewrites a native-gate circuit for the given coupling graph.
///
/// Qubits start at the identity placement. For each CX whose endpoints
/// are not adjacent, the control is walked along a shortest path until
/// it neighbors the target: each hop is a SWAP emitted as three CX and
/// recorded in the mapping, so a path visiting `L` nodes costs `L - 2`
/// swaps. Moves are permanent; later gates see the updated placement.
pub fn route(circuit: &Circuit, graph: &CouplingGraph) -> Result<RoutedCircuit, RoutingError> {
    let nodes = graph.nodes();
    if circuit.width() > nodes {
        return Err(RoutingError::WidthExceedsDevice { width: circuit.width(), nodes });
    }
    for gate in circuit.gates() {
        if !gate.kind().is_native() {
            return Err(RoutingError::NotDecomposed { class: gate.kind().class() });
        }
    }

    let initial_mapping = QubitMapping::identity(nodes);
    let mut mapping = initial_mapping.clone();
    let mut routed = Circuit::new(nodes);
    let mut swaps_inserted = 0;

    for gate in circuit.gates() {
        match gate.kind() {
            GateKind::ControlledNot => {
                let mut control = mapping.physical(gate.qubits()[0]);
                let target = mapping.physical(gate.qubits()[1]);
                if !graph.are_adjacent(control, target) {
                    let path = graph
                        .shortest_path(control, target)
                        .ok_or(RoutingError::Disconnected { from: control, to: target })?;
                    for &step in &path[1..path.len() - 1] {
                        routed.push(Gate::controlled_not(control, step));
                        routed.push(Gate::controlled_not(step, control));
                        routed.push(Gate::controlled_not(control, step));
                        mapping.swap_physical(control, step);
                        swaps_inserted += 1;
                        control = step;
                    }
                }
                routed.push(Gate::controlled_not(control, target));
            }
            _ => routed.push(gate.relabeled(|q| mapping.physical(q))),
        }
    }

    Ok(RoutedCircuit {
        circuit: routed,
        swaps_inserted,
        initial_mapping,
        final_mapping: mapping,
    })
}
