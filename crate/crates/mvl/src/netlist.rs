//! Acyclic gate-level intermediate representation.
//!
//! A [`Netlist`] is built through a [`NetlistBuilder`]: signals can only be
//! created as primary inputs or as gate outputs, and gate inputs must already
//! exist when the gate is added, so the gate list is a topological order by
//! construction and cycles are unrepresentable. Evaluation walks that fixed
//! order, which makes outputs and error messages reproducible.
//!
//! Signals carry one of three domains:
//!
//! * `binary_rail` — a decoded threshold rail, a plain boolean flag;
//! * `trit` — a full ternary digit `{0, 1, 2}`;
//! * `binary_valued_trit` — a ternary-domain signal whose reachable values
//!   are only `{0, 1}`, e.g. every carry in the ternary adders.
//!
//! Transistor counting supports two modes: `Principled` applies a uniform
//! static-gate rule (two transistors per literal for complex gates), while
//! `Catalog` honours per-gate `cost_override`s so published totals can be
//! reproduced even where the source accounting is internally inconsistent.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Default cap on exhaustive truth-table extraction (input-space size).
pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetlistError {
    #[error("gate {gate} ({kind}): expected {expected} {port} signals, got {got}")]
    Arity {
        gate: usize,
        kind: &'static str,
        port: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("gate {gate} ({kind}): input {index} has domain {found} where {wanted} is required")]
    Domain {
        gate: usize,
        kind: &'static str,
        index: usize,
        found: &'static str,
        wanted: &'static str,
    },
    #[error("gate {gate}: product literal index {index} out of range ({inputs} inputs)")]
    LiteralOutOfRange {
        gate: usize,
        index: usize,
        inputs: usize,
    },
    #[error("output signal {signal} is not reachable from the inputs")]
    UnreachableOutput { signal: u32 },
    #[error(
        "exhaustive table needs {required} rows, cap is {cap}; use sampled verification instead"
    )]
    TableTooLarge { required: u128, cap: u64 },
    #[error("instantiation of `{name}` expects {expected} inputs, got {got}")]
    InstanceInputs {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("instantiation of `{name}`: input {index} has domain {found}, port wants {wanted}")]
    InstanceDomain {
        name: String,
        index: usize,
        found: &'static str,
        wanted: &'static str,
    },
    #[error("word generator: width {width} not supported ({reason})")]
    BadWidth { width: usize, reason: &'static str },
    #[error("word generator: no signal left for product column {column}")]
    ColumnGap { column: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("assignment has {got} values, netlist has {expected} inputs")]
    AssignmentLength { expected: usize, got: usize },
    #[error("input {index} value {value} outside its domain (cardinality {cardinality})")]
    ValueOutOfDomain {
        index: usize,
        value: u8,
        cardinality: u8,
    },
}

/// Value domain of a signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignalDomain {
    BinaryRail,
    Trit,
    BinaryValuedTrit,
}

impl SignalDomain {
    pub fn cardinality(self) -> u8 {
        match self {
            SignalDomain::Trit => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SignalDomain::BinaryRail => "binary_rail",
            SignalDomain::Trit => "trit",
            SignalDomain::BinaryValuedTrit => "binary_valued_trit",
        }
    }

    /// Whether a signal of domain `self` may drive a port that expects
    /// `wanted`. Binary-carrier domains are interchangeable and may feed a
    /// trit port; a full trit may not feed a binary port.
    fn assignable_to(self, wanted: SignalDomain) -> bool {
        wanted == SignalDomain::Trit || self != SignalDomain::Trit
    }
}

/// Handle to a signal within one netlist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignalId(pub u32);

impl SignalId {
    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Signal {
    pub name: String,
    pub domain: SignalDomain,
}

/// Gate behaviour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateKind {
    Inverter,
    /// N-input NAND over rails.
    Nand,
    /// N-input NOR over rails.
    Nor,
    /// Pass-transistor XOR (3 transistors); does not restore levels.
    Xor3t,
    /// AND gate priced as NAND plus inverter.
    And,
    /// Static complex gate: OR of AND terms over the gate's inputs,
    /// complemented iff `complemented`. Each product lists input indices.
    ComplexSop {
        products: Vec<Vec<usize>>,
        complemented: bool,
    },
    /// Trit to four rails (a1_bar, a1, a0_bar, a0); two threshold-inverter
    /// pairs, so it counts two stages deep.
    Decoder,
    /// Two active-low rails (sum1_bar, sum2_bar) to one trit.
    SumEncoder,
    /// One rail to a binary-valued trit.
    CarryEncoder,
    /// (select, data0, data1) to rail; select high picks data1.
    Mux2,
    /// Pass-transistor binary full adder (8 transistors); (a, b, cin) to
    /// (sum, carry). Does not restore levels.
    PassFullAdder8t,
}

impl GateKind {
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Inverter => "inverter",
            GateKind::Nand => "nand",
            GateKind::Nor => "nor",
            GateKind::Xor3t => "xor3t",
            GateKind::And => "and",
            GateKind::ComplexSop { .. } => "complex_sop",
            GateKind::Decoder => "decoder",
            GateKind::SumEncoder => "sum_encoder",
            GateKind::CarryEncoder => "carry_encoder",
            GateKind::Mux2 => "mux2",
            GateKind::PassFullAdder8t => "pass_full_adder_8t",
        }
    }

    /// Transistor count under the uniform static-gate rule.
    pub fn principled_cost(&self, input_count: usize) -> u64 {
        match self {
            GateKind::Inverter => 2,
            GateKind::Nand | GateKind::Nor => 2 * input_count as u64,
            GateKind::Xor3t => 3,
            GateKind::And => 6,
            GateKind::ComplexSop { products, .. } => {
                2 * products.iter().map(|p| p.len() as u64).sum::<u64>()
            }
            GateKind::Decoder => 8,
            GateKind::SumEncoder => 6,
            GateKind::CarryEncoder => 4,
            GateKind::Mux2 => 8,
            GateKind::PassFullAdder8t => 8,
        }
    }

    /// Gate stages contributed to a path: the decoder is two cascaded
    /// inverter stages, everything else is one.
    pub fn depth_weight(&self) -> u64 {
        match self {
            GateKind::Decoder => 2,
            _ => 1,
        }
    }

    /// Pass-transistor structures forward degraded levels instead of
    /// regenerating them.
    pub fn level_restoring(&self) -> bool {
        !matches!(self, GateKind::Xor3t | GateKind::PassFullAdder8t)
    }

    fn arity(&self, input_count: usize) -> (Option<usize>, usize) {
        // (expected inputs or None for variadic >= 1, expected outputs)
        match self {
            GateKind::Inverter => (Some(1), 1),
            GateKind::Nand | GateKind::Nor => (None, 1),
            GateKind::Xor3t | GateKind::And => (Some(2), 1),
            GateKind::ComplexSop { .. } => (Some(input_count), 1),
            GateKind::Decoder => (Some(1), 4),
            GateKind::SumEncoder => (Some(2), 1),
            GateKind::CarryEncoder => (Some(1), 1),
            GateKind::Mux2 => (Some(3), 1),
            GateKind::PassFullAdder8t => (Some(3), 2),
        }
    }

    fn input_domain(&self) -> SignalDomain {
        match self {
            // The decoder thresholds a ternary-domain value.
            GateKind::Decoder => SignalDomain::Trit,
            // Everything else computes over binary-carrier signals.
            _ => SignalDomain::BinaryRail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    pub inputs: Vec<SignalId>,
    pub outputs: Vec<SignalId>,
    /// Catalog-mode transistor count, where the published accounting
    /// deviates from the principled rule.
    pub cost_override: Option<u64>,
}

impl Gate {
    pub fn cost(&self, mode: CostMode) -> u64 {
        match (mode, self.cost_override) {
            (CostMode::Catalog, Some(cost)) => cost,
            _ => self.kind.principled_cost(self.inputs.len()),
        }
    }
}

/// Transistor-count accounting mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostMode {
    /// Per-gate overrides win; reproduces published totals.
    Catalog,
    /// Uniform static-gate rule everywhere.
    Principled,
}

/// An exhaustive input-to-output map in lexicographic input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruthTable {
    pub input_cardinalities: Vec<u8>,
    pub output_cardinalities: Vec<u8>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub inputs: Vec<u8>,
    pub outputs: Vec<u8>,
}

impl TruthTable {
    pub fn arity(&self) -> usize {
        self.input_cardinalities.len()
    }

    /// Builds a table by enumerating the full input space of `cards` through
    /// `f`, in the same lexicographic order the netlist sweep uses.
    pub fn from_fn(
        input_cardinalities: Vec<u8>,
        output_cardinalities: Vec<u8>,
        mut f: impl FnMut(&[u8]) -> Vec<u8>,
    ) -> Self {
        let mut rows = Vec::new();
        let mut assignment = vec![0u8; input_cardinalities.len()];
        loop {
            rows.push(TableRow {
                inputs: assignment.clone(),
                outputs: f(&assignment),
            });
            if !next_assignment(&mut assignment, &input_cardinalities) {
                break;
            }
        }
        TruthTable {
            input_cardinalities,
            output_cardinalities,
            rows,
        }
    }
}

/// Advances `assignment` to the next tuple in lexicographic order; returns
/// false once the space is exhausted.
pub(crate) fn next_assignment(assignment: &mut [u8], cards: &[u8]) -> bool {
    for i in (0..assignment.len()).rev() {
        if assignment[i] + 1 < cards[i] {
            assignment[i] += 1;
            return true;
        }
        assignment[i] = 0;
    }
    false
}

#[derive(Debug, Clone)]
pub struct Netlist {
    name: String,
    radix: u32,
    signals: Vec<Signal>,
    inputs: Vec<SignalId>,
    outputs: Vec<SignalId>,
    gates: Vec<Gate>,
}

impl Netlist {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn radix(&self) -> u32 {
        self.radix
    }

    pub fn signals(&self) -> &[Signal] {
        &self.signals
    }

    pub fn inputs(&self) -> &[SignalId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[SignalId] {
        &self.outputs
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn signal(&self, id: SignalId) -> &Signal {
        &self.signals[id.index()]
    }

    pub fn input_cardinalities(&self) -> Vec<u8> {
        self.inputs
            .iter()
            .map(|&s| self.signal(s).domain.cardinality())
            .collect()
    }

    pub fn output_cardinalities(&self) -> Vec<u8> {
        self.outputs
            .iter()
            .map(|&s| self.signal(s).domain.cardinality())
            .collect()
    }

    /// Evaluates the netlist on one input assignment.
    pub fn evaluate(&self, assignment: &[u8]) -> Result<Vec<u8>, EvalError> {
        if assignment.len() != self.inputs.len() {
            return Err(EvalError::AssignmentLength {
                expected: self.inputs.len(),
                got: assignment.len(),
            });
        }
        for (index, (&value, &id)) in assignment.iter().zip(&self.inputs).enumerate() {
            let cardinality = self.signal(id).domain.cardinality();
            if value >= cardinality {
                return Err(EvalError::ValueOutOfDomain {
                    index,
                    value,
                    cardinality,
                });
            }
        }
        let mut values = vec![0u8; self.signals.len()];
        self.eval_into(assignment, &mut values);
        Ok(self.outputs.iter().map(|&s| values[s.index()]).collect())
    }

    fn eval_into(&self, assignment: &[u8], values: &mut [u8]) {
        for (&value, &id) in assignment.iter().zip(&self.inputs) {
            values[id.index()] = value;
        }
        for gate in &self.gates {
            eval_gate(gate, values);
        }
    }

    /// Full truth table under the default input-space cap.
    pub fn exhaustive_table(&self) -> Result<TruthTable, NetlistError> {
        self.exhaustive_table_capped(DEFAULT_TABLE_CAP)
    }

    pub fn exhaustive_table_capped(&self, cap: u64) -> Result<TruthTable, NetlistError> {
        let cards = self.input_cardinalities();
        let required = cards
            .iter()
            .fold(1u128, |acc, &c| acc.saturating_mul(u128::from(c)));
        if required > u128::from(cap) {
            return Err(NetlistError::TableTooLarge { required, cap });
        }
        let mut rows = Vec::with_capacity(required as usize);
        let mut assignment = vec![0u8; cards.len()];
        let mut values = vec![0u8; self.signals.len()];
        loop {
            self.eval_into(&assignment, &mut values);
            rows.push(TableRow {
                inputs: assignment.clone(),
                outputs: self.outputs.iter().map(|&s| values[s.index()]).collect(),
            });
            if !next_assignment(&mut assignment, &cards) {
                break;
            }
        }
        Ok(TruthTable {
            input_cardinalities: cards,
            output_cardinalities: self.output_cardinalities(),
            rows,
        })
    }

    /// Total transistor count under the given accounting mode.
    pub fn transistor_count(&self, mode: CostMode) -> u64 {
        self.gates.iter().map(|g| g.cost(mode)).sum()
    }

    /// Longest input-to-output path, counted in gate stages.
    pub fn depth(&self) -> u64 {
        let mut depth = vec![0u64; self.signals.len()];
        for gate in &self.gates {
            let from = gate
                .inputs
                .iter()
                .map(|&s| depth[s.index()])
                .max()
                .unwrap_or(0);
            let to = from + gate.kind.depth_weight();
            for &out in &gate.outputs {
                depth[out.index()] = to;
            }
        }
        self.outputs
            .iter()
            .map(|&s| depth[s.index()])
            .max()
            .unwrap_or(0)
    }

    /// Serializable document view (versioned JSON schema).
    pub fn to_document(&self) -> NetlistDocument<'_> {
        NetlistDocument {
            schema_version: SCHEMA_VERSION,
            netlist: self,
            transistors_catalog: self.transistor_count(CostMode::Catalog),
            transistors_principled: self.transistor_count(CostMode::Principled),
            depth: self.depth(),
        }
    }
}

fn eval_gate(gate: &Gate, values: &mut [u8]) {
    let read = |id: SignalId, values: &[u8]| values[id.index()];
    match &gate.kind {
        GateKind::Inverter => {
            let x = read(gate.inputs[0], values);
            values[gate.outputs[0].index()] = u8::from(x == 0);
        }
        GateKind::Nand => {
            let all = gate.inputs.iter().all(|&s| read(s, values) != 0);
            values[gate.outputs[0].index()] = u8::from(!all);
        }
        GateKind::Nor => {
            let any = gate.inputs.iter().any(|&s| read(s, values) != 0);
            values[gate.outputs[0].index()] = u8::from(!any);
        }
        GateKind::Xor3t => {
            let a = read(gate.inputs[0], values);
            let b = read(gate.inputs[1], values);
            values[gate.outputs[0].index()] = a ^ b;
        }
        GateKind::And => {
            let a = read(gate.inputs[0], values);
            let b = read(gate.inputs[1], values);
            values[gate.outputs[0].index()] = a & b;
        }
        GateKind::ComplexSop {
            products,
            complemented,
        } => {
            let mut acc = false;
            for product in products {
                if product
                    .iter()
                    .all(|&lit| read(gate.inputs[lit], values) != 0)
                {
                    acc = true;
                    break;
                }
            }
            values[gate.outputs[0].index()] = u8::from(acc != *complemented);
        }
        GateKind::Decoder => {
            let t = read(gate.inputs[0], values);
            let a0 = t >= 1;
            let a1 = t >= 2;
            values[gate.outputs[0].index()] = u8::from(!a1);
            values[gate.outputs[1].index()] = u8::from(a1);
            values[gate.outputs[2].index()] = u8::from(!a0);
            values[gate.outputs[3].index()] = u8::from(a0);
        }
        GateKind::SumEncoder => {
            let sum1_bar = read(gate.inputs[0], values) != 0;
            let sum2_bar = read(gate.inputs[1], values) != 0;
            values[gate.outputs[0].index()] = if !sum2_bar { 2 } else { u8::from(!sum1_bar) };
        }
        GateKind::CarryEncoder => {
            values[gate.outputs[0].index()] = read(gate.inputs[0], values);
        }
        GateKind::Mux2 => {
            let sel = read(gate.inputs[0], values) != 0;
            let picked = if sel { gate.inputs[2] } else { gate.inputs[1] };
            values[gate.outputs[0].index()] = read(picked, values);
        }
        GateKind::PassFullAdder8t => {
            let a = read(gate.inputs[0], values);
            let b = read(gate.inputs[1], values);
            let c = read(gate.inputs[2], values);
            values[gate.outputs[0].index()] = a ^ b ^ c;
            values[gate.outputs[1].index()] = u8::from(a + b + c >= 2);
        }
    }
}

/// Incremental netlist constructor; see the module docs for the signal
/// discipline that keeps the result acyclic.
pub struct NetlistBuilder {
    name: String,
    radix: u32,
    signals: Vec<Signal>,
    inputs: Vec<SignalId>,
    outputs: Vec<SignalId>,
    gates: Vec<Gate>,
}

/// The four rails a decoder produces from one trit.
#[derive(Debug, Clone, Copy)]
pub struct DecodedRails {
    pub a1_bar: SignalId,
    pub a1: SignalId,
    pub a0_bar: SignalId,
    pub a0: SignalId,
}

impl NetlistBuilder {
    pub fn new(name: impl Into<String>, radix: u32) -> Self {
        NetlistBuilder {
            name: name.into(),
            radix,
            signals: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            gates: Vec::new(),
        }
    }

    fn fresh(&mut self, name: String, domain: SignalDomain) -> SignalId {
        let id = SignalId(self.signals.len() as u32);
        self.signals.push(Signal { name, domain });
        id
    }

    fn auto(&mut self, domain: SignalDomain) -> SignalId {
        let name = format!("s{}", self.signals.len());
        self.fresh(name, domain)
    }

    pub fn input(&mut self, name: &str, domain: SignalDomain) -> SignalId {
        let id = self.fresh(name.to_string(), domain);
        self.inputs.push(id);
        id
    }

    /// Domain of an already-created signal.
    pub fn peek_domain(&self, signal: SignalId) -> SignalDomain {
        self.signals[signal.index()].domain
    }

    pub fn output(&mut self, signal: SignalId) {
        self.outputs.push(signal);
    }

    fn push_gate(
        &mut self,
        kind: GateKind,
        inputs: Vec<SignalId>,
        outputs: Vec<SignalId>,
        cost_override: Option<u64>,
    ) {
        self.gates.push(Gate {
            kind,
            inputs,
            outputs,
            cost_override,
        });
    }

    pub fn inverter(&mut self, x: SignalId) -> SignalId {
        let out = self.auto(SignalDomain::BinaryRail);
        self.push_gate(GateKind::Inverter, vec![x], vec![out], None);
        out
    }

    pub fn nand(&mut self, xs: &[SignalId]) -> SignalId {
        let out = self.auto(SignalDomain::BinaryRail);
        self.push_gate(GateKind::Nand, xs.to_vec(), vec![out], None);
        out
    }

    pub fn nor(&mut self, xs: &[SignalId]) -> SignalId {
        let out = self.auto(SignalDomain::BinaryRail);
        self.push_gate(GateKind::Nor, xs.to_vec(), vec![out], None);
        out
    }

    pub fn xor3t(&mut self, a: SignalId, b: SignalId) -> SignalId {
        let out = self.auto(SignalDomain::BinaryRail);
        self.push_gate(GateKind::Xor3t, vec![a, b], vec![out], None);
        out
    }

    pub fn and2(&mut self, a: SignalId, b: SignalId) -> SignalId {
        let out = self.auto(SignalDomain::BinaryRail);
        self.push_gate(GateKind::And, vec![a, b], vec![out], None);
        out
    }

    /// Complex static gate over explicit signal products. The input list is
    /// the deduplicated set of referenced signals in first-use order, so the
    /// literal count (and hence the transistor cost) matches the products as
    /// written.
    pub fn complex_sop(
        &mut self,
        name: &str,
        products: &[&[SignalId]],
        complemented: bool,
    ) -> SignalId {
        let mut inputs: Vec<SignalId> = Vec::new();
        let mut index_products = Vec::with_capacity(products.len());
        for product in products {
            let mut term = Vec::with_capacity(product.len());
            for &sig in *product {
                let idx = match inputs.iter().position(|&s| s == sig) {
                    Some(i) => i,
                    None => {
                        inputs.push(sig);
                        inputs.len() - 1
                    }
                };
                term.push(idx);
            }
            index_products.push(term);
        }
        let out = self.fresh(name.to_string(), SignalDomain::BinaryRail);
        self.push_gate(
            GateKind::ComplexSop {
                products: index_products,
                complemented,
            },
            inputs,
            vec![out],
            None,
        );
        out
    }

    pub fn decoder(&mut self, t: SignalId, prefix: &str) -> DecodedRails {
        self.decoder_costed(t, prefix, None)
    }

    /// Decoder with a catalog-mode cost override.
    pub fn decoder_with_cost(&mut self, t: SignalId, prefix: &str, cost: u64) -> DecodedRails {
        self.decoder_costed(t, prefix, Some(cost))
    }

    fn decoder_costed(&mut self, t: SignalId, prefix: &str, cost: Option<u64>) -> DecodedRails {
        let a1_bar = self.fresh(format!("{prefix}1n"), SignalDomain::BinaryRail);
        let a1 = self.fresh(format!("{prefix}1"), SignalDomain::BinaryRail);
        let a0_bar = self.fresh(format!("{prefix}0n"), SignalDomain::BinaryRail);
        let a0 = self.fresh(format!("{prefix}0"), SignalDomain::BinaryRail);
        self.push_gate(
            GateKind::Decoder,
            vec![t],
            vec![a1_bar, a1, a0_bar, a0],
            cost,
        );
        DecodedRails {
            a1_bar,
            a1,
            a0_bar,
            a0,
        }
    }

    pub fn sum_encoder(&mut self, name: &str, sum1_bar: SignalId, sum2_bar: SignalId) -> SignalId {
        let out = self.fresh(name.to_string(), SignalDomain::Trit);
        self.push_gate(
            GateKind::SumEncoder,
            vec![sum1_bar, sum2_bar],
            vec![out],
            None,
        );
        out
    }

    pub fn carry_encoder(&mut self, name: &str, x: SignalId) -> SignalId {
        let out = self.fresh(name.to_string(), SignalDomain::BinaryValuedTrit);
        self.push_gate(GateKind::CarryEncoder, vec![x], vec![out], None);
        out
    }

    pub fn mux2(&mut self, name: &str, sel: SignalId, d0: SignalId, d1: SignalId) -> SignalId {
        let out = self.fresh(name.to_string(), SignalDomain::BinaryRail);
        self.push_gate(GateKind::Mux2, vec![sel, d0, d1], vec![out], None);
        out
    }

    pub fn pass_full_adder(
        &mut self,
        a: SignalId,
        b: SignalId,
        cin: SignalId,
    ) -> (SignalId, SignalId) {
        let sum = self.auto(SignalDomain::BinaryRail);
        let carry = self.auto(SignalDomain::BinaryRail);
        self.push_gate(
            GateKind::PassFullAdder8t,
            vec![a, b, cin],
            vec![sum, carry],
            None,
        );
        (sum, carry)
    }

    /// Inlines `sub` into this netlist, wiring its primary inputs to
    /// `inputs` and returning the signals its outputs map to. Gate cost
    /// overrides are preserved; copied signal names get a `prefix/`.
    pub fn instantiate(
        &mut self,
        prefix: &str,
        sub: &Netlist,
        inputs: &[SignalId],
    ) -> Result<Vec<SignalId>, NetlistError> {
        if inputs.len() != sub.inputs.len() {
            return Err(NetlistError::InstanceInputs {
                name: sub.name.clone(),
                expected: sub.inputs.len(),
                got: inputs.len(),
            });
        }
        let mut map: Vec<Option<SignalId>> = vec![None; sub.signals.len()];
        for (index, (&host, &port)) in inputs.iter().zip(&sub.inputs).enumerate() {
            let found = self.signals[host.index()].domain;
            let wanted = sub.signal(port).domain;
            if !found.assignable_to(wanted) {
                return Err(NetlistError::InstanceDomain {
                    name: sub.name.clone(),
                    index,
                    found: found.name(),
                    wanted: wanted.name(),
                });
            }
            map[port.index()] = Some(host);
        }
        for gate in &sub.gates {
            let inputs: Vec<SignalId> = gate
                .inputs
                .iter()
                .map(|&s| map[s.index()].expect("sub-netlist gate input defined before use"))
                .collect();
            let outputs: Vec<SignalId> = gate
                .outputs
                .iter()
                .map(|&s| {
                    let sig = sub.signal(s);
                    let id = self.fresh(format!("{prefix}/{}", sig.name), sig.domain);
                    map[s.index()] = Some(id);
                    id
                })
                .collect();
            self.push_gate(gate.kind.clone(), inputs, outputs, gate.cost_override);
        }
        Ok(sub
            .outputs
            .iter()
            .map(|&s| map[s.index()].expect("sub-netlist output driven"))
            .collect())
    }

    /// Validates structure and domains and freezes the netlist.
    pub fn finish(self) -> Result<Netlist, NetlistError> {
        let netlist = Netlist {
            name: self.name,
            radix: self.radix,
            signals: self.signals,
            inputs: self.inputs,
            outputs: self.outputs,
            gates: self.gates,
        };
        validate(&netlist)?;
        Ok(netlist)
    }
}

fn validate(netlist: &Netlist) -> Result<(), NetlistError> {
    for (index, gate) in netlist.gates.iter().enumerate() {
        let kind = gate.kind.name();
        let (expected_in, expected_out) = gate.kind.arity(gate.inputs.len());
        if let Some(expected) = expected_in {
            if gate.inputs.len() != expected {
                return Err(NetlistError::Arity {
                    gate: index,
                    kind,
                    port: "input",
                    expected,
                    got: gate.inputs.len(),
                });
            }
        } else if gate.inputs.is_empty() {
            return Err(NetlistError::Arity {
                gate: index,
                kind,
                port: "input",
                expected: 1,
                got: 0,
            });
        }
        if gate.outputs.len() != expected_out {
            return Err(NetlistError::Arity {
                gate: index,
                kind,
                port: "output",
                expected: expected_out,
                got: gate.outputs.len(),
            });
        }
        let wanted = gate.kind.input_domain();
        for (i, &sig) in gate.inputs.iter().enumerate() {
            let found = netlist.signal(sig).domain;
            if !found.assignable_to(wanted) {
                return Err(NetlistError::Domain {
                    gate: index,
                    kind,
                    index: i,
                    found: found.name(),
                    wanted: wanted.name(),
                });
            }
        }
        if let GateKind::ComplexSop { products, .. } = &gate.kind {
            for product in products {
                for &lit in product {
                    if lit >= gate.inputs.len() {
                        return Err(NetlistError::LiteralOutOfRange {
                            gate: index,
                            index: lit,
                            inputs: gate.inputs.len(),
                        });
                    }
                }
            }
        }
    }
    // Every declared output must be reachable from the primary inputs.
    let mut reachable = vec![false; netlist.signals.len()];
    for &s in &netlist.inputs {
        reachable[s.index()] = true;
    }
    for gate in &netlist.gates {
        if gate.inputs.iter().any(|&s| reachable[s.index()]) {
            for &out in &gate.outputs {
                reachable[out.index()] = true;
            }
        }
    }
    for &s in &netlist.outputs {
        if !reachable[s.index()] {
            return Err(NetlistError::UnreachableOutput { signal: s.0 });
        }
    }
    Ok(())
}

/// Version tag of the emitted netlist JSON document.
pub const SCHEMA_VERSION: u32 = 1;

/// Serializable wrapper: the netlist plus its cost and depth summary.
pub struct NetlistDocument<'a> {
    pub schema_version: u32,
    pub netlist: &'a Netlist,
    pub transistors_catalog: u64,
    pub transistors_principled: u64,
    pub depth: u64,
}

impl Serialize for NetlistDocument<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("NetlistDocument", 9)?;
        s.serialize_field("schema_version", &self.schema_version)?;
        s.serialize_field("name", self.netlist.name())?;
        s.serialize_field("radix", &self.netlist.radix())?;
        s.serialize_field("transistors_catalog", &self.transistors_catalog)?;
        s.serialize_field("transistors_principled", &self.transistors_principled)?;
        s.serialize_field("depth", &self.depth)?;
        s.serialize_field("inputs", self.netlist.inputs())?;
        s.serialize_field("outputs", self.netlist.outputs())?;
        s.serialize_field("signals", self.netlist.signals())?;
        struct Gates<'a>(&'a Netlist);
        impl Serialize for Gates<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_seq(self.0.gates().iter().map(|g| GateDoc { gate: g }))
            }
        }
        // serde_struct can't hold a borrowed adapter field twice; emit gates last.
        s.serialize_field("gates", &Gates(self.netlist))?;
        s.end()
    }
}

struct GateDoc<'a> {
    gate: &'a Gate,
}

impl Serialize for GateDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let gate = self.gate;
        let sop = matches!(gate.kind, GateKind::ComplexSop { .. });
        let mut len = 5;
        if sop {
            len += 2;
        }
        if gate.cost_override.is_some() {
            len += 1;
        }
        let mut s = serializer.serialize_struct("Gate", len)?;
        s.serialize_field("kind", gate.kind.name())?;
        if let GateKind::ComplexSop {
            products,
            complemented,
        } = &gate.kind
        {
            s.serialize_field("products", products)?;
            s.serialize_field("complemented", complemented)?;
        }
        s.serialize_field("inputs", &gate.inputs)?;
        s.serialize_field("outputs", &gate.outputs)?;
        s.serialize_field("transistors", &gate.cost(CostMode::Catalog))?;
        if gate.cost_override.is_some() {
            s.serialize_field("cost_override", &gate.cost_override)?;
        }
        s.serialize_field("level_restoring", &gate.kind.level_restoring())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and_netlist() -> Netlist {
        let mut b = NetlistBuilder::new("and", 2);
        let a = b.input("a", SignalDomain::BinaryRail);
        let c = b.input("b", SignalDomain::BinaryRail);
        let out = b.and2(a, c);
        b.output(out);
        b.finish().unwrap()
    }

    #[test]
    fn and_gate_table() {
        let n = and_netlist();
        let table = n.exhaustive_table().unwrap();
        assert_eq!(table.rows.len(), 4);
        for row in &table.rows {
            let expected = u8::from(row.inputs[0] == 1 && row.inputs[1] == 1);
            assert_eq!(row.outputs, vec![expected]);
        }
        // Lexicographic enumeration order.
        let inputs: Vec<_> = table.rows.iter().map(|r| r.inputs.clone()).collect();
        assert_eq!(inputs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn empty_netlist_costs_nothing() {
        let b = NetlistBuilder::new("empty", 2);
        let n = b.finish().unwrap();
        assert_eq!(n.transistor_count(CostMode::Catalog), 0);
        assert_eq!(n.transistor_count(CostMode::Principled), 0);
        assert_eq!(n.depth(), 0);
    }

    #[test]
    fn single_inverter_depth() {
        let mut b = NetlistBuilder::new("inv", 2);
        let a = b.input("a", SignalDomain::BinaryRail);
        let out = b.inverter(a);
        b.output(out);
        let n = b.finish().unwrap();
        assert_eq!(n.depth(), 1);
        assert_eq!(n.evaluate(&[0]).unwrap(), vec![1]);
        assert_eq!(n.evaluate(&[1]).unwrap(), vec![0]);
    }

    #[test]
    fn decoder_counts_two_stages() {
        let mut b = NetlistBuilder::new("dec", 3);
        let t = b.input("t", SignalDomain::Trit);
        let rails = b.decoder(t, "a");
        b.output(rails.a0);
        let n = b.finish().unwrap();
        assert_eq!(n.depth(), 2);
        assert_eq!(n.transistor_count(CostMode::Principled), 8);
        // Decoder rows: t=1 -> (a1_bar, a1, a0_bar, a0) = (1, 0, 0, 1).
        let mut b = NetlistBuilder::new("dec4", 3);
        let t = b.input("t", SignalDomain::Trit);
        let rails = b.decoder(t, "a");
        for s in [rails.a1_bar, rails.a1, rails.a0_bar, rails.a0] {
            b.output(s);
        }
        let n = b.finish().unwrap();
        assert_eq!(n.evaluate(&[0]).unwrap(), vec![1, 0, 1, 0]);
        assert_eq!(n.evaluate(&[1]).unwrap(), vec![1, 0, 0, 1]);
        assert_eq!(n.evaluate(&[2]).unwrap(), vec![0, 1, 0, 1]);
    }

    #[test]
    fn catalog_equals_principled_without_overrides() {
        let n = and_netlist();
        assert_eq!(
            n.transistor_count(CostMode::Catalog),
            n.transistor_count(CostMode::Principled)
        );
    }

    #[test]
    fn cost_override_only_affects_catalog_mode() {
        let mut b = NetlistBuilder::new("dec", 3);
        let t = b.input("t", SignalDomain::Trit);
        let rails = b.decoder_with_cost(t, "a", 2);
        b.output(rails.a0);
        let n = b.finish().unwrap();
        assert_eq!(n.transistor_count(CostMode::Catalog), 2);
        assert_eq!(n.transistor_count(CostMode::Principled), 8);
    }

    #[test]
    fn table_cap_is_enforced() {
        let mut b = NetlistBuilder::new("wide", 2);
        let mut xs = Vec::new();
        for i in 0..8 {
            xs.push(b.input(&format!("x{i}"), SignalDomain::BinaryRail));
        }
        let out = b.nand(&xs);
        b.output(out);
        let n = b.finish().unwrap();
        match n.exhaustive_table_capped(100) {
            Err(NetlistError::TableTooLarge { required, cap }) => {
                assert_eq!(required, 256);
                assert_eq!(cap, 100);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn trit_cannot_drive_boolean_gate() {
        let mut b = NetlistBuilder::new("bad", 3);
        let t = b.input("t", SignalDomain::Trit);
        let out = b.inverter(t);
        b.output(out);
        assert!(matches!(b.finish(), Err(NetlistError::Domain { .. })));
    }

    #[test]
    fn evaluation_rejects_out_of_domain_values() {
        let n = and_netlist();
        assert!(matches!(
            n.evaluate(&[2, 0]),
            Err(EvalError::ValueOutOfDomain { .. })
        ));
        assert!(matches!(
            n.evaluate(&[0]),
            Err(EvalError::AssignmentLength { .. })
        ));
    }

    #[test]
    fn depth_never_decreases_when_wrapping_an_output() {
        let base = and_netlist();
        let before = base.depth();
        let mut b = NetlistBuilder::new("wrapped", 2);
        let a = b.input("a", SignalDomain::BinaryRail);
        let c = b.input("b", SignalDomain::BinaryRail);
        let outs = b.instantiate("u0", &base, &[a, c]).unwrap();
        let inv = b.inverter(outs[0]);
        b.output(inv);
        let n = b.finish().unwrap();
        assert!(n.depth() >= before);
        assert_eq!(n.depth(), before + 1);
    }

    #[test]
    fn evaluation_is_shareable_across_threads() {
        let netlist = std::sync::Arc::new(and_netlist());
        let reference = netlist.exhaustive_table().unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let netlist = std::sync::Arc::clone(&netlist);
                std::thread::spawn(move || netlist.exhaustive_table().unwrap())
            })
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), reference);
        }
    }

    #[test]
    fn document_serializes_with_schema_version() {
        let n = and_netlist();
        let json = serde_json::to_value(n.to_document()).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["gates"][0]["kind"], "and");
        assert_eq!(json["gates"][0]["transistors"], 6);
        assert_eq!(json["gates"][0]["level_restoring"], true);
    }
}
