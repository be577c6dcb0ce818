//! Input documents, subcommand drivers, and output rendering for the `latmat` binary.
//!
//! Every command takes the input file contents as text and returns an
//! [`Output`], so the whole pipeline is testable without spawning a process.

use std::fmt::Write as _;

use latmat::dependence::complements;
use latmat::{
    check_theorem_equivalences, is_covering, reducts_via_hyperplanes, ElemSet, Error, Flat,
    GeometricLattice, GroundSet, InformationSystem, SetFamily, TheoremReport, TransversalMatroid,
};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

pub const DEFAULT_MAX_ELEMS: usize = 20;
pub const DEFAULT_MAX_ATTRS: usize = latmat::infosys::DEFAULT_MAX_CONDITION_ATTRS;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String, stderr: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr,
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Degenerate(_) | Error::NoHittingSet => EXIT_DEGENERATE,
        Error::InvalidArgument(_) | Error::Precondition(_) => EXIT_PARSE,
    }
}

/// Element names may be written as JSON strings or integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Name {
    Text(String),
    Number(i64),
}

impl Name {
    fn into_string(self) -> String {
        match self {
            Name::Text(s) => s,
            Name::Number(n) => n.to_string(),
        }
    }
}

/// `{"universe": [...], "blocks": [[...], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringDocument {
    pub universe: Vec<Name>,
    pub blocks: Vec<Vec<Name>>,
}

pub fn parse_covering(text: &str) -> Result<SetFamily, Output> {
    let doc: CoveringDocument = serde_json::from_str(text).map_err(|e| {
        Output::fail(
            EXIT_PARSE,
            format!(
                "parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ),
        )
    })?;
    let universe: Vec<String> = doc.universe.into_iter().map(Name::into_string).collect();
    let blocks: Vec<Vec<String>> = doc
        .blocks
        .into_iter()
        .map(|b| b.into_iter().map(Name::into_string).collect())
        .collect();
    SetFamily::from_names(&universe, &blocks).map_err(|e| Output::fail(exit_code(&e), e))
}

/// CSV with a header row of attribute names and object names in the first column.
/// `decision`, when given, names a column to leave out of the condition attributes.
pub fn parse_table(text: &str, decision: Option<&str>) -> Result<InformationSystem, Output> {
    let parse_err = |msg: String| Output::fail(EXIT_PARSE, msg);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| parse_err(format!("parse error: {e}")))?
        .iter()
        .map(str::to_string)
        .collect();
    if header.len() < 2 {
        return Err(parse_err(
            "parse error at line 1: header needs an object column and at least one attribute"
                .into(),
        ));
    }
    let keep: Vec<usize> = match decision {
        None => (1..header.len()).collect(),
        Some(d) => {
            let pos = header[1..]
                .iter()
                .position(|h| h == d)
                .ok_or_else(|| parse_err(format!("decision column `{d}` is not in the header")))?;
            (1..header.len()).filter(|&j| j != pos + 1).collect()
        }
    };
    if keep.is_empty() {
        return Err(parse_err("no condition attributes remain".into()));
    }

    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let at = e
                .position()
                .map(|p| format!(" at line {}", p.line()))
                .unwrap_or_default();
            parse_err(format!("parse error{at}: {e}"))
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if let Some(col) = record.iter().position(str::is_empty) {
            return Err(parse_err(format!(
                "parse error at line {line}, column {}: empty cell",
                col + 1
            )));
        }
        objects.push(record[0].to_string());
        rows.push(keep.iter().map(|&j| record[j].to_string()).collect());
    }
    let attributes = keep.iter().map(|&j| header[j].clone()).collect();
    InformationSystem::new(objects, attributes, rows).map_err(|e| match e {
        Error::Capacity { .. } => Output::fail(EXIT_CAPACITY, e),
        _ => parse_err(format!("parse error: {e}")),
    })
}

fn names(g: &GroundSet, x: ElemSet) -> Vec<String> {
    g.names_of(x).into_iter().map(str::to_string).collect()
}

fn guard_elems(family: &SetFamily, max_elems: usize) -> Result<(), Output> {
    let n = family.ground().len();
    if n > max_elems {
        return Err(Output::fail(
            EXIT_CAPACITY,
            format!("universe has {n} elements, above --max-elems {max_elems}"),
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatJson {
    pub id: usize,
    pub members: Vec<String>,
    pub height: usize,
    /// Ids of the flats covering this one.
    pub covers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremJson {
    pub is_covering: bool,
    pub empty_closure_is_empty: bool,
    pub singleton_closures_partition: bool,
    pub singleton_closures_are_atoms: bool,
}

impl From<TheoremReport> for TheoremJson {
    fn from(r: TheoremReport) -> Self {
        TheoremJson {
            is_covering: r.is_covering,
            empty_closure_is_empty: r.empty_closure_is_empty,
            singleton_closures_partition: r.singleton_closures_partition,
            singleton_closures_are_atoms: r.singleton_closures_are_atoms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub universe: Vec<String>,
    pub rank: usize,
    pub bottom: usize,
    pub top: usize,
    pub flats: Vec<FlatJson>,
    pub atoms: Vec<usize>,
    pub coatoms: Vec<usize>,
    pub theorem: TheoremJson,
}

pub fn lattice_json(lattice: &GeometricLattice) -> Result<LatticeJson, Error> {
    let m = lattice.matroid();
    let g = m.ground();
    let ids = |fs: Vec<Flat>| -> Vec<usize> {
        fs.iter()
            .filter_map(|f| lattice.index_of(f.members()))
            .collect()
    };
    Ok(LatticeJson {
        universe: g.names().to_vec(),
        rank: m.ground_rank(),
        bottom: lattice.bottom(),
        top: lattice.top(),
        flats: lattice
            .flats()
            .iter()
            .enumerate()
            .map(|(i, f)| FlatJson {
                id: i,
                members: names(g, f.members()),
                height: f.rank(),
                covers: lattice.covers(i).to_vec(),
            })
            .collect(),
        atoms: ids(lattice.atoms()),
        coatoms: ids(lattice.coatoms()?),
        theorem: check_theorem_equivalences(m.family()).into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeOptions {
    pub dot: bool,
    pub json: bool,
    pub max_elems: usize,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions {
            dot: false,
            json: false,
            max_elems: DEFAULT_MAX_ELEMS,
        }
    }
}

pub fn cmd_lattice(text: &str, opts: LatticeOptions) -> Output {
    match run_lattice(text, opts) {
        Ok(out) | Err(out) => out,
    }
}

fn run_lattice(text: &str, opts: LatticeOptions) -> Result<Output, Output> {
    let family = parse_covering(text)?;
    guard_elems(&family, opts.max_elems)?;
    let g = family.ground().clone();
    let mut stderr = String::new();
    let covering = is_covering(&family);
    if !covering {
        let _ = writeln!(
            stderr,
            "warning: not a covering; {} lies in no block. The lattice is still built.",
            g.format_set(g.full() - family.union())
        );
    }
    let matroid = TransversalMatroid::new(family);
    let lattice = GeometricLattice::build(&matroid);
    let fail = |e: Error| Output::fail(exit_code(&e), e);

    if opts.dot {
        return Ok(Output::ok(lattice.export_dot(), stderr));
    }
    if opts.json {
        let doc = lattice_json(&lattice).map_err(fail)?;
        let mut out = serde_json::to_string_pretty(&doc).expect("lattice serializes");
        out.push('\n');
        return Ok(Output::ok(out, stderr));
    }

    let fmt_all = |fs: &[Flat]| -> String {
        fs.iter()
            .map(|f| g.format_set(f.members()))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "universe: {}", g.format_set(g.full()));
    let blocks: Vec<String> = matroid
        .family()
        .blocks()
        .iter()
        .map(|&b| g.format_set(b))
        .collect();
    let _ = writeln!(out, "blocks: {}", blocks.join(" "));
    let _ = writeln!(out, "rank: {}", matroid.ground_rank());
    let _ = writeln!(out, "flats: {}", lattice.len());
    for h in 0..=matroid.ground_rank() {
        let level: Vec<Flat> = lattice
            .flats()
            .iter()
            .filter(|f| f.rank() == h)
            .copied()
            .collect();
        let _ = writeln!(out, "  height {h}: {}", fmt_all(&level));
    }
    let _ = writeln!(out, "hasse covers: {}", lattice.cover_count());
    let _ = writeln!(out, "atoms: {}", fmt_all(&lattice.atoms()));
    let _ = writeln!(
        out,
        "coatoms: {}",
        fmt_all(&lattice.coatoms().map_err(fail)?)
    );
    if !covering {
        let r = check_theorem_equivalences(matroid.family());
        out.push_str("covering statements:\n");
        let _ = writeln!(out, "  (1) blocks cover the universe: {}", r.is_covering);
        let _ = writeln!(
            out,
            "  (2) closure of the empty set is empty: {}",
            r.empty_closure_is_empty
        );
        let _ = writeln!(
            out,
            "  (3) singleton closures partition the universe: {}",
            r.singleton_closures_partition
        );
        let _ = writeln!(
            out,
            "  (4) singleton closures are the atoms: {}",
            r.singleton_closures_are_atoms
        );
    }
    Ok(Output::ok(out, stderr))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductsJson {
    pub universe: Vec<String>,
    pub hyperplanes: Vec<Vec<String>>,
    pub complements: Vec<Vec<String>>,
    /// Sorted by size, then member order.
    pub reducts: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductsOptions {
    pub json: bool,
    pub max_elems: usize,
}

impl Default for ReductsOptions {
    fn default() -> Self {
        ReductsOptions {
            json: false,
            max_elems: DEFAULT_MAX_ELEMS,
        }
    }
}

pub fn reducts_json(matroid: &TransversalMatroid) -> Result<ReductsJson, Error> {
    let g = matroid.ground();
    let hyperplanes: Vec<ElemSet> = matroid.hyperplanes()?.iter().map(Flat::members).collect();
    let com = complements(g, &hyperplanes);
    let reducts = reducts_via_hyperplanes(matroid)?;
    let list = |sets: &[ElemSet]| sets.iter().map(|&s| names(g, s)).collect();
    Ok(ReductsJson {
        universe: g.names().to_vec(),
        hyperplanes: list(&hyperplanes),
        complements: list(&com),
        reducts: list(reducts.as_slice()),
    })
}

pub fn cmd_reducts(text: &str, opts: ReductsOptions) -> Output {
    match run_reducts(text, opts) {
        Ok(out) | Err(out) => out,
    }
}

fn run_reducts(text: &str, opts: ReductsOptions) -> Result<Output, Output> {
    let family = parse_covering(text)?;
    guard_elems(&family, opts.max_elems)?;
    let matroid = TransversalMatroid::new(family);
    let doc = reducts_json(&matroid).map_err(|e| Output::fail(exit_code(&e), e))?;
    if opts.json {
        let mut out = serde_json::to_string_pretty(&doc).expect("reducts serialize");
        out.push('\n');
        return Ok(Output::ok(out, String::new()));
    }
    let braces = |xs: &[String]| {
        if xs.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", xs.join(","))
        }
    };
    let row = |sets: &[Vec<String>]| sets.iter().map(|s| braces(s)).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let _ = writeln!(out, "universe: {}", braces(&doc.universe));
    let _ = writeln!(out, "hyperplanes: {}", row(&doc.hyperplanes));
    let _ = writeln!(out, "complements: {}", row(&doc.complements));
    let _ = writeln!(out, "reducts ({}):", doc.reducts.len());
    for r in &doc.reducts {
        let _ = writeln!(out, "  {}", braces(r));
    }
    Ok(Output::ok(out, String::new()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfosysJson {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    /// One entry per attribute, in attribute order.
    pub partitions: Vec<Vec<Vec<String>>>,
    pub r0_blocks: Vec<Vec<String>>,
    pub condition: bool,
    /// `"r0"` or `"brute-force"`.
    pub method: String,
    pub reducts: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfosysOptions {
    pub force_brute: bool,
    pub json: bool,
    pub max_attrs: usize,
    pub decision: Option<String>,
}

impl Default for InfosysOptions {
    fn default() -> Self {
        InfosysOptions {
            force_brute: false,
            json: false,
            max_attrs: DEFAULT_MAX_ATTRS,
            decision: None,
        }
    }
}

pub fn cmd_infosys(text: &str, opts: &InfosysOptions) -> Output {
    match run_infosys(text, opts) {
        Ok(out) | Err(out) => out,
    }
}

fn run_infosys(text: &str, opts: &InfosysOptions) -> Result<Output, Output> {
    let system = parse_table(text, opts.decision.as_deref())?;
    let fail = |e: Error| {
        let msg = match &e {
            Error::Capacity { .. } => format!("{e} (raise with --max-attrs)"),
            _ => e.to_string(),
        };
        Output::fail(exit_code(&e), msg)
    };
    let condition = system
        .check_condition_with_limit(opts.max_attrs)
        .map_err(fail)?;
    let use_r0 = condition && !opts.force_brute;
    let reducts = if use_r0 {
        system.reducts_via_r0_with_limit(opts.max_attrs)
    } else {
        system.brute_force_reducts_with_limit(opts.max_attrs)
    }
    .map_err(fail)?;

    let attr_names =
        |x: ElemSet| -> Vec<String> { x.iter().map(|a| system.attributes()[a].clone()).collect() };
    let quotient = system.r0_quotient();
    let partitions: Vec<Vec<Vec<String>>> = (0..system.attributes().len())
        .map(|a| {
            system
                .indiscernibility(ElemSet::singleton(a))
                .expect("attribute in range")
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&x| system.objects()[x].clone()).collect())
                .collect()
        })
        .collect();

    if opts.json {
        let doc = InfosysJson {
            objects: system.objects().to_vec(),
            attributes: system.attributes().to_vec(),
            partitions,
            r0_blocks: quotient.blocks().iter().map(|&b| attr_names(b)).collect(),
            condition,
            method: if use_r0 { "r0" } else { "brute-force" }.into(),
            reducts: reducts.iter().map(|&r| attr_names(r)).collect(),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("infosys serializes");
        out.push('\n');
        return Ok(Output::ok(out, String::new()));
    }

    let mut out = String::new();
    let _ = writeln!(out, "objects: {}", system.objects().join(" "));
    let _ = writeln!(out, "attributes: {}", system.attributes().join(" "));
    out.push_str("partitions:\n");
    for a in 0..system.attributes().len() {
        let p = system
            .indiscernibility(ElemSet::singleton(a))
            .expect("attribute in range");
        let _ = writeln!(
            out,
            "  U/R_{} = {}",
            system.attributes()[a],
            system.format_partition(&p)
        );
    }
    let full = system
        .indiscernibility(system.all_attributes())
        .expect("all attributes");
    let _ = writeln!(out, "  U/R_A = {}", system.format_partition(&full));
    let blocks: Vec<String> = quotient
        .blocks()
        .iter()
        .map(|&b| system.format_attributes(b))
        .collect();
    let _ = writeln!(out, "A/R0 = {{{}}}", blocks.join(", "));
    let _ = writeln!(
        out,
        "condition: {}",
        if condition { "holds" } else { "fails" }
    );
    if !condition {
        out.push_str("note: the condition fails, so reducts come from the exhaustive scan\n");
    }
    let method = if use_r0 {
        "one attribute per R0 block"
    } else {
        "exhaustive scan"
    };
    let _ = writeln!(out, "reducts ({method}):");
    for r in &reducts {
        let _ = writeln!(out, "  {}", system.format_attributes(*r));
    }
    Ok(Output::ok(out, String::new()))
}
