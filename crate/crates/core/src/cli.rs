//! Batch jobs: a command, an input object and a few parameters in, a JSON
//! or TSV document and an exit status out.
//!
//! Exit status: 0 success, 1 negative verdict (mismatch, violation), 2 bad
//! input, 3 budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::approx::{
    approximation_dims, cover_check, cover_dims, extension_dims, nichols_dims, shuffle_second_approximation, truncate_graded_algebra,
    AlgebraTag, CoverVerdict, HilbertPrefix, TruncatedBialgebra, TruncatedJson,
};
use crate::braid::{
    braid_rep_apply, braiding_diagonal, braiding_from_rack, check_yang_baxter, BraidWord, matsumoto_word, quantum_symmetrizer, Braiding, BraidingJson, Budget, Options,
    Permutation, YangBaxterVerdict,
};
use crate::cocycle::{coboundary, twist_rack_cocycle, GroupCocycle, RackCocycle};
use crate::error::{Error, Result};
use crate::fixtures::{fixture, random_mu};
use crate::linalg::{SparseMatrix, SparseVector};
use crate::rack::{conjugation_rack, cyclic_group, symmetric_group, GroupJson, GroupTable, Rack, RackJson};
use crate::scalar::{embed_common, ExactScalar};
use crate::tensor::{ideal_component_dim, omega_component, quotient_dims, shuffle_product, word_basis, GradedGenerators, RelationSet};
use crate::twist::{intertwiner_matrix, twist_invariance_check, verify_intertwining, IntertwiningVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Validate,
    Yangbaxter,
    Matsumoto,
    Symmetrizer,
    Nichols,
    Cover,
    CoverCheck,
    Quotient,
    Shuffle,
    Truncate,
    Extend,
    Approx,
    F2Shuffle,
    Twist,
    Intertwine,
    Braiding,
    BraidApply,
    WordBasis,
    Ideal,
    Omega,
}

pub const COMMANDS: [&str; 20] = [
    "validate",
    "yangbaxter",
    "matsumoto",
    "symmetrizer",
    "nichols",
    "cover",
    "cover-check",
    "quotient",
    "shuffle",
    "truncate",
    "extend",
    "approx",
    "f2-shuffle",
    "twist",
    "intertwine",
    "braiding",
    "braid-apply",
    "word-basis",
    "ideal",
    "omega",
];

impl FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_string()))
            .map_err(|_| Error::Malformed(format!("unknown command {s:?}; expected one of {}", COMMANDS.join(", "))))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            _ => Err(Error::Malformed(format!("unknown format {s:?}; expected json or tsv"))),
        }
    }
}

/// A job as read from a job file; command-line flags override fields.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub command: Option<Command>,
    /// Inline object, a path to a JSON file, or `"fixture:NAME"`.
    pub input: Option<Value>,
    pub d: Option<usize>,
    #[serde(rename = "N")]
    pub n_max: Option<usize>,
    /// Strand count for single-degree commands.
    pub n: Option<usize>,
    /// Work budget; see [`Budget::work`].
    pub budget: Option<u128>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub tag: Option<AlgebraTag>,
    pub parallel: Option<bool>,
    pub blocked: Option<bool>,
}

impl Job {
    pub fn from_file(path: &Path) -> Result<Job> {
        let text = fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Fields set in `other` replace those in `self`.
    pub fn overlay(mut self, other: Job) -> Job {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(command, input, d, n_max, n, budget, seed, format, tag, parallel, blocked);
        self
    }

    fn options(&self) -> Options {
        let mut budget = Budget::default();
        if let Some(w) = self.budget {
            budget.work = w;
        }
        Options { budget, parallel: self.parallel.unwrap_or(true), blocked: self.blocked.unwrap_or(false) }
    }

    fn n_max(&self) -> usize {
        self.n_max.unwrap_or(5)
    }

    fn d(&self) -> usize {
        self.d.unwrap_or(2)
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

/// The rendered result of a job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division-by-zero",
        Error::ModulusMismatch { .. } => "modulus-mismatch",
        Error::NotEmbeddable { .. } => "not-embeddable",
        Error::Parse(_) => "parse",
        Error::Malformed(_) => "malformed",
        Error::Shape(_) => "shape",
        Error::RackAxiom(_) => "rack-axiom",
        Error::NotClosed { .. } => "not-closed",
        Error::CocycleIdentity { .. } => "cocycle-identity",
        Error::Normalization(_) => "normalization",
        Error::ZeroEntry { .. } => "zero-entry",
        Error::Singular => "singular",
        Error::NotYangBaxter { .. } => "not-yang-baxter",
        Error::MissingEmbedding => "missing-embedding",
        Error::Unsupported(_) => "unsupported",
        Error::NotAssociative { .. } => "not-associative",
        Error::Budget { .. } => "budget",
        Error::Json(_) => "json",
        Error::Io(_) => "io",
    }
}

/// Structured description of an error, including any located violation.
pub fn error_json(e: &Error) -> Value {
    let mut obj = json!({ "kind": error_kind(e), "message": e.to_string() });
    let extra = match e {
        Error::RackAxiom(v) => Some(serde_json::to_value(v).expect("serializable")),
        Error::CocycleIdentity { x, y, z, lhs, rhs } => Some(json!({ "x": x, "y": y, "z": z, "lhs": lhs, "rhs": rhs })),
        Error::NotClosed { conjugator, element, result } => {
            Some(json!({ "conjugator": conjugator, "element": element, "result": result }))
        }
        Error::ZeroEntry { row, col } => Some(json!({ "row": row, "col": col })),
        Error::NotYangBaxter { basis_index } => Some(json!({ "basis_index": basis_index })),
        Error::NotAssociative { i, j, k } => Some(json!({ "i": i, "j": j, "k": k })),
        Error::Budget { what, required, limit, partial } => Some(json!({
            "what": what,
            "required": required.to_string(),
            "limit": limit.to_string(),
            "partial": partial.as_ref().map(|p| p.to_json_value()),
        })),
        _ => None,
    };
    if let Some(x) = extra {
        obj["violation"] = x;
    }
    json!({ "error": obj })
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// A braided vector space read from an input object.
struct BraidedInput {
    braiding: Braiding,
    cocycle: Option<RackCocycle>,
    tag: Option<AlgebraTag>,
}

enum Input {
    Braided(Box<BraidedInput>),
    /// An explicit matrix that has not been checked for the braid equation.
    Matrix { dim: usize, matrix: SparseMatrix },
    Rack(Rack),
    Group(Arc<GroupTable>),
    GroupCocycle(GroupCocycle),
    Truncated(TruncatedBialgebra),
    Presentation(GradedGenerators, RelationSet),
    Permutation(Permutation),
}

fn resolve_value(v: &Value, base: &Path) -> Result<Value> {
    match v {
        Value::String(s) => match s.strip_prefix("fixture:") {
            Some(name) => Ok(json!({ "fixture": name })),
            None => {
                let path = base.join(s);
                let text = fs::read_to_string(&path)
                    .map_err(|e| Error::Malformed(format!("cannot read input file {}: {e}", path.display())))?;
                Ok(serde_json::from_str(&text)?)
            }
        },
        Value::Object(_) => Ok(v.clone()),
        _ => Err(Error::Malformed("input must be an object, a file path or \"fixture:NAME\"".into())),
    }
}

fn field<T: serde::de::DeserializeOwned>(obj: &Map<String, Value>, key: &str) -> Result<T> {
    let v = obj.get(key).ok_or_else(|| Error::Malformed(format!("missing field {key:?}")))?;
    serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(format!("field {key:?}: {e}")))
}

/// A group given as a table (`group`) or by name (`symmetric_group: n`,
/// `cyclic_group: m`).
fn group_from(obj: &Map<String, Value>) -> Result<Arc<GroupTable>> {
    let g = if obj.contains_key("symmetric_group") {
        symmetric_group(field(obj, "symmetric_group")?)?
    } else if obj.contains_key("cyclic_group") {
        cyclic_group(field(obj, "cyclic_group")?)?
    } else {
        GroupTable::from_json(field::<GroupJson>(obj, "group")?)?
    };
    Ok(Arc::new(g))
}

/// Subset elements given as indices or labels.
fn subset_from(g: &GroupTable, obj: &Map<String, Value>) -> Result<Vec<usize>> {
    let raw: Vec<Value> = field(obj, "subset")?;
    raw.iter()
        .map(|v| match v {
            Value::Number(n) => n.as_u64().map(|i| i as usize).ok_or_else(|| Error::Malformed(format!("bad subset index {n}"))),
            Value::String(s) => g.find_label(s).ok_or_else(|| Error::Malformed(format!("no group element labelled {s:?}"))),
            _ => Err(Error::Malformed("subset entries must be indices or labels".into())),
        })
        .collect()
}

fn parse_input(obj: &Map<String, Value>) -> Result<Input> {
    let has = |k: &str| obj.contains_key(k);
    let has_group = has("group") || has("symmetric_group") || has("cyclic_group");
    if has("fixture") {
        let f = fixture(&field::<String>(obj, "fixture")?)?;
        return Ok(Input::Braided(Box::new(BraidedInput { braiding: f.braiding, cocycle: f.cocycle, tag: Some(f.tag) })));
    }
    if has("truncated") {
        return Ok(Input::Truncated(TruncatedBialgebra::from_json(field::<TruncatedJson>(obj, "truncated")?)?));
    }
    if has("generators") {
        let gens = GradedGenerators::new(field(obj, "generators")?)?;
        let mut rels = RelationSet::new();
        if has("relations") {
            #[derive(Deserialize)]
            struct Rel {
                degree: usize,
                vector: Vec<ExactScalar>,
            }
            for r in field::<Vec<Rel>>(obj, "relations")? {
                let (m, v) = if r.vector.is_empty() { (1, r.vector) } else { embed_common(&r.vector)? };
                rels.push(r.degree, SparseVector::from_dense(m, &v));
            }
        }
        return Ok(Input::Presentation(gens, rels));
    }
    if has("permutation") {
        let one_based: Vec<usize> = field(obj, "permutation")?;
        if one_based.contains(&0) {
            return Err(Error::Malformed("permutations are written 1-based in one-line notation".into()));
        }
        return Ok(Input::Permutation(Permutation::new(one_based.into_iter().map(|i| i - 1).collect())?));
    }
    if has("diagonal") {
        let b = braiding_diagonal(&field::<Vec<Vec<ExactScalar>>>(obj, "diagonal")?)?;
        return Ok(Input::Braided(Box::new(BraidedInput { braiding: b, cocycle: None, tag: None })));
    }
    if has("entries") {
        let j: BraidingJson = serde_json::from_value(Value::Object(obj.clone()))?;
        let explicit = matches!(j.provenance, crate::braid::ProvenanceJson::Explicit);
        if explicit {
            let n = j.dim * j.dim;
            let m = SparseMatrix::from_json(crate::linalg::MatrixJson { rows: n, cols: n, entries: j.entries })?;
            return Ok(Input::Matrix { dim: j.dim, matrix: m });
        }
        let b = Braiding::from_json(j)?;
        let cocycle = match b.provenance() {
            crate::braid::Provenance::Rack(q) => Some((**q).clone()),
            _ => None,
        };
        return Ok(Input::Braided(Box::new(BraidedInput { braiding: b, cocycle, tag: None })));
    }
    if has_group && has("subset") {
        let g = group_from(obj)?;
        let rack = conjugation_rack(&g, &subset_from(&g, obj)?)?;
        if has("q") {
            let q = RackCocycle::new(rack, field(obj, "q")?)?;
            return Ok(Input::Braided(Box::new(BraidedInput { braiding: braiding_from_rack(&q)?, cocycle: Some(q), tag: None })));
        }
        return Ok(Input::Rack(rack));
    }
    if has("rack") {
        let rack = Rack::from_json(field::<RackJson>(obj, "rack")?)?;
        if has("q") {
            let degree: usize = if has("degree") { field(obj, "degree")? } else { 1 };
            let q = RackCocycle::from_json(crate::cocycle::RackCocycleJson { rack: rack.to_json(), q: field(obj, "q")?, degree })?;
            return Ok(Input::Braided(Box::new(BraidedInput { braiding: braiding_from_rack(&q)?, cocycle: Some(q), tag: None })));
        }
        return Ok(Input::Rack(rack));
    }
    if has_group {
        let g = group_from(obj)?;
        if has("sigma") {
            return Ok(Input::GroupCocycle(GroupCocycle::new(g, field(obj, "sigma")?)?));
        }
        if has("mu") {
            return Ok(Input::GroupCocycle(coboundary(&g, &field::<Vec<ExactScalar>>(obj, "mu")?)?));
        }
        return Ok(Input::Group(g));
    }
    Err(Error::Malformed(
        "unrecognised input object; expected one of the keys fixture, rack, group, symmetric_group, cyclic_group, diagonal, entries, truncated, generators, permutation"
            .into(),
    ))
}

/// The braided vector space described by an input object (same keys as
/// job inputs, including `"fixture:NAME"`).
pub fn braiding_from_input(v: &Value) -> Result<Braiding> {
    match resolve_value(v, Path::new("."))? {
        Value::Object(m) => Ok(braided(parse_input(&m)?)?.braiding),
        _ => Err(Error::Malformed("input must be a JSON object".into())),
    }
}

fn input_object(job: &Job, base: &Path) -> Result<Map<String, Value>> {
    let v = job.input.as_ref().ok_or_else(|| Error::Malformed("the job has no input".into()))?;
    match resolve_value(v, base)? {
        Value::Object(m) => Ok(m),
        _ => Err(Error::Malformed("input file must contain a JSON object".into())),
    }
}

fn braided(input: Input) -> Result<BraidedInput> {
    match input {
        Input::Braided(b) => Ok(*b),
        Input::Matrix { dim, matrix } => Ok(BraidedInput {
            braiding: Braiding::from_matrix(dim, matrix, crate::braid::Provenance::Explicit)?,
            cocycle: None,
            tag: None,
        }),
        _ => Err(Error::Malformed("this command needs a braided vector space as input".into())),
    }
}

/// The group cocycle for twist jobs: `sigma`, a coboundary of `mu`, or a
/// seeded random coboundary with values of order dividing 12.
fn twisting_cocycle(obj: &Map<String, Value>, q: &RackCocycle, seed: u64) -> Result<GroupCocycle> {
    let emb = q.rack().embedding().ok_or(Error::MissingEmbedding)?;
    let g = emb.group.clone();
    if obj.contains_key("sigma") {
        return GroupCocycle::new(g, field(obj, "sigma")?);
    }
    if obj.contains_key("mu") {
        return coboundary(&g, &field::<Vec<ExactScalar>>(obj, "mu")?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    coboundary(&g, &random_mu(&mut rng, &g, 12))
}

fn prefix_outcome(command: &str, p: &HilbertPrefix, format: Format, extra: Value) -> Outcome {
    let output = match format {
        Format::Tsv => p.to_tsv(),
        Format::Json => {
            let mut v = json!({ "command": command, "result": p.to_json_value() });
            if let Value::Object(m) = extra {
                for (k, x) in m {
                    v[k] = x;
                }
            }
            render_json(&v)
        }
    };
    Outcome { code: EXIT_OK, output }
}

fn verdict_tsv(rows: &[(usize, Option<usize>, Option<usize>)]) -> String {
    let mut out = String::from("degree\tcover\tnichols\tflag\n");
    let cell = |x: Option<usize>| x.map_or("NA".to_string(), |v| v.to_string());
    for (n, a, b) in rows {
        let flag = match (a, b) {
            (Some(a), Some(b)) if a == b => "agree",
            (Some(_), Some(_)) => "mismatch",
            _ => "budget-truncated",
        };
        out.push_str(&format!("{n}\t{}\t{}\t{flag}\n", cell(*a), cell(*b)));
    }
    out
}

fn run_inner(job: &Job, base: &Path) -> Result<Outcome> {
    let command = job.command.ok_or_else(|| Error::Malformed("no command given".into()))?;
    let format = job.format.unwrap_or_default();
    let opts = job.options();
    let name = serde_json::to_value(command).expect("serializable").as_str().unwrap_or_default().to_string();
    let obj = input_object(job, base)?;
    let input = parse_input(&obj)?;
    let ok = |v: Value| Outcome { code: EXIT_OK, output: render_json(&v) };
    match command {
        Command::Validate => {
            let (kind, details) = match input {
                Input::Rack(r) => ("rack", json!({ "size": r.size(), "op": r.table(), "quandle": r.is_quandle(), "orbits": r.orbits() })),
                Input::Braided(b) => match &b.cocycle {
                    Some(q) => ("rack-cocycle", json!({ "size": q.rack().size(), "modulus": q.modulus() })),
                    None => ("braiding", json!({ "dim": b.braiding.dim() })),
                },
                Input::Matrix { dim, matrix } => {
                    Braiding::from_matrix(dim, matrix, crate::braid::Provenance::Explicit)?;
                    ("braiding", json!({ "dim": dim }))
                }
                Input::GroupCocycle(s) => ("group-cocycle", json!({ "order": s.group().order(), "sigma": s.table() })),
                Input::Group(g) => {
                    let mut orders = std::collections::BTreeMap::<usize, usize>::new();
                    for x in 0..g.order() {
                        *orders.entry(g.element_order(x)).or_default() += 1;
                    }
                    ("group", json!({ "order": g.order(), "identity": g.identity(), "elements_by_order": orders }))
                }
                Input::Truncated(a) => ("truncated", json!({ "d": a.d(), "dims": a.dims() })),
                Input::Presentation(g, r) => ("presentation", json!({ "generators": g.dims(), "relations": r.len() })),
                Input::Permutation(p) => ("permutation", json!({ "inversions": p.inversions() })),
            };
            Ok(ok(json!({ "command": name, "kind": kind, "valid": true, "details": details })))
        }
        Command::Yangbaxter => {
            let m = match input {
                Input::Matrix { matrix, .. } => matrix,
                other => braided(other)?.braiding.matrix().clone(),
            };
            let v = check_yang_baxter(&m)?;
            let code = if v.is_ok() { EXIT_OK } else { EXIT_VERDICT };
            let out = json!({ "command": name, "result": v });
            Ok(Outcome { code, output: if format == Format::Tsv { yb_tsv(&v) } else { render_json(&out) } })
        }
        Command::Matsumoto => {
            let Input::Permutation(p) = input else {
                return Err(Error::Malformed("matsumoto needs {\"permutation\": [...]}".into()));
            };
            let w = matsumoto_word(&p);
            Ok(ok(json!({ "command": name, "letters": w.letters(), "word": w.to_string(), "length": w.len(), "inversions": p.inversions() })))
        }
        Command::Symmetrizer => {
            let b = braided(input)?;
            let n = job.n.unwrap_or(2);
            let q = quantum_symmetrizer(&b.braiding, n, &opts)?;
            Ok(ok(json!({ "command": name, "n": n, "rank": q.rank(), "matrix": q.to_json() })))
        }
        Command::Nichols => {
            let b = braided(input)?;
            let p = nichols_dims(&b.braiding, job.n_max(), &opts)?;
            Ok(prefix_outcome(&name, &p, format, json!({})))
        }
        Command::Cover => {
            let b = braided(input)?;
            let p = cover_dims(&b.braiding, job.d(), job.n_max(), &opts)?;
            Ok(prefix_outcome(&name, &p, format, json!({ "d": job.d() })))
        }
        Command::CoverCheck => {
            let b = braided(input)?;
            let r = cover_check(&b.braiding, job.d(), job.n_max(), &opts)?;
            let code = if r.verdict.agrees() { EXIT_OK } else { EXIT_VERDICT };
            let output = match format {
                Format::Tsv => verdict_tsv(&(0..=job.n_max()).map(|n| (n, r.cover.get(n), r.nichols.get(n))).collect::<Vec<_>>()),
                Format::Json => render_json(&json!({
                    "command": name,
                    "d": r.d,
                    "verdict": r.verdict,
                    "cover": r.cover.to_json_value(),
                    "nichols": r.nichols.to_json_value(),
                })),
            };
            Ok(Outcome { code, output })
        }
        Command::Quotient => {
            let Input::Presentation(gens, rels) = input else {
                return Err(Error::Malformed("quotient needs {\"generators\": [...], \"relations\": [...]}".into()));
            };
            let p = HilbertPrefix::exact(quotient_dims(&gens, &rels, job.n_max(), &opts.budget)?);
            Ok(prefix_outcome(&name, &p, format, json!({})))
        }
        Command::Shuffle => {
            let [p, q]: [usize; 2] = field(&obj, "degrees")?;
            let b = braided(input)?;
            let m = b.braiding.modulus();
            let vec_of = |key: &str| -> Result<SparseVector> {
                let vals: Vec<ExactScalar> = field(&obj, key)?;
                let vals = vals.iter().map(|v| v.embed(m)).collect::<Result<Vec<_>>>()?;
                Ok(SparseVector::from_dense(m, &vals))
            };
            let w = shuffle_product(&b.braiding, p, &vec_of("u")?, q, &vec_of("v")?, &opts.budget)?;
            Ok(ok(json!({ "command": name, "result": w.to_dense() })))
        }
        Command::Truncate => {
            let b = braided(input)?;
            let tag = job.tag.or(b.tag).unwrap_or(AlgebraTag::Nichols);
            let a = truncate_graded_algebra(&b.braiding, tag, job.d(), &opts)?;
            Ok(ok(json!({ "command": name, "tag": tag, "truncated": a.to_json() })))
        }
        Command::Extend => {
            let a = match input {
                Input::Truncated(a) => a,
                Input::Presentation(g, r) => crate::approx::truncate_presentation(&g, &r, job.d(), &opts.budget)?,
                other => {
                    let b = braided(other)?;
                    let tag = job.tag.or(b.tag).unwrap_or(AlgebraTag::Nichols);
                    truncate_graded_algebra(&b.braiding, tag, job.d(), &opts)?
                }
            };
            let p = extension_dims(&a, job.n_max(), &opts.budget)?;
            Ok(prefix_outcome(&name, &p, format, json!({ "d": a.d() })))
        }
        Command::Approx => {
            let b = braided(input)?;
            let tag = job.tag.or(b.tag).unwrap_or(AlgebraTag::Nichols);
            let p = approximation_dims(&b.braiding, tag, job.d(), job.n_max(), &opts)?;
            Ok(prefix_outcome(&name, &p, format, json!({ "d": job.d(), "tag": tag })))
        }
        Command::F2Shuffle => {
            let b = braided(input)?;
            let r = shuffle_second_approximation(&b.braiding, job.n_max(), &opts)?;
            Ok(ok(json!({
                "command": name,
                "extension": r.extension.to_json_value(),
                "presented": r.presented.to_json_value(),
            })))
        }
        Command::Twist => {
            let b = braided(input)?;
            let q = b.cocycle.ok_or_else(|| Error::Malformed("twist needs a rack cocycle".into()))?;
            let sigma = twisting_cocycle(&obj, &q, job.seed())?;
            let qprime = twist_rack_cocycle(&q, &sigma)?;
            let report = twist_invariance_check(&q, &sigma, job.d(), job.n_max(), &opts)?;
            let code = if report.invariant { EXIT_OK } else { EXIT_VERDICT };
            let out = json!({
                "command": name,
                "qprime": qprime.cocycle.table(),
                "q_dims": report.q_dims.to_json_value(),
                "qprime_dims": report.qprime_dims.to_json_value(),
                "q_cover_dims": report.q_cover_dims.to_json_value(),
                "qprime_cover_dims": report.qprime_cover_dims.to_json_value(),
                "cover_verdicts": report.cover_verdicts,
                "intertwiner_verified_up_to_n": report.intertwiner_verified_up_to_n,
                "intertwining_violation": report.intertwining_violation,
                "invariant": report.invariant,
            });
            Ok(Outcome { code, output: render_json(&out) })
        }
        Command::Braiding => {
            let b = braided(input)?;
            Ok(ok(json!({ "command": name, "braiding": b.braiding.to_json() })))
        }
        Command::BraidApply => {
            let b = braided(input)?;
            let n = job.n.unwrap_or(2);
            let w = BraidWord::new(n, field(&obj, "word")?)?;
            let m = b.braiding.modulus();
            let vals: Vec<ExactScalar> = field(&obj, "vector")?;
            let vals = vals.iter().map(|v| v.embed(m)).collect::<Result<Vec<_>>>()?;
            let out = braid_rep_apply(&b.braiding, n, &w, &SparseVector::from_dense(m, &vals))?;
            Ok(ok(json!({ "command": name, "n": n, "word": w.to_string(), "result": out.to_dense() })))
        }
        Command::WordBasis => {
            let Input::Presentation(gens, _) = input else {
                return Err(Error::Malformed("word-basis needs {\"generators\": [...]}".into()));
            };
            let n = job.n.unwrap_or(2);
            let wb = word_basis(&gens, n);
            Ok(ok(json!({ "command": name, "n": n, "dim": wb.dim(), "compositions": wb.compositions() })))
        }
        Command::Ideal => {
            let Input::Presentation(gens, rels) = input else {
                return Err(Error::Malformed("ideal needs {\"generators\": [...], \"relations\": [...]}".into()));
            };
            let n = job.n.unwrap_or(2);
            let dim = ideal_component_dim(&gens, &rels, n, &opts.budget)?;
            Ok(ok(json!({ "command": name, "n": n, "ambient": word_basis(&gens, n).dim(), "dim": dim })))
        }
        Command::Omega => {
            let b = braided(input)?;
            let n = job.n.unwrap_or(2);
            let m = omega_component(&b.braiding, n, &opts)?;
            Ok(ok(json!({ "command": name, "n": n, "rank": m.rank(), "matrix": m.to_json() })))
        }
        Command::Intertwine => {
            let b = braided(input)?;
            let q = b.cocycle.ok_or_else(|| Error::Malformed("intertwine needs a rack cocycle".into()))?;
            let sigma = twisting_cocycle(&obj, &q, job.seed())?;
            let qprime = if obj.contains_key("qprime") {
                RackCocycle::new_unchecked(q.rack().clone(), field(&obj, "qprime")?)?
            } else {
                twist_rack_cocycle(&q, &sigma)?.cocycle
            };
            let n = job.n.unwrap_or(3);
            let f = intertwiner_matrix(&q, &sigma, n, &opts.budget)?;
            let verdict = verify_intertwining(&q, &qprime, &sigma, n, &opts.budget)?;
            let code = if verdict == IntertwiningVerdict::Ok { EXIT_OK } else { EXIT_VERDICT };
            let out = json!({ "command": name, "n": n, "diagonal": f.diagonal(), "result": verdict });
            Ok(Outcome { code, output: render_json(&out) })
        }
    }
}

fn yb_tsv(v: &YangBaxterVerdict) -> String {
    match v {
        YangBaxterVerdict::Ok => "verdict\tbasis_index\nok\tNA\n".into(),
        YangBaxterVerdict::Violation { basis_index } => format!("verdict\tbasis_index\nviolation\t{basis_index}\n"),
    }
}

/// Runs a job; relative input paths are resolved against `base`.
pub fn run(job: &Job, base: &Path) -> Outcome {
    match run_inner(job, base) {
        Ok(o) => o,
        Err(e) => {
            let code = exit_code(&e);
            let output = match (&e, job.format.unwrap_or_default()) {
                (Error::Budget { partial: Some(p), .. }, Format::Tsv) => p.to_tsv(),
                _ => render_json(&error_json(&e)),
            };
            Outcome { code, output }
        }
    }
}

/// Writes `contents` to `path` through a temporary file and a rename.
pub fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    let tmp = dir.join(format!(".{}.tmp{}", path.file_name().and_then(|n| n.to_str()).unwrap_or("out"), std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Whether a cover verdict is the negative one; used by callers that branch on verdicts.
pub fn is_mismatch(v: &CoverVerdict) -> bool {
    !v.agrees()
}
