//! JSON manifests: one structure per file, sparse structure constants with
//! exact scalars written as strings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use hopfkit::algebroid::{check_bialgebroid, BaseAlgebra, Bialgebroid};
use hopfkit::crossprod::{bialgebra_morphism_check, projection_check};
use hopfkit::exactalg::{flat_index, multi_index, BasedSpace, Field, FieldSpec, Matrix};
use hopfkit::hopfcore::builtins::builtin;
use hopfkit::hopfcore::fusion::{extract_antipode, AntipodeOutcome};
use hopfkit::hopfcore::{
    check_bialgebra, AlgebraData, Bicharacter, BraidedBialgebra, BraidingContext, CoalgebraData, HopfAlgebraData, ObjData,
};
use hopfkit::hopfmod::{check_hopf_module_parts, HopfModule};
use hopfkit::report::CheckReport;

use crate::locate::Locator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub file: String,
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "{}:{}: {}", self.file, l, self.message),
            None => write!(f, "{}: {}", self.file, self.message),
        }
    }
}

/// Every problem found while reading a manifest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub diagnostics: Vec<Diagnostic>,
}

impl InputError {
    pub fn single(file: &str, line: Option<usize>, message: impl Into<String>) -> Self {
        InputError { diagnostics: vec![Diagnostic { file: file.into(), line, message: message.into() }] }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.diagnostics.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Bialgebra,
    Hopf,
    YdBialgebra,
    GradedBialgebra,
    Bialgebroid,
    HopfModule,
    Projection,
    Morphism,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Bialgebra,
        Kind::Hopf,
        Kind::YdBialgebra,
        Kind::GradedBialgebra,
        Kind::Bialgebroid,
        Kind::HopfModule,
        Kind::Projection,
        Kind::Morphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
            Kind::YdBialgebra => "yd-bialgebra",
            Kind::GradedBialgebra => "graded-bialgebra",
            Kind::Bialgebroid => "bialgebroid",
            Kind::HopfModule => "hopf-module",
            Kind::Projection => "projection",
            Kind::Morphism => "morphism",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }

    fn is_bialgebra(self) -> bool {
        matches!(self, Kind::Bialgebra | Kind::Hopf | Kind::YdBialgebra | Kind::GradedBialgebra)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBicharacter {
    pub orders: Vec<u64>,
    pub values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawManifest {
    pub field: String,
    pub kind: String,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub base: Option<String>,
    #[serde(default)]
    pub hopf: Option<String>,
    #[serde(default)]
    pub from: Option<String>,
    #[serde(default)]
    pub to: Option<String>,
    #[serde(default)]
    pub degrees: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub bicharacter: Option<RawBicharacter>,
    #[serde(default)]
    pub base_dim: Option<usize>,
    #[serde(default)]
    pub base_basis: Option<Vec<String>>,
    #[serde(default)]
    pub module_dim: Option<usize>,
    #[serde(default)]
    pub blocks: BTreeMap<String, Vec<Value>>,
}

/// A manifest file after JSON parsing.
pub struct Source {
    pub path: PathBuf,
    pub display: String,
    pub raw: RawManifest,
    locator: Locator,
}

impl Source {
    pub fn read(path: &Path) -> Result<Source, InputError> {
        let display = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| InputError::single(&display, None, format!("cannot read: {e}")))?;
        Source::parse(path, &text)
    }

    pub fn parse(path: &Path, text: &str) -> Result<Source, InputError> {
        let display = path.display().to_string();
        let raw: RawManifest = serde_json::from_str(text).map_err(|e| {
            let line = (e.line() > 0).then_some(e.line());
            InputError::single(&display, line, format!("invalid manifest: {e}"))
        })?;
        Ok(Source { path: path.to_path_buf(), display, raw, locator: Locator::new(text) })
    }

    fn line(&self, pointer: &str) -> Option<usize> {
        self.locator.line(pointer)
    }

    /// The declared field, or the override.
    pub fn field(&self, override_field: Option<FieldSpec>) -> Result<FieldSpec, InputError> {
        if let Some(f) = override_field {
            return Ok(f);
        }
        self.raw.field.parse().map_err(|e| InputError::single(&self.display, self.line("/field"), format!("{e}")))
    }

    pub fn kind(&self) -> Result<Kind, InputError> {
        Kind::parse(&self.raw.kind).ok_or_else(|| {
            let known: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
            InputError::single(
                &self.display,
                self.line("/kind"),
                format!("unknown kind {:?} (expected one of {})", self.raw.kind, known.join(", ")),
            )
        })
    }

    pub fn name(&self) -> String {
        self.raw.name.clone().unwrap_or_else(|| {
            self.path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "manifest".into())
        })
    }
}

/// The validated structure a manifest describes.
#[derive(Clone, Debug)]
pub enum Object<K: Field> {
    Bialgebra { bialg: BraidedBialgebra<K>, antipode: Option<Matrix<K>> },
    Bialgebroid(Bialgebroid<K>),
    HopfModule(HopfModule<K>),
    Projection { hopf: Arc<HopfAlgebraData<K>>, p: Matrix<K> },
    Morphism { from: BraidedBialgebra<K>, to: BraidedBialgebra<K>, map: Matrix<K>, module: Option<Matrix<K>> },
}

#[derive(Clone, Debug)]
pub struct Manifest<K: Field> {
    pub kind: Kind,
    pub name: String,
    pub object: Object<K>,
}

/// Whether loading also verifies the axioms of the target type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verify {
    /// Shapes, indices and scalars only.
    Structure,
    /// Also every axiom; violations are input errors.
    Full,
}

struct Builder<'a, K: Field> {
    field: &'a K,
    src: &'a Source,
    override_field: Option<FieldSpec>,
    diags: Vec<Diagnostic>,
}

impl<'a, K: Field> Builder<'a, K> {
    fn err(&mut self, pointer: &str, message: impl Into<String>) {
        self.diags.push(Diagnostic { file: self.src.display.clone(), line: self.src.line(pointer), message: message.into() });
    }

    fn require<T: Clone>(&mut self, value: &Option<T>, key: &str) -> Option<T> {
        if value.is_none() {
            self.err("", format!("missing key \"{key}\" for kind {}", self.src.raw.kind));
        }
        value.clone()
    }

    fn space(&mut self, labels: &Option<Vec<String>>, key: &str, dim: usize, prefix: &str) -> BasedSpace {
        match labels {
            None => BasedSpace::indexed(prefix, dim),
            Some(l) if l.len() != dim => {
                self.err(&format!("/{key}"), format!("{key} has {} labels but the dimension is {dim}", l.len()));
                BasedSpace::indexed(prefix, dim)
            }
            Some(l) => match BasedSpace::new(l.clone()) {
                Ok(s) => s,
                Err(e) => {
                    self.err(&format!("/{key}"), e.to_string());
                    BasedSpace::indexed(prefix, dim)
                }
            },
        }
    }

    /// A sparse block: each entry lists the input indices, then the output
    /// indices, then the scalar.
    fn block(&mut self, name: &str, inputs: &[usize], outputs: &[usize], required: bool) -> Option<Matrix<K>> {
        let pointer = format!("/blocks/{name}");
        let Some(entries) = self.src.raw.blocks.get(name) else {
            if required {
                self.err("/blocks", format!("missing block \"{name}\""));
            }
            return None;
        };
        let arity = inputs.len() + outputs.len();
        let (rows, cols) = (outputs.iter().product::<usize>(), inputs.iter().product::<usize>());
        let dims: Vec<usize> = inputs.iter().chain(outputs).copied().collect();
        let mut seen = BTreeSet::new();
        let mut triplets = Vec::new();
        let mut ok = true;
        for (e, entry) in entries.iter().enumerate() {
            let at = format!("{pointer}/{e}");
            let Some(items) = entry.as_array() else {
                self.err(&at, format!("{name}[{e}]: expected an array [indices…, \"scalar\"]"));
                ok = false;
                continue;
            };
            if items.len() != arity + 1 {
                self.err(&at, format!("{name}[{e}]: expected {arity} indices and a scalar, found {} items", items.len()));
                ok = false;
                continue;
            }
            let mut idx = Vec::with_capacity(arity);
            for (p, (item, &bound)) in items.iter().zip(&dims).enumerate() {
                match item.as_u64() {
                    Some(i) if (i as usize) < bound => idx.push(i as usize),
                    Some(i) => {
                        self.err(&at, format!("{name}[{e}]: index {i} at position {p} is out of range (dimension {bound})"));
                        ok = false;
                    }
                    None => {
                        self.err(&at, format!("{name}[{e}]: position {p} must be a non-negative integer index"));
                        ok = false;
                    }
                }
            }
            let scalar = match &items[arity] {
                Value::String(s) => match self.field.parse(s) {
                    Ok(v) => Some(v),
                    Err(err) => {
                        self.err(&at, format!("{name}[{e}]: {err}"));
                        None
                    }
                },
                other => {
                    self.err(&at, format!("{name}[{e}]: scalar must be a string, found {other}"));
                    None
                }
            };
            let (Some(v), true) = (scalar, idx.len() == arity) else {
                ok = false;
                continue;
            };
            if !seen.insert(idx.clone()) {
                self.err(&at, format!("{name}[{e}]: duplicate entry for indices {idx:?}"));
                ok = false;
                continue;
            }
            let col = flat_index(inputs, &idx[..inputs.len()]);
            let row = flat_index(outputs, &idx[inputs.len()..]);
            triplets.push((row, col, v));
        }
        ok.then(|| Matrix::from_triplets(self.field, rows, cols, triplets))
    }

    fn unknown_blocks(&mut self, allowed: &[&str]) {
        let extra: Vec<String> = self.src.raw.blocks.keys().filter(|k| !allowed.contains(&k.as_str())).cloned().collect();
        for k in extra {
            self.err(&format!("/blocks/{k}"), format!("unknown block \"{k}\" for kind {} (allowed: {})", self.src.raw.kind, allowed.join(", ")));
        }
    }

    fn reference(&mut self, key: &str, target: &str) -> Option<BraidedBialgebra<K>> {
        let pointer = format!("/{key}");
        if let Some(name) = target.strip_prefix("builtin:") {
            return match builtin(self.field, name) {
                Ok(b) => Some(b),
                Err(e) => {
                    self.err(&pointer, format!("{key}: {e}"));
                    None
                }
            };
        }
        let dir = self.src.path.parent().unwrap_or_else(|| Path::new("."));
        let path = dir.join(target);
        let loaded = Source::read(&path).and_then(|s| {
            if self.override_field.is_none() {
                let declared = s.field(None)?;
                if declared != self.field.spec() {
                    return Err(InputError::single(&s.display, s.line("/field"), format!("field {declared} does not match {}", self.field.spec())));
                }
            }
            load(self.field, &s, Verify::Full, self.override_field)
        });
        match loaded {
            Ok(Manifest { object: Object::Bialgebra { bialg, .. }, .. }) => Some(bialg),
            Ok(m) => {
                self.err(&pointer, format!("{key}: {target} is a {} manifest, expected a bialgebra or Hopf algebra", m.kind.name()));
                None
            }
            Err(e) => {
                self.err(&pointer, format!("{key}: cannot load {target}"));
                self.diags.extend(e.diagnostics);
                None
            }
        }
    }

    fn hopf_reference(&mut self, key: &str, target: &str) -> Option<Arc<HopfAlgebraData<K>>> {
        let b = self.reference(key, target)?;
        match HopfAlgebraData::from_bialgebra(b) {
            Ok(h) => Some(Arc::new(h)),
            Err(e) => {
                self.err(&format!("/{key}"), format!("{key}: {e}"));
                None
            }
        }
    }

    /// Failed checks become diagnostics anchored at the block they concern.
    fn report_failures(&mut self, report: &CheckReport, anchor: impl Fn(&str) -> String) {
        for item in report.failures() {
            let mut msg = format!("axiom \"{}\" fails", item.name);
            if let Some(w) = &item.witness {
                msg.push_str(&format!(" at {w}"));
            }
            let p = anchor(&item.name);
            self.err(&p, msg);
        }
    }

    fn finish<T>(self, value: Option<T>) -> Result<T, InputError> {
        match value {
            Some(v) if self.diags.is_empty() => Ok(v),
            _ => Err(InputError { diagnostics: self.diags }),
        }
    }
}

fn bialgebra_anchor(name: &str) -> String {
    let block = match name {
        n if n.starts_with("object") => "action",
        "associativity" | "left unit" | "right unit" => "m",
        "coassociativity" => "delta",
        "left counit" | "right counit" | "counit multiplicative" | "counit of unit" => "eps",
        "coproduct of unit" => "u",
        _ => return "/blocks".into(),
    };
    format!("/blocks/{block}")
}

/// For a coassociativity failure, the first input and output triple where
/// `(Δ⊗id)Δ` and `(id⊗Δ)Δ` differ.
pub fn coassociativity_triple<K: Field>(b: &BraidedBialgebra<K>) -> Option<String> {
    let f = b.field();
    let i = hopfkit::exactalg::id(f, b.dim());
    let lhs = &b.coalg.delta.tensor(&i) * &b.coalg.delta;
    let rhs = &i.tensor(&b.coalg.delta) * &b.coalg.delta;
    let (row, col) = lhs.first_difference(&rhs)?;
    let space = b.space();
    let t = multi_index(&[b.dim(); 3], row);
    Some(format!(
        "Δ({}) at component {}⊗{}⊗{}: (Δ⊗id)Δ gives {}, (id⊗Δ)Δ gives {}",
        space.label(col),
        space.label(t[0]),
        space.label(t[1]),
        space.label(t[2]),
        f.render(&lhs.get(row, col)),
        f.render(&rhs.get(row, col))
    ))
}

/// Reads the structure described by `src` over `field`.
pub fn load<K: Field>(field: &K, src: &Source, verify: Verify, override_field: Option<FieldSpec>) -> Result<Manifest<K>, InputError> {
    let kind = src.kind()?;
    let mut bld = Builder { field, src, override_field, diags: Vec::new() };
    let raw = &src.raw;
    let name = src.name();
    let object = match kind {
        k if k.is_bialgebra() => load_bialgebra(&mut bld, k, verify),
        Kind::Bialgebroid => load_bialgebroid(&mut bld, verify),
        Kind::HopfModule => {
            bld.unknown_blocks(&["action", "coaction"]);
            let dim = bld.require(&raw.dim, "dim");
            let hopf = bld.require(&raw.hopf, "hopf").and_then(|h| bld.hopf_reference("hopf", &h));
            match (dim, hopf) {
                (Some(d), Some(h)) => {
                    let n = h.dim();
                    let action = bld.block("action", &[n, d], &[d], true);
                    let coaction = bld.block("coaction", &[d], &[n, d], true);
                    let space = bld.space(&raw.basis, "basis", d, "m");
                    match (action, coaction) {
                        (Some(a), Some(c)) => {
                            if verify == Verify::Full {
                                let r = check_hopf_module_parts(&h, &a, &c);
                                bld.report_failures(&r, |n| if n.contains("coaction") { "/blocks/coaction".into() } else { "/blocks/action".into() });
                            }
                            Some(Object::HopfModule(HopfModule { hopf: h, name: name.clone(), space, action: a, coaction: c }))
                        }
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        Kind::Projection => {
            bld.unknown_blocks(&["p"]);
            let hopf = bld.require(&raw.hopf, "hopf").and_then(|h| bld.hopf_reference("hopf", &h));
            hopf.and_then(|h| {
                let n = h.dim();
                let p = bld.block("p", &[n], &[n], true)?;
                if verify == Verify::Full {
                    let r = projection_check(&h, &p);
                    bld.report_failures(&r, |_| "/blocks/p".into());
                }
                Some(Object::Projection { hopf: h, p })
            })
        }
        Kind::Morphism => {
            bld.unknown_blocks(&["map", "module_action"]);
            let from = bld.require(&raw.from, "from").and_then(|r| bld.reference("from", &r));
            let to = bld.require(&raw.to, "to").and_then(|r| bld.reference("to", &r));
            match (from, to) {
                (Some(from), Some(to)) => {
                    let map = bld.block("map", &[from.dim()], &[to.dim()], true);
                    let module = match raw.module_dim {
                        Some(d) => bld.block("module_action", &[from.dim(), d], &[d], true),
                        None => {
                            if raw.blocks.contains_key("module_action") {
                                bld.err("/blocks/module_action", "module_action needs \"module_dim\"");
                            }
                            None
                        }
                    };
                    map.map(|map| {
                        if verify == Verify::Full {
                            let r = bialgebra_morphism_check(&map, &from, &to);
                            bld.report_failures(&r, |_| "/blocks/map".into());
                        }
                        Object::Morphism { from, to, map, module }
                    })
                }
                _ => None,
            }
        }
        _ => unreachable!("all kinds handled"),
    };
    bld.finish(object).map(|object| Manifest { kind, name, object })
}

fn load_bialgebra<K: Field>(bld: &mut Builder<'_, K>, kind: Kind, verify: Verify) -> Option<Object<K>> {
    let raw = &bld.src.raw;
    let f = bld.field;
    let mut allowed = vec!["m", "u", "delta", "eps"];
    match kind {
        Kind::Hopf => allowed.push("antipode"),
        Kind::YdBialgebra => allowed.extend(["action", "coaction"]),
        _ => {}
    }
    bld.unknown_blocks(&allowed);
    let d = bld.require(&raw.dim, "dim")?;
    let space = bld.space(&raw.basis, "basis", d, "e");
    let m = bld.block("m", &[d, d], &[d], true);
    let u = bld.block("u", &[], &[d], true);
    let delta = bld.block("delta", &[d], &[d, d], true);
    let eps = bld.block("eps", &[d], &[], true);
    let antipode = if kind == Kind::Hopf { bld.block("antipode", &[d], &[d], false) } else { None };
    let (ctx, data) = match kind {
        Kind::YdBialgebra => {
            let base = bld.require(&raw.base, "base").and_then(|b| bld.hopf_reference("base", &b))?;
            let n = base.dim();
            let action = bld.block("action", &[n, d], &[d], true)?;
            let coaction = bld.block("coaction", &[d], &[n, d], true)?;
            (BraidingContext::YetterDrinfeld(base), ObjData::YetterDrinfeld { action: Arc::new(action), coaction: Arc::new(coaction) })
        }
        Kind::GradedBialgebra => {
            let chi = bld.require(&raw.bicharacter, "bicharacter")?;
            let mut values = Vec::new();
            for (i, row) in chi.values.iter().enumerate() {
                let mut parsed = Vec::new();
                for (j, v) in row.iter().enumerate() {
                    match f.parse(v) {
                        Ok(x) => parsed.push(x),
                        Err(e) => bld.err(&format!("/bicharacter/values/{i}/{j}"), e.to_string()),
                    }
                }
                values.push(parsed);
            }
            let r = chi.orders.len();
            if values.len() != r || values.iter().any(|row| row.len() != r) {
                bld.err("/bicharacter", format!("bicharacter values must form a {r}x{r} table"));
                return None;
            }
            let degrees = bld.require(&raw.degrees, "degrees")?;
            if degrees.len() != d || degrees.iter().any(|g| g.len() != r) {
                bld.err("/degrees", format!("degrees must list {d} vectors of length {r}"));
                return None;
            }
            let chi = Bicharacter { orders: chi.orders.clone(), values };
            if let Err(e) = chi.validate(f) {
                bld.err("/bicharacter", e.to_string());
                return None;
            }
            let degrees = degrees.iter().map(|g| chi.reduce(g)).collect();
            (BraidingContext::GradedBicharacter(chi), ObjData::Graded(degrees))
        }
        _ => (BraidingContext::Trivial, ObjData::Plain),
    };
    let (m, u, delta, eps) = (m?, u?, delta?, eps?);
    let alg = AlgebraData { space: space.clone(), m, u };
    let coalg = CoalgebraData { space, delta, eps };
    let bialg = match BraidedBialgebra::new(alg, coalg, ctx, data) {
        Ok(b) => b,
        Err(e) => {
            bld.err("", e.to_string());
            return None;
        }
    };
    if verify == Verify::Full {
        let r = check_bialgebra(&bialg);
        if r.find("coassociativity").is_some_and(|i| !i.passed) {
            if let Some(t) = coassociativity_triple(&bialg) {
                bld.err("/blocks/delta", format!("axiom \"coassociativity\" fails: {t}"));
            }
        }
        let rest = CheckReport { items: r.items.into_iter().filter(|i| i.name != "coassociativity").collect() };
        bld.report_failures(&rest, bialgebra_anchor);
        if kind == Kind::Hopf && bld.diags.is_empty() {
            hopf_verdict(bld, &bialg, antipode.as_ref());
        }
    }
    Some(Object::Bialgebra { bialg, antipode })
}

fn hopf_verdict<K: Field>(bld: &mut Builder<'_, K>, bialg: &BraidedBialgebra<K>, given: Option<&Matrix<K>>) {
    match extract_antipode(bialg) {
        Ok(AntipodeOutcome::Antipode(s)) => {
            if let Some(g) = given {
                if let Some((_, c)) = g.first_difference(&s) {
                    bld.err("/blocks/antipode", format!("antipode block is not the antipode: differs at S({})", bialg.space().label(c)));
                }
            }
        }
        Ok(AntipodeOutcome::Singular { rank, size }) => {
            bld.err("", format!("no antipode: fusion rank {rank}/{size}"));
        }
        Err(e) => bld.err("", e.to_string()),
    }
}

fn load_bialgebroid<K: Field>(bld: &mut Builder<'_, K>, verify: Verify) -> Option<Object<K>> {
    let raw = &bld.src.raw;
    bld.unknown_blocks(&["base_m", "base_u", "m", "u", "source", "target", "delta", "eps"]);
    let n = bld.require(&raw.base_dim, "base_dim");
    let d = bld.require(&raw.dim, "dim");
    let (n, d) = (n?, d?);
    let base_space = bld.space(&raw.base_basis, "base_basis", n, "r");
    let space = bld.space(&raw.basis, "basis", d, "e");
    let base_m = bld.block("base_m", &[n, n], &[n], true);
    let base_u = bld.block("base_u", &[], &[n], true);
    let m = bld.block("m", &[d, d], &[d], true);
    let u = bld.block("u", &[], &[d], true);
    let s = bld.block("source", &[n], &[d], true);
    let t = bld.block("target", &[n], &[d], true);
    let delta = bld.block("delta", &[d], &[d, d], true);
    let eps = bld.block("eps", &[d], &[n], true);
    let base_alg = AlgebraData { space: base_space, m: base_m?, u: base_u? };
    let base = match BaseAlgebra::new(base_alg) {
        Ok(b) => Arc::new(b),
        Err(e) => {
            bld.err("/blocks/base_m", e.to_string());
            return None;
        }
    };
    let alg = AlgebraData { space, m: m?, u: u? };
    let b = match Bialgebroid::new(base, alg, s?, t?, delta?, eps?) {
        Ok(b) => b,
        Err(e) => {
            bld.err("", e.to_string());
            return None;
        }
    };
    if verify == Verify::Full {
        let r = check_bialgebroid(&b);
        bld.report_failures(&r, |name| {
            if name.starts_with("ε") {
                "/blocks/eps".into()
            } else if name.starts_with('Δ') || name.contains("counit") {
                "/blocks/delta".into()
            } else if name.starts_with("s") || name.starts_with("t ") {
                "/blocks/source".into()
            } else {
                "/blocks".into()
            }
        });
    }
    Some(Object::Bialgebroid(b))
}

/// Reads and loads a manifest over the field it declares (or the override).
pub fn load_path<K: Field>(field: &K, path: &Path, verify: Verify, override_field: Option<FieldSpec>) -> Result<Manifest<K>, InputError> {
    let src = Source::read(path)?;
    load(field, &src, verify, override_field)
}

/// Writer for the manifest format with one sparse entry per line.
pub struct ManifestWriter {
    fields: Vec<(String, String)>,
    blocks: Vec<(String, Vec<String>)>,
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

impl ManifestWriter {
    pub fn new(field: FieldSpec, kind: Kind, name: &str) -> Self {
        ManifestWriter {
            fields: vec![
                ("field".into(), quote(&field.to_string())),
                ("kind".into(), quote(kind.name())),
                ("name".into(), quote(name)),
            ],
            blocks: Vec::new(),
        }
    }

    pub fn raw(&mut self, key: &str, json: String) -> &mut Self {
        self.fields.push((key.into(), json));
        self
    }

    pub fn number(&mut self, key: &str, n: usize) -> &mut Self {
        self.raw(key, n.to_string())
    }

    pub fn string(&mut self, key: &str, s: &str) -> &mut Self {
        self.raw(key, quote(s))
    }

    pub fn labels(&mut self, key: &str, space: &BasedSpace) -> &mut Self {
        let items: Vec<String> = space.labels().iter().map(|l| quote(l)).collect();
        self.raw(key, format!("[{}]", items.join(", ")))
    }

    /// Entries ordered by input index, then output index.
    pub fn block<K: Field>(&mut self, name: &str, m: &Matrix<K>, inputs: &[usize], outputs: &[usize]) -> &mut Self {
        let f = m.field();
        let mut entries: Vec<(usize, usize, String)> =
            m.entries().filter(|(_, _, v)| !f.is_zero(v)).map(|(r, c, v)| (c, r, f.render(v))).collect();
        entries.sort();
        let lines = entries
            .into_iter()
            .map(|(c, r, v)| {
                let mut idx = multi_index(inputs, c);
                idx.extend(multi_index(outputs, r));
                let mut parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                parts.push(quote(&v));
                format!("[{}]", parts.join(", "))
            })
            .collect();
        self.blocks.push((name.into(), lines));
        self
    }

    pub fn finish(&self) -> String {
        let mut out = String::from("{\n");
        for (k, v) in &self.fields {
            out.push_str(&format!("  {}: {},\n", quote(k), v));
        }
        out.push_str("  \"blocks\": {");
        for (i, (name, lines)) in self.blocks.iter().enumerate() {
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            if lines.is_empty() {
                out.push_str(&format!("    {}: []", quote(name)));
                continue;
            }
            out.push_str(&format!("    {}: [\n", quote(name)));
            for (j, l) in lines.iter().enumerate() {
                out.push_str(&format!("      {l}{}\n", if j + 1 < lines.len() { "," } else { "" }));
            }
            out.push_str("    ]");
        }
        out.push_str(if self.blocks.is_empty() { "}\n}\n" } else { "\n  }\n}\n" });
        out
    }
}

/// The manifest of a bialgebra; `base` names the Yetter–Drinfeld base.
pub fn export_bialgebra<K: Field>(b: &BraidedBialgebra<K>, name: &str, antipode: Option<&Matrix<K>>, base: Option<&str>) -> String {
    let d = b.dim();
    let kind = match (&b.ctx, antipode) {
        (BraidingContext::YetterDrinfeld(_), _) => Kind::YdBialgebra,
        (BraidingContext::GradedBicharacter(_), _) => Kind::GradedBialgebra,
        (BraidingContext::Trivial, Some(_)) => Kind::Hopf,
        (BraidingContext::Trivial, None) => Kind::Bialgebra,
    };
    let f = b.field();
    let mut w = ManifestWriter::new(f.spec(), kind, name);
    w.number("dim", d).labels("basis", b.space());
    match (&b.ctx, &b.data) {
        (BraidingContext::YetterDrinfeld(_), _) => {
            w.string("base", base.unwrap_or("builtin:kZ2"));
        }
        (BraidingContext::GradedBicharacter(chi), ObjData::Graded(degrees)) => {
            let deg: Vec<String> = degrees.iter().map(|g| serde_json::to_string(g).expect("ints")).collect();
            w.raw("degrees", format!("[{}]", deg.join(", ")));
            let orders = serde_json::to_string(&chi.orders).expect("ints");
            let values: Vec<String> = chi
                .values
                .iter()
                .map(|row| format!("[{}]", row.iter().map(|v| quote(&f.render(v))).collect::<Vec<_>>().join(", ")))
                .collect();
            w.raw("bicharacter", format!("{{\"orders\": {orders}, \"values\": [{}]}}", values.join(", ")));
        }
        _ => {}
    }
    w.block("m", &b.alg.m, &[d, d], &[d]).block("u", &b.alg.u, &[], &[d]);
    w.block("delta", &b.coalg.delta, &[d], &[d, d]).block("eps", &b.coalg.eps, &[d], &[]);
    if let Some(s) = antipode {
        w.block("antipode", s, &[d], &[d]);
    }
    if let (BraidingContext::YetterDrinfeld(h), ObjData::YetterDrinfeld { action, coaction }) = (&b.ctx, &b.data) {
        let n = h.dim();
        w.block("action", action, &[n, d], &[d]).block("coaction", coaction, &[d], &[n, d]);
    }
    w.finish()
}

pub fn export_bialgebroid<K: Field>(b: &Bialgebroid<K>, name: &str) -> String {
    let (n, d) = (b.base_dim(), b.dim());
    let mut w = ManifestWriter::new(b.field().spec(), Kind::Bialgebroid, name);
    w.number("base_dim", n).labels("base_basis", &b.base.alg.space).number("dim", d).labels("basis", &b.alg.space);
    w.block("base_m", &b.base.alg.m, &[n, n], &[n]).block("base_u", &b.base.alg.u, &[], &[n]);
    w.block("m", &b.alg.m, &[d, d], &[d]).block("u", &b.alg.u, &[], &[d]);
    w.block("source", &b.source, &[n], &[d]).block("target", &b.target, &[n], &[d]);
    w.block("delta", &b.delta, &[d], &[d, d]).block("eps", &b.eps, &[d], &[n]);
    w.finish()
}

pub fn export_hopf_module<K: Field>(x: &HopfModule<K>, hopf_ref: &str) -> String {
    let (n, d) = (x.hopf.dim(), x.dim());
    let mut w = ManifestWriter::new(x.hopf.field().spec(), Kind::HopfModule, &x.name);
    w.string("hopf", hopf_ref).number("dim", d).labels("basis", &x.space);
    w.block("action", &x.action, &[n, d], &[d]).block("coaction", &x.coaction, &[d], &[n, d]);
    w.finish()
}

pub fn export_projection<K: Field>(p: &Matrix<K>, name: &str, hopf_ref: &str) -> String {
    let n = p.rows();
    let mut w = ManifestWriter::new(p.field().spec(), Kind::Projection, name);
    w.string("hopf", hopf_ref);
    w.block("p", p, &[n], &[n]);
    w.finish()
}

pub fn export_morphism<K: Field>(map: &Matrix<K>, name: &str, from: &str, to: &str, module: Option<&Matrix<K>>) -> String {
    let mut w = ManifestWriter::new(map.field().spec(), Kind::Morphism, name);
    w.string("from", from).string("to", to);
    if let Some(a) = module {
        w.number("module_dim", a.rows());
    }
    w.block("map", map, &[map.cols()], &[map.rows()]);
    if let Some(a) = module {
        let d = a.rows();
        w.block("module_action", a, &[map.cols(), d], &[d]);
    }
    w.finish()
}

/// Writes `m` back out; references to other manifests are kept as `src` names them.
pub fn export_loaded<K: Field>(m: &Manifest<K>, src: &Source) -> String {
    let raw = &src.raw;
    let reference = |r: &Option<String>| r.clone().unwrap_or_default();
    match &m.object {
        Object::Bialgebra { bialg, antipode } => export_bialgebra(bialg, &m.name, antipode.as_ref(), raw.base.as_deref()),
        Object::Bialgebroid(b) => export_bialgebroid(b, &m.name),
        Object::HopfModule(x) => export_hopf_module(x, &reference(&raw.hopf)),
        Object::Projection { p, .. } => export_projection(p, &m.name, &reference(&raw.hopf)),
        Object::Morphism { map, module, .. } => export_morphism(map, &m.name, &reference(&raw.from), &reference(&raw.to), module.as_ref()),
    }
}
