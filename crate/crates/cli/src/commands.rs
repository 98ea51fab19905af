//! Subcommands over manifest files.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::json;

use hopfkit::algebroid::{
    build_quotients, check_bialgebroid, galois_fusion_check, galois_maps, takeuchi_subspace, Bialgebroid, BialgebroidBimonad,
};
use hopfkit::crossprod::{
    bialgebra_morphism_check, bosonization, composite_fusion_check, cross_quotient_modules, module_algebra_check,
    projection_check, radford_decompose, retract_check, smash_product, HopfProjection, ModuleAlgebra,
};
use hopfkit::exactalg::random::seeded;
use hopfkit::exactalg::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use hopfkit::hopfcore::fusion::{extract_antipode, AntipodeOutcome};
use hopfkit::hopfcore::{check_antipode_properties, check_bialgebra, BraidedBialgebra, BraidingContext, HopfAlgebraData, Obj, ObjData};
use hopfkit::hopfmod::{check_hopf_module_parts, sweedler_decompose};
use hopfkit::monadrep::{
    check_bimonad_axioms, default_probes, fusion_identity_suite, hopf_check, Backend, Bimonad, RepresentableBimonad, SweepLimits,
};
use hopfkit::report::CheckReport;

use crate::manifest::{self, coassociativity_triple, export_bialgebra, InputError, Kind, Manifest, Object, Source, Verify};
use crate::report::Report;

/// Failures that end a command with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Input(InputError),
    Invalid(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "{e}"),
            CliError::Invalid(m) => write!(f, "{m}"),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

pub type Outcome = Result<Report, CliError>;

/// Settings shared by every subcommand.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub probes: Option<usize>,
    pub seed: u64,
    pub field: Option<FieldSpec>,
    pub emit_manifest: Option<PathBuf>,
}

/// Work that runs over whichever field the input selects.
pub trait Runner {
    fn run<K: Field>(&self, field: K) -> Outcome;
}

pub fn with_field<R: Runner>(spec: FieldSpec, r: &R) -> Outcome {
    match spec {
        FieldSpec::Rationals => r.run(Rationals),
        FieldSpec::Prime(p) => r.run(PrimeField::new(p).map_err(|e| CliError::Invalid(e.to_string()))?),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileCommand {
    Check,
    Antipode,
    HopfCheck,
    Bosonize,
    Radford,
    Smash,
    CrossQuotient,
    HopfmodDecompose,
    AlgebroidCheck,
}

impl FileCommand {
    pub fn name(self) -> &'static str {
        match self {
            FileCommand::Check => "check",
            FileCommand::Antipode => "antipode",
            FileCommand::HopfCheck => "hopf-check",
            FileCommand::Bosonize => "bosonize",
            FileCommand::Radford => "radford",
            FileCommand::Smash => "smash",
            FileCommand::CrossQuotient => "cross-quotient",
            FileCommand::HopfmodDecompose => "hopfmod-decompose",
            FileCommand::AlgebroidCheck => "algebroid-check",
        }
    }

    fn accepts(self, kind: Kind) -> bool {
        match self {
            FileCommand::Check => true,
            FileCommand::Antipode | FileCommand::HopfCheck => {
                matches!(kind, Kind::Bialgebra | Kind::Hopf | Kind::YdBialgebra | Kind::GradedBialgebra)
            }
            FileCommand::Bosonize | FileCommand::Smash => kind == Kind::YdBialgebra,
            FileCommand::Radford => kind == Kind::Projection,
            FileCommand::CrossQuotient => kind == Kind::Morphism,
            FileCommand::HopfmodDecompose => kind == Kind::HopfModule,
            FileCommand::AlgebroidCheck => matches!(kind, Kind::Bialgebroid | Kind::Bialgebra | Kind::Hopf),
        }
    }
}

struct FileRun<'a> {
    command: FileCommand,
    src: &'a Source,
    opts: &'a Options,
}

/// Runs `command` on the manifest at `path`.
pub fn run_file(command: FileCommand, path: &Path, opts: &Options) -> Outcome {
    let src = Source::read(path)?;
    let kind = src.kind()?;
    if !command.accepts(kind) {
        return Err(CliError::Invalid(format!("{}: {} does not accept a {} manifest", src.display, command.name(), kind.name())));
    }
    let spec = src.field(opts.field)?;
    with_field(spec, &FileRun { command, src: &src, opts })
}

fn invalid(src: &Source, e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("{}: {e}", src.display))
}

impl Runner for FileRun<'_> {
    fn run<K: Field>(&self, field: K) -> Outcome {
        let verify = if self.command == FileCommand::Check { Verify::Structure } else { Verify::Full };
        let m = manifest::load(&field, self.src, verify, self.opts.field)?;
        let mut report = Report::new(self.command.name(), m.name.clone(), field.spec());
        let err = |e: &dyn std::fmt::Display| invalid(self.src, e);
        match (self.command, &m.object) {
            (FileCommand::Check, _) => check(&mut report, &m),
            (FileCommand::Antipode, Object::Bialgebra { bialg, .. }) => antipode(&mut report, bialg).map_err(|e| err(&e))?,
            (FileCommand::HopfCheck, Object::Bialgebra { bialg, .. }) => {
                hopf_monad_checks(&mut report, bialg.clone(), self.opts).map_err(|e| err(&e))?
            }
            (FileCommand::Bosonize, Object::Bialgebra { bialg, .. }) => {
                let hopf = bosonize(&mut report, bialg).map_err(|e| err(&e))?;
                if let Some(path) = &self.opts.emit_manifest {
                    let text = export_bialgebra(&hopf.bialg, &format!("{}#H", m.name), Some(&hopf.antipode), None);
                    write_manifest(path, &text)?;
                    report.derive("manifest", path.display().to_string());
                }
            }
            (FileCommand::Smash, Object::Bialgebra { bialg, .. }) => smash(&mut report, bialg).map_err(|e| err(&e))?,
            (FileCommand::Radford, Object::Projection { hopf, p }) => radford(&mut report, hopf, p).map_err(|e| err(&e))?,
            (FileCommand::CrossQuotient, Object::Morphism { from, to, map, module }) => {
                let Some(n) = module else {
                    return Err(invalid(self.src, "cross-quotient needs a module_action block"));
                };
                let induced = cross_quotient_modules(from, to, map, n).map_err(|e| err(&e))?;
                report.checks(induced.report);
                report.derive("source module dim", n.rows()).derive("induced module dim", induced.dim);
                report.derive_matrix("induced action", &induced.action);
            }
            (FileCommand::HopfmodDecompose, Object::HopfModule(x)) => {
                report.checks(check_hopf_module_parts(&x.hopf, &x.action, &x.coaction));
                let d = sweedler_decompose(x).map_err(|e| err(&e))?;
                report.checks(d.report);
                report.derive("module dim", x.dim()).derive("coinvariant dim", d.coinvariants.dim);
                report.derive_matrix("coinvariant projector", &d.coinvariants.projector);
            }
            (FileCommand::AlgebroidCheck, Object::Bialgebroid(b)) => algebroid(&mut report, b, self.opts).map_err(|e| err(&e))?,
            (FileCommand::AlgebroidCheck, Object::Bialgebra { bialg, .. }) => {
                let b = Bialgebroid::from_bialgebra(bialg).map_err(|e| err(&e))?;
                algebroid(&mut report, &b, self.opts).map_err(|e| err(&e))?
            }
            _ => unreachable!("kinds are filtered by accepts"),
        }
        Ok(report.finish())
    }
}

pub(crate) fn write_manifest(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Invalid(format!("{}: cannot write: {e}", path.display())))
}

fn check<K: Field>(report: &mut Report, m: &Manifest<K>) {
    match &m.object {
        Object::Bialgebra { bialg, antipode } => {
            let mut r = check_bialgebra(bialg);
            if let Some(item) = r.items.iter_mut().find(|i| i.name == "coassociativity" && !i.passed) {
                item.witness = coassociativity_triple(bialg).or(item.witness.take());
            }
            report.checks(r);
            if m.kind == Kind::Hopf && report.checks.iter().all(|c| c.passed) {
                hopf_antipode_checks(report, bialg, antipode.as_ref());
            }
        }
        Object::Bialgebroid(b) => {
            report.checks(check_bialgebroid(b));
        }
        Object::HopfModule(x) => {
            report.checks(check_hopf_module_parts(&x.hopf, &x.action, &x.coaction));
        }
        Object::Projection { hopf, p } => {
            report.checks(projection_check(hopf, p));
        }
        Object::Morphism { from, to, map, .. } => {
            report.checks(bialgebra_morphism_check(map, from, to));
        }
    }
}

fn hopf_antipode_checks<K: Field>(report: &mut Report, bialg: &BraidedBialgebra<K>, given: Option<&Matrix<K>>) {
    match extract_antipode(bialg) {
        Ok(AntipodeOutcome::Antipode(s)) => {
            report.check("antipode exists", true, None);
            if let Some(g) = given {
                let diff = g.first_difference(&s).map(|(_, c)| format!("S({})", bialg.space().label(c)));
                report.check("antipode block is the antipode", diff.is_none(), diff);
            }
        }
        Ok(AntipodeOutcome::Singular { rank, size }) => {
            report.check("antipode exists", false, Some(format!("fusion rank {rank}/{size}, no antipode")));
        }
        Err(e) => {
            report.check("antipode exists", false, Some(e.to_string()));
        }
    }
}

/// The smallest `k ≤ limit` with `Sᵏ = id`.
fn antipode_order<K: Field>(s: &Matrix<K>, limit: usize) -> Option<usize> {
    let mut power = s.clone();
    for k in 1..=limit {
        if power.is_identity() {
            return Some(k);
        }
        power = &power * s;
    }
    None
}

pub(crate) fn antipode<K: Field>(report: &mut Report, bialg: &BraidedBialgebra<K>) -> Result<(), hopfkit::hopfcore::HopfError> {
    let n = bialg.dim();
    match extract_antipode(bialg)? {
        AntipodeOutcome::Antipode(s) => {
            report.check("fusion operator invertible", true, Some(format!("fusion rank {n}/{n}")));
            let h = HopfAlgebraData::from_bialgebra(bialg.clone())?;
            report.prefixed("antipode", check_antipode_properties(&h));
            report.derive("fusion rank", format!("{n}/{n}"));
            report.derive_matrix("antipode", &s);
            let order = antipode_order(&s, 4 * n);
            report.derive("antipode order", order.map_or(json!(null), |k| json!(k)));
            let images: Vec<String> = (0..n).map(|i| format!("S({}) = {}", bialg.space().label(i), render_vector(bialg, &s.column(i)))).collect();
            report.derive("antipode on basis", images);
        }
        AntipodeOutcome::Singular { rank, size } => {
            report.check("fusion operator invertible", false, Some(format!("fusion rank {rank}/{size}, no antipode")));
            report.derive("fusion rank", format!("{rank}/{size}"));
        }
    }
    Ok(())
}

pub(crate) fn render_vector<K: Field>(b: &BraidedBialgebra<K>, v: &[K::Elem]) -> String {
    let f = b.field();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(i, c)| {
            let label = b.space().label(i);
            if f.is_one(c) {
                label.to_string()
            } else if f.is_one(&f.neg(c)) {
                format!("-{label}")
            } else {
                format!("{}·{label}", f.render(c))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// The category a braided bialgebra lives in.
pub fn backend_for<K: Field>(b: &BraidedBialgebra<K>) -> Backend<K> {
    match &b.ctx {
        BraidingContext::Trivial => Backend::VectK,
        BraidingContext::GradedBicharacter(chi) => Backend::Graded(chi.clone()),
        BraidingContext::YetterDrinfeld(h) => Backend::ModH(h.clone()),
    }
}

/// The default probes, truncated or extended with seeded random objects to `count`.
pub fn probe_set<K: Field>(backend: &Backend<K>, a: Option<&Obj<K>>, field: &K, opts: &Options) -> Result<Vec<Obj<K>>, hopfkit::monadrep::MonadError> {
    let mut probes = default_probes(backend, a, field, opts.seed)?;
    if let Some(n) = opts.probes {
        let n = n.max(1);
        let mut rng = seeded(opts.seed.wrapping_add(1));
        while probes.len() < n {
            let r = backend.random_object(field, &mut rng, 3);
            let name = format!("R{}#{}", r.dim, probes.len());
            probes.push(r.renamed(name));
        }
        probes.truncate(n);
    }
    Ok(probes)
}

fn probe_names<K: Field>(probes: &[Obj<K>]) -> Vec<String> {
    probes.iter().map(|p| format!("{} (dim {})", p.name, p.dim)).collect()
}

/// Bimonad axioms, fusion identities and Hopf verdicts of a bimonad.
pub(crate) fn bimonad_checks<K: Field>(report: &mut Report, t: &dyn Bimonad<K>, probes: &[Obj<K>]) -> Result<(), hopfkit::monadrep::MonadError> {
    let limits = SweepLimits::default();
    report.prefixed("bimonad", check_bimonad_axioms(t, probes, limits)?);
    report.prefixed("fusion", fusion_identity_suite(t, probes, limits)?);
    report.checks(hopf_check(t, probes)?.to_report());
    report.derive("probes", probe_names(probes));
    Ok(())
}

fn hopf_monad_checks<K: Field>(report: &mut Report, b: BraidedBialgebra<K>, opts: &Options) -> Result<(), hopfkit::monadrep::MonadError> {
    let backend = backend_for(&b);
    let field = b.field().clone();
    let t = RepresentableBimonad::new(backend.clone(), b)?;
    let probes = probe_set(&backend, Some(t.object()), &field, opts)?;
    report.derive("category", backend.name());
    bimonad_checks(report, &t, &probes)
}

pub(crate) fn bosonize<K: Field>(report: &mut Report, a: &BraidedBialgebra<K>) -> Result<HopfAlgebraData<K>, String> {
    let bos = bosonization(a).map_err(|e| e.to_string())?;
    report.prefixed("A#H", check_bialgebra(&bos.bialg));
    report.checks(retract_check(&bos));
    report.checks(composite_fusion_check(a, &bos).map_err(|e| e.to_string())?);
    let n = bos.bialg.dim();
    let hopf = match extract_antipode(&bos.bialg).map_err(|e| e.to_string())? {
        AntipodeOutcome::Antipode(_) => {
            report.check("A#H has an antipode", true, None);
            HopfAlgebraData::from_bialgebra(bos.bialg.clone()).map_err(|e| e.to_string())?
        }
        AntipodeOutcome::Singular { rank, size } => {
            report.check("A#H has an antipode", false, Some(format!("fusion rank {rank}/{size}")));
            return Err(format!("A#H has no antipode (fusion rank {rank}/{size})"));
        }
    };
    report.derive("dim", n).derive("basis", bos.bialg.space().labels().to_vec());
    report.derive_matrix("antipode", &hopf.antipode);
    Ok(hopf)
}

pub(crate) fn smash<K: Field>(report: &mut Report, a: &BraidedBialgebra<K>) -> Result<(), String> {
    let (BraidingContext::YetterDrinfeld(h), ObjData::YetterDrinfeld { action, .. }) = (&a.ctx, &a.data) else {
        return Err("smash needs a Yetter–Drinfeld manifest".into());
    };
    report.prefixed("module algebra", module_algebra_check(h, &a.alg, action));
    if !report.checks.iter().all(|c| c.passed) {
        return Ok(());
    }
    let ma = ModuleAlgebra::new(h, a.alg.clone(), (**action).clone()).map_err(|e| e.to_string())?;
    let s = smash_product(h, &ma).map_err(|e| e.to_string())?;
    report.prefixed("A#H", s.check());
    report.derive("dim", s.dim()).derive("basis", s.space.labels().to_vec());
    Ok(())
}

pub(crate) fn radford<K: Field>(report: &mut Report, hopf: &Arc<HopfAlgebraData<K>>, p: &Matrix<K>) -> Result<(), String> {
    let proj = HopfProjection::new((**hopf).clone(), p.clone()).map_err(|e| e.to_string())?;
    let d = radford_decompose(&proj).map_err(|e| e.to_string())?;
    report.checks(d.report.clone());
    let round = &d.iso * &d.iso_inv;
    report.check("iso ∘ iso⁻¹ = id", round.is_identity(), None);
    report.derive("dim", hopf.dim()).derive("image dim", d.base.dim()).derive("coinvariant dim", d.coinvariants.dim());
    report.derive("coinvariant basis", d.coinvariants.space().labels().to_vec());
    Ok(())
}

pub(crate) fn algebroid<K: Field>(report: &mut Report, b: &Bialgebroid<K>, opts: &Options) -> Result<(), String> {
    report.checks(check_bialgebroid(b));
    let q = build_quotients(b);
    let takeuchi = takeuchi_subspace(b, &q.a_tens_r_a);
    report.derive("A dim", b.dim()).derive("R dim", b.base_dim());
    report.derive("A⊗_R A dim", q.a_tens_r_a.dim()).derive("Ā dim", q.abar.dim());
    report.derive("A×_R A dim", takeuchi.cols());
    let maps = galois_maps(b).map_err(|e| e.to_string())?;
    for g in maps.all() {
        let mut r = CheckReport::new();
        r.items.push(g.verdict());
        report.checks(r);
        report.derive(&format!("{} rank", g.name), format!("{} of {}", g.rank, g.target.dim()));
    }
    let t = BialgebroidBimonad::new(Arc::new(b.clone()));
    let mut rng = seeded(opts.seed);
    let mut probes = t.probes(&mut rng);
    if let Some(n) = opts.probes {
        probes.truncate(n.max(2));
    }
    let limits = SweepLimits::default();
    let axioms = check_bimonad_axioms(&t, &probes, limits).map_err(|e| e.to_string())?;
    report.prefixed("T_A", axioms);
    report.prefixed("T_A", galois_fusion_check(&t, &maps).map_err(|e| e.to_string())?);
    report.derive("probes", probe_names(&probes));
    Ok(())
}
