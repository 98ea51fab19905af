//! The built-in example gallery.

use std::sync::Arc;

use hopfkit::algebroid::pair_groupoid;
use hopfkit::crossprod::{bosonization, cross_quotient_modules};
use hopfkit::exactalg::{Field, FieldSpec, Matrix};
use hopfkit::hopfcore::builtins::{cyclic_group_algebra, nichols_line_over_kz2, sweedler, transport};
use hopfkit::hopfcore::fusion::{extract_antipode, AntipodeOutcome};
use hopfkit::hopfcore::{builtin, check_bialgebra, BraidedBialgebra, HopfAlgebraData, Obj};
use hopfkit::hopfmod::{
    check_hopf_module, comonad_morphism_check, cotensor, cotensor_fusion, induced_central_coalgebra, sweedler_decompose,
    CentralCoalgebra, HopfModule,
};
use hopfkit::monadrep::{fusion_left, graded_line, Backend, Bimonad, RepresentableBimonad, TModule, TruncationBimonad};
use hopfkit::report::CheckReport;

use crate::commands::{self, backend_for, probe_set, with_field, CliError, Options, Runner};
use crate::manifest::{export_bialgebra, export_bialgebroid, export_hopf_module, export_morphism, export_projection};
use crate::report::Report;

pub struct Demo {
    pub name: &'static str,
    pub description: &'static str,
    pub field: FieldSpec,
}

const Q: FieldSpec = FieldSpec::Rationals;

pub const DEMOS: &[Demo] = &[
    Demo { name: "sweedler-h4", description: "Sweedler's H4: axioms, antipode S(g) = g, S(x) = -gx, S^4 = id, S^2 != id", field: Q },
    Demo { name: "monoid-1a", description: "the monoid bialgebra on {1, a} with a² = a: fusion rank 3/4, no antipode", field: Q },
    Demo { name: "taft-f7", description: "the Taft algebra T3 over F7 and its antipode of order 6", field: FieldSpec::Prime(7) },
    Demo { name: "kz2-fusion", description: "bimonad axioms, fusion identities and Hopf verdicts of kZ2 ⊗ -", field: Q },
    Demo { name: "fusion-h4", description: "bimonad axioms, fusion identities and Hopf verdicts of H4 ⊗ -", field: Q },
    Demo { name: "fusion-super-line", description: "fusion identities of the super line in super vector spaces", field: Q },
    Demo { name: "truncation-prehopf", description: "the truncation bimonad on Z-graded spaces: pre-Hopf but not Hopf", field: Q },
    Demo { name: "bosonization-h4", description: "k[x]/(x²) over kZ2 bosonizes to H4 by the generator map", field: Q },
    Demo { name: "smash-sign", description: "the smash product of k[x]/(x²) with kZ2 acting by g·x = -x", field: Q },
    Demo { name: "radford-h4", description: "H4 with the projection onto kZ2 decomposes as a bosonization", field: Q },
    Demo { name: "cross-quotient-h4", description: "H4 ⊗_kZ2 k induced along the inclusion kZ2 → H4", field: Q },
    Demo { name: "hopf-module-h4", description: "coinvariants and the Sweedler decomposition of H4 ⊕ H4⊗k²", field: Q },
    Demo { name: "central-coalgebra-h4", description: "the induced central coalgebra of H4 ⊗ - and its comonad morphisms", field: Q },
    Demo { name: "cotensor-kz2", description: "cotensor products over kZ2 and the fusion isomorphisms", field: Q },
    Demo { name: "pair-groupoid", description: "the pair groupoid algebroid M2(k) over k×k: axioms, Galois maps, T_A fusion", field: Q },
];

pub fn find(name: &str) -> Option<&'static Demo> {
    DEMOS.iter().find(|d| d.name == name)
}

pub fn list() -> Report {
    let mut r = Report::new("list-demos", "gallery", Q);
    for d in DEMOS {
        r.derive(d.name, d.description);
    }
    r.finish()
}

struct DemoRun<'a> {
    demo: &'static Demo,
    opts: &'a Options,
}

pub fn run(name: &str, opts: &Options) -> Result<Report, CliError> {
    let demo = find(name).ok_or_else(|| {
        let names: Vec<&str> = DEMOS.iter().map(|d| d.name).collect();
        CliError::Invalid(format!("unknown demo {name:?} (available: {})", names.join(", ")))
    })?;
    with_field(opts.field.unwrap_or(demo.field), &DemoRun { demo, opts })
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn builtin_or<K: Field>(field: &K, name: &str) -> Result<BraidedBialgebra<K>, CliError> {
    builtin(field, name).map_err(invalid)
}

fn hopf_of<K: Field>(b: BraidedBialgebra<K>) -> Result<Arc<HopfAlgebraData<K>>, CliError> {
    HopfAlgebraData::from_bialgebra(b).map(Arc::new).map_err(invalid)
}

impl Runner for DemoRun<'_> {
    fn run<K: Field>(&self, field: K) -> Result<Report, CliError> {
        let f = &field;
        let mut r = Report::new("demo", self.demo.name, f.spec());
        let manifest = match self.demo.name {
            "sweedler-h4" => {
                let b = sweedler(f).map_err(invalid)?;
                r.checks(check_bialgebra(&b));
                commands::antipode(&mut r, &b).map_err(invalid)?;
                let s = hopf_of(b.clone())?.antipode.clone();
                let g = basis(f, 4, 1);
                let x = basis(f, 4, 2);
                let minus_gx = basis(f, 4, 3).scale(&f.from_i64(-1));
                r.check("S(g) = g", &s * &g == g, None);
                r.check("S(x) = -gx", &s * &x == minus_gx, None);
                let s2 = &s * &s;
                r.check("S^4 = id", (&s2 * &s2).is_identity(), None);
                r.check("S^2 != id", !s2.is_identity(), None);
                Some(export_bialgebra(&b, "sweedler-h4", Some(&s), None))
            }
            "monoid-1a" => {
                let b = builtin_or(f, "monoid")?;
                r.checks(check_bialgebra(&b));
                commands::antipode(&mut r, &b).map_err(invalid)?;
                Some(export_bialgebra(&b, "monoid-1a", None, None))
            }
            "taft-f7" => {
                let b = builtin_or(f, "taft3")?;
                r.checks(check_bialgebra(&b));
                commands::antipode(&mut r, &b).map_err(invalid)?;
                let s = hopf_of(b.clone())?.antipode.clone();
                Some(export_bialgebra(&b, "taft-f7", Some(&s), None))
            }
            "kz2-fusion" | "fusion-h4" | "fusion-super-line" => {
                let (name, builtin_name) = match self.demo.name {
                    "kz2-fusion" => ("kz2", "kZ2"),
                    "fusion-h4" => ("sweedler-h4", "sweedler"),
                    _ => ("super-line", "super-line"),
                };
                let b = builtin_or(f, builtin_name)?;
                let backend = backend_for(&b);
                let t = RepresentableBimonad::new(backend.clone(), b.clone()).map_err(invalid)?;
                let probes = probe_set(&backend, Some(t.object()), f, self.opts).map_err(invalid)?;
                r.derive("category", backend.name());
                commands::bimonad_checks(&mut r, &t, &probes).map_err(invalid)?;
                let antipode = match extract_antipode(&b).map_err(invalid)? {
                    AntipodeOutcome::Antipode(s) if backend == Backend::VectK => Some(s),
                    _ => None,
                };
                Some(export_bialgebra(&b, name, antipode.as_ref(), None))
            }
            "truncation-prehopf" => {
                let t = TruncationBimonad::new(field.clone());
                let probes: Vec<Obj<K>> = match self.opts.probes {
                    None => [-1, 0, 1].into_iter().map(graded_line).collect(),
                    Some(_) => probe_set(t.backend(), None, f, self.opts).map_err(invalid)?,
                };
                commands::bimonad_checks(&mut r, &t, &probes).map_err(invalid)?;
                let h = fusion_left(&t, &graded_line(-1), &graded_line(1)).map_err(invalid)?;
                r.derive("H^l(k(-1), k(1))", format!("dim {} → dim {}", h.dom.dim, h.cod.dim));
                None
            }
            "bosonization-h4" => {
                let a = nichols_line_over_kz2(f).map_err(invalid)?;
                let bos = bosonization(&a).map_err(invalid)?;
                let h4 = sweedler(f).map_err(invalid)?;
                let b = &bos.bialg;
                let (g, x) = (basis(f, 4, 1), basis(f, 4, 2));
                let images = [basis(f, 4, 0), g.clone(), x.clone(), b.alg.product(&g, &x)];
                let phi = Matrix::from_column_vectors(f, 4, &images.iter().map(|v| v.column(0)).collect::<Vec<_>>());
                match phi.try_invert().inverse {
                    Some(phi_inv) => {
                        let pulled = transport(b, &phi_inv, &phi).map_err(invalid)?;
                        let mut iso = CheckReport::new();
                        iso.equal_indexed("generator map preserves m", &pulled.alg.m, &h4.alg.m);
                        iso.equal_indexed("generator map preserves u", &pulled.alg.u, &h4.alg.u);
                        iso.equal_indexed("generator map preserves Δ", &pulled.coalg.delta, &h4.coalg.delta);
                        iso.equal_indexed("generator map preserves ε", &pulled.coalg.eps, &h4.coalg.eps);
                        r.checks(iso);
                    }
                    None => {
                        r.check("generator map invertible", false, Some(format!("rank {}", phi.try_invert().rank)));
                    }
                }
                commands::bosonize(&mut r, &a).map_err(invalid)?;
                Some(export_bialgebra(&a, "nichols-line", None, Some("builtin:kZ2")))
            }
            "smash-sign" => {
                let a = nichols_line_over_kz2(f).map_err(invalid)?;
                commands::smash(&mut r, &a).map_err(invalid)?;
                Some(export_bialgebra(&a, "nichols-line", None, Some("builtin:kZ2")))
            }
            "radford-h4" => {
                let h = hopf_of(sweedler(f).map_err(invalid)?)?;
                let one = f.one();
                let p = Matrix::from_triplets(f, 4, 4, [(0, 0, one.clone()), (1, 1, one)]);
                commands::radford(&mut r, &h, &p).map_err(invalid)?;
                Some(export_projection(&p, "radford-h4", "builtin:sweedler"))
            }
            "cross-quotient-h4" => {
                let l = builtin_or(f, "kZ2")?;
                let k = sweedler(f).map_err(invalid)?;
                let one = f.one();
                let incl = Matrix::from_triplets(f, 4, 2, [(0, 0, one.clone()), (1, 1, one)]);
                let trivial = l.coalg.eps.clone();
                let induced = cross_quotient_modules(&l, &k, &incl, &trivial).map_err(invalid)?;
                r.checks(induced.report);
                r.derive("source module dim", 1).derive("induced module dim", induced.dim);
                r.derive_matrix("induced action", &induced.action);
                Some(export_morphism(&incl, "kz2-into-h4", "builtin:kZ2", "builtin:sweedler", Some(&trivial)))
            }
            "hopf-module-h4" => {
                let h = hopf_of(sweedler(f).map_err(invalid)?)?;
                let x = HopfModule::regular(h.clone()).direct_sum(&HopfModule::free(h, 2)).named("H4 ⊕ H4⊗k²");
                r.checks(check_hopf_module(&x));
                let d = sweedler_decompose(&x).map_err(invalid)?;
                r.checks(d.report);
                r.derive("module dim", x.dim()).derive("coinvariant dim", d.coinvariants.dim);
                Some(export_hopf_module(&x, "builtin:sweedler"))
            }
            "central-coalgebra-h4" => {
                let b = sweedler(f).map_err(invalid)?;
                let t = RepresentableBimonad::new(Backend::VectK, b.clone()).map_err(invalid)?;
                let modules = vec![
                    TModule::free(&t, &Obj::plain(1).named("k")).map_err(invalid)?,
                    TModule::free(&t, &Obj::plain(2).named("k²")).map_err(invalid)?,
                ];
                let probes = [t.backend().unit(), Obj::plain(2).named("k²")];
                let c = induced_central_coalgebra(&t, &probes, &modules).map_err(invalid)?;
                r.prefixed("central coalgebra", c.report.clone());
                r.prefixed("comonad morphism", comonad_morphism_check(&t, &modules).map_err(invalid)?);
                r.derive("coalgebra dim", c.coalg.dim());
                let s = hopf_of(b.clone())?.antipode.clone();
                Some(export_bialgebra(&b, "sweedler-h4", Some(&s), None))
            }
            "cotensor-kz2" => {
                let b = cyclic_group_algebra(f, 2);
                let c = CentralCoalgebra::with_flip(b.coalg.clone());
                r.prefixed("C", c.check());
                let (m3, c2) = (c.cofree(3), c.cofree(2));
                let both = cotensor(&m3, &c2, &c).map_err(invalid)?;
                r.prefixed("(C⊗k³) □ (C⊗k²)", both.report);
                let fusion = cotensor_fusion(&c.regular(), 2, &c).map_err(invalid)?;
                r.prefixed("C □ (C⊗k²)", fusion.report);
                let fusion3 = cotensor_fusion(&m3, 2, &c).map_err(invalid)?;
                r.prefixed("(C⊗k³) □ (C⊗k²) fusion", fusion3.report);
                r.derive("(C⊗k³) □ (C⊗k²) dim", both.comodule.dim);
                r.derive("C □ (C⊗k²) dim", fusion.cotensor.comodule.dim);
                let s = hopf_of(b.clone())?.antipode.clone();
                Some(export_bialgebra(&b, "kz2", Some(&s), None))
            }
            "pair-groupoid" => {
                let b = pair_groupoid(f, 2).map_err(invalid)?;
                commands::algebroid(&mut r, &b, self.opts).map_err(invalid)?;
                Some(export_bialgebroid(&b, "pair-groupoid"))
            }
            other => unreachable!("demo {other} is listed but not implemented"),
        };
        if let Some(path) = &self.opts.emit_manifest {
            match manifest {
                Some(text) => {
                    commands::write_manifest(path, &text)?;
                    r.derive("manifest", path.display().to_string());
                }
                None => return Err(invalid(format!("demo {} has no manifest form", self.demo.name))),
            }
        }
        Ok(r.finish())
    }
}

fn basis<K: Field>(field: &K, n: usize, i: usize) -> Matrix<K> {
    Matrix::from_triplets(field, n, 1, [(i, 0, field.one())])
}

/// The manifest text a demo exports, if it has one.
pub fn exported_manifest(name: &str, dir: &std::path::Path) -> Result<Option<String>, CliError> {
    let path = dir.join(format!("{name}.json"));
    let opts = Options { emit_manifest: Some(path.clone()), ..Options::default() };
    match run(name, &opts) {
        Ok(_) => Ok(Some(std::fs::read_to_string(&path).map_err(invalid)?)),
        Err(CliError::Invalid(m)) if m.contains("no manifest form") => Ok(None),
        Err(e) => Err(e),
    }
}
