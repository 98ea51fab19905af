use std::path::{Path, PathBuf};

use hopfkit::exactalg::FieldSpec;
use hopfkit::{PrimeField, Rationals};
use hopfkit_cli::commands::{with_field, Outcome, Runner};
use hopfkit_cli::demos::{exported_manifest, DEMOS};
use hopfkit_cli::manifest::{export_loaded, load, InputError, Source, Verify};
use hopfkit_cli::{run_args, Execution};
use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Execution {
    run_args(std::iter::once("hopfkit").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let e = run(&all);
    assert!(e.stderr.is_empty(), "{}", e.stderr);
    (serde_json::from_str(&e.stdout).expect("json report"), e.code)
}

fn failing(report: &Value) -> Vec<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfkit-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn check_sweedler_passes_every_axiom() {
    let (r, code) = json(&["check", &fixture("sweedler-h4.json")]);
    assert_eq!(code, 0);
    assert!(failing(&r).is_empty());
    assert_eq!(r["checks"].as_array().unwrap().len(), 12);
    assert_eq!(r["exit_code"], 0);
}

#[test]
fn antipode_of_the_monoid_reports_rank_three() {
    let (r, code) = json(&["antipode", &fixture("monoid-1a.json")]);
    assert_eq!(code, 1);
    assert_eq!(r["checks"][0]["witness"], "fusion rank 3/4, no antipode");
    assert_eq!(r["derived"]["fusion rank"], "3/4");
    let text = run(&["antipode", &fixture("monoid-1a.json")]);
    assert!(text.stdout.contains("fusion rank 3/4, no antipode"));
}

#[test]
fn antipode_of_sweedler_is_derived() {
    let (r, code) = json(&["antipode", &fixture("sweedler-h4.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["derived"]["antipode order"], 4);
    let on_basis: Vec<&str> = r["derived"]["antipode on basis"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(on_basis, ["S(1) = 1", "S(g) = g", "S(x) = -gx", "S(gx) = x"]);
}

#[test]
fn taft_over_f7_has_antipode_of_order_six() {
    let (r, code) = json(&["antipode", &fixture("taft-f7.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["field"], "F7");
    assert_eq!(r["derived"]["antipode order"], 6);
}

#[test]
fn mutation_fixtures_name_the_failing_axioms() {
    let (r, code) = json(&["check", &fixture("mutation-noncoassociative.json")]);
    assert_eq!(code, 1);
    assert_eq!(failing(&r), ["coassociativity", "left counit", "comultiplicativity"]);
    let witness = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "coassociativity").unwrap()["witness"].clone();
    assert_eq!(witness, "Δ(x) at component g⊗g⊗x: (Δ⊗id)Δ gives 2, (id⊗Δ)Δ gives 4");

    let (r, code) = json(&["check", &fixture("mutation-broken-counit.json")]);
    assert_eq!(code, 1);
    assert_eq!(failing(&r), ["left counit", "right counit", "counit multiplicative"]);
}

#[test]
fn validating_commands_reject_mutations_with_every_failure() {
    let e = run(&["antipode", &fixture("mutation-noncoassociative.json")]);
    assert_eq!(e.code, 2);
    assert!(e.stdout.is_empty());
    let lines: Vec<&str> = e.stderr.lines().skip(1).collect();
    assert_eq!(lines.len(), 3, "{}", e.stderr);
    assert!(lines[0].ends_with(
        "mutation-noncoassociative.json:25: axiom \"coassociativity\" fails: Δ(x) at component g⊗g⊗x: (Δ⊗id)Δ gives 2, (id⊗Δ)Δ gives 4"
    ));
    assert!(lines[1].contains("\"left counit\" fails at x"));
    assert!(lines[2].contains("\"comultiplicativity\" fails at g⊗x"));
}

#[test]
fn non_prime_fields_are_rejected() {
    let e = run(&["check", &fixture("bad-field.json")]);
    assert_eq!(e.code, 2);
    assert!(e.stderr.contains("bad-field.json:2: 9 is not prime"), "{}", e.stderr);
    let e = run(&["check", &fixture("kz2.json"), "--field", "F4"]);
    assert_eq!(e.code, 2);
    assert!(e.stderr.contains("4 is not prime"));
}

#[test]
fn malformed_entries_are_all_reported_with_lines() {
    let e = run(&["check", &fixture("malformed.json")]);
    assert_eq!(e.code, 2);
    let lines: Vec<&str> = e.stderr.lines().collect();
    assert_eq!(lines[0], "error: 3 problem(s) in input");
    assert!(lines[1].ends_with("malformed.json:10: m[1]: duplicate entry for indices [0, 0, 0]"));
    assert!(lines[2].ends_with("malformed.json:11: m[2]: index 5 at position 1 is out of range (dimension 2)"));
    assert!(lines[3].ends_with("malformed.json:12: m[3]: division by zero in scalar `1/0`"));
}

#[test]
fn unknown_keys_and_blocks_are_rejected() {
    let dir = scratch("unknown");
    let text = std::fs::read_to_string(fixture("kz2.json")).unwrap();
    let extra_key = dir.join("extra-key.json");
    std::fs::write(&extra_key, text.replacen("\"dim\": 2,", "\"dim\": 2,\n  \"dims\": 3,", 1)).unwrap();
    let e = run(&["check", extra_key.to_str().unwrap()]);
    assert_eq!(e.code, 2);
    assert!(e.stderr.contains("extra-key.json:6: invalid manifest: unknown field `dims`"), "{}", e.stderr);

    let extra_block = dir.join("extra-block.json");
    std::fs::write(&extra_block, text.replacen("\"blocks\": {", "\"blocks\": {\n    \"action\": [],", 1)).unwrap();
    let e = run(&["check", extra_block.to_str().unwrap()]);
    assert_eq!(e.code, 2);
    assert!(e.stderr.contains("unknown block \"action\" for kind hopf"), "{}", e.stderr);

    let missing = dir.join("missing.json");
    std::fs::write(&missing, text.replacen("\"eps\"", "\"epsilon\"", 1)).unwrap();
    let e = run(&["check", missing.to_str().unwrap()]);
    assert!(e.stderr.contains("missing block \"eps\""), "{}", e.stderr);
}

#[test]
fn field_override_reads_the_same_file_over_a_prime_field() {
    let (r, code) = json(&["check", &fixture("sweedler-h4.json"), "--field", "F5"]);
    assert_eq!(code, 0);
    assert_eq!(r["field"], "F5");
    let (r, code) = json(&["check", &fixture("sweedler-h4.json"), "--field", "F2"]);
    assert_eq!(code, 0, "{r}");
}

#[test]
fn commands_reject_the_wrong_kind() {
    let e = run(&["radford", &fixture("sweedler-h4.json")]);
    assert_eq!(e.code, 2);
    assert!(e.stderr.contains("radford does not accept a hopf manifest"));
}

#[test]
fn every_subcommand_runs_on_its_fixture() {
    let cases: [(&str, &str, i32); 10] = [
        ("hopf-check", "kz2.json", 0),
        ("hopf-check", "monoid-1a.json", 1),
        ("hopf-check", "super-line.json", 0),
        ("bosonize", "nichols-line.json", 0),
        ("smash", "nichols-line.json", 0),
        ("radford", "radford-h4.json", 0),
        ("cross-quotient", "kz2-into-h4.json", 0),
        ("hopfmod-decompose", "hopf-module-h4.json", 0),
        ("algebroid-check", "pair-groupoid.json", 0),
        ("algebroid-check", "monoid-1a.json", 1),
    ];
    for (cmd, file, expected) in cases {
        let (r, code) = json(&[cmd, &fixture(file)]);
        assert_eq!(code, expected, "{cmd} {file}: {:?}", failing(&r));
        assert_eq!(r["command"], cmd);
    }
    let (r, _) = json(&["hopfmod-decompose", &fixture("hopf-module-h4.json")]);
    assert_eq!(r["derived"]["coinvariant dim"], 3);
    let (r, _) = json(&["cross-quotient", &fixture("kz2-into-h4.json")]);
    assert_eq!(r["derived"]["induced module dim"], 2);
    let (r, _) = json(&["radford", &fixture("radford-h4.json")]);
    assert_eq!((r["derived"]["image dim"].clone(), r["derived"]["coinvariant dim"].clone()), (2.into(), 2.into()));
    let (r, _) = json(&["algebroid-check", &fixture("monoid-1a.json")]);
    assert_eq!(r["derived"]["Hl rank"], "3 of 4");
}

#[test]
fn bosonize_emits_a_loadable_hopf_manifest() {
    let out = scratch("bosonize").join("h4.json");
    let e = run(&["bosonize", &fixture("nichols-line.json"), "--emit-manifest", out.to_str().unwrap()]);
    assert_eq!(e.code, 0, "{}", e.stderr);
    let (r, code) = json(&["antipode", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["derived"]["antipode order"], 4);
}

#[test]
fn probes_flag_controls_the_probe_set() {
    let (r, _) = json(&["hopf-check", &fixture("kz2.json"), "--probes", "2"]);
    assert_eq!(r["derived"]["probes"].as_array().unwrap().len(), 2);
    let (r, code) = json(&["hopf-check", &fixture("kz2.json"), "--probes", "6", "--seed", "11"]);
    assert_eq!(code, 0);
    assert_eq!(r["derived"]["probes"].as_array().unwrap().len(), 6);
}

#[test]
fn list_demos_has_at_least_ten_entries() {
    let (r, code) = json(&["list-demos"]);
    assert_eq!(code, 0);
    assert!(r["derived"].as_object().unwrap().len() >= 10);
    let text = run(&["list-demos"]).stdout;
    assert_eq!(text.lines().count(), DEMOS.len());
}

#[test]
fn demo_truncation_prints_pre_hopf_pass_and_hopf_failure() {
    let e = run(&["demo", "truncation-prehopf"]);
    assert_eq!(e.code, 1);
    assert!(e.stdout.contains("PASS left pre-Hopf"));
    assert!(e.stdout.contains("FAIL left Hopf  [witness: (k(-1), k(1))]"));
    assert!(e.stdout.contains("H^l(k(-1), k(1)): dim 1 → dim 0"));
}

#[test]
fn unknown_demos_and_usage_errors_exit_two() {
    assert_eq!(run(&["demo", "nope"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["check"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["check", "/nonexistent/file.json"]).code, 2);
}

struct Reexport<'a>(&'a Source);

impl Runner for Reexport<'_> {
    fn run<K: hopfkit::Field>(&self, field: K) -> Outcome {
        let m = load(&field, self.0, Verify::Full, None)?;
        let mut r = hopfkit_cli::report::Report::new("reexport", m.name.clone(), FieldSpec::Rationals);
        r.derive("text", export_loaded(&m, self.0));
        Ok(r)
    }
}

fn reexport(path: &Path) -> String {
    let src = Source::read(path).unwrap();
    let spec = src.field(None).unwrap();
    let r = with_field(spec, &Reexport(&src)).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    r.derived["text"].as_str().unwrap().to_string()
}

#[test]
fn every_demo_manifest_reloads_bit_identically() {
    let dir = scratch("roundtrip");
    let mut exported = 0;
    for d in DEMOS {
        let Some(text) = exported_manifest(d.name, &dir).unwrap() else {
            assert_eq!(d.name, "truncation-prehopf");
            continue;
        };
        exported += 1;
        assert_eq!(reexport(&dir.join(format!("{}.json", d.name))), text, "{}", d.name);
    }
    assert_eq!(exported, DEMOS.len() - 1);
}

#[test]
fn fixtures_reload_bit_identically() {
    for name in ["sweedler-h4.json", "kz2-into-h4.json", "nichols-line.json", "super-line.json", "pair-groupoid.json", "hopf-module-h4.json"] {
        let path = PathBuf::from(fixture(name));
        assert_eq!(reexport(&path), std::fs::read_to_string(&path).unwrap(), "{name}");
    }
}

#[test]
fn loading_collects_errors_instead_of_stopping() {
    let src = Source::read(Path::new(&fixture("malformed.json"))).unwrap();
    let err: InputError = load(&Rationals, &src, Verify::Structure, None).unwrap_err();
    assert_eq!(err.diagnostics.len(), 3);
    assert!(err.diagnostics.iter().all(|d| d.line.is_some()));
    let f7 = PrimeField::new(7).unwrap();
    assert!(load(&f7, &Source::read(Path::new(&fixture("taft-f7.json"))).unwrap(), Verify::Full, None).is_ok());
}

#[test]
fn reports_are_deterministic_across_runs() {
    for args in [["antipode", "taft-f7.json"], ["hopf-check", "kz2.json"], ["algebroid-check", "pair-groupoid.json"]] {
        let path = fixture(args[1]);
        let a = run(&[args[0], &path, "--format", "json"]);
        let b = run(&[args[0], &path, "--format", "json"]);
        assert_eq!(a, b);
    }
}
