//! Command-line driver: fixture loading, orbit construction, sheaf checks,
//! and the full equivalence verification, with deterministic JSON reports.

use twoact::fixture;
use twoact::report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use twoact_core::check::Check;
use twoact_core::Bounds;

#[derive(Parser)]
#[command(
    name = "twoact",
    version,
    about = "verification kernel for finite strict 2-group actions, orbit 2-categories and atomic 2-sheaves"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Load a fixture file and validate every declared structure.
    Validate(CommonArgs),
    /// Build the orbit 2-category of a 2-group and check its axioms.
    Orbit {
        #[command(flatten)]
        common: CommonArgs,
        /// Name of a twogroup section in the fixture file.
        #[arg(long)]
        group: String,
        /// Print the hom-categories in the fixture format.
        #[arg(long)]
        dump: bool,
    },
    /// Check the 2-sheaf condition for a named presheaf.
    SheafCheck {
        #[command(flatten)]
        common: CommonArgs,
        /// Name of a presheaf section in the fixture file.
        #[arg(long)]
        presheaf: String,
    },
    /// Run the full equivalence verification for a named 2-group.
    Equivalence {
        #[command(flatten)]
        common: CommonArgs,
        /// Name of a twogroup section in the fixture file.
        #[arg(long)]
        group: String,
        /// Also check the colimit universal property (expensive).
        #[arg(long = "check-2colimit")]
        check_2colimit: bool,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Fixture file.
    #[arg(long)]
    fixtures: PathBuf,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Override a bound, e.g. --bounds max_group_order=8 (repeatable).
    #[arg(long = "bounds", value_name = "KEY=VAL")]
    bounds: Vec<String>,
    /// Record wall-clock timings per verification stage.  Timed reports are
    /// not byte-reproducible.
    #[arg(long)]
    timings: bool,
}

/// Collects checks in stages so optional timings can be attributed.
struct Stages {
    checks: Vec<Check>,
    timings: Vec<u64>,
}

impl Stages {
    fn new() -> Self {
        Stages { checks: Vec::new(), timings: Vec::new() }
    }

    fn run(&mut self, f: impl FnOnce() -> Vec<Check>) {
        let t0 = Instant::now();
        let batch = f();
        let elapsed = t0.elapsed().as_millis() as u64;
        for c in batch {
            self.checks.push(c);
            self.timings.push(elapsed);
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, outcome) = match &cli.command {
        Cmd::Validate(common) => (common, run(common, "validate", cmd_validate)),
        Cmd::Orbit { common, group, dump } => {
            let group = group.clone();
            let dump = *dump;
            (common, run(common, "orbit", move |doc, b, st| cmd_orbit(doc, b, st, &group, dump)))
        }
        Cmd::SheafCheck { common, presheaf } => {
            let presheaf = presheaf.clone();
            (common, run(common, "sheaf-check", move |doc, b, st| {
                cmd_sheaf_check(doc, b, st, &presheaf)
            }))
        }
        Cmd::Equivalence { common, group, check_2colimit } => {
            let group = group.clone();
            let check_2colimit = *check_2colimit;
            (common, run(common, "equivalence", move |doc, b, st| {
                cmd_equivalence(doc, b, st, &group, check_2colimit)
            }))
        }
    };
    let _ = common;
    match outcome {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CmdFn<'a> = dyn FnOnce(&fixture::Doc, &Bounds, &mut Stages) -> Result<(), String> + 'a;

fn run(
    common: &CommonArgs,
    command: &str,
    f: impl FnOnce(&fixture::Doc, &Bounds, &mut Stages) -> Result<(), String>,
) -> Result<bool, String> {
    run_boxed(common, command, Box::new(f))
}

fn run_boxed(common: &CommonArgs, command: &str, f: Box<CmdFn<'_>>) -> Result<bool, String> {
    let text = std::fs::read_to_string(&common.fixtures)
        .map_err(|e| format!("cannot read {}: {e}", common.fixtures.display()))?;
    let doc = fixture::parse(&text).map_err(|e| format!("parse error: {e}"))?;
    let mut bounds = doc.bounds.clone();
    for b in &common.bounds {
        let (key, value) = b
            .split_once('=')
            .ok_or_else(|| format!("bad --bounds `{b}`, expected KEY=VAL"))?;
        let value: usize = value.parse().map_err(|_| format!("bad --bounds value in `{b}`"))?;
        if !bounds.set(key, value) {
            return Err(format!("unknown bound `{key}`"));
        }
    }
    let mut stages = Stages::new();
    f(&doc, &bounds, &mut stages)?;
    let all_pass = stages.checks.iter().all(|c| c.pass);
    let report = report::build(
        command,
        report::fixture_digest(&text),
        &bounds,
        stages.checks,
        common.timings.then_some(stages.timings),
    );
    let rendered = report::render(&report);
    match &common.report {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(all_pass)
}

fn cmd_validate(doc: &fixture::Doc, bounds: &Bounds, stages: &mut Stages) -> Result<(), String> {
    stages.run(|| {
        let mut checks = Vec::new();
        for (name, _) in &doc.groups {
            checks.push(Check::pass(format!("group-{name}"), "structure-validation"));
        }
        for (name, _) in &doc.categories {
            checks.push(Check::pass(format!("category-{name}"), "structure-validation"));
        }
        for (name, _) in &doc.crossed {
            checks.push(Check::pass(format!("crossed-{name}"), "structure-validation"));
        }
        for (name, _) in &doc.twogroups {
            checks.push(Check::pass(format!("twogroup-{name}"), "structure-validation"));
        }
        for (name, _, _) in &doc.actions {
            checks.push(Check::pass(format!("action-{name}"), "structure-validation"));
        }
        for (what, why) in &doc.invalid {
            checks.push(Check::fail(
                what.replace(' ', "-"),
                "structure-validation",
                why.clone(),
            ));
        }
        checks
    });
    // presheaves need the orbit 2-category of their group
    for (name, spec) in &doc.presheaves {
        let Some(gname) = fixture::presheaf_group(doc, spec).map(str::to_string) else {
            stages.run(|| {
                vec![Check::fail(
                    format!("presheaf-{name}"),
                    "structure-validation",
                    "presheaf refers to an unknown action",
                )]
            });
            continue;
        };
        let Some(tg) = doc.twogroup(&gname).cloned() else {
            stages.run(|| {
                vec![Check::fail(
                    format!("presheaf-{name}"),
                    "structure-validation",
                    format!("unknown twogroup `{gname}`"),
                )]
            });
            continue;
        };
        stages.run(|| {
            let orbit = match twoact_core::orbit::build_orbit_2cat(&tg, bounds) {
                Ok(o) => o,
                Err(e) => {
                    return vec![Check::fail(
                        format!("presheaf-{name}"),
                        "structure-validation",
                        e.to_string(),
                    )]
                }
            };
            match doc.build_presheaf(spec, &orbit, bounds) {
                Ok(p) => match twoact_core::sheaf::validate_presheaf2(&orbit, &p) {
                    Ok(()) => {
                        vec![Check::pass(format!("presheaf-{name}"), "structure-validation")]
                    }
                    Err(e) => vec![Check::fail(
                        format!("presheaf-{name}"),
                        "structure-validation",
                        e.to_string(),
                    )],
                },
                Err(e) => {
                    vec![Check::fail(format!("presheaf-{name}"), "structure-validation", e)]
                }
            }
        });
    }
    Ok(())
}

fn cmd_orbit(
    doc: &fixture::Doc,
    bounds: &Bounds,
    stages: &mut Stages,
    group: &str,
    dump: bool,
) -> Result<(), String> {
    let tg = doc.twogroup(group).cloned().ok_or_else(|| format!("unknown twogroup `{group}`"))?;
    let mut built = None;
    stages.run(|| {
        let (orbit, mut checks) = twoact_core::orbit::orbit_report(&tg, bounds);
        if let Some(o) = &orbit {
            // document the shape: object count and hom-category sizes
            checks.push(Check::pass(
                format!("orbit-objects-{}", o.n_objects()),
                "orbit-2-category",
            ));
            for a in 0..o.n_objects() {
                for b in 0..o.n_objects() {
                    let h = &o.hom(a, b).cat;
                    checks.push(Check::pass(
                        format!(
                            "orbit-hom-{a}-{b}-objects-{}-arrows-{}",
                            h.n_objects,
                            h.n_arrows()
                        ),
                        "orbit-2-category",
                    ));
                }
            }
        }
        built = orbit;
        checks
    });
    if dump {
        if let Some(orbit) = &built {
            println!("# orbit 2-category of {group}: {} objects", orbit.n_objects());
            for a in 0..orbit.n_objects() {
                for b in 0..orbit.n_objects() {
                    print!(
                        "{}",
                        fixture::dump_category(
                            &format!("ORBIT_{group}_HOM_{a}_{b}"),
                            &orbit.hom(a, b).cat
                        )
                    );
                }
            }
        }
    }
    Ok(())
}

fn cmd_sheaf_check(
    doc: &fixture::Doc,
    bounds: &Bounds,
    stages: &mut Stages,
    presheaf: &str,
) -> Result<(), String> {
    let (_, spec) = doc
        .presheaves
        .iter()
        .find(|(n, _)| n == presheaf)
        .ok_or_else(|| format!("unknown presheaf `{presheaf}`"))?;
    let gname = fixture::presheaf_group(doc, spec)
        .ok_or_else(|| "presheaf refers to an unknown action".to_string())?
        .to_string();
    let tg =
        doc.twogroup(&gname).cloned().ok_or_else(|| format!("unknown twogroup `{gname}`"))?;
    let orbit = twoact_core::orbit::build_orbit_2cat(&tg, bounds).map_err(|e| e.to_string())?;
    let p = doc.build_presheaf(spec, &orbit, bounds)?;
    stages.run(|| {
        let mut checks = Vec::new();
        checks.push(Check::from_result(
            format!("presheaf-valid-{presheaf}"),
            "structure-validation",
            &twoact_core::sheaf::validate_presheaf2(&orbit, &p),
        ));
        match twoact_core::sheaf::is_2sheaf(&orbit, &p, bounds) {
            Ok((true, _)) => {
                checks.push(Check::pass(format!("2-sheaf-{presheaf}"), "2-sheaf-restriction"))
            }
            Ok((false, w)) => checks.push(Check::fail(
                format!("2-sheaf-{presheaf}"),
                "2-sheaf-restriction",
                w.unwrap_or_default(),
            )),
            Err(e) => checks.push(Check::fail(
                format!("2-sheaf-{presheaf}"),
                "2-sheaf-restriction",
                e.to_string(),
            )),
        }
        let (inj, w) = twoact_core::sheaf::atomic_injectivity_check(&orbit, &p);
        checks.push(if inj {
            Check::pass(format!("atomic-injectivity-{presheaf}"), "atomic-injectivity")
        } else {
            Check::fail(
                format!("atomic-injectivity-{presheaf}"),
                "atomic-injectivity",
                w.unwrap_or_default(),
            )
        });
        checks
    });
    Ok(())
}

fn cmd_equivalence(
    doc: &fixture::Doc,
    bounds: &Bounds,
    stages: &mut Stages,
    group: &str,
    check_2colimit: bool,
) -> Result<(), String> {
    let tg = doc.twogroup(group).cloned().ok_or_else(|| format!("unknown twogroup `{group}`"))?;
    let actions: Vec<(String, twoact_core::action::GAction)> = doc
        .actions
        .iter()
        .filter(|(_, g, _)| g == group)
        .map(|(n, _, a)| (n.clone(), a.clone()))
        .collect();
    // explicitly declared raw presheaves over this group ride along
    let raw_specs: Vec<&(String, fixture::PresheafSpec)> = doc
        .presheaves
        .iter()
        .filter(|(_, spec)| {
            matches!(spec, fixture::PresheafSpec::Raw { group: g, .. } if g == group)
        })
        .collect();
    let mut extras = Vec::new();
    if !raw_specs.is_empty() {
        let orbit =
            twoact_core::orbit::build_orbit_2cat(&tg, bounds).map_err(|e| e.to_string())?;
        for (name, spec) in raw_specs {
            extras.push((name.clone(), doc.build_presheaf(spec, &orbit, bounds)?));
        }
    }
    stages.run(|| {
        twoact_core::equivalence::verify_main_theorem(
            &tg,
            &actions,
            &extras,
            bounds,
            check_2colimit,
        )
    });
    // on a discrete 2-group, the classical one-dimensional pipeline is an
    // independent oracle
    if is_discrete(&tg) {
        let g = tg.g0.clone();
        stages.run(|| {
            let gsets: Vec<twoact_core::classical::GSet> = (0..=3)
                .flat_map(|s| twoact_core::classical::enumerate_gsets(&g, s))
                .collect();
            let mut checks =
                twoact_core::classical::verify_classical_equivalence(&g, &gsets, &[]);
            checks.extend(twoact_core::equivalence::degeneration_compare(&g, 3, bounds));
            checks
        });
    }
    Ok(())
}

fn is_discrete(tg: &twoact_core::twogroup::TwoGroup) -> bool {
    let id: Vec<usize> = tg.g0.elements().collect();
    tg.g0.order() == tg.g1.order()
        && tg.d0.map == id
        && tg.d1.map == id
        && tg.i.map == id
}
