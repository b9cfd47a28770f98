//! Command dispatch.
//!
//! Exit codes: 0 success, 1 unreadable input, syntax errors, bad arguments,
//! unknown names or an exhausted budget, 2 a document that violates an
//! invariant, 3 a theorem check that failed on the input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ualg_core::generation::{
    self, closure, evaluate_word, find_basis_tuple, image_tuple, is_basis_tuple,
    is_generating_tuple, Layered,
};
use ualg_core::representation::{
    automorphism_loop, decompose_morphism, star_lift, validate_morphism, MorphismFailure,
};
use ualg_core::tower::{
    check_effectiveness_propagation, extend_skip_to_carrier, id_projection_is_morphism,
    iterated_skip, skip_equation, star_lift_tower, tower_automorphism_loop,
    validate_tower_morphism, TowerMorphismFailure,
};
use ualg_core::{oracle, Budget, Clock, ElemSet, Error, GeneratingTuple, Mapping, Meter, Verdict};

use crate::document::Document;
use crate::model::{Model, Problem, Target};
use crate::report::{error_json, CliError, Exit, Report};
use crate::word;

#[derive(Debug, Parser)]
#[command(
    name = "ualg",
    version,
    about = "Finite algebras, representations and towers"
)]
pub struct Cli {
    /// Print a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check against brute-force reference implementations.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Candidate budget for enumerations.
    #[arg(long, global = true, env = "UALG_BUDGET")]
    pub budget: Option<u64>,
    /// Wall-clock limit for enumerations, in seconds.
    #[arg(long, global = true)]
    pub max_seconds: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Seed {
    /// Generator labels: layers separated by `;`, elements by `,`.
    #[arg(long, conflicts_with = "generators")]
    pub set: Option<String>,
    /// Name of a `generators` entry in the document.
    #[arg(long)]
    pub generators: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a document and list every violation.
    Validate { file: PathBuf },
    /// Closure of a generating tuple, layer by layer.
    Closure {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        seed: Seed,
        /// Print a witness word for every generated element.
        #[arg(long)]
        coords: bool,
    },
    /// Greedy basis, from the full carriers unless a seed is given.
    Basis {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        seed: Seed,
    },
    /// Automorphisms with the loop axioms and basis preservation checked.
    Automorphisms {
        file: PathBuf,
        #[arg(long)]
        target: String,
        /// Print every member.
        #[arg(long)]
        list: bool,
    },
    /// The skip representation from layer `i` to layer `i + k`.
    Derive {
        file: PathBuf,
        #[arg(long)]
        tower: String,
        #[arg(long, default_value_t = 1)]
        layer: usize,
        #[arg(long, default_value_t = 2)]
        span: usize,
    },
    /// The skip action extended to the whole carrier two layers up.
    Extend {
        file: PathBuf,
        #[arg(long)]
        tower: String,
        #[arg(long, default_value_t = 1)]
        layer: usize,
    },
    /// Kernel/image factorisation of a representation morphism.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        morphism: String,
    },
    /// Check a representation or tower morphism.
    MorphismCheck {
        file: PathBuf,
        #[arg(long)]
        morphism: String,
    },
    /// Witness word for one element, or the value of a named word.
    Coords {
        file: PathBuf,
        #[arg(long)]
        target: Option<String>,
        #[command(flatten)]
        seed: Seed,
        #[arg(long, requires = "element")]
        layer: Option<usize>,
        #[arg(long, requires = "layer")]
        element: Option<String>,
        /// Name of a `words` entry to evaluate.
        #[arg(long, conflicts_with_all = ["target", "layer", "element"])]
        word: Option<String>,
    },
    /// Print the canonical form of a document.
    Fmt { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Closure { .. } => "closure",
            Command::Basis { .. } => "basis",
            Command::Automorphisms { .. } => "automorphisms",
            Command::Derive { .. } => "derive",
            Command::Extend { .. } => "extend",
            Command::Decompose { .. } => "decompose",
            Command::MorphismCheck { .. } => "morphism-check",
            Command::Coords { .. } => "coords",
            Command::Fmt { .. } => "fmt",
        }
    }
}

struct StdClock(Instant);

impl Clock for StdClock {
    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}

struct Env {
    oracle: bool,
    budget: Budget,
    clock: StdClock,
}

impl Env {
    fn meter(&self) -> Meter<'_> {
        self.budget.meter_with_clock(&self.clock)
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run(
    args: impl IntoIterator<Item = OsString>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                Exit::Usage.code()
            } else {
                Exit::Ok.code()
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let mut budget = Budget::new(cli.budget.unwrap_or(Budget::DEFAULT_CANDIDATES));
    if let Some(secs) = cli.max_seconds {
        match Duration::try_from_secs_f64(secs) {
            Ok(limit) => budget = budget.with_time(limit),
            Err(_) => {
                let _ = writeln!(err, "error: --max-seconds must be a non-negative number");
                return Exit::Usage.code();
            }
        }
    }
    let env = Env {
        oracle: cli.oracle,
        budget,
        clock: StdClock(Instant::now()),
    };
    let name = cli.command.name();
    match dispatch(&cli.command, &env) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.json).as_bytes());
            report.exit.code()
        }
        Err(e) => {
            if cli.json {
                let _ = out.write_all(error_json(name, &e).as_bytes());
            }
            let _ = writeln!(err, "error: {}", e.message);
            e.exit.code()
        }
    }
}

fn dispatch(command: &Command, env: &Env) -> Result<Report, CliError> {
    match command {
        Command::Validate { file } => validate(file),
        Command::Fmt { file } => {
            let canonical = read(file)?.to_canonical();
            let mut r = Report::new("fmt");
            r.set("document", &canonical);
            r.raw(canonical);
            Ok(r)
        }
        Command::Closure {
            file,
            target,
            seed,
            coords,
        } => {
            let model = load(file)?;
            cmd_closure(&model, target, seed, *coords, env)
        }
        Command::Basis { file, target, seed } => {
            let model = load(file)?;
            cmd_basis(&model, target, seed, env)
        }
        Command::Automorphisms { file, target, list } => {
            let model = load(file)?;
            cmd_automorphisms(&model, target, *list, env)
        }
        Command::Derive {
            file,
            tower,
            layer,
            span,
        } => {
            let model = load(file)?;
            cmd_derive(&model, tower, *layer, *span)
        }
        Command::Extend { file, tower, layer } => {
            let model = load(file)?;
            cmd_extend(&model, tower, *layer)
        }
        Command::Decompose { file, morphism } => {
            let model = load(file)?;
            cmd_decompose(&model, morphism)
        }
        Command::MorphismCheck { file, morphism } => {
            let model = load(file)?;
            cmd_morphism_check(&model, morphism)
        }
        Command::Coords {
            file,
            target,
            seed,
            layer,
            element,
            word,
        } => {
            let model = load(file)?;
            match (word, target) {
                (Some(w), _) => cmd_eval_word(&model, w),
                (None, Some(t)) => {
                    let (Some(layer), Some(element)) = (layer, element) else {
                        return Err(CliError::usage(
                            "coords needs --layer and --element, or --word",
                        ));
                    };
                    cmd_coords(&model, t, seed, *layer, element)
                }
                (None, None) => Err(CliError::usage("coords needs --target or --word")),
            }
        }
    }
}

fn read(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Model, CliError> {
    let (model, problems) = Model::load(&read(path)?);
    if problems.is_empty() {
        return Ok(model);
    }
    let list: Vec<String> = problems.iter().map(Problem::to_string).collect();
    Err(CliError {
        exit: Exit::Invalid,
        message: format!("document is invalid:\n  {}", list.join("\n  ")),
    })
}

fn core_error(e: Error) -> CliError {
    let exit = match e {
        Error::BudgetExceeded { .. }
        | Error::DeadlineExceeded
        | Error::LayerOutOfRange { .. }
        | Error::SizeMismatch { .. }
        | Error::NotGenerated { .. }
        | Error::ElementOutOfRange { .. } => Exit::Usage,
        _ => Exit::CheckFailed,
    };
    CliError {
        exit,
        message: e.to_string(),
    }
}

fn target<'m>(model: &'m Model, name: &str) -> Result<Target<'m>, CliError> {
    model
        .target(name)
        .ok_or_else(|| CliError::usage(format!("no representation or tower named `{name}`")))
}

fn tower<'m>(model: &'m Model, name: &str) -> Result<Target<'m>, CliError> {
    match model.towers.get(name) {
        Some(t) => Ok(Target::Tower(t)),
        None => Err(CliError::usage(format!("no tower named `{name}`"))),
    }
}

/// `--set`, `--generators`, or `default` when neither is given.
fn seed_tuple(
    model: &Model,
    t: &Target<'_>,
    name: &str,
    seed: &Seed,
    default: impl FnOnce() -> GeneratingTuple,
) -> Result<GeneratingTuple, CliError> {
    if let Some(text) = &seed.set {
        let sets: Vec<Vec<String>> = text
            .split(';')
            .map(|layer| {
                layer
                    .split(',')
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(String::from)
                    .collect()
            })
            .collect();
        return t.tuple(&sets).map_err(CliError::usage);
    }
    if let Some(g) = &seed.generators {
        let found = model
            .generators
            .get(g)
            .ok_or_else(|| CliError::usage(format!("no generators named `{g}`")))?;
        if found.target != name {
            return Err(CliError::usage(format!(
                "generators `{g}` belong to `{}`, not `{name}`",
                found.target
            )));
        }
        return Ok(found.tuple.clone());
    }
    Ok(default())
}

fn tuple_labels(t: &Target<'_>, x: &GeneratingTuple) -> Vec<Vec<String>> {
    x.sets()
        .iter()
        .zip(2..)
        .map(|(s, layer)| t.labels_of(layer, s))
        .collect()
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn validate(file: &Path) -> Result<Report, CliError> {
    let doc = read(file)?;
    let (model, problems) = Model::load(&doc);
    let mut r = Report::new("validate");
    let counts = model.object_counts();
    r.set("objects", &counts);
    r.set(
        "problems",
        problems
            .iter()
            .map(|p| json!({"location": p.location, "message": p.message}))
            .collect::<Vec<_>>(),
    );
    if !problems.is_empty() {
        r.invalid();
        r.line(format!("{} problem(s):", problems.len()));
        for p in &problems {
            r.line(format!("  {p}"));
        }
        return Ok(r);
    }
    let summary: Vec<String> = counts
        .iter()
        .filter(|(_, &n)| n > 0)
        .map(|(k, n)| format!("{n} {k}"))
        .collect();
    r.line(format!(
        "valid: {}",
        if summary.is_empty() {
            "empty document".into()
        } else {
            summary.join(", ")
        }
    ));
    let mut reps = serde_json::Map::new();
    for (name, nr) in &model.representations {
        let (eff, tr, st) = (
            nr.rep.is_effective(),
            nr.rep.is_transitive(),
            nr.rep.is_single_transitive(),
        );
        r.line(format!(
            "representation {name}: {} on {}, effective={eff} transitive={tr} single_transitive={st}",
            nr.layers.names[0], nr.layers.names[1]
        ));
        reps.insert(
            name.clone(),
            json!({"effective": eff, "transitive": tr, "single_transitive": st}),
        );
    }
    let mut towers = serde_json::Map::new();
    for (name, nt) in &model.towers {
        let eff = nt.tower.is_effective();
        r.line(format!(
            "tower {name}: layers {}, effective={eff}",
            nt.layers.names.join(" -> ")
        ));
        towers.insert(
            name.clone(),
            json!({"layers": nt.layers.names, "effective": eff}),
        );
    }
    r.set("representations", reps);
    r.set("towers", towers);
    Ok(r)
}

fn cmd_closure(
    model: &Model,
    name: &str,
    seed: &Seed,
    coords: bool,
    env: &Env,
) -> Result<Report, CliError> {
    let t = target(model, name)?;
    let x = seed_tuple(model, &t, name, seed, || {
        GeneratingTuple::new(vec![ElemSet::new(); t.layer_count() - 1])
    })?;
    let table = closure(&t, &x).map_err(core_error)?;
    let mut r = Report::new("closure");
    r.line(format!(
        "closure in `{name}` of {}",
        tuple_labels(&t, &x)
            .iter()
            .map(|s| braces(s))
            .collect::<Vec<_>>()
            .join(" ; ")
    ));
    r.set("target", name);
    r.set("seed", tuple_labels(&t, &x));
    let sets = table.sets();
    let mut layers = Vec::new();
    for (k, set) in sets.iter().enumerate() {
        let layer = k + 1;
        let size = t.layer(layer).size();
        let labels = t.labels_of(layer, set);
        r.line(format!(
            "layer {layer} ({}): {} of {size} {}",
            t.layers().names[k],
            set.len(),
            braces(&labels)
        ));
        let mut entry = json!({"layer": layer, "algebra": t.layers().names[k], "carrier_size": size, "elements": labels});
        if coords && layer >= 2 {
            let mut words = serde_json::Map::new();
            let mut bad = Vec::new();
            for (e, w) in table.words(layer) {
                let text = word::print(w, &t);
                r.line(format!("  {} = {text}", t.label(layer, e)));
                if evaluate_word(&t, w, &x).map_err(core_error)? != e {
                    bad.push(t.label(layer, e).to_owned());
                }
                words.insert(t.label(layer, e).to_owned(), text.into());
            }
            r.check(
                &format!("layer {layer} words evaluate to their elements"),
                bad.is_empty(),
                || format!("mismatch at {}", bad.join(", ")),
            );
            entry["coordinates"] = words.into();
        }
        layers.push(entry);
    }
    r.set("layers", layers);
    if env.oracle {
        let brute = oracle::brute_closure(&t, &x, &mut env.meter()).map_err(core_error)?;
        let agree = brute == sets;
        r.check("closure agrees with brute force", agree, || {
            let k = (0..sets.len()).find(|&k| brute[k] != sets[k]).unwrap_or(0);
            format!("layer {} differs", k + 1)
        });
        r.set("oracle", json!({"agrees": agree}));
    }
    Ok(r)
}

/// Generation and single-removal minimality, judged by `generates`.
fn basis_failure(
    t: &Target<'_>,
    b: &GeneratingTuple,
    generates: &mut dyn FnMut(&GeneratingTuple) -> Result<bool, CliError>,
) -> Result<Option<String>, CliError> {
    if !generates(b)? {
        return Ok(Some("does not generate".into()));
    }
    for layer in 2..=t.layer_count() {
        for &e in b.get(layer) {
            let mut smaller = b.clone();
            smaller.get_mut(layer).remove(&e);
            if generates(&smaller)? {
                return Ok(Some(format!(
                    "still generates without {} in layer {layer}",
                    t.label(layer, e)
                )));
            }
        }
    }
    Ok(None)
}

fn cmd_basis(model: &Model, name: &str, seed: &Seed, env: &Env) -> Result<Report, CliError> {
    let t = target(model, name)?;
    let start = seed_tuple(model, &t, name, seed, || GeneratingTuple::full(&t))?;
    if !is_generating_tuple(&t, &start).map_err(core_error)? {
        return Err(CliError::usage("the starting tuple does not generate"));
    }
    let basis = find_basis_tuple(&t, &start).map_err(core_error)?;
    let mut r = Report::new("basis");
    let labels = tuple_labels(&t, &basis);
    r.line(format!("basis of `{name}`: sizes {:?}", basis.sizes()));
    for (k, l) in labels.iter().enumerate() {
        r.line(format!(
            "layer {} ({}): {}",
            k + 2,
            t.layers().names[k + 1],
            braces(l)
        ));
    }
    r.set("target", name);
    r.set("sizes", basis.sizes());
    r.set("basis", &labels);
    let is_basis = is_basis_tuple(&t, &basis).map_err(core_error)?;
    r.check("basis criterion", is_basis, || {
        "greedy result is not a basis".into()
    });
    if env.oracle {
        let mut meter = env.meter();
        let full: Vec<usize> = (1..=t.layer_count()).map(|i| t.layer(i).size()).collect();
        let mut generates = |x: &GeneratingTuple| -> Result<bool, CliError> {
            let sets = oracle::brute_closure(&t, x, &mut meter).map_err(core_error)?;
            Ok(sets.iter().zip(&full).all(|(s, &n)| s.len() == n))
        };
        let failure = basis_failure(&t, &basis, &mut generates)?;
        r.set("oracle", json!({"agrees": failure.is_none()}));
        r.check("basis criterion by brute force", failure.is_none(), || {
            failure.clone().unwrap_or_default()
        });
    }
    Ok(r)
}

fn map_labels(t: &Target<'_>, maps: &[&Mapping]) -> Vec<Vec<String>> {
    maps.iter()
        .zip(1..)
        .map(|(m, layer)| {
            m.image()
                .iter()
                .map(|&x| t.label(layer, x).to_owned())
                .collect()
        })
        .collect()
}

fn cmd_automorphisms(model: &Model, name: &str, list: bool, env: &Env) -> Result<Report, CliError> {
    let t = target(model, name)?;
    let basis = find_basis_tuple(&t, &GeneratingTuple::full(&t)).map_err(core_error)?;
    let mut meter = env.meter();
    let mut r = Report::new("automorphisms");
    r.set("target", name);
    let (members, report, regular, preserved): (Vec<Vec<Mapping>>, _, _, _) = match t {
        Target::Tower(nt) => {
            let out = tower_automorphism_loop(&nt.tower, std::slice::from_ref(&basis), &mut meter)
                .map_err(core_error)?;
            (
                out.members.into_iter().map(|m| m.maps).collect(),
                out.report,
                out.regular,
                out.bases_preserved,
            )
        }
        Target::Rep(nr) => {
            let out = automorphism_loop(&nr.rep, &mut meter).map_err(core_error)?;
            let mut regular = Verdict::Holds;
            let mut preserved = Verdict::Holds;
            for (k, m) in out.members.iter().enumerate() {
                let image = image_tuple(&[&m.domain_map, &m.space_map], &basis);
                if regular.holds() && !is_generating_tuple(&nr.rep, &image).map_err(core_error)? {
                    regular = Verdict::Fails((k, 0));
                }
                if preserved.holds() && !is_basis_tuple(&nr.rep, &image).map_err(core_error)? {
                    preserved = Verdict::Fails((k, 0));
                }
            }
            if env.oracle {
                let mut brute: Vec<_> =
                    oracle::exhaustive_morphism_search(&nr.rep, &nr.rep, &mut meter)
                        .map_err(core_error)?
                        .into_iter()
                        .filter(|m| m.domain_map.is_bijective() && m.space_map.is_bijective())
                        .collect();
                let mut found = out.members.clone();
                brute.sort();
                found.sort();
                let agree = brute == found;
                r.set(
                    "oracle",
                    json!({"agrees": agree, "brute_force_count": brute.len()}),
                );
                r.check("automorphisms agree with brute force", agree, || {
                    format!("{} found, {} by brute force", found.len(), brute.len())
                });
            }
            let members = out
                .members
                .into_iter()
                .map(|m| vec![m.domain_map, m.space_map])
                .collect();
            (members, out.report, regular, preserved)
        }
    };
    r.line(format!("{} automorphisms of `{name}`", members.len()));
    r.line(format!("associative: {}", report.associative));
    r.set("count", members.len());
    r.set(
        "loop",
        json!({
            "identity_present": report.identity_present,
            "closed": report.closed,
            "inverses": report.inverses,
            "left_division_unique": report.left_division_unique,
            "right_division_unique": report.right_division_unique,
            "associative": report.associative,
        }),
    );
    r.set("basis", tuple_labels(&t, &basis));
    r.check("identity present", report.identity_present, || {
        "identity missing".into()
    });
    r.check("closed under composition", report.closed, || {
        "a product falls outside".into()
    });
    r.check("inverses", report.inverses, || {
        "some member has no inverse".into()
    });
    r.check("unique left division", report.left_division_unique, || {
        "not unique".into()
    });
    r.check(
        "unique right division",
        report.right_division_unique,
        || "not unique".into(),
    );
    r.check("images of the basis generate", regular.holds(), || {
        format!("member #{}", regular.witness().unwrap().0)
    });
    r.check("images of the basis are bases", preserved.holds(), || {
        format!("member #{}", preserved.witness().unwrap().0)
    });
    if list {
        let listed: Vec<Vec<Vec<String>>> = members
            .iter()
            .map(|maps| map_labels(&t, &maps.iter().collect::<Vec<_>>()))
            .collect();
        for (k, maps) in listed.iter().enumerate() {
            let layers: Vec<String> = maps.iter().map(|m| format!("[{}]", m.join(" "))).collect();
            r.line(format!("#{k}: {}", layers.join(" ")));
        }
        r.set("members", listed);
    }
    Ok(r)
}

fn cmd_derive(model: &Model, name: &str, i: usize, k: usize) -> Result<Report, CliError> {
    let t = tower(model, name)?;
    let tw = t.as_tower().expect("tower target");
    if k < 2 || i == 0 || i + k > tw.layer_count() {
        return Err(CliError::usage(format!(
            "need 1 <= layer and 2 <= span with layer + span <= {}",
            tw.layer_count()
        )));
    }
    let skip = iterated_skip(tw, i, k).map_err(core_error)?;
    let mut r = Report::new("derive");
    let top = i + k;
    r.line(format!(
        "skip representation of layer {i} ({}) on the image of layer {} ({}) in End(layer {top})",
        t.layers().names[i - 1],
        top - 1,
        t.layers().names[top - 2]
    ));
    r.line(format!(
        "{} distinct transformations in the image",
        skip.images.len()
    ));
    let images: Vec<Vec<String>> = skip
        .images
        .iter()
        .map(|m| {
            m.image()
                .iter()
                .map(|&x| t.label(top, x).to_owned())
                .collect()
        })
        .collect();
    for (p, img) in images.iter().enumerate() {
        r.line(format!("  #{p} = [{}]", img.join(" ")));
    }
    // rows are positions in the image list
    let action: Vec<Vec<usize>> = skip
        .rep
        .table()
        .iter()
        .map(|m| m.image().to_vec())
        .collect();
    for (a, row) in action.iter().enumerate() {
        r.line(format!("  {} acts as {:?}", t.label(i, a), row));
    }
    let effective = skip.rep.is_effective();
    r.line(format!("skip representation effective: {effective}"));
    r.set("tower", name);
    r.set("layer", i);
    r.set("span", k);
    r.set("images", images);
    r.set("projection", skip.projection.image());
    r.set("action", action);
    r.set("effective", effective);
    if k == 2 {
        let lower = tw.rep(i);
        let upper = tw.rep(i + 1);
        let eq = skip_equation(lower, upper, &skip);
        r.check("skip equation", eq.holds(), || {
            let (a, x) = *eq.witness().unwrap();
            format!("at ({}, {})", t.label(i, a), t.label(i + 1, x))
        });
        let morphism = id_projection_is_morphism(lower, &skip).map_err(core_error)?;
        r.check(
            "(id, f) is a morphism onto the skip representation",
            morphism,
            || "commutation fails".into(),
        );
    }
    let prop = check_effectiveness_propagation(tw, i, k).map_err(core_error)?;
    r.set("layers_effective", prop.precondition);
    if prop.precondition {
        r.check(
            "effectiveness propagates to the skip representation",
            effective,
            || {
                let (a, b) = skip.rep.effectiveness_witness().unwrap();
                format!("{} and {} act equally", t.label(i, a), t.label(i, b))
            },
        );
    }
    Ok(r)
}

fn cmd_extend(model: &Model, name: &str, i: usize) -> Result<Report, CliError> {
    let t = tower(model, name)?;
    let tw = t.as_tower().expect("tower target");
    if i == 0 || i + 2 > tw.layer_count() {
        return Err(CliError::usage(format!(
            "need 1 <= layer <= {}",
            tw.layer_count() - 2
        )));
    }
    let mut r = Report::new("extend");
    r.set("tower", name);
    r.set("layer", i);
    let ext = match extend_skip_to_carrier(tw, i) {
        Ok(ext) => ext,
        Err(
            e @ (Error::NoIdentityPreimage
            | Error::PreimageDependence { .. }
            | Error::InvalidRepresentation(_)),
        ) => {
            r.line(format!("extension undefined: {e}"));
            r.set("defined", false);
            r.set("reason", e.to_string());
            return Ok(r);
        }
        Err(e) => return Err(core_error(e)),
    };
    let top = i + 2;
    let preimages: Vec<String> = ext
        .identity_preimages
        .iter()
        .map(|&e| t.label(i + 1, e).to_owned())
        .collect();
    let action: Vec<Vec<String>> = ext
        .rep
        .table()
        .iter()
        .map(|m| {
            m.image()
                .iter()
                .map(|&x| t.label(top, x).to_owned())
                .collect()
        })
        .collect();
    let effective = ext.rep.is_effective();
    r.line(format!(
        "identity preimages in layer {}: {}",
        i + 1,
        braces(&preimages)
    ));
    for (a, row) in action.iter().enumerate() {
        r.line(format!("  {} : [{}]", t.label(i, a), row.join(" ")));
    }
    r.line(format!("extension effective: {effective}"));
    r.set("defined", true);
    r.set("identity_preimages", preimages);
    r.set("action", action);
    r.set("effective", effective);
    r.check(
        "extension agrees with the skip action",
        ext.consistent_with_skip,
        || "differs".into(),
    );
    let precondition = tw.rep(i).is_effective() && tw.rep(i + 1).is_effective();
    r.set("layers_effective", precondition);
    if precondition {
        r.check(
            "effectiveness propagates to the extension",
            effective,
            || {
                let (a, b) = ext.rep.effectiveness_witness().unwrap();
                format!("{} and {} act equally", t.label(i, a), t.label(i, b))
            },
        );
    }
    Ok(r)
}

fn cmd_decompose(model: &Model, name: &str) -> Result<Report, CliError> {
    let nm = model
        .morphisms
        .get(name)
        .ok_or_else(|| CliError::usage(format!("no morphism named `{name}`")))?;
    let (src, dst) = (
        &model.representations[&nm.source],
        &model.representations[&nm.target],
    );
    let d = decompose_morphism(&nm.morphism, &src.rep, &dst.rep).map_err(core_error)?;
    let class = |labels: &[String], block: &[usize]| {
        braces(&block.iter().map(|&x| labels[x].clone()).collect::<Vec<_>>())
    };
    let domain_classes: Vec<String> = d
        .domain_kernel
        .partition()
        .blocks()
        .iter()
        .map(|b| class(&src.layers.labels[0], b))
        .collect();
    let space_classes: Vec<String> = d
        .space_kernel
        .blocks()
        .iter()
        .map(|b| class(&src.layers.labels[1], b))
        .collect();
    let image_domain: Vec<String> =
        d.i.image()
            .iter()
            .map(|&x| dst.layers.labels[0][x].clone())
            .collect();
    let image_space: Vec<String> = d
        .big_i
        .image()
        .iter()
        .map(|&x| dst.layers.labels[1][x].clone())
        .collect();
    let mut r = Report::new("decompose");
    r.line(format!(
        "decomposition of `{name}`: `{}` -> `{}`",
        nm.source, nm.target
    ));
    r.line(format!(
        "domain kernel classes: {}",
        domain_classes.join(" ")
    ));
    r.line(format!("space kernel classes: {}", space_classes.join(" ")));
    r.line(format!("domain image: {}", braces(&image_domain)));
    r.line(format!("space image: {}", braces(&image_space)));
    r.set("morphism", name);
    r.set("domain_classes", &domain_classes);
    r.set("space_classes", &space_classes);
    r.set("domain_image", &image_domain);
    r.set("space_image", &image_space);
    r.set(
        "factors",
        json!({
            "j": d.j.image(), "t": d.t.image(), "i": d.i.image(),
            "J": d.big_j.image(), "T": d.big_t.image(), "I": d.big_i.image(),
        }),
    );
    let rep = &d.report;
    r.check("r = i t j", rep.domain_factors, || "differs".into());
    r.check("R = I T J", rep.space_factors, || "differs".into());
    r.check("projections surjective", rep.projections_surjective, || {
        "not onto".into()
    });
    r.check("t bijective", rep.t_bijective, || "not bijective".into());
    r.check("T bijective", rep.big_t_bijective, || {
        "not bijective".into()
    });
    r.check("inclusions injective", rep.inclusions_injective, || {
        "not injective".into()
    });
    r.check(
        "(j, J) is a morphism",
        rep.projection_morphism.holds(),
        || witness(&rep.projection_morphism),
    );
    r.check(
        "(t, T) is a morphism",
        rep.bijection_morphism.holds(),
        || witness(&rep.bijection_morphism),
    );
    r.check(
        "(t^-1, T^-1) is a morphism",
        rep.inverse_morphism.holds(),
        || witness(&rep.inverse_morphism),
    );
    r.check(
        "(i, I) is a morphism",
        rep.inclusion_morphism.holds(),
        || witness(&rep.inclusion_morphism),
    );
    Ok(r)
}

fn witness(v: &Verdict<MorphismFailure>) -> String {
    v.witness().map(|w| w.to_string()).unwrap_or_default()
}

fn cmd_morphism_check(model: &Model, name: &str) -> Result<Report, CliError> {
    let mut r = Report::new("morphism-check");
    r.set("morphism", name);
    if let Some(nm) = model.morphisms.get(name) {
        let (src, dst) = (
            &model.representations[&nm.source],
            &model.representations[&nm.target],
        );
        r.line(format!(
            "representation morphism `{name}`: `{}` -> `{}`",
            nm.source, nm.target
        ));
        let v = validate_morphism(&nm.morphism, &src.rep, &dst.rep).map_err(core_error)?;
        r.check("morphism", v.holds(), || match v.witness().unwrap() {
            MorphismFailure::Commutation { element, point } => format!(
                "square fails at element {}, point {}",
                src.layers.labels[0][*element], src.layers.labels[1][*point]
            ),
            other => other.to_string(),
        });
        if v.holds() && src.rep.is_effective() {
            let lift = star_lift(&nm.morphism, &src.rep, &dst.rep).map_err(core_error)?;
            r.set("star_lift", lift.map.image());
            r.check(
                "lift preserves the interpreted operations",
                lift.preserves_ops.holds(),
                || lift.preserves_ops.witness().unwrap().to_string(),
            );
        }
        return Ok(r);
    }
    let nm = model
        .tower_morphisms
        .get(name)
        .ok_or_else(|| CliError::usage(format!("no morphism named `{name}`")))?;
    let (src, dst) = (&model.towers[&nm.source], &model.towers[&nm.target]);
    r.line(format!(
        "tower morphism `{name}`: `{}` -> `{}`",
        nm.source, nm.target
    ));
    let v = validate_tower_morphism(&nm.morphism, &src.tower, &dst.tower).map_err(core_error)?;
    r.check("tower morphism", v.holds(), || match v.witness().unwrap() {
        TowerMorphismFailure::Square {
            layer,
            element,
            point,
        } => format!(
            "square between layers {layer} and {} fails at element {}, point {}",
            layer + 1,
            src.layers.labels[layer - 1][*element],
            src.layers.labels[*layer][*point]
        ),
        other => other.to_string(),
    });
    if v.holds() {
        for i in 1..=src.tower.layer_count().saturating_sub(2) {
            if !src.tower.rep(i + 1).is_effective() {
                continue;
            }
            let lift =
                star_lift_tower(&nm.morphism, &src.tower, &dst.tower, i).map_err(core_error)?;
            r.check(
                &format!("lift commutes with the skip action at layer {i}"),
                lift.commutes.holds(),
                || format!("{:?}", lift.commutes.witness().unwrap()),
            );
        }
    }
    Ok(r)
}

fn cmd_coords(
    model: &Model,
    name: &str,
    seed: &Seed,
    layer: usize,
    element: &str,
) -> Result<Report, CliError> {
    let t = target(model, name)?;
    let x = seed_tuple(model, &t, name, seed, || GeneratingTuple::full(&t))?;
    let e = t.element(layer, element).map_err(CliError::usage)?;
    let w = generation::tuple_coordinates_of(&t, &x, layer, e).map_err(core_error)?;
    let text = word::print(&w, &t);
    let mut r = Report::new("coords");
    r.line(format!("{element} = {text}"));
    r.set("target", name);
    r.set("layer", layer);
    r.set("element", element);
    r.set("word", &text);
    r.set("word_size", w.size());
    let value = evaluate_word(&t, &w, &x).map_err(core_error)?;
    r.check("word evaluates to the element", value == e, || {
        format!("evaluates to {}", t.label(layer, value))
    });
    Ok(r)
}

fn cmd_eval_word(model: &Model, name: &str) -> Result<Report, CliError> {
    let nw = model
        .words
        .get(name)
        .ok_or_else(|| CliError::usage(format!("no word named `{name}`")))?;
    let t = target(model, &nw.target)?;
    let x = &model.generators[&nw.generators].tuple;
    let value = evaluate_word(&t, &nw.word, x).map_err(core_error)?;
    let layer = nw.word.layer();
    let label = t.label(layer, value);
    let mut r = Report::new("coords");
    r.line(format!(
        "{} = {label} (layer {layer})",
        word::print(&nw.word, &t)
    ));
    r.set("word", name);
    r.set("layer", layer);
    r.set("value", label);
    Ok(r)
}
