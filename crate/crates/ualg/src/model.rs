//! Resolving a [`Document`] into core objects.
//!
//! Loading never stops at the first problem: every object is checked, the
//! ones that resolve cleanly are kept, and the rest become [`Problem`]s.
//! Objects that depend on a broken object are dropped with their own
//! problem entry.

use std::collections::BTreeMap;
use std::fmt;

use ualg_core::algebra::tuple_index;
use ualg_core::representation::RepresentationViolation;
use ualg_core::tower::TowerViolation;
use ualg_core::{
    ElemSet, FiniteAlgebra, GeneratingTuple, Interp, Mapping, OmegaWord, OpDecl, OpInterpretation,
    RepMorphism, Representation, Signature, Tower, TowerMorphism,
};

use crate::document::{AlgebraDoc, Document, RepresentationDoc};
use crate::word::{self, WordContext};

/// A located defect in a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    /// Dotted path such as `algebras.z3.ops.+`.
    pub location: String,
    pub message: String,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub algebra: FiniteAlgebra,
    pub labels: Vec<String>,
}

/// Layer data shared by representations and towers: `names[k]` and
/// `labels[k]` describe layer `k + 1`.
#[derive(Debug, Clone)]
pub struct Layers {
    pub names: Vec<String>,
    pub labels: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct NamedRep {
    pub rep: Representation,
    pub layers: Layers,
}

#[derive(Debug, Clone)]
pub struct NamedTower {
    pub tower: Tower,
    pub reps: Vec<String>,
    pub layers: Layers,
}

#[derive(Debug, Clone)]
pub struct NamedMorphism {
    pub morphism: RepMorphism,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone)]
pub struct NamedTowerMorphism {
    pub morphism: TowerMorphism,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone)]
pub struct NamedGenerators {
    pub tuple: GeneratingTuple,
    pub target: String,
}

#[derive(Debug, Clone)]
pub struct NamedWord {
    pub word: OmegaWord,
    pub target: String,
    pub generators: String,
}

#[derive(Debug, Clone, Default)]
pub struct Model {
    pub algebras: BTreeMap<String, NamedAlgebra>,
    pub representations: BTreeMap<String, NamedRep>,
    pub towers: BTreeMap<String, NamedTower>,
    pub morphisms: BTreeMap<String, NamedMorphism>,
    pub tower_morphisms: BTreeMap<String, NamedTowerMorphism>,
    pub generators: BTreeMap<String, NamedGenerators>,
    pub words: BTreeMap<String, NamedWord>,
}

/// A representation or a tower, seen as a chain of layers.
#[derive(Clone, Copy)]
pub enum Target<'m> {
    Rep(&'m NamedRep),
    Tower(&'m NamedTower),
}

impl<'m> Target<'m> {
    pub fn layers(&self) -> &'m Layers {
        match self {
            Target::Rep(r) => &r.layers,
            Target::Tower(t) => &t.layers,
        }
    }

    pub fn as_tower(&self) -> Option<&'m Tower> {
        match self {
            Target::Tower(t) => Some(&t.tower),
            Target::Rep(_) => None,
        }
    }

    pub fn label(&self, layer: usize, x: usize) -> &'m str {
        &self.layers().labels[layer - 1][x]
    }

    pub fn labels_of(&self, layer: usize, set: &ElemSet) -> Vec<String> {
        set.iter()
            .map(|&x| self.label(layer, x).to_owned())
            .collect()
    }

    pub fn element(&self, layer: usize, label: &str) -> Result<usize, String> {
        let labels = self
            .layers()
            .labels
            .get(layer.wrapping_sub(1))
            .ok_or_else(|| format!("layer {layer} out of range 1..={}", self.layer_count()))?;
        labels.iter().position(|l| l == label).ok_or_else(|| {
            format!(
                "`{label}` is not an element of layer {layer} ({})",
                self.layers().names[layer - 1]
            )
        })
    }

    /// One label list per layer from 2 up.
    pub fn tuple(&self, sets: &[Vec<String>]) -> Result<GeneratingTuple, String> {
        if sets.len() + 1 != self.layer_count() {
            return Err(format!(
                "{} sets given, expected one per layer above the first ({})",
                sets.len(),
                self.layer_count() - 1
            ));
        }
        let sets = sets
            .iter()
            .zip(2..)
            .map(|(labels, layer)| {
                labels
                    .iter()
                    .map(|l| self.element(layer, l))
                    .collect::<Result<ElemSet, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratingTuple::new(sets))
    }
}

impl ualg_core::generation::Layered for Target<'_> {
    fn layer_count(&self) -> usize {
        match self {
            Target::Rep(r) => r.rep.layer_count(),
            Target::Tower(t) => t.tower.layer_count(),
        }
    }

    fn layer(&self, i: usize) -> &FiniteAlgebra {
        match self {
            Target::Rep(r) => r.rep.layer(i),
            Target::Tower(t) => t.tower.layer(i),
        }
    }

    fn action_into(&self, i: usize) -> &Representation {
        match self {
            Target::Rep(r) => r.rep.action_into(i),
            Target::Tower(t) => t.tower.action_into(i),
        }
    }
}

impl WordContext for Target<'_> {
    fn layer_count(&self) -> usize {
        ualg_core::generation::Layered::layer_count(self)
    }

    fn labels(&self, layer: usize) -> &[String] {
        &self.layers().labels[layer - 1]
    }

    fn symbols(&self, layer: usize) -> Vec<(String, usize)> {
        let sig = ualg_core::generation::Layered::layer(self, layer).signature();
        sig.ops()
            .iter()
            .map(|d| (d.symbol.clone(), d.arity))
            .collect()
    }
}

impl Model {
    pub fn target(&self, name: &str) -> Option<Target<'_>> {
        if let Some(r) = self.representations.get(name) {
            return Some(Target::Rep(r));
        }
        self.towers.get(name).map(Target::Tower)
    }

    /// Resolves everything that can be resolved.
    pub fn load(doc: &Document) -> (Model, Vec<Problem>) {
        let mut cx = Loader {
            doc,
            model: Model::default(),
            problems: Vec::new(),
        };
        cx.run();
        (cx.model, cx.problems)
    }

    pub fn object_counts(&self) -> BTreeMap<&'static str, usize> {
        BTreeMap::from([
            ("algebras", self.algebras.len()),
            ("representations", self.representations.len()),
            ("towers", self.towers.len()),
            ("morphisms", self.morphisms.len()),
            ("tower_morphisms", self.tower_morphisms.len()),
            ("generators", self.generators.len()),
            ("words", self.words.len()),
        ])
    }
}

struct Loader<'d> {
    doc: &'d Document,
    model: Model,
    problems: Vec<Problem>,
}

impl Loader<'_> {
    fn problem(&mut self, location: String, message: impl Into<String>) {
        self.problems.push(Problem {
            location,
            message: message.into(),
        });
    }

    fn run(&mut self) {
        let doc = self.doc;
        let mut signatures = BTreeMap::new();
        for (name, s) in &doc.signatures {
            let decls = s
                .ops
                .iter()
                .map(|(sym, k)| OpDecl::new(sym.clone(), *k))
                .collect();
            match Signature::new(decls) {
                Ok(sig) => {
                    signatures.insert(name.clone(), sig);
                }
                Err(e) => self.problem(format!("signatures.{name}"), e.to_string()),
            }
        }
        for (name, a) in &doc.algebras {
            let at = format!("algebras.{name}");
            let Some(sig) = signatures.get(&a.signature) else {
                self.problem(
                    at,
                    format!("unknown or invalid signature `{}`", a.signature),
                );
                continue;
            };
            if let Some(alg) = self.algebra(&at, sig, a) {
                self.model.algebras.insert(name.clone(), alg);
            }
        }
        for (name, r) in &doc.representations {
            if let Some(rep) = self.representation(&format!("representations.{name}"), r) {
                self.model.representations.insert(name.clone(), rep);
            }
        }
        for (name, t) in &doc.towers {
            if let Some(tower) = self.tower(&format!("towers.{name}"), &t.reps) {
                self.model.towers.insert(name.clone(), tower);
            }
        }
        for (name, m) in &doc.morphisms {
            let at = format!("morphisms.{name}");
            let (Some(src), Some(dst)) =
                (self.rep_ref(&at, &m.source), self.rep_ref(&at, &m.target))
            else {
                continue;
            };
            let maps = (
                self.map(
                    &format!("{at}.domain_map"),
                    &m.domain_map,
                    &src.layers.labels[0],
                    &dst.layers.labels[0],
                ),
                self.map(
                    &format!("{at}.space_map"),
                    &m.space_map,
                    &src.layers.labels[1],
                    &dst.layers.labels[1],
                ),
            );
            if let (Some(r), Some(big_r)) = maps {
                let morphism = RepMorphism::new(r, big_r);
                self.model.morphisms.insert(
                    name.clone(),
                    NamedMorphism {
                        morphism,
                        source: m.source.clone(),
                        target: m.target.clone(),
                    },
                );
            }
        }
        for (name, m) in &doc.tower_morphisms {
            let at = format!("tower_morphisms.{name}");
            let (Some(src), Some(dst)) = (
                self.tower_ref(&at, &m.source),
                self.tower_ref(&at, &m.target),
            ) else {
                continue;
            };
            if m.maps.len() != src.layers.labels.len()
                || src.layers.labels.len() != dst.layers.labels.len()
            {
                self.problem(
                    format!("{at}.maps"),
                    format!(
                        "{} maps given for towers of {} and {} layers",
                        m.maps.len(),
                        src.layers.labels.len(),
                        dst.layers.labels.len()
                    ),
                );
                continue;
            }
            let maps: Vec<Option<Mapping>> = (0..m.maps.len())
                .map(|k| {
                    self.map(
                        &format!("{at}.maps[{k}]"),
                        &m.maps[k],
                        &src.layers.labels[k],
                        &dst.layers.labels[k],
                    )
                })
                .collect();
            if let Some(maps) = maps.into_iter().collect::<Option<Vec<_>>>() {
                self.model.tower_morphisms.insert(
                    name.clone(),
                    NamedTowerMorphism {
                        morphism: TowerMorphism::new(maps),
                        source: m.source.clone(),
                        target: m.target.clone(),
                    },
                );
            }
        }
        for (name, g) in &doc.generators {
            let at = format!("generators.{name}");
            let result = match self.model.target(&g.target) {
                Some(target) => target.tuple(&g.sets).map_err(|e| (format!("{at}.sets"), e)),
                None => Err((at, unknown_target(&g.target))),
            };
            match result {
                Ok(tuple) => {
                    self.model.generators.insert(
                        name.clone(),
                        NamedGenerators {
                            tuple,
                            target: g.target.clone(),
                        },
                    );
                }
                Err((at, e)) => self.problem(at, e),
            }
        }
        for (name, w) in &doc.words {
            let at = format!("words.{name}");
            let result = match (
                self.model.target(&w.target),
                self.model.generators.get(&w.generators),
            ) {
                (None, _) => Err((at, unknown_target(&w.target))),
                (_, None) => Err((
                    at,
                    format!("unknown or invalid generators `{}`", w.generators),
                )),
                (Some(_), Some(g)) if g.target != w.target => Err((
                    at,
                    format!(
                        "generators `{}` belong to `{}`, not `{}`",
                        w.generators, g.target, w.target
                    ),
                )),
                (Some(target), Some(_)) => word::parse(&w.word)
                    .and_then(|raw| word::resolve(&raw, w.layer, &target))
                    .map_err(|e| (format!("{at}.word"), e)),
            };
            match result {
                Ok(word) => {
                    self.model.words.insert(
                        name.clone(),
                        NamedWord {
                            word,
                            target: w.target.clone(),
                            generators: w.generators.clone(),
                        },
                    );
                }
                Err((at, e)) => self.problem(at, e),
            }
        }
    }

    fn algebra(&mut self, at: &str, sig: &Signature, a: &AlgebraDoc) -> Option<NamedAlgebra> {
        let labels = a.elements.clone();
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            self.problem(
                format!("{at}.elements"),
                format!("label `{dup}` appears twice"),
            );
            return None;
        }
        let mut ok = true;
        for sym in a.ops.keys() {
            if sig.index_of(sym).is_none() {
                self.problem(
                    format!("{at}.ops.{sym}"),
                    format!("`{sym}` is not in signature `{}`", a.signature),
                );
                ok = false;
            }
        }
        let mut tables = Vec::new();
        for decl in sig.ops() {
            let loc = format!("{at}.ops.{}", decl.symbol);
            let Some(value) = a.ops.get(&decl.symbol) else {
                self.problem(loc, "missing table");
                ok = false;
                continue;
            };
            let mut table = vec![0; labels.len().pow(decl.arity as u32)];
            let mut errors = Vec::new();
            flatten(
                value,
                decl.arity,
                &labels,
                &mut Vec::new(),
                &mut table,
                &mut errors,
            );
            if errors.is_empty() {
                tables.push(table);
            } else {
                ok = false;
                for e in errors {
                    self.problem(loc.clone(), e);
                }
            }
        }
        if !ok {
            return None;
        }
        match FiniteAlgebra::new(sig.clone(), labels.len(), tables) {
            Ok(algebra) => Some(NamedAlgebra { algebra, labels }),
            Err(e) => {
                self.problem(at.to_owned(), e.to_string());
                None
            }
        }
    }

    fn algebra_ref(&mut self, at: &str, name: &str) -> Option<NamedAlgebra> {
        let found = self.model.algebras.get(name).cloned();
        if found.is_none() {
            self.problem(
                at.to_owned(),
                format!("unknown or invalid algebra `{name}`"),
            );
        }
        found
    }

    fn rep_ref(&mut self, at: &str, name: &str) -> Option<NamedRep> {
        let found = self.model.representations.get(name).cloned();
        if found.is_none() {
            self.problem(
                at.to_owned(),
                format!("unknown or invalid representation `{name}`"),
            );
        }
        found
    }

    fn tower_ref(&mut self, at: &str, name: &str) -> Option<NamedTower> {
        let found = self.model.towers.get(name).cloned();
        if found.is_none() {
            self.problem(at.to_owned(), format!("unknown or invalid tower `{name}`"));
        }
        found
    }

    fn representation(&mut self, at: &str, r: &RepresentationDoc) -> Option<NamedRep> {
        let domain = self.algebra_ref(&format!("{at}.domain"), &r.domain);
        let space = self.algebra_ref(&format!("{at}.space"), &r.space);
        let (domain, space) = (domain?, space?);
        let dsig = domain.algebra.signature().clone();
        let ssig = space.algebra.signature();
        let mut ok = true;
        for sym in r.interp.keys() {
            if dsig.index_of(sym).is_none() {
                self.problem(
                    format!("{at}.interp.{sym}"),
                    format!("`{sym}` is not an operation of `{}`", r.domain),
                );
                ok = false;
            }
        }
        let mut modes = Vec::new();
        for decl in dsig.ops() {
            let loc = format!("{at}.interp.{}", decl.symbol);
            match r
                .interp
                .get(&decl.symbol)
                .map(|text| parse_interp(text, ssig))
            {
                Some(Ok(mode)) => modes.push(mode),
                Some(Err(e)) => {
                    self.problem(loc, e);
                    ok = false;
                }
                None => {
                    self.problem(loc, "missing interpretation");
                    ok = false;
                }
            }
        }
        let (rows, cols, row_labels, col_labels) = if r.dual {
            (space.labels.len(), domain.labels.len(), "space", "domain")
        } else {
            (domain.labels.len(), space.labels.len(), "domain", "space")
        };
        if r.action.len() != rows {
            self.problem(
                format!("{at}.action"),
                format!(
                    "{} rows, expected one per {row_labels} element ({rows})",
                    r.action.len()
                ),
            );
            ok = false;
        }
        let mut table = vec![vec![0; space.labels.len()]; domain.labels.len()];
        for (i, row) in r.action.iter().enumerate().take(rows) {
            if row.len() != cols {
                self.problem(
                    format!("{at}.action[{i}]"),
                    format!(
                        "{} entries, expected one per {col_labels} element ({cols})",
                        row.len()
                    ),
                );
                ok = false;
                continue;
            }
            for (j, label) in row.iter().enumerate() {
                match space.labels.iter().position(|l| l == label) {
                    Some(m) => {
                        let (a, x) = if r.dual { (j, i) } else { (i, j) };
                        table[a][x] = m;
                    }
                    None => {
                        self.problem(
                            format!("{at}.action[{i}][{j}]"),
                            format!(
                                "entry out of range: `{label}` is not an element of `{}`",
                                r.space
                            ),
                        );
                        ok = false;
                    }
                }
            }
        }
        if !ok {
            return None;
        }
        let domain_algebra = if r.dual {
            opposite(&domain.algebra, &modes)
        } else {
            domain.algebra.clone()
        };
        let n = space.labels.len();
        let table = table
            .into_iter()
            .map(|row| Mapping::new(row, n).expect("entries resolved above"))
            .collect();
        let rep = Representation::from_parts_unchecked(
            domain_algebra,
            space.algebra.clone(),
            OpInterpretation::new(modes),
            table,
        );
        let violations = rep.validate();
        let layers = Layers {
            names: vec![r.domain.clone(), r.space.clone()],
            labels: vec![domain.labels.clone(), space.labels.clone()],
        };
        if !violations.is_empty() {
            for v in violations {
                self.problem(at.to_owned(), describe_violation(&v, &rep, &layers));
            }
            return None;
        }
        Some(NamedRep { rep, layers })
    }

    fn tower(&mut self, at: &str, names: &[String]) -> Option<NamedTower> {
        if names.is_empty() {
            self.problem(at.to_owned(), "a tower needs at least one representation");
            return None;
        }
        let reps: Vec<Option<NamedRep>> = names
            .iter()
            .map(|n| self.rep_ref(&format!("{at}.reps"), n))
            .collect();
        let reps: Vec<NamedRep> = reps.into_iter().collect::<Option<_>>()?;
        let mut layers = Layers {
            names: vec![reps[0].layers.names[0].clone()],
            labels: vec![reps[0].layers.labels[0].clone()],
        };
        let mut ok = true;
        for (k, r) in reps.iter().enumerate() {
            if k > 0 && r.layers.names[0] != reps[k - 1].layers.names[1] {
                self.problem(
                    format!("{at}.reps"),
                    format!(
                        "`{}` acts on `{}` but `{}` is defined on `{}`",
                        names[k - 1],
                        reps[k - 1].layers.names[1],
                        names[k],
                        r.layers.names[0]
                    ),
                );
                ok = false;
            }
            layers.names.push(r.layers.names[1].clone());
            layers.labels.push(r.layers.labels[1].clone());
        }
        if !ok {
            return None;
        }
        let tower = Tower::from_reps_unchecked(reps.into_iter().map(|r| r.rep).collect());
        let violations = tower.validate();
        if !violations.is_empty() {
            for v in violations {
                let msg = match v {
                    TowerViolation::Chain { layer } => format!(
                        "layer {} differs between `{}` and `{}` (a dual representation uses the opposite domain)",
                        layer + 1,
                        names[layer - 1],
                        names[layer]
                    ),
                    other => other.to_string(),
                };
                self.problem(at.to_owned(), msg);
            }
            return None;
        }
        Some(NamedTower {
            tower,
            reps: names.to_vec(),
            layers,
        })
    }

    fn map(
        &mut self,
        at: &str,
        labels: &[String],
        from: &[String],
        to: &[String],
    ) -> Option<Mapping> {
        if labels.len() != from.len() {
            self.problem(
                at.to_owned(),
                format!("{} entries, expected {}", labels.len(), from.len()),
            );
            return None;
        }
        let mut image = Vec::new();
        for (k, l) in labels.iter().enumerate() {
            match to.iter().position(|t| t == l) {
                Some(x) => image.push(x),
                None => {
                    self.problem(
                        format!("{at}[{k}]"),
                        format!("entry out of range: `{l}` is not a target element"),
                    );
                    return None;
                }
            }
        }
        Some(Mapping::new(image, to.len()).expect("positions are below the target size"))
    }
}

fn unknown_target(name: &str) -> String {
    format!("unknown or invalid representation or tower `{name}`")
}

/// Reads a nested label array of the given depth into `table`, first
/// argument outermost.
fn flatten(
    v: &toml::Value,
    depth: usize,
    labels: &[String],
    prefix: &mut Vec<usize>,
    table: &mut [usize],
    errors: &mut Vec<String>,
) {
    let here = || {
        if prefix.is_empty() {
            String::new()
        } else {
            format!(" at {prefix:?}")
        }
    };
    if depth == 0 {
        match v.as_str() {
            Some(l) => match labels.iter().position(|x| x == l) {
                Some(e) => table[tuple_index(labels.len(), prefix)] = e,
                None => errors.push(format!(
                    "entry out of range{}: `{l}` is not an element",
                    here()
                )),
            },
            None => errors.push(format!(
                "expected a label{}, found {}",
                here(),
                v.type_str()
            )),
        }
        return;
    }
    let Some(items) = v.as_array() else {
        errors.push(format!(
            "expected an array{}, found {}",
            here(),
            v.type_str()
        ));
        return;
    };
    if items.len() != labels.len() {
        errors.push(format!(
            "truncated table: {} entries{}, expected {}",
            items.len(),
            here(),
            labels.len()
        ));
    }
    for (k, item) in items.iter().enumerate().take(labels.len()) {
        prefix.push(k);
        flatten(item, depth - 1, labels, prefix, table, errors);
        prefix.pop();
    }
}

fn parse_interp(text: &str, space: &Signature) -> Result<Interp, String> {
    let text = text.trim();
    match text {
        "compose" => Ok(Interp::Compose),
        "identity" => Ok(Interp::Identity),
        "inverse" => Ok(Interp::Inverse),
        _ => {
            let sym = text
                .strip_prefix("pointwise(")
                .and_then(|rest| rest.strip_suffix(')'))
                .ok_or_else(|| {
                    format!("`{text}` is not compose, identity, inverse or pointwise(sym)")
                })?;
            space
                .index_of(sym)
                .map(Interp::Pointwise)
                .ok_or_else(|| format!("`{sym}` is not an operation of the space"))
        }
    }
}

/// The algebra with every compose-interpreted operation's arguments swapped,
/// so that a right action becomes a left one.
fn opposite(alg: &FiniteAlgebra, modes: &[Interp]) -> FiniteAlgebra {
    FiniteAlgebra::from_fn(alg.signature().clone(), alg.size(), |op, args| {
        if modes.get(op) == Some(&Interp::Compose) {
            alg.apply(op, &[args[1], args[0]])
        } else {
            alg.apply(op, args)
        }
    })
}

fn describe_violation(
    v: &RepresentationViolation,
    rep: &Representation,
    layers: &Layers,
) -> String {
    let sym = |op: usize| rep.domain().signature().symbol(op).to_owned();
    let dom = |args: &[usize]| {
        args.iter()
            .map(|&a| layers.labels[0][a].as_str())
            .collect::<Vec<_>>()
            .join(", ")
    };
    match v {
        RepresentationViolation::LawFails { op, args } => {
            format!(
                "homomorphism law fails for `{}` at ({})",
                sym(*op),
                dom(args)
            )
        }
        RepresentationViolation::InverseUndefined { op, args } => {
            format!(
                "`{}` at ({}) needs the inverse of a non-bijective transformation",
                sym(*op),
                dom(args)
            )
        }
        RepresentationViolation::NotTransformation { element, witness } => {
            let ssym = rep.space().signature().symbol(witness.op);
            let spc = witness
                .args
                .iter()
                .map(|&m| layers.labels[1][m].as_str())
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "action of `{}` does not preserve `{ssym}` at ({spc})",
                layers.labels[0][*element]
            )
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> (Model, Vec<Problem>) {
        Model::load(&Document::parse(text).unwrap())
    }

    const Z3: &str = r#"
format = "ualg/1"
[signatures.g]
ops = [["+", 2]]
[algebras.z3]
signature = "g"
elements = ["0", "1", "2"]
ops = { "+" = [["0", "1", "2"], ["1", "2", "0"], ["2", "0", "1"]] }
[algebras.s3]
signature = "empty"
elements = ["a", "b", "c"]
[signatures.empty]
ops = []
"#;

    #[test]
    fn loads_translation_rep() {
        let text = format!(
            "{Z3}[representations.t]\ndomain = \"z3\"\nspace = \"s3\"\ninterp = {{ \"+\" = \"compose\" }}\naction = [[\"a\", \"b\", \"c\"], [\"b\", \"c\", \"a\"], [\"c\", \"a\", \"b\"]]\n"
        );
        let (model, problems) = load(&text);
        assert!(problems.is_empty(), "{problems:?}");
        let t = &model.representations["t"];
        assert!(t.rep.is_single_transitive());
        assert_eq!(t.rep.act(1, 2), 0);
    }

    #[test]
    fn truncated_table_and_bad_entry_are_reported() {
        let bad = Z3
            .replace(r#"["2", "0", "1"]] }"#, r#"] }"#)
            .replace(r#"["0", "1", "2"], ["1""#, r#"["0", "1", "5"], ["1""#);
        let (model, problems) = load(&bad);
        assert!(!model.algebras.contains_key("z3"));
        assert_eq!(problems.len(), 2, "{problems:?}");
        assert!(problems
            .iter()
            .any(|p| p.message.contains("entry out of range at [0, 2]")));
        assert!(problems
            .iter()
            .any(|p| p.message.contains("truncated table: 2 entries")));
    }

    #[test]
    fn dual_rows_are_transposed() {
        // right translation x·a = x + a, rows keyed by the space point
        let text = format!(
            "{Z3}[representations.t]\ndomain = \"z3\"\nspace = \"s3\"\ndual = true\ninterp = {{ \"+\" = \"compose\" }}\naction = [[\"a\", \"b\", \"c\"], [\"b\", \"c\", \"a\"], [\"c\", \"a\", \"b\"]]\n"
        );
        let (model, problems) = load(&text);
        assert!(problems.is_empty(), "{problems:?}");
        let t = &model.representations["t"];
        assert_eq!(t.rep.act(1, 0), 1);
        assert_eq!(t.rep.act(2, 1), 0);
    }

    #[test]
    fn law_failure_names_the_operation() {
        let text = format!(
            "{Z3}[representations.t]\ndomain = \"z3\"\nspace = \"s3\"\ninterp = {{ \"+\" = \"compose\" }}\naction = [[\"a\", \"b\", \"c\"], [\"b\", \"a\", \"c\"], [\"c\", \"a\", \"b\"]]\n"
        );
        let (_, problems) = load(&text);
        assert!(
            problems
                .iter()
                .any(|p| p.message.contains("law fails for `+`")),
            "{problems:?}"
        );
    }
}
