//! The TOML document format and its canonical text form.
//!
//! Named objects live in per-kind tables and are emitted sorted by name.
//! Within an algebra, operation tables follow signature order. Elements are
//! written by label everywhere.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

pub const FORMAT: &str = "ualg/1";

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format: String,
    #[serde(default)]
    pub signatures: BTreeMap<String, SignatureDoc>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraDoc>,
    #[serde(default)]
    pub representations: BTreeMap<String, RepresentationDoc>,
    #[serde(default)]
    pub towers: BTreeMap<String, TowerDoc>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismDoc>,
    #[serde(default)]
    pub tower_morphisms: BTreeMap<String, TowerMorphismDoc>,
    #[serde(default)]
    pub generators: BTreeMap<String, GeneratorsDoc>,
    #[serde(default)]
    pub words: BTreeMap<String, WordDoc>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureDoc {
    /// `(symbol, arity)` in declaration order.
    pub ops: Vec<(String, usize)>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub signature: String,
    pub elements: Vec<String>,
    /// Per symbol: a label (nullary) or arrays nested once per argument,
    /// first argument outermost.
    #[serde(default)]
    pub ops: BTreeMap<String, toml::Value>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDoc {
    pub domain: String,
    pub space: String,
    /// Rows are keyed by space element and the domain acts on the right.
    #[serde(default)]
    pub dual: bool,
    /// Per domain symbol: `compose`, `identity`, `inverse` or `pointwise(sym)`.
    pub interp: BTreeMap<String, String>,
    /// `action[a][m]` is the label of `f(a)(m)`; transposed when `dual`.
    pub action: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerDoc {
    pub reps: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: String,
    pub target: String,
    pub domain_map: Vec<String>,
    pub space_map: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerMorphismDoc {
    pub source: String,
    pub target: String,
    pub maps: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsDoc {
    /// A representation or a tower.
    pub target: String,
    /// One list per layer from 2 up.
    pub sets: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordDoc {
    pub target: String,
    pub generators: String,
    /// Needed only when the layer cannot be read off the word.
    #[serde(default)]
    pub layer: Option<usize>,
    pub word: String,
}

#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

impl Document {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let doc: Document = toml::from_str(text).map_err(|e| ParseError(e.to_string()))?;
        if doc.format != FORMAT {
            return Err(ParseError(format!(
                "unsupported format `{}`, expected `{FORMAT}`",
                doc.format
            )));
        }
        Ok(doc)
    }

    /// Canonical text; parsing it gives back an equal document.
    pub fn to_canonical(&self) -> String {
        let mut out = String::new();
        writeln!(out, "format = {}", quote(&self.format)).unwrap();
        for (name, s) in &self.signatures {
            writeln!(out, "\n[signatures.{}]", key(name)).unwrap();
            let ops: Vec<String> = s
                .ops
                .iter()
                .map(|(sym, k)| format!("[{}, {k}]", quote(sym)))
                .collect();
            writeln!(out, "ops = [{}]", ops.join(", ")).unwrap();
        }
        for (name, a) in &self.algebras {
            writeln!(out, "\n[algebras.{}]", key(name)).unwrap();
            writeln!(out, "signature = {}", quote(&a.signature)).unwrap();
            writeln!(out, "elements = {}", inline_list(&a.elements)).unwrap();
            if !a.ops.is_empty() {
                writeln!(out, "\n[algebras.{}.ops]", key(name)).unwrap();
                for sym in self.op_order(&a.signature, a.ops.keys()) {
                    write!(out, "{} = ", key(&sym)).unwrap();
                    write_value(&mut out, &a.ops[&sym]);
                    out.push('\n');
                }
            }
        }
        for (name, r) in &self.representations {
            writeln!(out, "\n[representations.{}]", key(name)).unwrap();
            writeln!(out, "domain = {}", quote(&r.domain)).unwrap();
            writeln!(out, "space = {}", quote(&r.space)).unwrap();
            writeln!(out, "dual = {}", r.dual).unwrap();
            let domain_sig = self
                .algebras
                .get(&r.domain)
                .map(|a| a.signature.clone())
                .unwrap_or_default();
            let interp: Vec<String> = self
                .op_order(&domain_sig, r.interp.keys())
                .into_iter()
                .map(|sym| format!("{} = {}", key(&sym), quote(&r.interp[&sym])))
                .collect();
            if interp.is_empty() {
                writeln!(out, "interp = {{}}").unwrap();
            } else {
                writeln!(out, "interp = {{ {} }}", interp.join(", ")).unwrap();
            }
            writeln!(out, "action = {}", block_rows(&r.action)).unwrap();
        }
        for (name, t) in &self.towers {
            writeln!(out, "\n[towers.{}]", key(name)).unwrap();
            writeln!(out, "reps = {}", inline_list(&t.reps)).unwrap();
        }
        for (name, m) in &self.morphisms {
            writeln!(out, "\n[morphisms.{}]", key(name)).unwrap();
            writeln!(out, "source = {}", quote(&m.source)).unwrap();
            writeln!(out, "target = {}", quote(&m.target)).unwrap();
            writeln!(out, "domain_map = {}", inline_list(&m.domain_map)).unwrap();
            writeln!(out, "space_map = {}", inline_list(&m.space_map)).unwrap();
        }
        for (name, m) in &self.tower_morphisms {
            writeln!(out, "\n[tower_morphisms.{}]", key(name)).unwrap();
            writeln!(out, "source = {}", quote(&m.source)).unwrap();
            writeln!(out, "target = {}", quote(&m.target)).unwrap();
            writeln!(out, "maps = {}", block_rows(&m.maps)).unwrap();
        }
        for (name, g) in &self.generators {
            writeln!(out, "\n[generators.{}]", key(name)).unwrap();
            writeln!(out, "target = {}", quote(&g.target)).unwrap();
            let sets: Vec<String> = g.sets.iter().map(|s| inline_list(s)).collect();
            writeln!(out, "sets = [{}]", sets.join(", ")).unwrap();
        }
        for (name, w) in &self.words {
            writeln!(out, "\n[words.{}]", key(name)).unwrap();
            writeln!(out, "target = {}", quote(&w.target)).unwrap();
            writeln!(out, "generators = {}", quote(&w.generators)).unwrap();
            if let Some(layer) = w.layer {
                writeln!(out, "layer = {layer}").unwrap();
            }
            writeln!(out, "word = {}", quote(&w.word)).unwrap();
        }
        out
    }

    /// Symbols in signature order, then any the signature does not declare.
    fn op_order<'a>(
        &self,
        signature: &str,
        present: impl Iterator<Item = &'a String>,
    ) -> Vec<String> {
        let present: Vec<&String> = present.collect();
        let mut order: Vec<String> = self
            .signatures
            .get(signature)
            .map(|s| {
                s.ops
                    .iter()
                    .map(|(sym, _)| sym.clone())
                    .filter(|sym| present.contains(&sym))
                    .collect()
            })
            .unwrap_or_default();
        for sym in present {
            if !order.contains(sym) {
                order.push(sym.clone());
            }
        }
        order
    }
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_owned()).to_string()
}

fn key(s: &str) -> String {
    if !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
    {
        s.to_owned()
    } else {
        quote(s)
    }
}

fn inline_list(items: &[String]) -> String {
    format!(
        "[{}]",
        items
            .iter()
            .map(|s| quote(s))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn block_rows(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let mut out = String::from("[\n");
    for row in rows {
        writeln!(out, "  {},", inline_list(row)).unwrap();
    }
    out.push(']');
    out
}

fn inline_value(v: &toml::Value) -> String {
    match v {
        toml::Value::Array(items) => format!(
            "[{}]",
            items
                .iter()
                .map(inline_value)
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}

/// Binary tables get one row per line; everything else stays inline.
fn write_value(out: &mut String, v: &toml::Value) {
    match v {
        toml::Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| r.is_array()) => {
            out.push_str("[\n");
            for row in rows {
                writeln!(out, "  {},", inline_value(row)).unwrap();
            }
            out.push(']');
        }
        other => out.push_str(&inline_value(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"
format = "ualg/1"

[signatures.g]
ops = [["+", 2]]

[algebras.z2]
signature = "g"
elements = ["0", "1"]
ops = { "+" = [["0", "1"], ["1", "0"]] }

[representations.t]
domain = "z2"
space = "z2"
interp = { "+" = "compose" }
action = [["0", "1"], ["1", "0"]]
"#;

    #[test]
    fn parses_and_round_trips() {
        let doc = Document::parse(SMALL).unwrap();
        assert_eq!(doc.algebras["z2"].elements, vec!["0", "1"]);
        let canon = doc.to_canonical();
        let again = Document::parse(&canon).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.to_canonical(), canon);
    }

    #[test]
    fn rejects_unknown_fields_and_formats() {
        assert!(Document::parse("format = \"ualg/1\"\nbogus = 1\n").is_err());
        assert!(Document::parse("format = \"other/2\"\n").is_err());
        assert!(Document::parse("format = \"ualg/1\"\n[algebras.a]\nelements = []\n").is_err());
    }

    #[test]
    fn odd_names_are_quoted() {
        assert_eq!(key("a b"), "\"a b\"");
        assert_eq!(key("f_12"), "f_12");
        assert_eq!(key("+"), "\"+\"");
    }
}
