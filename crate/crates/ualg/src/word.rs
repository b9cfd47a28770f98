//! Prefix syntax for words: `const(a)`, `gen(i, x)`, `op(sym, w, ...)`,
//! `act(w, w)`.
//!
//! Labels and symbols are bare runs of characters other than whitespace,
//! commas, parentheses and double quotes, or double-quoted strings.

use ualg_core::OmegaWord;

/// Unresolved syntax tree, still in labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawWord {
    Const(String),
    Gen(usize, String),
    Op(String, Vec<RawWord>),
    Act(Box<RawWord>, Box<RawWord>),
}

/// Labels and symbols of each layer, 1-based.
pub trait WordContext {
    fn layer_count(&self) -> usize;
    fn labels(&self, layer: usize) -> &[String];
    fn symbols(&self, layer: usize) -> Vec<(String, usize)>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Comma,
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | ',' => {
                chars.next();
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    _ => Token::Comma,
                });
            }
            '"' => {
                chars.next();
                let mut atom = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => atom.push(e),
                            _ => return Err("bad escape in quoted label".into()),
                        },
                        Some(ch) => atom.push(ch),
                        None => return Err("unterminated quoted label".into()),
                    }
                }
                out.push(Token::Atom(atom));
            }
            _ => {
                let mut atom = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_whitespace() || matches!(ch, '(' | ')' | ',' | '"') {
                        break;
                    }
                    atom.push(ch);
                    chars.next();
                }
                out.push(Token::Atom(atom));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), String> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(format!("expected {want:?}, found {t:?}")),
            None => Err(format!("expected {want:?}, found end of input")),
        }
    }

    fn atom(&mut self) -> Result<String, String> {
        match self.next() {
            Some(Token::Atom(a)) => Ok(a),
            Some(t) => Err(format!("expected a label, found {t:?}")),
            None => Err("expected a label, found end of input".into()),
        }
    }

    fn word(&mut self) -> Result<RawWord, String> {
        let head = self.atom()?;
        self.expect(Token::Open)?;
        let w = match head.as_str() {
            "const" => RawWord::Const(self.atom()?),
            "gen" => {
                let layer = self.atom()?;
                let layer = layer
                    .parse()
                    .map_err(|_| format!("`{layer}` is not a layer number"))?;
                self.expect(Token::Comma)?;
                RawWord::Gen(layer, self.atom()?)
            }
            "op" => {
                let sym = self.atom()?;
                let mut args = Vec::new();
                while self.tokens.get(self.pos) == Some(&Token::Comma) {
                    self.pos += 1;
                    args.push(self.word()?);
                }
                RawWord::Op(sym, args)
            }
            "act" => {
                let actor = self.word()?;
                self.expect(Token::Comma)?;
                RawWord::Act(Box::new(actor), Box::new(self.word()?))
            }
            other => return Err(format!("unknown word head `{other}`")),
        };
        self.expect(Token::Close)?;
        Ok(w)
    }
}

pub fn parse(text: &str) -> Result<RawWord, String> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let w = p.word()?;
    if p.pos < p.tokens.len() {
        return Err(format!("trailing input after word: {:?}", p.tokens[p.pos]));
    }
    Ok(w)
}

/// The layer a word lives in, when the word alone determines it.
fn infer(w: &RawWord) -> Option<usize> {
    match w {
        RawWord::Const(_) => Some(1),
        RawWord::Gen(i, _) => Some(*i),
        RawWord::Op(_, args) => args.iter().find_map(infer),
        RawWord::Act(actor, target) => infer(target).or_else(|| infer(actor).map(|i| i + 1)),
    }
}

fn label_index(ctx: &dyn WordContext, layer: usize, label: &str) -> Result<usize, String> {
    ctx.labels(layer)
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| format!("`{label}` is not an element of layer {layer}"))
}

/// Resolves labels and symbols; `expected` pins the layer of the whole word.
pub fn resolve(
    w: &RawWord,
    expected: Option<usize>,
    ctx: &dyn WordContext,
) -> Result<OmegaWord, String> {
    let n = ctx.layer_count();
    let layer = expected
        .or_else(|| infer(w))
        .ok_or("cannot infer the layer of the word; state it explicitly")?;
    if layer == 0 || layer > n {
        return Err(format!("layer {layer} out of range 1..={n}"));
    }
    match w {
        RawWord::Const(a) => {
            if layer != 1 {
                return Err(format!(
                    "const({a}) is a layer-1 word, expected layer {layer}"
                ));
            }
            Ok(OmegaWord::Const(label_index(ctx, 1, a)?))
        }
        RawWord::Gen(i, x) => {
            if *i != layer {
                return Err(format!(
                    "gen({i}, {x}) is a layer-{i} word, expected layer {layer}"
                ));
            }
            if *i < 2 {
                return Err("generators live in layers 2 and up; use const for layer 1".into());
            }
            Ok(OmegaWord::Gen {
                layer,
                element: label_index(ctx, layer, x)?,
            })
        }
        RawWord::Op(sym, args) => {
            if layer == 1 {
                return Err("layer-1 elements are written const(a)".into());
            }
            let symbols = ctx.symbols(layer);
            let op = symbols
                .iter()
                .position(|(s, _)| s == sym)
                .ok_or_else(|| format!("`{sym}` is not an operation of layer {layer}"))?;
            if symbols[op].1 != args.len() {
                return Err(format!(
                    "`{sym}` takes {} arguments, {} given",
                    symbols[op].1,
                    args.len()
                ));
            }
            let args = args
                .iter()
                .map(|a| resolve(a, Some(layer), ctx))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(OmegaWord::op(layer, op, args))
        }
        RawWord::Act(actor, target) => {
            if layer < 2 {
                return Err("act(..) produces words of layer 2 and up".into());
            }
            let actor = resolve(actor, Some(layer - 1), ctx)?;
            let target = resolve(target, Some(layer), ctx)?;
            Ok(OmegaWord::act(actor, target))
        }
    }
}

fn atom(s: &str) -> String {
    let bare = !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '"' | '\\'));
    if bare {
        s.to_owned()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Prints with labels; the output parses back to the same word.
pub fn print(w: &OmegaWord, ctx: &dyn WordContext) -> String {
    match w {
        OmegaWord::Const(a) => format!("const({})", atom(&ctx.labels(1)[*a])),
        OmegaWord::Gen { layer, element } => {
            format!("gen({layer}, {})", atom(&ctx.labels(*layer)[*element]))
        }
        OmegaWord::Op { layer, op, args } => {
            let mut out = format!("op({}", atom(&ctx.symbols(*layer)[*op].0));
            for a in args.iter() {
                out.push_str(", ");
                out.push_str(&print(a, ctx));
            }
            out.push(')');
            out
        }
        OmegaWord::Act { actor, target, .. } => {
            format!("act({}, {})", print(actor, ctx), print(target, ctx))
        }
    }
}
