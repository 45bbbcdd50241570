//! Action-spec files.
//!
//! ```text
//! hyperpolar-action v1
//! # SO(3) acting on S^3 by isotropy
//! name: sphere
//! builder: hermann
//! tau: BDI 3 1
//! sigma: BDI 3 1
//! seed: 7
//! ```
//!
//! One `key: value` per line; `#` starts a comment. Keys by builder:
//!
//! - `hermann`: `tau`, `sigma` (involution labels on one algebra).
//! - `sigma`: `algebra`, `n`, `sigma` (`id` or an involution label).
//! - `chain`: `h`, `k` (involution labels), `n`, `shape`
//!   (`open`, `reduced-right`, `reduced-both`).
//! - `custom`: one `factor` line per factor (`I <involution>` or
//!   `II <algebra>`), then any number of `embed: <name> <slot>...` lines
//!   (every basis element of a catalog algebra or embedding, placed at the
//!   listed slots) and `generator: <slot> <entries>; <slot> <entries>`
//!   lines (row-major blocks, unlisted slots zero).
//!
//! Every builder also accepts `name`, `seed` and `tol: <rel> [<abs>]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use hyperpolar_core::actions::examples::{chain, hermann};
use hyperpolar_core::actions::{build_sigma_action, ActionModel, ChainShape};
use hyperpolar_core::catalog::{Catalog, SymmetricPair};
use hyperpolar_core::liealg::{AlgebraMap, BlockMat, LieElement, Mat, Tolerance};
use hyperpolar_core::spaces::{ProductSpace, SpaceFactor};

pub const HEADER: &str = "hyperpolar-action v1";

#[derive(Debug, Clone, PartialEq)]
pub struct SpecError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for SpecError {}

fn at(line: usize, message: impl fmt::Display) -> SpecError {
    SpecError { line: Some(line), message: message.to_string() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builder {
    Hermann,
    Sigma,
    Chain,
    Custom,
}

/// A value together with the line it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Located {
    pub line: usize,
    pub value: String,
}

#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub name: String,
    pub builder: Builder,
    pub builder_line: usize,
    pub seed: Option<u64>,
    pub tol: Option<Tolerance>,
    single: BTreeMap<String, Located>,
    factors: Vec<Located>,
    embeds: Vec<Located>,
    generators: Vec<Located>,
}

const SINGLE_KEYS: [&str; 10] = ["name", "builder", "tau", "sigma", "algebra", "n", "shape", "h", "k", "seed"];

pub fn parse(text: &str) -> Result<ActionSpec, SpecError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => return Err(at(n, format!("expected header `{HEADER}`, found `{other}`"))),
        None => return Err(SpecError { line: None, message: "empty spec file".into() }),
    }
    let mut single: BTreeMap<String, Located> = BTreeMap::new();
    let (mut factors, mut embeds, mut generators) = (Vec::new(), Vec::new(), Vec::new());
    let mut tol = None;
    for (n, line) in lines {
        let (key, value) = line.split_once(':').ok_or_else(|| at(n, format!("expected `key: value`, found `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if value.is_empty() {
            return Err(at(n, format!("`{key}` has no value")));
        }
        let loc = Located { line: n, value: value.to_string() };
        match key {
            "factor" => factors.push(loc),
            "embed" => embeds.push(loc),
            "generator" => generators.push(loc),
            "tol" => tol = Some(parse_tol(&loc)?),
            k if SINGLE_KEYS.contains(&k) => {
                if let Some(prev) = single.insert(k.to_string(), loc) {
                    return Err(at(n, format!("`{k}` already given on line {}", prev.line)));
                }
            }
            other => return Err(at(n, format!("unknown key `{other}`"))),
        }
    }
    let b = single
        .get("builder")
        .ok_or(SpecError { line: None, message: "missing `builder`".into() })?
        .clone();
    let builder = match b.value.as_str() {
        "hermann" => Builder::Hermann,
        "sigma" => Builder::Sigma,
        "chain" => Builder::Chain,
        "custom" => Builder::Custom,
        other => return Err(at(b.line, format!("unknown builder `{other}`"))),
    };
    let allowed: &[&str] = match builder {
        Builder::Hermann => &["tau", "sigma"],
        Builder::Sigma => &["algebra", "n", "sigma"],
        Builder::Chain => &["h", "k", "n", "shape"],
        Builder::Custom => &[],
    };
    for (k, loc) in &single {
        if !["name", "builder", "seed"].contains(&k.as_str()) && !allowed.contains(&k.as_str()) {
            return Err(at(loc.line, format!("`{k}` is not used by builder `{}`", b.value)));
        }
    }
    if builder != Builder::Custom {
        if let Some(l) = factors.first().or(embeds.first()).or(generators.first()) {
            return Err(at(l.line, "factor, embed and generator lines need `builder: custom`"));
        }
    }
    let seed = match single.get("seed") {
        Some(l) => Some(l.value.parse().map_err(|_| at(l.line, format!("`{}` is not a valid seed", l.value)))?),
        None => None,
    };
    let name = single.get("name").map(|l| l.value.clone()).unwrap_or_else(|| b.value.clone());
    Ok(ActionSpec { name, builder, builder_line: b.line, seed, tol, single, factors, embeds, generators })
}

fn parse_tol(loc: &Located) -> Result<Tolerance, SpecError> {
    let nums: Vec<f64> = loc
        .value
        .split_whitespace()
        .map(|w| w.parse().map_err(|_| at(loc.line, format!("`{w}` is not a number"))))
        .collect::<Result<_, _>>()?;
    let t = match nums.as_slice() {
        [rel] => Tolerance::new(*rel, (*rel * 1e-2).min(Tolerance::default().abs_eps)),
        [rel, abs] => Tolerance::new(*rel, *abs),
        _ => return Err(at(loc.line, "`tol` takes one or two numbers")),
    };
    t.map_err(|e| at(loc.line, e))
}

impl ActionSpec {
    fn need(&self, key: &str) -> Result<&Located, SpecError> {
        self.single
            .get(key)
            .ok_or_else(|| at(self.builder_line, format!("builder needs `{key}`")))
    }

    fn pair(&self, key: &str) -> Result<SymmetricPair, SpecError> {
        let l = self.need(key)?;
        parse_pair(l)
    }

    fn count(&self, key: &str) -> Result<usize, SpecError> {
        let l = self.need(key)?;
        match l.value.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(at(l.line, format!("`{key}` must be a positive integer"))),
        }
    }

    /// Builds the action against `cat`. Unknown names, invalid involutions
    /// and non-closed generator sets are reported at their lines.
    pub fn build(&self, cat: &mut Catalog) -> Result<ActionModel, SpecError> {
        let tol = *cat.tolerance();
        let a = match self.builder {
            Builder::Hermann => {
                let (tau, sigma) = (self.pair("tau")?, self.pair("sigma")?);
                hermann(cat, tau, sigma).map_err(|e| at(self.need("sigma").map(|l| l.line).unwrap_or(0), e))?
            }
            Builder::Sigma => {
                let alg = self.need("algebra")?;
                let l = cat.algebra(&alg.value).map_err(|e| at(alg.line, e))?;
                let n = self.count("n")?;
                let s = self.need("sigma")?;
                let map = if s.value == "id" {
                    AlgebraMap::identity(&l)
                } else {
                    let p = parse_pair(s)?;
                    let inv = cat.involution(p).map_err(|e| at(s.line, e))?;
                    if !Arc::ptr_eq(inv.algebra(), &l) {
                        return Err(at(s.line, format!("involution {} does not act on {}", p.label(), alg.value)));
                    }
                    inv.map().clone()
                };
                build_sigma_action(&l, n, &map, &tol).map_err(|e| at(s.line, e))?
            }
            Builder::Chain => {
                let (h, k, n) = (self.pair("h")?, self.pair("k")?, self.count("n")?);
                let s = self.need("shape")?;
                let shape = match s.value.as_str() {
                    "open" => ChainShape::Open,
                    "reduced-right" => ChainShape::ReducedRight,
                    "reduced-both" => ChainShape::ReducedBoth,
                    other => return Err(at(s.line, format!("unknown shape `{other}`"))),
                };
                chain(cat, h, k, n, shape).map_err(|e| at(s.line, e))?
            }
            Builder::Custom => self.build_custom(cat)?,
        };
        Ok(a.renamed(self.name.clone()))
    }

    fn build_custom(&self, cat: &mut Catalog) -> Result<ActionModel, SpecError> {
        let tol = *cat.tolerance();
        if self.factors.is_empty() {
            return Err(at(self.builder_line, "custom builder needs at least one `factor` line"));
        }
        let mut factors = Vec::new();
        for f in &self.factors {
            let words: Vec<&str> = f.value.split_whitespace().collect();
            let factor = match words.split_first() {
                Some((&"I", rest)) => {
                    let p = SymmetricPair::parse(rest).map_err(|e| at(f.line, e))?;
                    SpaceFactor::type_i(cat.involution(p).map_err(|e| at(f.line, e))?)
                }
                Some((&"II", [name])) => SpaceFactor::type_ii(cat.algebra(name).map_err(|e| at(f.line, e))?),
                _ => return Err(at(f.line, "factor must be `I <involution>` or `II <algebra>`")),
            };
            factors.push(factor);
        }
        let space = Arc::new(ProductSpace::new(factors).map_err(|e| at(self.factors[0].line, e))?);
        let shape = space.slot_shape().clone();
        let mut gens = Vec::new();
        for e in &self.embeds {
            let words: Vec<&str> = e.value.split_whitespace().collect();
            let (name, slots) = words.split_first().ok_or_else(|| at(e.line, "embed needs a name"))?;
            let slots = parse_slots(slots, &shape, e.line)?;
            if slots.is_empty() {
                return Err(at(e.line, "embed needs at least one slot"));
            }
            let basis: Vec<Mat> = if name.contains('(') || *name == "g2" {
                cat.algebra(name).map_err(|err| at(e.line, err))?.basis().to_vec()
            } else {
                cat.embedding(name).map_err(|err| at(e.line, err))?.image.basis().to_vec()
            };
            for x in basis {
                let mut g = BlockMat::zeros(&shape);
                for &s in &slots {
                    if x.size() != shape[s] {
                        return Err(at(e.line, format!("`{name}` has size {}, slot {s} has size {}", x.size(), shape[s])));
                    }
                    g.blocks[s] = x.clone();
                }
                gens.push(g);
            }
        }
        for g in &self.generators {
            let mut out = BlockMat::zeros(&shape);
            for part in g.value.split(';') {
                let words: Vec<&str> = part.split_whitespace().collect();
                let (slot, entries) = words.split_first().ok_or_else(|| at(g.line, "empty block"))?;
                let s = parse_slots(&[slot], &shape, g.line)?[0];
                let vals: Vec<f64> = entries
                    .iter()
                    .map(|w| w.parse().map_err(|_| at(g.line, format!("`{w}` is not a number"))))
                    .collect::<Result<_, _>>()?;
                if vals.len() != shape[s] * shape[s] {
                    return Err(at(g.line, format!("slot {s} needs {} entries, got {}", shape[s] * shape[s], vals.len())));
                }
                out.blocks[s] = Mat::from_row_major(vals).map_err(|e| at(g.line, e))?;
            }
            gens.push(out);
        }
        if gens.is_empty() {
            return Err(at(self.builder_line, "custom builder needs `embed` or `generator` lines"));
        }
        let line = self.embeds.first().or(self.generators.first()).map(|l| l.line).unwrap_or(self.builder_line);
        ActionModel::new(self.name.clone(), space, &gens, &tol).map_err(|e| at(line, e))
    }
}

fn parse_pair(l: &Located) -> Result<SymmetricPair, SpecError> {
    let words: Vec<&str> = l.value.split_whitespace().collect();
    SymmetricPair::parse(&words).map_err(|e| at(l.line, e))
}

fn parse_slots(words: &[&str], shape: &[usize], line: usize) -> Result<Vec<usize>, SpecError> {
    words
        .iter()
        .map(|w| match w.parse::<usize>() {
            Ok(s) if s < shape.len() => Ok(s),
            _ => Err(at(line, format!("`{w}` is not a slot index below {}", shape.len()))),
        })
        .collect()
}
