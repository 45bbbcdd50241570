//! Named subalgebra embeddings.
//!
//! Names have the form `<sub>_in_<ambient>` with sizes written inline, for
//! example `u3_in_so6`, `so5xso2_in_so7`, `s(u3xu1)_in_su4`, `spin9_in_so16`.
//! Block embeddings sit in the upper-left corner of the ambient matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::Serialize;

use super::classical::{
    build_classical, classical_generators, classical_name, realify, repeat_block, sp_generators, u_generators, Family,
};
use super::involution::{Involution, SymmetricPair};
use super::octonion::{qright, qunit};
use super::special::{g2_algebra, g2_in_so7, so4_in_g2, spin7_generators, spin9_generators, su3_in_g2};
use crate::error::{arg, Error, Result};
use crate::liealg::{AlgebraSubspace, Mat, MatrixLieAlgebra, Tolerance};

/// A subalgebra `image` of a catalog algebra `ambient`.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    pub name: String,
    pub ambient: Arc<MatrixLieAlgebra>,
    pub image: AlgebraSubspace,
}

impl EmbeddingSpec {
    pub fn dim(&self) -> usize {
        self.image.dim()
    }
}

/// Builds and caches catalog algebras so that embeddings into the same
/// ambient share one instance.
#[derive(Debug, Default)]
pub struct Catalog {
    tol: Tolerance,
    algebras: BTreeMap<String, Arc<MatrixLieAlgebra>>,
}

impl Catalog {
    pub fn new(tol: Tolerance) -> Catalog {
        Catalog { tol, algebras: BTreeMap::new() }
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn classical(&mut self, family: Family, n: usize) -> Result<Arc<MatrixLieAlgebra>> {
        let name = classical_name(family, n);
        if let Some(a) = self.algebras.get(&name) {
            return Ok(Arc::clone(a));
        }
        let a = Arc::new(build_classical(family, n)?);
        self.algebras.insert(name, Arc::clone(&a));
        Ok(a)
    }

    pub fn g2(&mut self) -> Arc<MatrixLieAlgebra> {
        if let Some(a) = self.algebras.get("g2") {
            return Arc::clone(a);
        }
        let a = Arc::new(g2_algebra(&self.tol));
        self.algebras.insert("g2".to_string(), Arc::clone(&a));
        a
    }

    /// Looks up an algebra by name: `so(n)`, `su(n)`, `sp(n)`, `u(n)`, `g2`.
    pub fn algebra(&mut self, name: &str) -> Result<Arc<MatrixLieAlgebra>> {
        if name == "g2" {
            return Ok(self.g2());
        }
        let open = name.find('(').ok_or_else(|| Error::UnknownName(name.to_string()))?;
        let fam = Family::parse(&name[..open]).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        let n = name[open + 1..]
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        self.classical(fam, n)
    }

    /// Catalog involution on the shared instance of its ambient algebra.
    pub fn involution(&mut self, pair: SymmetricPair) -> Result<Involution> {
        pair.validate()?;
        let (f, n) = pair.ambient();
        let g = self.classical(f, n)?;
        Involution::from_pair_on(pair, &g)
    }

    pub fn embedding(&mut self, name: &str) -> Result<EmbeddingSpec> {
        let unknown = || Error::UnknownName(name.to_string());
        let tol = self.tol;
        let (ambient, gens): (Arc<MatrixLieAlgebra>, Vec<Mat>) = match name {
            "g2_in_so7" => {
                let so7 = self.classical(Family::So, 7)?;
                let img = g2_in_so7(&so7, &tol);
                return Ok(EmbeddingSpec { name: name.into(), ambient: so7, image: img });
            }
            "spin7_in_so8" => (self.classical(Family::So, 8)?, spin7_generators()),
            "spin9_in_so16" => (self.classical(Family::So, 16)?, spin9_generators()),
            "su3_in_g2" | "so4_in_g2" => {
                let g2 = self.g2();
                let img = if name == "su3_in_g2" { su3_in_g2(&g2, &tol) } else { so4_in_g2(&g2, &tol) };
                return Ok(EmbeddingSpec { name: name.into(), ambient: g2, image: img });
            }
            _ => {
                let (sub, amb) = name.split_once("_in_").ok_or_else(unknown)?;
                let (fam, n) = parse_ambient(amb).ok_or_else(unknown)?;
                let ambient = self.classical(fam, n)?;
                let gens = match fam {
                    Family::So => so_sub(sub, n),
                    Family::Su => {
                        if let Some(res) = su_fixed(sub, n) {
                            let pair = res?;
                            let inv = self.involution(pair)?;
                            let img = inv.k().clone();
                            return Ok(EmbeddingSpec { name: name.into(), ambient, image: img });
                        }
                        su_sub(sub, n)
                    }
                    _ => None,
                }
                .ok_or_else(unknown)??;
                (ambient, gens)
            }
        };
        let image = AlgebraSubspace::span(&ambient, &gens, &tol)?;
        Ok(EmbeddingSpec { name: name.into(), ambient, image })
    }
}

/// One-shot lookup with a fresh catalog.
pub fn build_embedding(name: &str) -> Result<EmbeddingSpec> {
    Catalog::new(Tolerance::default()).embedding(name)
}

fn parse_ambient(s: &str) -> Option<(Family, usize)> {
    if let Some(r) = s.strip_prefix("so") {
        return r.parse().ok().map(|n| (Family::So, n));
    }
    if let Some(r) = s.strip_prefix("su") {
        return r.parse().ok().map(|n| (Family::Su, n));
    }
    None
}

/// Matches `pattern` (with `{}` for decimal integers) against `s`.
fn scan(pattern: &str, s: &str) -> Option<Vec<usize>> {
    let parts: Vec<&str> = pattern.split("{}").collect();
    let mut rest = s;
    let mut out = Vec::new();
    for (i, lit) in parts.iter().enumerate() {
        rest = rest.strip_prefix(lit)?;
        if i + 1 < parts.len() {
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            if end == 0 {
                return None;
            }
            out.push(rest[..end].parse().ok()?);
            rest = &rest[end..];
        }
    }
    rest.is_empty().then_some(out)
}

fn embed_all(gens: Vec<Mat>, n: usize, offset: usize) -> Vec<Mat> {
    gens.iter().map(|g| g.embed(n, offset)).collect()
}

fn too_big(sub: &str, need: usize, n: usize) -> Error {
    arg(format!("`{sub}` needs matrices of size {need}, ambient has {n}"))
}

fn so_sub(sub: &str, n: usize) -> Option<Result<Vec<Mat>>> {
    let fit = |need: usize, gens: Vec<Mat>| -> Result<Vec<Mat>> {
        if need > n {
            Err(too_big(sub, need, n))
        } else {
            Ok(embed_all(gens, n, 0))
        }
    };
    if let Some(v) = scan("so{}xso{}", sub) {
        let (k, m) = (v[0], v[1]);
        let mut gens = embed_all(classical_generators(Family::So, k), k + m, 0);
        gens.extend(embed_all(classical_generators(Family::So, m), k + m, k));
        return Some(fit(k + m, gens));
    }
    if let Some(v) = scan("so{}", sub) {
        return Some(fit(v[0], classical_generators(Family::So, v[0])));
    }
    if let Some(v) = scan("u{}", sub) {
        return Some(fit(2 * v[0], u_generators(v[0], false)));
    }
    if let Some(v) = scan("su{}", sub) {
        return Some(fit(2 * v[0], u_generators(v[0], true)));
    }
    if let Some(v) = scan("sp{}sp1", sub) {
        let mut gens = sp_generators(v[0]);
        gens.extend((1..4).map(|u| repeat_block(&qright(&qunit(u)), v[0])));
        return Some(fit(4 * v[0], gens));
    }
    if let Some(v) = scan("sp{}u1", sub) {
        let mut gens = sp_generators(v[0]);
        gens.push(repeat_block(&qright(&qunit(1)), v[0]));
        return Some(fit(4 * v[0], gens));
    }
    if let Some(v) = scan("sp{}", sub) {
        return Some(fit(4 * v[0], sp_generators(v[0])));
    }
    None
}

/// Fixed-point subalgebras of catalog involutions of `su(n)`.
fn su_fixed(sub: &str, n: usize) -> Option<Result<SymmetricPair>> {
    let check = |ok: bool, pair: SymmetricPair| {
        if ok {
            Ok(pair)
        } else {
            Err(arg(format!("`{sub}` does not fit in su({n})")))
        }
    };
    if let Some(v) = scan("s(u{}xu{})", sub) {
        return Some(check(v[0] + v[1] == n, SymmetricPair::AIII { p: v[0], q: v[1] }));
    }
    if let Some(v) = scan("sp{}", sub) {
        return Some(check(2 * v[0] == n, SymmetricPair::AII { n: v[0] }));
    }
    if let Some(v) = scan("so{}", sub) {
        return Some(check(v[0] == n, SymmetricPair::AI { n }));
    }
    None
}

/// `su(k)` and `u(k)` on the first `k` complex coordinates of `C^n`.
fn su_sub(sub: &str, n: usize) -> Option<Result<Vec<Mat>>> {
    let (k, traceless) = if let Some(v) = scan("su{}", sub) {
        (v[0], true)
    } else if let Some(v) = scan("u{}", sub) {
        (v[0], false)
    } else {
        return None;
    };
    if k > n || (!traceless && k == n) {
        return Some(Err(arg(format!("`{sub}` does not fit in su({n})"))));
    }
    let gens = u_generators(k, traceless)
        .into_iter()
        .map(|g| {
            let re = g.block(0, k).embed(n, 0);
            let mut im = Mat::zeros(k);
            for i in 0..k {
                for j in 0..k {
                    im[(i, j)] = g[(i + k, j)];
                }
            }
            let mut im = im.embed(n, 0);
            if !traceless {
                // make u(k) traceless in su(n) by compensating on the last coordinate
                let t: f64 = (0..n).map(|i| im[(i, i)]).sum();
                im[(n - 1, n - 1)] -= t;
            }
            realify(&re, &im)
        })
        .collect();
    Some(Ok(gens))
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub ambient: String,
    pub dim: usize,
}

/// Named embeddings that the analyses in this crate rely on. The list has
/// 36 entries; other sizes of the same patterns are accepted by
/// [`Catalog::embedding`].
pub const LISTED_EMBEDDINGS: [&str; 36] = [
    "g2_in_so7",
    "so4_in_g2",
    "so5_in_so6",
    "so5_in_so7",
    "so5_in_so8",
    "so5xso2_in_so7",
    "so5xso2_in_so8",
    "so5xso3_in_so8",
    "so6_in_so7",
    "so6_in_so8",
    "so6xso2_in_so8",
    "so7_in_so8",
    "so15_in_so16",
    "so2xso14_in_so16",
    "sp1_in_so4",
    "sp2_in_so8",
    "sp2_in_su4",
    "sp2sp1_in_so8",
    "sp2u1_in_so8",
    "sp3_in_su6",
    "sp4sp1_in_so16",
    "spin7_in_so8",
    "spin9_in_so16",
    "s(u2xu2)_in_su4",
    "s(u3xu1)_in_su4",
    "s(u5xu1)_in_su6",
    "su3_in_g2",
    "su3_in_so6",
    "su3_in_su4",
    "su4_in_so8",
    "su5_in_su6",
    "u3_in_so6",
    "u3_in_so7",
    "u4_in_so8",
    "u8_in_so16",
    "so3_in_su3",
];

/// Algebras listed by name; the patterns `so(n)`, `su(n)`, `sp(n)`, `u(n)`
/// accept other sizes too.
pub const LISTED_ALGEBRAS: [&str; 22] = [
    "g2", "so(2)", "so(3)", "so(4)", "so(5)", "so(6)", "so(7)", "so(8)", "so(9)", "so(16)", "su(2)", "su(3)",
    "su(4)", "su(6)", "sp(1)", "sp(2)", "sp(3)", "sp(4)", "u(1)", "u(2)", "u(3)", "u(4)",
];

/// Listed algebras (with ambient `-`) followed by listed embeddings.
pub fn catalog_listing(cat: &mut Catalog) -> Result<Vec<CatalogEntry>> {
    let algebras = LISTED_ALGEBRAS.iter().map(|n| {
        let a = cat.algebra(n)?;
        Ok(CatalogEntry { name: (*n).into(), ambient: "-".into(), dim: a.dim() })
    });
    let mut out = algebras.collect::<Result<Vec<_>>>()?;
    let embeddings = LISTED_EMBEDDINGS
        .iter()
        .map(|n| {
            let e = cat.embedding(n)?;
            Ok(CatalogEntry { name: e.name.clone(), ambient: e.ambient.name().to_string(), dim: e.dim() })
        })
        .collect::<Result<Vec<_>>>()?;
    out.extend(embeddings);
    Ok(out)
}
