use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::element::LieElement;
use super::linear::{self, dot, norm};
use super::mat::Mat;
use super::random::Sampler;
use super::tolerance::Tolerance;
use crate::error::{arg, Error, Result};

/// Dimension above which closure is checked on random pairs instead of all
/// basis pairs. The residual `(X, Y) -> proj_perp [X, Y]` is bilinear, so
/// it vanishes identically iff it vanishes at a generic pair.
const FULL_CLOSURE_MAX_DIM: usize = 64;
const RANDOM_CLOSURE_PAIRS: usize = 12;

/// A real matrix Lie algebra, stored with a basis that is orthonormal for
/// the invariant form `mu(X, Y) = -trace(XY)` (the Frobenius product on
/// skew matrices).
#[derive(Debug, Clone)]
pub struct MatrixLieAlgebra<E: LieElement = Mat> {
    name: String,
    shape: E::Shape,
    basis: Vec<E>,
    flat: Vec<Vec<f64>>,
}

impl<E: LieElement> MatrixLieAlgebra<E> {
    /// Builds an algebra from linearly independent generators of its span.
    /// Fails if the family is dependent or not closed under the bracket.
    pub fn new(name: impl Into<String>, shape: E::Shape, basis: Vec<E>, tol: &Tolerance) -> Result<Self> {
        let count = basis.len();
        let alg = Self::from_spanning(name, shape, basis, tol)?;
        if alg.dim() != count {
            return Err(arg(format!(
                "basis of `{}` is linearly dependent: rank {} < {count}",
                alg.name,
                alg.dim()
            )));
        }
        Ok(alg)
    }

    /// Builds an algebra from an arbitrary spanning family.
    pub fn from_spanning(name: impl Into<String>, shape: E::Shape, family: Vec<E>, tol: &Tolerance) -> Result<Self> {
        let name = name.into();
        for e in &family {
            if e.shape() != shape {
                return Err(arg(format!("element of `{name}` has shape {:?}, expected {shape:?}", e.shape())));
            }
        }
        let flat: Vec<Vec<f64>> = family.iter().map(LieElement::to_flat).collect();
        if flat.iter().flatten().any(|x| !x.is_finite()) {
            return Err(arg(format!("non-finite entries in generators of `{name}`")));
        }
        let onb = linear::orthonormal_span(&flat, tol);
        let alg = Self::from_orthonormal(name, shape, onb);
        let residual = alg.closure_residual(&mut Sampler::new(0));
        if residual >= tol.rel_eps {
            return Err(arg(format!(
                "`{}` is not closed under the bracket (residual {residual:.3e})",
                alg.name
            )));
        }
        Ok(alg)
    }

    /// Trusts the caller that `flat` is orthonormal and bracket-closed.
    pub(crate) fn from_orthonormal(name: impl Into<String>, shape: E::Shape, flat: Vec<Vec<f64>>) -> Self {
        let basis = flat.iter().map(|f| E::from_flat(&shape, f)).collect();
        Self { name: name.into(), shape, basis, flat }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn shape(&self) -> &E::Shape {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[E] {
        &self.basis
    }

    /// Coordinates in the orthonormal basis (orthogonal projection).
    pub fn coords(&self, x: &E) -> Vec<f64> {
        let fx = x.to_flat();
        self.flat.iter().map(|b| dot(b, &fx)).collect()
    }

    pub fn element(&self, coords: &[f64]) -> E {
        let len = E::flat_len(&self.shape);
        E::from_flat(&self.shape, &linear::combine(&self.flat, coords, len))
    }

    /// `||x - proj(x)|| / ||x||`, zero for the zero element.
    pub fn span_residual(&self, x: &E) -> f64 {
        relative_rejection(&x.to_flat(), &self.flat)
    }

    pub fn contains(&self, x: &E, tol: &Tolerance) -> bool {
        self.span_residual(x) < tol.rel_eps
    }

    /// Largest relative component of a bracket outside the span.
    pub fn closure_residual(&self, rng: &mut Sampler) -> f64 {
        closure_residual_of(&self.basis, &self.flat, self.dim(), &self.shape, rng)
    }

    /// `max |mu([X,Y],Z) + mu(Y,[X,Z])|` over sampled basis triples.
    pub fn invariance_residual(&self, rng: &mut Sampler, samples: usize) -> f64 {
        let d = self.dim();
        if d == 0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let (x, y, z) = (&self.basis[rng.index(d)], &self.basis[rng.index(d)], &self.basis[rng.index(d)]);
            let (Ok(xy), Ok(xz)) = (x.lie_bracket(y), x.lie_bracket(z)) else {
                return f64::INFINITY;
            };
            let r = dot(&xy.to_flat(), &z.to_flat()) + dot(&y.to_flat(), &xz.to_flat());
            worst = worst.max(r.abs());
        }
        worst
    }

    /// Jacobi identity residual on sampled basis triples.
    pub fn jacobi_residual(&self, rng: &mut Sampler, samples: usize) -> f64 {
        let d = self.dim();
        if d == 0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let (x, y, z) = (&self.basis[rng.index(d)], &self.basis[rng.index(d)], &self.basis[rng.index(d)]);
            let terms = [(x, y, z), (y, z, x), (z, x, y)]
                .iter()
                .map(|(a, b, c)| b.lie_bracket(c).and_then(|bc| a.lie_bracket(&bc)).map(|t| t.to_flat()))
                .collect::<Result<Vec<_>>>();
            let Ok(terms) = terms else { return f64::INFINITY };
            let sum: Vec<f64> = (0..terms[0].len()).map(|i| terms[0][i] + terms[1][i] + terms[2][i]).collect();
            worst = worst.max(norm(&sum));
        }
        worst
    }

    /// Uniformly random unit-variance element (independent standard normal
    /// coordinates in the orthonormal basis).
    pub fn random_element(&self, rng: &mut Sampler) -> E {
        let c = rng.normal_vec(self.dim());
        self.element(&c)
    }
}

fn relative_rejection(fx: &[f64], onb: &[Vec<f64>]) -> f64 {
    let nx = norm(fx);
    if nx == 0.0 {
        return 0.0;
    }
    norm(&linear::reject(fx, onb)) / nx
}

fn closure_residual_of<E: LieElement>(
    basis: &[E],
    flat: &[Vec<f64>],
    dim: usize,
    shape: &E::Shape,
    rng: &mut Sampler,
) -> f64 {
    let mut worst = 0.0f64;
    let mut check = |x: &E, y: &E| -> bool {
        match x.lie_bracket(y) {
            Ok(z) => {
                // |[x, y]| <= 2 |x| |y|, so scale by the operands: brackets of
                // commuting elements are pure rounding noise
                let scale = norm(&x.to_flat()) * norm(&y.to_flat());
                if scale > 0.0 {
                    worst = worst.max(norm(&linear::reject(&z.to_flat(), flat)) / scale);
                }
                true
            }
            Err(_) => false,
        }
    };
    if dim <= FULL_CLOSURE_MAX_DIM {
        for i in 0..dim {
            for j in (i + 1)..dim {
                if !check(&basis[i], &basis[j]) {
                    return f64::INFINITY;
                }
            }
        }
    } else {
        let len = E::flat_len(shape);
        for _ in 0..RANDOM_CLOSURE_PAIRS {
            let x = E::from_flat(shape, &linear::combine(flat, &rng.normal_vec(dim), len));
            let y = E::from_flat(shape, &linear::combine(flat, &rng.normal_vec(dim), len));
            if !check(&x, &y) {
                return f64::INFINITY;
            }
        }
    }
    worst
}

/// A linear subspace of a matrix Lie algebra, stored with an orthonormal basis.
#[derive(Debug, Clone)]
pub struct AlgebraSubspace<E: LieElement = Mat> {
    parent: Arc<MatrixLieAlgebra<E>>,
    basis: Vec<E>,
    flat: Vec<Vec<f64>>,
}

impl<E: LieElement> AlgebraSubspace<E> {
    /// Span of `elements`, each of which must lie in the parent span.
    pub fn span(parent: &Arc<MatrixLieAlgebra<E>>, elements: &[E], tol: &Tolerance) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            if e.shape() != parent.shape {
                return Err(arg(format!("element {i} has shape {:?}, expected {:?}", e.shape(), parent.shape)));
            }
            let r = parent.span_residual(e);
            if r >= tol.rel_eps {
                return Err(arg(format!(
                    "element {i} lies outside `{}` (residual {r:.3e})",
                    parent.name
                )));
            }
        }
        let flat: Vec<Vec<f64>> = elements.iter().map(LieElement::to_flat).collect();
        Ok(Self::from_orthonormal(parent, linear::orthonormal_span(&flat, tol)))
    }

    pub(crate) fn from_orthonormal(parent: &Arc<MatrixLieAlgebra<E>>, flat: Vec<Vec<f64>>) -> Self {
        let basis = flat.iter().map(|f| E::from_flat(&parent.shape, f)).collect();
        Self { parent: Arc::clone(parent), basis, flat }
    }

    pub fn zero(parent: &Arc<MatrixLieAlgebra<E>>) -> Self {
        Self::from_orthonormal(parent, Vec::new())
    }

    pub fn full(parent: &Arc<MatrixLieAlgebra<E>>) -> Self {
        Self::from_orthonormal(parent, parent.flat.clone())
    }

    pub fn parent(&self) -> &Arc<MatrixLieAlgebra<E>> {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[E] {
        &self.basis
    }

    pub(crate) fn flat_basis(&self) -> &[Vec<f64>] {
        &self.flat
    }

    pub fn coords(&self, x: &E) -> Vec<f64> {
        let fx = x.to_flat();
        self.flat.iter().map(|b| dot(b, &fx)).collect()
    }

    pub fn element(&self, coords: &[f64]) -> E {
        let len = E::flat_len(&self.parent.shape);
        E::from_flat(&self.parent.shape, &linear::combine(&self.flat, coords, len))
    }

    pub fn span_residual(&self, x: &E) -> f64 {
        relative_rejection(&x.to_flat(), &self.flat)
    }

    pub fn contains(&self, x: &E, tol: &Tolerance) -> bool {
        self.span_residual(x) < tol.rel_eps
    }

    /// Whether every basis element of `other` lies in this subspace.
    pub fn contains_subspace(&self, other: &AlgebraSubspace<E>, tol: &Tolerance) -> bool {
        other.basis.iter().all(|b| self.contains(b, tol))
    }

    pub fn same_span(&self, other: &AlgebraSubspace<E>, tol: &Tolerance) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other, tol)
    }

    pub fn closure_residual(&self, rng: &mut Sampler) -> f64 {
        closure_residual_of(&self.basis, &self.flat, self.dim(), &self.parent.shape, rng)
    }

    pub fn is_subalgebra(&self, tol: &Tolerance) -> bool {
        self.closure_residual(&mut Sampler::new(0)) < tol.rel_eps
    }

    /// Promotes a bracket-closed subspace to an algebra of its own.
    pub fn to_algebra(&self, name: impl Into<String>, tol: &Tolerance) -> Result<MatrixLieAlgebra<E>> {
        let name = name.into();
        let r = self.closure_residual(&mut Sampler::new(0));
        if r >= tol.rel_eps {
            return Err(arg(format!("`{name}` is not a subalgebra (closure residual {r:.3e})")));
        }
        Ok(MatrixLieAlgebra::from_orthonormal(name, self.parent.shape.clone(), self.flat.clone()))
    }

    fn check_parent(&self, other: &AlgebraSubspace<E>, tol: &Tolerance) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) || self.parent.flat == other.parent.flat {
            return Ok(());
        }
        let a = AlgebraSubspace::full(&self.parent);
        let b = AlgebraSubspace::full(&other.parent);
        if self.parent.shape == other.parent.shape && a.same_span(&b, tol) {
            Ok(())
        } else {
            Err(arg(format!(
                "subspaces live in different algebras `{}` and `{}`",
                self.parent.name, other.parent.name
            )))
        }
    }

    /// Orthogonal complement with respect to `mu` inside the parent span.
    pub fn orthocomplement(&self, tol: &Tolerance) -> AlgebraSubspace<E> {
        let flat: Vec<Vec<f64>> = self
            .parent
            .flat
            .iter()
            .map(|p| linear::reject(p, &self.flat))
            .collect();
        Self::from_orthonormal(&self.parent, linear::orthonormal_span(&flat, tol))
    }

    pub fn intersect(&self, other: &AlgebraSubspace<E>, tol: &Tolerance) -> Result<AlgebraSubspace<E>> {
        self.check_parent(other, tol)?;
        // c in ker [A | -B] gives A c_a = B c_b, a common vector
        let mut stacked = self.flat.clone();
        stacked.extend(other.flat.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let ker = linear::kernel(&stacked, tol);
        let len = E::flat_len(&self.parent.shape);
        let common: Vec<Vec<f64>> =
            ker.iter().map(|c| linear::combine(&self.flat, &c[..self.dim()], len)).collect();
        Ok(Self::from_orthonormal(&self.parent, linear::orthonormal_span(&common, tol)))
    }

    /// Sum of two subspaces.
    pub fn join(&self, other: &AlgebraSubspace<E>, tol: &Tolerance) -> Result<AlgebraSubspace<E>> {
        self.check_parent(other, tol)?;
        let mut stacked = self.flat.clone();
        stacked.extend(other.flat.iter().cloned());
        Ok(Self::from_orthonormal(&self.parent, linear::orthonormal_span(&stacked, tol)))
    }

    /// `{x in self : map(x) = 0}` for a linear map into some `R^m`.
    pub fn kernel<F>(&self, map: F, tol: &Tolerance) -> AlgebraSubspace<E>
    where
        F: Fn(&E) -> Vec<f64>,
    {
        if self.dim() == 0 {
            return self.clone();
        }
        let images: Vec<Vec<f64>> = self.basis.iter().map(&map).collect();
        let ker = linear::kernel(&images, tol);
        let len = E::flat_len(&self.parent.shape);
        let flat: Vec<Vec<f64>> = ker.iter().map(|c| linear::combine(&self.flat, c, len)).collect();
        // combinations of an orthonormal family by orthonormal coefficient
        // vectors are orthonormal already
        Self::from_orthonormal(&self.parent, flat)
    }

    /// `{Y in self : [X, Y] = 0}`.
    pub fn centralizer_in(&self, x: &E, tol: &Tolerance) -> Result<AlgebraSubspace<E>> {
        if x.shape() != self.parent.shape {
            return Err(arg("element shape does not match the algebra"));
        }
        let r = self.parent.span_residual(x);
        if r >= tol.rel_eps {
            return Err(arg(format!("element lies outside `{}` (residual {r:.3e})", self.parent.name)));
        }
        // shapes agree, so the bracket cannot fail
        Ok(self.kernel(|y| x.lie_bracket(y).map(|z| z.to_flat()).unwrap_or_default(), tol))
    }

    /// Largest bracket norm between orthonormal basis elements.
    pub fn abelian_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                match self.basis[i].lie_bracket(&self.basis[j]) {
                    Ok(z) => worst = worst.max(norm(&z.to_flat())),
                    Err(_) => return f64::INFINITY,
                }
            }
        }
        worst
    }

    pub fn is_abelian(&self, tol: &Tolerance) -> bool {
        self.abelian_residual() < tol.rel_eps
    }

    /// Image of this subspace under a linear map `E -> F` landing in `target`.
    pub fn map_into<F: LieElement, M>(
        &self,
        target: &Arc<MatrixLieAlgebra<F>>,
        map: M,
        tol: &Tolerance,
    ) -> Result<AlgebraSubspace<F>>
    where
        M: Fn(&E) -> F,
    {
        let images: Vec<F> = self.basis.iter().map(map).collect();
        AlgebraSubspace::span(target, &images, tol)
    }
}

/// Rank of a family of matrices after flattening.
pub fn numerical_rank<E: LieElement>(vectors: &[E], tol: &Tolerance) -> Result<usize> {
    let first = vectors.first().ok_or_else(|| arg("numerical_rank of an empty family"))?;
    let shape = first.shape();
    if let Some(bad) = vectors.iter().find(|v| v.shape() != shape) {
        return Err(Error::Argument(format!("mixed shapes {:?} and {:?}", shape, bad.shape())));
    }
    let flat: Vec<Vec<f64>> = vectors.iter().map(LieElement::to_flat).collect();
    Ok(linear::rank(&flat, tol))
}

impl<E: LieElement> core::fmt::Display for MatrixLieAlgebra<E> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} dim={}", self.name, self.dim())
    }
}
