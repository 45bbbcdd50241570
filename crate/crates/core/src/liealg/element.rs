use alloc::vec::Vec;
use core::fmt::Debug;

use serde::{Deserialize, Serialize};

use super::mat::{bracket, Mat};
use crate::error::{Error, Result};

/// Anything that can serve as an element of a real matrix Lie algebra:
/// a finite-dimensional real vector (via its flattened coordinates) with a
/// bracket.
pub trait LieElement: Clone + Debug + PartialEq {
    type Shape: Clone + Debug + PartialEq;

    fn shape(&self) -> Self::Shape;
    fn zeros(shape: &Self::Shape) -> Self;
    fn flat_len(shape: &Self::Shape) -> usize;
    fn write_flat(&self, out: &mut Vec<f64>);
    fn from_flat(shape: &Self::Shape, flat: &[f64]) -> Self;
    fn lie_bracket(&self, other: &Self) -> Result<Self>;

    fn to_flat(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(Self::flat_len(&self.shape()));
        self.write_flat(&mut out);
        out
    }
}

impl LieElement for Mat {
    type Shape = usize;

    fn shape(&self) -> usize {
        self.size()
    }

    fn zeros(shape: &usize) -> Self {
        Mat::zeros(*shape)
    }

    fn flat_len(shape: &usize) -> usize {
        shape * shape
    }

    fn write_flat(&self, out: &mut Vec<f64>) {
        out.extend_from_slice(self.as_slice());
    }

    fn from_flat(shape: &usize, flat: &[f64]) -> Self {
        debug_assert_eq!(flat.len(), shape * shape);
        let mut m = Mat::zeros(*shape);
        for i in 0..*shape {
            for j in 0..*shape {
                m[(i, j)] = flat[i * shape + j];
            }
        }
        m
    }

    fn lie_bracket(&self, other: &Self) -> Result<Self> {
        bracket(self, other)
    }
}

/// Block-diagonal matrix stored as its diagonal blocks. Elements of the
/// isometry algebra of a product space live here, one block per slot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockMat {
    pub blocks: Vec<Mat>,
}

impl BlockMat {
    pub fn new(blocks: Vec<Mat>) -> Self {
        Self { blocks }
    }

    pub fn block(&self, slot: usize) -> &Mat {
        &self.blocks[slot]
    }

    /// A block element that is zero everywhere except `slot`.
    pub fn single(shape: &[usize], slot: usize, m: Mat) -> Self {
        let mut blocks: Vec<Mat> = shape.iter().map(|&n| Mat::zeros(n)).collect();
        blocks[slot] = m;
        Self { blocks }
    }

    pub fn dot(&self, other: &BlockMat) -> f64 {
        self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.dot(b)).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }
}

impl LieElement for BlockMat {
    type Shape = Vec<usize>;

    fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Mat::size).collect()
    }

    fn zeros(shape: &Vec<usize>) -> Self {
        Self { blocks: shape.iter().map(|&n| Mat::zeros(n)).collect() }
    }

    fn flat_len(shape: &Vec<usize>) -> usize {
        shape.iter().map(|n| n * n).sum()
    }

    fn write_flat(&self, out: &mut Vec<f64>) {
        for b in &self.blocks {
            out.extend_from_slice(b.as_slice());
        }
    }

    fn from_flat(shape: &Vec<usize>, flat: &[f64]) -> Self {
        let mut offset = 0;
        let blocks = shape
            .iter()
            .map(|&n| {
                let m = Mat::from_flat(&n, &flat[offset..offset + n * n]);
                offset += n * n;
                m
            })
            .collect();
        Self { blocks }
    }

    fn lie_bracket(&self, other: &Self) -> Result<Self> {
        if self.blocks.len() != other.blocks.len() {
            return Err(Error::Dimension { expected: self.blocks.len(), found: other.blocks.len() });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| bracket(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { blocks })
    }
}
