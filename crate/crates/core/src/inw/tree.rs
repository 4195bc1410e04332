use serde::{Deserialize, Serialize};

use super::{InwParams, InwSeed};
use crate::bits::BitString;
use crate::error::{Error, Result};

/// A move between neighbouring nodes of the generator tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    LeftChild,
    RightChild,
    /// To the parent, from a node that is its left child.
    ParentFromLeft,
    /// To the parent, from a node that is its right child.
    ParentFromRight,
}

impl Move {
    pub fn inverse(self) -> Self {
        match self {
            Move::LeftChild => Move::ParentFromLeft,
            Move::RightChild => Move::ParentFromRight,
            Move::ParentFromLeft => Move::LeftChild,
            Move::ParentFromRight => Move::RightChild,
        }
    }
}

/// The label of a tree node together with the node's height.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub bits: BitString,
    pub height: usize,
}

impl Label {
    /// The root label, equal to the seed.
    pub fn root(params: &InwParams, seed: &InwSeed) -> Self {
        Self { bits: seed.bits().clone(), height: params.depth }
    }

    /// Block `k` (0 = x', k ≥ 1 = s'_k).
    pub fn block(&self, params: &InwParams, k: usize) -> BitString {
        let n = params.block_len;
        self.bits.slice(k * n, (k + 1) * n)
    }

    /// The leaf output: first bit of block x'.
    pub fn output_bit(&self) -> bool {
        self.bits.get(0)
    }
}

/// Moves `label` to a neighbouring node.
///
/// Left moves leave the blocks untouched. A right-child move from height `h`
/// applies Ext^{(h)} keyed by block `h`; a parent-from-right move to height
/// `h + 1` applies Ext^{(h+1)} keyed by block `h + 1`. Block `h` (resp.
/// `h + 1`) is outside the region the extractor rewrites, so each right move
/// is undone by its parent move.
pub fn label_step(params: &InwParams, label: &Label, mv: Move) -> Result<Label> {
    let mut next = label.clone();
    step_in_place(params, &mut next, mv)?;
    Ok(next)
}

pub(crate) fn step_in_place(params: &InwParams, label: &mut Label, mv: Move) -> Result<()> {
    let h = label.height;
    let illegal = || Error::IllegalMove { mv, height: h, depth: params.depth };
    if label.bits.len() != params.seed_bits() || h > params.depth {
        return Err(Error::LengthMismatch { expected: params.seed_bits(), got: label.bits.len() });
    }
    match mv {
        Move::LeftChild => {
            if h == 0 {
                return Err(illegal());
            }
            label.height = h - 1;
        }
        Move::RightChild => {
            if h == 0 {
                return Err(illegal());
            }
            params.apply_level(h, &mut label.bits);
            label.height = h - 1;
        }
        Move::ParentFromLeft => {
            if h >= params.depth {
                return Err(illegal());
            }
            label.height = h + 1;
        }
        Move::ParentFromRight => {
            if h >= params.depth {
                return Err(illegal());
            }
            params.apply_level(h + 1, &mut label.bits);
            label.height = h + 1;
        }
    }
    Ok(())
}

/// Output bit `j` of G_M(seed), by walking from the root along the M-bit
/// big-endian expansion of `j` (0 = left).
pub fn inw_coord(params: &InwParams, seed: &InwSeed, j: usize) -> Result<bool> {
    if j >= params.output_len {
        return Err(Error::IndexOutOfRange { index: j, len: params.output_len });
    }
    let mut bits = seed.bits().clone();
    for h in (1..=params.depth).rev() {
        if (j >> (h - 1)) & 1 == 1 {
            params.apply_level(h, &mut bits);
        }
    }
    Ok(bits.get(0))
}

/// Left-to-right DFS over the generator tree, yielding the output bits in
/// order.
///
/// The stream holds one label and the index of the current leaf; every label
/// update is a [`label_step`] move, so the walk can be rewound exactly.
#[derive(Clone, Debug)]
pub struct InwStream<'a> {
    params: &'a InwParams,
    label: Label,
    leaf: usize,
    emitted: usize,
    ext_applications: u64,
}

impl<'a> InwStream<'a> {
    pub fn new(params: &'a InwParams, seed: &InwSeed) -> Self {
        let mut label = Label::root(params, seed);
        // Left moves only change the height.
        label.height = 0;
        Self { params, label, leaf: 0, emitted: 0, ext_applications: 0 }
    }

    /// The label at the current node.
    pub fn label(&self) -> &Label {
        &self.label
    }

    /// Index of the current leaf.
    pub fn leaf(&self) -> usize {
        self.leaf
    }

    /// Extractor applications performed so far.
    pub fn ext_applications(&self) -> u64 {
        self.ext_applications
    }

    fn step(&mut self, mv: Move) {
        if matches!(mv, Move::RightChild | Move::ParentFromRight) {
            self.ext_applications += 1;
        }
        step_in_place(self.params, &mut self.label, mv).expect("DFS only makes legal moves");
    }

    /// Moves from the current leaf to the next one to the right.
    fn advance(&mut self) {
        let j = self.leaf;
        let mut h = 0;
        while (j >> h) & 1 == 1 {
            self.step(Move::ParentFromRight);
            h += 1;
        }
        self.step(Move::ParentFromLeft);
        self.step(Move::RightChild);
        for _ in 0..h {
            self.step(Move::LeftChild);
        }
        self.leaf = j + 1;
    }

    /// Walks from the current node back to the root, returning its label.
    pub fn rewind(mut self) -> Label {
        while self.label.height < self.params.depth {
            let h = self.label.height;
            let mv = if (self.leaf >> h) & 1 == 1 { Move::ParentFromRight } else { Move::ParentFromLeft };
            self.step(mv);
        }
        self.label
    }
}

impl Iterator for InwStream<'_> {
    type Item = bool;

    fn next(&mut self) -> Option<bool> {
        if self.emitted == self.params.output_len {
            return None;
        }
        if self.emitted > 0 {
            self.advance();
        }
        self.emitted += 1;
        Some(self.label.output_bit())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.params.output_len - self.emitted;
        (left, Some(left))
    }
}

impl ExactSizeIterator for InwStream<'_> {}
