//! Incrementally built semi-echelon bases and subspace spinning.

use std::sync::Arc;

use super::bitmat::{self, first_set, pack_row, unpack_row, xor_into};
use super::field::{Elem, FieldCtx};
use super::mat::Mat;
use crate::error::{Error, Result};

/// A basis in semi-echelon form: row `i` has a leading 1 at `pivots[i]`, is zero
/// before it, and is zero at the pivots of all earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Arc<FieldCtx>,
    dim: usize,
    pivots: Vec<usize>,
    dense: Vec<Vec<Elem>>,
    bits: Vec<Vec<u64>>,
}

impl Echelon {
    pub fn new(field: &Arc<FieldCtx>, dim: usize) -> Self {
        Echelon {
            field: field.clone(),
            dim,
            pivots: Vec::new(),
            dense: Vec::new(),
            bits: Vec::new(),
        }
    }

    pub fn from_rows(m: &Mat) -> Self {
        let mut e = Echelon::new(m.field(), m.cols());
        for i in 0..m.rows() {
            e.insert(m.row(i));
        }
        e
    }

    fn gf2(&self) -> bool {
        self.field.is_gf2()
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        if self.gf2() {
            let mut out = vec![0; self.dim];
            unpack_row(&self.bits[i], self.dim, &mut out);
            out
        } else {
            self.dense[i].clone()
        }
    }

    /// Reduces `v` in place, returning the coordinates subtracted along the way.
    pub fn reduce_with_coords(&self, v: &mut [Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.dim);
        let f = &self.field;
        let mut coords = vec![0; self.len()];
        if self.gf2() {
            let mut b = pack_row(v);
            for (i, &pc) in self.pivots.iter().enumerate() {
                if bitmat::get_bit(&b, pc) {
                    let w = pc >> 6;
                    xor_into(&mut b[w..], &self.bits[i][w..]);
                    coords[i] = 1;
                }
            }
            unpack_row(&b, self.dim, v);
            return coords;
        }
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                f.axpy(&mut v[pc..], f.neg(c), &self.dense[i][pc..]);
                coords[i] = c;
            }
        }
        coords
    }

    pub fn reduce(&self, v: &mut [Elem]) {
        if self.gf2() {
            let mut b = pack_row(v);
            self.reduce_bits(&mut b);
            unpack_row(&b, self.dim, v);
            return;
        }
        let f = &self.field;
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                f.axpy(&mut v[pc..], f.neg(c), &self.dense[i][pc..]);
            }
        }
    }

    fn reduce_bits(&self, b: &mut [u64]) {
        for (i, &pc) in self.pivots.iter().enumerate() {
            if bitmat::get_bit(b, pc) {
                let w = pc >> 6;
                xor_into(&mut b[w..], &self.bits[i][w..]);
            }
        }
    }

    /// Coordinates of `v` with respect to the stored rows, if `v` is in the span.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let mut w = v.to_vec();
        let c = self.reduce_with_coords(&mut w);
        w.iter().all(|&x| x == 0).then_some(c)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v` if it is not in the span; returns the index of the new row.
    pub fn insert(&mut self, v: &[Elem]) -> Option<usize> {
        if self.gf2() {
            let mut b = pack_row(v);
            self.reduce_bits(&mut b);
            let pc = first_set(&b)?;
            self.pivots.push(pc);
            self.bits.push(b);
            return Some(self.len() - 1);
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.push_reduced(w)
    }

    /// Adds an already reduced vector (normalizing it); returns its index if nonzero.
    pub fn push_reduced(&mut self, mut w: Vec<Elem>) -> Option<usize> {
        let pc = w.iter().position(|&x| x != 0)?;
        if self.gf2() {
            self.pivots.push(pc);
            self.bits.push(pack_row(&w));
            return Some(self.len() - 1);
        }
        let inv = self.field.inv(w[pc]);
        self.field.scale(&mut w[pc..], inv);
        self.pivots.push(pc);
        self.dense.push(w);
        Some(self.len() - 1)
    }

    /// Scale applied to a reduced vector before it is stored by `push_reduced`.
    pub fn normalizer_of(&self, w: &[Elem]) -> Option<Elem> {
        w.iter().find(|&&x| x != 0).map(|&x| self.field.inv(x))
    }

    /// Rows in insertion order.
    pub fn to_mat(&self) -> Mat {
        let mut data = Vec::with_capacity(self.len() * self.dim);
        for i in 0..self.len() {
            data.extend(self.row(i));
        }
        Mat::from_vec(&self.field, self.len(), self.dim, data).expect("valid shape")
    }

    /// The spanned subspace as a reduced row echelon basis.
    pub fn basis_rref(&self) -> Mat {
        self.to_mat().row_space()
    }
}

/// Insertion-order spinning: returns the echelon basis of the smallest subspace containing
/// the seed rows and closed under right multiplication by every operator.
pub fn spin_echelon(seeds: &Mat, operators: &[Mat]) -> Result<Echelon> {
    let n = seeds.cols();
    for op in operators {
        if op.rows() != n || op.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "operator {}x{} on vectors of length {n}",
                op.rows(),
                op.cols()
            )));
        }
    }
    let mut e = Echelon::new(seeds.field(), n);
    for i in 0..seeds.rows() {
        e.insert(seeds.row(i));
    }
    let mut next = 0;
    while next < e.len() {
        let u = e.row(next);
        for op in operators {
            let w = op.vec_mul(&u);
            e.insert(&w);
            if e.len() == n {
                return Ok(e);
            }
        }
        next += 1;
    }
    Ok(e)
}

/// Basis (in rref) of the subspace spun up from `seeds` under `operators`.
pub fn spin(seeds: &Mat, operators: &[Mat]) -> Result<Mat> {
    Ok(spin_echelon(seeds, operators)?.basis_rref())
}
