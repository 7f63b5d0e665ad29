//! Bit-packed GF(2) kernels. Rows are `u64` words, least significant bit first.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMat {
    pub rows: usize,
    pub cols: usize,
    pub words: usize,
    pub data: Vec<u64>,
}

#[inline]
pub fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

#[inline]
pub fn get_bit(row: &[u64], j: usize) -> bool {
    (row[j >> 6] >> (j & 63)) & 1 == 1
}

#[inline]
pub fn flip_bit(row: &mut [u64], j: usize) {
    row[j >> 6] ^= 1u64 << (j & 63);
}

#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

pub fn first_set(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub fn pack_row(src: &[u16]) -> Vec<u64> {
    let mut out = vec![0u64; words_for(src.len())];
    for (j, &x) in src.iter().enumerate() {
        if x & 1 == 1 {
            out[j >> 6] |= 1u64 << (j & 63);
        }
    }
    out
}

pub fn unpack_row(src: &[u64], cols: usize, dst: &mut [u16]) {
    for (j, d) in dst.iter_mut().enumerate().take(cols) {
        *d = get_bit(src, j) as u16;
    }
}

impl BitMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        BitMat {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn from_dense(rows: usize, cols: usize, dense: &[u16]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            let r = pack_row(&dense[i * cols..(i + 1) * cols]);
            m.row_mut(i).copy_from_slice(&r);
        }
        m
    }

    pub fn to_dense(&self) -> Vec<u16> {
        let mut out = vec![0u16; self.rows * self.cols];
        for i in 0..self.rows {
            unpack_row(self.row(i), self.cols, &mut out[i * self.cols..(i + 1) * self.cols]);
        }
        out
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.words..(i + 1) * self.words]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let w = self.words;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let word = c >> 6;
            let bit = 1u64 << (c & 63);
            let Some(piv) = (r..self.rows).find(|&i| self.data[i * w + word] & bit != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..w {
                    self.data.swap(piv * w + k, r * w + k);
                }
            }
            let (head, tail) = self.data.split_at_mut(r * w);
            let (prow, rest) = tail.split_at_mut(w);
            for i in 0..r {
                let row = &mut head[i * w..(i + 1) * w];
                if row[word] & bit != 0 {
                    xor_into(&mut row[word..], &prow[word..]);
                }
            }
            for i in 0..self.rows - r - 1 {
                let row = &mut rest[i * w..(i + 1) * w];
                if row[word] & bit != 0 {
                    xor_into(&mut row[word..], &prow[word..]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn mul(&self, other: &BitMat) -> BitMat {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMat::zeros(self.rows, other.cols);
        let w = out.words;
        for i in 0..self.rows {
            let arow = self.row(i);
            let orow = &mut out.data[i * w..(i + 1) * w];
            for (wi, &word) in arow.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let k = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    xor_into(orow, other.row(k));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_roundtrip() {
        let dense: Vec<u16> = (0..3 * 70).map(|i| ((i * 7 + 3) % 5 == 0) as u16).collect();
        let b = BitMat::from_dense(3, 70, &dense);
        assert_eq!(b.to_dense(), dense);
    }

    #[test]
    fn rref_small() {
        let mut b = BitMat::from_dense(2, 2, &[1, 1, 1, 1]);
        assert_eq!(b.rref(), vec![0]);
        assert_eq!(b.to_dense(), vec![1, 1, 0, 0]);
    }
}
