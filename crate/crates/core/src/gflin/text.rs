//! Plain-text matrix format: a header line `p d rows cols`, then row-major entries.

use std::fmt::Write as _;

use super::field::FieldCtx;
use super::mat::Mat;
use crate::error::{Error, Result};

pub fn write_mat(m: &Mat) -> String {
    let f = m.field();
    let mut s = format!("{} {} {} {}\n", f.p(), f.d(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row = m.row(i);
        for (j, x) in row.iter().enumerate() {
            if j > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{x}");
        }
        s.push('\n');
    }
    s
}

/// Parses one matrix from the front of `tokens`, advancing it.
pub fn read_mat_tokens<'a, I: Iterator<Item = &'a str>>(tokens: &mut I) -> Result<Mat> {
    let mut next = |what: &str| -> Result<u32> {
        let t = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("unexpected end of input reading {what}")))?;
        t.parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad integer `{t}` for {what}")))
    };
    let p = next("p")?;
    let d = next("d")?;
    let rows = next("rows")? as usize;
    let cols = next("cols")? as usize;
    let field = FieldCtx::new(p, d)?;
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let x = next("entry")?;
        if x >= field.q() {
            return Err(Error::Parse(format!("entry {x} outside GF({})", field.q())));
        }
        data.push(x as u16);
    }
    Mat::from_vec(&field, rows, cols, data)
}

pub fn read_mat(s: &str) -> Result<Mat> {
    let mut tokens = s.split_whitespace();
    let m = read_mat_tokens(&mut tokens)?;
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing data after matrix".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let f = FieldCtx::new(3, 2).unwrap();
        let m = Mat::from_rows(&f, &[vec![0, 8, 4], vec![1, 2, 3]]);
        let s = write_mat(&m);
        assert_eq!(s, "3 2 2 3\n0 8 4\n1 2 3\n");
        assert_eq!(read_mat(&s).unwrap(), m);
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(read_mat("2 1 1 1\n2\n").is_err());
        assert!(read_mat("2 1 1 2\n1\n").is_err());
    }
}
