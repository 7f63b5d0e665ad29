use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based. Ordering is lexicographic on images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 255, "degree too large");
        Perm {
            img: (0..n as u8).collect(),
        }
    }

    /// From 1-based images: `images[i-1] = g(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            img.push((x - 1) as u8);
        }
        Ok(Perm { img })
    }

    /// From 0-based images, unchecked beyond a debug assertion.
    pub fn from_zero_based(img: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Perm { img }
    }

    /// A single cycle `(c_1 c_2 ... c_m)` (1-based points) in degree `n`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut img: Vec<u8> = (0..n as u8).collect();
        let mut seen = vec![false; n];
        for (i, &a) in points.iter().enumerate() {
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::Parse(format!("bad cycle {points:?} in degree {n}")));
            }
            seen[a - 1] = true;
            let b = points[(i + 1) % points.len()];
            img[a - 1] = (b - 1) as u8;
        }
        Ok(Perm { img })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        Perm::cycle(n, &[a, b]).expect("valid transposition")
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    pub fn images0(&self) -> &[u8] {
        &self.img
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`; panics on degree mismatch.
    pub fn then_after(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            img: other.img.iter().map(|&i| self.img[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Perm { img }
    }

    /// `x ∘ self ∘ x⁻¹`.
    pub fn conjugate_by(&self, x: &Perm) -> Perm {
        x.then_after(self).then_after(&x.inverse())
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |l, c| lcm(l, c.len()))
    }

    pub fn sign(&self) -> i32 {
        let even = self
            .cycles()
            .iter()
            .map(|c| c.len() - 1)
            .sum::<usize>()
            % 2
            == 0;
        if even {
            1
        } else {
            -1
        }
    }

    /// Nontrivial cycles with 1-based points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i + 1);
                i = self.img[i] as usize;
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` or `()`; commas are accepted as separators.
    pub fn parse(s: &str, n: usize) -> Result<Perm> {
        let mut result = Perm::identity(n);
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "id" {
            return Ok(result);
        }
        let mut rest = s;
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("unexpected `{}` in `{s}`", &rest[..open])));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
            let body = &rest[open + 1..close];
            let pts = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(pts);
            rest = rest[close + 1..].trim_start();
        }
        // cycles are composed right to left
        for c in cycles.iter().rev() {
            if c.len() > 1 {
                result = Perm::cycle(n, c)?.then_after(&result);
            } else if let Some(&a) = c.first() {
                if a == 0 || a > n {
                    return Err(Error::Parse(format!("point {a} outside degree {n}")));
                }
            }
        }
        Ok(result)
    }

    /// Word `w` in adjacent transpositions (generator `i` is `s_{i+1} = (i+1 i+2)`) with
    /// `self = s_{w[0]} ∘ s_{w[1]} ∘ ...`, found by bubble sort.
    pub fn coxeter_word(&self) -> Vec<usize> {
        let mut a = self.img.clone();
        let mut swaps = Vec::new();
        let n = a.len();
        for end in (1..n).rev() {
            for i in 0..end {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    swaps.push(i);
                }
            }
        }
        swaps.reverse();
        swaps
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `s ∘ t`, with a degree check.
pub fn compose(s: &Perm, t: &Perm) -> Result<Perm> {
    if s.degree() != t.degree() {
        return Err(Error::DegreeMismatch {
            left: s.degree(),
            right: t.degree(),
        });
    }
    Ok(s.then_after(t))
}

/// The descending cycle `(i, i-1, ..., 1)` in degree `n`.
pub fn descending_cycle(i: usize, n: usize) -> Result<Perm> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("descending cycle d_{i} in degree {n}")));
    }
    let pts: Vec<usize> = (1..=i).rev().collect();
    if i == 1 {
        return Ok(Perm::identity(n));
    }
    Perm::cycle(n, &pts)
}

/// `τ^[b]`: permutes the `a` successive blocks of size `b` according to `τ`.
pub fn block_embed(t: &Perm, b: usize) -> Perm {
    let a = t.degree();
    let mut img = vec![0u8; a * b];
    for i in 0..a {
        for j in 0..b {
            img[i * b + j] = (t.at(i) * b + j) as u8;
        }
    }
    Perm { img }
}

/// `Δ_a(σ)`: acts by `σ` on each of the `a` successive blocks of size `b`.
pub fn diag_embed(s: &Perm, a: usize) -> Perm {
    let b = s.degree();
    let mut img = vec![0u8; a * b];
    for r in 0..a {
        for j in 0..b {
            img[r * b + j] = (r * b + s.at(j)) as u8;
        }
    }
    Perm { img }
}

/// `σ[r]`: acts by `σ` on the `r`-th (1-based) block of size `b`, fixing all other points.
pub fn slot_embed(s: &Perm, r: usize, a: usize) -> Result<Perm> {
    if r == 0 || r > a {
        return Err(Error::OutOfRange(format!("slot {r} of {a}")));
    }
    let b = s.degree();
    let mut img: Vec<u8> = (0..(a * b) as u8).collect();
    for j in 0..b {
        img[(r - 1) * b + j] = ((r - 1) * b + s.at(j)) as u8;
    }
    Ok(Perm { img })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = p("(2 3)", 3);
        assert_eq!(compose(&Perm::identity(3), &t).unwrap(), t);
        // apply (2 3) first, then (1 2): 1->2, 2->3, 3->1
        let c = compose(&p("(1 2)", 3), &t).unwrap();
        assert_eq!(c.images(), vec![2, 3, 1]);
        assert!(compose(&t, &Perm::identity(4)).is_err());
    }

    #[test]
    fn descending_cycles() {
        assert!(descending_cycle(1, 4).unwrap().is_identity());
        assert_eq!(descending_cycle(2, 2).unwrap(), p("(1 2)", 2));
        let d3 = descending_cycle(3, 3).unwrap();
        assert_eq!((d3.apply(3), d3.apply(2), d3.apply(1)), (2, 1, 3));
        assert!(descending_cycle(5, 4).is_err());
    }

    #[test]
    fn embedding_examples() {
        assert!(block_embed(&Perm::identity(3), 2).is_identity());
        assert_eq!(block_embed(&p("(1 2)", 2), 2), p("(1 3)(2 4)", 4));
        assert_eq!(block_embed(&p("(1 2 3)", 3), 1), p("(1 2 3)", 3));
        assert!(diag_embed(&Perm::identity(3), 2).is_identity());
        assert_eq!(diag_embed(&p("(1 2 3)", 3), 2), p("(1 2 3)(4 5 6)", 6));
        assert!(slot_embed(&Perm::identity(2), 1, 3).unwrap().is_identity());
        assert_eq!(slot_embed(&p("(1 2)", 2), 2, 2).unwrap(), p("(3 4)", 4));
        assert!(slot_embed(&p("(1 2)", 2), 3, 2).is_err());
    }

    #[test]
    fn parse_and_print() {
        let g = p("(1 2 3)(4 5 6)", 6);
        assert_eq!(g.to_string(), "(1 2 3)(4 5 6)");
        assert_eq!(p("()", 3).to_string(), "()");
        // right-to-left: (1 2)(2 3) = 1->2->... as in compose
        assert_eq!(p("(1 2)(2 3)", 3).images(), vec![2, 3, 1]);
        assert!(Perm::parse("(1 2", 3).is_err());
        assert!(Perm::parse("(1 4)", 3).is_err());
        assert!(Perm::parse("(1 1)", 3).is_err());
    }

    #[test]
    fn orders_and_signs() {
        assert_eq!(p("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(p("(1 2 3)(4 5)", 5).sign(), -1);
    }
}
