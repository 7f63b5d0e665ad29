//! Univariate polynomials over a finite field and their factorization.

use std::sync::Arc;

use rand::Rng;

use super::field::{Elem, FieldCtx};
use super::mat::Mat;

/// Coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Arc<FieldCtx>,
    c: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &Arc<FieldCtx>, mut c: Vec<Elem>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly {
            field: field.clone(),
            c,
        }
    }

    pub fn zero(field: &Arc<FieldCtx>) -> Self {
        Poly::new(field, vec![])
    }

    pub fn one(field: &Arc<FieldCtx>) -> Self {
        Poly::new(field, vec![1])
    }

    pub fn x(field: &Arc<FieldCtx>) -> Self {
        Poly::new(field, vec![0, 1])
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("nonzero polynomial")
    }

    pub fn lead(&self) -> Elem {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead());
        let mut c = self.c.clone();
        self.field.scale(&mut c, inv);
        Poly::new(&self.field, c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = self.c.clone();
        c.resize(n, 0);
        for (i, &x) in o.c.iter().enumerate() {
            c[i] = self.field.add(c[i], x);
        }
        Poly::new(&self.field, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = self.c.clone();
        c.resize(n, 0);
        for (i, &x) in o.c.iter().enumerate() {
            c[i] = self.field.sub(c[i], x);
        }
        Poly::new(&self.field, c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut c = vec![0; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a != 0 {
                self.field.axpy(&mut c[i..i + o.c.len()], a, &o.c);
            }
        }
        Poly::new(&self.field, c)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = &self.field;
        if self.c.len() < d.c.len() {
            return (Poly::zero(f), self.clone());
        }
        let dd = d.deg();
        let inv = f.inv(d.lead());
        let mut r = self.c.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let coef = f.mul(r[i], inv);
            if coef == 0 {
                continue;
            }
            q[i - dd] = coef;
            f.axpy(&mut r[i - dd..=i], f.neg(coef), &d.c);
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| f.mul(x, f.embed_prime(i as u32)))
            .collect();
        Poly::new(f, c)
    }

    pub fn mulmod(&self, o: &Poly, m: &Poly) -> Poly {
        self.mul(o).rem(m)
    }

    /// `self^e mod m` with an exponent given as little-endian 64-bit limbs.
    pub fn powmod_big(&self, e: &[u64], m: &Poly) -> Poly {
        let mut result = Poly::one(&self.field).rem(m);
        let base = self.rem(m);
        for &limb in e.iter().rev() {
            for bit in (0..64).rev() {
                result = result.mulmod(&result, m);
                if (limb >> bit) & 1 == 1 {
                    result = result.mulmod(&base, m);
                }
            }
        }
        result
    }

    pub fn powmod(&self, e: u64, m: &Poly) -> Poly {
        self.powmod_big(&[e], m)
    }

    /// `self^q mod m`.
    fn frobenius(&self, m: &Poly) -> Poly {
        self.powmod(self.field.q() as u64, m)
    }

    /// Evaluates at a square matrix.
    pub fn eval_mat(&self, a: &Mat) -> Mat {
        let n = a.rows();
        let f = &self.field;
        let mut acc = Mat::zeros(f, n, n);
        for &c in self.c.iter().rev() {
            acc = acc.mul(a);
            if c != 0 {
                for i in 0..n {
                    let x = acc.get(i, i);
                    acc.set(i, i, f.add(x, c));
                }
            }
        }
        acc
    }

    /// Characteristic polynomial `det(xI - A)` via reduction to Hessenberg form.
    pub fn charpoly(a: &Mat) -> Poly {
        let n = a.rows();
        let f = a.field().clone();
        let mut h: Vec<Vec<Elem>> = (0..n).map(|i| a.row(i).to_vec()).collect();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if i != j + 1 {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
            let inv = f.inv(h[j + 1][j]);
            for k in j + 2..n {
                let u = f.mul(h[k][j], inv);
                if u == 0 {
                    continue;
                }
                let (top, bottom) = h.split_at_mut(k);
                f.axpy(&mut bottom[0], f.neg(u), &top[j + 1]);
                for row in h.iter_mut() {
                    let add = f.mul(u, row[k]);
                    row[j + 1] = f.add(row[j + 1], add);
                }
            }
        }
        let mut polys = vec![Poly::one(&f)];
        for m in 1..=n {
            let lin = Poly::new(&f, vec![f.neg(h[m - 1][m - 1]), 1]);
            let mut pm = lin.mul(&polys[m - 1]);
            let mut t: Elem = 1;
            for i in (1..m).rev() {
                t = f.mul(t, h[i][i - 1]);
                if t == 0 {
                    break;
                }
                let c = f.mul(t, h[i - 1][m - 1]);
                if c != 0 {
                    pm = pm.sub(&polys[i - 1].scale(c));
                }
            }
            polys.push(pm);
        }
        polys.pop().expect("nonempty")
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.c.iter().map(|&x| f.mul(x, c)).collect())
    }

    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let e = (f.q() / f.p()) as u64;
        let c = self
            .c
            .iter()
            .step_by(p)
            .map(|&x| f.pow(x, e))
            .collect();
        Poly::new(f, c)
    }

    /// Distinct squarefree parts whose product is the radical of `self`.
    fn squarefree_parts(&self, out: &mut Vec<Poly>) {
        if self.degree().unwrap_or(0) == 0 {
            return;
        }
        let d = self.derivative();
        if d.is_zero() {
            self.pth_root().squarefree_parts(out);
            return;
        }
        let mut c = self.gcd(&d);
        let mut w = self.div_exact(&c);
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if fac.degree().unwrap_or(0) > 0 {
                out.push(fac.monic());
            }
            w = y;
            c = c.div_exact(&w);
        }
        if !c.is_one() {
            c.pth_root().squarefree_parts(out);
        }
    }

    /// Splits a squarefree polynomial into products of irreducibles of equal degree.
    fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Poly::x(&self.field);
        let mut h = x.rem(&f);
        let mut i = 0;
        while f.deg() >= 2 * (i + 1) {
            i += 1;
            h = h.frobenius(&f);
            let g = f.gcd(&h.sub(&x));
            if !g.is_one() {
                f = f.div_exact(&g);
                h = h.rem(&f);
                out.push((g, i));
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    fn equal_degree<R: Rng + ?Sized>(&self, d: usize, rng: &mut R, out: &mut Vec<Poly>) {
        let n = self.deg();
        if n == d {
            out.push(self.monic());
            return;
        }
        let f = &self.field;
        let q = f.q() as u64;
        loop {
            let a = Poly::new(
                f,
                (0..n).map(|_| rng.gen_range(0..q) as Elem).collect(),
            );
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if f.p() == 2 {
                // trace map a + a^2 + ... + a^(2^(m d - 1))
                let m = f.d() as usize * d;
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..m {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = big_pow_minus_one_half(q, d);
                a.powmod_big(&e, self).sub(&Poly::one(f))
            };
            let g = self.gcd(&b);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                g.equal_degree(d, rng, out);
                self.div_exact(&g).equal_degree(d, rng, out);
                return;
            }
        }
    }

    /// Distinct monic irreducible factors, sorted by (degree, coefficients).
    pub fn irreducible_factors<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Poly> {
        let mut parts = Vec::new();
        self.monic().squarefree_parts(&mut parts);
        let mut out: Vec<Poly> = Vec::new();
        for part in parts {
            for (g, d) in part.distinct_degree() {
                g.equal_degree(d, rng, &mut out);
            }
        }
        out.sort_by(|a, b| (a.deg(), a.c.iter().rev().collect::<Vec<_>>()).cmp(&(b.deg(), b.c.iter().rev().collect::<Vec<_>>())));
        out.dedup();
        out
    }
}

/// (q^d - 1) / 2 as little-endian u64 limbs.
fn big_pow_minus_one_half(q: u64, d: usize) -> Vec<u64> {
    let mut limbs: Vec<u64> = vec![1];
    for _ in 0..d {
        let mut carry: u128 = 0;
        for l in limbs.iter_mut() {
            let v = *l as u128 * q as u128 + carry;
            *l = v as u64;
            carry = v >> 64;
        }
        if carry > 0 {
            limbs.push(carry as u64);
        }
    }
    // subtract one (q^d is odd so no borrow beyond the first limb)
    limbs[0] -= 1;
    // halve
    let mut carry = 0u64;
    for l in limbs.iter_mut().rev() {
        let v = (*l >> 1) | (carry << 63);
        carry = *l & 1;
        *l = v;
    }
    limbs
}

#[cfg(test)]
mod tests {
    #[test]
    fn charpoly_annihilates() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (p, d) in [(2, 1), (3, 1), (5, 1), (2, 2)] {
            let f = crate::gflin::field_make(p, d).unwrap();
            for n in [1, 2, 5, 9] {
                let a = Mat::random(&f, n, n, &mut rng);
                let cp = Poly::charpoly(&a);
                assert_eq!(cp.degree(), Some(n));
                assert!(cp.eval_mat(&a).is_zero());
                assert_eq!(cp.coeffs()[0], if n % 2 == 0 { a.det() } else { f.neg(a.det()) });
            }
        }
    }

    use super::*;
    use rand::SeedableRng;

    fn product(fs: &[Poly]) -> Poly {
        fs.iter().fold(Poly::one(fs[0].field_ref()), |a, b| a.mul(b))
    }

    impl Poly {
        fn field_ref(&self) -> &Arc<FieldCtx> {
            &self.field
        }
    }

    #[test]
    fn factors_multiply_back() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, d) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = FieldCtx::new(p, d).unwrap();
            for _ in 0..20 {
                let n = rng.gen_range(1..12);
                let mut c: Vec<Elem> = (0..n).map(|_| rng.gen_range(0..f.q()) as Elem).collect();
                c.push(1);
                let poly = Poly::new(&f, c);
                let factors = poly.irreducible_factors(&mut rng);
                // the product of distinct factors divides poly and shares its radical
                let prod = product(&factors);
                assert!(poly.rem(&prod).is_zero());
                assert!(prod.powmod(n as u64, &poly).is_zero());
                for g in &factors {
                    assert!(is_irreducible_brute(g, &mut rng));
                }
            }
        }
    }

    fn is_irreducible_brute<R: Rng>(g: &Poly, _rng: &mut R) -> bool {
        let f = g.field_ref();
        let n = g.deg();
        for dd in 1..=n / 2 {
            let count = (f.q() as u64).pow(dd as u32);
            for idx in 0..count {
                let mut c = Vec::new();
                let mut t = idx;
                for _ in 0..dd {
                    c.push((t % f.q() as u64) as Elem);
                    t /= f.q() as u64;
                }
                c.push(1);
                if g.rem(&Poly::new(f, c)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn x_squared_plus_one_over_gf3_is_irreducible() {
        let f = FieldCtx::new(3, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let g = Poly::new(&f, vec![1, 0, 1]);
        assert_eq!(g.irreducible_factors(&mut rng), vec![g]);
        // (x+1)^3 over GF(3) has the single factor x+1
        let h = Poly::new(&f, vec![1, 0, 0, 1]);
        assert_eq!(h.irreducible_factors(&mut rng), vec![Poly::new(&f, vec![1, 1])]);
    }
}
