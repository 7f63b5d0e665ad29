//! Finite fields GF(p^d) with q <= 2^16.
//!
//! Elements are `u16` values in `[0, q)` using the polynomial-basis encoding:
//! the element `c_0 + c_1 x + ... + c_{d-1} x^{d-1}` is stored as
//! `c_0 + c_1 p + ... + c_{d-1} p^{d-1}`. The prime subfield is therefore
//! `0..p` and scalar extension from GF(p) is the identity on encodings.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Elem = u16;

const MAX_Q: u64 = 1 << 16;

/// Defining polynomials (coefficients low to high, monic), Conway-compatible.
const KNOWN_POLYS: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
];

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u32;
    while (i as u64) * (i as u64) <= n as u64 {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomial arithmetic over GF(p), coefficients low to high.
mod fp_poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            for i in 0..=db {
                let t = (r[dr - db + i] + p * p - c * b[i] % p) % p;
                r[dr - db + i] = t;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn powmod_x(e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut result = vec![1u32];
        let mut base = rem(&[0, 1], m, p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        result
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        let mut r = 1u32;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }
}

/// Trial division against every monic polynomial of degree 1..=deg/2.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let d = poly.len() - 1;
    if d <= 1 {
        return d == 1;
    }
    for dd in 1..=d / 2 {
        let count = (p as u64).pow(dd as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(dd + 1);
            let mut t = idx;
            for _ in 0..dd {
                f.push((t % p as u64) as u32);
                t /= p as u64;
            }
            f.push(1);
            if fp_poly::rem(poly, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn x_is_primitive(poly: &[u32], p: u32) -> bool {
    let d = poly.len() - 1;
    let order = (p as u64).pow(d as u32) - 1;
    if fp_poly::powmod_x(order, poly, p) != vec![1] {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|f| fp_poly::powmod_x(order / f, poly, p) != vec![1])
}

fn search_primitive_poly(p: u32, d: u32) -> Vec<u32> {
    let count = (p as u64).pow(d);
    for idx in 0..count {
        let mut f = Vec::with_capacity(d as usize + 1);
        let mut t = idx;
        for _ in 0..d {
            f.push((t % p as u64) as u32);
            t /= p as u64;
        }
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, p) && x_is_primitive(&f, p) {
            return f;
        }
    }
    unreachable!("primitive polynomials exist for every degree")
}

/// A finite field with precomputed arithmetic tables.
pub struct FieldCtx {
    p: u32,
    d: u32,
    q: u32,
    defining_poly: Option<Vec<u32>>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    inv: Vec<Elem>,
    neg: Vec<Elem>,
    add_tab: Vec<Elem>,
    mul_tab: Vec<Elem>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    pub fn new(p: u32, d: u32) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 {
            return Err(Error::OutOfRange("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(d).filter(|&q| q <= MAX_Q);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, d });
        };
        let q = q as u32;
        let poly = if d == 1 {
            None
        } else {
            let known = KNOWN_POLYS
                .iter()
                .find(|(pp, dd, _)| *pp == p && *dd == d)
                .map(|(_, _, c)| c.to_vec());
            let poly = known.unwrap_or_else(|| search_primitive_poly(p, d));
            assert!(is_irreducible(&poly, p), "defining polynomial not irreducible");
            Some(poly)
        };

        let mul_x = |a: u32| -> u32 {
            // multiply the encoded element by the generator (x, or the primitive root)
            match &poly {
                None => unreachable!(),
                Some(f) => {
                    let mut digits = vec![0u32; d as usize + 1];
                    let mut t = a;
                    for i in 0..d as usize {
                        digits[i + 1] = t % p;
                        t /= p;
                    }
                    let top = digits[d as usize];
                    for i in 0..d as usize {
                        digits[i] = (digits[i] + (p - top) * f[i]) % p;
                    }
                    let mut v = 0u32;
                    for i in (0..d as usize).rev() {
                        v = v * p + digits[i];
                    }
                    v
                }
            }
        };

        let generator: u32 = if d == 1 {
            if p == 2 {
                1
            } else {
                let factors = prime_factors((p - 1) as u64);
                (2..p)
                    .find(|&g| {
                        factors
                            .iter()
                            .all(|&f| mod_pow(g as u64, (p as u64 - 1) / f, p as u64) != 1)
                    })
                    .expect("primitive root")
            }
        } else {
            p
        };

        let n = (q - 1) as usize;
        let mut exp = vec![0 as Elem; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..n {
            exp[i] = cur as Elem;
            log[cur as usize] = i as u32;
            cur = if d == 1 {
                cur * generator % p
            } else {
                mul_x(cur)
            };
        }
        if cur != 1 {
            panic!("generator of GF({q}) does not have order q-1");
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        // every nonzero element must be hit exactly once
        let mut seen = vec![false; q as usize];
        for &e in exp.iter().take(n) {
            assert!(!seen[e as usize], "generator of GF({q}) has order < q-1");
            seen[e as usize] = true;
        }

        let add_digits = |a: u32, b: u32| -> u32 {
            if d == 1 {
                return (a + b) % p;
            }
            let (mut a, mut b) = (a, b);
            let mut v = 0u32;
            let mut scale = 1u32;
            for _ in 0..d {
                v += ((a % p + b % p) % p) * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            v
        };
        let neg_digits = |a: u32| -> u32 {
            let mut a = a;
            let mut v = 0u32;
            let mut scale = 1u32;
            for _ in 0..d {
                v += ((p - a % p) % p) * scale;
                a /= p;
                scale *= p;
            }
            v
        };

        let qs = q as usize;
        let mut inv = vec![0 as Elem; qs];
        let mut neg = vec![0 as Elem; qs];
        for a in 0..qs {
            neg[a] = neg_digits(a as u32) as Elem;
            if a != 0 {
                inv[a] = exp[(n - log[a] as usize) % n] as Elem;
            }
        }
        let (add_tab, mul_tab) = if qs <= 256 {
            let mut add = vec![0 as Elem; qs * qs];
            let mut mul = vec![0 as Elem; qs * qs];
            for a in 0..qs {
                for b in 0..qs {
                    add[a * qs + b] = add_digits(a as u32, b as u32) as Elem;
                    if a != 0 && b != 0 {
                        mul[a * qs + b] = exp[log[a] as usize + log[b] as usize];
                    }
                }
            }
            (add, mul)
        } else {
            (Vec::new(), Vec::new())
        };

        Ok(Arc::new(FieldCtx {
            p,
            d,
            q,
            defining_poly: poly,
            generator: generator as Elem,
            exp,
            log,
            inv,
            neg,
            add_tab,
            mul_tab,
        }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn d(&self) -> u32 {
        self.d
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn defining_poly(&self) -> Option<&[u32]> {
        self.defining_poly.as_deref()
    }
    pub fn generator(&self) -> Elem {
        self.generator
    }
    pub fn is_prime_field(&self) -> bool {
        self.d == 1
    }
    pub fn is_gf2(&self) -> bool {
        self.q == 2
    }

    /// Largest encoding that lies in the prime subfield.
    pub fn embed_prime(&self, a: u32) -> Elem {
        (a % self.p) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.d == 1 {
            let s = a as u32 + b as u32;
            return if s >= self.p { (s - self.p) as Elem } else { s as Elem };
        }
        if !self.add_tab.is_empty() {
            return self.add_tab[a as usize * self.q as usize + b as usize];
        }
        let (p, mut a, mut b) = (self.p, a as u32, b as u32);
        let mut v = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.d {
            v += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        v as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.d == 1 {
            return ((a as u32 * b as u32) % self.p) as Elem;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> u64 {
        assert!(a != 0);
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64;
        n / gcd(n, l)
    }

    /// The element `generator^(k)`.
    pub fn gen_pow(&self, k: u64) -> Elem {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    pub fn log(&self, a: Elem) -> u32 {
        self.log[a as usize]
    }

    /// Smallest power of the generator with multiplicative order exactly `k`.
    pub fn root_of_unity(&self, k: u64) -> Option<Elem> {
        let n = (self.q - 1) as u64;
        if !n.is_multiple_of(k) {
            return None;
        }
        Some(self.gen_pow(n / k))
    }

    /// `dst[i] += c * src[i]`.
    #[inline]
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        debug_assert_eq!(dst.len(), src.len());
        if c == 0 {
            return;
        }
        if self.q == 2 {
            for (x, &y) in dst.iter_mut().zip(src) {
                *x ^= y;
            }
        } else if self.d == 1 {
            let p = self.p;
            let c = c as u32;
            for (x, &y) in dst.iter_mut().zip(src) {
                let s = *x as u32 + (c * y as u32) % p;
                *x = if s >= p { (s - p) as Elem } else { s as Elem };
            }
        } else if !self.mul_tab.is_empty() {
            let q = self.q as usize;
            let mrow = &self.mul_tab[c as usize * q..(c as usize + 1) * q];
            for (x, &y) in dst.iter_mut().zip(src) {
                *x = self.add_tab[*x as usize * q + mrow[y as usize] as usize];
            }
        } else {
            for (x, &y) in dst.iter_mut().zip(src) {
                *x = self.add(*x, self.mul(c, y));
            }
        }
    }

    #[inline]
    pub fn scale(&self, row: &mut [Elem], c: Elem) {
        if c == 1 {
            return;
        }
        for x in row.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn name(&self) -> String {
        format!("GF({})", self.q)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Multiplicative order of `p` modulo `k` (k >= 1, gcd(p, k) = 1).
pub fn mult_order_mod(p: u32, k: u32) -> u32 {
    if k == 1 {
        return 1;
    }
    let mut x = p % k;
    let mut d = 1;
    while x != 1 {
        x = x * p % k;
        d += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        assert!(f2.defining_poly().is_none());
        assert_eq!(f2.generator(), 1);
        let f3 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f3.generator(), 2);
        assert_eq!(f3.order(2), 2);
    }

    #[test]
    fn gf4_is_the_unique_irreducible_quadratic() {
        // brute force: the only irreducible monic quadratic over GF(2)
        let irreducible: Vec<[u32; 3]> = (0..4u32)
            .map(|i| [i & 1, (i >> 1) & 1, 1])
            .filter(|f| (0..2u32).all(|x| (f[0] + f[1] * x + x * x) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![[1, 1, 1]]);
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.defining_poly(), Some(&[1, 1, 1][..]));
        assert_eq!(f4.order(f4.generator()), 3);
    }

    #[test]
    fn errors() {
        assert!(matches!(FieldCtx::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(
            FieldCtx::new(2, 17),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    fn exhaustive_axioms(f: &FieldCtx) {
        let q = f.q() as Elem;
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small() {
        for (p, d) in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (2, 4), (5, 1)] {
            exhaustive_axioms(&FieldCtx::new(p, d).unwrap());
        }
    }

    #[test]
    fn field_axioms_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x4C49454D);
        for (p, d) in [(3, 4), (5, 3), (7, 2), (2, 10), (13, 3)] {
            let f = FieldCtx::new(p, d).unwrap();
            for _ in 0..2000 {
                let a = rng.gen_range(0..f.q()) as Elem;
                let b = rng.gen_range(0..f.q()) as Elem;
                let c = rng.gen_range(0..f.q()) as Elem;
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }

    #[test]
    fn known_polys_are_primitive() {
        for (p, d, poly) in KNOWN_POLYS {
            assert!(is_irreducible(poly, *p), "{p}^{d}");
            assert!(x_is_primitive(poly, *p), "{p}^{d}");
        }
    }

    #[test]
    fn roots_of_unity() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let w = f4.root_of_unity(3).unwrap();
        assert_eq!(f4.order(w), 3);
        assert_eq!(mult_order_mod(2, 3), 2);
        assert_eq!(mult_order_mod(3, 4), 2);
        assert_eq!(mult_order_mod(3, 2), 1);
    }
}
