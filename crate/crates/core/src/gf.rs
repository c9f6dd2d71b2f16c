//! Exact arithmetic in GF(p^m).
//!
//! A [`Gf`] value is the field itself and carries out all arithmetic; elements
//! are plain [`Fe`] integers in `[0, q)`. The integer is the base-`p`
//! little-endian packing of the coefficients of the representative polynomial,
//! so in GF(4) with modulus x^2+x+1 the element `x` encodes as 2 and `x+1` as
//! 3. Prime fields reduce to the usual residues.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element in canonical integer form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub u64);

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Precomputed multiplication and inverse tables for small extension fields.
struct Tables {
    mul: Vec<u64>,
    inv: Vec<u64>,
}

/// A finite field GF(p^m).
///
/// Cheap to clone: lookup tables for small extension fields are shared.
#[derive(Clone)]
pub struct Gf {
    p: u64,
    m: u32,
    modulus: Option<Vec<u64>>,
    q: u64,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "GF({})", self.p),
            Some(md) => write!(f, "GF({}^{}; modulus {:?})", self.p, self.m, md),
        }
    }
}

/// Small extension fields get a full multiplication table.
const TABLE_LIMIT: u64 = 256;

impl Gf {
    /// Build GF(p^m). For m > 1 with no modulus given, the lexicographically
    /// smallest monic irreducible of degree m over GF(p) is selected, so two
    /// sides of a file exchange agree on the field without spelling it out.
    pub fn new(p: u64, m: u32, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::BadExtensionDegree);
        }
        let q = p
            .checked_pow(m)
            .filter(|q| *q < u64::MAX)
            .ok_or(Error::FieldTooLarge)?;
        let modulus = if m == 1 {
            if modulus.is_some() {
                return Err(Error::BadModulus(
                    "prime field takes no modulus".to_string(),
                ));
            }
            None
        } else {
            let md = match modulus {
                Some(md) => {
                    validate_modulus(p, m, &md)?;
                    md
                }
                None => default_modulus(p, m),
            };
            Some(md)
        };
        let mut field = Gf {
            p,
            m,
            modulus,
            q,
            tables: None,
        };
        if m > 1 && q <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// Validate an integer as an element of this field.
    pub fn elem(&self, value: u64) -> Result<Fe> {
        if value < self.q {
            Ok(Fe(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    /// Decode the canonical integer into base-p coefficients (length m).
    pub fn decode(&self, a: Fe) -> Vec<u64> {
        let mut v = a.0;
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// Encode base-p coefficients (little-endian, length <= m) back into an element.
    pub fn encode(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() > self.m as usize {
            return Err(Error::BadModulus(format!(
                "coefficient vector of length {} exceeds degree {}",
                coeffs.len(),
                self.m
            )));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::ElementOutOfRange { value: c, q: self.p });
            }
            v = v * self.p + c;
        }
        Ok(Fe(v))
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.m == 1 {
            let s = a.0 as u128 + b.0 as u128;
            Fe((s % self.p as u128) as u64)
        } else {
            // coefficient-wise addition never needs the modulus
            let (mut va, mut vb) = (a.0, b.0);
            let mut out = 0u64;
            let mut shift = 1u64;
            for _ in 0..self.m {
                let c = (va % self.p + vb % self.p) % self.p;
                out += c * shift;
                shift *= self.p;
                va /= self.p;
                vb /= self.p;
            }
            Fe(out)
        }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        debug_assert!(a.0 < self.q);
        if self.m == 1 {
            Fe(if a.0 == 0 { 0 } else { self.p - a.0 })
        } else {
            let mut va = a.0;
            let mut out = 0u64;
            let mut shift = 1u64;
            for _ in 0..self.m {
                let c = va % self.p;
                out += if c == 0 { 0 } else { self.p - c } * shift;
                shift *= self.p;
                va /= self.p;
            }
            Fe(out)
        }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.m == 1 {
            return Fe(mulmod(a.0, b.0, self.p));
        }
        if let Some(t) = &self.tables {
            return Fe(t.mul[(a.0 * self.q + b.0) as usize]);
        }
        let pa = self.decode(a);
        let pb = self.decode(b);
        let md = self.modulus.as_ref().expect("extension field has modulus");
        let prod = poly_mul_mod(self.p, &pa, &pb, md);
        self.encode(&prod).expect("reduced product is in range")
    }

    /// Multiplicative inverse; the one partial operation of the field.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        debug_assert!(a.0 < self.q);
        if self.m == 1 {
            return Ok(Fe(invmod(a.0, self.p)));
        }
        if let Some(t) = &self.tables {
            return Ok(Fe(t.inv[a.0 as usize]));
        }
        let md = self.modulus.as_ref().expect("extension field has modulus");
        let inv = poly_inv_mod(self.p, &self.decode(a), md);
        self.encode(&inv)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let md = self.modulus.as_ref().expect("tables only for extensions");
        let mut mul = vec![0u64; q * q];
        let mut inv = vec![0u64; q];
        for a in 0..q as u64 {
            let pa = self.decode(Fe(a));
            for b in a..q as u64 {
                let pb = self.decode(Fe(b));
                let prod = poly_mul_mod(self.p, &pa, &pb, md);
                let v = self
                    .encode(&prod)
                    .expect("reduced product is in range")
                    .0;
                mul[(a * self.q + b) as usize] = v;
                mul[(b * self.q + a) as usize] = v;
                if v == 1 {
                    inv[a as usize] = b;
                    inv[b as usize] = a;
                }
            }
        }
        Tables { mul, inv }
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct RawField {
    p: u64,
    #[serde(default = "default_degree")]
    m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<Vec<u64>>,
}

fn default_degree() -> u32 {
    1
}

impl TryFrom<RawField> for Gf {
    type Error = Error;

    fn try_from(raw: RawField) -> Result<Self> {
        Gf::new(raw.p, raw.m, raw.modulus)
    }
}

impl From<Gf> for RawField {
    fn from(f: Gf) -> Self {
        RawField {
            p: f.p,
            m: f.m,
            modulus: f.modulus,
        }
    }
}

impl Serialize for Gf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawField::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawField::deserialize(d)?;
        Gf::try_from(raw).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// modular arithmetic on u64
// ---------------------------------------------------------------------------

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit values
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    t0.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The smallest prime strictly greater than `n`.
pub fn smallest_prime_above(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

// ---------------------------------------------------------------------------
// dense polynomials over GF(p), little-endian coefficient vectors
// ---------------------------------------------------------------------------

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `md`.
fn poly_rem(p: u64, a: &[u64], md: &[u64]) -> Vec<u64> {
    let deg_m = md.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        for (i, &c) in md.iter().enumerate() {
            let sub = mulmod(lead, c, p);
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        debug_assert_eq!(*r.last().unwrap(), 0);
        poly_trim(&mut r);
    }
    r
}

fn poly_mul_mod(p: u64, a: &[u64], b: &[u64], md: &[u64]) -> Vec<u64> {
    poly_rem(p, &poly_mul(p, a, b), md)
}

fn poly_pow_mod(p: u64, a: &[u64], mut e: u64, md: &[u64]) -> Vec<u64> {
    let mut base = poly_rem(p, a, md);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(p, &acc, &base, md);
        }
        base = poly_mul_mod(p, &base, &base, md);
        e >>= 1;
    }
    acc
}

fn poly_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r0: Vec<u64> = a.to_vec();
    let mut r1: Vec<u64> = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    while !r1.is_empty() {
        let lead_inv = invmod(*r1.last().unwrap(), p);
        let monic: Vec<u64> = r1.iter().map(|&c| mulmod(c, lead_inv, p)).collect();
        let rem = poly_rem(p, &r0, &monic);
        r0 = r1;
        r1 = rem;
    }
    if let Some(&lead) = r0.last() {
        let li = invmod(lead, p);
        for c in r0.iter_mut() {
            *c = mulmod(*c, li, p);
        }
    }
    r0
}

/// Inverse of `a` modulo the monic irreducible `md`, by extended Euclid.
fn poly_inv_mod(p: u64, a: &[u64], md: &[u64]) -> Vec<u64> {
    // invariants: r0 = t0*a (mod md), r1 = t1*a (mod md)
    let mut r0: Vec<u64> = md.to_vec();
    let mut r1 = poly_rem(p, a, md);
    let mut t0: Vec<u64> = Vec::new();
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() && r1.len() > 1 {
        let (q, rem) = poly_divmod(p, &r0, &r1);
        let qt1 = poly_mul(p, &q, &t1);
        let new_t = poly_sub(p, &t0, &qt1);
        r0 = std::mem::replace(&mut r1, rem);
        t0 = std::mem::replace(&mut t1, new_t);
    }
    assert!(!r1.is_empty(), "element not invertible modulo irreducible");
    let scale = invmod(r1[0], p);
    let mut out = poly_rem(p, &t1, md);
    for c in out.iter_mut() {
        *c = mulmod(*c, scale, p);
    }
    out
}

fn poly_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for i in 0..len {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut rem: Vec<u64> = a.to_vec();
    poly_trim(&mut rem);
    let deg_b = b.len() - 1;
    if rem.len() <= deg_b {
        return (Vec::new(), rem);
    }
    let lead_inv = invmod(*b.last().unwrap(), p);
    let mut quot = vec![0u64; rem.len() - deg_b];
    while rem.len() > deg_b {
        let coeff = mulmod(*rem.last().unwrap(), lead_inv, p);
        let shift = rem.len() - 1 - deg_b;
        quot[shift] = coeff;
        for (i, &c) in b.iter().enumerate() {
            let sub = mulmod(coeff, c, p);
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        poly_trim(&mut rem);
    }
    poly_trim(&mut quot);
    (quot, rem)
}

/// Rabin irreducibility test for a monic polynomial of degree m over GF(p).
fn poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    // x^(p^m) == x mod f, and gcd(x^(p^(m/t)) - x, f) = 1 for prime t | m
    let x = vec![0u64, 1];
    let frob = |times: u32| -> Vec<u64> {
        let mut cur = poly_rem(p, &x, f);
        for _ in 0..times {
            cur = poly_pow_mod(p, &cur, p, f);
        }
        cur
    };
    let full = frob(m);
    if poly_sub(p, &full, &x) != Vec::<u64>::new() {
        return false;
    }
    let mut rem = m;
    let mut t = 2;
    let mut prime_divisors = Vec::new();
    while t * t <= rem {
        if rem % t == 0 {
            prime_divisors.push(t);
            while rem % t == 0 {
                rem /= t;
            }
        }
        t += 1;
    }
    if rem > 1 {
        prime_divisors.push(rem);
    }
    for t in prime_divisors {
        let part = frob(m / t);
        let diff = poly_sub(p, &part, &x);
        let g = poly_gcd(p, &diff, f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn validate_modulus(p: u64, m: u32, md: &[u64]) -> Result<()> {
    if md.len() != m as usize + 1 {
        return Err(Error::BadModulus(format!(
            "expected {} coefficients for degree {}, got {}",
            m + 1,
            m,
            md.len()
        )));
    }
    if md.iter().any(|&c| c >= p) {
        return Err(Error::BadModulus(format!(
            "coefficients must lie in [0, {p})"
        )));
    }
    if *md.last().unwrap() != 1 {
        return Err(Error::BadModulus("modulus must be monic".to_string()));
    }
    if !poly_is_irreducible(p, md) {
        return Err(Error::ReducibleModulus);
    }
    Ok(())
}

/// Lexicographically smallest (on the little-endian coefficient list) monic
/// irreducible of degree m over GF(p).
fn default_modulus(p: u64, m: u32) -> Vec<u64> {
    let count = p.pow(m);
    for idx in 0..count {
        // idx spells the non-leading coefficients with c_0 most significant,
        // which is exactly lexicographic order on [c_0, ..., c_{m-1}]
        let mut f = vec![0u64; m as usize + 1];
        f[m as usize] = 1;
        let mut v = idx;
        for i in (0..m as usize).rev() {
            f[i] = v % p;
            v /= p;
        }
        if poly_is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields_up_to_64() -> Vec<Gf> {
        let mut out = Vec::new();
        for q in 2u64..=64 {
            let mut p = q;
            let mut m = 0u32;
            // prime-power detection by smallest divisor
            let mut d = 2;
            while d * d <= q {
                if q % d == 0 {
                    p = d;
                    break;
                }
                d += 1;
            }
            let mut t = q;
            while t % p == 0 {
                t /= p;
                m += 1;
            }
            if t == 1 {
                out.push(Gf::new(p, m, None).unwrap());
            }
        }
        out
    }

    #[test]
    fn construction_examples() {
        let f7 = Gf::new(7, 1, None).unwrap();
        assert_eq!(f7.q(), 7);
        assert!(f7.modulus().is_none());

        let f4 = Gf::new(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(f4.q(), 4);

        assert_eq!(Gf::new(4, 1, None), Err(Error::NotPrime(4)));
        assert_eq!(Gf::new(7, 0, None), Err(Error::BadExtensionDegree));
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert_eq!(
            Gf::new(2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus)
        );
        assert!(matches!(
            Gf::new(2, 2, Some(vec![1, 1])),
            Err(Error::BadModulus(_))
        ));
        assert!(matches!(
            Gf::new(2, 2, Some(vec![1, 1, 2])),
            Err(Error::BadModulus(_))
        ));
    }

    #[test]
    fn default_modulus_is_deterministic() {
        let f4 = Gf::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), Some(&[1u64, 1, 1][..]));
        let f8 = Gf::new(2, 3, None).unwrap();
        // lex order on the little-endian list: [1,0,1,1] (x^3+x^2+1) wins
        assert_eq!(f8.modulus(), Some(&[1u64, 0, 1, 1][..]));
        let f9 = Gf::new(3, 2, None).unwrap();
        assert!(poly_is_irreducible(3, f9.modulus().unwrap()));
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = Gf::prime(7).unwrap();
        assert_eq!(f7.add(Fe(3), Fe(5)), Fe(1));
        assert_eq!(f7.inv(Fe(3)).unwrap(), Fe(5));
        assert_eq!(f7.inv(Fe(0)), Err(Error::ZeroInverse));

        let f4 = Gf::new(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(f4.mul(Fe(2), Fe(2)), Fe(3)); // x * x = x + 1
    }

    #[test]
    fn inverse_matches_exhaustive_search() {
        for field in [
            Gf::prime(7).unwrap(),
            Gf::new(2, 2, None).unwrap(),
            Gf::new(3, 2, None).unwrap(),
            Gf::new(2, 4, None).unwrap(),
        ] {
            for a in field.elements().skip(1) {
                let found = field
                    .elements()
                    .find(|&x| field.mul(a, x) == field.one())
                    .expect("inverse exists");
                assert_eq!(field.inv(a).unwrap(), found);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustively() {
        use rand::prelude::*;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for field in fields_up_to_64() {
            let q = field.q();
            for a in field.elements() {
                for b in field.elements() {
                    assert_eq!(field.add(a, b), field.add(b, a));
                    assert_eq!(field.mul(a, b), field.mul(b, a));
                    assert_eq!(field.sub(a, b), field.add(a, field.neg(b)));
                }
            }
            let triples: Vec<(Fe, Fe, Fe)> = if q <= 16 {
                field
                    .elements()
                    .flat_map(|a| {
                        let f = field.clone();
                        f.clone().elements().flat_map(move |b| {
                            let f2 = f.clone();
                            f2.elements().map(move |c| (a, b, c))
                        })
                    })
                    .collect()
            } else {
                (0..2000)
                    .map(|_| {
                        (
                            Fe(rng.gen_range(0..q)),
                            Fe(rng.gen_range(0..q)),
                            Fe(rng.gen_range(0..q)),
                        )
                    })
                    .collect()
            };
            for (a, b, c) in triples {
                assert_eq!(
                    field.add(field.add(a, b), c),
                    field.add(a, field.add(b, c))
                );
                assert_eq!(
                    field.mul(field.mul(a, b), c),
                    field.mul(a, field.mul(b, c))
                );
                assert_eq!(
                    field.mul(a, field.add(b, c)),
                    field.add(field.mul(a, b), field.mul(a, c))
                );
            }
        }
    }

    #[test]
    fn multiplicative_order_divides_q_minus_one() {
        for field in [
            Gf::prime(1021).unwrap(),
            Gf::new(2, 9, None).unwrap(),
            Gf::new(3, 6, None).unwrap(),
            Gf::new(5, 4, None).unwrap(),
            Gf::new(2, 2, None).unwrap(),
        ] {
            let q = field.q();
            assert!(q <= 1024);
            for a in field.elements().skip(1) {
                assert_eq!(field.pow(a, q - 1), field.one(), "a = {a:?} in {field:?}");
            }
        }
    }

    #[test]
    fn encode_decode_roundtrip() {
        for field in fields_up_to_64() {
            for a in field.elements() {
                let coeffs = field.decode(a);
                assert_eq!(field.encode(&coeffs).unwrap(), a);
            }
        }
    }

    #[test]
    fn element_range_check() {
        let f7 = Gf::prime(7).unwrap();
        assert!(f7.elem(6).is_ok());
        assert_eq!(
            f7.elem(7),
            Err(Error::ElementOutOfRange { value: 7, q: 7 })
        );
    }

    #[test]
    fn big_prime_path() {
        let p = smallest_prime_above(1 << 20);
        assert!(is_prime(p));
        let f = Gf::prime(p).unwrap();
        let a = Fe(123_456);
        let inv = f.inv(a).unwrap();
        assert_eq!(f.mul(a, inv), f.one());
        assert_eq!(f.pow(Fe(3), p - 1), f.one());

        let big = Gf::prime(smallest_prime_above(1 << 31)).unwrap();
        let x = Fe(1 << 30);
        assert_eq!(big.mul(x, big.inv(x).unwrap()), big.one());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(1021));
        assert!(!is_prime(1));
        assert!(!is_prime(1024));
        assert!(is_prime(smallest_prime_above(1 << 20)));
        // 2^61 - 1 is a Mersenne prime
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime((1 << 61) - 3));
    }

    #[test]
    fn serde_roundtrip() {
        let f4 = Gf::new(2, 2, None).unwrap();
        let js = serde_json::to_string(&f4).unwrap();
        assert_eq!(js, r#"{"p":2,"m":2,"modulus":[1,1,1]}"#);
        let back: Gf = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f4);

        let f7: Gf = serde_json::from_str(r#"{"p":7,"m":1}"#).unwrap();
        assert_eq!(f7, Gf::prime(7).unwrap());
        assert_eq!(serde_json::to_string(&f7).unwrap(), r#"{"p":7,"m":1}"#);

        assert!(serde_json::from_str::<Gf>(r#"{"p":4,"m":1}"#).is_err());
    }
}
