//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored as a polynomial in `ζ_N` of degree `< φ(N)`, reduced
//! modulo the `N`-th cyclotomic polynomial `Φ_N`. Coefficients are kept as
//! integer numerators over one positive common denominator, with the overall
//! content removed, so the representation is canonical and equality is
//! structural. `N = 1` (and `N = 2`) give the rationals.
//!
//! Scalars of different moduli are never combined implicitly: the arithmetic
//! methods return [`Error::ModulusMismatch`] and the operator impls panic.
//! Use [`ExactScalar::embed`] to move a value into `Q(ζ_M)` for `N | M`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    assert!(n > 0, "modulus must be positive");
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

thread_local! {
    static CYCLOTOMIC_CACHE: RefCell<HashMap<u32, Rc<Vec<BigInt>>>> = RefCell::new(HashMap::new());
}

/// Coefficients of `Φ_n`, lowest degree first. Monic of degree `φ(n)`.
///
/// Computed as `(x^n - 1) / ∏_{d | n, d < n} Φ_d` and cached per thread.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    cyclotomic_rc(n).as_ref().clone()
}

fn cyclotomic_rc(n: u32) -> Rc<Vec<BigInt>> {
    if let Some(p) = CYCLOTOMIC_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_rc(d);
            num = divide_monic(&num, &phi_d);
        }
    }
    let rc = Rc::new(num);
    CYCLOTOMIC_CACHE.with(|c| c.borrow_mut().insert(n, rc.clone()));
    rc
}

/// Exact quotient of `num` by a monic `den`; the remainder must vanish.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (i, di) in den.iter().enumerate() {
            rem[k - dd + i] -= &c * di;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Reduces an integer polynomial modulo the monic `phi` in place and
/// truncates it to `deg(phi)` coefficients.
fn reduce_mod(poly: &mut Vec<BigInt>, phi: &[BigInt]) {
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for (i, pi) in phi[..deg].iter().enumerate() {
                if !pi.is_zero() {
                    poly[k - deg + i] -= &c * pi;
                }
            }
        }
    }
    poly.resize(deg, BigInt::zero());
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct ExactScalar {
    modulus: u32,
    nums: Vec<BigInt>,
    den: BigInt,
}

impl ExactScalar {
    fn raw(modulus: u32, nums: Vec<BigInt>, den: BigInt) -> Self {
        let mut s = ExactScalar { modulus, nums, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.nums {
                *c = -std::mem::take(c);
            }
        }
        if self.nums.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.nums {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.nums {
                *c /= &g;
            }
        }
    }

    pub fn zero(modulus: u32) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        ExactScalar { modulus, nums: vec![BigInt::zero(); euler_phi(modulus)], den: BigInt::one() }
    }

    pub fn one(modulus: u32) -> Self {
        Self::from_integer(modulus, 1)
    }

    pub fn from_integer(modulus: u32, value: i64) -> Self {
        let mut s = Self::zero(modulus);
        s.nums[0] = BigInt::from(value);
        s
    }

    pub fn from_rational(modulus: u32, value: &BigRational) -> Self {
        let mut s = Self::zero(modulus);
        s.nums[0] = value.numer().clone();
        s.den = value.denom().clone();
        s.normalize();
        s
    }

    /// Builds `Σ coeffs[i] ζ_N^i` for a coefficient list of any length.
    pub fn from_coeffs(modulus: u32, coeffs: &[BigRational]) -> Self {
        let n = modulus as usize;
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        // Fold exponents with ζ^N = 1 before reducing by Φ_N.
        let mut poly = vec![BigInt::zero(); n.max(1)];
        for (i, c) in coeffs.iter().enumerate() {
            poly[i % n] += c.numer() * (&den / c.denom());
        }
        reduce_mod(&mut poly, &cyclotomic_rc(modulus));
        Self::raw(modulus, poly, den)
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_pow(modulus: u32, k: i64) -> Self {
        let e = k.rem_euclid(modulus as i64) as usize;
        let mut poly = vec![BigInt::zero(); (modulus as usize).max(e + 1)];
        poly[e] = BigInt::one();
        reduce_mod(&mut poly, &cyclotomic_rc(modulus));
        Self::raw(modulus, poly, BigInt::one())
    }

    /// The primitive root `ζ_N`.
    pub fn zeta(modulus: u32) -> Self {
        Self::zeta_pow(modulus, 1)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Coordinates in the basis `1, ζ, …, ζ^{φ(N)-1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.nums
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.nums.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.nums[0].is_one() && self.nums[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.nums[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.nums[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    fn add_unchecked(&self, other: &Self, subtract: bool) -> Self {
        let nums: Vec<BigInt> = if self.den == other.den {
            self.nums
                .iter()
                .zip(&other.nums)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect()
        } else {
            self.nums
                .iter()
                .zip(&other.nums)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if subtract {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        Self::raw(self.modulus, nums, den)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let phi = self.nums.len();
        if phi == 1 {
            return Self::raw(
                self.modulus,
                vec![&self.nums[0] * &other.nums[0]],
                &self.den * &other.den,
            );
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus);
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.nums.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.nums.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_mod(&mut prod, &cyclotomic_rc(self.modulus));
        Self::raw(self.modulus, prod, &self.den * &other.den)
    }

    /// Multiplicative inverse; errors on zero.
    ///
    /// Solves `a · x = 1` as a `φ(N) × φ(N)` rational linear system in the
    /// power basis.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = self.nums.len();
        if phi == 1 {
            return Ok(Self::raw(self.modulus, vec![self.den.clone()], self.nums[0].clone()));
        }
        // Column j of the system is a · ζ^j.
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let z = Self::zeta_pow(self.modulus, j as i64);
            cols.push(self.mul_unchecked(&z).coeffs());
        }
        let mut aug: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi)
                .find(|&r| !aug[r][col].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            aug.swap(col, piv);
            let p = aug[col][col].clone();
            for v in aug[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..phi {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=phi {
                        let t = &f * &aug[col][c];
                        aug[r][c] -= t;
                    }
                }
            }
        }
        let sol: Vec<BigRational> = aug.into_iter().map(|row| row[phi].clone()).collect();
        Ok(Self::from_coeffs(self.modulus, &sol))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The same number viewed in `Q(ζ_target)`; requires `N | target`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.modulus) {
            return Err(Error::NotEmbeddable { from: self.modulus, to: target });
        }
        if target == self.modulus {
            return Ok(self.clone());
        }
        let step = (target / self.modulus) as usize;
        let mut poly = vec![BigInt::zero(); target as usize];
        for (i, c) in self.nums.iter().enumerate() {
            poly[(i * step) % target as usize] += c;
        }
        reduce_mod(&mut poly, &cyclotomic_rc(target));
        Ok(Self::raw(target, poly, self.den.clone()))
    }
}

/// Least common multiple of two moduli.
pub fn lcm_modulus(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Embeds every scalar into the lcm of their moduli.
pub fn embed_common(values: &[ExactScalar]) -> Result<(u32, Vec<ExactScalar>)> {
    let m = values.iter().fold(1u32, |acc, v| acc.lcm(&v.modulus));
    let out = values.iter().map(|v| v.embed(m)).collect::<Result<Vec<_>>>()?;
    Ok((m, out))
}

impl PartialEq for ExactScalar {
    /// Values of different moduli are compared inside `Q(ζ_lcm)`.
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self.den == other.den && self.nums == other.nums;
        }
        let m = self.modulus.lcm(&other.modulus);
        match (self.embed(m), other.embed(m)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for ExactScalar {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            modulus: self.modulus,
            nums: self.nums.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

fn fmt_rational(num: &BigInt, den: &BigInt) -> String {
    let r = BigRational::new(num.clone(), den.clone());
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    /// `c0 + c1*z + c2*z^2 + ... (mod N)`, every coordinate listed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.nums.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&fmt_rational(c, &self.den))?;
            match i {
                0 => {}
                1 => f.write_str("*z")?,
                _ => write!(f, "*z^{i}")?,
            }
        }
        write!(f, " (mod {})", self.modulus)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Parses the display format. The `(mod N)` suffix may be omitted for
    /// rationals; terms may be omitted or repeated, and exponents `≥ φ(N)`
    /// are reduced.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, modulus) = match s.rfind("(mod") {
            Some(pos) => {
                let tail = s[pos + 4..].trim();
                let tail = tail
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unterminated modulus in `{s}`")))?;
                let m: u32 = tail
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid modulus in `{s}`")))?;
                if m == 0 {
                    return Err(Error::Parse("modulus must be positive".into()));
                }
                (s[..pos].trim(), m)
            }
            None => (s, 1),
        };
        if body.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut coeffs: Vec<BigRational> = Vec::new();
        for term in body.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (coef, power) = match term.find('z') {
                None => (parse_rational(term)?, 0usize),
                Some(zpos) => {
                    let head = term[..zpos].trim().trim_end_matches('*').trim();
                    let coef = match head {
                        "" => BigRational::one(),
                        "-" => -BigRational::one(),
                        h => parse_rational(h)?,
                    };
                    let rest = term[zpos + 1..].trim();
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.trim().parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("invalid exponent in `{term}`")))?
                    };
                    (coef, power)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRational::zero());
            }
            coeffs[power] += coef;
        }
        Ok(Self::from_coeffs(modulus, &coeffs))
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;
        impl Visitor<'_> for ScalarVisitor {
            type Value = ExactScalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a scalar string like \"1/2 + -1*z (mod 3)\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExactScalar, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExactScalar, E> {
                Ok(ExactScalar::from_integer(1, v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExactScalar, E> {
                let v = i64::try_from(v).map_err(E::custom)?;
                Ok(ExactScalar::from_integer(1, v))
            }
        }
        deserializer.deserialize_any(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> ExactScalar {
        x.parse().unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| cyclotomic_polynomial(n).iter().map(|c| c.try_into().unwrap()).collect::<Vec<i64>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn zeta_identities() {
        let z4 = ExactScalar::zeta(4);
        assert_eq!(&z4 * &z4, ExactScalar::from_integer(4, -1));
        let z6 = ExactScalar::zeta(6);
        assert_eq!(&z6 * &z6, &z6 - &ExactScalar::one(6));
        for n in 1..=24u32 {
            let z = ExactScalar::zeta(n);
            assert_eq!(z.inverse().unwrap(), ExactScalar::zeta_pow(n, n as i64 - 1));
            assert!(z.pow(n as i64).unwrap().is_one());
            // Φ_N evaluated at ζ_N vanishes.
            let phi = cyclotomic_polynomial(n);
            let mut acc = ExactScalar::zero(n);
            for (k, c) in phi.iter().enumerate() {
                let c = ExactScalar::from_rational(n, &BigRational::from_integer(c.clone()));
                acc = &acc + &(&c * &ExactScalar::zeta_pow(n, k as i64));
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ_{n}) != 0");
        }
    }

    #[test]
    fn division_by_zero_and_mixed_moduli() {
        assert!(matches!(ExactScalar::zero(5).inverse(), Err(Error::DivisionByZero)));
        assert!(matches!(
            ExactScalar::one(3).try_div(&ExactScalar::zero(3)),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            ExactScalar::one(3).try_add(&ExactScalar::one(4)),
            Err(Error::ModulusMismatch { left: 3, right: 4 })
        ));
        assert!(matches!(ExactScalar::one(3).embed(4), Err(Error::NotEmbeddable { .. })));
    }

    #[test]
    fn embedding_preserves_values() {
        let z3 = ExactScalar::zeta(3);
        let e = z3.embed(12).unwrap();
        assert_eq!(e, ExactScalar::zeta_pow(12, 4));
        assert_eq!(z3, e);
        assert_eq!(ExactScalar::from_integer(1, -1), ExactScalar::zeta(2));
        let a = s("1/2 + 3*z (mod 5)");
        let b = s("-2 + z^3 (mod 5)");
        assert_eq!((&a * &b).embed(10).unwrap(), &a.embed(10).unwrap() * &b.embed(10).unwrap());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(ExactScalar::zeta(4).to_string(), "0 + 1*z (mod 4)");
        assert_eq!(s("-1").to_string(), "-1 (mod 1)");
        assert_eq!(s("1/2 + -3/4*z (mod 3)").to_string(), "1/2 + -3/4*z (mod 3)");
        assert_eq!(s("z^2 (mod 3)"), s("-1 + -1*z (mod 3)"));
        assert_eq!(s("z^4 (mod 4)"), ExactScalar::one(4));
        assert!("1 + (mod 3)".parse::<ExactScalar>().is_err());
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("3 (mod 0)".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let v = s("2/3 + -1*z^3 (mod 12)");
        let j = serde_json::to_string(&v).unwrap();
        let back: ExactScalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
        let int: ExactScalar = serde_json::from_str("-1").unwrap();
        assert_eq!(int, ExactScalar::from_integer(1, -1));
    }
}
