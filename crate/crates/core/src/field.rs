//! Exact arithmetic in the biquadratic field Q(√2, √5).
//!
//! Every coordinate that shows up in the W(A4) constructions (½, the golden
//! pair τ and σ, 1/√2, 1/√10) lives in this field. Elements are kept over the
//! basis {1, √2, √5, √10} with a single positive common denominator, reduced
//! so that the representation is unique and equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for building small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    fn of_bigint(n: &BigInt) -> Sign {
        if n.is_zero() {
            Sign::Zero
        } else if n.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// The radicands of the basis elements, in basis order.
pub const RADICANDS: [u32; 4] = [1, 2, 5, 10];

/// `(num[0] + num[1]√2 + num[2]√5 + num[3]√10) / den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    num: [BigInt; 4],
    den: BigInt,
}

impl FieldScalar {
    fn from_parts(num: [BigInt; 4], den: BigInt) -> Self {
        let mut s = FieldScalar { num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for n in &mut self.num {
                *n = -&*n;
            }
        }
        let mut g = self.den.clone();
        for n in &self.num {
            g = g.gcd(n);
            if g.is_one() {
                return;
            }
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for n in &mut self.num {
                *n = &*n / &g;
            }
        }
    }

    /// Builds `c0 + c1√2 + c2√5 + c3√10`.
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        let cs = [c0, c1, c2, c3];
        let den = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = cs.map(|c| c.numer() * (&den / c.denom()));
        FieldScalar::from_parts(num, den)
    }

    pub fn zero() -> Self {
        FieldScalar { num: [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        FieldScalar { num: [BigInt::from(n), BigInt::zero(), BigInt::zero(), BigInt::zero()], den: BigInt::one() }
    }

    pub fn from_rational(r: &Rational) -> Self {
        FieldScalar::from_parts([r.numer().clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()], r.denom().clone())
    }

    /// `r · √radicand` for a radicand in {1, 2, 5, 10}.
    pub fn surd(r: &Rational, radicand: u32) -> Self {
        let idx = RADICANDS.iter().position(|&d| d == radicand).expect("radicand must be one of 1, 2, 5, 10");
        let mut num = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        num[idx] = r.numer().clone();
        FieldScalar::from_parts(num, r.denom().clone())
    }

    pub fn sqrt2() -> Self {
        Self::surd(&rat(1, 1), 2)
    }

    pub fn sqrt5() -> Self {
        Self::surd(&rat(1, 1), 5)
    }

    pub fn sqrt10() -> Self {
        Self::surd(&rat(1, 1), 10)
    }

    /// The golden ratio τ = (1+√5)/2.
    pub fn tau() -> Self {
        Self::new(rat(1, 2), rat(0, 1), rat(1, 2), rat(0, 1))
    }

    /// σ = (1−√5)/2, the Galois conjugate of τ.
    pub fn sigma() -> Self {
        Self::new(rat(1, 2), rat(0, 1), rat(-1, 2), rat(0, 1))
    }

    /// Coefficient on the i-th basis element (1, √2, √5, √10).
    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> [Rational; 4] {
        [self.coeff(0), self.coeff(1), self.coeff(2), self.coeff(3)]
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(0))
    }

    /// Exact sign.
    ///
    /// Zero is detected structurally. Otherwise the value is enclosed using
    /// integer square roots of 2, 5 and 10 at `k` fractional bits, doubling
    /// `k` until the enclosure excludes zero.
    pub fn sign(&self) -> Sign {
        if self.is_rational() {
            return Sign::of_bigint(&self.num[0]);
        }
        let mut bits: usize = 64;
        loop {
            let (lo, hi) = self.scaled_enclosure(bits);
            if lo.is_positive() {
                return Sign::Positive;
            }
            if hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }

    /// Integer bounds `lo <= value · den · 2^bits <= hi`.
    fn scaled_enclosure(&self, bits: usize) -> (BigInt, BigInt) {
        let base = &self.num[0] << bits;
        let mut lo = base.clone();
        let mut hi = base;
        for (i, &radicand) in RADICANDS.iter().enumerate().skip(1) {
            let c = &self.num[i];
            if c.is_zero() {
                continue;
            }
            let floor = (BigInt::from(radicand) << (2 * bits)).sqrt();
            let ceil = &floor + 1;
            if c.is_positive() {
                lo += c * &floor;
                hi += c * &ceil;
            } else {
                lo += c * &ceil;
                hi += c * &floor;
            }
        }
        (lo, hi)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// The automorphism √5 ↦ −√5 (fixes √2, swaps τ and σ).
    pub fn galois_conjugate(&self) -> Self {
        self.flip_signs(false, true)
    }

    /// Applies √2 ↦ ±√2 and √5 ↦ ±√5.
    fn flip_signs(&self, flip2: bool, flip5: bool) -> Self {
        let mut num = self.num.clone();
        if flip2 {
            num[1] = -&num[1];
        }
        if flip5 {
            num[2] = -&num[2];
        }
        if flip2 != flip5 {
            num[3] = -&num[3];
        }
        FieldScalar { num, den: self.den.clone() }
    }

    /// Field norm down to Q: the product of all four conjugates.
    pub fn norm(&self) -> Rational {
        (self * &self.cofactor()).to_rational().expect("product of all conjugates is rational")
    }

    fn cofactor(&self) -> Self {
        &(&self.flip_signs(true, false) * &self.flip_signs(false, true)) * &self.flip_signs(true, true)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cof = self.cofactor();
        let n = self.norm();
        Ok(cof.scale(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldScalar::from_parts(self.num.clone().map(|n| n * r.numer()), &self.den * r.denom())
    }

    /// Square root of a non-negative rational when it lands in the field,
    /// i.e. when `r = m² · d` with rational `m` and `d` in {1, 2, 5, 10}.
    pub fn sqrt_rational(r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::zero());
        }
        for &d in &RADICANDS {
            let q = r / Rational::from_integer(BigInt::from(d));
            let (n, m) = (q.numer(), q.denom());
            let (sn, sm) = (n.sqrt(), m.sqrt());
            if &(&sn * &sn) == n && &(&sm * &sm) == m {
                return Some(Self::surd(&Rational::new(sn, sm), d));
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        RADICANDS
            .iter()
            .enumerate()
            .map(|(i, &d)| self.coeff(i).to_f64().unwrap_or(f64::NAN) * f64::from(d).sqrt())
            .sum()
    }

    /// Decimal rendering with `digits` significant digits. Display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_significant(self.to_f64(), digits)
    }

    /// Total order on the representation (not the numeric order); used to
    /// keep exact point sets in a reproducible order.
    pub fn structural_cmp(&self, other: &Self) -> Ordering {
        // Compare num_i / den lexicographically.
        for i in 0..4 {
            let l = &self.num[i] * &other.den;
            let r = &other.num[i] * &self.den;
            match l.cmp(&r) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// Renders `x` with `digits` significant digits, dropping trailing zeros.
pub fn format_significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let rounded: f64 = format!("{:.*e}", digits - 1, x).parse().unwrap_or(x);
    if rounded == 0.0 {
        return "0".to_string();
    }
    format!("{rounded}")
}

impl Default for FieldScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for FieldScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl From<&Rational> for FieldScalar {
    fn from(r: &Rational) -> Self {
        Self::from_rational(r)
    }
}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order, decided exactly.
impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        if self.den == rhs.den {
            let num = [0, 1, 2, 3].map(|i| &self.num[i] + &rhs.num[i]);
            return FieldScalar::from_parts(num, self.den.clone());
        }
        let num = [0, 1, 2, 3].map(|i| &self.num[i] * &rhs.den + &rhs.num[i] * &self.den);
        FieldScalar::from_parts(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        let [a0, a1, a2, a3] = &self.num;
        let [b0, b1, b2, b3] = &rhs.num;
        // √2·√5 = √10, √2·√10 = 2√5, √5·√10 = 5√2
        let r0 = a0 * b0 + 2 * (a1 * b1) + 5 * (a2 * b2) + 10 * (a3 * b3);
        let r1 = a0 * b1 + a1 * b0 + 5 * (a2 * b3 + a3 * b2);
        let r2 = a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1);
        let r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        FieldScalar::from_parts([r0, r1, r2, r3], &self.den * &rhs.den)
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar { num: self.num.clone().map(|n| -n), den: self.den.clone() }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $f(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $f(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $f(self, rhs: FieldScalar) -> FieldScalar {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldScalar> for FieldScalar {
    fn mul_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self * rhs;
    }
}

impl Sum for FieldScalar {
    fn sum<I: Iterator<Item = FieldScalar>>(iter: I) -> Self {
        iter.fold(FieldScalar::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a FieldScalar> for FieldScalar {
    fn sum<I: Iterator<Item = &'a FieldScalar>>(iter: I) -> Self {
        iter.fold(FieldScalar::zero(), |acc, x| &acc + x)
    }
}

/// Canonical text form `c0 + c1*r2 + c2*r5 + c3*r10`, all four terms present.
impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2, c3] = self.coeffs();
        write!(f, "{c0} + {c1}*r2 + {c2}*r5 + {c3}*r10")
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldScalar({self} ≈ {})", self.to_decimal(8))
    }
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// Accepts the canonical form, or any `+`-separated subset of its terms.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseScalar(s.to_string());
        let mut coeffs = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(bad());
        }
        for term in trimmed.split(" + ") {
            let term = term.trim();
            let (c, idx) = match term.rsplit_once('*') {
                Some((c, "r2")) => (c, 1),
                Some((c, "r5")) => (c, 2),
                Some((c, "r10")) => (c, 3),
                Some(_) => return Err(bad()),
                None => (term, 0),
            };
            let value: Rational = c.trim().parse().map_err(|_| bad())?;
            coeffs[idx] += value;
        }
        let [c0, c1, c2, c3] = coeffs;
        Ok(FieldScalar::new(c0, c1, c2, c3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fs(c: [(i64, i64); 4]) -> FieldScalar {
        FieldScalar::new(rat(c[0].0, c[0].1), rat(c[1].0, c[1].1), rat(c[2].0, c[2].1), rat(c[3].0, c[3].1))
    }

    /// Independent sign oracle: recursive squaring through Q(√2) ⊂ Q(√2,√5).
    fn sign_q2(x: &Rational, y: &Rational) -> i8 {
        // sign(x + y√2)
        let sx = x.signum().to_i8().unwrap();
        let sy = y.signum().to_i8().unwrap();
        if sy == 0 {
            return sx;
        }
        if sx == 0 || sx == sy {
            return sy;
        }
        let d = x * x - rat(2, 1) * y * y;
        sx * d.signum().to_i8().unwrap()
    }

    fn oracle_sign(a: &FieldScalar) -> i8 {
        // a = A + B√5 with A = c0 + c1√2, B = c2 + c3√2
        let [c0, c1, c2, c3] = a.coeffs();
        let sa = sign_q2(&c0, &c1);
        let sb = sign_q2(&c2, &c3);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // A² − 5B² in Q(√2)
        let a2 = (&c0 * &c0 + rat(2, 1) * &c1 * &c1, rat(2, 1) * &c0 * &c1);
        let b2 = (&c2 * &c2 + rat(2, 1) * &c3 * &c3, rat(2, 1) * &c2 * &c3);
        let dx = a2.0 - rat(5, 1) * b2.0;
        let dy = a2.1 - rat(5, 1) * b2.1;
        sa * sign_q2(&dx, &dy)
    }

    #[test]
    fn golden_pair_relations() {
        let (t, s) = (FieldScalar::tau(), FieldScalar::sigma());
        assert_eq!(&t + &s, FieldScalar::one());
        assert_eq!(&t * &s, FieldScalar::from_int(-1));
        assert_eq!(&t * &t, &t + &FieldScalar::one());
    }

    #[test]
    fn basis_products() {
        let inv2 = FieldScalar::sqrt2().inverse().unwrap();
        let inv5 = FieldScalar::sqrt5().inverse().unwrap();
        assert_eq!(&inv2 * &inv5, fs([(0, 1), (0, 1), (0, 1), (1, 10)]));
        assert_eq!(FieldScalar::sqrt2() * FieldScalar::sqrt10(), FieldScalar::sqrt5().scale(&rat(2, 1)));
        assert_eq!(FieldScalar::sqrt5() * FieldScalar::sqrt10(), FieldScalar::sqrt2().scale(&rat(5, 1)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(FieldScalar::one().checked_div(&FieldScalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(FieldScalar::zero().sign(), Sign::Zero);
        assert_eq!(FieldScalar::tau().sign(), Sign::Positive);
        assert_eq!(FieldScalar::sigma().sign(), Sign::Negative);
        let x = FieldScalar::sqrt10() - FieldScalar::from_int(3);
        assert_eq!(x.sign(), Sign::Positive);
        // Near-cancellation: 99/70 is a convergent of √2.
        let y = FieldScalar::sqrt2() - FieldScalar::from_rational(&rat(99, 70));
        assert_eq!(y.sign(), Sign::Negative);
        let z = FieldScalar::sqrt2() - FieldScalar::from_rational(&rat(665857, 470832));
        assert_eq!(z.sign(), Sign::Negative);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(FieldScalar::tau().galois_conjugate(), FieldScalar::sigma());
        assert_eq!(FieldScalar::one().galois_conjugate(), FieldScalar::one());
        assert_eq!(FieldScalar::sqrt2().galois_conjugate(), FieldScalar::sqrt2());
        assert_eq!(FieldScalar::sqrt10().galois_conjugate(), -FieldScalar::sqrt10());
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(FieldScalar::sqrt_rational(&rat(4, 5)), Some(FieldScalar::sqrt5().scale(&rat(2, 5))));
        assert_eq!(FieldScalar::sqrt_rational(&rat(9, 4)), Some(FieldScalar::from_rational(&rat(3, 2))));
        assert_eq!(FieldScalar::sqrt_rational(&rat(6, 5)), None);
        assert_eq!(FieldScalar::sqrt_rational(&rat(-1, 1)), None);
    }

    #[test]
    fn canonical_text() {
        let t = FieldScalar::tau();
        assert_eq!(t.to_string(), "1/2 + 0*r2 + 1/2*r5 + 0*r10");
        assert_eq!("1/2 + 0*r2 + 1/2*r5 + 0*r10".parse::<FieldScalar>().unwrap(), t);
        assert_eq!("-3/10*r10".parse::<FieldScalar>().unwrap(), FieldScalar::surd(&rat(-3, 10), 10));
        assert!("1 + 2*r3".parse::<FieldScalar>().is_err());
        assert_eq!(t.to_decimal(6), "1.61803");
    }

    fn arb_scalar() -> impl Strategy<Value = FieldScalar> {
        prop::array::uniform4((-40i64..40, 1i64..12)).prop_map(fs)
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), FieldScalar::one());
            }
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn galois_is_an_automorphism(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!((&a * &b).galois_conjugate(), &a.galois_conjugate() * &b.galois_conjugate());
            prop_assert_eq!((&a + &b).galois_conjugate(), &a.galois_conjugate() + &b.galois_conjugate());
            prop_assert_eq!(a.galois_conjugate().galois_conjugate(), a);
        }

        #[test]
        fn sign_matches_oracle(a in arb_scalar(), b in arb_scalar()) {
            // products make near-cancelling values more likely
            let x = &(&a * &b) - &b;
            prop_assert_eq!(x.sign().to_i8(), oracle_sign(&x));
            prop_assert_eq!(a.sign().to_i8(), oracle_sign(&a));
        }

        #[test]
        fn text_round_trip(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<FieldScalar>().unwrap(), a);
        }
    }

    #[test]
    fn sign_oracle_ten_thousand() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let c = [0; 4].map(|_| (rng.random_range(-200i64..200), rng.random_range(1i64..50)));
            let a = fs(c);
            assert_eq!(a.sign().to_i8(), oracle_sign(&a), "{a}");
            if a.sign() != Sign::Zero {
                assert!(a.to_f64().signum() as i8 == a.sign().to_i8() || a.to_f64().abs() < 1e-9);
            }
        }
    }
}
