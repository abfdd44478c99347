//! Exact rational and Gaussian-rational arithmetic.
//!
//! Phases of central charges are `arg(Z)/π`, which is irrational for almost
//! every charge. Nothing in this module ever decides an inequality between
//! phases in floating point: a [`Phase`] keeps a whole number of half-turns
//! together with a direction vector, and comparisons reduce to signs of
//! rational cross products.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational with canonical sign and reduced form.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p`, `-p`, `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(rat_int(re), rat_int(im))
    }

    pub fn real(re: Rat) -> Self {
        GaussRat::new(re, Rat::zero())
    }

    pub fn i() -> Self {
        GaussRat::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        GaussRat::new(&self.re * k, &self.im * k)
    }

    /// `|z|²`, which stays rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `re(self)·im(other) − im(self)·re(other)`; positive when `other` lies
    /// counter-clockwise of `self` within a half-turn.
    pub fn cross(&self, other: &GaussRat) -> Rat {
        &self.re * &other.im - &self.im * &other.re
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    /// Principal argument in `(-π, π]`, floating point. Display only.
    pub fn arg_f64(&self) -> f64 {
        let (re, im) = self.to_f64_pair();
        im.atan2(re)
    }

    /// Parses `re,im` with rational entries.
    pub fn parse_pair(s: &str) -> Result<Self> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `re,im`, got {s:?}")))?;
        Ok(GaussRat::new(parse_rat(re)?, parse_rat(im)?))
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'a GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        &self + &rhs
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'a GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        &self - &rhs
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'a GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        &self * &rhs
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

/// Which part of the circle a nonzero value lies on, ordered by principal
/// argument in `(-π, π]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum ArgClass {
    LowerHalf,
    PositiveReal,
    UpperHalf,
    NegativeReal,
}

fn arg_class(w: &GaussRat) -> ArgClass {
    if w.im.is_negative() {
        ArgClass::LowerHalf
    } else if w.im.is_positive() {
        ArgClass::UpperHalf
    } else if w.re.is_positive() {
        ArgClass::PositiveReal
    } else {
        ArgClass::NegativeReal
    }
}

/// Orders two nonzero Gaussian rationals by principal argument in `(-π, π]`.
pub fn arg_compare(w1: &GaussRat, w2: &GaussRat) -> Result<Ordering> {
    if w1.is_zero() || w2.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (c1, c2) = (arg_class(w1), arg_class(w2));
    if c1 != c2 {
        return Ok(c1.cmp(&c2));
    }
    match c1 {
        ArgClass::PositiveReal | ArgClass::NegativeReal => Ok(Ordering::Equal),
        // within an open half-plane the cross product decides
        ArgClass::LowerHalf | ArgClass::UpperHalf => Ok(Rat::zero().cmp(&w1.cross(w2))),
    }
}

/// An exact phase `offset + arg(dir)/π` with `arg(dir) ∈ (0, π]`.
///
/// `offset` counts whole shifts; `dir` is only meaningful up to positive
/// scaling, so equality and ordering go through [`phase_compare`] rather than
/// structural comparison.
#[derive(Clone, Debug)]
pub struct Phase {
    offset: i64,
    dir: GaussRat,
}

impl Phase {
    pub fn new(offset: i64, dir: GaussRat) -> Result<Self> {
        let valid = dir.im.is_positive() || (dir.im.is_zero() && dir.re.is_negative());
        if !valid {
            return Err(Error::InvalidPhase(dir.to_string()));
        }
        Ok(Phase { offset, dir })
    }

    /// The phase of a charge lying in the closed-above half plane
    /// `{im > 0} ∪ R_{<0}`, i.e. in the slice `(0, 1]`.
    pub fn of_charge(z: &GaussRat) -> Result<Self> {
        Phase::new(0, z.clone())
    }

    /// The integer `k` as a phase.
    pub fn integer(k: i64) -> Self {
        Phase {
            offset: k - 1,
            dir: GaussRat::from_ints(-1, 0),
        }
    }

    /// `offset + arg(w)/π` for any nonzero `w`, with `arg(w) ∈ (-π, π]`.
    pub fn from_turn(offset: i64, w: &GaussRat) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroArgument);
        }
        match arg_class(w) {
            ArgClass::UpperHalf | ArgClass::NegativeReal => Phase::new(offset, w.clone()),
            ArgClass::LowerHalf | ArgClass::PositiveReal => Phase::new(offset - 1, -w),
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn dir(&self) -> &GaussRat {
        &self.dir
    }

    /// The phase shifted by `k` (the action of `[k]`).
    pub fn shifted(&self, k: i64) -> Self {
        Phase {
            offset: self.offset + k,
            dir: self.dir.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        phase_float(self)
    }

    /// The exact value when it is rational. Only multiples of 1/4 can be:
    /// a rational slope `tan θ` with `θ/π` rational forces `tan θ ∈ {0, ±1}`.
    pub fn as_rational(&self) -> Option<Rat> {
        let (re, im) = (&self.dir.re, &self.dir.im);
        let quarters = if im.is_zero() {
            4
        } else if re.is_zero() {
            2
        } else if re == im {
            1
        } else if -re == *im {
            3
        } else {
            return None;
        };
        Some(rat_int(self.offset) + rat(quarters, 4))
    }

    /// `num/den` when rational, else `offset+arg(dir)/pi`.
    pub fn exact_string(&self) -> String {
        match self.as_rational() {
            Some(r) => r.to_string(),
            None if self.offset == 0 => format!("arg({})/pi", self.dir),
            None => format!("{}+arg({})/pi", self.offset, self.dir),
        }
    }
}

/// Total order on phases: offsets first, then argument of the direction.
pub fn phase_compare(p1: &Phase, p2: &Phase) -> Ordering {
    p1.offset
        .cmp(&p2.offset)
        .then_with(|| arg_compare(&p1.dir, &p2.dir).expect("phase directions are nonzero"))
}

pub fn phase_float(p: &Phase) -> f64 {
    p.offset as f64 + p.dir.arg_f64() / PI
}

impl PartialEq for Phase {
    fn eq(&self, other: &Self) -> bool {
        phase_compare(self, other) == Ordering::Equal
    }
}

impl Eq for Phase {}

impl PartialOrd for Phase {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Phase {
    fn cmp(&self, other: &Self) -> Ordering {
        phase_compare(self, other)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exact_string())
    }
}
