//! The rank-one weight lattice `L_A`.
//!
//! `L_A` is generated by `x_1, …, x_r` subject to `a_i x_i = a_j x_j`; the
//! common value is the canonical element `c`. Every element has a unique
//! normal form `l·c + Σ l_i x_i` with `0 ≤ l_i < a_i`, which is what [`LVec`]
//! stores. Indices are 0-based in code and 1-based in the text syntax.
//!
//! The points `λ_i` may be recorded on a [`WeightSpec`] but nothing computed
//! here or downstream depends on them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rat};

/// Sign of the orbifold Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightType {
    Domestic,
    Tubular,
    Wild,
}

impl fmt::Display for WeightType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightType::Domestic => "Domestic",
            WeightType::Tubular => "Tubular",
            WeightType::Wild => "Wild",
        })
    }
}

/// A weight sequence `(a_1, …, a_r)`, kept in user order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    weights: Vec<u32>,
    labels: Option<Vec<String>>,
    lcm: BigInt,
    // a / a_i
    cofactors: Vec<BigInt>,
}

impl WeightSpec {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.len() < 3 {
            return Err(Error::InvalidWeights(format!(
                "need at least 3 weights, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights("weights must be positive".into()));
        }
        let lcm = weights
            .iter()
            .fold(BigInt::one(), |acc, &w| acc.lcm(&BigInt::from(w)));
        let cofactors = weights.iter().map(|&w| &lcm / BigInt::from(w)).collect();
        Ok(WeightSpec {
            weights,
            labels: None,
            lcm,
            cofactors,
        })
    }

    /// Attaches point labels. The first three must be `inf`, `0`, `1`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.weights.len() {
            return Err(Error::LengthMismatch {
                expected: self.weights.len(),
                found: labels.len(),
            });
        }
        let normalized = ["inf", "0", "1"];
        for (label, want) in labels.iter().zip(normalized) {
            let ok = label == want || (want == "inf" && label == "∞");
            if !ok {
                return Err(Error::InvalidWeights(format!(
                    "first three points must be inf, 0, 1; got {label:?}"
                )));
            }
        }
        for (k, label) in labels.iter().enumerate() {
            if labels[..k].contains(label) {
                return Err(Error::InvalidWeights(format!("repeated point {label:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Number of weighted points `r`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// `a = lcm(a_1, …, a_r)`.
    pub fn lcm(&self) -> &BigInt {
        &self.lcm
    }

    /// `a / a_i`, the degree of `x_i`.
    pub fn cofactor(&self, i: usize) -> &BigInt {
        &self.cofactors[i]
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    /// `χ_A = 2 + Σ (1/a_i − 1)`.
    pub fn euler_char(&self) -> Rat {
        self.weights.iter().fold(rat_int(2), |acc, &w| {
            acc + Rat::new(BigInt::one(), BigInt::from(w)) - rat_int(1)
        })
    }

    pub fn classify(&self) -> WeightType {
        let chi = self.euler_char();
        if chi.is_positive() {
            WeightType::Domestic
        } else if chi.is_zero() {
            WeightType::Tubular
        } else {
            WeightType::Wild
        }
    }

    pub fn zero(&self) -> LVec {
        LVec {
            l: 0,
            parts: vec![0; self.len()],
        }
    }

    /// The canonical element `c`.
    pub fn canonical(&self) -> LVec {
        LVec {
            l: 1,
            parts: vec![0; self.len()],
        }
    }

    /// The generator `x_i` (0-based `i`).
    pub fn x(&self, i: usize) -> LVec {
        let mut raw = vec![0; self.len()];
        raw[i] = 1;
        self.normalize(0, &raw).expect("length matches")
    }

    /// The dualizing element `ω = (r − 2)c − Σ x_i`.
    pub fn omega(&self) -> LVec {
        let raw = vec![-1; self.len()];
        self.normalize(self.len() as i64 - 2, &raw)
            .expect("length matches")
    }

    /// Normal form of `c_mult·c + Σ raw[i]·x_i`.
    pub fn normalize(&self, c_mult: i64, raw: &[i64]) -> Result<LVec> {
        if raw.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: raw.len(),
            });
        }
        let mut l = c_mult;
        let mut parts = Vec::with_capacity(raw.len());
        for (&v, &w) in raw.iter().zip(&self.weights) {
            let w = i64::from(w);
            l += v.div_euclid(w);
            parts.push(v.rem_euclid(w) as u32);
        }
        Ok(LVec { l, parts })
    }

    /// Rejects vectors that are not normal forms for this weight type.
    pub fn check(&self, x: &LVec) -> Result<()> {
        if x.parts.len() != self.len() {
            return Err(Error::SpecMismatch);
        }
        if x.parts.iter().zip(&self.weights).any(|(&p, &w)| p >= w) {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, x: &LVec, y: &LVec) -> Result<LVec> {
        self.check(x)?;
        self.check(y)?;
        let raw: Vec<i64> = x
            .parts
            .iter()
            .zip(&y.parts)
            .map(|(&p, &q)| i64::from(p) + i64::from(q))
            .collect();
        self.normalize(x.l + y.l, &raw)
    }

    pub fn neg(&self, x: &LVec) -> Result<LVec> {
        self.check(x)?;
        let raw: Vec<i64> = x.parts.iter().map(|&p| -i64::from(p)).collect();
        self.normalize(-x.l, &raw)
    }

    pub fn sub(&self, x: &LVec, y: &LVec) -> Result<LVec> {
        self.add(x, &self.neg(y)?)
    }

    /// `k·x`.
    pub fn scale(&self, x: &LVec, k: i64) -> Result<LVec> {
        self.check(x)?;
        let raw: Vec<i64> = x.parts.iter().map(|&p| k * i64::from(p)).collect();
        self.normalize(k * x.l, &raw)
    }

    /// The degree homomorphism `L_A → Z`, `deg c = a`, `deg x_i = a/a_i`.
    pub fn deg(&self, x: &LVec) -> BigInt {
        let mut d = &self.lcm * BigInt::from(x.l);
        for (&p, cof) in x.parts.iter().zip(&self.cofactors) {
            d += cof * BigInt::from(p);
        }
        d
    }

    /// `x ≤ y` in the effectivity order.
    pub fn leq(&self, x: &LVec, y: &LVec) -> Result<bool> {
        Ok(self.sub(y, x)?.is_effective())
    }

    /// All normal forms with the given `l`, parts in lexicographic order.
    pub fn layer(&self, l: i64) -> impl Iterator<Item = LVec> + '_ {
        let total: usize = self.weights.iter().map(|&w| w as usize).product();
        (0..total).map(move |mut idx| {
            let mut parts = vec![0u32; self.len()];
            for (slot, &w) in parts.iter_mut().zip(&self.weights).rev() {
                *slot = (idx % w as usize) as u32;
                idx /= w as usize;
            }
            LVec { l, parts }
        })
    }

    /// Parses a lattice literal such as `-2*c+1*x1+2*x2+6*x3`, `c-x1` or `w`
    /// (the dualizing element) and returns its normal form.
    pub fn parse_lvec(&self, s: &str) -> Result<LVec> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty lattice literal".into()));
        }
        let mut acc = self.zero();
        for (sign, term) in split_signed_terms(&compact)? {
            let (coef, generator) = match term.split_once('*') {
                Some((k, g)) => (
                    k.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?,
                    g,
                ),
                None => match term.parse::<i64>() {
                    Ok(0) => continue,
                    Ok(_) => return Err(Error::Parse(format!("bare integer {term:?} in {s:?}"))),
                    Err(_) => (1, term),
                },
            };
            let base = match generator {
                "c" => self.canonical(),
                "w" | "omega" => self.omega(),
                g if g.starts_with('x') => {
                    let i: usize = g[1..]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad generator {g:?}")))?;
                    if i == 0 || i > self.len() {
                        return Err(Error::Parse(format!(
                            "generator {g:?} out of range 1..={}",
                            self.len()
                        )));
                    }
                    self.x(i - 1)
                }
                g => return Err(Error::Parse(format!("unknown generator {g:?}"))),
            };
            acc = self.add(&acc, &self.scale(&base, sign * coef)?)?;
        }
        Ok(acc)
    }

    /// Parses `2,3,7`.
    pub fn parse(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad weight {w:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightSpec::new(weights)
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        f.write_str(&ws.join(","))
    }
}

fn split_signed_terms(s: &str) -> Result<Vec<(i64, &str)>> {
    let mut out = Vec::new();
    let mut sign = 1;
    let mut start = 0;
    let mut in_term = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '+' | '-' if !in_term => {
                if ch == '-' {
                    sign = -sign;
                }
                start = i + 1;
            }
            // `2*-3` keeps the sign with the coefficient
            '+' | '-' if !s[..i].ends_with('*') => {
                out.push((sign, &s[start..i]));
                sign = if ch == '-' { -1 } else { 1 };
                start = i + 1;
                in_term = false;
            }
            _ => in_term = true,
        }
    }
    if !in_term {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((sign, &s[start..]));
    Ok(out)
}

/// An element of `L_A` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LVec {
    l: i64,
    parts: Vec<u32>,
}

impl LVec {
    /// Coefficient of `c`.
    pub fn l(&self) -> i64 {
        self.l
    }

    /// Residues `0 ≤ l_i < a_i`.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    /// `x ≥ 0`; the residues are nonnegative by construction.
    pub fn is_effective(&self) -> bool {
        self.l >= 0
    }

    pub fn is_zero(&self) -> bool {
        self.l == 0 && self.parts.iter().all(|&p| p == 0)
    }
}

impl fmt::Display for LVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*c", self.l)?;
        for (i, p) in self.parts.iter().enumerate() {
            write!(f, "+{}*x{}", p, i + 1)?;
        }
        Ok(())
    }
}
