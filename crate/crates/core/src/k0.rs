//! The Grothendieck group of the derived category.
//!
//! Classes are integer vectors over `{[O], [S_λ], [S_{i,j}] : 1 ≤ j < a_i}`,
//! a basis of rank `2 + Σ (a_i − 1)`. The simple `S_{i,0}` is not a basis
//! element; its class is `[S_λ] − Σ_{j≥1} [S_{i,j}]`.
//!
//! Line bundle classes follow from the two families of short exact sequences
//! `O(y) → O(y + c) → S_λ` and `O(y) → O(y + x_i) → S_{i, l_i(y)}`, giving
//!
//! ```text
//! [O(x)] = [O] + l·[S_λ] + Σ_i Σ_{j=0}^{l_i − 1} [S_{i,j}]
//! ```
//!
//! for `x = l·c + Σ l_i x_i` in normal form. The inner sum stops at `l_i − 1`:
//! a sum up to `l_i` would give `[O(x_i)] = [O] + [S_{i,0}] + [S_{i,1}]`,
//! which is inconsistent with `O → O(x_i) → S_{i,0}`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{LVec, WeightSpec};

/// An element of `K_0`, coordinates over the basis described in the module
/// docs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct K0Class {
    o: BigInt,
    s: BigInt,
    tube: Vec<Vec<BigInt>>,
}

impl K0Class {
    pub fn zero(spec: &WeightSpec) -> Self {
        K0Class {
            o: BigInt::zero(),
            s: BigInt::zero(),
            tube: spec
                .weights()
                .iter()
                .map(|&w| vec![BigInt::zero(); w as usize - 1])
                .collect(),
        }
    }

    /// Coefficient of `[O]`.
    pub fn coeff_o(&self) -> &BigInt {
        &self.o
    }

    /// Coefficient of `[S_λ]`.
    pub fn coeff_s(&self) -> &BigInt {
        &self.s
    }

    /// Coefficient of `[S_{i,j}]` for `1 ≤ j < a_i`.
    pub fn coeff_tube(&self, i: usize, j: u32) -> &BigInt {
        &self.tube[i][j as usize - 1]
    }

    /// Number of coordinates, the rank of `K_0`.
    pub fn dim(&self) -> usize {
        2 + self.tube.iter().map(Vec::len).sum::<usize>()
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        let mut v = vec![self.o.clone(), self.s.clone()];
        for row in &self.tube {
            v.extend(row.iter().cloned());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.o.is_zero() && self.s.is_zero() && self.tube.iter().flatten().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        K0Class {
            o: &self.o * k,
            s: &self.s * k,
            tube: self
                .tube
                .iter()
                .map(|row| row.iter().map(|c| c * k).collect())
                .collect(),
        }
    }

    /// `rank(O) = 1`, torsion has rank 0.
    pub fn rank(&self) -> BigInt {
        self.o.clone()
    }

    fn zip_with(&self, other: &K0Class, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> K0Class {
        assert_eq!(
            self.tube.len(),
            other.tube.len(),
            "classes of different weight types"
        );
        K0Class {
            o: f(&self.o, &other.o),
            s: f(&self.s, &other.s),
            tube: self
                .tube
                .iter()
                .zip(&other.tube)
                .map(|(a, b)| {
                    assert_eq!(a.len(), b.len(), "classes of different weight types");
                    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
                })
                .collect(),
        }
    }
}

impl<'a> Add<&'a K0Class> for &'a K0Class {
    type Output = K0Class;
    fn add(self, rhs: &'a K0Class) -> K0Class {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for K0Class {
    type Output = K0Class;
    fn add(self, rhs: K0Class) -> K0Class {
        &self + &rhs
    }
}

impl<'a> Sub<&'a K0Class> for &'a K0Class {
    type Output = K0Class;
    fn sub(self, rhs: &'a K0Class) -> K0Class {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for K0Class {
    type Output = K0Class;
    fn sub(self, rhs: K0Class) -> K0Class {
        &self - &rhs
    }
}

impl Neg for K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        self.scaled(&BigInt::from(-1))
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*[O]+{}*[S]", self.o, self.s)?;
        for (i, row) in self.tube.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                write!(f, "+{}*[S[{},{}]]", c, i + 1, j + 1)?;
            }
        }
        Ok(())
    }
}

/// A basis element of `K_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    O,
    S,
    /// `S_{i,j}` with 0-based point `i` and `1 ≤ j < a_i`.
    Tube {
        point: usize,
        index: u32,
    },
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::O => f.write_str("O"),
            BasisLabel::S => f.write_str("S"),
            BasisLabel::Tube { point, index } => write!(f, "S[{},{}]", point + 1, index),
        }
    }
}

impl BasisLabel {
    pub fn parse(spec: &WeightSpec, s: &str) -> Result<Self> {
        match s.trim() {
            "O" => Ok(BasisLabel::O),
            "S" => Ok(BasisLabel::S),
            other => match SheafObject::parse(spec, other)? {
                SheafObject::TubeTorsion {
                    point,
                    socle,
                    len: 1,
                } if socle >= 1 => Ok(BasisLabel::Tube {
                    point,
                    index: socle,
                }),
                _ => Err(Error::Parse(format!("{s:?} is not a basis label"))),
            },
        }
    }
}

/// The basis labels in coordinate order.
pub fn basis(spec: &WeightSpec) -> Vec<BasisLabel> {
    let mut out = vec![BasisLabel::O, BasisLabel::S];
    for (point, &w) in spec.weights().iter().enumerate() {
        out.extend((1..w).map(|index| BasisLabel::Tube { point, index }));
    }
    out
}

pub fn basis_class(spec: &WeightSpec, label: &BasisLabel) -> K0Class {
    let mut cls = K0Class::zero(spec);
    match *label {
        BasisLabel::O => cls.o = BigInt::one(),
        BasisLabel::S => cls.s = BigInt::one(),
        BasisLabel::Tube { point, index } => cls.tube[point][index as usize - 1] = BigInt::one(),
    }
    cls
}

/// `[S_{i,j}]` for any residue `j`, eliminating `[S_{i,0}]`.
pub fn simple_class(spec: &WeightSpec, point: usize, j: i64) -> K0Class {
    let w = i64::from(spec.weight(point));
    let j = j.rem_euclid(w) as u32;
    if j != 0 {
        return basis_class(spec, &BasisLabel::Tube { point, index: j });
    }
    let mut cls = K0Class::zero(spec);
    cls.s = BigInt::one();
    for c in &mut cls.tube[point] {
        *c = BigInt::from(-1);
    }
    cls
}

/// `[O(x)]` for `x` in normal form.
pub fn class_of_line(spec: &WeightSpec, x: &LVec) -> K0Class {
    let mut cls = K0Class::zero(spec);
    cls.o = BigInt::one();
    cls.s = BigInt::from(x.l());
    for (i, &li) in x.parts().iter().enumerate() {
        if li == 0 {
            continue;
        }
        // [S_{i,0}] + Σ_{j=1}^{l_i−1} [S_{i,j}] = [S_λ] − Σ_{j=l_i}^{a_i−1} [S_{i,j}]
        cls.s += 1;
        for j in li..spec.weight(i) {
            cls.tube[i][j as usize - 1] -= 1;
        }
    }
    cls
}

/// Rank of a class.
pub fn rank(cls: &K0Class) -> BigInt {
    cls.rank()
}

/// Degree of a class: `deg O = 0`, `deg S_λ = a`, `deg S_{i,j} = a/a_i`.
pub fn degree(spec: &WeightSpec, cls: &K0Class) -> BigInt {
    let mut d = spec.lcm() * &cls.s;
    for (i, row) in cls.tube.iter().enumerate() {
        let cof = spec.cofactor(i);
        for c in row {
            d += cof * c;
        }
    }
    d
}

/// Image of a class under `− ⊗ O(y)`.
pub fn twist_class(spec: &WeightSpec, cls: &K0Class, y: &LVec) -> K0Class {
    let mut out = class_of_line(spec, y).scaled(&cls.o);
    out.s += &cls.s;
    for (i, row) in cls.tube.iter().enumerate() {
        let shift = i64::from(y.part(i));
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &simple_class(spec, i, j as i64 + 1 + shift).scaled(c);
            }
        }
    }
    out
}

/// Coordinates over the tilting basis `{[O(x)] : 0 ≤ x ≤ c}`, listed as
/// `O, O(x_1), …, O((a_1−1)x_1), …, O((a_r−1)x_r), O(c)`.
pub fn tilting_coordinates(spec: &WeightSpec, cls: &K0Class) -> Vec<(LVec, BigInt)> {
    let mut out = vec![(spec.zero(), &cls.o - &cls.s)];
    let mut top = cls.s.clone();
    for (i, row) in cls.tube.iter().enumerate() {
        let w = spec.weight(i);
        for j in 1..w {
            let prev = if j >= 2 {
                row[j as usize - 2].clone()
            } else {
                BigInt::zero()
            };
            let x = spec
                .scale(&spec.x(i), i64::from(j))
                .expect("generator is normal");
            out.push((x, prev - &row[j as usize - 1]));
        }
        if let Some(last) = row.last() {
            top += last;
        }
    }
    out.push((spec.canonical(), top));
    out
}

/// An indecomposable sheaf from the catalogue, or an opaque object known
/// only by its class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SheafObject {
    /// The line bundle `O(x)`.
    Line(LVec),
    /// Uniserial torsion of length `len` at a non-weighted point; all
    /// composition factors are `S_λ`. Distinct `point` ids are distinct
    /// points of `P¹ \ Λ`.
    GenericTorsion { point: u32, len: u32 },
    /// Uniserial torsion at the weighted point `point` (0-based) with socle
    /// `S_{i,socle}` and composition factors `S_{i,socle}, …,
    /// S_{i,socle+len−1}` from the bottom up.
    TubeTorsion { point: usize, socle: u32, len: u32 },
    /// An object outside the catalogue, e.g. a higher-rank bundle.
    /// `indecomposable` records whether indecomposability is known.
    Uncatalogued {
        class: K0Class,
        indecomposable: bool,
    },
}

impl SheafObject {
    pub fn line(x: LVec) -> Self {
        SheafObject::Line(x)
    }

    pub fn generic(len: u32) -> Self {
        SheafObject::GenericTorsion { point: 0, len }
    }

    pub fn tube(point: usize, socle: u32, len: u32) -> Self {
        SheafObject::TubeTorsion { point, socle, len }
    }

    pub fn is_torsion(&self) -> bool {
        match self {
            SheafObject::Line(_) => false,
            SheafObject::GenericTorsion { .. } | SheafObject::TubeTorsion { .. } => true,
            SheafObject::Uncatalogued { class, .. } => class.rank().is_zero(),
        }
    }

    pub fn is_catalogued(&self) -> bool {
        !matches!(self, SheafObject::Uncatalogued { .. })
    }

    pub fn validate(&self, spec: &WeightSpec) -> Result<()> {
        match self {
            SheafObject::Line(x) => spec.check(x),
            SheafObject::GenericTorsion { len, .. } => {
                if *len == 0 {
                    return Err(Error::InvalidObject(
                        "torsion length must be positive".into(),
                    ));
                }
                Ok(())
            }
            SheafObject::TubeTorsion { point, socle, len } => {
                if *len == 0 {
                    return Err(Error::InvalidObject(
                        "torsion length must be positive".into(),
                    ));
                }
                if *point >= spec.len() {
                    return Err(Error::InvalidObject(format!(
                        "point {} out of range 1..={}",
                        point + 1,
                        spec.len()
                    )));
                }
                if *socle >= spec.weight(*point) {
                    return Err(Error::InvalidObject(format!(
                        "index {socle} out of range 0..{}",
                        spec.weight(*point)
                    )));
                }
                Ok(())
            }
            SheafObject::Uncatalogued { class, .. } => {
                if class.dim() != K0Class::zero(spec).dim() {
                    return Err(Error::SpecMismatch);
                }
                Ok(())
            }
        }
    }

    /// Composition factors `(point, j)` of a tube object, bottom up.
    pub fn composition_factors(&self, spec: &WeightSpec) -> Vec<(usize, u32)> {
        match *self {
            SheafObject::TubeTorsion { point, socle, len } => {
                let w = spec.weight(point);
                (0..len).map(|k| (point, (socle + k) % w)).collect()
            }
            _ => Vec::new(),
        }
    }

    /// Parses `O(<lvec>)`, `S[*]`, `S[*;n]`, `S[*p;n]`, `S[i,j]`, `S[i,j;n]`.
    pub fn parse(spec: &WeightSpec, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |why: &str| Error::Parse(format!("bad object literal {s:?}: {why}"));
        let obj = if let Some(inner) = s.strip_prefix("O(").and_then(|r| r.strip_suffix(')')) {
            SheafObject::Line(spec.parse_lvec(inner)?)
        } else if let Some(inner) = s.strip_prefix("S[").and_then(|r| r.strip_suffix(']')) {
            let (loc, len) = match inner.split_once(';') {
                Some((loc, n)) => (
                    loc.trim(),
                    n.trim().parse::<u32>().map_err(|_| bad("length"))?,
                ),
                None => (inner.trim(), 1),
            };
            if let Some(p) = loc.strip_prefix('*') {
                let point = if p.is_empty() {
                    0
                } else {
                    p.parse::<u32>().map_err(|_| bad("generic point id"))?
                };
                SheafObject::GenericTorsion { point, len }
            } else {
                let (i, j) = loc.split_once(',').ok_or_else(|| bad("expected i,j"))?;
                let i: usize = i.trim().parse().map_err(|_| bad("point index"))?;
                let j: i64 = j.trim().parse().map_err(|_| bad("residue"))?;
                if i == 0 || i > spec.len() {
                    return Err(bad("point index out of range"));
                }
                let socle = j.rem_euclid(i64::from(spec.weight(i - 1))) as u32;
                SheafObject::TubeTorsion {
                    point: i - 1,
                    socle,
                    len,
                }
            }
        } else {
            return Err(bad("expected O(...) or S[...]"));
        };
        obj.validate(spec)?;
        Ok(obj)
    }
}

impl fmt::Display for SheafObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheafObject::Line(x) => write!(f, "O({x})"),
            SheafObject::GenericTorsion { point, len } => {
                f.write_str("S[*")?;
                if *point != 0 {
                    write!(f, "{point}")?;
                }
                if *len != 1 {
                    write!(f, ";{len}")?;
                }
                f.write_str("]")
            }
            SheafObject::TubeTorsion { point, socle, len } => {
                write!(f, "S[{},{}", point + 1, socle)?;
                if *len != 1 {
                    write!(f, ";{len}")?;
                }
                f.write_str("]")
            }
            SheafObject::Uncatalogued { class, .. } => write!(f, "E<{class}>"),
        }
    }
}

/// The class of an object.
pub fn class_of(spec: &WeightSpec, obj: &SheafObject) -> K0Class {
    match obj {
        SheafObject::Line(x) => class_of_line(spec, x),
        SheafObject::GenericTorsion { len, .. } => {
            let mut cls = K0Class::zero(spec);
            cls.s = BigInt::from(*len);
            cls
        }
        SheafObject::TubeTorsion { point, socle, len } => (0..*len)
            .map(|k| simple_class(spec, *point, i64::from(socle + k)))
            .fold(K0Class::zero(spec), |acc, c| &acc + &c),
        SheafObject::Uncatalogued { class, .. } => class.clone(),
    }
}

/// `obj ⊗ O(y)`: lines translate, tube residues rotate by `l_i(y)`,
/// generic torsion is fixed.
pub fn twist(spec: &WeightSpec, obj: &SheafObject, y: &LVec) -> SheafObject {
    match obj {
        SheafObject::Line(x) => SheafObject::Line(spec.add(x, y).expect("same weight type")),
        SheafObject::GenericTorsion { .. } => obj.clone(),
        SheafObject::TubeTorsion { point, socle, len } => SheafObject::TubeTorsion {
            point: *point,
            socle: (socle + y.part(*point)) % spec.weight(*point),
            len: *len,
        },
        SheafObject::Uncatalogued {
            class,
            indecomposable,
        } => SheafObject::Uncatalogued {
            class: twist_class(spec, class, y),
            indecomposable: *indecomposable,
        },
    }
}
