//! Dimensions of `Hom` and `Ext¹` between catalogued sheaves.
//!
//! `Hom(O(x), O(y))` is the `(y − x)`-graded piece of the coordinate ring.
//! That ring is free over `C[X_1, X_2]` on the monomials `Π_{i≥3} X_i^{m_i}`
//! with `m_i < a_i`, so the piece of degree `l·c + Σ l_i x_i` has dimension
//! `l + 1` (or 0 when `l < 0`), independent of the points `λ_i`.
//!
//! Torsion cases use the uniserial structure of the tubes:
//!
//! * `Ext¹(O(x), T) = 0` for torsion `T`, so `Hom(O(x), −)` is additive over
//!   composition factors, and `Hom(O(x), S_{i,j}) ≠ 0` exactly when
//!   `j ≡ l_i(x) − 1 (mod a_i)`.
//! * For tube objects `U(s, n)` (socle `s`, length `n`) at a point of weight
//!   `p`, a nonzero map `U(s, n) → U(s', n')` factors through an image of
//!   length `m ≤ min(n, n')` that is a quotient of the source (socle
//!   `s + n − m`) and a subobject of the target (socle `s'`). Hence
//!   `dim Hom = #{1 ≤ m ≤ min(n, n') : s + n − m ≡ s' (mod p)}`.
//!
//! `Ext¹` comes from Serre duality with the Serre functor `− ⊗ O(ω)[1]`:
//! `Ext¹(E, F) ≅ Hom(F, E ⊗ O(ω))*`.

use std::fmt;

use crate::k0::{twist, SheafObject};
use crate::lattice::{LVec, WeightSpec};

/// A dimension, or `Unknown` for pairs outside the catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Known(u64),
    Unknown,
}

impl Dim {
    /// Unknown values are never treated as nonzero.
    pub fn is_nonzero(self) -> bool {
        matches!(self, Dim::Known(d) if d > 0)
    }

    pub fn known(self) -> Option<u64> {
        match self {
            Dim::Known(d) => Some(d),
            Dim::Unknown => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Known(d) => write!(f, "{d}"),
            Dim::Unknown => f.write_str("unknown"),
        }
    }
}

/// `dim Hom(source, target[ext_degree])` for a hereditary heart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomQuery {
    pub source: SheafObject,
    pub target: SheafObject,
    pub ext_degree: u8,
}

impl HomQuery {
    pub fn eval(&self, spec: &WeightSpec) -> Dim {
        match self.ext_degree {
            0 => hom_dim(spec, &self.source, &self.target),
            1 => ext1_dim(spec, &self.source, &self.target),
            // higher extensions vanish in a hereditary category
            _ => Dim::Known(0),
        }
    }
}

/// Dimension of the `x`-graded piece of the coordinate ring.
pub fn graded_dim(x: &LVec) -> u64 {
    if x.l() >= 0 {
        x.l() as u64 + 1
    } else {
        0
    }
}

/// Number of `k ∈ [lo, hi]` with `k ≡ t (mod p)`.
fn count_residue(lo: u64, hi: u64, t: u64, p: u64) -> u64 {
    if lo > hi {
        return 0;
    }
    let first = lo + (t + p - lo % p) % p;
    if first > hi {
        0
    } else {
        (hi - first) / p + 1
    }
}

pub fn hom_dim(spec: &WeightSpec, e: &SheafObject, f: &SheafObject) -> Dim {
    use SheafObject::*;
    match (e, f) {
        (Uncatalogued { .. }, _) | (_, Uncatalogued { .. }) => Dim::Unknown,
        (Line(x), Line(y)) => match spec.sub(y, x) {
            Ok(d) => Dim::Known(graded_dim(&d)),
            Err(_) => Dim::Unknown,
        },
        (Line(_), GenericTorsion { len, .. }) => Dim::Known(u64::from(*len)),
        (Line(x), TubeTorsion { point, socle, len }) => {
            let p = u64::from(spec.weight(*point));
            // factors S_{i, socle + k}; the one hit has index l_i(x) − 1
            let target = (u64::from(x.part(*point)) + p - 1) % p;
            let t = (target + p - u64::from(*socle)) % p;
            Dim::Known(count_residue(0, u64::from(*len) - 1, t, p))
        }
        (GenericTorsion { .. } | TubeTorsion { .. }, Line(_)) => Dim::Known(0),
        (GenericTorsion { point: p1, len: n1 }, GenericTorsion { point: p2, len: n2 }) => {
            if p1 == p2 {
                Dim::Known(u64::from(*n1.min(n2)))
            } else {
                Dim::Known(0)
            }
        }
        (GenericTorsion { .. }, TubeTorsion { .. })
        | (TubeTorsion { .. }, GenericTorsion { .. }) => Dim::Known(0),
        (
            TubeTorsion {
                point: i1,
                socle: s1,
                len: n1,
            },
            TubeTorsion {
                point: i2,
                socle: s2,
                len: n2,
            },
        ) => {
            if i1 != i2 {
                return Dim::Known(0);
            }
            let p = u64::from(spec.weight(*i1));
            let (s1, n1, s2) = (u64::from(*s1), u64::from(*n1), u64::from(*s2));
            // m ≡ s1 + n1 − s2 (mod p)
            let t = (s1 + n1 % p + p - s2) % p;
            Dim::Known(count_residue(1, n1.min(u64::from(*n2)), t, p))
        }
    }
}

/// `dim Ext¹(E, F) = dim Hom(F, E ⊗ O(ω))`.
pub fn ext1_dim(spec: &WeightSpec, e: &SheafObject, f: &SheafObject) -> Dim {
    hom_dim(spec, f, &twist(spec, e, &spec.omega()))
}
