//! Slope stability conditions `σ_τ = (Z_τ, coh)` with
//! `Z_τ(E) = −deg(E) + τ·rank(E)` for `τ` in the upper half plane, and the
//! charge-side characterization of which abstract central charges come from
//! this family.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, GaussRat, Phase, Rat};
use crate::k0::{
    basis, basis_class, class_of, class_of_line, degree, BasisLabel, K0Class, SheafObject,
};
use crate::lattice::{LVec, WeightSpec};

/// A point `τ` of the upper half plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityParam {
    tau: GaussRat,
}

impl StabilityParam {
    pub fn new(tau: GaussRat) -> Result<Self> {
        if !tau.im.is_positive() {
            return Err(Error::NotUpperHalfPlane(tau.to_string()));
        }
        Ok(StabilityParam { tau })
    }

    pub fn i() -> Self {
        StabilityParam { tau: GaussRat::i() }
    }

    pub fn tau(&self) -> &GaussRat {
        &self.tau
    }
}

impl fmt::Display for StabilityParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tau)
    }
}

/// `Z_τ(cls) = −deg(cls) + τ·rank(cls)`.
pub fn central_charge(spec: &WeightSpec, sigma: &StabilityParam, cls: &K0Class) -> GaussRat {
    let rank = rat_int(cls.rank());
    let deg = rat_int(degree(spec, cls));
    GaussRat::new(&sigma.tau.re * &rank - deg, &sigma.tau.im * &rank)
}

/// `m(E)² = |Z(E)|²`; the mass itself is generally irrational.
pub fn mass_squared(z: &GaussRat) -> Rat {
    z.norm_sqr()
}

/// Phase of a sheaf in the heart `coh`, which is the slice `(0, 1]`.
pub fn phase(spec: &WeightSpec, sigma: &StabilityParam, obj: &SheafObject) -> Result<Phase> {
    let z = central_charge(spec, sigma, &class_of(spec, obj));
    if z.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Phase::of_charge(&z)
}

/// `deg/rank`, infinite for torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slope {
    Finite(Rat),
    Infinite,
}

pub fn slope(spec: &WeightSpec, cls: &K0Class) -> Result<Slope> {
    let rank = cls.rank();
    let deg = degree(spec, cls);
    if rank.is_negative() || (rank.is_zero() && !deg.is_positive()) {
        return Err(Error::InvalidObject(format!(
            "{cls} is not the class of a sheaf"
        )));
    }
    if rank.is_zero() {
        Ok(Slope::Infinite)
    } else {
        Ok(Slope::Finite(Rat::new(deg, rank)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// Torsion lies in the slice of phase 1.
    TorsionPhaseOne,
    /// Every rank-one subsheaf of `O(x)` is `O(x − y)` with `y ≥ 0`, hence
    /// of degree at most `deg O(x)`.
    LineBundleStable,
    /// Indecomposable sheaves are semistable when `χ_A ≤ 0`.
    CorollaryChiNonpositive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SemistabilityVerdict {
    Semistable(Certificate),
    Unknown,
}

impl SemistabilityVerdict {
    pub fn is_semistable(self) -> bool {
        matches!(self, SemistabilityVerdict::Semistable(_))
    }
}

/// Certifies semistability under `σ_τ` where a reason is available.
///
/// The verdict does not depend on `τ`: slope semistability is the same for
/// every point of the family.
pub fn is_semistable(
    _sigma: &StabilityParam,
    obj: &SheafObject,
    chi: &Rat,
) -> SemistabilityVerdict {
    use SemistabilityVerdict::*;
    match obj {
        SheafObject::GenericTorsion { .. } | SheafObject::TubeTorsion { .. } => {
            Semistable(Certificate::TorsionPhaseOne)
        }
        SheafObject::Line(_) => Semistable(Certificate::LineBundleStable),
        SheafObject::Uncatalogued {
            indecomposable: true,
            ..
        } if !chi.is_positive() => Semistable(Certificate::CorollaryChiNonpositive),
        SheafObject::Uncatalogued { .. } => Unknown,
    }
}

/// A central charge given by its values on the basis of `K_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeAssignment {
    values: BTreeMap<BasisLabel, GaussRat>,
}

impl ChargeAssignment {
    /// Checks that every basis element has a value.
    pub fn new(spec: &WeightSpec, values: BTreeMap<BasisLabel, GaussRat>) -> Result<Self> {
        for label in basis(spec) {
            if !values.contains_key(&label) {
                return Err(Error::MissingCharge(label.to_string()));
            }
        }
        if values.len() != basis(spec).len() {
            return Err(Error::SpecMismatch);
        }
        Ok(ChargeAssignment { values })
    }

    /// `Z_τ` restricted to the basis.
    pub fn from_slope(spec: &WeightSpec, sigma: &StabilityParam) -> Self {
        let values = basis(spec)
            .into_iter()
            .map(|label| {
                let z = central_charge(spec, sigma, &basis_class(spec, &label));
                (label, z)
            })
            .collect();
        ChargeAssignment { values }
    }

    pub fn get(&self, label: &BasisLabel) -> &GaussRat {
        &self.values[label]
    }

    pub fn set(&mut self, label: BasisLabel, z: GaussRat) {
        self.values.insert(label, z);
    }

    pub fn values(&self) -> &BTreeMap<BasisLabel, GaussRat> {
        &self.values
    }

    /// Extends linearly to all of `K_0`.
    pub fn evaluate(&self, spec: &WeightSpec, cls: &K0Class) -> GaussRat {
        basis(spec)
            .iter()
            .zip(cls.coeffs())
            .filter(|(_, c)| !c.is_zero())
            .fold(GaussRat::default(), |acc, (label, c)| {
                acc + self.values[label].scale(&rat_int(c))
            })
    }
}

/// Why a charge assignment is not `Z_τ` for any `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    /// `Z(S_λ) ≠ −a`: phase 1 and mass `a` fail together.
    Mass { found: GaussRat },
    /// `a_i·Z(S_{i,j}) ≠ Z(S_λ)`.
    TubeConsistency { point: usize, index: u32 },
    /// `Z(O)` is not in the upper half plane, so `0 < φ(O) < 1` fails.
    StructureSheafPhase { found: GaussRat },
    /// `Z(O(x)) ≠ Z(O) − deg(x)` for a line bundle `0 ≤ x ≤ c`.
    LineBundle { x: LVec },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::Mass { found } => write!(f, "mass: Z(S) = {found}, expected -a"),
            RejectReason::TubeConsistency { point, index } => write!(
                f,
                "tube consistency: a_{p}*Z(S[{p},{index}]) != Z(S)",
                p = point + 1
            ),
            RejectReason::StructureSheafPhase { found } => {
                write!(
                    f,
                    "phase of O: Z(O) = {found} is not in the upper half plane"
                )
            }
            RejectReason::LineBundle { x } => write!(f, "line bundle: Z(O({x})) != Z(O) - deg"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theorem1Verdict {
    Accept(GaussRat),
    Reject(RejectReason),
}

/// Decides whether a charge assignment is `Z_τ` for `τ = Z(O)`, given that
/// `O(x)` for `0 ≤ x ≤ c`, `S_λ` and every `S_{i,j}` are semistable.
/// Clauses are checked in order: mass of `S_λ`, tube consistency, phase of
/// `O`, agreement on the tilting line bundles.
pub fn theorem1_check(spec: &WeightSpec, z: &ChargeAssignment) -> Theorem1Verdict {
    use Theorem1Verdict::*;
    let a = rat_int(spec.lcm().clone());
    let z_s = z.get(&BasisLabel::S).clone();
    if z_s != GaussRat::real(-a.clone()) {
        return Reject(RejectReason::Mass { found: z_s });
    }
    for (point, &w) in spec.weights().iter().enumerate() {
        for j in 0..w {
            let cls = class_of(spec, &SheafObject::tube(point, j, 1));
            let zij = z.evaluate(spec, &cls);
            if zij.scale(&rat_int(w)) != z_s {
                return Reject(RejectReason::TubeConsistency { point, index: j });
            }
        }
    }
    let tau = z.get(&BasisLabel::O).clone();
    if !tau.im.is_positive() {
        return Reject(RejectReason::StructureSheafPhase { found: tau });
    }
    for x in tilting_lines(spec) {
        let expected = &tau - &GaussRat::real(rat_int(spec.deg(&x)));
        if z.evaluate(spec, &class_of_line(spec, &x)) != expected {
            return Reject(RejectReason::LineBundle { x });
        }
    }
    Accept(tau)
}

/// `{x : 0 ≤ x ≤ c}`: `0`, `j·x_i` for `1 ≤ j < a_i`, and `c`.
pub fn tilting_lines(spec: &WeightSpec) -> Vec<LVec> {
    let mut out = vec![spec.zero()];
    for (i, &w) in spec.weights().iter().enumerate() {
        for j in 1..w {
            out.push(spec.scale(&spec.x(i), i64::from(j)).expect("normal"));
        }
    }
    out.push(spec.canonical());
    out
}
