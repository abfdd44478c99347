//! Global dimension of `σ_τ`: the supremum of `φ(B) − φ(A)` over
//! semistable `A`, `B` and nonzero `Hom(A, B[k])`.
//!
//! The heart is hereditary, so only `k = 0` and `k = 1` contribute, and the
//! supremum is taken over a finite catalogue of certified semistable sheaves.
//! A gap is stored exactly as `e + arg(w)/π` with `w = Z_B·conj(Z_A)`.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{phase_compare, rat_int, GaussRat, Phase, Rat};
use crate::homdim::hom_dim;
use crate::k0::{class_of, twist, K0Class, SheafObject};
use crate::lattice::{WeightSpec, WeightType};
use crate::stability::{central_charge, is_semistable, SemistabilityVerdict, StabilityParam};

/// Upper (and lower) Serre dimension of the derived category; a lower bound
/// for every `gldim σ`.
pub const SERRE_DIMENSION: i64 = 1;

pub fn serre_dimension() -> Rat {
    rat_int(SERRE_DIMENSION)
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub object: SheafObject,
    pub class: K0Class,
    pub charge: GaussRat,
    pub phase: Phase,
    pub verdict: SemistabilityVerdict,
}

/// Certified semistable sheaves in a finite window: all line bundles with
/// `|l| ≤ L`, and torsion of length at most `N` in every tube and at one
/// generic point.
#[derive(Clone, Debug)]
pub struct Catalog {
    spec: WeightSpec,
    sigma: StabilityParam,
    line_window: u32,
    torsion_window: u32,
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Entries are ordered: generic torsion by length, tube torsion by
    /// `(point, socle, length)`, then lines by layer `0, −1, 1, −2, 2, …`.
    pub fn build(spec: &WeightSpec, sigma: &StabilityParam, l: u32, n: u32) -> Result<Self> {
        if l == 0 || n == 0 {
            return Err(Error::InvalidWindow(format!("L = {l}, N = {n}")));
        }
        let mut objects: Vec<SheafObject> = (1..=n).map(SheafObject::generic).collect();
        for (point, &w) in spec.weights().iter().enumerate() {
            for socle in 0..w {
                objects.extend((1..=n).map(|len| SheafObject::tube(point, socle, len)));
            }
        }
        objects.extend(layer_order(l).flat_map(|k| spec.layer(k).map(SheafObject::Line)));

        let chi = spec.euler_char();
        let entries = objects
            .into_par_iter()
            .map(|object| {
                let class = class_of(spec, &object);
                let charge = central_charge(spec, sigma, &class);
                let phase = Phase::of_charge(&charge).expect("catalogued sheaves lie in the heart");
                let verdict = is_semistable(sigma, &object, &chi);
                debug_assert!(verdict.is_semistable());
                CatalogEntry {
                    object,
                    class,
                    charge,
                    phase,
                    verdict,
                }
            })
            .collect();
        Ok(Catalog {
            spec: spec.clone(),
            sigma: sigma.clone(),
            line_window: l,
            torsion_window: n,
            entries,
        })
    }

    pub fn spec(&self) -> &WeightSpec {
        &self.spec
    }

    pub fn sigma(&self) -> &StabilityParam {
        &self.sigma
    }

    /// `(L, N)`.
    pub fn window(&self) -> (u32, u32) {
        (self.line_window, self.torsion_window)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, obj: &SheafObject) -> bool {
        self.entries.iter().any(|e| &e.object == obj)
    }
}

fn layer_order(l: u32) -> impl Iterator<Item = i64> {
    let l = i64::from(l);
    std::iter::once(0).chain((1..=l).flat_map(|k| [-k, k]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exactness {
    /// The value is `gldim σ` itself.
    ExactGlobal,
    /// The value is the supremum over the window only.
    WindowLowerBound,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::ExactGlobal => "ExactGlobal",
            Exactness::WindowLowerBound => "WindowLowerBound",
        })
    }
}

/// A pair with `Hom(A, B) ≠ 0` (`ext = false`) or `Ext¹(A, B) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub a: SheafObject,
    pub b: SheafObject,
    pub ext: bool,
}

#[derive(Clone, Debug)]
pub struct GapReport {
    /// The gap `e + arg(ratio)/π`.
    pub value: Phase,
    /// `Z_B·conj(Z_A)`.
    pub ratio: GaussRat,
    pub float_value: f64,
    pub witness: Witness,
    pub exactness: Exactness,
}

impl GapReport {
    fn new(
        ext: bool,
        ratio: GaussRat,
        a: SheafObject,
        b: SheafObject,
        exactness: Exactness,
    ) -> Self {
        let value = Phase::from_turn(i64::from(ext), &ratio).expect("charges are nonzero");
        GapReport {
            float_value: value.to_f64(),
            value,
            ratio,
            witness: Witness { a, b, ext },
            exactness,
        }
    }
}

/// `φ(B) − φ(A) + e` for catalogue entries.
pub fn pair_gap(a: &CatalogEntry, b: &CatalogEntry, ext: bool) -> Phase {
    let w = &b.charge * &a.charge.conj();
    Phase::from_turn(i64::from(ext), &w).expect("charges are nonzero")
}

struct Best {
    gap: Phase,
    a: usize,
    b: usize,
    ext: bool,
}

/// Larger gap wins; ties keep the earlier pair.
fn better(x: Option<Best>, y: Option<Best>) -> Option<Best> {
    match (x, y) {
        (Some(x), Some(y)) => {
            if phase_compare(&y.gap, &x.gap) == Ordering::Greater {
                Some(y)
            } else {
                Some(x)
            }
        }
        (x, None) => x,
        (None, y) => y,
    }
}

/// Catalogue data shared by all sources `A`.
struct PairScan<'a> {
    catalog: &'a Catalog,
    /// `A ⊗ O(ω)`; `Ext¹(A, B) ≅ Hom(B, A ⊗ O(ω))*`.
    twisted: Vec<SheafObject>,
    /// Indices by decreasing phase, ties in catalogue order.
    by_phase: Vec<usize>,
}

impl<'a> PairScan<'a> {
    fn new(catalog: &'a Catalog) -> Self {
        let omega = catalog.spec.omega();
        let twisted = catalog
            .entries
            .iter()
            .map(|e| twist(&catalog.spec, &e.object, &omega))
            .collect();
        let mut by_phase: Vec<usize> = (0..catalog.entries.len()).collect();
        by_phase
            .sort_by(|&x, &y| phase_compare(&catalog.entries[y].phase, &catalog.entries[x].phase));
        PairScan {
            catalog,
            twisted,
            by_phase,
        }
    }

    /// The earliest `B` of largest phase with `Ext¹(A, B) ≠ 0`.
    fn top_ext(&self, ia: usize) -> Option<usize> {
        let spec = &self.catalog.spec;
        let entries = &self.catalog.entries;
        self.by_phase
            .iter()
            .copied()
            .find(|&ib| hom_dim(spec, &entries[ib].object, &self.twisted[ia]).is_nonzero())
    }

    /// The earliest `B` of largest phase with `Hom(A, B) ≠ 0`.
    fn top_hom(&self, ia: usize) -> Option<usize> {
        let spec = &self.catalog.spec;
        let entries = &self.catalog.entries;
        self.by_phase
            .iter()
            .copied()
            .find(|&ib| hom_dim(spec, &entries[ia].object, &entries[ib].object).is_nonzero())
    }

    /// The largest gap with source `A`. Phases lie in `(0, 1]`, so any
    /// `Ext¹` gap exceeds every `Hom` gap from the same source.
    fn best_from(&self, ia: usize) -> Option<Best> {
        let entries = &self.catalog.entries;
        let (ib, ext) = match self.top_ext(ia) {
            Some(ib) => (ib, true),
            None => (self.top_hom(ia)?, false),
        };
        Some(Best {
            gap: pair_gap(&entries[ia], &entries[ib], ext),
            a: ia,
            b: ib,
            ext,
        })
    }
}

/// Every `Ext¹` pair descends: `φ(B) ≤ φ(A)`.
pub fn ext_pairs_descend(catalog: &Catalog) -> bool {
    let scan = PairScan::new(catalog);
    let entries = &catalog.entries;
    (0..entries.len())
        .into_par_iter()
        .all(|ia| match scan.top_ext(ia) {
            Some(ib) => phase_compare(&entries[ib].phase, &entries[ia].phase) != Ordering::Greater,
            None => true,
        })
}

/// Whether some torsion `T` in the catalogue has `Ext¹(T, T) ≠ 0`, giving a
/// gap of exactly 1.
fn torsion_self_ext(catalog: &Catalog) -> bool {
    let omega = catalog.spec.omega();
    catalog.entries.iter().any(|e| {
        e.object.is_torsion()
            && hom_dim(
                &catalog.spec,
                &e.object,
                &twist(&catalog.spec, &e.object, &omega),
            )
            .is_nonzero()
    })
}

/// The exact maximum gap over the catalogue. Among equal gaps the witness is
/// the first pair in catalogue order, sources outermost, `Hom` before `Ext¹`.
/// Unknown dimensions never count as nonzero.
///
/// `ExactGlobal` needs a certificate that the window already sees the
/// supremum: the Gepner identity, or in domestic type all `Ext¹` pairs
/// descending with a torsion self-extension attaining 1.
pub fn max_gap(catalog: &Catalog) -> Result<GapReport> {
    if catalog.is_empty() {
        return Err(Error::InvalidWindow("empty catalogue".into()));
    }
    let scan = PairScan::new(catalog);
    let per_source: Vec<Option<Best>> = (0..catalog.entries.len())
        .into_par_iter()
        .map(|ia| scan.best_from(ia))
        .collect();
    let best = per_source
        .into_iter()
        .fold(None, better)
        .ok_or_else(|| Error::InvalidWindow("no nonzero Hom or Ext pairs".into()))?;

    let one = Phase::integer(1);
    let attains_one = best.gap == one;
    let certified = match catalog.spec.classify() {
        WeightType::Tubular => gepner_check(&catalog.spec, &catalog.sigma),
        WeightType::Domestic => torsion_self_ext(catalog) && ext_pairs_descend(catalog),
        WeightType::Wild => false,
    };
    let exactness = if certified && attains_one {
        Exactness::ExactGlobal
    } else {
        Exactness::WindowLowerBound
    };
    let a = &catalog.entries[best.a];
    let b = &catalog.entries[best.b];
    Ok(GapReport::new(
        best.ext,
        &b.charge * &a.charge.conj(),
        a.object.clone(),
        b.object.clone(),
        exactness,
    ))
}

/// `Z_τ(B ⊗ O(ω)) = Z_τ(B)` for `B` in `O`, `S_λ` and every `S_{i,j}`: the
/// charge-side form of `S ∘ σ_τ = σ_τ · 1`.
pub fn gepner_check(spec: &WeightSpec, sigma: &StabilityParam) -> bool {
    let omega = spec.omega();
    let mut objects = vec![SheafObject::Line(spec.zero()), SheafObject::generic(1)];
    for (point, &w) in spec.weights().iter().enumerate() {
        objects.extend((0..w).map(|j| SheafObject::tube(point, j, 1)));
    }
    objects.iter().all(|b| {
        let before = central_charge(spec, sigma, &class_of(spec, b));
        let after = central_charge(spec, sigma, &class_of(spec, &twist(spec, b, &omega)));
        before == after
    })
}

/// The gap `1 + φ(O(ω)) − φ(O)` of the pair `Ext¹(O, O(ω)) ≅ Hom(O, O)*`,
/// which exceeds 1 exactly when `deg ω > 0`.
pub fn wild_gap(spec: &WeightSpec, sigma: &StabilityParam) -> Result<GapReport> {
    if spec.classify() != WeightType::Wild {
        return Err(Error::NotWild(spec.to_string()));
    }
    let o = SheafObject::Line(spec.zero());
    let o_omega = SheafObject::Line(spec.omega());
    let z_o = central_charge(spec, sigma, &class_of(spec, &o));
    let z_omega = central_charge(spec, sigma, &class_of(spec, &o_omega));
    Ok(GapReport::new(
        true,
        &z_omega * &z_o.conj(),
        o,
        o_omega,
        Exactness::WindowLowerBound,
    ))
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub sigma: StabilityParam,
    pub report: GapReport,
}

#[derive(Clone, Debug)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    /// Index of the smallest value, first on ties.
    pub infimum: usize,
}

impl ScanTable {
    pub fn infimum_row(&self) -> &ScanRow {
        &self.rows[self.infimum]
    }
}

/// `max_gap` at every grid point. Rows keep grid order whatever the thread
/// count.
pub fn scan(spec: &WeightSpec, grid: &[StabilityParam], l: u32, n: u32) -> Result<ScanTable> {
    if grid.is_empty() {
        return Err(Error::InvalidWindow("empty grid".into()));
    }
    let rows = grid
        .par_iter()
        .map(|sigma| {
            let catalog = Catalog::build(spec, sigma, l, n)?;
            Ok(ScanRow {
                sigma: sigma.clone(),
                report: max_gap(&catalog)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let infimum = (1..rows.len()).fold(0, |best, k| {
        if phase_compare(&rows[k].report.value, &rows[best].report.value) == Ordering::Less {
            k
        } else {
            best
        }
    });
    Ok(ScanTable { rows, infimum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_to_f64};
    use crate::homdim::ext1_dim;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn spec(w: &[u32]) -> WeightSpec {
        WeightSpec::new(w.to_vec()).unwrap()
    }

    fn tau(re: i64, im: i64) -> StabilityParam {
        StabilityParam::new(GaussRat::from_ints(re, im)).unwrap()
    }

    fn random_tau(rng: &mut StdRng) -> StabilityParam {
        let re = rat(rng.gen_range(-12..12), rng.gen_range(1..6));
        let im = rat(rng.gen_range(1..12), rng.gen_range(1..6));
        StabilityParam::new(GaussRat::new(re, im)).unwrap()
    }

    /// Maximum by brute force over all pairs with float phases.
    fn float_max_gap(catalog: &Catalog) -> f64 {
        let s = catalog.spec();
        let mut best = f64::NEG_INFINITY;
        for a in catalog.entries() {
            for b in catalog.entries() {
                let d = b.phase.to_f64() - a.phase.to_f64();
                if hom_dim(s, &a.object, &b.object).is_nonzero() {
                    best = best.max(d);
                }
                if ext1_dim(s, &a.object, &b.object).is_nonzero() {
                    best = best.max(1.0 + d);
                }
            }
        }
        best
    }

    /// Maximum over all pairs in catalogue order, strict improvement only.
    fn exact_max_gap(catalog: &Catalog) -> (Phase, Witness) {
        let s = catalog.spec();
        let mut best: Option<(Phase, Witness)> = None;
        for a in catalog.entries() {
            for b in catalog.entries() {
                let rows = [
                    (false, hom_dim(s, &a.object, &b.object)),
                    (true, ext1_dim(s, &a.object, &b.object)),
                ];
                for (ext, d) in rows {
                    if !d.is_nonzero() {
                        continue;
                    }
                    let g = pair_gap(a, b, ext);
                    if best.as_ref().is_none_or(|(v, _)| g > *v) {
                        let w = Witness {
                            a: a.object.clone(),
                            b: b.object.clone(),
                            ext,
                        };
                        best = Some((g, w));
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn max_gap_matches_exact_brute_force() {
        let mut rng = StdRng::seed_from_u64(17);
        for w in [
            &[2u32, 3, 5][..],
            &[2, 2, 2, 2],
            &[2, 3, 7],
            &[1, 2, 3],
            &[2, 2, 2, 3],
            &[3, 3, 3],
        ] {
            let s = spec(w);
            for _ in 0..3 {
                let sigma = random_tau(&mut rng);
                let c = Catalog::build(&s, &sigma, 2, 3).unwrap();
                let r = max_gap(&c).unwrap();
                let (value, witness) = exact_max_gap(&c);
                assert_eq!(r.value, value, "{s} at {sigma}");
                assert_eq!(r.witness, witness, "{s} at {sigma}");
            }
        }
    }

    #[test]
    fn catalog_counts() {
        let s = spec(&[2, 2, 2, 2]);
        let c = Catalog::build(&s, &StabilityParam::i(), 1, 2).unwrap();
        let lines = 3 * 16;
        let torsion = 2 + 4 * 2 * 2;
        assert_eq!(c.len(), lines + torsion);
        assert!(c.contains(&SheafObject::generic(1)));
        assert!(c.entries().iter().all(|e| e.verdict.is_semistable()));

        let s = spec(&[2, 3, 7]);
        let c = Catalog::build(&s, &StabilityParam::i(), 2, 7).unwrap();
        assert!(c.contains(&SheafObject::Line(s.omega())));
        assert!(!Catalog::build(&s, &StabilityParam::i(), 1, 7)
            .unwrap()
            .contains(&SheafObject::Line(s.omega())));
        assert!(Catalog::build(&s, &StabilityParam::i(), 0, 7).is_err());
    }

    #[test]
    fn tubular_example() {
        let s = spec(&[2, 2, 2, 2]);
        let r = max_gap(&Catalog::build(&s, &StabilityParam::i(), 2, 4).unwrap()).unwrap();
        assert_eq!(r.value.as_rational(), Some(rat(1, 1)));
        assert_eq!(r.exactness, Exactness::ExactGlobal);
        assert_eq!(
            r.witness,
            Witness {
                a: SheafObject::generic(1),
                b: SheafObject::generic(1),
                ext: true
            }
        );
    }

    #[test]
    fn wild_example() {
        let s = spec(&[2, 3, 7]);
        let r = max_gap(&Catalog::build(&s, &StabilityParam::i(), 2, 7).unwrap()).unwrap();
        assert_eq!(r.value.as_rational(), Some(rat(5, 4)));
        assert_eq!(r.exactness, Exactness::WindowLowerBound);
        assert_eq!(
            r.witness,
            Witness {
                a: SheafObject::Line(s.zero()),
                b: SheafObject::Line(s.omega()),
                ext: true
            }
        );
    }

    #[test]
    fn domestic_example() {
        let s = spec(&[2, 3, 5]);
        let c = Catalog::build(&s, &StabilityParam::i(), 3, 6).unwrap();
        let r = max_gap(&c).unwrap();
        assert_eq!(r.value, Phase::integer(1));
        assert_eq!(r.exactness, Exactness::ExactGlobal);
        assert!(r.witness.ext && r.witness.a.is_torsion() && r.witness.a == r.witness.b);
        assert!(ext_pairs_descend(&c));
    }

    #[test]
    fn gepner_examples() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..5 {
            assert!(gepner_check(&spec(&[2, 2, 2, 2]), &random_tau(&mut rng)));
        }
        assert!(!gepner_check(&spec(&[2, 3, 5]), &StabilityParam::i()));
        assert!(!gepner_check(&spec(&[2, 3, 7]), &StabilityParam::i()));
        let samples: [&[u32]; 10] = [
            &[2, 3, 5],
            &[2, 2, 2, 2],
            &[3, 3, 3],
            &[2, 4, 4],
            &[2, 3, 6],
            &[2, 3, 7],
            &[1, 2, 3],
            &[2, 2, 5],
            &[2, 2, 2, 3],
            &[1, 1, 1],
        ];
        for w in samples {
            let s = spec(w);
            assert_eq!(
                gepner_check(&s, &random_tau(&mut rng)),
                s.classify() == WeightType::Tubular,
                "{s}"
            );
        }
    }

    #[test]
    fn wild_gap_examples() {
        let s = spec(&[2, 3, 7]);
        assert_eq!(
            wild_gap(&s, &StabilityParam::i())
                .unwrap()
                .value
                .as_rational(),
            Some(rat(5, 4))
        );
        let r = wild_gap(&s, &tau(0, 10)).unwrap();
        let expected =
            1.0 + ((10f64).atan2(-1.0) - std::f64::consts::FRAC_PI_2) / std::f64::consts::PI;
        assert!((r.float_value - expected).abs() < 1e-12);
        assert!((r.float_value - 1.0317).abs() < 1e-4);
        assert_eq!(r.value.exact_string(), "1+arg(100+10i)/pi");
        assert_eq!(
            wild_gap(&spec(&[2, 2, 2, 3]), &StabilityParam::i())
                .unwrap()
                .value
                .as_rational(),
            Some(rat(5, 4))
        );
        assert!(matches!(
            wild_gap(&spec(&[2, 3, 5]), &StabilityParam::i()),
            Err(Error::NotWild(_))
        ));
    }

    #[test]
    fn wild_gap_decreases_to_one() {
        let s = spec(&[2, 3, 7]);
        let gaps: Vec<GapReport> = [1, 10, 100, 1000]
            .iter()
            .map(|&t| wild_gap(&s, &tau(0, t)).unwrap())
            .collect();
        for pair in gaps.windows(2) {
            assert_eq!(
                phase_compare(&pair[1].value, &pair[0].value),
                Ordering::Less
            );
            assert_eq!(
                phase_compare(&pair[1].value, &Phase::integer(1)),
                Ordering::Greater
            );
        }
        let diffs: Vec<f64> = gaps.iter().map(|g| g.float_value - 1.0).collect();
        assert!(diffs.windows(2).all(|d| d[1] < d[0]));
        assert!(diffs[3] < 1e-3);
    }

    #[test]
    fn max_gap_matches_float_brute_force() {
        let mut rng = StdRng::seed_from_u64(11);
        for w in [&[2u32, 3, 5][..], &[2, 2, 2, 2], &[2, 3, 7], &[1, 2, 3]] {
            let s = spec(w);
            let sigma = random_tau(&mut rng);
            let c = Catalog::build(&s, &sigma, 1, 3).unwrap();
            let r = max_gap(&c).unwrap();
            assert!(
                (r.float_value - float_max_gap(&c)).abs() < 1e-9,
                "{s} at {sigma}"
            );
        }
    }

    #[test]
    fn hom_gaps_lie_in_unit_interval() {
        let s = spec(&[2, 3, 7]);
        let c = Catalog::build(&s, &tau(1, 2), 1, 3).unwrap();
        let zero = Phase::integer(0);
        let one = Phase::integer(1);
        for a in c.entries() {
            for b in c.entries() {
                if hom_dim(&s, &a.object, &b.object).is_nonzero() {
                    let g = pair_gap(a, b, false);
                    assert!(g >= zero && g <= one, "{} -> {}", a.object, b.object);
                }
            }
        }
    }

    #[test]
    fn window_monotonicity_and_floor() {
        let mut rng = StdRng::seed_from_u64(3);
        for w in [&[2u32, 3, 7][..], &[2, 2, 3], &[3, 3, 3]] {
            let s = spec(w);
            let sigma = random_tau(&mut rng);
            let small = max_gap(&Catalog::build(&s, &sigma, 1, 2).unwrap()).unwrap();
            let large = max_gap(&Catalog::build(&s, &sigma, 2, 4).unwrap()).unwrap();
            assert!(large.value >= small.value);
            assert!(small.value >= Phase::integer(1));
        }
    }

    #[test]
    fn wild_max_gap_dominates_wild_gap() {
        let s = spec(&[2, 2, 2, 3]);
        for (re, im) in [(-2, 1), (0, 1), (3, 2), (1, 5)] {
            let sigma = tau(re, im);
            let m = max_gap(&Catalog::build(&s, &sigma, 2, 3).unwrap()).unwrap();
            let wg = wild_gap(&s, &sigma).unwrap();
            assert!(m.value >= wg.value);
            assert!(wg.value > Phase::integer(1));
        }
    }

    #[test]
    fn scan_keeps_grid_order() {
        let s = spec(&[2, 3, 7]);
        let grid: Vec<StabilityParam> = [1000, 1, 100, 10].iter().map(|&t| tau(0, t)).collect();
        let table = scan(&s, &grid, 2, 7).unwrap();
        assert_eq!(table.rows.len(), 4);
        for (row, sigma) in table.rows.iter().zip(&grid) {
            assert_eq!(&row.sigma, sigma);
        }
        assert_eq!(table.infimum, 0);
        assert!(table.infimum_row().report.float_value - 1.0 < 1e-3);
        assert!(scan(&s, &[], 1, 1).is_err());
    }

    #[test]
    fn serre_dimension_is_one() {
        assert_eq!(rat_to_f64(&serre_dimension()), 1.0);
    }
}
