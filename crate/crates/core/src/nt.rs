//! Nielsen–Thurston side: declared reduction data, the gcd `a` of a
//! component, Burau orientability, and the predicted sharp roots of unity.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::RootFraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityKind {
    Interior,
    Puncture,
    BoundaryOfDeletedDisk,
}

/// A singularity of the invariant foliation: its prong count `kappa` and,
/// on a boundary item, the number `m` of punctures it encloses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingularityDatum {
    pub kind: SingularityKind,
    pub kappa: u32,
    pub m: u32,
}

impl SingularityDatum {
    pub fn new(kind: SingularityKind, kappa: u32, m: u32) -> Result<Self> {
        if kappa == 0 || m == 0 {
            return Err(Error::Reduction(format!(
                "singularity needs kappa >= 1 and m >= 1, got kappa = {kappa}, m = {m}"
            )));
        }
        if kind == SingularityKind::Puncture && m != 1 {
            return Err(Error::Reduction(format!("a bare puncture encloses m = 1, got {m}")));
        }
        Ok(SingularityDatum { kind, kappa, m })
    }

    pub fn interior(kappa: u32) -> Result<Self> {
        Self::new(SingularityKind::Interior, kappa, 1)
    }

    /// `m = 1` gives a bare puncture, larger `m` a deleted disk.
    pub fn boundary(m: u32, kappa: u32) -> Result<Self> {
        let kind = if m == 1 {
            SingularityKind::Puncture
        } else {
            SingularityKind::BoundaryOfDeletedDisk
        };
        Self::new(kind, kappa, m)
    }
}

/// A boundary entry as it appears in reduction files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryItem {
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentData {
    pub ell: u32,
    pub genus: u32,
    #[serde(rename = "is_pA")]
    pub is_pa: bool,
    pub is_max_entropy: bool,
    pub boundary: Vec<BoundaryItem>,
    #[serde(default)]
    pub interior: Vec<u32>,
    /// Prong count on the outer boundary of the component, when that
    /// boundary is not itself one of the listed items.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_kappa: Option<u32>,
}

impl ComponentData {
    /// A pseudo-Anosov component with the given boundary `(m, kappa)` pairs.
    pub fn pseudo_anosov(genus: u32, boundary: &[(u32, u32)], interior: &[u32], outer_kappa: Option<u32>) -> Self {
        ComponentData {
            ell: 1,
            genus,
            is_pa: true,
            is_max_entropy: true,
            boundary: boundary
                .iter()
                .map(|&(m, kappa)| BoundaryItem { m, kappa: Some(kappa) })
                .collect(),
            interior: interior.to_vec(),
            outer_kappa,
        }
    }

    pub fn boundary_items(&self) -> Result<Vec<SingularityDatum>> {
        self.boundary
            .iter()
            .map(|b| match b.kappa {
                Some(kappa) => SingularityDatum::boundary(b.m, kappa),
                None => Err(Error::Reduction(format!(
                    "boundary item with m = {} has no kappa",
                    b.m
                ))),
            })
            .collect()
    }

    pub fn interior_sings(&self) -> Result<Vec<SingularityDatum>> {
        self.interior.iter().map(|&k| SingularityDatum::interior(k)).collect()
    }

    pub fn enclosed_punctures(&self) -> u64 {
        self.boundary.iter().map(|b| b.m as u64).sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell == 0 {
            return Err(Error::Reduction("ell must be positive".into()));
        }
        if self.boundary.iter().any(|b| b.m == 0) {
            return Err(Error::Reduction("boundary item with m = 0".into()));
        }
        if self.interior.iter().chain(self.outer_kappa.iter()).any(|&k| k == 0) {
            return Err(Error::Reduction("singularity of order 0".into()));
        }
        if self.is_pa {
            if self.boundary.len() < 3 {
                return Err(Error::Reduction(format!(
                    "pseudo-Anosov component needs at least 3 boundary items, got {}",
                    self.boundary.len()
                )));
            }
            self.boundary_items()?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionData {
    pub n: u32,
    pub components: Vec<ComponentData>,
}

impl ReductionData {
    pub fn from_json(text: &str) -> Result<Self> {
        let rd: ReductionData =
            serde_json::from_str(text).map_err(|e| Error::Reduction(format!("invalid reduction file: {e}")))?;
        rd.validate()?;
        Ok(rd)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reduction data serializes")
    }

    pub fn validate(&self) -> Result<()> {
        for c in &self.components {
            c.validate()?;
            let total = c.ell as u64 * c.enclosed_punctures();
            if total > self.n as u64 {
                return Err(Error::Reduction(format!(
                    "component orbit encloses {total} punctures but n = {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

pub fn compute_a(c: &ComponentData) -> Result<u32> {
    if c.boundary.is_empty() {
        return Err(Error::Reduction("compute_a needs at least one boundary item".into()));
    }
    Ok(c.boundary.iter().fold(0u32, |g, b| g.gcd(&b.m)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EphCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub pass: bool,
}

/// Euler–Poincaré–Hopf: `2 - 2g = sum (1 - kappa / 2)` over interior,
/// boundary and outer singularities. Evaluated exactly in halves.
pub fn eph_check(c: &ComponentData) -> Result<EphCheck> {
    let mut kappas: Vec<u32> = c.boundary_items()?.iter().map(|s| s.kappa).collect();
    kappas.extend(&c.interior);
    kappas.extend(c.outer_kappa);
    let lhs2 = 4 - 4 * c.genus as i64;
    let rhs2: i64 = kappas.iter().map(|&k| 2 - k as i64).sum();
    Ok(EphCheck {
        lhs: lhs2 as f64 / 2.0,
        rhs: rhs2 as f64 / 2.0,
        residual: (lhs2 - rhs2) as f64 / 2.0,
        pass: lhs2 == rhs2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "decision", rename_all = "snake_case")]
pub enum Orientability {
    OrientableWithU { u: u32 },
    NotOrientable,
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::OrientableWithU { .. })
    }

    /// The cover degrees to which the foliations lift orientably are the
    /// multiples of this number.
    pub fn lift_modulus(&self) -> Option<u64> {
        match self {
            Orientability::OrientableWithU { u } => Some(1u64 << (u + 1)),
            Orientability::NotOrientable => None,
        }
    }
}

impl fmt::Display for Orientability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientability::OrientableWithU { u } => write!(f, "orientable (u = {u})"),
            Orientability::NotOrientable => f.write_str("not orientable"),
        }
    }
}

pub fn burau_orientable(c: &ComponentData) -> Result<Orientability> {
    if !c.is_pa {
        return Err(Error::NotPseudoAnosov);
    }
    let a = compute_a(c)?;
    let items = c.boundary_items()?;
    let parity = items.iter().all(|s| (s.m / a) % 2 == s.kappa % 2);
    let even_interior = c.interior.iter().all(|k| k % 2 == 0);
    Ok(if parity && even_interior {
        Orientability::OrientableWithU { u: a.trailing_zeros() }
    } else {
        Orientability::NotOrientable
    })
}

/// The `a`-th roots of `-1`, as reduced fractions `(2j + 1) / (2a)`.
pub fn roots_of_minus_one(a: u32) -> Vec<RootFraction> {
    let mut out: Vec<RootFraction> = (0..a as i64)
        .map(|j| RootFraction::new(2 * j + 1, 2 * a as u64).expect("positive denominator"))
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpPrediction {
    pub sharp: Vec<RootFraction>,
    /// Smallest order of a predicted root.
    pub minimal_k: Option<u64>,
    /// Least common order of all predicted roots.
    pub common_k: Option<u64>,
    pub components: Vec<ComponentPrediction>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentPrediction {
    pub index: usize,
    pub a: u32,
    pub orientability: Orientability,
    pub contributes: bool,
}

pub fn predict_sharp_set(rd: &ReductionData) -> Result<SharpPrediction> {
    let mut set = BTreeSet::new();
    let mut components = Vec::new();
    for (index, c) in rd.components.iter().enumerate().filter(|(_, c)| c.is_pa) {
        let a = compute_a(c)?;
        let orientability = burau_orientable(c)?;
        let contributes = c.is_max_entropy && orientability.is_orientable();
        if contributes {
            set.extend(roots_of_minus_one(a));
        }
        components.push(ComponentPrediction {
            index,
            a,
            orientability,
            contributes,
        });
    }
    let sharp: Vec<RootFraction> = set.into_iter().collect();
    let minimal_k = sharp.iter().map(|r| r.k).min();
    let common_k = sharp.iter().map(|r| r.k).reduce(|x, y| x.lcm(&y));
    Ok(SharpPrediction {
        sharp,
        minimal_k,
        common_k,
        components,
    })
}

/// True iff every puncture order is odd and every interior order even.
pub fn pa_sharpness_classifier(punctures: &[u32], interior: &[u32]) -> bool {
    punctures.iter().all(|k| k % 2 == 1) && interior.iter().all(|k| k % 2 == 0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KBound {
    pub bound: u64,
    pub predicted_minimal_k: Option<u64>,
    pub within_bound: bool,
    pub attains: bool,
}

/// Compares the smallest predicted sharp order `min 2^{u+1}` with `2n/3`.
/// With no contributing component the check holds vacuously.
pub fn k_bound_check(rd: &ReductionData) -> Result<KBound> {
    let mut best: Option<u64> = None;
    for c in rd.components.iter().filter(|c| c.is_pa && c.is_max_entropy) {
        if let Some(k) = burau_orientable(c)?.lift_modulus() {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    let n = rd.n as u64;
    Ok(KBound {
        bound: 2 * n / 3,
        predicted_minimal_k: best,
        within_bound: best.map_or(true, |k| 3 * k <= 2 * n),
        attains: best.map_or(false, |k| 3 * k == 2 * n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(j: i64, k: u64) -> RootFraction {
        RootFraction::new(j, k).unwrap()
    }

    fn reduction(n: u32, c: ComponentData) -> ReductionData {
        ReductionData { n, components: vec![c] }
    }

    #[test]
    fn gcd_of_boundary() {
        let c = ComponentData::pseudo_anosov(0, &[(3, 1), (3, 1), (3, 1)], &[], Some(1));
        assert_eq!(compute_a(&c).unwrap(), 3);
        let c = ComponentData::pseudo_anosov(0, &[(3, 1), (3, 1), (2, 1)], &[], Some(1));
        assert_eq!(compute_a(&c).unwrap(), 1);
        let c = ComponentData::pseudo_anosov(0, &[(1, 1), (4, 1)], &[], None);
        assert_eq!(compute_a(&c).unwrap(), 1);
        let empty = ComponentData::pseudo_anosov(1, &[], &[], None);
        assert!(compute_a(&empty).is_err());
    }

    #[test]
    fn euler_poincare_hopf() {
        let four = ComponentData::pseudo_anosov(0, &[(1, 1), (1, 1), (1, 1)], &[], Some(1));
        let r = eph_check(&four).unwrap();
        assert!(r.pass && r.lhs == 2.0 && r.rhs == 2.0);
        let three = ComponentData::pseudo_anosov(0, &[(1, 1), (1, 1), (1, 1)], &[], None);
        let r = eph_check(&three).unwrap();
        assert!(!r.pass);
        assert_eq!(r.rhs, 1.5);
        assert_eq!(r.residual, 0.5);
        let torus = ComponentData::pseudo_anosov(1, &[], &[], None);
        assert!(eph_check(&torus).unwrap().pass);
    }

    #[test]
    fn orientability() {
        let b8 = ComponentData::pseudo_anosov(0, &[(8, 1), (8, 1), (8, 1)], &[], Some(1));
        let o = burau_orientable(&b8).unwrap();
        assert_eq!(o, Orientability::OrientableWithU { u: 3 });
        assert_eq!(o.lift_modulus(), Some(16));
        let b2 = ComponentData::pseudo_anosov(0, &[(3, 1), (3, 1), (2, 1)], &[], Some(1));
        assert_eq!(burau_orientable(&b2).unwrap(), Orientability::NotOrientable);
        let odd_interior = ComponentData::pseudo_anosov(0, &[(1, 1), (1, 1), (1, 1), (1, 1)], &[3], None);
        assert_eq!(burau_orientable(&odd_interior).unwrap(), Orientability::NotOrientable);
        let mut periodic = b8.clone();
        periodic.is_pa = false;
        assert!(matches!(burau_orientable(&periodic), Err(Error::NotPseudoAnosov)));
    }

    #[test]
    fn predictions() {
        let b5 = reduction(15, ComponentData::pseudo_anosov(0, &[(5, 1), (5, 1), (5, 1)], &[], Some(1)));
        let p = predict_sharp_set(&b5).unwrap();
        assert_eq!(p.sharp, vec![frac(1, 10), frac(3, 10), frac(1, 2), frac(7, 10), frac(9, 10)]);
        assert_eq!(p.minimal_k, Some(2));
        assert_eq!(p.common_k, Some(10));

        let b2 = reduction(8, ComponentData::pseudo_anosov(0, &[(3, 1), (3, 1), (2, 1)], &[], Some(1)));
        let p = predict_sharp_set(&b2).unwrap();
        assert!(p.sharp.is_empty());
        assert_eq!(p.minimal_k, None);

        let s = reduction(3, ComponentData::pseudo_anosov(0, &[(1, 1), (1, 1), (1, 1)], &[], Some(1)));
        assert_eq!(predict_sharp_set(&s).unwrap().sharp, vec![frac(1, 2)]);
    }

    #[test]
    fn not_max_entropy_is_ignored() {
        let mut c = ComponentData::pseudo_anosov(0, &[(2, 1), (2, 1), (2, 1)], &[], Some(1));
        c.is_max_entropy = false;
        let rd = reduction(6, c);
        assert!(predict_sharp_set(&rd).unwrap().sharp.is_empty());
        assert!(k_bound_check(&rd).unwrap().within_bound);
    }

    #[test]
    fn classifier() {
        assert!(pa_sharpness_classifier(&[1, 1, 1], &[]));
        assert!(!pa_sharpness_classifier(&[1, 1, 2, 1], &[]));
        assert!(!pa_sharpness_classifier(&[1, 1, 1, 1], &[3]));
    }

    #[test]
    fn bound() {
        let b4 = reduction(12, ComponentData::pseudo_anosov(0, &[(4, 1), (4, 1), (4, 1)], &[], Some(1)));
        let k = k_bound_check(&b4).unwrap();
        assert_eq!((k.bound, k.predicted_minimal_k, k.within_bound, k.attains), (8, Some(8), true, true));
        let s = reduction(3, ComponentData::pseudo_anosov(0, &[(1, 1), (1, 1), (1, 1)], &[], Some(1)));
        let k = k_bound_check(&s).unwrap();
        assert_eq!((k.predicted_minimal_k, k.attains), (Some(2), true));
        let b5 = reduction(15, ComponentData::pseudo_anosov(0, &[(5, 1), (5, 1), (5, 1)], &[], Some(1)));
        let k = k_bound_check(&b5).unwrap();
        assert_eq!((k.bound, k.predicted_minimal_k, k.within_bound, k.attains), (10, Some(2), true, false));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"n": 9, "components": [
            {"ell": 1, "genus": 0, "is_pA": true, "is_max_entropy": true,
             "boundary": [{"m": 3, "kappa": 1}, {"m": 3, "kappa": 1}, {"m": 3, "kappa": 1}],
             "interior": [], "outer_kappa": 1},
            {"ell": 3, "genus": 0, "is_pA": false, "is_max_entropy": false,
             "boundary": [{"m": 1}, {"m": 1}, {"m": 1}], "interior": []}]}"#;
        let rd = ReductionData::from_json(text).unwrap();
        assert_eq!(rd.components[0].boundary.len(), 3);
        assert_eq!(ReductionData::from_json(&rd.to_json()).unwrap(), rd);
    }

    #[test]
    fn invalid_files() {
        let too_many = r#"{"n": 8, "components": [{"ell": 1, "genus": 0, "is_pA": true, "is_max_entropy": true,
            "boundary": [{"m": 3, "kappa": 1}, {"m": 3, "kappa": 1}, {"m": 3, "kappa": 1}], "interior": []}]}"#;
        assert!(ReductionData::from_json(too_many).is_err());
        let two_items = r#"{"n": 8, "components": [{"ell": 1, "genus": 0, "is_pA": true, "is_max_entropy": true,
            "boundary": [{"m": 3, "kappa": 1}, {"m": 3, "kappa": 1}], "interior": []}]}"#;
        assert!(ReductionData::from_json(two_items).is_err());
        let no_kappa = r#"{"n": 9, "components": [{"ell": 1, "genus": 0, "is_pA": true, "is_max_entropy": true,
            "boundary": [{"m": 3}, {"m": 3, "kappa": 1}, {"m": 3, "kappa": 1}], "interior": []}]}"#;
        assert!(ReductionData::from_json(no_kappa).is_err());
        assert!(ReductionData::from_json("{").is_err());
    }
}
