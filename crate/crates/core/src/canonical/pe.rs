use std::f64::consts::{FRAC_PI_4, TAU};

use serde::Serialize;

use super::{alpha_to_delta, interaction_content};
use crate::config::Tolerances;
use crate::error::Result;
use crate::linalg::ComplexMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PEKind {
    NotPE,
    BoundaryPE,
    InteriorPE,
}

impl PEKind {
    /// One-letter code: `N`, `B` or `Y`.
    pub fn code(self) -> &'static str {
        match self {
            PEKind::NotPE => "N",
            PEKind::BoundaryPE => "B",
            PEKind::InteriorPE => "Y",
        }
    }

    pub fn is_perfect_entangler(self) -> bool {
        self != PEKind::NotPE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PEClass {
    pub kind: PEKind,
    /// Signed distance of the origin from the convex hull of `e^{2iδ_k}`,
    /// negative inside.
    pub hull_distance: f64,
}

/// Signed distance of the origin from the convex hull of the unit-circle
/// points `e^{2iδ_k}`.
///
/// The nearest edge is the chord across the largest angular gap `g`, at
/// distance `|cos(g/2)|` from the origin.
pub fn hull_distance(delta: [f64; 4]) -> f64 {
    let mut angles = delta.map(|d| (2.0 * d).rem_euclid(TAU));
    angles.sort_by(f64::total_cmp);
    let mut gap = angles[0] + TAU - angles[3];
    for k in 1..4 {
        gap = gap.max(angles[k] - angles[k - 1]);
    }
    -(gap / 2.0).cos()
}

pub fn classify_pe(alpha: [f64; 3]) -> PEClass {
    let d = hull_distance(alpha_to_delta(alpha));
    let kind = if d.abs() <= Tolerances::DEFAULT.pe_boundary {
        PEKind::BoundaryPE
    } else if d < 0.0 {
        PEKind::InteriorPE
    } else {
        PEKind::NotPE
    };
    PEClass {
        kind,
        hull_distance: d,
    }
}

pub fn classify_pe_gate(u: &ComplexMatrix) -> Result<PEClass> {
    Ok(classify_pe(interaction_content(u)?.0.alpha))
}

/// Half-space description of the perfect-entangler polytope for a chamber
/// point: `α₁+α₂ ≥ π/4`, `α₁−α₂ ≤ π/4`, `α₂+α₃ ≤ π/4`.
pub fn in_pe_polytope(alpha: [f64; 3]) -> bool {
    let tol = Tolerances::DEFAULT.pe_boundary;
    let [a1, a2, a3] = alpha;
    a1 + a2 >= FRAC_PI_4 - tol && a1 - a2 <= FRAC_PI_4 + tol && a2 + a3 <= FRAC_PI_4 + tol
}

/// Segment `(π/4, s, 0)`, `0 ≤ s ≤ π/4`, between CNOT and DCNOT.
pub fn is_special_pe(alpha: [f64; 3]) -> bool {
    let tol = 1e-9;
    (alpha[0] - FRAC_PI_4).abs() <= tol
        && alpha[1] >= -tol
        && alpha[1] <= FRAC_PI_4 + tol
        && alpha[2].abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{in_chamber, weyl_canonicalize};
    use crate::gates::{build, GateId};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    const P8: f64 = PI / 8.0;

    fn kind(id: GateId) -> PEKind {
        classify_pe_gate(&build(&id).unwrap()).unwrap().kind
    }

    #[test]
    fn named_gates() {
        assert_eq!(kind(GateId::Cnot), PEKind::BoundaryPE);
        assert_eq!(kind(GateId::SqrtCnot), PEKind::NotPE);
        assert_eq!(kind(GateId::BGate), PEKind::InteriorPE);
        assert_eq!(kind(GateId::Swap(2)), PEKind::NotPE);
        assert_eq!(kind(GateId::Fourier(2)), PEKind::NotPE);
        assert_eq!(kind(GateId::Dcnot), PEKind::BoundaryPE);
        assert_eq!(kind(GateId::SqrtSwap), PEKind::BoundaryPE);
    }

    #[test]
    fn special_perfect_entanglers() {
        assert!(is_special_pe([2.0 * P8, P8, 0.0]));
        assert!(is_special_pe([2.0 * P8, 0.0, 0.0]));
        assert!(!is_special_pe([P8; 3]));
    }

    #[test]
    fn hull_distance_values() {
        // All four points coincide: the origin is a unit distance away.
        assert!((hull_distance([0.0; 4]) - 1.0).abs() < 1e-15);
        // Points at ±i: the origin lies on the chord.
        assert!(hull_distance([PI / 4.0, PI / 4.0, -PI / 4.0, -PI / 4.0]).abs() < 1e-15);
        // Four points at 90° spacing: inscribed square, inner distance 1/√2.
        let d = hull_distance([3.0 * P8, P8, -P8, -3.0 * P8]);
        assert!((d + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn polytope_agrees_with_hull(a in 0.0f64..1.6, b in 0.0f64..1.6, c in 0.0f64..1.6) {
            let alpha = weyl_canonicalize([a, b, c]).alpha;
            prop_assume!(in_chamber(alpha, 1e-9));
            let pe = classify_pe(alpha);
            prop_assume!(pe.hull_distance.abs() > 1e-6);
            prop_assert_eq!(pe.kind.is_perfect_entangler(), in_pe_polytope(alpha), "{:?} {:?}", alpha, pe);
        }
    }
}
