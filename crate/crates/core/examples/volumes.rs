//! Chamber and perfect-entangler volumes by quadrature of the α density.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, PI};

use unistoch::channels::DampingVector;
use unistoch::canonical::eta_from_alpha;
use unistoch::ensembles::{integrate_volumes, pdf_alpha, pdf_alpha_chamber, pdf_eta};

fn main() -> unistoch::Result<()> {
    let v = integrate_volumes()?;
    println!("V_w = {:.8}, V_pe = {:.8}, ratio = {:.6} (8/(3π) = {:.6})", v.v_w, v.v_pe, v.ratio, 8.0 / (3.0 * PI));
    let b = [FRAC_PI_4, FRAC_PI_8, 0.0];
    println!("P(α) at the B-gate: cube {:.5}, chamber {:.5}", pdf_alpha(b), pdf_alpha_chamber(b));
    let a = [0.5, 0.3, 0.1];
    let eta = DampingVector::new(eta_from_alpha(a))?;
    println!("P(η) at η = {:.4?}: {:.5}", eta.eta, pdf_eta(&eta)?);
    Ok(())
}
