//! Interaction content, Weyl chamber and perfect-entangler class of a
//! random two-qubit gate and of its square roots.

use unistoch::canonical::{classify_pe, eta_from_alpha, interaction_content, is_special_pe, locally_equivalent};
use unistoch::ensembles::{sample_unitary, EnsembleKind, EnsembleSpec};
use unistoch::gates::kth_root;

fn main() -> unistoch::Result<()> {
    let spec = EnsembleSpec::new(EnsembleKind::Scue, 4, 1, 2024);
    let u = sample_unitary(&spec, 0);
    for k in 1..=3 {
        let v = kth_root(&u, k)?;
        let (ic, ham) = interaction_content(&v)?;
        let pe = classify_pe(ic.alpha);
        println!("root {k}: alpha {:.4?}", ic.alpha);
        println!("        delta {:.4?}", ham.delta);
        println!("        eta   {:.4?}", eta_from_alpha(ic.alpha));
        println!(
            "        class {} (hull distance {:+.4}), special PE: {}",
            pe.kind.code(),
            pe.hull_distance,
            is_special_pe(ic.alpha)
        );
    }
    // The k-th root of a canonical gate is again canonical, so it is
    // locally equivalent to itself raised back to the k-th power.
    let r = kth_root(&u, 2)?;
    println!("(√U)² ~ U: {}", locally_equivalent(&(&r * &r), &u)?);
    Ok(())
}
