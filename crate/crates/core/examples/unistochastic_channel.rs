//! The channel a gate induces on one qubit, in three equivalent forms, and
//! the inverse problem of finding a gate for a given damping vector.

use num_complex::Complex64;
use unistoch::channels::{
    env_channel_apply, is_cp, is_unistochastic, kraus_from_unitary, unistochastic_channel, DampingVector,
};
use unistoch::gates::{build, GateId};
use unistoch::linalg::ComplexMatrix;

fn main() -> unistoch::Result<()> {
    let u = build(&GateId::SqrtSwap)?;
    let ch = unistochastic_channel(&u, (2, 2))?;
    let rho = ComplexMatrix::from_rows(&[
        vec![Complex64::new(0.8, 0.0), Complex64::new(0.1, 0.2)],
        vec![Complex64::new(0.1, -0.2), Complex64::new(0.2, 0.0)],
    ])?;
    let a = ch.apply(&rho)?;
    let b = ch.apply_choi(&rho)?;
    let c = env_channel_apply(&u, &rho, (2, 2))?;
    println!("Kraus vs Choi {:.1e}, Kraus vs partial trace {:.1e}", a.distance(&b), a.distance(&c));
    println!("{} Kraus operators, completeness residual {:.1e}", kraus_from_unitary(&u, (2, 2))?.len(), ch.completeness_residual());
    println!("Choi spectrum {:.4?}", ch.choi_spectrum()?);
    if let Some(bloch) = &ch.bloch {
        println!("damping vector {:.4?}", bloch.eta.eta);
    }

    for eta in [[0.0, 0.0, 0.0], [0.5, 0.4, 0.3], [-1.0 / 3.0; 3], [0.9, 0.9, 0.1], [1.0, 1.0, -1.0]] {
        let dv = DampingVector::new(eta)?;
        if !is_cp(&dv) {
            println!("{eta:?}: not completely positive");
            continue;
        }
        let v = is_unistochastic(&dv)?;
        match v.alpha {
            Some(alpha) => println!("{eta:.3?}: unistochastic, witness alpha {alpha:.4?}"),
            None => println!("{eta:.3?}: CP but not unistochastic"),
        }
    }
    Ok(())
}
